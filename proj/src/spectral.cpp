#include "rslab/spectral.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rslab {

Hamiltonian build_hamiltonian(int n) {
    if (n < 1) throw std::invalid_argument("build_hamiltonian: n must be positive");
    auto basis = enumerate_link_patterns(n);
    const int dim = static_cast<int>(basis.size());
    IntMatrix h(dim, dim);
    for (int i = 1; i <= 2 * n; ++i) {
        const TlOperatorMatrix op = operator_matrix(i, basis);
        for (int col = 0; col < dim; ++col) h.at(op.image(col), col) += 1;
    }
    return Hamiltonian(n, std::move(h), std::move(basis));
}

GroundState ground_state(int n, long long dim_cap) {
    if (n < 1) throw std::invalid_argument("ground_state: n must be positive");
    const long long dim_ll = catalan_number(n);
    if (dim_ll > dim_cap)
        throw CapExceededError("ground_state: C_n = " + std::to_string(dim_ll) +
                               " exceeds the solver dimension cap " + std::to_string(dim_cap));
    const Hamiltonian h = build_hamiltonian(n);
    const int dim = h.dim();

    // A = H - 2n I; one-step fraction-free (Bareiss) elimination: every
    // update divides exactly by the previous pivot, so entries stay minors
    // of the integer input. Pivot = first row with a nonzero entry in the
    // column (deterministic).
    std::vector<std::vector<BigInt>> a(dim, std::vector<BigInt>(dim));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a[r][c] = h.entry(r, c) - (r == c ? 2 * n : 0);

    const auto exact_div = [](BigInt num, const BigInt& den) {
        BigInt q, r;
        boost::multiprecision::divide_qr(num, den, q, r);
        if (r != 0) throw std::logic_error("ground_state: fraction-free division not exact");
        return q;
    };

    std::vector<int> pivot_col;
    BigInt prev_pivot = 1;
    int row = 0;
    for (int col = 0; col < dim && row < dim; ++col) {
        int pr = -1;
        for (int r = row; r < dim; ++r)
            if (a[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        const BigInt pivot = a[row][col];
        for (int r = row + 1; r < dim; ++r) {
            const BigInt factor = a[r][col];
            if (factor == 0) {
                // the Bareiss identity still rescales untouched rows
                for (int c = col + 1; c < dim; ++c)
                    if (a[r][c] != 0) a[r][c] = exact_div(a[r][c] * pivot, prev_pivot);
            } else {
                for (int c = col + 1; c < dim; ++c)
                    a[r][c] = exact_div(a[r][c] * pivot - factor * a[row][c], prev_pivot);
                a[r][col] = 0;
            }
        }
        prev_pivot = pivot;
        pivot_col.push_back(col);
        ++row;
    }

    const int kernel_dim = dim - row;
    if (kernel_dim != 1)
        throw std::logic_error("ground_state: kernel of (H - 2nI) has dimension " +
                               std::to_string(kernel_dim) + ", expected 1");

    // single free column: back-substitute with the free variable set to 1
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<BigRational> x(dim, 0);
    x[free_col] = 1;
    for (int r = row - 1; r >= 0; --r) {
        BigRational acc = 0;
        for (int c = pivot_col[r] + 1; c < dim; ++c)
            if (a[r][c] != 0) acc += BigRational(a[r][c]) * x[c];
        x[pivot_col[r]] = -acc / a[r][pivot_col[r]];
    }

    // scale to coprime positive integers
    BigInt lcm_den = 1;
    for (const auto& v : x) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
    std::vector<BigInt> ints(dim);
    for (int i = 0; i < dim; ++i)
        ints[i] = numerator(x[i]) * (lcm_den / denominator(x[i]));
    BigInt g = 0;
    for (const auto& v : ints) g = boost::multiprecision::gcd(g, v);
    if (g == 0) throw std::logic_error("ground_state: zero kernel vector");
    for (auto& v : ints) v /= g;
    int sign = 0;
    for (const auto& v : ints)
        if (v != 0) {
            sign = v > 0 ? 1 : -1;
            break;
        }
    if (sign < 0)
        for (auto& v : ints) v = -v;
    for (const auto& v : ints)
        if (v <= 0) throw std::logic_error("ground_state: kernel vector is not strictly positive");
    return GroundState{n, std::move(ints)};
}

RsRecord verify_rs(int n, int max_enum_n, long long dim_cap) {
    const GroundState psi = ground_state(n, dim_cap);
    const PatternCounts counts = count_by_pattern(n, max_enum_n);
    RsRecord rec{n, {}, true};
    for (size_t k = 0; k < psi.values.size(); ++k) {
        const bool ok = psi.values[k] == counts.counts[k];
        rec.entries.push_back({static_cast<int>(k) + 1, psi.values[k], counts.counts[k], ok});
        if (!ok) rec.pass = false;
    }
    return rec;
}

HarmonicReport verify_harmonic(int n, int max_enum_n) {
    const PatternCounts counts = count_by_pattern(n, max_enum_n);
    const auto& basis = counts.basis;
    const int dim = static_cast<int>(basis.size());

    std::vector<long long> lhs(dim, 0);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 0; j < dim; ++j) {
            const int k = pattern_index(basis, apply_e(i, basis[j]));
            lhs[k] += counts.counts[j];
        }

    HarmonicReport rep{n, {}, true};
    for (int k = 0; k < dim; ++k) {
        const long long rhs = 2LL * n * counts.counts[k];
        const bool ok = lhs[k] == rhs;
        rep.entries.push_back({k + 1, lhs[k], rhs, ok});
        if (!ok) rep.pass = false;
    }
    return rep;
}

namespace {

// Shared sweep for the set materializations: pattern index of every FPL in
// enumeration order.
std::vector<int> pattern_indices(int n, const std::vector<LinkPattern>& basis, int max_enum_n) {
    std::vector<int> out;
    for (const Fpl& f : enumerate_fpls(n, max_enum_n))
        out.push_back(pattern_index(basis, link_pattern_of(f)));
    return out;
}

} // namespace

SetEquinumeracyRecord verify_set_equinumeracy(int n, int k, bool materialize, int max_enum_n) {
    const auto basis = enumerate_link_patterns(n);
    if (k < 1 || k > static_cast<int>(basis.size()))
        throw std::out_of_range("verify_set_equinumeracy: basis index out of range");
    const auto pat = pattern_indices(n, basis, max_enum_n);

    SetEquinumeracyRecord rec{n, k, 0, 0, false, {}, {}};
    for (int fi = 0; fi < static_cast<int>(pat.size()); ++fi) {
        if (pat[fi] == k - 1) {
            rec.size_a += 2 * n;
            if (materialize)
                for (int i = 1; i <= 2 * n; ++i) rec.set_a.push_back({i, fi});
        }
        for (int j = 1; j <= 2 * n; ++j) {
            if (pattern_index(basis, apply_e(j, basis[pat[fi]])) == k - 1) {
                ++rec.size_b;
                if (materialize) rec.set_b.push_back({j, fi});
            }
        }
    }
    rec.pass = rec.size_a == rec.size_b;
    return rec;
}

std::vector<SetEquinumeracyRecord> verify_set_equinumeracy_all(int n, int max_enum_n) {
    const auto basis = enumerate_link_patterns(n);
    const auto pat = pattern_indices(n, basis, max_enum_n);
    const int dim = static_cast<int>(basis.size());

    // e_j action on basis indices, computed once
    std::vector<std::vector<int>> image(2 * n, std::vector<int>(dim));
    for (int j = 1; j <= 2 * n; ++j)
        for (int t = 0; t < dim; ++t)
            image[j - 1][t] = pattern_index(basis, apply_e(j, basis[t]));

    std::vector<SetEquinumeracyRecord> out;
    for (int k = 0; k < dim; ++k) out.push_back({n, k + 1, 0, 0, false, {}, {}});
    for (int fi = 0; fi < static_cast<int>(pat.size()); ++fi) {
        out[pat[fi]].size_a += 2 * n;
        for (int j = 1; j <= 2 * n; ++j) ++out[image[j - 1][pat[fi]]].size_b;
    }
    for (auto& rec : out) rec.pass = rec.size_a == rec.size_b;
    return out;
}

} // namespace rslab
