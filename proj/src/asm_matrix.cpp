#include "rslab/asm_matrix.hpp"

#include <algorithm>

namespace rslab {

Asm::Asm(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
    if (n < 1) throw std::invalid_argument("Asm: n must be positive");
    if (static_cast<int>(rows_.size()) != n) throw std::invalid_argument("Asm: wrong row count");
    for (const auto& row : rows_)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Asm: ragged rows");

    std::vector<int> colsum(n, 0);
    for (int r = 0; r < n; ++r) {
        int rowsum = 0;
        for (int c = 0; c < n; ++c) {
            const int v = rows_[r][c];
            if (v < -1 || v > 1) throw std::invalid_argument("Asm: entry outside {-1,0,1}");
            rowsum += v;
            colsum[c] += v;
            if (rowsum < 0 || rowsum > 1) throw std::invalid_argument("Asm: row prefix sum outside {0,1}");
            if (colsum[c] < 0 || colsum[c] > 1)
                throw std::invalid_argument("Asm: column prefix sum outside {0,1}");
        }
        if (rowsum != 1) throw std::invalid_argument("Asm: row sum != 1");
    }
    for (int c = 0; c < n; ++c)
        if (colsum[c] != 1) throw std::invalid_argument("Asm: column sum != 1");
}

std::string Asm::key() const {
    std::string s;
    s.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& row : rows_)
        for (int v : row) s.push_back(static_cast<char>('1' + v));
    return s;
}

Asm Asm::transposed() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) t[c][r] = rows_[r][c];
    return Asm(n_, std::move(t));
}

Asm Asm::columns_reversed() const {
    std::vector<std::vector<int>> t = rows_;
    for (auto& row : t) std::reverse(row.begin(), row.end());
    return Asm(n_, std::move(t));
}

BigInt asm_count_formula(int n) {
    if (n < 1) throw std::invalid_argument("asm_count_formula: n must be positive");
    const auto factorial = [](int k) {
        BigInt f = 1;
        for (int t = 2; t <= k; ++t) f *= t;
        return f;
    };
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("asm_count_formula: product not integral");
    return q;
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
    if (n < 1) throw std::invalid_argument("for_each_asm: n must be positive");
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    std::vector<int> colsum(n, 0);

    // Row-major backtracking over partial-sum-feasible prefixes.
    std::function<void(int, int, int)> rec = [&](int r, int c, int rowsum) {
        if (c == n) {
            if (rowsum != 1) return;
            if (r == n - 1) {
                for (int x : colsum)
                    if (x != 1) return;
                visit(Asm(Asm::Unchecked{}, n, a));
                return;
            }
            rec(r + 1, 0, 0);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            const int rs = rowsum + v;
            const int cs = colsum[c] + v;
            if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
            a[r][c] = v;
            colsum[c] = cs;
            rec(r, c + 1, rs);
            colsum[c] -= v;
            a[r][c] = 0;
        }
    };
    rec(0, 0, 0);
}

void for_each_asm_capped(int n, int max_n, const std::function<void(const Asm&)>& visit) {
    if (n > max_n)
        throw CapExceededError("enumeration of order " + std::to_string(n) +
                               " exceeds the cap " + std::to_string(max_n) +
                               " (raise it with --max-n)");
    for_each_asm(n, visit);
}

std::vector<Asm> enumerate_asms(int n, int max_n) {
    if (n > max_n)
        throw CapExceededError("enumerate_asms: n = " + std::to_string(n) +
                               " exceeds the enumeration cap " + std::to_string(max_n));
    std::vector<Asm> out;
    for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
    return out;
}

} // namespace rslab
