#pragma once

#include <utility>
#include <vector>

#include "rslab/bigint.hpp"
#include "rslab/fpl.hpp"
#include "rslab/tl_matrix.hpp"

namespace rslab {

/// Default solver dimension cap: C_8 = 1430.
inline constexpr long long kDefaultSolverDimCap = 1430;

/// H = sum of the 2n Temperley-Lieb operator matrices over the canonical
/// basis; entry[k][j] = #{ i : e_i(pi_j) = pi_k }. Every column sums to 2n.
class Hamiltonian {
public:
    int n() const { return half_; }
    int dim() const { return matrix_.rows(); }
    long long entry(int row, int col) const { return matrix_.at(row, col); }
    const IntMatrix& matrix() const { return matrix_; }
    const std::vector<LinkPattern>& basis() const { return basis_; }

private:
    Hamiltonian(int n, IntMatrix m, std::vector<LinkPattern> basis)
        : half_(n), matrix_(std::move(m)), basis_(std::move(basis)) {}

    int half_;
    IntMatrix matrix_;
    std::vector<LinkPattern> basis_;

    friend Hamiltonian build_hamiltonian(int n);
};

Hamiltonian build_hamiltonian(int n);

/// Exact Perron ground state of H at eigenvalue 2n: positive coprime integer
/// entries in canonical basis order.
struct GroundState {
    int n;
    std::vector<BigInt> values;
};

/// Exact kernel of (H - 2n I) over the rationals (Gaussian elimination,
/// first-nonzero pivots). Throws std::logic_error if the kernel dimension is
/// not 1, CapExceededError if C_n > dim_cap.
GroundState ground_state(int n, long long dim_cap = kDefaultSolverDimCap);

struct RsEntry {
    int k; // 1-based basis index
    BigInt psi;
    long long fpl_count;
    bool pass;
};

struct RsRecord {
    int n;
    std::vector<RsEntry> entries;
    bool pass;
};

/// Componentwise comparison of the exact ground state with the FPL counts
/// A(pi) in the same canonical basis.
RsRecord verify_rs(int n, int max_enum_n = kDefaultEnumCap,
                   long long dim_cap = kDefaultSolverDimCap);

struct HarmonicEntry {
    int k;
    long long lhs; // sum of A(pi_j) over (i, j) with e_i(pi_j) = pi_k
    long long rhs; // 2n A(pi_k)
    bool pass;
};

struct HarmonicReport {
    int n;
    std::vector<HarmonicEntry> entries;
    bool pass;
};

HarmonicReport verify_harmonic(int n, int max_enum_n = kDefaultEnumCap);

/// The two subsets of [1,2n] x F_n attached to basis index k:
///   A_k = { (i, f) : pi(f) = pi_k },  B_k = { (j, g) : e_j(pi(g)) = pi_k }.
/// Pairs reference FPLs by their position in enumeration order.
struct SetEquinumeracyRecord {
    int n;
    int k; // 1-based
    long long size_a;
    long long size_b;
    bool pass;
    std::vector<std::pair<int, int>> set_a; // (i, fpl index); filled on request
    std::vector<std::pair<int, int>> set_b;
};

SetEquinumeracyRecord verify_set_equinumeracy(int n, int k, bool materialize = false,
                                              int max_enum_n = kDefaultEnumCap);

std::vector<SetEquinumeracyRecord> verify_set_equinumeracy_all(int n,
                                                               int max_enum_n = kDefaultEnumCap);

} // namespace rslab
