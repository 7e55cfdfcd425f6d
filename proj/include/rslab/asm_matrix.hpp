#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rslab/bigint.hpp"

namespace rslab {

/// Default cap for full enumeration (n = 7 takes a while and is opt-in).
inline constexpr int kDefaultEnumCap = 6;

/// Raised when a requested computation exceeds a configured resource cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Alternating sign matrix: entries in {-1, 0, 1}, every row and column sums
/// to 1, and all row/column prefix sums lie in {0, 1}.
class Asm {
public:
    /// Validates all invariants; throws std::invalid_argument on violation.
    Asm(int n, std::vector<std::vector<int>> rows);

    int n() const { return n_; }
    /// 1-based access.
    int at(int r, int c) const { return rows_[r - 1][c - 1]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Row-major digit string with entries shifted by one (-1,0,1 -> '0','1','2').
    /// Used as the canonical map/report key.
    std::string key() const;

    Asm transposed() const;
    Asm columns_reversed() const;

    bool operator==(const Asm& o) const { return rows_ == o.rows_; }

private:
    struct Unchecked {};
    Asm(Unchecked, int n, std::vector<std::vector<int>> rows)
        : n_(n), rows_(std::move(rows)) {}

    int n_;
    std::vector<std::vector<int>> rows_;

    friend void for_each_asm(int n, const std::function<void(const Asm&)>& visit);
};

/// Exact ASM count A_n = prod_{i=0}^{n-1} (3i+1)! / (n+i)!.
BigInt asm_count_formula(int n);

/// Visits every ASM of order n exactly once, in the deterministic row-major
/// backtracking order (rows top to bottom, columns left to right, candidate
/// entries in ascending order -1 < 0 < 1).
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);

/// As for_each_asm, but refuses n > max_n with CapExceededError up front.
void for_each_asm_capped(int n, int max_n, const std::function<void(const Asm&)>& visit);

/// Materialized enumeration; throws CapExceededError when n > max_n.
std::vector<Asm> enumerate_asms(int n, int max_n = kDefaultEnumCap);

} // namespace rslab
