#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace rslab {

/// Noncrossing perfect matching of 2n points arranged cyclically, 1-based.
///
/// The canonical basis order used throughout is lexicographic on the match
/// sequence (match[p-1] = partner of point p).
class LinkPattern {
public:
    /// The empty pattern (n = 0). There is exactly one, keeping C_0 = 1.
    LinkPattern() = default;

    /// Validates: involution, no fixed point, noncrossing.
    /// Throws std::invalid_argument on violation.
    LinkPattern(int n, std::vector<int> match);

    int n() const { return half_; }
    int points() const { return 2 * half_; }

    /// Partner of point p (both 1-based). Throws std::out_of_range.
    int partner(int p) const;
    bool joins(int p, int q) const { return partner(p) == q; }

    const std::vector<int>& match() const { return match_; }

    bool operator==(const LinkPattern& o) const { return match_ == o.match_; }
    std::strong_ordering operator<=>(const LinkPattern& o) const {
        return match_ <=> o.match_;
    }

private:
    struct Unchecked {};
    LinkPattern(Unchecked, int n, std::vector<int> match)
        : half_(n), match_(std::move(match)) {}

    int half_ = 0;
    std::vector<int> match_;

    friend std::vector<LinkPattern> enumerate_link_patterns(int n);
    friend LinkPattern apply_e(int i, const LinkPattern& pi);
    friend LinkPattern rotate_pattern(const LinkPattern& pi, int steps);
};

/// C_n = binom(2n, n) / (n + 1).
long long catalan_number(int n);

/// All noncrossing perfect matchings of 2n points, lexicographic on the match
/// sequence. This order defines the basis indexing used everywhere else.
/// n = 0 yields the single empty pattern.
std::vector<LinkPattern> enumerate_link_patterns(int n);

/// Temperley-Lieb generator: joins i to its cyclic successor and the former
/// partners of the two to each other. If i is already joined to i+1 the
/// pattern is returned unchanged (the closed loop carries weight 1).
/// i is 1-based in [1, 2n]; throws std::out_of_range otherwise.
LinkPattern apply_e(int i, const LinkPattern& pi);

/// Relabels point p as p + steps (mod 2n, into [1, 2n]).
LinkPattern rotate_pattern(const LinkPattern& pi, int steps);

/// Position of pi in the canonical (sorted) basis, or -1 if absent.
int pattern_index(const std::vector<LinkPattern>& basis, const LinkPattern& pi);

} // namespace rslab
