#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "rslab/link_pattern.hpp"

using namespace rslab;

namespace {

// Independent oracle: every perfect matching of 2n points, no noncrossing
// constraint, by always pairing the smallest free point.
void all_matchings(int m, std::vector<int>& match, std::vector<std::vector<int>>& out) {
    int p = 0;
    while (p < m && match[p] != 0) ++p;
    if (p == m) {
        out.push_back(match);
        return;
    }
    for (int q = p + 1; q < m; ++q) {
        if (match[q] != 0) continue;
        match[p] = q + 1;
        match[q] = p + 1;
        all_matchings(m, match, out);
        match[p] = 0;
        match[q] = 0;
    }
}

// Literal quadruple scan from the invariant: no a < b < c < d with
// match[a] = c and match[b] = d.
bool noncrossing(const std::vector<int>& match) {
    const int m = static_cast<int>(match.size());
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int c = b + 1; c <= m; ++c)
                for (int d = c + 1; d <= m; ++d)
                    if (match[a - 1] == c && match[b - 1] == d) return false;
    return true;
}

LinkPattern lp(int n, std::vector<int> match) { return LinkPattern(n, std::move(match)); }

} // namespace

TEST_CASE("catalan numbers") {
    const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) CHECK(catalan_number(n) == expected[n]);
}

TEST_CASE("enumeration matches the brute-force oracle at n = 3") {
    std::vector<int> scratch(6, 0);
    std::vector<std::vector<int>> matchings;
    all_matchings(6, scratch, matchings);
    CHECK(matchings.size() == 15);

    std::set<std::vector<int>> expected;
    for (const auto& m : matchings)
        if (noncrossing(m)) expected.insert(m);
    CHECK(expected.size() == 5);

    std::set<std::vector<int>> got;
    for (const auto& p : enumerate_link_patterns(3)) got.insert(p.match());
    CHECK(got == expected);
}

TEST_CASE("enumeration basics") {
    CHECK(enumerate_link_patterns(0).size() == 1);
    CHECK(enumerate_link_patterns(0)[0].points() == 0);

    const auto n1 = enumerate_link_patterns(1);
    REQUIRE(n1.size() == 1);
    CHECK(n1[0] == lp(1, {2, 1}));

    const auto n2 = enumerate_link_patterns(2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0] == lp(2, {2, 1, 4, 3})); // pi_1 = (12)(34)
    CHECK(n2[1] == lp(2, {4, 3, 2, 1})); // pi_2 = (14)(23)
}

TEST_CASE("count equals the catalan number for n <= 8") {
    for (int n = 0; n <= 8; ++n)
        CHECK(static_cast<long long>(enumerate_link_patterns(n).size()) == catalan_number(n));
}

TEST_CASE("every generated pattern is valid and the order is lexicographic") {
    for (int n = 1; n <= 5; ++n) {
        const auto basis = enumerate_link_patterns(n);
        CHECK(std::is_sorted(basis.begin(), basis.end()));
        for (const auto& p : basis) {
            for (int q = 1; q <= 2 * n; ++q) {
                CHECK(p.partner(p.partner(q)) == q);
                CHECK(p.partner(q) != q);
            }
            CHECK(noncrossing(p.match()));
            CHECK_NOTHROW(LinkPattern(n, p.match())); // constructor agrees
        }
    }
}

TEST_CASE("pattern validation rejects bad input") {
    CHECK_THROWS_AS(lp(1, {1, 2}), std::invalid_argument);          // fixed points
    CHECK_THROWS_AS(lp(2, {3, 4, 1, 2}), std::invalid_argument);    // crossing
    CHECK_THROWS_AS(lp(2, {2, 1, 4, 4}), std::invalid_argument);    // not involution
    CHECK_THROWS_AS(lp(2, {2, 1, 4}), std::invalid_argument);       // wrong length
    CHECK_THROWS_AS(lp(1, {2, 5}), std::invalid_argument);          // out of range
}

TEST_CASE("apply_e on the n = 2 basis") {
    const auto basis = enumerate_link_patterns(2);
    const LinkPattern pi1 = basis[0], pi2 = basis[1];

    // e_1 and e_3 send both patterns to pi_1
    CHECK(apply_e(1, pi1) == pi1);
    CHECK(apply_e(1, pi2) == pi1);
    CHECK(apply_e(3, pi1) == pi1);
    CHECK(apply_e(3, pi2) == pi1);
    // e_2 joins 2-3 and the former partners 1-4
    CHECK(apply_e(2, pi1) == pi2);
    CHECK(apply_e(2, pi2) == pi2);
    CHECK(apply_e(4, pi1) == pi2);
    CHECK(apply_e(4, pi2) == pi2);
}

TEST_CASE("apply_e is idempotent and closed over the basis") {
    for (int n = 1; n <= 5; ++n) {
        const auto basis = enumerate_link_patterns(n);
        for (int i = 1; i <= 2 * n; ++i)
            for (const auto& p : basis) {
                const LinkPattern q = apply_e(i, p);
                CHECK(pattern_index(basis, q) >= 0);
                CHECK(apply_e(i, q) == q);
                CHECK(q.partner(i) == i % (2 * n) + 1);
            }
    }
}

TEST_CASE("apply_e rejects out-of-range indices") {
    const auto basis = enumerate_link_patterns(2);
    CHECK_THROWS_AS(apply_e(0, basis[0]), std::out_of_range);
    CHECK_THROWS_AS(apply_e(5, basis[0]), std::out_of_range);
}

TEST_CASE("rotation") {
    const auto basis = enumerate_link_patterns(2);
    CHECK(rotate_pattern(basis[0], 0) == basis[0]);
    CHECK(rotate_pattern(basis[0], 1) == basis[1]); // (12)(34) -> (23)(41)
    CHECK(rotate_pattern(basis[0], 4) == basis[0]);

    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_link_patterns(n)) {
            CHECK(rotate_pattern(rotate_pattern(p, 1), 2 * n - 1) == p);
            CHECK(rotate_pattern(rotate_pattern(p, 3), -3) == p);
            CHECK(rotate_pattern(p, 2 * n) == p);
        }
}

TEST_CASE("pattern_index finds every basis element") {
    const auto basis = enumerate_link_patterns(4);
    for (size_t k = 0; k < basis.size(); ++k)
        CHECK(pattern_index(basis, basis[k]) == static_cast<int>(k));
    CHECK(pattern_index(basis, enumerate_link_patterns(3)[0]) == -1);
}
