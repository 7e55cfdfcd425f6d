#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "rslab/asm_matrix.hpp"

using namespace rslab;

namespace {

// Independent oracle: every n x n matrix over {-1,0,1} satisfying the ASM
// constraints, by raw base-3 counting (n <= 3).
std::set<std::vector<std::vector<int>>> brute_force_asms(int n) {
    std::set<std::vector<std::vector<int>>> out;
    const int cells = n * n;
    long long total = 1;
    for (int t = 0; t < cells; ++t) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        std::vector<std::vector<int>> m(n, std::vector<int>(n));
        for (int t = 0; t < cells; ++t) {
            m[t / n][t % n] = static_cast<int>(rest % 3) - 1;
            rest /= 3;
        }
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) {
            int s = 0;
            for (int c = 0; c < n; ++c) {
                s += m[r][c];
                if (s < 0 || s > 1) ok = false;
            }
            if (s != 1) ok = false;
        }
        for (int c = 0; c < n && ok; ++c) {
            int s = 0;
            for (int r = 0; r < n; ++r) {
                s += m[r][c];
                if (s < 0 || s > 1) ok = false;
            }
            if (s != 1) ok = false;
        }
        if (ok) out.insert(m);
    }
    return out;
}

} // namespace

TEST_CASE("product formula values") {
    const long long expected[] = {0, 1, 2, 7, 42, 429, 7436, 218348, 10850216};
    for (int n = 1; n <= 8; ++n) CHECK(asm_count_formula(n) == expected[n]);
}

TEST_CASE("enumeration matches the brute-force oracle at n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const auto expected = brute_force_asms(n);
        std::set<std::vector<std::vector<int>>> got;
        for (const auto& a : enumerate_asms(n)) got.insert(a.rows());
        CHECK(got.size() == enumerate_asms(n).size()); // no duplicates
        CHECK(got == expected);
    }
}

TEST_CASE("small enumerations") {
    const auto n1 = enumerate_asms(1);
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].rows() == std::vector<std::vector<int>>{{1}});

    const auto n2 = enumerate_asms(2);
    REQUIRE(n2.size() == 2);
    // the two permutation matrices, in backtracking order
    CHECK(n2[0].rows() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(n2[1].rows() == std::vector<std::vector<int>>{{1, 0}, {0, 1}});

    const auto n3 = enumerate_asms(3);
    CHECK(n3.size() == 7);
    int with_minus = 0;
    for (const auto& a : n3) {
        bool has = false;
        for (const auto& row : a.rows())
            for (int v : row) has = has || v == -1;
        with_minus += has;
    }
    CHECK(with_minus == 1);
}

TEST_CASE("counts match the formula") {
    for (int n = 1; n <= 5; ++n) {
        long long count = 0;
        for_each_asm(n, [&](const Asm&) { ++count; });
        CHECK(asm_count_formula(n) == count);
    }
}

TEST_CASE("n = 7 count" * doctest::skip(std::getenv("RSLAB_LONG_TESTS") == nullptr)) {
    long long count = 0;
    for_each_asm(7, [&](const Asm&) { ++count; });
    CHECK(count == 218348);
}

TEST_CASE("golden count file agrees with the formula") {
    std::ifstream in(std::string(RSLAB_TEST_DATA_DIR) + "/asm_counts.txt");
    REQUIRE(in.good());
    int n;
    long long value;
    int lines = 0;
    while (in >> n >> value) {
        CHECK(asm_count_formula(n) == value);
        ++lines;
    }
    CHECK(lines == 8);
}

TEST_CASE("enumeration order is deterministic") {
    const auto a = enumerate_asms(4);
    const auto b = enumerate_asms(4);
    REQUIRE(a.size() == b.size());
    for (size_t t = 0; t < a.size(); ++t) CHECK(a[t] == b[t]);
}

TEST_CASE("the cap is an explicit error") {
    CHECK_THROWS_AS(enumerate_asms(7), CapExceededError);
    CHECK_THROWS_AS(enumerate_asms(8, 7), CapExceededError);
    CHECK_NOTHROW(enumerate_asms(4, 4));
}

TEST_CASE("asm validation rejects bad matrices") {
    CHECK_THROWS_AS(Asm(2, {{1, 1}, {0, 0}}), std::invalid_argument);    // row sums
    CHECK_THROWS_AS(Asm(2, {{1, 0}, {1, 0}}), std::invalid_argument);    // column sums
    CHECK_THROWS_AS(Asm(2, {{-1, 1}, {1, 0}}), std::invalid_argument);   // prefix sums
    CHECK_THROWS_AS(Asm(2, {{2, -1}, {-1, 2}}), std::invalid_argument);  // entries
    CHECK_THROWS_AS(Asm(2, {{1, 0}}), std::invalid_argument);            // shape
    CHECK_NOTHROW(Asm(3, {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}));
}

TEST_CASE("keys are distinct and stable") {
    CHECK(Asm(3, {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}).key() == "121202121");
    std::set<std::string> keys;
    for (const auto& a : enumerate_asms(4)) keys.insert(a.key());
    CHECK(keys.size() == 42);
}
