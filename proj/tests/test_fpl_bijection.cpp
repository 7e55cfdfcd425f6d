#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rslab/fpl.hpp"

using namespace rslab;

namespace {

// Independent loop-count oracle: connected components of the occupied
// interior edges in which no vertex carries an occupied stub.
int loops_by_components(const Fpl& f) {
    const GridGeometry geom(f.n());
    std::vector<int> parent(geom.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int idx = 0; idx < geom.edge_count(); ++idx) {
        if (!f.edges().test(idx)) continue;
        const auto& e = geom.endpoints(idx);
        parent[find(e[0])] = find(e[1]);
    }
    std::map<int, bool> touches_stub;
    std::map<int, bool> has_edge;
    for (int v = 0; v < geom.vertex_count(); ++v) {
        const auto [r, c] = geom.vertex_at(v);
        const int root = find(v);
        if (geom.occupied_stub_count(r, c) > 0) touches_stub[root] = true;
    }
    for (int idx = 0; idx < geom.edge_count(); ++idx)
        if (f.edges().test(idx)) has_edge[find(geom.endpoints(idx)[0])] = true;
    int loops = 0;
    for (const auto& [root, he] : has_edge)
        if (he && !touches_stub[root]) ++loops;
    return loops;
}

} // namespace

TEST_CASE("bijection round trip for every instance, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : enumerate_asms(n)) {
            const Fpl f = asm_to_fpl(a);
            CHECK(f.edges().count() == n * (n - 1));
            CHECK(fpl_to_asm(f) == a);
            CHECK_NOTHROW(Fpl(n, f.edges())); // both invariants hold
            CHECK(asm_to_fpl(fpl_to_asm(f)) == f);
        }
}

TEST_CASE("the two n = 2 configurations carry distinct patterns") {
    const auto asms = enumerate_asms(2);
    const auto basis = enumerate_link_patterns(2);
    std::set<int> seen;
    for (const auto& a : asms)
        seen.insert(pattern_index(basis, link_pattern_of(asm_to_fpl(a))));
    CHECK(seen == std::set<int>{0, 1});

    // the identity matrix produces two vertical path edges joining 1-2 and 3-4
    const Fpl ident = asm_to_fpl(Asm(2, {{1, 0}, {0, 1}}));
    CHECK(link_pattern_of(ident) == basis[0]);
    const GridGeometry geom(2);
    CHECK(ident.has(geom, Edge{1, 1, false}));
    CHECK(ident.has(geom, Edge{1, 2, false}));
}

TEST_CASE("n = 1 yields the single two-point pattern") {
    const Fpl f = asm_to_fpl(Asm(1, {{1}}));
    CHECK(f.edges().count() == 0);
    CHECK(link_pattern_of(f) == enumerate_link_patterns(1)[0]);
}

TEST_CASE("the unique n = 3 matrix with a -1 maps to a six-edge configuration") {
    const Fpl f = asm_to_fpl(Asm(3, {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}));
    CHECK(f.edges().count() == 6);
    CHECK(fpl_to_asm(f).key() == "121202121");
}

TEST_CASE("pattern counts") {
    SUBCASE("n = 2: one configuration per pattern") {
        const auto pc = count_by_pattern(2);
        CHECK(pc.counts == std::vector<long long>{1, 1});
    }
    SUBCASE("n = 3: multiset {1,1,1,2,2}") {
        const auto pc = count_by_pattern(3);
        CHECK(pc.counts == std::vector<long long>{2, 1, 1, 2, 1});
        auto sorted = pc.counts;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<long long>{1, 1, 1, 2, 2});
    }
    SUBCASE("totals equal the product formula for n <= 5") {
        for (int n = 1; n <= 5; ++n)
            CHECK(asm_count_formula(n) == count_by_pattern(n).total());
    }
}

TEST_CASE("interior loops") {
    for (const auto& a : enumerate_asms(2)) CHECK(count_interior_loops(asm_to_fpl(a)) == 0);
    CHECK(count_interior_loops(asm_to_fpl(Asm(1, {{1}}))) == 0);

    int with_loop = 0;
    for (const auto& a : enumerate_asms(4)) {
        const Fpl f = asm_to_fpl(a);
        const int direct = count_interior_loops(f);
        CHECK(direct == loops_by_components(f));
        with_loop += direct > 0;
    }
    CHECK(with_loop > 0);
}

TEST_CASE("fpl validation rejects bad edge sets") {
    const GridGeometry geom(2);
    EdgeSet empty;
    CHECK_THROWS_AS(Fpl(2, empty), std::invalid_argument); // wrong cardinality
    EdgeSet bad;
    bad.set(geom.index_of(Edge{1, 1, true}));
    bad.set(geom.index_of(Edge{1, 1, false}));
    CHECK_THROWS_AS(Fpl(2, bad), std::invalid_argument); // degree violation
}

TEST_CASE("tracing a corrupted edge set signals instead of looping") {
    // bypass validation: an edge set whose stub vertex has no continuation
    const GridGeometry geom(3);
    EdgeSet broken;
    broken.set(geom.index_of(Edge{2, 2, true})); // isolated central edge
    const Fpl f = fpl_unchecked(3, broken);
    CHECK_THROWS_AS(link_pattern_of(f), std::logic_error);
}

TEST_CASE("grid geometry") {
    const GridGeometry geom(3);
    CHECK(geom.edge_count() == 12);
    CHECK(static_cast<int>(geom.labels().size()) == 6);
    // labels counterclockwise from the top-left up-stub
    CHECK(geom.labels()[0] == Stub{1, 1, Side::Up});
    CHECK(geom.labels()[1] == Stub{2, 1, Side::Left});
    CHECK(geom.labels()[2] == Stub{3, 1, Side::Down});
    CHECK(geom.labels()[3] == Stub{3, 3, Side::Down});
    CHECK(geom.labels()[4] == Stub{2, 3, Side::Right});
    CHECK(geom.labels()[5] == Stub{1, 3, Side::Up});
    for (int idx = 0; idx < geom.edge_count(); ++idx)
        CHECK(geom.index_of(geom.edge_at(idx)) == idx);
    CHECK_THROWS_AS(geom.index_of(Edge{3, 3, false}), std::out_of_range);
    CHECK_THROWS_AS(GridGeometry(kMaxGridN + 1), std::invalid_argument);

    // every boundary vertex of every size carries alternating stubs: the
    // total is 2n and corners carry exactly one
    for (int n = 1; n <= 6; ++n) {
        const GridGeometry g(n);
        CHECK(static_cast<int>(g.labels().size()) == 2 * n);
        if (n >= 2)
            for (int corner_r : {1, n})
                for (int corner_c : {1, n}) CHECK(g.occupied_stub_count(corner_r, corner_c) == 1);
    }
}
