#include "rslab/fpl.hpp"

#include <bit>
#include <stdexcept>

namespace rslab {

int EdgeSet::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

EdgeSet EdgeSet::operator^(const EdgeSet& o) const {
    EdgeSet r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] ^ o.w[i];
    return r;
}

EdgeSet EdgeSet::operator&(const EdgeSet& o) const {
    EdgeSet r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
}

bool EdgeSet::set_less(const EdgeSet& o) const {
    for (int i = 0; i < 4; ++i) {
        const std::uint64_t diff = w[i] ^ o.w[i];
        if (diff) {
            const std::uint64_t lowest = diff & (~diff + 1);
            return w[i] & lowest; // we contain the smallest differing index
        }
    }
    return false;
}

std::size_t EdgeSet::hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : w) {
        h ^= x;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    return h;
}

// ---------------------------------------------------------------------------
// GridGeometry

GridGeometry::GridGeometry(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("GridGeometry: n must be positive");
    if (n > kMaxGridN)
        throw std::invalid_argument("GridGeometry: n exceeds the supported maximum " +
                                    std::to_string(kMaxGridN));
    ends_.resize(edge_count());
    incident_.resize(vertex_count());
    for (int idx = 0; idx < edge_count(); ++idx) {
        const Edge e = edge_at(idx);
        const int v1 = vertex_id(e.r, e.c);
        const int v2 = e.horizontal ? vertex_id(e.r, e.c + 1) : vertex_id(e.r + 1, e.c);
        ends_[idx] = {std::min(v1, v2), std::max(v1, v2)};
        incident_[v1].push_back(idx);
        incident_[v2].push_back(idx);
    }
    // label 1 at the (1,1) up-stub, then counterclockwise
    if (stub_occupied(1, 1, Side::Up)) labels_.push_back({1, 1, Side::Up});
    for (int r = 1; r <= n_; ++r)
        if (stub_occupied(r, 1, Side::Left)) labels_.push_back({r, 1, Side::Left});
    for (int c = 1; c <= n_; ++c)
        if (stub_occupied(n_, c, Side::Down)) labels_.push_back({n_, c, Side::Down});
    for (int r = n_; r >= 1; --r)
        if (stub_occupied(r, n_, Side::Right)) labels_.push_back({r, n_, Side::Right});
    for (int c = n_; c >= 2; --c)
        if (stub_occupied(1, c, Side::Up)) labels_.push_back({1, c, Side::Up});
}

int GridGeometry::index_of(const Edge& e) const {
    if (e.horizontal) {
        if (e.r < 1 || e.r > n_ || e.c < 1 || e.c > n_ - 1)
            throw std::out_of_range("GridGeometry: horizontal edge outside the grid");
        return (e.r - 1) * (n_ - 1) + (e.c - 1);
    }
    if (e.r < 1 || e.r > n_ - 1 || e.c < 1 || e.c > n_)
        throw std::out_of_range("GridGeometry: vertical edge outside the grid");
    return n_ * (n_ - 1) + (e.r - 1) * n_ + (e.c - 1);
}

Edge GridGeometry::edge_at(int idx) const {
    const int h = n_ * (n_ - 1);
    if (idx < 0 || idx >= edge_count()) throw std::out_of_range("GridGeometry: bad edge index");
    if (idx < h) return Edge{idx / (n_ - 1) + 1, idx % (n_ - 1) + 1, true};
    idx -= h;
    return Edge{idx / n_ + 1, idx % n_ + 1, false};
}

bool GridGeometry::stub_occupied(int r, int c, Side side) const {
    switch (side) {
        case Side::Up: return r == 1 && (1 + c) % 2 == 0;
        case Side::Down: return r == n_ && (n_ + c) % 2 == 0;
        case Side::Left: return c == 1 && (r + 1) % 2 == 1;
        case Side::Right: return c == n_ && (r + n_) % 2 == 1;
    }
    return false;
}

int GridGeometry::occupied_stub_count(int r, int c) const {
    int k = 0;
    for (Side s : {Side::Up, Side::Left, Side::Down, Side::Right})
        if (stub_occupied(r, c, s)) ++k;
    return k;
}

int GridGeometry::label_of(int r, int c, Side side) const {
    for (size_t l = 0; l < labels_.size(); ++l)
        if (labels_[l] == Stub{r, c, side}) return static_cast<int>(l) + 1;
    return 0;
}

// ---------------------------------------------------------------------------
// Fpl

Fpl::Fpl(int n, const EdgeSet& interior_edges) : n_(n), edges_(interior_edges) {
    const GridGeometry geom(n);
    for (int i = geom.edge_count(); i < 4 * 64; ++i)
        if (edges_.test(i)) throw std::invalid_argument("Fpl: edge index outside the grid");
    if (edges_.count() != n * (n - 1))
        throw std::invalid_argument("Fpl: interior edge count must be n(n-1)");
    for (int v = 0; v < geom.vertex_count(); ++v) {
        int deg = 0;
        for (int idx : geom.edges_at_vertex(v)) deg += edges_.test(idx);
        const auto [r, c] = geom.vertex_at(v);
        deg += geom.occupied_stub_count(r, c);
        if (deg != 2) throw std::invalid_argument("Fpl: vertex degree != 2 at (" +
                                                  std::to_string(r) + "," + std::to_string(c) + ")");
    }
}

std::vector<Edge> Fpl::edge_list() const {
    const GridGeometry geom(n_);
    std::vector<Edge> out;
    out.reserve(edges_.count());
    for (int idx = 0; idx < geom.edge_count(); ++idx)
        if (edges_.test(idx)) out.push_back(geom.edge_at(idx));
    return out;
}

std::string Fpl::key() const { return fpl_to_asm(*this).key(); }

Fpl fpl_unchecked(int n, const EdgeSet& edges) { return Fpl(Fpl::Unchecked{}, n, edges); }

// ---------------------------------------------------------------------------
// Six-vertex bijection
//
// With column prefix sums C(r,c) and row prefix sums R(r,c) of the ASM, the
// orientation convention fixes: the vertical edge (r,c)-(r+1,c) is a path
// edge iff C(r,c) != (r+c) mod 2, the horizontal edge (r,c)-(r,c+1) iff
// R(r,c) == (r+c) mod 2. Boundary stubs then come out occupied exactly as
// GridGeometry::stub_occupied prescribes.

Fpl asm_to_fpl(const Asm& a) {
    const int n = a.n();
    const GridGeometry geom(n);
    EdgeSet edges;
    for (int c = 1; c <= n; ++c) {
        int colsum = 0;
        for (int r = 1; r <= n - 1; ++r) {
            colsum += a.at(r, c);
            if (colsum != (r + c) % 2) edges.set(geom.index_of(Edge{r, c, false}));
        }
    }
    for (int r = 1; r <= n; ++r) {
        int rowsum = 0;
        for (int c = 1; c <= n - 1; ++c) {
            rowsum += a.at(r, c);
            if (rowsum == (r + c) % 2) edges.set(geom.index_of(Edge{r, c, true}));
        }
    }
    return Fpl(Fpl::Unchecked{}, n, edges);
}

Asm fpl_to_asm(const Fpl& f) {
    const int n = f.n();
    const GridGeometry geom(n);
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int c = 1; c <= n; ++c) {
        int prev = 0;
        for (int r = 1; r <= n; ++r) {
            int colsum;
            if (r < n) {
                const bool occ = f.edges().test(geom.index_of(Edge{r, c, false}));
                const int parity = (r + c) % 2;
                colsum = occ ? 1 - parity : parity;
            } else {
                colsum = 1;
            }
            rows[r - 1][c - 1] = colsum - prev;
            prev = colsum;
        }
    }
    Asm a(n, std::move(rows)); // validates; also cross-check the row route
    for (int r = 1; r <= n; ++r) {
        int rowsum = 0;
        for (int c = 1; c <= n - 1; ++c) {
            rowsum += a.at(r, c);
            const bool occ = f.edges().test(geom.index_of(Edge{r, c, true}));
            if (occ != (rowsum == (r + c) % 2))
                throw std::invalid_argument("fpl_to_asm: inconsistent edge set");
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Path tracing

int trace_open_path(const GridGeometry& geom, const EdgeSet& edges, int label,
                    int* first_interior_edge, EdgeSet* visited) {
    if (label < 1 || label > static_cast<int>(geom.labels().size()))
        throw std::out_of_range("trace_open_path: label out of range");
    if (first_interior_edge) *first_interior_edge = -1;
    const Stub start = geom.labels()[label - 1];
    int v = geom.vertex_id(start.r, start.c);
    int via = -1; // edge we arrived on; -1 means "arrived via the stub"
    const int max_steps = geom.edge_count() + 2;
    for (int steps = 0; steps <= max_steps; ++steps) {
        const auto [r, c] = geom.vertex_at(v);
        if (via >= 0) {
            // a vertex with an occupied stub terminates the path (its degree
            // budget is stub + one interior edge)
            for (Side s : {Side::Up, Side::Left, Side::Down, Side::Right}) {
                if (!geom.stub_occupied(r, c, s)) continue;
                return geom.label_of(r, c, s);
            }
        } else if (geom.occupied_stub_count(r, c) == 2) {
            // stub-vertex-stub path (n = 1)
            for (Side s : {Side::Up, Side::Left, Side::Down, Side::Right})
                if (geom.stub_occupied(r, c, s) && !(Stub{r, c, s} == start))
                    return geom.label_of(r, c, s);
        }
        int next = -1;
        for (int idx : geom.edges_at_vertex(v))
            if (edges.test(idx) && idx != via) {
                next = idx;
                break;
            }
        if (next < 0) throw std::logic_error("trace_open_path: hit a dead end");
        if (via < 0 && first_interior_edge) *first_interior_edge = next;
        if (visited) visited->set(next);
        v = geom.other_endpoint(next, v);
        via = next;
    }
    throw std::logic_error("trace_open_path: failed to terminate at a stub");
}

LinkPattern link_pattern_of(const Fpl& f) {
    const GridGeometry geom(f.n());
    const int m = 2 * f.n();
    std::vector<int> match(m, 0);
    for (int l = 1; l <= m; ++l) {
        if (match[l - 1] != 0) continue;
        const int other = trace_open_path(geom, f.edges(), l);
        if (other == l || other < 1 || other > m || match[other - 1] != 0)
            throw std::logic_error("link_pattern_of: inconsistent path endpoints");
        match[l - 1] = other;
        match[other - 1] = l;
    }
    return LinkPattern(f.n(), std::move(match));
}

int count_interior_loops(const Fpl& f) {
    const GridGeometry geom(f.n());
    EdgeSet on_path;
    for (int l = 1; l <= 2 * f.n(); ++l) trace_open_path(geom, f.edges(), l, nullptr, &on_path);

    EdgeSet remaining;
    for (int idx = 0; idx < geom.edge_count(); ++idx)
        if (f.edges().test(idx) && !on_path.test(idx)) remaining.set(idx);

    int loops = 0;
    for (int idx = 0; idx < geom.edge_count(); ++idx) {
        if (!remaining.test(idx)) continue;
        ++loops;
        // walk the closed loop, clearing it
        int v = geom.endpoints(idx)[0];
        int via = idx;
        remaining.reset(idx);
        while (true) {
            int next = -1;
            for (int e : geom.edges_at_vertex(v))
                if (remaining.test(e) && e != via) {
                    next = e;
                    break;
                }
            if (next < 0) break;
            remaining.reset(next);
            v = geom.other_endpoint(next, v);
            via = next;
        }
    }
    return loops;
}

// ---------------------------------------------------------------------------
// Gyration and reflection

namespace {

// One plaquette sweep: swap the edge pair of every cell of the given parity
// whose path edges form exactly one pair of opposite sides. Cells of equal
// parity share no edge, so the per-cell moves commute.
EdgeSet sweep_plaquettes(const GridGeometry& geom, const EdgeSet& edges, int parity) {
    EdgeSet out = edges;
    const int n = geom.n();
    for (int r = 1; r <= n - 1; ++r)
        for (int c = 1; c <= n - 1; ++c) {
            if ((r + c) % 2 != parity) continue;
            const int top = geom.index_of(Edge{r, c, true});
            const int bottom = geom.index_of(Edge{r + 1, c, true});
            const int left = geom.index_of(Edge{r, c, false});
            const int right = geom.index_of(Edge{r, c + 1, false});
            const bool t = edges.test(top), b = edges.test(bottom);
            const bool l = edges.test(left), rt = edges.test(right);
            if (t && b && !l && !rt) {
                out.reset(top);
                out.reset(bottom);
                out.set(left);
                out.set(right);
            } else if (!t && !b && l && rt) {
                out.set(top);
                out.set(bottom);
                out.reset(left);
                out.reset(right);
            }
        }
    return out;
}

} // namespace

Fpl gyrate(const Fpl& f) {
    const GridGeometry geom(f.n());
    EdgeSet e = sweep_plaquettes(geom, f.edges(), 0);
    e = sweep_plaquettes(geom, e, 1);
    return fpl_unchecked(f.n(), e);
}

Fpl gyrate_inverse(const Fpl& f) {
    const GridGeometry geom(f.n());
    EdgeSet e = sweep_plaquettes(geom, f.edges(), 1);
    e = sweep_plaquettes(geom, e, 0);
    return fpl_unchecked(f.n(), e);
}

bool reflection_available(int n) { return n % 2 == 1; }

Fpl reflect_fpl(const Fpl& f) {
    const int n = f.n();
    if (!reflection_available(n))
        throw std::invalid_argument(
            "reflect_fpl: no boundary-preserving reflection exists for even n");
    const GridGeometry geom(n);
    EdgeSet out;
    for (int idx = 0; idx < geom.edge_count(); ++idx) {
        if (!f.edges().test(idx)) continue;
        const Edge e = geom.edge_at(idx);
        const Edge mirrored = e.horizontal ? Edge{e.r, n - e.c, true} : Edge{e.r, n + 1 - e.c, false};
        out.set(geom.index_of(mirrored));
    }
    return fpl_unchecked(n, out);
}

int reflect_label(int n, int p) {
    if (!reflection_available(n)) throw std::invalid_argument("reflect_label: even n");
    const int m = 2 * n;
    const int s = (3 * n + 1) / 2;
    return ((s - (p - 1)) % m + m) % m + 1;
}

// ---------------------------------------------------------------------------

std::vector<Fpl> enumerate_fpls(int n, int max_n) {
    std::vector<Fpl> out;
    if (n > max_n)
        throw CapExceededError("enumerate_fpls: n = " + std::to_string(n) +
                               " exceeds the enumeration cap " + std::to_string(max_n));
    for_each_asm(n, [&](const Asm& a) { out.push_back(asm_to_fpl(a)); });
    return out;
}

long long PatternCounts::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

PatternCounts count_by_pattern(int n, int max_n) {
    if (n > max_n)
        throw CapExceededError("count_by_pattern: n = " + std::to_string(n) +
                               " exceeds the enumeration cap " + std::to_string(max_n));
    PatternCounts pc{n, enumerate_link_patterns(n), {}};
    pc.counts.assign(pc.basis.size(), 0);
    for_each_asm(n, [&](const Asm& a) {
        const int k = pattern_index(pc.basis, link_pattern_of(asm_to_fpl(a)));
        if (k < 0) throw std::logic_error("count_by_pattern: pattern escaped the basis");
        ++pc.counts[k];
    });
    return pc;
}

GyrationRecord verify_gyration(int n, int max_n) {
    if (n > max_n)
        throw CapExceededError("verify_gyration: n = " + std::to_string(n) +
                               " exceeds the enumeration cap " + std::to_string(max_n));
    GyrationRecord rec{n, kGyrationRotation, 0, {}, true};
    for_each_asm(n, [&](const Asm& a) {
        const Fpl f = asm_to_fpl(a);
        ++rec.checked;
        const LinkPattern expect = rotate_pattern(link_pattern_of(f), kGyrationRotation);
        if (!(link_pattern_of(gyrate(f)) == expect)) {
            rec.failures.push_back(a.key());
            rec.pass = false;
        }
    });
    return rec;
}

} // namespace rslab
