#include "rslab/altpath.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rslab {

namespace {

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

struct CachedCycle {
    EdgeSet mask;
    std::vector<std::uint16_t> trail; // edge indices in cyclic order
};

/// Level-by-level enumeration of alternating closed trails. A trail of
/// length m is found as a walk that leaves one endpoint of its first edge
/// and returns to the other; identity is the edge set (re-splices and the
/// two walk directions collapse). Within a level, cycles are sorted by the
/// sorted-edge-list order; levels are generated on demand and cached.
class CycleEnumerator {
public:
    /// anchor < 0 enumerates all cycles (each one found at its minimal edge);
    /// otherwise only cycles through `anchor`.
    CycleEnumerator(const GridGeometry& geom, const EdgeSet& edges, int anchor, long long limit)
        : geom_(geom), edges_(edges), anchor_(anchor), limit_(limit),
          step_budget_(limit > (1LL << 40) ? (1LL << 62) : 200 * limit) {
        vr_.resize(geom.vertex_count());
        vc_.resize(geom.vertex_count());
        for (int v = 0; v < geom.vertex_count(); ++v) {
            const auto [r, c] = geom.vertex_at(v);
            vr_[v] = r;
            vc_[v] = c;
        }
    }

    /// Cycles of length m, or nullptr when m exceeds the grid capacity.
    const std::vector<CachedCycle>* level(int m) {
        if (m > geom_.edge_count()) return nullptr;
        const int idx = m / 2 - 2; // m = 4, 6, ...
        while (static_cast<int>(levels_.size()) <= idx) {
            if (exhausted()) {
                levels_.emplace_back();
                continue;
            }
            generate(4 + 2 * static_cast<int>(levels_.size()));
        }
        return &levels_[idx];
    }

    bool limit_hit() const { return limit_hit_; }
    long long generated() const { return generated_; }

private:
    bool exhausted() const { return limit_hit_; }

    void generate(int m) {
        std::vector<CachedCycle> out;
        std::unordered_set<EdgeSet, EdgeSetHash> seen;
        if (anchor_ >= 0) {
            if (edge_ok_unrestricted(anchor_)) search(anchor_, -1, m, out, seen);
        } else {
            for (int a = 0; a < geom_.edge_count() && !limit_hit_; ++a)
                search(a, a, m, out, seen);
        }
        std::sort(out.begin(), out.end(),
                  [](const CachedCycle& x, const CachedCycle& y) { return x.mask.set_less(y.mask); });
        levels_.push_back(std::move(out));
    }

    bool edge_ok_unrestricted(int e) const { return e >= 0 && e < geom_.edge_count(); }

    // Exact-length walk: first edge = a, remaining edges restricted to
    // indices > min_edge when min_edge >= 0.
    void search(int a, int min_edge, int m, std::vector<CachedCycle>& out,
                std::unordered_set<EdgeSet, EdgeSetHash>& seen) {
        start_ = geom_.endpoints(a)[0];
        used_ = EdgeSet{};
        used_.set(a);
        trail_.clear();
        trail_.push_back(static_cast<std::uint16_t>(a));
        min_edge_ = min_edge;
        target_len_ = m;
        out_ = &out;
        seen_ = &seen;
        extend(geom_.endpoints(a)[1], 1, edges_.test(a));
    }

    void extend(int cur, int depth, bool last_class) {
        if (limit_hit_) return;
        if (depth == target_len_) return; // closure is checked one step early
        const int rem = target_len_ - depth;
        const int dist = std::abs(vr_[cur] - vr_[start_]) + std::abs(vc_[cur] - vc_[start_]);
        if (dist > rem || ((rem - dist) & 1)) return;
        for (int e : geom_.edges_at_vertex(cur)) {
            if (e <= min_edge_ || used_.test(e)) continue;
            if (edges_.test(e) == last_class) continue;
            if (++steps_ > step_budget_) {
                limit_hit_ = true;
                return;
            }
            const int nxt = geom_.other_endpoint(e, cur);
            if (depth + 1 == target_len_) {
                if (nxt != start_) continue;
                used_.set(e);
                trail_.push_back(static_cast<std::uint16_t>(e));
                if (seen_->insert(used_).second) {
                    out_->push_back({used_, trail_});
                    if (++generated_ >= limit_) limit_hit_ = true;
                }
                trail_.pop_back();
                used_.reset(e);
                if (limit_hit_) return;
                continue;
            }
            used_.set(e);
            trail_.push_back(static_cast<std::uint16_t>(e));
            extend(nxt, depth + 1, !last_class);
            trail_.pop_back();
            used_.reset(e);
            if (limit_hit_) return;
        }
    }

    const GridGeometry& geom_;
    EdgeSet edges_;
    int anchor_;
    long long limit_;
    long long step_budget_;
    std::vector<int> vr_, vc_;
    std::vector<std::vector<CachedCycle>> levels_;
    bool limit_hit_ = false;
    long long generated_ = 0;
    long long steps_ = 0;

    // per-search scratch
    int start_ = 0, min_edge_ = -1, target_len_ = 0;
    EdgeSet used_;
    std::vector<std::uint16_t> trail_;
    std::vector<CachedCycle>* out_ = nullptr;
    std::unordered_set<EdgeSet, EdgeSetHash>* seen_ = nullptr;
};

AlternatingCycle make_cycle(const GridGeometry& geom, const Fpl& host, const CachedCycle& c) {
    AlternatingCycle out{host, {}, c.mask};
    out.edges.reserve(c.trail.size());
    for (auto idx : c.trail) out.edges.push_back(geom.edge_at(idx));
    return out;
}

} // namespace

InteriorEdgeSets interior_edge_sets(const Fpl& f) {
    const GridGeometry geom(f.n());
    InteriorEdgeSets out;
    for (int idx = 0; idx < geom.edge_count(); ++idx)
        (f.edges().test(idx) ? out.path_edges : out.converse_edges).push_back(geom.edge_at(idx));
    return out;
}

CycleSearchResult find_alternating_cycles(const Fpl& f, std::optional<Edge> anchor,
                                          long long limit) {
    if (limit < 1) throw std::invalid_argument("find_alternating_cycles: limit must be positive");
    const GridGeometry geom(f.n());
    int anchor_idx = -1;
    if (anchor) anchor_idx = geom.index_of(*anchor);

    CycleSearchResult res{{}, false};
    CycleEnumerator en(geom, f.edges(), anchor_idx, limit);
    for (int m = 4; m <= geom.edge_count(); m += 2) {
        const auto* lvl = en.level(m);
        if (!lvl) break;
        for (const auto& c : *lvl) {
            if (static_cast<long long>(res.cycles.size()) >= limit) {
                res.limit_exhausted = true;
                return res;
            }
            res.cycles.push_back(make_cycle(geom, f, c));
        }
    }
    if (en.limit_hit()) res.limit_exhausted = true;
    return res;
}

void validate_cycle(const Fpl& f, const AlternatingCycle& L) {
    const GridGeometry geom(f.n());
    const int m = L.length();
    if (m < 4 || m % 2 != 0)
        throw std::invalid_argument("validate_cycle: trail length must be even and >= 4");
    EdgeSet seen;
    EdgeSet mask;
    for (const Edge& e : L.edges) {
        const int idx = geom.index_of(e);
        if (seen.test(idx)) throw std::invalid_argument("validate_cycle: repeated edge");
        seen.set(idx);
        mask.set(idx);
    }
    if (!(mask == L.mask)) throw std::invalid_argument("validate_cycle: mask does not match trail");

    // alternation and adjacency around the closed trail; fix the walk
    // orientation from the shared vertex of the first two edges
    const auto shares = [&](int a, int b) -> int {
        const auto& ea = geom.endpoints(a);
        const auto& eb = geom.endpoints(b);
        for (int va : ea)
            for (int vb : eb)
                if (va == vb) return va;
        return -1;
    };
    int prev_idx = geom.index_of(L.edges[0]);
    int join = shares(prev_idx, geom.index_of(L.edges[1]));
    if (join < 0) throw std::invalid_argument("validate_cycle: consecutive edges do not touch");
    int cur = join;
    for (int t = 1; t <= m; ++t) {
        const int idx = geom.index_of(L.edges[t % m]);
        const auto& ends = geom.endpoints(idx);
        if (ends[0] != cur && ends[1] != cur)
            throw std::invalid_argument("validate_cycle: consecutive edges do not touch");
        if (f.edges().test(prev_idx) == f.edges().test(idx))
            throw std::invalid_argument("validate_cycle: membership fails to alternate");
        cur = geom.other_endpoint(idx, cur);
        prev_idx = idx;
    }
}

Fpl toggle(const Fpl& f, const AlternatingCycle& L) {
    validate_cycle(f, L);
    return Fpl(f.n(), f.edges() ^ L.mask); // re-validated by the constructor
}

// ---------------------------------------------------------------------------
// Strategies

namespace {

int cyclic_succ(int i, int m) { return i % m + 1; }

// Interior edges of the open path leaving stub `label`, in walk order.
std::vector<int> path_edges_in_order(const GridGeometry& geom, const EdgeSet& edges, int label) {
    std::vector<int> out;
    const Stub start = geom.labels()[label - 1];
    int v = geom.vertex_id(start.r, start.c);
    int via = -1;
    for (int steps = 0; steps <= geom.edge_count() + 2; ++steps) {
        const auto [r, c] = geom.vertex_at(v);
        if (via >= 0) {
            for (Side s : {Side::Up, Side::Left, Side::Down, Side::Right})
                if (geom.stub_occupied(r, c, s)) return out;
        } else if (geom.occupied_stub_count(r, c) == 2) {
            return out;
        }
        int next = -1;
        for (int idx : geom.edges_at_vertex(v))
            if (edges.test(idx) && idx != via) {
                next = idx;
                break;
            }
        if (next < 0) break;
        out.push_back(next);
        v = geom.other_endpoint(next, v);
        via = next;
    }
    return out;
}

// A cycle qualifies when its toggle realizes the full rewiring of e_i on the
// boundary pattern: i joined to i+1, the former partners joined, everything
// else untouched. The weaker "i joined to i+1" reading admits toggles that
// scramble unrelated paths and provably breaks the 2n-counting already at
// n = 3.
bool toggle_realizes_move(int n, const EdgeSet& edges, const EdgeSet& mask,
                          const LinkPattern& want) {
    const Fpl g = fpl_unchecked(n, edges ^ mask);
    return link_pattern_of(g) == want;
}

// Shared selection core. Candidates are the qualifying cycles of globally
// minimal length; among those, the ones touching the path from i earliest
// (cycles disjoint from the path rank last). "First available" treats any
// residual tie as ill-defined; "smallest" tolerates ties that agree on the
// output FPL.
StrategyOutcome base_strategy(const Fpl& f, int i, StrategyKind kind, long long cycle_limit,
                              CycleEnumerator* shared) {
    const GridGeometry geom(f.n());
    const int m = 2 * f.n();
    if (i < 1 || i > m) throw std::out_of_range("strategy: index out of range");
    if (cycle_limit < 1) throw std::invalid_argument("strategy: cycle limit must be positive");

    const LinkPattern pi_f = link_pattern_of(f);
    const int succ = cyclic_succ(i, m);
    if (pi_f.partner(i) == succ)
        return {f, i, Resolved{f, i, std::nullopt}}; // already joined: empty path, j = i

    const int j = pi_f.partner(i);
    const LinkPattern want = apply_e(i, pi_f);

    std::vector<int> touch_rank(geom.edge_count(), geom.edge_count() + 1);
    {
        const auto path = path_edges_in_order(geom, f.edges(), i);
        for (size_t t = 0; t < path.size(); ++t) touch_rank[path[t]] = static_cast<int>(t);
    }
    const auto touch = [&](const EdgeSet& mask) {
        int best = geom.edge_count() + 1;
        for (int idx = 0; idx < geom.edge_count(); ++idx)
            if (mask.test(idx) && touch_rank[idx] < best) best = touch_rank[idx];
        return best;
    };

    CycleEnumerator* en = shared;
    std::optional<CycleEnumerator> own;
    if (!en) {
        own.emplace(geom, f.edges(), -1, cycle_limit);
        en = &*own;
    }

    for (int len = 4; len <= geom.edge_count(); len += 2) {
        const auto* lvl = en->level(len);
        if (!lvl) break;
        std::vector<const CachedCycle*> qualifying;
        for (const auto& c : *lvl)
            if (toggle_realizes_move(f.n(), f.edges(), c.mask, want)) qualifying.push_back(&c);
        if (qualifying.empty()) continue;

        int best_touch = geom.edge_count() + 2;
        for (const auto* c : qualifying) best_touch = std::min(best_touch, touch(c->mask));
        std::vector<const CachedCycle*> chosen_class;
        for (const auto* c : qualifying)
            if (touch(c->mask) == best_touch) chosen_class.push_back(c);

        bool ambiguous;
        if (kind == StrategyKind::FirstPath) {
            ambiguous = chosen_class.size() > 1;
        } else {
            std::unordered_set<EdgeSet, EdgeSetHash> outputs;
            for (const auto* c : chosen_class) outputs.insert(f.edges() ^ c->mask);
            ambiguous = outputs.size() > 1;
        }
        if (ambiguous) {
            Ambiguous amb;
            for (const auto* c : chosen_class) amb.candidates.push_back(make_cycle(geom, f, *c));
            return {f, i, std::move(amb)};
        }
        const CachedCycle& chosen = *chosen_class.front();
        Fpl g = fpl_unchecked(f.n(), f.edges() ^ chosen.mask);
        return {f, i, Resolved{std::move(g), j, make_cycle(geom, f, chosen)}};
    }
    return {f, i, NotFound{en->limit_hit()}};
}

// Dihedral transport. Generators act on (f, i) and on resolved outcomes
// (g, j) the same way; the reflection generator pairs the mirror with the
// index map i -> rho(i+1) so that "i joined to i+1" is preserved.
struct DihedralOps {
    int m; // 2n
    bool with_reflection;

    std::pair<Fpl, int> rot(const std::pair<Fpl, int>& s) const {
        return {gyrate(s.first), cyclic_succ(s.second, m)};
    }
    std::pair<Fpl, int> rot_inv(const std::pair<Fpl, int>& s) const {
        return {gyrate_inverse(s.first), (s.second + m - 2) % m + 1};
    }
    std::pair<Fpl, int> refl(const std::pair<Fpl, int>& s) const {
        const int n = s.first.n();
        return {reflect_fpl(s.first), reflect_label(n, cyclic_succ(s.second, m))};
    }

    std::pair<Fpl, int> apply(int gen, const std::pair<Fpl, int>& s) const {
        switch (gen) {
            case 0: return rot(s);
            case 1: return rot_inv(s);
            default: return refl(s);
        }
    }
    int generator_count() const { return with_reflection ? 3 : 2; }
};

struct StateKey {
    EdgeSet edges;
    int i;
    bool operator==(const StateKey&) const = default;
};
struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const { return k.edges.hash() * 31 + k.i; }
};

} // namespace

StrategyId parse_strategy(const std::string& id) {
    if (id == "first-path") return {StrategyKind::FirstPath, false};
    if (id == "shortest") return {StrategyKind::Shortest, false};
    if (id == "first-path+dihedral") return {StrategyKind::FirstPath, true};
    if (id == "shortest+dihedral") return {StrategyKind::Shortest, true};
    throw std::invalid_argument("unknown strategy id: " + id);
}

std::string strategy_name(const StrategyId& id) {
    std::string s = id.base == StrategyKind::FirstPath ? "first-path" : "shortest";
    if (id.dihedral) s += "+dihedral";
    return s;
}

StrategyOutcome strategy_first_path(const Fpl& f, int i, long long cycle_limit) {
    return base_strategy(f, i, StrategyKind::FirstPath, cycle_limit, nullptr);
}

StrategyOutcome strategy_shortest(const Fpl& f, int i, long long cycle_limit) {
    return base_strategy(f, i, StrategyKind::Shortest, cycle_limit, nullptr);
}

namespace {

// Orbit of (f, i) under the transport generators, as state list plus, for
// each state, the generator path from the canonical representative.
struct Orbit {
    std::vector<std::pair<Fpl, int>> states;
    int rep = 0;                              // index into states
    std::vector<std::vector<int>> rep_paths;  // generator word rep -> state
};

Orbit dihedral_orbit(const Fpl& f, int i, const DihedralOps& ops) {
    Orbit orbit;
    std::unordered_map<StateKey, int, StateKeyHash> index;
    const auto push = [&](const std::pair<Fpl, int>& s) -> int {
        const StateKey key{s.first.edges(), s.second};
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        index.emplace(key, static_cast<int>(orbit.states.size()));
        orbit.states.push_back(s);
        return static_cast<int>(orbit.states.size()) - 1;
    };
    push({f, i});
    for (size_t head = 0; head < orbit.states.size(); ++head) {
        const auto state = orbit.states[head];
        for (int gen = 0; gen < ops.generator_count(); ++gen) push(ops.apply(gen, state));
    }
    // canonical representative: minimal (ASM key, i)
    orbit.rep = 0;
    std::pair<std::string, int> best{orbit.states[0].first.key(), orbit.states[0].second};
    for (int t = 1; t < static_cast<int>(orbit.states.size()); ++t) {
        std::pair<std::string, int> cur{orbit.states[t].first.key(), orbit.states[t].second};
        if (cur < best) {
            best = cur;
            orbit.rep = t;
        }
    }
    // BFS from the representative, recording generator words
    orbit.rep_paths.assign(orbit.states.size(), {});
    std::vector<bool> seen(orbit.states.size(), false);
    std::vector<int> queue{orbit.rep};
    seen[orbit.rep] = true;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int at = queue[head];
        for (int gen = 0; gen < ops.generator_count(); ++gen) {
            const auto next = ops.apply(gen, orbit.states[at]);
            const StateKey key{next.first.edges(), next.second};
            const int ni = index.at(key);
            if (seen[ni]) continue;
            seen[ni] = true;
            orbit.rep_paths[ni] = orbit.rep_paths[at];
            orbit.rep_paths[ni].push_back(gen);
            queue.push_back(ni);
        }
    }
    return orbit;
}

StrategyOutcome transport_outcome(const StrategyOutcome& from, const std::vector<int>& word,
                                  const std::pair<Fpl, int>& target, const DihedralOps& ops) {
    StrategyOutcome out{target.first, target.second, NotFound{false}};
    if (const auto* nf = std::get_if<NotFound>(&from.result)) {
        out.result = *nf;
    } else if (const auto* amb = std::get_if<Ambiguous>(&from.result)) {
        out.result = *amb; // candidates stay attached to the representative
    } else {
        const auto& res = std::get<Resolved>(from.result);
        std::pair<Fpl, int> gj{res.g, res.j};
        for (int gen : word) gj = ops.apply(gen, gj);
        out.result = Resolved{std::move(gj.first), gj.second, std::nullopt};
    }
    return out;
}

std::string outcome_difference(const StrategyOutcome& direct, const StrategyOutcome& transported) {
    const auto kind = [](const StrategyOutcome& o) {
        return o.resolved() ? "resolved" : o.ambiguous() ? "ambiguous" : "not-found";
    };
    if (std::string(kind(direct)) != kind(transported))
        return std::string("direct outcome is ") + kind(direct) + ", transported is " +
               kind(transported);
    if (direct.resolved()) {
        const auto& a = std::get<Resolved>(direct.result);
        const auto& b = std::get<Resolved>(transported.result);
        if (!(a.g == b.g)) return "direct and transported outputs differ";
        if (a.j != b.j)
            return "direct j = " + std::to_string(a.j) + ", transported j = " + std::to_string(b.j);
    }
    return {};
}

struct SweepData {
    std::vector<Fpl> fpls;
    std::vector<std::string> keys;
    std::vector<StrategyOutcome> outcomes; // index fidx * 2n + (i - 1)
    std::vector<InconsistencyLogEntry> inconsistencies;
};

SweepData sweep_strategy(int n, const StrategyId& id, long long cycle_limit, int max_enum_n) {
    SweepData data;
    data.fpls = enumerate_fpls(n, max_enum_n);
    for (const Fpl& f : data.fpls) data.keys.push_back(f.key());
    const int m = 2 * n;
    data.outcomes.reserve(data.fpls.size() * m);

    const GridGeometry geom(n);
    if (!id.dihedral) {
        for (const Fpl& f : data.fpls) {
            CycleEnumerator shared(geom, f.edges(), -1, cycle_limit);
            for (int i = 1; i <= m; ++i)
                data.outcomes.push_back(base_strategy(f, i, id.base, cycle_limit, &shared));
        }
        return data;
    }

    const DihedralOps ops{m, reflection_available(n)};
    std::unordered_map<StateKey, StrategyOutcome, StateKeyHash> assigned;
    for (const Fpl& f : data.fpls) {
        CycleEnumerator shared(geom, f.edges(), -1, cycle_limit);
        for (int i = 1; i <= m; ++i) {
            const StateKey key{f.edges(), i};
            auto it = assigned.find(key);
            if (it == assigned.end()) {
                const Orbit orbit = dihedral_orbit(f, i, ops);
                const auto& rep = orbit.states[orbit.rep];
                const StrategyOutcome rep_out =
                    base_strategy(rep.first, rep.second, id.base, cycle_limit, nullptr);
                for (int t = 0; t < static_cast<int>(orbit.states.size()); ++t) {
                    assigned.emplace(StateKey{orbit.states[t].first.edges(), orbit.states[t].second},
                                     transport_outcome(rep_out, orbit.rep_paths[t],
                                                       orbit.states[t], ops));
                }
                it = assigned.find(key);
            }
            data.outcomes.push_back(it->second);
            // the base strategy's own answer, for the consistency log
            const StrategyOutcome direct = base_strategy(f, i, id.base, cycle_limit, &shared);
            const std::string diff = outcome_difference(direct, it->second);
            if (!diff.empty())
                data.inconsistencies.push_back({f.key(), i, diff});
        }
    }
    return data;
}

} // namespace

StrategyOutcome run_strategy(const Fpl& f, int i, const StrategyId& id, long long cycle_limit) {
    if (!id.dihedral) return base_strategy(f, i, id.base, cycle_limit, nullptr);
    const DihedralOps ops{2 * f.n(), reflection_available(f.n())};
    const Orbit orbit = dihedral_orbit(f, i, ops);
    const auto& rep = orbit.states[orbit.rep];
    const StrategyOutcome rep_out = base_strategy(rep.first, rep.second, id.base, cycle_limit, nullptr);
    int self = 0;
    while (!(orbit.states[self].first == f && orbit.states[self].second == i)) ++self;
    return transport_outcome(rep_out, orbit.rep_paths[self], orbit.states[self], ops);
}

namespace {

CountingHistogram build_histogram(int n, const StrategyId& strategy, const SweepData& data) {
    const int m = 2 * n;

    CountingHistogram hist;
    hist.n = n;
    hist.strategy = strategy_name(strategy);
    for (const auto& key : data.keys) hist.counts[key] = 0;
    hist.inconsistencies = data.inconsistencies;

    for (size_t t = 0; t < data.outcomes.size(); ++t) {
        const auto& out = data.outcomes[t];
        const std::string& fkey = data.keys[t / m];
        if (const auto* res = std::get_if<Resolved>(&out.result)) {
            ++hist.counts[res->g.key()];
        } else if (const auto* amb = std::get_if<Ambiguous>(&out.result)) {
            AmbiguityLogEntry entry{fkey, out.i, {}};
            for (const auto& c : amb->candidates) entry.candidates.push_back(c.edges);
            hist.ambiguous.push_back(std::move(entry));
        } else {
            hist.not_found.push_back({fkey, out.i, std::get<NotFound>(out.result).limit_hit});
        }
    }
    hist.pass_2n = true;
    for (const auto& [key, cnt] : hist.counts)
        if (cnt != 2LL * n) hist.pass_2n = false;
    return hist;
}

AuditReport build_audit(int n, const StrategyId& strategy, const SweepData& data) {
    const int m = 2 * n;
    const auto basis = enumerate_link_patterns(n);

    AuditReport rep;
    rep.n = n;
    rep.strategy = strategy_name(strategy);

    std::vector<LinkPattern> lp;
    lp.reserve(data.fpls.size());
    for (const Fpl& f : data.fpls) lp.push_back(link_pattern_of(f));

    rep.per_k.resize(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) rep.per_k[k] = {static_cast<int>(k) + 1, 0, 0, false};
    for (size_t fi = 0; fi < data.fpls.size(); ++fi)
        for (int j = 1; j <= m; ++j)
            ++rep.per_k[pattern_index(basis, apply_e(j, lp[fi]))].size_b;

    std::map<std::pair<std::string, int>, std::vector<std::pair<std::string, int>>> images;
    for (size_t t = 0; t < data.outcomes.size(); ++t) {
        const auto& out = data.outcomes[t];
        const size_t fi = t / m;
        if (out.ambiguous()) {
            ++rep.ambiguous;
            continue;
        }
        if (out.not_found()) {
            ++rep.not_found;
            continue;
        }
        const auto& res = std::get<Resolved>(out.result);
        ++rep.resolved;
        ++rep.per_k[pattern_index(basis, lp[fi])].resolved_inputs;
        images[{res.g.key(), res.j}].push_back({data.keys[fi], out.i});

        const LinkPattern lp_g = link_pattern_of(res.g);
        if (lp_g.partner(out.i) != cyclic_succ(out.i, m)) ++rep.join_condition_violations;
        if (!(apply_e(out.i, lp_g) == lp[fi])) ++rep.e_i_condition_violations;
        if (!(apply_e(res.j, lp_g) == lp[fi])) ++rep.e_j_condition_violations;
    }

    rep.injective = true;
    for (const auto& [gj, inputs] : images) {
        if (inputs.size() <= 1) continue;
        rep.injective = false;
        rep.collisions.push_back({gj.first, gj.second, inputs});
    }
    for (auto& pk : rep.per_k) pk.match = pk.resolved_inputs == pk.size_b;
    rep.strategy_canonical = rep.ambiguous == 0 && rep.not_found == 0;
    return rep;
}

} // namespace

CountingHistogram run_counting_test(int n, const StrategyId& strategy, long long cycle_limit,
                                    int max_enum_n) {
    return build_histogram(n, strategy, sweep_strategy(n, strategy, cycle_limit, max_enum_n));
}

AuditReport audit_bijection(int n, const StrategyId& strategy, long long cycle_limit,
                            int max_enum_n) {
    return build_audit(n, strategy, sweep_strategy(n, strategy, cycle_limit, max_enum_n));
}

SearchReport run_search(int n, const StrategyId& strategy, long long cycle_limit, int max_enum_n) {
    const SweepData data = sweep_strategy(n, strategy, cycle_limit, max_enum_n);
    return {build_histogram(n, strategy, data), build_audit(n, strategy, data)};
}

} // namespace rslab
