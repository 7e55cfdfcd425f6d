#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rslab/fpl.hpp"

namespace rslab {

/// Default cap on cycles generated per search (overflow is reported, never
/// silent).
inline constexpr long long kDefaultCycleLimit = 100000;

/// Closed edge trail alternating between E and its converse; edges are
/// distinct, vertices may repeat, no boundary stub is involved.
struct AlternatingCycle {
    Fpl host;
    std::vector<Edge> edges; // cyclic trail order
    EdgeSet mask;

    int length() const { return static_cast<int>(edges.size()); }
};

struct InteriorEdgeSets {
    std::vector<Edge> path_edges;     // E
    std::vector<Edge> converse_edges; // S \ E
};

/// E and its converse, partitioning the 2n(n-1) interior edges.
InteriorEdgeSets interior_edge_sets(const Fpl& f);

struct CycleSearchResult {
    std::vector<AlternatingCycle> cycles; // by (length, sorted-edge-list) order
    bool limit_exhausted;                 // more cycles may exist beyond `limit`
};

/// Enumerates alternating closed trails (through `anchor` when given) in the
/// canonical order: breadth-first by length, ties broken lexicographically by
/// the sorted edge list. Returns at most `limit` cycles.
CycleSearchResult find_alternating_cycles(const Fpl& f, std::optional<Edge> anchor,
                                          long long limit = kDefaultCycleLimit);

/// Throws std::invalid_argument unless L is a valid alternating cycle of f.
void validate_cycle(const Fpl& f, const AlternatingCycle& L);

/// Lemma-1 move: E' = (E \ L) union (L \ E). Validates L against f.
Fpl toggle(const Fpl& f, const AlternatingCycle& L);

// ---------------------------------------------------------------------------
// Bijection strategies

struct Resolved {
    Fpl g;
    int j;
    /// Empty when i was already joined to i+1 in pi(f) (g = f, no toggle) or
    /// when the outcome was transported along a dihedral orbit.
    std::optional<AlternatingCycle> cycle;
};

struct Ambiguous {
    std::vector<AlternatingCycle> candidates;
};

struct NotFound {
    bool limit_hit; // search stopped at the cycle cap rather than exhaustion
};

struct StrategyOutcome {
    Fpl f;
    int i;
    std::variant<Resolved, Ambiguous, NotFound> result;

    bool resolved() const { return std::holds_alternative<Resolved>(result); }
    bool ambiguous() const { return std::holds_alternative<Ambiguous>(result); }
    bool not_found() const { return std::holds_alternative<NotFound>(result); }
};

enum class StrategyKind { FirstPath, Shortest };

struct StrategyId {
    StrategyKind base;
    bool dihedral = false;

    bool operator==(const StrategyId&) const = default;
};

/// Parses "first-path", "shortest", "first-path+dihedral",
/// "shortest+dihedral"; throws std::invalid_argument otherwise.
StrategyId parse_strategy(const std::string& id);
std::string strategy_name(const StrategyId& id);

/// Wraps a base strategy with the dihedral-orbit transport.
inline StrategyId symmetrize_strategy(StrategyId base) {
    base.dihedral = true;
    return base;
}

/// If pi_f(i) = i+1 the input resolves trivially (g = f, j = i, no toggle).
/// Otherwise both strategies consider the alternating cycles whose toggle
/// realizes the e_i move on the boundary pattern (pi(g) = e_i(pi(f))), at
/// the minimal length where any exists; among those, the ones touching the
/// open path leaving stub i earliest along its walk. They differ in what
/// counts as an ill-defined choice at that decision point. j = pi_f(i), the
/// former partner of i.
///
/// "First available": Ambiguous as soon as the decision point holds more
/// than one candidate cycle.
StrategyOutcome strategy_first_path(const Fpl& f, int i,
                                    long long cycle_limit = kDefaultCycleLimit);

/// "Smallest": Ambiguous only when the candidate cycles at the decision
/// point lead to different output FPLs.
StrategyOutcome strategy_shortest(const Fpl& f, int i,
                                  long long cycle_limit = kDefaultCycleLimit);

/// Dispatch on a strategy id (dihedral ids resolve the orbit representative
/// with the base strategy and transport; see run_counting_test for sweeps).
StrategyOutcome run_strategy(const Fpl& f, int i, const StrategyId& id,
                             long long cycle_limit = kDefaultCycleLimit);

// ---------------------------------------------------------------------------
// Sweeps

struct AmbiguityLogEntry {
    std::string fpl_key;
    int i;
    std::vector<std::vector<Edge>> candidates;
};

struct NotFoundLogEntry {
    std::string fpl_key;
    int i;
    bool limit_hit;
};

/// Base-vs-transported disagreement under a dihedral strategy.
struct InconsistencyLogEntry {
    std::string fpl_key;
    int i;
    std::string detail;
};

struct CountingHistogram {
    int n = 0;
    std::string strategy;
    std::map<std::string, long long> counts; // ASM key -> times output
    std::vector<AmbiguityLogEntry> ambiguous;
    std::vector<NotFoundLogEntry> not_found;
    std::vector<InconsistencyLogEntry> inconsistencies; // dihedral only
    bool pass_2n = false;                               // every count == 2n
};

/// Sweeps every (f, i) in F_n x [1, 2n] and tallies the resolved outputs.
CountingHistogram run_counting_test(int n, const StrategyId& strategy,
                                    long long cycle_limit = kDefaultCycleLimit,
                                    int max_enum_n = kDefaultEnumCap);

struct AuditCollision {
    std::string g_key;
    int j;
    std::vector<std::pair<std::string, int>> inputs; // colliding (f key, i)
};

struct AuditPerK {
    int k;
    long long resolved_inputs; // resolved (f, i) with pi(f) = pi_k
    long long size_b;          // |B_k|
    bool match;
};

struct AuditReport {
    int n = 0;
    std::string strategy;
    long long resolved = 0;
    long long ambiguous = 0;
    long long not_found = 0;
    bool injective = false;
    std::vector<AuditCollision> collisions;
    /// Violations of "i joined to i+1 in pi(g)" over resolved outcomes.
    long long join_condition_violations = 0;
    /// Violations of the literal reading e_i(pi(g)) = pi(f).
    long long e_i_condition_violations = 0;
    /// Violations of the inverse-index reading e_j(pi(g)) = pi(f).
    long long e_j_condition_violations = 0;
    std::vector<AuditPerK> per_k;
    bool strategy_canonical = false; // no ambiguous and no not-found anywhere
};

AuditReport audit_bijection(int n, const StrategyId& strategy,
                            long long cycle_limit = kDefaultCycleLimit,
                            int max_enum_n = kDefaultEnumCap);

/// Histogram and audit computed from a single sweep.
struct SearchReport {
    CountingHistogram histogram;
    AuditReport audit;
};

SearchReport run_search(int n, const StrategyId& strategy,
                        long long cycle_limit = kDefaultCycleLimit,
                        int max_enum_n = kDefaultEnumCap);

} // namespace rslab
