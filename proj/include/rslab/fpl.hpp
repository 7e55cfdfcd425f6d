#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rslab/asm_matrix.hpp"
#include "rslab/link_pattern.hpp"

namespace rslab {

/// Largest grid the fixed-width edge bitset supports: 2n(n-1) <= 256.
inline constexpr int kMaxGridN = 11;

/// Interior edge of the n x n vertex grid, vertices (row, col) in [1,n]^2
/// with rows growing downward. A horizontal edge joins (r,c)-(r,c+1), a
/// vertical one (r,c)-(r+1,c).
struct Edge {
    int r = 0;
    int c = 0;
    bool horizontal = false;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Fixed-capacity bitset over interior edge indices.
struct EdgeSet {
    std::array<std::uint64_t, 4> w{};

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(int i) { w[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    int count() const;

    EdgeSet operator^(const EdgeSet& o) const;
    EdgeSet operator&(const EdgeSet& o) const;
    bool any() const { return w[0] | w[1] | w[2] | w[3]; }
    bool operator==(const EdgeSet&) const = default;

    /// Compares as sorted edge-index lists (the set containing the smallest
    /// differing index is smaller). Used as the canonical tie-break order.
    bool set_less(const EdgeSet& o) const;

    std::size_t hash() const;
};

enum class Side : std::uint8_t { Up, Left, Down, Right };

/// Position of one boundary stub.
struct Stub {
    int r, c;
    Side side;
    bool operator==(const Stub&) const = default;
};

/// Edge indexing, stub convention and endpoint labeling for one grid size.
///
/// Stub convention (frozen): vertical stubs (top/bottom) are occupied at
/// vertices with r+c even, horizontal stubs (left/right) at r+c odd; around
/// the perimeter this occupies every other stub slot, starting with the
/// up-stub of vertex (1,1). Label 1 sits on that stub; labels 2..2n continue
/// counterclockwise (down the left side, across the bottom, up the right
/// side, back along the top).
class GridGeometry {
public:
    explicit GridGeometry(int n);

    int n() const { return n_; }
    int vertex_count() const { return n_ * n_; }
    int edge_count() const { return 2 * n_ * (n_ - 1); }

    int index_of(const Edge& e) const;
    Edge edge_at(int idx) const;

    int vertex_id(int r, int c) const { return (r - 1) * n_ + (c - 1); }
    std::pair<int, int> vertex_at(int v) const { return {v / n_ + 1, v % n_ + 1}; }

    /// Endpoint vertex ids of an edge, smaller id first.
    const std::array<int, 2>& endpoints(int idx) const { return ends_[idx]; }
    int other_endpoint(int idx, int v) const {
        return ends_[idx][0] == v ? ends_[idx][1] : ends_[idx][0];
    }

    /// Incident interior edges of a vertex (2..4 of them).
    const std::vector<int>& edges_at_vertex(int v) const { return incident_[v]; }

    bool stub_occupied(int r, int c, Side side) const;
    int occupied_stub_count(int r, int c) const;

    /// Stub carrying label l, 1-based; labels().size() == 2n.
    const std::vector<Stub>& labels() const { return labels_; }
    /// Label at a stub, or 0 if the stub is not occupied.
    int label_of(int r, int c, Side side) const;

private:
    int n_;
    std::vector<std::array<int, 2>> ends_;
    std::vector<std::vector<int>> incident_;
    std::vector<Stub> labels_;
};

/// Fully packed loop of size n, stored as its interior edge set E (the
/// occupied boundary stubs are implied by the global convention).
class Fpl {
public:
    /// Validates |E| = n(n-1) and the degree-2 condition at every vertex
    /// (counting occupied stubs); throws std::invalid_argument on violation.
    Fpl(int n, const EdgeSet& interior_edges);

    int n() const { return n_; }
    const EdgeSet& edges() const { return edges_; }
    bool has(const GridGeometry& geom, const Edge& e) const {
        return edges_.test(geom.index_of(e));
    }

    /// Interior edges in index order.
    std::vector<Edge> edge_list() const;

    /// Canonical ASM digit-string key of this FPL.
    std::string key() const;

    bool operator==(const Fpl& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    struct Unchecked {};
    Fpl(Unchecked, int n, const EdgeSet& edges) : n_(n), edges_(edges) {}

    int n_;
    EdgeSet edges_;

    friend Fpl asm_to_fpl(const Asm& a);
    friend Fpl fpl_unchecked(int n, const EdgeSet& edges);
};

/// Internal fast path: construct without validation (edge set known valid).
Fpl fpl_unchecked(int n, const EdgeSet& edges);

/// Six-vertex (square ice) bijection. asm_to_fpl reads path edges off the
/// checkerboard orientation convention; fpl_to_asm inverts it exactly.
Fpl asm_to_fpl(const Asm& a);
Asm fpl_to_asm(const Fpl& f);

/// Walks the open path leaving the labeled stub `label` through `edges`
/// (which must satisfy the FPL degree condition) and returns the terminal
/// label. Optionally reports the first interior edge of the path (-1 when the
/// path is stub-vertex-stub) and collects the edges walked. Throws
/// std::logic_error if the walk fails to terminate at a stub.
int trace_open_path(const GridGeometry& geom, const EdgeSet& edges, int label,
                    int* first_interior_edge = nullptr, EdgeSet* visited = nullptr);

/// Traces every open path between labeled stubs; closed interior loops are
/// ignored. Throws std::logic_error if tracing fails to terminate (corrupted
/// edge set).
LinkPattern link_pattern_of(const Fpl& f);

/// Closed path components not touching any labeled stub.
int count_interior_loops(const Fpl& f);

/// Direction of the boundary-pattern rotation under gyrate():
/// link_pattern_of(gyrate(f)) == rotate_pattern(link_pattern_of(f), +1).
/// Determined empirically once (exhaustively at n <= 5) and frozen.
inline constexpr int kGyrationRotation = +1;

/// Wieland gyration: sweep the even-parity interior plaquettes (top-left
/// corner r+c even), swapping any plaquette whose path edges form one pair of
/// opposite sides to the other pair; then sweep the odd-parity plaquettes.
Fpl gyrate(const Fpl& f);

/// Inverse gyration (odd-parity sweep first).
Fpl gyrate_inverse(const Fpl& f);

/// Whether a boundary-convention-preserving grid reflection exists (odd n
/// only; for even n every mirror swaps the occupied and free stub classes).
bool reflection_available(int n);

/// Vertical mirror (column c -> n+1-c; identical to reversing the columns of
/// the ASM image). Only valid for odd n; throws std::invalid_argument else.
Fpl reflect_fpl(const Fpl& f);

/// Label transport of the vertical mirror on the boundary labels (odd n):
/// rho(p) = (((3n+1)/2 - (p-1)) mod 2n) + 1. An involution; frozen from an
/// exhaustive scan at n = 3, 5.
int reflect_label(int n, int p);

/// All FPLs of size n, in ASM enumeration order.
std::vector<Fpl> enumerate_fpls(int n, int max_n = kDefaultEnumCap);

/// A(pi_k) for every pattern of the canonical basis.
struct PatternCounts {
    int n;
    std::vector<LinkPattern> basis;
    std::vector<long long> counts;

    long long total() const;
};
PatternCounts count_by_pattern(int n, int max_n = kDefaultEnumCap);

/// Exhaustive check of the gyration rotation property at size n.
struct GyrationRecord {
    int n;
    int direction;
    long long checked;
    std::vector<std::string> failures; // ASM keys
    bool pass;
};
GyrationRecord verify_gyration(int n, int max_n = kDefaultEnumCap);

} // namespace rslab
