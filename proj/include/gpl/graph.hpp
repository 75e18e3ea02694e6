#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpl {

class Graph;
// Graphs are immutable after construction (the public surface is entirely
// const), so a plain shared_ptr is the ownership currency everywhere.
using GraphPtr = std::shared_ptr<Graph>;

/// Finite symmetric bounded-valency graph with a root vertex and an
/// optional frontier marking.
///
/// The frontier is the truncation boundary of a finite window cut out of an
/// infinite graph: walk distributions, boundary values and isoperimetric
/// scans use it to decide which computations are exact and which are
/// window artifacts.  A graph with an empty frontier is an honest finite
/// graph.
///
/// Invariants enforced at construction: adjacency is symmetric, sorted and
/// duplicate-free, there are no self-loops, the graph is connected, and the
/// root is a valid vertex outside the frontier.  Instances are immutable
/// and safe to share across threads.
///
/// Unordered edges carry a canonical orientation (smaller id -> larger id)
/// and a dense edge id in [0, edge_count), ordered lexicographically by
/// (u, v) with u < v.  Antisymmetric edge data is stored once per edge
/// against this orientation.
class Graph {
public:
    using Vertex = std::int32_t;
    using EdgeId = std::int64_t;

    /// Validating constructor from an unordered edge list.  Each edge may be
    /// given once in either orientation; both (u,v) and (v,u) appearing is
    /// accepted.  Throws std::invalid_argument on any invariant violation.
    static GraphPtr from_edge_list(Vertex vertex_count,
                                   const std::vector<std::pair<Vertex, Vertex>>& edges,
                                   Vertex root,
                                   std::vector<Vertex> frontier = {},
                                   std::string label = {});

    /// Fast path for builders that emit rows already sorted and symmetric.
    /// Connectivity and basic sanity are still checked.
    static GraphPtr from_csr(std::vector<std::int64_t> offsets,
                             std::vector<Vertex> neighbors,
                             Vertex root,
                             std::vector<Vertex> frontier,
                             std::string label,
                             bool check_symmetry = false);

    Vertex vertex_count() const { return n_; }
    EdgeId edge_count() const { return m_; }
    int degree(Vertex v) const {
        return static_cast<int>(offsets_[v + 1] - offsets_[v]);
    }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v],
                static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }
    int max_degree() const { return max_degree_; }
    int min_degree() const { return min_degree_; }
    Vertex root() const { return root_; }
    const std::string& label() const { return label_; }

    bool has_frontier() const { return !frontier_.empty(); }
    const std::vector<Vertex>& frontier() const { return frontier_; }
    bool in_frontier(Vertex v) const { return frontier_mask_[v] != 0; }
    Vertex interior_count() const { return n_ - static_cast<Vertex>(frontier_.size()); }

    bool adjacent(Vertex u, Vertex v) const;

    /// Canonical edge id of the unordered edge {u,v}; throws if not adjacent.
    EdgeId edge_index(Vertex u, Vertex v) const;
    /// Endpoints (u,v) with u < v of a canonical edge id.
    std::pair<Vertex, Vertex> edge_endpoints(EdgeId e) const;

    /// Visit each unordered edge once as f(u, v, edge_id) with u < v and
    /// edge ids in increasing order.
    template <typename F>
    void for_each_edge(F&& f) const {
        EdgeId e = 0;
        for (Vertex u = 0; u < n_; ++u) {
            const auto nb = neighbors(u);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (nb[i] > u) f(u, nb[i], e++);
            }
        }
    }

    /// BFS distances from a set of source vertices (INT32_MAX if the set is
    /// empty -- every vertex is "infinitely far" from an empty frontier).
    std::vector<std::int32_t> bfs_distances(std::span<const Vertex> sources) const;
    std::vector<std::int32_t> bfs_distances(Vertex source) const;
    /// Graph distance from x to the nearest frontier vertex; INT32_MAX when
    /// the frontier is empty.
    std::int32_t distance_to_frontier(Vertex x) const;
    std::vector<std::int32_t> frontier_distances() const;

    /// Edges of a plain BFS spanning tree rooted at the graph root.  This is
    /// ordinary plumbing with no structural guarantee beyond being a tree.
    std::vector<std::pair<Vertex, Vertex>> bfs_spanning_tree() const;

    void validate_vertex(Vertex v, const char* what) const;

private:
    Graph() = default;
    static GraphPtr finish(std::unique_ptr<Graph> g, bool check_symmetry);

    Vertex n_ = 0;
    EdgeId m_ = 0;
    std::vector<std::int64_t> offsets_;     // n+1 row offsets into neighbors_
    std::vector<Vertex> neighbors_;         // 2m, each row sorted ascending
    std::vector<std::int64_t> up_offsets_;  // n+1, edge-id offset of row u's upper neighbors
    Vertex root_ = 0;
    std::vector<Vertex> frontier_;          // sorted
    std::vector<std::uint8_t> frontier_mask_;
    std::string label_;
    int max_degree_ = 0;
    int min_degree_ = 0;
};

/// Pointer-identity check used by all value types: two values interoperate
/// only when they reference the same Graph instance.
void require_same_graph(const GraphPtr& a, const GraphPtr& b, const char* op);

} // namespace gpl
