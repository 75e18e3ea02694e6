#include "gpl/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gpl {

void require_same_graph(const GraphPtr& a, const GraphPtr& b, const char* op) {
    if (a.get() != b.get())
        throw std::invalid_argument(std::string(op) + ": operands reference different graphs");
}

void Graph::validate_vertex(Vertex v, const char* what) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument(std::string(what) + ": vertex id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

GraphPtr Graph::from_edge_list(Vertex vertex_count,
                               const std::vector<std::pair<Vertex, Vertex>>& edges,
                               Vertex root, std::vector<Vertex> frontier, std::string label) {
    if (vertex_count <= 0) throw std::invalid_argument("Graph: vertex_count must be positive");
    std::vector<std::pair<Vertex, Vertex>> dir;
    dir.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    auto g = std::unique_ptr<Graph>(new Graph());
    g->n_ = vertex_count;
    g->offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
    g->neighbors_.resize(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) {
        if (i + 1 < dir.size() && dir[i].first == dir[i + 1].first && dir[i].second == dir[i + 1].second)
            throw std::invalid_argument("Graph: duplicate edge rejected");
        g->offsets_[dir[i].first + 1]++;
        g->neighbors_[i] = dir[i].second;
    }
    for (Vertex v = 0; v < vertex_count; ++v) g->offsets_[v + 1] += g->offsets_[v];
    g->root_ = root;
    g->frontier_ = std::move(frontier);
    g->label_ = std::move(label);
    return finish(std::move(g), /*check_symmetry=*/false);  // symmetric by construction
}

GraphPtr Graph::from_csr(std::vector<std::int64_t> offsets, std::vector<Vertex> neighbors,
                         Vertex root, std::vector<Vertex> frontier, std::string label,
                         bool check_symmetry) {
    if (offsets.size() < 2) throw std::invalid_argument("Graph: empty CSR");
    auto g = std::unique_ptr<Graph>(new Graph());
    g->n_ = static_cast<Vertex>(offsets.size() - 1);
    g->offsets_ = std::move(offsets);
    g->neighbors_ = std::move(neighbors);
    g->root_ = root;
    g->frontier_ = std::move(frontier);
    g->label_ = std::move(label);
    return finish(std::move(g), check_symmetry);
}

GraphPtr Graph::finish(std::unique_ptr<Graph> g, bool check_symmetry) {
    const Vertex n = g->n_;
    if (g->offsets_.front() != 0 || g->offsets_.back() != static_cast<std::int64_t>(g->neighbors_.size()))
        throw std::invalid_argument("Graph: inconsistent CSR offsets");
    if (g->neighbors_.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
        throw std::invalid_argument("Graph: too many edge slots for 32-bit indexing");
    g->m_ = static_cast<EdgeId>(g->neighbors_.size() / 2);
    if (g->neighbors_.size() % 2 != 0)
        throw std::invalid_argument("Graph: adjacency not symmetric (odd entry count)");

    g->max_degree_ = 0;
    g->min_degree_ = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n; ++v) {
        const auto nb = g->neighbors(v);
        const int d = static_cast<int>(nb.size());
        if (d == 0 && n > 1)
            throw std::invalid_argument("Graph: isolated vertex (graph must be connected)");
        g->max_degree_ = std::max(g->max_degree_, d);
        g->min_degree_ = std::min(g->min_degree_, d);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] < 0 || nb[i] >= n) throw std::invalid_argument("Graph: neighbor id out of range");
            if (nb[i] == v) throw std::invalid_argument("Graph: self-loop rejected");
            if (i > 0 && nb[i] <= nb[i - 1])
                throw std::invalid_argument("Graph: neighbor row not sorted / duplicate neighbor");
        }
    }
    if (check_symmetry) {
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g->neighbors(v))
                if (!g->adjacent(w, v))
                    throw std::invalid_argument("Graph: adjacency not symmetric");
    }

    g->validate_vertex(g->root_, "Graph root");
    std::sort(g->frontier_.begin(), g->frontier_.end());
    g->frontier_.erase(std::unique(g->frontier_.begin(), g->frontier_.end()), g->frontier_.end());
    g->frontier_mask_.assign(n, 0);
    for (Vertex v : g->frontier_) {
        g->validate_vertex(v, "Graph frontier");
        g->frontier_mask_[v] = 1;
    }
    if (g->frontier_mask_[g->root_])
        throw std::invalid_argument("Graph: root must not lie in the frontier");

    // edge-id offsets: number of canonical edges (u,v), u<v, in rows before u
    g->up_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex u = 0; u < n; ++u) {
        const auto nb = g->neighbors(u);
        const auto first_up = std::upper_bound(nb.begin(), nb.end(), u);
        g->up_offsets_[u + 1] = g->up_offsets_[u] + (nb.end() - first_up);
    }
    if (g->up_offsets_[n] != g->m_)
        throw std::invalid_argument("Graph: adjacency not symmetric (edge count mismatch)");

    // connectivity
    {
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<Vertex> queue;
        queue.reserve(n);
        queue.push_back(g->root_);
        seen[g->root_] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g->neighbors(queue[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        if (queue.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("Graph: not connected");
    }
    return GraphPtr(g.release());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph::EdgeId Graph::edge_index(Vertex u, Vertex v) const {
    validate_vertex(u, "edge_index");
    validate_vertex(v, "edge_index");
    if (u > v) std::swap(u, v);
    const auto nb = neighbors(u);
    const auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        throw std::invalid_argument("edge_index: vertices are not adjacent");
    const auto first_up = std::upper_bound(nb.begin(), nb.end(), u);
    return up_offsets_[u] + (it - first_up);
}

std::pair<Graph::Vertex, Graph::Vertex> Graph::edge_endpoints(EdgeId e) const {
    if (e < 0 || e >= m_) throw std::invalid_argument("edge_endpoints: edge id out of range");
    const auto it = std::upper_bound(up_offsets_.begin(), up_offsets_.end(), e);
    const Vertex u = static_cast<Vertex>(it - up_offsets_.begin() - 1);
    const auto nb = neighbors(u);
    const auto first_up = std::upper_bound(nb.begin(), nb.end(), u);
    return {u, *(first_up + (e - up_offsets_[u]))};
}

std::vector<std::int32_t> Graph::bfs_distances(std::span<const Vertex> sources) const {
    std::vector<std::int32_t> dist(n_, std::numeric_limits<std::int32_t>::max());
    std::vector<Vertex> queue;
    queue.reserve(n_);
    for (Vertex s : sources) {
        validate_vertex(s, "bfs_distances");
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        const std::int32_t dx = dist[x];
        for (Vertex y : neighbors(x))
            if (dist[y] == std::numeric_limits<std::int32_t>::max()) {
                dist[y] = dx + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

std::vector<std::int32_t> Graph::bfs_distances(Vertex source) const {
    const Vertex s[1] = {source};
    return bfs_distances(std::span<const Vertex>(s, 1));
}

std::vector<std::int32_t> Graph::frontier_distances() const {
    return bfs_distances(std::span<const Vertex>(frontier_.data(), frontier_.size()));
}

std::int32_t Graph::distance_to_frontier(Vertex x) const {
    validate_vertex(x, "distance_to_frontier");
    if (frontier_.empty()) return std::numeric_limits<std::int32_t>::max();
    return frontier_distances()[x];
}

std::vector<std::pair<Graph::Vertex, Graph::Vertex>> Graph::bfs_spanning_tree() const {
    std::vector<std::pair<Vertex, Vertex>> tree;
    tree.reserve(static_cast<std::size_t>(n_) - 1);
    std::vector<std::uint8_t> seen(n_, 0);
    std::vector<Vertex> queue;
    queue.reserve(n_);
    queue.push_back(root_);
    seen[root_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                tree.emplace_back(x, y);
                queue.push_back(y);
            }
    }
    return tree;
}

} // namespace gpl
