#include "gpl/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace gpl {

double conjugate_exponent(double p) {
    if (p < 1) throw std::invalid_argument("conjugate_exponent: p must be >= 1");
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

EdgeFlow gradient(const VertexFunction& g) {
    const Graph& graph = *g.graph();
    std::vector<double> vals(static_cast<std::size_t>(graph.edge_count()));
    graph.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId e) {
        vals[static_cast<std::size_t>(e)] = g[v] - g[u];
    });
    return EdgeFlow(g.graph(), std::move(vals));
}

VertexFunction divergence(const EdgeFlow& t) {
    const Graph& graph = *t.graph();
    std::vector<double> vals(graph.vertex_count(), 0.0);
    graph.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId e) {
        const double f = t.at_edge(e);  // oriented u -> v
        vals[v] += f;
        vals[u] -= f;
    });
    return VertexFunction(t.graph(), std::move(vals));
}

double edge_pairing(const EdgeFlow& f, const EdgeFlow& h) {
    require_same_graph(f.graph(), h.graph(), "edge_pairing");
    double s = 0;
    const auto fv = f.values();
    const auto hv = h.values();
    for (std::size_t i = 0; i < fv.size(); ++i) s += fv[i] * hv[i];
    return s;
}

double vertex_pairing(const VertexFunction& f, const VertexFunction& g) {
    require_same_graph(f.graph(), g.graph(), "vertex_pairing");
    double s = 0;
    const auto fv = f.values();
    const auto gv = g.values();
    for (std::size_t i = 0; i < fv.size(); ++i) s += fv[i] * gv[i];
    return s;
}

static double lp_of_span(std::span<const double> xs, double p) {
    if (p < 1) throw std::invalid_argument("lp norm: p must be >= 1");
    if (std::isinf(p)) {
        double m = 0;
        for (double x : xs) m = std::max(m, std::fabs(x));
        return m;
    }
    if (p == 1.0) {
        double s = 0;
        for (double x : xs) s += std::fabs(x);
        return s;
    }
    if (p == 2.0) {
        double s = 0;
        for (double x : xs) s += x * x;
        return std::sqrt(s);
    }
    double s = 0;
    for (double x : xs)
        if (x != 0.0) s += std::pow(std::fabs(x), p);
    return std::pow(s, 1.0 / p);
}

double lp_norm_vertices(const VertexFunction& g, double p) { return lp_of_span(g.values(), p); }

double lp_norm_edges(const EdgeFlow& t, double p,
                     std::optional<std::span<const Graph::EdgeId>> restriction) {
    if (!restriction) return lp_of_span(t.values(), p);
    const Graph::EdgeId m = t.graph()->edge_count();
    std::vector<double> vals;
    vals.reserve(restriction->size());
    for (Graph::EdgeId e : *restriction) {
        if (e < 0 || e >= m)
            throw std::invalid_argument("lp_norm_edges: restriction contains a non-edge id");
        vals.push_back(t.at_edge(e));
    }
    return lp_of_span(vals, p);
}

double dp_norm(const VertexFunction& g, double p) {
    if (p < 1) throw std::invalid_argument("dp_norm: p must be >= 1");
    const double root_val = std::fabs(g[g.graph()->root()]);
    if (std::isinf(p)) return std::max(lp_norm_edges(gradient(g), p), root_val);
    const double grad = lp_norm_edges(gradient(g), p);
    return std::pow(std::pow(grad, p) + std::pow(root_val, p), 1.0 / p);
}

static double signed_power(double x, double p) {
    if (x == 0.0) return 0.0;
    return std::pow(std::fabs(x), p - 2.0) * x;
}

VertexFunction mazur_map(const VertexFunction& g, double p) {
    if (p <= 1) throw std::invalid_argument("mazur_map: p must be > 1");
    std::vector<double> vals(g.values().begin(), g.values().end());
    for (double& v : vals) v = signed_power(v, p);
    return VertexFunction(g.graph(), std::move(vals));
}

EdgeFlow mazur_map(const EdgeFlow& t, double p) {
    if (p <= 1) throw std::invalid_argument("mazur_map: p must be > 1");
    std::vector<double> vals(t.values().begin(), t.values().end());
    for (double& v : vals) v = signed_power(v, p);
    return EdgeFlow(t.graph(), std::move(vals));
}

std::vector<Graph::EdgeId> edges_outside_ball(const Graph& graph, Graph::Vertex center, int r) {
    const auto dist = graph.bfs_distances(center);
    std::vector<Graph::EdgeId> ids;
    graph.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId e) {
        if (dist[u] > r || dist[v] > r) ids.push_back(e);
    });
    return ids;
}

} // namespace gpl
