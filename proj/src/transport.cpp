#include "gpl/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpl/calculus.hpp"

namespace gpl {

TransportPattern::TransportPattern(EdgeFlow f, ProbabilityMeasure src, ProbabilityMeasure tgt)
    : flow(std::move(f)), source(std::move(src)), target(std::move(tgt)) {
    require_same_graph(flow.graph(), source.graph(), "TransportPattern");
    require_same_graph(flow.graph(), target.graph(), "TransportPattern");
    const VertexFunction div = divergence(flow);
    double worst = 0;
    for (Graph::Vertex v = 0; v < div.size(); ++v)
        worst = std::max(worst, std::fabs(div[v] - (source.mass_at(v) - target.mass_at(v))));
    if (worst > kDivergenceTolerance)
        throw std::invalid_argument(
            "TransportPattern: divergence identity violated by " + std::to_string(worst));
}

TransportPattern path_transport(const GraphPtr& graph, Graph::Vertex x, Graph::Vertex y) {
    graph->validate_vertex(x, "path_transport");
    graph->validate_vertex(y, "path_transport");
    auto flow = EdgeFlow::zero(graph);
    if (x != y) {
        // shortest path y -> x via BFS parents from x
        const auto dist = graph->bfs_distances(x);
        Graph::Vertex cur = y;
        while (cur != x) {
            Graph::Vertex next = cur;
            for (Graph::Vertex z : graph->neighbors(cur))
                if (dist[z] == dist[cur] - 1) {
                    next = z;
                    break;
                }
            // unit flow oriented cur -> next (toward x)
            const auto e = graph->edge_index(cur, next);
            flow.mutable_values()[static_cast<std::size_t>(e)] += (cur < next) ? 1.0 : -1.0;
            cur = next;
        }
    }
    return TransportPattern(std::move(flow), ProbabilityMeasure::delta(graph, x),
                            ProbabilityMeasure::delta(graph, y));
}

namespace {

double lp_of_vector(const std::vector<double>& xs, double p) {
    if (std::isinf(p)) {
        double m = 0;
        for (double x : xs) m = std::max(m, std::fabs(x));
        return m;
    }
    double s = 0;
    for (double x : xs)
        if (x != 0.0) s += std::pow(std::fabs(x), p);
    return std::pow(s, 1.0 / p);
}

// Accumulates the step-i edge measure of the current iteration state into
// `acc` (canonical orientation), scaled by `scale`.  A lazy walker moves
// with probability 1 - alpha, so the per-edge mass carries that factor and
// the divergence telescopes to P^(i+1) - P^(i) for every laziness.
void accumulate_edge_measure(const WalkKernel& k, const MeasureIteration& it,
                             std::vector<double>& acc, double scale) {
    const Graph& g = *k.graph;
    const double move = 1.0 - k.alpha;
    const auto dense = it.dense();
    for (Graph::Vertex x : it.active()) {
        const double m = dense[static_cast<std::size_t>(x)];
        if (m == 0.0) continue;
        const auto nb = g.neighbors(x);
        const double w = scale * move * m / static_cast<double>(nb.size());
        for (Graph::Vertex y : nb) {
            const auto e = static_cast<std::size_t>(g.edge_index(x, y));
            acc[e] += (x < y) ? w : -w;
        }
    }
}

}  // namespace

EdgeFlow walk_edge_measure(const WalkKernel& k, Graph::Vertex x, int i) {
    if (i < 0) throw std::invalid_argument("walk_edge_measure: i must be >= 0");
    if (k.dirichlet)
        throw std::invalid_argument("walk_edge_measure: dirichlet kernels not supported");
    MeasureIteration it(k, x);
    for (int s = 0; s < i; ++s) it.advance();
    std::vector<double> acc(static_cast<std::size_t>(k.graph->edge_count()), 0.0);
    accumulate_edge_measure(k, it, acc, 1.0);
    return EdgeFlow(k.graph, std::move(acc));
}

TransportPattern walk_transport(const WalkKernel& k, Graph::Vertex x, int n, int kk) {
    if (n < 0 || kk < 1)
        throw std::invalid_argument("walk_transport: need n >= 0 and kk >= 1");
    if (k.dirichlet)
        throw std::invalid_argument("walk_transport: dirichlet kernels not supported");
    MeasureIteration it(k, x);
    for (int s = 0; s < n; ++s) it.advance();
    const ProbabilityMeasure source = it.to_measure();
    // raw walk flow has divergence P^(n+kk) - P^(n); negate for the pattern
    std::vector<double> acc(static_cast<std::size_t>(k.graph->edge_count()), 0.0);
    for (int i = 0; i < kk; ++i) {
        accumulate_edge_measure(k, it, acc, -1.0);
        it.advance();
    }
    ProbabilityMeasure target = it.to_measure();
    return TransportPattern(EdgeFlow(k.graph, std::move(acc)), source, std::move(target));
}

std::pair<double, double> transport_norm_bound(const WalkKernel& k, Graph::Vertex x, int n,
                                               int kk, double p_prime) {
    if (kk == 0) return {0.0, 0.0};
    const double p = conjugate_exponent(p_prime);
    const TransportPattern tau = walk_transport(k, x, n, kk);
    const double exact = lp_norm_edges(tau.flow, p_prime);
    const NormSequence seq = norm_sequence(k, x, p_prime, n + kk - 1);
    double sum = 0;
    for (int i = n; i <= n + kk - 1; ++i) sum += seq.norms[static_cast<std::size_t>(i)];
    const double degree_factor =
        std::isinf(p) ? 1.0 : std::pow(static_cast<double>(k.graph->min_degree()), -1.0 / p);
    return {exact, degree_factor * sum};
}

std::pair<double, double> holder_gap(const VertexFunction& g, const TransportPattern& t,
                                     double p) {
    require_same_graph(g.graph(), t.flow.graph(), "holder_gap");
    const double p_prime = conjugate_exponent(p);
    const double lhs = std::fabs(t.source.integrate(g) - t.target.integrate(g));
    const double rhs = lp_norm_edges(gradient(g), p) * lp_norm_edges(t.flow, p_prime);
    return {lhs, rhs};
}

TailReport tail_condition(const WalkKernel& k, Graph::Vertex x, double p_prime, int N,
                          int horizon) {
    if (N < 0 || horizon < 0)
        throw std::invalid_argument("tail_condition: need N >= 0 and horizon >= 0");
    if (k.dirichlet)
        throw std::invalid_argument("tail_condition: dirichlet kernels not supported");
    const double p = conjugate_exponent(p_prime);
    const double degree_factor =
        std::isinf(p) ? 1.0 : std::pow(static_cast<double>(k.graph->min_degree()), -1.0 / p);
    const auto m = static_cast<std::size_t>(k.graph->edge_count());

    TailReport rep;
    rep.exactness_radius = k.graph->distance_to_frontier(x);
    rep.warned = N + horizon >= rep.exactness_radius;

    // step-i edge measures for i in [0, N+horizon-1], plus the norm sequence
    const int top = N + horizon;
    std::vector<std::vector<double>> flows;
    std::vector<double> norms;
    MeasureIteration it(k, x);
    for (int i = 0; i < top; ++i) {
        if (i > 0) it.advance();
        norms.push_back(it.lp_norm(p_prime));
        flows.emplace_back(m, 0.0);
        accumulate_edge_measure(k, it, flows.back(), 1.0);
    }
    if (top == 0) norms.push_back(1.0);

    std::vector<double> acc(m);
    for (int n = 0; n <= N; ++n) {
        std::fill(acc.begin(), acc.end(), 0.0);
        double best = 0;
        double tail = 0;
        for (int kk = 1; kk <= horizon; ++kk) {
            const auto& w = flows[static_cast<std::size_t>(n + kk - 1)];
            for (std::size_t e = 0; e < m; ++e) acc[e] += w[e];
            best = std::max(best, lp_of_vector(acc, p_prime));
            tail += norms[static_cast<std::size_t>(n + kk - 1)];
        }
        rep.sup_norms.push_back(best);
        rep.bound_tails.push_back(degree_factor * tail);
    }
    return rep;
}

} // namespace gpl
