#include "gpl/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gpl/calculus.hpp"
#include "gpl/generators.hpp"

namespace gpl {

double harmonic_residual(const WalkKernel& k, const VertexFunction& h) {
    require_same_graph(k.graph, h.graph(), "harmonic_residual");
    const Graph& g = *k.graph;
    double worst = 0;
    for (Graph::Vertex x = 0; x < g.vertex_count(); ++x) {
        if (g.in_frontier(x)) continue;
        double s = 0;
        const auto nb = g.neighbors(x);
        for (Graph::Vertex y : nb) s += h[y];
        worst = std::max(worst, std::fabs(h[x] - s / static_cast<double>(nb.size())));
    }
    return worst;
}

BoundaryValueReport boundary_value(const WalkKernel& k, const VertexFunction& g, double tol,
                                   int max_n) {
    require_same_graph(k.graph, g.graph(), "boundary_value");
    if (max_n <= 0) {
        const auto dist = k.graph->bfs_distances(k.graph->root());
        std::int64_t ecc = 0;
        for (auto d : dist) ecc = std::max<std::int64_t>(ecc, d);
        const std::int64_t diam_est = 2 * ecc;  // diameter <= 2 * eccentricity
        max_n = static_cast<int>(std::min<std::int64_t>(10 * diam_est * diam_est, 5'000'000));
        max_n = std::max(max_n, 16);
    }
    const auto n = static_cast<std::size_t>(k.graph->vertex_count());
    std::vector<double> cur(g.values().begin(), g.values().end());
    if (k.dirichlet)
        for (Graph::Vertex v : k.graph->frontier()) cur[static_cast<std::size_t>(v)] = 0.0;
    std::vector<double> nxt(n);
    BoundaryValueReport rep{VertexFunction::zero(k.graph)};
    double inc = std::numeric_limits<double>::infinity();
    int it = 0;
    while (it < max_n) {
        apply_step(k, cur, nxt, StepMode::Function);
        inc = 0;
        for (std::size_t i = 0; i < n; ++i) inc = std::max(inc, std::fabs(nxt[i] - cur[i]));
        cur.swap(nxt);
        ++it;
        if (inc < tol) break;
    }
    rep.iterations = it;
    rep.sup_increment_at_stop = inc;
    rep.exactness_radius = it;
    rep.converged = inc < tol;
    rep.limit = VertexFunction(k.graph, std::move(cur));
    rep.harmonicity_residual = harmonic_residual(k, rep.limit);
    return rep;
}

LohoueResult lohoue_representative(const WalkKernel& k, const VertexFunction& g, int N) {
    require_same_graph(k.graph, g.graph(), "lohoue_representative");
    // h = -Delta g = P g - g for this kernel
    const auto n = static_cast<std::size_t>(k.graph->vertex_count());
    std::vector<double> start(g.values().begin(), g.values().end());
    if (k.dirichlet)
        for (Graph::Vertex v : k.graph->frontier()) start[static_cast<std::size_t>(v)] = 0.0;
    std::vector<double> pg(n);
    apply_step(k, start, pg, StepMode::Function);
    for (std::size_t i = 0; i < n; ++i) pg[i] -= start[i];
    GreenSumReport green = green_partial_sum(k, VertexFunction(k.graph, std::move(pg)), N);
    LohoueResult res{VertexFunction(k.graph, std::move(start))};
    res.representative += green.result;
    res.increment_sup_norms = std::move(green.increment_sup_norms);
    res.increment_l2_norms = std::move(green.increment_l2_norms);
    res.diverged = green.diverged;
    return res;
}

GluedGreenExample glued_green_example(int d, int L, int green_terms, std::int64_t vertex_cap) {
    if (d < 3)
        throw std::invalid_argument(
            "glued_green_example: d >= 3 required (the Green function needs transience)");
    WindowSpec spec{d, L, vertex_cap};
    GraphPtr window = grid_window(spec);
    const WalkKernel dir = make_kernel(window, 0.0, /*dirichlet=*/true);
    const auto origin = window->root();

    std::vector<double> acc(static_cast<std::size_t>(window->vertex_count()), 0.0);
    acc[static_cast<std::size_t>(origin)] = 1.0;
    std::vector<double> cur = acc, nxt(acc.size());
    int used = 0;
    const int cap = green_terms > 0 ? green_terms : 200000;
    for (int i = 1; i <= cap; ++i) {
        apply_step(dir, cur, nxt, StepMode::Function);
        cur.swap(nxt);
        double sup = 0;
        for (std::size_t j = 0; j < acc.size(); ++j) {
            acc[j] += cur[j];
            sup = std::max(sup, std::fabs(cur[j]));
        }
        used = i;
        if (green_terms <= 0 && sup < 1e-12) break;
    }
    VertexFunction f(window, std::move(acc));

    // K = combinatorial Laplacian of f at the origin
    double nbsum = 0;
    for (Graph::Vertex y : window->neighbors(origin)) nbsum += f[y];
    const double K = static_cast<double>(window->degree(origin)) * f[origin] - nbsum;

    WindowSpec glued_spec{d, L, 2 * vertex_cap};
    GraphPtr glued = glued_double_grid(glued_spec);
    const auto N = window->vertex_count();
    std::vector<double> gv(static_cast<std::size_t>(2) * N);
    for (Graph::Vertex z = 0; z < N; ++z) {
        gv[static_cast<std::size_t>(z)] = f[z];
        gv[static_cast<std::size_t>(N + z)] = K + 2.0 * f[origin] - f[z];
    }
    VertexFunction g(glued, std::move(gv));
    return GluedGreenExample{std::move(glued), std::move(g), std::move(window), std::move(f),
                             K, used};
}

std::vector<QNormEntry> difference_integrability(const WalkKernel& k, const VertexFunction& g,
                                                 const VertexFunction& g_tilde,
                                                 std::span<const double> q_list) {
    require_same_graph(g.graph(), g_tilde.graph(), "difference_integrability");
    require_same_graph(k.graph, g.graph(), "difference_integrability");
    const Graph& graph = *k.graph;
    std::vector<double> diff;
    diff.reserve(static_cast<std::size_t>(graph.interior_count()));
    for (Graph::Vertex v = 0; v < graph.vertex_count(); ++v)
        if (!graph.in_frontier(v)) diff.push_back(g_tilde[v] - g[v]);
    std::vector<QNormEntry> out;
    for (double q : q_list) {
        if (q < 1) throw std::invalid_argument("difference_integrability: q must be >= 1");
        double norm;
        if (std::isinf(q)) {
            norm = 0;
            for (double x : diff) norm = std::max(norm, std::fabs(x));
        } else {
            double s = 0;
            for (double x : diff)
                if (x != 0.0) s += std::pow(std::fabs(x), q);
            norm = std::pow(s, 1.0 / q);
        }
        out.push_back({q, norm});
    }
    return out;
}

std::vector<QTrend> difference_trend(std::span<const QNormEntry> smaller_window,
                                     std::span<const QNormEntry> larger_window,
                                     double growth_threshold) {
    if (smaller_window.size() != larger_window.size())
        throw std::invalid_argument("difference_trend: mismatched q lists");
    std::vector<QTrend> out;
    for (std::size_t i = 0; i < smaller_window.size(); ++i) {
        if (smaller_window[i].q != larger_window[i].q)
            throw std::invalid_argument("difference_trend: mismatched q lists");
        const double a = smaller_window[i].norm;
        const double b = larger_window[i].norm;
        const bool growing = (a == 0.0) ? (b > 1e-14) : (b / a > growth_threshold);
        out.push_back({smaller_window[i].q, a, b, growing ? "growing" : "stable"});
    }
    return out;
}

} // namespace gpl
