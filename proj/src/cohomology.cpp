#include "gpl/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "gpl/calculus.hpp"

namespace gpl {

const char* to_string(TrivialityVerdict::Kind k) {
    switch (k) {
        case TrivialityVerdict::Kind::TrivialEvidence: return "trivial-evidence";
        case TrivialityVerdict::Kind::NontrivialEvidence: return "nontrivial-evidence";
        default: return "inconclusive";
    }
}

VertexFunction truncate(const VertexFunction& g, double t) {
    if (!(t > 0)) throw std::invalid_argument("truncate: t must be positive");
    std::vector<double> vals(g.values().begin(), g.values().end());
    for (double& v : vals) {
        if (v >= t)
            v = t;
        else if (v <= -t)
            v = -t;
    }
    return VertexFunction(g.graph(), std::move(vals));
}

std::vector<int> default_exhaustion_radii(const Graph& graph, int count) {
    std::int64_t reach;
    if (graph.has_frontier()) {
        reach = graph.distance_to_frontier(graph.root());
    } else {
        const auto dist = graph.bfs_distances(graph.root());
        reach = 0;
        for (auto d : dist) reach = std::max<std::int64_t>(reach, d);
    }
    std::vector<int> radii;
    for (int i = 1; i <= count; ++i) {
        const int r = static_cast<int>(i * (reach - 1) / (count + 1)) + 1;
        if (radii.empty() || r > radii.back()) radii.push_back(r);
    }
    if (radii.empty()) radii.push_back(1);
    return radii;
}

Exhaustion make_exhaustion(GraphPtr graph, std::vector<int> radii) {
    if (radii.empty()) throw std::invalid_argument("make_exhaustion: no radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 0) throw std::invalid_argument("make_exhaustion: negative radius");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw std::invalid_argument("make_exhaustion: radii must be strictly increasing");
    }
    Exhaustion ex;
    ex.graph = graph;
    ex.radii = std::move(radii);
    ex.dist_from_root = graph->bfs_distances(graph->root());
    const Graph& g = *graph;
    const auto n = g.vertex_count();
    for (int r : ex.radii) {
        Exhaustion::Layer layer;
        layer.radius = r;
        layer.component_of.assign(static_cast<std::size_t>(n), -1);
        std::vector<Graph::Vertex> queue;
        std::int32_t comp = 0;
        for (Graph::Vertex s = 0; s < n; ++s) {
            if (ex.dist_from_root[s] <= r || layer.component_of[s] >= 0) continue;
            queue.clear();
            queue.push_back(s);
            layer.component_of[s] = comp;
            std::int64_t size = 0;
            bool reaches = false;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const Graph::Vertex x = queue[head];
                ++size;
                if (g.in_frontier(x)) reaches = true;
                for (Graph::Vertex y : g.neighbors(x)) {
                    if (ex.dist_from_root[y] <= r || layer.component_of[y] >= 0) continue;
                    layer.component_of[y] = comp;
                    queue.push_back(y);
                }
            }
            layer.component_size.push_back(size);
            layer.reaches_frontier.push_back(reaches ? 1 : 0);
            ++comp;
        }
        layer.component_count = comp;
        layer.frontier_reaching_count = 0;
        for (auto f : layer.reaches_frontier) layer.frontier_reaching_count += f;
        ex.layers.push_back(std::move(layer));
    }
    return ex;
}

TrivialityVerdict constant_at_infinity(const VertexFunction& g, const Exhaustion& exhaustion,
                                       std::span<const double> eps_grid) {
    require_same_graph(g.graph(), exhaustion.graph, "constant_at_infinity");
    if (eps_grid.empty()) throw std::invalid_argument("constant_at_infinity: empty eps grid");
    TrivialityVerdict v;
    v.radii = exhaustion.radii;
    v.eps_grid.assign(eps_grid.begin(), eps_grid.end());

    const auto& dist = exhaustion.dist_from_root;
    const int r_max = exhaustion.radii.back();
    std::vector<double> outside;
    for (Graph::Vertex x = 0; x < g.size(); ++x)
        if (dist[x] > r_max) outside.push_back(g[x]);
    if (outside.empty()) {
        v.kind = TrivialityVerdict::Kind::Inconclusive;
        v.note = "exhaustion covers the whole window; nothing lies outside the largest ball";
        return v;
    }
    const auto mid = outside.begin() + static_cast<std::ptrdiff_t>(outside.size() / 2);
    std::nth_element(outside.begin(), mid, outside.end());
    v.constant = *mid;

    for (int r : exhaustion.radii) {
        double sup = 0;
        for (Graph::Vertex x = 0; x < g.size(); ++x)
            if (dist[x] > r) sup = std::max(sup, std::fabs(g[x] - v.constant));
        v.sup_outside.push_back(sup);
    }
    double min_eps = std::numeric_limits<double>::infinity();
    for (double eps : eps_grid) {
        min_eps = std::min(min_eps, eps);
        int hit = -1;
        for (std::size_t i = 0; i < v.sup_outside.size(); ++i)
            if (v.sup_outside[i] <= eps) {
                hit = exhaustion.radii[i];
                break;
            }
        v.radius_for_eps.push_back(hit);
    }
    const double last = v.sup_outside.back();
    if (last <= min_eps) {
        v.kind = TrivialityVerdict::Kind::TrivialEvidence;
        v.note = "sup |g - c| outside the balls drops below every epsilon on the grid";
    } else if (v.sup_outside.size() >= 2 &&
               last >= 0.9 * v.sup_outside[v.sup_outside.size() - 2]) {
        v.kind = TrivialityVerdict::Kind::NontrivialEvidence;
        v.note = "sup |g - c| plateaus above the smallest epsilon";
    } else {
        v.kind = TrivialityVerdict::Kind::Inconclusive;
        v.note = "sup |g - c| still decreasing when the exhaustion ran out";
    }
    return v;
}

EndsReport ends(const Exhaustion& exhaustion) {
    const Graph& g = *exhaustion.graph;
    EndsReport rep;
    if (g.has_frontier()) {
        const auto frontier_dist = g.distance_to_frontier(g.root());
        if (exhaustion.radii.back() >= frontier_dist)
            throw std::invalid_argument(
                "ends: exhaustion radii must stay below the frontier distance " +
                std::to_string(frontier_dist));
    }
    for (const auto& layer : exhaustion.layers)
        rep.counts_per_radius.push_back(layer.frontier_reaching_count);

    if (exhaustion.layers.size() < 2) {
        rep.stable = false;
        rep.note = "need at least two exhaustion radii to check stabilization";
        return rep;
    }
    const auto& inner = exhaustion.layers[exhaustion.layers.size() - 2];
    const auto& outer = exhaustion.layers.back();
    rep.count = outer.frontier_reaching_count;
    rep.stable = inner.frontier_reaching_count == outer.frontier_reaching_count;

    // each outer frontier-reaching component must land in its own inner one
    if (rep.stable) {
        std::vector<std::int32_t> image_of(static_cast<std::size_t>(outer.component_count), -1);
        std::vector<std::uint8_t> hit(static_cast<std::size_t>(inner.component_count), 0);
        for (Graph::Vertex x = 0; x < g.vertex_count(); ++x) {
            const auto oc = outer.component_of[x];
            if (oc < 0 || !outer.reaches_frontier[static_cast<std::size_t>(oc)]) continue;
            if (image_of[static_cast<std::size_t>(oc)] >= 0) continue;
            const auto ic = inner.component_of[x];  // outer region lies inside inner region
            image_of[static_cast<std::size_t>(oc)] = ic;
            if (hit[static_cast<std::size_t>(ic)]) rep.stable = false;
            hit[static_cast<std::size_t>(ic)] = 1;
        }
    }
    if (rep.stable) {
        rep.stabilization_radius = exhaustion.radii[exhaustion.radii.size() - 2];
        rep.end_representatives.assign(static_cast<std::size_t>(outer.frontier_reaching_count), {});
        std::vector<std::int32_t> slot(static_cast<std::size_t>(outer.component_count), -1);
        std::int32_t next = 0;
        for (std::int32_t c = 0; c < outer.component_count; ++c)
            if (outer.reaches_frontier[static_cast<std::size_t>(c)]) slot[c] = next++;
        for (Graph::Vertex x = 0; x < g.vertex_count(); ++x) {
            const auto oc = outer.component_of[x];
            if (oc >= 0 && slot[static_cast<std::size_t>(oc)] >= 0)
                rep.end_representatives[static_cast<std::size_t>(slot[oc])].push_back(x);
        }
    } else {
        rep.note = "component count not stabilized across the last two radii";
    }
    return rep;
}

std::pair<double, double> d1_linf_bound(const VertexFunction& g) {
    const double lhs = g.max_abs();
    const double rhs = lp_norm_edges(gradient(g), 1.0) + g.min_abs();
    return {lhs, rhs};
}

EndValues ell1_boundary_map(const VertexFunction& g, const EndsReport& ends_report,
                            double plateau_tol) {
    if (!ends_report.stable || ends_report.count < 1)
        throw std::invalid_argument("ell1_boundary_map: needs a stable ends report with >= 1 end");
    EndValues ev;
    ev.plateau_tol = plateau_tol;
    ev.plateaued = true;
    for (const auto& region : ends_report.end_representatives) {
        double sum = 0, lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (Graph::Vertex x : region) {
            sum += g[x];
            lo = std::min(lo, g[x]);
            hi = std::max(hi, g[x]);
        }
        ev.values.push_back(sum / static_cast<double>(region.size()));
        ev.spreads.push_back(hi - lo);
        if (hi - lo > plateau_tol) ev.plateaued = false;
    }
    const double base = ev.values[0];
    for (double& v : ev.values) v -= base;
    const auto [lhs, rhs] = d1_linf_bound(g);
    ev.linf_norm = lhs;
    ev.d1_bound = rhs;
    ev.bound_holds = lhs <= rhs + 1e-12;
    return ev;
}

namespace {

struct InteriorIndex {
    std::vector<std::int32_t> of_vertex;  // -1 for boundary-fixed vertices
    std::vector<Graph::Vertex> vertices;
};

InteriorIndex index_interior(const Graph& g,
                             const std::vector<std::pair<Graph::Vertex, double>>& boundary) {
    InteriorIndex idx;
    idx.of_vertex.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [v, val] : boundary) {
        g.validate_vertex(v, "boundary data");
        idx.of_vertex[static_cast<std::size_t>(v)] = -1;
    }
    for (Graph::Vertex v : g.frontier())
        if (idx.of_vertex[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("boundary data must cover every frontier vertex");
    std::int32_t next = 0;
    for (Graph::Vertex v = 0; v < g.vertex_count(); ++v) {
        if (idx.of_vertex[static_cast<std::size_t>(v)] == -1) continue;
        idx.of_vertex[static_cast<std::size_t>(v)] = next++;
        idx.vertices.push_back(v);
    }
    if (idx.vertices.empty())
        throw std::invalid_argument("boundary data fixes every vertex; nothing to solve");
    return idx;
}

std::vector<double> full_values(const Graph& g,
                                const std::vector<std::pair<Graph::Vertex, double>>& boundary) {
    std::vector<double> vals(static_cast<std::size_t>(g.vertex_count()), 0.0);
    for (const auto& [v, val] : boundary) vals[static_cast<std::size_t>(v)] = val;
    return vals;
}

}  // namespace

VertexFunction linear_harmonic_solve(const GraphPtr& graph,
                                     const std::vector<std::pair<Graph::Vertex, double>>& boundary) {
    const Graph& g = *graph;
    if (!g.has_frontier() && boundary.empty())
        throw std::invalid_argument("linear_harmonic_solve: need boundary data");
    const InteriorIndex idx = index_interior(g, boundary);
    std::vector<double> vals = full_values(g, boundary);
    const auto ni = static_cast<Eigen::Index>(idx.vertices.size());

    std::vector<Eigen::Triplet<double>> trips;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ni);
    for (Eigen::Index i = 0; i < ni; ++i) {
        const Graph::Vertex x = idx.vertices[static_cast<std::size_t>(i)];
        trips.emplace_back(i, i, static_cast<double>(g.degree(x)));
        for (Graph::Vertex y : g.neighbors(x)) {
            const auto j = idx.of_vertex[static_cast<std::size_t>(y)];
            if (j >= 0)
                trips.emplace_back(i, j, -1.0);
            else
                rhs[i] += vals[static_cast<std::size_t>(y)];
        }
    }
    Eigen::SparseMatrix<double> lap(ni, ni);
    lap.setFromTriplets(trips.begin(), trips.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("linear_harmonic_solve: factorization failed");
    const Eigen::VectorXd sol = solver.solve(rhs);
    for (Eigen::Index i = 0; i < ni; ++i)
        vals[static_cast<std::size_t>(idx.vertices[static_cast<std::size_t>(i)])] = sol[i];
    return VertexFunction(graph, std::move(vals));
}

double p_energy(const VertexFunction& h, double p) {
    double e = 0;
    const Graph& g = *h.graph();
    g.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId) {
        const double d = std::fabs(h[v] - h[u]);
        if (d != 0.0) e += std::pow(d, p);
    });
    return e;
}

namespace {

// stationarity residual sup_interior |div(mazur_p(grad h))|, computed with
// the exact (unregularized) weights
double stationarity_residual(const Graph& g, const std::vector<double>& h,
                             const InteriorIndex& idx, double p) {
    double worst = 0;
    for (Graph::Vertex x : idx.vertices) {
        double s = 0;
        for (Graph::Vertex y : g.neighbors(x)) {
            const double d = h[static_cast<std::size_t>(x)] - h[static_cast<std::size_t>(y)];
            if (d != 0.0) s += std::pow(std::fabs(d), p - 1.0) * (d > 0 ? 1.0 : -1.0);
        }
        worst = std::max(worst, std::fabs(s));
    }
    return worst;
}

// Jacobi-preconditioned conjugate gradient on the weighted interior
// Laplacian; the operator is applied matrix-free from the CSR rows.
void weighted_laplacian_cg(const Graph& g, const InteriorIndex& idx,
                           const std::vector<double>& weight,  // per canonical edge
                           const std::vector<double>& fixed,   // full values, boundary entries live
                           std::vector<double>& x,             // in/out interior solution
                           double rel_tol, int max_iter) {
    const std::size_t ni = idx.vertices.size();
    std::vector<double> diag(ni, 0.0), rhs(ni, 0.0);
    for (std::size_t i = 0; i < ni; ++i) {
        const Graph::Vertex u = idx.vertices[i];
        for (Graph::Vertex y : g.neighbors(u)) {
            const double w = weight[static_cast<std::size_t>(g.edge_index(u, y))];
            diag[i] += w;
            if (idx.of_vertex[static_cast<std::size_t>(y)] < 0)
                rhs[i] += w * fixed[static_cast<std::size_t>(y)];
        }
        if (diag[i] <= 0) diag[i] = 1e-300;
    }
    auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (std::size_t i = 0; i < ni; ++i) {
            const Graph::Vertex u = idx.vertices[i];
            double s = diag[i] * v[i];
            for (Graph::Vertex y : g.neighbors(u)) {
                const auto j = idx.of_vertex[static_cast<std::size_t>(y)];
                if (j >= 0)
                    s -= weight[static_cast<std::size_t>(g.edge_index(u, y))] *
                         v[static_cast<std::size_t>(j)];
            }
            out[i] = s;
        }
    };
    std::vector<double> r(ni), z(ni), pdir(ni), ap(ni);
    apply(x, r);
    double rhs_norm = 0;
    for (std::size_t i = 0; i < ni; ++i) {
        r[i] = rhs[i] - r[i];
        rhs_norm += rhs[i] * rhs[i];
    }
    rhs_norm = std::sqrt(rhs_norm);
    const double stop = rel_tol * std::max(rhs_norm, 1e-300);
    double rz = 0;
    for (std::size_t i = 0; i < ni; ++i) {
        z[i] = r[i] / diag[i];
        rz += r[i] * z[i];
    }
    pdir = z;
    for (int it = 0; it < max_iter; ++it) {
        double rnorm = 0;
        for (double ri : r) rnorm += ri * ri;
        if (std::sqrt(rnorm) <= stop) break;
        apply(pdir, ap);
        double pap = 0;
        for (std::size_t i = 0; i < ni; ++i) pap += pdir[i] * ap[i];
        if (pap <= 0) break;
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < ni; ++i) {
            x[i] += alpha * pdir[i];
            r[i] -= alpha * ap[i];
        }
        double rz_new = 0;
        for (std::size_t i = 0; i < ni; ++i) {
            z[i] = r[i] / diag[i];
            rz_new += r[i] * z[i];
        }
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t i = 0; i < ni; ++i) pdir[i] = z[i] + beta * pdir[i];
    }
}

double energy_of(const Graph& g, const std::vector<double>& h, double p) {
    double e = 0;
    g.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId) {
        const double d = std::fabs(h[static_cast<std::size_t>(v)] - h[static_cast<std::size_t>(u)]);
        if (d != 0.0) e += std::pow(d, p);
    });
    return e;
}

}  // namespace

PHarmonicResult p_harmonic_solve(const GraphPtr& graph, double p,
                                 const std::vector<std::pair<Graph::Vertex, double>>& boundary,
                                 double tol, int max_iterations) {
    if (!(p > 1)) throw std::invalid_argument("p_harmonic_solve: p must be > 1");
    if (!graph->has_frontier())
        throw std::invalid_argument("p_harmonic_solve: graph needs a nonempty frontier");
    const Graph& g = *graph;
    const InteriorIndex idx = index_interior(g, boundary);
    std::vector<double> h = full_values(g, boundary);

    double scale = 0;
    for (const auto& [v, val] : boundary) scale = std::max(scale, std::fabs(val));
    if (scale == 0) scale = 1;

    const auto m = static_cast<std::size_t>(g.edge_count());
    std::vector<double> weight(m, 1.0);
    std::vector<double> interior(idx.vertices.size());
    // p = 2 start: one exact weighted solve with unit weights
    for (std::size_t i = 0; i < interior.size(); ++i)
        interior[i] = h[static_cast<std::size_t>(idx.vertices[i])];
    weighted_laplacian_cg(g, idx, weight, h, interior, 1e-14,
                          10 * static_cast<int>(idx.vertices.size()) + 100);
    for (std::size_t i = 0; i < interior.size(); ++i)
        h[static_cast<std::size_t>(idx.vertices[i])] = interior[i];

    PHarmonicResult res{VertexFunction::zero(graph)};
    double eps = 1e-2 * scale;
    double energy = energy_of(g, h, p);
    int iter = 0;
    double residual = stationarity_residual(g, h, idx, p);
    while (p != 2.0 && residual > tol && iter < max_iterations) {
        ++iter;
        // reweighted quadratic model around the current iterate
        const double eps2 = eps * eps;
        double wmax = 0;
        g.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId e) {
            const double d = h[static_cast<std::size_t>(v)] - h[static_cast<std::size_t>(u)];
            const double w = std::pow(d * d + eps2, 0.5 * p - 1.0);
            weight[static_cast<std::size_t>(e)] = w;
            wmax = std::max(wmax, w);
        });
        if (wmax > 0)
            for (double& w : weight) w = std::max(w, 1e-12 * wmax);

        std::vector<double> trial = interior;
        weighted_laplacian_cg(g, idx, weight, h, trial, 1e-14,
                              10 * static_cast<int>(idx.vertices.size()) + 100);
        // backtracking line search on the exact energy
        std::vector<double> cand = h;
        double t = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            for (std::size_t i = 0; i < interior.size(); ++i)
                cand[static_cast<std::size_t>(idx.vertices[i])] =
                    (1 - t) * interior[i] + t * trial[i];
            const double e_cand = energy_of(g, cand, p);
            if (e_cand <= energy) {
                const double gain = energy - e_cand;
                for (std::size_t i = 0; i < interior.size(); ++i)
                    interior[i] = (1 - t) * interior[i] + t * trial[i];
                h = cand;
                energy = e_cand;
                accepted = gain > 0;
                break;
            }
            t *= 0.5;
        }
        residual = stationarity_residual(g, h, idx, p);
        if (!accepted) {
            if (eps <= 1e-14 * scale) break;  // quadratic model exhausted
            eps *= 0.1;
        } else if (eps > 1e-14 * scale) {
            eps *= 0.5;  // continuation toward the unregularized weights
        }
    }
    res.solution = VertexFunction(graph, std::move(h));
    res.residual = residual;
    res.energy = energy;
    res.iterations = iter;
    res.converged = residual <= tol;
    return res;
}

StitchedVerdict stitched_classification(
    const std::vector<std::pair<GraphPtr, VertexFunction>>& parts,
    std::span<const double> eps_grid, double constant_tolerance) {
    if (parts.empty()) throw std::invalid_argument("stitched_classification: no parts");
    if (eps_grid.empty()) throw std::invalid_argument("stitched_classification: empty eps grid");
    double min_eps = std::numeric_limits<double>::infinity();
    for (double e : eps_grid) min_eps = std::min(min_eps, e);
    StitchedVerdict sv;
    sv.constant_tolerance = constant_tolerance > 0 ? constant_tolerance : 2.0 * min_eps;

    bool any_nontrivial = false, any_inconclusive = false;
    for (const auto& [pg, pf] : parts) {
        auto ex = make_exhaustion(pg, default_exhaustion_radii(*pg));
        auto verdict = constant_at_infinity(pf, ex, eps_grid);
        if (verdict.kind == TrivialityVerdict::Kind::NontrivialEvidence) any_nontrivial = true;
        if (verdict.kind == TrivialityVerdict::Kind::Inconclusive) any_inconclusive = true;
        sv.part_constants.push_back(verdict.constant);
        sv.per_part.push_back(std::move(verdict));
    }
    if (any_nontrivial) {
        sv.kind = TrivialityVerdict::Kind::NontrivialEvidence;
        sv.note = "a part fails to be constant at infinity";
    } else if (any_inconclusive) {
        sv.kind = TrivialityVerdict::Kind::Inconclusive;
        sv.note = "a per-part verdict is inconclusive";
    } else {
        bool distinct = false;
        for (std::size_t i = 0; i < sv.part_constants.size(); ++i)
            for (std::size_t j = i + 1; j < sv.part_constants.size(); ++j)
                if (std::fabs(sv.part_constants[i] - sv.part_constants[j]) > sv.constant_tolerance)
                    distinct = true;
        sv.kind = distinct ? TrivialityVerdict::Kind::NontrivialEvidence
                           : TrivialityVerdict::Kind::TrivialEvidence;
        sv.note = distinct ? "all parts plateau, but at distinct constants"
                           : "all parts plateau at one common constant";
    }
    return sv;
}

StitchedVerdict stitched_classification(const StitchResult& stitched, const VertexFunction& g,
                                        std::span<const double> eps_grid,
                                        double constant_tolerance) {
    std::vector<std::pair<GraphPtr, VertexFunction>> parts;
    for (std::size_t i = 0; i < stitched.parts.size(); ++i)
        parts.emplace_back(stitched.parts[i],
                           restrict_to_part(stitched, g, static_cast<int>(i)));
    return stitched_classification(parts, eps_grid, constant_tolerance);
}

LpqReport lpq_difference_check(double p, int d, std::vector<LpqWindowSample> windows,
                               double growth_threshold) {
    if (windows.size() < 2)
        throw std::invalid_argument("lpq_difference_check: need at least two windows");
    LpqReport rep;
    rep.p = p;
    rep.d = d;
    rep.q_threshold = (d > 2 * p) ? d * p / (d - 2 * p)
                                  : std::numeric_limits<double>::infinity();
    for (const auto& e : windows.front().norms) rep.q_list.push_back(e.q);
    for (std::size_t qi = 0; qi < rep.q_list.size(); ++qi) {
        bool growing = false;
        for (std::size_t w = 0; w + 1 < windows.size(); ++w) {
            const double a = windows[w].norms.at(qi).norm;
            const double b = windows[w + 1].norms.at(qi).norm;
            if (a == 0.0 ? b > 1e-14 : b / a > growth_threshold) growing = true;
        }
        rep.trends.push_back(growing ? "growing" : "stable");
    }
    rep.windows = std::move(windows);
    return rep;
}

} // namespace gpl
