#include "gpl/random_walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "gpl/calculus.hpp"

namespace gpl {

WalkKernel make_kernel(GraphPtr graph, double alpha, bool dirichlet) {
    if (!graph) throw std::invalid_argument("make_kernel: null graph");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("make_kernel: laziness must lie in [0,1)");
    if (graph->min_degree() < 1)
        throw std::invalid_argument("make_kernel: the walk needs every vertex to have a neighbor");
    if (dirichlet && !graph->has_frontier())
        throw std::invalid_argument("make_kernel: dirichlet mode needs a nonempty frontier");
    return WalkKernel{std::move(graph), alpha, dirichlet};
}

void apply_step(const WalkKernel& k, std::span<const double> in, std::span<double> out,
                StepMode mode) {
    const Graph& g = *k.graph;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (in.size() != n || out.size() != n || in.data() == out.data())
        throw std::invalid_argument("apply_step: bad buffer sizes or aliasing");
    const double keep = k.alpha;
    const double move = 1.0 - k.alpha;
    if (mode == StepMode::Function) {
        for (std::size_t x = 0; x < n; ++x) {
            if (k.dirichlet && g.in_frontier(static_cast<Graph::Vertex>(x))) {
                out[x] = 0.0;
                continue;
            }
            double s = 0;
            const auto nb = g.neighbors(static_cast<Graph::Vertex>(x));
            for (Graph::Vertex y : nb) s += in[static_cast<std::size_t>(y)];
            out[x] = keep * in[x] + move * s / static_cast<double>(nb.size());
        }
    } else {
        std::fill(out.begin(), out.end(), 0.0);
        for (std::size_t x = 0; x < n; ++x) {
            const double m = in[x];
            if (m == 0.0) continue;
            const auto xv = static_cast<Graph::Vertex>(x);
            if (keep != 0.0 && !(k.dirichlet && g.in_frontier(xv))) out[x] += keep * m;
            const auto nb = g.neighbors(xv);
            const double w = move * m / static_cast<double>(nb.size());
            for (Graph::Vertex y : nb) {
                if (k.dirichlet && g.in_frontier(y)) continue;
                out[static_cast<std::size_t>(y)] += w;
            }
        }
    }
}

MeasureIteration::MeasureIteration(const WalkKernel& k, Graph::Vertex x) : kernel_(k) {
    k.graph->validate_vertex(x, "MeasureIteration");
    const auto n = static_cast<std::size_t>(k.graph->vertex_count());
    cur_.assign(n, 0.0);
    nxt_.assign(n, 0.0);
    cur_[static_cast<std::size_t>(x)] = 1.0;
    active_.push_back(x);
}

void MeasureIteration::advance() {
    const Graph& g = *kernel_.graph;
    const double keep = kernel_.alpha;
    const double move = 1.0 - kernel_.alpha;
    const bool dirichlet = kernel_.dirichlet;
    auto add = [&](Graph::Vertex v, double val) {
        auto& slot = nxt_[static_cast<std::size_t>(v)];
        if (slot == 0.0) nxt_active_.push_back(v);
        slot += val;
    };
    for (Graph::Vertex x : active_) {
        const double m = cur_[static_cast<std::size_t>(x)];
        if (m == 0.0) continue;
        if (keep != 0.0) add(x, keep * m);
        const auto nb = g.neighbors(x);
        const double w = move * m / static_cast<double>(nb.size());
        for (Graph::Vertex y : nb) {
            if (dirichlet && g.in_frontier(y)) continue;
            add(y, w);
        }
    }
    for (Graph::Vertex x : active_) cur_[static_cast<std::size_t>(x)] = 0.0;
    cur_.swap(nxt_);
    active_.swap(nxt_active_);
    nxt_active_.clear();
    ++step_;
}

double MeasureIteration::sup() const {
    double m = 0;
    for (Graph::Vertex x : active_) m = std::max(m, cur_[static_cast<std::size_t>(x)]);
    return m;
}

double MeasureIteration::lp_norm(double p) const {
    if (p < 1) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (std::isinf(p)) return sup();
    double s = 0;
    if (p == 1.0) {
        for (Graph::Vertex x : active_) s += cur_[static_cast<std::size_t>(x)];
        return s;
    }
    for (Graph::Vertex x : active_) s += std::pow(cur_[static_cast<std::size_t>(x)], p);
    return std::pow(s, 1.0 / p);
}

double MeasureIteration::total_mass() const {
    double s = 0;
    for (Graph::Vertex x : active_) s += cur_[static_cast<std::size_t>(x)];
    return s;
}

ProbabilityMeasure MeasureIteration::to_measure() const {
    std::vector<std::pair<Graph::Vertex, double>> entries;
    entries.reserve(active_.size());
    for (Graph::Vertex x : active_) {
        const double m = cur_[static_cast<std::size_t>(x)];
        if (m != 0.0) entries.emplace_back(x, m);
    }
    return ProbabilityMeasure(kernel_.graph, std::move(entries));
}

ProbabilityMeasure step(const WalkKernel& k, const ProbabilityMeasure& m) {
    if (k.dirichlet)
        throw std::invalid_argument("step: dirichlet kernels do not conserve mass");
    require_same_graph(k.graph, m.graph(), "step");
    const Graph& g = *k.graph;
    std::vector<std::pair<Graph::Vertex, double>> out;
    // scatter into a small map keyed by vertex, built from the sparse input
    std::vector<std::pair<Graph::Vertex, double>> contrib;
    for (const auto& [x, mass] : m.entries()) {
        if (k.alpha != 0.0) contrib.emplace_back(x, k.alpha * mass);
        const auto nb = g.neighbors(x);
        const double w = (1.0 - k.alpha) * mass / static_cast<double>(nb.size());
        for (Graph::Vertex y : nb) contrib.emplace_back(y, w);
    }
    std::sort(contrib.begin(), contrib.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [v, val] : contrib) {
        if (!out.empty() && out.back().first == v)
            out.back().second += val;
        else
            out.emplace_back(v, val);
    }
    return ProbabilityMeasure(k.graph, std::move(out));
}

WalkDistribution n_step(const WalkKernel& k, Graph::Vertex x, int n) {
    if (n < 0) throw std::invalid_argument("n_step: n must be >= 0");
    if (k.dirichlet)
        throw std::invalid_argument("n_step: dirichlet kernels do not conserve mass");
    MeasureIteration it(k, x);
    for (int i = 0; i < n; ++i) it.advance();
    return WalkDistribution{it.to_measure(), n, x, k.graph->distance_to_frontier(x)};
}

VertexFunction convolve(const WalkKernel& k, const VertexFunction& g, int n) {
    if (n < 0) throw std::invalid_argument("convolve: n must be >= 0");
    require_same_graph(k.graph, g.graph(), "convolve");
    std::vector<double> cur(g.values().begin(), g.values().end());
    std::vector<double> nxt(cur.size());
    for (int i = 0; i < n; ++i) {
        apply_step(k, cur, nxt, StepMode::Function);
        cur.swap(nxt);
    }
    return VertexFunction(k.graph, std::move(cur));
}

NormSequence norm_sequence(const WalkKernel& k, Graph::Vertex x, double p_prime, int N) {
    if (N < 0) throw std::invalid_argument("norm_sequence: N must be >= 0");
    if (k.dirichlet)
        throw std::invalid_argument("norm_sequence: dirichlet kernels do not conserve mass");
    NormSequence out;
    out.exactness_radius = k.graph->distance_to_frontier(x);
    out.window_exact = N < out.exactness_radius;
    MeasureIteration it(k, x);
    double sum = 0;
    for (int i = 0; i <= N; ++i) {
        if (i > 0) it.advance();
        const double nrm = it.lp_norm(p_prime);
        sum += nrm;
        out.norms.push_back(nrm);
        out.partial_sums.push_back(sum);
        out.sup_probs.push_back(it.sup());
    }
    return out;
}

std::pair<double, double> interpolation_bound(const WalkKernel& k, Graph::Vertex x,
                                              double p_prime, int n) {
    if (!(p_prime > 1.0) || std::isinf(p_prime))
        throw std::invalid_argument("interpolation_bound: need 1 < p' < infinity");
    const double p = conjugate_exponent(p_prime);
    MeasureIteration it(k, x);
    for (int i = 0; i < n; ++i) it.advance();
    const double actual = it.lp_norm(p_prime);
    const double bound = std::pow(it.lp_norm(1.0), 1.0 / p_prime) * std::pow(it.sup(), 1.0 / p);
    return {actual, bound};
}

DecayFit fit_decay(std::span<const std::pair<int, double>> seq, int n0, int n1,
                   std::optional<std::int64_t> exact_horizon) {
    std::vector<std::pair<double, double>> pts;  // (log n, log s)
    for (const auto& [n, s] : seq)
        if (n >= n0 && n <= n1 && n > 0 && s > 0) pts.emplace_back(std::log(n), std::log(s));
    if (pts.size() < 5)
        throw std::invalid_argument("fit_decay: window holds fewer than 5 usable points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [lx, ly] : pts) {
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double np = static_cast<double>(pts.size());
    const double slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / np;
    double rss = 0;
    for (auto [lx, ly] : pts) {
        const double r = ly - (slope * lx + intercept);
        rss += r * r;
    }
    DecayFit fit;
    fit.exponent = slope;
    fit.constant = std::exp(intercept);
    fit.n0 = n0;
    fit.n1 = n1;
    fit.points = static_cast<int>(pts.size());
    fit.residual = std::sqrt(rss / np);
    fit.window_exact = !exact_horizon || n1 <= *exact_horizon;
    return fit;
}

SpectralEstimate spectral_norm_estimate(const WalkKernel& k) {
    const Graph& g = *k.graph;
    SpectralEstimate est;
    if (!g.has_frontier()) {
        // stochastic operator on a finite graph: norm exactly 1
        est.value = 1.0;
        est.estimated = false;
        return est;
    }
    WalkKernel dir = k;
    dir.dirichlet = true;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<double> v(n, 0.0), w(n), u(n);
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    double norm = 0;
    for (std::size_t x = 0; x < n; ++x)
        if (!g.in_frontier(static_cast<Graph::Vertex>(x))) {
            v[x] = unif(rng);
            norm += v[x] * v[x];
        }
    norm = std::sqrt(norm);
    for (auto& val : v) val /= norm;

    est.estimated = true;
    est.converged = false;
    double prev_sigma = -1;
    const int cap = 200000;
    for (int iter = 1; iter <= cap; ++iter) {
        apply_step(dir, v, w, StepMode::Function);  // B v
        apply_step(dir, w, u, StepMode::Measure);   // B^T B v
        double lambda = 0;
        for (std::size_t i = 0; i < n; ++i) lambda += v[i] * u[i];
        const double sigma = std::sqrt(std::max(lambda, 0.0));
        est.value = sigma;
        est.iterations = iter;
        if (prev_sigma >= 0 && std::fabs(sigma - prev_sigma) < 1e-10) {
            est.converged = true;
            break;
        }
        prev_sigma = sigma;
        double un = 0;
        for (double x : u) un += x * x;
        un = std::sqrt(un);
        if (un == 0.0) {  // nilpotent direction; the norm estimate is 0
            est.value = 0.0;
            est.converged = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / un;
    }
    return est;
}

GreenSumReport green_partial_sum(const WalkKernel& k, const VertexFunction& h, int N,
                                 int divergence_horizon) {
    if (N < 0) throw std::invalid_argument("green_partial_sum: N must be >= 0");
    if (divergence_horizon < 1)
        throw std::invalid_argument("green_partial_sum: horizon must be >= 1");
    require_same_graph(k.graph, h.graph(), "green_partial_sum");
    const auto n = static_cast<std::size_t>(k.graph->vertex_count());
    std::vector<double> acc(h.values().begin(), h.values().end());
    std::vector<double> cur = acc, nxt(n);
    GreenSumReport rep{VertexFunction::zero(k.graph)};
    for (int i = 1; i <= N; ++i) {
        apply_step(k, cur, nxt, StepMode::Function);
        cur.swap(nxt);
        double sup = 0, l2 = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc[j] += cur[j];
            sup = std::max(sup, std::fabs(cur[j]));
            l2 += cur[j] * cur[j];
        }
        rep.increment_sup_norms.push_back(sup);
        rep.increment_l2_norms.push_back(std::sqrt(l2));
    }
    // block-minimum comparison over the trailing horizons
    const auto& inc = rep.increment_sup_norms;
    const int hzn = divergence_horizon;
    if (static_cast<int>(inc.size()) >= 2 * hzn) {
        double m1 = std::numeric_limits<double>::infinity();
        double m2 = std::numeric_limits<double>::infinity();
        for (int i = 0; i < hzn; ++i) {
            m1 = std::min(m1, inc[inc.size() - 2 * static_cast<std::size_t>(hzn) + i]);
            m2 = std::min(m2, inc[inc.size() - static_cast<std::size_t>(hzn) + i]);
        }
        rep.diverged = m2 > 0 && m2 >= m1 * (1.0 - 1e-12);
    }
    rep.result = VertexFunction(k.graph, std::move(acc));
    return rep;
}

} // namespace gpl
