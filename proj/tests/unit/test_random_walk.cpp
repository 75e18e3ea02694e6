#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "gpl/calculus.hpp"
#include "gpl/generators.hpp"
#include "gpl/random_walk.hpp"
#include "testutil.hpp"

using namespace gpl;

namespace {

GraphPtr cycle4() {
    return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 0);
}

double binomial_prob(int n, int k) {  // C(n,k) / 2^n
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
    return r * std::pow(0.5, n);
}

}  // namespace

TEST_CASE("kernel validation") {
    auto c = cycle4();
    CHECK_THROWS(make_kernel(c, -0.1));
    CHECK_THROWS(make_kernel(c, 1.0));
    CHECK_THROWS(make_kernel(c, 0.0, true));  // no frontier
}

TEST_CASE("single steps") {
    auto c = cycle4();
    auto k = make_kernel(c);
    auto m = step(k, ProbabilityMeasure::delta(c, 0));
    CHECK(m.mass_at(0) == 0.0);
    CHECK(m.mass_at(1) == doctest::Approx(0.5));
    CHECK(m.mass_at(3) == doctest::Approx(0.5));

    // laziness is a convex combination with the plain step
    auto lazy = make_kernel(c, 0.5);
    std::mt19937_64 rng(3);
    auto g = gpltest::random_connected_graph(rng, 3, 30);
    auto k0 = make_kernel(g);
    auto kh = make_kernel(g, 0.5);
    auto mu = ProbabilityMeasure::delta(g, 0);
    auto plain = step(k0, mu);
    auto half = step(kh, mu);
    for (Graph::Vertex v = 0; v < g->vertex_count(); ++v)
        CHECK(half.mass_at(v) ==
              doctest::Approx(0.5 * mu.mass_at(v) + 0.5 * plain.mass_at(v)).epsilon(1e-12));

    auto p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}}, 0);
    auto mp = step(make_kernel(p3), ProbabilityMeasure::delta(p3, 1));
    CHECK(mp.mass_at(0) == doctest::Approx(0.5));
    CHECK(mp.mass_at(1) == 0.0);
    CHECK(mp.mass_at(2) == doctest::Approx(0.5));
}

TEST_CASE("n-step distributions") {
    auto w = grid_window({1, 10});
    auto k = make_kernel(w);
    auto d = n_step(k, w->root(), 2);
    CHECK(d.exactness_radius == 10);
    CHECK(d.measure.mass_at(w->root()) == doctest::Approx(0.5));
    CHECK(d.measure.mass_at(w->root() - 2) == doctest::Approx(0.25));
    CHECK(d.measure.mass_at(w->root() + 2) == doctest::Approx(0.25));

    auto d0 = n_step(k, 3, 0);
    CHECK(d0.measure.support_size() == 1);
    CHECK(d0.measure.mass_at(3) == 1.0);

    // support stays inside the ball, and the 1d window matches the binomial
    for (int n : {3, 6, 9}) {
        auto dn = n_step(k, w->root(), n);
        const auto dist = w->bfs_distances(w->root());
        for (const auto& [v, mass] : dn.measure.entries()) {
            CHECK(dist[v] <= n);
            const int offset = v - w->root();
            CHECK(mass == doctest::Approx(binomial_prob(n, (n + offset) / 2)).epsilon(1e-12));
        }
        CHECK(dn.measure.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("truncation exactness across window sizes") {
    auto small = grid_window({2, 6});
    auto large = grid_window({2, 9});
    auto ks = make_kernel(small);
    auto kl = make_kernel(large);
    const int n = 5;  // below the small window's frontier distance
    auto ms = n_step(ks, small->root(), n).measure;
    auto ml = n_step(kl, large->root(), n).measure;
    // map ids between the windows via coordinate offsets
    const int side_s = 13, side_l = 19;
    for (const auto& [v, mass] : ms.entries()) {
        const int cx = static_cast<int>(v) % side_s - 6;
        const int cy = static_cast<int>(v) / side_s - 6;
        const Graph::Vertex vl = (cy + 9) * side_l + (cx + 9);
        CHECK(mass == doctest::Approx(ml.mass_at(vl)).epsilon(1e-14));
    }
}

TEST_CASE("convolution is the adjoint route") {
    auto c = cycle4();
    auto k = make_kernel(c);
    VertexFunction g(c, {1, 0, 0, 0});
    auto r0 = convolve(k, g, 0);
    for (int v = 0; v < 4; ++v) CHECK(r0[v] == g[v]);

    // direct summation oracle: result(x) = sum_y g(y) P^(1)_x(y) = P^(1)_x(0)
    auto r1 = convolve(k, g, 1);
    CHECK(r1[0] == doctest::Approx(0.0));
    CHECK(r1[1] == doctest::Approx(0.5));
    CHECK(r1[2] == doctest::Approx(0.0));
    CHECK(r1[3] == doctest::Approx(0.5));

    // constants are fixed points for every laziness
    std::mt19937_64 rng(7);
    auto rg = gpltest::random_connected_graph(rng, 3, 40);
    for (double alpha : {0.0, 0.3, 0.5}) {
        auto kk = make_kernel(rg, alpha);
        auto cst = convolve(kk, VertexFunction::constant(rg, 2.5), 7);
        for (Graph::Vertex v = 0; v < rg->vertex_count(); ++v)
            CHECK(cst[v] == doctest::Approx(2.5).epsilon(1e-12));
    }

    // <P^n delta_x, g> computed through the measure and the function routes
    for (int trial = 0; trial < 30; ++trial) {
        auto g2 = gpltest::random_connected_graph(rng, 2, 40);
        auto k2 = make_kernel(g2, trial % 2 ? 0.5 : 0.0);
        auto fn = gpltest::random_function(g2, rng);
        const auto x = static_cast<Graph::Vertex>(
            std::uniform_int_distribution<int>(0, g2->vertex_count() - 1)(rng));
        const int n = std::uniform_int_distribution<int>(0, 8)(rng);
        const double via_measure = n_step(k2, x, n).measure.integrate(fn);
        const double via_function = convolve(k2, fn, n)[x];
        CHECK(via_measure == doctest::Approx(via_function).epsilon(1e-11));
    }
}

TEST_CASE("norm sequences") {
    auto c = cycle4();
    auto k = make_kernel(c);
    auto seq = norm_sequence(k, 0, 2.0, 1);
    CHECK(seq.norms[0] == doctest::Approx(1.0));  // delta mass has every norm 1
    CHECK(seq.norms[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(seq.partial_sums[1] == doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)));

    auto seq_inf = norm_sequence(k, 0, std::numeric_limits<double>::infinity(), 3);
    CHECK(seq_inf.norms[0] == 1.0);

    // decreasing sup-probability over the exact window (even steps)
    auto w = grid_window({3, 6});
    auto kw = make_kernel(w);
    auto s = norm_sequence(kw, w->root(), std::numeric_limits<double>::infinity(), 5);
    CHECK(s.window_exact);
    CHECK(s.sup_probs[2] < s.sup_probs[0]);
    CHECK(s.sup_probs[4] < s.sup_probs[2]);
}

TEST_CASE("interpolation bound") {
    auto c = cycle4();
    auto k = make_kernel(c);
    auto [a0, b0] = interpolation_bound(k, 0, 2.0, 0);
    CHECK(a0 == doctest::Approx(1.0));
    CHECK(b0 == doctest::Approx(1.0));

    auto [a1, b1] = interpolation_bound(k, 0, 2.0, 1);
    CHECK(a1 == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(b1 == doctest::Approx(std::sqrt(0.5)));

    auto w = grid_window({2, 8});
    auto kw = make_kernel(w);
    auto [a6, b6] = interpolation_bound(kw, w->root(), 2.0, 6);
    CHECK(a6 < b6);  // strict away from the delta case

    // monotone interpolation over random cases
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = gpltest::random_connected_graph(rng, 2, 40);
        auto kg = make_kernel(g);
        const int n = std::uniform_int_distribution<int>(0, 6)(rng);
        for (double pp : {1.5, 2.0, 4.0}) {
            auto [act, bnd] = interpolation_bound(kg, 0, pp, n);
            CHECK(act <= bnd + 1e-12);
        }
    }
}

TEST_CASE("decay fits") {
    // synthetic pure power law
    std::vector<std::pair<int, double>> pts;
    for (int n = 4; n <= 40; n += 2) pts.emplace_back(n, 3.7 * std::pow(n, -2.5));
    auto fit = fit_decay(pts, 4, 40, std::nullopt);
    CHECK(fit.exponent == doctest::Approx(-2.5).epsilon(1e-9));
    CHECK(fit.constant == doctest::Approx(3.7).epsilon(1e-9));
    CHECK(fit.residual < 1e-12);

    CHECK_THROWS(fit_decay(pts, 4, 10, std::nullopt));  // fewer than 5 points

    // 1d window: exponent -1/2, sampled on even steps
    auto w = grid_window({1, 40});
    auto k = make_kernel(w);
    auto seq = norm_sequence(k, w->root(), 2.0, 38);
    std::vector<std::pair<int, double>> sup;
    for (int n = 0; n <= 38; n += 2) sup.emplace_back(n, seq.sup_probs[n]);
    auto f1 = fit_decay(sup, 10, 38, 2 * 40 - 2);
    CHECK(f1.window_exact);
    CHECK(f1.exponent == doctest::Approx(-0.5).epsilon(0.2));
    CHECK(std::fabs(f1.exponent + 0.5) < 0.1);
}

TEST_CASE("dirichlet spectral norm") {
    // path window: interior of size 2L-1, top singular value cos(pi/(2L))
    for (int L : {6, 10}) {
        auto w = grid_window({1, L});
        auto est = spectral_norm_estimate(make_kernel(w));
        CHECK(est.estimated);
        CHECK(est.converged);
        CHECK(est.value == doctest::Approx(std::cos(M_PI / (2.0 * L))).epsilon(1e-8));
        CHECK(est.value < 1.0);
    }
    // estimates approach 1 from below as the window grows
    auto e6 = spectral_norm_estimate(make_kernel(grid_window({1, 6})));
    auto e12 = spectral_norm_estimate(make_kernel(grid_window({1, 12})));
    CHECK(e6.value < e12.value);
    CHECK(e12.value < 1.0);

    // tree balls approach the 3-regular-tree value 2*sqrt(2)/3 from below,
    // with the gap shrinking as the depth grows
    const double tree_norm = 2.0 * std::sqrt(2.0) / 3.0;
    double prev_gap = 1.0;
    for (int depth : {4, 6, 8}) {
        auto est = spectral_norm_estimate(make_kernel(tree_ball(2, depth)));
        CHECK(est.value <= 0.95);
        CHECK(est.value < tree_norm);
        CHECK(tree_norm - est.value < prev_gap);
        prev_gap = tree_norm - est.value;
    }
    CHECK(prev_gap < 0.1);

    // frontier-free: exact value 1 reported, not estimated
    auto k5 = Graph::from_edge_list(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 0);
    auto est = spectral_norm_estimate(make_kernel(k5));
    CHECK(est.value == 1.0);
    CHECK(!est.estimated);

    // mixed-frontier complete bipartite graph against a dense SVD oracle
    std::vector<std::pair<Graph::Vertex, Graph::Vertex>> kb;
    for (Graph::Vertex a = 0; a < 3; ++a)
        for (Graph::Vertex b = 3; b < 6; ++b) kb.emplace_back(a, b);
    auto g = Graph::from_edge_list(6, kb, 0, {1, 2, 5});
    auto kest = spectral_norm_estimate(make_kernel(g));
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(6, 6);
    for (Graph::Vertex x = 0; x < 6; ++x) {
        if (g->in_frontier(x)) continue;
        for (Graph::Vertex y : g->neighbors(x))
            if (!g->in_frontier(y)) B(x, y) = 1.0 / g->degree(x);
    }
    const double oracle = B.jacobiSvd().singularValues()[0];
    CHECK(oracle > 0.0);
    CHECK(oracle < 1.0);
    CHECK(kest.value == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("green partial sums") {
    auto w = grid_window({1, 8});
    auto dir = make_kernel(w, 0.0, true);

    auto zero = green_partial_sum(dir, VertexFunction::zero(w), 30);
    CHECK(!zero.diverged);
    for (auto v : zero.result.values()) CHECK(v == 0.0);

    // against a dense linear solve of (I - P_dirichlet) u = h
    auto h = VertexFunction::delta(w, w->root());
    auto green = green_partial_sum(dir, h, 4000);
    CHECK(!green.diverged);
    const int n = w->vertex_count();
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
    for (Graph::Vertex x = 0; x < n; ++x) {
        if (w->in_frontier(x)) continue;
        for (Graph::Vertex y : w->neighbors(x))
            if (!w->in_frontier(y)) A(x, y) -= 1.0 / w->degree(x);
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs[w->root()] = 1.0;
    // dirichlet rows for frontier vertices: u = 0 there
    for (auto f : w->frontier()) {
        A.row(f).setZero();
        A(f, f) = 1.0;
    }
    Eigen::VectorXd u = A.fullPivLu().solve(rhs);
    for (Graph::Vertex v = 0; v < n; ++v)
        CHECK(green.result[v] == doctest::Approx(u[v]).epsilon(1e-9));

    // stochastic kernel with constant input: increments never decrease
    auto c4 = cycle4();
    auto ks = make_kernel(c4);
    auto div = green_partial_sum(ks, VertexFunction::constant(c4, 1.0), 60);
    CHECK(div.diverged);
}
