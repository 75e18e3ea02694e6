#include <doctest.h>

#include <cmath>
#include <random>

#include "gpl/boundary.hpp"
#include "gpl/calculus.hpp"
#include "gpl/cohomology.hpp"
#include "gpl/generators.hpp"
#include "testutil.hpp"

using namespace gpl;

TEST_CASE("truncation") {
    auto p = Graph::from_edge_list(3, {{0, 1}, {1, 2}}, 0);
    VertexFunction g(p, {0, 1, 3});
    auto g2 = truncate(g, 2.0);
    CHECK(g2[0] == 0.0);
    CHECK(g2[1] == 1.0);
    CHECK(g2[2] == 2.0);

    auto g9 = truncate(g, 9.0);
    for (int v = 0; v < 3; ++v) CHECK(g9[v] == g[v]);
    CHECK_THROWS(truncate(g, 0.0));
    CHECK_THROWS(truncate(g, -1.0));

    // truncation never increases gradient norms, and the deficiency
    // ||grad(g - g_t)||_p shrinks to zero at t = ||g||_inf
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto rg = gpltest::random_connected_graph(rng, 3, 40);
        auto f = gpltest::random_function(rg, rng, 2.0);
        const double top = f.max_abs();
        for (double p_exp : {1.0, 2.0, 3.0}) {
            const double full = lp_norm_edges(gradient(f), p_exp);
            double prev = std::numeric_limits<double>::infinity();
            for (double t : {0.25 * top, 0.5 * top, 0.75 * top, top}) {
                if (t <= 0) continue;
                auto ft = truncate(f, t);
                CHECK(lp_norm_edges(gradient(ft), p_exp) <= full + 1e-12);
                const double deficiency = lp_norm_edges(gradient(f - ft), p_exp);
                CHECK(deficiency <= prev + 1e-12);
                prev = deficiency;
            }
            CHECK(prev == 0.0);  // t = ||g||_inf reproduces g
        }
    }
}

TEST_CASE("exhaustion layers partition the complement") {
    auto w = grid_window({2, 6});
    CHECK_THROWS(make_exhaustion(w, {}));
    CHECK_THROWS(make_exhaustion(w, {3, 3}));
    auto ex = make_exhaustion(w, {1, 3, 5});
    for (const auto& layer : ex.layers) {
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(layer.component_count), 0);
        for (Graph::Vertex v = 0; v < w->vertex_count(); ++v) {
            if (ex.dist_from_root[v] <= layer.radius)
                CHECK(layer.component_of[v] == -1);
            else {
                REQUIRE(layer.component_of[v] >= 0);
                sizes[static_cast<std::size_t>(layer.component_of[v])]++;
            }
        }
        for (std::size_t c = 0; c < sizes.size(); ++c)
            CHECK(sizes[c] == layer.component_size[c]);
    }
}

TEST_CASE("constant at infinity") {
    auto w = grid_window({2, 8});
    auto ex = make_exhaustion(w, {2, 4, 6});
    const double eps[] = {1e-1, 1e-2};

    auto vc = constant_at_infinity(VertexFunction::constant(w, 3.25), ex, eps);
    CHECK(vc.kind == TrivialityVerdict::Kind::TrivialEvidence);
    CHECK(vc.constant == doctest::Approx(3.25));
    CHECK(vc.radius_for_eps[0] == 2);

    // finitely supported: constant 0 outside some ball
    auto delta = VertexFunction::delta(w, w->root());
    auto vd = constant_at_infinity(delta, ex, eps);
    CHECK(vd.kind == TrivialityVerdict::Kind::TrivialEvidence);
    CHECK(vd.constant == 0.0);

    // the glued example has two plateaus: no single constant works
    auto glued = glued_green_example(3, 6, 0);
    auto exg = make_exhaustion(glued.graph, {2, 3, 4});
    auto vg = constant_at_infinity(glued.g, exg, eps);
    CHECK(vg.kind == TrivialityVerdict::Kind::NontrivialEvidence);
    CHECK(vg.sup_outside.back() > 1.0);
}

TEST_CASE("ends") {
    auto path = grid_window({1, 16});
    auto e1 = ends(make_exhaustion(path, {4, 8, 12}));
    CHECK(e1.stable);
    CHECK(e1.count == 2);
    CHECK(e1.stabilization_radius == 8);
    CHECK(e1.end_representatives.size() == 2);

    auto plane = grid_window({2, 8});
    auto e2 = ends(make_exhaustion(plane, {2, 4, 6}));
    CHECK(e2.stable);
    CHECK(e2.count == 1);

    auto glued = glued_double_grid({2, 6});
    auto e3 = ends(make_exhaustion(glued, {2, 3, 4}));
    CHECK(e3.stable);
    CHECK(e3.count == 2);

    // radii reaching the frontier are rejected
    CHECK_THROWS(ends(make_exhaustion(path, {4, 16})));

    // an H shape: the component through the second hub splits as the ball
    // grows, so the count changes between the last two radii
    std::vector<std::pair<Graph::Vertex, Graph::Vertex>> hgraph{{0, 1}};
    auto arm = [&](Graph::Vertex hub, Graph::Vertex first) {
        hgraph.emplace_back(hub, first);
        for (Graph::Vertex v = first; v < first + 5; ++v) hgraph.emplace_back(v, v + 1);
    };
    arm(0, 2);   // 2..7
    arm(0, 8);   // 8..13
    arm(1, 14);  // 14..19
    arm(1, 20);  // 20..25
    auto sp = Graph::from_edge_list(26, hgraph, 0, {7, 13, 19, 25});
    auto esp = ends(make_exhaustion(sp, {0, 2}));
    CHECK(!esp.stable);
    CHECK(esp.counts_per_radius[0] == 3);
    CHECK(esp.counts_per_radius[1] == 4);

    // frontier-free graphs have no frontier-reaching components at all
    auto torus = torus_window({2, 3});
    auto et = ends(make_exhaustion(torus, {1, 2}));
    CHECK(et.count == 0);
}

TEST_CASE("ell1 boundary map") {
    auto glued = glued_double_grid({2, 6});
    const auto n = glued->vertex_count() / 2;
    auto er = ends(make_exhaustion(glued, {2, 3, 4}));
    REQUIRE(er.stable);
    REQUIRE(er.count == 2);

    // constant: all end values 0 after normalization
    auto vc = ell1_boundary_map(VertexFunction::constant(glued, 7.0), er);
    for (double v : vc.values) CHECK(v == 0.0);
    CHECK(vc.plateaued);
    CHECK(vc.bound_holds);

    // step function 0 on copy 1, 1 on copy 2: beta = (0, 1)
    std::vector<double> step_vals(static_cast<std::size_t>(glued->vertex_count()), 0.0);
    for (Graph::Vertex v = n; v < glued->vertex_count(); ++v) step_vals[v] = 1.0;
    VertexFunction step_fn(glued, std::move(step_vals));
    auto vs = ell1_boundary_map(step_fn, er);
    CHECK(vs.plateaued);
    CHECK(vs.values[0] == 0.0);
    CHECK(std::fabs(vs.values[1]) == doctest::Approx(1.0));
    CHECK(vs.bound_holds);

    // finitely supported: beta = 0
    auto vd = ell1_boundary_map(VertexFunction::delta(glued, glued->root()), er);
    for (double v : vd.values) CHECK(v == 0.0);

    // beta ignores perturbations supported inside the smallest ball
    std::mt19937_64 rng(5);
    auto g = gpltest::random_function(glued, rng);
    auto gv = ell1_boundary_map(g, er, 1e9);  // plateau tolerance irrelevant here
    auto perturbed = g + 3.0 * VertexFunction::delta(glued, glued->root());
    auto pv = ell1_boundary_map(perturbed, er, 1e9);
    for (std::size_t i = 0; i < gv.values.size(); ++i)
        CHECK(gv.values[i] == doctest::Approx(pv.values[i]).epsilon(1e-12));
}

TEST_CASE("d1 implies l-infinity bound") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gpltest::random_connected_graph(rng, 2, 40);
        auto f = gpltest::random_function(g, rng, 4.0);
        auto [lhs, rhs] = d1_linf_bound(f);
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("linear harmonic solve") {
    auto path = grid_window({1, 5});
    auto sol = linear_harmonic_solve(path, {{0, 0.0}, {10, 1.0}});
    for (Graph::Vertex v = 0; v <= 10; ++v)
        CHECK(sol[v] == doctest::Approx(v / 10.0).epsilon(1e-12));
    CHECK_THROWS(linear_harmonic_solve(path, {{0, 0.0}}));  // frontier not covered
}

TEST_CASE("p harmonic solve: path is linear for every p") {
    auto path = grid_window({1, 6});
    const std::vector<std::pair<Graph::Vertex, double>> bd{{0, 0.0}, {12, 1.0}};
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        auto res = p_harmonic_solve(path, p, bd, 1e-10);
        CHECK(res.converged);
        CHECK(res.residual <= 1e-10);
        for (Graph::Vertex v = 0; v <= 12; ++v)
            CHECK(res.solution[v] == doctest::Approx(v / 12.0).epsilon(1e-8));
    }
    CHECK_THROWS(p_harmonic_solve(path, 1.0, bd));
}

TEST_CASE("p harmonic solve: p = 2 matches the linear oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + trial % 2;
        const int L = 2 + trial % 3;
        auto w = grid_window({d, L});
        std::vector<std::pair<Graph::Vertex, double>> bd;
        std::uniform_real_distribution<double> unif(-1, 1);
        for (auto v : w->frontier()) bd.emplace_back(v, unif(rng));
        auto mine = p_harmonic_solve(w, 2.0, bd, 1e-10);
        auto oracle = linear_harmonic_solve(w, bd);
        CHECK(mine.converged);
        for (Graph::Vertex v = 0; v < w->vertex_count(); ++v)
            CHECK(std::fabs(mine.solution[v] - oracle[v]) <= 1e-8);
    }
}

TEST_CASE("p harmonic solve: p = 4 grid with corner data") {
    auto w = grid_window({2, 2});  // 5x5
    std::vector<std::pair<Graph::Vertex, double>> bd;
    for (auto v : w->frontier()) {
        const int x = v % 5, y = v / 5;
        const bool corner = (x == 0 || x == 4) && (y == 0 || y == 4);
        bd.emplace_back(v, corner ? 1.0 : 0.0);
    }
    auto p4 = p_harmonic_solve(w, 4.0, bd, 1e-8, 2000);
    CHECK(p4.converged);
    CHECK(p4.residual <= 1e-8);
    auto p2 = p_harmonic_solve(w, 2.0, bd, 1e-10);
    CHECK(p_energy(p4.solution, 4.0) <= p_energy(p2.solution, 4.0) + 1e-12);

    // minimality: feasible perturbations never lower the energy materially
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unif(-0.05, 0.05);
    for (int trial = 0; trial < 50; ++trial) {
        auto h = p4.solution;
        for (Graph::Vertex v = 0; v < w->vertex_count(); ++v)
            if (!w->in_frontier(v)) h[v] += unif(rng);
        CHECK(p_energy(h, 4.0) >= p4.energy - 1e-10);
    }
}

TEST_CASE("stitched classification") {
    auto w = grid_window({2, 6});
    const double eps[] = {1e-1, 1e-2};

    std::vector<std::pair<GraphPtr, VertexFunction>> same{
        {w, VertexFunction::constant(w, 2.0)}, {w, VertexFunction::constant(w, 2.0)}};
    CHECK(stitched_classification(same, eps).kind == TrivialityVerdict::Kind::TrivialEvidence);

    std::vector<std::pair<GraphPtr, VertexFunction>> distinct{
        {w, VertexFunction::constant(w, 0.0)}, {w, VertexFunction::constant(w, 1.0)}};
    auto sv = stitched_classification(distinct, eps);
    CHECK(sv.kind == TrivialityVerdict::Kind::NontrivialEvidence);
    CHECK(sv.note == "all parts plateau, but at distinct constants");

    // the glued example decomposed into its two copies; d = 4 so the Green
    // tail (~ r^-2) actually drops below the epsilon grid inside the window
    auto ex = glued_green_example(4, 6, 0);
    const double geps[] = {1e-1, 5e-2};
    const auto origin = ex.window->root();
    std::vector<double> copy2(static_cast<std::size_t>(ex.window->vertex_count()));
    for (Graph::Vertex z = 0; z < ex.window->vertex_count(); ++z)
        copy2[z] = ex.bridge_constant + 2.0 * ex.f[origin] - ex.f[z];
    std::vector<std::pair<GraphPtr, VertexFunction>> parts{
        {ex.window, ex.f}, {ex.window, VertexFunction(ex.window, std::move(copy2))}};
    auto gv = stitched_classification(parts, geps);
    CHECK(gv.kind == TrivialityVerdict::Kind::NontrivialEvidence);
    CHECK(gv.note == "all parts plateau, but at distinct constants");

    // the stitch-based overload restricts through the part map
    WindowSpec spec{2, 4};
    auto w1 = grid_window(spec), w2 = grid_window(spec);
    auto st = stitch({w1, w2}, {{{0, w1->root()}, {1, w2->root()}}});
    std::vector<double> vals(static_cast<std::size_t>(st.graph->vertex_count()), 0.0);
    for (Graph::Vertex v = w1->vertex_count(); v < st.graph->vertex_count(); ++v) vals[v] = 1.0;
    auto sv2 = stitched_classification(st, VertexFunction(st.graph, std::move(vals)), eps);
    CHECK(sv2.kind == TrivialityVerdict::Kind::NontrivialEvidence);
}

TEST_CASE("lpq difference check") {
    std::vector<LpqWindowSample> windows;
    windows.push_back({"L=4", 100, {{1.0, 2.0}, {2.0, 1.0}}});
    windows.push_back({"L=6", 200, {{1.0, 2.1}, {2.0, 3.5}}});
    auto rep = lpq_difference_check(2.0, 5, windows);
    CHECK(rep.q_threshold == doctest::Approx(10.0));  // d p / (d - 2p)
    CHECK(rep.trends[0] == "stable");
    CHECK(rep.trends[1] == "growing");
    auto flat = lpq_difference_check(2.0, 4, windows);  // d <= 2p
    CHECK(std::isinf(flat.q_threshold));
    CHECK_THROWS(lpq_difference_check(2.0, 5, {windows.front()}));
}
