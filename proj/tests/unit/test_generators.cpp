#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gpl/generators.hpp"
#include "gpl/io.hpp"
#include "testutil.hpp"

using namespace gpl;

namespace {

std::set<std::pair<Graph::Vertex, Graph::Vertex>> edge_set(const Graph& g) {
    std::set<std::pair<Graph::Vertex, Graph::Vertex>> s;
    g.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId) { s.insert({u, v}); });
    return s;
}

}  // namespace

TEST_CASE("grid windows") {
    auto p = grid_window({1, 2});
    CHECK(p->vertex_count() == 5);
    CHECK(p->edge_count() == 4);
    CHECK(p->root() == 2);
    CHECK(p->frontier() == std::vector<Graph::Vertex>{0, 4});

    auto g = grid_window({2, 1});
    CHECK(g->vertex_count() == 9);
    CHECK(g->edge_count() == 12);  // 3x3 grid: 2*3*2 hand count
    CHECK(g->degree(g->root()) == 4);
    for (auto v : g->frontier()) CHECK(g->degree(v) < 4);

    auto big = grid_window({3, 4});
    CHECK(big->vertex_count() == 9 * 9 * 9);
    CHECK(big->degree(big->root()) == 6);

    CHECK_THROWS(grid_window({9, 9}));  // cap
}

TEST_CASE("glued double grid") {
    auto g = glued_double_grid({1, 1});
    CHECK(g->vertex_count() == 6);
    CHECK(g->edge_count() == 5);  // two 3-paths plus the bridge

    auto g2 = glued_double_grid({2, 2});
    const auto n = g2->vertex_count() / 2;
    CHECK(g2->adjacent(g2->root(), g2->root() + n));  // bridge between the origins
    CHECK(g2->degree(g2->root()) == 5);
}

TEST_CASE("torus windows are regular and frontier-free") {
    auto t = torus_window({2, 2});
    CHECK(t->vertex_count() == 25);
    CHECK(!t->has_frontier());
    for (Graph::Vertex v = 0; v < t->vertex_count(); ++v) CHECK(t->degree(v) == 4);
}

TEST_CASE("tree balls") {
    auto star = tree_ball(2, 1);
    CHECK(star->vertex_count() == 4);  // root plus 3 leaves
    CHECK(star->edge_count() == 3);

    // geometric count oracle: 1 + (b+1) * (b^depth - 1) / (b - 1)
    for (int b : {2, 3}) {
        for (int depth : {2, 3, 4}) {
            std::int64_t level = b + 1, total = 1;
            for (int k = 1; k <= depth; ++k) {
                total += level;
                level *= b;
            }
            auto t = tree_ball(b, depth);
            CHECK(t->vertex_count() == total);
            CHECK(t->edge_count() == total - 1);
            for (Graph::Vertex v = 0; v < t->vertex_count(); ++v)
                if (!t->in_frontier(v)) CHECK(t->degree(v) == b + 1);
        }
    }
    auto t = tree_ball(2, 2);
    CHECK(t->vertex_count() == 10);  // 1 + 3 + 6
}

TEST_CASE("fuzz adds exactly the short-range pairs") {
    auto p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}, 0);
    auto f1 = fuzz(p4, 1);
    CHECK(edge_set(*f1) == edge_set(*p4));

    auto f2 = fuzz(p4, 2);
    CHECK(f2->edge_count() == 5);
    CHECK(f2->adjacent(0, 2));
    CHECK(f2->adjacent(1, 3));
    CHECK(!f2->adjacent(0, 3));

    // BFS distance oracle on a random graph: fuzz(g,n) joins u,v iff dist <= n
    std::mt19937_64 rng(5);
    auto g = gpltest::random_connected_graph(rng, 4, 25);
    for (int n : {2, 3}) {
        auto fz = fuzz(g, n);
        for (Graph::Vertex u = 0; u < g->vertex_count(); ++u) {
            const auto dist = g->bfs_distances(u);
            for (Graph::Vertex v = u + 1; v < g->vertex_count(); ++v)
                CHECK(fz->adjacent(u, v) == (dist[v] >= 1 && dist[v] <= n));
        }
    }

    // monotone: edges(fuzz(g,n)) grows with n
    auto e2 = edge_set(*fuzz(g, 2));
    auto e3 = edge_set(*fuzz(g, 3));
    CHECK(std::includes(e3.begin(), e3.end(), e2.begin(), e2.end()));
}

TEST_CASE("stitch") {
    auto s1 = Graph::from_edge_list(1, {}, 0);
    auto s2 = Graph::from_edge_list(1, {}, 0);
    auto joined = stitch({s1, s2}, {{{0, 0}, {1, 0}}});
    CHECK(joined.graph->vertex_count() == 2);
    CHECK(joined.graph->edge_count() == 1);

    // a glued double grid is the stitch of two windows at their origins
    WindowSpec spec{2, 2};
    auto w1 = grid_window(spec);
    auto w2 = grid_window(spec);
    auto st = stitch({w1, w2}, {{{0, w1->root()}, {1, w2->root()}}});
    auto glued = glued_double_grid(spec);
    std::ostringstream a, b;
    write_graph(a, *st.graph);
    write_graph(b, *glued);
    CHECK(a.str() == b.str());  // identical canonical form

    // three windows in a chain
    auto w3 = grid_window(spec);
    auto chain = stitch({w1, w2, w3},
                        {{{0, w1->root()}, {1, w2->root()}}, {{1, w2->root()}, {2, w3->root()}}});
    CHECK(chain.graph->vertex_count() == 3 * w1->vertex_count());
    CHECK(chain.max_bridges_per_part == 2);

    // disconnected result rejected
    CHECK_THROWS(stitch({w1, w2}, {}));

    // restriction round-trip: restrict then embed reproduces the part values
    std::mt19937_64 rng(6);
    auto f = gpltest::random_function(st.graph, rng);
    for (int part : {0, 1}) {
        auto r = restrict_to_part(st, f, part);
        auto e = embed_from_part(st, r, part);
        for (Graph::Vertex v = 0; v < w1->vertex_count(); ++v) {
            const auto uv = v + st.part_offset[static_cast<std::size_t>(part)];
            CHECK(e[uv] == f[uv]);
        }
    }
}

TEST_CASE("cayley balls") {
    auto z = cayley_ball(cayley_zd(1), 3);
    CHECK(z->vertex_count() == 7);  // path on 7 vertices
    CHECK(z->edge_count() == 6);
    CHECK(z->frontier().size() == 2);

    auto z2 = cayley_ball(cayley_zd(2), 2);
    CHECK(z2->vertex_count() == 13);  // l1 lattice ball

    // non-symmetric generator set rejected
    CayleyGroup bad;
    bad.name = "N";
    bad.identity = "0";
    bad.generators.push_back(
        [](const std::string& s) { return std::to_string(std::stol(s) + 1); });
    CHECK_THROWS(cayley_ball(bad, 2));
}

TEST_CASE("lamplighter ball against exhaustive word enumeration") {
    const auto group = cayley_lamplighter_z();
    const int radius = 4;
    // brute force: apply every word of length <= radius to the identity
    std::set<std::string> reached{group.identity};
    std::vector<std::string> layer{group.identity};
    for (int len = 1; len <= radius; ++len) {
        std::vector<std::string> next;
        for (const auto& x : layer)
            for (const auto& gen : group.generators) {
                const auto y = gen(x);
                if (reached.insert(y).second) next.push_back(y);
            }
        layer = std::move(next);
    }
    auto ball = cayley_ball(group, radius);
    CHECK(ball->vertex_count() == static_cast<Graph::Vertex>(reached.size()));
    CHECK(ball->max_degree() == 3);
}

TEST_CASE("axis halves avoid the frontier") {
    WindowSpec spec{2, 3};
    auto g = grid_window(spec);
    const auto halves = grid_axis_halves(spec);
    CHECK(!halves.empty());
    for (const auto& set : halves) {
        CHECK(!set.empty());
        for (auto v : set) CHECK(!g->in_frontier(v));
    }
}

TEST_CASE("bfs spanning tree is a tree") {
    std::mt19937_64 rng(9);
    auto g = gpltest::random_connected_graph(rng, 5, 40);
    const auto tree = g->bfs_spanning_tree();
    CHECK(static_cast<Graph::Vertex>(tree.size()) == g->vertex_count() - 1);
    auto tg = Graph::from_edge_list(g->vertex_count(), tree, g->root());  // validates connectivity
    CHECK(tg->edge_count() == g->vertex_count() - 1);
}
