#include "gpl/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gpl {

namespace {

std::int64_t checked_power(std::int64_t base, int exp, std::int64_t cap, const char* what) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base)
            throw std::invalid_argument(std::string(what) + ": size exceeds cap of " +
                                        std::to_string(cap) + " vertices");
        r *= base;
    }
    return r;
}

struct GridLayout {
    int d;
    int side;
    std::vector<std::int64_t> stride;  // stride[i] = side^i
    std::int64_t count;

    GridLayout(const WindowSpec& spec, const char* what) {
        if (spec.dimension < 1 || spec.radius < 1)
            throw std::invalid_argument(std::string(what) + ": need dimension >= 1 and radius >= 1");
        d = spec.dimension;
        side = 2 * spec.radius + 1;
        count = checked_power(side, d, spec.vertex_cap, what);
        stride.resize(d);
        std::int64_t s = 1;
        for (int i = 0; i < d; ++i) {
            stride[i] = s;
            s *= side;
        }
    }
    int coord(std::int64_t id, int i) const { return static_cast<int>((id / stride[i]) % side); }
};

}  // namespace

GraphPtr grid_window(const WindowSpec& spec) {
    const GridLayout g(spec, "grid_window");
    const auto n = g.count;
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Graph::Vertex> frontier;
    for (std::int64_t id = 0; id < n; ++id) {
        int deg = 0;
        bool boundary = false;
        for (int i = 0; i < g.d; ++i) {
            const int c = g.coord(id, i);
            if (c > 0) ++deg;
            if (c < g.side - 1) ++deg;
            if (c == 0 || c == g.side - 1) boundary = true;
        }
        offsets[id + 1] = offsets[id] + deg;
        if (boundary) frontier.push_back(static_cast<Graph::Vertex>(id));
    }
    std::vector<Graph::Vertex> neighbors(static_cast<std::size_t>(offsets[n]));
    for (std::int64_t id = 0; id < n; ++id) {
        std::int64_t w = offsets[id];
        for (int i = g.d - 1; i >= 0; --i)
            if (g.coord(id, i) > 0) neighbors[w++] = static_cast<Graph::Vertex>(id - g.stride[i]);
        for (int i = 0; i < g.d; ++i)
            if (g.coord(id, i) < g.side - 1)
                neighbors[w++] = static_cast<Graph::Vertex>(id + g.stride[i]);
    }
    std::int64_t origin = 0;
    for (int i = 0; i < g.d; ++i) origin += spec.radius * g.stride[i];
    char label[64];
    std::snprintf(label, sizeof(label), "grid d=%d L=%d", g.d, spec.radius);
    return Graph::from_csr(std::move(offsets), std::move(neighbors),
                           static_cast<Graph::Vertex>(origin), std::move(frontier), label);
}

GraphPtr glued_double_grid(const WindowSpec& spec) {
    WindowSpec half = spec;
    half.vertex_cap = spec.vertex_cap / 2;
    const GridLayout g(half, "glued_double_grid");
    const auto n = g.count;
    std::int64_t origin = 0;
    for (int i = 0; i < g.d; ++i) origin += spec.radius * g.stride[i];

    std::vector<std::int64_t> offsets(static_cast<std::size_t>(2 * n) + 1, 0);
    std::vector<Graph::Vertex> frontier;
    for (int copy = 0; copy < 2; ++copy) {
        for (std::int64_t id = 0; id < n; ++id) {
            int deg = 0;
            bool boundary = false;
            for (int i = 0; i < g.d; ++i) {
                const int c = g.coord(id, i);
                if (c > 0) ++deg;
                if (c < g.side - 1) ++deg;
                if (c == 0 || c == g.side - 1) boundary = true;
            }
            if (id == origin) ++deg;  // bridge
            const std::int64_t gid = copy * n + id;
            offsets[gid + 1] = offsets[gid] + deg;
            if (boundary) frontier.push_back(static_cast<Graph::Vertex>(gid));
        }
    }
    std::vector<Graph::Vertex> neighbors(static_cast<std::size_t>(offsets[2 * n]));
    for (int copy = 0; copy < 2; ++copy) {
        const std::int64_t base = copy * n;
        for (std::int64_t id = 0; id < n; ++id) {
            std::int64_t w = offsets[base + id];
            if (copy == 1 && id == origin) neighbors[w++] = static_cast<Graph::Vertex>(origin);
            for (int i = g.d - 1; i >= 0; --i)
                if (g.coord(id, i) > 0)
                    neighbors[w++] = static_cast<Graph::Vertex>(base + id - g.stride[i]);
            for (int i = 0; i < g.d; ++i)
                if (g.coord(id, i) < g.side - 1)
                    neighbors[w++] = static_cast<Graph::Vertex>(base + id + g.stride[i]);
            if (copy == 0 && id == origin) neighbors[w++] = static_cast<Graph::Vertex>(n + origin);
        }
    }
    char label[64];
    std::snprintf(label, sizeof(label), "glued d=%d L=%d", g.d, spec.radius);
    return Graph::from_csr(std::move(offsets), std::move(neighbors),
                           static_cast<Graph::Vertex>(origin), std::move(frontier), label);
}

GraphPtr torus_window(const WindowSpec& spec) {
    const GridLayout g(spec, "torus_window");
    if (g.side < 3) throw std::invalid_argument("torus_window: side must be >= 3");
    const auto n = g.count;
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t id = 0; id < n; ++id) offsets[id + 1] = offsets[id] + 2 * g.d;
    std::vector<Graph::Vertex> neighbors(static_cast<std::size_t>(offsets[n]));
    std::vector<Graph::Vertex> row(2 * g.d);
    for (std::int64_t id = 0; id < n; ++id) {
        for (int i = 0; i < g.d; ++i) {
            const int c = g.coord(id, i);
            const int up = (c + 1) % g.side;
            const int down = (c + g.side - 1) % g.side;
            row[2 * i] = static_cast<Graph::Vertex>(id + (up - c) * g.stride[i]);
            row[2 * i + 1] = static_cast<Graph::Vertex>(id + (down - c) * g.stride[i]);
        }
        std::sort(row.begin(), row.end());
        std::copy(row.begin(), row.end(), neighbors.begin() + offsets[id]);
    }
    char label[64];
    std::snprintf(label, sizeof(label), "torus d=%d L=%d", g.d, spec.radius);
    return Graph::from_csr(std::move(offsets), std::move(neighbors), 0, {}, label);
}

GraphPtr tree_ball(int branching, int depth, std::int64_t vertex_cap) {
    if (branching < 2 || depth < 1)
        throw std::invalid_argument("tree_ball: need branching >= 2 and depth >= 1");
    // level sizes: 1, b+1, (b+1)b, (b+1)b^2, ...
    std::vector<std::int64_t> level_start{0, 1};
    std::int64_t level = branching + 1;
    for (int k = 1; k <= depth; ++k) {
        const std::int64_t next = level_start.back() + level;
        if (next > vertex_cap) throw std::invalid_argument("tree_ball: size exceeds cap");
        level_start.push_back(next);
        level *= branching;
    }
    const std::int64_t n = level_start[depth + 1];
    std::vector<std::pair<Graph::Vertex, Graph::Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    std::vector<Graph::Vertex> frontier;
    for (int k = 0; k < depth; ++k) {
        const std::int64_t kids_per = (k == 0) ? branching + 1 : branching;
        std::int64_t next_child = level_start[k + 1];
        for (std::int64_t p = level_start[k]; p < level_start[k + 1]; ++p)
            for (std::int64_t c = 0; c < kids_per; ++c)
                edges.emplace_back(static_cast<Graph::Vertex>(p),
                                   static_cast<Graph::Vertex>(next_child++));
    }
    for (std::int64_t v = level_start[depth]; v < n; ++v)
        frontier.push_back(static_cast<Graph::Vertex>(v));
    char label[64];
    std::snprintf(label, sizeof(label), "tree b=%d depth=%d", branching, depth);
    return Graph::from_edge_list(static_cast<Graph::Vertex>(n), edges, 0, std::move(frontier),
                                 label);
}

GraphPtr fuzz(const GraphPtr& g, int n, std::int64_t edge_cap) {
    if (n < 1) throw std::invalid_argument("fuzz: n must be >= 1");
    const Graph& graph = *g;
    std::vector<std::pair<Graph::Vertex, Graph::Vertex>> edges;
    // per-vertex BFS to depth n
    std::vector<std::int32_t> dist(graph.vertex_count(), -1);
    std::vector<Graph::Vertex> queue;
    for (Graph::Vertex x = 0; x < graph.vertex_count(); ++x) {
        queue.clear();
        queue.push_back(x);
        dist[x] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Graph::Vertex y = queue[head];
            if (dist[y] == n) break;
            for (Graph::Vertex z : graph.neighbors(y))
                if (dist[z] < 0) {
                    dist[z] = dist[y] + 1;
                    queue.push_back(z);
                }
        }
        for (Graph::Vertex y : queue) {
            if (y > x) {
                edges.emplace_back(x, y);
                if (static_cast<std::int64_t>(edges.size()) > edge_cap)
                    throw std::invalid_argument("fuzz: edge count exceeds cap");
            }
            dist[y] = -1;
        }
    }
    return Graph::from_edge_list(graph.vertex_count(), edges, graph.root(), graph.frontier(),
                                 graph.label() + " fuzz n=" + std::to_string(n));
}

StitchResult stitch(std::vector<GraphPtr> parts,
                    const std::vector<std::pair<PartVertex, PartVertex>>& bridges) {
    if (parts.empty()) throw std::invalid_argument("stitch: no parts");
    StitchResult res;
    res.parts = std::move(parts);
    res.part_offset.resize(res.parts.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < res.parts.size(); ++i) {
        res.part_offset[i] = static_cast<Graph::Vertex>(total);
        total += res.parts[i]->vertex_count();
    }
    std::vector<std::pair<Graph::Vertex, Graph::Vertex>> edges;
    std::vector<Graph::Vertex> frontier;
    res.part_of.resize(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < res.parts.size(); ++i) {
        const auto off = res.part_offset[i];
        res.parts[i]->for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId) {
            edges.emplace_back(u + off, v + off);
        });
        for (auto v : res.parts[i]->frontier()) frontier.push_back(v + off);
        for (Graph::Vertex v = 0; v < res.parts[i]->vertex_count(); ++v)
            res.part_of[static_cast<std::size_t>(off + v)] = static_cast<int>(i);
    }
    std::vector<int> bridge_count(res.parts.size(), 0);
    for (const auto& [a, b] : bridges) {
        const auto [pa, va] = a;
        const auto [pb, vb] = b;
        if (pa < 0 || pa >= static_cast<int>(res.parts.size()) || pb < 0 ||
            pb >= static_cast<int>(res.parts.size()))
            throw std::invalid_argument("stitch: bridge part index out of range");
        res.parts[pa]->validate_vertex(va, "stitch bridge");
        res.parts[pb]->validate_vertex(vb, "stitch bridge");
        edges.emplace_back(va + res.part_offset[pa], vb + res.part_offset[pb]);
        bridge_count[pa]++;
        bridge_count[pb]++;
    }
    res.max_bridges_per_part = *std::max_element(bridge_count.begin(), bridge_count.end());
    // connectivity of the union is checked by the Graph constructor
    res.graph = Graph::from_edge_list(static_cast<Graph::Vertex>(total), edges,
                                      res.parts[0]->root() + res.part_offset[0],
                                      std::move(frontier), "stitched");
    return res;
}

VertexFunction restrict_to_part(const StitchResult& s, const VertexFunction& g, int part) {
    require_same_graph(s.graph, g.graph(), "restrict_to_part");
    const auto& pg = s.parts.at(static_cast<std::size_t>(part));
    std::vector<double> vals(pg->vertex_count());
    for (Graph::Vertex v = 0; v < pg->vertex_count(); ++v)
        vals[v] = g[v + s.part_offset[static_cast<std::size_t>(part)]];
    return VertexFunction(pg, std::move(vals));
}

VertexFunction embed_from_part(const StitchResult& s, const VertexFunction& g, int part) {
    const auto& pg = s.parts.at(static_cast<std::size_t>(part));
    require_same_graph(pg, g.graph(), "embed_from_part");
    auto out = VertexFunction::zero(s.graph);
    for (Graph::Vertex v = 0; v < pg->vertex_count(); ++v)
        out[v + s.part_offset[static_cast<std::size_t>(part)]] = g[v];
    return out;
}

GraphPtr cayley_ball(const CayleyGroup& group, int radius, std::int64_t vertex_cap) {
    if (radius < 1) throw std::invalid_argument("cayley_ball: radius must be >= 1");
    if (group.generators.empty()) throw std::invalid_argument("cayley_ball: no generators");
    std::unordered_map<std::string, Graph::Vertex> id_of;
    std::vector<std::string> elements{group.identity};
    std::vector<int> dist{0};
    id_of[group.identity] = 0;
    std::set<std::pair<Graph::Vertex, Graph::Vertex>> directed;
    for (std::size_t head = 0; head < elements.size(); ++head) {
        const std::string x = elements[head];
        const int dx = dist[head];
        const auto ix = static_cast<Graph::Vertex>(head);
        for (const auto& gen : group.generators) {
            const std::string y = gen(x);
            if (y == x)
                throw std::invalid_argument("cayley_ball: generator fixes an element (self-loop)");
            auto it = id_of.find(y);
            if (it == id_of.end()) {
                if (dx == radius) continue;  // outside the ball
                if (static_cast<std::int64_t>(elements.size()) >= vertex_cap)
                    throw std::invalid_argument("cayley_ball: state count exceeds cap");
                it = id_of.emplace(y, static_cast<Graph::Vertex>(elements.size())).first;
                elements.push_back(y);
                dist.push_back(dx + 1);
            }
            directed.emplace(ix, it->second);
        }
    }
    for (const auto& [u, v] : directed)
        if (!directed.count({v, u}))
            throw std::invalid_argument("cayley_ball: generator set is not symmetric");
    std::vector<std::pair<Graph::Vertex, Graph::Vertex>> edges;
    for (const auto& [u, v] : directed)
        if (u < v) edges.emplace_back(u, v);
    std::vector<Graph::Vertex> frontier;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] == radius) frontier.push_back(static_cast<Graph::Vertex>(i));
    return Graph::from_edge_list(static_cast<Graph::Vertex>(elements.size()), edges, 0,
                                 std::move(frontier),
                                 group.name + " ball r=" + std::to_string(radius));
}

namespace {

std::vector<long> parse_ints(const std::string& s) {
    std::vector<long> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

std::string join_ints(const std::vector<long>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

CayleyGroup cayley_zd(int d) {
    if (d < 1) throw std::invalid_argument("cayley_zd: d must be >= 1");
    CayleyGroup g;
    g.name = "Z^" + std::to_string(d);
    g.identity = join_ints(std::vector<long>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i)
        for (int sign : {+1, -1})
            g.generators.push_back([i, sign](const std::string& s) {
                auto c = parse_ints(s);
                c[static_cast<std::size_t>(i)] += sign;
                return join_ints(c);
            });
    return g;
}

CayleyGroup cayley_lamplighter_z() {
    // normal form "p=POS;l=a,b,c" with the lit-lamp positions sorted
    CayleyGroup g;
    g.name = "Z2wrZ";
    g.identity = "p=0;l=";
    auto parse = [](const std::string& s) {
        const auto semi = s.find(';');
        const long pos = std::stol(s.substr(2, semi - 2));
        std::vector<long> lamps;
        const std::string rest = s.substr(semi + 3);
        if (!rest.empty()) lamps = parse_ints(rest);
        return std::make_pair(pos, lamps);
    };
    auto print = [](long pos, const std::vector<long>& lamps) {
        return "p=" + std::to_string(pos) + ";l=" + join_ints(lamps);
    };
    for (int sign : {+1, -1})
        g.generators.push_back([=](const std::string& s) {
            auto [pos, lamps] = parse(s);
            return print(pos + sign, lamps);
        });
    g.generators.push_back([=](const std::string& s) {
        auto [pos, lamps] = parse(s);
        auto it = std::lower_bound(lamps.begin(), lamps.end(), pos);
        if (it != lamps.end() && *it == pos)
            lamps.erase(it);
        else
            lamps.insert(it, pos);
        return print(pos, lamps);
    });
    return g;
}

std::vector<std::vector<Graph::Vertex>> grid_axis_halves(const WindowSpec& spec) {
    const GridLayout g(spec, "grid_axis_halves");
    std::vector<std::vector<Graph::Vertex>> out;
    for (int i = 0; i < g.d; ++i) {
        for (int t : {g.side / 4, g.side / 2, (3 * g.side) / 4}) {
            if (t < 1 || t >= g.side - 1) continue;
            std::vector<Graph::Vertex> set;
            for (std::int64_t id = 0; id < g.count; ++id) {
                bool interior = true;
                for (int j = 0; j < g.d; ++j) {
                    const int c = g.coord(id, j);
                    if (c == 0 || c == g.side - 1) interior = false;
                }
                if (interior && g.coord(id, i) <= t) set.push_back(static_cast<Graph::Vertex>(id));
            }
            if (!set.empty()) out.push_back(std::move(set));
        }
    }
    return out;
}

} // namespace gpl
