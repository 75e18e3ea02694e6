#include "gpl/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gpl {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

static std::runtime_error parse_error(int line, const std::string& msg) {
    return std::runtime_error("graph parse error at line " + std::to_string(line) + ": " + msg);
}

GraphPtr read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    Graph::Vertex n = -1, root = -1;
    std::vector<Graph::Vertex> frontier;
    std::vector<std::pair<Graph::Vertex, Graph::Vertex>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "vertices") {
            std::string rootkw;
            if (!(ls >> n >> rootkw >> root) || rootkw != "root")
                throw parse_error(lineno, "expected 'vertices N root R'");
        } else if (tok == "frontier") {
            Graph::Vertex v;
            while (ls >> v) frontier.push_back(v);
        } else {
            Graph::Vertex u, v;
            std::istringstream es(line);
            if (!(es >> u >> v)) throw parse_error(lineno, "expected 'u v' edge pair");
            if (n < 0) throw parse_error(lineno, "edge before 'vertices' header");
            if (u >= v) throw parse_error(lineno, "edges must satisfy u < v");
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) throw std::runtime_error("graph parse error: missing 'vertices' header");
    return Graph::from_edge_list(n, edges, root, std::move(frontier));
}

GraphPtr read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "vertices " << g.vertex_count() << " root " << g.root() << "\n";
    if (g.has_frontier()) {
        out << "frontier";
        for (auto v : g.frontier()) out << ' ' << v;
        out << "\n";
    }
    g.for_each_edge([&](Graph::Vertex u, Graph::Vertex v, Graph::EdgeId) {
        out << u << ' ' << v << "\n";
    });
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_graph(out, g);
}

VertexFunction read_vertex_function(std::istream& in, GraphPtr graph) {
    std::vector<double> vals(graph->vertex_count(), 0.0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "vertex,value" || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("csv parse error at line " + std::to_string(lineno));
        const long v = std::stol(line.substr(0, comma));
        if (v < 0 || v >= graph->vertex_count())
            throw std::runtime_error("csv parse error at line " + std::to_string(lineno) +
                                     ": vertex out of range");
        vals[static_cast<std::size_t>(v)] = std::stod(line.substr(comma + 1));
    }
    return VertexFunction(std::move(graph), std::move(vals));
}

VertexFunction read_vertex_function_file(const std::string& path, GraphPtr graph) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open function file: " + path);
    return read_vertex_function(in, std::move(graph));
}

void write_vertex_function(std::ostream& out, const VertexFunction& f) {
    out << "vertex,value\n";
    for (Graph::Vertex v = 0; v < f.size(); ++v)
        out << v << ',' << format_double(f[v]) << "\n";
}

void write_vertex_function_file(const std::string& path, const VertexFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write function file: " + path);
    write_vertex_function(out, f);
}

} // namespace gpl
