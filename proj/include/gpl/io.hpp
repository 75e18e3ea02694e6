#pragma once

#include <iosfwd>
#include <string>

#include "gpl/graph.hpp"
#include "gpl/values.hpp"

namespace gpl {

// Edge-list text format:
//   vertices N root R
//   frontier i j k ...        (optional)
//   u v                       (one unordered edge per line, 0-based, u < v)
GraphPtr read_graph(std::istream& in);
GraphPtr read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Vertex functions as CSV "vertex,value"; missing vertices read as 0.
VertexFunction read_vertex_function(std::istream& in, GraphPtr graph);
VertexFunction read_vertex_function_file(const std::string& path, GraphPtr graph);
void write_vertex_function(std::ostream& out, const VertexFunction& f);
void write_vertex_function_file(const std::string& path, const VertexFunction& f);

/// Doubles formatted with round-trip precision (%.17g), used everywhere a
/// number reaches an output file so reruns are byte-identical.
std::string format_double(double x);

} // namespace gpl
