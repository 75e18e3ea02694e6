#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gpl/graph.hpp"
#include "gpl/values.hpp"

namespace gpl {

/// Box window [-L,L]^d of the integer lattice.  The box boundary (some
/// coordinate at +-L) is marked as the frontier.
struct WindowSpec {
    int dimension = 1;
    int radius = 1;
    std::int64_t vertex_cap = 10'000'000;
};

/// Nearest-neighbor window of Z^d, root at the origin.
GraphPtr grid_window(const WindowSpec& spec);

/// Two grid windows joined by a single edge between their origins; copy 1
/// occupies ids [0,N), copy 2 ids [N,2N), root at the copy-1 origin.
GraphPtr glued_double_grid(const WindowSpec& spec);

/// Discrete torus (Z_{2L+1})^d: frontier-free regular graph, root at 0.
GraphPtr torus_window(const WindowSpec& spec);

/// Ball of the (b+1)-regular tree: the root has b+1 children, interior
/// vertices b children; the depth-`depth` leaves form the frontier.
GraphPtr tree_ball(int branching, int depth, std::int64_t vertex_cap = 10'000'000);

/// n-fuzz: same vertices, an edge wherever 1 <= dist(x,y) <= n.
GraphPtr fuzz(const GraphPtr& g, int n, std::int64_t edge_cap = 50'000'000);

/// Disjoint union of parts plus bridge edges, with the part decomposition
/// retained so functions can be restricted to a part and re-embedded.
struct StitchResult {
    GraphPtr graph;
    std::vector<GraphPtr> parts;
    std::vector<Graph::Vertex> part_offset;  // id of part i's vertex 0 in the union
    std::vector<int> part_of;                // part index per union vertex
    int max_bridges_per_part = 0;
};

using PartVertex = std::pair<int, Graph::Vertex>;  // (part index, vertex in part)

StitchResult stitch(std::vector<GraphPtr> parts,
                    const std::vector<std::pair<PartVertex, PartVertex>>& bridges);

VertexFunction restrict_to_part(const StitchResult& s, const VertexFunction& g, int part);
VertexFunction embed_from_part(const StitchResult& s, const VertexFunction& g, int part);

/// Cayley-ball input: group elements are opaque normal-form keys, the
/// library does no group theory.  The generator list must be closed under
/// inverses; this is checked on the enumerated ball.
struct CayleyGroup {
    std::string name;
    std::string identity;
    std::vector<std::function<std::string(const std::string&)>> generators;
};

GraphPtr cayley_ball(const CayleyGroup& group, int radius, std::int64_t vertex_cap = 1'000'000);

CayleyGroup cayley_zd(int d);
/// Lamplighter Z2 wr Z with the standard symmetric set {t, t^-1, toggle}.
CayleyGroup cayley_lamplighter_z();

/// Interior half-spaces {coordinate_i <= t} of a grid window, the
/// near-extremal cut family for isoperimetric scans.
std::vector<std::vector<Graph::Vertex>> grid_axis_halves(const WindowSpec& spec);

} // namespace gpl
