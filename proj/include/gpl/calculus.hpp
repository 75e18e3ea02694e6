#pragma once

#include <optional>
#include <span>

#include "gpl/graph.hpp"
#include "gpl/values.hpp"

namespace gpl {

/// Hoelder conjugate exponent: p/(p-1), with 1 and infinity conjugate.
double conjugate_exponent(double p);

/// Discrete gradient: (grad g)(x,y) = g(y) - g(x) on every oriented edge.
EdgeFlow gradient(const VertexFunction& g);

/// Adjoint of the gradient (net inflow): (div t)(x) = sum over y ~ x of
/// t(y,x).  With the unordered-edge pairing below this satisfies
/// <grad g, t>_E = <g, div t>_X exactly in exact arithmetic.
VertexFunction divergence(const EdgeFlow& t);

/// Pairing over unordered edges in canonical orientation, equivalently half
/// the sum over both orientations.
double edge_pairing(const EdgeFlow& f, const EdgeFlow& h);
double vertex_pairing(const VertexFunction& f, const VertexFunction& g);

/// lp norm over vertices, p in [1, inf].
double lp_norm_vertices(const VertexFunction& g, double p);

/// lp norm over unordered edges, optionally restricted to an edge subset.
double lp_norm_edges(const EdgeFlow& t, double p,
                     std::optional<std::span<const Graph::EdgeId>> restriction = std::nullopt);

/// Dirichlet norm (|grad g|_p^p + |g(root)|^p)^(1/p).
double dp_norm(const VertexFunction& g, double p);

/// Mazur map |g|^(p-2) g pointwise, with 0 -> 0; requires p > 1.
VertexFunction mazur_map(const VertexFunction& g, double p);
EdgeFlow mazur_map(const EdgeFlow& t, double p);

/// Canonical ids of the edges having at least one endpoint at distance > r
/// from the center (the complement of the edges inside the ball).
std::vector<Graph::EdgeId> edges_outside_ball(const Graph& graph, Graph::Vertex center, int r);

} // namespace gpl
