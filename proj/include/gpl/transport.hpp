#pragma once

#include <utility>
#include <vector>

#include "gpl/random_walk.hpp"
#include "gpl/values.hpp"

namespace gpl {

/// Transport pattern between two probability measures: an antisymmetric
/// edge flow whose divergence is source - target.  The defining identity is
/// checked at construction to 1e-10.
struct TransportPattern {
    static constexpr double kDivergenceTolerance = 1e-10;

    TransportPattern(EdgeFlow flow, ProbabilityMeasure source, ProbabilityMeasure target);

    EdgeFlow flow;
    ProbabilityMeasure source;
    ProbabilityMeasure target;
};

/// Unit flow along a shortest path, oriented from y's side into x's side so
/// that div = delta_x - delta_y.
TransportPattern path_transport(const GraphPtr& graph, Graph::Vertex x, Graph::Vertex y);

/// Raw walk edge measure at step i: mass P^(i)_x(y)/deg(y) on each oriented
/// edge (y, z), antisymmetrized.  Its divergence is P^(i+1)_x - P^(i)_x.
EdgeFlow walk_edge_measure(const WalkKernel& k, Graph::Vertex x, int i);

/// Canonical transport from P^(n)_x to P^(n+kk)_x obtained by continuing the
/// walk kk steps: the sum of the step-i edge measures over i in
/// [n, n+kk-1], signed so the divergence identity holds.
TransportPattern walk_transport(const WalkKernel& k, Graph::Vertex x, int n, int kk);

/// (exact ||tau||_{p'}, bound) where the bound is
/// min_degree^{-1/p} * sum_{i=n}^{n+kk-1} ||P^(i)_x||_{p'}.  On a regular
/// graph min_degree is the generator count |S| and the bound is the
/// literal walk-continuation estimate.
std::pair<double, double> transport_norm_bound(const WalkKernel& k, Graph::Vertex x, int n,
                                               int kk, double p_prime);

/// (|int g dxi - int g dphi|, ||grad g||_p ||tau||_{p'}).
std::pair<double, double> holder_gap(const VertexFunction& g, const TransportPattern& t, double p);

/// For n = 0..N, the sup over kk <= horizon of ||tau_{P^(n), P^(n+kk)}||_{p'},
/// together with the dominating partial-sum tails.
struct TailReport {
    std::vector<double> sup_norms;
    std::vector<double> bound_tails;
    std::int32_t exactness_radius;
    bool warned;  // N + horizon reaches past the exactness regime
};

TailReport tail_condition(const WalkKernel& k, Graph::Vertex x, double p_prime, int N,
                          int horizon);

} // namespace gpl
