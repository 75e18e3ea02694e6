#pragma once

#include <span>
#include <string>
#include <vector>

#include "gpl/random_walk.hpp"
#include "gpl/values.hpp"

namespace gpl {

/// Result of iterating n-step walk averages P^(n) * g to their pointwise
/// limit.  The residual is recomputed from the limit, not taken from the
/// iteration.  Vertices farther than `iterations` from the frontier carry
/// values the truncation cannot have influenced.
struct BoundaryValueReport {
    VertexFunction limit;
    int iterations = 0;
    double sup_increment_at_stop = 0;
    std::int32_t exactness_radius = 0;  // = iterations
    double harmonicity_residual = 0;    // sup over non-frontier vertices of |(I-P)limit|
    bool converged = false;
};

/// Iterates convolve until the sup increment drops below tol or max_n is
/// reached (max_n <= 0 picks 10 * diameter_estimate^2).  Use a lazy kernel
/// (alpha > 0) on finite bipartite windows, otherwise the iteration
/// oscillates.  Non-convergence is flagged, not thrown.
BoundaryValueReport boundary_value(const WalkKernel& k, const VertexFunction& g,
                                   double tol = 1e-9, int max_n = 0);

/// g + sum_{i<=N} P^(i)(-Delta g) with Delta = I - P for the same kernel:
/// the harmonic representative route to the boundary value.
struct LohoueResult {
    VertexFunction representative;
    std::vector<double> increment_sup_norms;
    std::vector<double> increment_l2_norms;
    bool diverged = false;
};

LohoueResult lohoue_representative(const WalkKernel& k, const VertexFunction& g, int N);

/// sup over non-frontier vertices of |h(x) - mean of h over neighbors|;
/// zero characterizes harmonicity for every laziness alpha.
double harmonic_residual(const WalkKernel& k, const VertexFunction& h);

/// The glued-grid example: two copies of a Z^d window joined at the origin,
/// carrying f on copy 1 and K + 2 f(0) - f on copy 2, where f is the
/// truncated Green function of the window (Dirichlet at the frontier) and
/// K is the combinatorial Laplacian of f at the origin.  The assembled
/// function is harmonic across the bridge by construction and harmonic
/// elsewhere up to the Green truncation error.
struct GluedGreenExample {
    GraphPtr graph;             // the glued double grid
    VertexFunction g;           // the assembled harmonic function
    GraphPtr window;            // the single grid window f lives on
    VertexFunction f;           // truncated Green function
    double bridge_constant = 0; // K
    int green_terms = 0;        // N actually used
};

/// d >= 3 required (transience).  green_terms <= 0 iterates until the
/// increments drop below 1e-12.
GluedGreenExample glued_green_example(int d, int L, int green_terms,
                                      std::int64_t vertex_cap = 10'000'000);

/// ||g_tilde - g||_q over non-frontier vertices, one entry per q.  A single
/// window cannot certify membership in an infinite-graph lq space; compare
/// across nested windows with difference_trend.
struct QNormEntry {
    double q;
    double norm;
};

std::vector<QNormEntry> difference_integrability(const WalkKernel& k, const VertexFunction& g,
                                                 const VertexFunction& g_tilde,
                                                 std::span<const double> q_list);

struct QTrend {
    double q;
    double norm_small;
    double norm_large;
    std::string trend;  // "stable" or "growing"
};

std::vector<QTrend> difference_trend(std::span<const QNormEntry> smaller_window,
                                     std::span<const QNormEntry> larger_window,
                                     double growth_threshold = 1.25);

} // namespace gpl
