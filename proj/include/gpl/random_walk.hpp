#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gpl/graph.hpp"
#include "gpl/values.hpp"

namespace gpl {

/// Lazy simple-random-walk kernel: alpha * stay + (1-alpha) * uniform
/// neighbor.  alpha = 0 is the plain simple random walk.  In dirichlet
/// mode mass (resp. function values) are zeroed at the frontier after each
/// transition, the finite-window surrogate for a transient infinite graph.
struct WalkKernel {
    GraphPtr graph;
    double alpha = 0.0;
    bool dirichlet = false;
};

WalkKernel make_kernel(GraphPtr graph, double alpha = 0.0, bool dirichlet = false);

/// Function mode applies the expectation operator
///     (P g)(x) = alpha g(x) + (1-alpha) sum_{y~x} g(y)/deg(x),
/// measure mode its adjoint (the distribution push-forward).  One code
/// path, transposed by the mode flag.
enum class StepMode { Function, Measure };
void apply_step(const WalkKernel& k, std::span<const double> in, std::span<double> out,
                StepMode mode);

/// One push-forward transition of a measure; requires a stochastic
/// (non-dirichlet) kernel so mass is conserved.
ProbabilityMeasure step(const WalkKernel& k, const ProbabilityMeasure& m);

/// Forward iteration of the walk distribution started at delta_x, with
/// sparse active-set bookkeeping so the cost per step is proportional to
/// the support, not the graph.
class MeasureIteration {
public:
    MeasureIteration(const WalkKernel& k, Graph::Vertex x);
    void advance();
    int current_step() const { return step_; }
    std::span<const double> dense() const { return cur_; }
    const std::vector<Graph::Vertex>& active() const { return active_; }
    double sup() const;
    double lp_norm(double p) const;
    double total_mass() const;
    ProbabilityMeasure to_measure() const;

private:
    WalkKernel kernel_;
    int step_ = 0;
    std::vector<double> cur_, nxt_;
    std::vector<Graph::Vertex> active_, nxt_active_;
};

/// n-step distribution of the walk started at x.  exactness_radius r is the
/// graph distance from x to the frontier: the distribution agrees with the
/// one on the untruncated graph whenever n < r.
struct WalkDistribution {
    ProbabilityMeasure measure;
    int steps;
    Graph::Vertex start;
    std::int32_t exactness_radius;
};

WalkDistribution n_step(const WalkKernel& k, Graph::Vertex x, int n);

/// n-fold convolution P^(n) * g, computed by iterating the function-mode
/// operator (the adjoint route to the measure iteration).
VertexFunction convolve(const WalkKernel& k, const VertexFunction& g, int n);

/// Per-step walk statistics: ||P^(i)_x||_{p'}, running partial sums, and
/// sup_y P^(i)_x(y) for i = 0..N.
struct NormSequence {
    std::vector<double> norms;
    std::vector<double> partial_sums;
    std::vector<double> sup_probs;
    std::int32_t exactness_radius;
    bool window_exact;  // N < exactness_radius
};

NormSequence norm_sequence(const WalkKernel& k, Graph::Vertex x, double p_prime, int N);

/// (actual ||P^(n)_x||_{p'}, interpolation bound ||P^(n)_x||_inf^{1/p});
/// requires 1 < p' < infinity.
std::pair<double, double> interpolation_bound(const WalkKernel& k, Graph::Vertex x,
                                              double p_prime, int n);

/// Least-squares fit of log sup-probability against log n over the window
/// [n0, n1].  The caller restricts the sample to even n when fitting the
/// alpha = 0 walk on a bipartite graph.
struct DecayFit {
    double exponent = 0;
    double constant = 0;  // K in sup_y P^(n)(y) ~ K n^exponent
    int n0 = 0, n1 = 0;
    int points = 0;
    double residual = 0;  // rms residual in log space
    bool window_exact = true;
};

DecayFit fit_decay(std::span<const std::pair<int, double>> seq, int n0, int n1,
                   std::optional<std::int64_t> exact_horizon = std::nullopt);

/// Power-iteration estimate of the l2->l2 norm of the transition operator
/// restricted to functions vanishing on the frontier.  Without a frontier
/// the stochastic operator has norm exactly 1; that value is reported, not
/// estimated.
struct SpectralEstimate {
    double value = 1.0;
    int iterations = 0;
    bool converged = true;
    bool estimated = false;  // false when the exact finite-graph value 1 was reported
};

SpectralEstimate spectral_norm_estimate(const WalkKernel& k);

/// Partial sums sum_{i=0}^{N} P^(i) h with the increment norms reported for
/// convergence diagnosis.  Divergence (increments not decreasing over the
/// horizon) is flagged; the partial result is still returned.
struct GreenSumReport {
    VertexFunction result;
    std::vector<double> increment_sup_norms;  // ||P^(i) h||_inf for i = 1..N
    std::vector<double> increment_l2_norms;
    bool diverged = false;
};

GreenSumReport green_partial_sum(const WalkKernel& k, const VertexFunction& h, int N,
                                 int divergence_horizon = 25);

} // namespace gpl
