#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpl/boundary.hpp"
#include "gpl/generators.hpp"
#include "gpl/values.hpp"

namespace gpl {

/// Nested balls around the root with the connected components of each
/// complement.  Component ids are -1 inside the ball.
struct Exhaustion {
    struct Layer {
        int radius;
        int component_count;
        int frontier_reaching_count;
        std::vector<std::int32_t> component_of;   // -1 inside the ball
        std::vector<std::uint8_t> reaches_frontier;  // per component id
        std::vector<std::int64_t> component_size;
    };

    GraphPtr graph;
    std::vector<int> radii;  // strictly increasing
    std::vector<std::int32_t> dist_from_root;
    std::vector<Layer> layers;
};

Exhaustion make_exhaustion(GraphPtr graph, std::vector<int> radii);
/// Evenly spread radii below the frontier distance (or the root
/// eccentricity when there is no frontier).
std::vector<int> default_exhaustion_radii(const Graph& graph, int count = 4);

/// Evidence-grade verdict with its numeric witnesses.  Finite windows
/// yield evidence, never proofs.
struct TrivialityVerdict {
    enum class Kind { TrivialEvidence, NontrivialEvidence, Inconclusive };
    Kind kind = Kind::Inconclusive;
    double constant = 0;              // candidate value at infinity
    std::vector<int> radii;
    std::vector<double> sup_outside;  // sup |g - constant| outside each ball
    std::vector<double> eps_grid;
    std::vector<int> radius_for_eps;  // first radius reaching each eps, -1 if none
    std::string note;
};

const char* to_string(TrivialityVerdict::Kind k);

/// Truncation g_t: g where |g| < t, t sign(g) elsewhere.
VertexFunction truncate(const VertexFunction& g, double t);

/// Tests whether g is essentially a single value far from the root: the
/// candidate constant is the median of g outside the largest ball, and the
/// sup-distance to it is tracked along the exhaustion.
TrivialityVerdict constant_at_infinity(const VertexFunction& g, const Exhaustion& exhaustion,
                                       std::span<const double> eps_grid);

/// Ends of the window: frontier-reaching components of ball complements,
/// counted when stable across the last two radii (each outer component
/// mapping into its own inner component).
struct EndsReport {
    int count = 0;
    int stabilization_radius = -1;
    bool stable = false;
    std::vector<int> counts_per_radius;
    std::vector<std::vector<Graph::Vertex>> end_representatives;  // outermost components
    std::string note;
};

EndsReport ends(const Exhaustion& exhaustion);

/// Boundary map on ends for D^1 functions: the value of g along each end's
/// outermost region, normalized to 0 at the first end.  Also evaluates the
/// D^1 in l-infinity bound ||g||_inf <= ||grad g||_1 + min |g|.
struct EndValues {
    std::vector<double> values;       // one per end, values[0] == 0
    std::vector<double> spreads;      // max - min of g over each end region
    bool plateaued = false;           // all spreads <= plateau_tol
    double plateau_tol = 0;
    double linf_norm = 0;
    double d1_bound = 0;              // ||grad g||_1 + min |g|
    bool bound_holds = false;
};

EndValues ell1_boundary_map(const VertexFunction& g, const EndsReport& ends_report,
                            double plateau_tol = 1e-8);

/// (||g||_inf, ||grad g||_1 + min |g|): the left side never exceeds the
/// right on a connected graph.
std::pair<double, double> d1_linf_bound(const VertexFunction& g);

/// Direct linear solve of the harmonic extension problem (p = 2 oracle).
VertexFunction linear_harmonic_solve(const GraphPtr& graph,
                                     const std::vector<std::pair<Graph::Vertex, double>>& boundary);

/// Minimizer of the p-Dirichlet energy sum_e |grad h|^p with prescribed
/// frontier values, via iteratively reweighted least squares with line
/// search on the exact energy.  The residual is the recomputed stationarity
/// sup_interior |div(mazur_p(grad h))|.
struct PHarmonicResult {
    VertexFunction solution;
    double residual = 0;
    double energy = 0;
    int iterations = 0;
    bool converged = false;
};

PHarmonicResult p_harmonic_solve(const GraphPtr& graph, double p,
                                 const std::vector<std::pair<Graph::Vertex, double>>& boundary,
                                 double tol = 1e-10, int max_iterations = 400);

double p_energy(const VertexFunction& h, double p);

/// The stitched-graph dichotomy: nontrivial evidence iff some part is
/// nontrivial or all parts plateau at distinct constants.
struct StitchedVerdict {
    TrivialityVerdict::Kind kind = TrivialityVerdict::Kind::Inconclusive;
    std::vector<TrivialityVerdict> per_part;
    std::vector<double> part_constants;
    double constant_tolerance = 0;
    std::string note;
};

StitchedVerdict stitched_classification(const std::vector<std::pair<GraphPtr, VertexFunction>>& parts,
                                        std::span<const double> eps_grid,
                                        double constant_tolerance = 0 /* 2*min(eps) */);
StitchedVerdict stitched_classification(const StitchResult& stitched, const VertexFunction& g,
                                        std::span<const double> eps_grid,
                                        double constant_tolerance = 0);

/// Window-trend report of ||g_tilde - g||_q framed against the transport
/// threshold q* = d p / (d - 2p).
struct LpqWindowSample {
    std::string label;
    std::int64_t vertex_count;
    std::vector<QNormEntry> norms;
};

struct LpqReport {
    double p = 0;
    int d = 0;
    double q_threshold = 0;  // infinity when d <= 2p
    std::vector<double> q_list;
    std::vector<std::string> trends;  // per q: "stable" or "growing" across windows
    std::vector<LpqWindowSample> windows;
};

LpqReport lpq_difference_check(double p, int d, std::vector<LpqWindowSample> windows,
                               double growth_threshold = 1.25);

} // namespace gpl
