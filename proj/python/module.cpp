// pybind11 bindings for the core graph, walk, transport, boundary-value and
// triviality machinery.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpl/boundary.hpp"
#include "gpl/calculus.hpp"
#include "gpl/cohomology.hpp"
#include "gpl/generators.hpp"
#include "gpl/io.hpp"
#include "gpl/isoperimetry.hpp"
#include "gpl/random_walk.hpp"
#include "gpl/transport.hpp"
#include "gpl/version.hpp"

namespace py = pybind11;
using namespace gpl;

PYBIND11_MODULE(_core, m) {
    m.doc() = "random-walk boundary values and triviality diagnostics on graph windows";
    m.attr("__version__") = kVersion;

    py::class_<Graph, GraphPtr>(m, "Graph")
        .def_static(
            "from_edges",
            [](Graph::Vertex n, const std::vector<std::pair<Graph::Vertex, Graph::Vertex>>& edges,
               Graph::Vertex root, const std::vector<Graph::Vertex>& frontier,
               const std::string& label) {
                return Graph::from_edge_list(n, edges, root, frontier, label);
            },
            py::arg("vertex_count"), py::arg("edges"), py::arg("root") = 0,
            py::arg("frontier") = std::vector<Graph::Vertex>{}, py::arg("label") = "")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("root", &Graph::root)
        .def_property_readonly("frontier", &Graph::frontier)
        .def_property_readonly("label", &Graph::label)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def_property_readonly("min_degree", &Graph::min_degree)
        .def("degree", &Graph::degree)
        .def("neighbors",
             [](const Graph& g, Graph::Vertex v) {
                 auto nb = g.neighbors(v);
                 return std::vector<Graph::Vertex>(nb.begin(), nb.end());
             })
        .def("adjacent", &Graph::adjacent)
        .def("in_frontier", &Graph::in_frontier)
        .def("edge_index", &Graph::edge_index)
        .def("edge_endpoints", &Graph::edge_endpoints)
        .def("bfs_distances",
             [](const Graph& g, Graph::Vertex s) { return g.bfs_distances(s); })
        .def("distance_to_frontier", &Graph::distance_to_frontier)
        .def("bfs_spanning_tree", &Graph::bfs_spanning_tree)
        .def("__repr__", [](const Graph& g) {
            return "<Graph '" + g.label() + "' n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("read_graph", &read_graph_file, py::arg("path"));
    m.def("write_graph",
          [](const std::string& path, const GraphPtr& g) { write_graph_file(path, *g); });

    py::class_<VertexFunction>(m, "VertexFunction")
        .def(py::init<GraphPtr, std::vector<double>>(), py::arg("graph"), py::arg("values"))
        .def_static("zero", &VertexFunction::zero)
        .def_static("constant", &VertexFunction::constant)
        .def_static("delta", &VertexFunction::delta, py::arg("graph"), py::arg("vertex"),
                    py::arg("mass") = 1.0)
        .def_property_readonly("graph", &VertexFunction::graph)
        .def("values",
             [](const VertexFunction& f) {
                 return std::vector<double>(f.values().begin(), f.values().end());
             })
        .def("__getitem__",
             [](const VertexFunction& f, Graph::Vertex v) {
                 f.graph()->validate_vertex(v, "VertexFunction");
                 return f[v];
             })
        .def("__len__", &VertexFunction::size)
        .def("__add__", [](const VertexFunction& a, const VertexFunction& b) { return a + b; })
        .def("__sub__", [](const VertexFunction& a, const VertexFunction& b) { return a - b; })
        .def("__rmul__", [](const VertexFunction& a, double s) { return s * a; });

    m.def("read_vertex_function", &read_vertex_function_file, py::arg("path"), py::arg("graph"));
    m.def("write_vertex_function", &write_vertex_function_file, py::arg("path"), py::arg("fn"));

    py::class_<EdgeFlow>(m, "EdgeFlow")
        .def(py::init<GraphPtr, std::vector<double>>(), py::arg("graph"), py::arg("values"))
        .def_static("zero", &EdgeFlow::zero)
        .def_property_readonly("graph", &EdgeFlow::graph)
        .def("values",
             [](const EdgeFlow& f) {
                 return std::vector<double>(f.values().begin(), f.values().end());
             })
        .def("at", &EdgeFlow::at, py::arg("from_vertex"), py::arg("to_vertex"))
        .def("__len__", &EdgeFlow::size);

    py::class_<ProbabilityMeasure>(m, "ProbabilityMeasure")
        .def(py::init<GraphPtr, std::vector<std::pair<Graph::Vertex, double>>>())
        .def_static("delta", &ProbabilityMeasure::delta)
        .def("entries", &ProbabilityMeasure::entries)
        .def("mass_at", &ProbabilityMeasure::mass_at)
        .def("integrate", &ProbabilityMeasure::integrate)
        .def("lp_norm", &ProbabilityMeasure::lp_norm)
        .def("sup_mass", &ProbabilityMeasure::sup_mass)
        .def("support_size", &ProbabilityMeasure::support_size);

    // discrete calculus
    m.def("gradient", &gradient);
    m.def("divergence", &divergence);
    m.def("edge_pairing", &edge_pairing);
    m.def("vertex_pairing", &vertex_pairing);
    m.def("lp_norm_vertices", &lp_norm_vertices);
    m.def("lp_norm_edges",
          [](const EdgeFlow& t, double p) { return lp_norm_edges(t, p); });
    m.def("dp_norm", &dp_norm);
    m.def("mazur_map", py::overload_cast<const VertexFunction&, double>(&mazur_map));
    m.def("mazur_map_edges", py::overload_cast<const EdgeFlow&, double>(&mazur_map));
    m.def("conjugate_exponent", &conjugate_exponent);

    // builders
    py::class_<WindowSpec>(m, "WindowSpec")
        .def(py::init([](int d, int L, std::int64_t cap) {
                 return WindowSpec{d, L, cap};
             }),
             py::arg("dimension"), py::arg("radius"), py::arg("vertex_cap") = 10'000'000)
        .def_readwrite("dimension", &WindowSpec::dimension)
        .def_readwrite("radius", &WindowSpec::radius)
        .def_readwrite("vertex_cap", &WindowSpec::vertex_cap);
    m.def("grid_window",
          [](int d, int L, std::int64_t cap) { return grid_window({d, L, cap}); },
          py::arg("dimension"), py::arg("radius"), py::arg("vertex_cap") = 10'000'000);
    m.def("glued_double_grid",
          [](int d, int L, std::int64_t cap) { return glued_double_grid({d, L, cap}); },
          py::arg("dimension"), py::arg("radius"), py::arg("vertex_cap") = 10'000'000);
    m.def("torus_window",
          [](int d, int L, std::int64_t cap) { return torus_window({d, L, cap}); },
          py::arg("dimension"), py::arg("radius"), py::arg("vertex_cap") = 10'000'000);
    m.def("tree_ball", &tree_ball, py::arg("branching"), py::arg("depth"),
          py::arg("vertex_cap") = 10'000'000);
    m.def("fuzz", &fuzz, py::arg("graph"), py::arg("n"), py::arg("edge_cap") = 50'000'000);

    py::class_<StitchResult>(m, "StitchResult")
        .def_readonly("graph", &StitchResult::graph)
        .def_readonly("parts", &StitchResult::parts)
        .def_readonly("part_offset", &StitchResult::part_offset)
        .def_readonly("part_of", &StitchResult::part_of)
        .def_readonly("max_bridges_per_part", &StitchResult::max_bridges_per_part);
    m.def("stitch", &stitch, py::arg("parts"), py::arg("bridges"));
    m.def("restrict_to_part", &restrict_to_part);
    m.def("embed_from_part", &embed_from_part);

    m.def("cayley_ball_zd",
          [](int d, int radius, std::int64_t cap) { return cayley_ball(cayley_zd(d), radius, cap); },
          py::arg("d"), py::arg("radius"), py::arg("vertex_cap") = 1'000'000);
    m.def("cayley_ball_lamplighter",
          [](int radius, std::int64_t cap) {
              return cayley_ball(cayley_lamplighter_z(), radius, cap);
          },
          py::arg("radius"), py::arg("vertex_cap") = 1'000'000);
    m.def("grid_axis_halves",
          [](int d, int L) { return grid_axis_halves({d, L}); });

    // random walks
    py::class_<WalkKernel>(m, "WalkKernel")
        .def_readonly("graph", &WalkKernel::graph)
        .def_readonly("alpha", &WalkKernel::alpha)
        .def_readonly("dirichlet", &WalkKernel::dirichlet);
    m.def("make_kernel", &make_kernel, py::arg("graph"), py::arg("alpha") = 0.0,
          py::arg("dirichlet") = false);
    m.def("step", &step);

    py::class_<WalkDistribution>(m, "WalkDistribution")
        .def_readonly("measure", &WalkDistribution::measure)
        .def_readonly("steps", &WalkDistribution::steps)
        .def_readonly("start", &WalkDistribution::start)
        .def_readonly("exactness_radius", &WalkDistribution::exactness_radius);
    m.def("n_step", &n_step, py::arg("kernel"), py::arg("start"), py::arg("n"));
    m.def("convolve", &convolve, py::arg("kernel"), py::arg("fn"), py::arg("n"));

    py::class_<NormSequence>(m, "NormSequence")
        .def_readonly("norms", &NormSequence::norms)
        .def_readonly("partial_sums", &NormSequence::partial_sums)
        .def_readonly("sup_probs", &NormSequence::sup_probs)
        .def_readonly("exactness_radius", &NormSequence::exactness_radius)
        .def_readonly("window_exact", &NormSequence::window_exact);
    m.def("norm_sequence", &norm_sequence, py::arg("kernel"), py::arg("start"),
          py::arg("p_prime"), py::arg("N"));
    m.def("interpolation_bound", &interpolation_bound);

    py::class_<DecayFit>(m, "DecayFit")
        .def_readonly("exponent", &DecayFit::exponent)
        .def_readonly("constant", &DecayFit::constant)
        .def_readonly("n0", &DecayFit::n0)
        .def_readonly("n1", &DecayFit::n1)
        .def_readonly("points", &DecayFit::points)
        .def_readonly("residual", &DecayFit::residual)
        .def_readonly("window_exact", &DecayFit::window_exact);
    m.def("fit_decay",
          [](const std::vector<std::pair<int, double>>& seq, int n0, int n1,
             std::optional<std::int64_t> horizon) { return fit_decay(seq, n0, n1, horizon); },
          py::arg("seq"), py::arg("n0"), py::arg("n1"), py::arg("exact_horizon") = py::none());

    py::class_<SpectralEstimate>(m, "SpectralEstimate")
        .def_readonly("value", &SpectralEstimate::value)
        .def_readonly("iterations", &SpectralEstimate::iterations)
        .def_readonly("converged", &SpectralEstimate::converged)
        .def_readonly("estimated", &SpectralEstimate::estimated);
    m.def("spectral_norm_estimate", &spectral_norm_estimate);

    py::class_<GreenSumReport>(m, "GreenSumReport")
        .def_readonly("result", &GreenSumReport::result)
        .def_readonly("increment_sup_norms", &GreenSumReport::increment_sup_norms)
        .def_readonly("increment_l2_norms", &GreenSumReport::increment_l2_norms)
        .def_readonly("diverged", &GreenSumReport::diverged);
    m.def("green_partial_sum", &green_partial_sum, py::arg("kernel"), py::arg("fn"),
          py::arg("N"), py::arg("divergence_horizon") = 25);

    // transport
    py::class_<TransportPattern>(m, "TransportPattern")
        .def(py::init<EdgeFlow, ProbabilityMeasure, ProbabilityMeasure>())
        .def_readonly("flow", &TransportPattern::flow)
        .def_readonly("source", &TransportPattern::source)
        .def_readonly("target", &TransportPattern::target);
    m.def("path_transport", &path_transport);
    m.def("walk_edge_measure", &walk_edge_measure);
    m.def("walk_transport", &walk_transport, py::arg("kernel"), py::arg("start"), py::arg("n"),
          py::arg("k"));
    m.def("transport_norm_bound", &transport_norm_bound);
    m.def("holder_gap", &holder_gap);

    py::class_<TailReport>(m, "TailReport")
        .def_readonly("sup_norms", &TailReport::sup_norms)
        .def_readonly("bound_tails", &TailReport::bound_tails)
        .def_readonly("exactness_radius", &TailReport::exactness_radius)
        .def_readonly("warned", &TailReport::warned);
    m.def("tail_condition", &tail_condition);

    // boundary values
    py::class_<BoundaryValueReport>(m, "BoundaryValueReport")
        .def_readonly("limit", &BoundaryValueReport::limit)
        .def_readonly("iterations", &BoundaryValueReport::iterations)
        .def_readonly("sup_increment_at_stop", &BoundaryValueReport::sup_increment_at_stop)
        .def_readonly("exactness_radius", &BoundaryValueReport::exactness_radius)
        .def_readonly("harmonicity_residual", &BoundaryValueReport::harmonicity_residual)
        .def_readonly("converged", &BoundaryValueReport::converged);
    m.def("boundary_value", &boundary_value, py::arg("kernel"), py::arg("fn"),
          py::arg("tol") = 1e-9, py::arg("max_n") = 0);

    py::class_<LohoueResult>(m, "LohoueResult")
        .def_readonly("representative", &LohoueResult::representative)
        .def_readonly("increment_sup_norms", &LohoueResult::increment_sup_norms)
        .def_readonly("increment_l2_norms", &LohoueResult::increment_l2_norms)
        .def_readonly("diverged", &LohoueResult::diverged);
    m.def("lohoue_representative", &lohoue_representative);
    m.def("harmonic_residual", &harmonic_residual);

    py::class_<GluedGreenExample>(m, "GluedGreenExample")
        .def_readonly("graph", &GluedGreenExample::graph)
        .def_readonly("g", &GluedGreenExample::g)
        .def_readonly("window", &GluedGreenExample::window)
        .def_readonly("f", &GluedGreenExample::f)
        .def_readonly("bridge_constant", &GluedGreenExample::bridge_constant)
        .def_readonly("green_terms", &GluedGreenExample::green_terms);
    m.def("glued_green_example", &glued_green_example, py::arg("d"), py::arg("L"),
          py::arg("green_terms") = 0, py::arg("vertex_cap") = 10'000'000);

    py::class_<QNormEntry>(m, "QNormEntry")
        .def_readonly("q", &QNormEntry::q)
        .def_readonly("norm", &QNormEntry::norm);
    m.def("difference_integrability",
          [](const WalkKernel& k, const VertexFunction& g, const VertexFunction& gt,
             const std::vector<double>& qs) { return difference_integrability(k, g, gt, qs); });
    py::class_<QTrend>(m, "QTrend")
        .def_readonly("q", &QTrend::q)
        .def_readonly("norm_small", &QTrend::norm_small)
        .def_readonly("norm_large", &QTrend::norm_large)
        .def_readonly("trend", &QTrend::trend);
    m.def("difference_trend",
          [](const std::vector<QNormEntry>& a, const std::vector<QNormEntry>& b,
             double thresh) { return difference_trend(a, b, thresh); },
          py::arg("smaller_window"), py::arg("larger_window"),
          py::arg("growth_threshold") = 1.25);

    // triviality machinery
    py::class_<Exhaustion>(m, "Exhaustion")
        .def_readonly("radii", &Exhaustion::radii)
        .def_readonly("dist_from_root", &Exhaustion::dist_from_root);
    m.def("make_exhaustion", &make_exhaustion);
    m.def("default_exhaustion_radii",
          [](const GraphPtr& g, int count) { return default_exhaustion_radii(*g, count); },
          py::arg("graph"), py::arg("count") = 4);

    py::enum_<TrivialityVerdict::Kind>(m, "VerdictKind")
        .value("TRIVIAL_EVIDENCE", TrivialityVerdict::Kind::TrivialEvidence)
        .value("NONTRIVIAL_EVIDENCE", TrivialityVerdict::Kind::NontrivialEvidence)
        .value("INCONCLUSIVE", TrivialityVerdict::Kind::Inconclusive);
    py::class_<TrivialityVerdict>(m, "TrivialityVerdict")
        .def_readonly("kind", &TrivialityVerdict::kind)
        .def_readonly("constant", &TrivialityVerdict::constant)
        .def_readonly("radii", &TrivialityVerdict::radii)
        .def_readonly("sup_outside", &TrivialityVerdict::sup_outside)
        .def_readonly("eps_grid", &TrivialityVerdict::eps_grid)
        .def_readonly("radius_for_eps", &TrivialityVerdict::radius_for_eps)
        .def_readonly("note", &TrivialityVerdict::note);

    m.def("truncate", &gpl::truncate);
    m.def("constant_at_infinity",
          [](const VertexFunction& g, const Exhaustion& ex, const std::vector<double>& eps) {
              return constant_at_infinity(g, ex, eps);
          });

    py::class_<EndsReport>(m, "EndsReport")
        .def_readonly("count", &EndsReport::count)
        .def_readonly("stabilization_radius", &EndsReport::stabilization_radius)
        .def_readonly("stable", &EndsReport::stable)
        .def_readonly("counts_per_radius", &EndsReport::counts_per_radius)
        .def_readonly("end_representatives", &EndsReport::end_representatives)
        .def_readonly("note", &EndsReport::note);
    m.def("ends", &gpl::ends);

    py::class_<EndValues>(m, "EndValues")
        .def_readonly("values", &EndValues::values)
        .def_readonly("spreads", &EndValues::spreads)
        .def_readonly("plateaued", &EndValues::plateaued)
        .def_readonly("linf_norm", &EndValues::linf_norm)
        .def_readonly("d1_bound", &EndValues::d1_bound)
        .def_readonly("bound_holds", &EndValues::bound_holds);
    m.def("ell1_boundary_map", &ell1_boundary_map, py::arg("fn"), py::arg("ends_report"),
          py::arg("plateau_tol") = 1e-8);
    m.def("d1_linf_bound", &d1_linf_bound);

    m.def("linear_harmonic_solve", &linear_harmonic_solve);
    py::class_<PHarmonicResult>(m, "PHarmonicResult")
        .def_readonly("solution", &PHarmonicResult::solution)
        .def_readonly("residual", &PHarmonicResult::residual)
        .def_readonly("energy", &PHarmonicResult::energy)
        .def_readonly("iterations", &PHarmonicResult::iterations)
        .def_readonly("converged", &PHarmonicResult::converged);
    m.def("p_harmonic_solve", &p_harmonic_solve, py::arg("graph"), py::arg("p"),
          py::arg("boundary"), py::arg("tol") = 1e-10, py::arg("max_iterations") = 400);
    m.def("p_energy", &p_energy);

    py::class_<StitchedVerdict>(m, "StitchedVerdict")
        .def_readonly("kind", &StitchedVerdict::kind)
        .def_readonly("per_part", &StitchedVerdict::per_part)
        .def_readonly("part_constants", &StitchedVerdict::part_constants)
        .def_readonly("constant_tolerance", &StitchedVerdict::constant_tolerance)
        .def_readonly("note", &StitchedVerdict::note);
    m.def("stitched_classification",
          [](const std::vector<std::pair<GraphPtr, VertexFunction>>& parts,
             const std::vector<double>& eps, double tol) {
              return stitched_classification(parts, eps, tol);
          },
          py::arg("parts"), py::arg("eps_grid"), py::arg("constant_tolerance") = 0.0);

    // isoperimetry
    py::class_<ProfileSample::Entry>(m, "ProfileEntry")
        .def_readonly("size", &ProfileSample::Entry::size)
        .def_readonly("boundary", &ProfileSample::Entry::boundary)
        .def_readonly("ratio", &ProfileSample::Entry::ratio);
    py::class_<ProfileSample>(m, "ProfileSample")
        .def_readonly("entries", &ProfileSample::entries)
        .def_readonly("min_ratio", &ProfileSample::min_ratio)
        .def_readonly("min_loc_size", &ProfileSample::min_loc_size);
    m.def("profile_scan",
          [](const GraphPtr& g, const std::string& mode, int samples, std::uint64_t seed) {
              ProfileKind kind = ProfileKind::omega();
              if (mode != "omega") kind = ProfileKind::dimension(std::stoi(mode));
              return profile_scan(g, kind, {samples / 2, samples - samples / 2, seed});
          },
          py::arg("graph"), py::arg("mode") = "omega", py::arg("samples") = 400,
          py::arg("seed") = 1);
    py::class_<FuzzAmplification>(m, "FuzzAmplification")
        .def_readonly("before", &FuzzAmplification::before)
        .def_readonly("after", &FuzzAmplification::after)
        .def_readonly("n", &FuzzAmplification::n);
    m.def("fuzz_amplification",
          [](const GraphPtr& g, int n, int samples, std::uint64_t seed) {
              return fuzz_amplification(g, n, {samples / 2, samples - samples / 2, seed});
          },
          py::arg("graph"), py::arg("n") = 0, py::arg("samples") = 400, py::arg("seed") = 1);
    m.def("is_omega_surrogate", &is_omega_surrogate);
    m.def("edge_boundary_size",
          [](const GraphPtr& g, const std::vector<Graph::Vertex>& set) {
              return edge_boundary_size(*g, set);
          });
}
