#include "gpl/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gpl/boundary.hpp"
#include "gpl/calculus.hpp"
#include "gpl/cohomology.hpp"
#include "gpl/generators.hpp"
#include "gpl/io.hpp"
#include "gpl/random_walk.hpp"
#include "gpl/version.hpp"

namespace gpl {

using json = nlohmann::ordered_json;

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string out_path(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / name).string();
}

json verdict_json(const TrivialityVerdict& v) {
    json j;
    j["verdict"] = to_string(v.kind);
    j["constant"] = v.constant;
    j["radii"] = v.radii;
    j["sup_outside"] = v.sup_outside;
    j["eps_grid"] = v.eps_grid;
    j["radius_for_eps"] = v.radius_for_eps;
    j["note"] = v.note;
    return j;
}

std::string serialize_function(const VertexFunction& f) {
    std::ostringstream out;
    write_vertex_function(out, f);
    return out.str();
}

}  // namespace

ExperimentResult run_heat_decay(const HeatDecayConfig& cfg) {
    if (cfg.d < 1 || cfg.L < 1) throw std::invalid_argument("run_heat_decay: need d,L >= 1");
    const GraphPtr window = grid_window({cfg.d, cfg.L, cfg.vertex_cap});
    const WalkKernel kernel = make_kernel(window, cfg.alpha);
    // sup_y P^(n)(y) at the origin is unaffected by the truncation until a
    // path can reach the frontier and come back: horizon 2L - 2
    const int exact_horizon = 2 * cfg.L - 2;
    int n1 = cfg.fit_n1;
    if (n1 <= 0) n1 = std::min(exact_horizon, 60);
    if (n1 % 2 != 0) --n1;
    if (n1 > exact_horizon)
        throw std::invalid_argument(
            "run_heat_decay: window L=" + std::to_string(cfg.L) +
            " supports exact sup-decay fits only up to n=" + std::to_string(exact_horizon) +
            "; requested n1=" + std::to_string(n1));
    if (cfg.fit_n0 < 1 || cfg.fit_n0 >= n1)
        throw std::invalid_argument("run_heat_decay: fit window [" + std::to_string(cfg.fit_n0) +
                                    "," + std::to_string(n1) + "] is empty");

    const NormSequence seq = norm_sequence(kernel, window->root(), cfg.p_prime, n1);

    std::ostringstream csv;
    csv << "n,sup_prob,lp_norm,partial_sum\n";
    for (std::size_t i = 0; i < seq.norms.size(); ++i)
        csv << i << ',' << format_double(seq.sup_probs[i]) << ',' << format_double(seq.norms[i])
            << ',' << format_double(seq.partial_sums[i]) << "\n";
    const std::string seq_path = out_path(cfg.out_dir, "sequence.csv");
    write_text_file(seq_path, csv.str());

    // fit even n only: the alpha = 0 walk on the bipartite window vanishes at
    // the origin on odd steps
    std::vector<std::pair<int, double>> pts;
    for (int n = 0; n < static_cast<int>(seq.sup_probs.size()); ++n)
        if (cfg.alpha > 0.0 || n % 2 == 0)
            pts.emplace_back(n, seq.sup_probs[static_cast<std::size_t>(n)]);
    const DecayFit fit = fit_decay(pts, cfg.fit_n0, n1, exact_horizon);

    json j;
    j["experiment"] = "heat-decay";
    j["version"] = kVersion;
    j["config"] = {{"d", cfg.d},           {"L", cfg.L},
                   {"alpha", cfg.alpha},   {"p_prime", cfg.p_prime},
                   {"fit_n0", cfg.fit_n0}, {"fit_n1", n1}};
    j["fit"] = {{"exponent", fit.exponent}, {"constant", fit.constant},
                {"residual", fit.residual}, {"points", fit.points},
                {"window_exact", fit.window_exact}};
    j["predicted_exponent"] = -0.5 * cfg.d;
    const std::string fit_path = out_path(cfg.out_dir, "fit.json");
    write_text_file(fit_path, j.dump(2) + "\n");

    ExperimentResult res;
    res.exit_code = fit.window_exact ? 0 : 2;
    res.summary = "fitted exponent " + format_double(fit.exponent) + " (predicted " +
                  format_double(-0.5 * cfg.d) + ")";
    res.files = {seq_path, fit_path};
    return res;
}

ExperimentResult run_glued_example(const GluedExampleConfig& cfg) {
    const GluedGreenExample ex =
        glued_green_example(cfg.d, cfg.L, cfg.green_terms, cfg.vertex_cap);
    const WalkKernel plain = make_kernel(ex.graph, cfg.alpha);

    const double residual = harmonic_residual(plain, ex.g);

    const auto radii = cfg.radii.empty() ? default_exhaustion_radii(*ex.graph) : cfg.radii;
    const Exhaustion exhaustion = make_exhaustion(ex.graph, radii);
    const EndsReport ends_rep = ends(exhaustion);

    const TrivialityVerdict whole = constant_at_infinity(ex.g, exhaustion, cfg.eps_grid);

    // per-copy classification: the two restrictions live on the same window
    const auto origin = ex.window->root();
    std::vector<double> copy2(static_cast<std::size_t>(ex.window->vertex_count()));
    for (Graph::Vertex z = 0; z < ex.window->vertex_count(); ++z)
        copy2[static_cast<std::size_t>(z)] =
            ex.bridge_constant + 2.0 * ex.f[origin] - ex.f[z];
    const std::vector<std::pair<GraphPtr, VertexFunction>> parts{
        {ex.window, ex.f}, {ex.window, VertexFunction(ex.window, std::move(copy2))}};
    const StitchedVerdict classification = stitched_classification(parts, cfg.eps_grid);

    // control: a constant function through the same pipeline
    const std::vector<std::pair<GraphPtr, VertexFunction>> control_parts{
        {ex.window, VertexFunction::constant(ex.window, 1.0)},
        {ex.window, VertexFunction::constant(ex.window, 1.0)}};
    const StitchedVerdict control = stitched_classification(control_parts, cfg.eps_grid);

    const BoundaryValueReport bv =
        boundary_value(plain, ex.g, cfg.boundary_tol, cfg.boundary_max_n);

    json j;
    j["experiment"] = "glued-example";
    j["version"] = kVersion;
    j["config"] = {{"d", cfg.d},
                   {"L", cfg.L},
                   {"green_terms", ex.green_terms},
                   {"alpha", cfg.alpha},
                   {"eps_grid", cfg.eps_grid},
                   {"radii", radii}};
    j["bridge_constant"] = ex.bridge_constant;
    j["green_value_at_origin"] = ex.f[origin];
    j["harmonicity_residual"] = residual;
    j["ends"] = {{"count", ends_rep.count},
                 {"stable", ends_rep.stable},
                 {"counts_per_radius", ends_rep.counts_per_radius},
                 {"stabilization_radius", ends_rep.stabilization_radius}};
    j["whole_graph"] = verdict_json(whole);
    j["classification"] = {{"verdict", to_string(classification.kind)},
                           {"note", classification.note},
                           {"part_constants", classification.part_constants},
                           {"constant_tolerance", classification.constant_tolerance},
                           {"parts", {verdict_json(classification.per_part[0]),
                                      verdict_json(classification.per_part[1])}}};
    j["control"] = {{"verdict", to_string(control.kind)}, {"note", control.note}};
    j["boundary_value"] = {{"iterations", bv.iterations},
                           {"sup_increment_at_stop", bv.sup_increment_at_stop},
                           {"converged", bv.converged},
                           {"harmonicity_residual", bv.harmonicity_residual}};
    const std::string verdict_path = out_path(cfg.out_dir, "verdict.json");
    write_text_file(verdict_path, j.dump(2) + "\n");

    std::ostringstream csv;
    csv << "radius,sup_outside\n";
    for (std::size_t i = 0; i < whole.sup_outside.size(); ++i)
        csv << whole.radii[i] << ',' << format_double(whole.sup_outside[i]) << "\n";
    const std::string sup_path = out_path(cfg.out_dir, "sup_outside.csv");
    write_text_file(sup_path, csv.str());

    const bool inconclusive = classification.kind == TrivialityVerdict::Kind::Inconclusive ||
                              control.kind == TrivialityVerdict::Kind::Inconclusive ||
                              whole.kind == TrivialityVerdict::Kind::Inconclusive;
    ExperimentResult res;
    res.exit_code = inconclusive ? 2 : 0;
    res.summary = std::string("classification: ") + to_string(classification.kind) + ", ends: " +
                  std::to_string(ends_rep.count);
    res.files = {verdict_path, sup_path};
    return res;
}

ExperimentResult run_liouville_vanishing(const LiouvilleConfig& cfg) {
    const GraphPtr torus = torus_window({cfg.d, cfg.L, 10'000'000});
    const WalkKernel kernel = make_kernel(torus, cfg.alpha);
    const int side = 2 * cfg.L + 1;

    std::vector<std::pair<std::string, VertexFunction>> batch;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int i = 0; i < cfg.random_functions; ++i) {
        std::vector<double> vals(static_cast<std::size_t>(torus->vertex_count()));
        for (double& v : vals) v = unif(rng);
        batch.emplace_back("random-" + std::to_string(i),
                           VertexFunction(torus, std::move(vals)));
    }
    {
        std::vector<double> vals(static_cast<std::size_t>(torus->vertex_count()), 0.0);
        for (std::size_t id = 0; id < vals.size(); ++id)
            if (static_cast<int>(id) % side == 0) vals[id] = 1.0;  // first coordinate zero
        batch.emplace_back("coordinate-indicator", VertexFunction(torus, std::move(vals)));
    }
    batch.emplace_back("delta", VertexFunction::delta(torus, torus->root()));

    const auto radii = default_exhaustion_radii(*torus);
    const Exhaustion exhaustion = make_exhaustion(torus, radii);
    const std::vector<double> eps_grid{1e-1, 1e-2};

    json all;
    all["experiment"] = "liouville-vanishing";
    all["version"] = kVersion;
    all["config"] = {{"d", cfg.d},
                     {"L", cfg.L},
                     {"random_functions", cfg.random_functions},
                     {"alpha", cfg.alpha},
                     {"tol", cfg.tol},
                     {"constancy_tol", cfg.constancy_tol},
                     {"seed", cfg.seed}};
    all["functions"] = json::array();

    std::ostringstream csv;
    csv << "function,spread,iterations,mean\n";
    bool all_constant = true;
    for (const auto& [name, g] : batch) {
        const BoundaryValueReport bv = boundary_value(kernel, g, cfg.tol, 0);
        const double spread = bv.limit.max() - bv.limit.min();
        const bool constant = bv.converged && spread <= cfg.constancy_tol;
        all_constant = all_constant && constant;
        // witness: how g - g_tilde sits along the exhaustion
        const TrivialityVerdict residual_verdict =
            constant_at_infinity(g - bv.limit, exhaustion, eps_grid);
        json f;
        f["name"] = name;
        f["boundary_value_constant"] = constant;
        f["verdict"] = constant ? "trivial-evidence" : "inconclusive";
        f["spread"] = spread;
        f["iterations"] = bv.iterations;
        f["mean"] = bv.limit[torus->root()];
        f["difference_witness"] = verdict_json(residual_verdict);
        all["functions"].push_back(std::move(f));
        csv << name << ',' << format_double(spread) << ',' << bv.iterations << ','
            << format_double(bv.limit[torus->root()]) << "\n";
    }
    const std::string verdict_path = out_path(cfg.out_dir, "verdicts.json");
    write_text_file(verdict_path, all.dump(2) + "\n");
    const std::string csv_path = out_path(cfg.out_dir, "spreads.csv");
    write_text_file(csv_path, csv.str());

    ExperimentResult res;
    res.exit_code = all_constant ? 0 : 2;
    res.summary = all_constant ? "all boundary values constant"
                               : "some boundary value failed the constancy check";
    res.files = {verdict_path, csv_path};
    return res;
}

ExperimentResult run_injection_diagnostic(const InjectionConfig& cfg) {
    if (!(cfg.q <= cfg.p))
        throw std::invalid_argument("run_injection_diagnostic: need q <= p");
    if (!(cfg.p < 0.5 * cfg.d))
        throw std::invalid_argument("run_injection_diagnostic: need p < d/2");
    const GluedGreenExample ex =
        glued_green_example(cfg.d, cfg.L, cfg.green_terms, cfg.vertex_cap);
    const WalkKernel kernel = make_kernel(ex.graph, 0.5);

    json table = json::array();
    std::string first_witness;
    bool identical = true;
    bool any_inconclusive = false;
    for (const double exponent : {cfg.q, cfg.p}) {
        // the boundary-value computation never consults the exponent; only
        // the reported norms depend on it
        const BoundaryValueReport bv = boundary_value(kernel, ex.g, 1e-9, 64);
        const std::string witness = serialize_function(bv.limit);
        if (first_witness.empty())
            first_witness = witness;
        else
            identical = identical && witness == first_witness;

        const auto radii = default_exhaustion_radii(*ex.graph);
        const Exhaustion exhaustion = make_exhaustion(ex.graph, radii);
        const TrivialityVerdict v = constant_at_infinity(ex.g, exhaustion, cfg.eps_grid);
        any_inconclusive =
            any_inconclusive || v.kind == TrivialityVerdict::Kind::Inconclusive;
        json row;
        row["exponent"] = exponent;
        row["grad_norm"] = lp_norm_edges(gradient(ex.g), exponent);
        row["dp_norm"] = dp_norm(ex.g, exponent);
        row["verdict"] = to_string(v.kind);
        row["boundary_iterations"] = bv.iterations;
        table.push_back(std::move(row));
    }

    json j;
    j["experiment"] = "injection-diagnostic";
    j["version"] = kVersion;
    j["config"] = {{"d", cfg.d}, {"L", cfg.L}, {"q", cfg.q}, {"p", cfg.p},
                   {"green_terms", ex.green_terms}};
    j["table"] = std::move(table);
    j["boundary_witnesses_identical"] = identical;
    const std::string path = out_path(cfg.out_dir, "injection.json");
    write_text_file(path, j.dump(2) + "\n");

    ExperimentResult res;
    res.exit_code = identical ? (any_inconclusive ? 2 : 0) : 2;
    res.summary = identical ? "boundary value independent of the exponent"
                            : "boundary witnesses differ between exponents";
    res.files = {path};
    return res;
}

} // namespace gpl
