// gpl: window experiments for random walks, transports, boundary values and
// triviality diagnostics on finite graphs.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gpl/boundary.hpp"
#include "gpl/calculus.hpp"
#include "gpl/cohomology.hpp"
#include "gpl/experiments.hpp"
#include "gpl/generators.hpp"
#include "gpl/io.hpp"
#include "gpl/isoperimetry.hpp"
#include "gpl/random_walk.hpp"
#include "gpl/transport.hpp"
#include "gpl/version.hpp"

using json = nlohmann::ordered_json;
using namespace gpl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::vector<std::pair<Graph::Vertex, double>> read_pairs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::pair<Graph::Vertex, double>> pairs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "vertex,value" || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad csv row: " + line);
        pairs.emplace_back(static_cast<Graph::Vertex>(std::stol(line.substr(0, comma))),
                           std::stod(line.substr(comma + 1)));
    }
    return pairs;
}

json verdict_to_json(const TrivialityVerdict& v) {
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

struct GraphArgs {
    std::string family = "grid";
    int d = 2;
    int L = 4;
    int branching = 2;
    int depth = 4;
    int radius = 3;
    int fuzz_n = 1;
    std::int64_t vertex_cap = 10'000'000;
};

GraphPtr build_family(const GraphArgs& a) {
    GraphPtr g;
    if (a.family == "grid")
        g = grid_window({a.d, a.L, a.vertex_cap});
    else if (a.family == "glued")
        g = glued_double_grid({a.d, a.L, a.vertex_cap});
    else if (a.family == "torus")
        g = torus_window({a.d, a.L, a.vertex_cap});
    else if (a.family == "tree")
        g = tree_ball(a.branching, a.depth, a.vertex_cap);
    else if (a.family == "cayley-z")
        g = cayley_ball(cayley_zd(1), a.radius, a.vertex_cap);
    else if (a.family == "cayley-z2")
        g = cayley_ball(cayley_zd(2), a.radius, a.vertex_cap);
    else if (a.family == "lamplighter")
        g = cayley_ball(cayley_lamplighter_z(), a.radius, a.vertex_cap);
    else
        throw std::runtime_error("unknown graph family: " + a.family);
    if (a.fuzz_n > 1) g = fuzz(g, a.fuzz_n);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-walk boundary values and triviality diagnostics on graph windows"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- graph ----
    GraphArgs ga;
    std::string graph_out;
    auto* cmd_graph = app.add_subcommand("graph", "build a named graph family as an edge list");
    cmd_graph->add_option("--family", ga.family,
                          "grid|glued|torus|tree|cayley-z|cayley-z2|lamplighter");
    cmd_graph->add_option("--d", ga.d, "lattice dimension");
    cmd_graph->add_option("--L", ga.L, "window radius");
    cmd_graph->add_option("--b", ga.branching, "tree branching");
    cmd_graph->add_option("--depth", ga.depth, "tree depth");
    cmd_graph->add_option("--radius", ga.radius, "cayley ball radius");
    cmd_graph->add_option("--fuzz", ga.fuzz_n, "apply the n-fuzz after building");
    cmd_graph->add_option("--cap", ga.vertex_cap, "vertex count cap");
    cmd_graph->add_option("--out", graph_out, "output file (default stdout)");
    cmd_graph->callback([&] {
        auto g = build_family(ga);
        std::ostringstream os;
        write_graph(os, *g);
        emit(os.str(), graph_out);
    });

    // ---- walk ----
    std::string walk_graph, walk_out;
    int walk_start = -1, walk_steps = 20;
    double walk_lazy = 0.0, walk_pprime = 2.0;
    auto* cmd_walk = app.add_subcommand("walk", "n-step walk statistics from a start vertex");
    cmd_walk->add_option("--graph", walk_graph, "edge-list file")->required();
    cmd_walk->add_option("--start", walk_start, "start vertex (default: root)");
    cmd_walk->add_option("--steps", walk_steps, "number of steps");
    cmd_walk->add_option("--lazy", walk_lazy, "laziness alpha in [0,1)");
    cmd_walk->add_option("--pprime", walk_pprime, "norm exponent p'");
    cmd_walk->add_option("--out", walk_out, "output csv (default stdout)");
    cmd_walk->callback([&] {
        auto g = read_graph_file(walk_graph);
        auto k = make_kernel(g, walk_lazy);
        if (walk_start < 0) walk_start = g->root();
        auto seq = norm_sequence(k, walk_start, walk_pprime, walk_steps);
        std::ostringstream os;
        os << "n,sup_prob,lp_norm,partial_sum\n";
        for (std::size_t i = 0; i < seq.norms.size(); ++i)
            os << i << ',' << format_double(seq.sup_probs[i]) << ','
               << format_double(seq.norms[i]) << ',' << format_double(seq.partial_sums[i])
               << "\n";
        emit(os.str(), walk_out);
        if (!seq.window_exact)
            std::cerr << "note: steps reach past the exactness radius "
                      << seq.exactness_radius << "\n";
    });

    // ---- transport ----
    std::string tr_graph, tr_fn, tr_out;
    int tr_start = -1, tr_n = 0, tr_k = 1;
    double tr_pprime = 2.0;
    auto* cmd_tr = app.add_subcommand(
        "transport", "walk-continuation transport norms and the pairing bound");
    cmd_tr->add_option("--graph", tr_graph)->required();
    cmd_tr->add_option("--start", tr_start, "start vertex (default: root)");
    cmd_tr->add_option("--n", tr_n, "source step count");
    cmd_tr->add_option("--k", tr_k, "continuation steps");
    cmd_tr->add_option("--pprime", tr_pprime, "transport norm exponent p'");
    cmd_tr->add_option("--fn", tr_fn, "vertex function csv for the pairing (default: distance)");
    cmd_tr->add_option("--out", tr_out, "output csv (default stdout)");
    cmd_tr->callback([&] {
        auto g = read_graph_file(tr_graph);
        auto k = make_kernel(g);
        if (tr_start < 0) tr_start = g->root();
        auto [exact, bound] = transport_norm_bound(k, tr_start, tr_n, tr_k, tr_pprime);
        VertexFunction fn = [&] {
            if (!tr_fn.empty()) return read_vertex_function_file(tr_fn, g);
            const auto dist = g->bfs_distances(g->root());
            std::vector<double> vals(dist.begin(), dist.end());
            return VertexFunction(g, std::move(vals));
        }();
        const double p = conjugate_exponent(tr_pprime);
        auto tau = walk_transport(k, tr_start, tr_n, std::max(tr_k, 1));
        auto [lhs, rhs] = holder_gap(fn, tau, p);
        std::ostringstream os;
        os << "exact_norm,bound,holder_lhs,holder_rhs\n"
           << format_double(exact) << ',' << format_double(bound) << ',' << format_double(lhs)
           << ',' << format_double(rhs) << "\n";
        emit(os.str(), tr_out);
    });

    // ---- boundary ----
    std::string bd_graph, bd_fn, bd_json, bd_csv;
    double bd_lazy = 0.5, bd_tol = 1e-9;
    int bd_max_n = 0;
    bool bd_dirichlet = false;
    auto* cmd_bd = app.add_subcommand("boundary", "iterated walk averages to their limit");
    cmd_bd->add_option("--graph", bd_graph)->required();
    cmd_bd->add_option("--fn", bd_fn, "vertex function csv")->required();
    cmd_bd->add_option("--lazy", bd_lazy, "laziness alpha");
    cmd_bd->add_option("--tol", bd_tol, "sup-increment stop tolerance");
    cmd_bd->add_option("--max-n", bd_max_n, "iteration cap (0 = automatic)");
    cmd_bd->add_flag("--dirichlet", bd_dirichlet, "zero values at the frontier");
    cmd_bd->add_option("--out-json", bd_json, "report json (default stdout)");
    cmd_bd->add_option("--out-csv", bd_csv, "limit function csv");
    cmd_bd->callback([&] {
        auto g = read_graph_file(bd_graph);
        auto fn = read_vertex_function_file(bd_fn, g);
        auto k = make_kernel(g, bd_lazy, bd_dirichlet);
        auto rep = boundary_value(k, fn, bd_tol, bd_max_n);
        json j;
        j["version"] = kVersion;
        j["iterations"] = rep.iterations;
        j["sup_increment_at_stop"] = rep.sup_increment_at_stop;
        j["exactness_radius"] = rep.exactness_radius;
        j["harmonicity_residual"] = rep.harmonicity_residual;
        j["converged"] = rep.converged;
        emit(j.dump(2) + "\n", bd_json);
        if (!bd_csv.empty()) write_vertex_function_file(bd_csv, rep.limit);
        if (!rep.converged) exit_code = kExitInconclusive;
    });

    // ---- ends ----
    std::string ends_graph, ends_out;
    std::vector<int> ends_radii;
    auto* cmd_ends = app.add_subcommand("ends", "frontier-reaching ends of the window");
    cmd_ends->add_option("--graph", ends_graph)->required();
    cmd_ends->add_option("--radii", ends_radii, "exhaustion radii (default: automatic)")
        ->delimiter(',');
    cmd_ends->add_option("--out", ends_out, "output json (default stdout)");
    cmd_ends->callback([&] {
        auto g = read_graph_file(ends_graph);
        auto radii = ends_radii.empty() ? default_exhaustion_radii(*g) : ends_radii;
        auto rep = ends(make_exhaustion(g, radii));
        json j;
        j["version"] = kVersion;
        j["radii"] = radii;
        j["count"] = rep.count;
        j["stable"] = rep.stable;
        j["stabilization_radius"] = rep.stabilization_radius;
        j["counts_per_radius"] = rep.counts_per_radius;
        j["note"] = rep.note;
        emit(j.dump(2) + "\n", ends_out);
        if (!rep.stable) exit_code = kExitInconclusive;
    });

    // ---- classify ----
    std::string cl_graph, cl_fn, cl_out;
    double cl_p = 2.0;
    std::vector<int> cl_radii;
    std::vector<double> cl_eps{1e-1, 1e-2};
    auto* cmd_cl = app.add_subcommand("classify", "constant-at-infinity triviality evidence");
    cmd_cl->add_option("--graph", cl_graph)->required();
    cmd_cl->add_option("--fn", cl_fn)->required();
    cmd_cl->add_option("--p", cl_p, "gradient norm exponent reported alongside");
    cmd_cl->add_option("--radii", cl_radii)->delimiter(',');
    cmd_cl->add_option("--eps", cl_eps, "epsilon grid")->delimiter(',');
    cmd_cl->add_option("--out", cl_out, "output json (default stdout)");
    cmd_cl->callback([&] {
        auto g = read_graph_file(cl_graph);
        auto fn = read_vertex_function_file(cl_fn, g);
        auto radii = cl_radii.empty() ? default_exhaustion_radii(*g) : cl_radii;
        auto v = constant_at_infinity(fn, make_exhaustion(g, radii), cl_eps);
        json j;
        j["version"] = kVersion;
        j["p"] = cl_p;
        j["grad_norm"] = lp_norm_edges(gradient(fn), cl_p);
        j["dp_norm"] = dp_norm(fn, cl_p);
        j["classification"] = verdict_to_json(v);
        emit(j.dump(2) + "\n", cl_out);
        if (v.kind == TrivialityVerdict::Kind::Inconclusive) exit_code = kExitInconclusive;
    });

    // ---- pharmonic ----
    std::string ph_graph, ph_boundary, ph_out, ph_json;
    double ph_p = 2.0, ph_tol = 1e-8;
    int ph_iters = 400;
    auto* cmd_ph = app.add_subcommand("pharmonic", "p-Dirichlet minimizer with frontier data");
    cmd_ph->add_option("--graph", ph_graph)->required();
    cmd_ph->add_option("--p", ph_p)->required();
    cmd_ph->add_option("--boundary", ph_boundary, "csv vertex,value rows covering the frontier")
        ->required();
    cmd_ph->add_option("--tol", ph_tol, "stationarity residual tolerance");
    cmd_ph->add_option("--max-iterations", ph_iters);
    cmd_ph->add_option("--out", ph_out, "solution csv");
    cmd_ph->add_option("--out-json", ph_json, "summary json (default stdout)");
    cmd_ph->callback([&] {
        auto g = read_graph_file(ph_graph);
        auto res = p_harmonic_solve(g, ph_p, read_pairs_csv(ph_boundary), ph_tol, ph_iters);
        json j;
        j["version"] = kVersion;
        j["p"] = ph_p;
        j["residual"] = res.residual;
        j["energy"] = res.energy;
        j["iterations"] = res.iterations;
        j["converged"] = res.converged;
        emit(j.dump(2) + "\n", ph_json);
        if (!ph_out.empty()) write_vertex_function_file(ph_out, res.solution);
        if (!res.converged) exit_code = kExitInconclusive;
    });

    // ---- isoperimetry ----
    std::string iso_graph, iso_mode = "omega", iso_out;
    int iso_samples = 1000;
    std::uint64_t iso_seed = 1;
    auto* cmd_iso = app.add_subcommand("isoperimetry", "sampled profile ratio scan");
    cmd_iso->add_option("--graph", iso_graph)->required();
    cmd_iso->add_option("--mode", iso_mode, "omega or d=<dim>");
    cmd_iso->add_option("--samples", iso_samples, "sampled sets across the families");
    cmd_iso->add_option("--seed", iso_seed);
    cmd_iso->add_option("--out", iso_out, "output csv (default stdout)");
    cmd_iso->callback([&] {
        auto g = read_graph_file(iso_graph);
        ProfileKind kind = ProfileKind::omega();
        if (iso_mode != "omega") {
            if (iso_mode.rfind("d=", 0) != 0)
                throw std::runtime_error("mode must be omega or d=<dim>");
            kind = ProfileKind::dimension(std::stoi(iso_mode.substr(2)));
        }
        auto sample = profile_scan(
            g, kind, {iso_samples / 2, iso_samples - iso_samples / 2, iso_seed});
        std::ostringstream os;
        os << "size,boundary,ratio\n";
        for (const auto& e : sample.entries)
            os << e.size << ',' << e.boundary << ',' << format_double(e.ratio) << "\n";
        emit(os.str(), iso_out);
        std::cerr << "min ratio " << format_double(sample.min_ratio) << " at size "
                  << sample.min_loc_size << "\n";
    });

    // ---- experiment ----
    std::string ex_name, ex_dir = ".";
    HeatDecayConfig hd;
    GluedExampleConfig ge;
    LiouvilleConfig lv;
    InjectionConfig inj;
    int ex_d = 0, ex_L = 0, ex_green = 0;
    double ex_q = 1.0, ex_p = 2.0, ex_alpha = -1.0;
    std::uint64_t ex_seed = 1;
    auto* cmd_ex = app.add_subcommand("experiment", "named experiment pipelines");
    cmd_ex->add_option("name", ex_name,
                       "heat-decay|glued-example|liouville-vanishing|injection-diagnostic")
        ->required();
    cmd_ex->add_option("--d", ex_d);
    cmd_ex->add_option("--L", ex_L);
    cmd_ex->add_option("--green-terms", ex_green);
    cmd_ex->add_option("--q", ex_q);
    cmd_ex->add_option("--p", ex_p);
    cmd_ex->add_option("--lazy", ex_alpha);
    cmd_ex->add_option("--seed", ex_seed);
    cmd_ex->add_option("--out-dir", ex_dir);
    cmd_ex->callback([&] {
        ExperimentResult res;
        if (ex_name == "heat-decay") {
            if (ex_d > 0) hd.d = ex_d;
            if (ex_L > 0) hd.L = ex_L;
            if (ex_alpha >= 0) hd.alpha = ex_alpha;
            hd.out_dir = ex_dir;
            res = run_heat_decay(hd);
        } else if (ex_name == "glued-example") {
            if (ex_d > 0) ge.d = ex_d;
            if (ex_L > 0) ge.L = ex_L;
            if (ex_green > 0) ge.green_terms = ex_green;
            if (ex_alpha >= 0) ge.alpha = ex_alpha;
            ge.out_dir = ex_dir;
            res = run_glued_example(ge);
        } else if (ex_name == "liouville-vanishing") {
            if (ex_d > 0) lv.d = ex_d;
            if (ex_L > 0) lv.L = ex_L;
            if (ex_alpha >= 0) lv.alpha = ex_alpha;
            lv.seed = ex_seed;
            lv.out_dir = ex_dir;
            res = run_liouville_vanishing(lv);
        } else if (ex_name == "injection-diagnostic") {
            if (ex_d > 0) inj.d = ex_d;
            if (ex_L > 0) inj.L = ex_L;
            if (ex_green > 0) inj.green_terms = ex_green;
            inj.q = ex_q;
            inj.p = ex_p;
            inj.out_dir = ex_dir;
            res = run_injection_diagnostic(inj);
        } else {
            throw std::runtime_error("unknown experiment: " + ex_name);
        }
        std::cerr << res.summary << "\n";
        for (const auto& f : res.files) std::cerr << "wrote " << f << "\n";
        exit_code = res.exit_code;
    });

    // --config FILE expands a flat key=value file into flags, in place
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        std::string path;
        if (a == "--config" && i + 1 < argc)
            path = argv[++i];
        else if (a.rfind("--config=", 0) == 0)
            path = a.substr(9);
        if (path.empty()) {
            args.push_back(a);
            continue;
        }
        std::ifstream cfg(path);
        if (!cfg) {
            std::cerr << "error: cannot open config file " << path << "\n";
            return kExitError;
        }
        std::string line;
        while (std::getline(cfg, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: config line is not key=value: " << line << "\n";
                return kExitError;
            }
            std::string key = line.substr(0, eq);
            if (key.rfind("--", 0) != 0) key = "--" + key;
            args.push_back(key);
            args.push_back(line.substr(eq + 1));
        }
    }

    try {
        app.parse(args.empty() && argc <= 1 ? std::vector<std::string>{}
                                            : std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
