// onsager: command-line front end for the spectral diagnostics library.

#include <chrono>
#include <cmath>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "onsager/criteria.hpp"
#include "onsager/defaults.hpp"
#include "onsager/dyadic.hpp"
#include "onsager/error.hpp"
#include "onsager/flux.hpp"
#include "onsager/generators.hpp"
#include "onsager/heuristics.hpp"
#include "onsager/io.hpp"
#include "onsager/parallel.hpp"
#include "onsager/solver.hpp"

using namespace onsager;
using nlohmann::json;

namespace {

const auto g_start = std::chrono::steady_clock::now();

void save_manifest(const fs::path& path, RunManifest& m) {
    m.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
    write_run_manifest(path, m);
}

json defaults_json() {
    namespace d = defaults;
    return {{"version", d::kVersion},
            {"bernstein_bound", d::kBernsteinBound},
            {"flux_estimate_constant", d::kFluxEstimateConstant},
            {"cfl_limit", d::kCflLimit},
            {"balance_tolerance", d::kBalanceTolerance},
            {"divergence_tolerance", d::kDivergenceTolerance},
            {"grid_size", d::kGridSize},
            {"viscosity", d::kViscosity},
            {"time_step", d::kTimeStep},
            {"end_time", d::kEndTime},
            {"snapshot_stride", d::kSnapshotStride},
            {"region_grid", d::kRegionGrid},
            {"cascade_shells", d::kCascadeShells},
            {"slope_fit_points", d::kSlopeFitPoints}};
}

json parameters_of(const CLI::App* sub) {
    json p = json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_name(false, true);
        if (name.empty() || name == "--help" || name == "-h") continue;
        const auto& res = opt->results();
        if (opt->get_type_size() == 0)
            p[name] = opt->count() > 0;
        else if (!res.empty())
            p[name] = res.size() == 1 ? json(res.front()) : json(res);
        else if (!opt->get_default_str().empty())
            p[name] = opt->get_default_str();
    }
    return p;
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
    fs::path p = out;
    p.replace_extension();
    p += suffix;
    return p;
}

void emit_json(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_atomic(out, j.dump(2) + "\n");
}

json verdict_json(const CriterionVerdict& v) {
    json hyps = json::array();
    for (const auto& h : v.hypotheses)
        hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}, {"slack", h.slack}});
    return {{"criterion", v.criterion},
            {"gate", v.gate},
            {"hypotheses", hyps},
            {"hypotheses_satisfied", v.hypotheses_satisfied},
            {"besov_s", v.besov_s},
            {"weak_in_time", v.weak_in_time},
            {"norm_value", v.norm_value},
            {"finite_at_resolution", v.finite_at_resolution},
            {"margin", v.margin},
            {"satisfied", v.satisfied()}};
}

struct Options {
    // simulate
    std::string init = "taylor-green";
    int n = defaults::kGridSize;
    double nu = defaults::kViscosity;
    double t_end = defaults::kEndTime;
    double dt = defaults::kTimeStep;
    int stride = defaults::kSnapshotStride;
    std::uint64_t seed = 0;
    bool no_budget = false;
    // shared
    std::string out;
    std::string traj;
    std::string beta = "2";
    std::string p = "8";
    // flux
    std::string summary;
    std::string energy;
    bool from_snapshots = false;
    // norms
    double s = 0.0;
    std::string summability = "inf";
    bool weak = false;
    // regions
    int grid = defaults::kRegionGrid;
    std::string inv_beta_max = "2";
    std::string inv_p_max = "3/2";
    // cascade
    double d = 0.0;
    double alpha = 1.0;
    double cascade_p = 2.0;
    double energy0 = 1.0;
    int start_shell = 0;
    int shells = defaults::kCascadeShells;
    // synth
    std::string generator = "taylor-green";
    int k = 3;
    double amplitude = 1.0;
    int q = 4;
    double slope = 5.0 / 6.0;
    double total = 1.0;
    // check-type1
    std::string series;
    double blowup_time = 1.0;
    double threshold = 1.0;
    double type1_p = 6.0;
};

int cmd_simulate(const Options& o, RunManifest& m) {
    SolverConfig cfg;
    cfg.grid = make_grid(o.n);
    cfg.nu = o.nu;
    cfg.dt = o.dt;
    cfg.t_end = o.t_end;
    cfg.stride = o.stride;
    cfg.init = parse_initial_condition(o.init);
    cfg.seed = o.seed;
    validate(cfg);
    TrajectoryWriter writer(o.out, cfg.nu, cfg.grid.n);
    const long last = std::lround(cfg.t_end / cfg.dt);
    long index = 0;
    SimulationStats stats;
    {
        // Budgets are logged at every step; snapshots only at the stride.
        SolverConfig every = cfg;
        every.stride = 1;
        stats = simulate(every, [&](const VelocityField& u) {
            if (!o.no_budget) writer.add_budget(snapshot_budget(u));
            if (index % cfg.stride == 0 || index == last) writer.add(u);
            ++index;
        });
    }
    writer.finish();
    m.outputs = {o.out};
    if (cfg.init == InitialCondition::Random) m.seeds = {cfg.seed};
    m.parameters["cfl_warnings"] = stats.cfl_warnings;
    m.parameters["max_cfl"] = stats.max_cfl;
    save_manifest(fs::path(o.out) / "run_manifest.json", m);
    std::cout << json{{"steps", stats.steps},
                      {"max_cfl", stats.max_cfl},
                      {"cfl_warnings", stats.cfl_warnings}}
                     .dump()
              << "\n";
    return 0;
}

int cmd_flux(const Options& o, RunManifest& m) {
    const TrajectoryReader reader(o.traj);
    FluxReportBuilder builder(reader.nu());
    std::string source;
    if (reader.has_budgets() && !o.from_snapshots) {
        source = "budget-log";
        for (const auto& b : reader.budgets()) builder.add(b);
    } else {
        source = "snapshots";
        const int threads = thread_cap();
        for (std::size_t start = 0; start < reader.size(); start += threads) {
            const std::size_t count = std::min<std::size_t>(threads, reader.size() - start);
            std::vector<SnapshotBudget> batch(count);
            std::vector<VelocityField> fields;
            for (std::size_t i = 0; i < count; ++i) fields.push_back(reader.load(start + i));
            parallel_for(count, threads,
                         [&](std::size_t i) { batch[i] = snapshot_budget(fields[i]); });
            for (const auto& b : batch) builder.add(b);
        }
    }
    const FluxReport& r = builder.report();
    require(r.energy.size() >= 2, "flux report needs at least two time levels");
    const fs::path out = o.out;
    const fs::path summary = o.summary.empty() ? sibling(out, "_summary.csv") : fs::path(o.summary);
    const fs::path energy = o.energy.empty() ? sibling(out, "_energy.csv") : fs::path(o.energy);
    write_atomic(out, flux_rows_csv(r));
    write_atomic(summary, flux_summary_csv(r));
    write_atomic(energy, energy_rows_csv(r));
    m.inputs = {o.traj};
    m.outputs = {out.string(), summary.string(), energy.string()};
    save_manifest(sibling(out, ".manifest.json"), m);
    std::cout << json{{"source", source},
                      {"time_levels", r.energy.size()},
                      {"max_relative_residual", r.max_relative_residual()},
                      {"max_relative_energy_residual", r.max_relative_energy_residual()}}
                     .dump()
              << "\n";
    return 0;
}

int cmd_norms(const Options& o, RunManifest& m) {
    const TrajectoryReader reader(o.traj);
    const Rational inv_p = parse_inverse_exponent(o.p);
    const Rational inv_beta = parse_inverse_exponent(o.beta);
    const Rational inv_sum = parse_inverse_exponent(o.summability);
    TimeSpaceSpec spec{exponent_from_inverse(inv_beta), o.weak,
                       BesovSpec{o.s, exponent_from_inverse(inv_p), exponent_from_inverse(inv_sum)}};
    std::vector<double> t, v;
    reader.for_each([&](const VelocityField& u) {
        t.push_back(*u.time);
        v.push_back(besov_norm(u, spec.besov));
    });
    const Membership mem = membership(NormSeries(t, v), spec);
    write_atomic(o.out, norm_series_csv(mem.series));
    m.inputs = {o.traj};
    m.outputs = {o.out};
    save_manifest(sibling(o.out, ".manifest.json"), m);
    std::cout << json{{"value", mem.value}, {"finite_at_resolution", mem.finite_at_resolution}}.dump()
              << "\n";
    return 0;
}

int cmd_classify(const Options& o, RunManifest& m) {
    const Rational inv_beta = parse_inverse_exponent(o.beta);
    const Rational inv_p = parse_inverse_exponent(o.p);
    const Trajectory traj = TrajectoryReader(o.traj).load_all();
    const RegionPoint region = classify_region(inv_beta, inv_p);
    json verdicts = json::array();
    for (const auto& v : classify(traj, inv_beta, inv_p)) verdicts.push_back(verdict_json(v));
    json out = {{"beta", o.beta},
                {"p", o.p},
                {"inv_beta", to_string(inv_beta)},
                {"inv_p", to_string(inv_p)},
                {"region", to_string(region.label)},
                {"verdicts", verdicts}};
    if (region.label != Region::Outside) out["minimal_alpha"] = to_string(region.minimal_alpha);
    emit_json(out, o.out);
    m.inputs = {o.traj};
    if (!o.out.empty()) {
        m.outputs = {o.out};
        save_manifest(sibling(o.out, ".manifest.json"), m);
    }
    return 0;
}

int cmd_regions(const Options& o, RunManifest& m) {
    const auto pts = region_grid(o.grid, parse_rational(o.inv_beta_max), parse_rational(o.inv_p_max));
    std::string csv = "inv_beta,inv_p,label,minimal_alpha\n";
    std::set<std::string> labels;
    for (const auto& pt : pts) {
        labels.insert(to_string(pt.label));
        csv += to_string(pt.inv_beta) + "," + to_string(pt.inv_p) + "," + to_string(pt.label) + "," +
               (pt.label == Region::Outside ? std::string("NA") : to_string(pt.minimal_alpha)) + "\n";
    }
    write_atomic(o.out, csv);
    m.outputs = {o.out};
    save_manifest(sibling(o.out, ".manifest.json"), m);
    std::cout << json{{"points", pts.size()}, {"labels", labels}}.dump() << "\n";
    return 0;
}

int cmd_cascade(const Options& o, RunManifest& m) {
    CascadeParams c;
    c.d = o.d;
    c.alpha = o.alpha;
    c.p = o.cascade_p;
    c.energy = o.energy0;
    c.start_shell = o.start_shell;
    c.shells = o.shells;
    const CascadeResult r = cascade_simulate(c);
    std::string csv =
        "n,lambda_n,T_n,cumulative_t,remaining_t,H_alpha_norm,Besov_norm,enstrophy_partial_sum\n";
    for (const auto& row : r.rows)
        csv += std::to_string(row.n) + "," + format_double(row.lambda_n) + "," +
               format_double(row.T_n) + "," + format_double(row.cumulative_t) + "," +
               format_double(row.remaining_t) + "," + format_double(row.h_alpha_norm) + "," +
               format_double(row.besov_norm) + "," + format_double(row.enstrophy_partial_sum) + "\n";
    write_atomic(o.out, csv);
    m.outputs = {o.out};
    save_manifest(sibling(o.out, ".manifest.json"), m);
    std::cout << json{{"T_star", r.T_star},
                      {"enstrophy_ratio", r.enstrophy_ratio},
                      {"enstrophy_diverges", r.enstrophy_diverges}}
                     .dump()
              << "\n";
    return 0;
}

int cmd_synth(const Options& o, RunManifest& m) {
    const Grid g = make_grid(o.n);
    VelocityField u;
    if (o.generator == "taylor-green")
        u = taylor_green(g);
    else if (o.generator == "shear")
        u = shear_mode(g, o.k, o.amplitude);
    else if (o.generator == "helical")
        u = helical_mode(g, o.k);
    else if (o.generator == "random") {
        u = random_divfree(g, power_law_profile(g.kmax, o.slope, o.total), o.seed);
        m.seeds = {o.seed};
    } else if (o.generator == "intermittent") {
        u = intermittent_field(g, o.q, o.d, o.seed);
        m.seeds = {o.seed};
    } else
        throw PreconditionError("unknown generator: " + o.generator);
    u.time = 0.0;
    write_snapshot(o.out, u, 0.0);
    m.outputs = {o.out};
    save_manifest(sibling(o.out, ".manifest.json"), m);
    return 0;
}

int cmd_check_type1(const Options& o, RunManifest& m) {
    const NormSeries s = read_norm_series_csv(o.series);
    const Type1Fit fit = check_type1_rate(s, o.blowup_time, o.type1_p, o.threshold);
    const double theta = 0.5 - (std::isinf(o.type1_p) ? 0.0 : 1.0 / o.type1_p);
    emit_json({{"p", o.type1_p},
               {"T", o.blowup_time},
               {"theta", theta},
               {"constant", fit.constant},
               {"threshold", o.threshold},
               {"within", fit.within}},
              o.out);
    m.inputs = {o.series};
    if (!o.out.empty()) {
        m.outputs = {o.out};
        save_manifest(sibling(o.out, ".manifest.json"), m);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral energy-flux and energy-equality diagnostics for periodic 3D flows"};
    app.require_subcommand(0, 1);
    bool print_defaults = false;
    app.add_flag("--print-defaults", print_defaults, "Print tolerances and constants as JSON");
    Options o;

    auto* sim = app.add_subcommand("simulate", "Integrate the Navier-Stokes equations");
    sim->add_option("--init", o.init, "taylor-green | shear | random")->capture_default_str();
    sim->add_option("--n", o.n, "Grid points per axis")->capture_default_str();
    sim->add_option("--nu", o.nu, "Viscosity")->capture_default_str();
    sim->add_option("--t-end", o.t_end, "End time")->capture_default_str();
    sim->add_option("--dt", o.dt, "Time step")->capture_default_str();
    sim->add_option("--stride", o.stride, "Steps between stored snapshots")->capture_default_str();
    sim->add_option("--seed", o.seed, "Seed for random initial data")->capture_default_str();
    sim->add_flag("--no-budget", o.no_budget, "Skip the per-step energy budget log");
    sim->add_option("--out", o.out, "Output trajectory directory")->required();

    auto* flux = app.add_subcommand("flux", "Energy flux and truncated balance of a trajectory");
    flux->add_option("--traj", o.traj, "Trajectory directory")->required();
    flux->add_option("--out", o.out, "Per (t, q) CSV")->required();
    flux->add_option("--summary", o.summary, "Per q CSV (default <out>_summary.csv)");
    flux->add_option("--energy", o.energy, "Untruncated balance CSV (default <out>_energy.csv)");
    flux->add_flag("--from-snapshots", o.from_snapshots, "Ignore the budget log");

    auto* norms = app.add_subcommand("norms", "Besov norm series and time norm");
    norms->add_option("--traj", o.traj, "Trajectory directory")->required();
    norms->add_option("--beta", o.beta, "Time exponent")->capture_default_str();
    norms->add_option("--p", o.p, "Space integrability")->capture_default_str();
    norms->add_option("--s", o.s, "Besov regularity")->capture_default_str();
    norms->add_option("--q", o.summability, "Besov summability")->capture_default_str();
    norms->add_flag("--weak", o.weak, "Weak (Lorentz) norm in time");
    norms->add_option("--out", o.out, "Series CSV")->required();

    auto* cls = app.add_subcommand("classify", "Test a trajectory against every criterion");
    cls->add_option("--traj", o.traj, "Trajectory directory")->required();
    cls->add_option("--beta", o.beta, "Time exponent")->required();
    cls->add_option("--p", o.p, "Space integrability")->required();
    cls->add_option("--out", o.out, "Verdict JSON (default stdout)");

    auto* reg = app.add_subcommand("regions", "Region labels on a (1/beta, 1/p) grid");
    reg->add_option("--grid", o.grid, "Cells per axis")->capture_default_str();
    reg->add_option("--inv-beta-max", o.inv_beta_max, "Largest 1/beta")->capture_default_str();
    reg->add_option("--inv-p-max", o.inv_p_max, "Largest 1/p")->capture_default_str();
    reg->add_option("--out", o.out, "Region CSV")->required();

    auto* cas = app.add_subcommand("cascade", "Dyadic cascade model");
    cas->add_option("--d", o.d, "Intermittency dimension in [0, 3)")->capture_default_str();
    cas->add_option("--alpha", o.alpha, "Norm regularity")->capture_default_str();
    cas->add_option("--p", o.cascade_p, "Besov integrability")->capture_default_str();
    cas->add_option("--energy", o.energy0, "Energy")->capture_default_str();
    cas->add_option("--start", o.start_shell, "First shell")->capture_default_str();
    cas->add_option("--shells", o.shells, "Number of shells")->capture_default_str();
    cas->add_option("--out", o.out, "Cascade CSV")->required();

    auto* syn = app.add_subcommand("synth", "Write a synthetic field snapshot");
    syn->add_option("--generator", o.generator,
                    "taylor-green | shear | helical | random | intermittent")
        ->capture_default_str();
    syn->add_option("--n", o.n, "Grid points per axis")->capture_default_str();
    syn->add_option("--k", o.k, "Wavenumber (shear, helical)")->capture_default_str();
    syn->add_option("--amp", o.amplitude, "Amplitude (shear)")->capture_default_str();
    syn->add_option("--q", o.q, "Shell (intermittent)")->capture_default_str();
    syn->add_option("--d", o.d, "Intermittency dimension (intermittent)")->capture_default_str();
    syn->add_option("--slope", o.slope, "Spectral slope (random)")->capture_default_str();
    syn->add_option("--total", o.total, "L2 norm (random)")->capture_default_str();
    syn->add_option("--seed", o.seed, "Seed")->capture_default_str();
    syn->add_option("--out", o.out, "Snapshot file")->required();

    auto* t1 = app.add_subcommand("check-type1", "Fit the Type-I rate constant of a norm series");
    t1->add_option("--series", o.series, "CSV with header t,value")->required();
    t1->add_option("--p", o.type1_p, "Integrability, > 4")->capture_default_str();
    t1->add_option("--T", o.blowup_time, "Blowup time")->capture_default_str();
    t1->add_option("--threshold", o.threshold, "Largest acceptable constant")->capture_default_str();
    t1->add_option("--out", o.out, "Verdict JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        (void)thread_cap();
        if (print_defaults) {
            std::cout << defaults_json().dump(2) << "\n";
            return 0;
        }
        const auto subs = app.get_subcommands();
        if (subs.empty()) {
            std::cerr << app.help();
            return 1;
        }
        CLI::App* sub = subs.front();
        RunManifest m;
        m.command = sub->get_name();
        m.parameters = parameters_of(sub);
        m.version = defaults::kVersion;
        const std::string& name = m.command;
        auto run = [&](auto cmd) { return cmd(o, m); };
        if (name == "simulate") return run(cmd_simulate);
        if (name == "flux") return run(cmd_flux);
        if (name == "norms") return run(cmd_norms);
        if (name == "classify") return run(cmd_classify);
        if (name == "regions") return run(cmd_regions);
        if (name == "cascade") return run(cmd_cascade);
        if (name == "synth") return run(cmd_synth);
        if (name == "check-type1") return run(cmd_check_type1);
        std::cerr << app.help();
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
