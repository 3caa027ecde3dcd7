// Command-line front end: named experiments over the delay-architecture
// library, emitting CSV/SVG/JSON artifacts. Exit codes: 0 ok, 2 validation
// failure, 3 numeric failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ndde/dense_resnet.hpp"
#include "ndde/embedding.hpp"
#include "ndde/errors.hpp"
#include "ndde/field.hpp"
#include "ndde/io.hpp"
#include "ndde/lambert.hpp"
#include "ndde/morse.hpp"
#include "ndde/neural_dde.hpp"
#include "ndde/regions.hpp"
#include "ndde/rng.hpp"
#include "ndde/serialize.hpp"
#include "ndde/small_delay.hpp"
#include "ndde/solver.hpp"

namespace {

using ndde::format_g17;
using ndde::Vec;

std::string single_line(std::string msg) {
    for (auto& c : msg)
        if (c == '\n') c = ' ';
    return msg;
}

// Writes to the path atomically, or to stdout when no path was given.
void emit_artifact(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        ndde::atomic_write_file(path, content);
}

// Shared numeric/flow options many subcommands carry.
struct CommonOpts {
    std::uint64_t seed = 0;
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--seed", common.seed, "Seed for all stochastic sampling");
    cmd->add_option("--config", common.config_path,
                    "Flat JSON file with defaults for this subcommand (flags win)");
}

// Field selection shared by simulate and discretize.
struct FieldOpts {
    std::string kind = "linear";
    double k0 = -1.0;
    double a = 1.0;
    double b = 0.0;
    std::size_t m = 1;
    double tau = 0.0;
};

void add_field_opts(CLI::App* cmd, FieldOpts& f) {
    cmd->add_option("--field", f.kind, "Field kind: zero, linear, tanh")
        ->check(CLI::IsMember({"zero", "linear", "tanh"}));
    cmd->add_option("--k0", f.k0, "Linear feedback gain");
    cmd->add_option("--a", f.a, "tanh feedback gain");
    cmd->add_option("--b", f.b, "cosine drift amplitude");
    cmd->add_option("--m", f.m, "State dimension");
    cmd->add_option("--tau", f.tau, "Delay");
}

ndde::VectorFieldSpec build_field(const FieldOpts& f) {
    if (f.kind == "zero") return ndde::zero_field(f.m, f.tau);
    if (f.kind == "tanh") return ndde::tanh_delay_field(f.a, f.b, f.tau, f.m);
    return ndde::linear_delay_field(f.k0, f.tau, f.m);
}

ndde::TargetMap build_target(const std::string& name, const std::string& params_text,
                             bool estimate, std::uint64_t seed) {
    nlohmann::json params = nlohmann::json::object();
    if (!params_text.empty()) {
        params = nlohmann::json::parse(params_text, nullptr, /*allow_exceptions=*/false);
        if (params.is_discarded() || !params.is_object())
            throw ndde::ConfigError("--target-params must be a JSON object");
    }
    ndde::TargetMap target = ndde::make_named_target(name, params);
    if (estimate) target.K_psi = ndde::estimate_lipschitz(target, seed);
    return target;
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
    FieldOpts field;
    double T = 1.0;
    int steps = 100;
    double y0 = 1.0;
    std::string out;
};

int run_simulate(const SimulateOpts& o) {
    const auto field = build_field(o.field);
    const ndde::TimeGrid grid = ndde::make_aligned_grid(0.0, o.T, o.steps, o.field.tau);
    const ndde::Trajectory tr = ndde::euler_solve(field, Vec(o.field.m, o.y0), grid);
    emit_artifact(o.out, ndde::trajectory_csv(tr));
    return 0;
}

// ------------------------------------------------------------------- embed

struct EmbedOpts {
    std::string construction = "nonaug";
    std::string target = "neg";
    std::string target_params;
    bool estimate_kpsi = false;
    double K = 4.0;
    double tau = 1.0;
    double T = 0.0;  // 0: construction default
    double w = 1.0;
    double wt = 1.0;
    std::size_t m = 0;  // 0: construction default
    int samples = 101;
    int steps = 1000;
    std::string out;
};

int run_embed(const EmbedOpts& o, const CommonOpts& common) {
    const ndde::TargetMap target =
        build_target(o.target, o.target_params, o.estimate_kpsi, common.seed);

    ndde::NeuralDDESpec spec;
    if (o.construction == "basic") {
        spec = ndde::embed_basic_tauT(target, o.T > 0.0 ? o.T : 1.0);
    } else if (o.construction == "nonaug") {
        spec = ndde::embed_nonaugmented(target, o.tau, o.K, o.w, o.wt, o.T, o.m);
    } else if (o.construction == "aug") {
        const std::size_t m = o.m > 0 ? o.m : target.n + target.q;
        spec = ndde::embed_augmented(target, o.tau, o.T > 0.0 ? o.T : 1.0, o.K, o.w, o.wt, m);
    } else {
        throw ndde::ConfigError("--construction must be basic, nonaug, or aug");
    }

    if (o.samples < 1) throw ndde::ConfigError("--samples must be positive");

    // Sample points: a uniform grid across the box in one dimension,
    // seed-driven uniform draws otherwise.
    std::vector<Vec> points;
    if (target.n == 1) {
        for (int i = 0; i < o.samples; ++i) {
            const double frac = o.samples == 1 ? 0.5 : static_cast<double>(i) / (o.samples - 1);
            points.push_back({target.lo[0] + (target.hi[0] - target.lo[0]) * frac});
        }
    } else {
        ndde::CounterRng rng(common.seed, /*stream=*/0x53616d70);
        for (int i = 0; i < o.samples; ++i) {
            Vec x(target.n);
            for (std::size_t d = 0; d < target.n; ++d)
                x[d] = rng.uniform_in(static_cast<std::uint64_t>(i) * target.n + d,
                                      target.lo[d], target.hi[d]);
            points.push_back(std::move(x));
        }
    }

    std::ostringstream csv;
    csv << "sample";
    for (std::size_t d = 0; d < target.n; ++d) csv << ",x" << (d + 1);
    for (std::size_t d = 0; d < target.q; ++d) csv << ",psi" << (d + 1);
    for (std::size_t d = 0; d < target.q; ++d) csv << ",phi" << (d + 1);
    csv << ",err\n";

    double max_err = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Vec psi = target.eval(points[i]);
        const Vec phi = ndde::ndde_forward(spec, points[i], o.steps);
        const double err = ndde::inf_norm_diff(psi, phi);
        max_err = std::max(max_err, err);
        csv << i;
        for (double v : points[i]) csv << ',' << format_g17(v);
        for (double v : psi) csv << ',' << format_g17(v);
        for (double v : phi) csv << ',' << format_g17(v);
        csv << ',' << format_g17(err) << '\n';
    }

    if (!o.out.empty()) ndde::atomic_write_file(o.out, csv.str());
    std::cout << "construction = " << o.construction << "\n";
    std::cout << "target = " << o.target << "\n";
    std::cout << "samples = " << points.size() << "\n";
    std::cout << "steps = " << o.steps << "\n";
    std::cout << "max_error = " << format_g17(max_err) << "\n";
    return 0;
}

// -------------------------------------------------------------- discretize

struct DiscretizeOpts {
    FieldOpts field;
    double T = 1.0;
    int steps = 10;
    double y0 = 1.0;
    std::string out;
};

int run_discretize(const DiscretizeOpts& o) {
    ndde::NeuralDDESpec spec;
    spec.lambda_in = ndde::AffineMap::identity(o.field.m);
    spec.lambda_out = ndde::AffineMap::identity(o.field.m);
    spec.field = build_field(o.field);
    spec.tau = o.field.tau;
    spec.T = o.T;

    const ndde::DenseResNetSpec net = ndde::discretize(spec, o.steps);
    const Vec h = ndde::dense_forward(net, Vec(o.field.m, o.y0));
    const ndde::Trajectory tr = ndde::euler_solve(spec.field, Vec(o.field.m, o.y0), net.grid);
    const double diff = ndde::inf_norm_diff(h, tr.final_state());

    std::ostringstream rep;
    rep << net.report();
    rep << "equivalence max |h_L - y_L| = " << format_g17(diff) << "\n";
    emit_artifact(o.out, rep.str());
    return 0;
}

// ---------------------------------------------------------------- lambertw

struct LambertOpts {
    int branch = 0;
    double x = 0.0;
    std::string out;
};

int run_lambertw(const LambertOpts& o) {
    const double w = ndde::lambert_w(o.branch, o.x);
    std::ostringstream rep;
    rep << "branch = " << o.branch << "\n";
    rep << "x = " << format_g17(o.x) << "\n";
    rep << "w = " << format_g17(w) << "\n";
    rep << "residual = " << format_g17(w * std::exp(w) - o.x) << "\n";
    emit_artifact(o.out, rep.str());
    return 0;
}

// ----------------------------------------------------------------- attract

struct AttractOpts {
    double k0 = -1.0;
    double tau = 0.25;
    double y0 = 1.0;
    double T = 5.0;
    int steps = 20000;
    std::string out;
};

int run_attract(const AttractOpts& o) {
    const ndde::AttractionReport rep = ndde::measure_attraction(o.k0, o.tau, o.y0, o.T, o.steps);
    if (!o.out.empty()) ndde::atomic_write_file(o.out, rep.csv());
    std::cout << "lambda1 = " << format_g17(rep.lambda1) << "\n";
    std::cout << "lambda2 = " << (rep.lambda2 ? format_g17(*rep.lambda2) : "none") << "\n";
    std::cout << "ybar0 = " << format_g17(rep.ybar0) << "\n";
    std::cout << "C_u = " << format_g17(rep.C_u_estimate) << "\n";
    std::cout << "fitted_rate = " << format_g17(rep.fitted_rate) << "\n";
    std::cout << "limit_reliable = " << (rep.limit_reliable ? "true" : "false") << "\n";
    std::cout << "rate_reliable = " << (rep.rate_reliable ? "true" : "false") << "\n";
    return 0;
}

// --------------------------------------------------------------- constants

struct ConstantsOpts {
    double K = 1.0, A = 0.0, T = 1.0, M = 1.0;
    double r0 = 1.0, r1 = 0.25, eps = 0.1, w = 1.0, wt = 1.0, C2 = 0.5;
    std::string out;
};

int run_constants(const ConstantsOpts& o) {
    const ndde::SeparationConstants c =
        ndde::separation_constants(o.K, o.A, o.T, o.M, o.r0, o.r1, o.eps, o.w, o.wt, o.C2);
    emit_artifact(o.out, c.to_json().dump(2) + "\n");
    return 0;
}

// ----------------------------------------------------------------- regions

struct RegionsOpts {
    bool sweep = false;
    double K = 1.0;
    double tau = 0.0;
    double kmin = 0.05, kmax = 10.0;
    double taumin = 0.0, taumax = 1.0;
    int res = 50;
    double T = 1.0;
    std::size_t m = 1, n = 1, q = 1;
    double kpsi = 1.0, w = 1.0, wt = 1.0;
    bool no_constants = false;
    ConstantsOpts bundle;  // reuses the canonical defaults
    std::string out;
    std::string svg;
};

int run_regions(const RegionsOpts& o) {
    ndde::RegionQuery fixed;
    fixed.K = o.K;
    fixed.tau = o.tau;
    fixed.T = o.T;
    fixed.m = o.m;
    fixed.n = o.n;
    fixed.q = o.q;
    fixed.K_psi = o.kpsi;
    fixed.w = o.w;
    fixed.w_tilde = o.wt;
    if (!o.no_constants)
        fixed.constants = ndde::ConstantsBundle{o.bundle.C2, o.bundle.M, o.bundle.A,
                                                o.bundle.r0, o.bundle.r1, o.bundle.eps};

    if (!o.sweep) {
        const ndde::RegionLabel lab = ndde::classify_region(fixed);
        std::ostringstream rep;
        rep << "K = " << format_g17(fixed.K) << "\n";
        rep << "tau = " << format_g17(fixed.tau) << "\n";
        rep << "label = " << ndde::region_kind_name(lab.kind) << "\n";
        rep << "justification = " << lab.justification << "\n";
        emit_artifact(o.out, rep.str());
        return 0;
    }

    const ndde::SweepResult sweep =
        ndde::sweep_regions(o.kmin, o.kmax, o.taumin, o.taumax, o.res, fixed);
    emit_artifact(o.out, sweep.csv());
    if (!o.svg.empty()) ndde::atomic_write_file(o.svg, sweep.svg());
    return 0;
}

// ------------------------------------------------------------------ config

// Flat-JSON config support: the file's key/value pairs become "--key=value"
// tokens inserted directly after the subcommand, so explicitly passed flags
// (parsed later, TakeLast) win over the file, which wins over defaults.
std::vector<std::string> inject_config(const std::vector<std::string>& args,
                                       const std::vector<std::string>& subcommands) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw ndde::ConfigError("cannot open config file " + path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object())
        throw ndde::ConfigError("config file " + path + " is not a flat JSON object");

    std::vector<std::string> tokens;
    for (const auto& [key, value] : doc.items()) {
        std::string text;
        if (value.is_string())
            text = value.get<std::string>();
        else if (value.is_boolean())
            text = value.get<bool>() ? "true" : "false";
        else if (value.is_number())
            text = format_g17(value.get<double>());
        else
            throw ndde::ConfigError("config key '" + key + "' must be a scalar");
        tokens.push_back("--" + key + "=" + text);
    }

    std::vector<std::string> result;
    bool inserted = false;
    for (const auto& arg : args) {
        result.push_back(arg);
        if (!inserted &&
            std::find(subcommands.begin(), subcommands.end(), arg) != subcommands.end()) {
            result.insert(result.end(), tokens.begin(), tokens.end());
            inserted = true;
        }
    }
    if (!inserted) throw ndde::ConfigError("--config requires a subcommand");
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delay-architecture experiments"};
    app.require_subcommand(0, 1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    CommonOpts common;
    add_common(&app, common);
    SimulateOpts sim;
    EmbedOpts emb;
    DiscretizeOpts dis;
    LambertOpts lam;
    AttractOpts att;
    ConstantsOpts con;
    RegionsOpts reg;

    CLI::App* c_sim = app.add_subcommand("simulate", "Integrate a delay field and emit the trajectory CSV");
    add_common(c_sim, common);
    add_field_opts(c_sim, sim.field);
    c_sim->add_option("--T", sim.T, "Horizon");
    c_sim->add_option("--steps", sim.steps, "Euler step count");
    c_sim->add_option("--y0", sim.y0, "Constant initial value (replicated)");
    c_sim->add_option("--out", sim.out, "CSV output path (stdout when omitted)");

    CLI::App* c_emb = app.add_subcommand("embed", "Run an exact-representation construction over its box");
    add_common(c_emb, common);
    c_emb->add_option("--construction", emb.construction, "basic, nonaug, or aug")
        ->check(CLI::IsMember({"basic", "nonaug", "aug"}));
    c_emb->add_option("--target", emb.target, "Named target map");
    c_emb->add_option("--target-params", emb.target_params, "JSON parameters for the target");
    c_emb->add_flag("--estimate-kpsi", emb.estimate_kpsi, "Replace the declared constant by a sampled estimate");
    c_emb->add_option("--K", emb.K, "Field Lipschitz budget");
    c_emb->add_option("--tau", emb.tau, "Delay");
    c_emb->add_option("--T", emb.T, "Horizon (0: construction default)");
    c_emb->add_option("--w", emb.w, "Read-in scale");
    c_emb->add_option("--wt", emb.wt, "Read-out scale");
    c_emb->add_option("--m", emb.m, "State dimension (0: construction default)");
    c_emb->add_option("--samples", emb.samples, "Evaluation points across the box");
    c_emb->add_option("--steps", emb.steps, "Euler step count");
    c_emb->add_option("--out", emb.out, "Sample CSV output path");

    CLI::App* c_dis = app.add_subcommand("discretize", "Layered-network view: index table plus solver equivalence");
    add_common(c_dis, common);
    add_field_opts(c_dis, dis.field);
    c_dis->add_option("--T", dis.T, "Horizon");
    c_dis->add_option("--steps", dis.steps, "Layer count");
    c_dis->add_option("--y0", dis.y0, "Constant initial value (replicated)");
    c_dis->add_option("--out", dis.out, "Report output path (stdout when omitted)");

    CLI::App* c_lam = app.add_subcommand("lambertw", "Real Lambert W on branch 0 or -1");
    add_common(c_lam, common);
    c_lam->add_option("--branch", lam.branch, "0 or -1");
    c_lam->add_option("--x", lam.x, "Argument")->required();
    c_lam->add_option("--out", lam.out, "Report output path (stdout when omitted)");

    CLI::App* c_att = app.add_subcommand("attract", "Decay of a constant-data solution toward its exponential shadow");
    add_common(c_att, common);
    c_att->add_option("--k0", att.k0, "Linear feedback gain");
    c_att->add_option("--tau", att.tau, "Delay");
    c_att->add_option("--y0", att.y0, "Initial value");
    c_att->add_option("--T", att.T, "Measurement horizon");
    c_att->add_option("--steps", att.steps, "Grid resolution");
    c_att->add_option("--out", att.out, "CSV output path");

    CLI::App* c_con = app.add_subcommand("constants", "Separation-of-regions constants ledger (JSON)");
    add_common(c_con, common);
    c_con->add_option("--K", con.K, "Field Lipschitz constant");
    c_con->add_option("--A", con.A, "Drift bound");
    c_con->add_option("--T", con.T, "Horizon");
    c_con->add_option("--M", con.M, "State magnitude bound");
    c_con->add_option("--r0", con.r0, "Critical-ball radius");
    c_con->add_option("--r1", con.r1, "Inner radius");
    c_con->add_option("--eps", con.eps, "Level tolerance");
    c_con->add_option("--w", con.w, "Read-in scale");
    c_con->add_option("--wt", con.wt, "Read-out scale");
    c_con->add_option("--C2", con.C2, "Envelope constant");
    c_con->add_option("--out", con.out, "JSON output path (stdout when omitted)");

    CLI::App* c_reg = app.add_subcommand("regions", "Classify (K, tau) points or sweep the plane");
    add_common(c_reg, common);
    c_reg->add_flag("--sweep", reg.sweep, "Sweep a rectangle instead of one point");
    c_reg->add_option("--K", reg.K, "Point mode: feedback strength");
    c_reg->add_option("--tau", reg.tau, "Point mode: delay");
    c_reg->add_option("--kmin", reg.kmin, "Sweep window");
    c_reg->add_option("--kmax", reg.kmax, "Sweep window");
    c_reg->add_option("--taumin", reg.taumin, "Sweep window");
    c_reg->add_option("--taumax", reg.taumax, "Sweep window");
    c_reg->add_option("--res", reg.res, "Points per axis");
    c_reg->add_option("--T", reg.T, "Horizon");
    c_reg->add_option("--m", reg.m, "State dimension");
    c_reg->add_option("--n", reg.n, "Input dimension");
    c_reg->add_option("--q", reg.q, "Output dimension");
    c_reg->add_option("--kpsi", reg.kpsi, "Target Lipschitz constant");
    c_reg->add_option("--w", reg.w, "Read-in scale");
    c_reg->add_option("--wt", reg.wt, "Read-out scale");
    c_reg->add_flag("--no-constants", reg.no_constants, "Drop the separation-constants bundle");
    c_reg->add_option("--C2", reg.bundle.C2, "Envelope constant");
    c_reg->add_option("--M", reg.bundle.M, "State magnitude bound");
    c_reg->add_option("--A", reg.bundle.A, "Drift bound");
    c_reg->add_option("--r0", reg.bundle.r0, "Critical-ball radius");
    c_reg->add_option("--r1", reg.bundle.r1, "Inner radius");
    c_reg->add_option("--eps", reg.bundle.eps, "Level tolerance");
    c_reg->add_option("--out", reg.out, "CSV output path (stdout when omitted)");
    c_reg->add_option("--svg", reg.svg, "Optional heatmap path");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = inject_config(args, {"simulate", "embed", "discretize", "lambertw", "attract",
                                    "constants", "regions"});
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (c_sim->parsed()) return run_simulate(sim);
        if (c_emb->parsed()) return run_embed(emb, common);
        if (c_dis->parsed()) return run_discretize(dis);
        if (c_lam->parsed()) return run_lambertw(lam);
        if (c_att->parsed()) return run_attract(att);
        if (c_con->parsed()) return run_constants(con);
        if (c_reg->parsed()) return run_regions(reg);
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: validation: " << single_line(e.what()) << "\n";
        return 2;
    } catch (const ndde::NumericError& e) {
        std::cerr << "error: numeric: " << single_line(e.what()) << "\n";
        return 3;
    } catch (const ndde::Error& e) {
        std::cerr << "error: validation: " << single_line(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << single_line(e.what()) << "\n";
        return 1;
    }
}
