// superchsh command line front end: play the superqubit CHSH game, optimize
// its parameters, print baselines and map demos, run the invariant suites.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superchsh/checks.hpp"
#include "superchsh/json_io.hpp"
#include "superchsh/optimizer.hpp"

namespace {

using nlohmann::json;
using namespace superchsh;

// Exit codes: 0 success, 2 malformed parameters or configuration,
// 3 extraction error, 4 no feasible point found.
constexpr int kExitOk = 0;
constexpr int kExitBadParams = 2;
constexpr int kExitExtraction = 3;
constexpr int kExitInfeasible = 4;

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("SUPERCHSH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("SUPERCHSH_SEED must be an unsigned integer");
        }
    }
    return 0;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

MapKind parse_map(const std::string& name) {
    const auto kind = map_from_string(name);
    if (!kind) throw std::invalid_argument("unknown map '" + name + "'");
    return *kind;
}

GameParameters load_params(const std::string& source) {
    if (source == "paper") return paper_winning_parameters();
    if (source == "zero") return zero_parameters();
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open parameter file: " + source);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("parameter file is not valid JSON: ") + e.what());
    }
    return game_parameters_from_json(j);
}

void apply_overrides(GameParameters& params, const std::vector<std::string>& overrides) {
    json patch = json::object();
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("override '" + kv + "' is not key=value");
        const std::string key = kv.substr(0, eq);
        try {
            patch[key] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("override '" + kv + "' has a non-numeric value");
        }
    }
    json merged = to_json(params);
    merged.merge_patch(patch);
    params = game_parameters_from_json(merged);  // rejects unknown keys
}

struct CommonIo {
    std::string output;
    std::string format = "json";
};

void add_io_options(CLI::App* cmd, CommonIo& io) {
    cmd->add_option("-o,--output", io.output, "Write to this file instead of stdout");
    cmd->add_option("--format", io.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

int run(int argc, char** argv) {
    CLI::App app{"superqubit CHSH game evaluator and optimizer"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    // ---- play ----------------------------------------------------------
    auto* play = app.add_subcommand("play", "Evaluate the game at fixed parameters");
    std::string play_map;
    std::string play_params = "zero";
    std::vector<std::string> play_set;
    bool play_trig_exp = false;
    std::string play_trig_scale = "rotation";
    double play_tol = 1e-8;
    CommonIo play_io;
    std::uint64_t play_seed = 0;
    bool play_seed_given = false;
    play->add_option("--map", play_map, "Probability map: dewitt | trig | rogers")->required();
    play->add_option("--params", play_params,
                     "Parameter preset 'paper' (published winning parameters, plain-angle "
                     "convention), 'zero', or a JSON file path");
    play->add_option("--set", play_set, "Override single parameters, e.g. --set r0=0.5");
    play->add_flag("--experimental-trig", play_trig_exp,
                   "Enable the experimental bipartite trigonometric map");
    play->add_option("--trig-scale", play_trig_scale, "Trig substitution scale source")
        ->check(CLI::IsMember({"rotation", "state"}));
    play->add_option("--tol", play_tol, "Feasibility tolerance");
    play->add_option("--seed", play_seed, "Seed recorded in the report (env SUPERCHSH_SEED)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { play_seed_given = true; });
    add_io_options(play, play_io);

    // ---- optimize ------------------------------------------------------
    auto* opt = app.add_subcommand("optimize", "Maximize the game value over the parameters");
    std::string opt_map;
    OptConfig cfg;
    std::vector<double> opt_box;
    bool opt_trig_exp = false;
    std::string opt_trig_scale = "rotation";
    std::uint64_t opt_seed = 0;
    bool opt_seed_given = false;
    CommonIo opt_io;
    opt->add_option("--map", opt_map, "Probability map: dewitt | trig | rogers")->required();
    opt->add_option("--restarts", cfg.restarts, "Independent random restarts");
    opt->add_option("--max-iters", cfg.max_iters, "Simplex iterations per penalty stage");
    opt->add_option("--seed", opt_seed, "Master seed (env SUPERCHSH_SEED as fallback)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { opt_seed_given = true; });
    opt->add_option("--box", opt_box,
                    "Compactified variant: |r_i| <= r_max, |s_j| <= s_max (one value for "
                    "both, or two)")
        ->expected(1, 2);
    opt->add_option("--weights", cfg.penalty_weights, "Escalating penalty weights");
    opt->add_option("--tol", cfg.feasibility_tol, "Feasibility tolerance");
    opt->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
    opt->add_flag("--experimental-trig", opt_trig_exp,
                  "Enable the experimental bipartite trigonometric map");
    opt->add_option("--trig-scale", opt_trig_scale, "Trig substitution scale source")
        ->check(CLI::IsMember({"rotation", "state"}));
    add_io_options(opt, opt_io);

    // ---- baselines -----------------------------------------------------
    auto* base = app.add_subcommand("baselines", "Print the reference winning probabilities");
    CommonIo base_io;
    add_io_options(base, base_io);

    // ---- maps-demo -----------------------------------------------------
    auto* demo = app.add_subcommand(
        "maps-demo", "Single-superqubit probability triples under all three maps");
    std::vector<double> demo_alpha{1.0, 0.0}, demo_beta{0.0, 0.0};
    double demo_r = 0.0;
    CommonIo demo_io;
    demo->add_option("--alpha", demo_alpha, "Amplitude of |0>: real part [imaginary part]")
        ->expected(1, 2);
    demo->add_option("--beta", demo_beta, "Amplitude of |1>: real part [imaginary part]")
        ->expected(1, 2);
    demo->add_option("--r", demo_r, "Grassmann deformation scale (eta = 2 r theta)");
    add_io_options(demo, demo_io);

    // ---- check ---------------------------------------------------------
    auto* check = app.add_subcommand("check", "Run the seeded invariant suites");
    std::uint64_t check_seed = 0;
    bool check_seed_given = false;
    check->add_option("--seed", check_seed, "Suite seed (env SUPERCHSH_SEED as fallback)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { check_seed_given = true; });

    CLI11_PARSE(app, argc, argv);

    if (play->parsed()) {
        const MapKind map = parse_map(play_map);
        GameParameters params = load_params(play_params);
        apply_overrides(params, play_set);
        GameOptions opts;
        opts.experimental_trig = play_trig_exp;
        opts.trig_scale = play_trig_scale == "state" ? TrigScale::State : TrigScale::Rotation;
        if (map == MapKind::Trigonometric && !opts.experimental_trig)
            throw std::invalid_argument(
                "the bipartite trigonometric game is experimental; pass --experimental-trig");
        const std::uint64_t seed = play_seed_given ? play_seed : seed_from_env();
        const GameReport report = play_game(params, map, opts, play_tol);
        if (play_io.format == "csv")
            write_output(tables_to_csv(report.tables), play_io.output);
        else
            write_output(report_to_json(report, seed).dump(2), play_io.output);
        return kExitOk;
    }

    if (opt->parsed()) {
        cfg.map = parse_map(opt_map);
        cfg.seed = opt_seed_given ? opt_seed : seed_from_env();
        cfg.game.experimental_trig = opt_trig_exp;
        cfg.game.trig_scale =
            opt_trig_scale == "state" ? TrigScale::State : TrigScale::Rotation;
        if (!opt_box.empty())
            cfg.box = std::pair{opt_box[0], opt_box.size() > 1 ? opt_box[1] : opt_box[0]};
        cfg.validate();
        const OptResult result = optimize(cfg);
        if (!result.feasible) {
            std::cerr << "optimize: no feasible point found in " << result.restarts_run
                      << " restarts\n";
            return kExitInfeasible;
        }
        const SettingTables tables = outcome_tables(result.best, cfg.map, cfg.game);
        if (opt_io.format == "csv")
            write_output(tables_to_csv(tables), opt_io.output);
        else
            write_output(result_to_json(result, cfg, tables).dump(2), opt_io.output);
        return kExitOk;
    }

    if (base->parsed()) {
        const json out{
            {"version", kVersion},
            {"classical", {{"value", classical_best()}, {"role", "deterministic-strategy bound"}}},
            {"tsirelson",
             {{"value", quantum_baseline()}, {"role", "ordinary quantum bound cos^2(pi/8)"}}},
            {"comm_complexity",
             {{"value", (3.0 + std::sqrt(6.0)) / 6.0},
              {"role", "communication-complexity triviality bound (3+sqrt(6))/6"}}},
            {"pr_box", {{"value", 1.0}, {"role", "no-signalling maximum"}}},
        };
        if (base_io.format == "csv") {
            std::string csv = "name,value\n";
            for (const auto& [k, v] : out.items())
                if (v.is_object()) csv += k + "," + v["value"].dump() + "\n";
            write_output(csv, base_io.output);
        } else {
            write_output(out.dump(2), base_io.output);
        }
        return kExitOk;
    }

    if (demo->parsed()) {
        const Complex alpha(demo_alpha[0], demo_alpha.size() > 1 ? demo_alpha[1] : 0.0);
        const Complex beta(demo_beta[0], demo_beta.size() > 1 ? demo_beta[1] : 0.0);
        const SuperKet3 psi = superqubit_state(alpha, beta, demo_r);
        json out{{"version", kVersion},
                 {"alpha", {alpha.real(), alpha.imag()}},
                 {"beta", {beta.real(), beta.imag()}},
                 {"r", demo_r}};
        std::string csv = "map,p0,p1,pdot\n";
        for (MapKind kind :
             {MapKind::DeWitt, MapKind::Trigonometric, MapKind::ModifiedRogers}) {
            std::optional<TrigContext> ctx;
            if (kind == MapKind::Trigonometric) ctx = TrigContext{demo_r, 0.0};
            const double p0 = extract(kind, grassmann_prob(Basis::Zero, psi), ctx);
            const double p1 = extract(kind, grassmann_prob(Basis::One, psi), ctx);
            const double pdot = extract(kind, grassmann_prob(Basis::Dot, psi), ctx);
            out[to_string(kind)] = {{"p0", p0}, {"p1", p1}, {"pdot", pdot}};
            csv += to_string(kind) + "," + json(p0).dump() + "," + json(p1).dump() + "," +
                   json(pdot).dump() + "\n";
        }
        write_output(demo_io.format == "csv" ? csv : out.dump(2), demo_io.output);
        return kExitOk;
    }

    if (check->parsed()) {
        const std::uint64_t seed = check_seed_given ? check_seed : seed_from_env();
        const auto results = checks::run_all(seed);
        bool all_pass = true;
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  worst " << r.worst;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES") << "\n";
        return all_pass ? kExitOk : 1;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ExtractionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExtraction;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
