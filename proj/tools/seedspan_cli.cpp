#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "seedspan/games/registry.hpp"
#include "seedspan/runner/runner.hpp"
#include "seedspan/stats/mixtures.hpp"
#include "seedspan/stats/serialize.hpp"
#include "seedspan/stats/stats.hpp"

namespace {

using namespace seedspan;
using nlohmann::json;

constexpr int kExitOk = 0, kExitConfig = 2, kExitRuntime = 3;

struct Config {
    std::string mode;
    std::string game;
    int seeds = 200;
    int games = 1000;
    std::vector<int> budgets; // one entry for flat modes, a ladder for sweeps
    std::vector<std::string> fix_streams;
    std::optional<std::uint64_t> root_seed;
    int workers = 1;
    std::string out = ".";
    int pairs = 0;      // mirror mode; 0 means games/2
    std::string mixture = "beta:2,5";
    int draws = 100000; // verify-variance
    int boot = 2000;    // bootstrap resamples for summary CIs
};

void apply_preset(Config& cfg, const std::string& preset) {
    if (preset == "desk") {
        cfg.seeds = 50;
        cfg.games = 500;
    } else if (preset == "paper") {
        cfg.seeds = 200;
        cfg.games = 1000;
    } else if (!preset.empty()) {
        throw ConfigError("unknown preset '" + preset + "' (valid: desk, paper)");
    }
}

void apply_json(Config& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file: " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    if (j.contains("preset")) apply_preset(cfg, j["preset"].get<std::string>());
    if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
    if (j.contains("game")) cfg.game = j["game"].get<std::string>();
    if (j.contains("seeds")) cfg.seeds = j["seeds"].get<int>();
    if (j.contains("games")) cfg.games = j["games"].get<int>();
    if (j.contains("budgets")) cfg.budgets = j["budgets"].get<std::vector<int>>();
    if (j.contains("budget")) cfg.budgets = {j["budget"].get<int>()};
    if (j.contains("fix_streams")) cfg.fix_streams = j["fix_streams"].get<std::vector<std::string>>();
    if (j.contains("root_seed")) cfg.root_seed = j["root_seed"].get<std::uint64_t>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("pairs")) cfg.pairs = j["pairs"].get<int>();
    if (j.contains("mixture")) cfg.mixture = j["mixture"].get<std::string>();
    if (j.contains("draws")) cfg.draws = j["draws"].get<int>();
    if (j.contains("boot")) cfg.boot = j["boot"].get<int>();
}

Mixture parse_mixture(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            try {
                args.push_back(std::stod(rest.substr(pos, comma - pos)));
            } catch (const std::exception&) {
                throw ConfigError("mixture '" + spec + "': bad numeric argument");
            }
            pos = comma + 1;
        }
    }
    try {
        if (name == "point" && args.size() == 1) return Mixture::point(args[0]);
        if (name == "twopoint" && args.size() == 2) return Mixture::two_point(args[0], args[1]);
        if (name == "twopoint" && args.size() == 3)
            return Mixture::two_point(args[0], args[1], args[2]);
        if (name == "beta" && args.size() == 2) return Mixture::beta(args[0], args[1]);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("mixture: ") + e.what());
    }
    throw ConfigError("unknown mixture '" + spec +
                      "' (valid: point:p, twopoint:a,b[,w], beta:alpha,beta)");
}

AgentSpec agent_for_budget(int budget) {
    AgentSpec a;
    a.kind = budget == 0 ? AgentKind::random : AgentKind::ismcts;
    a.budget = budget;
    return a;
}

struct MetricRow {
    std::string name;
    double value;
    std::optional<BootstrapCi> ci;
};

void print_table(const Config& cfg, const std::vector<MetricRow>& rows) {
    std::printf("mode: %s", cfg.mode.c_str());
    if (!cfg.game.empty()) std::printf("  game: %s", cfg.game.c_str());
    std::printf("  root-seed: %llu\n", static_cast<unsigned long long>(*cfg.root_seed));
    std::printf("%-24s %12s %24s\n", "metric", "value", "95% CI");
    for (const auto& r : rows) {
        if (r.ci)
            std::printf("%-24s %12.4f       [%8.4f, %8.4f]\n", r.name.c_str(), r.value, r.ci->lo,
                        r.ci->hi);
        else
            std::printf("%-24s %12.4f %24s\n", r.name.c_str(), r.value, "-");
    }
}

std::vector<MetricRow> metric_rows(const Config& cfg, const SeedDistribution& dist,
                                   const MetricsReport& m) {
    std::uint64_t boot_seed = derive_seed(*cfg.root_seed, "boot");
    auto ci = [&](const char* salt, double (*stat)(const std::vector<double>&)) {
        return bootstrap_ci(
            dist.win_rates, [stat](const std::vector<double>& v) { return stat(v); }, cfg.boot,
            derive_seed(boot_seed, salt));
    };
    std::vector<MetricRow> rows;
    rows.push_back({"grand_mean", m.grand_mean,
                    bootstrap_ci(
                        dist.win_rates,
                        [](const std::vector<double>& v) {
                            double s = 0;
                            for (double x : v) s += x;
                            return s / static_cast<double>(v.size());
                        },
                        cfg.boot, derive_seed(boot_seed, "mean"))});
    rows.push_back({"entropy", m.entropy, ci("entropy", +[](const std::vector<double>& v) {
                        return entropy(v);
                    })});
    rows.push_back({"span", m.span, ci("span", +[](const std::vector<double>& v) {
                        return v.size() < 2 ? 0.0 : span(v);
                    })});
    rows.push_back({"trimmed_span", m.trimmed_span,
                    ci("trimmed_span", +[](const std::vector<double>& v) {
                        return v.size() < 2 ? 0.0 : trimmed_span(v);
                    })});
    MetricRow outliers{"outlier_fraction", m.outlier_fraction, std::nullopt};
    rows.push_back(outliers);
    rows.push_back({"single_game_variance", m.single_game_variance, std::nullopt});
    rows.push_back({"mirrored_game_variance", m.mirrored_game_variance, std::nullopt});
    rows.push_back({"draw_fraction", dist.draw_fraction, std::nullopt});
    return rows;
}

int run(Config& cfg) {
    static const std::vector<std::string> kModes = {"distribution", "skill-sweep",  "mirror",
                                                    "disentangle",  "nonmonotonic", "verify-variance"};
    if (std::find(kModes.begin(), kModes.end(), cfg.mode) == kModes.end()) {
        std::string valid;
        for (const auto& m : kModes) valid += (valid.empty() ? "" : ", ") + m;
        throw ConfigError("mode: unknown mode '" + cfg.mode + "' (valid: " + valid + ")");
    }
    if (!cfg.root_seed) throw ConfigError("root-seed: required (no wall-clock seeding)");
    if (cfg.workers < 1) throw ConfigError("workers: must be >= 1");

    std::filesystem::create_directories(cfg.out);
    auto out_path = [&](const char* name) { return (std::filesystem::path(cfg.out) / name).string(); };

    ReportInputs rep;
    rep.mode = cfg.mode;
    rep.root_seed = *cfg.root_seed;
    rep.workers = cfg.workers;

    if (cfg.mode == "verify-variance") {
        Mixture mix = parse_mixture(cfg.mixture);
        VarianceCheck vc = verify_variance(mix, cfg.draws, *cfg.root_seed);
        rep.variance = &vc;
        rep.mixture = &mix;
        rep.extra_config["mixture"] = cfg.mixture;
        rep.extra_config["draws"] = std::to_string(cfg.draws);
        write_text_file(out_path("report.json"), report_json(rep));
        std::printf("mode: verify-variance  mixture: %s  draws: %d\n", mix.describe().c_str(),
                    cfg.draws);
        std::printf("%-8s %12s %12s %12s  %s\n", "check", "empirical", "theory", "3-sigma", "ok");
        std::printf("%-8s %12.6f %12.6f %12.6f  %s\n", "single", vc.single_empirical,
                    vc.single_theory, vc.single_tolerance, vc.single_ok ? "pass" : "FAIL");
        std::printf("%-8s %12.6f %12.6f %12.6f  %s\n", "paired", vc.paired_empirical,
                    vc.paired_theory, vc.paired_tolerance, vc.paired_ok ? "pass" : "FAIL");
        return vc.ok ? kExitOk : kExitRuntime;
    }

    if (cfg.game.empty()) throw ConfigError("game: required for mode '" + cfg.mode + "'");
    auto game = build_game(cfg.game);
    rep.game = cfg.game;
    rep.n_seeds = cfg.seeds;
    rep.n_games = cfg.games;

    const bool is_sweep = cfg.mode == "skill-sweep" || cfg.mode == "nonmonotonic";
    if (cfg.budgets.empty()) cfg.budgets = is_sweep ? std::vector<int>{0, 64, 1024} : std::vector<int>{0};
    if (!is_sweep && cfg.budgets.size() != 1)
        throw ConfigError("budget: mode '" + cfg.mode + "' takes exactly one budget");
    rep.budgets = cfg.budgets;

    SeedDistribution dist;
    MetricsReport metrics;
    MirroredPairResult mirrored;
    SkillSweep sweep;
    NonMonotonicReport nonmono;
    std::vector<MetricRow> rows;

    if (cfg.mode == "distribution" || cfg.mode == "disentangle") {
        AgentSpec a = agent_for_budget(cfg.budgets[0]);
        if (cfg.mode == "disentangle") {
            if (cfg.fix_streams.empty())
                throw ConfigError("fix-stream: disentangle mode needs at least one stream");
            rep.fixed_streams = cfg.fix_streams;
            dist = run_disentangled(*game, cfg.fix_streams, cfg.seeds, cfg.games, {a, a},
                                    *cfg.root_seed, cfg.workers);
        } else {
            dist = run_distribution(*game, cfg.seeds, cfg.games, {a, a}, *cfg.root_seed,
                                    cfg.workers);
        }
        metrics = compute_metrics(dist.win_rates, dist.n_games);
        rep.distribution = &dist;
        rep.metrics = &metrics;
        rows = metric_rows(cfg, dist, metrics);
    } else if (cfg.mode == "mirror") {
        AgentSpec a = agent_for_budget(cfg.budgets[0]);
        int pairs = cfg.pairs > 0 ? cfg.pairs : cfg.games / 2;
        if (pairs < 1) throw ConfigError("pairs: need at least one mirrored pair per seed");
        auto [mp, d] = run_mirrored(*game, cfg.seeds, pairs, {a, a}, *cfg.root_seed, cfg.workers);
        mirrored = std::move(mp);
        dist = std::move(d);
        metrics = compute_metrics(dist.win_rates, dist.n_games);
        rep.distribution = &dist;
        rep.metrics = &metrics;
        rep.mirrored = &mirrored;
        rows = metric_rows(cfg, dist, metrics);
        rows.push_back({"pair_mean", mirrored.pair_mean, std::nullopt});
        rows.push_back({"pair_variance", mirrored.pair_variance, std::nullopt});
        rows.push_back({"pair_variance_theory", 2.0 * metrics.mirrored_game_variance, std::nullopt});
    } else { // skill-sweep / nonmonotonic
        AgentSpec tmpl;
        sweep = run_skill_sweep(*game, cfg.budgets, cfg.seeds, cfg.games, tmpl, *cfg.root_seed,
                                cfg.workers);
        rep.sweep = &sweep;
        dist.seed_ids = sweep.seed_ids;
        dist.win_rates = sweep.win_rates.back();
        dist.n_games = cfg.games;
        for (double r : dist.win_rates) dist.grand_mean += r;
        dist.grand_mean /= static_cast<double>(dist.win_rates.size());
        metrics = compute_metrics(dist.win_rates, cfg.games);
        rep.distribution = &dist;
        rep.metrics = &metrics;
        rows = metric_rows(cfg, dist, metrics);
        for (std::size_t b = 0; b < sweep.budgets.size(); ++b) {
            double ts = trimmed_span(sweep.win_rates[b]);
            rows.push_back({"trimmed_span@" + std::to_string(sweep.budgets[b]), ts, std::nullopt});
        }
        if (cfg.mode == "nonmonotonic") {
            nonmono = nonmonotonic_seeds(sweep.win_rates, cfg.games);
            rep.nonmonotonic = &nonmono;
            rows.push_back({"nonmonotonic_fraction", nonmono.seed_fraction, std::nullopt});
        }
    }

    write_text_file(out_path("report.json"), report_json(rep));
    write_text_file(out_path("seeds.csv"), seeds_csv(dist));
    write_text_file(out_path("histogram.csv"), histogram_csv(dist.win_rates));
    print_table(cfg, rows);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"seedspan: measure how much game outcomes depend on the random seed"};
    app.get_formatter()->column_width(34);

    Config cfg;
    std::string config_file, preset;
    std::uint64_t root_seed_flag = 0;
    std::vector<int> budgets_flag;
    std::vector<std::string> fix_flag;

    app.add_option("--config", config_file, "JSON config file; flags override its values");
    app.add_option("--mode", cfg.mode,
                   "distribution | skill-sweep | mirror | disentangle | nonmonotonic | verify-variance");
    app.add_option("--game", cfg.game, "connect4 | cantstop | loveletter | kuhn");
    auto* opt_preset = app.add_option("--preset", preset, "desk (50x500) | paper (200x1000)");
    auto* opt_seeds = app.add_option("--seeds", cfg.seeds, "number of seed blocks");
    auto* opt_games = app.add_option("--games", cfg.games, "games per seed block");
    auto* opt_budget =
        app.add_option("--budget", budgets_flag,
                       "ISMCTS iteration budget (0 = random agent); repeat for a sweep ladder");
    auto* opt_fix = app.add_option("--fix-stream", fix_flag, "stream to hold fixed (disentangle)");
    auto* opt_root = app.add_option("--root-seed", root_seed_flag, "experiment root seed (required)");
    auto* opt_workers = app.add_option("--workers", cfg.workers, "worker threads (no effect on results)");
    auto* opt_out = app.add_option("--out", cfg.out, "output directory");
    auto* opt_pairs = app.add_option("--pairs", cfg.pairs, "mirrored pairs per seed (mirror mode)");
    auto* opt_mix = app.add_option("--mixture", cfg.mixture, "point:p | twopoint:a,b[,w] | beta:a,b");
    auto* opt_draws = app.add_option("--draws", cfg.draws, "Monte-Carlo draws (verify-variance)");
    auto* opt_boot = app.add_option("--boot", cfg.boot, "bootstrap resamples for summary CIs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        // precedence: defaults < preset < config file < explicit flags
        Config flags = cfg;
        cfg = Config{};
        if (*opt_preset) apply_preset(cfg, preset);
        if (!config_file.empty()) apply_json(cfg, config_file);
        if (!flags.mode.empty()) cfg.mode = flags.mode;
        if (!flags.game.empty()) cfg.game = flags.game;
        if (*opt_seeds) cfg.seeds = flags.seeds;
        if (*opt_games) cfg.games = flags.games;
        if (*opt_budget) cfg.budgets = budgets_flag;
        if (*opt_fix) cfg.fix_streams = fix_flag;
        if (*opt_root) cfg.root_seed = root_seed_flag;
        if (*opt_workers) cfg.workers = flags.workers;
        if (*opt_out) cfg.out = flags.out;
        if (*opt_pairs) cfg.pairs = flags.pairs;
        if (*opt_mix) cfg.mixture = flags.mixture;
        if (*opt_draws) cfg.draws = flags.draws;
        if (*opt_boot) cfg.boot = flags.boot;

        return run(cfg);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return kExitRuntime;
    }
}
