#include "seedspan/stats/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace seedspan {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

json dist_json(const SeedDistribution& d) {
    json j;
    j["n_seeds"] = d.seed_ids.size();
    j["n_games"] = d.n_games;
    j["grand_mean"] = d.grand_mean;
    j["draw_fraction"] = d.draw_fraction;
    j["forced_draw_fraction"] = d.forced_draw_fraction;
    j["seed_ids"] = d.seed_ids;
    j["win_rates"] = d.win_rates;
    return j;
}

json metrics_json(const MetricsReport& m) {
    json j;
    j["n_seeds"] = m.n_seeds;
    j["n_games"] = m.n_games;
    j["grand_mean"] = m.grand_mean;
    j["entropy"] = m.entropy;
    j["span"] = m.span;
    j["trimmed_span"] = m.trimmed_span;
    j["outlier_fraction"] = m.outlier_fraction;
    j["single_game_variance"] = m.single_game_variance;
    j["mirrored_game_variance"] = m.mirrored_game_variance;
    j["null_interval"] = {m.null_lo, m.null_hi};
    return j;
}

json mirrored_json(const MirroredPairResult& m) {
    json j;
    j["n_pairs_per_seed"] = m.n_pairs;
    j["pair_mean"] = m.pair_mean;
    j["pair_variance"] = m.pair_variance;
    j["x2"] = m.x2;
    return j;
}

json sweep_json(const SkillSweep& s) {
    json j;
    j["budgets"] = s.budgets;
    j["n_games"] = s.n_games;
    j["seed_ids"] = s.seed_ids;
    j["win_rates"] = s.win_rates;
    return j;
}

json nonmono_json(const NonMonotonicReport& r) {
    json j;
    j["z_critical"] = r.z_critical;
    j["count_rounding"] = "draw-halves rounded toward wins";
    j["flagged_seeds"] = r.flagged;
    j["budget_fractions"] = r.budget_fractions;
    j["seed_fraction"] = r.seed_fraction;
    return j;
}

json variance_json(const VarianceCheck& v) {
    json j;
    j["n_draws"] = v.n_draws;
    j["single"] = {{"empirical", v.single_empirical},
                   {"theory", v.single_theory},
                   {"tolerance", v.single_tolerance},
                   {"ok", v.single_ok}};
    j["paired"] = {{"empirical", v.paired_empirical},
                   {"theory", v.paired_theory},
                   {"tolerance", v.paired_tolerance},
                   {"ok", v.paired_ok}};
    j["ok"] = v.ok;
    return j;
}

} // namespace

std::string report_json(const ReportInputs& in) {
    json j;
    j["version"] = 1;

    json cfg;
    cfg["mode"] = in.mode;
    cfg["game"] = in.game;
    cfg["root_seed"] = in.root_seed;
    cfg["workers"] = in.workers;
    if (in.n_seeds > 0) cfg["seeds"] = in.n_seeds;
    if (in.n_games > 0) cfg["games"] = in.n_games;
    if (!in.budgets.empty()) cfg["budgets"] = in.budgets;
    if (!in.fixed_streams.empty()) cfg["fixed_streams"] = in.fixed_streams;
    for (const auto& [k, v] : in.extra_config) cfg[k] = v;
    j["config"] = cfg;

    if (in.distribution) j["distribution"] = dist_json(*in.distribution);
    if (in.metrics) j["metrics"] = metrics_json(*in.metrics);
    if (in.mirrored) j["mirrored"] = mirrored_json(*in.mirrored);
    if (in.sweep) j["skill_sweep"] = sweep_json(*in.sweep);
    if (in.nonmonotonic) j["nonmonotonic"] = nonmono_json(*in.nonmonotonic);
    if (in.variance) j["variance_check"] = variance_json(*in.variance);
    if (in.mixture) j["mixture"] = in.mixture->describe();

    return j.dump(2) + "\n";
}

std::string seeds_csv(const SeedDistribution& dist) {
    std::string out = "seed,win_rate,n_games\n";
    for (std::size_t i = 0; i < dist.seed_ids.size(); ++i) {
        out += std::to_string(dist.seed_ids[i]);
        out += ',';
        out += fmt(dist.win_rates[i]);
        out += ',';
        out += std::to_string(dist.n_games);
        out += '\n';
    }
    return out;
}

std::string histogram_csv(const std::vector<double>& win_rates) {
    std::vector<int> counts = histogram50(win_rates);
    std::string out = "bucket_lo,bucket_hi,count\n";
    char buf[64];
    for (int b = 0; b < 50; ++b) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f,%d\n", b * 0.02, (b + 1) * 0.02,
                      counts[static_cast<std::size_t>(b)]);
        out += buf;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace seedspan
