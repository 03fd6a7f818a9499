#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seedspan/runner/runner.hpp"
#include "seedspan/stats/mixtures.hpp"
#include "seedspan/stats/stats.hpp"

namespace seedspan {

// Everything that goes into one report.json. Sections are optional; only the
// ones present for the chosen mode are emitted. Output is deterministic:
// sorted keys, fixed indentation, no timestamps.
struct ReportInputs {
    std::string mode;
    std::string game;
    std::uint64_t root_seed = 0;
    int n_seeds = 0;
    int n_games = 0;
    int workers = 1;
    std::vector<int> budgets;
    std::vector<std::string> fixed_streams;
    std::map<std::string, std::string> extra_config;

    const SeedDistribution* distribution = nullptr;
    const MetricsReport* metrics = nullptr;
    const MirroredPairResult* mirrored = nullptr;
    const SkillSweep* sweep = nullptr;
    const NonMonotonicReport* nonmonotonic = nullptr;
    const VarianceCheck* variance = nullptr;
    const Mixture* mixture = nullptr;
};

std::string report_json(const ReportInputs& inputs);

// "seed,win_rate,n_games" rows, one per seed block.
std::string seeds_csv(const SeedDistribution& dist);

// "bucket_lo,bucket_hi,count" rows for the 50-bucket win-rate histogram.
std::string histogram_csv(const std::vector<double>& win_rates);

void write_text_file(const std::string& path, const std::string& content);

} // namespace seedspan
