#pragma once
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seedspan/agents/agents.hpp"
#include "seedspan/engine.hpp"

namespace seedspan {

struct AgentSpec {
    AgentKind kind = AgentKind::random;
    int budget = 0;
    double exploration = 1.4142135623730951;
    int rollout_depth_cap = 200;

    AgentConfig to_config() const { return {kind, budget, exploration, rollout_depth_cap}; }
    std::string describe() const;
};

enum class PositionPolicy { fixed, rotate, mirror };

// One seed block: n_games playouts sharing whatever seed components are held
// constant, with fresh redeterminization/agent seeds per game.
struct BlockSpec {
    int n_games = 1;
    std::array<AgentSpec, 2> agents;
    PositionPolicy position = PositionPolicy::fixed;
    bool fixed_agent_seeds = false; // reuse the same agent seeds in every game
    std::optional<std::uint64_t> master_seed;
    std::map<std::string, std::uint64_t> stream_overrides;
};

struct BlockResult {
    Scores mean{0.0, 0.0};                 // per-seat mean score
    std::vector<double> first_scores;      // seat-0 score per game
    std::vector<double> agent0_scores;     // reference agent's score per game
    std::vector<std::uint64_t> digests;
    int draws = 0;
    int forced_draws = 0;
};

// Per-seed first-player win rates: the empirical seed distribution.
struct SeedDistribution {
    std::vector<std::uint64_t> seed_ids;
    std::vector<double> win_rates; // (wins + 0.5*draws) / n_games per seed
    int n_games = 0;
    double grand_mean = 0.0;
    double draw_fraction = 0.0;
    double forced_draw_fraction = 0.0;
};

struct MirroredPairResult {
    int n_pairs = 0;                     // per seed
    std::vector<std::vector<double>> x2; // [seed][pair]: reference player's wins in the pair
    double pair_mean = 0.0;
    double pair_variance = 0.0; // empirical, pooled over all pairs
};

struct SkillSweep {
    std::vector<int> budgets;
    std::vector<std::uint64_t> seed_ids;           // shared by every budget row
    std::vector<std::vector<double>> win_rates;    // [budget][seed]
    int n_games = 0;
};

// Deterministic parallel map: fn(i) for i in [0, n), any worker count, with
// results required to be a pure function of i.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

BlockResult run_block(const Game& game, const BlockSpec& spec, std::uint64_t block_id,
                      std::uint64_t root_seed, int workers = 1);

SeedDistribution run_distribution(const Game& game, int n_seeds, int n_games,
                                  const std::array<AgentSpec, 2>& agents,
                                  std::uint64_t root_seed, int workers = 1,
                                  PositionPolicy position = PositionPolicy::fixed,
                                  bool fixed_agent_seeds = false);

std::pair<MirroredPairResult, SeedDistribution> run_mirrored(
    const Game& game, int n_seeds, int n_pairs, const std::array<AgentSpec, 2>& agents,
    std::uint64_t root_seed, int workers = 1);

// Same seed list for every budget; budget 0 means random agents.
SkillSweep run_skill_sweep(const Game& game, const std::vector<int>& budgets, int n_seeds,
                           int n_games, const AgentSpec& agent_template, std::uint64_t root_seed,
                           int workers = 1);

// Hold the named streams fixed per seed while everything else (other streams,
// redeterminization, agent seeds) varies per game.
SeedDistribution run_disentangled(const Game& game, const std::vector<std::string>& fixed_streams,
                                  int n_seeds, int n_games, const std::array<AgentSpec, 2>& agents,
                                  std::uint64_t root_seed, int workers = 1);

} // namespace seedspan
