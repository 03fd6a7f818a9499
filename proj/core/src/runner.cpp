#include "seedspan/runner/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace seedspan {

namespace {

struct GameRecord {
    double first = 0.0;  // seat-0 score
    double agent0 = 0.0; // reference agent's score
    std::uint64_t digest = 0;
    bool draw = false;
    bool forced = false;
};

// Seed schedule for one block. Every component is a pure function of
// (root_seed, block_id, game index), so results never depend on worker
// count or evaluation order, and identical indices across experiment kinds
// reproduce identical games.
struct BlockSeeder {
    std::uint64_t block_ctx;
    std::uint64_t fixed_agent_ctx;

    BlockSeeder(std::uint64_t root_seed, std::uint64_t block_id)
        : block_ctx(derive_seed(derive_seed(root_seed, "block"), block_id)),
          fixed_agent_ctx(derive_seed(block_ctx, "agent")) {}

    std::uint64_t game_ctx(int g) const { return derive_seed(block_ctx, static_cast<std::uint64_t>(g)); }
};

GameRecord play_one(const Game& game, const BlockSpec& spec, const BlockSeeder& seeder, int g) {
    std::uint64_t gctx = seeder.game_ctx(g);

    SeedSet seeds;
    seeds.game_master_seed = spec.master_seed ? *spec.master_seed : derive_seed(gctx, "master");
    seeds.stream_overrides = spec.stream_overrides;
    seeds.redeterminization_seed = derive_seed(gctx, "redet");

    bool swapped = (spec.position != PositionPolicy::fixed) && (g % 2 == 1);
    std::uint64_t agent_ctx =
        spec.fixed_agent_seeds ? seeder.fixed_agent_ctx : derive_seed(gctx, "agent");

    // agent index -> seat
    int seat_of[2] = {swapped ? 1 : 0, swapped ? 0 : 1};
    std::array<std::unique_ptr<Agent>, 2> owned;
    std::array<Agent*, 2> by_seat{nullptr, nullptr};
    seeds.agent_seeds.resize(2);
    for (int a = 0; a < 2; ++a) {
        std::uint64_t s = derive_seed(agent_ctx, static_cast<std::uint64_t>(a));
        owned[static_cast<std::size_t>(a)] = make_agent(spec.agents[static_cast<std::size_t>(a)].to_config(), s);
        int seat = seat_of[a];
        by_seat[static_cast<std::size_t>(seat)] = owned[static_cast<std::size_t>(a)].get();
        seeds.agent_seeds[static_cast<std::size_t>(seat)] = s;
    }

    PlayResult res = play_game(game, seeds, std::span<Agent* const>(by_seat.data(), 2));
    GameRecord rec;
    rec.first = res.outcome.scores[0];
    rec.agent0 = res.outcome.scores[static_cast<std::size_t>(seat_of[0])];
    rec.digest = res.outcome.trace_digest;
    rec.draw = res.outcome.scores[0] == 0.5 && res.outcome.scores[1] == 0.5;
    rec.forced = res.outcome.forced_draw;
    return rec;
}

void validate_block(const BlockSpec& spec) {
    if (spec.n_games < 1) throw ConfigError("run_block: n_games must be >= 1");
    if (spec.position != PositionPolicy::fixed && spec.n_games % 2 != 0)
        throw ConfigError("run_block: rotate/mirror seating needs an even n_games");
    for (const auto& a : spec.agents) make_agent(a.to_config(), 0); // config check
}

std::vector<std::uint64_t> make_seed_ids(std::uint64_t root_seed, int n_seeds) {
    std::uint64_t base = derive_seed(root_seed, "seed");
    std::vector<std::uint64_t> ids(static_cast<std::size_t>(n_seeds));
    for (int b = 0; b < n_seeds; ++b) ids[static_cast<std::size_t>(b)] = derive_seed(base, static_cast<std::uint64_t>(b));
    return ids;
}

// Play n_seeds blocks of n_games each; record[b * n_games + g].
std::vector<GameRecord> play_grid(const Game& game, const std::vector<BlockSpec>& blocks,
                                  std::uint64_t root_seed, int workers) {
    const int n_games = blocks.empty() ? 0 : blocks.front().n_games;
    const int total = static_cast<int>(blocks.size()) * n_games;
    std::vector<GameRecord> recs(static_cast<std::size_t>(total));
    std::vector<BlockSeeder> seeders;
    seeders.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        seeders.emplace_back(root_seed, static_cast<std::uint64_t>(b));

    parallel_for(total, workers, [&](int i) {
        int b = i / n_games;
        int g = i % n_games;
        try {
            recs[static_cast<std::size_t>(i)] =
                play_one(game, blocks[static_cast<std::size_t>(b)], seeders[static_cast<std::size_t>(b)], g);
        } catch (const ConfigError& e) {
            throw ConfigError("seed block " + std::to_string(b) + ", game " + std::to_string(g) +
                              ": " + e.what());
        } catch (const std::exception& e) {
            throw ProtocolError("seed block " + std::to_string(b) + ", game " + std::to_string(g) +
                                ": " + e.what());
        }
    });
    return recs;
}

SeedDistribution summarize(const std::vector<std::uint64_t>& seed_ids, int n_games,
                           const std::vector<GameRecord>& recs) {
    SeedDistribution dist;
    dist.seed_ids = seed_ids;
    dist.n_games = n_games;
    const int n_seeds = static_cast<int>(seed_ids.size());
    dist.win_rates.resize(static_cast<std::size_t>(n_seeds));
    int draws = 0, forced = 0;
    for (int b = 0; b < n_seeds; ++b) {
        double sum = 0.0;
        for (int g = 0; g < n_games; ++g) {
            const GameRecord& r = recs[static_cast<std::size_t>(b * n_games + g)];
            sum += r.first;
            draws += r.draw ? 1 : 0;
            forced += r.forced ? 1 : 0;
        }
        dist.win_rates[static_cast<std::size_t>(b)] = sum / n_games;
        dist.grand_mean += sum;
    }
    const double total = static_cast<double>(n_seeds) * n_games;
    dist.grand_mean /= total;
    dist.draw_fraction = draws / total;
    dist.forced_draw_fraction = forced / total;
    return dist;
}

} // namespace

std::string AgentSpec::describe() const {
    if (kind == AgentKind::random) return "random";
    return "ismcts:" + std::to_string(budget);
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto body = [&] {
        while (true) {
            int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(n, std::memory_order_relaxed); // stop remaining work
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

BlockResult run_block(const Game& game, const BlockSpec& spec, std::uint64_t block_id,
                      std::uint64_t root_seed, int workers) {
    validate_block(spec);
    for (const auto& [name, seed] : spec.stream_overrides) {
        (void)seed;
        if (std::find(game.def().stream_names.begin(), game.def().stream_names.end(), name) ==
            game.def().stream_names.end())
            throw ConfigError("run_block: game '" + game.def().name +
                              "' declares no stream named '" + name + "'");
    }

    BlockSeeder seeder(root_seed, block_id);
    BlockResult out;
    out.first_scores.resize(static_cast<std::size_t>(spec.n_games));
    out.agent0_scores.resize(static_cast<std::size_t>(spec.n_games));
    out.digests.resize(static_cast<std::size_t>(spec.n_games));
    parallel_for(spec.n_games, workers, [&](int g) {
        GameRecord rec = play_one(game, spec, seeder, g);
        out.first_scores[static_cast<std::size_t>(g)] = rec.first;
        out.agent0_scores[static_cast<std::size_t>(g)] = rec.agent0;
        out.digests[static_cast<std::size_t>(g)] = rec.digest;
    });
    for (int g = 0; g < spec.n_games; ++g) {
        double s0 = out.first_scores[static_cast<std::size_t>(g)];
        out.mean[0] += s0;
        out.mean[1] += 1.0 - s0;
        if (s0 == 0.5) ++out.draws;
    }
    out.mean[0] /= spec.n_games;
    out.mean[1] /= spec.n_games;
    return out;
}

SeedDistribution run_distribution(const Game& game, int n_seeds, int n_games,
                                  const std::array<AgentSpec, 2>& agents, std::uint64_t root_seed,
                                  int workers, PositionPolicy position, bool fixed_agent_seeds) {
    if (n_seeds < 2) throw ConfigError("run_distribution: need at least 2 seeds");
    std::vector<std::uint64_t> seed_ids = make_seed_ids(root_seed, n_seeds);
    std::vector<BlockSpec> blocks(static_cast<std::size_t>(n_seeds));
    for (int b = 0; b < n_seeds; ++b) {
        BlockSpec& spec = blocks[static_cast<std::size_t>(b)];
        spec.n_games = n_games;
        spec.agents = agents;
        spec.position = position;
        spec.fixed_agent_seeds = fixed_agent_seeds;
        spec.master_seed = seed_ids[static_cast<std::size_t>(b)];
    }
    validate_block(blocks.front());
    return summarize(seed_ids, n_games, play_grid(game, blocks, root_seed, workers));
}

std::pair<MirroredPairResult, SeedDistribution> run_mirrored(const Game& game, int n_seeds,
                                                             int n_pairs,
                                                             const std::array<AgentSpec, 2>& agents,
                                                             std::uint64_t root_seed, int workers) {
    if (n_seeds < 2) throw ConfigError("run_mirrored: need at least 2 seeds");
    if (n_pairs < 1) throw ConfigError("run_mirrored: need at least 1 pair per seed");
    const int n_games = 2 * n_pairs;
    std::vector<std::uint64_t> seed_ids = make_seed_ids(root_seed, n_seeds);
    std::vector<BlockSpec> blocks(static_cast<std::size_t>(n_seeds));
    for (int b = 0; b < n_seeds; ++b) {
        BlockSpec& spec = blocks[static_cast<std::size_t>(b)];
        spec.n_games = n_games;
        spec.agents = agents;
        spec.position = PositionPolicy::mirror;
        spec.master_seed = seed_ids[static_cast<std::size_t>(b)];
    }
    validate_block(blocks.front());
    std::vector<GameRecord> recs = play_grid(game, blocks, root_seed, workers);

    MirroredPairResult pairs;
    pairs.n_pairs = n_pairs;
    pairs.x2.resize(static_cast<std::size_t>(n_seeds));
    double sum = 0.0, sum_sq = 0.0;
    for (int b = 0; b < n_seeds; ++b) {
        auto& row = pairs.x2[static_cast<std::size_t>(b)];
        row.resize(static_cast<std::size_t>(n_pairs));
        for (int p = 0; p < n_pairs; ++p) {
            double x = recs[static_cast<std::size_t>(b * n_games + 2 * p)].agent0 +
                       recs[static_cast<std::size_t>(b * n_games + 2 * p + 1)].agent0;
            row[static_cast<std::size_t>(p)] = x;
            sum += x;
            sum_sq += x * x;
        }
    }
    const double n = static_cast<double>(n_seeds) * n_pairs;
    pairs.pair_mean = sum / n;
    pairs.pair_variance = sum_sq / n - pairs.pair_mean * pairs.pair_mean;
    return {std::move(pairs), summarize(seed_ids, n_games, recs)};
}

SkillSweep run_skill_sweep(const Game& game, const std::vector<int>& budgets, int n_seeds,
                           int n_games, const AgentSpec& agent_template, std::uint64_t root_seed,
                           int workers) {
    if (budgets.empty()) throw ConfigError("run_skill_sweep: need at least one budget");
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        if (budgets[i] < 0) throw ConfigError("run_skill_sweep: budgets must be >= 0");
        if (i > 0 && budgets[i] <= budgets[i - 1])
            throw ConfigError("run_skill_sweep: budgets must be strictly increasing");
    }
    SkillSweep sweep;
    sweep.budgets = budgets;
    sweep.seed_ids = make_seed_ids(root_seed, n_seeds);
    sweep.n_games = n_games;
    for (int budget : budgets) {
        AgentSpec spec = agent_template;
        spec.kind = budget == 0 ? AgentKind::random : AgentKind::ismcts;
        spec.budget = budget;
        // Same root -> the same seed blocks and game seed schedules for every
        // budget; only agent strength changes between rows.
        SeedDistribution dist =
            run_distribution(game, n_seeds, n_games, {spec, spec}, root_seed, workers);
        sweep.win_rates.push_back(std::move(dist.win_rates));
    }
    return sweep;
}

SeedDistribution run_disentangled(const Game& game, const std::vector<std::string>& fixed_streams,
                                  int n_seeds, int n_games, const std::array<AgentSpec, 2>& agents,
                                  std::uint64_t root_seed, int workers) {
    if (n_seeds < 2) throw ConfigError("run_disentangled: need at least 2 seeds");
    const auto& declared = game.def().stream_names;
    if (declared.empty())
        throw ConfigError("run_disentangled: game '" + game.def().name +
                          "' declares no chance streams to fix");
    if (fixed_streams.empty())
        throw ConfigError("run_disentangled: need at least one stream to fix");
    for (const auto& name : fixed_streams) {
        if (std::find(declared.begin(), declared.end(), name) == declared.end()) {
            std::string valid;
            for (const auto& d : declared) valid += (valid.empty() ? "" : ", ") + d;
            throw ConfigError("run_disentangled: game '" + game.def().name +
                              "' declares no stream named '" + name + "' (declared: " +
                              (valid.empty() ? "none" : valid) + ")");
        }
    }

    std::vector<std::uint64_t> seed_ids = make_seed_ids(root_seed, n_seeds);
    std::vector<BlockSpec> blocks(static_cast<std::size_t>(n_seeds));
    for (int b = 0; b < n_seeds; ++b) {
        BlockSpec& spec = blocks[static_cast<std::size_t>(b)];
        spec.n_games = n_games;
        spec.agents = agents;
        // Fixed streams get the seeds they would have under a whole-seed block
        // with this seed id (the engine derives per-stream seeds from the
        // override by name); everything else redraws per game. Fixing every
        // declared stream therefore reproduces run_distribution exactly.
        for (const auto& name : fixed_streams)
            spec.stream_overrides[name] = seed_ids[static_cast<std::size_t>(b)];
    }
    validate_block(blocks.front());
    return summarize(seed_ids, n_games, play_grid(game, blocks, root_seed, workers));
}

} // namespace seedspan
