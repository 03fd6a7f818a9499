#pragma once
#include <cmath>
#include <memory>

#include "seedspan/engine.hpp"

namespace seedspan {

enum class AgentKind { random, ismcts };

struct AgentConfig {
    AgentKind kind = AgentKind::random;
    int budget = 0;                          // ISMCTS iterations per decision; 0 for random
    double exploration = 1.4142135623730951; // UCB1 constant, sqrt(2)
    int rollout_depth_cap = 200;
};

// Validates the kind/budget invariant and builds a fresh agent for one playout.
std::unique_ptr<Agent> make_agent(const AgentConfig& cfg, std::uint64_t agent_seed);

class RandomAgent final : public Agent {
  public:
    explicit RandomAgent(std::uint64_t seed) : rng_(seed) {}
    Action act(const Game& game, const State& s, int seat, ChanceStream& redet_rng) override;

  private:
    Rng rng_;
    std::vector<Action> legal_;
};

// Open-loop Information-Set MCTS: every iteration redeterminizes the root
// through the shared redeterminization stream, then descends a tree keyed by
// action sequence. Chance inside the search is drawn from per-iteration
// simulation streams derived from the agent's own seed, so the real game
// streams are never consumed or observed.
class IsmctsAgent final : public Agent {
  public:
    IsmctsAgent(const AgentConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}

    Action act(const Game& game, const State& s, int seat, ChanceStream& redet_rng) override;

    // iterations run by the last act() call; equals budget by construction
    std::uint64_t last_iterations() const { return last_iterations_; }

  private:
    struct Node {
        Action action = -1;
        int first_child = -1;
        int next_sibling = -1;
        int visits = 0;
        double reward[2] = {0.0, 0.0};
    };

    int find_child(int node, Action a) const;
    int add_child(int node, Action a);
    Scores rollout(const Game& game, State& s, StreamSet& sim);

    AgentConfig cfg_;
    Rng rng_;
    std::uint64_t last_iterations_ = 0;
    std::vector<Node> pool_;
    std::vector<int> path_;
    std::vector<Action> legal_;
    std::unique_ptr<State> scratch_;
};

} // namespace seedspan
