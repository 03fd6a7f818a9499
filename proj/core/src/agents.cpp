#include "seedspan/agents/agents.hpp"

#include <cmath>

namespace seedspan {

std::unique_ptr<Agent> make_agent(const AgentConfig& cfg, std::uint64_t agent_seed) {
    if (cfg.exploration < 0.0)
        throw ConfigError("agent: exploration constant must be non-negative");
    if (cfg.rollout_depth_cap < 1)
        throw ConfigError("agent: rollout_depth_cap must be positive");
    switch (cfg.kind) {
        case AgentKind::random:
            if (cfg.budget != 0) throw ConfigError("agent: random agents must have budget 0");
            return std::make_unique<RandomAgent>(agent_seed);
        case AgentKind::ismcts:
            if (cfg.budget < 1) throw ConfigError("agent: ismcts agents need budget >= 1");
            return std::make_unique<IsmctsAgent>(cfg, agent_seed);
    }
    throw ConfigError("agent: unknown kind");
}

Action RandomAgent::act(const Game& game, const State& s, int, ChanceStream&) {
    game.legal_actions(s, legal_);
    if (legal_.empty()) throw ProtocolError("random agent: no legal actions");
    return legal_[rng_.next_below(legal_.size())];
}

int IsmctsAgent::find_child(int node, Action a) const {
    for (int c = pool_[static_cast<std::size_t>(node)].first_child; c >= 0;
         c = pool_[static_cast<std::size_t>(c)].next_sibling)
        if (pool_[static_cast<std::size_t>(c)].action == a) return c;
    return -1;
}

int IsmctsAgent::add_child(int node, Action a) {
    int idx = static_cast<int>(pool_.size());
    Node n;
    n.action = a;
    n.next_sibling = pool_[static_cast<std::size_t>(node)].first_child;
    pool_.push_back(n);
    pool_[static_cast<std::size_t>(node)].first_child = idx;
    return idx;
}

Scores IsmctsAgent::rollout(const Game& game, State& s, StreamSet& sim) {
    for (int d = 0; d < cfg_.rollout_depth_cap; ++d) {
        if (game.terminal(s)) return game.scores(s);
        game.legal_actions(s, legal_);
        Action a = legal_[rng_.next_below(legal_.size())];
        game.apply(s, a, sim);
    }
    if (game.terminal(s)) return game.scores(s);
    return {0.5, 0.5}; // depth cap: value as a draw
}

Action IsmctsAgent::act(const Game& game, const State& root, int seat, ChanceStream& redet_rng) {
    game.legal_actions(root, legal_);
    if (legal_.empty()) throw ProtocolError("ismcts agent: no legal actions");

    pool_.clear();
    pool_.reserve(static_cast<std::size_t>(cfg_.budget) + 1);
    pool_.push_back(Node{});
    if (!scratch_) scratch_ = root.clone();

    StreamSet sim = StreamSet::simulation(game.def(), 0);
    last_iterations_ = 0;

    for (int it = 0; it < cfg_.budget; ++it) {
        scratch_->copy_from(root);
        game.redeterminize(*scratch_, seat, redet_rng);
        sim.reseed(rng_.next());

        path_.clear();
        path_.push_back(0);
        int node = 0;
        Scores value{0.5, 0.5};

        while (true) {
            if (game.terminal(*scratch_)) {
                value = game.scores(*scratch_);
                break;
            }
            game.legal_actions(*scratch_, legal_);

            // unexpanded actions first, in canonical order
            Action expand_a = -1;
            for (Action a : legal_) {
                if (find_child(node, a) < 0) {
                    expand_a = a;
                    break;
                }
            }
            if (expand_a >= 0) {
                int c = add_child(node, expand_a);
                game.apply(*scratch_, expand_a, sim);
                path_.push_back(c);
                value = rollout(game, *scratch_, sim);
                break;
            }

            // UCB1 over the children legal in this determinization
            int mover = game.to_move(*scratch_);
            double ln_n = std::log(static_cast<double>(pool_[static_cast<std::size_t>(node)].visits));
            double best = -1.0;
            Action best_a = -1;
            int best_c = -1;
            for (Action a : legal_) {
                int c = find_child(node, a);
                const Node& cn = pool_[static_cast<std::size_t>(c)];
                double mean = cn.reward[mover] / cn.visits;
                double u = mean + cfg_.exploration * std::sqrt(ln_n / cn.visits);
                if (u > best) { // strict: ties go to the lowest action index
                    best = u;
                    best_a = a;
                    best_c = c;
                }
            }
            game.apply(*scratch_, best_a, sim);
            node = best_c;
            path_.push_back(node);
        }

        for (int n : path_) {
            Node& pn = pool_[static_cast<std::size_t>(n)];
            ++pn.visits;
            pn.reward[0] += value[0];
            pn.reward[1] += value[1];
        }
        ++last_iterations_;
    }

    // most-visited root action; ties break to the lowest action index
    game.legal_actions(root, legal_);
    Action best_a = legal_.front();
    int best_visits = -1;
    for (Action a : legal_) {
        int c = find_child(0, a);
        int v = c >= 0 ? pool_[static_cast<std::size_t>(c)].visits : 0;
        if (v > best_visits) {
            best_visits = v;
            best_a = a;
        }
    }
    return best_a;
}

} // namespace seedspan
