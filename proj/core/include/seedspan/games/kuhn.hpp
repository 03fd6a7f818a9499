#pragma once
#include "seedspan/engine.hpp"

namespace seedspan {

// Kuhn poker played as a short-stack match: repeated ante-1/bet-1 hands from
// the 3-card deck {J, Q, K} until one stack is empty or max_hands elapse.
// The winner is the larger stack (equal stacks draw). The deal of every hand
// comes from the single "deal" stream, so a fixed game seed bakes in the
// whole card sequence.
//
// Actions: 0 = check, 1 = bet, 2 = fold, 3 = call.
// Cards:   0 = J, 1 = Q, 2 = K.
struct KuhnConfig {
    int start_chips = 4;
    int max_hands = 8;
};

struct KuhnState : StateOf<KuhnState> {
    std::int8_t stacks[2] = {0, 0};
    std::int8_t cards[2] = {-1, -1};
    std::int8_t pot = 0;
    std::int8_t hand_index = 0;
    std::int8_t first_to_act = 0; // alternates per hand
    std::int8_t actor = 0;
    std::uint8_t history = 0;     // bit-packed actions this hand
    std::int8_t history_len = 0;
    std::int8_t match_over = 0;
    std::int8_t invested[2] = {0, 0}; // chips committed this hand (ante + bets)
};

class KuhnGame final : public Game {
  public:
    explicit KuhnGame(KuhnConfig cfg = {});

    std::unique_ptr<State> new_game(StreamSet& streams) const override;
    bool terminal(const State& s) const override;
    Scores scores(const State& s) const override;
    int to_move(const State& s) const override;
    void legal_actions(const State& s, std::vector<Action>& out) const override;
    void apply(State& s, Action a, StreamSet& streams) const override;
    void redeterminize(State& s, int observer, ChanceStream& rng) const override;
    std::uint64_t observation_digest(const State& s, int observer) const override;

    const KuhnConfig& config() const { return cfg_; }

  private:
    void deal_hand(KuhnState& st, StreamSet& streams) const;
    void finish_hand(KuhnState& st, int hand_winner, StreamSet& streams) const;
    KuhnConfig cfg_;
};

} // namespace seedspan
