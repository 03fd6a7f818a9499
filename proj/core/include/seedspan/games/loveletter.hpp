#pragma once
#include "seedspan/engine.hpp"

namespace seedspan {

// Two-player Love Letter, single round. Setup splits the 16-card shuffle into
// two streams so each can be held constant independently: "burn" picks the
// face-down burn card uniformly, "deck" shuffles the remaining 15. The
// composition is distribution-equivalent to one full shuffle.
//
// Cards: 1 Guard (x5), 2 Priest, 3 Baron, 4 Handmaid, 5 Prince, 6 King,
// 7 Countess, 8 Princess (2 each of 2-5, 1 each of 6-8).
//
// Actions: card*16 + param.
//   Guard:  param 0 = no effect (opponent protected), else 1..7 = guess card 2..8.
//   Prince: param 0 = target self, 1 = target opponent.
//   Others: param 0.
struct LoveLetterState : StateOf<LoveLetterState> {
    std::uint8_t deck[16] = {};
    std::uint8_t deck_size = 0; // draw from deck[deck_size-1]
    std::uint8_t burn = 0;
    std::uint8_t burn_used = 0;
    std::uint8_t hand[2] = {0, 0};
    std::uint8_t drawn = 0; // second card held by `seat` during their turn
    std::uint8_t discards[2][16] = {};
    std::uint8_t n_disc[2] = {0, 0};
    std::uint8_t protect[2] = {0, 0};
    std::uint8_t alive[2] = {1, 1};
    std::uint8_t seat = 0;
    std::int8_t known[2] = {-1, -1}; // card value seat i knows the opponent holds
    std::int8_t winner = -1;         // -1 ongoing, 0/1 winner, 2 draw
};

class LoveLetterGame final : public Game {
  public:
    LoveLetterGame();

    std::unique_ptr<State> new_game(StreamSet& streams) const override;
    bool terminal(const State& s) const override;
    Scores scores(const State& s) const override;
    int to_move(const State& s) const override;
    void legal_actions(const State& s, std::vector<Action>& out) const override;
    void apply(State& s, Action a, StreamSet& streams) const override;
    void redeterminize(State& s, int observer, ChanceStream& rng) const override;
    std::uint64_t observation_digest(const State& s, int observer) const override;
};

namespace loveletter {

// canonical 16-card multiset, sorted
constexpr std::uint8_t kFullDeck[16] = {1, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 7, 8};

// multiset of cards hidden from `observer` (opponent hand + deck + unused burn)
void unseen_cards(const LoveLetterState& st, int observer, std::vector<std::uint8_t>& out);

} // namespace loveletter

} // namespace seedspan
