#pragma once
#include "seedspan/engine.hpp"

namespace seedspan {

// 7x6 Connect Four. Deterministic control game: declares no chance streams,
// so any spread in per-seed win rates comes from the agents alone.
//
// Actions: 0..6, the column to drop into.
struct Connect4State : StateOf<Connect4State> {
    std::uint64_t board[2] = {0, 0}; // bit col*7+row, one plane per seat
    std::uint8_t height[7] = {0, 0, 0, 0, 0, 0, 0};
    std::uint8_t moves = 0;
    std::int8_t winner = -1; // -1 open, 0/1 winner, 2 drawn full board
};

class Connect4Game final : public Game {
  public:
    Connect4Game();

    std::unique_ptr<State> new_game(StreamSet& streams) const override;
    bool terminal(const State& s) const override;
    Scores scores(const State& s) const override;
    int to_move(const State& s) const override;
    void legal_actions(const State& s, std::vector<Action>& out) const override;
    void apply(State& s, Action a, StreamSet& streams) const override;
    void redeterminize(State& s, int observer, ChanceStream& rng) const override;
    std::uint64_t observation_digest(const State& s, int observer) const override;
};

namespace connect4 {
bool has_four(std::uint64_t plane);
} // namespace connect4

} // namespace seedspan
