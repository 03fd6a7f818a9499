#pragma once
#include <array>

#include "seedspan/engine.hpp"

namespace seedspan {

// Two-player Can't Stop with the official column ladder. All dice come from
// the single "dice" stream; future rolls are pre-determined by the seed but
// unknowable to the players.
//
// Actions:
//   0            roll (forced at the start of a turn)
//   1            stop (commit temporary progress)
//   2 + p*3 + c  advance for pairing p in {0,1,2}, choice c:
//                c=0 both sums, c=1 first sum only, c=2 second sum only.
// Pairings of the sorted dice (d0<=d1<=d2<=d3):
//   p=0 (d0+d1, d2+d3), p=1 (d0+d2, d1+d3), p=2 (d0+d3, d1+d2).
// If both sums of a pairing can be advanced they must be (only c=0 offered).
struct CantStopState : StateOf<CantStopState> {
    std::uint8_t perm[2][11] = {};    // permanent progress, columns 2..12 as 0..10
    std::int8_t claimed[11] = {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1};
    std::uint8_t marker_col[3] = {255, 255, 255};
    std::uint8_t marker_pos[3] = {0, 0, 0};
    std::uint8_t n_markers = 0;
    std::uint8_t dice[4] = {0, 0, 0, 0}; // sorted, valid in phase 1
    std::uint8_t phase = 0;              // 0 roll-or-stop, 1 choose pairing
    std::uint8_t seat = 0;
    std::uint8_t turn_has_progress = 0;  // stop is illegal before any advance
    std::int8_t winner = -1;
};

class CantStopGame final : public Game {
  public:
    CantStopGame();

    std::unique_ptr<State> new_game(StreamSet& streams) const override;
    bool terminal(const State& s) const override;
    Scores scores(const State& s) const override;
    int to_move(const State& s) const override;
    void legal_actions(const State& s, std::vector<Action>& out) const override;
    void apply(State& s, Action a, StreamSet& streams) const override;
    void redeterminize(State& s, int observer, ChanceStream& rng) const override;
    std::uint64_t observation_digest(const State& s, int observer) const override;
};

namespace cantstop {

constexpr std::array<int, 11> kColumnLength = {3, 5, 7, 9, 11, 13, 11, 9, 7, 5, 3};

// Legal advance actions for the given (already sorted) dice in this state.
// Exposed so tests can compare bust outcomes against exhaustive enumeration.
void pairing_options(const CantStopState& st, const std::array<std::uint8_t, 4>& dice,
                     std::vector<Action>& out);

// Allocation-free variant used on the playout hot path; out must hold 6.
int pairing_options_buf(const CantStopState& st, const std::array<std::uint8_t, 4>& dice,
                        Action out[6]);

int claimed_count(const CantStopState& st, int seat);

} // namespace cantstop

} // namespace seedspan
