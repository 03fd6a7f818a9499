#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "seedspan/agents/agents.hpp"
#include "seedspan/games/cantstop.hpp"

using namespace seedspan;
using namespace seedspan::cantstop;

namespace {

// Independent restatement of the advance rules, written directly from the
// board rules rather than from the engine code:
//   - a column can be advanced if it is unclaimed, below the top, and either
//     already carries one of the (max 3) turn markers or a marker is free;
//   - a roll is playable if any of the three pairings lets the player advance
//     at least one of its two sums;
//   - a roll with no playable pairing is a bust.
struct Oracle {
    const CantStopState& st;

    bool column_open(int c, bool marker_free_needed) const {
        if (c < 0 || c > 10) return false;
        if (st.claimed[c] >= 0) return false;
        for (int i = 0; i < st.n_markers; ++i)
            if (st.marker_col[i] == c) return st.marker_pos[i] < kColumnLength[static_cast<std::size_t>(c)];
        if (marker_free_needed && st.n_markers >= 3) return false;
        return st.perm[st.seat][c] < kColumnLength[static_cast<std::size_t>(c)];
    }

    bool single_advance_possible(int sum) const { return column_open(sum - 2, true); }

    bool roll_playable(int d0, int d1, int d2, int d3) const {
        const int sums[3][2] = {{d0 + d1, d2 + d3}, {d0 + d2, d1 + d3}, {d0 + d3, d1 + d2}};
        for (const auto& pair : sums)
            if (single_advance_possible(pair[0]) || single_advance_possible(pair[1])) return true;
        return false;
    }
};

CantStopState state_with_markers(std::initializer_list<std::pair<int, int>> markers,
                                 std::initializer_list<int> claimed_cols = {}) {
    CantStopState st;
    for (int c : claimed_cols) st.claimed[c] = 1; // claimed by the opponent
    int i = 0;
    for (auto [col, pos] : markers) {
        st.marker_col[i] = static_cast<std::uint8_t>(col);
        st.marker_pos[i] = static_cast<std::uint8_t>(pos);
        ++i;
    }
    st.n_markers = static_cast<std::uint8_t>(i);
    if (i > 0) st.turn_has_progress = 1;
    return st;
}

bool engine_playable(const CantStopState& st, int d0, int d1, int d2, int d3) {
    std::array<std::uint8_t, 4> dice{static_cast<std::uint8_t>(d0), static_cast<std::uint8_t>(d1),
                                     static_cast<std::uint8_t>(d2), static_cast<std::uint8_t>(d3)};
    std::sort(dice.begin(), dice.end());
    std::vector<Action> opts;
    pairing_options(st, dice, opts);
    return !opts.empty();
}

} // namespace

TEST_CASE("bust outcomes match exhaustive enumeration for varied marker configurations") {
    // column indices: 0..10 for sums 2..12
    std::vector<CantStopState> configs;
    configs.push_back(state_with_markers({}));                              // fresh turn
    configs.push_back(state_with_markers({{5, 3}}));                        // one marker on 7
    configs.push_back(state_with_markers({{0, 1}, {10, 1}}));               // markers on 2 and 12
    configs.push_back(state_with_markers({{0, 1}, {4, 2}, {10, 1}}));       // three markers, edges
    configs.push_back(state_with_markers({{4, 3}, {5, 4}, {6, 2}}));        // three middle markers
    configs.push_back(state_with_markers({{0, 3}, {1, 5}, {10, 3}}));       // markers at column tops
    configs.push_back(state_with_markers({{5, 3}}, {4, 6}));                // neighbors claimed
    configs.push_back(state_with_markers({{0, 1}, {1, 2}, {2, 3}}, {3, 4, 5, 6, 7, 8}));
    configs.push_back(state_with_markers({{3, 9}, {5, 13}, {7, 9}}));       // all three at the top
    {
        CantStopState st = state_with_markers({{5, 2}});
        st.perm[0][4] = 8;  // own permanent progress near the top of column 6
        st.perm[0][6] = 10;
        configs.push_back(st);
    }
    REQUIRE(configs.size() == 10);

    for (std::size_t i = 0; i < configs.size(); ++i) {
        CAPTURE(i);
        const CantStopState& st = configs[i];
        Oracle oracle{st};
        int busts = 0;
        for (int d0 = 1; d0 <= 6; ++d0)
            for (int d1 = 1; d1 <= 6; ++d1)
                for (int d2 = 1; d2 <= 6; ++d2)
                    for (int d3 = 1; d3 <= 6; ++d3) {
                        bool expect = oracle.roll_playable(d0, d1, d2, d3);
                        bool got = engine_playable(st, d0, d1, d2, d3);
                        if (expect != got) {
                            CAPTURE(d0);
                            CAPTURE(d1);
                            CAPTURE(d2);
                            CAPTURE(d3);
                            REQUIRE(expect == got);
                        }
                        if (!got) ++busts;
                    }
        // a fresh turn can never bust; the all-markers-at-top config always does
        if (i == 0) CHECK(busts == 0);
        if (i == 8) CHECK(busts == 1296);
    }
}

TEST_CASE("when both sums of a pairing are playable only the take-both action is offered") {
    CantStopState st;
    std::vector<Action> opts;
    pairing_options(st, {1, 2, 3, 4}, opts);
    // pairings: (3,7), (4,6), (5,5) -- all fully playable on an empty board
    CHECK(opts == std::vector<Action>{2, 5, 8});
}

TEST_CASE("single-sum choices appear when only one column is open") {
    // markers on 3, 4, 5; pairing sums outside those columns are dead
    CantStopState st = state_with_markers({{1, 1}, {2, 1}, {3, 1}});
    std::vector<Action> opts;
    // dice 1,1,2,6: pairings (2,8), (3,7), (7,3)->dup
    pairing_options(st, {1, 1, 2, 6}, opts);
    // (2,8): sum 2 -> col 0 has no free marker, sum 8 -> col 6 none either: dead.
    // (3,7): col 1 has a marker (playable), col 5 does not -> "first sum only".
    CHECK(opts == std::vector<Action>{2 + 1 * 3 + 1});
}

TEST_CASE("duplicate pairings are offered once") {
    CantStopState st;
    std::vector<Action> opts;
    pairing_options(st, {1, 1, 2, 2}, opts); // (2,4), (3,3), (3,3)
    CHECK(opts == std::vector<Action>{2, 5});
}

TEST_CASE("double sum advances the same column twice when room allows") {
    CantStopGame game;
    CantStopState st;
    st.phase = 1;
    st.dice[0] = st.dice[1] = 1;
    st.dice[2] = st.dice[3] = 2;
    StreamSet sim = StreamSet::simulation(game.def(), 1);
    game.apply(st, 2 + 1 * 3 + 0, sim); // pairing (3,3): advance column 1 twice
    CHECK(st.n_markers == 1);
    CHECK(st.marker_col[0] == 1);
    CHECK(st.marker_pos[0] == 2);
    CHECK(st.turn_has_progress == 1);
    CHECK(st.phase == 0);
}

TEST_CASE("stop commits markers, claims topped columns, and wins at three claims") {
    CantStopGame game;
    StreamSet sim = StreamSet::simulation(game.def(), 1);

    CantStopState st = state_with_markers({{0, 3}, {1, 2}});
    st.claimed[9] = 0;
    st.claimed[10] = 0;
    game.apply(st, 1, sim); // stop: column 0 (length 3) tops out -> third claim
    CHECK(game.terminal(st));
    CHECK(game.scores(st) == Scores{1.0, 0.0});
}

TEST_CASE("stop without progress is rejected") {
    CantStopGame game;
    CantStopState st;
    std::vector<Action> legal;
    game.legal_actions(st, legal);
    CHECK(legal == std::vector<Action>{0}); // roll only
    StreamSet sim = StreamSet::simulation(game.def(), 1);
    CHECK_THROWS_AS(game.apply(st, 1, sim), ProtocolError);
}

TEST_CASE("stop passes the turn and banks progress when the game continues") {
    CantStopGame game;
    StreamSet sim = StreamSet::simulation(game.def(), 1);
    CantStopState st = state_with_markers({{5, 4}});
    game.apply(st, 1, sim);
    CHECK(!game.terminal(st));
    CHECK(st.seat == 1);
    CHECK(st.perm[0][5] == 4);
    CHECK(st.n_markers == 0);
    CHECK(st.turn_has_progress == 0);
}

TEST_CASE("random playouts finish with a winner who claimed three columns") {
    CantStopGame game;
    for (std::uint64_t g = 0; g < 200; ++g) {
        SeedSet seeds;
        seeds.game_master_seed = g;
        seeds.redeterminization_seed = g;
        seeds.agent_seeds = {derive_seed(g, 0), derive_seed(g, 1)};
        auto a0 = make_agent({}, seeds.agent_seeds[0]);
        auto a1 = make_agent({}, seeds.agent_seeds[1]);
        std::array<Agent*, 2> agents{a0.get(), a1.get()};
        PlayResult r = play_game(game, seeds, std::span<Agent* const>(agents.data(), 2));
        if (r.outcome.forced_draw) continue; // decision cap reached under random play
        CHECK(r.outcome.scores[0] + r.outcome.scores[1] == doctest::Approx(1.0));
        CHECK((r.outcome.scores[0] == 1.0 || r.outcome.scores[1] == 1.0));
    }
}
