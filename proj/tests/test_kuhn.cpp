#include "doctest.h"

#include <array>
#include <cmath>

#include "seedspan/agents/agents.hpp"
#include "seedspan/games/kuhn.hpp"
#include "seedspan/games/kuhn_solver.hpp"

using namespace seedspan;

namespace {
constexpr int kCheck = 0, kBet = 1, kFold = 2, kCall = 3;
}

TEST_CASE("chips are conserved through every decision of random matches") {
    KuhnGame game;
    for (std::uint64_t g = 0; g < 500; ++g) {
        StreamSet streams = StreamSet::simulation(game.def(), g);
        auto state = game.new_game(streams);
        Rng rng(derive_seed(g, "walk"));
        std::vector<Action> legal;
        while (!game.terminal(*state)) {
            const auto& st = static_cast<const KuhnState&>(*state);
            CHECK(st.stacks[0] + st.stacks[1] + st.pot == 8);
            CHECK(st.invested[0] + st.invested[1] == st.pot);
            game.legal_actions(*state, legal);
            REQUIRE(!legal.empty());
            game.apply(*state, legal[rng.next_below(legal.size())], streams);
        }
        const auto& st = static_cast<const KuhnState&>(*state);
        CHECK(st.stacks[0] + st.stacks[1] == 8);
        CHECK(st.hand_index <= 8);
        Scores sc = game.scores(*state);
        CHECK(sc[0] + sc[1] == doctest::Approx(1.0));
        if (st.stacks[0] == st.stacks[1]) CHECK(sc == Scores{0.5, 0.5});
    }
}

TEST_CASE("the opening lead alternates between hands") {
    KuhnGame game;
    StreamSet streams = StreamSet::simulation(game.def(), 3);
    auto state = game.new_game(streams);
    const auto& st = static_cast<const KuhnState&>(*state);
    CHECK(st.first_to_act == 0);
    CHECK(game.to_move(*state) == 0);

    // fold immediately after a bet to burn through hands quickly
    std::vector<Action> legal;
    int prev_hand = 0;
    std::int8_t prev_lead = 0;
    while (!game.terminal(*state)) {
        game.legal_actions(*state, legal);
        Action a = legal.back() == kCall ? kFold : legal.back();
        game.apply(*state, a, streams);
        if (!game.terminal(*state) && st.hand_index != prev_hand) {
            CHECK(st.first_to_act == 1 - prev_lead);
            prev_hand = st.hand_index;
            prev_lead = st.first_to_act;
        }
    }
}

TEST_CASE("betting legality follows the facing-bet state") {
    KuhnGame game;
    StreamSet streams = StreamSet::simulation(game.def(), 7);
    auto state = game.new_game(streams);
    std::vector<Action> legal;
    game.legal_actions(*state, legal);
    CHECK(legal == std::vector<Action>{kCheck, kBet});

    game.apply(*state, kBet, streams);
    game.legal_actions(*state, legal);
    CHECK(legal == std::vector<Action>{kFold, kCall});
    CHECK_THROWS_AS(game.apply(*state, kCheck, streams), ProtocolError);
}

TEST_CASE("showdowns pay the higher card; folds pay the bettor") {
    KuhnGame game;
    StreamSet streams = StreamSet::simulation(game.def(), 0);
    auto state = game.new_game(streams);
    auto& st = static_cast<KuhnState&>(*state);
    st.cards[0] = 2; // K
    st.cards[1] = 0; // J

    // after the hand settles, the next hand is dealt immediately and both
    // seats post a fresh ante, so observed stacks are (payout - 1) each
    SUBCASE("bet-call showdown") {
        game.apply(*state, kBet, streams);
        game.apply(*state, kCall, streams);
        CHECK(st.stacks[0] == 5); // won 2 invested by each side, then anted
        CHECK(st.stacks[1] == 1);
    }
    SUBCASE("bet-fold") {
        game.apply(*state, kBet, streams);
        game.apply(*state, kFold, streams);
        CHECK(st.stacks[0] == 4); // takes the antes only, then antes again
        CHECK(st.stacks[1] == 2);
    }
    SUBCASE("check-check showdown") {
        game.apply(*state, kCheck, streams);
        game.apply(*state, kCheck, streams);
        CHECK(st.stacks[0] == 4);
        CHECK(st.stacks[1] == 2);
    }
}

TEST_CASE("redeterminization resamples only the opponent card, uniformly") {
    KuhnGame game;
    StreamSet streams = StreamSet::simulation(game.def(), 5);
    auto state = game.new_game(streams);
    auto& st = static_cast<KuhnState&>(*state);
    std::int8_t my_card = st.cards[0];

    ChanceStream redet = derive_stream(123, "redet");
    int counts[3] = {0, 0, 0};
    const int n = 30000;
    for (int i = 0; i < n; ++i) {
        game.redeterminize(*state, 0, redet);
        CHECK(st.cards[0] == my_card);
        CHECK(st.cards[1] != my_card);
        ++counts[st.cards[1]];
    }
    CHECK(counts[my_card] == 0);
    // two candidates, each ~n/2: 5-sigma band for Binomial(n, 1/2)
    double sigma = std::sqrt(n * 0.25);
    for (int c = 0; c < 3; ++c) {
        if (c == my_card) continue;
        CHECK(std::abs(counts[c] - n / 2.0) < 5.0 * sigma);
    }
}

TEST_CASE("single-hand game value equals -1/18") {
    CHECK(std::abs(kuhn_solver::hand_value() - (-1.0 / 18.0)) < 1e-12);
}

TEST_CASE("calling with the King dominates folding in both positions") {
    CHECK(kuhn_solver::call_with_king_dominant());
}

TEST_CASE("pure-strategy payoffs match hand evaluation") {
    using kuhn_solver::pure_payoff;
    // strat1 digits (base 3, J/Q/K): 0 bet, 1 check-call, 2 check-fold
    // strat2 digits (base 4, J/Q/K): bit0 call-vs-bet, bit1 bet-vs-check
    const int always_bet = 0;
    const int always_check_call = 1 * 1 + 1 * 3 + 1 * 9;
    const int always_check_fold = 2 * 1 + 2 * 3 + 2 * 9;
    const int always_call = 1 * 1 + 1 * 4 + 1 * 16;
    const int always_fold_and_check = 0;

    CHECK(pure_payoff(2, 0, always_bet, always_call) == 2.0);       // K bets, J calls
    CHECK(pure_payoff(0, 2, always_bet, always_call) == -2.0);      // J bets, K calls
    CHECK(pure_payoff(0, 2, always_bet, always_fold_and_check) == 1.0); // any fold pays antes
    CHECK(pure_payoff(1, 0, always_check_call, always_fold_and_check) == 1.0); // check-check
    CHECK(pure_payoff(0, 2, always_check_fold, 2 * 16) == -1.0);    // K bets after check, J folds
}

TEST_CASE("average random-vs-random first-seat score is near one half") {
    KuhnGame game;
    double total = 0.0;
    const int n = 4000;
    for (std::uint64_t g = 0; g < n; ++g) {
        SeedSet seeds;
        seeds.game_master_seed = derive_seed(g, "m");
        seeds.redeterminization_seed = 0;
        seeds.agent_seeds = {derive_seed(g, 0), derive_seed(g, 1)};
        auto a0 = make_agent({}, seeds.agent_seeds[0]);
        auto a1 = make_agent({}, seeds.agent_seeds[1]);
        std::array<Agent*, 2> agents{a0.get(), a1.get()};
        total += play_game(game, seeds, std::span<Agent* const>(agents.data(), 2)).outcome.scores[0];
    }
    // random play is seat-symmetric up to the alternating lead; allow 6 sigma
    CHECK(std::abs(total / n - 0.5) < 6.0 * std::sqrt(0.25 / n));
}
