#include "seedspan/games/loveletter.hpp"

#include <algorithm>

namespace seedspan {

namespace {

constexpr int kGuard = 1, kPriest = 2, kBaron = 3, kHandmaid = 4, kPrince = 5, kKing = 6,
              kCountess = 7, kPrincess = 8;

std::uint8_t pop_deck(LoveLetterState& st) { return st.deck[--st.deck_size]; }

void discard(LoveLetterState& st, int seat, std::uint8_t card) {
    st.discards[seat][st.n_disc[seat]++] = card;
}

int discard_sum(const LoveLetterState& st, int seat) {
    int s = 0;
    for (int i = 0; i < st.n_disc[seat]; ++i) s += st.discards[seat][i];
    return s;
}

void eliminate(LoveLetterState& st, int victim) {
    st.alive[victim] = 0;
    if (st.hand[victim] != 0) {
        discard(st, victim, st.hand[victim]);
        st.hand[victim] = 0;
    }
    st.winner = static_cast<std::int8_t>(1 - victim);
}

void showdown(LoveLetterState& st) {
    if (st.hand[0] != st.hand[1]) {
        st.winner = st.hand[0] > st.hand[1] ? 0 : 1;
        return;
    }
    int d0 = discard_sum(st, 0), d1 = discard_sum(st, 1);
    st.winner = d0 == d1 ? 2 : (d0 > d1 ? 0 : 1);
}

} // namespace

namespace loveletter {

void unseen_cards(const LoveLetterState& st, int observer, std::vector<std::uint8_t>& out) {
    int counts[9] = {};
    for (std::uint8_t c : kFullDeck) ++counts[c];
    --counts[st.hand[observer]];
    if (st.seat == observer && st.drawn != 0) --counts[st.drawn];
    for (int seat = 0; seat < 2; ++seat)
        for (int i = 0; i < st.n_disc[seat]; ++i) --counts[st.discards[seat][i]];
    out.clear();
    for (std::uint8_t c = 1; c <= 8; ++c)
        for (int i = 0; i < counts[c]; ++i) out.push_back(c);
}

} // namespace loveletter

LoveLetterGame::LoveLetterGame()
    : Game(GameDef{"loveletter", 2, {"burn", "deck"}, 1000}) {}

std::unique_ptr<State> LoveLetterGame::new_game(StreamSet& streams) const {
    auto st = std::make_unique<LoveLetterState>();
    std::uint8_t cards[16];
    std::copy(std::begin(loveletter::kFullDeck), std::end(loveletter::kFullDeck), cards);

    std::uint64_t burn_idx = streams.draw_below(0, 16);
    st->burn = cards[burn_idx];
    cards[burn_idx] = cards[15];

    // Fisher-Yates over the remaining 15 via the "deck" stream
    for (int i = 15; i > 1; --i) {
        auto j = streams.draw_below(1, static_cast<std::uint64_t>(i));
        std::swap(cards[i - 1], cards[j]);
    }
    for (int i = 0; i < 15; ++i) st->deck[i] = cards[i];
    st->deck_size = 15;

    st->hand[0] = pop_deck(*st);
    st->hand[1] = pop_deck(*st);
    st->drawn = pop_deck(*st); // seat 0 starts their turn holding two cards
    st->seat = 0;
    return st;
}

bool LoveLetterGame::terminal(const State& s) const {
    return static_cast<const LoveLetterState&>(s).winner >= 0;
}

Scores LoveLetterGame::scores(const State& s) const {
    const auto& st = static_cast<const LoveLetterState&>(s);
    if (st.winner == 0) return {1.0, 0.0};
    if (st.winner == 1) return {0.0, 1.0};
    return {0.5, 0.5};
}

int LoveLetterGame::to_move(const State& s) const {
    return static_cast<const LoveLetterState&>(s).seat;
}

void LoveLetterGame::legal_actions(const State& s, std::vector<Action>& out) const {
    const auto& st = static_cast<const LoveLetterState&>(s);
    if (st.winner >= 0) throw ProtocolError("loveletter: legal_actions on terminal state");
    out.clear();
    int opp = 1 - st.seat;
    std::uint8_t a = st.hand[st.seat], b = st.drawn;
    std::uint8_t lo = std::min(a, b), hi = std::max(a, b);

    // holding Countess with King or Prince forces the Countess
    if (hi == kCountess && (lo == kPrince || lo == kKing)) {
        out.push_back(kCountess * 16);
        return;
    }

    auto add_card = [&](std::uint8_t c) {
        switch (c) {
            case kGuard:
                if (st.protect[opp]) {
                    out.push_back(kGuard * 16);
                } else {
                    for (int g = 1; g <= 7; ++g) out.push_back(kGuard * 16 + g);
                }
                break;
            case kPrince:
                out.push_back(kPrince * 16 + 0); // self
                if (!st.protect[opp]) out.push_back(kPrince * 16 + 1);
                break;
            default:
                out.push_back(c * 16);
                break;
        }
    };
    add_card(lo);
    if (hi != lo) add_card(hi);
}

void LoveLetterGame::apply(State& s, Action action, StreamSet&) const {
    auto& st = static_cast<LoveLetterState&>(s);
    if (st.winner >= 0) throw ProtocolError("loveletter: apply on terminal state");
    int card = action / 16;
    int param = action % 16;
    int me = st.seat;
    int opp = 1 - me;

    std::uint8_t remaining;
    if (card == st.hand[me])
        remaining = st.drawn;
    else if (card == st.drawn)
        remaining = st.hand[me];
    else
        throw ProtocolError("loveletter: playing a card not in hand");

    discard(st, me, static_cast<std::uint8_t>(card));
    st.hand[me] = remaining;
    st.drawn = 0;
    // the opponent's knowledge of my hand survives only if the kept card matches it
    if (st.known[opp] >= 0 && st.known[opp] != static_cast<std::int8_t>(remaining))
        st.known[opp] = -1;

    switch (card) {
        case kGuard:
            if (param > 0 && !st.protect[opp]) {
                int guess = param + 1;
                if (st.hand[opp] == guess) eliminate(st, opp);
            }
            break;
        case kPriest:
            if (!st.protect[opp]) st.known[me] = static_cast<std::int8_t>(st.hand[opp]);
            break;
        case kBaron:
            if (!st.protect[opp]) {
                if (st.hand[me] > st.hand[opp]) {
                    eliminate(st, opp);
                } else if (st.hand[me] < st.hand[opp]) {
                    eliminate(st, me);
                } else { // tie: both cards were shown
                    st.known[me] = static_cast<std::int8_t>(st.hand[opp]);
                    st.known[opp] = static_cast<std::int8_t>(st.hand[me]);
                }
            }
            break;
        case kHandmaid:
            st.protect[me] = 1;
            break;
        case kPrince: {
            int target = (param == 1 && !st.protect[opp]) ? opp : me;
            std::uint8_t dumped = st.hand[target];
            st.hand[target] = 0;
            if (dumped != 0) discard(st, target, dumped);
            if (dumped == kPrincess) {
                eliminate(st, target);
            } else {
                if (st.deck_size > 0) {
                    st.hand[target] = pop_deck(st);
                } else if (!st.burn_used) {
                    st.hand[target] = st.burn;
                    st.burn_used = 1;
                }
                st.known[1 - target] = -1; // replacement card is hidden
            }
            break;
        }
        case kKing:
            if (!st.protect[opp]) {
                std::swap(st.hand[me], st.hand[opp]);
                st.known[me] = static_cast<std::int8_t>(st.hand[opp]);
                st.known[opp] = static_cast<std::int8_t>(st.hand[me]);
            }
            break;
        case kCountess:
            break;
        case kPrincess:
            eliminate(st, me);
            break;
        default:
            throw ProtocolError("loveletter: unknown card " + std::to_string(card));
    }

    if (st.winner >= 0) return;

    if (st.deck_size == 0) {
        showdown(st);
        return;
    }
    st.seat = static_cast<std::uint8_t>(opp);
    st.protect[opp] = 0; // protection lasts until the owner's next turn
    st.drawn = pop_deck(st);
}

void LoveLetterGame::redeterminize(State& s, int observer, ChanceStream& rng) const {
    auto& st = static_cast<LoveLetterState&>(s);
    if (st.winner >= 0) return;
    int opp = 1 - observer;

    std::vector<std::uint8_t> unseen;
    loveletter::unseen_cards(st, observer, unseen);

    auto take_at = [&](std::size_t idx) {
        std::uint8_t c = unseen[idx];
        unseen[idx] = unseen.back();
        unseen.pop_back();
        return c;
    };
    auto take_value = [&](std::uint8_t v) -> bool {
        for (std::size_t i = 0; i < unseen.size(); ++i)
            if (unseen[i] == v) {
                take_at(i);
                return true;
            }
        return false;
    };
    auto take_uniform = [&] { return take_at(rng.draw_below(unseen.size())); };

    if (st.hand[opp] != 0) {
        std::int8_t k = st.known[observer];
        if (k >= 0 && take_value(static_cast<std::uint8_t>(k)))
            st.hand[opp] = static_cast<std::uint8_t>(k);
        else
            st.hand[opp] = take_uniform();
    }
    if (st.seat == opp && st.drawn != 0) st.drawn = take_uniform();
    if (!st.burn_used) st.burn = take_uniform();

    // remaining unseen cards become the deck, in a fresh uniform order
    for (std::size_t i = unseen.size(); i > 1; --i)
        std::swap(unseen[i - 1], unseen[rng.draw_below(i)]);
    for (std::size_t i = 0; i < unseen.size(); ++i) st.deck[i] = unseen[i];
    // deck_size is public and must be preserved exactly
    st.deck_size = static_cast<std::uint8_t>(unseen.size());
}

std::uint64_t LoveLetterGame::observation_digest(const State& s, int observer) const {
    const auto& st = static_cast<const LoveLetterState&>(s);
    std::uint64_t h = mix64(0x10e1e77e4ULL ^ static_cast<std::uint64_t>(observer));
    h = mix64(h ^ st.hand[observer]);
    h = mix64(h ^ (st.seat == observer ? st.drawn : 0));
    for (int seat = 0; seat < 2; ++seat) {
        for (int i = 0; i < st.n_disc[seat]; ++i) h = mix64(h ^ st.discards[seat][i]);
        h = mix64(h ^ (0x100ULL + st.n_disc[seat]));
        h = mix64(h ^ st.protect[seat]);
        h = mix64(h ^ st.alive[seat]);
    }
    h = mix64(h ^ st.deck_size);
    h = mix64(h ^ st.burn_used);
    h = mix64(h ^ st.seat);
    h = mix64(h ^ static_cast<std::uint64_t>(st.known[observer] + 1));
    h = mix64(h ^ static_cast<std::uint64_t>(st.known[1 - observer] + 1));
    h = mix64(h ^ static_cast<std::uint64_t>(st.winner + 1));
    return h;
}

} // namespace seedspan
