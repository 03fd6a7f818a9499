#include "seedspan/games/kuhn.hpp"

namespace seedspan {

namespace {
constexpr int kCheck = 0, kBet = 1, kFold = 2, kCall = 3;
// 6 ordered deals (card of seat0, card of seat1)
constexpr std::int8_t kDeals[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

int action_at(const KuhnState& st, int i) { return (st.history >> (2 * i)) & 3; }
void push_action(KuhnState& st, int a) {
    st.history |= static_cast<std::uint8_t>(a) << (2 * st.history_len);
    ++st.history_len;
}
} // namespace

KuhnGame::KuhnGame(KuhnConfig cfg)
    : Game(GameDef{"kuhn", 2, {"deal"}, 1000}), cfg_(cfg) {}

void KuhnGame::deal_hand(KuhnState& st, StreamSet& streams) const {
    const auto& d = kDeals[streams.draw_below(0, 6)];
    st.cards[0] = d[0];
    st.cards[1] = d[1];
    st.pot = 2; // both ante 1
    st.stacks[0] -= 1;
    st.stacks[1] -= 1;
    st.invested[0] = st.invested[1] = 1;
    st.history = 0;
    st.history_len = 0;
    st.actor = st.first_to_act;
}

void KuhnGame::finish_hand(KuhnState& st, int hand_winner, StreamSet& streams) const {
    if (hand_winner >= 0) {
        st.stacks[hand_winner] = static_cast<std::int8_t>(st.stacks[hand_winner] + st.pot);
    } else { // drawn hand cannot happen in Kuhn, kept for safety
        st.stacks[0] = static_cast<std::int8_t>(st.stacks[0] + st.pot / 2);
        st.stacks[1] = static_cast<std::int8_t>(st.stacks[1] + st.pot / 2);
    }
    st.pot = 0;
    ++st.hand_index;
    st.first_to_act = static_cast<std::int8_t>(1 - st.first_to_act);
    if (st.stacks[0] <= 0 || st.stacks[1] <= 0 || st.hand_index >= cfg_.max_hands) {
        st.match_over = 1;
        return;
    }
    deal_hand(st, streams);
}

std::unique_ptr<State> KuhnGame::new_game(StreamSet& streams) const {
    auto st = std::make_unique<KuhnState>();
    st->stacks[0] = st->stacks[1] = static_cast<std::int8_t>(cfg_.start_chips);
    deal_hand(*st, streams);
    return st;
}

bool KuhnGame::terminal(const State& s) const {
    return static_cast<const KuhnState&>(s).match_over != 0;
}

Scores KuhnGame::scores(const State& s) const {
    const auto& st = static_cast<const KuhnState&>(s);
    if (st.stacks[0] > st.stacks[1]) return {1.0, 0.0};
    if (st.stacks[1] > st.stacks[0]) return {0.0, 1.0};
    return {0.5, 0.5};
}

int KuhnGame::to_move(const State& s) const {
    return static_cast<const KuhnState&>(s).actor;
}

void KuhnGame::legal_actions(const State& s, std::vector<Action>& out) const {
    const auto& st = static_cast<const KuhnState&>(s);
    if (st.match_over) throw ProtocolError("kuhn: legal_actions on terminal state");
    out.clear();
    bool facing_bet = st.history_len > 0 && action_at(st, st.history_len - 1) == kBet;
    bool has_chip = st.stacks[st.actor] >= 1;
    if (facing_bet) {
        out.push_back(kFold);
        if (has_chip) out.push_back(kCall);
    } else {
        out.push_back(kCheck);
        if (has_chip) out.push_back(kBet);
    }
}

void KuhnGame::apply(State& s, Action a, StreamSet& streams) const {
    auto& st = static_cast<KuhnState&>(s);
    int me = st.actor;
    int opp = 1 - me;
    bool facing_bet = st.history_len > 0 && action_at(st, st.history_len - 1) == kBet;
    switch (a) {
        case kCheck: {
            if (facing_bet) throw ProtocolError("kuhn: check while facing a bet");
            push_action(st, kCheck);
            if (st.history_len == 2) { // check-check showdown
                finish_hand(st, st.cards[0] > st.cards[1] ? 0 : 1, streams);
            } else {
                st.actor = static_cast<std::int8_t>(opp);
            }
            break;
        }
        case kBet: {
            if (facing_bet || st.stacks[me] < 1) throw ProtocolError("kuhn: illegal bet");
            push_action(st, kBet);
            st.stacks[me] -= 1;
            st.invested[me] += 1;
            st.pot += 1;
            st.actor = static_cast<std::int8_t>(opp);
            break;
        }
        case kFold: {
            if (!facing_bet) throw ProtocolError("kuhn: fold with no bet to face");
            push_action(st, kFold);
            finish_hand(st, opp, streams);
            break;
        }
        case kCall: {
            if (!facing_bet || st.stacks[me] < 1) throw ProtocolError("kuhn: illegal call");
            push_action(st, kCall);
            st.stacks[me] -= 1;
            st.invested[me] += 1;
            st.pot += 1;
            finish_hand(st, st.cards[0] > st.cards[1] ? 0 : 1, streams);
            break;
        }
        default:
            throw ProtocolError("kuhn: unknown action " + std::to_string(a));
    }
}

void KuhnGame::redeterminize(State& s, int observer, ChanceStream& rng) const {
    auto& st = static_cast<KuhnState&>(s);
    if (st.match_over) return;
    // opponent's hole card is the only hidden information; sample uniformly
    // from the two cards the observer does not hold
    std::int8_t mine = st.cards[observer];
    std::int8_t others[2];
    int n = 0;
    for (std::int8_t c = 0; c < 3; ++c)
        if (c != mine) others[n++] = c;
    st.cards[1 - observer] = others[rng.draw_below(2)];
}

std::uint64_t KuhnGame::observation_digest(const State& s, int observer) const {
    const auto& st = static_cast<const KuhnState&>(s);
    std::uint64_t h = mix64(0x6b75686eULL ^ static_cast<std::uint64_t>(st.cards[observer] + 1));
    h = mix64(h ^ static_cast<std::uint64_t>(st.stacks[0] + 16));
    h = mix64(h ^ static_cast<std::uint64_t>(st.stacks[1] + 16));
    h = mix64(h ^ static_cast<std::uint64_t>(st.pot));
    h = mix64(h ^ static_cast<std::uint64_t>(st.hand_index));
    h = mix64(h ^ static_cast<std::uint64_t>(st.first_to_act));
    h = mix64(h ^ static_cast<std::uint64_t>(st.actor));
    h = mix64(h ^ static_cast<std::uint64_t>(st.history));
    h = mix64(h ^ static_cast<std::uint64_t>(st.history_len));
    h = mix64(h ^ static_cast<std::uint64_t>(st.match_over));
    return h;
}

} // namespace seedspan
