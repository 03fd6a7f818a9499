#include "seedspan/games/connect4.hpp"

namespace seedspan {

namespace connect4 {

bool has_four(std::uint64_t b) {
    // column stride is 7 bits; directions: vertical 1, horizontal 7, diagonals 6 and 8
    for (int d : {1, 7, 6, 8}) {
        std::uint64_t y = b & (b >> d);
        if (y & (y >> (2 * d))) return true;
    }
    return false;
}

} // namespace connect4

Connect4Game::Connect4Game() : Game(GameDef{"connect4", 2, {}, 1000}) {}

std::unique_ptr<State> Connect4Game::new_game(StreamSet&) const {
    return std::make_unique<Connect4State>();
}

bool Connect4Game::terminal(const State& s) const {
    return static_cast<const Connect4State&>(s).winner >= 0;
}

Scores Connect4Game::scores(const State& s) const {
    const auto& st = static_cast<const Connect4State&>(s);
    if (st.winner == 0) return {1.0, 0.0};
    if (st.winner == 1) return {0.0, 1.0};
    return {0.5, 0.5};
}

int Connect4Game::to_move(const State& s) const {
    return static_cast<const Connect4State&>(s).moves & 1;
}

void Connect4Game::legal_actions(const State& s, std::vector<Action>& out) const {
    const auto& st = static_cast<const Connect4State&>(s);
    if (st.winner >= 0) throw ProtocolError("connect4: legal_actions on terminal state");
    out.clear();
    for (int c = 0; c < 7; ++c)
        if (st.height[c] < 6) out.push_back(c);
}

void Connect4Game::apply(State& s, Action a, StreamSet&) const {
    auto& st = static_cast<Connect4State&>(s);
    if (a < 0 || a >= 7 || st.height[a] >= 6 || st.winner >= 0)
        throw ProtocolError("connect4: illegal drop in column " + std::to_string(a));
    int seat = st.moves & 1;
    st.board[seat] |= 1ULL << (a * 7 + st.height[a]);
    ++st.height[a];
    ++st.moves;
    if (connect4::has_four(st.board[seat]))
        st.winner = static_cast<std::int8_t>(seat);
    else if (st.moves == 42)
        st.winner = 2;
}

void Connect4Game::redeterminize(State&, int, ChanceStream&) const {
    // perfect information: the state is its own determinization
}

std::uint64_t Connect4Game::observation_digest(const State& s, int) const {
    const auto& st = static_cast<const Connect4State&>(s);
    std::uint64_t h = mix64(st.board[0]);
    h = mix64(h ^ st.board[1]);
    h = mix64(h ^ st.moves);
    return h;
}

} // namespace seedspan
