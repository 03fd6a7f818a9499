#include "seedspan/games/cantstop.hpp"

#include <algorithm>

namespace seedspan {

namespace cantstop {

namespace {

// temporary-marker view used to check/apply advances without touching state
struct Markers {
    std::uint8_t col[3];
    std::uint8_t pos[3];
    std::uint8_t n;

    explicit Markers(const CantStopState& st) : n(st.n_markers) {
        for (int i = 0; i < 3; ++i) {
            col[i] = st.marker_col[i];
            pos[i] = st.marker_pos[i];
        }
    }

    int find(int c) const {
        for (int i = 0; i < n; ++i)
            if (col[i] == c) return i;
        return -1;
    }

    bool can_advance(const CantStopState& st, int c) const {
        if (st.claimed[c] >= 0) return false;
        int i = find(c);
        if (i >= 0) return pos[i] < kColumnLength[static_cast<std::size_t>(c)];
        if (n >= 3) return false;
        return st.perm[st.seat][c] < kColumnLength[static_cast<std::size_t>(c)];
    }

    void advance(const CantStopState& st, int c) {
        int i = find(c);
        if (i >= 0) {
            ++pos[i];
        } else {
            col[n] = static_cast<std::uint8_t>(c);
            pos[n] = static_cast<std::uint8_t>(st.perm[st.seat][c] + 1);
            ++n;
        }
    }
};

} // namespace

int claimed_count(const CantStopState& st, int seat) {
    int n = 0;
    for (int c = 0; c < 11; ++c)
        if (st.claimed[c] == seat) ++n;
    return n;
}

int pairing_options_buf(const CantStopState& st, const std::array<std::uint8_t, 4>& dice,
                        Action out[6]) {
    int n_out = 0;
    int seen_pairs[3][2];
    int n_seen = 0;
    for (int p = 0; p < 3; ++p) {
        int a, b;
        switch (p) {
            case 0: a = dice[0] + dice[1]; b = dice[2] + dice[3]; break;
            case 1: a = dice[0] + dice[2]; b = dice[1] + dice[3]; break;
            default: a = dice[0] + dice[3]; b = dice[1] + dice[2]; break;
        }
        int lo = std::min(a, b), hi = std::max(a, b);
        bool dup = false;
        for (int i = 0; i < n_seen; ++i)
            if (seen_pairs[i][0] == lo && seen_pairs[i][1] == hi) dup = true;
        if (dup) continue;
        seen_pairs[n_seen][0] = lo;
        seen_pairs[n_seen][1] = hi;
        ++n_seen;

        int ca = a - 2, cb = b - 2;
        Markers m(st);
        bool both = false;
        if (m.can_advance(st, ca)) {
            m.advance(st, ca);
            both = m.can_advance(st, cb);
        }
        if (both) {
            out[n_out++] = 2 + p * 3 + 0; // must take both when possible
            continue;
        }
        Markers fresh(st);
        if (fresh.can_advance(st, ca)) out[n_out++] = 2 + p * 3 + 1;
        if (cb != ca) {
            Markers f2(st);
            if (f2.can_advance(st, cb)) out[n_out++] = 2 + p * 3 + 2;
        }
    }
    return n_out;
}

void pairing_options(const CantStopState& st, const std::array<std::uint8_t, 4>& dice,
                     std::vector<Action>& out) {
    Action buf[6];
    int n = pairing_options_buf(st, dice, buf);
    out.assign(buf, buf + n);
}

} // namespace cantstop

using namespace cantstop;

CantStopGame::CantStopGame() : Game(GameDef{"cantstop", 2, {"dice"}, 1000}) {}

std::unique_ptr<State> CantStopGame::new_game(StreamSet&) const {
    return std::make_unique<CantStopState>();
}

bool CantStopGame::terminal(const State& s) const {
    return static_cast<const CantStopState&>(s).winner >= 0;
}

Scores CantStopGame::scores(const State& s) const {
    const auto& st = static_cast<const CantStopState&>(s);
    return st.winner == 0 ? Scores{1.0, 0.0} : Scores{0.0, 1.0};
}

int CantStopGame::to_move(const State& s) const {
    return static_cast<const CantStopState&>(s).seat;
}

void CantStopGame::legal_actions(const State& s, std::vector<Action>& out) const {
    const auto& st = static_cast<const CantStopState&>(s);
    if (st.winner >= 0) throw ProtocolError("cantstop: legal_actions on terminal state");
    out.clear();
    if (st.phase == 0) {
        out.push_back(0);
        if (st.turn_has_progress) out.push_back(1);
    } else {
        std::array<std::uint8_t, 4> d{st.dice[0], st.dice[1], st.dice[2], st.dice[3]};
        Action buf[6];
        int n = cantstop::pairing_options_buf(st, d, buf);
        out.assign(buf, buf + n);
    }
}

namespace {
void pass_turn(CantStopState& st) {
    st.n_markers = 0;
    st.marker_col[0] = st.marker_col[1] = st.marker_col[2] = 255;
    st.marker_pos[0] = st.marker_pos[1] = st.marker_pos[2] = 0;
    st.turn_has_progress = 0;
    st.phase = 0;
    st.seat = static_cast<std::uint8_t>(1 - st.seat);
}
} // namespace

void CantStopGame::apply(State& s, Action a, StreamSet& streams) const {
    auto& st = static_cast<CantStopState&>(s);
    if (st.winner >= 0) throw ProtocolError("cantstop: apply on terminal state");

    if (st.phase == 0) {
        if (a == 0) { // roll
            for (int i = 0; i < 4; ++i)
                st.dice[i] = static_cast<std::uint8_t>(1 + streams.draw_below(0, 6));
            std::sort(st.dice, st.dice + 4);
            std::array<std::uint8_t, 4> d{st.dice[0], st.dice[1], st.dice[2], st.dice[3]};
            Action buf[6];
            int n = pairing_options_buf(st, d, buf);
            if (n == 0) {
                pass_turn(st); // bust: temporary progress discarded
            } else {
                st.phase = 1;
            }
            return;
        }
        if (a == 1) { // stop
            if (!st.turn_has_progress)
                throw ProtocolError("cantstop: stop before any advance this turn");
            for (int i = 0; i < st.n_markers; ++i) {
                int c = st.marker_col[i];
                st.perm[st.seat][c] = st.marker_pos[i];
                if (st.marker_pos[i] ==
                    static_cast<std::uint8_t>(kColumnLength[static_cast<std::size_t>(c)]))
                    st.claimed[c] = static_cast<std::int8_t>(st.seat);
            }
            if (claimed_count(st, st.seat) >= 3) {
                st.winner = static_cast<std::int8_t>(st.seat);
                return;
            }
            pass_turn(st);
            return;
        }
        throw ProtocolError("cantstop: expected roll or stop, got " + std::to_string(a));
    }

    // phase 1: advance per chosen pairing
    std::array<std::uint8_t, 4> d{st.dice[0], st.dice[1], st.dice[2], st.dice[3]};
    Action buf[6];
    int n_opts = pairing_options_buf(st, d, buf);
    if (std::find(buf, buf + n_opts, a) == buf + n_opts)
        throw ProtocolError("cantstop: illegal pairing action " + std::to_string(a));

    int p = (a - 2) / 3;
    int choice = (a - 2) % 3;
    int sa, sb;
    switch (p) {
        case 0: sa = d[0] + d[1]; sb = d[2] + d[3]; break;
        case 1: sa = d[0] + d[2]; sb = d[1] + d[3]; break;
        default: sa = d[0] + d[3]; sb = d[1] + d[2]; break;
    }

    Markers m(st);
    auto advance_col = [&](int c) {
        if (m.can_advance(st, c)) m.advance(st, c);
    };
    if (choice == 0) {
        advance_col(sa - 2);
        advance_col(sb - 2);
    } else if (choice == 1) {
        advance_col(sa - 2);
    } else {
        advance_col(sb - 2);
    }
    st.n_markers = m.n;
    for (int i = 0; i < 3; ++i) {
        st.marker_col[i] = i < m.n ? m.col[i] : 255;
        st.marker_pos[i] = i < m.n ? m.pos[i] : 0;
    }
    st.turn_has_progress = 1;
    st.phase = 0;
}

void CantStopGame::redeterminize(State&, int, ChanceStream&) const {
    // all revealed state is public; future dice live in the stream
}

std::uint64_t CantStopGame::observation_digest(const State& s, int) const {
    const auto& st = static_cast<const CantStopState&>(s);
    std::uint64_t h = 0xca57ULL;
    for (int seat = 0; seat < 2; ++seat)
        for (int c = 0; c < 11; ++c) h = mix64(h ^ st.perm[seat][c]);
    for (int c = 0; c < 11; ++c) h = mix64(h ^ static_cast<std::uint64_t>(st.claimed[c] + 1));
    for (int i = 0; i < 3; ++i) {
        h = mix64(h ^ st.marker_col[i]);
        h = mix64(h ^ st.marker_pos[i]);
    }
    for (int i = 0; i < 4; ++i) h = mix64(h ^ st.dice[i]);
    h = mix64(h ^ (static_cast<std::uint64_t>(st.phase) | (st.seat << 1) |
                   (st.turn_has_progress << 2) | (static_cast<std::uint64_t>(st.winner + 1) << 3)));
    return h;
}

} // namespace seedspan
