#include "seedspan/engine.hpp"

#include <algorithm>

#include "json.hpp"

namespace seedspan {

StreamSet::StreamSet(const GameDef& def, const SeedSet& seeds) : def_(&def) {
    for (const auto& [name, seed] : seeds.stream_overrides) {
        if (std::find(def.stream_names.begin(), def.stream_names.end(), name) ==
            def.stream_names.end()) {
            std::string valid;
            for (const auto& n : def.stream_names) valid += (valid.empty() ? "" : ", ") + n;
            throw ConfigError("stream override '" + name + "' not declared by game '" + def.name +
                              "' (declared streams: {" + valid + "})");
        }
    }
    streams_.reserve(def.stream_names.size());
    for (const auto& name : def.stream_names) {
        auto it = seeds.stream_overrides.find(name);
        std::uint64_t base = (it != seeds.stream_overrides.end()) ? it->second
                                                                  : seeds.game_master_seed;
        streams_.push_back(derive_stream(base, name));
    }
}

StreamSet StreamSet::simulation(const GameDef& def, std::uint64_t sim_seed) {
    StreamSet s;
    s.def_ = &def;
    s.streams_.reserve(def.stream_names.size());
    for (const auto& name : def.stream_names) {
        s.streams_.push_back(derive_stream(sim_seed, name));
        s.name_hashes_.push_back(hash_str(name));
    }
    return s;
}

void StreamSet::reseed(std::uint64_t sim_seed) {
    for (std::size_t i = 0; i < streams_.size(); ++i)
        streams_[i].reseed(mix64(mix64(sim_seed) ^ name_hashes_[i]));
}

std::uint64_t StreamSet::draw_below(int idx, std::uint64_t bound) {
    std::uint64_t v = streams_[static_cast<std::size_t>(idx)].draw_below(bound);
    if (rec_) rec_->record_draw(idx, v);
    return v;
}

std::uint64_t StreamSet::draw_raw(int idx) {
    std::uint64_t v = streams_[static_cast<std::size_t>(idx)].draw_raw();
    if (rec_) rec_->record_draw(idx, v);
    return v;
}

int StreamSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < streams_.size(); ++i)
        if (streams_[i].name() == name) return static_cast<int>(i);
    return -1;
}

void TraceRecorder::record_action(int seat, Action a) {
    digest_ = mix64(digest_ ^ (0xAC710000ULL + static_cast<std::uint64_t>(seat)));
    digest_ = mix64(digest_ ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)));
    if (keep_events_) events_.push_back({0, seat, static_cast<std::uint64_t>(a)});
}

void TraceRecorder::record_draw(int stream_idx, std::uint64_t value) {
    digest_ = mix64(digest_ ^ (0xD4A70000ULL + static_cast<std::uint64_t>(stream_idx)));
    digest_ = mix64(digest_ ^ value);
    if (keep_events_) events_.push_back({1, stream_idx, value});
}

std::string TraceRecorder::to_json(const GameDef& def) const {
    nlohmann::json records = nlohmann::json::array();
    nlohmann::json pending_draws = nlohmann::json::array();
    for (const auto& e : events_) {
        if (e.kind == 1) {
            pending_draws.push_back({{"stream", def.stream_names[static_cast<std::size_t>(e.a)]},
                                     {"value", e.b}});
        } else {
            records.push_back({{"seat", e.a},
                               {"action", static_cast<int>(e.b)},
                               {"chance_draws", std::move(pending_draws)}});
            pending_draws = nlohmann::json::array();
        }
    }
    if (!pending_draws.empty())
        records.push_back({{"seat", nullptr}, {"action", nullptr},
                           {"chance_draws", std::move(pending_draws)}});
    nlohmann::json j{{"game", def.name},
                     {"trace_digest", digest_},
                     {"records", std::move(records)}};
    return j.dump();
}

namespace {
char hex_digit(unsigned v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }
} // namespace

PlayResult play_game(const Game& game, const SeedSet& seeds,
                     std::span<Agent* const> agents, const PlayOptions& opts) {
    const GameDef& def = game.def();
    if (static_cast<int>(agents.size()) != def.seats)
        throw ConfigError("play_game: got " + std::to_string(agents.size()) + " agents for " +
                          std::to_string(def.seats) + " seats");
    if (!seeds.agent_seeds.empty() &&
        static_cast<int>(seeds.agent_seeds.size()) != def.seats)
        throw ConfigError("play_game: agent_seeds length must equal seat count");

    TraceRecorder rec(opts.collect_trace);
    StreamSet streams(def, seeds);
    streams.set_recorder(&rec);

    ChanceStream redet = derive_stream(seeds.redeterminization_seed, "redet");

    std::unique_ptr<State> state = game.new_game(streams);

    PlayResult result;
    std::vector<Action> legal;
    // The draw-then-record order in new_game is part of the trace, so the
    // digest covers setup chance as well as decisions.
    while (!game.terminal(*state)) {
        if (result.decisions >= def.max_rounds) {
            result.outcome.forced_draw = true;
            result.outcome.scores = {0.5, 0.5};
            result.outcome.trace_digest = rec.digest();
            if (opts.collect_trace) result.trace_json = rec.to_json(def);
            return result;
        }
        int seat = game.to_move(*state);
        Action a = agents[static_cast<std::size_t>(seat)]->act(game, *state, seat, redet);
        game.legal_actions(*state, legal);
        if (std::find(legal.begin(), legal.end(), a) == legal.end()) {
            throw ProtocolError("illegal action " + std::to_string(a) + " from seat " +
                                std::to_string(seat) + " at decision " +
                                std::to_string(result.decisions) + " in game '" + def.name + "'");
        }
        rec.record_action(seat, a);
        game.apply(*state, a, streams);
        ++result.decisions;
    }

    result.outcome.scores = game.scores(*state);
    result.outcome.trace_digest = rec.digest();
    if (opts.collect_trace) result.trace_json = rec.to_json(def);
    return result;
}

std::string digest_hex(std::uint64_t d) {
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = hex_digit(static_cast<unsigned>(d & 0xF));
        d >>= 4;
    }
    return s;
}

} // namespace seedspan
