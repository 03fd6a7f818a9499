#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seedspan/rng.hpp"

namespace seedspan {

// Agent returned an action outside legal_actions, or a contract was violated
// mid-playout. Message carries seat and decision index for reproduction.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad experiment/game configuration (unknown game, undeclared stream, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The complete set of named seeds that makes one game fully deterministic.
struct SeedSet {
    std::uint64_t game_master_seed = 0;
    std::map<std::string, std::uint64_t> stream_overrides;
    std::uint64_t redeterminization_seed = 0;
    std::vector<std::uint64_t> agent_seeds;
};

struct GameDef {
    std::string name;
    int seats = 2;
    std::vector<std::string> stream_names;
    int max_rounds = 1000; // decision cap; exceeding forces a draw
};

using Action = int;
using Scores = std::array<double, 2>; // win 1, draw 0.5, loss 0

struct GameOutcome {
    Scores scores{0.0, 0.0};
    std::uint64_t trace_digest = 0;
    bool forced_draw = false; // max_rounds exceeded
};

class TraceRecorder;

// Bundle of the game's named chance streams for one playout (or one
// simulated playout inside an agent). Draw indices follow the order of
// GameDef::stream_names.
class StreamSet {
  public:
    StreamSet(const GameDef& def, const SeedSet& seeds);

    // All streams derived from sim_seed; used by agents for lookahead so the
    // real game streams are never touched or observed.
    static StreamSet simulation(const GameDef& def, std::uint64_t sim_seed);
    void reseed(std::uint64_t sim_seed);

    std::uint64_t draw_below(int idx, std::uint64_t bound);
    std::uint64_t draw_raw(int idx);

    const ChanceStream& stream(int idx) const { return streams_[static_cast<std::size_t>(idx)]; }
    int count() const { return static_cast<int>(streams_.size()); }
    int index_of(std::string_view name) const;

    void set_recorder(TraceRecorder* rec) { rec_ = rec; }

  private:
    StreamSet() = default;
    const GameDef* def_ = nullptr;
    std::vector<ChanceStream> streams_;
    std::vector<std::uint64_t> name_hashes_;
    TraceRecorder* rec_ = nullptr;
};

// Opaque per-game state. Concrete games derive from StateOf<Derived> which
// fills in clone/copy_from by value semantics.
class State {
  public:
    virtual ~State() = default;
    virtual std::unique_ptr<State> clone() const = 0;
    virtual void copy_from(const State& other) = 0;
};

template <typename Derived>
class StateOf : public State {
  public:
    std::unique_ptr<State> clone() const override {
        return std::make_unique<Derived>(static_cast<const Derived&>(*this));
    }
    void copy_from(const State& other) override {
        static_cast<Derived&>(*this) = static_cast<const Derived&>(other);
    }
};

// Forward model. Pure functions over state; all chance goes through the
// StreamSet handed in, never through hidden internal RNGs.
class Game {
  public:
    virtual ~Game() = default;
    const GameDef& def() const { return def_; }

    virtual std::unique_ptr<State> new_game(StreamSet& streams) const = 0;
    virtual bool terminal(const State& s) const = 0;
    virtual Scores scores(const State& s) const = 0; // pre: terminal(s)
    virtual int to_move(const State& s) const = 0;   // pre: !terminal(s)
    virtual void legal_actions(const State& s, std::vector<Action>& out) const = 0;
    virtual void apply(State& s, Action a, StreamSet& streams) const = 0;

    // Resample hidden information uniformly from the observer's information
    // set, in place. Identity for perfect-information games. Must depend only
    // on observer-visible information plus the rng.
    virtual void redeterminize(State& s, int observer, ChanceStream& rng) const = 0;

    // Hash of everything the observer can see; two states with equal digests
    // are indistinguishable to that seat.
    virtual std::uint64_t observation_digest(const State& s, int observer) const = 0;

  protected:
    explicit Game(GameDef def) : def_(std::move(def)) {}
    GameDef def_;
};

// Seeded decision maker. One instance serves one seat in one playout.
class Agent {
  public:
    virtual ~Agent() = default;
    virtual Action act(const Game& game, const State& s, int seat, ChanceStream& redet_rng) = 0;
};

// Records the full action/chance trace of one playout as a rolling 64-bit
// digest, optionally keeping the ordered event list for JSON dumps.
class TraceRecorder {
  public:
    explicit TraceRecorder(bool keep_events = false) : keep_events_(keep_events) {}

    void record_action(int seat, Action a);
    void record_draw(int stream_idx, std::uint64_t value);

    std::uint64_t digest() const { return digest_; }
    std::string to_json(const GameDef& def) const; // one JSON object per game

  private:
    struct Event {
        int kind; // 0 = action, 1 = chance draw
        int a;    // seat or stream index
        std::uint64_t b; // action or drawn value
    };
    std::uint64_t digest_ = 0x5eed5eed5eed5eedULL;
    bool keep_events_;
    std::vector<Event> events_;
};

struct PlayOptions {
    bool collect_trace = false; // fill PlayResult::trace_json
};

struct PlayResult {
    GameOutcome outcome;
    int decisions = 0;
    std::string trace_json; // empty unless requested
};

// Run one full game. All in-game randomness comes from the game's named
// streams (overridden streams use their override seed, others derive from
// game_master_seed); agent decisions see only the state, their own seed and
// the redeterminization stream. Replays with an identical SeedSet and agent
// configuration give identical trace digests.
PlayResult play_game(const Game& game, const SeedSet& seeds,
                     std::span<Agent* const> agents, const PlayOptions& opts = {});

// 16-char lowercase hex form of a trace digest, as used in reports.
std::string digest_hex(std::uint64_t digest);

} // namespace seedspan
