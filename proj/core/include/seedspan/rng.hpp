#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seedspan {

// SplitMix64 finalizer. Bijective 64-bit mix, used for both seed derivation
// and as the step function of Rng.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Combine a base seed with one salt; chain for hierarchical derivation.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return mix64(mix64(base) ^ salt);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view name) {
    return derive_seed(base, hash_str(name));
}

// Counter-based 64-bit generator: output i is mix64(seed + i * odd_gamma).
// State is a single word, bit-identical across platforms, cheap to copy.
class Rng {
  public:
    using result_type = std::uint64_t;

    Rng() : state_(0) {}
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t operator()() { return next(); }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via Lemire multiply-shift with rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::next_below: bound must be >= 1");
        if (bound == 1) return 0;
        while (true) {
            std::uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (0 - bound) % bound) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // Uniform double in [0, 1), 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t state() const { return state_; }
    void set_state(std::uint64_t s) { state_ = s; }

    friend bool operator==(const Rng&, const Rng&) = default;

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

  private:
    std::uint64_t state_;
};

// A named, independently seeded source of game randomness. Identical
// (seed, name) pairs give identical sequences; draw_count advances by one
// per draw call regardless of internal rejection retries.
class ChanceStream {
  public:
    ChanceStream() = default;
    ChanceStream(std::string name, std::uint64_t seed)
        : name_(std::move(name)), rng_(seed) {}

    const std::string& name() const { return name_; }
    std::uint64_t draw_count() const { return draw_count_; }

    // Restart the stream from a new seed, keeping the name. Used by agents to
    // rebuild simulation streams once per search iteration without allocating.
    void reseed(std::uint64_t seed) {
        rng_ = Rng(seed);
        draw_count_ = 0;
    }

    std::uint64_t draw_raw() {
        ++draw_count_;
        return rng_.next();
    }

    std::uint64_t draw_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("ChanceStream::draw_below: bound must be >= 1");
        ++draw_count_;
        return rng_.next_below(bound);
    }

    double draw01() {
        ++draw_count_;
        return rng_.next_double();
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = draw_below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t rng_state() const { return rng_.state(); }

  private:
    std::string name_;
    Rng rng_;
    std::uint64_t draw_count_ = 0;
};

// Streams with the same master seed but different names are independent;
// fixing one name never perturbs another.
inline ChanceStream derive_stream(std::uint64_t master_seed, std::string_view name) {
    if (name.empty()) throw std::invalid_argument("derive_stream: stream name must be non-empty");
    return ChanceStream(std::string(name), derive_seed(master_seed, name));
}

} // namespace seedspan
