#pragma once
#include <cstdint>
#include <string>

#include "seedspan/rng.hpp"

namespace seedspan {

// A distribution over seed-conditional win probabilities p in [0, 1].
// Models "how much the seed matters": a point mass means the seed is
// irrelevant; mass near 0 and 1 means the seed decides the game.
struct Mixture {
    enum class Kind { point, two_point, beta };

    Kind kind = Kind::point;
    double a = 0.5; // point: p; two_point: first value; beta: alpha
    double b = 0.0; // two_point: second value; beta: beta
    double w = 0.5; // two_point: weight on `a`

    static Mixture point(double p);
    static Mixture two_point(double pa, double pb, double weight_a = 0.5);
    static Mixture beta(double alpha, double beta);

    double mean() const;    // E[p]
    double mean_pq() const; // E[p(1-p)]
    double sample(Rng& rng) const;
    std::string describe() const;
};

// Monte-Carlo check of the two variance identities:
//  - a single game's score variance is m(1-m) with m = E[p], regardless of
//    how p is distributed across seeds;
//  - the per-pair deviation variance under mirrored seeds is 2 E[p(1-p)].
// Each empirical value must sit within 3 standard errors of theory.
struct VarianceCheck {
    int n_draws = 0;
    double single_empirical = 0.0;
    double single_theory = 0.0;
    double single_tolerance = 0.0; // 3 standard errors
    double paired_empirical = 0.0;
    double paired_theory = 0.0;
    double paired_tolerance = 0.0;
    bool single_ok = false;
    bool paired_ok = false;
    bool ok = false;
};

VarianceCheck verify_variance(const Mixture& mixture, int n_draws, std::uint64_t seed);

} // namespace seedspan
