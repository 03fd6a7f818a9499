#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace seedspan {

// Exact central binomial acceptance interval on counts: the smallest k with
// CDF(k) >= alpha/2 and the smallest k with CDF(k) >= 1 - alpha/2, where
// alpha = 1 - confidence. Degenerate p gives [0, 0] or [n, n].
struct BinomialInterval {
    int k_lo = 0;
    int k_hi = 0;
    double rate_lo() const { return rate_lo_; }
    double rate_hi() const { return rate_hi_; }
    double rate_lo_ = 0.0;
    double rate_hi_ = 0.0;
};

BinomialInterval binomial_interval(int n, double p, double confidence = 0.99);

// Histogram of win rates over 50 buckets of width 0.02 on [0, 1]; a rate of
// exactly 1.0 lands in the last bucket.
std::vector<int> histogram50(const std::vector<double>& win_rates);

// Shannon entropy in nats of the 50-bucket histogram. Maximum ln(50) ~ 3.912.
double entropy(const std::vector<double>& win_rates);

double span(const std::vector<double>& win_rates);

// Span of the central (1 - trim) mass: sort, drop floor(trim/2 * n) values
// from each tail. trim = 0.05 keeps the central 95%.
double trimmed_span(const std::vector<double>& win_rates, double trim = 0.05);

// Fraction of per-seed win rates falling strictly outside the exact central
// 99% binomial interval around the pooled grand mean.
double outlier_fraction(const std::vector<double>& win_rates, int n_games_per_seed,
                        double confidence = 0.99);

// Variance of a single game's score when the win probability is p. This is
// p(1-p) whatever distribution the seed-conditional probabilities follow,
// as long as p is their mean: the seed mixture is invisible to single games.
double single_game_variance(double p);

// Per-pair score variance under mirrored seeds: mean of p_i(1 - p_i) over
// the seed-conditional win probabilities. Zero when every seed is decisive.
double mirrored_game_variance(const std::vector<double>& seed_win_probs);

struct BootstrapCi {
    double lo = 0.0;
    double hi = 0.0;
    double point = 0.0; // statistic on the original sample
};

// Percentile bootstrap over resamples of `values`, deterministic in boot_seed.
BootstrapCi bootstrap_ci(const std::vector<double>& values,
                         const std::function<double(const std::vector<double>&)>& statistic,
                         int n_boot, std::uint64_t boot_seed, double confidence = 0.95);

// One-sided critical z for the given confidence (0.99 -> 2.3263...).
double one_sided_z(double confidence);

struct MetricsReport {
    int n_seeds = 0;
    int n_games = 0;
    double grand_mean = 0.0;
    double entropy = 0.0;
    double span = 0.0;
    double trimmed_span = 0.0;
    double outlier_fraction = 0.0;
    double single_game_variance = 0.0;
    double mirrored_game_variance = 0.0;
    double null_lo = 0.0; // 99% binomial acceptance band around the grand mean
    double null_hi = 0.0;
};

MetricsReport compute_metrics(const std::vector<double>& win_rates, int n_games_per_seed);

// Seeds whose win rate at a middle budget is significantly above or below
// both neighbouring budgets (pooled two-proportion one-sided z tests).
struct NonMonotonicReport {
    double z_critical = 0.0;
    std::vector<std::vector<int>> flagged; // [interior budget index] -> seed indices
    std::vector<double> budget_fractions;  // flagged fraction per interior budget
    double seed_fraction = 0.0;            // seeds flagged at any budget, counted once
};

// win_rates[budget][seed]; every cell uses n_games games.
NonMonotonicReport nonmonotonic_seeds(const std::vector<std::vector<double>>& win_rates,
                                      int n_games, double confidence = 0.99);

} // namespace seedspan
