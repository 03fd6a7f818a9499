#include "seedspan/stats/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seedspan/rng.hpp"

namespace seedspan {

namespace {

void require_nonempty(const std::vector<double>& v, const char* who) {
    if (v.empty()) throw std::invalid_argument(std::string(who) + ": empty sample");
}

void require_rates(const std::vector<double>& v, const char* who) {
    require_nonempty(v, who);
    for (double r : v)
        if (!(r >= 0.0 && r <= 1.0))
            throw std::invalid_argument(std::string(who) + ": win rates must lie in [0, 1]");
}

} // namespace

BinomialInterval binomial_interval(int n, double p, double confidence) {
    if (n < 1) throw std::invalid_argument("binomial_interval: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_interval: p must lie in [0, 1]");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("binomial_interval: confidence must lie in (0, 1)");

    BinomialInterval iv;
    if (p <= 0.0) {
        iv.k_lo = iv.k_hi = 0;
    } else if (p >= 1.0) {
        iv.k_lo = iv.k_hi = n;
        iv.rate_lo_ = iv.rate_hi_ = 1.0;
        return iv;
    } else {
        const long double alpha = 1.0L - static_cast<long double>(confidence);
        const long double lp = static_cast<long double>(p);
        // pmf recurrence: pmf(k+1) = pmf(k) * (n-k)/(k+1) * p/(1-p)
        long double pmf = powl(1.0L - lp, n);
        long double cdf = pmf;
        const long double ratio = lp / (1.0L - lp);
        int k_lo = -1, k_hi = -1;
        for (int k = 0; k <= n; ++k) {
            if (k_lo < 0 && cdf >= alpha / 2.0L) k_lo = k;
            if (k_hi < 0 && cdf >= 1.0L - alpha / 2.0L) {
                k_hi = k;
                break;
            }
            pmf *= static_cast<long double>(n - k) / (k + 1) * ratio;
            cdf += pmf;
        }
        iv.k_lo = k_lo < 0 ? n : k_lo;
        iv.k_hi = k_hi < 0 ? n : k_hi;
    }
    iv.rate_lo_ = static_cast<double>(iv.k_lo) / n;
    iv.rate_hi_ = static_cast<double>(iv.k_hi) / n;
    return iv;
}

std::vector<int> histogram50(const std::vector<double>& win_rates) {
    require_rates(win_rates, "histogram50");
    std::vector<int> counts(50, 0);
    for (double r : win_rates) {
        int b = std::min(49, static_cast<int>(r * 50.0));
        ++counts[static_cast<std::size_t>(b)];
    }
    return counts;
}

double entropy(const std::vector<double>& win_rates) {
    std::vector<int> counts = histogram50(win_rates);
    const double n = static_cast<double>(win_rates.size());
    double h = 0.0;
    for (int c : counts) {
        if (c == 0) continue;
        double q = c / n;
        h -= q * std::log(q);
    }
    return h;
}

double span(const std::vector<double>& win_rates) {
    if (win_rates.size() < 2) throw std::invalid_argument("span: need at least 2 values");
    auto [lo, hi] = std::minmax_element(win_rates.begin(), win_rates.end());
    return *hi - *lo;
}

double trimmed_span(const std::vector<double>& win_rates, double trim) {
    if (win_rates.size() < 2) throw std::invalid_argument("trimmed_span: need at least 2 values");
    if (!(trim >= 0.0 && trim < 1.0))
        throw std::invalid_argument("trimmed_span: trim must lie in [0, 1)");
    std::vector<double> sorted(win_rates);
    std::sort(sorted.begin(), sorted.end());
    auto drop = static_cast<std::size_t>(std::floor(trim / 2.0 * static_cast<double>(sorted.size())));
    if (sorted.size() - 2 * drop < 2) drop = (sorted.size() - 2) / 2;
    return sorted[sorted.size() - 1 - drop] - sorted[drop];
}

double outlier_fraction(const std::vector<double>& win_rates, int n_games_per_seed,
                        double confidence) {
    require_rates(win_rates, "outlier_fraction");
    double mean = 0.0;
    for (double r : win_rates) mean += r;
    mean /= static_cast<double>(win_rates.size());
    BinomialInterval iv = binomial_interval(n_games_per_seed, mean, confidence);
    constexpr double kTol = 1e-12;
    int out = 0;
    for (double r : win_rates)
        if (r < iv.rate_lo() - kTol || r > iv.rate_hi() + kTol) ++out;
    return out / static_cast<double>(win_rates.size());
}

double single_game_variance(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("single_game_variance: p must lie in [0, 1]");
    return p * (1.0 - p);
}

double mirrored_game_variance(const std::vector<double>& seed_win_probs) {
    require_rates(seed_win_probs, "mirrored_game_variance");
    double sum = 0.0;
    for (double p : seed_win_probs) sum += p * (1.0 - p);
    return sum / static_cast<double>(seed_win_probs.size());
}

BootstrapCi bootstrap_ci(const std::vector<double>& values,
                         const std::function<double(const std::vector<double>&)>& statistic,
                         int n_boot, std::uint64_t boot_seed, double confidence) {
    require_nonempty(values, "bootstrap_ci");
    if (n_boot < 1) throw std::invalid_argument("bootstrap_ci: need at least 1 resample");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("bootstrap_ci: confidence must lie in (0, 1)");

    Rng rng(boot_seed);
    const std::size_t n = values.size();
    std::vector<double> resample(n);
    std::vector<double> stats(static_cast<std::size_t>(n_boot));
    for (int b = 0; b < n_boot; ++b) {
        for (std::size_t i = 0; i < n; ++i) resample[i] = values[rng.next_below(n)];
        stats[static_cast<std::size_t>(b)] = statistic(resample);
    }
    std::sort(stats.begin(), stats.end());
    const double alpha = 1.0 - confidence;
    auto pick = [&](double q) {
        auto idx = static_cast<std::size_t>(std::llround(q * (n_boot - 1)));
        return stats[std::min(idx, stats.size() - 1)];
    };
    BootstrapCi ci;
    ci.lo = pick(alpha / 2.0);
    ci.hi = pick(1.0 - alpha / 2.0);
    ci.point = statistic(values);
    return ci;
}

double one_sided_z(double confidence) {
    if (!(confidence > 0.5 && confidence < 1.0))
        throw std::invalid_argument("one_sided_z: confidence must lie in (0.5, 1)");
    auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    double lo = 0.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (phi(mid) < confidence ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

MetricsReport compute_metrics(const std::vector<double>& win_rates, int n_games_per_seed) {
    require_rates(win_rates, "compute_metrics");
    MetricsReport m;
    m.n_seeds = static_cast<int>(win_rates.size());
    m.n_games = n_games_per_seed;
    for (double r : win_rates) m.grand_mean += r;
    m.grand_mean /= m.n_seeds;
    m.entropy = entropy(win_rates);
    m.span = win_rates.size() >= 2 ? span(win_rates) : 0.0;
    m.trimmed_span = win_rates.size() >= 2 ? trimmed_span(win_rates) : 0.0;
    m.outlier_fraction = outlier_fraction(win_rates, n_games_per_seed);
    m.single_game_variance = single_game_variance(m.grand_mean);
    m.mirrored_game_variance = mirrored_game_variance(win_rates);
    BinomialInterval iv = binomial_interval(n_games_per_seed, m.grand_mean);
    m.null_lo = iv.rate_lo();
    m.null_hi = iv.rate_hi();
    return m;
}

NonMonotonicReport nonmonotonic_seeds(const std::vector<std::vector<double>>& win_rates,
                                      int n_games, double confidence) {
    if (win_rates.size() < 3)
        throw std::invalid_argument("nonmonotonic_seeds: need at least 3 budget rows");
    if (n_games < 1) throw std::invalid_argument("nonmonotonic_seeds: n_games must be >= 1");
    const std::size_t n_seeds = win_rates.front().size();
    for (const auto& row : win_rates)
        if (row.size() != n_seeds)
            throw std::invalid_argument("nonmonotonic_seeds: ragged win-rate rows");
    if (n_seeds == 0) throw std::invalid_argument("nonmonotonic_seeds: empty rows");

    NonMonotonicReport rep;
    rep.z_critical = one_sided_z(confidence);
    const double n = static_cast<double>(n_games);

    // Win rates are multiples of 0.5/n because draws score one half; round the
    // implied win counts up (toward wins) so the z-test sees integer counts.
    auto to_count_rate = [&](double rate) { return std::ceil(rate * n - 1e-9) / n; };

    // pooled two-proportion z for p1 > p2, equal sample sizes
    auto z_gt = [&](double p1, double p2) {
        double pooled = 0.5 * (p1 + p2);
        double se = std::sqrt(pooled * (1.0 - pooled) * 2.0 / n);
        if (se == 0.0) return 0.0;
        return (p1 - p2) / se;
    };

    std::vector<char> seed_hit(n_seeds, 0);
    for (std::size_t j = 1; j + 1 < win_rates.size(); ++j) {
        std::vector<int> flagged;
        for (std::size_t s = 0; s < n_seeds; ++s) {
            double prev = to_count_rate(win_rates[j - 1][s]);
            double mid = to_count_rate(win_rates[j][s]);
            double next = to_count_rate(win_rates[j + 1][s]);
            bool above = z_gt(mid, prev) > rep.z_critical && z_gt(mid, next) > rep.z_critical;
            bool below = z_gt(prev, mid) > rep.z_critical && z_gt(next, mid) > rep.z_critical;
            if (above || below) {
                flagged.push_back(static_cast<int>(s));
                seed_hit[s] = 1;
            }
        }
        rep.budget_fractions.push_back(static_cast<double>(flagged.size()) /
                                       static_cast<double>(n_seeds));
        rep.flagged.push_back(std::move(flagged));
    }
    int hits = 0;
    for (char h : seed_hit) hits += h;
    rep.seed_fraction = static_cast<double>(hits) / static_cast<double>(n_seeds);
    return rep;
}

} // namespace seedspan
