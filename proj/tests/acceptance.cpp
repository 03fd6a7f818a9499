// Acceptance gate: one criterion per invocation (argv[1] in 1..10), one
// pass/fail line per criterion on stdout, exit 0 on pass and 1 on fail.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "seedspan/agents/agents.hpp"
#include "seedspan/games/cantstop.hpp"
#include "seedspan/games/kuhn_solver.hpp"
#include "seedspan/games/registry.hpp"
#include "seedspan/runner/runner.hpp"
#include "seedspan/stats/mixtures.hpp"
#include "seedspan/stats/serialize.hpp"
#include "seedspan/stats/stats.hpp"

using namespace seedspan;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("  [%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

// ---- criterion 1: single-game variance identity -----------------------------

void criterion_1() {
    const Mixture mixtures[] = {Mixture::beta(2.0, 5.0), Mixture::two_point(0.2, 0.8, 0.5),
                                Mixture::point(0.5), Mixture::point(0.1)};
    for (const Mixture& m : mixtures) {
        VarianceCheck v = verify_variance(m, 100000, 20260823);
        check(v.single_ok, m.describe() + ": single-game variance " + fmt(v.single_empirical) +
                               " within 3 sigma of " + fmt(v.single_theory));
    }
}

// ---- criterion 2: mirrored-pair variance identity ----------------------------

void criterion_2() {
    const Mixture mixtures[] = {Mixture::beta(2.0, 5.0), Mixture::two_point(0.2, 0.8, 0.5),
                                Mixture::point(0.5)};
    for (const Mixture& m : mixtures) {
        VarianceCheck v = verify_variance(m, 100000, 20260824);
        check(v.paired_ok, m.describe() + ": per-pair variance " + fmt(v.paired_empirical) +
                               " within 3 sigma of " + fmt(v.paired_theory));
    }
    VarianceCheck decisive = verify_variance(Mixture::two_point(0.0, 1.0, 0.5), 100000, 20260825);
    check(decisive.paired_empirical == 0.0,
          "two_point {0,1}: per-pair variance exactly 0 (got " + fmt(decisive.paired_empirical) +
              ")");
    VarianceCheck coin = verify_variance(Mixture::point(0.5), 100000, 20260826);
    check(std::abs(coin.paired_empirical - 0.5) < 0.02,
          "point 0.5: per-pair variance ~0.5, no mirroring benefit (got " +
              fmt(coin.paired_empirical) + ")");
}

// ---- criterion 3: determinism -------------------------------------------------

void criterion_3() {
    for (const auto& name : game_names()) {
        auto game = build_game(name);
        SeedSet seeds;
        seeds.game_master_seed = derive_seed(303, "master");
        seeds.redeterminization_seed = derive_seed(303, "redet");
        seeds.agent_seeds = {derive_seed(303, 0), derive_seed(303, 1)};

        auto play_once = [&] {
            auto a0 = make_agent({}, seeds.agent_seeds[0]);
            auto a1 = make_agent({AgentKind::ismcts, 16}, seeds.agent_seeds[1]);
            std::array<Agent*, 2> agents{a0.get(), a1.get()};
            return play_game(*game, seeds, std::span<Agent* const>(agents.data(), 2))
                .outcome.trace_digest;
        };
        std::uint64_t first = play_once();
        bool same = true;
        for (int i = 0; i < 9; ++i) same = same && play_once() == first;
        check(same, name + ": 10 replays of one SeedSet share digest " + digest_hex(first));
    }

    auto game = build_game("kuhn");
    const std::array<AgentSpec, 2> agents{AgentSpec{}, AgentSpec{}};
    std::string csv1 = seeds_csv(run_distribution(*game, 10, 20, agents, 424242, 1));
    std::string csv4 = seeds_csv(run_distribution(*game, 10, 20, agents, 424242, 4));
    std::string csv16 = seeds_csv(run_distribution(*game, 10, 20, agents, 424242, 16));
    check(csv1 == csv4 && csv4 == csv16,
          "kuhn distribution: seeds.csv byte-identical for workers 1, 4, 16");
}

// ---- criterion 4: null calibration on connect4 --------------------------------

void criterion_4() {
    auto game = build_game("connect4");
    AgentSpec mc{AgentKind::ismcts, 64};
    SeedDistribution dist = run_distribution(*game, 50, 500, {mc, mc}, 440001, 1);
    MetricsReport m = compute_metrics(dist.win_rates, dist.n_games);
    check(m.outlier_fraction <= 0.06, "connect4 50x500 @budget 64: outlier_fraction " +
                                          fmt(m.outlier_fraction) + " <= 0.06");
    check(m.trimmed_span <= 0.10,
          "connect4 50x500 @budget 64: trimmed_span " + fmt(m.trimmed_span) + " <= 0.10");
}

// ---- criterion 5: bimodality on kuhn -------------------------------------------

void criterion_5() {
    auto game = build_game("kuhn");
    AgentSpec mc{AgentKind::ismcts, 1024};
    SeedDistribution dist = run_distribution(*game, 50, 300, {mc, mc}, 550001, 1);
    MetricsReport m = compute_metrics(dist.win_rates, dist.n_games);
    check(m.span >= 0.8, "kuhn 50x300 @budget 1024: span " + fmt(m.span) + " >= 0.8");

    // synthetic unimodal control with the same span: evenly spaced win rates
    double lo = *std::min_element(dist.win_rates.begin(), dist.win_rates.end());
    std::vector<double> control(dist.win_rates.size());
    const double n1 = static_cast<double>(control.size() - 1);
    for (std::size_t i = 0; i < control.size(); ++i)
        control[i] = lo + m.span * (static_cast<double>(i) / n1);
    double control_entropy = entropy(control);
    check(m.entropy < control_entropy, "bimodal entropy " + fmt(m.entropy) +
                                           " < matching-span unimodal control " +
                                           fmt(control_entropy));
}

// ---- criterion 6: skill trend ----------------------------------------------------

void criterion_6() {
    const std::vector<int> budgets{0, 64, 1024};
    for (const char* name : {"kuhn", "cantstop"}) {
        auto game = build_game(name);
        SkillSweep sweep =
            run_skill_sweep(*game, budgets, 30, 300, AgentSpec{}, 660001, 1);
        auto ts = [](const std::vector<double>& v) { return trimmed_span(v); };
        BootstrapCi low = bootstrap_ci(sweep.win_rates.front(), ts, 10000, 601, 0.95);
        BootstrapCi high = bootstrap_ci(sweep.win_rates.back(), ts, 10000, 602, 0.95);
        check(high.point > low.point,
              std::string(name) + ": trimmed_span grows with budget (" + fmt(low.point) + " @0 -> " +
                  fmt(high.point) + " @1024)");
        check(high.lo > low.hi, std::string(name) + ": 95% bootstrap CIs separate ([" +
                                    fmt(low.lo) + ", " + fmt(low.hi) + "] vs [" + fmt(high.lo) +
                                    ", " + fmt(high.hi) + "])");
    }
}

// ---- criterion 7: disentanglement sanity -------------------------------------------

void criterion_7() {
    auto game = build_game("loveletter");
    AgentSpec mc{AgentKind::ismcts, 256};
    const std::array<AgentSpec, 2> agents{mc, mc};
    const std::uint64_t root = 770001;

    SeedDistribution all = run_distribution(*game, 50, 300, agents, root, 1);
    SeedDistribution burn = run_disentangled(*game, {"burn"}, 50, 300, agents, root, 1);
    SeedDistribution deck = run_disentangled(*game, {"deck"}, 50, 300, agents, root, 1);
    SeedDistribution both = run_disentangled(*game, {"burn", "deck"}, 50, 300, agents, root, 1);

    MetricsReport m_all = compute_metrics(all.win_rates, all.n_games);
    MetricsReport m_burn = compute_metrics(burn.win_rates, burn.n_games);
    MetricsReport m_deck = compute_metrics(deck.win_rates, deck.n_games);
    MetricsReport m_both = compute_metrics(both.win_rates, both.n_games);

    check(m_burn.outlier_fraction <= m_all.outlier_fraction + 0.05,
          "burn-fixed outliers " + fmt(m_burn.outlier_fraction) + " <= all-fixed " +
              fmt(m_all.outlier_fraction) + " + 0.05");
    check(m_deck.outlier_fraction <= m_all.outlier_fraction + 0.05,
          "deck-fixed outliers " + fmt(m_deck.outlier_fraction) + " <= all-fixed " +
              fmt(m_all.outlier_fraction) + " + 0.05");

    auto ts = [](const std::vector<double>& v) { return trimmed_span(v); };
    BootstrapCi band = bootstrap_ci(all.win_rates, ts, 10000, 701, 0.95);
    check(m_both.trimmed_span >= band.lo && m_both.trimmed_span <= band.hi,
          "both-fixed trimmed_span " + fmt(m_both.trimmed_span) + " inside all-fixed CI [" +
              fmt(band.lo) + ", " + fmt(band.hi) + "]");
    check(both.win_rates == all.win_rates,
          "fixing every declared stream reproduces the all-fixed win rates exactly");
}

// ---- criterion 8: rules oracles -------------------------------------------------

bool column_open(const CantStopState& st, int c) {
    using cantstop::kColumnLength;
    if (c < 0 || c > 10 || st.claimed[c] >= 0) return false;
    for (int i = 0; i < st.n_markers; ++i)
        if (st.marker_col[i] == c)
            return st.marker_pos[i] < kColumnLength[static_cast<std::size_t>(c)];
    if (st.n_markers >= 3) return false;
    return st.perm[st.seat][c] < kColumnLength[static_cast<std::size_t>(c)];
}

bool oracle_playable(const CantStopState& st, int d0, int d1, int d2, int d3) {
    const int sums[3][2] = {{d0 + d1, d2 + d3}, {d0 + d2, d1 + d3}, {d0 + d3, d1 + d2}};
    for (const auto& pair : sums)
        if (column_open(st, pair[0] - 2) || column_open(st, pair[1] - 2)) return true;
    return false;
}

void criterion_8() {
    std::vector<CantStopState> configs(10);
    auto put = [](CantStopState& st, int i, int col, int pos) {
        st.marker_col[i] = static_cast<std::uint8_t>(col);
        st.marker_pos[i] = static_cast<std::uint8_t>(pos);
        st.n_markers = static_cast<std::uint8_t>(i + 1);
        st.turn_has_progress = 1;
    };
    put(configs[1], 0, 5, 3);
    put(configs[2], 0, 0, 1);
    put(configs[2], 1, 10, 1);
    put(configs[3], 0, 0, 1);
    put(configs[3], 1, 4, 2);
    put(configs[3], 2, 10, 1);
    put(configs[4], 0, 4, 3);
    put(configs[4], 1, 5, 4);
    put(configs[4], 2, 6, 2);
    put(configs[5], 0, 0, 3);
    put(configs[5], 1, 1, 5);
    put(configs[5], 2, 10, 3);
    put(configs[6], 0, 5, 3);
    configs[6].claimed[4] = 1;
    configs[6].claimed[6] = 1;
    put(configs[7], 0, 0, 1);
    put(configs[7], 1, 1, 2);
    put(configs[7], 2, 2, 3);
    for (int c : {3, 4, 5, 6, 7, 8}) configs[7].claimed[c] = 1;
    put(configs[8], 0, 3, 9);
    put(configs[8], 1, 5, 13);
    put(configs[8], 2, 7, 9);
    put(configs[9], 0, 5, 2);
    configs[9].perm[0][4] = 8;
    configs[9].perm[0][6] = 10;

    int mismatches = 0;
    std::vector<Action> opts;
    for (const CantStopState& st : configs)
        for (int d0 = 1; d0 <= 6; ++d0)
            for (int d1 = 1; d1 <= 6; ++d1)
                for (int d2 = 1; d2 <= 6; ++d2)
                    for (int d3 = 1; d3 <= 6; ++d3) {
                        std::array<std::uint8_t, 4> dice{
                            static_cast<std::uint8_t>(d0), static_cast<std::uint8_t>(d1),
                            static_cast<std::uint8_t>(d2), static_cast<std::uint8_t>(d3)};
                        std::sort(dice.begin(), dice.end());
                        cantstop::pairing_options(st, dice, opts);
                        if (opts.empty() == oracle_playable(st, d0, d1, d2, d3)) ++mismatches;
                    }
    check(mismatches == 0, "cantstop bust outcomes match exhaustive 6^4 enumeration for 10 "
                           "marker configurations (" +
                               std::to_string(mismatches) + " mismatches)");

    double v = kuhn_solver::hand_value();
    check(std::abs(v - (-1.0 / 18.0)) < 1e-12,
          "kuhn single-hand value " + fmt(v) + " equals -1/18 to 1e-12");
    check(kuhn_solver::call_with_king_dominant(),
          "tree enumerator confirms calling with the king dominates folding");
}

// ---- criterion 9: statistics unit oracles ------------------------------------------

void criterion_9() {
    // exact CDF summation via log-gamma, independent of the production
    // multiplicative recurrence
    bool intervals_ok = true;
    for (int n = 1; n <= 1000 && intervals_ok; ++n) {
        for (int pi = 0; pi <= 10; ++pi) {
            double p = pi / 10.0;
            BinomialInterval got = binomial_interval(n, p, 0.99);
            int k_lo = 0, k_hi = n;
            if (p <= 0.0) {
                k_hi = 0;
            } else if (p >= 1.0) {
                k_lo = n;
            } else {
                long double lp = std::log(static_cast<long double>(p));
                long double lq = std::log(1.0L - static_cast<long double>(p));
                long double lgn = std::lgammal(static_cast<long double>(n) + 1.0L);
                long double cdf = 0.0L;
                k_lo = -1;
                k_hi = -1;
                for (int k = 0; k <= n; ++k) {
                    cdf += std::exp(lgn - std::lgammal(static_cast<long double>(k) + 1.0L) -
                                    std::lgammal(static_cast<long double>(n - k) + 1.0L) + k * lp +
                                    (n - k) * lq);
                    if (k_lo < 0 && cdf >= 0.005L) k_lo = k;
                    if (k_hi < 0 && cdf >= 0.995L) k_hi = k;
                }
                if (k_hi < 0) k_hi = n;
            }
            if (got.k_lo != k_lo || got.k_hi != k_hi) {
                intervals_ok = false;
                std::printf("  first mismatch at n=%d p=%.1f: got [%d, %d] want [%d, %d]\n", n, p,
                            got.k_lo, got.k_hi, k_lo, k_hi);
                break;
            }
        }
    }
    check(intervals_ok, "binomial_interval matches exact CDF summation on n in 1..1000, "
                        "p in {0, 0.1, ..., 1}");

    bool entropy_ok = std::abs(entropy({0.5, 0.5}) - 0.0) < 1e-12 &&
                      std::abs(entropy({0.25, 0.75}) - std::log(2.0)) < 1e-12;
    std::vector<double> uniform;
    for (int i = 0; i < 50; ++i) uniform.push_back(0.01 + 0.02 * i);
    entropy_ok = entropy_ok && std::abs(entropy(uniform) - std::log(50.0)) < 1e-12;
    check(entropy_ok, "entropy hits 0, ln 2 and ln 50 to 1e-12 on analytic inputs");

    Rng rng(909);
    bool spans_ok = true;
    for (int trial = 0; trial < 1000 && spans_ok; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(300));
        double trim = static_cast<double>(rng.next_below(50)) / 100.0;
        std::vector<double> v(static_cast<std::size_t>(n));
        for (auto& x : v) x = rng.next_double();
        std::vector<double> s = v;
        std::sort(s.begin(), s.end());
        int drop = static_cast<int>(std::floor(trim / 2.0 * n));
        double expect =
            s[static_cast<std::size_t>(n - 1 - drop)] - s[static_cast<std::size_t>(drop)];
        if (std::abs(trimmed_span(v, trim) - expect) > 1e-12) spans_ok = false;
    }
    check(spans_ok, "trimmed_span matches brute-force sorted-quantile computation on 1000 "
                    "random inputs");
}

// ---- criterion 10: non-monotonic detector -------------------------------------------

void criterion_10() {
    const int n_seeds = 1000, n_games = 1000;
    Rng rng(101010);
    auto binom_rate = [&](double p) {
        int wins = 0;
        for (int g = 0; g < n_games; ++g)
            if (rng.next_double() < p) ++wins;
        return static_cast<double>(wins) / n_games;
    };

    for (double planted : {0.0, 0.05, 0.15}) {
        int n_planted = static_cast<int>(std::lround(planted * n_seeds));
        std::vector<std::vector<double>> rates(3, std::vector<double>(n_seeds));
        for (int s = 0; s < n_seeds; ++s) {
            bool plant = s < n_planted;
            bool above = s % 2 == 0;
            rates[0][static_cast<std::size_t>(s)] = binom_rate(0.5);
            rates[1][static_cast<std::size_t>(s)] = binom_rate(plant ? (above ? 0.65 : 0.35) : 0.5);
            rates[2][static_cast<std::size_t>(s)] = binom_rate(0.5);
        }
        NonMonotonicReport rep = nonmonotonic_seeds(rates, n_games);
        if (planted == 0.0) {
            check(rep.seed_fraction <= 0.04, "null sweep flags " + fmt(rep.seed_fraction) +
                                                 " <= 0.04 (two one-sided 99% tests)");
        } else {
            check(std::abs(rep.seed_fraction - planted) <= 0.02,
                  "planted fraction " + fmt(planted) + " recovered as " +
                      fmt(rep.seed_fraction) + " (within 2pp)");
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..10>\n");
        return 2;
    }
    int c = std::atoi(argv[1]);
    static const char* kNames[] = {
        "single-game variance identity",
        "mirrored-pair variance identity",
        "determinism of replays and worker counts",
        "null calibration (connect4)",
        "bimodality (kuhn)",
        "skill trend with separated bootstrap CIs",
        "disentanglement sanity (loveletter)",
        "rules oracles (cantstop busts, kuhn value)",
        "statistics unit oracles",
        "non-monotonic seed detector",
    };
    if (c < 1 || c > 10) {
        std::fprintf(stderr, "criterion must be in 1..10\n");
        return 2;
    }
    std::printf("criterion %d: %s\n", c, kNames[c - 1]);
    switch (c) {
        case 1: criterion_1(); break;
        case 2: criterion_2(); break;
        case 3: criterion_3(); break;
        case 4: criterion_4(); break;
        case 5: criterion_5(); break;
        case 6: criterion_6(); break;
        case 7: criterion_7(); break;
        case 8: criterion_8(); break;
        case 9: criterion_9(); break;
        case 10: criterion_10(); break;
    }
    std::printf("criterion %d: %s\n", c, g_failures == 0 ? "PASS" : "FAIL");
    return g_failures == 0 ? 0 : 1;
}
