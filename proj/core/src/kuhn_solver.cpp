#include "seedspan/games/kuhn_solver.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace seedspan::kuhn_solver {

namespace {

int strat1_for(int strat1, int card) { return (strat1 / (card == 0 ? 1 : card == 1 ? 3 : 9)) % 3; }
int strat2_for(int strat2, int card) { return (strat2 / (card == 0 ? 1 : card == 1 ? 4 : 16)) % 4; }

// Simplex (Dantzig would do; Bland's rule guarantees termination) on
//   max 1'w  s.t.  B w <= 1, w >= 0
// for a positive m x n matrix B. Returns the optimal objective.
long double solve_packing_lp(const std::vector<std::vector<long double>>& B, int m, int n) {
    // tableau: rows = constraints, columns = n structural + m slacks + rhs
    int cols = n + m + 1;
    std::vector<std::vector<long double>> t(static_cast<std::size_t>(m),
                                            std::vector<long double>(static_cast<std::size_t>(cols), 0.0L));
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = B[i][j];
        t[i][n + i] = 1.0L;
        t[i][cols - 1] = 1.0L;
        basis[i] = n + i;
    }
    std::vector<long double> obj(static_cast<std::size_t>(cols), 0.0L);
    for (int j = 0; j < n; ++j) obj[j] = -1.0L; // minimize -sum(w)

    for (int iter = 0; iter < 100000; ++iter) {
        int pivot_col = -1; // Bland: first improving column
        for (int j = 0; j < n + m; ++j)
            if (obj[static_cast<std::size_t>(j)] < -1e-18L) {
                pivot_col = j;
                break;
            }
        if (pivot_col < 0) break; // optimal

        int pivot_row = -1;
        long double best_ratio = 0.0L;
        for (int i = 0; i < m; ++i) {
            long double a = t[i][static_cast<std::size_t>(pivot_col)];
            if (a > 1e-15L) {
                long double ratio = t[i][static_cast<std::size_t>(cols - 1)] / a;
                if (pivot_row < 0 || ratio < best_ratio - 1e-18L ||
                    (std::abs(static_cast<double>(ratio - best_ratio)) < 1e-18 &&
                     basis[i] < basis[static_cast<std::size_t>(pivot_row)])) {
                    pivot_row = i;
                    best_ratio = ratio;
                }
            }
        }
        if (pivot_row < 0) throw std::runtime_error("kuhn solver: LP unbounded");

        auto& prow = t[static_cast<std::size_t>(pivot_row)];
        long double pv = prow[static_cast<std::size_t>(pivot_col)];
        for (auto& x : prow) x /= pv;
        for (int i = 0; i < m; ++i) {
            if (i == pivot_row) continue;
            long double f = t[i][static_cast<std::size_t>(pivot_col)];
            if (f == 0.0L) continue;
            for (int j = 0; j < cols; ++j) t[i][static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        long double f = obj[static_cast<std::size_t>(pivot_col)];
        if (f != 0.0L)
            for (int j = 0; j < cols; ++j) obj[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        basis[static_cast<std::size_t>(pivot_row)] = pivot_col;
    }

    long double total = 0.0L;
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) total += t[i][static_cast<std::size_t>(cols - 1)];
    return total;
}

} // namespace

double pure_payoff(int card1, int card2, int strat1, int strat2) {
    int s1 = strat1_for(strat1, card1);
    int s2 = strat2_for(strat2, card2);
    int showdown = card1 > card2 ? 1 : -1;
    if (s1 == 0) {                        // bet
        if (s2 & 1) return 2.0 * showdown; // call
        return 1.0;                        // fold: first actor takes the antes
    }
    // check
    if (s2 & 2) {                          // bet
        if (s1 == 1) return 2.0 * showdown; // call
        return -1.0;                        // fold
    }
    return 1.0 * showdown; // check-check showdown
}

double hand_value() {
    constexpr int kRows = 27, kCols = 64;
    constexpr long double kShift = 3.0L; // payoffs live in [-2, 2]
    std::vector<std::vector<long double>> B(kRows, std::vector<long double>(kCols, 0.0L));
    for (int r = 0; r < kRows; ++r) {
        for (int c = 0; c < kCols; ++c) {
            long double sum = 0.0L;
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = 0; c2 < 3; ++c2) {
                    if (c1 == c2) continue;
                    sum += static_cast<long double>(pure_payoff(c1, c2, r, c));
                }
            B[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = sum / 6.0L + kShift;
        }
    }
    long double inv_v = solve_packing_lp(B, kRows, kCols);
    return static_cast<double>(1.0L / inv_v - kShift);
}

bool call_with_king_dominant() {
    // second actor holding K facing a bet: compare call vs fold against every
    // first-actor pure strategy whose K-deal action is bet
    for (int strat1 = 0; strat1 < 27; ++strat1) {
        for (int c1 = 0; c1 < 2; ++c1) { // opponent holds J or Q
            if (strat1_for(strat1, c1) != 0) continue; // only lines that bet
            // payoff to second actor = -payoff to first
            double call = -pure_payoff(c1, 2, strat1, 1 * 16); // K digit: bit0 set, call
            double fold = -pure_payoff(c1, 2, strat1, 0 * 16);
            if (!(call > fold)) return false;
        }
    }
    // first actor holding K facing a check-then-bet: call vs fold
    for (int strat2 = 0; strat2 < 64; ++strat2) {
        for (int c2 = 0; c2 < 2; ++c2) {
            if (!(strat2_for(strat2, c2) & 2)) continue; // only lines that bet after check
            double call = pure_payoff(2, c2, 1 * 9 + 1 * 3 + 1, strat2); // check-call with K
            double fold = pure_payoff(2, c2, 2 * 9 + 2 * 3 + 2, strat2); // check-fold with K
            if (!(call > fold)) return false;
        }
    }
    return true;
}

} // namespace seedspan::kuhn_solver
