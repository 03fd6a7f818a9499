#include "seedspan/stats/mixtures.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace seedspan {

namespace {

void require_prob(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(who) + ": probability must lie in [0, 1]");
}

double gauss(Rng& rng) {
    // Box-Muller; u1 kept away from 0 so the log is finite.
    double u1 = (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Marsaglia-Tsang squeeze for shape >= 1; shape < 1 boosted via G(a+1) U^(1/a).
double gamma_draw(double shape, Rng& rng) {
    if (shape < 1.0) {
        double u = (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
        return gamma_draw(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x = gauss(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

// mean and 3 standard errors of the mean for a sample
void mean_and_tol(const std::vector<double>& t, double& mean, double& tol) {
    const double n = static_cast<double>(t.size());
    mean = 0.0;
    for (double x : t) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : t) var += (x - mean) * (x - mean);
    var /= n;
    tol = 3.0 * std::sqrt(var / n);
}

} // namespace

Mixture Mixture::point(double p) {
    require_prob(p, "Mixture::point");
    Mixture m;
    m.kind = Kind::point;
    m.a = p;
    return m;
}

Mixture Mixture::two_point(double pa, double pb, double weight_a) {
    require_prob(pa, "Mixture::two_point");
    require_prob(pb, "Mixture::two_point");
    require_prob(weight_a, "Mixture::two_point weight");
    Mixture m;
    m.kind = Kind::two_point;
    m.a = pa;
    m.b = pb;
    m.w = weight_a;
    return m;
}

Mixture Mixture::beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("Mixture::beta: shape parameters must be positive");
    Mixture m;
    m.kind = Kind::beta;
    m.a = alpha;
    m.b = beta;
    return m;
}

double Mixture::mean() const {
    switch (kind) {
        case Kind::point: return a;
        case Kind::two_point: return w * a + (1.0 - w) * b;
        case Kind::beta: return a / (a + b);
    }
    return 0.0;
}

double Mixture::mean_pq() const {
    switch (kind) {
        case Kind::point: return a * (1.0 - a);
        case Kind::two_point: return w * a * (1.0 - a) + (1.0 - w) * b * (1.0 - b);
        case Kind::beta: {
            // E[p^2] = a(a+1) / ((a+b)(a+b+1))
            double second = a * (a + 1.0) / ((a + b) * (a + b + 1.0));
            return mean() - second;
        }
    }
    return 0.0;
}

double Mixture::sample(Rng& rng) const {
    switch (kind) {
        case Kind::point: return a;
        case Kind::two_point: return rng.next_double() < w ? a : b;
        case Kind::beta: {
            double x = gamma_draw(a, rng);
            double y = gamma_draw(b, rng);
            return x / (x + y);
        }
    }
    return 0.0;
}

std::string Mixture::describe() const {
    switch (kind) {
        case Kind::point: return "point(" + std::to_string(a) + ")";
        case Kind::two_point:
            return "twopoint(" + std::to_string(a) + ", " + std::to_string(b) + ", w=" +
                   std::to_string(w) + ")";
        case Kind::beta: return "beta(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    }
    return "?";
}

VarianceCheck verify_variance(const Mixture& mixture, int n_draws, std::uint64_t seed) {
    if (n_draws < 100) throw std::invalid_argument("verify_variance: need at least 100 draws");

    Rng rng(seed);
    const double m = mixture.mean();

    // Single games: p varies per draw, yet the score variance must match a
    // plain coin with the mixture mean.
    std::vector<double> sq(static_cast<std::size_t>(n_draws));
    for (int i = 0; i < n_draws; ++i) {
        double p = mixture.sample(rng);
        double x = rng.next_double() < p ? 1.0 : 0.0;
        sq[static_cast<std::size_t>(i)] = (x - m) * (x - m);
    }

    // Mirrored pairs: two games share p; the deviation of the pair total from
    // its seed-conditional mean isolates the within-seed noise.
    std::vector<double> pair_sq(static_cast<std::size_t>(n_draws));
    for (int i = 0; i < n_draws; ++i) {
        double p = mixture.sample(rng);
        double x2 = (rng.next_double() < p ? 1.0 : 0.0) + (rng.next_double() < p ? 1.0 : 0.0);
        double dev = x2 - 2.0 * p;
        pair_sq[static_cast<std::size_t>(i)] = dev * dev;
    }

    VarianceCheck check;
    check.n_draws = n_draws;
    check.single_theory = m * (1.0 - m);
    check.paired_theory = 2.0 * mixture.mean_pq();
    mean_and_tol(sq, check.single_empirical, check.single_tolerance);
    mean_and_tol(pair_sq, check.paired_empirical, check.paired_tolerance);
    check.single_ok = std::abs(check.single_empirical - check.single_theory) <=
                      std::max(check.single_tolerance, 1e-12);
    check.paired_ok = std::abs(check.paired_empirical - check.paired_theory) <=
                      std::max(check.paired_tolerance, 1e-12);
    check.ok = check.single_ok && check.paired_ok;
    return check;
}

} // namespace seedspan
