#pragma once

#include <cmath>
#include <random>

#include "potential.hpp"

namespace testutil {

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1.0);
}

inline double rel_diff(double x, double y)
{
    double scale = std::max(std::abs(x), std::abs(y));
    return scale > 0.0 ? std::abs(x - y) / scale : 0.0;
}

// the worked example used throughout: a deep thick-surface well in D = 10
inline wsbound::PotentialSpec demo_spec()
{
    return wsbound::PotentialSpec{100.0, 1.0, 0.5, 1.0, 10};
}

// high-l channel in D = 3 with five well-bound levels; its two deepest
// levels satisfy the half-line boundary condition to better than 1e-2
inline wsbound::PotentialSpec high_l_spec()
{
    return wsbound::PotentialSpec{32.0, 4.0, 1.0, 1.0, 3};
}

// Independent evaluation of P_n^{(a,b)}(1-2z) through n-fold symbolic
// differentiation of the generating product z^{n+a} (1-z)^{n+b} (general
// Leibniz rule), divided by the weight. Shares nothing with the
// three-term recurrence it checks.
inline double jacobi_rodrigues(int n, double a, double b, double z)
{
    auto falling = [](double top, int count) {
        double prod = 1.0;
        for (int i = 0; i < count; i++) {
            prod *= top - i;
        }
        return prod;
    };
    double binom = 1.0; // C(n, k), updated incrementally
    double factorial = 1.0;
    for (int i = 2; i <= n; i++) {
        factorial *= i;
    }
    double sum = 0.0;
    for (int k = 0; k <= n; k++) {
        if (k > 0) {
            binom = binom * (n - k + 1) / k;
        }
        double sign = (n - k) % 2 == 0 ? 1.0 : -1.0;
        sum += binom * falling(n + a, k) * falling(n + b, n - k) * sign *
               std::pow(z, n - k) * std::pow(1.0 - z, k);
    }
    return sum / factorial;
}

// deterministic spec generator for property sweeps; depths are drawn
// mostly inside the channel's binding band so valid levels are plentiful
struct SpecSweep {
    std::mt19937 rng;
    explicit SpecSweep(unsigned seed) : rng(seed) {}

    struct Draw {
        wsbound::PotentialSpec spec;
        int l;
    };

    Draw next()
    {
        std::uniform_real_distribution<double> alpha_d(1.5, 8.0);
        std::uniform_real_distribution<double> r0_d(1.0, 6.0);
        std::uniform_real_distribution<double> k_d(0.25, 4.0);
        std::uniform_int_distribution<int> dim_d(2, 12);
        std::uniform_int_distribution<int> l_d(0, 5);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        double alpha = alpha_d(rng);
        double r0 = r0_d(rng);
        double a = r0 / alpha;
        double k = k_d(rng);
        int dim = dim_d(rng);
        int l = l_d(rng);

        double lt = wsbound::effective_l(l, dim);
        double cl = lt * (lt + 1.0);
        double v0;
        if (cl > 0.0) {
            double threshold = 8.0 * k * cl * a / (r0 * r0 * r0);
            double gamma_sq = 48.0 * cl * std::pow(a / r0, 4);
            double lambda = 0.5 * (std::sqrt(1.0 + 4.0 * gamma_sq) - 1.0);
            double band = k * lambda * lambda / (a * a);
            if (unit(rng) < 0.7) {
                v0 = threshold + (0.02 + 0.96 * unit(rng)) * band; // inside the window
            } else {
                v0 = std::max(1e-3, threshold * (0.5 + 2.5 * unit(rng)));
            }
        } else {
            v0 = 1.0 + 99.0 * unit(rng);
        }
        return Draw{wsbound::PotentialSpec{v0, r0, a, k, dim}, l};
    }
};

} // namespace testutil
