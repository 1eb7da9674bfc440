#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "g2theta/theta.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

using g2theta::cplx;

class Sampler {
public:
    explicit Sampler(unsigned long long seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // Same box as the harness defaults.
    g2theta::PeriodMatrix omega() {
        const double y1 = uniform(0.8, 2.0);
        const double y2 = uniform(0.8, 2.0);
        const double y12 = uniform(0.05, 0.5) * std::sqrt(y1 * y2);
        return g2theta::make_period_matrix({uniform(-0.5, 0.5), y1}, {uniform(-0.5, 0.5), y2},
                                           {uniform(-0.5, 0.5), y12});
    }

    cplx point(const g2theta::PeriodMatrix& om) {
        const double b = std::min(om.tau1().imag(), om.tau2().imag()) / 4.0;
        return {uniform(-1.0, 1.0), uniform(-b, b)};
    }

    g2theta::Characteristic characteristic() { return g2theta::Characteristic::from_index(integer(0, 15)); }

private:
    std::mt19937_64 rng_;
};

inline oracle::Moduli moduli(const g2theta::PeriodMatrix& om) { return {om.tau1(), om.tau2(), om.tau12()}; }

inline cplx brute(const g2theta::Characteristic& ch, cplx u, cplx v, const g2theta::PeriodMatrix& om, int radius) {
    return oracle::brute_force_theta(ch.a, ch.c, ch.b, ch.d, u, v, moduli(om), radius);
}

inline const g2theta::Characteristic kOdd[6] = {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0},
                                                 {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}};

}  // namespace testing_support
