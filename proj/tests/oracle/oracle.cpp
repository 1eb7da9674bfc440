#include "oracle/oracle.hpp"

#include <cmath>

namespace oracle {

namespace {
const double pi = std::acos(-1.0);
const cplx I(0.0, 1.0);
}  // namespace

cplx brute_force_theta(int a, int c, int b, int d, cplx u, cplx v, const Moduli& om, int radius) {
    cplx total = 0.0;
    for (int m = -radius; m <= radius; ++m) {
        for (int n = -radius; n <= radius; ++n) {
            const double p = m + a / 2.0;
            const double q = n + c / 2.0;
            const cplx quadratic = om.t1 * p * p + om.t2 * q * q + 2.0 * om.t12 * p * q;
            const cplx linear = p * (u + b / 2.0) + q * (v + d / 2.0);
            total += std::exp(pi * I * quadratic + 2.0 * pi * I * linear);
        }
    }
    return total;
}

cplx genus1_theta(int a, int b, cplx u, cplx tau, int radius) {
    cplx total = 0.0;
    for (int m = -radius; m <= radius; ++m) {
        const double p = m + a / 2.0;
        total += std::exp(pi * I * tau * p * p + 2.0 * pi * I * p * (u + b / 2.0));
    }
    return total;
}

}  // namespace oracle
