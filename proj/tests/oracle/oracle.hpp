#pragma once

#include <complex>

// Reference sums for tests. Deliberately naive: a fixed square window summed
// row by row, no tail bound, nothing shared with the library evaluator.

namespace oracle {

using cplx = std::complex<double>;

struct Moduli {
    cplx t1, t2, t12;
};

// theta[a c; b d](u, v) over |m| <= radius, |n| <= radius.
cplx brute_force_theta(int a, int c, int b, int d, cplx u, cplx v, const Moduli& om, int radius);

// sum over |m| <= radius of exp(pi i tau (m + a/2)^2 + 2 pi i (m + a/2)(u + b/2)).
cplx genus1_theta(int a, int b, cplx u, cplx tau, int radius);

}  // namespace oracle
