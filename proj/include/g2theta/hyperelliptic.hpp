#pragma once

#include <string>
#include <vector>

#include "g2theta/identity.hpp"

namespace g2theta {

inline constexpr double kPoleGuard = 1e-10;

/// theta[ch](y, z) / theta[0011](y, z). Throws DenominatorNearZero when the
/// denominator is below pole_guard times the absolute series size of the
/// numerator.
cplx F(const Characteristic& ch, cplx y, cplx z, const PeriodMatrix& omega, const EvalOptions& opts = {},
       double pole_guard = kPoleGuard);

/// 1 - F^2[1011] F^2[1011]' - F^2[0101] F^2[0101]' + F^2[1101] F^2[1101]',
/// unprimed factors at (y, z), primed ones at (y', z').
cplx B0(cplx y, cplx z, cplx yp, cplx zp, const PeriodMatrix& omega, const EvalOptions& opts = {},
        double pole_guard = kPoleGuard);

/// F[target](y+y', z+z') = A / (B0 B), with A a signed sum of F products at
/// (y, z) and (y', z') and B a product of F values at the origin.
struct FAdditionSpec {
    int index = 0;
    std::string equation;
    Characteristic target;
    std::vector<Term> numerator;
    std::vector<Characteristic> denominator;
};

/// Formulas 1..15. Throws UnknownIdentity outside that range.
const FAdditionSpec& f_addition_spec(int index);
inline constexpr int kFAdditionCount = 15;

/// "f-add-<i>"
std::string f_addition_id(int index);

struct FPoint {
    cplx y;
    cplx z;
    cplx yp;
    cplx zp;
};

/// A / (B0 B). Throws PoleEncountered if B0 or B falls under the guard.
cplx f_addition_rhs(int index, const FPoint& p, const PeriodMatrix& omega, const EvalOptions& opts = {},
                    double pole_guard = kPoleGuard);

/// Compares f_addition_rhs with F[target](y+y', z+z'). The scale is the
/// larger of |F| and the largest numerator term over |B0 B|.
Residual f_addition_residual(int index, const FPoint& p, const PeriodMatrix& omega, const EvalOptions& opts = {},
                             double pole_guard = kPoleGuard);

}  // namespace g2theta
