#include "g2theta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "g2theta/error.hpp"

namespace g2theta {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_positive_definite(const cplx& t1, const cplx& t2, const cplx& t12) {
    if (!finite(t1) || !finite(t2) || !finite(t12)) {
        throw Error(ErrorCode::NotConvergent, "period matrix entries must be finite");
    }
    const double y1 = t1.imag();
    const double y2 = t2.imag();
    const double y12 = t12.imag();
    if (!(y1 > 0.0) || !(y2 > 0.0) || !(y1 * y2 - y12 * y12 > 0.0)) {
        throw Error(ErrorCode::NotConvergent, "imaginary part of the period matrix is not positive definite");
    }
}

long floor_div2(long x) { return x >= 0 ? x / 2 : -((1 - x) / 2); }

double log_add(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log of the bound on sum_{k > R} 8k f(k - 1/2), f(r) = exp(-pi l r^2 + 2 pi s r).
// Only valid when R + 1/2 >= s / l, where f is decreasing.
double log_tail_bound(int radius, double lmin, double s) {
    const auto log_term = [&](long k) {
        const double r = static_cast<double>(k) - 0.5;
        return std::log(8.0 * static_cast<double>(k)) - kPi * lmin * r * r + 2.0 * kPi * s * r;
    };
    double acc = -std::numeric_limits<double>::infinity();
    for (long k = radius + 1;; ++k) {
        const double lt = log_term(k);
        acc = log_add(acc, lt);
        // Ratio of consecutive terms; it shrinks with k, so once it is below
        // 1/2 the remainder is bounded by a geometric series.
        const double log_ratio = log_term(k + 1) - lt;
        if (log_ratio < -std::log(2.0)) {
            const double ratio = std::exp(log_ratio);
            return log_add(acc, lt + std::log(ratio / (1.0 - ratio)));
        }
        if (k - radius > 4 * kMaxRadius) return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

PeriodMatrix make_period_matrix(cplx tau1, cplx tau2, cplx tau12) {
    check_positive_definite(tau1, tau2, tau12);
    if (!(tau12.imag() > 0.0)) {
        throw Error(ErrorCode::NegativeTau12Im, "Im(tau12) must be positive");
    }
    return PeriodMatrix(tau1, tau2, tau12);
}

PeriodMatrix make_period_matrix_any_sign(cplx tau1, cplx tau2, cplx tau12) {
    check_positive_definite(tau1, tau2, tau12);
    return PeriodMatrix(tau1, tau2, tau12);
}

double PeriodMatrix::min_eigenvalue() const noexcept {
    const double y1 = tau1_.imag();
    const double y2 = tau2_.imag();
    const double y12 = tau12_.imag();
    const double half_trace = 0.5 * (y1 + y2);
    const double det = y1 * y2 - y12 * y12;
    // lmin = det / lmax avoids cancellation when the eigenvalues differ a lot.
    const double lmax = half_trace + std::hypot(0.5 * (y1 - y2), y12);
    return det / lmax;
}

Characteristic Characteristic::from_digits(int a, int c, int b, int d) {
    for (int e : {a, c, b, d}) {
        if (e != 0 && e != 1) throw Error(ErrorCode::InvalidArgument, "characteristic digit out of range");
    }
    return {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(b),
            static_cast<std::uint8_t>(d)};
}

Characteristic Characteristic::parse(std::string_view text) {
    if (text.size() != 4) {
        throw Error(ErrorCode::ParseError, "characteristic must have exactly four digits, got '" + std::string(text) + "'");
    }
    int digits[4];
    for (std::size_t i = 0; i < 4; ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1') {
            throw Error(ErrorCode::ParseError, "characteristic digit out of range in '" + std::string(text) + "'");
        }
        digits[i] = ch - '0';
    }
    return from_digits(digits[0], digits[1], digits[2], digits[3]);
}

std::string Characteristic::to_string() const {
    return {static_cast<char>('0' + a), static_cast<char>('0' + c), static_cast<char>('0' + b),
            static_cast<char>('0' + d)};
}

Characteristic Characteristic::from_index(int index) {
    if (index < 0 || index > 15) throw Error(ErrorCode::InvalidArgument, "characteristic index out of range");
    return from_digits((index >> 3) & 1, (index >> 2) & 1, (index >> 1) & 1, index & 1);
}

Parity parity(const Characteristic& ch) noexcept {
    return ((ch.a * ch.b + ch.c * ch.d) % 2) == 1 ? Parity::odd : Parity::even;
}

ReducedCharacteristic reduce_characteristic(long a, long c, long b, long d) noexcept {
    const long a0 = a - 2 * floor_div2(a);
    const long c0 = c - 2 * floor_div2(c);
    const long b0 = b - 2 * floor_div2(b);
    const long d0 = d - 2 * floor_div2(d);
    // b = b0 + 2j contributes exp(2 pi i j (m + a0/2)) = (-1)^(j a0); same for d with c0.
    const long jb = floor_div2(b);
    const long jd = floor_div2(d);
    const long flips = jb * a0 + jd * c0;
    const double sign = (flips % 2 == 0) ? 1.0 : -1.0;
    return {Characteristic{static_cast<std::uint8_t>(a0), static_cast<std::uint8_t>(c0), static_cast<std::uint8_t>(b0),
                           static_cast<std::uint8_t>(d0)},
            cplx{sign, 0.0}};
}

int truncation_radius(const PeriodMatrix& omega, const ThetaArgs& args, const Characteristic&, double tol) {
    if (!(tol > 0.0) || !(tol < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "tail tolerance must lie in (0, 1)");
    }
    if (!finite(args.u) || !finite(args.v)) {
        throw Error(ErrorCode::InvalidArgument, "theta arguments must be finite");
    }
    const double lmin = omega.min_eigenvalue();
    const double s = std::hypot(args.u.imag(), args.v.imag());
    const double log_tol = std::log(tol);

    const double peak = s / lmin;
    if (peak > kMaxRadius) {
        throw Error(ErrorCode::TolTooSmall, "truncation radius would exceed the cap");
    }
    int lo = std::max(0, static_cast<int>(std::ceil(peak - 0.5)));
    if (log_tail_bound(lo, lmin, s) < log_tol) return lo;
    if (!(log_tail_bound(kMaxRadius, lmin, s) < log_tol)) {
        throw Error(ErrorCode::TolTooSmall, "truncation radius would exceed the cap");
    }
    // Invariant: tail(lo) >= tol > tail(hi).
    int hi = kMaxRadius;
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (log_tail_bound(mid, lmin, s) < log_tol) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

int truncation_radius(const PeriodMatrix& omega, const ThetaArgs& args, const Characteristic& ch,
                      const EvalOptions& opts) {
    if (opts.radius_override) {
        if (*opts.radius_override < 0) throw Error(ErrorCode::InvalidArgument, "radius override must be nonnegative");
        return *opts.radius_override;
    }
    return truncation_radius(omega, args, ch, opts.tail_tolerance);
}

ThetaSum theta_sum(const Characteristic& ch, const ThetaArgs& args, const PeriodMatrix& omega,
                   const EvalOptions& opts) {
    const int radius = truncation_radius(omega, args, ch, opts);

    const cplx t1 = omega.tau1();
    const cplx t2 = omega.tau2();
    const cplx t12 = omega.tau12();
    const cplx wu = args.u + 0.5 * ch.b;
    const cplx wv = args.v + 0.5 * ch.d;
    const double ha = 0.5 * ch.a;
    const double hc = 0.5 * ch.c;

    double magnitude = 0.0;
    const auto summand = [&](int m, int n) {
        const double x = m + ha;
        const double y = n + hc;
        const cplx e = kI * kPi * (t1 * (x * x) + t2 * (y * y) + 2.0 * t12 * (x * y)) +
                       2.0 * kPi * kI * (x * wu + y * wv);
        const cplx term = std::exp(e);
        magnitude += std::abs(term);
        return term;
    };

    cplx total = summand(0, 0);
    for (int k = 1; k <= radius; ++k) {
        cplx shell{0.0, 0.0};
        for (int m = -k; m <= k; ++m) {
            shell += summand(m, -k);
            shell += summand(m, k);
        }
        for (int n = -k + 1; n <= k - 1; ++n) {
            shell += summand(-k, n);
            shell += summand(k, n);
        }
        total += shell;
    }
    return {total, magnitude, radius};
}

cplx theta(const Characteristic& ch, const ThetaArgs& args, const PeriodMatrix& omega, const EvalOptions& opts) {
    return theta_sum(ch, args, omega, opts).value;
}

ThetaArgs HalfPeriod::offset(const PeriodMatrix& omega) const noexcept {
    const cplx du = 0.5 * p + 0.5 * q * omega.tau1() + 0.5 * s * omega.tau12();
    const cplx dv = 0.5 * r + 0.5 * s * omega.tau2() + 0.5 * q * omega.tau12();
    return {du, dv};
}

cplx half_period_shifted_theta(const Characteristic& ch, const HalfPeriod& shift, const ThetaArgs& args,
                               const PeriodMatrix& omega, const EvalOptions& opts) {
    // theta[e; d](z + Omega mu + nu) = exp(-pi i mu.Omega.mu - 2 pi i mu.(z + d + nu)) theta[e + mu; d + nu](z)
    // with mu = (q, s)/2, nu = (p, r)/2 and e, d the top and bottom rows over 2.
    const double mq = 0.5 * shift.q;
    const double ms = 0.5 * shift.s;
    const cplx quad = omega.tau1() * (mq * mq) + 2.0 * omega.tau12() * (mq * ms) + omega.tau2() * (ms * ms);
    const cplx lin = mq * (args.u + 0.5 * ch.b + 0.5 * shift.p) + ms * (args.v + 0.5 * ch.d + 0.5 * shift.r);
    const cplx prefactor = std::exp(-kI * kPi * quad - 2.0 * kPi * kI * lin);

    const auto reduced = reduce_characteristic(long{ch.a} + shift.q, long{ch.c} + shift.s, long{ch.b} + shift.p,
                                               long{ch.d} + shift.r);
    return prefactor * reduced.phase * theta(reduced.ch, args, omega, opts);
}

}  // namespace g2theta
