#pragma once

// Genus-2 theta functions with half-integer characteristics.
//
//   theta[a c; b d](u, v; t1, t2, t12)
//     = sum_{m,n} exp{ pi i (t1 x^2 + t2 y^2 + 2 t12 x y) + 2 pi i (x (u + b/2) + y (v + d/2)) },
//   x = m + a/2, y = n + c/2.
//
// The series is truncated to the square window max(|m|,|n|) <= R, where R is
// the smallest radius whose Gaussian tail bound falls under the requested
// tolerance.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace g2theta {

using cplx = std::complex<double>;

/// Symmetric period matrix ((t1, t12), (t12, t2)) with positive-definite
/// imaginary part. Only obtainable through make_period_matrix.
class PeriodMatrix {
public:
    const cplx& tau1() const noexcept { return tau1_; }
    const cplx& tau2() const noexcept { return tau2_; }
    const cplx& tau12() const noexcept { return tau12_; }

    /// Smallest eigenvalue of the imaginary part.
    double min_eigenvalue() const noexcept;

    /// Same matrix with t1 and t2 exchanged (still valid).
    PeriodMatrix swapped() const noexcept { return PeriodMatrix(tau2_, tau1_, tau12_); }

    friend bool operator==(const PeriodMatrix&, const PeriodMatrix&) = default;

private:
    PeriodMatrix(cplx t1, cplx t2, cplx t12) : tau1_(t1), tau2_(t2), tau12_(t12) {}

    friend PeriodMatrix make_period_matrix(cplx, cplx, cplx);
    friend PeriodMatrix make_period_matrix_any_sign(cplx, cplx, cplx);

    cplx tau1_;
    cplx tau2_;
    cplx tau12_;
};

/// Validates the moduli. Throws NotConvergent when the imaginary part is not
/// positive definite and NegativeTau12Im when Im(t12) <= 0.
PeriodMatrix make_period_matrix(cplx tau1, cplx tau2, cplx tau12);

/// Only checks positive definiteness. Needed for the decoupled case t12 = 0
/// and for callers that handle the sign convention themselves.
PeriodMatrix make_period_matrix_any_sign(cplx tau1, cplx tau2, cplx tau12);

enum class Parity { even, odd };

/// Characteristic [a c; b d] with every entry in {0, 1}. Stored in the order
/// (a, c, b, d), which is also the order of the four-digit text form "acbd".
struct Characteristic {
    std::uint8_t a = 0;
    std::uint8_t c = 0;
    std::uint8_t b = 0;
    std::uint8_t d = 0;

    /// Throws InvalidArgument if any entry is outside {0, 1}.
    static Characteristic from_digits(int a, int c, int b, int d);

    /// Parses "acbd". Throws ParseError on anything else.
    static Characteristic parse(std::string_view text);

    std::string to_string() const;

    /// Column swap [a c; b d] -> [c a; d b].
    Characteristic swapped() const noexcept { return {c, a, d, b}; }

    /// Index in 0..15 with bits a c b d (a most significant).
    int index() const noexcept { return (a << 3) | (c << 2) | (b << 1) | d; }
    static Characteristic from_index(int index);

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
    friend auto operator<=>(const Characteristic&, const Characteristic&) = default;
};

/// Odd iff (a b + c d) is odd. Odd thetas vanish at the origin.
Parity parity(const Characteristic& ch) noexcept;

struct ReducedCharacteristic {
    Characteristic ch;
    cplx phase;  // theta[raw] = phase * theta[ch], always +1 or -1
};

/// Brings arbitrary integer entries to {0, 1}. Shifting a or c by 2 only
/// re-indexes the sum; shifting b (resp. d) by 2 multiplies by exp(pi i a)
/// (resp. exp(pi i c)).
ReducedCharacteristic reduce_characteristic(long a, long c, long b, long d) noexcept;

struct ThetaArgs {
    cplx u;
    cplx v;
};

struct EvalOptions {
    double tail_tolerance = 1e-12;
    std::optional<int> radius_override;
};

/// Hard cap on the truncation radius. Requests that would need more raise
/// TolTooSmall.
inline constexpr int kMaxRadius = 10000;

/// Smallest R such that sum over max(|m|,|n|) > R of |summand| is provably
/// below tol, using |summand| <= exp(-pi lmin |x|^2 + 2 pi |Im w| |x|).
int truncation_radius(const PeriodMatrix& omega, const ThetaArgs& args, const Characteristic& ch, double tol);

/// Radius honouring EvalOptions::radius_override.
int truncation_radius(const PeriodMatrix& omega, const ThetaArgs& args, const Characteristic& ch,
                      const EvalOptions& opts);

struct ThetaSum {
    cplx value;
    double magnitude;  // sum of |summand| over the window, a cancellation scale
    int radius;
};

/// Truncated series, accumulated shell by shell in increasing max(|m|,|n|).
ThetaSum theta_sum(const Characteristic& ch, const ThetaArgs& args, const PeriodMatrix& omega,
                   const EvalOptions& opts = {});

cplx theta(const Characteristic& ch, const ThetaArgs& args, const PeriodMatrix& omega, const EvalOptions& opts = {});

/// Half-period shift (p, q, r, s): du = p/2 + q t1/2 + s t12/2, dv = r/2 + s t2/2 + q t12/2.
struct HalfPeriod {
    int p = 0;
    int q = 0;
    int r = 0;
    int s = 0;

    ThetaArgs offset(const PeriodMatrix& omega) const noexcept;
};

/// theta[ch](u + du, v + dv) computed as an exponential prefactor times
/// theta at the shifted characteristic [a+q, c+s; b+p, d+r], evaluated at the
/// unshifted argument.
cplx half_period_shifted_theta(const Characteristic& ch, const HalfPeriod& shift, const ThetaArgs& args,
                               const PeriodMatrix& omega, const EvalOptions& opts = {});

}  // namespace g2theta
