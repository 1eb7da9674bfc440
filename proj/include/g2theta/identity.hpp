#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2theta/theta.hpp"

namespace g2theta {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long num, long den = 1);

    long num() const noexcept { return num_; }
    long den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "3", "-1/2", ...
    std::string to_string() const;
    static Rational parse(std::string_view text);

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend Rational operator-(Rational a) { return {-a.num_, a.den_}; }
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    long num_ = 0;
    long den_ = 1;
};

enum class Symbol : std::uint8_t { y, z, yp, zp, alpha, beta, alphap, betap };
inline constexpr int kSymbolCount = 8;
inline constexpr std::array<Symbol, kSymbolCount> kAllSymbols = {
    Symbol::y, Symbol::z, Symbol::yp, Symbol::zp, Symbol::alpha, Symbol::beta, Symbol::alphap, Symbol::betap};

/// Text name as used in the catalog: y, z, y', z', alpha, beta, alpha', beta'.
std::string_view symbol_name(Symbol s) noexcept;
std::optional<Symbol> symbol_from_name(std::string_view name) noexcept;

/// Column-swap partner: y<->z, y'<->z', alpha<->beta, alpha'<->beta'.
Symbol swap_symbol(Symbol s) noexcept;

/// Bit set over Symbol.
class SymbolSet {
public:
    void insert(Symbol s) noexcept { bits_ |= bit(s); }
    bool contains(Symbol s) const noexcept { return (bits_ & bit(s)) != 0; }
    bool empty() const noexcept { return bits_ == 0; }
    std::vector<Symbol> to_vector() const;
    friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

private:
    static std::uint8_t bit(Symbol s) noexcept { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s)); }
    std::uint8_t bits_ = 0;
};

/// Values for the free symbols of an identity.
class Binding {
public:
    void set(Symbol s, cplx value) noexcept;
    bool has(Symbol s) const noexcept { return present_.contains(s); }
    /// Throws InvalidArgument if s is unbound.
    cplx get(Symbol s) const;
    SymbolSet bound() const noexcept { return present_; }

private:
    std::array<cplx, kSymbolCount> values_{};
    SymbolSet present_;
};

/// Affine expression sum_s k_s * s + c0 + c1 t1 + c2 t2 + c3 t12 with exact
/// rational coefficients.
struct ArgExpr {
    std::array<Rational, kSymbolCount> coeff{};
    Rational c0, c1, c2, c3;

    static ArgExpr symbol(Symbol s);
    static ArgExpr constant(Rational r);
    static ArgExpr period(Rational k1, Rational k2, Rational k12);

    Rational& operator[](Symbol s) { return coeff[static_cast<std::size_t>(s)]; }
    const Rational& operator[](Symbol s) const { return coeff[static_cast<std::size_t>(s)]; }

    bool is_zero() const noexcept;
    SymbolSet symbols() const;
    cplx evaluate(const Binding& binding, const PeriodMatrix& omega) const;

    /// Replaces each symbol by an expression. Unlisted symbols stay.
    ArgExpr substitute(Symbol s, const ArgExpr& value) const;

    /// y<->z etc. and t1<->t2.
    ArgExpr column_swapped() const;

    /// Canonical form, e.g. "y+y'+alpha+t1/2+1/2"; zero is "0".
    std::string to_string() const;
    static ArgExpr parse(std::string_view text);

    friend ArgExpr operator+(const ArgExpr& a, const ArgExpr& b);
    friend ArgExpr operator-(const ArgExpr& a, const ArgExpr& b);
    friend ArgExpr operator*(Rational k, const ArgExpr& a);
    friend bool operator==(const ArgExpr&, const ArgExpr&) = default;
};

/// (u1..u4, v1..v4) -> half-Hadamard images. Involutive.
template <class T>
std::array<T, 4> tilde_transform(const std::array<T, 4>& u) {
    const auto half = [](const T& x) { return x * 0.5; };
    return {half(u[0] + u[1] + u[2] + u[3]), half(u[0] + u[1] - u[2] - u[3]), half(u[0] - u[1] + u[2] - u[3]),
            half(u[0] - u[1] - u[2] + u[3])};
}

template <>
std::array<ArgExpr, 4> tilde_transform(const std::array<ArgExpr, 4>& u);

struct TildePair {
    std::array<cplx, 4> u;
    std::array<cplx, 4> v;
};
TildePair tilde_transform(const std::array<cplx, 4>& u, const std::array<cplx, 4>& v);

struct Factor {
    Characteristic ch;
    ArgExpr u;
    ArgExpr v;
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
    int coefficient = 1;
    std::vector<Factor> factors;
    friend bool operator==(const Term&, const Term&) = default;
};

using Side = std::vector<Term>;

/// theta[ch](u, v) that has to vanish for the identity to apply.
using Precondition = Factor;

/// Records that an identity is its parent with alpha, beta (and alpha',
/// beta') fixed to the given values.
struct Specialization {
    std::string parent;
    ArgExpr alpha;
    ArgExpr beta;
    friend bool operator==(const Specialization&, const Specialization&) = default;
};

/// An equality chain S_0 = S_1 (= S_2 ...) between signed sums of theta
/// products. An empty side stands for 0.
struct IdentitySpec {
    std::string id;
    std::string equation;
    std::vector<Side> sides;
    std::vector<Precondition> preconditions;
    std::optional<Specialization> from;
    SymbolSet free_symbols;

    const Side& lhs() const { return sides.front(); }
    const Side& rhs() const { return sides.back(); }

    friend bool operator==(const IdentitySpec&, const IdentitySpec&) = default;
};

/// Recomputes spec.free_symbols from the arguments.
void refresh_free_symbols(IdentitySpec& spec);

struct Residual {
    double absolute = 0.0;
    double scale = 0.0;
    double relative = 0.0;
};

/// Builds the residual from per-side term values: absolute is the largest gap
/// between neighbouring side sums, scale the largest single term.
Residual residual_from_terms(std::span<const std::vector<cplx>> side_terms);

inline constexpr double kPreconditionTolerance = 1e-8;

/// Checks preconditions, then evaluates every side. Identical factors are
/// evaluated once. Throws PreconditionViolated or evaluation errors.
Residual evaluate_identity(const IdentitySpec& spec, const Binding& binding, const PeriodMatrix& omega,
                           const EvalOptions& opts = {}, double precondition_tolerance = kPreconditionTolerance);

/// Column-swap rename of the whole spec.
IdentitySpec column_swapped(const IdentitySpec& spec);

/// Plugs the specialization values into alpha, beta, alpha', beta'.
IdentitySpec specialize(const IdentitySpec& spec, const ArgExpr& alpha, const ArgExpr& beta);

/// One catalog term, e.g. "- 2 [0011]^2(y,z) [1011](y',z')". Powers expand
/// into repeated factors and collapse back on output.
std::string format_term(const Term& t);
Term parse_term(std::string_view text);

/// Catalog text for one identity and its inverse.
std::string format_identity(const IdentitySpec& spec);
IdentitySpec parse_identity(std::string_view text);
/// Blocks separated by blank lines.
std::vector<IdentitySpec> parse_catalog(std::string_view text);

/// riemann, master, kossak-1..3, theta-add-1..16, appendix-A1..A15.
const std::vector<std::string>& builtin_ids();
/// Throws UnknownIdentity.
const IdentitySpec& builtin_identity(std::string_view id);
/// Literal print of an identity whose catalog entry was corrected, if any.
std::optional<IdentitySpec> printed_variant(std::string_view id);
/// Every builtin spec, formatted and joined by blank lines.
std::string catalog_text();

/// Whether sampling must put (alpha, beta) on the zero locus of theta[0000].
bool needs_zero_locus(const IdentitySpec& spec);

struct HalfPeriodPair {
    HalfPeriod shift;  // q, s top row and p, r bottom row of an odd characteristic
    cplx alpha;
    cplx beta;
};

/// The six (alpha, beta) = (q t1/2 + s t12/2 + p/2, s t2/2 + q t12/2 + r/2)
/// with [q s; p r] odd. The order follows theta-add-11..16.
std::array<HalfPeriodPair, 6> odd_half_periods(const PeriodMatrix& omega);

}  // namespace g2theta
