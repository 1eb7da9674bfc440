#include <doctest.h>

#include <cmath>
#include <numbers>

#include "g2theta/error.hpp"
#include "g2theta/theta.hpp"
#include "support.hpp"

using namespace g2theta;
using testing_support::brute;
using testing_support::kOdd;
using testing_support::Sampler;

namespace {

const cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("period matrix validation") {
    const PeriodMatrix om = make_period_matrix(I, 2.0 * I, 0.5 * I);
    CHECK(om.tau2() == 2.0 * I);
    CHECK(om.min_eigenvalue() > 0.0);

    CHECK(code_of([] { make_period_matrix(I, I, 1.2 * I); }) == ErrorCode::NotConvergent);
    CHECK(code_of([] { make_period_matrix(I, 2.0 * I, -0.1 * I); }) == ErrorCode::NegativeTau12Im);
    CHECK(code_of([] { make_period_matrix(-I, 2.0 * I, 0.1 * I); }) == ErrorCode::NotConvergent);
    CHECK(code_of([] { make_period_matrix({NAN, 1.0}, 2.0 * I, 0.1 * I); }) == ErrorCode::NotConvergent);
    CHECK(code_of([] { make_period_matrix(I, 2.0 * I, 0.0 * I); }) == ErrorCode::NegativeTau12Im);
    // Both positivity and the sign fail: positivity wins.
    CHECK(code_of([] { make_period_matrix(I, I, -1.2 * I); }) == ErrorCode::NotConvergent);

    const PeriodMatrix decoupled = make_period_matrix_any_sign(I, 2.0 * I, 0.0);
    CHECK(decoupled.tau12() == cplx{});
    CHECK(code_of([] { make_period_matrix_any_sign(I, I, 1.2 * I); }) == ErrorCode::NotConvergent);
}

TEST_CASE("minimum eigenvalue") {
    const PeriodMatrix om = make_period_matrix(2.0 * I, 2.0 * I, 1.0 * I);
    CHECK(om.min_eigenvalue() == doctest::Approx(1.0));
    const PeriodMatrix thin = make_period_matrix(1e6 * I, 1.0 * I, 1e-3 * I);
    CHECK(thin.min_eigenvalue() == doctest::Approx(1.0 - 1e-12).epsilon(1e-12));
}

TEST_CASE("characteristic text and indexing") {
    const Characteristic ch = Characteristic::parse("1011");
    CHECK(ch.a == 1);
    CHECK(ch.c == 0);
    CHECK(ch.b == 1);
    CHECK(ch.d == 1);
    CHECK(ch.to_string() == "1011");
    CHECK(ch.swapped().to_string() == "0111");
    for (int i = 0; i < 16; ++i) CHECK(Characteristic::from_index(i).index() == i);
    CHECK(code_of([] { Characteristic::parse("2011"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Characteristic::parse("101"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { Characteristic::from_digits(0, 0, 0, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("parity") {
    CHECK(parity(Characteristic::parse("0011")) == Parity::even);
    CHECK(parity(Characteristic::parse("1010")) == Parity::odd);
    CHECK(parity(Characteristic::parse("1111")) == Parity::even);
    int odd = 0;
    for (int i = 0; i < 16; ++i) odd += parity(Characteristic::from_index(i)) == Parity::odd;
    CHECK(odd == 6);
    for (const Characteristic& ch : kOdd) CHECK(parity(ch) == Parity::odd);
}

TEST_CASE("characteristic reduction examples") {
    auto r = reduce_characteristic(2, 0, 0, 0);
    CHECK(r.ch.to_string() == "0000");
    CHECK(r.phase == cplx{1.0, 0.0});
    r = reduce_characteristic(0, 0, 0, 0);
    CHECK(r.ch.to_string() == "0000");
    CHECK(r.phase == cplx{1.0, 0.0});
    r = reduce_characteristic(1, 0, 2, 0);
    CHECK(r.ch.to_string() == "1000");
    CHECK(r.phase == cplx{-1.0, 0.0});
    r = reduce_characteristic(-1, 3, -3, 1);
    CHECK(r.ch.to_string() == "1111");

    Sampler s(11);
    for (int k = 0; k < 3; ++k) {
        const PeriodMatrix om = s.omega();
        const cplx u = s.point(om);
        const cplx v = s.point(om);
        const cplx raw = oracle::brute_force_theta(1, 0, 2, 0, u, v, testing_support::moduli(om), 30);
        const cplx reduced = brute(Characteristic::parse("1000"), u, v, om, 30);
        CHECK(std::abs(raw - cplx{-1.0, 0.0} * reduced) < 1e-12);
    }
}

TEST_CASE("reduction phase matches brute-force ratio over raw entries in -2..3") {
    Sampler s(12);
    for (int k = 0; k < 60; ++k) {
        const int a = s.integer(-2, 3), c = s.integer(-2, 3), b = s.integer(-2, 3), d = s.integer(-2, 3);
        const PeriodMatrix om = s.omega();
        const cplx u = s.point(om);
        const cplx v = s.point(om);
        const auto r = reduce_characteristic(a, c, b, d);
        CHECK(std::abs(std::abs(r.phase) - 1.0) == 0.0);
        const cplx raw = oracle::brute_force_theta(a, c, b, d, u, v, testing_support::moduli(om), 30);
        const cplx red = brute(r.ch, u, v, om, 30);
        CHECK(std::abs(raw - r.phase * red) < 1e-12 * std::max(1.0, std::abs(raw)));
    }
}

TEST_CASE("truncation radius") {
    const PeriodMatrix om = make_period_matrix(10.0 * I, 10.0 * I, I);
    const Characteristic zero{};
    const int r = truncation_radius(om, {0.0, 0.0}, zero, 1e-12);
    CHECK(r <= 3);
    const cplx fast = theta(zero, {0.0, 0.0}, om);
    CHECK(std::abs(fast - brute(zero, 0.0, 0.0, om, r + 8)) < 1e-12);

    const PeriodMatrix flat = make_period_matrix(1e-8 * I, 1.0 * I, 1e-9 * I);
    CHECK(code_of([&] { truncation_radius(flat, {0.0, 0.0}, zero, 1e-300); }) == ErrorCode::TolTooSmall);

    EvalOptions opts;
    opts.radius_override = 7;
    CHECK(truncation_radius(flat, {0.0, 0.0}, zero, opts) == 7);
    CHECK(theta_sum(zero, {0.0, 0.0}, om, opts).radius == 7);

    CHECK(code_of([&] { truncation_radius(om, {0.0, 0.0}, zero, 0.0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { truncation_radius(om, {0.0, 0.0}, zero, 1.5); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { truncation_radius(om, {cplx{INFINITY, 0.0}, 0.0}, zero, 1e-12); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("truncation radius is monotone") {
    const Characteristic zero{};
    int previous = 0;
    for (double y : {4.0, 2.0, 1.0, 0.5, 0.25, 0.1}) {
        const PeriodMatrix om = make_period_matrix(y * I, y * I, 0.1 * y * I);
        const int r = truncation_radius(om, {0.0, 0.0}, zero, 1e-12);
        CHECK(r >= previous);
        previous = r;
    }
    const PeriodMatrix om = make_period_matrix(I, 1.5 * I, 0.3 * I);
    previous = 0;
    for (double im : {0.0, 0.2, 0.5, 1.0, 2.0, 4.0}) {
        const int r = truncation_radius(om, {cplx{0.3, im}, cplx{0.0, -im / 2}}, zero, 1e-12);
        CHECK(r >= previous);
        previous = r;
    }
}

TEST_CASE("truncated tail really is below the tolerance") {
    Sampler s(13);
    for (int k = 0; k < 20; ++k) {
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const cplx u = s.point(om) + cplx{0.0, s.uniform(-1.0, 1.0)};
        const cplx v = s.point(om);
        const ThetaSum t = theta_sum(ch, {u, v}, om);
        CHECK(std::abs(t.value - brute(ch, u, v, om, t.radius + 8)) < 1e-12 * std::max(1.0, t.magnitude));
    }
}

TEST_CASE("theta examples") {
    Sampler s(14);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(theta(Characteristic::parse("1010"), {0.0, 0.0}, s.omega())) < 1e-12);

    const PeriodMatrix om = make_period_matrix(10.0 * I, 10.0 * I, I);
    CHECK(std::abs(theta(Characteristic{}, {0.0, 0.0}, om) - 1.0) < 1e-12);
    // 40-digit reference sum.
    CHECK(std::abs(theta(Characteristic{}, {0.0, 0.0}, om) - 1.000000000000090844) < 1e-15);
}

TEST_CASE("theta agrees with frozen high-precision values") {
    const PeriodMatrix om = make_period_matrix({0.1, 1.0}, {-0.2, 2.0}, {0.3, 0.5});
    const ThetaArgs args{{0.3, 0.1}, {-0.2, 0.05}};
    const struct {
        const char* ch;
        cplx value;
    } frozen[] = {
        {"0000", {0.99039228595017448, -0.058980943430229303}},
        {"0011", {1.0142065025805625, 0.0653251818663822}},
        {"1010", {-0.75692260024841048, -0.22552794367837178}},
        {"1111", {-0.12145743417886515, -0.083110980707910614}},
        {"0110", {0.41151884897253194, -0.052584715501772313}},
        {"1101", {0.34344348173005077, -0.26931101122056392}},
    };
    for (const auto& f : frozen) {
        CAPTURE(f.ch);
        CHECK(std::abs(theta(Characteristic::parse(f.ch), args, om) - f.value) < 1e-13);
    }
}

TEST_CASE("decoupled moduli factor into genus-1 thetas") {
    Sampler s(15);
    for (int k = 0; k < 5; ++k) {
        const cplx t1{s.uniform(-0.5, 0.5), s.uniform(0.8, 2.0)};
        const cplx t2{s.uniform(-0.5, 0.5), s.uniform(0.8, 2.0)};
        const PeriodMatrix om = make_period_matrix_any_sign(t1, t2, 0.0);
        const Characteristic ch = s.characteristic();
        const cplx u = s.point(om);
        const cplx v = s.point(om);
        const cplx product = oracle::genus1_theta(ch.a, ch.b, u, t1, 40) * oracle::genus1_theta(ch.c, ch.d, v, t2, 40);
        CHECK(std::abs(theta(ch, {u, v}, om) - product) < 1e-10);
    }
}

TEST_CASE("fast sum matches the brute-force oracle") {
    Sampler s(16);
    for (int k = 0; k < 50; ++k) {
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const cplx u = s.point(om);
        const cplx v = s.point(om);
        const ThetaSum t = theta_sum(ch, {u, v}, om);
        CHECK(std::abs(t.value - brute(ch, u, v, om, t.radius + 8)) < 1e-12 * std::max(1.0, t.magnitude));
    }
}

TEST_CASE("odd characteristics vanish at the origin") {
    Sampler s(17);
    for (int k = 0; k < 10; ++k) {
        const PeriodMatrix om = s.omega();
        for (const Characteristic& ch : kOdd) CHECK(std::abs(theta(ch, {0.0, 0.0}, om)) < 1e-10);
    }
}

TEST_CASE("column swap symmetry") {
    Sampler s(18);
    for (int k = 0; k < 20; ++k) {
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const cplx u = s.point(om);
        const cplx v = s.point(om);
        const cplx lhs = theta(ch, {u, v}, om);
        const cplx rhs = theta(ch.swapped(), {v, u}, om.swapped());
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("periodicity in u and v") {
    Sampler s(19);
    for (int k = 0; k < 20; ++k) {
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const cplx u = s.point(om);
        const cplx v = s.point(om);
        const cplx base = theta(ch, {u, v}, om);
        const double sa = ch.a ? -1.0 : 1.0;
        const double sc = ch.c ? -1.0 : 1.0;
        CHECK(std::abs(theta(ch, {u + 1.0, v}, om) - sa * base) < 1e-12);
        CHECK(std::abs(theta(ch, {u, v + 1.0}, om) - sc * base) < 1e-12);
    }
}

TEST_CASE("half-period shift examples") {
    Sampler s(20);
    const Characteristic zero{};
    for (int k = 0; k < 3; ++k) {
        const PeriodMatrix om = s.omega();
        const ThetaArgs z{s.point(om), s.point(om)};

        const cplx b_shift = half_period_shifted_theta(zero, {1, 0, 0, 0}, z, om);
        CHECK(std::abs(b_shift - theta(Characteristic::parse("0010"), z, om)) < 1e-14);

        CHECK(half_period_shifted_theta(zero, {}, z, om) == theta(zero, z, om));

        const ThetaArgs origin{0.0, 0.0};
        const ThetaArgs d = HalfPeriod{0, 1, 0, 0}.offset(om);
        const cplx direct = theta(zero, d, om);
        const cplx via = half_period_shifted_theta(zero, {0, 1, 0, 0}, origin, om);
        CHECK(std::abs(direct - via) < 1e-12);
        const cplx expected = std::exp(-I * kPi * om.tau1() / 4.0) * theta(Characteristic::parse("1000"), origin, om);
        CHECK(std::abs(via - expected) < 1e-12);
    }
}

TEST_CASE("half-period shift path agrees with direct evaluation for all 16 shifts") {
    Sampler s(21);
    for (int k = 0; k < 4; ++k) {
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const ThetaArgs z{s.point(om), s.point(om)};
        for (int bits = 0; bits < 16; ++bits) {
            const HalfPeriod h{(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
            const ThetaArgs d = h.offset(om);
            const cplx direct = theta(ch, {z.u + d.u, z.v + d.v}, om);
            const cplx via = half_period_shifted_theta(ch, h, z, om);
            CHECK(std::abs(direct - via) < 1e-10);
        }
    }
}

TEST_CASE("evaluation is bitwise deterministic") {
    Sampler s(22);
    const PeriodMatrix om = s.omega();
    const ThetaArgs z{s.point(om), s.point(om)};
    const Characteristic ch = Characteristic::parse("0110");
    const cplx first = theta(ch, z, om);
    for (int k = 0; k < 3; ++k) CHECK(theta(ch, z, om) == first);
}
