#include <doctest.h>

#include <cmath>
#include <random>

#include "g2theta/error.hpp"
#include "g2theta/text.hpp"

using namespace g2theta;

TEST_CASE("complex literals parse") {
    CHECK(parse_complex("0.5-1.25i") == cplx{0.5, -1.25});
    CHECK(parse_complex("0+0i") == cplx{});
    CHECK(parse_complex("-1+2i") == cplx{-1.0, 2.0});
    CHECK(parse_complex("+3.-.5i") == cplx{3.0, -0.5});
    CHECK(parse_complex("1e-3+2.5E2i") == cplx{1e-3, 250.0});
}

TEST_CASE("malformed complex literals are rejected") {
    for (const char* bad : {"", "1", "1+i", "i", "1 + 2i", "1+2", "1+2j", "--1+2i", "1+-2i", "0x1+0i", "nan+0i",
                            "1+2i ", "1e999+0i"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_complex(bad), Error);
    }
}

TEST_CASE("complex formatting") {
    CHECK(format_complex({0.5, -1.25}) == "0.5-1.25i");
    CHECK(format_complex({0.0, 0.0}) == "0+0i");
    CHECK(format_complex({-0.0, -0.0}) == "0+0i");
    CHECK(format_complex({1.0, 0.1}) == "1+0.10000000000000001i");
}

TEST_CASE("complex formatting round-trips exactly") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int k = 0; k < 500; ++k) {
        const cplx z{std::ldexp(mant(rng), expo(rng)), std::ldexp(mant(rng), expo(rng))};
        CHECK(parse_complex(format_complex(z)) == z);
    }
}
