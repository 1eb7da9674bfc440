#include "g2theta/text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <regex>

#include "g2theta/error.hpp"

namespace g2theta {

namespace {

double to_double(const std::string& digits, std::string_view whole) {
    double out = 0.0;
    const char* first = digits.data();
    const char* last = first + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || !std::isfinite(out)) {
        throw Error(ErrorCode::ParseError, "complex literal out of range: '" + std::string(whole) + "'");
    }
    return out;
}

std::string format_part(double x) {
    if (x == 0.0) x = 0.0;  // drops the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

cplx parse_complex(std::string_view text) {
    static const std::regex grammar(
        R"(([+-]?)((?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)([+-])((?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)i)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
        throw Error(ErrorCode::ParseError, "malformed complex literal '" + std::string(text) + "' (expected RE+IMi)");
    }
    double re = to_double(m[2].str(), text);
    double im = to_double(m[4].str(), text);
    if (m[1].str() == "-") re = -re;
    if (m[3].str() == "-") im = -im;
    return {re, im};
}

std::string format_complex(cplx z) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string out = format_part(z.real());
    out += std::signbit(im) ? '-' : '+';
    out += format_part(std::fabs(im));
    out += 'i';
    return out;
}

}  // namespace g2theta
