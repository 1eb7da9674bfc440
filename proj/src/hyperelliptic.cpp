#include "g2theta/hyperelliptic.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "catalog_data.hpp"
#include "g2theta/error.hpp"

namespace g2theta {

namespace {

const Characteristic kDenominator{0, 0, 1, 1};

cplx guarded_ratio(const Characteristic& ch, cplx y, cplx z, const PeriodMatrix& omega, const EvalOptions& opts,
                   double pole_guard) {
    const ThetaSum num = theta_sum(ch, {y, z}, omega, opts);
    const cplx den = ch == kDenominator ? num.value : theta(kDenominator, {y, z}, omega, opts);
    if (!(std::abs(den) >= pole_guard * num.magnitude)) {
        throw Error(ErrorCode::DenominatorNearZero, "theta[0011] nearly vanishes at the requested point");
    }
    return num.value / den;
}

std::vector<FAdditionSpec> parse_f_catalog() {
    static const std::regex header(R"(f-add-([0-9]+) \(([^()]*)\) \[([01]{4})\])");
    static const std::regex denom(R"(  / (.*))");
    static const std::regex factor(R"(\[([01]{4})\])");

    std::vector<FAdditionSpec> out;
    FAdditionSpec current;
    bool open = false;
    const auto flush = [&] {
        if (open) out.push_back(current);
        current = FAdditionSpec{};
        open = false;
    };

    const std::string text(detail::kFCatalog);
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(start, end - start);
        start = end + 1;

        std::smatch m;
        if (line.empty()) {
            flush();
        } else if (std::regex_match(line, m, header)) {
            flush();
            open = true;
            current.index = std::stoi(m[1].str());
            current.equation = m[2].str();
            current.target = Characteristic::parse(m[3].str());
        } else if (std::regex_match(line, m, denom)) {
            const std::string body = m[1].str();
            for (auto it = std::sregex_iterator(body.begin(), body.end(), factor); it != std::sregex_iterator(); ++it) {
                current.denominator.push_back(Characteristic::parse((*it)[1].str()));
            }
        } else if (line.rfind("    ", 0) == 0) {
            current.numerator.push_back(parse_term(std::string_view(line).substr(4)));
        } else {
            throw Error(ErrorCode::ParseError, "malformed F catalog line '" + line + "'");
        }
    }
    flush();
    return out;
}

const std::vector<FAdditionSpec>& f_specs() {
    static const std::vector<FAdditionSpec> specs = parse_f_catalog();
    return specs;
}

struct Prediction {
    cplx value;
    double term_scale;  // largest |A term| / |B0 B|
};

Prediction predict(int index, const FPoint& p, const PeriodMatrix& omega, const EvalOptions& opts, double pole_guard) {
    const FAdditionSpec& spec = f_addition_spec(index);
    Binding binding;
    binding.set(Symbol::y, p.y);
    binding.set(Symbol::z, p.z);
    binding.set(Symbol::yp, p.yp);
    binding.set(Symbol::zp, p.zp);

    struct Cached {
        Characteristic ch;
        cplx u, v, value;
    };
    std::vector<Cached> cache;
    const auto f_at = [&](const Characteristic& ch, cplx u, cplx v) {
        for (const Cached& c : cache) {
            if (c.ch == ch && c.u == u && c.v == v) return c.value;
        }
        const cplx value = F(ch, u, v, omega, opts, pole_guard);
        cache.push_back({ch, u, v, value});
        return value;
    };

    cplx numerator{0.0, 0.0};
    double largest = 0.0;
    for (const Term& t : spec.numerator) {
        cplx prod(static_cast<double>(t.coefficient), 0.0);
        for (const Factor& f : t.factors) prod *= f_at(f.ch, f.u.evaluate(binding, omega), f.v.evaluate(binding, omega));
        numerator += prod;
        largest = std::max(largest, std::abs(prod));
    }

    const cplx b0 = B0(p.y, p.z, p.yp, p.zp, omega, opts, pole_guard);
    cplx bi{1.0, 0.0};
    for (const Characteristic& ch : spec.denominator) bi *= f_at(ch, 0.0, 0.0);
    if (!(std::abs(bi) >= pole_guard)) {
        throw Error(ErrorCode::PoleEncountered, f_addition_id(index) + ": constant denominator vanishes");
    }
    const cplx den = b0 * bi;
    return {numerator / den, largest / std::abs(den)};
}

}  // namespace

cplx F(const Characteristic& ch, cplx y, cplx z, const PeriodMatrix& omega, const EvalOptions& opts, double pole_guard) {
    return guarded_ratio(ch, y, z, omega, opts, pole_guard);
}

cplx B0(cplx y, cplx z, cplx yp, cplx zp, const PeriodMatrix& omega, const EvalOptions& opts, double pole_guard) {
    const auto sq = [](cplx x) { return x * x; };
    const auto product = [&](const Characteristic& ch) {
        return sq(F(ch, y, z, omega, opts, pole_guard)) * sq(F(ch, yp, zp, omega, opts, pole_guard));
    };
    const cplx p1 = product({1, 0, 1, 1});
    const cplx p2 = product({0, 1, 0, 1});
    const cplx p3 = product({1, 1, 0, 1});
    const cplx value = 1.0 - p1 - p2 + p3;
    const double scale = std::max({1.0, std::abs(p1), std::abs(p2), std::abs(p3)});
    if (!(std::abs(value) >= pole_guard * scale)) {
        throw Error(ErrorCode::PoleEncountered, "B0 vanishes at the requested point");
    }
    return value;
}

const FAdditionSpec& f_addition_spec(int index) {
    const auto& specs = f_specs();
    if (index < 1 || index > static_cast<int>(specs.size())) {
        throw Error(ErrorCode::UnknownIdentity, "F addition formula index out of range: " + std::to_string(index));
    }
    return specs[static_cast<std::size_t>(index - 1)];
}

std::string f_addition_id(int index) { return "f-add-" + std::to_string(index); }

cplx f_addition_rhs(int index, const FPoint& p, const PeriodMatrix& omega, const EvalOptions& opts,
                    double pole_guard) {
    return predict(index, p, omega, opts, pole_guard).value;
}

Residual f_addition_residual(int index, const FPoint& p, const PeriodMatrix& omega, const EvalOptions& opts,
                             double pole_guard) {
    const Prediction pred = predict(index, p, omega, opts, pole_guard);
    const cplx direct = F(f_addition_spec(index).target, p.y + p.yp, p.z + p.zp, omega, opts, pole_guard);
    Residual r;
    r.absolute = std::abs(pred.value - direct);
    r.scale = std::max(std::abs(direct), pred.term_scale);
    r.relative = r.absolute / std::max(r.scale, 1e-300);
    return r;
}

}  // namespace g2theta
