#include "g2theta/identity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>

#include "catalog_data.hpp"
#include "g2theta/error.hpp"

namespace g2theta {

// ---- Rational --------------------------------------------------------------

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

std::string Rational::to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    static const std::regex re(R"(([+-]?[0-9]+)(?:/([0-9]+))?)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, re)) {
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    const long den = m[2].matched ? std::stol(m[2].str()) : 1;
    if (den == 0) throw Error(ErrorCode::ParseError, "rational with zero denominator");
    return {std::stol(m[1].str()), den};
}

Rational operator+(Rational a, Rational b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator-(Rational a, Rational b) { return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero rational");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

// ---- symbols ---------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {"y",    "z",     "y'",     "z'",
                                                                      "alpha", "beta", "alpha'", "beta'"};

}  // namespace

std::string_view symbol_name(Symbol s) noexcept { return kSymbolNames[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) noexcept {
    for (Symbol s : kAllSymbols) {
        if (symbol_name(s) == name) return s;
    }
    return std::nullopt;
}

Symbol swap_symbol(Symbol s) noexcept {
    switch (s) {
        case Symbol::y: return Symbol::z;
        case Symbol::z: return Symbol::y;
        case Symbol::yp: return Symbol::zp;
        case Symbol::zp: return Symbol::yp;
        case Symbol::alpha: return Symbol::beta;
        case Symbol::beta: return Symbol::alpha;
        case Symbol::alphap: return Symbol::betap;
        case Symbol::betap: return Symbol::alphap;
    }
    return s;
}

std::vector<Symbol> SymbolSet::to_vector() const {
    std::vector<Symbol> out;
    for (Symbol s : kAllSymbols) {
        if (contains(s)) out.push_back(s);
    }
    return out;
}

void Binding::set(Symbol s, cplx value) noexcept {
    values_[static_cast<std::size_t>(s)] = value;
    present_.insert(s);
}

cplx Binding::get(Symbol s) const {
    if (!has(s)) throw Error(ErrorCode::InvalidArgument, "unbound symbol " + std::string(symbol_name(s)));
    return values_[static_cast<std::size_t>(s)];
}

// ---- ArgExpr ---------------------------------------------------------------

ArgExpr ArgExpr::symbol(Symbol s) {
    ArgExpr e;
    e[s] = Rational(1);
    return e;
}

ArgExpr ArgExpr::constant(Rational r) {
    ArgExpr e;
    e.c0 = r;
    return e;
}

ArgExpr ArgExpr::period(Rational k1, Rational k2, Rational k12) {
    ArgExpr e;
    e.c1 = k1;
    e.c2 = k2;
    e.c3 = k12;
    return e;
}

bool ArgExpr::is_zero() const noexcept {
    return std::all_of(coeff.begin(), coeff.end(), [](const Rational& r) { return r.is_zero(); }) && c0.is_zero() &&
           c1.is_zero() && c2.is_zero() && c3.is_zero();
}

SymbolSet ArgExpr::symbols() const {
    SymbolSet out;
    for (Symbol s : kAllSymbols) {
        if (!(*this)[s].is_zero()) out.insert(s);
    }
    return out;
}

cplx ArgExpr::evaluate(const Binding& binding, const PeriodMatrix& omega) const {
    cplx acc = c0.to_double() + c1.to_double() * omega.tau1() + c2.to_double() * omega.tau2() +
               c3.to_double() * omega.tau12();
    for (Symbol s : kAllSymbols) {
        const Rational& k = (*this)[s];
        if (!k.is_zero()) acc += k.to_double() * binding.get(s);
    }
    return acc;
}

ArgExpr ArgExpr::substitute(Symbol s, const ArgExpr& value) const {
    const Rational k = (*this)[s];
    if (k.is_zero()) return *this;
    ArgExpr out = *this;
    out[s] = Rational(0);
    return out + k * value;
}

ArgExpr ArgExpr::column_swapped() const {
    ArgExpr out;
    for (Symbol s : kAllSymbols) out[swap_symbol(s)] = (*this)[s];
    out.c0 = c0;
    out.c1 = c2;
    out.c2 = c1;
    out.c3 = c3;
    return out;
}

ArgExpr operator+(const ArgExpr& a, const ArgExpr& b) {
    ArgExpr out;
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = a.coeff[i] + b.coeff[i];
    out.c0 = a.c0 + b.c0;
    out.c1 = a.c1 + b.c1;
    out.c2 = a.c2 + b.c2;
    out.c3 = a.c3 + b.c3;
    return out;
}

ArgExpr operator*(Rational k, const ArgExpr& a) {
    ArgExpr out;
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = k * a.coeff[i];
    out.c0 = k * a.c0;
    out.c1 = k * a.c1;
    out.c2 = k * a.c2;
    out.c3 = k * a.c3;
    return out;
}

ArgExpr operator-(const ArgExpr& a, const ArgExpr& b) { return a + Rational(-1) * b; }

namespace {

void append_term(std::string& out, const Rational& k, std::string_view name) {
    if (k.is_zero()) return;
    const long num = std::labs(k.num());
    if (k.num() < 0) {
        out += '-';
    } else if (!out.empty()) {
        out += '+';
    }
    if (name.empty()) {
        out += std::to_string(num);
    } else {
        if (num != 1) out += std::to_string(num) + "*";
        out += name;
    }
    if (k.den() != 1) out += "/" + std::to_string(k.den());
}

}  // namespace

std::string ArgExpr::to_string() const {
    std::string out;
    for (Symbol s : kAllSymbols) append_term(out, (*this)[s], symbol_name(s));
    append_term(out, c1, "t1");
    append_term(out, c2, "t2");
    append_term(out, c3, "t12");
    append_term(out, c0, "");
    return out.empty() ? "0" : out;
}

ArgExpr ArgExpr::parse(std::string_view text) {
    static const std::regex term_re(R"(([+-]?)(?:([0-9]+)\*)?([a-z][a-z0-9]*'?|[0-9]+)(?:/([0-9]+))?)");
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty argument expression");
    ArgExpr out;
    auto it = text.begin();
    bool first = true;
    while (it != text.end()) {
        std::match_results<std::string_view::const_iterator> m;
        if (!std::regex_search(it, text.end(), m, term_re, std::regex_constants::match_continuous) ||
            m.length(0) == 0 || (!first && !m[1].matched) || (!first && m[1].length() == 0)) {
            throw Error(ErrorCode::ParseError, "malformed argument expression '" + std::string(text) + "'");
        }
        first = false;
        long num = m[2].matched ? std::stol(m[2].str()) : 1;
        const long den = m[4].matched ? std::stol(m[4].str()) : 1;
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        if (m[1].str() == "-") num = -num;
        const std::string name = m[3].str();
        if (std::isdigit(static_cast<unsigned char>(name[0]))) {
            if (m[2].matched) {
                throw Error(ErrorCode::ParseError, "malformed argument expression '" + std::string(text) + "'");
            }
            out.c0 = out.c0 + Rational(num * std::stol(name), den);
        } else if (name == "t1") {
            out.c1 = out.c1 + Rational(num, den);
        } else if (name == "t2") {
            out.c2 = out.c2 + Rational(num, den);
        } else if (name == "t12") {
            out.c3 = out.c3 + Rational(num, den);
        } else if (auto s = symbol_from_name(name)) {
            out[*s] = out[*s] + Rational(num, den);
        } else {
            throw Error(ErrorCode::ParseError, "unknown symbol '" + name + "' in '" + std::string(text) + "'");
        }
        it = m[0].second;
    }
    return out;
}

template <>
std::array<ArgExpr, 4> tilde_transform(const std::array<ArgExpr, 4>& u) {
    const Rational h(1, 2);
    return {h * (u[0] + u[1] + u[2] + u[3]), h * (u[0] + u[1] - u[2] - u[3]), h * (u[0] - u[1] + u[2] - u[3]),
            h * (u[0] - u[1] - u[2] + u[3])};
}

TildePair tilde_transform(const std::array<cplx, 4>& u, const std::array<cplx, 4>& v) {
    return {tilde_transform<cplx>(u), tilde_transform<cplx>(v)};
}

// ---- specs -----------------------------------------------------------------

void refresh_free_symbols(IdentitySpec& spec) {
    SymbolSet out;
    const auto add = [&](const Factor& f) {
        for (Symbol s : kAllSymbols) {
            if (!f.u[s].is_zero() || !f.v[s].is_zero()) out.insert(s);
        }
    };
    for (const Side& side : spec.sides) {
        for (const Term& t : side) {
            for (const Factor& f : t.factors) add(f);
        }
    }
    for (const Factor& f : spec.preconditions) add(f);
    spec.free_symbols = out;
}

Residual residual_from_terms(std::span<const std::vector<cplx>> side_terms) {
    Residual r;
    std::vector<cplx> sums;
    for (const auto& terms : side_terms) {
        cplx sum{0.0, 0.0};
        for (const cplx& t : terms) {
            sum += t;
            r.scale = std::max(r.scale, std::abs(t));
        }
        sums.push_back(sum);
    }
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) r.absolute = std::max(r.absolute, std::abs(sums[i] - sums[i + 1]));
    r.relative = r.absolute / std::max(r.scale, 1e-300);
    return r;
}

namespace {

class FactorCache {
public:
    FactorCache(const PeriodMatrix& omega, const EvalOptions& opts) : omega_(omega), opts_(opts) {}

    cplx get(const Characteristic& ch, cplx u, cplx v) {
        for (const Entry& e : entries_) {
            if (e.ch == ch && e.u == u && e.v == v) return e.value;
        }
        const cplx value = theta(ch, {u, v}, omega_, opts_);
        entries_.push_back({ch, u, v, value});
        return value;
    }

private:
    struct Entry {
        Characteristic ch;
        cplx u;
        cplx v;
        cplx value;
    };
    const PeriodMatrix& omega_;
    const EvalOptions& opts_;
    std::vector<Entry> entries_;
};

std::string describe_factor(const Factor& f) {
    return "[" + f.ch.to_string() + "](" + f.u.to_string() + "," + f.v.to_string() + ")";
}

}  // namespace

Residual evaluate_identity(const IdentitySpec& spec, const Binding& binding, const PeriodMatrix& omega,
                           const EvalOptions& opts, double precondition_tolerance) {
    for (Symbol s : spec.free_symbols.to_vector()) {
        if (!binding.has(s)) {
            throw Error(ErrorCode::InvalidArgument,
                        spec.id + ": binding is missing symbol " + std::string(symbol_name(s)));
        }
    }
    FactorCache cache(omega, opts);
    for (const Precondition& p : spec.preconditions) {
        const cplx value = cache.get(p.ch, p.u.evaluate(binding, omega), p.v.evaluate(binding, omega));
        if (!(std::abs(value) < precondition_tolerance)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3e", std::abs(value));
            throw Error(ErrorCode::PreconditionViolated,
                        spec.id + ": " + describe_factor(p) + " = " + buf + " does not vanish");
        }
    }
    std::vector<std::vector<cplx>> values;
    values.reserve(spec.sides.size());
    for (const Side& side : spec.sides) {
        std::vector<cplx> terms;
        terms.reserve(side.size());
        for (const Term& t : side) {
            cplx prod(static_cast<double>(t.coefficient), 0.0);
            for (const Factor& f : t.factors) {
                prod *= cache.get(f.ch, f.u.evaluate(binding, omega), f.v.evaluate(binding, omega));
            }
            terms.push_back(prod);
        }
        values.push_back(std::move(terms));
    }
    return residual_from_terms(values);
}

namespace {

Factor swap_factor(const Factor& f) { return {f.ch.swapped(), f.v.column_swapped(), f.u.column_swapped()}; }

Factor substitute_factor(const Factor& f, Symbol s, const ArgExpr& value) {
    return {f.ch, f.u.substitute(s, value), f.v.substitute(s, value)};
}

template <class Fn>
IdentitySpec map_factors(const IdentitySpec& spec, Fn&& fn) {
    IdentitySpec out = spec;
    for (Side& side : out.sides) {
        for (Term& t : side) {
            for (Factor& f : t.factors) f = fn(f);
        }
    }
    for (Factor& f : out.preconditions) f = fn(f);
    refresh_free_symbols(out);
    return out;
}

}  // namespace

IdentitySpec column_swapped(const IdentitySpec& spec) {
    IdentitySpec out = map_factors(spec, swap_factor);
    if (out.from) {
        out.from->alpha = spec.from->beta.column_swapped();
        out.from->beta = spec.from->alpha.column_swapped();
    }
    return out;
}

IdentitySpec specialize(const IdentitySpec& spec, const ArgExpr& alpha, const ArgExpr& beta) {
    return map_factors(spec, [&](const Factor& f) {
        Factor g = substitute_factor(f, Symbol::alpha, alpha);
        g = substitute_factor(g, Symbol::beta, beta);
        g = substitute_factor(g, Symbol::alphap, alpha);
        return substitute_factor(g, Symbol::betap, beta);
    });
}

// ---- catalog text ----------------------------------------------------------

std::string format_term(const Term& t) {
    std::string out = t.coefficient < 0 ? "-" : "+";
    out += ' ';
    if (std::abs(t.coefficient) != 1) out += std::to_string(std::abs(t.coefficient)) + " ";
    for (std::size_t i = 0; i < t.factors.size();) {
        std::size_t j = i;
        while (j + 1 < t.factors.size() && t.factors[j + 1] == t.factors[i]) ++j;
        const Factor& f = t.factors[i];
        if (i != 0) out += ' ';
        out += "[" + f.ch.to_string() + "]";
        if (j > i) out += "^" + std::to_string(j - i + 1);
        out += "(" + f.u.to_string() + "," + f.v.to_string() + ")";
        i = j + 1;
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& id, const std::string& line, const std::string& why) {
    throw Error(ErrorCode::ParseError, (id.empty() ? std::string("catalog") : id) + ": " + why + " in line '" + line + "'");
}

Factor parse_factor_match(const std::smatch& m) {
    return {Characteristic::parse(m[1].str()), ArgExpr::parse(m[3].str()), ArgExpr::parse(m[4].str())};
}

const std::regex& factor_regex() {
    static const std::regex re(R"(\[([0-9]{4})\](?:\^([0-9]+))?\(([^,()]+),([^,()]+)\))");
    return re;
}

Term parse_term_body(const std::string& id, const std::string& line, std::string_view body) {
    static const std::regex head(R"(([+-]) (?:([0-9]+) )?(.*))");
    std::match_results<std::string_view::const_iterator> hm;
    if (!std::regex_match(body.begin(), body.end(), hm, head)) parse_fail(id, line, "malformed term");
    Term t;
    t.coefficient = hm[2].matched ? std::stoi(hm[2].str()) : 1;
    if (t.coefficient == 0) parse_fail(id, line, "zero coefficient");
    if (hm[1].str() == "-") t.coefficient = -t.coefficient;

    const std::string rest = hm[3].str();
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::smatch fm;
        if (!std::regex_search(rest.begin() + static_cast<long>(pos), rest.end(), fm, factor_regex(),
                               std::regex_constants::match_continuous)) {
            parse_fail(id, line, "malformed factor");
        }
        const int power = fm[2].matched ? std::stoi(fm[2].str()) : 1;
        if (power < 1) parse_fail(id, line, "bad exponent");
        const Factor f = parse_factor_match(fm);
        for (int k = 0; k < power; ++k) t.factors.push_back(f);
        pos += static_cast<std::size_t>(fm.length(0));
        if (pos < rest.size()) {
            if (rest[pos] != ' ') parse_fail(id, line, "expected a space between factors");
            ++pos;
        }
    }
    if (t.factors.empty() || t.factors.size() > 4) parse_fail(id, line, "a term needs 1 to 4 factors");
    return t;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool starts_with(const std::string& s, std::string_view p) { return s.compare(0, p.size(), p) == 0; }

}  // namespace

Term parse_term(std::string_view text) {
    const std::string line(text);
    return parse_term_body("", line, text);
}

std::string format_identity(const IdentitySpec& spec) {
    std::ostringstream out;
    out << spec.id << " (" << spec.equation << ")\n";
    if (spec.from) {
        out << "  from " << spec.from->parent << " alpha=" << spec.from->alpha.to_string()
            << " beta=" << spec.from->beta.to_string() << "\n";
    }
    for (std::size_t si = 0; si < spec.sides.size(); ++si) {
        const char* lead = si == 0 ? "    " : "  = ";
        const Side& side = spec.sides[si];
        if (side.empty()) {
            out << lead << "0\n";
            continue;
        }
        for (std::size_t ti = 0; ti < side.size(); ++ti) {
            out << (ti == 0 ? lead : "    ") << format_term(side[ti]) << "\n";
        }
    }
    for (const Precondition& p : spec.preconditions) out << "  where " << describe_factor(p) << " = 0\n";
    return out.str();
}

IdentitySpec parse_identity(std::string_view text) {
    static const std::regex header(R"(([A-Za-z0-9'-]+) \(([^()]*)\))");
    static const std::regex from_re(R"(  from ([A-Za-z0-9-]+) alpha=(\S+) beta=(\S+))");
    static const std::regex where_re(R"(  where (\S+) = 0)");

    std::vector<std::string> lines = split_lines(text);
    while (!lines.empty() && lines.front().empty()) lines.erase(lines.begin());
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw Error(ErrorCode::ParseError, "empty identity block");

    IdentitySpec spec;
    std::smatch m;
    if (!std::regex_match(lines[0], m, header)) parse_fail("", lines[0], "malformed header");
    spec.id = m[1].str();
    spec.equation = m[2].str();

    std::size_t i = 1;
    if (i < lines.size() && std::regex_match(lines[i], m, from_re)) {
        spec.from = Specialization{m[1].str(), ArgExpr::parse(m[2].str()), ArgExpr::parse(m[3].str())};
        ++i;
    }
    for (; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (std::regex_match(line, m, where_re)) {
            std::smatch fm;
            const std::string body = m[1].str();
            if (!std::regex_match(body, fm, factor_regex()) || fm[2].matched) parse_fail(spec.id, line, "malformed precondition");
            spec.preconditions.push_back(parse_factor_match(fm));
            continue;
        }
        if (!spec.preconditions.empty()) parse_fail(spec.id, line, "terms after a precondition");
        std::string body;
        if (starts_with(line, "  = ")) {
            spec.sides.emplace_back();
            body = line.substr(4);
        } else if (starts_with(line, "    ")) {
            if (spec.sides.empty()) spec.sides.emplace_back();
            body = line.substr(4);
        } else {
            parse_fail(spec.id, line, "unexpected indentation");
        }
        if (body == "0") {
            if (!spec.sides.back().empty()) parse_fail(spec.id, line, "0 must stand alone on its side");
            continue;
        }
        spec.sides.back().push_back(parse_term_body(spec.id, line, body));
    }
    if (spec.sides.size() < 2) parse_fail(spec.id, lines[0], "an identity needs at least two sides");
    refresh_free_symbols(spec);
    return spec;
}

std::vector<IdentitySpec> parse_catalog(std::string_view text) {
    std::vector<IdentitySpec> out;
    std::string block;
    const auto flush = [&] {
        if (!block.empty()) out.push_back(parse_identity(block));
        block.clear();
    };
    for (const std::string& line : split_lines(text)) {
        if (line.empty()) {
            flush();
        } else {
            block += line;
            block += '\n';
        }
    }
    flush();
    return out;
}

// ---- builtin catalog -------------------------------------------------------

namespace {

IdentitySpec make_riemann() {
    const std::array<ArgExpr, 4> u = {ArgExpr::symbol(Symbol::y), ArgExpr::symbol(Symbol::yp),
                                      ArgExpr::symbol(Symbol::alpha), ArgExpr::symbol(Symbol::alphap)};
    const std::array<ArgExpr, 4> v = {ArgExpr::symbol(Symbol::z), ArgExpr::symbol(Symbol::zp),
                                      ArgExpr::symbol(Symbol::beta), ArgExpr::symbol(Symbol::betap)};
    const auto ut = tilde_transform(u);
    const auto vt = tilde_transform(v);

    IdentitySpec spec;
    spec.id = "riemann";
    spec.equation = "2-2";
    spec.sides.resize(2);
    for (const char* text : {"0000", "0100", "1000", "1100"}) {
        const Characteristic ch = Characteristic::parse(text);
        Term lhs;
        Term rhs;
        for (std::size_t i = 0; i < 4; ++i) {
            lhs.factors.push_back({ch, u[i], v[i]});
            rhs.factors.push_back({ch, ut[i], vt[i]});
        }
        spec.sides[0].push_back(std::move(lhs));
        spec.sides[1].push_back(std::move(rhs));
    }
    refresh_free_symbols(spec);
    return spec;
}

struct Builtins {
    std::vector<std::string> ids;
    std::map<std::string, IdentitySpec, std::less<>> specs;
    std::map<std::string, IdentitySpec, std::less<>> printed;
};

const Builtins& builtins() {
    static const Builtins b = [] {
        Builtins out;
        std::vector<IdentitySpec> all;
        all.push_back(make_riemann());
        for (IdentitySpec& s : parse_catalog(detail::kThetaCatalog)) all.push_back(std::move(s));
        for (IdentitySpec& s : all) {
            out.ids.push_back(s.id);
            out.specs.emplace(s.id, std::move(s));
        }
        for (IdentitySpec& s : parse_catalog(detail::kPrintedCatalog)) out.printed.emplace(s.id, std::move(s));
        return out;
    }();
    return b;
}

}  // namespace

const std::vector<std::string>& builtin_ids() { return builtins().ids; }

const IdentitySpec& builtin_identity(std::string_view id) {
    const auto& specs = builtins().specs;
    const auto it = specs.find(id);
    if (it == specs.end()) throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(id) + "'");
    return it->second;
}

std::optional<IdentitySpec> printed_variant(std::string_view id) {
    builtin_identity(id);
    const auto& printed = builtins().printed;
    const auto it = printed.find(id);
    if (it == printed.end()) return std::nullopt;
    return it->second;
}

std::string catalog_text() {
    std::string out;
    for (const std::string& id : builtin_ids()) {
        if (!out.empty()) out += '\n';
        out += format_identity(builtin_identity(id));
    }
    return out;
}

bool needs_zero_locus(const IdentitySpec& spec) { return !spec.preconditions.empty(); }

std::array<HalfPeriodPair, 6> odd_half_periods(const PeriodMatrix& omega) {
    static constexpr std::array<HalfPeriod, 6> shifts = {
        HalfPeriod{1, 1, 1, 0}, HalfPeriod{1, 1, 0, 0}, HalfPeriod{1, 1, 0, 1},
        HalfPeriod{1, 0, 1, 1}, HalfPeriod{0, 0, 1, 1}, HalfPeriod{0, 1, 1, 1},
    };
    std::array<HalfPeriodPair, 6> out;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        const ThetaArgs d = shifts[i].offset(omega);
        out[i] = {shifts[i], d.u, d.v};
    }
    return out;
}

}  // namespace g2theta
