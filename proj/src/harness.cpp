#include "g2theta/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "g2theta/error.hpp"
#include "g2theta/hyperelliptic.hpp"

namespace g2theta {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool is_guard_error(ErrorCode code) {
    return code == ErrorCode::DenominatorNearZero || code == ErrorCode::PoleEncountered ||
           code == ErrorCode::PreconditionViolated;
}

cplx draw_point(TrialRng& rng, const PeriodMatrix& omega, const PointBox& box) {
    const double im_max = box.im_fraction * std::min(omega.tau1().imag(), omega.tau2().imag());
    const double re = rng.uniform(-box.re_abs_max, box.re_abs_max);
    const double im = rng.uniform(-im_max, im_max);
    return {re, im};
}

int f_index(std::string_view id) {
    constexpr std::string_view prefix = "f-add-";
    if (id.substr(0, prefix.size()) != prefix) return 0;
    return std::stoi(std::string(id.substr(prefix.size())));
}

struct TrialOutcome {
    double relative = 0.0;
    int resamples = 0;
    bool completed = false;
};

TrialOutcome run_trial(const std::string& id, int trial, const SuiteConfig& config) {
    TrialRng rng(config.seed, id, static_cast<std::uint64_t>(trial));
    EvalOptions opts;
    opts.tail_tolerance = config.tail_tolerance;
    const int fi = f_index(id);
    const IdentitySpec* spec = fi == 0 ? &builtin_identity(id) : nullptr;

    TrialOutcome out;
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
        const PeriodMatrix omega = sample_moduli(rng, config.moduli);
        try {
            if (spec) {
                const Binding b = sample_binding(rng, *spec, omega, config.box);
                out.relative = evaluate_identity(*spec, b, omega, opts).relative;
            } else {
                const Binding b = sample_f_binding(rng, omega, config.box);
                const FPoint p{b.get(Symbol::y), b.get(Symbol::z), b.get(Symbol::yp), b.get(Symbol::zp)};
                out.relative = f_addition_residual(fi, p, omega, opts).relative;
            }
            out.completed = true;
            return out;
        } catch (const Error& e) {
            if (!is_guard_error(e.code())) throw;
            ++out.resamples;
        }
    }
    return out;
}

void validate(const SuiteConfig& c) {
    if (c.families.empty()) throw Error(ErrorCode::InvalidConfig, "no identity families requested");
    if (c.trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
    if (!(c.tol > 0.0)) throw Error(ErrorCode::InvalidConfig, "tol must be positive");
    if (!(c.tail_tolerance > 0.0 && c.tail_tolerance < 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "tail tolerance must lie in (0, 1)");
    }
    for (const auto& [family, tol] : c.tol_overrides) {
        if (!(tol > 0.0)) throw Error(ErrorCode::InvalidConfig, "tolerance override must be positive");
    }
    if (c.max_attempts < 1) throw Error(ErrorCode::InvalidConfig, "max_attempts must be at least 1");
    const ModuliRanges& m = c.moduli;
    if (!(m.im_diag_min > 0.0 && m.im_diag_max >= m.im_diag_min && m.re_abs_max >= 0.0 &&
          m.im_offdiag_fraction > 0.0 && m.im_offdiag_fraction < 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "moduli ranges do not guarantee a valid period matrix");
    }
    if (!(c.box.re_abs_max >= 0.0 && c.box.im_fraction >= 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "point box must be nonnegative");
    }
}

}  // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::riemann: return "riemann";
        case Family::master: return "master";
        case Family::kossak: return "kossak";
        case Family::theta_addition: return "theta-addition";
        case Family::f_addition: return "f-addition";
        case Family::appendix: return "appendix";
    }
    return "";
}

std::optional<Family> family_from_name(std::string_view name) noexcept {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::vector<Family> parse_families(std::string_view text) {
    if (text == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
    std::vector<Family> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view name = text.substr(start, end - start);
        const auto f = family_from_name(name);
        if (!f) throw Error(ErrorCode::InvalidConfig, "unknown identity family '" + std::string(name) + "'");
        if (std::find(out.begin(), out.end(), *f) == out.end()) out.push_back(*f);
        start = end + 1;
    }
    return out;
}

std::vector<std::string> family_ids(Family f) {
    std::vector<std::string> out;
    if (f == Family::f_addition) {
        for (int i = 1; i <= kFAdditionCount; ++i) out.push_back(f_addition_id(i));
        return out;
    }
    for (const std::string& id : builtin_ids()) {
        const bool member = [&] {
            switch (f) {
                case Family::riemann: return id == "riemann";
                case Family::master: return id == "master";
                case Family::kossak: return id.rfind("kossak-", 0) == 0;
                case Family::theta_addition: return id.rfind("theta-add-", 0) == 0;
                case Family::appendix: return id.rfind("appendix-", 0) == 0;
                case Family::f_addition: return false;
            }
            return false;
        }();
        if (member) out.push_back(id);
    }
    return out;
}

TrialRng::TrialRng(std::uint64_t seed, std::string_view id, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(splitmix64(seed) ^ fnv1a(id)) ^ trial)) {}

double TrialRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t TrialRng::index(std::size_t n) {
    const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(k, n - 1);
}

PeriodMatrix sample_moduli(TrialRng& rng, const ModuliRanges& r) {
    const double y1 = rng.uniform(r.im_diag_min, r.im_diag_max);
    const double y2 = rng.uniform(r.im_diag_min, r.im_diag_max);
    // 1 - u lies in (0, 1], so Im t12 is strictly positive.
    const double y12 = r.im_offdiag_fraction * std::sqrt(y1 * y2) * (1.0 - rng.uniform());
    const double x1 = rng.uniform(-r.re_abs_max, r.re_abs_max);
    const double x2 = rng.uniform(-r.re_abs_max, r.re_abs_max);
    const double x12 = rng.uniform(-r.re_abs_max, r.re_abs_max);
    return make_period_matrix({x1, y1}, {x2, y2}, {x12, y12});
}

Binding sample_binding(TrialRng& rng, const IdentitySpec& spec, const PeriodMatrix& omega, const PointBox& box) {
    Binding b;
    for (Symbol s : spec.free_symbols.to_vector()) b.set(s, draw_point(rng, omega, box));
    if (needs_zero_locus(spec)) {
        const auto pairs = odd_half_periods(omega);
        const HalfPeriodPair& pick = pairs[rng.index(pairs.size())];
        b.set(Symbol::alpha, pick.alpha);
        b.set(Symbol::beta, pick.beta);
    }
    return b;
}

Binding sample_f_binding(TrialRng& rng, const PeriodMatrix& omega, const PointBox& box) {
    Binding b;
    for (Symbol s : {Symbol::y, Symbol::z, Symbol::yp, Symbol::zp}) b.set(s, draw_point(rng, omega, box));
    return b;
}

Report run_suite(const SuiteConfig& config) {
    validate(config);

    struct Job {
        std::size_t result;
        int trial;
    };
    Report report;
    report.config = config;
    std::vector<Job> jobs;
    for (Family f : config.families) {
        const auto it = config.tol_overrides.find(f);
        const double tol = it == config.tol_overrides.end() ? config.tol : it->second;
        for (const std::string& id : family_ids(f)) {
            IdentityResult r;
            r.id = id;
            const int fi = f_index(id);
            r.equation = fi == 0 ? builtin_identity(id).equation : f_addition_spec(fi).equation;
            r.tol = tol;
            for (int t = 0; t < config.trials; ++t) jobs.push_back({report.results.size(), t});
            report.results.push_back(std::move(r));
        }
    }

    std::vector<TrialOutcome> outcomes(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    const auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size() && !failed; j = next++) {
            try {
                outcomes[j] = run_trial(report.results[jobs[j].result].id, jobs[j].trial, config);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Aggregation runs in job order so the floating-point sums never depend on
    // the schedule.
    std::vector<double> sums(report.results.size(), 0.0);
    std::vector<int> completed(report.results.size(), 0);
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        IdentityResult& r = report.results[jobs[j].result];
        const TrialOutcome& o = outcomes[j];
        ++r.trials;
        r.resamples += o.resamples;
        if (!o.completed) {
            ++r.failures;
            continue;
        }
        ++completed[jobs[j].result];
        sums[jobs[j].result] += o.relative;
        r.max_rel = std::max(r.max_rel, o.relative);
        if (!(o.relative < r.tol)) ++r.failures;
    }
    report.pass = true;
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        IdentityResult& r = report.results[i];
        r.mean_rel = completed[i] > 0 ? sums[i] / completed[i] : 0.0;
        if (r.failures > 0 || r.resamples > kMaxResampleRate * r.trials) report.pass = false;
    }
    return report;
}

std::string report_json(const Report& report) {
    using nlohmann::ordered_json;
    const SuiteConfig& c = report.config;
    ordered_json config;
    ordered_json families = ordered_json::array();
    for (Family f : c.families) families.push_back(family_name(f));
    config["families"] = families;
    config["trials"] = c.trials;
    config["seed"] = c.seed;
    config["tol"] = c.tol;
    config["tail_tolerance"] = c.tail_tolerance;
    ordered_json overrides = ordered_json::object();
    for (Family f : kAllFamilies) {
        const auto it = c.tol_overrides.find(f);
        if (it != c.tol_overrides.end()) overrides[std::string(family_name(f))] = it->second;
    }
    config["tol_overrides"] = overrides;
    config["moduli_ranges"] = {{"im_tau_min", c.moduli.im_diag_min},
                               {"im_tau_max", c.moduli.im_diag_max},
                               {"re_abs_max", c.moduli.re_abs_max},
                               {"im_tau12_fraction", c.moduli.im_offdiag_fraction}};
    config["point_box"] = {{"re_abs_max", c.box.re_abs_max}, {"im_fraction", c.box.im_fraction}};

    ordered_json results = ordered_json::array();
    for (const IdentityResult& r : report.results) {
        ordered_json e;
        e["id"] = r.id;
        e["paper_eq"] = r.equation;
        e["trials"] = r.trials;
        e["max_rel"] = r.max_rel;
        e["mean_rel"] = r.mean_rel;
        e["failures"] = r.failures;
        e["resamples"] = r.resamples;
        results.push_back(std::move(e));
    }
    ordered_json root;
    root["config"] = std::move(config);
    root["results"] = std::move(results);
    root["verdict"] = report.pass ? "pass" : "fail";
    return root.dump(2) + "\n";
}

std::string report_table(const Report& report) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %-6s %7s %11s %11s %9s %9s\n", "id", "eq", "trials", "max_rel",
                  "mean_rel", "failures", "resamples");
    out << line;
    for (const IdentityResult& r : report.results) {
        std::snprintf(line, sizeof line, "%-16s %-6s %7d %11.3e %11.3e %9d %9d\n", r.id.c_str(), r.equation.c_str(),
                      r.trials, r.max_rel, r.mean_rel, r.failures, r.resamples);
        out << line;
    }
    out << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace g2theta
