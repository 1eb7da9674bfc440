#include "g2theta/g2theta.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "g2theta/error.hpp"
#include "g2theta/harness.hpp"
#include "g2theta/hyperelliptic.hpp"
#include "g2theta/text.hpp"

using namespace g2theta;

struct g2_period_matrix {
    PeriodMatrix omega;
};

struct g2_suite_config {
    SuiteConfig config;
};

struct g2_report {
    Report report;
};

namespace {

thread_local std::string last_error;

g2_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotConvergent: return G2_NOT_CONVERGENT;
        case ErrorCode::NegativeTau12Im: return G2_NEGATIVE_TAU12_IM;
        case ErrorCode::TolTooSmall: return G2_TOL_TOO_SMALL;
        case ErrorCode::UnknownIdentity: return G2_UNKNOWN_IDENTITY;
        case ErrorCode::PreconditionViolated: return G2_PRECONDITION_VIOLATED;
        case ErrorCode::DenominatorNearZero: return G2_DENOMINATOR_NEAR_ZERO;
        case ErrorCode::PoleEncountered: return G2_POLE_ENCOUNTERED;
        case ErrorCode::InvalidConfig: return G2_INVALID_CONFIG;
        case ErrorCode::ParseError: return G2_PARSE_ERROR;
        case ErrorCode::InvalidArgument: return G2_INVALID_ARGUMENT;
    }
    return G2_INTERNAL;
}

template <class Fn>
g2_status guarded(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return G2_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return G2_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return G2_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cplx to_cplx(g2_complex z) { return {z.re, z.im}; }
g2_complex from_cplx(cplx z) { return {z.real(), z.imag()}; }

EvalOptions options(double tail_tolerance) {
    EvalOptions opts;
    opts.tail_tolerance = tail_tolerance;
    return opts;
}

}  // namespace

extern "C" {

const char* g2_status_name(g2_status status) {
    switch (status) {
        case G2_OK: return "OK";
        case G2_NOT_CONVERGENT: return "NotConvergent";
        case G2_NEGATIVE_TAU12_IM: return "NegativeTau12Im";
        case G2_TOL_TOO_SMALL: return "TolTooSmall";
        case G2_UNKNOWN_IDENTITY: return "UnknownIdentity";
        case G2_PRECONDITION_VIOLATED: return "PreconditionViolated";
        case G2_DENOMINATOR_NEAR_ZERO: return "DenominatorNearZero";
        case G2_POLE_ENCOUNTERED: return "PoleEncountered";
        case G2_INVALID_CONFIG: return "InvalidConfig";
        case G2_PARSE_ERROR: return "ParseError";
        case G2_INVALID_ARGUMENT: return "InvalidArgument";
        case G2_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* g2_last_error(void) { return last_error.c_str(); }

void g2_string_free(char* s) { std::free(s); }

g2_status g2_parse_complex(const char* text, g2_complex* out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = from_cplx(parse_complex(text));
    });
}

g2_status g2_format_complex(g2_complex z, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = copy_string(format_complex(to_cplx(z)));
    });
}

g2_status g2_period_matrix_new(g2_complex tau1, g2_complex tau2, g2_complex tau12, g2_period_matrix** out) {
    return guarded([&] {
        require(out, "out");
        *out = new g2_period_matrix{make_period_matrix(to_cplx(tau1), to_cplx(tau2), to_cplx(tau12))};
    });
}

void g2_period_matrix_free(g2_period_matrix* omega) { delete omega; }

g2_status g2_theta(const char* characteristic, g2_complex u, g2_complex v, const g2_period_matrix* omega,
                   double tail_tolerance, g2_complex* out) {
    return guarded([&] {
        require(characteristic, "characteristic");
        require(omega, "omega");
        require(out, "out");
        const Characteristic ch = Characteristic::parse(characteristic);
        *out = from_cplx(theta(ch, {to_cplx(u), to_cplx(v)}, omega->omega, options(tail_tolerance)));
    });
}

g2_status g2_hyperelliptic_f(const char* characteristic, g2_complex y, g2_complex z, const g2_period_matrix* omega,
                             double tail_tolerance, g2_complex* out) {
    return guarded([&] {
        require(characteristic, "characteristic");
        require(omega, "omega");
        require(out, "out");
        const Characteristic ch = Characteristic::parse(characteristic);
        *out = from_cplx(F(ch, to_cplx(y), to_cplx(z), omega->omega, options(tail_tolerance)));
    });
}

g2_status g2_odd_half_periods(const g2_period_matrix* omega, g2_complex alpha[6], g2_complex beta[6]) {
    return guarded([&] {
        require(omega, "omega");
        require(alpha, "alpha");
        require(beta, "beta");
        const auto pairs = odd_half_periods(omega->omega);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            alpha[i] = from_cplx(pairs[i].alpha);
            beta[i] = from_cplx(pairs[i].beta);
        }
    });
}

g2_status g2_catalog_text(char** out) {
    return guarded([&] {
        require(out, "out");
        *out = copy_string(catalog_text());
    });
}

g2_status g2_suite_config_new(g2_suite_config** out) {
    return guarded([&] {
        require(out, "out");
        *out = new g2_suite_config{};
    });
}

void g2_suite_config_free(g2_suite_config* config) { delete config; }

g2_status g2_suite_config_set_families(g2_suite_config* config, const char* families) {
    return guarded([&] {
        require(config, "config");
        require(families, "families");
        config->config.families = parse_families(families);
    });
}

g2_status g2_suite_config_set_trials(g2_suite_config* config, int trials) {
    return guarded([&] {
        require(config, "config");
        config->config.trials = trials;
    });
}

g2_status g2_suite_config_set_seed(g2_suite_config* config, uint64_t seed) {
    return guarded([&] {
        require(config, "config");
        config->config.seed = seed;
    });
}

g2_status g2_suite_config_set_tol(g2_suite_config* config, double tol) {
    return guarded([&] {
        require(config, "config");
        config->config.tol = tol;
    });
}

g2_status g2_suite_config_set_tail_tolerance(g2_suite_config* config, double tail_tolerance) {
    return guarded([&] {
        require(config, "config");
        config->config.tail_tolerance = tail_tolerance;
    });
}

g2_status g2_suite_config_set_family_tol(g2_suite_config* config, const char* family, double tol) {
    return guarded([&] {
        require(config, "config");
        require(family, "family");
        const auto f = family_from_name(family);
        if (!f) throw Error(ErrorCode::InvalidConfig, "unknown identity family '" + std::string(family) + "'");
        config->config.tol_overrides[*f] = tol;
    });
}

g2_status g2_suite_config_set_threads(g2_suite_config* config, unsigned threads) {
    return guarded([&] {
        require(config, "config");
        config->config.threads = threads;
    });
}

g2_status g2_run_suite(const g2_suite_config* config, g2_report** out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        *out = new g2_report{run_suite(config->config)};
    });
}

void g2_report_free(g2_report* report) { delete report; }

int g2_report_passed(const g2_report* report) { return report && report->report.pass ? 1 : 0; }

g2_status g2_report_json(const g2_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = copy_string(report_json(report->report));
    });
}

g2_status g2_report_table(const g2_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = copy_string(report_table(report->report));
    });
}

}  // extern "C"
