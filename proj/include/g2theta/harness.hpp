#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "g2theta/identity.hpp"

namespace g2theta {

enum class Family { riemann, master, kossak, theta_addition, f_addition, appendix };

inline constexpr std::array<Family, 6> kAllFamilies = {Family::riemann,        Family::master,     Family::kossak,
                                                       Family::theta_addition, Family::f_addition, Family::appendix};

std::string_view family_name(Family f) noexcept;
/// Accepts the names above; "all" is handled by parse_families.
std::optional<Family> family_from_name(std::string_view name) noexcept;
/// Comma-separated list, or "all". Throws InvalidConfig.
std::vector<Family> parse_families(std::string_view text);

/// Identity ids in a family, in catalog order. f-addition yields f-add-1..15.
std::vector<std::string> family_ids(Family f);

struct ModuliRanges {
    double im_diag_min = 0.8;
    double im_diag_max = 2.0;
    double re_abs_max = 0.5;
    double im_offdiag_fraction = 0.5;  // Im t12 in (0, fraction * sqrt(Im t1 Im t2)]
};

struct PointBox {
    double re_abs_max = 1.0;
    double im_fraction = 0.25;  // |Im| <= fraction * min(Im t1, Im t2)
};

struct SuiteConfig {
    std::vector<Family> families;
    int trials = 100;
    std::uint64_t seed = 42;
    double tol = 1e-7;
    double tail_tolerance = 1e-12;
    std::map<Family, double> tol_overrides;
    ModuliRanges moduli;
    PointBox box;
    unsigned threads = 1;
    int max_attempts = 64;  // draws per trial before it counts as a failure
};

/// Fraction of trials that may need a redraw before the run fails.
inline constexpr double kMaxResampleRate = 0.2;

/// mt19937_64 seeded from (seed, id, trial) through splitmix64, so each
/// identity and trial owns an independent stream.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::string_view id, std::uint64_t trial);
    explicit TrialRng(std::uint64_t state) : engine_(state) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform in {0, ..., n-1}.
    std::size_t index(std::size_t n);

private:
    std::mt19937_64 engine_;
};

PeriodMatrix sample_moduli(TrialRng& rng, const ModuliRanges& ranges = {});

/// Draws every free symbol from the point box. For specs that need the zero
/// locus, (alpha, beta) is then replaced by a random odd half-period.
Binding sample_binding(TrialRng& rng, const IdentitySpec& spec, const PeriodMatrix& omega, const PointBox& box = {});

/// The four points of an F-addition trial.
Binding sample_f_binding(TrialRng& rng, const PeriodMatrix& omega, const PointBox& box = {});

struct IdentityResult {
    std::string id;
    std::string equation;
    int trials = 0;
    double max_rel = 0.0;
    double mean_rel = 0.0;
    int failures = 0;
    int resamples = 0;
    double tol = 0.0;
};

struct Report {
    SuiteConfig config;
    std::vector<IdentityResult> results;
    bool pass = false;
};

/// Throws InvalidConfig on an empty family list, trials < 1, tol <= 0 or a
/// tail tolerance outside (0, 1).
Report run_suite(const SuiteConfig& config);

/// {"config":{...},"results":[...],"verdict":"pass"} with a fixed key order.
std::string report_json(const Report& report);
/// Plain-text table, one row per identity.
std::string report_table(const Report& report);

}  // namespace g2theta
