#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "g2theta/harness.hpp"
#include "g2theta/hyperelliptic.hpp"
#include "support.hpp"

using namespace g2theta;
using testing_support::Sampler;

namespace {

int failed = 0;

void report(int n, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

struct Summary {
    bool ok = true;
    double worst = 0.0;
    int resamples = 0;
    int trials = 0;
    int entries = 0;
};

Summary summarize(const Report& r) {
    Summary s;
    s.ok = r.pass;
    for (const IdentityResult& e : r.results) {
        s.worst = std::max(s.worst, e.max_rel);
        s.resamples += e.resamples;
        s.trials += e.trials;
        ++s.entries;
        if (e.failures > 0) std::printf("    %s: %d failures, max_rel %s\n", e.id.c_str(), e.failures, sci(e.max_rel).c_str());
    }
    return s;
}

SuiteConfig suite(std::vector<Family> families, int trials, double tol) {
    SuiteConfig c;
    c.families = std::move(families);
    c.trials = trials;
    c.tol = tol;
    c.threads = 1;
    return c;
}

void theta_addition() {
    const auto start = std::chrono::steady_clock::now();
    const Summary s = summarize(run_suite(suite({Family::theta_addition}, 200, 1e-8)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, s.ok && s.entries == 16 && secs < 60.0,
           "theta-add-1..16 x 200, max_rel " + sci(s.worst) + ", " + sci(secs) + " s single-threaded");
}

void f_addition() {
    const Summary s = summarize(run_suite(suite({Family::f_addition}, 200, 1e-7)));
    const bool few = s.resamples < 0.05 * s.trials;
    report(2, s.ok && few && s.entries == 15,
           "f-add-1..15 x 200, max_rel " + sci(s.worst) + ", resamples " + std::to_string(s.resamples) + "/" +
               std::to_string(s.trials));
}

void kossak() {
    bool ok = true;
    double worst = 0.0;
    const IdentitySpec& k1 = builtin_identity("kossak-1");
    for (int t = 0; t < 200; ++t) {
        TrialRng rng(42, k1.id, t);
        const PeriodMatrix om = sample_moduli(rng);
        const double r = evaluate_identity(k1, sample_binding(rng, k1, om), om).relative;
        worst = std::max(worst, r);
        ok = ok && r < 1e-8;
    }
    for (const char* id : {"kossak-2", "kossak-3"}) {
        const IdentitySpec& spec = builtin_identity(id);
        for (int h = 0; h < 6; ++h) {
            for (int t = 0; t < 50; ++t) {
                TrialRng rng(42, id, static_cast<std::uint64_t>(h * 50 + t));
                const PeriodMatrix om = sample_moduli(rng);
                Binding b = sample_binding(rng, spec, om);
                const HalfPeriodPair hp = odd_half_periods(om)[h];
                b.set(Symbol::alpha, hp.alpha);
                b.set(Symbol::beta, hp.beta);
                const double r = evaluate_identity(spec, b, om).relative;
                worst = std::max(worst, r);
                ok = ok && r < 1e-8;
            }
        }
    }
    report(3, ok, "kossak-1 x 200 generic, kossak-2/3 x 6 half-periods x 50, max_rel " + sci(worst));
}

void riemann_master() {
    const Summary s = summarize(run_suite(suite({Family::riemann, Family::master}, 200, 1e-8)));
    report(4, s.ok && s.entries == 2, "riemann and master x 200, max_rel " + sci(s.worst));
}

void appendix() {
    const Summary s = summarize(run_suite(suite({Family::appendix}, 50, 1e-8)));
    report(5, s.ok && s.entries == 15, "appendix-A1..A15 x 50, max_rel " + sci(s.worst));
}

void oracle_equivalence() {
    Sampler s(6);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const ThetaArgs args{s.point(om), s.point(om)};
        const ThetaSum sum = theta_sum(ch, args, om);
        const cplx ref = testing_support::brute(ch, args.u, args.v, om, sum.radius + 8);
        worst = std::max(worst, std::abs(sum.value - ref) / std::max(1.0, sum.magnitude));
    }
    report(6, worst < 1e-12, "50 inputs against the brute-force sum at R+8, worst scaled error " + sci(worst));
}

void structure() {
    Sampler s(7);
    double zeros = 0.0, swap = 0.0, shift = 0.0, phase = 0.0, factor = 0.0;
    for (int k = 0; k < 10; ++k) {
        const PeriodMatrix om = s.omega();
        for (const Characteristic& ch : testing_support::kOdd) zeros = std::max(zeros, std::abs(theta(ch, {0.0, 0.0}, om)));
    }
    for (int k = 0; k < 20; ++k) {
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const cplx u = s.point(om), v = s.point(om);
        const cplx a = theta(ch, {u, v}, om);
        swap = std::max(swap, std::abs(a - theta(ch.swapped(), {v, u}, om.swapped())) / std::max(1.0, std::abs(a)));
    }
    for (int k = 0; k < 16; ++k) {
        const HalfPeriod hp{k & 1, (k >> 1) & 1, (k >> 2) & 1, (k >> 3) & 1};
        const PeriodMatrix om = s.omega();
        const Characteristic ch = s.characteristic();
        const ThetaArgs args{s.point(om), s.point(om)};
        const ThetaArgs d = hp.offset(om);
        const cplx direct = theta(ch, {args.u + d.u, args.v + d.v}, om);
        const cplx path = half_period_shifted_theta(ch, hp, args, om);
        shift = std::max(shift, std::abs(direct - path) / std::max(1.0, std::abs(direct)));
    }
    for (int k = 0; k < 20; ++k) {
        const PeriodMatrix om = s.omega();
        const int a = s.integer(-2, 3), c = s.integer(-2, 3), b = s.integer(-2, 3), d = s.integer(-2, 3);
        const cplx u = s.point(om), v = s.point(om);
        const ReducedCharacteristic red = reduce_characteristic(a, c, b, d);
        const cplx ours = red.phase * theta(red.ch, {u, v}, om);
        const cplx raw = oracle::brute_force_theta(a, c, b, d, u, v, testing_support::moduli(om), 16);
        phase = std::max(phase, std::abs(ours - raw) / std::max(1.0, std::abs(raw)));
    }
    for (int k = 0; k < 10; ++k) {
        const cplx t1{s.uniform(-0.5, 0.5), s.uniform(0.8, 2.0)};
        const cplx t2{s.uniform(-0.5, 0.5), s.uniform(0.8, 2.0)};
        const PeriodMatrix om = make_period_matrix_any_sign(t1, t2, 0.0);
        const Characteristic ch = s.characteristic();
        const cplx u = s.point(om), v = s.point(om);
        const cplx two = theta(ch, {u, v}, om);
        const cplx one = oracle::genus1_theta(ch.a, ch.b, u, t1, 16) * oracle::genus1_theta(ch.c, ch.d, v, t2, 16);
        factor = std::max(factor, std::abs(two - one) / std::max(1.0, std::abs(one)));
    }
    const bool ok = zeros < 1e-10 && swap < 1e-12 && shift < 1e-10 && phase < 1e-12 && factor < 1e-10;
    report(7, ok,
           "odd zeros " + sci(zeros) + ", column swap " + sci(swap) + ", 16 shifts " + sci(shift) + ", phases " +
               sci(phase) + ", tau12=0 factorization " + sci(factor));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_cli(const std::string& out) {
    const std::string cmd = std::string("\"") + G2THETA_CLI_PATH +
                            "\" verify --family all --trials 100 --seed 42 --tol 1e-7 --json " + out + " >/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void determinism() {
    const std::string a = "acceptance_run1.json", b = "acceptance_run2.json";
    std::remove(a.c_str());
    std::remove(b.c_str());
    const int ea = run_cli(a);
    const int eb = run_cli(b);
    const std::string ja = slurp(a), jb = slurp(b);
    const bool ok = ea == 0 && eb == 0 && !ja.empty() && ja == jb;
    report(8, ok,
           "verify --family all --trials 100 --seed 42 exits " + std::to_string(ea) + "/" + std::to_string(eb) +
               (ja == jb ? ", reports byte-identical" : ", reports differ") + " (" + std::to_string(ja.size()) +
               " bytes)");
}

void typo_regression() {
    const IdentitySpec& fixed = builtin_identity("theta-add-1");
    const std::optional<IdentitySpec> printed = printed_variant("theta-add-1");
    if (!printed) {
        report(9, false, "no printed variant of theta-add-1");
        return;
    }
    double fixed_worst = 0.0;
    std::vector<double> wrong;
    for (int t = 0; t < 200; ++t) {
        TrialRng rng(42, "typo-regression", t);
        const PeriodMatrix om = sample_moduli(rng);
        const Binding b = sample_binding(rng, fixed, om);
        fixed_worst = std::max(fixed_worst, evaluate_identity(fixed, b, om).relative);
        wrong.push_back(evaluate_identity(*printed, b, om).relative);
    }
    std::sort(wrong.begin(), wrong.end());
    const double median = wrong[wrong.size() / 2];
    const auto small = std::lower_bound(wrong.begin(), wrong.end(), 1e-3) - wrong.begin();
    const bool ok = fixed_worst < 1e-8 && wrong.front() > 1e-8 && median > 1e-3;
    report(9, ok,
           "theta-add-1 squared factor max_rel " + sci(fixed_worst) + "; printed unsquared variant min_rel " +
               sci(wrong.front()) + ", median_rel " + sci(median) + ", " + std::to_string(small) +
               "/200 samples below 1e-3");
}

}  // namespace

int main() {
    const std::pair<int, void (*)()> steps[] = {{1, theta_addition}, {2, f_addition},       {3, kossak},
                                                {4, riemann_master}, {5, appendix},         {6, oracle_equivalence},
                                                {7, structure},      {8, determinism},      {9, typo_regression}};
    for (const auto& [n, fn] : steps) {
        try {
            fn();
        } catch (const std::exception& e) {
            report(n, false, std::string("threw: ") + e.what());
        }
    }
    std::printf("%d of 9 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
