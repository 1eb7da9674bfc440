#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "g2theta/g2theta.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int code;
};

void check(g2_status status) {
    if (status != G2_OK) {
        std::cerr << "error: " << g2_status_name(status) << ": " << g2_last_error() << "\n";
        throw Failure{kExitUsage};
    }
}

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { g2_string_free(p); }
};

std::string format(g2_complex z) {
    OwnedString s;
    check(g2_format_complex(z, &s.p));
    return s.p;
}

g2_complex parse(const std::string& text) {
    g2_complex z{};
    check(g2_parse_complex(text.c_str(), &z));
    return z;
}

using MatrixPtr = std::unique_ptr<g2_period_matrix, decltype(&g2_period_matrix_free)>;

MatrixPtr make_matrix(const std::string& t1, const std::string& t2, const std::string& t12) {
    g2_period_matrix* m = nullptr;
    check(g2_period_matrix_new(parse(t1), parse(t2), parse(t12), &m));
    return {m, g2_period_matrix_free};
}

struct ModuliFlags {
    std::string tau1, tau2, tau12;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tau1", tau1, "t1 as RE+IMi")->required();
        cmd->add_option("--tau2", tau2, "t2 as RE+IMi")->required();
        cmd->add_option("--tau12", tau12, "t12 as RE+IMi")->required();
    }
};

struct PointFlags {
    std::string ch, u, v;
    double tail_tol = 1e-12;

    void attach(CLI::App* cmd) {
        cmd->add_option("--char", ch, "characteristic acbd")->required();
        cmd->add_option("--u", u, "first argument as RE+IMi")->required();
        cmd->add_option("--v", v, "second argument as RE+IMi")->required();
        cmd->add_option("--tail-tol", tail_tol, "absolute tail bound");
    }
};

// Values under the tail bound are indistinguishable from zero.
std::string shown(g2_complex z, double tail_tol) {
    if (std::hypot(z.re, z.im) < tail_tol) return format({0.0, 0.0});
    return format(z);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-2 theta functions and identity verification"};
    app.require_subcommand(1);

    ModuliFlags eval_moduli;
    PointFlags eval_point;
    auto* eval = app.add_subcommand("eval", "evaluate theta[acbd](u, v)");
    eval_point.attach(eval);
    eval_moduli.attach(eval);

    ModuliFlags f_moduli;
    PointFlags f_point;
    auto* feval = app.add_subcommand("f-eval", "evaluate F[acbd](u, v) = theta[acbd] / theta[0011]");
    f_point.attach(feval);
    f_moduli.attach(feval);

    ModuliFlags zero_moduli;
    auto* zeros = app.add_subcommand("zeros", "print the six odd half-periods (alpha, beta)");
    zero_moduli.attach(zeros);

    std::string family = "all";
    int trials = 100;
    std::uint64_t seed = 42;
    double tol = 1e-7;
    double tail_tol = 1e-12;
    unsigned threads = 1;
    std::string json_path;
    auto* verify = app.add_subcommand("verify", "run the seeded identity suite");
    verify->add_option("--family", family, "family name, comma list or all");
    verify->add_option("--trials", trials, "samples per identity");
    verify->add_option("--seed", seed, "64-bit seed");
    verify->add_option("--tol", tol, "relative residual bound");
    verify->add_option("--tail-tol", tail_tol, "theta tail bound");
    verify->add_option("--threads", threads, "worker threads");
    verify->add_option("--json", json_path, "write the JSON report here");

    auto* catalog = app.add_subcommand("catalog", "print the identity catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (eval->parsed() || feval->parsed()) {
            const bool is_f = feval->parsed();
            const PointFlags& p = is_f ? f_point : eval_point;
            const ModuliFlags& m = is_f ? f_moduli : eval_moduli;
            const auto omega = make_matrix(m.tau1, m.tau2, m.tau12);
            g2_complex out{};
            if (is_f) {
                check(g2_hyperelliptic_f(p.ch.c_str(), parse(p.u), parse(p.v), omega.get(), p.tail_tol, &out));
            } else {
                check(g2_theta(p.ch.c_str(), parse(p.u), parse(p.v), omega.get(), p.tail_tol, &out));
            }
            std::cout << shown(out, p.tail_tol) << "\n";
            return kExitPass;
        }
        if (zeros->parsed()) {
            const auto omega = make_matrix(zero_moduli.tau1, zero_moduli.tau2, zero_moduli.tau12);
            g2_complex alpha[6];
            g2_complex beta[6];
            check(g2_odd_half_periods(omega.get(), alpha, beta));
            for (int i = 0; i < 6; ++i) std::cout << format(alpha[i]) << " " << format(beta[i]) << "\n";
            return kExitPass;
        }
        if (catalog->parsed()) {
            OwnedString text;
            check(g2_catalog_text(&text.p));
            std::cout << text.p;
            return kExitPass;
        }

        std::unique_ptr<g2_suite_config, decltype(&g2_suite_config_free)> config(nullptr, g2_suite_config_free);
        {
            g2_suite_config* c = nullptr;
            check(g2_suite_config_new(&c));
            config.reset(c);
        }
        check(g2_suite_config_set_families(config.get(), family.c_str()));
        check(g2_suite_config_set_trials(config.get(), trials));
        check(g2_suite_config_set_seed(config.get(), seed));
        check(g2_suite_config_set_tol(config.get(), tol));
        check(g2_suite_config_set_tail_tolerance(config.get(), tail_tol));
        check(g2_suite_config_set_threads(config.get(), threads));

        g2_report* raw = nullptr;
        check(g2_run_suite(config.get(), &raw));
        std::unique_ptr<g2_report, decltype(&g2_report_free)> report(raw, g2_report_free);

        if (!json_path.empty()) {
            OwnedString json;
            check(g2_report_json(report.get(), &json.p));
            std::ofstream out(json_path, std::ios::binary);
            out << json.p;
            if (!out) {
                std::cerr << "error: cannot write " << json_path << "\n";
                return kExitUsage;
            }
        }
        OwnedString table;
        check(g2_report_table(report.get(), &table.p));
        std::cout << table.p;
        return g2_report_passed(report.get()) ? kExitPass : kExitFail;
    } catch (const Failure& f) {
        return f.code;
    }
}
