#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockbundle/suites.hpp"

namespace fs = fockbundle::suites;

namespace {

struct Options {
    std::string suite = "all";
    std::vector<double> theta;
    long n_max = 48;
    double tol = 1e-10;
    double g = 1.0;
    double t = 1.0;
    std::optional<double> omega;
    std::optional<double> delta;
    std::uint64_t seed = 20240601;
    std::string out;
    std::string format = "json";
    std::vector<std::string> whitelist;
    bool timings = false;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--suite", o.suite, "fock, charts, propagator, veronese, spinrep, classical or all");
    cmd->add_option("--theta", o.theta, "detuning theta (repeatable)");
    cmd->add_option("--nmax", o.n_max, "largest basis index on the verification grid (>= 4)");
    cmd->add_option("--tol", o.tol, "tolerance for operator identities");
    cmd->add_option("--g", o.g, "coupling g");
    cmd->add_option("--t", o.t, "time t (the propagator uses g t)");
    cmd->add_option("--omega", o.omega, "field frequency omega");
    cmd->add_option("--delta", o.delta, "atomic splitting delta");
    cmd->add_option("--seed", o.seed, "seed for sampled checks");
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--whitelist", o.whitelist, "check key allowed to fail (repeatable)");
    cmd->add_flag("--timings", o.timings, "include elapsed_ms in check records");
}

fs::SuiteConfig to_config(const Options& o) {
    fs::SuiteConfig c;
    c.suite = fs::parse_suite(o.suite);
    c.n_max = o.n_max;
    c.tol = o.tol;
    c.g = o.g;
    c.t = o.t;
    c.omega = o.omega;
    c.delta = o.delta;
    c.seed = o.seed;
    c.out = o.out;
    c.format = fs::parse_format(o.format);
    c.whitelist = o.whitelist;
    c.timings = o.timings;
    if (!o.theta.empty()) {
        c.theta_list = o.theta;
    } else if (o.omega && o.delta) {
        if (o.g == 0.0) throw fs::ConfigError("g must be nonzero");
        c.theta_list = {(*o.delta - *o.omega) / (2.0 * o.g)};
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for the Jaynes-Cummings operator bundle"};
    app.require_subcommand(1);

    Options vo;
    auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
    add_common(verify, vo);
    verify->add_option("--format", vo.format, "json, csv or text");

    Options so;
    std::string axis = "theta";
    std::vector<double> values;
    auto* sweep = app.add_subcommand("sweep", "CSV of observables and deviations along one parameter axis");
    add_common(sweep, so);
    sweep->add_option("--axis", axis, "theta, t or nmax");
    sweep->add_option("--values", values, "axis values")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            std::string err;
            const int code = fs::run_and_write(to_config(vo), &err);
            if (!err.empty()) std::cerr << "fockbundle: " << err << "\n";
            return code;
        }
        fs::SuiteConfig c = to_config(so);
        if (so.suite == "all") c.suite = fs::Suite::Propagator;
        const std::string csv = fs::sweep(c, fs::parse_axis(axis), values);
        if (c.out.empty()) {
            std::cout << csv;
        } else {
            std::ofstream f(c.out, std::ios::binary);
            if (!f) {
                std::cerr << "fockbundle: cannot open output file '" << c.out << "'\n";
                return 2;
            }
            f << csv;
        }
        return 0;
    } catch (const fs::ConfigError& e) {
        std::cerr << "fockbundle: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fockbundle: " << e.what() << "\n";
        return 2;
    }
}
