#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockbundle/report.hpp"

namespace fockbundle::suites {

enum class Suite { Fock, Charts, Propagator, Veronese, Spinrep, Classical, All };
enum class Format { Json, Csv, Text };
enum class Axis { Theta, T, NMax };

/// Invalid configuration; maps to exit code 2.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

Suite parse_suite(const std::string& s);
std::string to_string(Suite s);
Format parse_format(const std::string& s);
Axis parse_axis(const std::string& s);
std::string to_string(Axis a);

struct SuiteConfig {
    Suite suite = Suite::All;
    std::vector<double> theta_list{1.0};
    long n_max = 48;
    double tol = 1e-10;
    double g = 1.0;
    double t = 1.0;
    std::optional<double> omega;
    std::optional<double> delta;
    std::uint64_t seed = 20240601;
    std::string out;
    Format format = Format::Json;
    /// Check keys ("<theta>:<report>.<check>" or "<report>.<check>") allowed to fail.
    std::vector<std::string> whitelist;
    bool timings = false;

    /// Throws ConfigError.
    void validate() const;
};

json config_to_json(const SuiteConfig& c);

struct RunResult {
    json report;  // {version, config, checks[], pass}
    bool pass = false;
};

/// Executes the selected suites for every theta. Suites run in parallel across
/// theta (capped by FOCKBUNDLE_THREADS); checks are assembled in theta order.
RunResult run(const SuiteConfig& config);

std::string render(const json& report, Format format);

/// Runs, writes the report to config.out (stdout when empty) and returns the
/// exit code: 0 pass, 1 failing check, 2 configuration error.
int run_and_write(const SuiteConfig& config, std::string* error = nullptr);

/// One CSV row per axis value: observables plus the max deviation of every check.
std::string sweep(const SuiteConfig& config, Axis axis, const std::vector<double>& values);

int worker_limit();

}  // namespace fockbundle::suites
