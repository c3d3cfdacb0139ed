#include "fockbundle/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "fockbundle/berry.hpp"
#include "fockbundle/jc_bundle.hpp"
#include "fockbundle/spinrep.hpp"
#include "fockbundle/veronese.hpp"

namespace fockbundle::suites {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kClassicalTol = 1e-12;
constexpr int kClassicalPoints = 1000;
constexpr int kSpinPairs = 100;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

bool selected(const SuiteConfig& c, Suite s) { return c.suite == Suite::All || c.suite == s; }

// A check tagged with the report it belongs to and the theta it ran at.
struct Tagged {
    std::string group;
    std::optional<double> theta;
    CheckRecord rec;
};

void take(std::vector<Tagged>& out, const VerificationReport& rep, std::optional<double> theta) {
    for (const auto& c : rep.checks) out.push_back({rep.suite, theta, c});
}

CheckRecord from_equality(std::string name, std::string anchor, const EqualityReport& eq) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.max_deviation = eq.max_deviation;
    rec.tolerance = eq.tolerance;
    rec.pass = eq.pass;
    if (!eq.excluded.empty()) rec.excluded[0] = eq.excluded;
    return rec;
}

CheckRecord set_check(std::string name, std::string anchor, const std::set<long>& computed,
                      const std::set<long>& expected) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.max_deviation = computed == expected ? 0.0 : 1.0;
    rec.tolerance = 0.0;
    rec.pass = computed == expected;
    if (!computed.empty()) rec.excluded[0] = computed;
    rec.details["computed"] = std::vector<long>(computed.begin(), computed.end());
    rec.details["expected"] = std::vector<long>(expected.begin(), expected.end());
    return rec;
}

FockOperator random_operator(std::mt19937_64& rng, double theta) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    FockOperator op;
    for (int d = -2; d <= 2; ++d) {
        const cplx c0(gauss(rng), gauss(rng));
        const cplx c1(gauss(rng), gauss(rng));
        const Symbol coeff = Symbol(c0) + Symbol(c1) * sqrt(Symbol::number(0) + Symbol(theta * theta + 1.0));
        op += FockOperator::shift(d, coeff);
    }
    return op;
}

void fock_checks(std::vector<Tagged>& out, const SuiteConfig& c, double theta) {
    VerificationReport rep;
    rep.suite = "fock";
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    rep.add(from_equality("ccr", "[a, a^dagger] = 1", op_equal(a * ad - ad * a, FockOperator::identity(), c.n_max, 0.0)));

    const FockOperator r0 = jc::r_op(theta, 0);
    const FockOperator r1 = jc::r_op(theta, 1);
    CheckRecord ground;
    ground.name = "r_on_vacuum";
    ground.anchor = "R(N)|0> = |theta|, R(N+1)|0> = sqrt(1 + theta^2)";
    ground.max_deviation = std::max(std::abs(r0.matrix_element(0, 0) - std::abs(theta)),
                                    std::abs(r1.matrix_element(0, 0) - std::sqrt(1.0 + theta * theta)));
    ground.tolerance = c.tol;
    ground.pass = ground.max_deviation <= c.tol;
    rep.add(ground);

    const double sigma = sigma_for(theta);
    const std::set<long> vac{0};
    const FockOperator plus = inverse(r0 + FockOperator::scalar(theta), sigma);
    const FockOperator minus = inverse(r0 - FockOperator::scalar(theta), sigma);
    rep.add(set_check("support_inv_r_plus_theta", "(R(N) + theta)|0> = (|theta| + theta)|0>",
                      plus.singular_support(c.n_max), theta <= 0 ? vac : std::set<long>{}));
    rep.add(set_check("support_inv_r_minus_theta", "(R(N) - theta)|0> = (|theta| - theta)|0>",
                      minus.singular_support(c.n_max), theta >= 0 ? vac : std::set<long>{}));

    std::mt19937_64 rng(c.seed);
    const FockOperator x = random_operator(rng, theta);
    const FockOperator y = random_operator(rng, theta);
    const FockOperator z = random_operator(rng, theta);
    const long grid = std::min<long>(c.n_max, 32);
    // entries grow like n^{3/2} and the product sums several of them, so the bound is relative
    const FockOperator xyz = (x * y) * z;
    double scale = 1.0;
    for (long n = 0; n <= grid; ++n)
        if (auto col = xyz.column(n))
            for (const auto& [m, v] : col->coeffs()) scale = std::max(scale, std::abs(v));
    CheckRecord assoc = from_equality("associativity", "(AB)C = A(BC)", op_equal(xyz, x * (y * z), grid, 1e-12 * scale));
    assoc.details["entry_scale"] = scale;
    rep.add(assoc);
    rep.add(from_equality("adjoint_antihomomorphism", "(AB)^dagger = B^dagger A^dagger",
                          op_equal((x * y).adjoint(), y.adjoint() * x.adjoint(), grid, c.tol)));
    rep.add(from_equality("adjoint_involution", "(A^dagger)^dagger = A", op_equal(x.adjoint().adjoint(), x, grid, 0.0)));
    take(out, rep, theta);
}

CheckRecord dirac_check(const jc::DiracStringMap& m) {
    CheckRecord rec;
    rec.name = "dirac_string_" + to_string(m.label);
    rec.anchor = m.label == ChartLabel::I ? "D_I = F x F x R - F x {|0>} x R_{<=0}"
                                          : "D_II = F x F x R - {|0>} x {|0>} x R_{>=0}";
    std::size_t diff = 0;
    for (const auto& [slot, s] : m.missing) diff += s.size();
    for (const auto& [slot, s] : m.extra) diff += s.size();
    rec.max_deviation = static_cast<double>(diff);
    rec.tolerance = 0.0;
    rec.pass = m.agree;
    rec.excluded = m.computed;
    rec.details = jc::to_json(m);
    return rec;
}

void chart_checks(std::vector<Tagged>& out, const SuiteConfig& c, double theta) {
    jc::JCParams p;
    p.theta = theta;
    p.g = c.g;
    for (ChartLabel label : {ChartLabel::I, ChartLabel::II}) {
        take(out, jc::chart_report(jc::build_chart(p, label), c.n_max, c.tol), theta);
        out.push_back({"dirac", theta, dirac_check(jc::dirac_string_map(p, label, c.n_max))});
    }
    take(out, jc::qdm_report(p, c.n_max, c.tol), theta);
    take(out, jc::transition_report(p, c.n_max, c.tol), theta);
    take(out, jc::projector_report(p, c.n_max, c.tol), theta);
    VerificationReport s;
    s.suite = "spectral";
    s.add(jc::spectral_decomposition_check(p, c.n_max, c.tol));
    take(out, s, theta);
}

jc::JCParams propagator_params(const SuiteConfig& c, double theta) {
    jc::JCParams p;
    p.theta = theta;
    p.g = c.g;
    p.t = c.t;
    p.omega = c.omega;
    p.delta = c.delta;
    return p;
}

void propagator_checks(std::vector<Tagged>& out, const SuiteConfig& c, double theta) {
    const jc::JCParams p = propagator_params(c, theta);
    VerificationReport rep;
    rep.suite = "propagator";
    rep.add(jc::propagator_vs_oracle(p, c.n_max, c.tol));
    rep.add(check_unitary(jc::propagator_closed_form(p), c.n_max, c.tol));
    rep.add(jc::propagator_semigroup(p, c.t, 0.5, c.n_max, c.tol));
    take(out, rep, theta);
    if (p.omega && p.delta) take(out, jc::full_evolution_report(p, c.n_max, c.tol), theta);
}

void veronese_checks(std::vector<Tagged>& out, const SuiteConfig& c, double theta) {
    take(out, veronese::useful_formulas_report(theta, 4, c.n_max, c.tol), theta);
    VerificationReport comm;
    comm.suite = "veronese_commutation";
    const veronese::VeroneseFamily fam = veronese::build_family(theta, 5);
    for (auto [j, k] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{2, 1}})
        comm.add(veronese::commutation_check(fam, j, k, c.n_max, c.tol));
    take(out, comm, theta);
    for (int n = 1; n <= 5; ++n) {
        const veronese::LiftedColumn l = veronese::lift(veronese::build_family(theta, n));
        take(out, veronese::lift_report(l, c.n_max, c.tol), theta);
        take(out, veronese::projector_report(l, c.n_max, c.tol), theta);
    }
}

void spin_checks(std::vector<Tagged>& out, const SuiteConfig& c, double theta) {
    take(out, spin::nc_spin_report(theta, spin::Spin::One, c.n_max, c.tol), theta);
    take(out, spin::nc_spin_report(theta, spin::Spin::ThreeHalves, c.n_max, c.tol), theta);
    take(out, spin::tensor_breakdown_check(theta, c.n_max), theta);
}

void coordinate_checks(std::vector<Tagged>& out, const SuiteConfig& c, double theta) {
    jc::JCParams p;
    p.theta = theta;
    try {
        const jc::LocalCoordinate lc = jc::local_coordinate_z(p, c.n_max, c.tol);
        take(out, lc.checks, theta);
        CheckRecord rec;
        rec.name = "classical_limit_decay";
        rec.anchor = "<alpha|Z|alpha> -> Z_c = (x + iy)/(r + z)";
        rec.pass = lc.monotone;
        rec.max_deviation = lc.samples.empty() ? 0.0 : lc.samples.back().relative_error;
        rec.tolerance = 0.0;
        json samples = json::array();
        for (const auto& s : lc.samples)
            samples.push_back({{"radius", s.radius},
                               {"relative_error", s.relative_error},
                               {"support", s.support},
                               {"expectation", {s.expectation.real(), s.expectation.imag()}},
                               {"classical", {s.classical.real(), s.classical.imag()}}});
        rec.details["samples"] = samples;
        rec.details["criterion"] = "relative error strictly decreasing over the radii";
        out.push_back({"local_coordinate", theta, rec});
    } catch (const DomainError& e) {
        CheckRecord rec;
        rec.name = "coordinate_dirac_string";
        rec.anchor = "(R(N) + theta)^{-1} singular on |0> for theta <= 0";
        rec.excluded = e.states();
        const bool expected = e.states() == SlotStates{{0, {0}}};
        rec.pass = expected && theta <= 0.0;
        rec.max_deviation = rec.pass ? 0.0 : 1.0;
        out.push_back({"local_coordinate", theta, rec});
    }
}

std::vector<Tagged> theta_checks(const SuiteConfig& c, double theta) {
    std::vector<Tagged> out;
    if (selected(c, Suite::Fock)) fock_checks(out, c, theta);
    if (selected(c, Suite::Charts)) chart_checks(out, c, theta);
    if (selected(c, Suite::Propagator)) propagator_checks(out, c, theta);
    if (selected(c, Suite::Veronese)) veronese_checks(out, c, theta);
    if (selected(c, Suite::Spinrep)) spin_checks(out, c, theta);
    if (selected(c, Suite::Classical)) coordinate_checks(out, c, theta);
    return out;
}

std::vector<Tagged> global_checks(const SuiteConfig& c) {
    std::vector<Tagged> out;
    if (selected(c, Suite::Spinrep)) take(out, spin::classical_spin_report(c.seed, kSpinPairs, kClassicalTol), std::nullopt);
    if (selected(c, Suite::Classical)) take(out, berry::classical_report(c.seed, kClassicalPoints, kClassicalTol), std::nullopt);
    return out;
}

std::string check_key(const Tagged& t) {
    std::string k = t.group + "." + t.rec.name;
    if (t.theta) k = short_num(*t.theta) + ":" + k;
    return k;
}

bool whitelisted(const SuiteConfig& c, const Tagged& t) {
    const std::string full = check_key(t);
    const std::string bare = t.group + "." + t.rec.name;
    return std::find(c.whitelist.begin(), c.whitelist.end(), full) != c.whitelist.end() ||
           std::find(c.whitelist.begin(), c.whitelist.end(), bare) != c.whitelist.end();
}

}  // namespace

Suite parse_suite(const std::string& s) {
    static const std::map<std::string, Suite> m{{"fock", Suite::Fock},         {"charts", Suite::Charts},
                                                {"propagator", Suite::Propagator}, {"veronese", Suite::Veronese},
                                                {"spinrep", Suite::Spinrep},   {"classical", Suite::Classical},
                                                {"all", Suite::All}};
    auto it = m.find(s);
    if (it == m.end()) throw ConfigError("unknown suite '" + s + "'");
    return it->second;
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::Fock: return "fock";
        case Suite::Charts: return "charts";
        case Suite::Propagator: return "propagator";
        case Suite::Veronese: return "veronese";
        case Suite::Spinrep: return "spinrep";
        case Suite::Classical: return "classical";
        case Suite::All: return "all";
    }
    return "?";
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw ConfigError("unknown format '" + s + "'");
}

Axis parse_axis(const std::string& s) {
    if (s == "theta") return Axis::Theta;
    if (s == "t") return Axis::T;
    if (s == "nmax") return Axis::NMax;
    throw ConfigError("unknown sweep axis '" + s + "'");
}

std::string to_string(Axis a) {
    switch (a) {
        case Axis::Theta: return "theta";
        case Axis::T: return "t";
        case Axis::NMax: return "nmax";
    }
    return "?";
}

void SuiteConfig::validate() const {
    if (n_max < 4) throw ConfigError("n_max must be >= 4");
    if (!(tol > 0.0)) throw ConfigError("tol must be positive");
    if (theta_list.empty()) throw ConfigError("theta list must be nonempty");
    if (g == 0.0 || !std::isfinite(g)) throw ConfigError("g must be finite and nonzero");
    if (!std::isfinite(t)) throw ConfigError("t must be finite");
    for (double th : theta_list)
        if (!std::isfinite(th)) throw ConfigError("theta values must be finite");
    if (omega.has_value() != delta.has_value()) throw ConfigError("omega and delta must be given together");
    if (omega && delta) {
        const double derived = (*delta - *omega) / (2.0 * g);
        for (double th : theta_list)
            if (std::abs(th - derived) > 1e-12)
                throw ConfigError("theta " + num(th) + " does not match (delta - omega)/(2g) = " + num(derived));
    }
}

json config_to_json(const SuiteConfig& c) {
    json j{{"suite", to_string(c.suite)},
           {"theta", c.theta_list},
           {"n_max", c.n_max},
           {"tol", c.tol},
           {"g", c.g},
           {"t", c.t},
           {"seed", c.seed},
           {"whitelist", c.whitelist}};
    j["omega"] = c.omega ? json(*c.omega) : json(nullptr);
    j["delta"] = c.delta ? json(*c.delta) : json(nullptr);
    return j;
}

int worker_limit() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("FOCKBUNDLE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return n;
}

RunResult run(const SuiteConfig& config) {
    config.validate();
    std::vector<Tagged> all = global_checks(config);

    const std::size_t m = config.theta_list.size();
    std::vector<std::vector<Tagged>> per(m);
    const std::size_t workers = static_cast<std::size_t>(worker_limit());
    for (std::size_t start = 0; start < m; start += workers) {
        std::vector<std::future<std::vector<Tagged>>> jobs;
        const std::size_t end = std::min(m, start + workers);
        for (std::size_t i = start; i < end; ++i)
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, theta_checks,
                                      std::cref(config), config.theta_list[i]));
        for (std::size_t i = start; i < end; ++i) per[i] = jobs[i - start].get();
    }
    for (auto& v : per) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));

    RunResult r;
    r.pass = true;
    json checks = json::array();
    for (auto& t : all) {
        if (!config.timings) t.rec.elapsed_ms.reset();
        json j = to_json(t.rec);
        j["group"] = t.group;
        j["theta"] = t.theta ? json(*t.theta) : json(nullptr);
        j["key"] = check_key(t);
        if (!t.rec.pass && whitelisted(config, t)) {
            j["whitelisted"] = true;
        } else if (!t.rec.pass) {
            r.pass = false;
        }
        checks.push_back(std::move(j));
    }
    r.report = json{{"version", kVersion}, {"config", config_to_json(config)}, {"checks", checks}, {"pass", r.pass}};
    return r;
}

namespace {

std::string excluded_text(const json& ex) {
    std::string s;
    for (const auto& [slot, states] : ex.items()) {
        if (!s.empty()) s += ";";
        s += slot + ":{";
        bool first = true;
        for (const auto& n : states) {
            if (!first) s += " ";
            s += std::to_string(n.get<long>());
            first = false;
        }
        s += "}";
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

}  // namespace

std::string render(const json& report, Format format) {
    std::ostringstream os;
    if (format == Format::Json) {
        os << report.dump(2) << "\n";
    } else if (format == Format::Csv) {
        os << "key,group,theta,name,max_deviation,tolerance,pass,excluded_states\n";
        for (const auto& c : report.at("checks")) {
            os << csv_field(c.at("key").get<std::string>()) << "," << csv_field(c.at("group").get<std::string>()) << ","
               << (c.at("theta").is_null() ? "" : num(c.at("theta").get<double>())) << ","
               << csv_field(c.at("name").get<std::string>()) << "," << num(c.at("max_deviation").get<double>()) << ","
               << num(c.at("tolerance").get<double>()) << "," << (c.at("pass").get<bool>() ? "true" : "false") << ","
               << csv_field(excluded_text(c.at("excluded_states"))) << "\n";
        }
    } else {
        for (const auto& c : report.at("checks")) {
            const bool pass = c.at("pass").get<bool>();
            os << (pass ? "PASS" : (c.contains("whitelisted") ? "WHITELISTED" : "FAIL")) << "  "
               << c.at("key").get<std::string>() << "  max_deviation=" << short_num(c.at("max_deviation").get<double>());
            const std::string ex = excluded_text(c.at("excluded_states"));
            if (!ex.empty()) os << "  excluded=" << ex;
            os << "\n";
        }
        os << (report.at("pass").get<bool>() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    }
    return os.str();
}

int run_and_write(const SuiteConfig& config, std::string* error) {
    RunResult r;
    try {
        r = run(config);
    } catch (const ConfigError& e) {
        if (error) *error = e.what();
        return 2;
    } catch (const std::invalid_argument& e) {
        if (error) *error = e.what();
        return 2;
    }
    const std::string text = render(r.report, config.format);
    if (config.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(config.out, std::ios::binary);
        if (!f) {
            if (error) *error = "cannot open output file '" + config.out + "'";
            return 2;
        }
        f << text;
    }
    return r.pass ? 0 : 1;
}

std::string sweep(const SuiteConfig& config, Axis axis, const std::vector<double>& values) {
    if (values.empty()) throw ConfigError("sweep needs at least one axis value");
    struct Row {
        double value;
        bool pass;
        cplx u11;
        std::size_t dirac_i, dirac_ii, pjc;
        std::map<std::string, double> devs;
    };
    std::vector<Row> rows;
    std::vector<std::string> columns;
    for (double v : values) {
        SuiteConfig c = config;
        if (axis == Axis::Theta) c.theta_list = {v};
        if (axis == Axis::T) c.t = v;
        if (axis == Axis::NMax) {
            if (v != std::floor(v)) throw ConfigError("nmax axis values must be integers");
            c.n_max = static_cast<long>(v);
        }
        const RunResult r = run(c);
        Row row{v, r.pass, {}, 0, 0, 0, {}};
        const bool many = c.theta_list.size() > 1;
        for (const auto& chk : r.report.at("checks")) {
            std::string key = chk.at("group").get<std::string>() + "." + chk.at("name").get<std::string>();
            if (many && !chk.at("theta").is_null()) key = short_num(chk.at("theta").get<double>()) + ":" + key;
            row.devs[key] = chk.at("max_deviation").get<double>();
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
        }
        const double theta = c.theta_list.front();
        const jc::JCParams p = propagator_params(c, theta);
        row.u11 = jc::propagator_closed_form(p)(0, 0).matrix_element(0, 0);
        auto count = [](const SlotStates& s) {
            std::size_t n = 0;
            for (const auto& [slot, set] : s) n += set.size();
            return n;
        };
        row.dirac_i = count(jc::dirac_string_map(p, ChartLabel::I, c.n_max).computed);
        row.dirac_ii = count(jc::dirac_string_map(p, ChartLabel::II, c.n_max).computed);
        row.pjc = count(jc::projector_pjc(p).singular_support(c.n_max));
        rows.push_back(std::move(row));
    }
    std::sort(columns.begin(), columns.end());
    std::ostringstream os;
    os << to_string(axis) << ",pass,u11_00_re,u11_00_im,dirac_I_size,dirac_II_size,pjc_singular_size";
    for (const auto& col : columns) os << "," << csv_field(col);
    os << "\n";
    for (const auto& r : rows) {
        os << num(r.value) << "," << (r.pass ? "true" : "false") << "," << num(r.u11.real()) << "," << num(r.u11.imag())
           << "," << r.dirac_i << "," << r.dirac_ii << "," << r.pjc;
        for (const auto& col : columns) {
            os << ",";
            auto it = r.devs.find(col);
            if (it != r.devs.end()) os << num(it->second);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace fockbundle::suites
