// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed here.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "fockbundle/berry.hpp"
#include "fockbundle/jc_bundle.hpp"
#include "fockbundle/spinrep.hpp"
#include "fockbundle/suites.hpp"
#include "fockbundle/veronese.hpp"

using namespace fockbundle;

namespace {

int failures = 0;

void report(int id, const char* what, bool pass, const std::string& detail) {
    std::printf("%s  %2d  %-28s %s\n", pass ? "PASS" : "FAIL", id, what, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

jc::JCParams at(double theta, double t = 0.0) {
    jc::JCParams p;
    p.theta = theta;
    p.t = t;
    return p;
}

void c1_reconstruction() {
    const double tol = 1e-10;
    double worst = 0.0;
    for (double theta : {2.0, -2.0, 1.0, -1.0, 0.5, -0.5, 0.1})
        for (ChartLabel c : {ChartLabel::I, ChartLabel::II}) {
            const VerificationReport r = jc::chart_report(jc::build_chart(at(theta), c), 64, tol);
            worst = std::max(worst, r.find("reconstruction")->max_deviation);
        }
    report(1, "qdm_reconstruction", worst <= tol, fmt("max_dev=%.3e tol=%.0e", worst, tol));
}

void c2_dirac() {
    bool ok = true;
    std::string bad;
    for (double theta : {-1.0, 0.0, 1.0}) {
        for (ChartLabel c : {ChartLabel::I, ChartLabel::II}) {
            const jc::DiracStringMap m = jc::dirac_string_map(at(theta), c, 48);
            if (!m.agree) {
                ok = false;
                bad += " V_" + to_string(c) + "@" + std::to_string(theta) + " extra=" + format_slot_states(m.extra) +
                       " missing=" + format_slot_states(m.missing);
            }
        }
        const jc::ProjectorForms f = jc::projector_forms(at(theta));
        SlotStates ps = f.left_form.singular_support(48);
        if (ps != jc::projector_claimed_support(theta, 48)) {
            ok = false;
            bad += " P_JC@" + std::to_string(theta) + "=" + format_slot_states(ps);
        }
        const jc::TransitionOperator t = jc::transition_operator(at(theta));
        SlotStates ts = t.left_form.singular_support(48);
        if (ts != jc::transition_claimed_support(48)) {
            ok = false;
            bad += " Phi_JC@" + std::to_string(theta) + "=" + format_slot_states(ts);
        }
    }
    report(2, "dirac_strings", ok, ok ? "theta in {-1,0,1}: V_I, V_II, P_JC, Phi_JC agree" : bad);
}

void c3_propagator() {
    const double tol = 1e-9;
    double worst = 0.0;
    for (double theta : {0.0, 0.5, 1.0})
        for (double gt : {0.5, 1.0, M_PI}) {
            const jc::JCParams p = at(theta, gt);
            worst = std::max(worst, jc::propagator_vs_oracle(p, 32, tol).max_deviation);
            worst = std::max(worst, jc::propagator_semigroup(p, 0.3 * gt, 0.7 * gt, 32, tol).max_deviation);
            worst = std::max(worst, check_unitary(jc::propagator_closed_form(p), 32, tol).max_deviation);
        }
    report(3, "propagator", worst <= tol, fmt("max_dev=%.3e tol=%.0e", worst, tol));
}

void c4_spectral() {
    const double tol = 1e-10;
    double worst = 0.0;
    for (double theta : {2.0, -2.0, 1.0, -1.0, 0.5, -0.5, 0.1, 0.0})
        worst = std::max(worst, jc::spectral_decomposition_check(at(theta), 48, tol).max_deviation);
    report(4, "spectral_decomposition", worst <= tol, fmt("max_dev=%.3e tol=%.0e", worst, tol));
}

void c5_veronese() {
    const double tol = 1e-9, oike_tol = 1e-10;
    double worst = 0.0, oike = 0.0;
    for (double theta : {0.5, 1.0, 2.0}) {
        const VerificationReport f = veronese::useful_formulas_report(theta, 4, 32, tol);
        for (const auto& c : f.checks) worst = std::max(worst, c.max_deviation);
        for (int n = 1; n <= 5; ++n) {
            const veronese::LiftedColumn l = veronese::lift(veronese::build_family(theta, n));
            const VerificationReport lr = veronese::lift_report(l, 32, tol);
            worst = std::max(worst, lr.find("isometry")->max_deviation);
            worst = std::max(worst, lr.find("binomial_power")->max_deviation);  // absolute
            oike = std::max(oike, veronese::projector_report(l, 32, oike_tol).find("oike_layout")->max_deviation);
        }
    }
    report(5, "veronese", worst <= tol && oike <= oike_tol,
           fmt("max_dev=%.3e tol=1e-09", worst, 0) + fmt(" oike_dev=%.3e tol=%.0e", oike, oike_tol));
}

void c6_spin() {
    const double tol = 1e-12, nc_tol = 1e-10;
    const VerificationReport cl = spin::classical_spin_report(20240601, 100, tol);
    double worst = 0.0, nc = 0.0;
    for (const auto& c : cl.checks) worst = std::max(worst, c.max_deviation);
    bool nc_ok = true;
    for (double theta : {0.5, 1.0, 2.0})
        for (spin::Spin j : {spin::Spin::One, spin::Spin::ThreeHalves}) {
            const VerificationReport r = spin::nc_spin_report(theta, j, 32, nc_tol);
            nc_ok = nc_ok && r.pass();
            for (const auto& c : r.checks) nc = std::max(nc, c.max_deviation);
        }
    report(6, "spin_representations", cl.pass() && nc_ok,
           fmt("classical_dev=%.3e tol=%.0e", worst, tol) + fmt(" nc_dev=%.3e tol=%.0e", nc, nc_tol));
}

void c7_breakdown() {
    const double threshold = 1e-8;
    double least = INFINITY;
    for (double theta : {0.5, 1.0, 2.0})
        least = std::min(least, spin::tensor_breakdown_check(theta, 16, threshold).find("breakdown_nonzero")->max_deviation);
    report(7, "tensor_breakdown", least > threshold, fmt("min_over_theta=%.3e threshold=%.0e", least, threshold));
}

void c8_classical() {
    const double tol = 1e-12;
    const VerificationReport r = berry::classical_report(20240601, 1000, tol);
    double worst = 0.0;
    for (const auto& c : r.checks) worst = std::max(worst, c.max_deviation);
    const bool spots = r.find("cp1_charts")->pass && r.find("cp2_charts")->pass;
    report(8, "classical_layer", r.pass() && spots, fmt("max_dev=%.3e tol=%.0e (1000 points, CP spots)", worst, tol));
}

void c9_classical_limit() {
    const jc::LocalCoordinate z = jc::local_coordinate_z(at(1.0), 48, 1e-10);
    std::string errs;
    for (const auto& s : z.samples) errs += fmt(" |a|=%.0f:%.2e", s.radius, s.relative_error);
    report(9, "classical_limit", z.monotone, "theta=1" + errs);
}

void c10_exactness() {
    suites::SuiteConfig c;
    c.theta_list = {1.0, -1.0, 0.5};
    c.n_max = 48;
    const suites::RunResult a = suites::run(c);
    c.n_max = 96;
    const suites::RunResult b = suites::run(c);
    std::map<std::string, double> d48;
    for (const auto& chk : a.report["checks"]) d48[chk["key"].get<std::string>()] = chk["max_deviation"].get<double>();
    double worst = 0.0;
    std::size_t matched = 0;
    for (const auto& chk : b.report["checks"]) {
        auto it = d48.find(chk["key"].get<std::string>());
        if (it == d48.end()) continue;
        ++matched;
        worst = std::max(worst, std::abs(chk["max_deviation"].get<double>() - it->second));
    }
    const bool ok = worst <= 1e-12 && matched == d48.size() && a.pass && b.pass;
    report(10, "nmax_invariance", ok, fmt("max_shift=%.3e tol=1e-12 checks=%.0f", worst, double(matched)));
}

}  // namespace

int main() {
    c1_reconstruction();
    c2_dirac();
    c3_propagator();
    c4_spectral();
    c5_veronese();
    c6_spin();
    c7_breakdown();
    c8_classical();
    c9_classical_limit();
    c10_exactness();
    std::printf("%s  %d/10\n", failures == 0 ? "ALL PASS" : "FAILED", 10 - failures);
    return failures == 0 ? 0 : 1;
}
