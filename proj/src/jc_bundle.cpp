#include "fockbundle/jc_bundle.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "fockbundle/berry.hpp"

namespace fockbundle::jc {

namespace {

const cplx kI{0.0, 1.0};

FockOperator diag_op(const Symbol& s) { return FockOperator::diagonal(s); }

FockOperator scalar_op(cplx c) { return FockOperator::scalar(c); }

// 1 / sqrt(2 R(N+k) (R(N+k) + sign theta))
Symbol norm_factor(double theta, int k, double sign) {
    const double sigma = sigma_for(theta);
    const Symbol r = r_symbol(theta, k);
    return divide(Symbol(1.0), sqrt(Symbol(2.0) * r * (r + Symbol(sign * theta)), sigma), sigma);
}

Symbol inv_sqrt_number(int offset) {
    return divide(Symbol(1.0), sqrt(Symbol::count(offset)));
}

void merge(SlotStates& into, const SlotStates& from) {
    for (const auto& [slot, set] : from) into[slot].insert(set.begin(), set.end());
}

SlotStates difference(const SlotStates& a, const SlotStates& b) {
    SlotStates out;
    for (const auto& [slot, set] : a) {
        auto it = b.find(slot);
        for (long n : set)
            if (it == b.end() || !it->second.count(n)) out[slot].insert(n);
    }
    return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

CheckRecord record(std::string name, std::string anchor, double dev, double tol) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.max_deviation = dev;
    rec.tolerance = tol;
    rec.pass = dev <= tol;
    return rec;
}

json params_json(const JCParams& p) {
    json j{{"theta", p.theta}, {"g", p.g}, {"t", p.t}};
    if (p.omega) j["omega"] = *p.omega;
    if (p.delta) j["delta"] = *p.delta;
    return j;
}

}  // namespace

JCParams JCParams::from_frequencies(double omega, double delta, double g, double t) {
    if (g == 0.0) throw std::invalid_argument("JCParams: coupling g must be nonzero");
    JCParams p;
    p.omega = omega;
    p.delta = delta;
    p.g = g;
    p.t = t;
    p.theta = (delta - omega) / (2.0 * g);
    return p;
}

void JCParams::validate() const {
    if (g == 0.0) throw std::invalid_argument("JCParams: coupling g must be nonzero");
    if (!std::isfinite(theta) || !std::isfinite(g) || !std::isfinite(t))
        throw std::invalid_argument("JCParams: non-finite parameter");
    if (omega && delta) {
        const double expected = (*delta - *omega) / (2.0 * g);
        if (std::abs(expected - theta) > 1e-12)
            throw std::invalid_argument("JCParams: theta does not match (delta - omega) / (2 g)");
    }
}

Symbol r_symbol(double theta, int shift) {
    return sqrt(Symbol::count(shift) + Symbol(theta * theta), sigma_for(theta));
}

FockOperator r_op(double theta, int shift) { return diag_op(r_symbol(theta, shift)); }

OpMatrix build_h_jc(const JCParams& p) {
    return OpMatrix::from_rows({{scalar_op(p.theta), FockOperator::annihilation()},
                                {FockOperator::creation(), scalar_op(-p.theta)}});
}

QdmFactors qdm_factorization(const JCParams& p) {
    const FockOperator inv = diag_op(inv_sqrt_number(1));
    const FockOperator root = diag_op(sqrt(Symbol::count(1)));
    QdmFactors f;
    f.left = OpMatrix::diag({FockOperator::identity(), FockOperator::creation() * inv});
    f.middle = OpMatrix::from_rows({{scalar_op(p.theta), root}, {root, scalar_op(-p.theta)}});
    f.right = OpMatrix::diag({FockOperator::identity(), inv * FockOperator::annihilation()});
    return f;
}

VerificationReport qdm_report(const JCParams& p, long n_max, double tol) {
    VerificationReport rep;
    rep.suite = "qdm";
    rep.parameters = params_json(p);
    rep.parameters["n_max"] = n_max;
    const QdmFactors f = qdm_factorization(p);
    const OpMatrix product = f.left * f.middle * f.right;
    const OpMatrix h = build_h_jc(p);
    SlotStates vacuum2;
    vacuum2[2].insert(0);
    CheckRecord fac = grid_check("factorization", "H_JC = diag(1, a^dagger (N+1)^{-1/2}) M diag(1, (N+1)^{-1/2} a)",
                                 product, h, n_max, tol, vacuum2);
    fac.details["skipped"] = slot_states_to_json(vacuum2);
    rep.add(fac);
    rep.add(grid_check("inserted_identity", "(N+1)^{-1/2} a a^dagger (N+1)^{-1/2} = 1", f.right * f.left,
                       OpMatrix::identity(2), n_max, tol));

    SlotStates others;
    others[1].insert(0);
    const GridComparison vac = compare_on_grid(product, h, 0, others);
    const double expected = std::abs(p.theta);
    CheckRecord res = record("vacuum_residual", "factorized H_JC - H_JC on slot-2 |0> has size |theta|",
                             std::abs(vac.max_deviation - expected), tol);
    res.details["residual"] = vac.max_deviation;
    res.details["expected"] = expected;
    rep.add(res);
    return rep;
}

bool BundleChart::claimed_singular(int slot, long n) const {
    if (n != 0) return false;
    if (label == ChartLabel::I) return slot == 2 && theta <= 0.0;
    return (slot == 1 || slot == 2) && theta >= 0.0;
}

SlotStates BundleChart::claimed_support(long n_max) const {
    SlotStates out;
    for (int slot = 1; slot <= 2; ++slot)
        for (long n = 0; n <= n_max; ++n)
            if (claimed_singular(slot, n)) out[slot].insert(n);
    return out;
}

BundleChart build_chart(const JCParams& p, ChartLabel label) {
    const double th = p.theta;
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    BundleChart c;
    c.label = label;
    c.theta = th;
    const FockOperator r1 = r_op(th, 1);
    const FockOperator r0 = r_op(th, 0);
    if (label == ChartLabel::I) {
        const OpMatrix m = OpMatrix::from_rows({{r1 + scalar_op(th), -a}, {ad, r0 + scalar_op(th)}});
        const FockOperator f1 = diag_op(norm_factor(th, 1, 1.0));
        const FockOperator f2 = diag_op(norm_factor(th, 0, 1.0));
        c.unitary = OpMatrix::diag({f1, f2}) * m;
        c.unitary_right = m * OpMatrix::diag({f1, f2});
        c.adjoint = m.adjoint() * OpMatrix::diag({f1, f2});
        c.diagonal = OpMatrix::diag({r1, -r0});
    } else {
        const OpMatrix m = OpMatrix::from_rows({{a, -r1 + scalar_op(th)}, {r0 - scalar_op(th), ad}});
        const FockOperator g1 = diag_op(norm_factor(th, 1, -1.0));
        const FockOperator g2 = diag_op(norm_factor(th, 0, -1.0));
        c.unitary = OpMatrix::diag({g1, g2}) * m;
        c.unitary_right = m * OpMatrix::diag({g2, g1});
        c.adjoint = m.adjoint() * OpMatrix::diag({g1, g2});
        c.diagonal = OpMatrix::diag({r0, -r1});
    }
    return c;
}

VerificationReport chart_report(const BundleChart& chart, long n_max, double tol) {
    VerificationReport rep;
    rep.suite = "chart_" + to_string(chart.label);
    rep.parameters = {{"theta", chart.theta}, {"n_max", n_max}, {"tol", tol}};
    JCParams p;
    p.theta = chart.theta;
    const OpMatrix h = build_h_jc(p);
    const OpMatrix& v = chart.unitary;
    rep.add(grid_check("reconstruction", "H_JC = V D V^dagger", v * chart.diagonal * chart.adjoint, h, n_max, tol));
    rep.add(grid_check("orderings_agree", "diag(f) M = M diag(f')", chart.unitary, chart.unitary_right, n_max,
                       tol));
    rep.add(check_unitary(v, chart.adjoint, n_max, tol));
    return rep;
}

DiracStringMap dirac_string_map(const JCParams& p, ChartLabel label, long n_max) {
    const BundleChart c = build_chart(p, label);
    DiracStringMap m;
    m.label = label;
    m.theta = p.theta;
    m.unitary_support = c.unitary.singular_support(n_max);
    merge(m.unitary_support, c.unitary_right.singular_support(n_max));
    m.adjoint_support = c.unitary.adjoint().singular_support(n_max);
    merge(m.adjoint_support, c.unitary_right.adjoint().singular_support(n_max));
    merge(m.adjoint_support, c.adjoint.singular_support(n_max));
    m.computed = m.unitary_support;
    merge(m.computed, m.adjoint_support);
    m.claimed = c.claimed_support(n_max);
    m.missing = difference(m.claimed, m.computed);
    m.extra = difference(m.computed, m.claimed);
    m.agree = m.missing.empty() && m.extra.empty();
    return m;
}

json to_json(const DiracStringMap& m) {
    return json{{"chart", to_string(m.label)},
                {"theta", m.theta},
                {"unitary_support", slot_states_to_json(m.unitary_support)},
                {"adjoint_support", slot_states_to_json(m.adjoint_support)},
                {"computed", slot_states_to_json(m.computed)},
                {"claimed", slot_states_to_json(m.claimed)},
                {"missing", slot_states_to_json(m.missing)},
                {"extra", slot_states_to_json(m.extra)},
                {"agree", m.agree}};
}

TransitionOperator transition_operator(const JCParams&) {
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    const FockOperator inv0 = diag_op(inv_sqrt_number(0));
    const FockOperator inv1 = diag_op(inv_sqrt_number(1));
    TransitionOperator t;
    t.left_form = OpMatrix::diag({a * inv0, inv0 * ad});
    t.right_form = OpMatrix::diag({inv1 * a, ad * inv1});
    t.left_adjoint = OpMatrix::diag({inv0 * ad, a * inv0});
    return t;
}

SlotStates transition_claimed_support(long n_max) {
    SlotStates s;
    if (n_max >= 0) s[1].insert(0);
    return s;
}

VerificationReport transition_report(const JCParams& p, long n_max, double tol) {
    VerificationReport rep;
    rep.suite = "transition";
    rep.parameters = params_json(p);
    rep.parameters["n_max"] = n_max;
    const TransitionOperator t = transition_operator(p);
    rep.add(grid_check("forms_agree", "diag(a N^{-1/2}, N^{-1/2} a^dagger) = diag((N+1)^{-1/2} a, a^dagger (N+1)^{-1/2})",
                       t.left_form, t.right_form, n_max, tol));
    auto unitary = check_unitary(t.left_form, t.left_adjoint, n_max, tol);
    unitary.name = "unitary";
    rep.add(unitary);

    SlotStates support = t.left_form.singular_support(n_max);
    merge(support, t.right_form.singular_support(n_max));
    const SlotStates claimed = transition_claimed_support(n_max);
    CheckRecord sing = record("singular_support", "N^{-1/2} undefined on |0>", support == claimed ? 0.0 : 1.0, 0.0);
    sing.excluded = support;
    sing.details["computed"] = slot_states_to_json(support);
    sing.details["claimed"] = slot_states_to_json(claimed);
    rep.add(sing);

    const OpMatrix v1 = build_chart(p, ChartLabel::I).unitary;
    const OpMatrix v2 = build_chart(p, ChartLabel::II).unitary;
    rep.add(grid_check("gluing", "V_II = V_I Phi_JC", v1 * t.left_form, v2, n_max, tol));
    return rep;
}

ProjectorForms projector_forms(const JCParams& p) {
    const double th = p.theta;
    const double sigma = p.sigma();
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    const Symbol r1 = r_symbol(th, 1);
    const Symbol r0 = r_symbol(th, 0);
    const FockOperator h1 = diag_op(divide(Symbol(1.0), Symbol(2.0) * r1, sigma));
    const FockOperator h0 = diag_op(divide(Symbol(1.0), Symbol(2.0) * r0, sigma));
    const OpMatrix m = OpMatrix::from_rows(
        {{diag_op(r1 + Symbol(th)), a}, {ad, diag_op(r0 - Symbol(th))}});
    ProjectorForms f;
    f.left_form = OpMatrix::diag({h1, h0}) * m;
    f.right_form = m * OpMatrix::diag({h1, h0});
    return f;
}

OpMatrix projector_pjc(const JCParams& p) { return projector_forms(p).left_form; }

SlotStates projector_claimed_support(double theta, long n_max) {
    SlotStates s;
    if (theta == 0.0 && n_max >= 0) s[2].insert(0);
    return s;
}

VerificationReport projector_report(const JCParams& p, long n_max, double tol) {
    VerificationReport rep;
    rep.suite = "projector";
    rep.parameters = params_json(p);
    rep.parameters["n_max"] = n_max;
    const ProjectorForms f = projector_forms(p);
    rep.add(grid_check("forms_agree", "diag(1/2R) M = M diag(1/2R)", f.left_form, f.right_form, n_max, tol));
    rep.add(check_idempotent_hermitian(f.left_form, n_max, tol));

    const OpMatrix e11 = OpMatrix::diag({FockOperator::identity(), FockOperator()});
    const BundleChart c1 = build_chart(p, ChartLabel::I);
    const BundleChart c2 = build_chart(p, ChartLabel::II);
    rep.add(grid_check("chart_I_pushforward", "P_JC = V_I diag(1,0) V_I^dagger", c1.unitary * e11 * c1.adjoint,
                       f.left_form, n_max, tol));
    rep.add(grid_check("chart_II_pushforward", "P_JC = V_II diag(1,0) V_II^dagger", c2.unitary * e11 * c2.adjoint,
                       f.left_form, n_max, tol));

    const OpMatrix h = build_h_jc(p);
    rep.add(grid_check("commutes_with_h", "[H_JC, P_JC] = 0", h * f.left_form, f.left_form * h, n_max, tol));

    SlotStates support = f.left_form.singular_support(n_max);
    merge(support, f.right_form.singular_support(n_max));
    merge(support, f.left_form.adjoint().singular_support(n_max));
    const SlotStates claimed = projector_claimed_support(p.theta, n_max);
    CheckRecord sing = record("singular_support", "P_JC undefined on F x {|0>} x {theta = 0}",
                              support == claimed ? 0.0 : 1.0, 0.0);
    sing.excluded = support;
    sing.details["computed"] = slot_states_to_json(support);
    sing.details["claimed"] = slot_states_to_json(claimed);
    rep.add(sing);
    return rep;
}

CheckRecord spectral_decomposition_check(const JCParams& p, const OpMatrix& projector, long n_max, double tol) {
    const OpMatrix dr = OpMatrix::diag({r_op(p.theta, 1), r_op(p.theta, 0)});
    const OpMatrix rhs = dr * projector - dr * (OpMatrix::identity(2) - projector);
    return grid_check("spectral_decomposition", "H_JC = D_R P - D_R (1 - P)", build_h_jc(p), rhs, n_max, tol);
}

CheckRecord spectral_decomposition_check(const JCParams& p, long n_max, double tol) {
    return spectral_decomposition_check(p, projector_pjc(p), n_max, tol);
}

OpMatrix propagator_closed_form(const JCParams& p) {
    const double th = p.theta;
    const double tau = p.tau();
    const Symbol r1 = r_symbol(th, 1);
    const Symbol r0 = r_symbol(th, 0);
    // sin(tau R) / R = tau sinc(tau R), finite at R = 0
    const Symbol s1 = Symbol(tau) * sinc(Symbol(tau) * r1);
    const Symbol s0 = Symbol(tau) * sinc(Symbol(tau) * r0);
    const Symbol c1 = cos(Symbol(tau) * r1);
    const Symbol c0 = cos(Symbol(tau) * r0);
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    return OpMatrix::from_rows({{diag_op(c1 - Symbol(kI * th) * s1), diag_op(Symbol(-kI) * s1) * a},
                                {diag_op(Symbol(-kI) * s0) * ad, diag_op(c0 + Symbol(kI * th) * s0)}});
}

BlockPropagator::BlockPropagator(const JCParams& p) : p_(p) {}

std::pair<double, double> BlockPropagator::block_eigenvalues(long n) const {
    const double r = std::sqrt(double(n) + 1.0 + p_.theta * p_.theta);
    return {-r, r};
}

Eigen::Matrix2cd BlockPropagator::block(long n) const {
    const double th = p_.theta;
    const double s = std::sqrt(double(n) + 1.0);
    const double r = std::sqrt(double(n) + 1.0 + th * th);
    const double tau = p_.tau();
    Eigen::Matrix2cd h;
    h << th, s, s, -th;
    return std::cos(tau * r) * Eigen::Matrix2cd::Identity() - kI * (std::sin(tau * r) / r) * h;
}

cplx BlockPropagator::ground_phase() const { return std::exp(kI * p_.tau() * p_.theta); }

StackedState BlockPropagator::column(int slot, long n) const {
    StackedState out;
    out.components.resize(2);
    if (slot == 0) {
        const Eigen::Matrix2cd u = block(n);
        out.components[0].add(n, u(0, 0));
        out.components[1].add(n + 1, u(1, 0));
    } else if (n == 0) {
        out.components[1].add(0, ground_phase());
    } else {
        const Eigen::Matrix2cd u = block(n - 1);
        out.components[0].add(n - 1, u(0, 1));
        out.components[1].add(n, u(1, 1));
    }
    return out;
}

BlockPropagator propagator_block_oracle(const JCParams& p) { return BlockPropagator(p); }

CheckRecord propagator_vs_oracle(const JCParams& p, long n_max, double tol) {
    const auto t0 = std::chrono::steady_clock::now();
    const OpMatrix u = propagator_closed_form(p);
    const BlockPropagator oracle(p);
    double dev = 0.0;
    json loc = nullptr;
    SlotStates excluded;
    for (int slot = 0; slot < 2; ++slot)
        for (long n = 0; n <= n_max; ++n) {
            auto col = u.column(slot, n);
            if (!col) {
                excluded[slot + 1].insert(n);
                continue;
            }
            const double d = col->max_abs_diff(oracle.column(slot, n));
            if (d > dev) {
                dev = d;
                loc = json{{"col_slot", slot + 1}, {"n", n}};
            }
        }
    CheckRecord rec = record("closed_form_vs_block_oracle", "exp(-i g t H_JC) closed form", dev, tol);
    // Every column must be evaluable: the sinc form has no singular states.
    if (!excluded.empty()) rec.pass = false;
    rec.excluded = excluded;
    rec.details["location"] = loc;
    rec.elapsed_ms = ms_since(t0);
    return rec;
}

CheckRecord propagator_semigroup(const JCParams& p, double t1, double t2, long n_max, double tol) {
    JCParams a = p, b = p, c = p;
    a.t = t1;
    b.t = t2;
    c.t = t1 + t2;
    CheckRecord rec = grid_check("semigroup", "U(t1) U(t2) = U(t1 + t2)",
                                 propagator_closed_form(a) * propagator_closed_form(b), propagator_closed_form(c),
                                 n_max, tol);
    rec.details["t1"] = t1;
    rec.details["t2"] = t2;
    return rec;
}

OpMatrix free_evolution(const JCParams& p) {
    if (!p.omega) throw std::invalid_argument("free_evolution: omega is required");
    const double w = *p.omega;
    const double t = p.t;
    const Symbol n = Symbol::number(0);
    const Symbol x1 = Symbol(t * w) * n + Symbol(t * w / 2.0);
    const Symbol x2 = Symbol(t * w) * n - Symbol(t * w / 2.0);
    auto phase = [](const Symbol& x) { return diag_op(cos(x) - Symbol(kI) * sin(x)); };
    return OpMatrix::diag({phase(x1), phase(x2)});
}

OpMatrix full_evolution(const JCParams& p) {
    if (!p.omega || !p.delta) throw std::invalid_argument("full_evolution: omega and delta are required");
    return free_evolution(p) * propagator_closed_form(p);
}

VerificationReport full_evolution_report(const JCParams& p, long n_max, double tol) {
    if (!p.omega || !p.delta) throw std::invalid_argument("full_evolution_report: omega and delta are required");
    VerificationReport rep;
    rep.suite = "full_evolution";
    rep.parameters = params_json(p);
    rep.parameters["n_max"] = n_max;
    const OpMatrix e1 = free_evolution(p);
    const OpMatrix e2 = propagator_closed_form(p);
    rep.add(grid_check("split_commutes", "e^{-itH1} e^{-itH2} = e^{-itH2} e^{-itH1}", e1 * e2, e2 * e1, n_max, tol));
    const OpMatrix u = e1 * e2;
    rep.add(check_unitary(u, n_max, tol));

    // Block oracle of H = H1 + g H_JC: H1 is the scalar omega (n + 1/2) on block n
    // and -omega/2 on slot-2 |0>.
    const double w = *p.omega;
    const BlockPropagator oracle(p);
    double dev = 0.0;
    for (int slot = 0; slot < 2; ++slot)
        for (long n = 0; n <= n_max; ++n) {
            auto col = u.column(slot, n);
            if (!col) continue;
            StackedState expect = oracle.column(slot, n);
            const long block = slot == 0 ? n : n - 1;
            const double e = block < 0 ? -w / 2.0 : w * (double(block) + 0.5);
            for (auto& comp : expect.components) comp *= std::exp(-kI * p.t * e);
            dev = std::max(dev, col->max_abs_diff(expect));
        }
    rep.add(record("block_oracle", "exp(-itH) on invariant blocks", dev, tol));
    return rep;
}

FockVector coherent_state(cplx alpha, double cutoff) {
    // |alpha> = e^{-|alpha|^2/2} sum alpha^n / sqrt(n!) |n>, built by recurrence.
    FockVector v;
    const double r = std::abs(alpha);
    cplx amp = std::exp(-r * r / 2.0);
    const long peak = static_cast<long>(std::ceil(r * r));
    for (long n = 0;; ++n) {
        if (std::abs(amp) >= cutoff) v.add(n, amp);
        else if (n > peak) break;
        amp *= alpha / std::sqrt(double(n + 1));
    }
    return v;
}

cplx expectation(const FockOperator& op, const FockVector& state) { return state.inner(op.apply(state)); }

LocalCoordinate local_coordinate_z(const JCParams& p, long n_max, double tol, const std::vector<double>& radii,
                                   double phase) {
    const double th = p.theta;
    const double sigma = p.sigma();
    const FockOperator ad = FockOperator::creation();
    const FockOperator inv0 = diag_op(divide(Symbol(1.0), r_symbol(th, 0) + Symbol(th), sigma));
    const FockOperator inv1 = diag_op(divide(Symbol(1.0), r_symbol(th, 1) + Symbol(th), sigma));
    const std::set<long> bad = inv0.singular_support(n_max);
    if (!bad.empty()) throw DomainError(SlotStates{{0, bad}});

    LocalCoordinate lc;
    lc.z_left = inv0 * ad;
    lc.z_right = ad * inv1;
    lc.checks.suite = "local_coordinate";
    lc.checks.parameters = {{"theta", th}, {"n_max", n_max}, {"tol", tol}, {"phase", phase}};

    auto as_matrix = [](const FockOperator& op) { return OpMatrix::diag({op}); };
    lc.checks.add(grid_check("forms_agree", "(R(N)+theta)^{-1} a^dagger = a^dagger (R(N+1)+theta)^{-1}",
                             as_matrix(lc.z_left), as_matrix(lc.z_right), n_max, tol));

    const Symbol r1 = r_symbol(th, 1);
    const FockOperator x0 =
        diag_op(divide(r1 + Symbol(th), sqrt(Symbol(2.0) * r1 * (r1 + Symbol(th)), sigma), sigma));
    const FockOperator lhs = FockOperator::identity() + lc.z_left.adjoint() * lc.z_left;
    const FockOperator mid = diag_op(divide(Symbol(2.0) * r1, r1 + Symbol(th), sigma));
    lc.checks.add(grid_check("one_plus_zdz", "1 + Z^dagger Z = 2R(N+1)/(R(N+1)+theta)", as_matrix(lhs),
                             as_matrix(mid), n_max, tol));
    lc.checks.add(grid_check("x0_inverse_square", "1 + Z^dagger Z = X_0^{-2}", as_matrix(lhs),
                             as_matrix(inverse(x0 * x0, sigma)), n_max, tol));

    double prev = std::numeric_limits<double>::infinity();
    lc.monotone = true;
    for (double radius : radii) {
        CoherentSample s;
        s.radius = radius;
        s.alpha = std::polar(radius, phase);
        const FockVector state = coherent_state(s.alpha);
        s.support = static_cast<long>(state.coeffs().size());
        s.expectation = expectation(lc.z_left, state);
        // alpha <-> x - i y, theta <-> z
        const berry::R3Point pt = berry::R3Point::make(s.alpha.real(), -s.alpha.imag(), th);
        s.classical = berry::classical_targets(pt).z_c;
        s.relative_error = std::abs(s.expectation - s.classical) / std::abs(s.classical);
        if (!(s.relative_error < prev)) lc.monotone = false;
        prev = s.relative_error;
        lc.samples.push_back(s);
    }
    return lc;
}

}  // namespace fockbundle::jc
