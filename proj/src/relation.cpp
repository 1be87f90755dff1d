#include "hlawka/relation.hpp"

#include <stdexcept>

namespace hlawka::relation {

WeightedFunctional::WeightedFunctional(std::vector<Scalar> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("functional needs at least one weight");
    }
    Scalar sum(0);
    for (const Scalar& w : weights_) {
        if (w.is_nan() || w.sign() < 0) {
            throw std::invalid_argument("functional weights must be nonnegative");
        }
        sum += w;
    }
    total_ = sum;
}

Scalar WeightedFunctional::apply(std::span<const Scalar> v) const {
    if (v.size() != weights_.size()) {
        throw std::invalid_argument("functional applied to a vector of wrong length");
    }
    Scalar sum(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        sum += weights_[i] * v[i];
    }
    return sum;
}

Scalar t_apply(const WeightedFunctional& functional, std::span<const Scalar> v) {
    return functional.apply(v);
}

HlawkaInstance::HlawkaInstance(WeightedFunctional functional_,
                               std::vector<Scalar> f_eta_,
                               std::vector<Scalar> f_xi_, Scalar a_, Scalar b_)
    : functional(std::move(functional_)),
      f_eta(std::move(f_eta_)),
      f_xi(std::move(f_xi_)),
      a(std::move(a_)),
      b(std::move(b_)) {
    if (f_eta.size() != functional.size() || f_xi.size() != functional.size()) {
        throw std::invalid_argument("image vectors must share the functional's index set");
    }
    if (a.is_nan() || b.is_nan()) {
        throw std::invalid_argument("controls must not be NaN");
    }
    if (a.is_zero()) {
        throw std::invalid_argument("control a must be nonzero");
    }
    if ((a + b).sign() <= 0) {
        throw std::invalid_argument("control a + b must be positive");
    }
}

const char* to_string(SumMode m) {
    switch (m) {
    case SumMode::LeqA: return "leq_a";
    case SumMode::GeqA: return "geq_a";
    case SumMode::Neither: return "neither";
    }
    return "?";
}

Forms compute_forms(const HlawkaInstance& inst) {
    const std::size_t n = inst.functional.size();
    std::vector<Scalar> eta_sq(n), xi_sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        eta_sq[i] = inst.f_eta[i] * inst.f_eta[i];
        xi_sq[i] = inst.f_xi[i] * inst.f_xi[i];
    }
    const Scalar t_eta = inst.functional.apply(inst.f_eta);
    const Scalar t_xi = inst.functional.apply(inst.f_xi);
    const Scalar c = Scalar(2) * t_eta / inst.a;
    const Scalar slack = inst.functional.total() - c;
    Forms f;
    f.scale = c;
    f.one_form = slack * inst.b + t_eta - t_xi;
    f.two_form = slack * inst.b * inst.b + inst.functional.apply(eta_sq) -
                 inst.functional.apply(xi_sq);
    return f;
}

Scalar identity_residual(const HlawkaInstance& inst) {
    const std::size_t n = inst.functional.size();
    std::vector<Scalar> product(n);
    for (std::size_t i = 0; i < n; ++i) {
        product[i] = (inst.a - inst.f_eta[i] - inst.f_xi[i]) *
                     (inst.f_eta[i] + inst.b - inst.f_xi[i]);
    }
    const Scalar lhs = inst.functional.apply(product);
    const Forms f = compute_forms(inst);
    return lhs - (f.one_form * (inst.a + inst.b) - f.two_form);
}

Controls check_controls(const HlawkaInstance& inst, bool active_only) {
    bool all_leq = true;
    bool all_geq = true;
    bool diff_ok = true;
    for (std::size_t i = 0; i < inst.functional.size(); ++i) {
        if (active_only && (inst.b + inst.f_eta[i] - inst.f_xi[i]).is_zero()) {
            continue;
        }
        const int sum_vs_a = (inst.f_eta[i] + inst.f_xi[i] - inst.a).sign();
        if (sum_vs_a > 0) {
            all_leq = false;
        }
        if (sum_vs_a < 0) {
            all_geq = false;
        }
        if ((inst.f_xi[i] - inst.f_eta[i] - inst.b).sign() > 0) {
            diff_ok = false;
        }
    }
    Controls c;
    c.diff_ok = diff_ok;
    c.sum_mode = all_leq ? SumMode::LeqA
                         : (all_geq ? SumMode::GeqA : SumMode::Neither);
    return c;
}

const char* to_string(ImplicationKind k) {
    switch (k) {
    case ImplicationKind::TwoFormNonnegImpliesOneFormNonneg:
        return "two_form>=0 => one_form>=0";
    case ImplicationKind::OneFormNonposImpliesTwoFormNonpos:
        return "one_form<=0 => two_form<=0";
    case ImplicationKind::OneFormNonnegImpliesTwoFormNonneg:
        return "one_form>=0 => two_form>=0";
    case ImplicationKind::TwoFormNonposImpliesOneFormNonpos:
        return "two_form<=0 => one_form<=0";
    }
    return "?";
}

namespace {

void fire(std::vector<FiredImplication>& out, bool& falsified,
          ImplicationKind kind, Verdict premise, Verdict conclusion) {
    if (premise == Verdict::Fails) {
        return;
    }
    out.push_back({kind, premise, conclusion});
    if (premise == Verdict::Holds && conclusion == Verdict::Fails) {
        falsified = true;
    }
}

} // namespace

RelationReport adjudicate(const HlawkaInstance& inst, bool active_only,
                          const TolerancePolicy& policy) {
    const Forms f = compute_forms(inst);
    const Controls controls = check_controls(inst, active_only);

    RelationReport report;
    report.scale = f.scale;
    report.one_form = f.one_form;
    report.two_form = f.two_form;
    report.sum_mode = controls.sum_mode;
    report.diff_ok = controls.diff_ok;
    report.residual = identity_residual(inst);
    report.controls_met = controls.diff_ok && controls.sum_mode != SumMode::Neither;
    if (!report.controls_met) {
        return report;
    }

    const Scalar zero(0);
    const Verdict one_nonneg = cmp_ge(f.one_form, zero, policy);
    const Verdict one_nonpos = cmp_ge(zero, f.one_form, policy);
    const Verdict two_nonneg = cmp_ge(f.two_form, zero, policy);
    const Verdict two_nonpos = cmp_ge(zero, f.two_form, policy);

    if (controls.sum_mode == SumMode::LeqA) {
        fire(report.fired, report.falsified,
             ImplicationKind::TwoFormNonnegImpliesOneFormNonneg, two_nonneg,
             one_nonneg);
        fire(report.fired, report.falsified,
             ImplicationKind::OneFormNonposImpliesTwoFormNonpos, one_nonpos,
             two_nonpos);
    } else {
        fire(report.fired, report.falsified,
             ImplicationKind::OneFormNonnegImpliesTwoFormNonneg, one_nonneg,
             two_nonneg);
        fire(report.fired, report.falsified,
             ImplicationKind::TwoFormNonposImpliesOneFormNonpos, two_nonpos,
             one_nonpos);
    }
    return report;
}

} // namespace hlawka::relation
