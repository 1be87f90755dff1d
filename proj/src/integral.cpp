#include "hlawka/integral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hlawka::integral {

DiscreteMeasure::DiscreteMeasure(std::vector<Scalar> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("measure needs at least one atom");
    }
    Scalar sum(0);
    for (const Scalar& w : weights_) {
        if (w.is_nan() || w.sign() < 0) {
            throw std::invalid_argument("measure weights must be nonnegative");
        }
        sum += w;
    }
    total_ = sum;
}

Scalar DiscreteMeasure::integrate(std::span<const Scalar> values) const {
    if (values.size() != weights_.size()) {
        throw std::invalid_argument("integrand has wrong length");
    }
    Scalar sum(0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum += weights_[i] * values[i];
    }
    return sum;
}

bool DiscreteMeasure::is_uniform() const {
    for (std::size_t i = 1; i < weights_.size(); ++i) {
        if (!(weights_[i] == weights_[0])) {
            return false;
        }
    }
    return true;
}

VectorFunction::VectorFunction(std::vector<std::vector<Scalar>> values)
    : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("function needs at least one point");
    }
    dim_ = values_[0].size();
    if (dim_ == 0) {
        throw std::invalid_argument("function values need dimension >= 1");
    }
    for (const auto& v : values_) {
        if (v.size() != dim_) {
            throw std::invalid_argument("function values must share one dimension");
        }
    }
}

Scalar dot(std::span<const Scalar> u, std::span<const Scalar> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("dot product of different dimensions");
    }
    Scalar sum(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += u[i] * v[i];
    }
    return sum;
}

Scalar norm(std::span<const Scalar> v, const TolerancePolicy& policy) {
    return sqrt_scalar(dot(v, v), policy);
}

namespace {

std::vector<Scalar> sub(std::span<const Scalar> a, std::span<const Scalar> b) {
    std::vector<Scalar> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

std::vector<Scalar> scale_vec(const Scalar& c, std::span<const Scalar> v) {
    std::vector<Scalar> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        r[i] = c * v[i];
    }
    return r;
}

/// Is -g on the closed ray spanned by direction? Cauchy-Schwarz equality
/// test: nonnegative inner product and |<u,d>| = ||u|| ||d|| within
/// tolerance.
bool on_nonneg_ray(std::span<const Scalar> g, std::span<const Scalar> direction,
                   const TolerancePolicy& policy) {
    std::vector<Scalar> u(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        u[i] = -g[i];
    }
    if (norm(direction, policy).is_zero()) {
        return eq_within(norm(u, policy), Scalar(0), policy);
    }
    const Scalar ip = dot(u, direction);
    if (cmp_ge(ip, Scalar(0), policy) == Verdict::Fails) {
        return false;
    }
    const Scalar cross = norm(u, policy) * norm(direction, policy);
    return eq_within(cross, ip, policy);
}

} // namespace

std::vector<Scalar> aggregate(const DiscreteMeasure& measure,
                              const VectorFunction& f) {
    if (f.size() != measure.size()) {
        throw std::invalid_argument("function and measure sizes differ");
    }
    std::vector<Scalar> sum(f.dim(), Scalar(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& v = f.at(i);
        for (std::size_t d = 0; d < f.dim(); ++d) {
            sum[d] += measure.weights()[i] * v[d];
        }
    }
    return sum;
}

GroupmainInstance::GroupmainInstance(DiscreteMeasure measure_,
                                     VectorFunction g_hat_,
                                     std::vector<Scalar> aggregate_g_,
                                     ConcaveMap transform_, Scalar control_,
                                     const TolerancePolicy& policy)
    : measure(std::move(measure_)),
      g_hat(std::move(g_hat_)),
      aggregate_g(std::move(aggregate_g_)),
      transform(transform_),
      control(std::move(control_)) {
    if (g_hat.size() != measure.size()) {
        throw std::invalid_argument("map and measure sizes differ");
    }
    if (aggregate_g.size() != g_hat.dim()) {
        throw std::invalid_argument("aggregate has wrong dimension");
    }
    if (control.is_nan() || control.is_zero()) {
        throw std::invalid_argument("control must be nonzero");
    }
    if (control.sign() < 0 &&
        transform(norm(aggregate_g, policy), policy).sign() <= 0) {
        throw std::invalid_argument(
            "need control > 0 or S(|aggregate|) > 0");
    }
}

PremiseCheck groupmain_premises(const GroupmainInstance& inst,
                                const TolerancePolicy& policy) {
    const Scalar s_total = inst.transform(norm(inst.aggregate_g, policy), policy);
    for (std::size_t i = 0; i < inst.g_hat.size(); ++i) {
        const auto& gi = inst.g_hat.at(i);
        const Scalar s_g = inst.transform(norm(gi, policy), policy);
        const Scalar s_diff =
            inst.transform(norm(sub(gi, inst.aggregate_g), policy), policy);
        if (eq_within(s_g + s_total, s_diff, policy)) {
            continue; // inactive atom, exempt from the control
        }
        if (cmp_ge(inst.control, s_g + s_diff, policy) == Verdict::Fails) {
            return {false, i};
        }
    }
    return {true, std::nullopt};
}

GroupmainMargins groupmain_margins(const GroupmainInstance& inst,
                                   const TolerancePolicy& policy) {
    const PremiseCheck premises = groupmain_premises(inst, policy);
    if (!premises.ok) {
        throw PremiseViolation("pointwise control fails at atom " +
                                   std::to_string(*premises.witness),
                               *premises.witness);
    }

    const std::size_t n = inst.measure.size();
    std::vector<Scalar> s_g(n), s_g_sq(n), s_diff(n), s_diff_sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& gi = inst.g_hat.at(i);
        const Scalar g_sq = dot(gi, gi);
        const auto diff = sub(gi, inst.aggregate_g);
        const Scalar d_sq = dot(diff, diff);
        s_g[i] = inst.transform(sqrt_scalar(g_sq, policy), policy);
        s_diff[i] = inst.transform(sqrt_scalar(d_sq, policy), policy);
        s_g_sq[i] = inst.transform.squared_from_square(g_sq, policy);
        s_diff_sq[i] = inst.transform.squared_from_square(d_sq, policy);
    }
    const Scalar agg_sq = dot(inst.aggregate_g, inst.aggregate_g);
    const Scalar s_total = inst.transform(sqrt_scalar(agg_sq, policy), policy);
    const Scalar s_total_sq = inst.transform.squared_from_square(agg_sq, policy);

    const Scalar c = Scalar(2) * inst.measure.integrate(s_g) / inst.control;
    const Scalar slack = inst.measure.total() - c;

    GroupmainMargins m;
    m.scale = c;
    m.two_form = slack * s_total_sq + inst.measure.integrate(s_g_sq) -
                 inst.measure.integrate(s_diff_sq);
    m.one_form = slack * s_total + inst.measure.integrate(s_g) -
                 inst.measure.integrate(s_diff);
    return m;
}

Scalar inner_identity_residual(const DiscreteMeasure& measure,
                               const VectorFunction& f) {
    const std::vector<Scalar> agg = aggregate(measure, f);
    const std::size_t n = measure.size();
    std::vector<Scalar> centered_sq(n), plain_sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = sub(f.at(i), agg);
        centered_sq[i] = dot(d, d);
        plain_sq[i] = dot(f.at(i), f.at(i));
    }
    const Scalar lhs = measure.integrate(centered_sq);
    const Scalar rhs = measure.integrate(plain_sq) +
                       dot(agg, agg) * (measure.total() - Scalar(2));
    return lhs - rhs;
}

Scalar integral_hlawka_margin(const DiscreteMeasure& measure,
                              const VectorFunction& f, const VectorFunction& g,
                              const TolerancePolicy& policy) {
    if (f.size() != measure.size() || g.size() != measure.size() ||
        f.dim() != g.dim()) {
        throw std::invalid_argument("functions must share the measure's atoms "
                                    "and one dimension");
    }
    const std::vector<Scalar> int_f = aggregate(measure, f);
    const std::vector<Scalar> int_g = aggregate(measure, g);

    const std::size_t n = measure.size();
    std::vector<Scalar> norm_f(n), norm_g(n);
    for (std::size_t i = 0; i < n; ++i) {
        norm_f[i] = norm(f.at(i), policy);
        norm_g[i] = norm(g.at(i), policy);
    }
    const Scalar sum_nf = measure.integrate(norm_f);
    const Scalar sum_ng = measure.integrate(norm_g);
    if (sum_nf.sign() <= 0 || sum_ng.sign() <= 0) {
        throw std::domain_error("both functions must have positive total norm");
    }
    if (norm(int_f, policy).sign() <= 0 || norm(int_g, policy).sign() <= 0) {
        throw std::domain_error("both aggregates must be nonzero");
    }

    // Direction condition int f / int||f|| = int g / int||g||, cleared of
    // denominators.
    for (std::size_t d = 0; d < f.dim(); ++d) {
        if (!eq_within(int_f[d] * sum_ng, int_g[d] * sum_nf, policy)) {
            throw std::domain_error("aggregates point in different directions "
                                    "(component " + std::to_string(d) + ")");
        }
    }

    Scalar defect(0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto diff = sub(g.at(i), int_f);
        const Scalar norm_diff = norm(diff, policy);
        if (!on_nonneg_ray(g.at(i), int_f, policy) &&
            cmp_ge(sum_nf, norm_g[i] + norm_diff, policy) == Verdict::Fails) {
            throw PremiseViolation("pointwise premise fails at atom " +
                                       std::to_string(i),
                                   i);
        }
        defect += measure.weights()[i] * norm_diff;
    }

    const Scalar c = Scalar(2) * sum_ng / sum_nf;
    return (measure.total() - c) * norm(int_f, policy) + sum_ng - defect;
}

Scalar t_variant_margin(const DiscreteMeasure& measure, const VectorFunction& f,
                        const Scalar& t, const TolerancePolicy& policy) {
    if (f.size() != measure.size()) {
        throw std::invalid_argument("function and measure sizes differ");
    }
    if (t.is_nan() || t.sign() < 0) {
        throw std::invalid_argument("scale t must be nonnegative");
    }
    const std::vector<Scalar> int_f = aggregate(measure, f);

    const std::size_t n = measure.size();
    std::vector<Scalar> norm_f(n), norm_defect(n);
    Scalar sum_nf(0);
    for (std::size_t i = 0; i < n; ++i) {
        norm_f[i] = norm(f.at(i), policy);
        sum_nf += measure.weights()[i] * norm_f[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        norm_defect[i] = norm(sub(scale_vec(t, f.at(i)), int_f), policy);
        if (!on_nonneg_ray(f.at(i), int_f, policy) &&
            cmp_ge(sum_nf, t * norm_f[i] + norm_defect[i], policy) ==
                Verdict::Fails) {
            throw PremiseViolation("pointwise premise fails at atom " +
                                       std::to_string(i),
                                   i);
        }
    }

    return (measure.total() - Scalar(2) * t) * norm(int_f, policy) +
           t * sum_nf - measure.integrate(norm_defect);
}

Scalar rearrangement_margin(const DiscreteMeasure& measure,
                            const VectorFunction& f,
                            std::span<const std::size_t> permutation,
                            const TolerancePolicy& policy) {
    const std::size_t n = measure.size();
    if (f.size() != n || permutation.size() != n) {
        throw std::invalid_argument("permutation and function must cover the atoms");
    }
    std::vector<bool> seen(n, false);
    bool trivial = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (permutation[i] >= n || seen[permutation[i]]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[permutation[i]] = true;
        trivial = trivial && permutation[i] == i;
    }
    if (!trivial && !measure.is_uniform()) {
        throw std::domain_error("a nontrivial rearrangement needs uniform "
                                "weights to keep both integrals");
    }

    const std::vector<Scalar> int_f = aggregate(measure, f);
    std::vector<Scalar> norm_bar(n), norm_defect(n);
    Scalar sum_nf(0);
    for (std::size_t i = 0; i < n; ++i) {
        sum_nf += measure.weights()[i] * norm(f.at(i), policy);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& bar = f.at(permutation[i]);
        norm_bar[i] = norm(bar, policy);
        norm_defect[i] = norm(sub(bar, int_f), policy);
        if (!on_nonneg_ray(bar, int_f, policy) &&
            cmp_ge(sum_nf, norm_bar[i] + norm_defect[i], policy) ==
                Verdict::Fails) {
            throw PremiseViolation("pointwise premise fails at atom " +
                                       std::to_string(i),
                                   i);
        }
    }

    return (measure.total() - Scalar(2)) * norm(int_f, policy) +
           measure.integrate(norm_bar) - measure.integrate(norm_defect);
}

Scalar weighted_variant_margin(std::span<const Scalar> mu,
                               const std::vector<std::vector<Scalar>>& points,
                               const Scalar& lambda,
                               const TolerancePolicy& policy) {
    if (mu.size() != points.size() || points.empty()) {
        throw std::invalid_argument("weights and points must match and be nonempty");
    }
    if (lambda.is_nan() || lambda.sign() < 0) {
        throw std::invalid_argument("lambda must be nonnegative");
    }
    const std::size_t dim = points[0].size();
    std::vector<Scalar> agg(dim, Scalar(0));
    Scalar sum(0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (mu[i].is_nan() || mu[i].sign() < 0) {
            throw std::invalid_argument("weights must be nonnegative");
        }
        if (points[i].size() != dim) {
            throw std::invalid_argument("points must share one dimension");
        }
        for (std::size_t d = 0; d < dim; ++d) {
            agg[d] += mu[i] * points[i][d];
        }
        sum += mu[i] * norm(points[i], policy);
    }

    Scalar total_mu(0);
    Scalar defect(0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Scalar norm_i = norm(points[i], policy);
        const Scalar norm_defect =
            norm(sub(scale_vec(lambda, points[i]), agg), policy);
        if (cmp_ge(sum, lambda * mu[i] * norm_i + norm_defect, policy) ==
            Verdict::Fails) {
            throw PremiseViolation("pointwise premise fails at index " +
                                       std::to_string(i),
                                   i);
        }
        total_mu += mu[i];
        defect += mu[i] * norm_defect;
    }

    return (total_mu - Scalar(2) * lambda) * norm(agg, policy) + lambda * sum -
           defect;
}

} // namespace hlawka::integral
