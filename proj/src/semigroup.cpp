#include "hlawka/semigroup.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hlawka::semigroup {

SemigroupStructure SemigroupStructure::lp_vectors(std::size_t dim, double p) {
    if (dim == 0) {
        throw std::invalid_argument("vector carrier needs dimension >= 1");
    }
    if (!(p >= 1.0)) { // rejects NaN too; +inf passes
        throw std::invalid_argument("p-norm needs p >= 1");
    }
    SemigroupStructure s;
    s.carrier_ = Carrier::Lp;
    s.dim_ = dim;
    s.p_ = p;
    return s;
}

SemigroupStructure SemigroupStructure::measurable_sets(std::vector<Scalar> weights,
                                                       SetOp op) {
    if (weights.empty() || weights.size() > 64) {
        throw std::invalid_argument("ground set size must be in [1, 64]");
    }
    for (const Scalar& w : weights) {
        if (w.is_nan() || w.sign() < 0) {
            throw std::invalid_argument("measure weights must be nonnegative");
        }
    }
    SemigroupStructure s;
    s.carrier_ = Carrier::Sets;
    s.weights_ = std::move(weights);
    s.op_ = op;
    return s;
}

SemigroupStructure SemigroupStructure::nonneg_reals(double power) {
    if (!(power > 0.0)) {
        throw std::invalid_argument("valuation power must be positive");
    }
    SemigroupStructure s;
    s.carrier_ = Carrier::Reals;
    s.power_ = power;
    return s;
}

namespace {

const std::vector<double>& as_vec(const Element& e) {
    if (const auto* v = std::get_if<std::vector<double>>(&e)) {
        return *v;
    }
    throw std::invalid_argument("element is not a vector");
}

std::uint64_t as_set(const Element& e) {
    if (const auto* m = std::get_if<std::uint64_t>(&e)) {
        return *m;
    }
    throw std::invalid_argument("element is not a set");
}

double as_real(const Element& e) {
    if (const auto* x = std::get_if<double>(&e)) {
        return *x;
    }
    throw std::invalid_argument("element is not a real");
}

} // namespace

Element SemigroupStructure::combine(const Element& a, const Element& b) const {
    switch (carrier_) {
    case Carrier::Lp: {
        const auto& u = as_vec(a);
        const auto& v = as_vec(b);
        if (u.size() != dim_ || v.size() != dim_) {
            throw std::invalid_argument("vector element has wrong dimension");
        }
        std::vector<double> r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            r[i] = u[i] + v[i];
        }
        return r;
    }
    case Carrier::Sets: {
        const std::uint64_t u = as_set(a);
        const std::uint64_t v = as_set(b);
        return op_ == SetOp::Union ? (u | v) : (u ^ v);
    }
    case Carrier::Reals: {
        const double x = as_real(a);
        const double y = as_real(b);
        if (x < 0.0 || y < 0.0) {
            throw std::invalid_argument("carrier holds nonnegative reals only");
        }
        return x + y;
    }
    }
    throw std::logic_error("unreachable");
}

double lp_norm(std::span<const double> v, double p) {
    if (!(p >= 1.0)) {
        throw std::invalid_argument("p-norm needs p >= 1");
    }
    if (std::isinf(p)) {
        double m = 0.0;
        for (const double x : v) {
            m = std::max(m, std::fabs(x));
        }
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (const double x : v) {
            s += std::fabs(x);
        }
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (const double x : v) {
            s += x * x;
        }
        return std::sqrt(s);
    }
    double s = 0.0;
    for (const double x : v) {
        s += std::pow(std::fabs(x), p);
    }
    return std::pow(s, 1.0 / p);
}

Scalar SemigroupStructure::valuation(const Element& e) const {
    switch (carrier_) {
    case Carrier::Lp:
        return Scalar::real(lp_norm(as_vec(e), p_));
    case Carrier::Sets: {
        const std::uint64_t mask = as_set(e);
        if (weights_.size() < 64 && (mask >> weights_.size()) != 0) {
            throw std::invalid_argument("set extends beyond the ground set");
        }
        Scalar sum(0);
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                sum += weights_[i];
            }
        }
        return sum;
    }
    case Carrier::Reals: {
        const double x = as_real(e);
        if (x < 0.0) {
            throw std::invalid_argument("carrier holds nonnegative reals only");
        }
        if (power_ == 1.0) {
            return Scalar::real(x);
        }
        if (power_ == 2.0) {
            return Scalar::real(x * x);
        }
        return Scalar::real(std::pow(x, power_));
    }
    }
    throw std::logic_error("unreachable");
}

std::optional<Element> SemigroupStructure::negate(const Element& e) const {
    switch (carrier_) {
    case Carrier::Lp: {
        std::vector<double> r = as_vec(e);
        for (double& x : r) {
            x = -x;
        }
        return Element{std::move(r)};
    }
    case Carrier::Sets:
        return op_ == SetOp::SymmDiff ? std::optional<Element>(e) : std::nullopt;
    case Carrier::Reals:
        return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

namespace {

Scalar checked_valuation(const SemigroupStructure& s, const Element& e) {
    Scalar f = s.valuation(e);
    if (f.is_nan() || f.sign() < 0) {
        throw std::domain_error("valuation produced a negative value");
    }
    return f;
}

struct TripleValuations {
    Scalar x, y, z, xy, yz, zx, xyz;
};

TripleValuations valuations_of(const SemigroupStructure& s, const Element& x,
                               const Element& y, const Element& z) {
    const Element xy = s.combine(x, y);
    const Element yz = s.combine(y, z);
    const Element zx = s.combine(z, x);
    const Element xyz = s.combine(xy, z);
    return {checked_valuation(s, x),  checked_valuation(s, y),
            checked_valuation(s, z),  checked_valuation(s, xy),
            checked_valuation(s, yz), checked_valuation(s, zx),
            checked_valuation(s, xyz)};
}

Scalar power_margin(const TripleValuations& v, int k, const TolerancePolicy& policy) {
    return pow_half_k(v.x, k, policy) + pow_half_k(v.y, k, policy) +
           pow_half_k(v.z, k, policy) + pow_half_k(v.xyz, k, policy) -
           pow_half_k(v.xy, k, policy) - pow_half_k(v.yz, k, policy) -
           pow_half_k(v.zx, k, policy);
}

} // namespace

Scalar hlawka_power_margin(const SemigroupStructure& s, const Element& x,
                           const Element& y, const Element& z, int k,
                           const TolerancePolicy& policy) {
    return power_margin(valuations_of(s, x, y, z), k, policy);
}

AdditivityReport check_strong_subadditive(
    const SemigroupStructure& s,
    std::span<const std::pair<Element, Element>> pairs,
    const TolerancePolicy& policy) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        const Scalar fx = checked_valuation(s, x);
        const Scalar fy = checked_valuation(s, y);
        const Scalar fxy = checked_valuation(s, s.combine(x, y));
        if (cmp_ge(fx + fy, fxy, policy) == Verdict::Fails ||
            cmp_ge(fx + fxy, fy, policy) == Verdict::Fails) {
            return {false, i};
        }
    }
    return {true, std::nullopt};
}

AdditivityReport check_superadditive(
    const SemigroupStructure& s,
    std::span<const std::pair<Element, Element>> pairs,
    const TolerancePolicy& policy) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        const Scalar fx = checked_valuation(s, x);
        const Scalar fy = checked_valuation(s, y);
        const Scalar fxy = checked_valuation(s, s.combine(x, y));
        if (cmp_ge(fxy, fx + fy, policy) == Verdict::Fails) {
            return {false, i};
        }
    }
    return {true, std::nullopt};
}

PropagationReport propagate_check(const SemigroupStructure& s,
                                  std::span<const std::array<Element, 3>> triples,
                                  int k0, int k_lo, int k_hi,
                                  AdditivityBranch branch,
                                  const TolerancePolicy& policy) {
    if (branch == AdditivityBranch::StrongSubadditive && k0 < -1) {
        throw std::invalid_argument("strong-subadditive propagation needs k0 >= -1");
    }
    if (branch == AdditivityBranch::Superadditive && k0 > 0) {
        throw std::invalid_argument("superadditive propagation needs k0 <= 0");
    }
    if (k_lo > k_hi) {
        throw std::invalid_argument("empty exponent range");
    }

    std::vector<std::pair<Element, Element>> pairs;
    pairs.reserve(triples.size() * 3);
    for (const auto& t : triples) {
        pairs.emplace_back(t[0], t[1]);
        pairs.emplace_back(t[1], t[2]);
        pairs.emplace_back(t[2], t[0]);
    }
    const AdditivityReport add =
        branch == AdditivityBranch::StrongSubadditive
            ? check_strong_subadditive(s, pairs, policy)
            : check_superadditive(s, pairs, policy);
    if (!add.ok) {
        throw std::domain_error("structure fails the branch's additivity "
                                "property on the supplied triples");
    }

    PropagationReport report;
    report.triples = triples.size();
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        const TripleValuations v = valuations_of(s, t[0], t[1], t[2]);
        const Scalar base = power_margin(v, k0, policy);
        if (cmp_ge(base, Scalar(0), policy) != Verdict::Holds) {
            continue;
        }
        ++report.premise_holds;
        const int from = branch == AdditivityBranch::StrongSubadditive
                             ? std::max(k_lo, k0)
                             : k_lo;
        const int to = branch == AdditivityBranch::StrongSubadditive
                           ? k_hi
                           : std::min(k_hi, k0);
        for (int k = from; k <= to; ++k) {
            const Scalar margin = power_margin(v, k, policy);
            if (cmp_ge(margin, Scalar(0), policy) == Verdict::Fails) {
                report.violations.push_back({i, k, margin.value()});
            }
        }
    }
    return report;
}

std::pair<Scalar, Scalar> measure_identity_residuals(
    const std::vector<Scalar>& weights, std::uint64_t a, std::uint64_t b,
    std::uint64_t c) {
    const SemigroupStructure s =
        SemigroupStructure::measurable_sets(weights, SetOp::Union);
    auto mu = [&](std::uint64_t mask) { return s.valuation(Element{mask}); };

    const Scalar singles = mu(a) + mu(b) + mu(c);
    const Scalar core = mu(a & b & c);

    const Scalar union_expr =
        singles - mu(a | b) - mu(b | c) - mu(c | a) + mu(a | b | c);
    const Scalar symm_expr =
        singles - mu(a ^ b) - mu(b ^ c) - mu(c ^ a) + mu(a ^ b ^ c);

    return {union_expr - core, symm_expr - Scalar(3) * core};
}

std::vector<double> diamond(std::span<const double> a, std::span<const double> b,
                            std::optional<int> k) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("diamond needs vectors of equal length");
    }
    std::vector<double> r(a.size());
    if (!k.has_value()) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] = std::max(std::fabs(a[i]), std::fabs(b[i]));
        }
        return r;
    }
    if (*k < 0) {
        throw std::invalid_argument("diamond order must be >= 0 (or infinite)");
    }
    if (*k == 0) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] + b[i];
        }
        return r;
    }
    if (*k > 30) {
        throw std::invalid_argument("diamond order out of supported range");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0.0 || b[i] < 0.0) {
            throw std::domain_error("diamond of positive order needs nonnegative entries");
        }
        double pa = a[i], pb = b[i];
        for (int j = 0; j < *k; ++j) { // 2^k-th powers by squaring
            pa *= pa;
            pb *= pb;
        }
        double t = pa + pb;
        for (int j = 0; j < *k; ++j) { // 2^k-th root by iterated sqrt
            t = std::sqrt(t);
        }
        r[i] = t;
    }
    return r;
}

Scalar diamond_hlawka_margin(double p, std::optional<int> k,
                             std::span<const double> a, std::span<const double> b,
                             std::span<const double> c) {
    const std::vector<double> ab = diamond(a, b, k);
    const std::vector<double> bc = diamond(b, c, k);
    const std::vector<double> ca = diamond(c, a, k);
    const std::vector<double> abc = diamond(ab, c, k);
    const double rhs = lp_norm(a, p) + lp_norm(b, p) + lp_norm(c, p) + lp_norm(abc, p);
    const double lhs = lp_norm(ab, p) + lp_norm(bc, p) + lp_norm(ca, p);
    return Scalar::real(rhs - lhs);
}

ResselReport ressel_check(const SemigroupStructure& s,
                          const integral::ConcaveMap& transform,
                          std::span<const std::array<Element, 3>> triples,
                          const TolerancePolicy& policy) {
    // The carrier must be a group with a symmetric valuation; spot-check
    // both on the supplied elements.
    for (const auto& t : triples) {
        for (const auto& e : t) {
            const auto neg = s.negate(e);
            if (!neg.has_value()) {
                throw std::invalid_argument("carrier has no negation; the check "
                                            "needs a group");
            }
            if (!eq_within(s.valuation(e), s.valuation(*neg), policy)) {
                throw std::domain_error("valuation is not symmetric");
            }
        }
        const std::pair<Element, Element> legs[3] = {
            {t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}};
        const AdditivityReport sub = check_strong_subadditive(s, legs, policy);
        if (!sub.ok) {
            throw std::domain_error("valuation is not strong subadditive on the "
                                    "supplied triples");
        }
    }

    ResselReport report;
    report.triples = triples.size();
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        const TripleValuations base = valuations_of(s, t[0], t[1], t[2]);
        auto apply = [&](const Scalar& v) { return transform(v, policy); };
        const TripleValuations f = {apply(base.x),  apply(base.y),
                                    apply(base.z),  apply(base.xy),
                                    apply(base.yz), apply(base.zx),
                                    apply(base.xyz)};
        const Scalar squared = power_margin(f, -1, policy);
        if (cmp_ge(squared, Scalar(0), policy) != Verdict::Holds) {
            continue;
        }
        ++report.premise_holds;
        const Scalar plain = power_margin(f, 0, policy);
        if (cmp_ge(plain, Scalar(0), policy) == Verdict::Fails) {
            report.violations.push_back({i, squared.value(), plain.value()});
        }
    }
    return report;
}

} // namespace hlawka::semigroup
