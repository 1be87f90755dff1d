#ifndef HLAWKA_INTEGRAL_HPP
#define HLAWKA_INTEGRAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hlawka/concave.hpp"
#include "hlawka/scalar.hpp"

namespace hlawka::integral {

/// Finite measure as a nonnegative weight per atom; mu(Omega) is cached.
class DiscreteMeasure {
public:
    explicit DiscreteMeasure(std::vector<Scalar> weights);

    std::size_t size() const { return weights_.size(); }
    const std::vector<Scalar>& weights() const { return weights_; }
    const Scalar& total() const { return total_; }

    /// Integral of a scalar function given pointwise.
    Scalar integrate(std::span<const Scalar> values) const;

    bool is_uniform() const;

private:
    std::vector<Scalar> weights_;
    Scalar total_;
};

/// Function from the atoms into R^d, stored pointwise.
class VectorFunction {
public:
    explicit VectorFunction(std::vector<std::vector<Scalar>> values);

    std::size_t size() const { return values_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Scalar>& at(std::size_t i) const { return values_[i]; }

private:
    std::vector<std::vector<Scalar>> values_;
    std::size_t dim_ = 0;
};

/// Exact dot product (rational inputs stay rational).
Scalar dot(std::span<const Scalar> u, std::span<const Scalar> v);

/// Euclidean norm via sqrt of the exact dot product.
Scalar norm(std::span<const Scalar> v, const TolerancePolicy& policy = {});

/// Discrete Bochner integral: sum_i mu_i f(i).
std::vector<Scalar> aggregate(const DiscreteMeasure& measure,
                              const VectorFunction& f);

/// Premise violation carrying the offending atom.
struct PremiseViolation : std::domain_error {
    PremiseViolation(const std::string& what, std::size_t witness_)
        : std::domain_error(what), witness(witness_) {}
    std::size_t witness;
};

/**
One instance of the transformed relation: a measure, the pointwise map
g_hat, a fixed aggregate vector, a concave transform, and the control
constant. Requires control != 0 and (control > 0 or S(|aggregate|) > 0).
*/
struct GroupmainInstance {
    DiscreteMeasure measure;
    VectorFunction g_hat;
    std::vector<Scalar> aggregate_g;
    ConcaveMap transform;
    Scalar control;

    GroupmainInstance(DiscreteMeasure measure_, VectorFunction g_hat_,
                      std::vector<Scalar> aggregate_g_, ConcaveMap transform_,
                      Scalar control_, const TolerancePolicy& policy = {});
};

struct PremiseCheck {
    bool ok = true;
    std::optional<std::size_t> witness;
};

/**
Verifies the pointwise control: at every atom where
S|g_hat| + S|aggregate| differs from S|g_hat - aggregate| beyond
tolerance, control >= S|g_hat| + S|aggregate - g_hat| must hold.
*/
PremiseCheck groupmain_premises(const GroupmainInstance& inst,
                                const TolerancePolicy& policy = {});

struct GroupmainMargins {
    Scalar two_form;
    Scalar one_form;
    Scalar scale; // C = 2 T(S|g_hat|) / control
};

/// Margins of the squared and plain inequalities; throws PremiseViolation
/// when the pointwise control fails.
GroupmainMargins groupmain_margins(const GroupmainInstance& inst,
                                   const TolerancePolicy& policy = {});

/**
Residual of the inner-product expansion
  T(|f - Tf|^2) - [ T(|f|^2) + |Tf|^2 (T(1) - 2) ]
with Tf the aggregate under the same weights; exactly zero on rationals.
*/
Scalar inner_identity_residual(const DiscreteMeasure& measure,
                               const VectorFunction& f);

/**
Margin of the integral three-point inequality
  (mu(Omega) - C) ||int f|| + int ||g|| - int ||g - int f||,  C = 2 int||g|| / int||f||.
Preconditions: nonzero aggregates, matching direction
int f / int||f|| = int g / int||g||, and the pointwise premise
int||f|| >= ||g(w)|| + ||g(w) - int f|| off the ray {-g(w) = alpha int f}.
*/
Scalar integral_hlawka_margin(const DiscreteMeasure& measure,
                              const VectorFunction& f, const VectorFunction& g,
                              const TolerancePolicy& policy = {});

/**
Scaled variant: (mu(Omega) - 2t) ||int f|| + t int||f|| - int ||t f - int f||
for t >= 0, under the premise int||f|| >= t||f(w)|| + ||t f(w) - int f||
off the ray set.
*/
Scalar t_variant_margin(const DiscreteMeasure& measure, const VectorFunction& f,
                        const Scalar& t, const TolerancePolicy& policy = {});

/**
Rearrangement variant with f_bar = f o permutation. Nontrivial
permutations require uniform weights (the only discrete case where the
rearranged function keeps both integrals).
*/
Scalar rearrangement_margin(const DiscreteMeasure& measure,
                            const VectorFunction& f,
                            std::span<const std::size_t> permutation,
                            const TolerancePolicy& policy = {});

/**
Weighted multi-point variant:
  (sum mu_i - 2 lambda) ||sum mu_i x_i|| + lambda sum mu_i ||x_i||
    - sum mu_i ||lambda x_i - sum mu_j x_j||
under the premise
  sum mu_i ||x_i|| >= lambda mu_i ||x_i|| + ||lambda x_i - sum mu_j x_j||
at every i, exactly as displayed (the weight sits inside the premise).
*/
Scalar weighted_variant_margin(std::span<const Scalar> mu,
                               const std::vector<std::vector<Scalar>>& points,
                               const Scalar& lambda,
                               const TolerancePolicy& policy = {});

} // namespace hlawka::integral

#endif
