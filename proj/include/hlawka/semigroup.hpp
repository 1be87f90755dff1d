#ifndef HLAWKA_SEMIGROUP_HPP
#define HLAWKA_SEMIGROUP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hlawka/concave.hpp"
#include "hlawka/scalar.hpp"

namespace hlawka::semigroup {

enum class SetOp { Union, SymmDiff };

/// Semigroup element: an Lp vector, a subset of a small ground set, or a
/// nonnegative real, depending on the owning structure's carrier.
using Element = std::variant<std::vector<double>, std::uint64_t, double>;

/**
Concrete abelian semigroup with a nonnegative valuation F:
  - real vectors under + with F = ||.||_p (p in [1, inf]),
  - subsets of a weighted ground set (<= 64 points) under union or
    symmetric difference with F = the measure,
  - nonnegative reals under + with F(x) = x^power.
Measure valuations stay exact rational; the others live on doubles.
*/
class SemigroupStructure {
public:
    static SemigroupStructure lp_vectors(std::size_t dim, double p);
    static SemigroupStructure measurable_sets(std::vector<Scalar> weights, SetOp op);
    static SemigroupStructure nonneg_reals(double power);

    Element combine(const Element& a, const Element& b) const;
    Scalar valuation(const Element& e) const; // F, always >= 0

    bool is_measure() const { return carrier_ == Carrier::Sets; }
    bool is_lp() const { return carrier_ == Carrier::Lp; }
    /// Negation exists only for the group carriers (vectors; sets under
    /// symmetric difference are self-inverse).
    std::optional<Element> negate(const Element& e) const;

private:
    enum class Carrier { Lp, Sets, Reals };
    SemigroupStructure() = default;

    Carrier carrier_ = Carrier::Lp;
    std::size_t dim_ = 0;
    double p_ = 2.0;
    std::vector<Scalar> weights_;
    SetOp op_ = SetOp::Union;
    double power_ = 1.0;
};

/// ||v||_p on doubles; p may be infinity.
double lp_norm(std::span<const double> v, double p);

/**
Margin of the power-scaled three-point inequality at exponent 1/2^k:
  sum of F^(1/2^k) over {x, y, z, x+y+z} minus the sum over the pairwise
  combinations. Nonnegative margin asserts the inequality.
*/
Scalar hlawka_power_margin(const SemigroupStructure& s, const Element& x,
                           const Element& y, const Element& z, int k,
                           const TolerancePolicy& policy = {});

struct AdditivityReport {
    bool ok = true;
    std::optional<std::size_t> witness; // index of the first failing pair
};

/// F(x)+F(y) >= F(x+y) and F(x)+F(x+y) >= F(y) on every sampled pair.
AdditivityReport check_strong_subadditive(const SemigroupStructure& s,
                                          std::span<const std::pair<Element, Element>> pairs,
                                          const TolerancePolicy& policy = {});

/// F(x)+F(y) <= F(x+y) on every sampled pair.
AdditivityReport check_superadditive(const SemigroupStructure& s,
                                     std::span<const std::pair<Element, Element>> pairs,
                                     const TolerancePolicy& policy = {});

enum class AdditivityBranch { StrongSubadditive, Superadditive };

struct PropagationViolation {
    std::size_t triple;
    int k;
    double margin;
};

struct PropagationReport {
    std::size_t triples = 0;
    std::size_t premise_holds = 0;
    std::vector<PropagationViolation> violations; // must stay empty
};

/**
Checks the exponent-propagation claim on sampled triples: whenever the
margin at k0 is nonnegative, the margin stays nonnegative for every k in
[k_lo, k_hi] on the branch's side of k0 (k >= k0 for strong subadditive
valuations with k0 >= -1, k <= k0 for superadditive ones with k0 <= 0).
The matching additivity property is re-checked on the triples' pairs.
*/
PropagationReport propagate_check(const SemigroupStructure& s,
                                  std::span<const std::array<Element, 3>> triples,
                                  int k0, int k_lo, int k_hi,
                                  AdditivityBranch branch,
                                  const TolerancePolicy& policy = {});

/**
Residuals of the two three-set bookkeeping identities on a weighted ground
set, exact on rational weights:
  union:     mu(A)+mu(B)+mu(C)-mu(AuB)-mu(BuC)-mu(CuA)+mu(AuBuC) - mu(A^B^C)
  symm diff: same expression under the symmetric difference, minus
             3 mu(A^B^C).
*/
std::pair<Scalar, Scalar> measure_identity_residuals(
    const std::vector<Scalar>& weights, std::uint64_t a, std::uint64_t b,
    std::uint64_t c);

/**
Pointwise interpolation between addition and max:
  k = 0      -> a + b
  1 <= k     -> (a^(2^k) + b^(2^k))^(1/2^k), entries must be >= 0
  k = nullopt -> max(|a|, |b|)  (the infinite-order case)
*/
std::vector<double> diamond(std::span<const double> a, std::span<const double> b,
                            std::optional<int> k);

/**
RHS - LHS of the three-point inequality for the diamond operation in the
p-norm (nonnegative asserts it). The assertion is only claimed for
p in [2^k, 2^(k+1)] (and for p = inf at k = inf); the margin itself is
defined for any p >= 1.
*/
Scalar diamond_hlawka_margin(double p, std::optional<int> k,
                             std::span<const double> a, std::span<const double> b,
                             std::span<const double> c);

struct ResselViolation {
    std::size_t triple;
    double squared_margin;
    double plain_margin;
};

struct ResselReport {
    std::size_t triples = 0;
    std::size_t premise_holds = 0;
    std::vector<ResselViolation> violations; // must stay empty
};

/**
For F = S(|.|) built from the structure's valuation and a concave
transform: on every triple where the squared inequality holds, the plain
one must hold as well (exponent propagation from k = -1 to k = 0).
Requires a group carrier with a symmetric valuation.
*/
ResselReport ressel_check(const SemigroupStructure& s,
                          const integral::ConcaveMap& transform,
                          std::span<const std::array<Element, 3>> triples,
                          const TolerancePolicy& policy = {});

} // namespace hlawka::semigroup

#endif
