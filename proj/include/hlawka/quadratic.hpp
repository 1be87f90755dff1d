#ifndef HLAWKA_QUADRATIC_HPP
#define HLAWKA_QUADRATIC_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hlawka/relation.hpp"
#include "hlawka/scalar.hpp"

namespace hlawka::quadratic {

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Signature&) const = default;
};

/**
Sylvester signature of a symmetric rational matrix, computed by exact
symmetric Gaussian congruence with the usual row+column pivot repair when
the remaining diagonal is zero. Never touches floating point, so signs
near zero cannot be misread.
*/
Signature signature_of(const std::vector<std::vector<Scalar>>& matrix);

/**
Symmetric rational quadratic form q(x) = x^T Q x with its signature cached.
*/
class QuadraticForm {
public:
    static QuadraticForm from_matrix(std::vector<std::vector<Scalar>> matrix);
    static QuadraticForm euclidean(std::size_t n);              // diag(1,...,1)
    static QuadraticForm minkowski(std::size_t n);              // diag(1,-1,...,-1)
    static QuadraticForm mixed_diag(std::size_t n, std::size_t k); // diag(1 x k, -1 x (n-k))

    std::size_t dim() const { return dim_; }
    const Signature& signature() const { return signature_; }
    const Scalar& entry(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }

    Scalar evaluate(std::span<const Scalar> x) const;                     // q(x)
    Scalar bilinear(std::span<const Scalar> x, std::span<const Scalar> y) const; // x^T Q y

    /// Exactly diag(1,-1,...,-1). Cone membership is only defined here.
    bool is_canonical_minkowski() const;

private:
    QuadraticForm(std::size_t dim, std::vector<Scalar> flat, Signature sig)
        : dim_(dim), m_(std::move(flat)), signature_(sig) {}

    std::size_t dim_ = 0;
    std::vector<Scalar> m_; // row-major, exactly symmetric
    Signature signature_;
};

/// A vector together with its cached q-value under the owning form.
struct ConeVector {
    std::vector<Scalar> coords;
    Scalar q_value;
};

ConeVector make_cone_vector(const QuadraticForm& form, std::vector<Scalar> coords);

/**
Residual of the four-point expansion
  q(x+y+z) + q(x) + q(y) + q(z) - q(x+y) - q(x+z) - q(y+z),
identically zero for every symmetric form.
*/
Scalar four_point_residual(const QuadraticForm& form, std::span<const Scalar> x,
                           std::span<const Scalar> y, std::span<const Scalar> z);

/**
Membership in the future cone {q(x) > 0, x_1 > 0} of the canonical
Minkowski form (closed variant uses >=). Throws on non-canonical forms:
a general signature-(1,n-1) form must be brought to canonical coordinates
by the caller.
*/
bool future_cone_contains(const QuadraticForm& form, std::span<const Scalar> x,
                          bool closed);

/// (x^T Q y)^2 - q(x) q(y); nonnegative for x, y in the closed future cone.
Scalar azteca_margin(const QuadraticForm& form, std::span<const Scalar> x,
                     std::span<const Scalar> y, const TolerancePolicy& policy = {});

/// l(x+y) - l(x) - l(y) with l = sqrt(q); nonnegative on the closed cone.
Scalar reverse_triangle_margin(const QuadraticForm& form, std::span<const Scalar> x,
                               std::span<const Scalar> y,
                               const TolerancePolicy& policy = {});

/**
Raw three-point expression for l = sqrt(q),
  l(x)+l(y)+l(z)+l(x+y+z) - l(x+y) - l(y+z) - l(z+x),
with no signature precondition; defined whenever q is nonnegative on the
seven combinations. Positive-definite forms keep it nonnegative, the
canonical Minkowski cone keeps it nonpositive, and mixed signatures admit
both signs.
*/
Scalar hlawka_expression(const QuadraticForm& form, std::span<const Scalar> x,
                         std::span<const Scalar> y, std::span<const Scalar> z,
                         const TolerancePolicy& policy = {});

enum class Direction { Forward, Reverse };

/**
Signed margin of the three-point inequality for l = sqrt(q).
Forward (positive-definite forms):
  l(x)+l(y)+l(z)+l(x+y+z) - l(x+y) - l(y+z) - l(z+x), asserted >= 0.
Reverse (canonical Minkowski, all inputs in the closed future cone): the
negation, asserted >= 0.
*/
Scalar hlawka_margin(const QuadraticForm& form, std::span<const Scalar> x,
                     std::span<const Scalar> y, std::span<const Scalar> z,
                     Direction direction, const TolerancePolicy& policy = {});

/// Raised when a triple collapses to the a = 0 branch, which the callers
/// treat as a trivially-equality case rather than an instance.
struct DegenerateTriple : std::domain_error {
    using std::domain_error::domain_error;
};

/**
The three-point instance of the signature relation: index set {1,2,3},
unit weights, eta-images l(x), l(y), l(z), xi-images l(y+z), l(z+x),
l(x+y), a = l(x)+l(y)+l(z), b = l(x+y+z). Its two-form vanishes by the
four-point expansion and its one-form is the forward margin.
*/
relation::HlawkaInstance instance_from_triple(const QuadraticForm& form,
                                              std::span<const Scalar> x,
                                              std::span<const Scalar> y,
                                              std::span<const Scalar> z,
                                              const TolerancePolicy& policy = {});

/**
The mixed-signature construction on diag(1 x k, -1 x (n-k)), 2 <= k <= n-1:
five generators with q > 0 whose positive span contains a triple violating
the forward inequality and a triple violating the reverse one.
*/
struct MixedCounterexample {
    QuadraticForm form;
    std::vector<std::vector<Scalar>> generators; // v1..v5
    std::vector<Scalar> generator_q_values;      // all positive
    std::array<std::size_t, 3> triple_forward_violation{0, 1, 2}; // (v1,v2,v3)
    std::array<std::size_t, 3> triple_reverse_violation{2, 3, 4}; // (v3,v4,v5)
};

MixedCounterexample build_mixed_counterexample(std::size_t n, std::size_t k,
                                               const Scalar& epsilon);

/**
Deterministic strict-interior samples of the future cone in dimension n:
spatial part uniform in [-1,1]^(n-1), time coordinate |s|(1+u) + u with
u in (0,1].
*/
std::vector<ConeVector> sample_future_cone(std::size_t n, std::size_t count,
                                           std::uint64_t seed);

} // namespace hlawka::quadratic

#endif
