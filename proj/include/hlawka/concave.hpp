#ifndef HLAWKA_CONCAVE_HPP
#define HLAWKA_CONCAVE_HPP

#include "hlawka/scalar.hpp"

namespace hlawka::integral {

/**
Concave transform S : [0,inf) -> [0,inf), restricted to a closed set of
built-ins so that concavity is a testable invariant rather than a trust
assumption on user code.
*/
class ConcaveMap {
public:
    enum class Kind { Identity, Sqrt, Power, CappedLinear };

    static ConcaveMap identity() { return ConcaveMap(Kind::Identity); }
    static ConcaveMap sqrt() { return ConcaveMap(Kind::Sqrt); }
    static ConcaveMap power(double alpha);          // u^alpha, alpha in (0, 1]
    static ConcaveMap capped_linear(Scalar cap);    // min(u, cap), cap > 0

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    const Scalar& cap() const { return cap_; }
    const char* name() const;

    /// S(u) for u >= 0 (small negative doubles are clamped like sqrt).
    Scalar operator()(const Scalar& u, const TolerancePolicy& policy = {}) const;

    /// S(u)^2 given u^2; exact pass-through for the identity kind.
    Scalar squared_from_square(const Scalar& u_squared,
                               const TolerancePolicy& policy = {}) const;

private:
    explicit ConcaveMap(Kind k) : kind_(k) {}

    Kind kind_;
    double alpha_ = 1.0;
    Scalar cap_ = Scalar(1);
};

} // namespace hlawka::integral

#endif
