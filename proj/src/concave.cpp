#include "hlawka/concave.hpp"

#include <cmath>
#include <stdexcept>

namespace hlawka::integral {

ConcaveMap ConcaveMap::power(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw std::invalid_argument("power transform needs alpha in (0, 1]");
    }
    ConcaveMap m(Kind::Power);
    m.alpha_ = alpha;
    return m;
}

ConcaveMap ConcaveMap::capped_linear(Scalar cap) {
    if (cap.sign() <= 0) {
        throw std::invalid_argument("cap must be positive");
    }
    ConcaveMap m(Kind::CappedLinear);
    m.cap_ = std::move(cap);
    return m;
}

const char* ConcaveMap::name() const {
    switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Sqrt: return "sqrt";
    case Kind::Power: return "power";
    case Kind::CappedLinear: return "capped_linear";
    }
    return "?";
}

Scalar ConcaveMap::operator()(const Scalar& u, const TolerancePolicy& policy) const {
    switch (kind_) {
    case Kind::Identity:
        return u;
    case Kind::Sqrt:
        return sqrt_scalar(u, policy);
    case Kind::Power: {
        double v = u.value();
        if (v < -policy.abs_tol) {
            throw std::domain_error("concave transform applied to a negative value");
        }
        if (v < 0.0) {
            v = 0.0;
        }
        return Scalar::real(std::pow(v, alpha_));
    }
    case Kind::CappedLinear:
        return scalar_less(cap_, u) ? cap_ : u;
    }
    throw std::logic_error("unreachable");
}

Scalar ConcaveMap::squared_from_square(const Scalar& u_squared,
                                       const TolerancePolicy& policy) const {
    if (kind_ == Kind::Identity) {
        return u_squared;
    }
    const Scalar s = (*this)(sqrt_scalar(u_squared, policy), policy);
    return s * s;
}

} // namespace hlawka::integral
