#ifndef HLAWKA_SCALAR_HPP
#define HLAWKA_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

namespace hlawka {

/**
Dual-backend scalar: an exact rational (GMP, always canonical with positive
denominator) or a binary double. Arithmetic on two rationals stays rational;
any operation that mixes backends, or applies a non-rational function to a
non-perfect-square rational, yields a double.

The exact backend is what makes identity checks meaningful: a residual of a
polynomial identity evaluated on rationals is zero bit-exactly or the
implementation is wrong. Doubles carry everything involving square roots.
*/
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(int n) : v_(mpq_class(n)) {}
    Scalar(long long n) : v_(mpq_class(static_cast<long>(n))) {}
    Scalar(long long num, long long den);
    explicit Scalar(mpq_class q) : v_(std::move(q)) { canonical(); }

    /// Double-backend scalar. The only way to build one on purpose.
    static Scalar real(double x) { Scalar s; s.v_ = x; return s; }

    /// Parse "p/q" or "p" (base 10) into an exact rational.
    static Scalar rational_from_string(const std::string& text);

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    bool is_real() const { return !is_rational(); }

    /// Exact value; throws if this scalar lives on the double backend.
    const mpq_class& rat() const;

    /// Value as a double (exact rationals are rounded).
    double value() const;

    /// -1, 0 or +1. Exact for rationals; throws on NaN.
    int sign() const;

    bool is_zero() const { return sign() == 0; }
    bool is_nan() const;

    /// "p/q" or "p" for rationals, decimal for doubles.
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Exact equality for two rationals, double equality otherwise.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void canonical();
    std::variant<mpq_class, double> v_;
};

Scalar abs_scalar(const Scalar& x);

/// Backend-aware strict order (exact on two rationals).
bool scalar_less(const Scalar& a, const Scalar& b);

/// Three-valued comparison outcome. Marginal means "inside the tolerance
/// band"; reports count it separately and never as a violation.
enum class Verdict { Holds, Fails, Marginal };

const char* to_string(Verdict v);

struct TolerancePolicy {
    double abs_tol = 1e-9;
    double rel_tol = 1e-12;

    TolerancePolicy() = default;
    TolerancePolicy(double abs, double rel);

    /// max(abs_tol, rel_tol * max(|x|, |y|))
    double effective(double x, double y) const;
};

/**
Is x >= y?  Two exact rationals compare exactly and never yield Marginal.
As soon as a double is involved: Holds if x - y >= tol_eff, Fails if
x - y <= -tol_eff, Marginal in between. NaN input is a domain error, since
it signals an invalid upstream computation.
*/
Verdict cmp_ge(const Scalar& x, const Scalar& y,
               const TolerancePolicy& policy = {});

/// Equality within the tolerance band (exact on two rationals).
bool eq_within(const Scalar& x, const Scalar& y,
               const TolerancePolicy& policy = {});

/**
Square root. Stays exact when x is a perfect square of a rational, falls to
the double backend otherwise. Doubles slightly below zero (>= -abs_tol) are
clamped to zero; anything lower is a domain error.
*/
Scalar sqrt_scalar(const Scalar& x, const TolerancePolicy& policy = {});

/**
x^(1/2^k). k = 0 is the identity, k > 0 is k iterated square roots,
k < 0 is the exact integer power 2^|k| (exact on rationals).
*/
Scalar pow_half_k(const Scalar& x, int k, const TolerancePolicy& policy = {});

} // namespace hlawka

#endif
