#include "hlawka/scalar.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hlawka {

Scalar::Scalar(long long num, long long den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    v_ = std::move(q);
}

void Scalar::canonical() {
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        if (q->get_den() == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        q->canonicalize();
    }
}

Scalar Scalar::rational_from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational literal: \"" + text + "\"");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("rational literal with zero denominator: \"" + text + "\"");
    }
    q.canonicalize();
    return Scalar(std::move(q));
}

const mpq_class& Scalar::rat() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        return *q;
    }
    throw std::logic_error("rat() on a double-backend scalar");
}

double Scalar::value() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        return q->get_d();
    }
    return std::get<double>(v_);
}

int Scalar::sign() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        return sgn(*q);
    }
    double d = std::get<double>(v_);
    if (std::isnan(d)) {
        throw std::domain_error("sign of NaN");
    }
    return (d > 0.0) - (d < 0.0);
}

bool Scalar::is_nan() const {
    return is_real() && std::isnan(std::get<double>(v_));
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        return q->get_str();
    }
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(v_);
    return os.str();
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        return Scalar(mpq_class(-*q));
    }
    return real(-std::get<double>(v_));
}

namespace {

template <typename RatOp, typename DblOp>
Scalar& combine(Scalar& a, const Scalar& b, RatOp rat_op, DblOp dbl_op) {
    if (a.is_rational() && b.is_rational()) {
        a = Scalar(rat_op(a.rat(), b.rat()));
    } else {
        a = Scalar::real(dbl_op(a.value(), b.value()));
    }
    return a;
}

} // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    return combine(*this, o,
                   [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); },
                   [](double x, double y) { return x + y; });
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return combine(*this, o,
                   [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); },
                   [](double x, double y) { return x - y; });
}

Scalar& Scalar::operator*=(const Scalar& o) {
    return combine(*this, o,
                   [](const mpq_class& x, const mpq_class& y) { return mpq_class(x * y); },
                   [](double x, double y) { return x * y; });
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_rational() && sgn(o.rat()) == 0 && is_rational()) {
        throw std::domain_error("exact division by zero");
    }
    return combine(*this, o,
                   [](const mpq_class& x, const mpq_class& y) { return mpq_class(x / y); },
                   [](double x, double y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) {
        return a.rat() == b.rat();
    }
    return a.value() == b.value();
}

Scalar abs_scalar(const Scalar& x) {
    return x.sign() < 0 ? -x : x;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) {
        return a.rat() < b.rat();
    }
    return a.value() < b.value();
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Marginal: return "marginal";
    }
    return "?";
}

TolerancePolicy::TolerancePolicy(double abs, double rel)
    : abs_tol(abs), rel_tol(rel) {
    if (!std::isfinite(abs) || !std::isfinite(rel) || abs < 0.0 || rel < 0.0) {
        throw std::invalid_argument("tolerances must be finite and nonnegative");
    }
}

double TolerancePolicy::effective(double x, double y) const {
    return std::max(abs_tol, rel_tol * std::max(std::fabs(x), std::fabs(y)));
}

Verdict cmp_ge(const Scalar& x, const Scalar& y, const TolerancePolicy& policy) {
    if (x.is_nan() || y.is_nan()) {
        throw std::domain_error("cmp_ge on NaN: invalid upstream computation");
    }
    if (x.is_rational() && y.is_rational()) {
        return x.rat() >= y.rat() ? Verdict::Holds : Verdict::Fails;
    }
    const double xv = x.value();
    const double yv = y.value();
    const double d = xv - yv;
    const double tol = policy.effective(xv, yv);
    if (d >= tol) {
        return Verdict::Holds;
    }
    if (d <= -tol) {
        return Verdict::Fails;
    }
    return Verdict::Marginal;
}

bool eq_within(const Scalar& x, const Scalar& y, const TolerancePolicy& policy) {
    if (x.is_rational() && y.is_rational()) {
        return x.rat() == y.rat();
    }
    if (x.is_nan() || y.is_nan()) {
        throw std::domain_error("eq_within on NaN: invalid upstream computation");
    }
    const double xv = x.value();
    const double yv = y.value();
    return std::fabs(xv - yv) <= policy.effective(xv, yv);
}

Scalar sqrt_scalar(const Scalar& x, const TolerancePolicy& policy) {
    if (x.is_rational()) {
        const mpq_class& q = x.rat();
        const int s = sgn(q);
        if (s < 0) {
            throw std::domain_error("square root of a negative exact value "
                                    "(length of a vector outside the cone)");
        }
        if (s == 0) {
            return Scalar(0);
        }
        const mpz_class& num = q.get_num();
        const mpz_class& den = q.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return Scalar(mpq_class(rn, rd));
        }
        return Scalar::real(std::sqrt(q.get_d()));
    }
    double v = x.value();
    if (std::isnan(v)) {
        throw std::domain_error("square root of NaN");
    }
    if (v < -policy.abs_tol) {
        throw std::domain_error("square root of a negative value "
                                "(length of a vector outside the cone)");
    }
    if (v < 0.0) {
        v = 0.0;
    }
    return Scalar::real(std::sqrt(v));
}

Scalar pow_half_k(const Scalar& x, int k, const TolerancePolicy& policy) {
    if (k == 0) {
        return x;
    }
    if (std::abs(k) > 30) {
        throw std::invalid_argument("pow_half_k exponent out of supported range");
    }
    if (k > 0) {
        if (x.is_rational() && x.sign() < 0) {
            throw std::domain_error("fractional power of a negative exact value");
        }
        Scalar r = x;
        for (int i = 0; i < k; ++i) {
            r = sqrt_scalar(r, policy);
        }
        return r;
    }
    // k < 0: integer power 2^|k| by repeated squaring, exact on rationals.
    Scalar r = x;
    for (int i = 0; i < -k; ++i) {
        r *= r;
    }
    return r;
}

} // namespace hlawka
