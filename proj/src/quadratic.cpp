#include "hlawka/quadratic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hlawka/rng.hpp"

namespace hlawka::quadratic {

namespace {

void require_rational_symmetric(const std::vector<std::vector<Scalar>>& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        throw std::invalid_argument("empty matrix");
    }
    for (const auto& row : m) {
        if (row.size() != n) {
            throw std::invalid_argument("matrix is not square");
        }
        for (const Scalar& e : row) {
            if (!e.is_rational()) {
                throw std::invalid_argument("signature needs exact rational entries");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(m[i][j] == m[j][i])) {
                throw std::invalid_argument("matrix is not symmetric");
            }
        }
    }
}

std::vector<Scalar> add_vec(std::span<const Scalar> a, std::span<const Scalar> b) {
    std::vector<Scalar> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

} // namespace

Signature signature_of(const std::vector<std::vector<Scalar>>& matrix) {
    require_rational_symmetric(matrix);
    const std::size_t n = matrix.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = matrix[i][j].rat();
        }
    }

    auto swap_rows_cols = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        for (std::size_t r = 0; r < n; ++r) {
            std::swap(m[r][a], m[r][b]);
        }
    };

    Signature sig;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(m[i][i]) == 0) {
            // Prefer a later nonzero diagonal entry.
            std::size_t pivot = n;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (sgn(m[j][j]) != 0) {
                    pivot = j;
                    break;
                }
            }
            if (pivot < n) {
                swap_rows_cols(i, pivot);
            } else {
                // All-zero diagonal: add row/col l into row/col j across a
                // nonzero off-diagonal entry, which makes m[j][j] = 2 m[j][l].
                bool fixed = false;
                for (std::size_t j = i; j < n && !fixed; ++j) {
                    for (std::size_t l = j + 1; l < n && !fixed; ++l) {
                        if (sgn(m[j][l]) != 0) {
                            for (std::size_t c = 0; c < n; ++c) {
                                m[j][c] += m[l][c];
                            }
                            for (std::size_t r = 0; r < n; ++r) {
                                m[r][j] += m[r][l];
                            }
                            if (j != i) {
                                swap_rows_cols(i, j);
                            }
                            fixed = true;
                        }
                    }
                }
                if (!fixed) {
                    sig.zero += static_cast<int>(n - i);
                    return sig;
                }
            }
        }
        const mpq_class pivot = m[i][i];
        if (sgn(pivot) > 0) {
            ++sig.positive;
        } else {
            ++sig.negative;
        }
        // Schur complement step: trailing block -= outer(col_i) / pivot.
        for (std::size_t r = i + 1; r < n; ++r) {
            if (sgn(m[r][i]) == 0) {
                continue;
            }
            const mpq_class f = m[r][i] / pivot;
            for (std::size_t c = i + 1; c < n; ++c) {
                m[r][c] -= f * m[i][c];
            }
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            m[r][i] = 0;
            m[i][r] = 0;
        }
    }
    return sig;
}

QuadraticForm QuadraticForm::from_matrix(std::vector<std::vector<Scalar>> matrix) {
    const Signature sig = signature_of(matrix);
    const std::size_t n = matrix.size();
    std::vector<Scalar> flat;
    flat.reserve(n * n);
    for (auto& row : matrix) {
        for (auto& e : row) {
            flat.push_back(std::move(e));
        }
    }
    return QuadraticForm(n, std::move(flat), sig);
}

namespace {

std::vector<std::vector<Scalar>> diag_matrix(std::size_t n, std::size_t positives) {
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = i < positives ? Scalar(1) : Scalar(-1);
    }
    return m;
}

} // namespace

QuadraticForm QuadraticForm::euclidean(std::size_t n) {
    return from_matrix(diag_matrix(n, n));
}

QuadraticForm QuadraticForm::minkowski(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("Minkowski form needs dimension >= 2");
    }
    return from_matrix(diag_matrix(n, 1));
}

QuadraticForm QuadraticForm::mixed_diag(std::size_t n, std::size_t k) {
    if (k > n) {
        throw std::invalid_argument("signature split exceeds dimension");
    }
    return from_matrix(diag_matrix(n, k));
}

Scalar QuadraticForm::evaluate(std::span<const Scalar> x) const {
    return bilinear(x, x);
}

Scalar QuadraticForm::bilinear(std::span<const Scalar> x,
                               std::span<const Scalar> y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw std::invalid_argument("vector dimension does not match the form");
    }
    Scalar sum(0);
    for (std::size_t i = 0; i < dim_; ++i) {
        Scalar row(0);
        for (std::size_t j = 0; j < dim_; ++j) {
            const Scalar& q = m_[i * dim_ + j];
            if (q.is_rational() && sgn(q.rat()) == 0) {
                continue;
            }
            row += q * y[j];
        }
        sum += x[i] * row;
    }
    return sum;
}

bool QuadraticForm::is_canonical_minkowski() const {
    if (dim_ < 2) {
        return false;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const Scalar& e = m_[i * dim_ + j];
            if (!e.is_rational()) {
                return false;
            }
            const Scalar expect = (i == j) ? (i == 0 ? Scalar(1) : Scalar(-1)) : Scalar(0);
            if (!(e == expect)) {
                return false;
            }
        }
    }
    return true;
}

ConeVector make_cone_vector(const QuadraticForm& form, std::vector<Scalar> coords) {
    Scalar q = form.evaluate(coords);
    return ConeVector{std::move(coords), std::move(q)};
}

Scalar four_point_residual(const QuadraticForm& form, std::span<const Scalar> x,
                           std::span<const Scalar> y, std::span<const Scalar> z) {
    const auto xy = add_vec(x, y);
    const auto xz = add_vec(x, z);
    const auto yz = add_vec(y, z);
    const auto xyz = add_vec(xy, z);
    return form.evaluate(xyz) + form.evaluate(x) + form.evaluate(y) +
           form.evaluate(z) - form.evaluate(xy) - form.evaluate(xz) -
           form.evaluate(yz);
}

bool future_cone_contains(const QuadraticForm& form, std::span<const Scalar> x,
                          bool closed) {
    if (!form.is_canonical_minkowski()) {
        throw std::invalid_argument(
            "future cone is only defined for the canonical Minkowski form; "
            "supply coordinates in which the form is diag(1,-1,...,-1)");
    }
    if (x.size() != form.dim()) {
        throw std::invalid_argument("vector dimension does not match the form");
    }
    const int q_sign = form.evaluate(x).sign();
    const int t_sign = x[0].sign();
    if (closed) {
        return q_sign >= 0 && t_sign >= 0;
    }
    return q_sign > 0 && t_sign > 0;
}

namespace {

void require_in_closed_cone(const QuadraticForm& form, std::span<const Scalar> v,
                            const char* name) {
    if (!future_cone_contains(form, v, /*closed=*/true)) {
        throw std::domain_error(std::string(name) +
                                " is outside the closed future cone");
    }
}

} // namespace

Scalar azteca_margin(const QuadraticForm& form, std::span<const Scalar> x,
                     std::span<const Scalar> y, const TolerancePolicy&) {
    require_in_closed_cone(form, x, "x");
    require_in_closed_cone(form, y, "y");
    const Scalar b = form.bilinear(x, y);
    return b * b - form.evaluate(x) * form.evaluate(y);
}

Scalar reverse_triangle_margin(const QuadraticForm& form, std::span<const Scalar> x,
                               std::span<const Scalar> y,
                               const TolerancePolicy& policy) {
    require_in_closed_cone(form, x, "x");
    require_in_closed_cone(form, y, "y");
    const auto xy = add_vec(x, y);
    return sqrt_scalar(form.evaluate(xy), policy) -
           sqrt_scalar(form.evaluate(x), policy) -
           sqrt_scalar(form.evaluate(y), policy);
}

Scalar hlawka_margin(const QuadraticForm& form, std::span<const Scalar> x,
                     std::span<const Scalar> y, std::span<const Scalar> z,
                     Direction direction, const TolerancePolicy& policy) {
    const std::size_t n = form.dim();
    if (direction == Direction::Forward) {
        if (form.signature() != Signature{static_cast<int>(n), 0, 0}) {
            throw std::domain_error("forward margin needs a positive-definite form");
        }
    } else {
        if (!form.is_canonical_minkowski()) {
            throw std::domain_error("reverse margin needs the canonical Minkowski form");
        }
        require_in_closed_cone(form, x, "x");
        require_in_closed_cone(form, y, "y");
        require_in_closed_cone(form, z, "z");
    }
    const auto xy = add_vec(x, y);
    const auto yz = add_vec(y, z);
    const auto zx = add_vec(z, x);
    const auto xyz = add_vec(xy, z);
    auto l = [&](std::span<const Scalar> v) {
        return sqrt_scalar(form.evaluate(v), policy);
    };
    const Scalar forward = l(x) + l(y) + l(z) + l(xyz) - l(xy) - l(yz) - l(zx);
    return direction == Direction::Forward ? forward : -forward;
}

relation::HlawkaInstance instance_from_triple(const QuadraticForm& form,
                                              std::span<const Scalar> x,
                                              std::span<const Scalar> y,
                                              std::span<const Scalar> z,
                                              const TolerancePolicy& policy) {
    const auto xy = add_vec(x, y);
    const auto yz = add_vec(y, z);
    const auto zx = add_vec(z, x);
    const auto xyz = add_vec(xy, z);
    auto l = [&](std::span<const Scalar> v) {
        return sqrt_scalar(form.evaluate(v), policy);
    };
    const Scalar lx = l(x), ly = l(y), lz = l(z);
    const Scalar a = lx + ly + lz;
    if (a.is_zero()) {
        throw DegenerateTriple("all three lengths vanish; the inequality is "
                               "trivially an equality");
    }
    const Scalar b = l(xyz);
    relation::WeightedFunctional unit({Scalar(1), Scalar(1), Scalar(1)});
    return relation::HlawkaInstance(std::move(unit), {lx, ly, lz},
                                    {l(yz), l(zx), l(xy)}, a, b);
}

MixedCounterexample build_mixed_counterexample(std::size_t n, std::size_t k,
                                               const Scalar& epsilon) {
    if (k < 2 || k + 1 > n) {
        throw std::invalid_argument("need 2 <= k <= n-1");
    }
    if (!epsilon.is_rational() || epsilon.sign() <= 0 ||
        cmp_ge(epsilon, Scalar(1)) != Verdict::Fails) {
        throw std::invalid_argument("epsilon must be a rational in (0, 1)");
    }

    MixedCounterexample ce{QuadraticForm::mixed_diag(n, k), {}, {}};

    // v1 = v2 = (1, 1, e, ..., e | 1, e, ..., e) split at the signature.
    std::vector<Scalar> v1(n, epsilon);
    v1[0] = Scalar(1);
    v1[1] = Scalar(1);
    v1[k] = Scalar(1);
    // v3..v5 start (1,1,...), (2,1,...), (1,2,...) with e elsewhere.
    std::vector<Scalar> v3(n, epsilon), v4(n, epsilon), v5(n, epsilon);
    v3[0] = Scalar(1);
    v3[1] = Scalar(1);
    v4[0] = Scalar(2);
    v4[1] = Scalar(1);
    v5[0] = Scalar(1);
    v5[1] = Scalar(2);

    ce.generators = {v1, v1, v3, v4, v5};
    for (const auto& v : ce.generators) {
        Scalar q = ce.form.evaluate(v);
        if (q.sign() <= 0) {
            throw std::domain_error("generator fell outside the positive set; "
                                    "choose a smaller epsilon");
        }
        ce.generator_q_values.push_back(std::move(q));
    }
    return ce;
}

std::vector<ConeVector> sample_future_cone(std::size_t n, std::size_t count,
                                           std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("future cone needs dimension >= 2");
    }
    if (count < 1) {
        throw std::invalid_argument("need at least one sample");
    }
    const QuadraticForm form = QuadraticForm::minkowski(n);
    Rng rng(seed);
    std::vector<ConeVector> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Scalar> coords(n);
        double norm_sq = 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            const double c = rng.uniform(-1.0, 1.0);
            norm_sq += c * c;
            coords[i] = Scalar::real(c);
        }
        const double u = 1.0 - rng.uniform01(); // (0, 1]
        coords[0] = Scalar::real(std::sqrt(norm_sq) * (1.0 + u) + u);
        out.push_back(make_cone_vector(form, std::move(coords)));
    }
    return out;
}

} // namespace hlawka::quadratic
