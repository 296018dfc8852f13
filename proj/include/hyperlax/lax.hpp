#pragma once

// Determinantal representations: symbolic expansion of det(sum_j w_j G_j),
// Lax-form certificates det(xI + yB + zC), the diagonal representation of
// hyperbolic binary forms, positive-definite slices, and the transport of
// certificates between real zero polynomials on R^2 and hyperbolic
// polynomials on R^3.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperlax/matrix.hpp"
#include "hyperlax/polynomial.hpp"
#include "hyperlax/realroots.hpp"
#include "hyperlax/transforms.hpp"

namespace hyperlax {

/// d x d symmetric rational matrix. d = 0 is allowed and has determinant 1.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t d) : m_(d, d) {}

    static SymMatrix identity(std::size_t d) {
        SymMatrix s(d);
        for (std::size_t i = 0; i < d; ++i) s.m_(i, i) = 1;
        return s;
    }

    static SymMatrix diagonal(std::span<const Rational> diag) {
        SymMatrix s(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) s.m_(i, i) = diag[i];
        return s;
    }

    /// Throws DimensionMismatch unless square and symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        SymMatrix s(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw DimensionMismatch("symmetric matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) s.m_(i, j) = rows[i][j];
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                if (s.m_(i, j) != s.m_(j, i)) throw DimensionMismatch("matrix is not symmetric");
        return s;
    }

    std::size_t size() const noexcept { return m_.rows(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const RatMatrix& matrix() const noexcept { return m_; }

    /// Sets entries (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, const Rational& v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    SymMatrix& operator+=(const SymMatrix& o) {
        if (o.size() != size()) throw DimensionMismatch("matrix sizes differ");
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) m_(i, j) += o.m_(i, j);
        return *this;
    }

    friend SymMatrix operator*(const Rational& s, SymMatrix a) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) a.m_(i, j) *= s;
        return a;
    }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    RatMatrix m_;
};

/// (G_1, ..., G_n), all of one size d; defines w -> sum_j w_j G_j.
class Pencil {
public:
    explicit Pencil(std::vector<SymMatrix> matrices) : matrices_(std::move(matrices)) {
        if (matrices_.empty()) throw DimensionMismatch("pencil needs at least one matrix");
        for (const auto& g : matrices_)
            if (g.size() != matrices_.front().size()) throw DimensionMismatch("pencil matrices differ in size");
    }

    std::size_t n() const noexcept { return matrices_.size(); }
    std::size_t d() const noexcept { return matrices_.front().size(); }
    const std::vector<SymMatrix>& matrices() const noexcept { return matrices_; }
    const SymMatrix& operator[](std::size_t j) const { return matrices_.at(j); }

    SymMatrix combine(std::span<const Rational> w) const {
        if (w.size() != n()) throw DimensionMismatch("point length differs from pencil size");
        SymMatrix s(d());
        for (std::size_t j = 0; j < n(); ++j) {
            if (w[j] != 0) s += w[j] * matrices_[j];
        }
        return s;
    }

    friend bool operator==(const Pencil&, const Pencil&) = default;

private:
    std::vector<SymMatrix> matrices_;
};

/// (B, C) certifying p(x,y,z) = det(xI + yB + zC) or q(y,z) = det(I + yB + zC).
struct LaxTriple {
    SymMatrix b;
    SymMatrix c;

    LaxTriple(SymMatrix b_, SymMatrix c_) : b(std::move(b_)), c(std::move(c_)) {
        if (b.size() != c.size()) throw DimensionMismatch("B and C differ in size");
    }

    std::size_t d() const noexcept { return b.size(); }

    /// (I, B, C)
    Pencil pencil() const { return Pencil({SymMatrix::identity(d()), b, c}); }

    friend bool operator==(const LaxTriple&, const LaxTriple&) = default;
};

/// det(sum_j w_j G_j) as a polynomial in n variables, by cofactor expansion
/// along successive rows with every minor computed once. Minors are keyed by
/// the bitmask of their columns; their rows are the last popcount(mask) rows.
inline Polynomial expand_det(const Pencil& pencil) {
    const std::size_t n = pencil.n();
    const std::size_t d = pencil.d();
    if (d >= 8 * sizeof(std::size_t) - 1) throw PreconditionViolated("matrix size too large for minor expansion");

    std::vector<std::vector<Polynomial>> entry(d, std::vector<Polynomial>(d, Polynomial(n)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rational> coeffs(n);
            for (std::size_t k = 0; k < n; ++k) coeffs[k] = pencil[k](i, j);
            entry[i][j] = Polynomial::linear_form(coeffs);
        }
    }

    const std::size_t full = (std::size_t{1} << d) - 1;
    std::vector<std::optional<Polynomial>> minor(full + 1);
    minor[0] = Polynomial::constant(n, 1);
    // Masks in increasing numeric order visit every subset after its subsets.
    for (std::size_t mask = 1; mask <= full; ++mask) {
        const std::size_t row = d - static_cast<std::size_t>(std::popcount(mask));
        Polynomial acc(n);
        int position = 0;
        for (std::size_t col = 0; col < d; ++col) {
            if (!(mask & (std::size_t{1} << col))) continue;
            const Polynomial& a = entry[row][col];
            const Polynomial& sub = *minor[mask & ~(std::size_t{1} << col)];
            if (!a.is_zero() && !sub.is_zero()) {
                if (position % 2 == 0) {
                    acc += a * sub;
                } else {
                    acc -= a * sub;
                }
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return *minor[full];
}

/// Exact coefficientwise check p == det(sum_j w_j G_j).
inline bool verify_representation(const Polynomial& p, const Pencil& pencil) {
    if (p.nvars() != pencil.n()) throw DimensionMismatch("polynomial and pencil have different numbers of variables");
    return p == expand_det(pencil);
}

/// p(x,y,z) == det(xI + yB + zC).
inline bool verify_lax_form(const Polynomial& p, const LaxTriple& triple) {
    return verify_representation(p, triple.pencil());
}

/// q(y,z) == det(I + yB + zC), checked as homogenize(q, d) against (I, B, C).
inline bool verify_real_zero_form(const Polynomial& q, const LaxTriple& triple) {
    if (q.nvars() != 2) throw DimensionMismatch("real zero form needs a polynomial on R^2");
    if (q.is_zero() || degree(q) > triple.d()) return false;
    return verify_representation(homogenize(q, static_cast<unsigned>(triple.d())), triple.pencil());
}

/// Leading principal minors D_1, ..., D_d, exact.
inline std::vector<Rational> leading_principal_minors(const SymMatrix& m) {
    std::vector<Rational> minors;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        RatMatrix block(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
        minors.push_back(determinant(std::move(block)));
    }
    return minors;
}

/// Sylvester's criterion: positive definite iff every leading principal minor
/// is strictly positive.
inline bool pd_check(const SymMatrix& m) {
    for (std::size_t k = 1; k <= m.size(); ++k) {
        RatMatrix block(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
        if (determinant(std::move(block)) <= 0) return false;
    }
    return true;
}

/// sum_j w_j G_j is positive definite.
inline bool slice_membership(const Pencil& pencil, std::span<const Rational> w) {
    return pd_check(pencil.combine(w));
}

/// Diag(M, 0) of size d.
inline SymMatrix pad_block_diag(const SymMatrix& m, std::size_t d) {
    if (d < m.size()) throw PreconditionViolated("pad_block_diag: target size smaller than the matrix");
    SymMatrix out(d);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j) out.set(i, j, m(i, j));
    return out;
}

inline LaxTriple pad_block_diag(const LaxTriple& t, std::size_t d) {
    return {pad_block_diag(t.b, d), pad_block_diag(t.c, d)};
}

/// p(x, y) = det(xI + yG) with G = diag(g_1 <= ... <= g_d). The g_j are the
/// roots of t -> p(-t, 1), generally irrational, so each comes with an exact
/// isolating interval and a double approximation refined inside it.
struct NumericDiagonal {
    std::vector<double> diag;
    std::vector<Interval> intervals;  ///< aligned with diag
    double residual = 0;              ///< max |coeff(p) - coeff(det(xI + yG))|

    std::size_t d() const noexcept { return diag.size(); }
};

/// Coefficients of prod_j (x + g_j y); entry k multiplies x^(d-k) y^k.
inline std::vector<double> diagonal_det_coefficients(std::span<const double> g) {
    std::vector<double> e{1.0};
    for (double gj : g) {
        e.push_back(0.0);
        for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += gj * e[k - 1];
    }
    return e;
}

inline NumericDiagonal bivariate_representation(const Polynomial& p, const Rational& width) {
    if (p.nvars() != 2) throw DimensionMismatch("bivariate representation needs a polynomial on R^2");
    if (!is_homogeneous(p)) throw PreconditionViolated("bivariate representation needs a homogeneous polynomial");
    const Vector e{1, 0};
    if (eval(p, e) != 1) throw PreconditionViolated("bivariate representation needs p(1,0) = 1");

    const unsigned d = degree(p);
    const UniPoly u = restrict_line(p, Vector{0, 1}, e);  // t -> p(-t, 1)
    if (!all_roots_real(u)) throw NotHyperbolicHere("t -> p(-t, 1) has non-real roots", Vector{0, 1});

    NumericDiagonal out;
    const RootIsolation iso = isolate_real_roots(u, width);
    const SturmChain chain(squarefree_part(u));
    for (std::size_t r = 0; r < iso.intervals.size(); ++r) {
        const double g = approximate_root(chain, iso.intervals[r]);
        for (unsigned k = 0; k < iso.multiplicities[r]; ++k) {
            out.diag.push_back(g);
            out.intervals.push_back(iso.intervals[r]);
        }
    }

    const std::vector<double> coeffs = diagonal_det_coefficients(out.diag);
    for (unsigned k = 0; k <= d; ++k) {
        const double target = to_double(p.coefficient(Exponents{d - k, k}));
        out.residual = std::max(out.residual, std::abs(coeffs[k] - target));
    }
    return out;
}

/// A polynomial together with the triple certifying it.
struct Certified {
    Polynomial poly;
    LaxTriple triple;
};

/// q(y,z) = det(I + yB + zC)  ==>  p = homogenize(q, d) = det(xI + yB + zC).
/// The triple is zero-padded to `degree` (default: its own size) first.
inline Certified transport_rz_to_lax(const Polynomial& q, const LaxTriple& triple,
                                     std::optional<std::size_t> degree = std::nullopt) {
    if (q.nvars() != 2) throw DimensionMismatch("transport_rz_to_lax needs q on R^2");
    const std::size_t d = degree.value_or(triple.d());
    if (d < triple.d()) throw PreconditionViolated("target degree is below the triple size");
    if (eval(q, Vector{0, 0}) != 1) throw PreconditionViolated("real zero form needs q(0,0) = 1");
    LaxTriple padded = pad_block_diag(triple, d);
    if (!verify_real_zero_form(q, padded)) throw InvalidCertificate("q(y,z) != det(I + yB + zC)");
    Polynomial p = homogenize(q, static_cast<unsigned>(d));
    if (!verify_lax_form(p, padded)) throw InvalidCertificate("homogenized certificate does not verify");
    return {std::move(p), std::move(padded)};
}

/// p(x,y,z) = det(xI + yB + zC)  ==>  q = p(1,y,z) = det(I + yB + zC).
inline Certified transport_lax_to_rz(const Polynomial& p, const LaxTriple& triple) {
    if (p.nvars() != 3) throw DimensionMismatch("transport_lax_to_rz needs p on R^3");
    // A verified certificate forces p(1,0,0) = det(I) = 1.
    if (p.is_zero() || !is_homogeneous(p) || degree(p) != triple.d())
        throw InvalidCertificate("p is not homogeneous of degree equal to the triple size");
    if (!verify_lax_form(p, triple)) throw InvalidCertificate("p(x,y,z) != det(xI + yB + zC)");
    Polynomial q = dehomogenize(p);
    if (!verify_real_zero_form(q, triple)) throw InvalidCertificate("dehomogenized certificate does not verify");
    return {std::move(q), triple};
}

}  // namespace hyperlax
