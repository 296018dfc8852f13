#pragma once

// Substitutions on polynomials: line restriction, the homogenization bridge
// between R^3 and R^2, and linear changes of variables.

#include <cstddef>
#include <span>
#include <vector>

#include "hyperlax/matrix.hpp"
#include "hyperlax/polynomial.hpp"
#include "hyperlax/unipoly.hpp"

namespace hyperlax {

/// The univariate polynomial t -> p(w - t e), with exact coefficients.
inline UniPoly restrict_line(const Polynomial& p, std::span<const Rational> w, std::span<const Rational> e) {
    const std::size_t n = p.nvars();
    if (w.size() != n || e.size() != n) throw DimensionMismatch("restrict_line: point or direction has wrong length");

    // powers[i][k] = (w_i - t e_i)^k, grown on demand.
    std::vector<std::vector<UniPoly>> powers(n);
    for (std::size_t i = 0; i < n; ++i) powers[i].push_back(UniPoly::constant(1));
    auto power = [&](std::size_t i, unsigned k) -> const UniPoly& {
        auto& cache = powers[i];
        while (cache.size() <= k) cache.push_back(cache.back() * UniPoly::linear(w[i], -e[i]));
        return cache[k];
    };

    UniPoly result;
    for (const auto& [exps, c] : p.terms()) {
        UniPoly term = UniPoly::constant(c);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
            if (exps[i] > 0) term = term * power(i, exps[i]);
        }
        result += term;
    }
    return result;
}

/// q(y, z) = p(1, y, z). Works for any nvars >= 2 by fixing the first
/// coordinate to 1 and dropping it.
inline Polynomial dehomogenize(const Polynomial& p) {
    if (p.nvars() < 2) throw DimensionMismatch("dehomogenize needs at least two variables");
    Polynomial q(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) q.add_term(Exponents(e.begin() + 1, e.end()), c);
    return q;
}

/// p(x, y, z) = x^d q(y/x, z/x): each term y^a z^b becomes x^(d-a-b) y^a z^b.
/// The new variable is prepended.
inline Polynomial homogenize(const Polynomial& q, unsigned d) {
    if (q.is_zero()) throw ZeroPolynomial("cannot homogenize the zero polynomial");
    if (d < degree(q)) throw PreconditionViolated("homogenize: target degree is below degree(q)");
    Polynomial p(q.nvars() + 1);
    for (const auto& [e, c] : q.terms()) {
        Exponents lifted;
        lifted.reserve(e.size() + 1);
        lifted.push_back(d - total_degree(e));
        lifted.insert(lifted.end(), e.begin(), e.end());
        p.add_term(std::move(lifted), c);
    }
    return p;
}

/// p o A, i.e. the polynomial u -> p(A u).
inline Polynomial apply_linear_change(const Polynomial& p, const RatMatrix& a) {
    const std::size_t n = p.nvars();
    if (a.rows() != n || a.cols() != n) throw DimensionMismatch("change of variables must be nvars x nvars");
    if (determinant(a) == 0) throw SingularMatrix("change of variables is singular");

    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
        powers[i].push_back(Polynomial::constant(n, 1));
        powers[i].push_back(Polynomial::linear_form(row));
    }
    auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
        auto& cache = powers[i];
        while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
        return cache[k];
    };

    Polynomial result(n);
    for (const auto& [exps, c] : p.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (exps[i] > 0) term = term * power(i, exps[i]);
        }
        result += term;
    }
    return result;
}

struct NormalizedDirection {
    Polynomial poly;   ///< (1/p(e)) * (p o change); equals 1 at (1,0,...,0)
    RatMatrix change;  ///< invertible, first column e
};

/// Change of variables sending (1,0,...,0) to e, scaled so the result is 1
/// there. The remaining columns of the change are the standard basis vectors
/// other than the one at e's largest-magnitude entry (first one on ties).
inline NormalizedDirection normalize_direction(const Polynomial& p, std::span<const Rational> e) {
    const std::size_t n = p.nvars();
    if (e.size() != n) throw DimensionMismatch("direction has wrong length");
    if (!is_homogeneous(p)) throw PreconditionViolated("normalize_direction needs a homogeneous polynomial");
    const Rational pe = eval(p, e);
    if (pe == 0) throw PreconditionViolated("p(e) = 0: e cannot be a hyperbolicity direction");

    std::size_t pivot = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (abs(e[i]) > abs(e[pivot])) pivot = i;
    }
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, 0) = e[i];
    std::size_t col = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == pivot) continue;
        a(k, col++) = 1;
    }
    return {apply_linear_change(p, a) * (Rational(1) / pe), a};
}

}  // namespace hyperlax
