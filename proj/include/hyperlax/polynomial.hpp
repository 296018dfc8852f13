#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperlax/error.hpp"
#include "hyperlax/rational.hpp"

namespace hyperlax {

/// A point of R^n with exact coordinates.
using Vector = std::vector<Rational>;

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded lexicographic order, largest monomial first: higher total degree
/// wins, ties broken lexicographically on the exponent vector.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const unsigned da = total_degree(a);
        const unsigned db = total_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Stored coefficients are never zero, so structural equality is equality
/// of polynomials.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
        if (nvars == 0) throw DimensionMismatch("polynomial needs at least one variable");
    }

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    /// The coordinate function w_{index+1}.
    static Polynomial variable(std::size_t nvars, std::size_t index) {
        if (index >= nvars) throw DimensionMismatch("variable index out of range");
        Exponents e(nvars, 0);
        e[index] = 1;
        Polynomial p(nvars);
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    static Polynomial monomial(Exponents e, const Rational& c) {
        Polynomial p(e.size());
        p.add_term(std::move(e), c);
        return p;
    }

    /// Linear form sum_i coeffs[i] * w_{i+1}.
    static Polynomial linear_form(std::span<const Rational> coeffs) {
        Polynomial p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(std::move(e), coeffs[i]);
        }
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c * w^e, merging with an existing term and dropping zeros.
    void add_term(Exponents e, const Rational& c) {
        if (e.size() != nvars_) throw DimensionMismatch("exponent vector length differs from nvars");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_same_ring(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials live in different numbers of variables");
    }

    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial result = Polynomial::constant(p.nvars(), 1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

inline unsigned degree(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("the zero polynomial has no degree");
    // Graded order puts a maximal-degree term first.
    return total_degree(p.terms().begin()->first);
}

inline bool is_homogeneous(const Polynomial& p) {
    const unsigned d = degree(p);
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
}

inline Rational eval(const Polynomial& p, std::span<const Rational> w) {
    if (w.size() != p.nvars()) throw DimensionMismatch("point length differs from nvars");
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) term *= w[i];
        }
        sum += term;
    }
    return sum;
}

inline Vector scaled(std::span<const Rational> v, const Rational& s) {
    Vector r(v.begin(), v.end());
    for (auto& x : r) x *= s;
    return r;
}

inline Vector added(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline bool is_zero_vector(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// True when a and b are linearly dependent.
inline bool parallel(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

}  // namespace hyperlax
