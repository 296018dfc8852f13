#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperlax/error.hpp"
#include "hyperlax/rational.hpp"

namespace hyperlax {

/// Dense univariate polynomial over Q; coeffs()[i] is the coefficient of t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

    /// a + b t
    static UniPoly linear(const Rational& a, const Rational& b) {
        return UniPoly(std::vector<Rational>{a, b});
    }

    static UniPoly monomial(std::size_t k, const Rational& c) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    std::size_t degree() const {
        if (is_zero()) throw ZeroPolynomial("the zero polynomial has no degree");
        return coeffs_.size() - 1;
    }

    const Rational& leading() const {
        if (is_zero()) throw ZeroPolynomial("the zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    /// Horner evaluation.
    Rational operator()(const Rational& t) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
        return UniPoly(std::move(d));
    }

    UniPoly monic() const {
        UniPoly r = *this;
        if (!r.is_zero()) r *= Rational(1) / leading();
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline UniPoly pow(const UniPoly& u, unsigned k) {
    UniPoly result = UniPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) result = result * u;
    return result;
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = b.degree();
    if (rem.size() <= db) return {UniPoly{}, a};
    std::vector<Rational> quot(rem.size() - db);
    const Rational inv_lead = Rational(1) / b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        const Rational q = rem[k] * inv_lead;
        quot[k - db] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) is 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Exact quotient; throws if b does not divide a.
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw PreconditionViolated("polynomial division is not exact");
    return q;
}

}  // namespace hyperlax
