#pragma once

// Exact real-root certification for univariate rational polynomials:
// Sturm chains, square-free decomposition, root counting and isolation.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hyperlax/error.hpp"
#include "hyperlax/unipoly.hpp"

namespace hyperlax {

/// A point of the extended real line.
struct Bound {
    enum class Kind { neg_inf, finite, pos_inf };

    Kind kind = Kind::finite;
    Rational value = 0;

    Bound(Rational v) : kind(Kind::finite), value(std::move(v)) {}  // NOLINT: implicit by intent
    Bound(int v) : kind(Kind::finite), value(v) {}                   // NOLINT

    static Bound neg_inf() { return Bound(Kind::neg_inf); }
    static Bound pos_inf() { return Bound(Kind::pos_inf); }

    bool finite() const noexcept { return kind == Kind::finite; }

    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.finite() && a.value < b.value;
    }

private:
    explicit Bound(Kind k) : kind(k) {}
};

namespace detail {

inline int sign_at(const UniPoly& u, const Bound& x) {
    if (u.is_zero()) return 0;
    switch (x.kind) {
        case Bound::Kind::pos_inf:
            return sign(u.leading());
        case Bound::Kind::neg_inf:
            return u.degree() % 2 == 0 ? sign(u.leading()) : -sign(u.leading());
        case Bound::Kind::finite:
            break;
    }
    return sign(u(x.value));
}

}  // namespace detail

/// Signed remainder sequence u, u', -rem(u, u'), ... Every entry after the
/// first two is divided by the absolute value of its leading coefficient,
/// which leaves all sign patterns unchanged.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& u) {
        if (u.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
        chain_.push_back(u);
        UniPoly next = u.derivative();
        while (!next.is_zero()) {
            chain_.push_back(next);
            UniPoly rem = -divmod(chain_[chain_.size() - 2], chain_.back()).second;
            if (!rem.is_zero()) rem *= Rational(1) / abs(rem.leading());
            next = std::move(rem);
        }
    }

    const std::vector<UniPoly>& polys() const noexcept { return chain_; }

    /// Sign changes along the chain at x, zeros skipped.
    int sign_variations(const Bound& x) const {
        int variations = 0;
        int last = 0;
        for (const auto& p : chain_) {
            const int s = detail::sign_at(p, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++variations;
            last = s;
        }
        return variations;
    }

    /// V(lo) - V(hi). For a square-free head polynomial this is the number of
    /// distinct roots in (lo, hi], endpoints allowed to be roots.
    int count(const Bound& lo, const Bound& hi) const { return sign_variations(lo) - sign_variations(hi); }

private:
    std::vector<UniPoly> chain_;
};

/// u / gcd(u, u'), monic.
inline UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
    return exact_quotient(u, gcd(u, u.derivative())).monic();
}

/// Yun's decomposition of a nonzero u: u = lead(u) * prod_i f_i^(i+1) with
/// the returned f_i monic, square-free and pairwise coprime (some may be 1).
inline std::vector<UniPoly> squarefree_decomposition(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("square-free decomposition of the zero polynomial");
    const UniPoly f = u.monic();
    std::vector<UniPoly> factors;
    if (f.degree() == 0) return factors;
    const UniPoly a0 = gcd(f, f.derivative());
    UniPoly b = exact_quotient(f, a0);
    UniPoly c = exact_quotient(f.derivative(), a0);
    UniPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - b.derivative();
        factors.push_back(std::move(a));
    }
    return factors;
}

/// Distinct real roots of u in (lo, hi].
inline int count_distinct_real_roots(const UniPoly& u, const Bound& lo, const Bound& hi) {
    if (u.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
    if (!(lo < hi)) throw PreconditionViolated("root count needs lo < hi");
    return SturmChain(squarefree_part(u)).count(lo, hi);
}

inline bool all_roots_real(const UniPoly& u) {
    const UniPoly s = squarefree_part(u);
    if (s.degree() == 0) return true;
    return SturmChain(s).count(Bound::neg_inf(), Bound::pos_inf()) == static_cast<int>(s.degree());
}

/// All roots real and strictly positive. A root at 0 fails: the cone is open.
inline bool all_roots_positive(const UniPoly& u) {
    const UniPoly s = squarefree_part(u);
    if (s.degree() == 0) return true;
    if (u(Rational(0)) == 0) return false;
    const SturmChain chain(s);
    const int deg = static_cast<int>(s.degree());
    return chain.count(Bound::neg_inf(), Bound::pos_inf()) == deg && chain.count(Rational(0), Bound::pos_inf()) == deg;
}

/// 1 + max |c_i / c_lead|; every root lies strictly inside (-B, B).
inline Rational cauchy_bound(const UniPoly& u) {
    const Rational& lead = u.leading();
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < u.coeffs().size(); ++i) {
        const Rational r = abs(u.coeffs()[i] / lead);
        if (r > m) m = r;
    }
    return 1 + m;
}

/// Half-open interval (lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo < x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One interval per distinct real root, ascending, with multiplicities.
struct RootIsolation {
    std::vector<Interval> intervals;
    std::vector<unsigned> multiplicities;

    unsigned total_multiplicity() const {
        unsigned s = 0;
        for (unsigned m : multiplicities) s += m;
        return s;
    }

    friend bool operator==(const RootIsolation&, const RootIsolation&) = default;
};

/// Shrinks (lo, hi], which must hold exactly one root of the chain's head,
/// until its width is at most `width`.
inline Interval refine_root(const SturmChain& chain, Interval iv, const Rational& width) {
    while (iv.width() > width) {
        const Rational mid = iv.midpoint();
        if (chain.count(iv.lo, mid) > 0) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    return iv;
}

/// Sturm-guided bisection of (-B, B] with B the Cauchy bound.
inline RootIsolation isolate_real_roots(const UniPoly& u, const Rational& width) {
    if (u.is_zero()) throw ZeroPolynomial("root isolation of the zero polynomial");
    if (width <= 0) throw PreconditionViolated("isolation width must be positive");
    RootIsolation out;
    if (u.degree() == 0) return out;

    const UniPoly s = squarefree_part(u);
    const SturmChain chain(s);
    const Rational bound = cauchy_bound(u);

    // Depth-first, left half first, so intervals come out ascending.
    std::vector<Interval> stack{{-bound, bound}};
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        const int n = chain.count(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.intervals.push_back(refine_root(chain, iv, width));
            continue;
        }
        const Rational mid = iv.midpoint();
        stack.push_back({mid, iv.hi});
        stack.push_back({iv.lo, mid});
    }

    const std::vector<UniPoly> factors = squarefree_decomposition(u);
    for (const Interval& iv : out.intervals) {
        unsigned mult = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() == 0) continue;
            if (SturmChain(factors[i]).count(iv.lo, iv.hi) > 0) {
                mult = static_cast<unsigned>(i + 1);
                break;
            }
        }
        out.multiplicities.push_back(mult);
    }
    return out;
}

/// Double-precision value of the unique root of the chain's head in iv.
/// Exact when the root is a dyadic bisection point.
inline double approximate_root(const SturmChain& chain, Interval iv) {
    const UniPoly& head = chain.polys().front();
    if (head(iv.hi) == 0) return to_double(iv.hi);
    const Rational scale = std::max({abs(iv.lo), abs(iv.hi), Rational(1)});
    const Rational target = scale / (Integer(1) << 60);
    while (iv.width() > target) {
        const Rational mid = iv.midpoint();
        if (head(mid) == 0) return to_double(mid);
        if (chain.count(iv.lo, mid) > 0) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    return to_double(iv.midpoint());
}

}  // namespace hyperlax
