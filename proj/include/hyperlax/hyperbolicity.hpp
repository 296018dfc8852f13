#pragma once

// Refutation-based hyperbolicity and real-zero testing, exact cone
// membership, and a sampling probe of cone convexity.
//
// A pass verdict is evidence only: it records how many seeded sample
// points had their line restriction certified real-rooted by Sturm
// counting. A refuted verdict carries a witness that fails exactly.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>

#include "hyperlax/polynomial.hpp"
#include "hyperlax/realroots.hpp"
#include "hyperlax/transforms.hpp"

namespace hyperlax {

struct SamplerConfig {
    int radius = 10;  ///< samples are drawn from the integer grid [-radius, radius]^n
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
};

enum class Outcome { pass, refuted };

struct Verdict {
    Outcome outcome = Outcome::pass;
    std::optional<Vector> witness;  ///< present iff refuted
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    bool passed() const noexcept { return outcome == Outcome::pass; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Deterministic integer-grid sampler. Sample (trial, stream) depends only on
/// the seed and its own indices, so trials can be evaluated in any order.
class GridSampler {
public:
    GridSampler(const SamplerConfig& cfg, std::size_t dim) : cfg_(cfg), dim_(dim) {
        if (cfg.radius < 1) throw PreconditionViolated("sampler radius must be >= 1");
        if (cfg.trials < 1) throw PreconditionViolated("sampler needs at least one trial");
    }

    /// Uniform grid point; `reject` is consulted and redrawn on true.
    template <typename Reject>
    Vector sample(std::size_t trial, std::uint32_t stream, Reject&& reject) const {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed), static_cast<std::uint32_t>(cfg_.seed >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), stream};
        std::mt19937_64 rng(seq);
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(cfg_.radius) + 1;
        Vector w(dim_);
        do {
            for (auto& x : w) x = static_cast<long long>(rng() % span) - cfg_.radius;
        } while (reject(w));
        return w;
    }

    /// The schedule used by the refutation tests: the first trials walk the
    /// coordinate axes that `reject` accepts, in order; later trials are grid
    /// samples.
    template <typename Reject>
    Vector probe(std::size_t trial, Reject&& reject) const {
        std::size_t accepted = 0;
        for (std::size_t k = 0; k < dim_; ++k) {
            Vector axis(dim_);
            axis[k] = 1;
            if (reject(axis)) continue;
            if (accepted++ == trial) return axis;
        }
        return sample(trial, 0, reject);
    }

private:
    SamplerConfig cfg_;
    std::size_t dim_;
};

namespace detail {

inline void check_direction(const Polynomial& p, std::span<const Rational> e) {
    if (e.size() != p.nvars()) throw DimensionMismatch("direction has wrong length");
    if (!is_homogeneous(p)) throw PreconditionViolated("hyperbolicity needs a homogeneous polynomial");
    if (eval(p, e) == 0) throw PreconditionViolated("p(e) = 0: e cannot be a hyperbolicity direction");
}

}  // namespace detail

/// Checks p(e) != 0, then certifies t -> p(w - t e) real-rooted at cfg.trials
/// points w: the coordinate axes first, then grid points (zero and multiples
/// of e excluded). Returns the lowest-index failing w.
inline Verdict test_hyperbolic(const Polynomial& p, std::span<const Rational> e, const SamplerConfig& cfg) {
    detail::check_direction(p, e);
    const GridSampler sampler(cfg, p.nvars());
    Verdict v{Outcome::pass, std::nullopt, cfg.trials, cfg.seed};
    // With one variable every point is a multiple of e; nothing to sample.
    if (p.nvars() == 1) return v;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        Vector w = sampler.probe(i, [&](const Vector& x) { return parallel(x, e); });
        if (!all_roots_real(restrict_line(p, w, e))) {
            v.outcome = Outcome::refuted;
            v.witness = std::move(w);
            return v;
        }
    }
    return v;
}

/// True when the restriction at w has a non-real root, i.e. w re-fails.
inline bool restriction_fails(const Polynomial& p, std::span<const Rational> e, std::span<const Rational> w) {
    return !all_roots_real(restrict_line(p, w, e));
}

enum class Membership { member, non_member, not_hyperbolic };

/// Three-way classification of w against the hyperbolicity cone of p at e.
inline Membership classify_point(const Polynomial& p, std::span<const Rational> e, std::span<const Rational> w) {
    detail::check_direction(p, e);
    if (w.size() != p.nvars()) throw DimensionMismatch("point has wrong length");
    const UniPoly u = restrict_line(p, w, e);
    if (!all_roots_real(u)) return Membership::not_hyperbolic;
    return all_roots_positive(u) ? Membership::member : Membership::non_member;
}

/// Exact membership in the open hyperbolicity cone. Throws NotHyperbolicHere
/// when the restriction at w has non-real roots.
inline bool cone_contains(const Polynomial& p, std::span<const Rational> e, std::span<const Rational> w) {
    switch (classify_point(p, e, w)) {
        case Membership::member:
            return true;
        case Membership::non_member:
            return false;
        case Membership::not_hyperbolic:
            break;
    }
    throw NotHyperbolicHere("restriction t -> p(w - t e) has non-real roots", Vector(w.begin(), w.end()));
}

/// Samples axes and grid points (y, z) != 0 and certifies t -> q(t y, t z) real-rooted.
/// Restrictions that vanish identically do not refute.
inline Verdict is_real_zero(const Polynomial& q, const SamplerConfig& cfg) {
    if (q.is_zero()) throw ZeroPolynomial("real-zero test of the zero polynomial");
    const GridSampler sampler(cfg, q.nvars());
    const Vector origin(q.nvars());
    Verdict v{Outcome::pass, std::nullopt, cfg.trials, cfg.seed};
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        Vector yz = sampler.probe(i, [](const Vector& x) { return is_zero_vector(x); });
        const UniPoly u = restrict_line(q, origin, scaled(yz, -1));
        if (!u.is_zero() && !all_roots_real(u)) {
            v.outcome = Outcome::refuted;
            v.witness = std::move(yz);
            return v;
        }
    }
    return v;
}

/// Moves w along e into the cone: the restriction roots shift by the Cauchy
/// bound, which makes all of them positive.
inline Vector lift_into_cone(const Polynomial& p, std::span<const Rational> e, std::span<const Rational> w) {
    const UniPoly u = restrict_line(p, w, e);
    if (!all_roots_real(u)) throw NotHyperbolicHere("restriction t -> p(w - t e) has non-real roots", Vector(w.begin(), w.end()));
    if (all_roots_positive(u)) return Vector(w.begin(), w.end());
    return added(w, scaled(e, cauchy_bound(u)));
}

/// For sampled members u, v checks (u+v)/2, u+v and s*u for s in {1/2, 2, 3}.
/// A refutation's witness is u followed by v (length 2n).
inline Verdict cone_convexity_probe(const Polynomial& p, std::span<const Rational> e, const SamplerConfig& cfg) {
    detail::check_direction(p, e);
    const GridSampler sampler(cfg, p.nvars());
    Verdict v{Outcome::pass, std::nullopt, cfg.trials, cfg.seed};
    const std::array<Rational, 3> scales{Rational(1, 2), Rational(2), Rational(3)};
    auto any = [](const Vector&) { return false; };
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        const Vector u = lift_into_cone(p, e, sampler.sample(i, 0, any));
        const Vector w = lift_into_cone(p, e, sampler.sample(i, 1, any));
        const Vector sum = added(u, w);
        bool ok = cone_contains(p, e, scaled(sum, Rational(1, 2))) && cone_contains(p, e, sum);
        for (const Rational& s : scales) ok = ok && cone_contains(p, e, scaled(u, s));
        if (!ok) {
            Vector pair = u;
            pair.insert(pair.end(), w.begin(), w.end());
            v.outcome = Outcome::refuted;
            v.witness = std::move(pair);
            return v;
        }
    }
    return v;
}

}  // namespace hyperlax
