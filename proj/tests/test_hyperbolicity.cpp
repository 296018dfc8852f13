#include <gtest/gtest.h>

#include "hyperlax/hyperlax.hpp"
#include "oracles.hpp"

using namespace hyperlax;
using hyperlax::testing::Generator;

namespace {

Polynomial P(const char* text, std::size_t n = 3) { return parse_polynomial(text, n); }
Polynomial Q(const char* text) { return parse_polynomial(text, {"y", "z"}); }

const Polynomial lorentz = P("x^2 - y^2 - z^2");
const Polynomial orthant = P("x*y*z");
const Vector e100{1, 0, 0};
const Vector e111{1, 1, 1};

SamplerConfig config(std::size_t trials, std::uint64_t seed = 42, int radius = 10) { return {radius, trials, seed}; }

}  // namespace

TEST(TestHyperbolic, OrthantPasses) {
    const Verdict v = test_hyperbolic(orthant, e111, config(300));
    EXPECT_TRUE(v.passed());
    EXPECT_FALSE(v.witness.has_value());
    EXPECT_EQ(v.trials, 300u);
    EXPECT_EQ(v.seed, 42u);

    const Polynomial orthant5 = P("w1*w2*w3*w4*w5", 5);
    EXPECT_TRUE(test_hyperbolic(orthant5, Vector(5, Rational(1)), config(200)).passed());
}

TEST(TestHyperbolic, LorentzPasses) { EXPECT_TRUE(test_hyperbolic(lorentz, e100, config(300)).passed()); }

TEST(TestHyperbolic, SumOfSquaresRefutedOnSecondAxis) {
    const Polynomial p = P("x^2 + y^2", 2);
    const Vector e{1, 0};
    const Verdict v = test_hyperbolic(p, e, config(1000));
    ASSERT_EQ(v.outcome, Outcome::refuted);
    EXPECT_EQ(*v.witness, (Vector{0, 1}));
    EXPECT_TRUE(restriction_fails(p, e, *v.witness));
}

TEST(TestHyperbolic, QuarticRefutedAwayFromAxes) {
    // (a - t)^4 = b^4 + c^4 has two non-real roots whenever (b, c) != 0.
    const Polynomial p = P("x^4 - y^4 - z^4");
    const Verdict v = test_hyperbolic(p, e100, config(100, 7));
    ASSERT_EQ(v.outcome, Outcome::refuted);
    const Vector& w = *v.witness;
    EXPECT_TRUE(w[1] != 0 || w[2] != 0);
    EXPECT_TRUE(restriction_fails(p, e100, w));
}

TEST(TestHyperbolic, WitnessRefailsUnderDiscriminant) {
    // For quadratic forms the restriction's discriminant is an independent check.
    Generator gen(31);
    int refuted = 0;
    for (int i = 0; i < 30; ++i) {
        const Polynomial p = gen.homogeneous(3, 2, 3);
        const Vector e = gen.integer_vector(3, 2);
        if (eval(p, e) == 0) continue;
        const Verdict v = test_hyperbolic(p, e, config(50, static_cast<std::uint64_t>(i)));
        if (v.passed()) continue;
        ++refuted;
        const UniPoly u = restrict_line(p, *v.witness, e);
        const Rational disc = u.coefficient(1) * u.coefficient(1) - 4 * u.coefficient(2) * u.coefficient(0);
        EXPECT_LT(disc, 0);
    }
    EXPECT_GT(refuted, 0);
}

TEST(TestHyperbolic, Errors) {
    EXPECT_THROW(test_hyperbolic(lorentz, Vector{1, 1, 0}, config(10)), PreconditionViolated);
    EXPECT_THROW(test_hyperbolic(P("x^2 + y"), e100, config(10)), PreconditionViolated);
    EXPECT_THROW(test_hyperbolic(lorentz, Vector{1, 0}, config(10)), DimensionMismatch);
    EXPECT_THROW(test_hyperbolic(lorentz, e100, config(0)), PreconditionViolated);
    EXPECT_THROW(test_hyperbolic(lorentz, e100, SamplerConfig{0, 10, 1}), PreconditionViolated);
    EXPECT_THROW(test_hyperbolic(Polynomial(3), e100, config(10)), ZeroPolynomial);
}

TEST(TestHyperbolic, Deterministic) {
    const Polynomial p = P("x^4 - y^4 - z^4");
    const Verdict a = test_hyperbolic(p, e100, config(100, 99));
    for (int i = 0; i < 5; ++i) EXPECT_EQ(test_hyperbolic(p, e100, config(100, 99)), a);
}

TEST(GridSampler, ProbesAxesThenGrid) {
    const GridSampler s(config(10, 5, 2), 3);
    auto never = [](const Vector&) { return false; };
    EXPECT_EQ(s.probe(0, never), (Vector{1, 0, 0}));
    EXPECT_EQ(s.probe(2, never), (Vector{0, 0, 1}));
    auto reject_first_axis = [](const Vector& w) { return parallel(w, Vector{1, 0, 0}); };
    const Vector w0 = s.probe(0, reject_first_axis);
    EXPECT_FALSE(reject_first_axis(w0));
    for (std::size_t i = 3; i < 10; ++i) {
        const Vector w = s.probe(i, never);
        EXPECT_EQ(w, s.sample(i, 0, never));
        for (const auto& x : w) {
            EXPECT_GE(x, -2);
            EXPECT_LE(x, 2);
        }
    }
}

TEST(ConeContains, OrthantExamples) {
    EXPECT_TRUE(cone_contains(orthant, e111, Vector{1, 2, 3}));
    EXPECT_FALSE(cone_contains(orthant, e111, Vector{1, -1, 1}));
    EXPECT_FALSE(cone_contains(orthant, e111, Vector{0, 0, 0}));
    EXPECT_FALSE(cone_contains(lorentz, e100, Vector{0, 0, 0}));
    EXPECT_FALSE(cone_contains(orthant, e111, Vector{0, 1, 1}));
}

TEST(ConeContains, NonRealRootsAreAnErrorNotFalse) {
    const Polynomial p = P("x^2 + y^2", 2);
    EXPECT_EQ(classify_point(p, Vector{1, 0}, Vector{0, 1}), Membership::not_hyperbolic);
    try {
        cone_contains(p, Vector{1, 0}, Vector{0, 1});
        FAIL() << "expected NotHyperbolicHere";
    } catch (const NotHyperbolicHere& e) {
        EXPECT_EQ(e.point(), (Vector{0, 1}));
    }
    EXPECT_THROW(cone_contains(lorentz, Vector{1, 1, 0}, e100), PreconditionViolated);
}

TEST(ConeContains, LorentzAgreesWithSecondOrderCone) {
    Generator gen(32);
    for (int i = 0; i < 300; ++i) {
        const Vector w = gen.rational_vector(3, 4);
        const bool expected = w[0] > 0 && w[0] * w[0] > w[1] * w[1] + w[2] * w[2];
        EXPECT_EQ(cone_contains(lorentz, e100, w), expected);
    }
}

TEST(ConeContains, ScalingInvariance) {
    Generator gen(33);
    for (int i = 0; i < 100; ++i) {
        const Vector w = gen.rational_vector(3, 3);
        Rational s = abs(gen.rational(5));
        if (s == 0) s = Rational(1, 3);
        EXPECT_EQ(cone_contains(orthant, e111, w), cone_contains(orthant, e111, scaled(w, s)));
        EXPECT_EQ(cone_contains(lorentz, e100, w), cone_contains(lorentz, e100, scaled(w, s)));
    }
}

TEST(ConeContains, DirectionIsAMember) {
    Generator gen(34);
    for (int i = 0; i < 30; ++i) {
        const Polynomial p = gen.homogeneous(3, static_cast<unsigned>(gen.integer(1, 4)));
        const Vector e = gen.integer_vector(3, 3);
        if (eval(p, e) == 0) continue;
        EXPECT_TRUE(cone_contains(p, e, e));
        const auto nd = normalize_direction(p, e);
        EXPECT_TRUE(cone_contains(nd.poly, e100, e100));
    }
}

TEST(IsRealZero, Examples) {
    EXPECT_TRUE(is_real_zero(Q("1 - y^2 - z^2"), config(500)).passed());
    const Verdict v = is_real_zero(Q("1 + y^2"), config(500));
    ASSERT_EQ(v.outcome, Outcome::refuted);
    EXPECT_EQ(*v.witness, (Vector{1, 0}));
    EXPECT_TRUE(is_real_zero(Polynomial::constant(2, 1), config(50)).passed());
    EXPECT_THROW(is_real_zero(Polynomial(2), config(5)), ZeroPolynomial);
}

TEST(IsRealZero, IdenticallyVanishingRestrictionDoesNotRefute) {
    // q(t, t) = 0 for every t.
    EXPECT_TRUE(is_real_zero(Q("y - z"), config(200)).passed());
}

TEST(IsRealZero, MatchesHyperbolicityOfHomogenization) {
    const Polynomial q = Q("1 - 3*y + y^2 - z^2");
    const Polynomial p = homogenize(q, 2);
    EXPECT_EQ(is_real_zero(q, config(300)).passed(), test_hyperbolic(p, e100, config(300)).passed());
    const Polynomial bad = Q("1 + y*z + z^2");
    EXPECT_EQ(is_real_zero(bad, config(300)).passed(), test_hyperbolic(homogenize(bad, 2), e100, config(300)).passed());
}

TEST(ConvexityProbe, KnownConvexCones) {
    EXPECT_TRUE(cone_convexity_probe(orthant, e111, config(150)).passed());
    EXPECT_TRUE(cone_convexity_probe(lorentz, e100, config(150)).passed());
    EXPECT_TRUE(cone_convexity_probe(P("x^2"), e100, config(150)).passed());
    EXPECT_TRUE(cone_convexity_probe(P("w1^2 - w2^2 - w3^2 - w4^2 - w5^2", 5), Vector{1, 0, 0, 0, 0}, config(100))
                    .passed());
}

TEST(ConvexityProbe, NonHyperbolicInputThrows) {
    EXPECT_THROW(cone_convexity_probe(P("x^2 + y^2", 2), Vector{1, 0}, config(20)), NotHyperbolicHere);
}

TEST(ConvexityProbe, LiftedPointsAreMembers) {
    Generator gen(35);
    for (int i = 0; i < 50; ++i) {
        const Vector w = gen.integer_vector(3, 10);
        EXPECT_TRUE(cone_contains(orthant, e111, lift_into_cone(orthant, e111, w)));
        EXPECT_TRUE(cone_contains(lorentz, e100, lift_into_cone(lorentz, e100, w)));
    }
}
