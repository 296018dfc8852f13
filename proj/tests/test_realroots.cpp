#include <gtest/gtest.h>

#include <set>

#include "hyperlax/hyperlax.hpp"
#include "oracles.hpp"

using namespace hyperlax;
using hyperlax::testing::from_roots;
using hyperlax::testing::Generator;

namespace {

UniPoly U(std::vector<Rational> c) { return UniPoly(std::move(c)); }

const Bound ninf = Bound::neg_inf();
const Bound pinf = Bound::pos_inf();

}  // namespace

TEST(UniPoly, DivmodAndGcd) {
    const UniPoly a = from_roots({1, 1, 2});
    const UniPoly b = from_roots({1, 3});
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.is_zero() ? 0 : r.degree(), b.degree());
    EXPECT_EQ(gcd(a, b), from_roots({1}));
    EXPECT_EQ(gcd(UniPoly{}, UniPoly{}), UniPoly{});
    EXPECT_THROW(divmod(a, UniPoly{}), ZeroPolynomial);
    EXPECT_THROW(UniPoly{}.degree(), ZeroPolynomial);
}

TEST(SquarefreePart, Examples) {
    EXPECT_EQ(squarefree_part(from_roots({1, 1, 2})), U({2, -3, 1}));
    EXPECT_EQ(squarefree_part(U({-1, 0, 1})), U({-1, 0, 1}));
    EXPECT_EQ(squarefree_part(U({0, 0, 0, 1})), U({0, 1}));
    EXPECT_EQ(squarefree_part(U({5})), U({1}));
    EXPECT_THROW(squarefree_part(UniPoly{}), ZeroPolynomial);
}

TEST(SquarefreeDecomposition, RecoversMultiplicities) {
    // 3 (t-1)^3 (t+2)^2 t
    const UniPoly u = Rational(3) * from_roots({1, 1, 1, -2, -2, 0});
    const auto f = squarefree_decomposition(u);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], from_roots({0}));
    EXPECT_EQ(f[1], from_roots({-2}));
    EXPECT_EQ(f[2], from_roots({1}));
}

TEST(SturmChain, LastEntryIsMultipleOfGcd) {
    Generator gen(21);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> roots;
        const int k = static_cast<int>(gen.integer(2, 6));
        for (int j = 0; j < k; ++j) roots.push_back(gen.integer(-3, 3));
        UniPoly u = from_roots(roots) * UniPoly(std::vector<Rational>{1, 0, gen.integer(0, 2)});
        const SturmChain chain(u);
        const UniPoly& last = chain.polys().back();
        const UniPoly g = gcd(u, u.derivative());
        EXPECT_EQ(last.monic(), g);
    }
}

TEST(SturmChain, VariationsNonIncreasing) {
    Generator gen(22);
    for (int i = 0; i < 20; ++i) {
        const UniPoly u = from_roots({gen.rational(4), gen.rational(4), gen.rational(4), gen.rational(4)});
        const SturmChain chain(u);
        int previous = chain.sign_variations(ninf);
        for (int k = -50; k <= 50; ++k) {
            // At a multiple root the whole chain vanishes; Sturm's theorem
            // only speaks about non-roots.
            if (u(Rational(k, 10)) == 0) continue;
            const int v = chain.sign_variations(Rational(k, 10));
            EXPECT_LE(v, previous);
            previous = v;
        }
        EXPECT_LE(chain.sign_variations(pinf), previous);
    }
}

TEST(CountRoots, Examples) {
    EXPECT_EQ(count_distinct_real_roots(U({-1, 0, 1}), ninf, pinf), 2);
    EXPECT_EQ(count_distinct_real_roots(U({1, 0, 1}), ninf, pinf), 0);
    EXPECT_EQ(count_distinct_real_roots(U({6, -11, 6, -1}), 0, pinf), 3);
    EXPECT_THROW(count_distinct_real_roots(UniPoly{}, ninf, pinf), ZeroPolynomial);
    EXPECT_THROW(count_distinct_real_roots(U({1, 1}), 1, 1), PreconditionViolated);
    EXPECT_THROW(count_distinct_real_roots(U({1, 1}), pinf, ninf), PreconditionViolated);
}

TEST(CountRoots, HalfOpenAtRootEndpoints) {
    const UniPoly u = from_roots({1, 2, 2, 3});
    EXPECT_EQ(count_distinct_real_roots(u, 1, 2), 1);
    EXPECT_EQ(count_distinct_real_roots(u, 0, 1), 1);
    EXPECT_EQ(count_distinct_real_roots(u, 1, 3), 2);
    EXPECT_EQ(count_distinct_real_roots(u, 2, pinf), 1);
    EXPECT_EQ(count_distinct_real_roots(u, ninf, 1), 1);
}

TEST(AllRootsReal, Examples) {
    EXPECT_TRUE(all_roots_real(from_roots({1, 2, 3})));
    EXPECT_FALSE(all_roots_real(U({1, 0, 1})));
    EXPECT_FALSE(all_roots_real(from_roots({1, 1}) * U({1, 0, 1})));
    EXPECT_TRUE(all_roots_real(U({4})));
    EXPECT_THROW(all_roots_real(UniPoly{}), ZeroPolynomial);
}

TEST(AllRootsPositive, Examples) {
    EXPECT_TRUE(all_roots_positive(from_roots({1, 2, 3})));
    EXPECT_FALSE(all_roots_positive(U({-1, 0, 1})));
    EXPECT_FALSE(all_roots_positive(U({0, 0, 1})));
    EXPECT_FALSE(all_roots_positive(from_roots({1, 2}) * U({1, 0, 1})));
    EXPECT_TRUE(all_roots_positive(from_roots({Rational(1, 1000), 5, 5})));
}

TEST(Isolate, Examples) {
    const auto a = isolate_real_roots(U({-1, 0, 1}), Rational(1, 100));
    ASSERT_EQ(a.intervals.size(), 2u);
    EXPECT_TRUE(a.intervals[0].contains(-1));
    EXPECT_TRUE(a.intervals[1].contains(1));
    EXPECT_EQ(a.multiplicities, (std::vector<unsigned>{1, 1}));

    // sqrt(2): exact oracle lo^2 < 2 < hi^2, and the known digits.
    const auto b = isolate_real_roots(U({-2, 0, 1}), Rational(1, 1000));
    ASSERT_EQ(b.intervals.size(), 2u);
    for (const auto& iv : b.intervals) EXPECT_LE(iv.width(), Rational(1, 1000));
    const Interval pos = b.intervals[1];
    EXPECT_LT(pos.lo * pos.lo, 2);
    EXPECT_GT(pos.hi * pos.hi, 2);
    EXPECT_LT(to_double(pos.lo), 1.41421357);
    EXPECT_GT(to_double(pos.hi), 1.41421356);
    EXPECT_LT(to_double(b.intervals[0].lo), -1.41421356);
    EXPECT_GT(to_double(b.intervals[0].hi), -1.41421357);

    const auto c = isolate_real_roots(from_roots({2, -3}), Rational(1, 100));
    ASSERT_EQ(c.intervals.size(), 2u);
    EXPECT_TRUE(c.intervals[0].contains(-3));
    EXPECT_TRUE(c.intervals[1].contains(2));

    EXPECT_THROW(isolate_real_roots(UniPoly{}, 1), ZeroPolynomial);
    EXPECT_THROW(isolate_real_roots(U({1, 1}), 0), PreconditionViolated);
    EXPECT_TRUE(isolate_real_roots(U({3}), 1).intervals.empty());
}

TEST(Isolate, MultiplicitiesAndNonRealFactors) {
    const auto iso = isolate_real_roots(from_roots({0, 0, 4, 4, 4, -1}) * U({2, 0, 1}), Rational(1, 64));
    ASSERT_EQ(iso.intervals.size(), 3u);
    EXPECT_EQ(iso.multiplicities, (std::vector<unsigned>{1, 2, 3}));
    EXPECT_EQ(iso.total_multiplicity(), 6u);
}

TEST(RealRootsProperty, RandomRationalProducts) {
    Generator gen(23);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rational> roots;
        const int k = static_cast<int>(gen.integer(1, 6));
        for (int j = 0; j < k; ++j) roots.push_back(gen.integer(0, 3) == 0 && !roots.empty() ? roots.back() : gen.rational(5));
        const UniPoly u = Rational(gen.integer(1, 9)) * from_roots(roots);
        const std::set<Rational> distinct(roots.begin(), roots.end());

        EXPECT_TRUE(all_roots_real(u));
        EXPECT_EQ(count_distinct_real_roots(u, ninf, pinf), static_cast<int>(distinct.size()));

        const auto iso = isolate_real_roots(u, Rational(1, 1000));
        ASSERT_EQ(iso.intervals.size(), distinct.size());
        auto it = distinct.begin();
        for (std::size_t r = 0; r < iso.intervals.size(); ++r, ++it) {
            EXPECT_TRUE(iso.intervals[r].contains(*it));
            EXPECT_EQ(iso.multiplicities[r], static_cast<unsigned>(std::count(roots.begin(), roots.end(), *it)));
            if (r > 0) {
                EXPECT_LE(iso.intervals[r - 1].hi, iso.intervals[r].lo);
            }
        }
        EXPECT_EQ(iso.total_multiplicity(), u.degree());
    }
}

TEST(RealRootsProperty, PositiveDefiniteQuadraticFactorBreaksRealness) {
    Generator gen(24);
    for (int i = 0; i < 40; ++i) {
        const Rational r = gen.rational(5);
        const Rational c = r * r + Rational(1, 7);
        const UniPoly u = from_roots({gen.rational(3), gen.rational(3)}) * U({c, 0, 1});
        EXPECT_FALSE(all_roots_real(u));
        const auto iso = isolate_real_roots(u, Rational(1, 100));
        EXPECT_LT(iso.total_multiplicity(), u.degree());
    }
}

TEST(RealRootsProperty, PositiveRootsIffAlternatingSigns) {
    Generator gen(25);
    for (int i = 0; i < 80; ++i) {
        std::vector<Rational> roots;
        const int k = static_cast<int>(gen.integer(1, 5));
        for (int j = 0; j < k; ++j) roots.push_back(gen.rational(3));
        const UniPoly u = from_roots(roots);
        bool alternating = true;
        for (std::size_t j = 0; j < u.coeffs().size(); ++j) {
            const int expected = (u.degree() - j) % 2 == 0 ? 1 : -1;
            if (sign(u.coeffs()[j]) != expected) alternating = false;
        }
        EXPECT_EQ(all_roots_positive(u), alternating);
        const bool positive = std::all_of(roots.begin(), roots.end(), [](const Rational& r) { return r > 0; });
        EXPECT_EQ(all_roots_positive(u), positive);
    }
}

TEST(RealRootsProperty, HalvingWidthKeepsStructure) {
    Generator gen(26);
    for (int i = 0; i < 20; ++i) {
        const UniPoly u = from_roots({gen.rational(4), gen.rational(4), gen.rational(4)}) * U({1, 0, 1});
        Rational width(1, 4);
        const auto base = isolate_real_roots(u, width);
        for (int h = 0; h < 4; ++h) {
            width /= 2;
            const auto finer = isolate_real_roots(u, width);
            EXPECT_EQ(finer.multiplicities, base.multiplicities);
            ASSERT_EQ(finer.intervals.size(), base.intervals.size());
            for (const auto& iv : finer.intervals) EXPECT_LE(iv.width(), width);
        }
    }
}

TEST(ApproximateRoot, ConvergesToDoublePrecision) {
    const UniPoly u = U({-2, 0, 1});
    const SturmChain chain(u);
    const auto iso = isolate_real_roots(u, Rational(1, 10));
    EXPECT_NEAR(approximate_root(chain, iso.intervals[1]), 1.4142135623730951, 1e-15);
    EXPECT_NEAR(approximate_root(chain, iso.intervals[0]), -1.4142135623730951, 1e-15);
}
