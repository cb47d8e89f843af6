#include "support.hpp"

#include <gtest/gtest.h>

using namespace ckgeom;
using ckgeom::testing::Gen;

namespace {

EpsScalar e(int d) { return EpsScalar::eps(d); }
EpsScalar c(long n, long d = 1) { return EpsScalar(make_rational(n, d)); }

}  // namespace

TEST(StarEps, LeadingTermRatio) {
    EXPECT_EQ(star_eps(c(3) * e(2) + e(3), c(2) * e(1)), c(3, 2) * e(1));
    EXPECT_TRUE(star_eps(EpsScalar(), c(1)).is_zero());
    EpsScalar one_minus = c(1) - e(1);
    EXPECT_EQ(star_eps(c(1) - one_minus * one_minus, c(1)), c(2) * e(1));
    EXPECT_THROW(star_eps(c(1), EpsScalar()), DomainError);
}

TEST(StarEps, MultiplicativeOnProducts) {
    Gen g(1);
    for (int i = 0; i < 200; ++i) {
        EpsScalar f1 = g.eps(), f2 = g.eps(), g1 = g.eps(), g2 = g.eps();
        if (f1.is_zero() || f2.is_zero() || g1.is_zero() || g2.is_zero()) continue;
        EXPECT_EQ(star_eps(f1 * g1, f2 * g2), star_eps(f1, f2) * star_eps(g1, g2));
    }
}

TEST(EpsScalar, RingAxioms) {
    Gen g(2);
    for (int i = 0; i < 200; ++i) {
        EpsScalar a = g.eps(), b = g.eps(), x = g.eps();
        EXPECT_EQ((a * b) * x, a * (b * x));
        EXPECT_EQ(a * (b + x), a * b + a * x);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(EpsScalar, CanonicalFormDropsZeros) {
    EpsScalar a = c(1) + e(2);
    EpsScalar b = a - e(2);
    EXPECT_EQ(b.terms().size(), 1u);
    EXPECT_EQ(b, c(1));
}

TEST(EpsScalar, WindowOverflowFails) {
    EXPECT_THROW(e(EpsScalar::kDefaultWindow + 1), DomainError);
    EXPECT_THROW(e(60) * e(60), DomainError);
}

TEST(EpsScalar, Rendering) {
    EXPECT_EQ((c(3, 2) * e(1) - c(1) + e(-1)).str(), "1*e^-1 - 1 + 3/2*e^1");
    EXPECT_EQ(EpsScalar().str(), "0");
}

TEST(CDist, Order) {
    EXPECT_TRUE(cdist_less(CDist::exact(5, 0), CDist::exact(0, Rational(1, 2))));
    EXPECT_TRUE(cdist_less(CDist::exact(0, Rational(1, 2)), CDist::exact(1, Rational(1, 2))));
    double inf = std::numeric_limits<double>::infinity();
    EXPECT_FALSE(cdist_less(CDist::exact(-inf, Rational(3, 4)), CDist::exact(0, Rational(1, 4))));
}

TEST(CDist, StrictTotalOrder) {
    Gen g(3);
    std::vector<CDist> xs;
    for (int i = 0; i < 60; ++i) xs.push_back(CDist::exact(g.integer(-3, 3) / 2.0, make_rational(g.integer(0, 4), 4)));
    for (const auto& a : xs) {
        EXPECT_FALSE(cdist_less(a, a));
        for (const auto& b : xs) {
            bool equal = a.re == b.re && im_equal(a, b);
            EXPECT_EQ(int(cdist_less(a, b)) + int(cdist_less(b, a)) + int(equal), 1);
            for (const auto& x : xs) {
                if (cdist_less(a, b) && cdist_less(b, x)) {
                    EXPECT_TRUE(cdist_less(a, x));
                }
            }
        }
    }
}

TEST(CDist, ComplementAndRendering) {
    CDist x = CDist::exact(0.5, Rational(1, 4));
    CDist y = complement(x);
    EXPECT_EQ(*y.im_pi, Rational(3, 4));
    EXPECT_DOUBLE_EQ(y.re, -0.5);
    EXPECT_EQ(x.str(3), "0.5 + 1/4*pi*i");
    EXPECT_EQ(CDist::exact(std::numeric_limits<double>::infinity(), Rational(1, 2)).str(), "inf + 1/2*pi*i");
}

TEST(Format, RoundHalfEven) {
    EXPECT_EQ(format_double(0.125, 2), "0.12");
    EXPECT_EQ(format_double(0.375, 2), "0.38");
    EXPECT_EQ(format_double(-0.0, 3), "0");
    EXPECT_EQ(format_double(2.5, 0), "2");
}
