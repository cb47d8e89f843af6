#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ckgeom;

namespace ckgeom {
inline void PrintTo(const EpsMultivector& m, std::ostream* os) { *os << str(m); }
}  // namespace ckgeom
using ckgeom::testing::Gen;
using ckgeom::testing::to_doubles;

namespace {

using MV = EpsMultivector;

MV e(unsigned mask) { return MV::blade(mask); }

std::vector<EpsScalar> identity_metric(size_t n) { return std::vector<EpsScalar>(n, EpsScalar(1)); }

MV random_vector(Gen& g, size_t n1) { return lift(g.vec(n1)); }

MV random_multivector(Gen& g, size_t n1) {
    MV m;
    for (int k = 0; k < 5; ++k) m.add(unsigned(g.integer(0, (1 << n1) - 1)), EpsScalar(g.rational()));
    return m;
}

const char* kSpaces[] = {"+@0 +@0 +@0", "+@0 +@0 -@0", "+@0 +@1 +@1", "+@0 -@1 +@2", "+@0 +@0 +@0 -@0"};

}  // namespace

TEST(Exterior, Examples) {
    EXPECT_EQ(exterior(e(0b01), e(0b10)), e(0b11));
    EXPECT_TRUE(exterior(e(0b01), e(0b01)).is_zero());
    EXPECT_EQ(exterior(e(0b001) + e(0b010), e(0b010) + e(0b100)), e(0b011) + e(0b101) + e(0b110));
    EXPECT_EQ(exterior(e(0b10), e(0b01)), -e(0b11));
}

TEST(Exterior, AssociativeAndAlternating) {
    Gen g(501);
    for (int t = 0; t < 200; ++t) {
        MV a = random_multivector(g, 4), b = random_multivector(g, 4), c = random_multivector(g, 4);
        EXPECT_EQ(exterior(exterior(a, b), c), exterior(a, exterior(b, c)));
        MV u = random_vector(g, 4), v = random_vector(g, 4);
        EXPECT_TRUE(exterior(u, u).is_zero());
        EXPECT_EQ(exterior(u, v), -exterior(v, u));
    }
}

TEST(Exterior, DecomposableBivectors) {
    Gen g(502);
    for (int t = 0; t < 100; ++t) {
        MV b = exterior(random_vector(g, 4), random_vector(g, 4));
        if (b.is_zero()) continue;
        EXPECT_EQ(plucker_relation(to_flat(b, 4)), 0);
    }
    EXPECT_NE(plucker_relation(to_flat(e(0b0011) + e(0b1100), 4)), 0);
}

TEST(Inner, Examples) {
    auto I3 = identity_metric(3);
    EXPECT_EQ(inner(e(0b01), e(0b11), I3), -e(0b10));
    EXPECT_EQ(inner(exterior(e(0b01), e(0b10)), exterior(e(0b10), e(0b01)), I3), MV(EpsScalar(-1)));
    auto g = eps_metric(CKStructure::parse("+@0 +@1"));
    EXPECT_EQ(inner(e(0b10), e(0b10), g), MV(EpsScalar::monomial(1, 1)));
    // left grade above right grade vanishes
    EXPECT_TRUE(inner(e(0b11), e(0b01), I3).is_zero());
}

TEST(Inner, DeterminantIdentity) {
    Gen gen(503);
    for (const char* sp : kSpaces) {
        CKStructure ck = CKStructure::parse(sp);
        auto g = eps_metric(ck);
        const size_t n1 = ck.size();
        for (size_t r : {2u, 3u}) {
            if (r > n1) continue;
            for (int t = 0; t < 30; ++t) {
                std::vector<MV> u, w;
                for (size_t i = 0; i < r; ++i) {
                    u.push_back(random_vector(gen, n1));
                    w.push_back(random_vector(gen, n1));
                }
                MV U = u[0], W = w[0];
                for (size_t i = 1; i < r; ++i) {
                    U = exterior(U, u[i]);
                    W = exterior(W, w[i]);
                }
                MatT<EpsScalar> m(r, std::vector<EpsScalar>(r));
                for (size_t i = 0; i < r; ++i)
                    for (size_t j = 0; j < r; ++j) m[i][j] = inner(u[i], w[j], g).coeff(0u);
                EXPECT_EQ(inner(U, W, g), MV(det(m))) << sp;
            }
        }
    }
}

TEST(Geometric, Examples) {
    auto I2 = identity_metric(2);
    EXPECT_EQ(geometric(e(0b01), e(0b10), I2), e(0b11));
    EXPECT_EQ(geometric(e(0b10), e(0b01), I2), -e(0b11));
    EXPECT_EQ(geometric(e(0b01) + e(0b10), e(0b01), I2), MV(EpsScalar(1)) - e(0b11));
    Gen gen(504);
    auto g = eps_metric(CKStructure::parse("+@0 -@1 +@2"));
    for (int t = 0; t < 50; ++t) {
        MV v = random_vector(gen, 3);
        EXPECT_EQ(geometric(v, v, g), inner(v, v, g));
        EXPECT_EQ(geometric(v, v, g).pure_grade(), 0);
    }
}

TEST(Geometric, Associative) {
    Gen gen(505);
    for (const char* sp : kSpaces) {
        auto g = eps_metric(CKStructure::parse(sp));
        const size_t n1 = g.size();
        for (int t = 0; t < 100; ++t) {
            MV a = random_vector(gen, n1), b = random_vector(gen, n1), c = random_vector(gen, n1);
            EXPECT_EQ(geometric(geometric(a, b, g), c, g), geometric(a, geometric(b, c, g), g)) << sp;
            MV x = random_multivector(gen, n1), y = random_multivector(gen, n1), z = random_multivector(gen, n1);
            EXPECT_EQ(geometric(geometric(x, y, g), z, g), geometric(x, geometric(y, z, g), g)) << sp;
        }
    }
}

TEST(Geometric, SymmetricAndAntisymmetricParts) {
    Gen gen(506);
    for (const char* sp : kSpaces) {
        auto g = eps_metric(CKStructure::parse(sp));
        const size_t n1 = g.size();
        for (int t = 0; t < 100; ++t) {
            MV v = random_vector(gen, n1), w = random_vector(gen, n1);
            MV vw = geometric(v, w, g), wv = geometric(w, v, g);
            EXPECT_EQ(vw + wv, EpsScalar(2) * inner(v, w, g));
            EXPECT_EQ(vw - wv, EpsScalar(2) * exterior(v, w));
        }
    }
}

TEST(Geometric, VectorInverse) {
    Gen gen(507);
    auto g = eps_metric(CKStructure::parse("+@0 +@1 +@1"));
    for (int t = 0; t < 50; ++t) {
        // monomial squares: a degree-0 vector or a vector in the degree-1 part
        Vec v = t % 2 ? Vec{gen.nonzero(), 0, 0} : Vec{0, gen.nonzero(), gen.rational()};
        MV m = lift(v);
        EXPECT_EQ(geometric(m, vector_inverse(m, g), g), MV(EpsScalar(1)));
    }
    auto h = eps_metric(CKStructure::diag({1, -1}));
    EXPECT_THROW(vector_inverse(lift(Vec{1, 1}), h), DomainError);
    // (1 + eps) is not a monomial, so the inverse is not polynomial
    EXPECT_THROW(vector_inverse(lift(Vec{1, 1, 0}), g), DomainError);
}

TEST(Literal, ParseAndPrint) {
    MV m = parse_multivector("{: 1, 12: -3/2, 134: 2}");
    EXPECT_EQ(m.coeff(0u), EpsScalar(1));
    EXPECT_EQ(m.coeff(0b0011), EpsScalar(make_rational(-3, 2)));
    EXPECT_EQ(m.coeff(0b1101), EpsScalar(2));
    EXPECT_EQ(str(m), "{: 1, 12: -3/2, 134: 2}");
    EXPECT_EQ(parse_multivector(str(m)), m);
    EXPECT_EQ(parse_multivector("{}"), MV());
    for (const char* bad : {"1: 2", "{21: 1}", "{1 2}", "{1: x}", "{1: 1, 1: 2}", "{0: 1}"})
        EXPECT_THROW(parse_multivector(bad), DomainError) << bad;
}

TEST(Sandwich, Examples) {
    CKStructure ck = CKStructure::diag({1, 1});
    EXPECT_EQ(sandwich_reflect(ck, Point{1, 0}, Point{1, 1}), (Point{1, -1}));
    EXPECT_EQ(sandwich_reflect(ck, Point{2, 3}, Point{2, 3}), (Point{2, 3}));
    EXPECT_THROW(sandwich_reflect(CKStructure::diag({1, -1}), Point{1, 1}, Point{1, 0}), DomainError);
}

TEST(Sandwich, AgreesWithReflectionAndPreservesQuadrance) {
    Gen gen(508);
    for (const char* sp : kSpaces) {
        CKStructure ck = CKStructure::parse(sp);
        const size_t n1 = ck.size();
        int checked = 0;
        for (int t = 0; t < 200 && checked < 50; ++t) {
            Point r = gen.point(n1), q = gen.point(n1), p = gen.point(n1);
            if (gram(ck, r.v(), r.v()).is_zero()) continue;
            Point q2;
            try {
                q2 = sandwich_reflect(ck, r, q);
            } catch (const DomainError&) {
                continue;  // eps-squared mirror with a non-monomial square
            }
            EXPECT_EQ(q2, reflect_point(ck, r, q)) << sp;
            if (classify_point(ck, p).anisotropic && classify_point(ck, q).anisotropic) {
                Point p2 = sandwich_reflect(ck, r, p);
                EXPECT_EQ(quadrance_points(ck, p2, q2), quadrance_points(ck, p, q)) << sp;
            }
            ++checked;
        }
        EXPECT_GT(checked, 30) << sp;
    }
}

TEST(Rotor, AgreesWithDoubleReflection) {
    Gen gen(509);
    for (const char* sp : kSpaces) {
        CKStructure ck = CKStructure::parse(sp);
        const size_t n1 = ck.size();
        int checked = 0;
        for (int t = 0; t < 300 && checked < 40; ++t) {
            Point r = gen.point(n1), s = gen.point(n1), q = gen.point(n1);
            if (!classify_point(ck, r).anisotropic || !classify_point(ck, s).anisotropic ||
                !classify_point(ck, q).anisotropic)
                continue;
            DoubleReflection dr;
            try {
                dr = double_reflection(ck, r, s, q);
            } catch (const DomainError&) {
                continue;
            }
            EXPECT_EQ(rotor_apply(ck, rotor(ck, s, r), q), dr.image) << sp;
            EXPECT_TRUE(dr.holds) << sp;
            ++checked;
        }
        EXPECT_GT(checked, 20) << sp;
    }
}

TEST(RotorExponential, Examples) {
    auto el = rotor_exponential_form(CKStructure::diag({1, 1}), Point{1, 0},
                                     Point(Vec{make_rational(3, 5), make_rational(4, 5)}));
    EXPECT_EQ(el.kind, LineType::elliptic);
    EXPECT_EQ(el.tr_inv_square, -1);
    EXPECT_NEAR(el.param, std::atan2(4.0, 3.0), 1e-12);
    EXPECT_TRUE(el.matches);

    auto hy = rotor_exponential_form(CKStructure::diag({1, -1}), Point{1, 0}, Point{5, 3});
    EXPECT_EQ(hy.kind, LineType::hyperbolic);
    EXPECT_EQ(hy.tr_inv_square, 1);
    EXPECT_NEAR(hy.param, std::acosh(1.25), 1e-12);
    EXPECT_NEAR(std::cosh(hy.param) * std::cosh(hy.param) - std::sinh(hy.param) * std::sinh(hy.param), 1, 1e-12);
    EXPECT_TRUE(hy.matches);

    auto pa = rotor_exponential_form(CKStructure::parse("+@0 +@1"), Point{1, 0}, Point{1, 2});
    EXPECT_EQ(pa.kind, LineType::parabolic);
    EXPECT_EQ(pa.tr_inv_square, 0);
    EXPECT_NEAR(pa.param, 2, 1e-12);
    EXPECT_TRUE(pa.matches);

    EXPECT_THROW(rotor_exponential_form(CKStructure::diag({1, -1}), Point{1, 0}, Point{1, 1}), DomainError);
    EXPECT_THROW(rotor_exponential_form(CKStructure::diag({1, 1, -1}), Point{1, 0, 0}, Point{0, 0, 1}), DomainError);
}

TEST(RotorExponential, RandomMirrors) {
    Gen gen(510);
    for (const char* sp : {"+@0 +@0 +@0", "+@0 +@0 -@0", "+@0 +@1 +@1", "+@0 +@0 +@1"}) {
        CKStructure ck = CKStructure::parse(sp);
        int checked = 0;
        for (int t = 0; t < 300 && checked < 50; ++t) {
            Point r = gen.point(3), s = gen.point(3);
            Rational rr = gram_level(ck, 0, r.v(), r.v()), ss = gram_level(ck, 0, s.v(), s.v());
            if (rr == 0 || ss == 0 || sgn(rr) != sgn(ss) || r == s) continue;
            RotorForm f;
            try {
                f = rotor_exponential_form(ck, r, s);
            } catch (const DomainError&) {
                continue;
            }
            EXPECT_TRUE(f.matches) << sp;
            // (t r^-1)^2 is the case discriminator
            auto g = level0_metric(ck);
            RealMultivector rm = RealMultivector::vector(to_doubles(r.v()));
            RealMultivector b = geometric(RealMultivector::vector(to_doubles(f.t)), vector_inverse(rm, g), g);
            RealMultivector b2 = geometric(b, b, g);
            double sq = b2.coeff(0u);
            EXPECT_EQ(b2.pure_grade() <= 0, true);
            EXPECT_EQ(std::abs(sq) < 1e-9 ? 0 : (sq > 0 ? 1 : -1), f.tr_inv_square) << sp;
            ++checked;
        }
        EXPECT_GT(checked, 20) << sp;
    }
}
