#include "support.hpp"

#include <gtest/gtest.h>

using namespace ckgeom;
using ckgeom::testing::Gen;

namespace {

Flat pt(std::initializer_list<long> xs) { return Flat::from_point(Point(xs)); }

Rational minor(const std::vector<Vec>& rows, unsigned cols) {
    MatT<Rational> m;
    for (const auto& r : rows) {
        Vec row;
        for (unsigned c = cols; c; c &= c - 1) row.push_back(r[size_t(__builtin_ctz(c))]);
        m.push_back(row);
    }
    return det(m);
}

}  // namespace

TEST(Join, Examples) {
    Flat e12 = join(pt({1, 0, 0}), Point{0, 1, 0});
    EXPECT_EQ(e12.grade(), 2);
    EXPECT_EQ(e12.component(0b011), 1);
    EXPECT_EQ(e12.component(0b101), 0);
    EXPECT_TRUE(join(pt({1, 2, 3}), Point{2, 4, 6}).is_zero());
    Flat l = join(pt({1, 1, 0}), Point{0, 1, 1});
    EXPECT_EQ(l.plucker(), (Vec{1, 1, 1}));
    EXPECT_THROW(join(Flat::whole(3), Point{1, 0, 0}), DomainError);
}

TEST(Join, PluckerCoordinatesAreMinors) {
    Gen g(10);
    for (int t = 0; t < 100; ++t) {
        const int n1 = g.integer(3, 5), k = g.integer(1, n1 - 1);
        std::vector<Vec> rows;
        for (int i = 0; i < k; ++i) rows.push_back(g.vec(size_t(n1)));
        Flat f = flat_of(rows, n1);
        for (unsigned m : f.masks()) EXPECT_EQ(f.component(m), minor(rows, m));
    }
}

TEST(Join, AssociativeAndAlternating) {
    Gen g(11);
    for (int t = 0; t < 100; ++t) {
        Point a = g.point(4), b = g.point(4), c = g.point(4);
        Flat fa = Flat::from_point(a);
        EXPECT_EQ(join(join(fa, b), c).plucker(), join(fa, join(Flat::from_point(b), c)).plucker());
        Vec ab = join(fa, b).plucker(), ba = join(Flat::from_point(b), a).plucker();
        for (size_t i = 0; i < ab.size(); ++i) EXPECT_EQ(ab[i], -ba[i]);
        EXPECT_TRUE(join(fa, a).is_zero());
    }
}

TEST(Join, PluckerRelationOnLines) {
    Gen g(12);
    for (int t = 0; t < 200; ++t) {
        Flat l = join(Flat::from_point(g.point(4)), g.point(4));
        if (l.is_zero()) continue;
        EXPECT_EQ(plucker_relation(l), 0);
    }
    // e12 + e34 is not decomposable
    Flat witness(4, 2, Vec{1, 0, 0, 0, 0, 1});
    EXPECT_NE(plucker_relation(witness), 0);
}

TEST(Meet, Examples) {
    Flat a = join(pt({1, 0, 0}), Point{0, 1, 0});
    Flat b = join(pt({0, 1, 0}), Point{0, 0, 1});
    EXPECT_EQ(as_point(meet(a, b)), (Point{0, 1, 0}));
    Flat l1 = join(pt({1, 0, 0}), Point{0, 1, 0});
    Flat l2 = join(pt({1, 1, 1}), Point{0, 0, 1});
    EXPECT_EQ(as_point(meet(l1, l2)), (Point{1, 1, 0}));
    Flat m = meet(l1, l1);
    EXPECT_EQ(m.grade(), 2);
    EXPECT_TRUE(contains(m, Point{1, 0, 0}) && contains(m, Point{0, 1, 0}));
}

TEST(Meet, LinesInSpaceThroughCommonPoint) {
    Flat l1 = join(pt({1, 0, 0, 0}), Point{0, 1, 0, 0});
    Flat l2 = join(pt({0, 1, 0, 0}), Point{0, 0, 1, 0});
    // two lines in P^3 meeting in E2; meet inside their common plane
    Flat plane = join(l1, Point{0, 0, 1, 0});
    Flat h = join(l2, Point{0, 0, 0, 1});
    EXPECT_EQ(meet(plane, h).grade(), 2);
    EXPECT_EQ(as_point(meet(l1, h)), (Point{0, 1, 0, 0}));
}

TEST(Meet, RandomIncidence) {
    Gen g(13);
    for (int t = 0; t < 50; ++t) {
        std::vector<Vec> a{g.vec(4), g.vec(4), g.vec(4)}, b{g.vec(4), g.vec(4)};
        Flat fa = flat_of(a, 4), fb = flat_of(b, 4);
        if (fa.is_zero() || fb.is_zero()) continue;
        Flat x0 = meet(fa, fb);
        if (x0.grade() != 1 || x0.is_zero()) continue;
        Point x = as_point(x0);
        EXPECT_TRUE(contains(fa, x));
        EXPECT_TRUE(contains(fb, x));
    }
}

TEST(CrossRatio, Examples) {
    Point a{1, 0}, b{0, 1}, c{1, 1}, d{1, -1};
    EXPECT_EQ(cross_ratio(a, b, c, d), (Point{-1, 1}));
    EXPECT_EQ(cross_ratio(a, b, c, c), (Point{1, 1}));
    EXPECT_TRUE(is_harmonic(a, b, c, d));
    EXPECT_FALSE(is_harmonic(a, c, b, b));
    EXPECT_THROW(cross_ratio(Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}, Point{1, 1, 1}), DomainError);
}

TEST(CrossRatio, InvariantUnderAutomorphisms) {
    Gen g(14);
    for (int t = 0; t < 100; ++t) {
        Point p = g.point(3), q = g.point(3);
        if (p == q) continue;
        auto on = [&](const Rational& s, const Rational& u) { return Point(axpy(s, p.v(), u, q.v())); };
        Point a = on(1, 0), b = on(0, 1), c = on(1, g.nonzero()), d = on(1, g.nonzero());
        if (c == d) continue;
        Mat phi = g.invertible(3);
        EXPECT_EQ(cross_ratio(a, b, c, d), cross_ratio(ckgeom::apply(phi, a), ckgeom::apply(phi, b), ckgeom::apply(phi, c), ckgeom::apply(phi, d)));
    }
}

TEST(CentralCollineation, Examples) {
    Point z{1, 0};
    Vec m{0, 1};
    EXPECT_EQ(central_collineation(z, m, Point{1, 1}), (Point{2, 1}));
    EXPECT_EQ(central_collineation(z, m, Point{1, 0}), z);
    EXPECT_EQ(central_collineation(z, Vec{1, 0}, Point{0, 1}), (Point{0, 1}));
    EXPECT_THROW(central_collineation(z, Vec{-1, 0}, Point{0, 1}), DomainError);
}

TEST(Perspective, Examples) {
    std::vector<Point> ps{Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}};
    EXPECT_EQ(perspective(ps, ps).status, PerspectiveStatus::identical_tuples);

    // a vertex is shared: the perspector is that vertex
    Point a{1, 0, 0}, b{0, 1, 0}, c{0, 0, 1};
    Point b2{1, 2, 0}, c2{1, 0, 3};
    Perspective p = perspective({a, b, c}, {a, b2, c2});
    ASSERT_EQ(p.status, PerspectiveStatus::unique);
    EXPECT_EQ(*p.center, a);
}

TEST(Perspective, ImageUnderCentralCollineation) {
    Gen g(15);
    for (int t = 0; t < 50; ++t) {
        Point z = g.point(3);
        Vec m = g.vec(3);
        if (dot(m, z.v()) == -1) continue;
        std::vector<Point> ps{g.point(3), g.point(3), g.point(3)}, qs;
        if (rank(vecs(ps)) != 3) continue;
        bool skip = false;
        for (const auto& p : ps) {
            qs.push_back(central_collineation(z, m, p));
            if (p == z || qs.back() == p) skip = true;
        }
        if (skip) continue;
        Perspective r = perspective(ps, qs);
        ASSERT_EQ(r.status, PerspectiveStatus::unique);
        EXPECT_EQ(*r.center, z);
        ASSERT_TRUE(r.axis.has_value());
        for (const auto& b : basis(*r.axis)) EXPECT_EQ(dot(m, b), 0);
    }
}

TEST(Point, CanonicalSign) {
    EXPECT_EQ((Point{0, -2, 4}).canonical_str(), "0:1:-2");
    EXPECT_EQ((Point{0, -2, 4}).chi(), -1);
    EXPECT_EQ(Point(Vec{Rational(1, 2), Rational(1, 3)}).canonical_str(), "3:2");
    EXPECT_THROW(Point(Vec{0, 0}), DomainError);
}
