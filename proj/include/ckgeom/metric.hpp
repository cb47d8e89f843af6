#pragma once

#include "ckspace.hpp"
#include "quadext.hpp"

#include <array>

namespace ckgeom {

inline EpsScalar quadrance_points(const CKStructure& ck, const Point& p, const Point& q) {
    require_anisotropic(ck, p, "quadrance");
    require_anisotropic(ck, q, "quadrance");
    EpsScalar gpp = gram(ck, p, p), gqq = gram(ck, q, q), gpq = gram(ck, p, q);
    EpsScalar den = gpp * gqq;
    return star_eps(den - gpq * gpq, den);
}

// Gross quadrance xi_0 with the level-0 form.
inline Rational quadrance0(const CKStructure& ck, const Vec& p, const Vec& q) {
    Rational gpp = gram_level(ck, 0, p, p), gqq = gram_level(ck, 0, q, q), g = gram_level(ck, 0, p, q);
    if (gpp == 0 || gqq == 0) throw DomainError("quadrance0: isotropic point");
    return 1 - g * g / (gpp * gqq);
}

struct FlatQuadrance {
    EpsScalar zeta;
    EpsScalar xi;
};

inline FlatQuadrance quadrance_flats(const CKStructure& ck, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.size() != b.size()) throw DomainError("quadrance_flats: dimension mismatch");
    if (rank(a) != a.size() || rank(b) != b.size()) throw DomainError("quadrance_flats: dependent generators");
    EpsScalar daa = det(gram_matrix(ck, a, a)), dbb = det(gram_matrix(ck, b, b)), dab = det(gram_matrix(ck, a, b));
    if (daa.is_zero() || dbb.is_zero()) throw DomainError("quadrance_flats: isotropic flat");
    EpsScalar den = daa * dbb, num = dab * dab;
    return {star_eps(num, den), star_eps(den - num, den)};
}
inline FlatQuadrance quadrance_flats(const CKStructure& ck, const Flat& a, const Flat& b) {
    return quadrance_flats(ck, basis(a), basis(b));
}

// zeta_0 with the level-0 form.
inline Rational zeta0(const CKStructure& ck, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    Mat ab(a.size(), Vec(b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) ab[i][j] = gram_level(ck, 0, a[i], b[j]);
    Rational daa = det(gram_matrix_level(ck, 0, a)), dbb = det(gram_matrix_level(ck, 0, b)), dab = det(ab);
    if (daa == 0 || dbb == 0) throw DomainError("zeta0: isotropic flat");
    return dab * dab / (daa * dbb);
}

struct Euclid3LineQuadrance {
    EpsScalar value;
    EpsScalar closed_form;
    bool agrees = false;
};

inline Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Lines P+R and Q+S in euclidean 3-space; r, s unit directions.
inline Euclid3LineQuadrance eps_quadrance_lines_euclidean3(const Vec& p, const Vec& r, const Vec& q, const Vec& s) {
    CKStructure ck = CKStructure::parse("+@0 +@1 +@1 +@1");
    auto hom = [](const Rational& w, const Vec& x) { return Vec{w, x[0], x[1], x[2]}; };
    Euclid3LineQuadrance out;
    out.value = quadrance_flats(ck, {hom(1, p), hom(0, r)}, {hom(1, q), hom(0, s)}).xi;
    if (Point(hom(0, r)) != Point(hom(0, s))) {
        Vec c = cross3(r, s);
        out.closed_form = EpsScalar(dot(c, c));
    } else {
        Vec d = axpy(1, p, -1, q);
        Vec c = cross3(r, d);
        out.closed_form = EpsScalar::monomial(dot(c, c), 1);
    }
    out.agrees = out.value == out.closed_form;
    return out;
}

// ---------------------------------------------------------------- lengths

struct SegmentSpec {
    Point p, q;
    bool plus = true;
};

struct SegmentLengths {
    CDist plus, minus;
};

namespace detail {

inline CDist half_pi_shift(double re) { return CDist::exact(re, Rational(1, 2)); }

// arccos of c with exact pi multiples for the common special values
inline CDist arc(const Rational& c2, int cos_sign) {
    static const std::array<std::pair<Rational, Rational>, 5> table{{
        {Rational(0), Rational(1, 2)},
        {Rational(1, 4), Rational(1, 3)},
        {Rational(1, 2), Rational(1, 4)},
        {Rational(3, 4), Rational(1, 6)},
        {Rational(1), Rational(0)},
    }};
    for (const auto& [v, m] : table)
        if (v == c2) return CDist::exact(0.0, cos_sign >= 0 ? m : Rational(1) - m);
    double c = cos_sign * std::sqrt(to_double(c2));
    return CDist::approx(0.0, std::acos(std::clamp(c, -1.0, 1.0)));
}

inline double acosh_sqrt(const Rational& c2) { return std::acosh(std::sqrt(to_double(c2))); }

inline SegmentLengths make(const CDist& plus) { return {plus, complement(plus)}; }

}  // namespace detail

// Lengths of [P,Q]+ and [P,Q]- with the stored representatives.
inline SegmentLengths segment_lengths(const CKStructure& ck, const Point& P, const Point& Q) {
    if (P == Q) throw DomainError("segment_length: endpoints coincide");
    Vec p = P.v(), q = Q.v();
    Rational gpp = gram_level(ck, 0, p, p), gqq = gram_level(ck, 0, q, q), g = gram_level(ck, 0, p, q);
    const double inf = std::numeric_limits<double>::infinity();
    if (gpp == 0 && gqq == 0) {
        if (g == 0) throw DomainError("segment_length: totally isotropic line");
        return detail::make(CDist::exact(g > 0 ? inf : -inf, Rational(1, 2)));
    }
    if (gpp == 0 || gqq == 0) {
        if (gpp == 0) {
            std::swap(p, q);
            std::swap(gpp, gqq);
        }
        if (g == 0) return detail::make(detail::half_pi_shift(0.0));
        // the second isotropic point -2g p + gpp q
        bool other_in_plus = g * gpp < 0;
        int sp = sgn(gpp);
        CDist with_other = CDist::exact(-sp * inf, Rational(3, 4));
        CDist without = CDist::exact(sp * inf, Rational(1, 4));
        return other_in_plus ? SegmentLengths{with_other, without} : SegmentLengths{without, with_other};
    }
    if (g == 0) return detail::make(detail::half_pi_shift(0.0));
    Rational c2 = g * g / (gpp * gqq);
    Rational D = gpp * gqq - g * g;
    if (D > 0) {
        int cs = sgn(gpp) * sgn(g);
        return detail::make(detail::arc(c2, cs));
    }
    if (D == 0) {
        // the double point is g p - gpp q
        bool in_plus = -g * gpp >= 0;
        return in_plus ? SegmentLengths{CDist::exact(0.0, 1), CDist::exact(0.0, 0)}
                       : SegmentLengths{CDist::exact(0.0, 0), CDist::exact(0.0, 1)};
    }
    if (sgn(gpp) == sgn(gqq)) {
        double L = sgn(gpp) * detail::acosh_sqrt(c2);
        bool iso_in_plus = g * gpp < 0;
        CDist free_seg = CDist::exact(L, 0);
        return iso_in_plus ? SegmentLengths{complement(free_seg), free_seg} : detail::make(free_seg);
    }
    if (gpp < 0) {
        std::swap(p, q);
        std::swap(gpp, gqq);
    }
    Vec s = axpy(gqq, p, -g, q);
    Rational gps = gram_level(ck, 0, p, s), gss = gram_level(ck, 0, s, s);
    double L = detail::acosh_sqrt(gps * gps / (gpp * gss));
    bool s_in_plus = -gqq * g >= 0;
    return detail::make(detail::half_pi_shift(s_in_plus ? L : -L));
}

inline CDist segment_length(const CKStructure& ck, const SegmentSpec& seg) {
    auto l = segment_lengths(ck, seg.p, seg.q);
    return seg.plus ? l.plus : l.minus;
}

inline CDist gross_distance(const CKStructure& ck, const Point& p, const Point& q) {
    require_gross_anisotropic(ck, p.v(), "gross_distance");
    require_gross_anisotropic(ck, q.v(), "gross_distance");
    if (p == q) return CDist::exact(0.0, 0);
    auto l = segment_lengths(ck, p, q);
    return cdist_less(l.minus, l.plus) ? l.minus : l.plus;
}

// cosh^2 of d_0 without transcendental functions
inline Rational cosh2(const CKStructure& ck, const Vec& p, const Vec& q) {
    Rational gpp = gram_level(ck, 0, p, p), gqq = gram_level(ck, 0, q, q), g = gram_level(ck, 0, p, q);
    if (gpp == 0 || gqq == 0) throw DomainError("cosh2: isotropic point");
    return g * g / (gpp * gqq);
}

// --------------------------------------------------------------- dihedral

struct Dihedral {
    EpsScalar xi;
    CDist d;
    std::optional<Point> p1, p2;
};

inline bool gross_anisotropic(const CKStructure& ck, const Flat& u) {
    if (u.is_empty()) return true;
    return det(gram_matrix_level(ck, 0, basis(u))) != 0;
}

// The points where the polar of the vertex cuts the two sides.
inline std::pair<Point, Point> dihedral_points(const CKStructure& ck, const Flat& a1, const Flat& a2) {
    const int n1 = a1.ambient();
    Flat u = meet(a1, a2);
    Flat h = span_of([&] {
        auto v = basis(a1);
        for (auto& x : basis(a2)) v.push_back(x);
        return v;
    }(), n1);
    Flat l = meet(u.is_empty() ? Flat::whole(n1) : polar(ck, u, 0), h);
    Flat x1 = meet(l, a1), x2 = meet(l, a2);
    if (x1.grade() != 1 || x2.grade() != 1) throw DomainError("dihedral: degenerate configuration");
    return {as_point(x1), as_point(x2)};
}

inline Dihedral dihedral_angle(const CKStructure& ck, const Flat& a1, const Flat& a2) {
    if (a1 == a2) return {EpsScalar(), CDist::exact(0.0, 0), std::nullopt, std::nullopt};
    Flat u = meet(a1, a2);
    if (a1.grade() != a2.grade() || u.grade() != a1.grade() - 1)
        throw DomainError("dihedral_angle: planes do not form dihedral angles");
    if (!gross_anisotropic(ck, u)) {
        if (!gross_anisotropic(ck, a1) || !gross_anisotropic(ck, a2))
            throw DomainError("dihedral_angle: isotropic vertex and side");
        return {EpsScalar(), CDist::exact(0.0, 0), std::nullopt, std::nullopt};
    }
    auto [p1, p2] = dihedral_points(ck, a1, a2);
    return {quadrance_points(ck, p1, p2), gross_distance(ck, p1, p2), p1, p2};
}

// ----------------------------------------------------- pedal, perp, parallel

inline Flat perpendicular(const CKStructure& ck, const Point& p, const Flat& u) {
    return join(polar(ck, u, 0), p);
}

inline Point pedal(const CKStructure& ck, const Point& p, const Flat& u) {
    if (!gross_anisotropic(ck, u)) throw DomainError("pedal: isotropic plane");
    if (contains(u, p)) return p;
    Flat pol = polar(ck, u, 0);
    if (contains(pol, p)) throw DomainError("pedal: point lies in the polar of the plane");
    Flat x = meet(join(pol, p), u);
    return as_point(x);
}

inline Flat pedal(const CKStructure& ck, const Flat& a, const Flat& u) {
    std::vector<Vec> vs;
    for (const auto& b : basis(a)) vs.push_back(pedal(ck, Point(b), u).v());
    return span_of(vs, a.ambient());
}

inline Flat parallel(const CKStructure& ck, const Point& p, const Flat& u) {
    return join(meet(u, polar(ck, p, 0)), p);
}

// Same value from cosh^2 d(Q, H^A) for hyperplanes.
inline Rational line_plane_angle_polar(const CKStructure& ck, const Flat& l, const Flat& h, const Point& q) {
    Point P = as_point(meet(l, h));
    Point X = as_point(polar(ck, h, 0));
    Rational gqq = gram_level(ck, 0, q.v(), q.v()), gxx = gram_level(ck, 0, X.v(), X.v()),
             gqx = gram_level(ck, 0, q.v(), X.v());
    return -(gqx * gqx / (gqq * gxx)) / quadrance0(ck, q.v(), P.v());
}

// sinh^2 of the angle between a line and a plane, from a chosen point q on the line.
inline Rational line_plane_angle(const CKStructure& ck, const Flat& l, const Flat& h, const std::optional<Point>& q_in = {}) {
    if (l.grade() != 2) throw DomainError("line_plane_angle: not a line");
    Flat x = meet(l, h);
    if (x == l) return 0;
    if (x.grade() != 1) throw DomainError("line_plane_angle: line does not meet the plane in one point");
    Point P = as_point(x);
    Point Q = q_in ? *q_in : [&] {
        for (const auto& b : basis(l))
            if (Point(b) != P) return Point(b);
        throw DomainError("line_plane_angle: no second point");
    }();
    if (!contains(l, Q) || Q == P) throw DomainError("line_plane_angle: bad auxiliary point");
    Rational xqp = quadrance0(ck, Q.v(), P.v());
    if (xqp == 0) throw DomainError("line_plane_angle: degenerate auxiliary point");
    if (contains(polar(ck, h, 0), Q)) {
        if (h.grade() + 1 != h.ambient()) throw DomainError("line_plane_angle: auxiliary point in the polar");
        return line_plane_angle_polar(ck, l, h, Q);
    }
    Rational xqf = quadrance0(ck, Q.v(), pedal(ck, Q, h).v());
    return -xqf / xqp;
}

// ------------------------------------------------------- midpoints/bisectors

struct Midpoints {
    QuadVec plus, minus;  // P+Q (bisects [P,Q]+) and P-Q
};

inline std::optional<Midpoints> midpoints(const CKStructure& ck, const Point& P, const Point& Q) {
    Rational gpp = gram_level(ck, 0, P.v(), P.v()), gqq = gram_level(ck, 0, Q.v(), Q.v());
    if (gpp == 0 || gqq == 0) throw DomainError("midpoints: isotropic point");
    if (sgn(gpp) != sgn(gqq)) return std::nullopt;
    Rational k = abs(gpp * gqq);
    Rational ap = abs(gpp);
    Midpoints m;
    auto build = [&](int s) {
        QuadVec r;
        auto rs = rational_sqrt(k);
        for (size_t i = 0; i < P.size(); ++i) {
            if (rs)
                r.push_back({*rs * P[i] / ap + s * Q[i], 0, k});
            else
                r.push_back({s * Q[i], P[i] / ap, k});
        }
        return r;
    };
    m.plus = build(1);
    m.minus = build(-1);
    return m;
}

inline QuadScalar gram_quad(const CKStructure& ck, const QuadVec& a, const QuadVec& b) {
    QuadScalar s{0, 0, a.empty() ? Rational(0) : a[0].k};
    for (size_t i = 0; i < a.size(); ++i)
        if (ck[i].degree == 0 && ck[i].sign) s = s + QuadScalar{ck[i].sign, 0, s.k} * a[i] * b[i];
    return s;
}

// Hyperplane (M)^A as the coefficient row of x -> M[A]x; bisects [P,Q]_branch.
inline QuadVec perpendicular_bisector(const CKStructure& ck, const Point& p, const Point& q, bool plus) {
    auto m = midpoints(ck, p, q);
    if (!m) throw DomainError("perpendicular_bisector: points have opposite signs");
    const QuadVec& v = plus ? m->minus : m->plus;
    QuadVec row;
    for (size_t i = 0; i < v.size(); ++i) {
        int s = ck.level_sign(i, 0);
        row.push_back(v[i] * QuadScalar{s, 0, v[i].k});
    }
    return row;
}

struct AngleBisector {
    QuadVec midpoint;
    Flat vertex;
};

inline AngleBisector angle_bisector(const CKStructure& ck, const Flat& a1, const Flat& a2, bool plus) {
    Flat u = meet(a1, a2);
    if (!gross_anisotropic(ck, u)) throw DomainError("angle_bisector: isotropic vertex");
    auto [p1, p2] = dihedral_points(ck, a1, a2);
    auto m = midpoints(ck, p1, p2);
    if (!m) throw DomainError("angle_bisector: cross segment has no midpoint");
    return {plus ? m->plus : m->minus, u};
}

// ---------------------------------------------------------------- staudtian

inline EpsScalar abs_eps(const EpsScalar& x) { return x.lead_sign() < 0 ? -x : x; }

inline EpsScalar staudtian(const CKStructure& ck, const std::vector<Vec>& ps) {
    if (ps.empty()) return EpsScalar(1);
    auto g = gram_matrix(ck, ps, ps);
    EpsScalar den(1);
    for (size_t i = 0; i < ps.size(); ++i) {
        if (g[i][i].is_zero()) throw DomainError("staudtian: isotropic point");
        den *= abs_eps(g[i][i]);
    }
    return star_eps(det(g), den);
}

// Gross staudtian with the level-0 form.
inline Rational staudtian0(const CKStructure& ck, const std::vector<Vec>& ps) {
    if (ps.empty()) return 1;
    Mat g = gram_matrix_level(ck, 0, ps);
    Rational den = 1;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (g[i][i] == 0) throw DomainError("staudtian: isotropic point");
        den *= abs(g[i][i]);
    }
    return det(g) / den;
}

// ----------------------------------------------------- common perpendiculars

struct CommonPerpendiculars {
    std::vector<double> q1, r1, q2, r2;
    double cosh2_1 = 0, cosh2_2 = 0;
    Rational w;     // discriminant of the pedal-composition map
    Rational zeta;  // zeta_0 of the two lines
    bool product_ok = false;
};

inline CommonPerpendiculars common_perpendiculars(const CKStructure& ck, const Point& P1, const Point& P2,
                                                  const Point& P3, const Point& P4) {
    Vec p1 = P1.v(), p3 = P3.v();
    if (rank(Mat{p1, P2.v(), p3, P4.v()}) != 4) throw DomainError("common_perpendiculars: lines are not disjoint");
    auto g = [&](const Vec& a, const Vec& b) { return gram_level(ck, 0, a, b); };
    if (g(p1, p1) == 0 || g(p3, p3) == 0) throw DomainError("common_perpendiculars: isotropic vertex");
    Vec p2 = axpy(g(p1, p1), P2.v(), -g(p1, P2.v()), p1);
    Vec p4 = axpy(g(p3, p3), P4.v(), -g(p3, P4.v()), p3);
    if (g(p2, p2) == 0 || g(p4, p4) == 0) throw DomainError("common_perpendiculars: isotropic line");
    Mat G1{{g(p1, p1), 0}, {0, g(p2, p2)}}, G2{{g(p3, p3), 0}, {0, g(p4, p4)}};
    Mat C{{g(p1, p3), g(p1, p4)}, {g(p2, p3), g(p2, p4)}};
    Mat G1i = *inverse(G1), G2i = *inverse(G2);
    Mat N = matmul(G2i, transpose(C));
    Mat M = matmul(matmul(G1i, C), N);
    Rational tr = M[0][0] + M[1][1], dt = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    CommonPerpendiculars out;
    out.w = tr * tr - 4 * dt;
    out.zeta = zeta0(ck, {p1, p2}, {p3, p4});
    if (out.w < 0) throw DomainError("common_perpendiculars: no real transversals");
    double sw = std::sqrt(to_double(out.w));
    double lam[2] = {(to_double(tr) + sw) / 2, (to_double(tr) - sw) / 2};
    auto md = [](const Rational& x) { return to_double(x); };
    std::array<std::array<double, 2>, 2> xs;
    bool scalar = M[0][1] == 0 && M[1][0] == 0 && M[0][0] == M[1][1];
    for (int i = 0; i < 2; ++i) {
        if (scalar) {
            xs[i] = {i == 0 ? 1.0 : 0.0, i == 0 ? 0.0 : 1.0};
            continue;
        }
        std::array<double, 2> a{md(M[0][1]), lam[i] - md(M[0][0])};
        std::array<double, 2> b{lam[i] - md(M[1][1]), md(M[1][0])};
        xs[i] = std::hypot(a[0], a[1]) >= std::hypot(b[0], b[1]) ? a : b;
    }
    auto comb = [&](const std::array<double, 2>& x, const Vec& u, const Vec& v) {
        std::vector<double> r(u.size());
        for (size_t k = 0; k < u.size(); ++k) r[k] = x[0] * md(u[k]) + x[1] * md(v[k]);
        return r;
    };
    std::array<std::vector<double>, 2> qs, rs;
    for (int i = 0; i < 2; ++i) {
        std::array<double, 2> y{md(N[0][0]) * xs[i][0] + md(N[0][1]) * xs[i][1],
                                md(N[1][0]) * xs[i][0] + md(N[1][1]) * xs[i][1]};
        qs[i] = comb(xs[i], p1, p2);
        rs[i] = comb(y, p3, p4);
    }
    out.q1 = qs[0];
    out.r1 = rs[0];
    out.q2 = qs[1];
    out.r2 = rs[1];
    out.cosh2_1 = lam[0];
    out.cosh2_2 = lam[1];
    double z = md(out.zeta);
    out.product_ok = std::abs(lam[0] * lam[1] - z) <= 1e-9 * std::max(1.0, std::abs(z));
    return out;
}

}  // namespace ckgeom
