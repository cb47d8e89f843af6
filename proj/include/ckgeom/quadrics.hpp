#pragma once

#include "transforms.hpp"

namespace ckgeom {

// Quadric { sum r_i P_i : r^T N r = 0 } inside the span of a point frame.
struct QuadricForm {
    std::vector<Point> frame;
    Mat n;

    Rational value(const Vec& r) const { return dot(r, n * r); }
    bool contains(const Vec& r) const { return value(r) == 0; }
    Vec polar_row(const Vec& r) const { return n * r; }
    Vec to_vector(const Vec& r) const {
        Vec v(frame.at(0).size(), Rational(0));
        for (size_t i = 0; i < frame.size(); ++i) v = axpy(1, v, r[i], frame[i].v());
        return v;
    }
};

inline void check_form(const QuadricForm& q) {
    const size_t s1 = q.frame.size();
    if (q.n.size() != s1) throw DomainError("quadric: matrix size does not match the frame");
    for (size_t i = 0; i < s1; ++i) {
        if (q.n[i].size() != s1) throw DomainError("quadric: matrix is not square");
        for (size_t j = 0; j < i; ++j)
            if (q.n[i][j] != q.n[j][i]) throw DomainError("quadric: matrix is not symmetric");
    }
}

inline bool quadric_contains(const QuadricForm& q, const Vec& r) {
    if (is_zero(r)) throw DomainError("quadric_contains: zero coordinates");
    return q.contains(r);
}

inline Vec polar_wrt_quadric(const QuadricForm& q, const Vec& r) {
    if (is_zero(r)) throw DomainError("polar_wrt_quadric: zero coordinates");
    return q.polar_row(r);
}

// Level-0 Gram matrix of the frame.
inline Mat frame_gram(const CKStructure& ck, const std::vector<Point>& frame) {
    Mat g = gram_matrix_level(ck, 0, vecs(frame));
    if (det(g) == 0) throw DomainError("frame does not span an anisotropic plane");
    for (const auto& p : frame) require_gross_anisotropic(ck, p.v(), "frame");
    return g;
}

// R^A meet A in frame coordinates is the row G r.
inline bool is_symmetry_point(const CKStructure& ck, const QuadricForm& q, const Vec& r) {
    Mat g = frame_gram(ck, q.frame);
    if (dot(r, g * r) == 0) return false;
    Vec a = q.polar_row(r), b = g * r;
    if (is_zero(a)) return false;
    return rank(Mat{a, b}) == 1;
}

namespace detail {

inline Mat outer(const Vec& a, const Vec& b) {
    Mat m(a.size(), Vec(b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) m[i][j] = a[i] * b[j];
    return m;
}

inline Mat lincomb(const Rational& a, const Mat& x, const Rational& b, const Mat& y) {
    Mat r = x;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = a * x[i][j] + b * y[i][j];
    return r;
}

}  // namespace detail

// (r^T G m)^2 = cosh^2(rad) (m^T G m)(r^T G r)
inline QuadricForm sphere_with_center_radius(const CKStructure& ck, const std::vector<Point>& frame, const Vec& m,
                                             const Rational& coshsq) {
    Mat g = frame_gram(ck, frame);
    Vec gm = g * m;
    Rational mm = dot(m, gm);
    if (mm == 0) throw DomainError("sphere: isotropic center");
    return {frame, detail::lincomb(1, detail::outer(gm, gm), -coshsq * mm, g)};
}

// (r^T G m)^2 (t^T G t) = (t^T G m)^2 (r^T G r)
inline QuadricForm sphere_through_point(const CKStructure& ck, const std::vector<Point>& frame, const Vec& m,
                                        const Vec& t) {
    Mat g = frame_gram(ck, frame);
    Vec gm = g * m;
    if (dot(m, gm) == 0) throw DomainError("sphere: isotropic center");
    Rational tt = dot(t, g * t), tm = dot(t, gm);
    if (tt == 0 && tm == 0) throw DomainError("sphere: degenerate through-point");
    return {frame, detail::lincomb(tt, detail::outer(gm, gm), -tm * tm, g)};
}

// Squared power cosh^2 d(Q,P) / cosh^2(rho).
inline Rational power(const CKStructure& ck, const Point& q, const Point& center, const Rational& coshsq_radius) {
    if (coshsq_radius == 0) throw DomainError("power: radius is 1/2 pi i");
    return cosh2(ck, q.v(), center.v()) / coshsq_radius;
}

struct RadicalCenters {
    std::vector<std::vector<double>> points;  // Z_0, Z_1, ..., Z_{s+1}
    std::optional<std::vector<Vec>> exact;    // when every |P_i[A]P_i| is a square
};

// cosh(rho_i) given as cosh^2 >= 0; Z_k uses the sign-flipped vertex P_k.
inline RadicalCenters radical_centers(const CKStructure& ck, const std::vector<Point>& frame,
                                      const std::vector<Rational>& coshsq) {
    Mat g = frame_gram(ck, frame);
    const size_t s1 = frame.size();
    if (coshsq.size() != s1) throw DomainError("radical_centers: one radius per vertex");
    int sg = sgn(g[0][0]);
    for (size_t i = 0; i < s1; ++i) {
        if (sgn(g[i][i]) != sg) throw DomainError("radical_centers: vertices of different sign");
        if (coshsq[i] <= 0) throw DomainError("radical_centers: radius must have positive cosh^2");
    }
    // b_i = sqrt|g_ii| r_i so that z solves G z = b (up to sign)
    std::vector<std::optional<Rational>> rt(s1);
    bool exact = true;
    for (size_t i = 0; i < s1; ++i) {
        rt[i] = rational_sqrt(abs(g[i][i]) * coshsq[i]);
        exact = exact && rt[i].has_value();
    }
    RadicalCenters out;
    std::vector<double> bd(s1);
    for (size_t i = 0; i < s1; ++i) bd[i] = std::sqrt(to_double(abs(g[i][i]) * coshsq[i]));
    // solve in doubles via the exact inverse
    Mat gi = *inverse(g);
    std::vector<Vec> ex;
    for (size_t k = 0; k <= s1; ++k) {
        std::vector<double> z(s1, 0.0), v(frame[0].size(), 0.0);
        Vec zb(s1, Rational(0));
        for (size_t i = 0; i < s1; ++i)
            for (size_t j = 0; j < s1; ++j) {
                double bj = (k == j + 1 ? -1.0 : 1.0) * bd[j];
                z[i] += to_double(gi[i][j]) * bj;
                if (exact) zb[i] += gi[i][j] * (k == j + 1 ? -*rt[j] : *rt[j]);
            }
        for (size_t i = 0; i < s1; ++i)
            for (size_t c = 0; c < v.size(); ++c) v[c] += z[i] * to_double(frame[i][c]);
        out.points.push_back(v);
        if (exact) {
            Vec vv(frame[0].size(), Rational(0));
            for (size_t i = 0; i < s1; ++i) vv = axpy(1, vv, zb[i], frame[i].v());
            ex.push_back(vv);
        }
    }
    if (exact) out.exact = ex;
    return out;
}

// Points on P1+P2 with equal power with respect to both spheres (c12 from normalized vertices).
inline std::pair<std::vector<double>, std::vector<double>> equal_power_points(const CKStructure& ck, const Point& p1,
                                                                              const Point& p2, double r1, double r2) {
    auto n1 = normalize(ck, p1), n2 = normalize(ck, p2);
    double c = 0;
    for (size_t i = 0; i < ck.size(); ++i) {
        int s = ck.level_sign(i, 0);
        c += s * n1.pcirc[i] * n2.pcirc[i];
    }
    std::vector<double> m1(ck.size()), m2(ck.size());
    for (size_t i = 0; i < ck.size(); ++i) {
        m1[i] = (c * r2 - n2.sign * r1) * n1.pcirc[i] + (c * r1 - n1.sign * r2) * n2.pcirc[i];
        m2[i] = (c * r2 + n2.sign * r1) * n1.pcirc[i] - (c * r1 + n1.sign * r2) * n2.pcirc[i];
    }
    return {m1, m2};
}

// R+- = sinh(rho2) P1 +- sinh(rho1) P2 over normalized vertices; sinh taken positive.
inline std::pair<std::vector<double>, std::vector<double>> centers_of_similitude(const CKStructure& ck, const Point& p1,
                                                                                 const Point& p2,
                                                                                 const Rational& sinhsq1,
                                                                                 const Rational& sinhsq2) {
    if (sinhsq1 <= 0 || sinhsq2 <= 0) throw DomainError("centers_of_similitude: sinh^2 must be positive");
    auto n1 = normalize(ck, p1), n2 = normalize(ck, p2);
    double s1 = std::sqrt(to_double(sinhsq1)), s2 = std::sqrt(to_double(sinhsq2));
    std::vector<double> rp(ck.size()), rm(ck.size());
    for (size_t i = 0; i < ck.size(); ++i) {
        rp[i] = s2 * n1.pcirc[i] + s1 * n2.pcirc[i];
        rm[i] = s2 * n1.pcirc[i] - s1 * n2.pcirc[i];
    }
    return {rp, rm};
}

// Exact R+, R- when |P_i[A]P_i| and both sinh^2 are rational squares.
inline std::optional<std::pair<Vec, Vec>> centers_of_similitude_exact(const CKStructure& ck, const Point& p1,
                                                                      const Point& p2, const Rational& sinhsq1,
                                                                      const Rational& sinhsq2) {
    if (sinhsq1 <= 0 || sinhsq2 <= 0) throw DomainError("centers_of_similitude: sinh^2 must be positive");
    auto unit = [&](const Point& p) -> std::optional<Vec> {
        PointClass c = classify_point(ck, p);
        if (!c.anisotropic) throw DomainError("centers_of_similitude: isotropic point " + p.str());
        auto s = rational_sqrt(abs(gram_level(ck, c.degree, p.v(), p.v())));
        if (!s) return std::nullopt;
        Vec v;
        for (const auto& x : p.v()) v.push_back(make_rational(p.chi()) * x / *s);
        return v;
    };
    auto u1 = unit(p1), u2 = unit(p2);
    auto s1 = rational_sqrt(sinhsq1), s2 = rational_sqrt(sinhsq2);
    if (!u1 || !u2 || !s1 || !s2) return std::nullopt;
    return std::pair<Vec, Vec>{axpy(*s2, *u1, *s1, *u2), axpy(*s2, *u1, -*s1, *u2)};
}

// Barycentric [1/sinh rho_1 : ... ] over the normalized frame, as a vector.
inline std::vector<double> inner_center_of_similitude(const CKStructure& ck, const std::vector<Point>& frame,
                                                      const std::vector<Rational>& sinhsq) {
    if (sinhsq.size() != frame.size()) throw DomainError("inner_center_of_similitude: one radius per vertex");
    std::vector<double> v(ck.size(), 0.0);
    for (size_t i = 0; i < frame.size(); ++i) {
        if (sinhsq[i] <= 0) throw DomainError("inner_center_of_similitude: sinh^2 must be positive");
        auto n = normalize(ck, frame[i]);
        double w = 1.0 / std::sqrt(to_double(sinhsq[i]));
        for (size_t c = 0; c < v.size(); ++c) v[c] += w * n.pcirc[c];
    }
    return v;
}

// ------------------------------------------------------- metric affine spheres

inline void require_metric_affine(const CKStructure& ck) {
    if (ck.rho() == 0 || ck[0].sign != 1 || ck[0].degree != 0)
        throw DomainError("structure is not metric affine");
    for (size_t i = 1; i < ck.size(); ++i)
        if (ck[i].degree == 0) throw DomainError("structure is not metric affine");
}

struct AffineSphere {
    CKStructure ck;
    Point center;
    EpsScalar r;  // squared radius

    bool contains(const Point& q) const {
        if (q[0] == 0) {
            Rational v = gram_level(ck, 1, q.v(), q.v());
            return v == 0;
        }
        Vec d(q.size());
        for (size_t i = 0; i < q.size(); ++i) d[i] = q[i] / q[0] - center[i] / center[0];
        EpsScalar x = gram(ck, d, d);
        EpsScalar lead = x.is_zero() ? x : x.leading_term();
        return lead == r;
    }
};

inline AffineSphere affine_sphere(const CKStructure& ck, const Point& m, const EpsScalar& r) {
    require_metric_affine(ck);
    if (m[0] == 0) throw DomainError("affine_sphere: center is not regular");
    if (!r.is_zero() && !r.is_monomial()) throw DomainError("affine_sphere: radius must be a monomial");
    if (!r.is_zero() && r.min_degree() < 1) throw DomainError("affine_sphere: radius must be infinitesimal");
    return {ck, m, r};
}

struct SymmetrySet {
    Flat through_center;  // M joined with the points of degree >= 2
    Flat at_infinity;     // A_1
    bool contains(const Point& z) const {
        return ckgeom::contains(through_center, z) || ckgeom::contains(at_infinity, z);
    }
    std::string str() const { return through_center.str() + " u " + at_infinity.str(); }
};

inline SymmetrySet symmetry_points(const AffineSphere& s) {
    const int n1 = int(s.ck.size());
    std::vector<Vec> tc{s.center.v()}, inf;
    for (size_t i = 1; i < s.ck.size(); ++i) {
        inf.push_back(unit_point(s.ck.size(), i).v());
        if (s.ck[i].degree >= 2) tc.push_back(unit_point(s.ck.size(), i).v());
    }
    return {span_of(tc, n1), span_of(inf, n1)};
}

struct Horosphere {
    bool is = false;
    Flat center;  // tangency set K meet A_1
    Flat axis;    // K
};

// Quadric x^T N x = 0 on the whole space of a metric affine structure.
inline Horosphere is_horosphere(const CKStructure& ck, const Mat& n) {
    require_metric_affine(ck);
    const size_t n1 = ck.size();
    if (n.size() != n1) throw DomainError("is_horosphere: matrix size mismatch");
    if (std::all_of(n.begin(), n.end(), [](const Vec& r) { return is_zero(r); })) return {};
    // tangency points: t in A_1 whose tangent hyperplane is A_1
    Mat rows;
    Vec e0(n1, Rational(0));
    e0[0] = 1;
    rows.push_back(e0);
    for (size_t i = 1; i < n1; ++i) rows.push_back(n[i]);
    auto tb = nullspace(rows, n1);
    if (tb.empty()) return {};
    Flat t = span_of(tb, int(n1));
    std::vector<Vec> kb = tb;
    kb.push_back(e0);
    Flat w = total_polar(ck, span_of(kb, int(n1))).representative;
    auto wb = w.is_empty() ? std::vector<Vec>{} : basis(w);
    // regular axis point conjugate to W with respect to N
    Mat cond;
    for (const auto& x : wb) cond.push_back(n * x);
    std::optional<Vec> xr;
    for (const auto& c : nullspace(cond, n1))
        if (c[0] != 0) xr = c;
    if (!xr) return {};
    for (const auto& x : tb)
        for (const auto& y : wb)
            if (dot(x, n * y) != 0) return {};
    std::vector<Vec> axis = tb;
    axis.push_back(*xr);
    return {true, t, span_of(axis, int(n1))};
}

}  // namespace ckgeom
