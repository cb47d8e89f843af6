#pragma once

#include "metric.hpp"

namespace ckgeom {

using EpsVec = std::vector<EpsScalar>;

inline EpsVec lift_eps(const Vec& v) {
    EpsVec r;
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

// Coefficient vector at the lowest degree present.
inline Point project_lowest(const EpsVec& v) {
    int d = std::numeric_limits<int>::max();
    for (const auto& x : v)
        if (!x.is_zero()) d = std::min(d, x.min_degree());
    if (d == std::numeric_limits<int>::max()) throw DomainError("reflection: image vanishes");
    Vec r;
    for (const auto& x : v) r.push_back(x.coeff(d));
    return Point(r);
}

// p -> gram(z,z) p - 2 gram(z,p) z over eps-polynomial coordinates.
inline Point reflect_eps(const CKStructure& ck, const EpsVec& z, const EpsVec& p) {
    EpsScalar gzz = gram(ck, z, z), gzp = gram(ck, z, p);
    if (gzz.is_zero()) throw DomainError("reflect: isotropic mirror");
    EpsVec v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = gzz * p[i] - EpsScalar(2) * gzp * z[i];
    return project_lowest(v);
}

inline Point reflect_point(const CKStructure& ck, const Point& z, const Point& p) {
    require_anisotropic(ck, z, "reflect_point");
    return reflect_eps(ck, lift_eps(z.v()), lift_eps(p.v()));
}

// Linear form of the reflection in a mirror that is anisotropic at level 0.
inline Mat reflection_matrix(const CKStructure& ck, const Point& z) {
    Vec zv = z.v();
    Rational gzz = gram_level(ck, 0, zv, zv);
    if (gzz == 0) throw DomainError("reflection_matrix: mirror is not anisotropic at level 0");
    Vec f = level_functional(ck, 0, zv);
    const size_t n1 = zv.size();
    Mat m(n1, Vec(n1, Rational(0)));
    for (size_t i = 0; i < n1; ++i) {
        for (size_t j = 0; j < n1; ++j) m[i][j] = -2 * zv[i] * f[j];
        m[i][i] += gzz;
    }
    return m;
}

inline Flat apply(const Mat& m, const Flat& f) {
    std::vector<Vec> b;
    for (const auto& v : basis(f)) b.push_back(m * v);
    return flat_of(b, f.ambient());
}

namespace detail {

// p = a + b with a in u and b in w; returns a - b when u + w is the whole space.
inline std::optional<Point> flip_components(const std::vector<Vec>& ub, const std::vector<Vec>& wb, const Point& p) {
    Mat gens = ub;
    gens.insert(gens.end(), wb.begin(), wb.end());
    const size_t n1 = p.size();
    if (gens.size() != n1 || rank(gens) != n1) return std::nullopt;
    Vec c = *solve(transpose(gens), p.v());
    Vec r(n1, Rational(0));
    for (size_t i = 0; i < n1; ++i) r = axpy(1, r, i < ub.size() ? c[i] : -c[i], gens[i]);
    return Point(r);
}

}  // namespace detail

inline Point reflect_in_flat(const CKStructure& ck, const Flat& u, const Point& p) {
    const int n1 = int(ck.size());
    if (u.is_empty() || u.grade() == n1) return p;
    auto ub = basis(u);
    if (auto r = detail::flip_components(ub, basis(polar(ck, u, 0)), p)) return *r;
    Flat w = total_polar(ck, u).representative;
    if (auto r = detail::flip_components(ub, w.is_empty() ? std::vector<Vec>{} : basis(w), p)) return *r;
    throw DomainError("reflect_in_flat: flat is not anisotropic");
}

struct DoubleReflection {
    Point image;          // Q''
    bool planar = false;  // Q off the line R+S
    bool tau2_zero = false;
    EpsScalar lhs, rhs;   // measured quadrance and the doubling prediction
    bool holds = true;
};

inline DoubleReflection double_reflection(const CKStructure& ck, const Point& r, const Point& s, const Point& q) {
    for (const Point* x : {&r, &s, &q}) require_gross_anisotropic(ck, x->v(), "double_reflection");
    DoubleReflection out;
    out.image = reflect_point(ck, s, reflect_point(ck, r, q));
    if (r == s) return out;
    Vec rv = r.v();
    Vec p2 = axpy(gram_level(ck, 0, rv, rv), s.v(), -gram_level(ck, 0, rv, s.v()), rv);
    out.tau2_zero = gram_level(ck, 0, p2, p2) == 0;
    const int n1 = int(ck.size());
    Flat line = join(Flat::from_point(r), s);
    auto predict = [&](const EpsScalar& xi) {
        return out.tau2_zero ? EpsScalar(4) * xi : star_eps(EpsScalar(4) * xi * (EpsScalar(1) - xi), EpsScalar(1));
    };
    if (contains(line, q)) {
        out.lhs = quadrance_points(ck, q, out.image);
        out.rhs = predict(quadrance_points(ck, r, s));
    } else {
        out.planar = true;
        Flat e = join(line, q);
        Flat conj = meet(span_of(nullspace(Mat{level_functional(ck, 0, rv), level_functional(ck, 0, p2)}, size_t(n1)), n1), e);
        std::optional<Point> pole;
        for (const auto& b : basis(conj))
            if (!contains(line, Point(b))) pole = Point(b);
        if (!pole) throw DomainError("double_reflection: no pole in the plane");
        auto lj = [&](const Point& x) { return std::vector<Vec>{pole->v(), x.v()}; };
        out.lhs = quadrance_flats(ck, lj(q), lj(out.image)).xi;
        out.rhs = predict(quadrance_flats(ck, lj(r), lj(s)).xi);
    }
    out.holds = out.lhs == out.rhs;
    return out;
}

}  // namespace ckgeom
