#pragma once

#include "quadrics.hpp"

namespace ckgeom {

// ------------------------------------------------------------ sign labels

// Sign vector of G_k: r_1 = 1 and r_{s+1-j} = -1 iff bit j of k is set.
inline std::vector<int> label_signs(size_t s1, unsigned k) {
    if (s1 == 0 || k >= (1u << (s1 - 1))) throw DomainError("label out of range");
    std::vector<int> r(s1, 1);
    for (size_t j = 0; j + 1 < s1; ++j)
        if (k & (1u << j)) r[s1 - 1 - j] = -1;
    return r;
}

inline unsigned label_of(const std::vector<int>& r) {
    if (r.empty()) throw DomainError("label_of: empty sign vector");
    unsigned k = 0;
    const size_t s1 = r.size();
    for (size_t j = 0; j + 1 < s1; ++j)
        if (r[s1 - 1 - j] * r[0] < 0) k |= 1u << j;
    return k;
}

// ------------------------------------------------------- semi CK simplices

// Representative with |p[A]p| = 1, when that is rational.
inline std::optional<Vec> exact_normalized(const CKStructure& ck, const Point& p) {
    Rational g = gram_level(ck, 0, p.v(), p.v());
    auto r = rational_sqrt(abs(g));
    if (!r || *r == 0) return std::nullopt;
    Vec v = p.v();
    for (auto& x : v) x = p.chi() * x / *r;
    return v;
}

struct Simplex {
    CKStructure ck;
    std::vector<Point> vertices;
    std::vector<Vec> unit;  // normalized vertices P_i°
    int sign = 0;

    size_t size() const { return vertices.size(); }
    Vec point(const Vec& bary) const {
        Vec v(ck.size(), Rational(0));
        for (size_t i = 0; i < unit.size(); ++i) v = axpy(1, v, bary[i], unit[i]);
        return v;
    }
    Mat cmatrix() const { return gram_matrix_level(ck, 0, unit); }
};

// Vertices must have square norms so that all barycentric work stays rational.
inline Simplex make_simplex(const CKStructure& ck, const std::vector<Point>& vs) {
    if (vs.size() < 2) throw DomainError("simplex: need at least two vertices");
    if (rank(vecs(vs)) != vs.size()) throw DomainError("simplex: dependent vertices");
    Simplex sx{ck, vs, {}, 0};
    for (const auto& p : vs) {
        Rational g = gram_level(ck, 0, p.v(), p.v());
        if (g == 0) throw DomainError("simplex: isotropic vertex " + p.str());
        if (sx.sign == 0) sx.sign = sgn(g);
        if (sgn(g) != sx.sign) throw DomainError("simplex: vertices of mixed sign");
        auto u = exact_normalized(ck, p);
        if (!u) throw DomainError("simplex: |P[A]P| is not a rational square for " + p.str());
        sx.unit.push_back(*u);
    }
    if (det(sx.cmatrix()) == 0) throw DomainError("simplex: span is isotropic");
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (det(gram_matrix_level(ck, 0, {sx.unit[i], sx.unit[j]})) == 0)
                throw DomainError("simplex: isotropic sideline");
    return sx;
}

inline Vec to_vec(const std::vector<int>& r) {
    Vec v;
    for (int x : r) v.emplace_back(x);
    return v;
}

inline Vec centroid(const Simplex& sx, unsigned k = 0) { return to_vec(label_signs(sx.size(), k)); }

inline std::vector<Vec> labeled_centroids(const Simplex& sx) {
    std::vector<Vec> out;
    for (unsigned k = 0; k < (1u << (sx.size() - 1)); ++k) out.push_back(centroid(sx, k));
    return out;
}

inline Vec face_centroid(size_t s1, const std::vector<size_t>& face) {
    Vec v(s1, Rational(0));
    for (size_t i : face) v.at(i) = 1;
    return v;
}

// O_k solves o C = g_k.
inline Vec circumcenter(const Simplex& sx, unsigned k = 0) {
    auto c = sx.cmatrix();
    auto o = solve(c, centroid(sx, k));
    if (!o) throw DomainError("circumcenter: singular C");
    return *o;
}

inline std::vector<Vec> circumcenters(const Simplex& sx) {
    std::vector<Vec> out;
    for (unsigned k = 0; k < (1u << (sx.size() - 1)); ++k) out.push_back(circumcenter(sx, k));
    return out;
}

// tanh^2 of the circumradius: 1 - sgn (g_k C^-1 g_k).
inline Rational circumradius_tanh2(const Simplex& sx, unsigned k = 0) {
    Vec g = centroid(sx, k);
    return 1 - sx.sign * dot(g, circumcenter(sx, k));
}

// Proper circumsphere of Sigma_k: x C x = sgn (g_k . x)^2, frame = normalized vertices.
inline QuadricForm circumsphere(const Simplex& sx, unsigned k = 0) {
    Mat c = sx.cmatrix();
    Vec g = centroid(sx, k);
    QuadricForm q{{}, c};
    for (const auto& u : sx.unit) q.frame.emplace_back(u);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) q.n[i][j] = c[i][j] - sx.sign * g[i] * g[j];
    return q;
}

// Vertices Q_k = H_k^A meet A in barycentric form (rows of C^-1).
inline std::vector<Vec> dual_vertices(const Simplex& sx) {
    auto ci = inverse(sx.cmatrix());
    if (!ci) throw DomainError("dual: singular C");
    return *ci;
}

inline Simplex dual_simplex(const Simplex& sx) {
    std::vector<Point> qs;
    for (const auto& b : dual_vertices(sx)) qs.emplace_back(sx.point(b));
    return make_simplex(sx.ck, qs);
}

inline std::vector<Vec> without(const std::vector<Vec>& vs, std::initializer_list<size_t> drop) {
    std::vector<Vec> r;
    for (size_t i = 0; i < vs.size(); ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) r.push_back(vs[i]);
    return r;
}

struct Incenter {
    std::vector<Rational> squared_weights;  // |psi(S_i)|
    std::vector<int> signs;                 // sign pattern of G_k
    std::vector<double> bary;
    std::optional<Vec> exact;
};

inline Incenter make_incenter(std::vector<Rational> w2, const std::vector<int>& signs) {
    Incenter in{std::move(w2), signs, {}, Vec{}};
    for (size_t i = 0; i < in.squared_weights.size(); ++i) {
        in.bary.push_back(signs[i] * std::sqrt(to_double(in.squared_weights[i])));
        auto r = rational_sqrt(in.squared_weights[i]);
        if (r && in.exact)
            in.exact->push_back(signs[i] * *r);
        else
            in.exact.reset();
    }
    return in;
}

// I_k = [s_1 : ... : s_{s+1}] times the signs of G_k; needs same-sign dual vertices.
inline Incenter incenter(const Simplex& sx, unsigned k = 0) {
    const size_t s1 = sx.size();
    int ds = 0;
    for (const auto& q : dual_vertices(sx)) {
        int g = sgn(dot(q, sx.cmatrix() * q));
        if (g == 0 || (ds && g != ds)) throw DomainError("incenter: dual vertices of mixed sign");
        ds = g;
    }
    std::vector<Rational> w2;
    for (size_t i = 0; i < s1; ++i) {
        Rational p = staudtian0(sx.ck, without(sx.unit, {i}));
        w2.push_back(abs(p));
    }
    return make_incenter(w2, label_signs(s1, k));
}

struct Orthocenter {
    std::vector<std::optional<Point>> pedals;  // empty when P_i lies in H_i^A
    Perspective perspective;
    bool undetermined = false;
};

inline Orthocenter orthocenter(const Simplex& sx) {
    const int n1 = int(sx.ck.size());
    Orthocenter out;
    std::vector<Point> rs;
    for (size_t i = 0; i < sx.size(); ++i) {
        Flat h = span_of(without(vecs(sx.vertices), {i}), n1);
        if (contains(polar(sx.ck, h, 0), sx.vertices[i])) {
            out.pedals.push_back(std::nullopt);
            out.undetermined = true;
            continue;
        }
        out.pedals.push_back(pedal(sx.ck, sx.vertices[i], h));
        rs.push_back(*out.pedals.back());
    }
    if (!out.undetermined) out.perspective = perspective(sx.vertices, rs);
    return out;
}

// ------------------------------------------------ metric affine simplices

inline Vec affine_unit(const Point& p) {
    if (p[0] == 0) throw DomainError("point is not regular: " + p.str());
    Vec v = p.v();
    Rational a = v[0];
    for (auto& x : v) x /= a;
    return v;
}

// Squared distance of regular points: leading term of (Q°-R°)[A](Q°-R°).
inline EpsScalar affine_quadrance(const CKStructure& ck, const Point& q, const Point& r) {
    Vec d = axpy(1, affine_unit(q), -1, affine_unit(r));
    EpsScalar x = gram(ck, d, d);
    return x.is_zero() ? x : x.leading_term();
}

struct AffineSimplex {
    CKStructure ck;
    std::vector<Point> vertices;
    std::vector<Vec> unit;

    size_t size() const { return vertices.size(); }
    int n() const { return int(vertices.size()) - 1; }
    // Q° = sum q_i P_i° / sum q_i for regular Q, else the raw combination
    Vec point(const Vec& bary) const {
        Vec v(ck.size(), Rational(0));
        for (size_t i = 0; i < unit.size(); ++i) v = axpy(1, v, bary[i], unit[i]);
        return v;
    }
    EpsScalar d(size_t i, size_t j) const { return i == j ? EpsScalar() : affine_quadrance(ck, vertices[i], vertices[j]); }
    MatT<EpsScalar> dmatrix() const {
        MatT<EpsScalar> m(size(), std::vector<EpsScalar>(size()));
        for (size_t i = 0; i < size(); ++i)
            for (size_t j = 0; j < size(); ++j) m[i][j] = d(i, j);
        return m;
    }
};

inline AffineSimplex make_affine_simplex(const CKStructure& ck, const std::vector<Point>& vs) {
    require_metric_affine(ck);
    if (vs.size() != ck.size()) throw DomainError("affine simplex: need n+1 vertices");
    if (rank(vecs(vs)) != vs.size()) throw DomainError("affine simplex: dependent vertices");
    AffineSimplex sx{ck, vs, {}};
    for (const auto& p : vs) sx.unit.push_back(affine_unit(p));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            EpsScalar d = sx.d(i, j);
            if (d.is_zero() || d.min_degree() >= 2) throw DomainError("affine simplex: light-line edge");
        }
    return sx;
}

// Simplex from squared edge lengths d_ij (eps coefficients) realized in euclidean n-space.
inline MatT<EpsScalar> eps_distances(const Mat& d) {
    MatT<EpsScalar> m(d.size(), std::vector<EpsScalar>(d.size()));
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j) m[i][j] = EpsScalar::monomial(d[i][j], 1);
    return m;
}

namespace detail {

inline Vec lowest_coefficients(const std::vector<EpsScalar>& v) {
    int deg = std::numeric_limits<int>::max();
    for (const auto& x : v)
        if (!x.is_zero()) deg = std::min(deg, x.min_degree());
    if (deg == std::numeric_limits<int>::max()) throw DomainError("degenerate system");
    Vec r;
    for (const auto& x : v) r.push_back(x.coeff(deg));
    return r;
}

}  // namespace detail

// O = [det D~^[1] : ...] with D~ = 1 - d/2, replacing row i by ones.
inline Vec affine_circumcenter(const MatT<EpsScalar>& d) {
    const size_t s1 = d.size();
    MatT<EpsScalar> dt(s1, std::vector<EpsScalar>(s1));
    for (size_t i = 0; i < s1; ++i)
        for (size_t j = 0; j < s1; ++j) dt[i][j] = EpsScalar(1) - EpsScalar(Rational(1, 2)) * d[i][j];
    std::vector<EpsScalar> o;
    for (size_t i = 0; i < s1; ++i) {
        auto m = dt;
        for (auto& x : m[i]) x = EpsScalar(1);
        o.push_back(det(m));
    }
    return detail::lowest_coefficients(o);
}
inline Vec affine_circumcenter(const AffineSimplex& sx) { return affine_circumcenter(sx.dmatrix()); }

// sum_{i<j} d_ij x_i x_j = 0
struct AffineCircumsphere {
    MatT<EpsScalar> d;
    EpsScalar value(const Vec& x) const {
        EpsScalar s;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) s += d[i][j] * EpsScalar(x[i] * x[j]);
        return s;
    }
    bool contains(const Vec& x) const { return value(x).is_zero(); }
};

inline AffineCircumsphere affine_circumsphere(const AffineSimplex& sx) { return {sx.dmatrix()}; }

inline MatT<EpsScalar> bordered(const MatT<EpsScalar>& d) {
    const size_t s1 = d.size();
    MatT<EpsScalar> b(s1 + 1, std::vector<EpsScalar>(s1 + 1, EpsScalar(1)));
    b[0][0] = EpsScalar();
    for (size_t i = 0; i < s1; ++i)
        for (size_t j = 0; j < s1; ++j) b[i + 1][j + 1] = d[i][j];
    return b;
}

// r = -det(d) / (2 det(bordered d))
inline EpsScalar affine_circumradius(const MatT<EpsScalar>& d) {
    EpsScalar b = det(bordered(d));
    if (b.is_zero()) throw DomainError("circumradius: singular bordered matrix");
    return star_eps(-det(d), EpsScalar(2) * b);
}
inline EpsScalar affine_circumradius(const AffineSimplex& sx) { return affine_circumradius(sx.dmatrix()); }

inline EpsScalar psi(const AffineSimplex& sx, const std::vector<size_t>& idx) {
    std::vector<Vec> vs;
    for (size_t i : idx) vs.push_back(sx.unit[i]);
    return staudtian(sx.ck, vs);
}

inline std::vector<size_t> all_but(size_t s1, std::initializer_list<size_t> drop) {
    std::vector<size_t> r;
    for (size_t i = 0; i < s1; ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) r.push_back(i);
    return r;
}

// psi(S) = star(det(1 - d/2)) for rho = 1
inline EpsScalar psi_from_distances(const MatT<EpsScalar>& d) {
    const size_t s1 = d.size();
    MatT<EpsScalar> m(s1, std::vector<EpsScalar>(s1));
    for (size_t i = 0; i < s1; ++i)
        for (size_t j = 0; j < s1; ++j) m[i][j] = EpsScalar(1) - EpsScalar(Rational(1, 2)) * d[i][j];
    return star_eps(det(m), EpsScalar(1));
}

// (-1)^(n+1) 2^-n det(bordered d)
inline EpsScalar cayley_menger(const MatT<EpsScalar>& d) {
    const int n = int(d.size()) - 1;
    Rational f(1);
    for (int i = 0; i < n; ++i) f /= 2;
    if ((n + 1) % 2) f = -f;
    return EpsScalar(f) * det(bordered(d));
}

struct AffineIncenter {
    Incenter center;
    double radius_coeff = 0;                 // eps-coefficient of the squared inradius
    int radius_degree = 0;
    std::optional<Rational> exact_radius;    // when all weights are squares
};

// I = [sqrt|psi(S_1)| : ...], r = psi(S) / (sum sqrt|psi(S_i)|)^2
inline AffineIncenter affine_incenter(const std::vector<EpsScalar>& ps, const EpsScalar& full) {
    const size_t s1 = ps.size();
    for (size_t i = 0; i < s1; ++i)
        for (size_t j = i + 1; j < s1; ++j)
            if (ps[i].lead_sign() * ps[j].lead_sign() < 0) throw DomainError("incenter: psi(S_i) psi(S_j) < 0");
    int deg = ps[0].min_degree();
    std::vector<Rational> w2;
    for (const auto& p : ps) {
        if (p.is_zero() || p.min_degree() != deg) throw DomainError("incenter: facet psi of unequal degree");
        w2.push_back(abs(p.lead()));
    }
    AffineIncenter out;
    out.center = make_incenter(w2, std::vector<int>(s1, 1));
    double sum = 0;
    for (double b : out.center.bary) sum += b;
    out.radius_coeff = to_double(full.lead()) / (sum * sum);
    out.radius_degree = full.min_degree() - deg;
    if (out.center.exact) {
        Rational s = 0;
        for (const auto& x : *out.center.exact) s += x;
        out.exact_radius = full.lead() / (s * s);
    }
    return out;
}
inline AffineIncenter affine_incenter(const AffineSimplex& sx) {
    const size_t s1 = sx.size();
    std::vector<EpsScalar> ps;
    for (size_t i = 0; i < s1; ++i) ps.push_back(psi(sx, all_but(s1, {i})));
    return affine_incenter(ps, psi(sx, all_but(s1, {})));
}
inline MatT<EpsScalar> submatrix(const MatT<EpsScalar>& d, const std::vector<size_t>& idx) {
    MatT<EpsScalar> m(idx.size(), std::vector<EpsScalar>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) m[i][j] = d[idx[i]][idx[j]];
    return m;
}
// Same from squared edge lengths alone (rho = 1).
inline AffineIncenter affine_incenter(const MatT<EpsScalar>& d) {
    const size_t s1 = d.size();
    std::vector<EpsScalar> ps;
    for (size_t i = 0; i < s1; ++i) ps.push_back(psi_from_distances(submatrix(d, all_but(s1, {i}))));
    return affine_incenter(ps, psi_from_distances(d));
}

inline Vec centroid(const AffineSimplex& sx) { return Vec(sx.size(), Rational(1)); }

// H° = (n+1)/(n-1) G° - 2/(n-1) O°, in barycentric coordinates summing to 1.
inline Vec monge_point(const MatT<EpsScalar>& d) {
    const int n = int(d.size()) - 1;
    if (n < 2) throw DomainError("monge_point: needs n >= 2");
    Vec o = affine_circumcenter(d);
    Rational so = 0;
    for (const auto& x : o) so += x;
    if (so == 0) throw DomainError("monge_point: circumcenter at infinity");
    Vec h(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        h[i] = make_rational(n + 1, n - 1) / (n + 1) - make_rational(2, n - 1) * o[i] / so;
    return h;
}
inline Vec monge_point(const AffineSimplex& sx) {
    if (sx.ck.rho() != 1) throw DomainError("monge_point: needs rho = 1");
    return monge_point(sx.dmatrix());
}

// Z_ij: centroid of the face opposite the edge P_i P_j.
inline Vec opposite_edge_centroid(const AffineSimplex& sx, size_t i, size_t j) {
    Vec v(sx.size(), Rational(1));
    v[i] = v[j] = 0;
    return v;
}

// Hyperplanes (total polar of P_i P_j) joined with Z_ij.
inline std::vector<Flat> monge_planes(const AffineSimplex& sx) {
    std::vector<Flat> out;
    for (size_t i = 0; i < sx.size(); ++i)
        for (size_t j = i + 1; j < sx.size(); ++j) {
            Flat edge = join(Flat::from_point(sx.vertices[i]), sx.vertices[j]);
            Flat hc = total_polar(sx.ck, edge).representative;
            out.push_back(join(hc, Point(sx.point(opposite_edge_centroid(sx, i, j)))));
        }
    return out;
}

struct Concurrence {
    std::optional<Point> point;
    bool concurrent = false;
};

inline Concurrence common_point(const std::vector<Flat>& hs) {
    if (hs.empty()) return {};
    Flat x = hs[0];
    for (size_t i = 1; i < hs.size(); ++i) x = meet(x, hs[i]);
    if (x.grade() != 1 || x.is_zero()) return {};
    return {as_point(x), true};
}

// Four hyperplane families; each entry reports its common point if concurrent.
inline std::array<Concurrence, 4> auxiliary_centers(const AffineSimplex& sx) {
    if (sx.ck.rho() != 1) throw DomainError("auxiliary_centers: needs rho = 1");
    const size_t s1 = sx.size();
    const int n1 = int(sx.ck.size());
    std::vector<Point> t;
    for (size_t i = 0; i < s1; ++i) {
        Flat face = span_of(without(sx.unit, {i}), n1);
        t.push_back(reflect_in_flat(sx.ck, face, sx.vertices[i]));
    }
    std::array<std::vector<Flat>, 4> fam;
    for (size_t i = 0; i < s1; ++i)
        for (size_t j = i + 1; j < s1; ++j) {
            Flat edge = join(Flat::from_point(sx.vertices[i]), sx.vertices[j]);
            Flat hc = total_polar(sx.ck, edge).representative;
            Point z(sx.point(opposite_edge_centroid(sx, i, j)));
            Point mid(axpy(1, sx.unit[i], 1, sx.unit[j]));
            Point tij(axpy(1, affine_unit(t[i]), 1, affine_unit(t[j])));
            Flat th = total_polar(sx.ck, join(Flat::from_point(t[i]), t[j])).representative;
            fam[0].push_back(join(hc, reflect_point(sx.ck, z, mid)));
            fam[1].push_back(join(hc, tij));
            fam[2].push_back(join(th, mid));
            fam[3].push_back(join(th, z));
        }
    std::array<Concurrence, 4> out;
    for (size_t f = 0; f < 4; ++f) out[f] = common_point(fam[f]);
    return out;
}

// Homothety with center G and factor -1/n applied m times (m < 0: factor -n).
inline AffineSimplex transport(const AffineSimplex& sx, int m) {
    const int n = sx.n();
    Vec g(sx.ck.size(), Rational(0));
    for (const auto& u : sx.unit) g = axpy(1, g, Rational(1, n + 1), u);
    Rational f = m >= 0 ? Rational(-1, n) : Rational(-n);
    int steps = std::abs(m);
    Rational fm = 1;
    for (int i = 0; i < steps; ++i) fm *= f;
    std::vector<Point> vs;
    for (const auto& u : sx.unit) vs.emplace_back(axpy(1 - fm, g, fm, u));
    return make_affine_simplex(sx.ck, vs);
}

inline std::pair<AffineSimplex, AffineSimplex> medial_and_anticomplementary(const AffineSimplex& sx) {
    return {transport(sx, 1), transport(sx, -1)};
}

enum class CenterTag { G, O, I, H };

// Center T^[m] of the transported simplex as a point of the space.
inline Point center_transport(const AffineSimplex& sx, CenterTag tag, int m) {
    AffineSimplex t = transport(sx, m);
    switch (tag) {
        case CenterTag::G: return Point(t.point(centroid(t)));
        case CenterTag::O: return Point(t.point(affine_circumcenter(t)));
        case CenterTag::H: return Point(t.point(monge_point(t)));
        case CenterTag::I: {
            auto in = affine_incenter(t);
            if (!in.center.exact) throw DomainError("center_transport: incenter is not rational");
            return Point(t.point(*in.center.exact));
        }
    }
    throw DomainError("center_transport: unknown center");
}

struct Altitudes {
    std::vector<Flat> lines;       // L_i = P_i + R_i
    std::vector<Point> feet_dirs;  // R_i, absolute polar of S_i
    bool dihedral_identity = true;
    bool foot_factorization = true;
};

inline Altitudes altitudes_and_dihedrals(const AffineSimplex& sx) {
    const size_t s1 = sx.size();
    const int n1 = int(sx.ck.size());
    Altitudes out;
    std::vector<Flat> faces;
    for (size_t i = 0; i < s1; ++i) {
        faces.push_back(span_of(without(sx.unit, {i}), n1));
        Flat r = total_polar(sx.ck, faces.back()).representative;
        if (r.grade() != 1) throw DomainError("altitudes: absolute polar is not a point");
        out.feet_dirs.push_back(as_point(r));
        out.lines.push_back(join(Flat::from_point(sx.vertices[i]), out.feet_dirs.back()));
    }
    EpsScalar ps = psi(sx, all_but(s1, {}));
    for (size_t i = 0; i < s1; ++i)
        for (size_t j = i + 1; j < s1; ++j) {
            EpsScalar xi = quadrance_flats(sx.ck, faces[i], faces[j]).xi;
            EpsScalar lhs = xi * psi(sx, all_but(s1, {i})) * psi(sx, all_but(s1, {j}));
            EpsScalar rhs = psi(sx, all_but(s1, {i, j})) * ps;
            out.dihedral_identity = out.dihedral_identity && lhs == rhs;
        }
    Flat q = meet(faces[s1 - 1], out.lines[s1 - 1]);
    Point qp = as_point(q);
    EpsScalar lhs = psi(sx, all_but(s1, {s1 - 1})) * staudtian(sx.ck, {sx.unit[s1 - 1], qp.v()});
    out.foot_factorization = lhs == ps;
    return out;
}

struct CentroidRatio {
    EpsScalar xi_gq, xi_gr;  // G to the k-face centroid Q and to the opposite centroid R
    int n = 0, k = 0;
    // (k+1)^2 xi(G,Q) = (n-k)^2 xi(G,R), since G divides QR in the ratio (n-k):(k+1)
    bool holds() const {
        return EpsScalar((k + 1) * (k + 1)) * xi_gq == EpsScalar((n - k) * (n - k)) * xi_gr;
    }
};

inline CentroidRatio centroid_ratio(const AffineSimplex& sx, const std::vector<size_t>& face) {
    const int n = sx.n(), k = int(face.size()) - 1;
    if (k < 0 || k >= n) throw DomainError("centroid_ratio: bad face");
    std::vector<size_t> opp;
    for (size_t i = 0; i < sx.size(); ++i)
        if (std::find(face.begin(), face.end(), i) == face.end()) opp.push_back(i);
    Point g(sx.point(centroid(sx))), q(sx.point(face_centroid(sx.size(), face))), r(sx.point(face_centroid(sx.size(), opp)));
    return {affine_quadrance(sx.ck, g, q), affine_quadrance(sx.ck, g, r), n, k};
}

inline bool centroid_ratio_check(const AffineSimplex& sx, const std::vector<size_t>& face) {
    return centroid_ratio(sx, face).holds();
}

// ------------------------------------------- euclidean 3-space closed forms

struct Euclid3Centers {
    Vec o;
    std::vector<Rational> i_squared;  // squared incenter weights
    Vec h;
    Vec facet_polar;                  // (S_4 meet A_1)^A_1
};

// d = {d12, d13, d14, d23, d24, d34}, eps coefficients of the squared edge lengths.
inline Euclid3Centers euclid3_center_formulas(const std::array<Rational, 6>& dv) {
    Rational D[4][4];
    const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int a = 0; a < 4; ++a) D[a][a] = 0;
    for (int e = 0; e < 6; ++e) D[idx[e][0]][idx[e][1]] = D[idx[e][1]][idx[e][0]] = dv[e];
    auto check = [&] {
        Mat m(4, Vec(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m[a][b] = D[a][b];
        if (det(bordered(eps_distances(m))).is_zero()) throw DomainError("euclid3: degenerate tetrahedron");
    };
    check();
    Euclid3Centers out;
    for (int v = 0; v < 4; ++v) {
        // relabel so that v plays the role of vertex 1
        int p[4] = {v, (v + 1) % 4, (v + 2) % 4, (v + 3) % 4};
        auto d = [&](int a, int b) { return D[p[a - 1]][p[b - 1]]; };
        out.o.push_back(d(1, 2) * (d(2, 3) + d(2, 4) - d(3, 4)) * d(3, 4) + d(1, 3) * (d(2, 3) - d(2, 4) + d(3, 4)) * d(2, 4) +
                        d(1, 4) * (-d(2, 3) + d(2, 4) + d(3, 4)) * d(2, 3) - 2 * d(2, 3) * d(2, 4) * d(3, 4));
        out.i_squared.push_back(2 * (d(2, 3) * d(2, 4) + d(2, 3) * d(3, 4) + d(2, 4) * d(3, 4)) -
                                (d(2, 3) * d(2, 3) + d(2, 4) * d(2, 4) + d(3, 4) * d(3, 4)));
        out.h.push_back(d(2, 3) * (d(1, 4) - d(1, 2)) * (d(1, 4) - d(1, 3)) + d(2, 4) * (d(1, 3) - d(1, 2)) * (d(1, 3) - d(1, 4)) +
                        d(3, 4) * (d(1, 2) - d(1, 3)) * (d(1, 2) - d(1, 4)) - d(2, 3) * d(2, 4) * d(3, 4));
    }
    auto d = [&](int a, int b) { return D[a - 1][b - 1]; };
    // normal direction of the face P1 P2 P3; coordinates sum to zero
    out.facet_polar = {
        -d(1, 2) * d(2, 3) + d(1, 2) * d(2, 4) - d(1, 2) * d(3, 4) - d(1, 3) * d(2, 3) - d(1, 3) * d(2, 4) + d(1, 3) * d(3, 4) + 2 * d(1, 4) * d(2, 3) + d(2, 3) * d(2, 3) - d(2, 3) * d(2, 4) - d(2, 3) * d(3, 4),
        -d(1, 2) * d(1, 3) + d(1, 2) * d(1, 4) - d(1, 2) * d(3, 4) + d(1, 3) * d(1, 3) - d(1, 3) * d(1, 4) - d(1, 3) * d(2, 3) + 2 * d(1, 3) * d(2, 4) - d(1, 3) * d(3, 4) - d(1, 4) * d(2, 3) + d(2, 3) * d(3, 4),
        d(1, 2) * d(1, 2) - d(1, 2) * d(1, 3) - d(1, 2) * d(1, 4) - d(1, 2) * d(2, 3) - d(1, 2) * d(2, 4) + 2 * d(1, 2) * d(3, 4) + d(1, 3) * d(1, 4) - d(1, 3) * d(2, 4) - d(1, 4) * d(2, 3) + d(2, 3) * d(2, 4),
        -d(1, 2) * d(1, 2) - d(1, 3) * d(1, 3) - d(2, 3) * d(2, 3) + 2 * (d(1, 2) * d(1, 3) + d(1, 2) * d(2, 3) + d(1, 3) * d(2, 3)),
    };
    return out;
}

}  // namespace ckgeom
