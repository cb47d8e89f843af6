#pragma once

#include "projective.hpp"

#include <cmath>

namespace ckgeom {

struct CKEntry {
    int sign = 1;  // +1, -1, or 0 for a literal null entry (semi mode)
    int degree = 0;
};

// Diagonal eps-graded form A_eps = A_0 + sum A_i eps^i.
class CKStructure {
public:
    CKStructure() = default;
    explicit CKStructure(std::vector<CKEntry> e) : e_(std::move(e)) { validate(); }

    static CKStructure diag(std::initializer_list<int> signs) {
        std::vector<CKEntry> e;
        for (int s : signs) e.push_back({s, 0});
        return CKStructure(e);
    }

    // Tokens "s@k"; a bare "0" is accepted only when semi is set.
    static CKStructure parse(const std::string& text, bool semi = false) {
        std::istringstream is(text);
        std::string tok;
        std::vector<CKEntry> e;
        while (is >> tok) {
            if (tok.rfind("\xE2\x88\x92", 0) == 0) tok = "-" + tok.substr(3);
            CKEntry c;
            size_t at = tok.find('@');
            std::string s = tok.substr(0, at);
            if (s == "+" || s == "1" || s == "+1")
                c.sign = 1;
            else if (s == "-" || s == "-1")
                c.sign = -1;
            else if (s == "0") {
                if (!semi) throw DomainError("null diagonal entry '" + tok + "' requires --semi");
                c.sign = 0;
            } else
                throw DomainError("bad diagonal token '" + tok + "'");
            if (at != std::string::npos) {
                std::string d = tok.substr(at + 1);
                if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
                    throw DomainError("bad degree in token '" + tok + "'");
                c.degree = std::stoi(d);
            }
            e.push_back(c);
        }
        if (e.empty()) throw DomainError("empty space literal");
        return CKStructure(e);
    }

    size_t size() const { return e_.size(); }
    int n() const { return int(e_.size()) - 1; }
    int rho() const {
        int r = 0;
        for (const auto& c : e_) r = std::max(r, c.degree);
        return r;
    }
    bool semi() const {
        for (const auto& c : e_)
            if (c.sign == 0) return true;
        return false;
    }
    const CKEntry& operator[](size_t i) const { return e_[i]; }
    const std::vector<CKEntry>& entries() const { return e_; }

    EpsScalar entry(size_t i) const {
        return e_[i].sign == 0 ? EpsScalar() : EpsScalar::monomial(Rational(e_[i].sign), e_[i].degree);
    }
    // sign of entry i in the level-k form A_k
    int level_sign(size_t i, int k) const { return e_[i].degree == k ? e_[i].sign : 0; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i) s += " ";
            s += e_[i].sign > 0 ? "+" : (e_[i].sign < 0 ? "-" : "0");
            s += "@" + std::to_string(e_[i].degree);
        }
        return s;
    }

    friend bool operator==(const CKStructure& a, const CKStructure& b) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a.e_[i].sign != b.e_[i].sign || a.e_[i].degree != b.e_[i].degree) return false;
        return true;
    }

private:
    void validate() const {
        const int r = rho();
        for (int k = 0; k <= r; ++k) {
            bool found = false;
            for (const auto& c : e_)
                if (c.degree == k && c.sign != 0) found = true;
            if (!found) throw DomainError("CK chain has no entry of degree " + std::to_string(k));
        }
        if (semi() && r > 0) throw DomainError("null entries are only allowed with degree-0 chains");
        if (e_.size() > 16) throw DomainError("dimension too large");
    }
    std::vector<CKEntry> e_;
};

inline EpsScalar gram(const CKStructure& ck, const Vec& p, const Vec& q) {
    std::vector<Rational> by_deg(size_t(ck.rho()) + 1, Rational(0));
    for (size_t i = 0; i < ck.size(); ++i)
        if (ck[i].sign) by_deg[size_t(ck[i].degree)] += ck[i].sign * p[i] * q[i];
    EpsScalar r;
    for (size_t k = 0; k < by_deg.size(); ++k)
        if (by_deg[k] != 0) r += EpsScalar::monomial(by_deg[k], int(k));
    return r;
}
inline EpsScalar gram(const CKStructure& ck, const Point& p, const Point& q) {
    return gram(ck, p.v(), q.v());
}

// Gram value with eps-polynomial coordinates.
inline EpsScalar gram(const CKStructure& ck, const std::vector<EpsScalar>& p,
                      const std::vector<EpsScalar>& q) {
    EpsScalar r;
    for (size_t i = 0; i < ck.size(); ++i)
        if (ck[i].sign) r += ck.entry(i) * p[i] * q[i];
    return r;
}

// Level-k form beta_k.
inline Rational gram_level(const CKStructure& ck, int k, const Vec& p, const Vec& q) {
    Rational r = 0;
    for (size_t i = 0; i < ck.size(); ++i)
        if (int s = ck.level_sign(i, k)) r += s * p[i] * q[i];
    return r;
}

inline Mat gram_matrix_level(const CKStructure& ck, int k, const std::vector<Vec>& vs) {
    Mat g(vs.size(), Vec(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < vs.size(); ++j) g[i][j] = gram_level(ck, k, vs[i], vs[j]);
    return g;
}

inline MatT<EpsScalar> gram_matrix(const CKStructure& ck, const std::vector<Vec>& a,
                                   const std::vector<Vec>& b) {
    MatT<EpsScalar> g(a.size(), std::vector<EpsScalar>(b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) g[i][j] = gram(ck, a[i], b[j]);
    return g;
}

inline std::vector<Vec> vecs(const std::vector<Point>& ps) {
    std::vector<Vec> r;
    for (const auto& p : ps) r.push_back(p.v());
    return r;
}

struct PointClass {
    bool anisotropic = false;
    int degree = 0;
    int sign = 0;  // sign of beta_degree(p,p)
    std::string str() const {
        return std::string(anisotropic ? "anisotropic" : "isotropic") + " of degree " + std::to_string(degree);
    }
};

// Degree = lowest block carrying a nonzero coordinate (P in A_k, not in A_{k+1}).
inline PointClass classify_point(const CKStructure& ck, const Vec& p) {
    PointClass c;
    c.degree = ck.rho() + 1;
    for (size_t i = 0; i < ck.size(); ++i)
        if (p[i] != 0) c.degree = std::min(c.degree, ck[i].degree);
    if (c.degree > ck.rho()) throw DomainError("zero vector");
    Rational v = gram_level(ck, c.degree, p, p);
    c.sign = sgn(v);
    c.anisotropic = v != 0;
    return c;
}
inline PointClass classify_point(const CKStructure& ck, const Point& p) { return classify_point(ck, p.v()); }

inline void require_anisotropic(const CKStructure& ck, const Point& p, const char* what) {
    if (!classify_point(ck, p).anisotropic) throw DomainError(std::string(what) + ": isotropic point " + p.str());
}

inline void require_gross_anisotropic(const CKStructure& ck, const Vec& p, const char* what) {
    if (gram_level(ck, 0, p, p) == 0)
        throw DomainError(std::string(what) + ": point is isotropic for the gross form");
}

inline Flat radical_flat(const CKStructure& ck, int k) {
    std::vector<Vec> vs;
    for (size_t i = 0; i < ck.size(); ++i)
        if (ck[i].degree >= k) vs.push_back(unit_point(ck.size(), i).v());
    return span_of(vs, int(ck.size()));
}

struct FlatClass {
    bool isotropic = false;
    bool light = false;
    EpsScalar gram_det;
};

inline FlatClass classify_flat(const CKStructure& ck, const std::vector<Vec>& gens) {
    if (rank(gens) != gens.size()) throw DomainError("classify_flat: dependent generators");
    FlatClass out;
    out.gram_det = det(gram_matrix(ck, gens, gens));
    out.isotropic = out.gram_det.is_zero();
    bool regular = false;
    for (const auto& g : gens)
        for (size_t i = 0; i < ck.size(); ++i)
            if (g[i] != 0 && ck[i].degree == 0) regular = true;
    if (regular && ck.rho() > 0) {
        Mat g0 = gram_matrix_level(ck, 0, gens);
        if (rank(g0) == 1) {
            // radical of beta_0 on U must be null for the degree-1 form
            auto ker = nullspace(g0, gens.size());
            std::vector<Vec> kv;
            for (const auto& c : ker) {
                Vec v(ck.size(), Rational(0));
                for (size_t i = 0; i < gens.size(); ++i) v = axpy(1, v, c[i], gens[i]);
                kv.push_back(v);
            }
            Mat g1 = gram_matrix_level(ck, 1, kv);
            bool zero = true;
            for (const auto& row : g1)
                if (!is_zero(row)) zero = false;
            out.light = zero;
        }
    }
    return out;
}
inline FlatClass classify_flat(const CKStructure& ck, const Flat& u) { return classify_flat(ck, basis(u)); }

enum class LineType { elliptic, parabolic, hyperbolic, totally_isotropic };

inline std::string to_string(LineType t) {
    switch (t) {
        case LineType::elliptic: return "elliptic";
        case LineType::parabolic: return "parabolic";
        case LineType::hyperbolic: return "hyperbolic";
        default: return "totally isotropic";
    }
}

// Lowest level k with U inside A_k.
inline int flat_degree(const CKStructure& ck, const std::vector<Vec>& gens) {
    int k = ck.rho() + 1;
    for (const auto& g : gens) k = std::min(k, classify_point(ck, g).degree);
    return k;
}

inline LineType classify_line_level(const CKStructure& ck, int k, const std::vector<Vec>& b) {
    Mat g = gram_matrix_level(ck, k, b);
    Rational d = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (d > 0) return LineType::elliptic;
    if (d < 0) return LineType::hyperbolic;
    if (g[0][0] == 0 && g[0][1] == 0 && g[1][1] == 0) return LineType::totally_isotropic;
    return LineType::parabolic;
}

inline LineType classify_line(const CKStructure& ck, const Flat& l) {
    if (l.grade() != 2) throw DomainError("classify_line: not a line");
    auto b = basis(l);
    return classify_line_level(ck, flat_degree(ck, b), b);
}

// Linear form x -> beta_k(p, x) as a coefficient row.
inline Vec level_functional(const CKStructure& ck, int k, const Vec& p) {
    Vec f(ck.size(), Rational(0));
    for (size_t i = 0; i < ck.size(); ++i) f[i] = ck.level_sign(i, k) * p[i];
    return f;
}

inline Flat polar(const CKStructure& ck, const Flat& s, int k = 0) {
    const int n1 = int(ck.size());
    if (s.is_zero()) throw DomainError("polar of the zero flat");
    Mat rows;
    for (const auto& b : basis(s)) rows.push_back(level_functional(ck, k, b));
    return span_of(nullspace(rows, size_t(n1)), n1);
}
inline Flat polar(const CKStructure& ck, const Point& p, int k = 0) { return polar(ck, Flat::from_point(p), k); }

// Point form of a hyperplane's gross pole is not unique in general; for
// hyperplanes of an anisotropic level-0 form it is A^-1 h.
inline Point hyperplane_functional_point(const Flat& h) {
    auto b = basis(h);
    auto ann = nullspace(b, size_t(h.ambient()));
    if (ann.size() != 1) throw DomainError("not a hyperplane");
    return Point(ann[0]);
}

struct TotalPolar {
    Flat representative;
    std::vector<Vec> basis;     // adapted generating set of U
    std::vector<int> degrees;   // degree of each basis point
};

namespace detail {

inline std::vector<Vec> anisotropic_quotient_basis(const CKStructure& ck, int k, std::vector<Vec> w) {
    if (w.empty()) return w;
    Mat g = gram_matrix_level(ck, k, w);
    size_t ai = w.size();
    for (size_t i = 0; i < w.size(); ++i)
        if (g[i][i] != 0) ai = i;
    if (ai == w.size()) {
        for (size_t i = 0; i < w.size() && ai == w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (g[i][j] != 0) {
                    w[i] = axpy(1, w[i], 1, w[j]);
                    ai = i;
                    break;
                }
        if (ai == w.size()) throw DomainError("total polar: flat is isotropic at degree " + std::to_string(k));
    }
    std::swap(w[0], w[ai]);
    for (size_t i = 1; i < w.size(); ++i) {
        for (int c = 0; c <= 3; ++c) {
            Vec cand = axpy(1, w[i], c, w[0]);
            if (gram_level(ck, k, cand, cand) != 0) {
                w[i] = cand;
                break;
            }
        }
        if (gram_level(ck, k, w[i], w[i]) == 0) throw DomainError("total polar: no anisotropic basis");
    }
    return w;
}

}  // namespace detail

inline TotalPolar total_polar(const CKStructure& ck, const Flat& u) {
    const int n1 = int(ck.size());
    TotalPolar tp;
    if (u.is_empty()) {
        tp.representative = Flat::whole(n1);
        return tp;
    }
    std::vector<Vec> cur;
    for (int j = ck.rho(); j >= 0; --j) {
        Flat uj = meet(u, radical_flat(ck, j));
        if (uj.is_empty() || uj.is_zero()) continue;
        std::vector<Vec> ext;
        Mat acc = cur;
        for (const auto& b : basis(uj)) {
            acc.push_back(b);
            if (rank(acc) > cur.size() + ext.size())
                ext.push_back(b);
            else
                acc.pop_back();
        }
        for (auto& v : detail::anisotropic_quotient_basis(ck, j, ext)) {
            cur.push_back(v);
            tp.basis.push_back(v);
            tp.degrees.push_back(j);
        }
    }
    Mat rows;
    for (size_t i = 0; i < tp.basis.size(); ++i) rows.push_back(level_functional(ck, tp.degrees[i], tp.basis[i]));
    tp.representative = span_of(nullspace(rows, size_t(n1)), n1);
    return tp;
}

// Membership of w in the polar variety of u.
inline bool is_total_polar(const CKStructure& ck, const Flat& u, const Flat& w) {
    const int n1 = int(ck.size());
    TotalPolar tp = total_polar(ck, u);
    if (w.grade() != n1 - int(tp.basis.size())) return false;
    std::vector<Vec> ann = w.is_empty() ? nullspace(Mat{}, size_t(n1)) : nullspace(basis(w), size_t(n1));
    for (size_t i = 0; i < tp.basis.size(); ++i) {
        Vec f = level_functional(ck, tp.degrees[i], tp.basis[i]);
        std::vector<Vec> gens = ann;
        for (size_t j = 0; j < ck.size(); ++j)
            if (ck[j].degree < tp.degrees[i]) gens.push_back(unit_point(ck.size(), j).v());
        if (gens.empty()) return false;
        if (!solve_any(transpose(gens), f, gens.size())) return false;
    }
    return true;
}

inline CKStructure dual_structure(const CKStructure& ck) {
    std::vector<CKEntry> e(ck.size());
    int zeros = 0;
    for (size_t i = 0; i < ck.size(); ++i) zeros += ck[i].sign == 0;
    for (size_t i = 0; i < ck.size(); ++i) {
        int s = 1, d = 0;
        for (size_t j = 0; j < ck.size(); ++j)
            if (j != i) {
                s *= ck[j].sign;
                d += ck[j].degree;
            }
        e[i] = {s, d};
    }
    if (zeros > 1) throw DomainError("dual_structure: adjugate vanishes");
    int m = 1 << 20;
    for (const auto& c : e)
        if (c.sign) m = std::min(m, c.degree);
    for (auto& c : e) c.degree = c.sign ? c.degree - m : 0;
    return CKStructure(e);
}

// Both sides of the dual-space quadrance identity (requires a regular level-0 form).
inline std::pair<Rational, Rational> dual_identity(const CKStructure& ck, const Point& p1, const Point& p2) {
    if (ck.rho() != 0 || ck.semi()) throw DomainError("dual_identity: form is not regular");
    auto lower = [&](const Vec& p) { return level_functional(ck, 0, p); };
    Vec x1 = lower(p1.v()), x2 = lower(p2.v());
    // A is its own inverse for a +-1 diagonal
    auto inv = [&](const Vec& a, const Vec& b) { return gram_level(ck, 0, a, b); };
    auto ratio = [](const Rational& ab, const Rational& aa, const Rational& bb) -> Rational {
        if (aa == 0 || bb == 0) throw DomainError("dual_identity: isotropic input");
        return ab * ab / (aa * bb);
    };
    Rational lhs = ratio(inv(x1, x2), inv(x1, x1), inv(x2, x2));
    Rational rhs = ratio(gram_level(ck, 0, p1.v(), p2.v()), gram_level(ck, 0, p1.v(), p1.v()),
                         gram_level(ck, 0, p2.v(), p2.v()));
    return {lhs, rhs};
}

struct NormalizedPoint {
    Point point;
    std::vector<double> pcirc;
    int sign = 0;
    int degree = 0;
};

inline NormalizedPoint normalize(const CKStructure& ck, const Point& p) {
    PointClass c = classify_point(ck, p);
    if (!c.anisotropic) throw DomainError("normalize: isotropic point " + p.str());
    double s = std::sqrt(std::abs(to_double(gram_level(ck, c.degree, p.v(), p.v()))));
    NormalizedPoint np{p, {}, c.sign, c.degree};
    for (const auto& x : p.v()) np.pcirc.push_back(p.chi() * to_double(x) / s);
    return np;
}

// delta-image of a tuple inside U = span(rs): R_i -> (join of the others)^A meet U.
inline std::vector<Point> delta_tuple(const CKStructure& ck, const std::vector<Point>& rs) {
    const int n1 = int(ck.size());
    Flat u = span_of(vecs(rs), n1);
    std::vector<Point> out;
    for (size_t i = 0; i < rs.size(); ++i) {
        std::vector<Vec> others;
        for (size_t j = 0; j < rs.size(); ++j)
            if (j != i) others.push_back(rs[j].v());
        Flat h = span_of(others, n1);
        Flat x = meet(polar(ck, h, 0), u);
        if (x.grade() != 1 || x.is_zero()) throw DomainError("orthology: delta image is not a point");
        out.push_back(as_point(x));
    }
    return out;
}

inline Perspective orthology_center(const CKStructure& ck, const std::vector<Point>& ps,
                                    const std::vector<Point>& qs) {
    if (classify_flat(ck, span_of(vecs(ps), int(ck.size()))).isotropic)
        throw DomainError("orthology: plane is isotropic");
    return perspective(ps, delta_tuple(ck, qs));
}

}  // namespace ckgeom
