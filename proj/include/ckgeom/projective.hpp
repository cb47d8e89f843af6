#pragma once

#include "linalg.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace ckgeom {

// Homogeneous point. The stored representative is kept as given; equality is
// projective and canonical() applies the lexicographic sign convention.
class Point {
public:
    Point() = default;
    explicit Point(Vec c) : c_(std::move(c)) {
        if (ckgeom::is_zero(c_)) throw DomainError("zero vector is not a point");
    }
    Point(std::initializer_list<long> xs) {
        for (long x : xs) c_.emplace_back(x);
        if (ckgeom::is_zero(c_)) throw DomainError("zero vector is not a point");
    }

    const Vec& v() const { return c_; }
    size_t size() const { return c_.size(); }
    const Rational& operator[](size_t i) const { return c_[i]; }

    // Sign of the first nonzero coordinate.
    int chi() const {
        for (const auto& x : c_)
            if (x != 0) return sgn(x);
        return 0;
    }

    // Primitive integer vector with positive first nonzero coordinate.
    Vec canonical() const {
        mpz_class l = 1, g = 0;
        for (const auto& x : c_) l = lcm(l, x.get_den());
        Vec r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            r[i] = c_[i] * l;
            g = gcd(g, r[i].get_num());
        }
        if (chi() < 0) g = -g;
        for (auto& x : r) x /= g;
        return r;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) s += (i ? ":" : "") + c_[i].get_str();
        return s;
    }
    std::string canonical_str() const { return Point(canonical()).str(); }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.size() != b.size()) return false;
        // a ~ b iff all 2x2 minors vanish
        size_t k = 0;
        while (a.c_[k] == 0) ++k;
        if (b.c_[k] == 0) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a.c_[i] * b.c_[k] != b.c_[i] * a.c_[k]) return false;
        return true;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

private:
    Vec c_;
};

inline Point unit_point(size_t dim, size_t i) {
    Vec v(dim, Rational(0));
    v[i] = 1;
    return Point(v);
}

namespace detail {

struct SubsetTable {
    std::vector<unsigned> masks;
    std::map<unsigned, size_t> index;
};

inline void gen_subsets(int n, int k, int start, unsigned cur, std::vector<unsigned>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= n - k; ++i) gen_subsets(n, k - 1, i + 1, cur | (1u << i), out);
}

// k-subsets of {0..n-1} in lexicographic order of the increasing index tuple.
inline const SubsetTable& subsets(int n, int k) {
    static std::map<std::pair<int, int>, SubsetTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SubsetTable t;
    gen_subsets(n, k, 0, 0u, t.masks);
    for (size_t i = 0; i < t.masks.size(); ++i) t.index[t.masks[i]] = i;
    return cache.emplace(key, std::move(t)).first->second;
}

// Sign of e_A ^ e_B relative to e_{A|B}: parity of pairs (a in A, b in B) with a > b.
inline int merge_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned bb = b; bb; bb &= bb - 1) {
        int j = __builtin_ctz(bb);
        swaps += __builtin_popcount(a >> (j + 1));
    }
    return swaps % 2 ? -1 : 1;
}

}  // namespace detail

// Flat in Plücker form: grade k coordinates indexed by k-subsets of the basis.
class Flat {
public:
    Flat() = default;
    Flat(int ambient, int grade, Vec plucker) : n1_(ambient), grade_(grade), pl_(std::move(plucker)) {}

    static Flat from_point(const Point& p) { return Flat(int(p.size()), 1, p.v()); }
    static Flat empty(int ambient) { return Flat(ambient, 0, Vec{Rational(1)}); }
    static Flat whole(int ambient) { return Flat(ambient, ambient, Vec{Rational(1)}); }

    int ambient() const { return n1_; }
    int grade() const { return grade_; }
    // Projective dimension.
    int dim() const { return grade_ - 1; }
    const Vec& plucker() const { return pl_; }
    bool is_zero() const { return ckgeom::is_zero(pl_); }
    bool is_empty() const { return grade_ == 0 && !is_zero(); }

    const std::vector<unsigned>& masks() const { return detail::subsets(n1_, grade_).masks; }
    Rational component(unsigned mask) const {
        const auto& t = detail::subsets(n1_, grade_);
        auto it = t.index.find(mask);
        return it == t.index.end() ? Rational(0) : pl_[it->second];
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        const auto& ms = masks();
        for (size_t i = 0; i < pl_.size(); ++i) {
            if (pl_[i] == 0) continue;
            if (!first) s += ", ";
            first = false;
            for (int b = 0; b < n1_; ++b)
                if (ms[i] & (1u << b)) s += std::to_string(b + 1);
            s += ": " + pl_[i].get_str();
        }
        return s + "}";
    }

    friend bool operator==(const Flat& a, const Flat& b) {
        if (a.n1_ != b.n1_ || a.grade_ != b.grade_) return false;
        return same_ray(a.pl_, b.pl_);
    }

    static bool same_ray(const Vec& a, const Vec& b) {
        if (ckgeom::is_zero(a) || ckgeom::is_zero(b)) return ckgeom::is_zero(a) && ckgeom::is_zero(b);
        return Point(a) == Point(b);
    }

private:
    int n1_ = 0;
    int grade_ = 0;
    Vec pl_;
};

inline Flat join(const Flat& a, const Flat& b) {
    if (a.ambient() != b.ambient()) throw DomainError("join: ambient dimension mismatch");
    const int n1 = a.ambient(), k = a.grade() + b.grade();
    if (k > n1) throw DomainError("join: grade overflow");
    const auto& ta = detail::subsets(n1, a.grade());
    const auto& tb = detail::subsets(n1, b.grade());
    const auto& tc = detail::subsets(n1, k);
    Vec out(tc.masks.size(), Rational(0));
    for (size_t i = 0; i < ta.masks.size(); ++i) {
        if (a.plucker()[i] == 0) continue;
        for (size_t j = 0; j < tb.masks.size(); ++j) {
            if (b.plucker()[j] == 0 || (ta.masks[i] & tb.masks[j])) continue;
            Rational t = a.plucker()[i] * b.plucker()[j];
            if (detail::merge_sign(ta.masks[i], tb.masks[j]) < 0) t = -t;
            out[tc.index.at(ta.masks[i] | tb.masks[j])] += t;
        }
    }
    return Flat(n1, k, out);
}

inline Flat join(const Flat& a, const Point& p) { return join(a, Flat::from_point(p)); }

inline Flat join_points(const std::vector<Point>& ps) {
    if (ps.empty()) throw DomainError("join_points: no points");
    Flat f = Flat::empty(int(ps[0].size()));
    for (const auto& p : ps) f = join(f, p);
    return f;
}

inline bool contains(const Flat& f, const Point& p) { return f.grade() == f.ambient() || join(f, p).is_zero(); }

// Basis of the underlying linear subspace.
inline std::vector<Vec> basis(const Flat& f) {
    if (f.is_zero()) throw DomainError("basis of the zero flat");
    const int n1 = f.ambient();
    if (f.grade() == 0) return {};
    if (f.grade() == n1) return nullspace(Mat{}, size_t(n1));
    // rows of the linear map x -> f ^ x
    const auto& tc = detail::subsets(n1, f.grade() + 1);
    Mat m(tc.masks.size(), Vec(size_t(n1), Rational(0)));
    const auto& ms = f.masks();
    for (size_t i = 0; i < ms.size(); ++i) {
        if (f.plucker()[i] == 0) continue;
        for (int x = 0; x < n1; ++x) {
            if (ms[i] & (1u << x)) continue;
            Rational t = f.plucker()[i];
            if (detail::merge_sign(ms[i], 1u << x) < 0) t = -t;
            m[tc.index.at(ms[i] | (1u << x))][size_t(x)] += t;
        }
    }
    auto b = nullspace(m, size_t(n1));
    if (int(b.size()) != f.grade()) throw DomainError("flat is not decomposable");
    return b;
}

inline std::vector<Point> basis_points(const Flat& f) {
    std::vector<Point> r;
    for (auto& v : basis(f)) r.emplace_back(v);
    return r;
}

inline Flat flat_of(const std::vector<Vec>& vs, int ambient) {
    Flat f = Flat::empty(ambient);
    for (const auto& v : vs) f = join(f, Flat(ambient, 1, v));
    return f;
}

// Span of an arbitrary generating set (dependent vectors allowed).
inline Flat span_of(const std::vector<Vec>& vs, int ambient) {
    if (vs.empty()) return Flat::empty(ambient);
    Mat m = vs;
    auto piv = rref(m);
    std::vector<Vec> b(m.begin(), m.begin() + long(piv.size()));
    return flat_of(b, ambient);
}

// Complementary-index dual with parity signs.
inline Flat hodge(const Flat& f) {
    const int n1 = f.ambient();
    const unsigned full = (n1 == 32) ? ~0u : ((1u << n1) - 1);
    const auto& tc = detail::subsets(n1, n1 - f.grade());
    Vec out(tc.masks.size(), Rational(0));
    const auto& ms = f.masks();
    for (size_t i = 0; i < ms.size(); ++i) {
        unsigned c = full & ~ms[i];
        Rational t = f.plucker()[i];
        if (detail::merge_sign(ms[i], c) < 0) t = -t;
        out[tc.index.at(c)] = t;
    }
    return Flat(n1, n1 - f.grade(), out);
}

inline Flat meet(const Flat& a, const Flat& b) {
    const int n1 = a.ambient();
    if (a.is_zero() || b.is_zero()) return Flat(n1, 0, Vec{Rational(0)});
    if (a.grade() + b.grade() >= n1) {
        Flat j = join(hodge(a), hodge(b));
        if (!j.is_zero()) return hodge(j);
    }
    // general case: intersect the subspaces directly
    auto ba = basis(a), bb = basis(b);
    if (ba.empty() || bb.empty()) return Flat::empty(n1);
    Mat m(size_t(n1), Vec(ba.size() + bb.size()));
    for (int r = 0; r < n1; ++r) {
        for (size_t i = 0; i < ba.size(); ++i) m[size_t(r)][i] = ba[i][size_t(r)];
        for (size_t j = 0; j < bb.size(); ++j) m[size_t(r)][ba.size() + j] = -bb[j][size_t(r)];
    }
    auto ker = nullspace(m, ba.size() + bb.size());
    std::vector<Vec> vs;
    for (const auto& k : ker) {
        Vec v(size_t(n1), Rational(0));
        for (size_t i = 0; i < ba.size(); ++i)
            for (int r = 0; r < n1; ++r) v[size_t(r)] += k[i] * ba[i][size_t(r)];
        vs.push_back(v);
    }
    return span_of(vs, n1);
}

inline Point as_point(const Flat& f) {
    if (f.grade() != 1 || f.is_zero()) throw DomainError("flat is not a point");
    return Point(f.plucker());
}

// Plücker relation for grade-2 flats in R^4 (minor identity form).
inline Rational plucker_relation(const Flat& l) {
    if (l.ambient() != 4 || l.grade() != 2) throw DomainError("plucker_relation: needs a line in P^3");
    auto c = [&](int i, int j) { return l.component((1u << (i - 1)) | (1u << (j - 1))); };
    return c(1, 2) * c(3, 4) - c(1, 3) * c(2, 4) + c(1, 4) * c(2, 3);
}

inline Rational det2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Cross ratio (a,b;c,d) as a point of the projective line.
inline Point cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int n1 = int(a.size());
    Flat l = span_of({a.v(), b.v(), c.v(), d.v()}, n1);
    if (l.grade() != 2) throw DomainError("cross_ratio: points are not collinear");
    auto bs = basis(l);
    auto chart = [&](const Point& p) { return *coordinates_in(bs, p.v()); };
    Vec A = chart(a), B = chart(b), C = chart(c), D = chart(d);
    Rational u = det2(A, C) * det2(D, B), v = det2(A, D) * det2(C, B);
    if (u == 0 && v == 0) throw DomainError("cross_ratio: undefined for this quadruple");
    return Point(Vec{u, v});
}

inline bool is_harmonic(const Point& a, const Point& c, const Point& b, const Point& d) {
    try {
        return cross_ratio(a, c, b, d) == Point{-1, 1};
    } catch (const DomainError&) {
        return false;
    }
}

inline Point central_collineation(const Point& z, const Vec& m, const Point& p) {
    if (dot(m, z.v()) == -1) throw DomainError("central_collineation: m(z) = -1");
    Rational mp = dot(m, p.v());
    return Point(axpy(1, p.v(), mp, z.v()));
}

inline Point apply(const Mat& phi, const Point& p) { return Point(phi * p.v()); }

struct Frame {
    std::vector<Point> points;
    explicit Frame(std::vector<Point> ps) : points(std::move(ps)) {
        const size_t n1 = points.at(0).size();
        if (points.size() != n1 + 1) throw DomainError("frame needs n+2 points");
        for (size_t skip = 0; skip < points.size(); ++skip) {
            Mat m;
            for (size_t i = 0; i < points.size(); ++i)
                if (i != skip) m.push_back(points[i].v());
            if (rank(m) != n1) throw DomainError("frame points not in general position");
        }
    }
};

enum class PerspectiveStatus { unique, identical_tuples, none };

struct Perspective {
    PerspectiveStatus status = PerspectiveStatus::none;
    std::optional<Point> center;
    std::optional<Flat> axis;
};

// Perspector and perspectrix of two (s+1)-tuples spanning the same s-plane.
inline Perspective perspective(const std::vector<Point>& ps, const std::vector<Point>& qs) {
    Perspective out;
    if (ps.size() != qs.size() || ps.empty()) throw DomainError("perspective: tuple size mismatch");
    const int n1 = int(ps[0].size());
    std::vector<Flat> lines;
    for (size_t i = 0; i < ps.size(); ++i)
        if (ps[i] != qs[i]) lines.push_back(join(Flat::from_point(ps[i]), qs[i]));
    if (lines.empty()) {
        out.status = PerspectiveStatus::identical_tuples;
        return out;
    }
    Flat x = lines[0];
    for (size_t i = 1; i < lines.size(); ++i) x = meet(x, lines[i]);
    if (x.grade() != 1 || x.is_zero()) return out;
    Point z = as_point(x);
    out.status = PerspectiveStatus::unique;
    out.center = z;

    // the axis of the central collineation x -> x + m(x) z on U
    std::vector<Vec> pv;
    for (const auto& p : ps) pv.push_back(p.v());
    for (size_t k = 0; k < ps.size(); ++k) {
        if (ps[k] == z && qs[k] != z) {
            std::vector<Vec> rest;
            for (size_t j = 0; j < qs.size(); ++j)
                if (j != k) rest.push_back(qs[j].v());
            out.axis = span_of(rest, n1);
            return out;
        }
        if (qs[k] == z && ps[k] != z) {
            std::vector<Vec> rest;
            for (size_t j = 0; j < ps.size(); ++j)
                if (j != k) rest.push_back(ps[j].v());
            out.axis = span_of(rest, n1);
            return out;
        }
    }
    // m is determined on each P_i != Z by q_i = a p_i + b z, m(p_i) = b/a
    Vec mvals(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] == z) return out;  // m(z) is free: axis not determined
        auto ab = coordinates_in({ps[i].v(), z.v()}, qs[i].v());
        if (!ab || (*ab)[0] == 0) return out;
        mvals[i] = (*ab)[1] / (*ab)[0];
    }
    // points sum c_i p_i with sum c_i m_i = 0, restricted to independent p's
    if (rank(pv) != ps.size()) return out;  // needs a basis of U
    auto ker = nullspace(Mat{mvals}, ps.size());
    std::vector<Vec> axis_pts;
    for (const auto& c : ker) {
        Vec v(size_t(n1), Rational(0));
        for (size_t i = 0; i < ps.size(); ++i)
            for (int r = 0; r < n1; ++r) v[size_t(r)] += c[i] * pv[i][size_t(r)];
        axis_pts.push_back(v);
    }
    out.axis = span_of(axis_pts, n1);
    return out;
}

}  // namespace ckgeom
