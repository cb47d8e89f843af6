#pragma once

#include "transforms.hpp"

#include <cmath>
#include <map>

namespace ckgeom {

// Sparse multivector over basis blades; bit i of a mask stands for e_{i+1}.
template <class T>
class Multivector {
public:
    Multivector() = default;
    Multivector(const T& s) { add(0u, s); }

    static Multivector blade(unsigned mask, const T& c = T(1)) {
        Multivector m;
        m.add(mask, c);
        return m;
    }
    static Multivector vector(const std::vector<T>& v) {
        Multivector m;
        for (size_t i = 0; i < v.size(); ++i) m.add(1u << i, v[i]);
        return m;
    }

    const std::map<unsigned, T>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    T coeff(unsigned mask) const {
        auto it = t_.find(mask);
        return it == t_.end() ? T(0) : it->second;
    }

    void add(unsigned mask, const T& c) {
        if (c == T(0)) return;
        auto [it, fresh] = t_.emplace(mask, c);
        if (!fresh) {
            it->second += c;
            if (it->second == T(0)) t_.erase(it);
        }
    }

    Multivector grade(int k) const {
        Multivector r;
        for (const auto& [m, c] : t_)
            if (__builtin_popcount(m) == k) r.t_.emplace(m, c);
        return r;
    }
    // -1 when mixed, 0 for zero.
    int pure_grade() const {
        int g = -2;
        for (const auto& [m, c] : t_) {
            int k = __builtin_popcount(m);
            if (g == -2) g = k;
            else if (g != k) return -1;
        }
        return g == -2 ? 0 : g;
    }
    std::vector<T> vector_part(size_t n1) const {
        std::vector<T> v(n1, T(0));
        for (size_t i = 0; i < n1; ++i) v[i] = coeff(1u << i);
        return v;
    }
    Multivector reverse() const {
        Multivector r;
        for (const auto& [m, c] : t_) {
            int k = __builtin_popcount(m);
            r.t_.emplace(m, (k * (k - 1) / 2) % 2 ? T(-c) : c);
        }
        return r;
    }

    Multivector operator-() const {
        Multivector r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, T(-c));
        return r;
    }
    Multivector& operator+=(const Multivector& o) {
        for (const auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) { return *this += -o; }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const T& s, const Multivector& a) {
        Multivector r;
        for (const auto& [m, c] : a.t_) r.add(m, s * c);
        return r;
    }
    friend bool operator==(const Multivector& a, const Multivector& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

private:
    std::map<unsigned, T> t_;
};

using EpsMultivector = Multivector<EpsScalar>;
using RealMultivector = Multivector<double>;

// Blade masks ordered by grade, then lexicographically by index tuple.
inline bool blade_less(unsigned a, unsigned b) {
    int ga = __builtin_popcount(a), gb = __builtin_popcount(b);
    if (ga != gb) return ga < gb;
    for (; a && b; a &= a - 1, b &= b - 1) {
        int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
        if (ia != ib) return ia < ib;
    }
    return false;
}

inline std::string blade_key(unsigned m) {
    std::string s;
    for (; m; m &= m - 1) s += std::to_string(__builtin_ctz(m) + 1);
    return s;
}

inline std::string coeff_str(const EpsScalar& c) { return c.str(); }
inline std::string coeff_str(const Rational& c) { return c.get_str(); }
inline std::string coeff_str(double c) { return format_double(c, 12); }

template <class T>
std::string str(const Multivector<T>& m) {
    std::vector<unsigned> keys;
    for (const auto& [k, c] : m.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), blade_less);
    std::string s = "{";
    for (size_t i = 0; i < keys.size(); ++i) {
        if (i) s += ", ";
        s += blade_key(keys[i]) + ": " + coeff_str(m.coeff(keys[i]));
    }
    return s + "}";
}

// "{: 1, 12: -3/2, 134: 2}"; indices are single digits 1..9.
inline EpsMultivector parse_multivector(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw DomainError("multivector: expected {...}");
    s = s.substr(1, s.size() - 2);
    EpsMultivector m;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? s.size() : comma + 1;
        size_t colon = item.find(':');
        if (colon == std::string::npos) throw DomainError("multivector: missing ':' in '" + item + "'");
        unsigned mask = 0;
        int last = 0;
        for (char c : item.substr(0, colon)) {
            if (c < '1' || c > '9' || c - '0' <= last) throw DomainError("multivector: bad index in '" + item + "'");
            last = c - '0';
            mask |= 1u << (last - 1);
        }
        Rational q;
        if (q.set_str(item.substr(colon + 1), 10) != 0) throw DomainError("multivector: bad coefficient in '" + item + "'");
        q.canonicalize();
        if (m.coeff(mask) != EpsScalar()) throw DomainError("multivector: repeated blade in '" + item + "'");
        m.add(mask, EpsScalar(q));
    }
    return m;
}

// Diagonal of the eps-graded form, or of its level-0 part as doubles.
inline std::vector<EpsScalar> eps_metric(const CKStructure& ck) {
    std::vector<EpsScalar> g;
    for (size_t i = 0; i < ck.size(); ++i) g.push_back(ck.entry(i));
    return g;
}
inline std::vector<double> level0_metric(const CKStructure& ck) {
    std::vector<double> g;
    for (size_t i = 0; i < ck.size(); ++i) g.push_back(double(ck.level_sign(i, 0)));
    return g;
}

template <class T>
Multivector<T> exterior(const Multivector<T>& u, const Multivector<T>& v) {
    Multivector<T> r;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            if (a & b) continue;
            T c = ca * cb;
            r.add(a | b, detail::merge_sign(a, b) < 0 ? T(-c) : c);
        }
    return r;
}

// Blade product e_A e_B = sign * prod_{i in A&B} g_i * e_{A^B}. Extends the
// vector product associatively to all blades.
template <class T>
Multivector<T> geometric(const Multivector<T>& u, const Multivector<T>& v, const std::vector<T>& g) {
    Multivector<T> r;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            T c = ca * cb;
            for (unsigned common = a & b; common; common &= common - 1) c = c * g[size_t(__builtin_ctz(common))];
            if (c == T(0)) continue;
            // moving each factor of B leftwards past the larger indices of A, then cancelling pairs
            r.add(a ^ b, detail::merge_sign(a, b) < 0 ? T(-c) : c);
        }
    return r;
}

namespace detail {

// e_i [A] e_B with the alternating expansion over the factors of B.
template <class T>
Multivector<T> vector_inner_blade(int i, unsigned b, const T& coeff, const std::vector<T>& g) {
    Multivector<T> r;
    if (!(b & (1u << i))) return r;
    int pos = __builtin_popcount(b & ((1u << i) - 1)) + 1;
    T c = coeff * g[size_t(i)];
    if (__builtin_popcount(b) == 1) {
        r.add(0u, c);
        return r;
    }
    r.add(b & ~(1u << i), pos % 2 ? T(-c) : c);
    return r;
}

}  // namespace detail

// Extended inner product: a vector contracts by the alternating sum, a blade
// v1 v ... v vr contracts as v1 [A] (v2 [A] (... (vr [A] w))) times
// (-1)^(r-1+r(r-1)/2), so that (u1 v ... v ur) [A] (w1 v ... v wr) = det(ui [A] wj).
// Vector on vector is the form itself. Terms with grade(left) > grade(right) vanish.
template <class T>
Multivector<T> inner(const Multivector<T>& u, const Multivector<T>& v, const std::vector<T>& g) {
    Multivector<T> r;
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            if (__builtin_popcount(a) > __builtin_popcount(b)) continue;
            Multivector<T> w = Multivector<T>::blade(b, ca * cb);
            std::vector<int> idx;
            for (unsigned m = a; m; m &= m - 1) idx.push_back(__builtin_ctz(m));
            for (auto it = idx.rbegin(); it != idx.rend() && !w.is_zero(); ++it) {
                Multivector<T> next;
                for (const auto& [bm, c] : w.terms()) next += detail::vector_inner_blade(*it, bm, c, g);
                w = next;
            }
            const int k = int(idx.size());
            if (k > 1 && (k - 1 + k * (k - 1) / 2) % 2) w = -w;
            r += w;
        }
    }
    return r;
}

inline EpsMultivector lift(const Vec& v) { return EpsMultivector::vector(lift_eps(v)); }

inline EpsScalar vector_square(const EpsMultivector& v, const std::vector<EpsScalar>& g) {
    if (v.pure_grade() > 1) throw DomainError("vector_square: not a vector");
    return geometric(v, v, g).coeff(0u);
}

// v / v^2; v^2 must be a single eps power to stay polynomial.
inline EpsMultivector vector_inverse(const EpsMultivector& v, const std::vector<EpsScalar>& g) {
    EpsScalar v2 = vector_square(v, g);
    if (v2.is_zero()) throw DomainError("vector_inverse: null vector");
    if (!v2.is_monomial()) throw DomainError("vector_inverse: square " + v2.str() + " is not a monomial");
    EpsMultivector r;
    for (const auto& [m, c] : v.terms()) r.add(m, c.div_monomial(v2));
    return r;
}

inline RealMultivector vector_inverse(const RealMultivector& v, const std::vector<double>& g) {
    double v2 = geometric(v, v, g).coeff(0u);
    if (v2 == 0) throw DomainError("vector_inverse: null vector");
    return (1.0 / v2) * v;
}

namespace detail {

inline Point vector_point(const EpsMultivector& m, size_t n1) {
    if (m.pure_grade() > 1) throw DomainError("clifford: product is not a vector");
    return project_lowest(m.vector_part(n1));
}

}  // namespace detail

// R(r q r^-1), computed as R(r q r) since r^-1 is a scalar multiple of r.
inline Point sandwich_reflect(const CKStructure& ck, const Point& r, const Point& q) {
    auto g = eps_metric(ck);
    EpsMultivector rm = lift(r.v());
    if (vector_square(rm, g).is_zero()) throw DomainError("sandwich_reflect: isotropic mirror");
    return detail::vector_point(geometric(geometric(rm, lift(q.v()), g), rm, g), ck.size());
}

// s r, the versor of the reflection in r followed by the reflection in s.
inline EpsMultivector rotor(const CKStructure& ck, const Point& s, const Point& r) {
    auto g = eps_metric(ck);
    EpsMultivector sm = lift(s.v()), rm = lift(r.v());
    if (vector_square(sm, g).is_zero() || vector_square(rm, g).is_zero())
        throw DomainError("rotor: isotropic mirror");
    return geometric(sm, rm, g);
}

// R(X q X~); the reverse differs from the inverse by a scalar.
inline Point rotor_apply(const CKStructure& ck, const EpsMultivector& x, const Point& q) {
    auto g = eps_metric(ck);
    return detail::vector_point(geometric(geometric(x, lift(q.v()), g), x.reverse(), g), ck.size());
}

// Closed-form exponential of a double reflection at level 0.
struct RotorForm {
    LineType kind = LineType::elliptic;
    int tr_inv_square = 0;       // (t r^-1)^2 in {-1, 0, 1}
    double param = 0;            // dtilde, d, or the parabolic coefficient
    RealMultivector rotor;       // s r with normalized mirrors
    RealMultivector closed;      // +-r^2 exp(param t r^-1) in closed form
    Vec t;                       // antipode direction before normalization
    bool matches = false;        // rotor == +-closed
};

inline RotorForm rotor_exponential_form(const CKStructure& ck, const Point& r, const Point& s, double tol = 1e-9) {
    const size_t n1 = ck.size();
    Vec rv = r.v(), sv = s.v();
    Rational rr = gram_level(ck, 0, rv, rv), ss = gram_level(ck, 0, sv, sv), rs = gram_level(ck, 0, rv, sv);
    if (rr == 0 || ss == 0) throw DomainError("rotor_exponential_form: mirror is isotropic at level 0");
    if (r == s) throw DomainError("rotor_exponential_form: mirrors coincide");
    RotorForm out;
    // t lies on R v S with t [A] r = 0
    out.t = axpy(rr, sv, -rs, rv);
    Rational tt = gram_level(ck, 0, out.t, out.t);
    out.tr_inv_square = -sign(tt) * sign(rr);
    if (out.tr_inv_square == 0 && !is_zero(out.t) && sign(rr) != sign(ss))
        throw DomainError("rotor_exponential_form: parabolic mirrors of opposite sign");
    if (out.tr_inv_square == 1 && sign(rr) != sign(ss))
        throw DomainError("rotor_exponential_form: hyperbolic mirrors on opposite components");

    auto g = level0_metric(ck);
    auto dbl = [&](const Vec& v, double scale) {
        std::vector<double> d;
        for (const auto& x : v) d.push_back(to_double(x) * scale);
        return d;
    };
    const double r2 = sign(rr);
    std::vector<double> rn = dbl(rv, 1.0 / std::sqrt(std::abs(to_double(rr))));
    std::vector<double> sn = dbl(sv, 1.0 / std::sqrt(std::abs(to_double(ss))));
    // s = c r + t', sign of s fixed so that c >= 0
    double c = to_double(rs) / std::sqrt(std::abs(to_double(rr) * to_double(ss))) * r2;
    if (c < 0) {
        for (auto& x : sn) x = -x;
        c = -c;
    }
    std::vector<double> tp(n1);
    for (size_t i = 0; i < n1; ++i) tp[i] = sn[i] - c * rn[i];
    double tnorm = 0;
    if (out.tr_inv_square == 0) {
        for (double x : tp) tnorm = std::max(tnorm, std::abs(x));
        out.kind = LineType::parabolic;
        out.param = tnorm;
    } else {
        double t2 = 0;
        for (size_t i = 0; i < n1; ++i) t2 += g[i] * tp[i] * tp[i];
        tnorm = std::sqrt(std::abs(t2));
        if (out.tr_inv_square < 0) {
            out.kind = LineType::elliptic;
            out.param = std::atan2(tnorm, c);
        } else {
            out.kind = LineType::hyperbolic;
            out.param = std::asinh(tnorm);
        }
    }
    std::vector<double> tu(n1);
    for (size_t i = 0; i < n1; ++i) tu[i] = tnorm == 0 ? 0 : tp[i] / tnorm;

    RealMultivector rm = RealMultivector::vector(rn), sm = RealMultivector::vector(sn);
    out.rotor = geometric(sm, rm, g);
    RealMultivector b = geometric(RealMultivector::vector(tu), vector_inverse(rm, g), g);
    double a0 = 1, a1 = out.param;
    if (out.kind == LineType::elliptic) {
        a0 = std::cos(out.param);
        a1 = std::sin(out.param);
    } else if (out.kind == LineType::hyperbolic) {
        a0 = std::cosh(out.param);
        a1 = std::sinh(out.param);
    }
    out.closed = r2 * (RealMultivector(a0) + a1 * b);
    auto close = [&](const RealMultivector& x, const RealMultivector& y) {
        RealMultivector d = x - y;
        for (const auto& [m, v] : d.terms())
            if (std::abs(v) > tol) return false;
        return true;
    };
    out.matches = close(out.rotor, out.closed) || close(out.rotor, -out.closed);
    return out;
}

// Plücker coordinates of a pure-grade multivector with rational coefficients.
inline Flat to_flat(const EpsMultivector& m, int ambient) {
    int k = m.pure_grade();
    if (k < 0) throw DomainError("to_flat: mixed grades");
    const auto& tab = detail::subsets(ambient, k);
    Vec pl(tab.masks.size(), Rational(0));
    for (const auto& [mask, c] : m.terms()) {
        if (c.is_zero()) continue;
        if (c.min_degree() != 0 || !c.is_monomial()) throw DomainError("to_flat: coefficient is not rational");
        pl[tab.index.at(mask)] = c.lead();
    }
    return Flat(ambient, k, pl);
}

}  // namespace ckgeom
