#pragma once

#include "linalg.hpp"

namespace ckgeom {

// a + b*sqrt(k) with a fixed rational radicand k.
struct QuadScalar {
    Rational a = 0, b = 0, k = 0;

    QuadScalar() = default;
    QuadScalar(Rational a_, Rational b_, Rational k_) : a(std::move(a_)), b(std::move(b_)), k(std::move(k_)) {}

    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
        return {x.a + y.a, x.b + y.b, x.k == 0 ? y.k : x.k};
    }
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
        return {x.a - y.a, x.b - y.b, x.k == 0 ? y.k : x.k};
    }
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
        Rational k = x.k == 0 ? y.k : x.k;
        return {x.a * y.a + x.b * y.b * k, x.a * y.b + x.b * y.a, k};
    }
    friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return x.a == y.a && x.b == y.b; }
    double value() const { return to_double(a) + to_double(b) * std::sqrt(to_double(k)); }
    std::string str() const {
        if (b == 0) return a.get_str();
        return a.get_str() + (b < 0 ? " - " : " + ") + Rational(abs(b)).get_str() + "*sqrt(" + k.get_str() + ")";
    }
};

using QuadVec = std::vector<QuadScalar>;

inline QuadVec lift(const Vec& v, const Rational& k) {
    QuadVec r;
    for (const auto& x : v) r.push_back({x, 0, k});
    return r;
}

inline std::string str(const QuadVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " : " : "") + v[i].str();
    return s;
}

// Rational square root when k is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& k) {
    if (k < 0) return std::nullopt;
    mpz_class n = k.get_num(), d = k.get_den();
    mpz_class rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace ckgeom
