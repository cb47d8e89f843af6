#pragma once

#include "ckgeom/ckgeom.hpp"

#include <cstdlib>
#include <random>

namespace ckgeom::testing {

// Seed from CKGEOM_SEED when set, so failures can be replayed.
inline std::uint64_t base_seed() {
    const char* s = std::getenv("CKGEOM_SEED");
    return s ? std::stoull(s) : 20240517u;
}

class Gen {
public:
    explicit Gen(std::uint64_t salt = 0) : rng_(base_seed() * 1000003u + salt) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Rational rational(int lim = 6) {
        int den = integer(1, lim);
        return make_rational(integer(-lim, lim), den);
    }
    Rational nonzero(int lim = 6) {
        Rational r;
        do r = rational(lim);
        while (r == 0);
        return r;
    }
    Vec vec(size_t n, int lim = 6) {
        Vec v;
        do {
            v.clear();
            for (size_t i = 0; i < n; ++i) v.push_back(rational(lim));
        } while (is_zero(v));
        return v;
    }
    Point point(size_t n, int lim = 6) { return Point(vec(n, lim)); }
    EpsScalar eps(int terms = 3, int lo = -2, int hi = 4) {
        EpsScalar e;
        for (int i = 0; i < terms; ++i) e += EpsScalar::monomial(rational(), integer(lo, hi));
        return e;
    }
    Mat invertible(size_t n) {
        for (;;) {
            Mat m(n, Vec(n));
            for (auto& r : m)
                for (auto& x : r) x = Rational(integer(-4, 4));
            if (rank(m) == n) return m;
        }
    }
    // Point with gram(p,p) = sign * square in diag(1,...,1,sign_last):
    // sign +1 elliptic sphere points, sign -1 points of the hyperboloid sheet.
    Point rational_unit(size_t n1, int metric_last) {
        for (;;) {
            Vec t;
            for (size_t i = 0; i + 1 < n1; ++i) t.push_back(rational(5));
            Rational s = 0;
            for (const auto& x : t) s += x * x;
            Vec v;
            for (const auto& x : t) v.push_back(2 * x);
            if (metric_last > 0) {
                v.push_back(1 - s);  // |v|^2 = (1+s)^2
            } else {
                if (s >= 1) continue;
                v.push_back(1 + s);  // x^2 - z^2 = -(1-s)^2
            }
            if (!is_zero(v)) return Point(v);
        }
    }
    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<double> to_doubles(const Vec& v) {
    std::vector<double> r;
    for (const auto& x : v) r.push_back(to_double(x));
    return r;
}

}  // namespace ckgeom::testing
