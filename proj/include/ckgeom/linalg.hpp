#pragma once

#include "scalar.hpp"

#include <vector>

namespace ckgeom {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

template <class T>
using MatT = std::vector<std::vector<T>>;

// Determinant over a commutative ring, by expansion over column subsets.
// Cost is O(2^n n); fine for the small sizes used here.
template <class T>
T det(const MatT<T>& m) {
    const size_t n = m.size();
    if (n == 0) return T(1);
    std::vector<T> dp(size_t(1) << n, T(0));
    dp[0] = T(1);
    for (size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] == T(0)) continue;
        int row = __builtin_popcountll(mask);
        if (row == int(n)) continue;
        int above = 0;
        for (int c = int(n) - 1; c >= 0; --c) {
            if (mask & (size_t(1) << c)) {
                ++above;
                continue;
            }
            if (m[row][c] == T(0)) continue;
            T term = dp[mask] * m[row][c];
            // sign from the number of chosen columns to the right of c
            if (above % 2) term = -term;
            dp[mask | (size_t(1) << c)] += term;
        }
    }
    return dp.back();
}

inline Vec operator*(const Mat& a, const Vec& x) {
    Vec r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    Mat r(a.size(), Vec(b.empty() ? 0 : b[0].size(), Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(Mat& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    const size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(Mat a) { return rref(a).size(); }

// Basis of {x : a x = 0}; cols is needed when a has no rows.
inline std::vector<Vec> nullspace(Mat a, size_t cols) {
    std::vector<Vec> out;
    if (a.empty()) {
        for (size_t i = 0; i < cols; ++i) {
            Vec e(cols, Rational(0));
            e[i] = 1;
            out.push_back(e);
        }
        return out;
    }
    auto piv = rref(a);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(cols, Rational(0));
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        out.push_back(v);
    }
    return out;
}

// Unique solution of a x = b, or nullopt.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
    const size_t n = a.empty() ? 0 : a[0].size();
    Mat aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto piv = rref(aug);
    if (piv.size() != n) return std::nullopt;
    for (size_t i = n; i < aug.size(); ++i)
        if (aug[i][n] != 0) return std::nullopt;
    Vec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

// Some solution of a x = b (free variables zero), or nullopt.
inline std::optional<Vec> solve_any(const Mat& a, const Vec& b, size_t n) {
    Mat aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    Vec x(n, Rational(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][n];
    return x;
}

inline std::optional<Mat> inverse(const Mat& a) {
    const size_t n = a.size();
    Mat aug = a;
    for (size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
    Mat inv(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec axpy(const Rational& a, const Vec& x, const Rational& b, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
    return r;
}

inline std::string str(const Vec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].get_str();
    return s;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Coefficients c with sum c_i basis_i = v, or nullopt when v is outside the span.
inline std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(transpose(basis), v);
}

}  // namespace ckgeom
