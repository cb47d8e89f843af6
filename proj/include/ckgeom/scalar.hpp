#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ckgeom {

using Rational = mpq_class;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

// Formal Laurent polynomial in eps with rational coefficients.
// Terms are kept sorted by degree with no zero coefficients.
class EpsScalar {
public:
    static constexpr int kDefaultWindow = 96;

    EpsScalar() = default;
    EpsScalar(const Rational& c) {
        if (c != 0) terms_.emplace_back(0, c);
    }
    EpsScalar(long c) : EpsScalar(Rational(c)) {}

    static EpsScalar monomial(const Rational& c, int degree) {
        EpsScalar e;
        check_window(degree);
        if (c != 0) e.terms_.emplace_back(degree, c);
        return e;
    }
    static EpsScalar eps(int degree = 1) { return monomial(Rational(1), degree); }

    static int& window() {
        static int w = kDefaultWindow;
        return w;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }

    int min_degree() const {
        if (is_zero()) throw DomainError("min_degree of zero EpsScalar");
        return terms_.front().first;
    }
    const Rational& lead() const {
        if (is_zero()) throw DomainError("lead of zero EpsScalar");
        return terms_.front().second;
    }
    Rational coeff(int degree) const {
        for (const auto& [d, c] : terms_)
            if (d == degree) return c;
        return Rational(0);
    }
    // Leading term only.
    EpsScalar leading_term() const {
        if (is_zero()) return {};
        return monomial(lead(), min_degree());
    }
    int lead_sign() const { return is_zero() ? 0 : sgn(lead()); }

    EpsScalar operator-() const {
        EpsScalar r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    EpsScalar& operator+=(const EpsScalar& o) {
        std::vector<std::pair<int, Rational>> out;
        out.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
                out.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
                out.push_back(o.terms_[j++]);
            } else {
                Rational c = terms_[i].second + o.terms_[j].second;
                if (c != 0) out.emplace_back(terms_[i].first, c);
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
        return *this;
    }
    EpsScalar& operator-=(const EpsScalar& o) { return *this += -o; }
    EpsScalar& operator*=(const EpsScalar& o) {
        *this = *this * o;
        return *this;
    }

    friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
    friend EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
    friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
        EpsScalar r;
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<std::pair<int, Rational>> acc;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) acc.emplace_back(da + db, ca * cb);
        std::stable_sort(acc.begin(), acc.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& t : acc) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first)
                r.terms_.back().second += t.second;
            else
                r.terms_.push_back(std::move(t));
        }
        r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                      [](const auto& t) { return t.second == 0; }),
                       r.terms_.end());
        for (const auto& t : r.terms_) check_window(t.first);
        return r;
    }
    friend bool operator==(const EpsScalar& a, const EpsScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const EpsScalar& a, const EpsScalar& b) { return !(a == b); }

    // Exact division; the divisor must be a unit of the Laurent ring (a monomial).
    EpsScalar div_monomial(const EpsScalar& m) const {
        if (!m.is_monomial()) throw DomainError("division by a non-monomial EpsScalar");
        EpsScalar r;
        for (const auto& [d, c] : terms_) {
            check_window(d - m.min_degree());
            r.terms_.emplace_back(d - m.min_degree(), c / m.lead());
        }
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            Rational a = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (d == 0)
                os << a.get_str();
            else
                os << a.get_str() << "*e^" << d;
        }
        return os.str();
    }

private:
    static void check_window(int degree) {
        if (degree > window() || degree < -window())
            throw DomainError("EpsScalar degree " + std::to_string(degree) + " outside window");
    }
    std::vector<std::pair<int, Rational>> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const EpsScalar& e) { return os << e.str(); }

// Leading term of num/den.
inline EpsScalar star_eps(const EpsScalar& num, const EpsScalar& den) {
    if (den.is_zero()) throw DomainError("star_eps: zero denominator");
    if (num.is_zero()) return {};
    return EpsScalar::monomial(num.lead() / den.lead(), num.min_degree() - den.min_degree());
}

// Extended complex distance re + im*i. The imaginary part keeps an exact
// multiple of pi when one is known.
struct CDist {
    double re = 0.0;
    double im = 0.0;
    std::optional<Rational> im_pi;

    static CDist exact(double re, const Rational& pi_multiple) {
        return {re, to_double(pi_multiple) * M_PI, pi_multiple};
    }
    static CDist approx(double re, double im) { return {re, im, std::nullopt}; }

    std::string str(int digits = 12) const;
};

inline bool im_less(const CDist& x, const CDist& y) {
    if (x.im_pi && y.im_pi) return *x.im_pi < *y.im_pi;
    return x.im < y.im;
}
inline bool im_equal(const CDist& x, const CDist& y) {
    if (x.im_pi && y.im_pi) return *x.im_pi == *y.im_pi;
    return x.im == y.im;
}

inline bool cdist_less(const CDist& x, const CDist& y) {
    if (im_less(x, y)) return true;
    if (im_less(y, x)) return false;
    return x.re < y.re;
}

// pi*i - x
inline CDist complement(const CDist& x) {
    CDist r;
    r.re = -x.re;
    if (x.im_pi) {
        r.im_pi = Rational(1) - *x.im_pi;
        r.im = to_double(*r.im_pi) * M_PI;
    } else {
        r.im = M_PI - x.im;
    }
    return r;
}

// Fixed-point rendering with round-half-even at the given digit count.
inline std::string format_double(double v, int digits) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    std::fesetround(FE_TONEAREST);
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    std::string s = os.str();
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

inline std::string CDist::str(int digits) const {
    std::string b = im_pi ? im_pi->get_str() : format_double(im / M_PI, digits);
    return format_double(re, digits) + " + " + b + "*pi*i";
}

}  // namespace ckgeom
