#pragma once

#include "clifford.hpp"

#include <fstream>

namespace ckgeom {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& what)
        : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + what), line(l), column(c) {}
};

// Accepts the unicode minus sign as well as '-'.
inline std::string ascii_minus(std::string s) {
    for (size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
    return s;
}

inline std::optional<Rational> parse_rational(std::string s) {
    s = ascii_minus(s);
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) return std::nullopt;
    if (s[0] == '+') s = s.substr(1);
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline std::optional<Vec> parse_coordinates(const std::string& text) {
    Vec v;
    std::string cur;
    std::istringstream is(ascii_minus(text));
    while (std::getline(is, cur, ':')) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        auto q = parse_rational(cur);
        if (!q) return std::nullopt;
        v.push_back(*q);
    }
    if (v.empty()) return std::nullopt;
    return v;
}

// Input document:
//   space: +@0 +@1 ...
//   point A = 1:0:-1/2
//   flat L = join(A, B)
//   simplex S = A B C
//   distances T = 1 1 2          (d12 d13 ... d23 ...; eps-coefficients, rho = 1)
//   multivector X = {: 1, 12: -3/2}
struct Document {
    std::optional<CKStructure> space;
    std::map<std::string, Point> points;
    std::map<std::string, Flat> flats;
    std::map<std::string, std::vector<Point>> simplices;
    std::map<std::string, Mat> distances;
    std::map<std::string, EpsMultivector> multivectors;
    std::vector<std::string> order;  // declaration order of all names

    bool has(const std::string& name) const {
        return points.count(name) || flats.count(name) || simplices.count(name) || distances.count(name) ||
               multivectors.count(name);
    }
    const CKStructure& ck() const {
        if (!space) throw DomainError("no space given");
        return *space;
    }
    const Point& point(const std::string& name) const {
        auto it = points.find(name);
        if (it == points.end()) throw DomainError("unknown point '" + name + "'");
        return it->second;
    }
    // A point name is promoted to a grade-1 flat.
    Flat flat(const std::string& name) const {
        auto it = flats.find(name);
        if (it != flats.end()) return it->second;
        return Flat::from_point(point(name));
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

inline bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

}  // namespace detail

inline Document parse_document(std::istream& in, bool semi = false, const std::optional<CKStructure>& space = {}) {
    Document doc;
    doc.space = space;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        const int indent = int(line.find_first_not_of(" \t")) + 1;
        line = detail::trim(line);
        if (line.empty()) continue;
        auto fail = [&](int col, const std::string& msg) { throw ParseError(lineno, col, msg); };

        if (line.rfind("space:", 0) == 0) {
            if (doc.space && !space) fail(indent, "space given twice");
            try {
                if (!space) doc.space = CKStructure::parse(line.substr(6), semi);
            } catch (const DomainError& e) {
                fail(indent + 6, e.what());
            }
            continue;
        }
        size_t sp = line.find_first_of(" \t");
        size_t eq = line.find('=');
        if (sp == std::string::npos || eq == std::string::npos || eq < sp) fail(indent, "expected '<kind> <name> = ...'");
        std::string kind = line.substr(0, sp);
        std::string name = detail::trim(line.substr(sp, eq - sp));
        std::string rhs = detail::trim(line.substr(eq + 1));
        const int rhs_col = indent + int(line.find_first_not_of(" \t", eq + 1));
        if (!detail::valid_name(name)) fail(indent + int(sp) + 1, "bad name '" + name + "'");
        if (doc.has(name)) fail(indent + int(sp) + 1, "name '" + name + "' declared twice");
        auto need_space = [&]() -> const CKStructure& {
            if (!doc.space) fail(indent, "'space:' must come first");
            return *doc.space;
        };
        auto lookup = [&](const std::string& n) -> const Point& {
            auto it = doc.points.find(n);
            if (it == doc.points.end()) fail(rhs_col, "unknown point '" + n + "'");
            return it->second;
        };

        try {
            if (kind == "point") {
                auto v = parse_coordinates(rhs);
                if (!v) fail(rhs_col, "bad coordinates '" + rhs + "'");
                if (v->size() != need_space().size())
                    fail(rhs_col, "point has " + std::to_string(v->size()) + " coordinates, space has " +
                                      std::to_string(doc.space->size()));
                if (is_zero(*v)) fail(rhs_col, "zero vector is not a point");
                doc.points.emplace(name, Point(*v));
            } else if (kind == "flat") {
                need_space();
                if (rhs.rfind("join(", 0) != 0 || rhs.back() != ')') fail(rhs_col, "expected join(p, q, ...)");
                std::string args = rhs.substr(5, rhs.size() - 6);
                for (char& c : args)
                    if (c == ',') c = ' ';
                std::vector<Point> ps;
                for (const auto& a : detail::split_ws(args)) ps.push_back(lookup(a));
                if (ps.empty()) fail(rhs_col, "join() needs points");
                Flat f = join_points(ps);
                if (f.is_zero()) fail(rhs_col, "dependent points in join");
                doc.flats.emplace(name, f);
            } else if (kind == "simplex") {
                need_space();
                std::vector<Point> ps;
                for (const auto& a : detail::split_ws(rhs)) ps.push_back(lookup(a));
                if (ps.size() < 2) fail(rhs_col, "simplex needs at least two points");
                doc.simplices.emplace(name, ps);
            } else if (kind == "distances") {
                auto toks = detail::split_ws(rhs);
                size_t s1 = 2;
                while (s1 * (s1 - 1) / 2 < toks.size()) ++s1;
                if (s1 * (s1 - 1) / 2 != toks.size()) fail(rhs_col, "distance count is not n(n+1)/2");
                Mat d(s1, Vec(s1, Rational(0)));
                size_t t = 0;
                for (size_t i = 0; i < s1; ++i)
                    for (size_t j = i + 1; j < s1; ++j, ++t) {
                        auto q = parse_rational(toks[t]);
                        if (!q) fail(rhs_col, "bad distance '" + toks[t] + "'");
                        d[i][j] = d[j][i] = *q;
                    }
                doc.distances.emplace(name, d);
            } else if (kind == "multivector") {
                doc.multivectors.emplace(name, parse_multivector(rhs));
            } else {
                fail(indent, "unknown declaration '" + kind + "'");
            }
        } catch (const DomainError& e) {
            fail(rhs_col, e.what());
        }
        doc.order.push_back(name);
    }
    return doc;
}

inline Document parse_document(const std::string& text, bool semi = false, const std::optional<CKStructure>& space = {}) {
    std::istringstream is(text);
    return parse_document(is, semi, space);
}

}  // namespace ckgeom
