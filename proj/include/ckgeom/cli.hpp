#pragma once

#include "io.hpp"
#include "quadrics.hpp"
#include "simplex.hpp"

#include <functional>
#include <random>

namespace ckgeom {

// Bad command-line usage: unknown names, wrong operand counts.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { classify, quadrance, distance, reflect, centers, perpendiculars, sphere, clifford_check };

inline std::optional<Command> parse_command(const std::string& s) {
    static const std::map<std::string, Command> names{
        {"classify", Command::classify},   {"quadrance", Command::quadrance},
        {"distance", Command::distance},   {"reflect", Command::reflect},
        {"centers", Command::centers},     {"perpendiculars", Command::perpendiculars},
        {"sphere", Command::sphere},       {"clifford-check", Command::clifford_check}};
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

enum class Format { text, tsv };

struct Job {
    Command command = Command::classify;
    Document doc;
    std::vector<std::string> operands;
    std::optional<int> digits;  // set: rationals are rendered as decimals too
    Format format = Format::text;
    std::uint64_t seed = 1;
};

struct Report {
    int status = 0;
    std::vector<std::pair<std::string, std::string>> rows;
    std::string error;

    void add(const std::string& k, const std::string& v) { rows.emplace_back(k, v); }
};

inline std::string render(const Report& r, Format f) {
    std::string out;
    for (const auto& [k, v] : r.rows) out += k + (f == Format::tsv ? "\t" : ": ") + v + "\n";
    return out;
}

namespace detail {

struct Fmt {
    std::optional<int> digits;
    int places() const { return digits.value_or(12); }
    std::string q(const Rational& x) const { return digits ? format_double(to_double(x), *digits) : x.get_str(); }
    std::string d(double x) const { return format_double(x, places()); }
    std::string eps(const EpsScalar& x) const {
        if (!digits || (!x.is_zero() && (x.min_degree() != 0 || !x.is_monomial()))) return x.str();
        return q(x.coeff(0));
    }
    std::string cdist(const CDist& c) const { return c.str(places()); }
    std::string point(const Point& p) const { return p.canonical_str(); }
    std::string bary(const Vec& v) const {
        return v.size() && !is_zero(v) ? Point(v).canonical_str() : str(v);
    }
    std::string reals(const std::vector<double>& v) const {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + d(v[i]);
        return s;
    }
};

inline void want(const Job& job, size_t lo, size_t hi, const char* usage) {
    if (job.operands.size() < lo || job.operands.size() > hi) throw UsageError(std::string("usage: ") + usage);
}

inline void check_name(const Document& doc, const std::string& n) {
    if (!doc.has(n)) throw UsageError("unknown name '" + n + "'");
}

inline std::vector<Point> points_of(const Job& job, size_t first = 0) {
    std::vector<Point> ps;
    for (size_t i = first; i < job.operands.size(); ++i) {
        check_name(job.doc, job.operands[i]);
        ps.push_back(job.doc.point(job.operands[i]));
    }
    return ps;
}

// Evaluates one report row; domain failures become "undefined (...)".
inline void row(Report& r, const std::string& key, const std::function<std::string()>& f) {
    try {
        r.add(key, f());
    } catch (const DomainError& e) {
        r.add(key, std::string("undefined (") + e.what() + ")");
    }
}

inline void run_classify(const Job& job, Report& r) {
    const auto& ck = job.doc.ck();
    std::vector<std::string> names = job.operands;
    if (names.empty())
        for (const auto& n : job.doc.order)
            if (job.doc.points.count(n) || job.doc.flats.count(n)) names.push_back(n);
    for (const auto& n : names) {
        check_name(job.doc, n);
        if (job.doc.points.count(n)) {
            r.add(n, classify_point(ck, job.doc.point(n)).str());
        } else if (job.doc.flats.count(n)) {
            Flat f = job.doc.flat(n);
            FlatClass c = classify_flat(ck, f);
            std::string s = c.isotropic ? "isotropic" : "anisotropic";
            if (c.light) s += ", light plane";
            if (f.grade() == 2) s += ", " + to_string(classify_line(ck, f)) + " line";
            r.add(n, s);
        } else {
            throw UsageError("classify: '" + n + "' is not a point or flat");
        }
    }
}

inline void run_quadrance(const Job& job, Report& r, const Fmt& fmt) {
    want(job, 2, 2, "quadrance A B");
    const auto& ck = job.doc.ck();
    const auto &a = job.operands[0], &b = job.operands[1];
    check_name(job.doc, a);
    check_name(job.doc, b);
    if (job.doc.points.count(a) && job.doc.points.count(b)) {
        r.add("xi", fmt.eps(quadrance_points(ck, job.doc.point(a), job.doc.point(b))));
        return;
    }
    FlatQuadrance q = quadrance_flats(ck, job.doc.flat(a), job.doc.flat(b));
    r.add("xi", fmt.eps(q.xi));
    r.add("zeta", fmt.eps(q.zeta));
}

inline void run_distance(const Job& job, Report& r, const Fmt& fmt) {
    want(job, 2, 2, "distance P Q");
    const auto& ck = job.doc.ck();
    auto ps = points_of(job);
    r.add("xi", fmt.eps(quadrance_points(ck, ps[0], ps[1])));
    SegmentLengths s = segment_lengths(ck, ps[0], ps[1]);
    r.add("mu+", fmt.cdist(s.plus));
    r.add("mu-", fmt.cdist(s.minus));
    r.add("d0", fmt.cdist(gross_distance(ck, ps[0], ps[1])));
}

inline void run_reflect(const Job& job, Report& r) {
    want(job, 2, 64, "reflect MIRROR Q...");
    const auto& ck = job.doc.ck();
    const std::string& m = job.operands[0];
    check_name(job.doc, m);
    auto qs = points_of(job, 1);
    for (size_t i = 0; i < qs.size(); ++i) {
        Point img = job.doc.points.count(m) ? reflect_point(ck, job.doc.point(m), qs[i])
                                            : reflect_in_flat(ck, job.doc.flat(m), qs[i]);
        r.add(job.operands[i + 1] + "'", img.canonical_str());
    }
}

inline void run_centers_distances(const Mat& dm, Report& r, const Fmt& fmt) {
    auto d = eps_distances(dm);
    r.add("G", fmt.bary(Vec(d.size(), Rational(1))));
    row(r, "O", [&] { return fmt.bary(affine_circumcenter(d)); });
    row(r, "I", [&] {
        auto in = affine_incenter(d);
        return in.center.exact ? fmt.bary(*in.center.exact) : fmt.reals(in.center.bary);
    });
    row(r, "H", [&] { return fmt.bary(monge_point(d)); });
    row(r, "R^2", [&] { return affine_circumradius(d).str(); });
}

inline void run_centers(const Job& job, Report& r, const Fmt& fmt) {
    want(job, 1, 1, "centers SIMPLEX");
    const std::string& n = job.operands[0];
    check_name(job.doc, n);
    if (auto it = job.doc.distances.find(n); it != job.doc.distances.end()) {
        run_centers_distances(it->second, r, fmt);
        return;
    }
    auto it = job.doc.simplices.find(n);
    if (it == job.doc.simplices.end()) throw UsageError("centers: '" + n + "' is not a simplex");
    const auto& ck = job.doc.ck();
    bool affine = true;
    try {
        require_metric_affine(ck);
    } catch (const DomainError&) {
        affine = false;
    }
    if (affine) {
        AffineSimplex sx = make_affine_simplex(ck, it->second);
        if (ck.rho() == 1) {
            MatT<EpsScalar> d = sx.dmatrix();
            Mat coeff(d.size(), Vec(d.size(), Rational(0)));
            for (size_t i = 0; i < d.size(); ++i)
                for (size_t j = 0; j < d.size(); ++j) coeff[i][j] = d[i][j].coeff(1);
            run_centers_distances(coeff, r, fmt);
            return;
        }
        r.add("G", fmt.bary(centroid(sx)));
        row(r, "O", [&] { return fmt.bary(affine_circumcenter(sx)); });
        row(r, "I", [&] {
            auto in = affine_incenter(sx);
            return in.center.exact ? fmt.bary(*in.center.exact) : fmt.reals(in.center.bary);
        });
        return;
    }
    Simplex sx = make_simplex(ck, it->second);
    r.add("G", fmt.bary(centroid(sx)));
    row(r, "O", [&] { return fmt.bary(circumcenter(sx)); });
    row(r, "tanh^2 R", [&] { return fmt.q(circumradius_tanh2(sx)); });
    row(r, "I", [&] {
        auto in = incenter(sx);
        return in.exact ? fmt.bary(*in.exact) : fmt.reals(in.bary);
    });
    row(r, "H", [&] {
        Orthocenter h = orthocenter(sx);
        if (h.undetermined) throw DomainError("a vertex lies in the polar of its facet");
        if (h.perspective.status != PerspectiveStatus::unique || !h.perspective.center)
            throw DomainError("pedal simplex is not perspective");
        return fmt.point(*h.perspective.center);
    });
}

inline void run_perpendiculars(const Job& job, Report& r, const Fmt& fmt) {
    const auto& ck = job.doc.ck();
    std::vector<Point> ps;
    if (job.operands.size() == 2) {
        for (const auto& n : job.operands) {
            check_name(job.doc, n);
            auto b = basis_points(job.doc.flat(n));
            if (b.size() != 2) throw UsageError("perpendiculars: '" + n + "' is not a line");
            ps.insert(ps.end(), b.begin(), b.end());
        }
    } else {
        want(job, 4, 4, "perpendiculars L1 L2 | perpendiculars P1 P2 P3 P4");
        ps = points_of(job);
    }
    CommonPerpendiculars c = common_perpendiculars(ck, ps[0], ps[1], ps[2], ps[3]);
    r.add("Q1", fmt.reals(c.q1));
    r.add("R1", fmt.reals(c.r1));
    r.add("Q2", fmt.reals(c.q2));
    r.add("R2", fmt.reals(c.r2));
    r.add("cosh^2 1", fmt.d(c.cosh2_1));
    r.add("cosh^2 2", fmt.d(c.cosh2_2));
    r.add("w", fmt.q(c.w));
    r.add("zeta", fmt.q(c.zeta));
    r.add("product", c.product_ok ? "ok" : "mismatch");
}

inline void run_sphere(const Job& job, Report& r, const Fmt& fmt) {
    want(job, 2, 2, "sphere CENTER (THROUGH | COSH2)");
    const auto& ck = job.doc.ck();
    check_name(job.doc, job.operands[0]);
    Vec m = job.doc.point(job.operands[0]).v();
    std::vector<Point> frame;
    for (size_t i = 0; i < ck.size(); ++i) frame.push_back(unit_point(ck.size(), i));
    QuadricForm q;
    if (auto c = parse_rational(job.operands[1])) {
        q = sphere_with_center_radius(ck, frame, m, *c);
    } else {
        check_name(job.doc, job.operands[1]);
        q = sphere_through_point(ck, frame, m, job.doc.point(job.operands[1]).v());
    }
    for (size_t i = 0; i < q.n.size(); ++i) {
        std::string s;
        for (size_t j = 0; j < q.n[i].size(); ++j) s += (j ? " " : "") + fmt.q(q.n[i][j]);
        r.add("K" + std::to_string(i + 1), s);
    }
    for (const auto& n : job.doc.order)
        if (job.doc.points.count(n)) {
            const Vec& v = job.doc.point(n).v();
            std::string s = q.contains(v) ? "on" : "off";
            if (is_symmetry_point(ck, q, v)) s += ", symmetry point";
            r.add(n, s);
        }
}

inline void run_clifford(const Job& job, Report& r, const Fmt&) {
    const auto& ck = job.doc.ck();
    auto g = eps_metric(ck);
    if (!job.operands.empty()) {
        want(job, 2, 2, "clifford-check [A B]");
        auto mv = [&](const std::string& n) {
            check_name(job.doc, n);
            auto it = job.doc.multivectors.find(n);
            return it != job.doc.multivectors.end() ? it->second : lift(job.doc.point(n).v());
        };
        EpsMultivector a = mv(job.operands[0]), b = mv(job.operands[1]);
        r.add("exterior", str(exterior(a, b)));
        r.add("inner", str(inner(a, b, g)));
        r.add("geometric", str(geometric(a, b, g)));
        return;
    }
    std::mt19937_64 rng(job.seed);
    std::uniform_int_distribution<int> coord(-5, 5);
    auto rand_vec = [&] {
        Vec v;
        do {
            v.clear();
            for (size_t i = 0; i < ck.size(); ++i) v.emplace_back(coord(rng));
        } while (is_zero(v));
        return v;
    };
    const int trials = 200;
    int assoc = 0, sym = 0, sandwich = 0, sandwich_n = 0;
    for (int t = 0; t < trials; ++t) {
        Vec u = rand_vec(), v = rand_vec(), w = rand_vec();
        EpsMultivector a = lift(u), b = lift(v), c = lift(w);
        if (geometric(geometric(a, b, g), c, g) == geometric(a, geometric(b, c, g), g)) ++assoc;
        EpsMultivector ab = geometric(a, b, g), ba = geometric(b, a, g);
        if (ab + ba == EpsScalar(2) * inner(a, b, g) && ab - ba == EpsScalar(2) * exterior(a, b)) ++sym;
        if (!gram(ck, u, u).is_zero()) {
            ++sandwich_n;
            if (sandwich_reflect(ck, Point(u), Point(v)) == reflect_point(ck, Point(u), Point(v))) ++sandwich;
        }
    }
    r.add("seed", std::to_string(job.seed));
    r.add("associativity", std::to_string(assoc) + "/" + std::to_string(trials));
    r.add("inner/exterior split", std::to_string(sym) + "/" + std::to_string(trials));
    r.add("sandwich reflection", std::to_string(sandwich) + "/" + std::to_string(sandwich_n));
    if (assoc != trials || sym != trials || sandwich != sandwich_n) {
        r.status = 2;
        r.error = "clifford self-check failed";
    }
}

}  // namespace detail

// Dispatches a job; domain errors map to status 2, usage errors to 1.
inline Report run(const Job& job) {
    Report r;
    detail::Fmt fmt{job.digits};
    try {
        switch (job.command) {
            case Command::classify: detail::run_classify(job, r); break;
            case Command::quadrance: detail::run_quadrance(job, r, fmt); break;
            case Command::distance: detail::run_distance(job, r, fmt); break;
            case Command::reflect: detail::run_reflect(job, r); break;
            case Command::centers: detail::run_centers(job, r, fmt); break;
            case Command::perpendiculars: detail::run_perpendiculars(job, r, fmt); break;
            case Command::sphere: detail::run_sphere(job, r, fmt); break;
            case Command::clifford_check: detail::run_clifford(job, r, fmt); break;
        }
    } catch (const UsageError& e) {
        r.rows.clear();
        r.status = 1;
        r.error = e.what();
    } catch (const DomainError& e) {
        r.rows.clear();
        r.status = 2;
        r.error = e.what();
    }
    return r;
}

}  // namespace ckgeom
