#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(CKGEOM_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string data(const std::string& f) { return std::string(CKGEOM_DATA_DIR) + "/" + f; }

// Writes a document to a temporary file and returns its path.
std::string doc(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("ckgeom_cli_" + name + ".ck");
    std::ofstream(path) << text;
    return path.string();
}

bool has_line(const std::string& out, const std::string& line) {
    return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(Cli, ClassifyIsotropicPoint) {
    auto r = run("classify " + doc("iso", "space: +@0 -@0\npoint P = 1:1\npoint Q = 1:0\n"));
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has_line(r.out, "P: isotropic of degree 0")) << r.out;
    EXPECT_TRUE(has_line(r.out, "Q: anisotropic of degree 0")) << r.out;
}

TEST(Cli, QuadranceOfPlanes) {
    auto r = run("quadrance " + data("pedal.ck") + " A U");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has_line(r.out, "xi: 2/3")) << r.out;
    // the same through the semi-CK literal diag(1,1,1,1,0)
    auto s = run("quadrance " + data("pedal.ck") + " A U --semi --space \"+@0 +@0 +@0 +@0 0\"");
    EXPECT_EQ(s.status, 0);
    EXPECT_TRUE(has_line(s.out, "xi: 2/3")) << s.out;
}

TEST(Cli, CentersOfRightTriangle) {
    auto r = run("centers " + data("right_triangle.ck") + " T");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has_line(r.out, "O: 0:1:1")) << r.out;
    EXPECT_TRUE(has_line(r.out, "H: 1:0:0")) << r.out;
    EXPECT_TRUE(has_line(r.out, "G: 1:1:1")) << r.out;
    // the same triangle given by coordinates
    auto c = run("centers " + doc("rt", "space: +@0 +@1 +@1\npoint A = 1:0:0\npoint B = 1:1:0\npoint C = 1:0:1\n"
                                        "simplex T = A B C\n") + " T");
    EXPECT_EQ(c.status, 0);
    EXPECT_TRUE(has_line(c.out, "O: 0:1:1")) << c.out;
    EXPECT_TRUE(has_line(c.out, "H: 1:0:0")) << c.out;
}

TEST(Cli, HyperbolicSample) {
    auto r = run("centers " + data("hyperbolic.ck") + " S");
    EXPECT_EQ(r.status, 0) << r.out;
    auto rf = run("reflect " + data("hyperbolic.ck") + " X P Q");
    EXPECT_EQ(rf.status, 0);
    using namespace ckgeom;
    CKStructure ck = CKStructure::parse("+@0 +@0 -@0");
    Point img = reflect_point(ck, Point{1, 1, 0}, Point{3, 0, 5});
    EXPECT_TRUE(has_line(rf.out, "Q': " + img.canonical_str())) << rf.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("classify " + data("pedal.ck")).status, 0);
    EXPECT_EQ(run("bogus " + data("pedal.ck")).status, 1);
    EXPECT_EQ(run("quadrance " + data("pedal.ck") + " A Z").status, 1);
    EXPECT_EQ(run("distance " + data("pedal.ck") + " E1").status, 1);
    EXPECT_EQ(run("classify /nonexistent/file.ck").status, 1);
    EXPECT_EQ(run("classify " + doc("bad", "space: +@0 -@0\npoint P = 1:x\n")).status, 1);
    EXPECT_EQ(run("classify " + doc("nospace", "point P = 1:0\n")).status, 1);
    EXPECT_EQ(run("classify " + data("pedal.ck") + " --format xml").status, 1);
    // domain errors
    auto iso = doc("iso2", "space: +@0 -@0\npoint P = 1:1\npoint Q = 1:0\n");
    auto r = run("quadrance " + iso + " P Q");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run("reflect " + iso + " P Q").status, 2);
}

TEST(Cli, FormatsAndDigits) {
    auto t = run("quadrance " + data("pedal.ck") + " A U --format tsv");
    EXPECT_TRUE(has_line(t.out, "xi\t2/3")) << t.out;
    auto d = run("quadrance " + data("pedal.ck") + " A U --digits 4");
    EXPECT_TRUE(has_line(d.out, "xi: 0.6667")) << d.out;
}

TEST(Cli, Deterministic) {
    for (const std::string& args : {"classify " + data("pedal.ck"), "centers " + data("right_triangle.ck") + " T",
                                    "distance " + data("hyperbolic.ck") + " P Q",
                                    "clifford-check " + data("hyperbolic.ck")}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.out, b.out) << args;
    }
    auto s1 = run("clifford-check " + data("hyperbolic.ck"), "CKGEOM_SEED=7");
    auto s2 = run("clifford-check " + data("hyperbolic.ck"), "CKGEOM_SEED=7");
    EXPECT_EQ(s1.status, 0);
    EXPECT_EQ(s1.out, s2.out);
    EXPECT_TRUE(has_line(s1.out, "seed: 7")) << s1.out;
    EXPECT_EQ(run("clifford-check " + data("hyperbolic.ck"), "CKGEOM_SEED=abc").status, 1);
}

TEST(Cli, CliffordOperands) {
    auto r = run("clifford-check " + doc("mv", "space: +@0 +@0\npoint A = 1:1\npoint B = 1:0\n") + " A B");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has_line(r.out, "geometric: {: 1, 12: -1}")) << r.out;
    EXPECT_TRUE(has_line(r.out, "exterior: {12: -1}")) << r.out;
    EXPECT_TRUE(has_line(r.out, "inner: {: 1}")) << r.out;
}
