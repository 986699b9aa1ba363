#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "curvecert/forge/instance.hpp"
#include "curvecert/io/parse.hpp"

using namespace curvecert;
using io::Json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(CURVECERT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string run_stderr(const std::string& args) {
    std::string cmd = std::string(CURVECERT_CLI) + " " + args + " 2>&1 >/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

std::filesystem::path tmp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("curvecert_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Parse, RationalPolynomials) {
    auto f = io::parse_qpoly("x^5 - x - 1");
    EXPECT_EQ(f, rational_poly({-1, -1, 0, 0, 0, 1}));
    EXPECT_EQ(io::parse_qpoly("x5-x-1"), f);
    EXPECT_EQ(io::parse_qpoly("[-1,-1,0,0,0,1]"), f);
    EXPECT_EQ(io::parse_qpoly("3/2x^2 + x*x"), Polynomial<RationalField>(RationalField{}, {0, 0, Rational(5, 2)}));
    EXPECT_THROW(io::parse_qpoly("x^"), ParseError);
    EXPECT_THROW(io::parse_qpoly("x y"), ParseError);
    EXPECT_THROW(io::parse_qpoly(""), ParseError);
}

TEST(Parse, Curves) {
    auto [h, g] = io::parse_curve("y2=x3+x");
    EXPECT_TRUE(h.is_zero());
    EXPECT_EQ(g, rational_poly({0, 1, 0, 1}));
    auto [h2, g2] = io::parse_curve("y^2 + (x+1)y = x^5 + 1");
    EXPECT_EQ(h2, rational_poly({1, 1}));
    EXPECT_EQ(g2, rational_poly({1, 0, 0, 0, 0, 1}));
    EXPECT_THROW(io::parse_curve("x^2=y"), ParseError);
}

TEST(Parse, NumberFieldElementsAndPrimes) {
    NumberField k = NumberField::certify(rational_poly({647, 0, 1}), 1000);
    auto d = io::parse_nf_element(k, "98 + t");
    EXPECT_EQ(d, k.element(rational_poly({98, 1})));
    auto p = io::parse_prime(k, "29:7,1");
    EXPECT_EQ(p.p(), 29u);
    EXPECT_EQ(p.residue_degree(), 1u);
    EXPECT_THROW(io::parse_prime(k, "29"), ParseError);
}

TEST(Parse, FunctionFieldObjects) {
    GaloisField f3 = GaloisField::prime(3);
    RationalFunctionField k(f3);
    auto d = io::parse_ratfunc(k, "(t+1)/(t^2)");
    EXPECT_EQ(d, k.fraction(fq_poly(f3, {1, 1}), fq_poly(f3, {0, 0, 1})));
    auto f = io::parse_ffpoly(k, "U^4 + U + t");
    EXPECT_EQ(f.deg(), 4u);
    EXPECT_EQ(f.coeff(0), k.from_polynomial(fq_poly(f3, {0, 1})));
    EXPECT_EQ(f.coeff(1), k.one());
}

TEST(Cli, ForgeExitCodes) {
    EXPECT_EQ(run("forge orig --d 82").code, 0);
    EXPECT_EQ(run("forge shanks --a 50 --d 50").code, 0);
    EXPECT_EQ(run("forge orig --d 1").code, 2);
    EXPECT_EQ(run("forge orig --d 0").code, 1);
    EXPECT_EQ(run("forge shanks --a 50 --d 1+t").code, 1);
    EXPECT_EQ(run("forge nosuch").code, 1);
}

TEST(Cli, ErrorsNameTheHypothesis) {
    std::string err = run_stderr("forge nf-rank1 --field x^2+647 --d1 98+t --p-prime 29:7,1 --q-prime 31:29,1");
    EXPECT_NE(err.find("hypothesis hasse-gap"), std::string::npos) << err;
}

TEST(Cli, ReportShapeAndDeterminism) {
    auto a = run("forge orig --d 82");
    auto b = run("forge orig --d 82");
    EXPECT_EQ(a.out, b.out);
    auto j = Json::parse(a.out);
    EXPECT_EQ(j["schema"], io::kSchema);
    EXPECT_EQ(j["command"], "forge orig");
    EXPECT_EQ(j["inputs"]["d"], "82");
    EXPECT_EQ(j["seed"], 0);
    EXPECT_EQ(j["instance"]["points"].size(), 4u);
    EXPECT_FALSE(j.contains("timing_ms"));
    EXPECT_TRUE(Json::parse(run("--timing forge orig --d 82").out).contains("timing_ms"));
}

TEST(Cli, VerifyRoundTripAndTamper) {
    auto good = tmp("good.json");
    ASSERT_EQ(run("--out " + good.string() + " forge shanks --a 50 --d 50").code, 0);
    EXPECT_EQ(run("verify " + good.string()).code, 0);

    auto j = Json::parse(slurp(good));
    auto& red = j["instance"]["certificates"][0]["reductions"];
    ASSERT_FALSE(red.empty());
    red[0]["point_order"] = red[0]["point_order"].get<std::uint64_t>() + 1;
    auto bad = tmp("bad.json");
    std::ofstream(bad) << j.dump(2);
    EXPECT_NE(run("verify " + bad.string()).code, 0);

    auto partial = tmp("partial.json");
    ASSERT_EQ(run("--out " + partial.string() + " forge orig --d 1").code, 2);
    EXPECT_EQ(run("verify " + partial.string()).code, 0);
    EXPECT_NE(run_stderr("verify " + partial.string()).find("warning: unresolved"), std::string::npos);

    auto junk = tmp("junk.json");
    std::ofstream(junk) << "{not json";
    EXPECT_EQ(run("verify " + junk.string()).code, 1);
    EXPECT_EQ(run("verify " + tmp("missing.json").string()).code, 1);
}

TEST(Cli, CountGaloisJacobian) {
    // Brute force over F_3: x^3 + x takes values 0, 2, 1 at x = 0, 1, 2, so 1 + 0 + 2 affine points plus infinity.
    auto c = Json::parse(run("count --curve \"y2=x3+x\" --p 3").out);
    EXPECT_EQ(c["result"]["points"], 4);

    auto g = run("galois --poly \"x^5-x-1\" --bound 200");
    EXPECT_EQ(g.code, 0);
    EXPECT_EQ(Json::parse(g.out)["result"]["group"], "S5");
    EXPECT_EQ(run("galois --poly \"x^5-5x+12\" --bound 200").code, 0);

    auto jac = Json::parse(run("jacobian --curve \"y2=x5+x+1\" --p 5").out);
    // counts over F_5 and F_25 determine P(T) = 1 + a1 T + a2 T^2 + 5 a1 T^3 + 25 T^4.
    auto counts = jac["result"]["counts"];
    long n1 = counts[0], n2 = counts[1];
    long s1 = 5 + 1 - n1, s2 = 25 + 1 - n2;
    long a1 = -s1, a2 = (s1 * s1 - s2) / 2;
    long p1 = 1 + a1 + a2 + 5 * a1 + 25;
    EXPECT_EQ(jac["result"]["jacobian_order"], std::to_string(p1));
    EXPECT_EQ(n1, 6);
}

TEST(Cli, OutIsAtomicAndComplete) {
    auto out = tmp("pgl.json");
    std::filesystem::remove(out);
    EXPECT_EQ(run("--out " + out.string() + " forge pgl --q 3 --m 2 --d t").code, 2);
    EXPECT_TRUE(std::filesystem::exists(out));
    EXPECT_FALSE(std::filesystem::exists(out.string() + ".tmp"));
    auto j = Json::parse(slurp(out));
    EXPECT_EQ(j["instance"]["parameters"]["f"], "U^4 + U + (t)");
    EXPECT_EQ(j["instance"]["claims"][2]["status"], "cited-unverified");
    EXPECT_EQ(run("verify " + out.string()).code, 0);
}
