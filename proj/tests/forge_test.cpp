#include <gtest/gtest.h>

#include <algorithm>

#include "curvecert/forge/constructions.hpp"

using namespace curvecert;
using namespace curvecert::forge;

namespace {

Polynomial<RationalField> P(std::vector<long> c) { return rational_poly(std::vector<Integer>(c.begin(), c.end())); }

const Claim& claim_with(const TheoremInstance& t, const std::string& prefix) {
    auto it = std::find_if(t.claims.begin(), t.claims.end(),
                           [&](const Claim& c) { return c.statement.rfind(prefix, 0) == 0; });
    if (it == t.claims.end()) throw std::runtime_error("no claim starting with " + prefix);
    return *it;
}

template <class T>
std::vector<T> certs_of(const TheoremInstance& t) {
    std::vector<T> out;
    for (const auto& c : t.certificates)
        if (auto* x = std::get_if<T>(&c)) out.push_back(*x);
    return out;
}

std::string hypothesis_tag(const std::function<void()>& f) {
    try {
        f();
    } catch (const HypothesisError& e) {
        return e.tag();
    }
    return "";
}

void expect_round_trip(const TheoremInstance& t) {
    Json j = to_json(t);
    Json back = Json::parse(j.dump());
    auto r = verify_report(back);
    EXPECT_TRUE(r.ok) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.unresolved, t.unresolved());
}

}  // namespace

TEST(ForgeOrig, D82HasFourPoints) {
    auto t = forge_orig(82);
    EXPECT_EQ(t.points.size(), 4u);
    EXPECT_EQ(t.exit_code(), 0);
    EXPECT_EQ(certs_of<EInfOrderCert>(t).at(0).method, "lutz-nagell");
    expect_round_trip(t);
}

TEST(ForgeOrig, SmallDIsUnresolved) {
    for (long d : {1, 2, -2}) {
        auto t = forge_orig(d);
        EXPECT_EQ(t.exit_code(), 2);
        EXPECT_EQ(t.unresolved().size(), 1u);
        expect_round_trip(t);
    }
    EXPECT_EQ(forge_orig(3).exit_code(), 0);
    EXPECT_EQ(forge_orig(-5).exit_code(), 0);
    EXPECT_THROW(forge_orig(0), DomainError);
}

TEST(ForgeOrig2, RelationAndPoints) {
    auto t = forge_orig2(1, 2, 3, 5);
    EXPECT_EQ(t.points.size(), 6u);
    EXPECT_EQ(claim_with(t, "(a, d) + (b, d) + (c, d) = O").status, ClaimStatus::certified);
    EXPECT_EQ(claim_with(t, "rank E(Q) >= 2").status, ClaimStatus::unresolved);
    EXPECT_EQ(t.exit_code(), 2);
    expect_round_trip(t);

    // (0, m, -m, d): y^2 = x^3 - m^2 x + d^2, already in short form
    auto u = forge_orig2(0, 7, -7, 3);
    EXPECT_EQ(u.curve["a"], Json::array({"-49"}));
    EXPECT_EQ(u.curve["b"], Json::array({"9"}));
    expect_round_trip(u);

    EXPECT_THROW(forge_orig2(1, 1, 3, 5), DomainError);
    EXPECT_THROW(forge_orig2(1, 2, 3, 0), DomainError);
}

TEST(ForgeOrig2, SingularParametersRejected) {
    // (x+30)(x+27)(x+22) + 36 = (x+24)^2 (x+31), found by a discriminant scan
    EXPECT_THROW(forge_orig2(-30, -27, -22, 6), SingularError);
    EXPECT_NO_THROW(forge_orig2(-30, -27, -22, 5));
}

TEST(ForgeNfRank1, RationalDegenerateCase) {
    auto k = NumberField::rationals();
    auto t = forge_nf_rank1(k, k.one());
    EXPECT_EQ(t.parameters["first_prime"]["p"], 3u);
    EXPECT_EQ(t.parameters["second_prime"]["p"], 11u);
    EXPECT_EQ(t.parameters["d"], Json::array({"33"}));
    EXPECT_EQ(t.exit_code(), 0);
    expect_round_trip(t);
    // deterministic
    EXPECT_EQ(to_json(forge_nf_rank1(k, k.one())).dump(), to_json(t).dump());
}

TEST(ForgeNfRank1, ImaginaryQuadraticExample) {
    auto k = NumberField::certify(P({647, 0, 1}));
    auto wp = UnramifiedPrime::create(k, 29, {7, 1});
    auto wq = UnramifiedPrime::create(k, 67, {31, 1});
    auto d = k.from_integer(98) + k.generator();
    auto t = forge_nf_rank1(k, k.generator(), {}, SuppliedPrimes{wp, wq}, d);
    EXPECT_EQ(t.exit_code(), 0);
    auto c = certs_of<EInfOrderCert>(t).at(0);
    EXPECT_EQ(c.method, "two-prime");
    EXPECT_EQ(c.reductions[1].point_order, 2u);
    expect_round_trip(t);

    EXPECT_EQ(claim_with(t, "E is not isomorphic").status, ClaimStatus::certified);

    // Search mode takes d = pq*t. Then d^2 = -647 p^2 q^2 is rational, so E is
    // defined over Q even though P is not: only the point half of the descent
    // statement survives.
    auto s = forge_nf_rank1(k, k.generator());
    EXPECT_EQ(claim_with(s, "P = (0, d) has infinite order").status, ClaimStatus::certified);
    EXPECT_EQ(claim_with(s, "P is not defined over a proper subfield").status, ClaimStatus::certified);
    EXPECT_EQ(claim_with(s, "E is not isomorphic").status, ClaimStatus::unresolved);
    EXPECT_TRUE((s.parameters["d"][0] == "0"));
    EXPECT_EQ(s.exit_code(), 2);
    expect_round_trip(s);
}

TEST(ForgeNfRank1, Errors) {
    auto k = NumberField::certify(P({647, 0, 1}));
    ForgeOptions tiny;
    tiny.prime_bound = 5;
    EXPECT_THROW(forge_nf_rank1(k, k.generator(), tiny), BoundExceeded);
    EXPECT_EQ(hypothesis_tag([&] { forge_nf_rank1(k, k.one()); }), "hypothesis-1");
    auto wp = UnramifiedPrime::create(k, 29, {7, 1});
    auto wq = UnramifiedPrime::create(k, 67, {31, 1});
    auto other = UnramifiedPrime::create(k, 67, {36, 1});
    auto d = k.from_integer(98) + k.generator();
    EXPECT_EQ(hypothesis_tag([&] { forge_nf_rank1(k, d, {}, SuppliedPrimes{wp, other}, d); }), "hypothesis-3");
    EXPECT_EQ(hypothesis_tag([&] { forge_nf_rank1(k, d, {}, SuppliedPrimes{wq, wp}, d); }), "hasse-gap");
}

TEST(ForgeNfRank2, RealQuadraticExample) {
    auto k = NumberField::certify(P({-94546, 0, 1}));
    auto wp = UnramifiedPrime::create(k, 29, {8, 1});
    auto wq = UnramifiedPrime::create(k, 67, {3, 1});
    auto th = k.generator();
    auto d = k.from_integer(5905) - k.from_integer(265) * th;
    auto beta = k.from_integer(-104) - k.from_integer(195) * th;
    auto t = forge_nf_rank2(k, d, beta, {}, SuppliedPrimes{wp, wq}, d);
    auto certs = certs_of<EInfOrderCert>(t);
    ASSERT_EQ(certs.size(), 2u);
    EXPECT_EQ(claim_with(t, "P = (0, d) has infinite order").status, ClaimStatus::certified);
    EXPECT_EQ(claim_with(t, "Q = (beta, d) has infinite order").status, ClaimStatus::certified);
    EXPECT_EQ(claim_with(t, "P and Q are linearly independent").status, ClaimStatus::unresolved);
    EXPECT_EQ(t.exit_code(), 2);
    expect_round_trip(t);

    auto in_q = k.from_integer(3) + th;  // generates K and lies in the second prime
    EXPECT_TRUE(wq.contains(in_q));
    EXPECT_EQ(hypothesis_tag([&] { forge_nf_rank2(k, d, in_q, {}, SuppliedPrimes{wp, wq}, d); }), "hypothesis-5");
    auto in_p = k.from_integer(8) + th;
    EXPECT_EQ(hypothesis_tag([&] { forge_nf_rank2(k, d, in_p, {}, SuppliedPrimes{wp, wq}, d); }), "hypothesis-4");
    EXPECT_THROW(forge_nf_rank2(k, d, k.zero(), {}, SuppliedPrimes{wp, wq}, d), DomainError);
}

TEST(ForgeResidueCover, GenericAndGallegos) {
    auto k = NumberField::rationals();
    auto p5 = UnramifiedPrime::create(k, 5, {0, 1});
    auto t = forge_residue_cover(k, p5, k.from_integer(5));
    EXPECT_EQ(t.points.size(), 10u);
    auto rc = certs_of<HRankCert>(t).at(0);
    EXPECT_EQ(rc.point_count, 11u);
    EXPECT_EQ(rc.rank_bound, 2u);
    EXPECT_EQ(t.exit_code(), 0);
    expect_round_trip(t);

    std::vector<NFElement> reps;
    for (long a = -19; a >= -23; --a) reps.push_back(k.from_integer(a));
    auto g = forge_residue_cover(k, p5, k.from_integer(20), reps);
    auto gc = certs_of<HRankCert>(g).at(0);
    EXPECT_EQ(gc.residue_points, 6u);
    EXPECT_EQ(g.exit_code(), 0);
    expect_round_trip(g);

    std::vector<NFElement> bad;
    for (long a : {0, 1, 2, 3, 3}) bad.push_back(k.from_integer(a));
    EXPECT_EQ(hypothesis_tag([&] { forge_residue_cover(k, p5, k.from_integer(5), bad); }), "cover");
    EXPECT_EQ(hypothesis_tag([&] { forge_residue_cover(k, p5, k.from_integer(3)); }), "d-in-prime");
    auto p3 = UnramifiedPrime::create(k, 3, {0, 1});
    EXPECT_EQ(hypothesis_tag([&] { forge_residue_cover(k, p3, k.from_integer(3)); }), "residue-field");
}

TEST(ForgeTrinomial, QuinticFullChain) {
    auto t = forge_trinomial_hyp(trinomial(5, 1, -1, -1), 7);
    auto gal = certs_of<GaloisCertificate>(t).at(0);
    EXPECT_EQ(gal.group, "S5");
    auto w = certs_of<HInfOrderCert>(t).at(0);
    EXPECT_EQ(w.prime.p(), 7u);
    EXPECT_EQ(claim_with(t, "rank J(L_f) >= m(S5) = 4").status, ClaimStatus::certified);
    EXPECT_EQ(t.exit_code(), 0);
    expect_round_trip(t);
}

TEST(ForgeTrinomial, SepticConditional) {
    auto f = P({3, -7, 0, 0, 0, 0, 0, 1});
    auto t = forge_trinomial_hyp(f, 11, {}, CitedGroup{"PSL(2,7)", "literature identification of x^7-7x+3"});
    auto w = certs_of<HInfOrderCert>(t).at(0);
    EXPECT_EQ(w.prime.p(), 11u);
    EXPECT_GT(w.prime.residue_degree(), 1u);
    EXPECT_TRUE(poly_roots(reduce_mod_p(f, GaloisField::prime(11))).empty());
    EXPECT_EQ(claim_with(t, "Gal(L_f/Q) is contained in A7").status, ClaimStatus::certified);
    EXPECT_EQ(claim_with(t, "rank J(L_f) >= m(PSL(2,7)) = 6").status, ClaimStatus::conditional);
    EXPECT_EQ(t.exit_code(), 2);
    expect_round_trip(t);
}

TEST(ForgeTrinomial, Errors) {
    EXPECT_THROW(forge_trinomial_hyp(trinomial(5, 1, -1, -1), 0), DomainError);
    EXPECT_THROW(forge_trinomial_hyp(trinomial(6, 1, -1, -1), 7), DomainError);
}

TEST(ForgeShanks, ThirtySixAndFifty) {
    for (long a : {36, 50}) {
        auto t = forge_shanks(a, a);
        for (const auto& c : t.claims) EXPECT_EQ(c.status, ClaimStatus::certified) << c.statement;
        EXPECT_EQ(t.exit_code(), 0);
        auto disc = std::find_if(t.checks.begin(), t.checks.end(), [](const Check& c) { return c.kind == "disc-square"; });
        ASSERT_NE(disc, t.checks.end());
        EXPECT_EQ(disc->data["root"], std::to_string(a * a + 3 * a + 9));
        expect_round_trip(t);
    }
    EXPECT_THROW(forge_shanks(0, 5), DomainError);
    EXPECT_THROW(forge_shanks(5, 0), DomainError);
}

TEST(ForgeFunctionField, PglAndM24) {
    auto t = forge_pgl(GaloisField::prime(3), 2, RationalFunctionField(GaloisField::prime(3)).t());
    EXPECT_EQ(t.parameters["f"], "U^4 + U + (t)");
    EXPECT_EQ(claim_with(t, "Gal(L_f/K)").status, ClaimStatus::cited_unverified);
    expect_round_trip(t);
    auto t3 = forge_pgl(GaloisField::prime(3), 3, RationalFunctionField(GaloisField::prime(3)).t());
    EXPECT_EQ(t3.curve["genus"], 6u);
    EXPECT_EQ(claim_with(t3, "|C(L)| >= 2N = 26").status, ClaimStatus::certified);

    RationalFunctionField k2(GaloisField::prime(2));
    std::vector<RatFunc> c(25, k2.zero());
    c[24] = k2.one();
    c[1] = k2.one();
    c[0] = k2.t();
    FFPoly f(k2, c);
    auto m = forge_m24(f, k2.one(), k2.t());
    EXPECT_EQ(claim_with(m, "|C(L)| >= 2 deg f = 48").status, ClaimStatus::certified);
    EXPECT_EQ(claim_with(m, "Gal(L_f/K) = M24").status, ClaimStatus::cited_unverified);
    expect_round_trip(m);
    EXPECT_THROW(forge_m24(f, k2.zero(), k2.t()), DomainError);
}

TEST(ForgeVerify, TamperedWitnessFails) {
    auto k = NumberField::rationals();
    Json j = to_json(forge_nf_rank1(k, k.one()));
    ASSERT_TRUE(verify_report(j).ok);
    Json bad = j;
    bad["certificates"][0]["reductions"][1]["point_order"] = 3;
    EXPECT_FALSE(verify_report(bad).ok);
    Json bad2 = j;
    bad2["points"][0]["y"] = Json::array({"34"});
    EXPECT_FALSE(verify_report(bad2).ok);
    Json bad3 = j;
    bad3["unresolved"] = Json::array({"x"});
    EXPECT_FALSE(verify_report(bad3).ok);
    Json bad4 = j;
    bad4["checks"][2]["data"]["q"] = 7;
    EXPECT_FALSE(verify_report(bad4).ok);
}
