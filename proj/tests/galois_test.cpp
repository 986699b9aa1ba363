#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "curvecert/galois/mg_table.hpp"
#include "curvecert/galois/symmetric.hpp"

using namespace curvecert;

namespace {

Polynomial<RationalField> P(std::vector<long> c) { return rational_poly(std::vector<Integer>(c.begin(), c.end())); }

// Brute-force permutation group closure; returns the set of cycle types.
using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size());
    Partition out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::size_t, std::set<Partition>> closure(const std::vector<Perm>& gens) {
    std::set<Perm> group;
    Perm id(gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    std::vector<Perm> frontier{id};
    group.insert(id);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Perm h = compose(s, g);
                if (group.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    std::set<Partition> types;
    for (const auto& g : group) types.insert(cycle_type(g));
    return {group.size(), types};
}

Perm affine(int n, int a, int b) {
    Perm r(n);
    for (int x = 0; x < n; ++x) r[x] = (a * x + b) % n;
    return r;
}

// P^1(F_5) with infinity as index 5.
Perm mobius(int a, int b, int c, int d) {
    Perm r(6);
    for (int x = 0; x <= 5; ++x) {
        int num, den;
        if (x == 5) {
            num = a;
            den = c;
        } else {
            num = (a * x + b) % 5;
            den = (c * x + d) % 5;
        }
        if (den == 0) {
            r[x] = 5;
        } else {
            int inv = 1;
            while ((den * inv) % 5 != 1) ++inv;
            r[x] = (num * inv) % 5;
        }
    }
    return r;
}

void expect_table(const std::string& name, std::size_t n, const std::vector<Perm>& gens) {
    auto [order, types] = closure(gens);
    const auto& subs = maximal_transitive_subgroups(n);
    auto it = std::find_if(subs.begin(), subs.end(), [&](const auto& g) { return g.name == name; });
    ASSERT_NE(it, subs.end()) << name;
    EXPECT_EQ(it->order, order) << name;
    std::set<Partition> listed(it->cycle_types.begin(), it->cycle_types.end());
    EXPECT_EQ(listed, types) << name;
}

}  // namespace

TEST(CycleTypes, KnownFactorizations) {
    EXPECT_EQ(cycle_type_at(P({-1, -1, 0, 0, 0, 1}), 2).degrees, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(cycle_type_at(P({-1, -1, 0, 0, 0, 1}), 7).degrees, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(cycle_type_at(P({647, 0, 1}), 29).degrees, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(cycle_type_at(P({3, -7, 0, 0, 0, 0, 0, 1}), 11).degrees, (std::vector<std::size_t>{7}));
}

TEST(CycleTypes, SeedDoesNotChangeSample) {
    auto f = P({-1, -1, 0, 0, 0, 1});
    EXPECT_EQ(ga_cycle_types(f, 300, 0), ga_cycle_types(f, 300, 12345));
}

TEST(CycleTypes, SquareDiscriminantForcesEvenTypes) {
    auto f = P({3, -7, 0, 0, 0, 0, 0, 1});
    ASSERT_TRUE(ga_disc_square(f));
    for (const auto& t : ga_cycle_types(f, 500)) EXPECT_TRUE(t.is_even()) << t.to_string() << "@" << t.p;
}

TEST(SubgroupTables, MatchGeneratedGroups) {
    expect_table("D4", 4, {affine(4, 1, 1), {0, 3, 2, 1}});
    expect_table("F20", 5, {affine(5, 1, 1), affine(5, 2, 0)});
    expect_table("F42", 7, {affine(7, 1, 1), affine(7, 3, 0)});
    expect_table("PGL(2,5)", 6, {mobius(1, 1, 0, 1), mobius(2, 0, 0, 1), mobius(0, 4, 1, 0)});
    expect_table("S3wrS2", 6, {{1, 2, 0, 3, 4, 5}, {1, 0, 2, 3, 4, 5}, {3, 4, 5, 0, 1, 2}});
    expect_table("S2wrS3", 6, {{1, 0, 2, 3, 4, 5}, {2, 3, 4, 5, 0, 1}, {2, 3, 0, 1, 4, 5}});
}

TEST(Irreducibility, Certificates) {
    auto a = ga_irreducible_over_Q(P({-1, -1, 0, 0, 0, 1}));
    EXPECT_EQ(a.status, IrreducibilityStatus::irreducible);
    EXPECT_TRUE(verify(a));
    auto b = ga_irreducible_over_Q(P({647, 0, 1}));
    EXPECT_EQ(b.status, IrreducibilityStatus::irreducible);
    EXPECT_TRUE(verify(b));
    auto c = ga_irreducible_over_Q(P({-1, 0, 1}));
    EXPECT_EQ(c.status, IrreducibilityStatus::reducible);
    EXPECT_EQ(c.method, "rational-root");
    EXPECT_TRUE(verify(c));
    // x^4 + 1 is irreducible but reducible mod every prime: only degree exclusion can fail here.
    auto d = ga_irreducible_over_Q(P({1, 0, 0, 0, 1}), 500);
    EXPECT_NE(d.status, IrreducibilityStatus::reducible);
    // (x^2+1)(x^2+2) has no rational root; must not be certified irreducible.
    auto e = ga_irreducible_over_Q(P({2, 0, 3, 0, 1}), 500);
    EXPECT_EQ(e.status, IrreducibilityStatus::inconclusive);
}

TEST(Irreducibility, TamperedWitnessFails) {
    auto a = ga_irreducible_over_Q(P({-1, -1, 0, 0, 0, 1}));
    ASSERT_FALSE(a.witnesses.empty());
    a.witnesses[0].degrees = {1, 4};
    EXPECT_FALSE(verify(a));
}

TEST(Symmetric, QuinticIsS5) {
    auto r = ga_certify_Sn(P({-1, -1, 0, 0, 0, 1}));
    ASSERT_TRUE(std::holds_alternative<GaloisCertificate>(r));
    const auto& c = std::get<GaloisCertificate>(r);
    EXPECT_EQ(c.group, "S5");
    EXPECT_FALSE(c.disc_square);
    EXPECT_TRUE(verify(c));
    auto tampered = c;
    tampered.evidence.back().degrees = {5};
    EXPECT_FALSE(verify(tampered));
}

TEST(Symmetric, SquareDiscriminantIsNotSn) {
    EXPECT_TRUE(std::holds_alternative<Inconclusive>(ga_certify_Sn(P({3, -7, 0, 0, 0, 0, 0, 1}))));
    auto alt = ga_certify_alternating_subgroup(P({3, -7, 0, 0, 0, 0, 0, 1}));
    ASSERT_TRUE(std::holds_alternative<GaloisCertificate>(alt));
    EXPECT_TRUE(verify(std::get<GaloisCertificate>(alt)));
    EXPECT_FALSE(ga_disc_square(P({-1, -1, 0, 0, 0, 1})));
}

TEST(Symmetric, CubicFromSquareDiscriminant) {
    // x^3 - a x^2 - (a+3) x - 1 with a = 50 has disc 2659^2.
    auto f = P({-1, -53, -50, 1});
    EXPECT_TRUE(ga_disc_square(f));
    EXPECT_TRUE(std::holds_alternative<Inconclusive>(ga_certify_Sn(f)));
}

TEST(Symmetric, DegreeEightJordan) {
    // x^8 - x - 1 is a standard S_8 example.
    auto r = ga_certify_Sn(P({-1, -1, 0, 0, 0, 0, 0, 0, 1}), 300);
    ASSERT_TRUE(std::holds_alternative<GaloisCertificate>(r));
    EXPECT_EQ(std::get<GaloisCertificate>(r).criterion, "jordan");
    EXPECT_TRUE(verify(std::get<GaloisCertificate>(r)));
}

TEST(Symmetric, F20QuinticStaysInconclusive) {
    // x^5 - 2 has Galois group F20.
    EXPECT_TRUE(std::holds_alternative<Inconclusive>(ga_certify_Sn(P({-2, 0, 0, 0, 0, 1}), 500)));
}

TEST(Citation, CarriesNoProof) {
    auto c = ga_cite(P({3, -7, 0, 0, 0, 0, 0, 1}), "PSL(2,7)", "literature");
    EXPECT_FALSE(c.carries_proof());
    EXPECT_TRUE(verify(c));
}

TEST(MGTable, Lookup) {
    auto t = MGTable::builtin();
    EXPECT_EQ(ga_mG("S5", t), 4);
    EXPECT_EQ(ga_mG("S7", t), 6);
    EXPECT_EQ(ga_mG("PSL(2,7)", t), 6);
    EXPECT_THROW(ga_mG("M24", t), DomainError);
    t.merge_file(std::string(CURVECERT_DATA_DIR) + "/mg_table.json");
    EXPECT_EQ(ga_mG("PSL(2,7)", t), 6);
    t.set("M24", 23);
    EXPECT_EQ(ga_mG("M24", t), 23);
    EXPECT_TRUE(t.lookup("M24")->external);
}
