#include <gtest/gtest.h>

#include <random>

#include "curvecert/numberfield/prime.hpp"

using namespace curvecert;

namespace {

Polynomial<RationalField> P(std::vector<long> c) { return rational_poly(std::vector<Integer>(c.begin(), c.end())); }

NFElement random_element(const NumberField& k, std::mt19937_64& rng, int den_max = 5) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, den_max);
    std::vector<Rational> c(k.degree());
    for (auto& v : c) {
        v = Rational(num(rng), den(rng));
        v.canonicalize();
    }
    return k.element(c);
}

// Independent norm: determinant of multiplication-by-a in the power basis.
Rational determinant_norm(const NumberField& k, const NFElement& a) {
    std::size_t n = k.degree();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    NFElement basis = k.one();
    for (std::size_t j = 0; j < n; ++j) {
        auto col = (a * basis).coefficients();
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
        basis = basis * k.generator();
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

}  // namespace

TEST(NumberField, RejectsReducibleAndUncertified) {
    EXPECT_THROW(NumberField::certify(P({-1, 0, 1})), DomainError);
    auto quintic = P({-1, -1, 0, 0, 0, 1});
    auto cert = ga_irreducible_over_Q(quintic);
    EXPECT_THROW(NumberField::create(P({647, 0, 1}), cert), DomainError);
    cert.witnesses[0].degrees = {1, 4};
    EXPECT_THROW(NumberField::create(quintic, cert), DomainError);
}

TEST(NumberField, QuadraticArithmetic) {
    auto k = NumberField::certify(P({647, 0, 1}));
    EXPECT_EQ(k.disc(), -2588);
    auto t = k.generator();
    EXPECT_EQ(t * t, k.from_integer(-647));
    auto a = k.from_integer(3) + k.from_integer(2) * t;
    EXPECT_EQ(k.norm(a), Rational(9 + 4 * 647));
    EXPECT_EQ(a * k.inverse(a), k.one());
    EXPECT_EQ(k.generated_degree(t * t), 1u);
    EXPECT_TRUE(k.generates(a));
}

TEST(NumberField, FieldAxiomsAndNormOracle) {
    std::mt19937_64 rng(7);
    for (auto m : {P({-1, -1, 0, 0, 0, 1}), P({3, -7, 0, 0, 0, 0, 0, 1}), P({-1, -53, -50, 1})}) {
        auto k = NumberField::certify(m);
        for (int i = 0; i < 60; ++i) {
            auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(k.norm(a * b), k.norm(a) * k.norm(b));
            EXPECT_EQ(k.norm(a), determinant_norm(k, a));
            if (!a.is_zero()) {
                EXPECT_EQ(a * k.inverse(a), k.one());
            }
        }
    }
}

TEST(NumberField, RationalsAsDegreeOne) {
    auto q = NumberField::rationals();
    EXPECT_EQ(q.degree(), 1u);
    EXPECT_EQ(q.description(), "Q");
    auto alt = NumberField::certify(P({-1, 1}));
    EXPECT_EQ(alt.generator(), alt.one());
}

TEST(Primes, SplitQuadraticAt29) {
    auto k = NumberField::certify(P({647, 0, 1}));
    auto ps = nf_primes_above(k, 29);
    ASSERT_EQ(ps.size(), 2u);
    std::vector<std::uint64_t> images;
    for (const auto& pr : ps) {
        EXPECT_EQ(pr.residue_degree(), 1u);
        images.push_back(pr.theta_image().residues()[0]);
        EXPECT_EQ(pr.reduce(k.generator() * k.generator()), pr.residue_field().from_integer(-647));
    }
    std::sort(images.begin(), images.end());
    EXPECT_EQ(images, (std::vector<std::uint64_t>{7, 22}));
}

TEST(Primes, ResidueDegreesOfQuintic) {
    auto k = NumberField::certify(P({-1, -1, 0, 0, 0, 1}));
    auto ps = nf_primes_above(k, 7);
    ASSERT_EQ(ps.size(), 2u);
    EXPECT_EQ(ps[0].residue_degree() + ps[1].residue_degree(), 5u);
    EXPECT_EQ(std::min(ps[0].residue_degree(), ps[1].residue_degree()), 2u);
    auto k7 = NumberField::certify(P({3, -7, 0, 0, 0, 0, 0, 1}));
    auto p11 = nf_primes_above(k7, 11);
    ASSERT_EQ(p11.size(), 1u);
    EXPECT_EQ(p11[0].residue_degree(), 7u);
}

TEST(Primes, ReductionIsRingMorphism) {
    std::mt19937_64 rng(11);
    auto k = NumberField::certify(P({-1, -1, 0, 0, 0, 1}));
    for (std::uint64_t p : {7u, 11u, 13u}) {
        for (const auto& pr : nf_primes_above(k, p)) {
            for (int i = 0; i < 40; ++i) {
                auto a = random_element(k, rng, 4), b = random_element(k, rng, 4);
                EXPECT_EQ(pr.reduce(a * b), pr.reduce(a) * pr.reduce(b));
                EXPECT_EQ(pr.reduce(a + b), pr.reduce(a) + pr.reduce(b));
            }
            EXPECT_TRUE(pr.reduce(k.element(k.minpoly())).is_zero());
        }
    }
}

TEST(Primes, Errors) {
    auto k = NumberField::certify(P({647, 0, 1}));
    EXPECT_THROW(nf_primes_above(k, 2), HypothesisError);
    EXPECT_THROW(nf_primes_above(k, 647), HypothesisError);
    EXPECT_THROW(UnramifiedPrime::create(k, 29, {1, 1}), DomainError);
    auto pr = UnramifiedPrime::create(k, 29, {22, 1});
    EXPECT_EQ(pr.theta_image().residues()[0], 7u);
    EXPECT_THROW(pr.reduce(k.from_rational(Rational(1, 29))), DomainError);
    EXPECT_TRUE(nf_in_prime(k.generator() - k.from_integer(7), pr));
    EXPECT_FALSE(nf_in_prime(k.generator() - k.from_integer(22), pr));
}

TEST(Primes, DegreeOneSearchIsAscending) {
    auto k = NumberField::certify(P({647, 0, 1}));
    auto ps = degree_one_primes(k, 3, 70);
    ASSERT_FALSE(ps.empty());
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_LE(ps[i - 1].p(), ps[i].p());
    for (const auto& pr : ps) EXPECT_TRUE(pr.reduce(k.generator() * k.generator() + k.from_integer(647)).is_zero());
}
