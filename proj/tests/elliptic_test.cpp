#include <gtest/gtest.h>

#include <random>

#include "curvecert/elliptic/certificates.hpp"

using namespace curvecert;

namespace {

Polynomial<RationalField> P(std::vector<long> c) { return rational_poly(std::vector<Integer>(c.begin(), c.end())); }

using QCurve = EllipticCurve<NumberField>;

NumberField Q() { return NumberField::rationals(); }

NFElement q(const NumberField& k, long num, long den = 1) { return k.from_rational(Rational(num, den)); }

// Independent count: double loop over all (x, y).
std::uint64_t brute_count(const GaloisField& k, const GaloisElement& a, const GaloisElement& b) {
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < k.order(); ++i) {
        GaloisElement x = k.element_at(i);
        GaloisElement r = x * x * x + a * x + b;
        for (std::uint64_t j = 0; j < k.order(); ++j) {
            GaloisElement y = k.element_at(j);
            if (y * y == r) ++n;
        }
    }
    return n;
}

std::vector<EPoint<GaloisField>> all_points(const EllipticCurve<GaloisField>& e) {
    const auto& k = e.field();
    std::vector<EPoint<GaloisField>> out{EPoint<GaloisField>::at_infinity()};
    for (std::uint64_t i = 0; i < k.order(); ++i)
        for (std::uint64_t j = 0; j < k.order(); ++j) {
            auto p = EPoint<GaloisField>::affine(k.element_at(i), k.element_at(j));
            if (e.on_curve(p)) out.push_back(p);
        }
    return out;
}

}  // namespace

TEST(EllipticCurve, Create) {
    auto k = Q();
    EXPECT_NO_THROW(ec_create(k, q(k, 1), q(k, 6724)));
    GaloisField f5 = GaloisField::prime(5);
    EXPECT_THROW(ec_create(f5, f5.zero(), f5.zero()), SingularError);
    EXPECT_THROW(ec_create(GaloisField::prime(2), GaloisField::prime(2).one(), GaloisField::prime(2).one()), DomainError);
    auto kq = NumberField::certify(P({647, 0, 1}));
    auto d = kq.from_integer(98) + kq.generator();
    EXPECT_NO_THROW(ec_create(kq, kq.one(), d * d));
}

TEST(EllipticCurve, ChordAndMembership) {
    auto k = Q();
    auto e = ec_create(k, q(k, 1), q(k, 6724));
    auto p = e.point(q(k, 0), q(k, 82));
    auto r = e.point(q(k, 12), q(k, 92));
    auto s = ec_add(e, p, r);
    EXPECT_EQ(s, NFPoint::affine(q(k, -407, 36), q(k, -15677, 216)));
    EXPECT_TRUE(e.on_curve(s));
    EXPECT_TRUE(ec_on_curve(e, NFPoint::affine(q(k, 465, 4), q(k, 10049, 8))));
    EXPECT_TRUE(ec_on_curve(e, NFPoint::affine(q(k, 60), q(k, 472))));
    EXPECT_FALSE(ec_on_curve(e, NFPoint::affine(q(k, 1), q(k, 1))));
    EXPECT_EQ(ec_add(e, p, NFPoint::at_infinity()), p);
    EXPECT_TRUE(ec_add(e, p, ec_neg(e, p)).infinity);
    EXPECT_THROW(ec_add(e, p, NFPoint::affine(q(k, 1), q(k, 1))), DomainError);
}

TEST(FiniteCount, KnownCurves) {
    GaloisField f3 = GaloisField::prime(3), f5 = GaloisField::prime(5);
    EllipticCurve<GaloisField> e3(f3, f3.one(), f3.zero());
    EXPECT_EQ(ec_count_points(e3), 4u);
    EllipticCurve<GaloisField> e5(f5, f5.one(), f5.one());
    EXPECT_EQ(ec_count_points(e5), 9u);
    EXPECT_EQ(ec_point_order(e3, e3.point(f3.from_u64(2), f3.from_u64(1))), 4u);
    EXPECT_EQ(ec_point_order(e3, e3.point(f3.zero(), f3.zero())), 2u);
    EXPECT_EQ(ec_point_order(e3, EPoint<GaloisField>::at_infinity()), 1u);
    EXPECT_THROW(ec_count_points(e5, 4), BoundExceeded);
}

TEST(FiniteCount, HasseAndBruteForceOnRandomCurves) {
    std::mt19937_64 rng(3);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; p <= 97; p = next_prime(p)) primes.push_back(p);
    int made = 0;
    while (made < 100) {
        GaloisField k = GaloisField::prime(primes[rng() % primes.size()]);
        auto a = k.random(rng), b = k.random(rng);
        if ((k.from_integer(4) * a * a * a + k.from_integer(27) * b * b).is_zero()) continue;
        EllipticCurve<GaloisField> e(k, a, b);
        std::uint64_t n = ec_count_points(e);
        EXPECT_EQ(n, brute_count(k, a, b));
        Integer gap = Integer(static_cast<unsigned long>(n)) - static_cast<unsigned long>(k.order()) - 1;
        EXPECT_LE(gap * gap, 4 * Integer(static_cast<unsigned long>(k.order())));
        ++made;
    }
}

TEST(GroupLaw, AxiomsAndLagrange) {
    std::mt19937_64 rng(9);
    std::vector<EllipticCurve<GaloisField>> curves;
    GaloisField f97 = GaloisField::prime(97);
    curves.emplace_back(f97, f97.from_u64(2), f97.from_u64(3));
    GaloisField f81 = make_galois_field(3, 4);
    curves.emplace_back(f81, f81.element_at(5), f81.element_at(17));
    for (const auto& e : curves) {
        auto pts = all_points(e);
        std::uint64_t n = ec_count_points(e);
        ASSERT_EQ(pts.size(), n);
        for (int i = 0; i < 500; ++i) {
            const auto& p = pts[rng() % pts.size()];
            const auto& r = pts[rng() % pts.size()];
            const auto& s = pts[rng() % pts.size()];
            EXPECT_EQ(e.add(e.add(p, r), s), e.add(p, e.add(r, s)));
            EXPECT_EQ(e.add(p, r), e.add(r, p));
            EXPECT_EQ(e.add(p, EPoint<GaloisField>::at_infinity()), p);
            EXPECT_TRUE(e.add(p, e.neg(p)).infinity);
            EXPECT_TRUE(e.on_curve(e.add(p, r)));
            EXPECT_TRUE(e.smul(Integer(static_cast<unsigned long>(n)), p).infinity);
        }
    }
}

TEST(LutzNagell, OriginalFamily) {
    auto k = Q();
    for (long d = 3; d <= 100; ++d) {
        QCurve e(k, q(k, 1), q(k, d * d));
        auto r = ec_lutz_nagell_nontorsion(e, e.point(q(k, 0), q(k, d)));
        ASSERT_TRUE(std::holds_alternative<EInfOrderCert>(r)) << d;
        EXPECT_TRUE(verify(std::get<EInfOrderCert>(r)));
        if (d == 3) {
            EXPECT_EQ(std::get<EInfOrderCert>(r).disc_term, 2191);
            EXPECT_EQ(std::get<EInfOrderCert>(r).remainder, 4);
        }
        if (d == 7) {
            EXPECT_EQ(std::get<EInfOrderCert>(r).disc_term, 64831);
            EXPECT_EQ(std::get<EInfOrderCert>(r).remainder, 4);
        }
    }
    for (long d = 1; d <= 2; ++d) {
        QCurve e(k, q(k, 1), q(k, d * d));
        EXPECT_TRUE(std::holds_alternative<Inconclusive>(ec_lutz_nagell_nontorsion(e, e.point(q(k, 0), q(k, d)))));
    }
    QCurve e(k, q(k, -1), q(k, 0));
    EXPECT_TRUE(std::holds_alternative<Inconclusive>(ec_lutz_nagell_nontorsion(e, e.point(q(k, 1), q(k, 0)))));
    QCurve half(k, q(k, 1, 4), q(k, 0));
    EXPECT_THROW(ec_lutz_nagell_nontorsion(half, half.point(q(k, 0), q(k, 0))), DomainError);
}

TEST(LutzNagell, TamperedRemainderFails) {
    auto k = Q();
    QCurve e(k, q(k, 1), q(k, 9));
    auto c = std::get<EInfOrderCert>(ec_lutz_nagell_nontorsion(e, e.point(q(k, 0), q(k, 3))));
    c.remainder = 5;
    EXPECT_FALSE(verify(c));
}

TEST(TwoPrime, ImaginaryQuadraticExample) {
    auto k = NumberField::certify(P({647, 0, 1}));
    auto wp = UnramifiedPrime::create(k, 29, {7, 1});   // t = 22 mod 29
    auto wq = UnramifiedPrime::create(k, 67, {31, 1});  // t = 36 mod 67
    auto d = k.from_integer(98) + k.generator();
    EXPECT_TRUE(wq.contains(d));
    EXPECT_EQ(wp.reduce(d).residues()[0], 4u);
    QCurve e(k, k.one(), d * d);
    auto c = ec_nontorsion_two_prime(e, e.point(k.zero(), d), wp, wq);
    EXPECT_EQ(c.reductions[0].group_order, 22u);
    EXPECT_EQ(c.reductions[1].group_order, 68u);
    EXPECT_EQ(c.reductions[1].point_order, 2u);
    EXPECT_TRUE(verify(c));
    auto bad = c;
    bad.reductions[0].group_order = 23;
    EXPECT_FALSE(verify(bad));

    auto w31 = UnramifiedPrime::create(k, 31, {29, 1});
    try {
        ec_nontorsion_two_prime(e, e.point(k.zero(), d), wp, w31);
        FAIL() << "expected hasse-gap failure";
    } catch (const HypothesisError& err) {
        EXPECT_EQ(err.tag(), "hasse-gap");
    }
    // theta = 7 mod 29 is the other prime above 29; d is not in any prime above 67 except wq.
    auto wq2 = UnramifiedPrime::create(k, 67, {36, 1});
    try {
        ec_nontorsion_two_prime(e, e.point(k.zero(), d), wp, wq2);
        FAIL() << "expected hypothesis-3 failure";
    } catch (const HypothesisError& err) {
        EXPECT_EQ(err.tag(), "hypothesis-3");
    }
}

TEST(TwoPrime, RealQuadraticTwoPoints) {
    auto k = NumberField::certify(P({-94546, 0, 1}));
    auto wp = UnramifiedPrime::create(k, 29, {8, 1});
    auto wq = UnramifiedPrime::create(k, 67, {3, 1});
    auto t = k.generator();
    auto d = k.from_integer(5905) - k.from_integer(265) * t;
    auto beta = k.from_integer(-104) - k.from_integer(195) * t;
    EXPECT_EQ(-(beta * beta), k.from_integer(-3595122466) - k.from_integer(40560) * t);
    EXPECT_EQ(wp.reduce(d).residues()[0], 21u);
    EXPECT_EQ(wp.reduce(beta).residues()[0], 6u);
    QCurve e(k, -(beta * beta), d * d);
    auto cp = ec_nontorsion_two_prime(e, e.point(k.zero(), d), wp, wq);
    auto cq = ec_nontorsion_two_prime(e, e.point(beta, d), wp, wq);
    EXPECT_EQ(cp.reductions[0].group_order, 32u);
    EXPECT_EQ(cp.reductions[1].group_order, 68u);
    EXPECT_TRUE(verify(cp));
    EXPECT_TRUE(verify(cq));
}

TEST(OrderMismatch, SmallPrimes) {
    auto k = Q();
    QCurve e(k, q(k, 1), q(k, 49));
    auto p3 = UnramifiedPrime::create(k, 3, {0, 1});
    auto p5 = UnramifiedPrime::create(k, 5, {0, 1});
    auto r = ec_nontorsion_order_mismatch(e, e.point(q(k, 0), q(k, 7)), p3, p5);
    ASSERT_TRUE(std::holds_alternative<EInfOrderCert>(r));
    const auto& c = std::get<EInfOrderCert>(r);
    EXPECT_EQ(c.reductions[0].group_order, 4u);
    EXPECT_EQ(c.reductions[0].point_order, 4u);
    EXPECT_EQ(c.reductions[1].group_order, 9u);
    EXPECT_EQ(c.reductions[1].point_order, 9u);
    EXPECT_TRUE(verify(c));

    QCurve two(k, q(k, -1), q(k, 0));
    EXPECT_TRUE(std::holds_alternative<Inconclusive>(
        ec_nontorsion_order_mismatch(two, two.point(q(k, 0), q(k, 0)), p3, p5)));
    auto p13 = UnramifiedPrime::create(k, 13, {0, 1});
    try {
        (void)ec_nontorsion_order_mismatch(e, e.point(q(k, 0), q(k, 7)), p3, p13);
        FAIL() << "expected bad reduction";
    } catch (const HypothesisError& err) {
        EXPECT_EQ(err.tag(), "good-reduction");
    }
}

TEST(Isomorphism, FourthPowers) {
    auto k = Q();
    EXPECT_TRUE(ec_qbar_isomorphic(k, q(k, 3), q(k, 3)));
    EXPECT_TRUE(ec_qbar_isomorphic(k, q(k, 3), q(k, -3)));
    EXPECT_FALSE(ec_qbar_isomorphic(k, q(k, 3), q(k, 5)));
    EXPECT_EQ(QCurve(k, q(k, 1), q(k, 9)).j_invariant(), q(k, 6912, 2191));
    EXPECT_EQ(QCurve(k, q(k, 1), q(k, 25)).j_invariant(), q(k, 6912, 16879));
}

TEST(Collinear, HorizontalLines) {
    auto k = Q();
    // y^2 = (x-1)(x-2)(x-3) + 25 after x -> x + 2.
    QCurve e(k, q(k, -1), q(k, 25));
    EXPECT_TRUE(ec_collinear_sum_zero(e, e.point(q(k, -1), q(k, 5)), e.point(q(k, 0), q(k, 5)), e.point(q(k, 1), q(k, 5))));
    QCurve f(k, q(k, -16), q(k, 9));
    EXPECT_TRUE(ec_collinear_sum_zero(f, f.point(q(k, 0), q(k, 3)), f.point(q(k, 4), q(k, 3)), f.point(q(k, -4), q(k, 3))));
    EXPECT_THROW(ec_collinear_sum_zero(f, f.point(q(k, 0), q(k, 3)), f.point(q(k, 4), q(k, 3)), NFPoint::affine(q(k, 1), q(k, 3))),
                 DomainError);
}

TEST(Reduction, Compatibility) {
    auto k = NumberField::certify(P({647, 0, 1}));
    auto wp = UnramifiedPrime::create(k, 29, {7, 1});
    auto d = k.from_integer(98) + k.generator();
    QCurve e(k, k.one(), d * d);
    auto er = ec_reduce(e, wp);
    auto p = e.point(k.zero(), d);
    std::vector<NFPoint> pts{p, e.add(p, p), e.neg(p)};
    pts.push_back(e.add(pts[1], p));
    for (const auto& a : pts)
        for (const auto& b : pts) EXPECT_EQ(ec_reduce(e.add(a, b), wp), er.add(ec_reduce(a, wp), ec_reduce(b, wp)));
}
