#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "curvecert/galois/symmetric.hpp"
#include "curvecert/hyperelliptic/counting.hpp"
#include "curvecert/numberfield/prime.hpp"

namespace curvecert {

using NFHypCurve = HyperellipticCurve<NumberField>;

/// Reduction of a curve with P-integral h, g; throws unless the reduction is
/// again a nonsingular odd-degree curve.
inline HyperellipticCurve<GaloisField> hc_reduce(const NFHypCurve& c, const UnramifiedPrime& pr) {
    for (const auto* poly : {&c.h(), &c.g()})
        for (const auto& e : poly->coefficients())
            if (!pr.is_integral(e))
                throw HypothesisError("good-reduction", "curve coefficients are not integral at the " + pr.description());
    try {
        return HyperellipticCurve<GaloisField>(pr.residue_field(), pr.reduce(c.h()), pr.reduce(c.g()));
    } catch (const SingularError&) {
        throw HypothesisError("good-reduction", "the reduction at the " + pr.description() + " is singular");
    }
}

/// Evidence that [P - infinity] has infinite order in J(K): P reduces to a
/// Weierstrass point (so 2 kills the reduction), torsion injects at an odd
/// unramified prime of good reduction, and P itself is not a Weierstrass point.
struct HInfOrderCert {
    std::string method = "weierstrass-reduction";
    NFHypCurve curve;
    NFElement x, y;
    UnramifiedPrime prime;
    MumfordDivisor<GaloisField> reduced;
    std::vector<std::string> transcript;
};

inline HInfOrderCert hc_nontorsion_weierstrass_cert(const NFHypCurve& c, const NFElement& x, const NFElement& y,
                                                    const UnramifiedPrime& pr) {
    if (!(pr.field() == c.field())) throw DomainError("prime belongs to a different field");
    if (!c.on_curve(x, y)) throw DomainError("point is not on the curve");
    std::vector<std::string> log;
    log.push_back("residue characteristic " + std::to_string(pr.p()) + " is odd and does not divide disc(m)");
    auto cr = hc_reduce(c, pr);
    log.push_back("good reduction: g mod the prime is separable of the same degree");
    if (!pr.is_integral(x) || !pr.is_integral(y)) throw HypothesisError("integral", "point is not integral at the prime");
    const auto& k = c.field();
    NFElement w = k.from_integer(2) * y + c.h()(x);
    if (!pr.contains(w)) throw HypothesisError("d-in-prime", "2y + h(x) is not in the prime (for h = 0: d not in the prime)");
    log.push_back("2y + h(x) lies in the prime, so P reduces to a Weierstrass point");
    if (w.is_zero()) throw HypothesisError("d-nonzero", "P is a Weierstrass point over K (for h = 0: d = 0)");
    log.push_back("2y + h(x) != 0, so P is not a Weierstrass point over K and 2[P - inf] != 0");
    Jacobian<GaloisField> jr(cr);
    auto dr = jr.embed(pr.reduce(x), pr.reduce(y));
    if (dr.is_neutral() || !jr.add(dr, dr).is_neutral()) throw Error("reduced divisor does not have order 2 (internal error)");
    log.push_back("reduced divisor " + dr.to_string() + " has order exactly 2");
    return HInfOrderCert{"weierstrass-reduction", c, x, y, pr, dr, std::move(log)};
}

inline bool verify(const HInfOrderCert& cert) {
    try {
        auto again = hc_nontorsion_weierstrass_cert(cert.curve, cert.x, cert.y, cert.prime);
        return cert.method == again.method && again.reduced == cert.reduced;
    } catch (const Error&) {
        return false;
    }
}

/// Rank bound from Coleman's estimate #C(K) <= #C(O/P) + 2g - 2 (valid when
/// rank J(K) < g, p > 2g, P unramified of good reduction): more points force rank >= g.
struct HRankCert {
    NFHypCurve curve;
    std::vector<std::pair<NFElement, NFElement>> points;
    bool include_infinity = false;
    UnramifiedPrime prime;
    std::uint64_t residue_points = 0;  // #C(O/P), infinity included
    std::uint64_t point_count = 0;     // N
    std::size_t rank_bound = 0;
    std::vector<std::string> transcript;
};

inline std::variant<HRankCert, Inconclusive> hc_coleman_rank_cert(const NFHypCurve& c,
                                                                  const std::vector<std::pair<NFElement, NFElement>>& points,
                                                                  bool include_infinity, const UnramifiedPrime& pr,
                                                                  std::uint64_t bound = kDefaultHypCountBound) {
    if (!(pr.field() == c.field())) throw DomainError("prime belongs to a different field");
    std::size_t g = c.genus();
    if (g < 2) throw DomainError("Coleman bound needs genus >= 2");
    if (pr.p() <= 2 * g) throw HypothesisError("p-greater-than-2g", "residue characteristic " + std::to_string(pr.p()) +
                                                                       " must exceed 2g = " + std::to_string(2 * g));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!c.on_curve(points[i].first, points[i].second)) throw DomainError("point " + std::to_string(i) + " is not on the curve");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j]) throw DomainError("points are not distinct");
    }
    auto cr = hc_reduce(c, pr);
    std::uint64_t m = hc_count_points(cr, bound);
    std::uint64_t n = points.size() + (include_infinity ? 1 : 0);
    std::vector<std::string> log = {
        "p = " + std::to_string(pr.p()) + " > 2g = " + std::to_string(2 * g) + ", unramified, good reduction",
        "#C(O/P) = " + std::to_string(m),
        "N = " + std::to_string(n) + " distinct K-points (" + (include_infinity ? "infinity included" : "infinity not included") + ")",
        "rank J(K) < g would give N <= 2g - 2 + #C(O/P) = " + std::to_string(2 * g - 2 + m)};
    if (n <= 2 * g - 2 + m) return Inconclusive{"N = " + std::to_string(n) + " does not exceed 2g - 2 + #C(O/P) = " + std::to_string(2 * g - 2 + m)};
    return HRankCert{c, points, include_infinity, pr, m, n, g, std::move(log)};
}

inline bool verify(const HRankCert& cert, std::uint64_t bound = kDefaultHypCountBound) {
    try {
        auto r = hc_coleman_rank_cert(cert.curve, cert.points, cert.include_infinity, cert.prime, bound);
        if (!std::holds_alternative<HRankCert>(r)) return false;
        const auto& c = std::get<HRankCert>(r);
        return c.residue_points == cert.residue_points && c.point_count == cert.point_count && c.rank_bound == cert.rank_bound;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace curvecert
