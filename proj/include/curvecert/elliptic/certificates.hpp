#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvecert/elliptic/finite.hpp"
#include "curvecert/galois/symmetric.hpp"

namespace curvecert {

using NFCurve = EllipticCurve<NumberField>;
using NFPoint = EPoint<NumberField>;

/// What was computed at one prime: #E(O/P) and the order of P mod P.
struct ReductionWitness {
    UnramifiedPrime prime;
    std::uint64_t group_order;
    std::uint64_t point_order;

    friend bool operator==(const ReductionWitness&, const ReductionWitness&) = default;
};

/// Evidence that a point of E(K) has infinite order.
/// method: "lutz-nagell", "two-prime" or "order-mismatch".
struct EInfOrderCert {
    std::string method;
    NFCurve curve;
    NFPoint point;
    std::vector<ReductionWitness> reductions;
    // lutz-nagell only: y^2, 4a^3 + 27b^2 and its remainder mod y^2.
    Integer y_squared, disc_term, remainder;
    std::vector<std::string> transcript;
};

namespace detail {

inline std::optional<Integer> as_integer(const NFElement& e) {
    if (!e.is_rational() || !is_integral(e.coefficients()[0])) return std::nullopt;
    return e.coefficients()[0].get_num();
}

inline void require_degree_one_odd(const UnramifiedPrime& pr, const std::string& name) {
    if (pr.residue_degree() != 1)
        throw HypothesisError("residue-field", name + " must have prime residue field (residue degree 1)");
}

// (q - p - 1) > 0 and (q - p - 1)^2 > 4p, i.e. q > p + 1 + 2 sqrt(p).
inline bool hasse_gap(std::uint64_t p, std::uint64_t q) {
    if (q <= p + 1) return false;
    Integer g = static_cast<unsigned long>(q - p - 1);
    return g * g > 4 * Integer(static_cast<unsigned long>(p));
}

}  // namespace detail

/// For integral a, b and integral P = (x, y) over Q: y != 0 and y^2 not dividing
/// 4a^3 + 27b^2 rules out every finite order.
inline std::variant<EInfOrderCert, Inconclusive> ec_lutz_nagell_nontorsion(const NFCurve& e, const NFPoint& p) {
    if (e.field().degree() != 1) throw DomainError("Lutz-Nagell certificate needs a curve over Q");
    if (p.infinity || !e.on_curve(p)) throw DomainError("point is not an affine point on the curve");
    auto a = detail::as_integer(e.a()), b = detail::as_integer(e.b());
    auto x = detail::as_integer(p.x), y = detail::as_integer(p.y);
    if (!a || !b) throw DomainError("curve coefficients must be integers");
    if (!x || !y) throw DomainError("point must have integer coordinates");
    if (*y == 0) return Inconclusive{"y = 0: the point has order 2"};
    Integer term = 4 * *a * *a * *a + 27 * *b * *b;
    Integer y2 = *y * *y;
    Integer rem = term % y2;
    if (rem < 0) rem += y2;
    if (rem == 0) return Inconclusive{"y^2 divides 4a^3 + 27b^2"};
    EInfOrderCert cert{"lutz-nagell", e, p, {}, y2, term, rem, {}};
    cert.transcript = {"y = " + y->get_str() + " != 0, so P is not 2-torsion",
                       "4a^3 + 27b^2 = " + term.get_str() + " = " + y2.get_str() + "*q + " + rem.get_str(),
                       "a torsion point of order >= 3 would need y^2 | 4a^3 + 27b^2"};
    return cert;
}

/// Two-prime reduction argument: P reduces to a point of order 2 mod q, is not
/// 2-torsion over K, and #E(O/p) < q (after the Hasse gap q > p + 1 + 2 sqrt(p)).
/// Prime-to-q torsion injects mod q, q-power torsion injects mod p.
inline EInfOrderCert ec_nontorsion_two_prime(const NFCurve& e, const NFPoint& pt, const UnramifiedPrime& wp,
                                             const UnramifiedPrime& wq,
                                             std::uint64_t count_bound = kDefaultCountBound) {
    if (pt.infinity || !e.on_curve(pt)) throw DomainError("point is not an affine point on the curve");
    if (!(wp.field() == e.field()) || !(wq.field() == e.field())) throw DomainError("primes belong to a different field");
    detail::require_degree_one_odd(wp, "first prime");
    detail::require_degree_one_odd(wq, "second prime");
    std::uint64_t p = wp.p(), q = wq.p();
    std::vector<std::string> log;
    log.push_back("residue fields F_" + std::to_string(p) + " and F_" + std::to_string(q) + ", both odd and unramified");
    if (!detail::hasse_gap(p, q))
        throw HypothesisError("hasse-gap", std::to_string(q) + " is not greater than " + std::to_string(p) + " + 1 + 2*sqrt(" +
                                               std::to_string(p) + ")");
    log.push_back(std::to_string(q) + " > " + std::to_string(p) + " + 1 + 2*sqrt(" + std::to_string(p) + ")");
    EllipticCurve<GaloisField> ep = [&] {
        try {
            return ec_reduce(e, wp);
        } catch (const HypothesisError& err) {
            throw HypothesisError("hypothesis-2", std::string("discriminant not a unit at the first prime: ") + err.what());
        }
    }();
    log.push_back("-16(4a^3 + 27b^2) is not in the first prime (sign normalization: stored with the factor -16)");
    EllipticCurve<GaloisField> eq = [&] {
        try {
            return ec_reduce(e, wq);
        } catch (const HypothesisError& err) {
            throw HypothesisError("good-reduction", std::string("bad reduction at the second prime: ") + err.what());
        }
    }();
    log.push_back("good reduction at the second prime");
    if (pt.y.is_zero()) throw HypothesisError("not-2-torsion", "y = 0, so P is 2-torsion");
    log.push_back("y != 0, so P is not 2-torsion over K");
    auto pq = ec_reduce(pt, wq);
    std::uint64_t nq = ec_count_points(eq, count_bound);
    std::uint64_t oq = pq.infinity ? 1 : ec_point_order(eq, pq, nq);
    if (oq != 2) throw HypothesisError("hypothesis-3", "P mod the second prime has order " + std::to_string(oq) + ", not 2");
    log.push_back("P mod the second prime has order 2");
    std::uint64_t np = ec_count_points(ep, count_bound);
    auto pp = ec_reduce(pt, wp);
    std::uint64_t op = pp.infinity ? 1 : ec_point_order(ep, pp, np);
    if (np >= q) throw Error("#E(F_p) >= q despite the Hasse gap (internal error)");
    log.push_back("#E(F_" + std::to_string(p) + ") = " + std::to_string(np) + " < " + std::to_string(q));
    EInfOrderCert cert{"two-prime", e, pt, {{wp, np, op}, {wq, nq, oq}}, 0, 0, 0, std::move(log)};
    return cert;
}

/// Torsion injects under reduction at odd unramified primes of good reduction,
/// so distinct reduced orders force infinite order.
inline std::variant<EInfOrderCert, Inconclusive> ec_nontorsion_order_mismatch(const NFCurve& e, const NFPoint& pt,
                                                                              const UnramifiedPrime& p1,
                                                                              const UnramifiedPrime& p2,
                                                                              std::uint64_t count_bound = kDefaultCountBound) {
    if (pt.infinity || !e.on_curve(pt)) throw DomainError("point is not an affine point on the curve");
    if (!(p1.field() == e.field()) || !(p2.field() == e.field())) throw DomainError("primes belong to a different field");
    std::vector<ReductionWitness> w;
    for (const auto* pr : {&p1, &p2}) {
        auto er = ec_reduce(e, *pr);
        auto r = ec_reduce(pt, *pr);
        std::uint64_t n = ec_count_points(er, count_bound);
        w.push_back({*pr, n, r.infinity ? 1 : ec_point_order(er, r, n)});
    }
    if (w[0].point_order == w[1].point_order)
        return Inconclusive{"reduced orders agree (" + std::to_string(w[0].point_order) + ")"};
    std::vector<std::string> log = {
        "good reduction at both primes (odd, unramified)",
        "order of P mod the first prime: " + std::to_string(w[0].point_order) + " (group order " + std::to_string(w[0].group_order) + ")",
        "order of P mod the second prime: " + std::to_string(w[1].point_order) + " (group order " + std::to_string(w[1].group_order) + ")",
        "a torsion point would have the same order at both primes"};
    return EInfOrderCert{"order-mismatch", e, pt, std::move(w), 0, 0, 0, std::move(log)};
}

/// Re-derives the certificate from the stored curve, point and primes.
inline bool verify(const EInfOrderCert& cert, std::uint64_t count_bound = kDefaultCountBound) {
    try {
        if (!cert.curve.on_curve(cert.point) || cert.point.infinity) return false;
        if (cert.method == "lutz-nagell") {
            auto r = ec_lutz_nagell_nontorsion(cert.curve, cert.point);
            if (!std::holds_alternative<EInfOrderCert>(r)) return false;
            const auto& c = std::get<EInfOrderCert>(r);
            return c.y_squared == cert.y_squared && c.disc_term == cert.disc_term && c.remainder == cert.remainder;
        }
        if (cert.reductions.size() != 2) return false;
        if (cert.method == "two-prime") {
            auto c = ec_nontorsion_two_prime(cert.curve, cert.point, cert.reductions[0].prime, cert.reductions[1].prime,
                                             count_bound);
            return c.reductions == cert.reductions;
        }
        if (cert.method == "order-mismatch") {
            auto r = ec_nontorsion_order_mismatch(cert.curve, cert.point, cert.reductions[0].prime,
                                                  cert.reductions[1].prime, count_bound);
            return std::holds_alternative<EInfOrderCert>(r) && std::get<EInfOrderCert>(r).reductions == cert.reductions;
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

}  // namespace curvecert
