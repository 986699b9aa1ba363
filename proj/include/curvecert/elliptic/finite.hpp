#pragma once

#include <vector>

#include "curvecert/elliptic/curve.hpp"
#include "curvecert/numberfield/prime.hpp"

namespace curvecert {

inline constexpr std::uint64_t kDefaultCountBound = 1000000;

/// #E(F_q) by an x-sweep against a table of square counts.
inline std::uint64_t ec_count_points(const EllipticCurve<GaloisField>& e, std::uint64_t bound = kDefaultCountBound) {
    const GaloisField& k = e.field();
    if (k.order_integer() > static_cast<unsigned long>(bound))
        throw BoundExceeded("field of order " + k.order_integer().get_str() + " exceeds the counting bound " +
                            std::to_string(bound) + "; use a smaller prime");
    std::uint64_t q = k.order();
    std::vector<std::uint8_t> roots(q, 0);
    for (std::uint64_t i = 0; i < q; ++i) {
        GaloisElement y = k.element_at(i);
        roots[k.index_of(y * y)] += 1;
    }
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < q; ++i) n += roots[k.index_of(e.rhs(k.element_at(i)))];
    Integer gap = Integer(static_cast<unsigned long>(n)) - static_cast<unsigned long>(q) - 1;
    if (gap * gap > 4 * k.order_integer()) throw Error("point count violates the Hasse bound (internal error)");
    return n;
}

/// Exact order of P, given the group order n.
inline std::uint64_t ec_point_order(const EllipticCurve<GaloisField>& e, const EPoint<GaloisField>& p, std::uint64_t n) {
    if (!e.on_curve(p)) throw DomainError("point is not on the curve");
    if (!e.smul(Integer(static_cast<unsigned long>(n)), p).infinity) throw Error("group order does not annihilate point");
    std::uint64_t order = n;
    for (const auto& [l, _] : factor_u64(n)) {
        while (order % l == 0 && e.smul(Integer(static_cast<unsigned long>(order / l)), p).infinity) order /= l;
    }
    return order;
}

inline std::uint64_t ec_point_order(const EllipticCurve<GaloisField>& e, const EPoint<GaloisField>& p) {
    return ec_point_order(e, p, ec_count_points(e));
}

/// Reduction of a curve with P-integral coefficients; throws on bad reduction.
inline EllipticCurve<GaloisField> ec_reduce(const EllipticCurve<NumberField>& e, const UnramifiedPrime& pr) {
    if (!pr.is_integral(e.a()) || !pr.is_integral(e.b()))
        throw HypothesisError("integral", "curve coefficients are not integral at the " + pr.description());
    GaloisElement a = pr.reduce(e.a()), b = pr.reduce(e.b());
    GaloisElement disc = pr.residue_field().from_integer(4) * a * a * a + pr.residue_field().from_integer(27) * b * b;
    if (disc.is_zero()) throw HypothesisError("good-reduction", "discriminant lies in the " + pr.description());
    return EllipticCurve<GaloisField>(pr.residue_field(), a, b);
}

/// Reduction of a point on an integral model; non-integral points reduce to infinity.
inline EPoint<GaloisField> ec_reduce(const EPoint<NumberField>& p, const UnramifiedPrime& pr) {
    if (p.infinity || !pr.is_integral(p.x) || !pr.is_integral(p.y)) return EPoint<GaloisField>::at_infinity();
    return EPoint<GaloisField>::affine(pr.reduce(p.x), pr.reduce(p.y));
}

}  // namespace curvecert
