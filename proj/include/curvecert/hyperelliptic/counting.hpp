#pragma once

#include <vector>

#include "curvecert/hyperelliptic/jacobian.hpp"
#include "curvecert/exactfield/finite_poly.hpp"

namespace curvecert {

inline constexpr std::uint64_t kDefaultHypCountBound = 1000000;

namespace detail {

// Absolute trace F_{2^k} -> F_2.
inline bool trace_is_zero(const GaloisElement& c, std::size_t k) {
    GaloisElement t = c, s = c;
    for (std::size_t i = 1; i < k; ++i) {
        t = t * t;
        s = s + t;
    }
    return s.is_zero();
}

// Affine solutions of y^2 + h y = g over the field of h and g.
inline std::uint64_t count_affine(const FqPoly& h, const FqPoly& g, std::uint64_t bound) {
    const GaloisField& k = g.field();
    if (k.order_integer() > static_cast<unsigned long>(bound))
        throw BoundExceeded("field of order " + k.order_integer().get_str() + " exceeds the counting bound " +
                            std::to_string(bound));
    std::uint64_t q = k.order();
    std::uint64_t n = 0;
    if (k.characteristic() == 2) {
        for (std::uint64_t i = 0; i < q; ++i) {
            GaloisElement x = k.element_at(i);
            GaloisElement hx = h(x);
            if (hx.is_zero()) {
                n += 1;
            } else {
                GaloisElement inv = k.inverse(hx);
                if (trace_is_zero(g(x) * inv * inv, k.degree())) n += 2;
            }
        }
        return n;
    }
    std::vector<std::uint8_t> roots(q, 0);
    for (std::uint64_t i = 0; i < q; ++i) {
        GaloisElement y = k.element_at(i);
        roots[k.index_of(y * y)] += 1;
    }
    FqPoly w = h * h + g.scaled(k.from_integer(4));
    for (std::uint64_t i = 0; i < q; ++i) n += roots[k.index_of(w(k.element_at(i)))];
    return n;
}

}  // namespace detail

/// #C(F_q): affine points plus the single point at infinity.
inline std::uint64_t hc_count_points(const HyperellipticCurve<GaloisField>& c, std::uint64_t bound = kDefaultHypCountBound) {
    return detail::count_affine(c.h(), c.g(), bound) + 1;
}

/// #C(F_{q^r}).
inline std::uint64_t hc_count_points_over(const HyperellipticCurve<GaloisField>& c, std::size_t r,
                                          std::uint64_t bound = kDefaultHypCountBound) {
    if (r == 1) return hc_count_points(c, bound);
    if (ipow(c.field().order_integer(), r) > static_cast<unsigned long>(bound))
        throw BoundExceeded("extension of degree " + std::to_string(r) + " exceeds the counting bound");
    FieldEmbedding emb = extension_of(c.field(), r);
    return detail::count_affine(emb(c.h()), emb(c.g()), bound) + 1;
}

/// L(T) = a_0 + a_1 T + ... + a_{2g} T^{2g}; #J(F_q) = L(1).
struct LPolynomial {
    std::vector<Integer> coeffs;
    Integer q;
    std::size_t genus = 0;
    std::vector<std::uint64_t> counts;  // #C(F_{q^r}) for r = 1, 2, ...
    bool extra_count_checked = false;

    Integer at_one() const {
        Integer s = 0;
        for (const auto& a : coeffs) s += a;
        return s;
    }
};

namespace detail {

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Power sums S_1..S_n of the reciprocal roots from elementary symmetric e_0..e_{2g}.
inline std::vector<Integer> power_sums(const std::vector<Integer>& e, std::size_t n) {
    std::vector<Integer> s(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Integer acc = k < e.size() ? Integer(static_cast<unsigned long>(k)) * e[k] : Integer(0);
        for (std::size_t i = 1; i < k; ++i) {
            Integer ek = k - i < e.size() ? e[k - i] : Integer(0);
            Integer term = ek * s[i];
            acc -= (i % 2 == 1) ? term : Integer(-term);
        }
        s[k] = (k % 2 == 1) ? acc : Integer(-acc);
    }
    return s;
}

}  // namespace detail

/// L-polynomial from #C(F_{q^r}), r = 1..g, by Newton's identities; checked
/// against the Weil bounds and, when within the bound, against #C(F_{q^{g+1}}).
inline LPolynomial hc_lpoly(const HyperellipticCurve<GaloisField>& c, std::uint64_t bound = kDefaultHypCountBound) {
    std::size_t g = c.genus();
    const Integer& q = c.field().order_integer();
    LPolynomial out;
    out.q = q;
    out.genus = g;
    std::vector<Integer> s(g + 1);
    for (std::size_t r = 1; r <= g; ++r) {
        std::uint64_t n = hc_count_points_over(c, r, bound);
        out.counts.push_back(n);
        s[r] = ipow(q, r) + 1 - Integer(static_cast<unsigned long>(n));
    }
    std::vector<Integer> e(2 * g + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= g; ++k) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[k - i] * s[i];
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), k)) throw Error("Newton identity not integral: point counts are inconsistent");
        e[k] = acc / static_cast<unsigned long>(k);
    }
    for (std::size_t k = g + 1; k <= 2 * g; ++k) e[k] = e[2 * g - k] * ipow(q, k - g);
    out.coeffs.resize(2 * g + 1);
    for (std::size_t j = 0; j <= 2 * g; ++j) out.coeffs[j] = (j % 2 == 0) ? e[j] : Integer(-e[j]);
    for (std::size_t j = 0; j <= 2 * g; ++j) {
        Integer b = detail::binomial(2 * g, j);
        if (out.coeffs[j] * out.coeffs[j] > b * b * ipow(q, j)) throw Error("L-polynomial violates the Weil bound");
    }
    for (std::size_t j = 0; j < g; ++j)
        if (out.coeffs[2 * g - j] != ipow(q, g - j) * out.coeffs[j]) throw Error("functional equation violated");
    if (ipow(q, g + 1) <= static_cast<unsigned long>(bound)) {
        std::uint64_t n = hc_count_points_over(c, g + 1, bound);
        out.counts.push_back(n);
        auto sums = detail::power_sums(e, g + 1);
        Integer predicted = ipow(q, g + 1) + 1 - sums[g + 1];
        if (predicted != static_cast<unsigned long>(n))
            throw Error("L-polynomial does not predict #C over the degree-" + std::to_string(g + 1) + " extension");
        out.extra_count_checked = true;
    }
    return out;
}

/// Exact order of D in J(F_q), given a multiple n of it (for example L(1)).
inline Integer mum_order(const Jacobian<GaloisField>& j, const MumfordDivisor<GaloisField>& d, const Integer& n) {
    if (!j.is_valid(d)) throw DomainError("Mumford condition violated");
    if (!j.smul(n, d).is_neutral()) throw Error("group order does not annihilate divisor");
    if (!n.fits_ulong_p()) throw BoundExceeded("Jacobian order exceeds 64 bits");
    Integer order = n;
    for (const auto& [l, _] : factor_u64(n.get_ui())) {
        Integer L = static_cast<unsigned long>(l);
        while (mpz_divisible_p(order.get_mpz_t(), L.get_mpz_t()) && j.smul(order / L, d).is_neutral()) order /= L;
    }
    return order;
}

inline Integer mum_order(const Jacobian<GaloisField>& j, const MumfordDivisor<GaloisField>& d,
                         std::uint64_t bound = kDefaultHypCountBound) {
    return mum_order(j, d, hc_lpoly(j.curve(), bound).at_one());
}

}  // namespace curvecert
