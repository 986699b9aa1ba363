#pragma once

#include "curvecert/funcfield/rational_function.hpp"

namespace curvecert {

/// F_q(t)[U]/(f) for monic separable f; holds the class u of U, a root of f.
class FFQuotientRing {
public:
    FFQuotientRing(RationalFunctionField base, FFPoly modulus) : base_(std::move(base)), f_(std::move(modulus)) {
        if (!(f_.field() == base_)) throw DomainError("modulus is over a different field");
        if (f_.is_constant() || !f_.is_monic()) throw DomainError("modulus must be monic of degree >= 1");
        if (!poly_is_separable(f_)) throw DomainError("modulus is not separable over " + base_.description());
    }

    const RationalFunctionField& base() const { return base_; }
    const FFPoly& modulus() const { return f_; }

    FFPoly reduce(const FFPoly& a) const {
        if (!(a.field() == base_)) throw DomainError("modulus mismatch: element over a different field");
        return a.deg() < f_.deg() || a.is_zero() ? a : a % f_;
    }
    FFPoly root() const { return reduce(FFPoly::x(base_)); }
    FFPoly embed(const RatFunc& c) const { return FFPoly::constant(base_, c); }
    FFPoly mul(const FFPoly& a, const FFPoly& b) const { return reduce(a * b); }

    /// g(u), by Horner's rule in the quotient.
    FFPoly evaluate_at_root(const FFPoly& g) const {
        if (!(g.field() == base_)) throw DomainError("modulus mismatch: polynomial over a different field");
        FFPoly u = root();
        FFPoly acc(base_);
        for (std::size_t i = g.size(); i-- > 0;) acc = reduce(acc * u + embed(g.coeff(i)));
        return acc;
    }

private:
    RationalFunctionField base_;
    FFPoly f_;
};

/// Checks y^2 + alpha*y = g(u) in R, i.e. that (u, y) lies on y^2 + alpha y = g(x).
inline bool qr_eval_point(const FFQuotientRing& r, const FFPoly& g, const RatFunc& y, const RatFunc& alpha) {
    FFPoly gu = r.evaluate_at_root(g);
    FFPoly lhs = r.embed(y * y + alpha * y);
    return (gu - lhs).is_zero();
}

inline bool qr_eval_point(const FFQuotientRing& r, const FFPoly& g, const RatFunc& y) {
    return qr_eval_point(r, g, y, r.base().zero());
}

/// gcd(g, g') = 1 over F_q(t).
inline bool ff_separable(const FFPoly& g) {
    if (g.is_constant()) throw DomainError("separability of a constant polynomial");
    return poly_is_separable(g);
}

/// U^N + U + t with N = (q^m - 1)/(q - 1) over K = F_q(t).
inline FFPoly ff_trinomial(const RationalFunctionField& k, std::size_t m, std::size_t max_degree = 1u << 20) {
    if (m < 2) throw DomainError("trinomial needs m >= 2");
    Integer q = k.base().order_integer();
    Integer n = (ipow(q, m) - 1) / (q - 1);
    if (n > static_cast<unsigned long>(max_degree)) throw BoundExceeded("trinomial degree " + n.get_str() + " exceeds bound");
    std::size_t deg = n.get_ui();
    std::vector<RatFunc> c(deg + 1, k.zero());
    c[deg] = k.one();
    c[1] = c[1] + k.one();
    c[0] = k.t();
    return FFPoly(k, std::move(c));
}

}  // namespace curvecert
