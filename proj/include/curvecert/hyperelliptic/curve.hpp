#pragma once

#include <string>
#include <utility>

#include "curvecert/exactfield/polynomial.hpp"

namespace curvecert {

namespace detail {

// Affine nonsingularity of y^2 + h y = g.
template <Field F>
bool affine_nonsingular(const Polynomial<F>& h, const Polynomial<F>& g) {
    const F& k = g.field();
    if (k.characteristic() != 2) {
        Polynomial<F> w = h * h + g.scaled(k.from_integer(4));
        return poly_is_separable(w);
    }
    // Singular points satisfy h(x) = 0 and g'(x)^2 = h'(x)^2 g(x).
    if (h.is_zero()) return false;
    Polynomial<F> dh = h.derivative(), dg = g.derivative();
    return poly_gcd(h, dg * dg + dh * dh * g).is_one();
}

}  // namespace detail

/// y^2 + h(x) y = g(x) with g monic of odd degree 2*genus + 1 >= 3, deg h <= genus,
/// nonsingular; one point at infinity.
template <Field F>
class HyperellipticCurve {
public:
    using Element = typename F::Element;
    using Poly = Polynomial<F>;

    HyperellipticCurve(F field, Poly h, Poly g) : field_(std::move(field)), h_(std::move(h)), g_(std::move(g)) {
        if (!(h_.field() == field_) || !(g_.field() == field_)) throw DomainError("curve polynomials over a different field");
        if (g_.is_zero() || g_.deg() < 3 || g_.deg() % 2 == 0)
            throw DomainError("g must have odd degree >= 3 (even degree: use HyperellipticModel)");
        if (!g_.is_monic()) throw DomainError("g must be monic");
        genus_ = (g_.deg() - 1) / 2;
        if (!h_.is_zero() && h_.deg() > genus_) throw DomainError("deg h must not exceed the genus");
        if (!detail::affine_nonsingular(h_, g_)) throw SingularError("singular model y^2 + h y = g");
    }

    HyperellipticCurve(F field, Poly g) : HyperellipticCurve(field, Poly(field), std::move(g)) {}

    const F& field() const { return field_; }
    const Poly& h() const { return h_; }
    const Poly& g() const { return g_; }
    std::size_t genus() const { return genus_; }

    bool on_curve(const Element& x, const Element& y) const { return y * y + h_(x) * y == g_(x); }
    /// Fixed by the hyperelliptic involution (x, y) -> (x, -y - h(x)).
    bool is_weierstrass(const Element& x, const Element& y) const {
        return field_.is_zero(field_.from_integer(2) * y + h_(x));
    }

    std::string to_string() const {
        if (h_.is_zero()) return "y^2 = " + g_.to_string();
        return "y^2 + (" + h_.to_string() + ")*y = " + g_.to_string();
    }

private:
    F field_;
    Poly h_, g_;
    std::size_t genus_ = 0;
};

template <Field F>
HyperellipticCurve<F> hc_create(const F& field, const Polynomial<F>& h, const Polynomial<F>& g) {
    return HyperellipticCurve<F>(field, h, g);
}

/// Any plane model y^2 + h y = g (either parity of deg g), used where only point
/// membership and affine smoothness are needed.
template <Field F>
class HyperellipticModel {
public:
    using Element = typename F::Element;
    using Poly = Polynomial<F>;

    HyperellipticModel(F field, Poly h, Poly g) : field_(std::move(field)), h_(std::move(h)), g_(std::move(g)) {
        if (g_.is_zero() || g_.deg() < 3) throw DomainError("g must have degree >= 3");
        if (!detail::affine_nonsingular(h_, g_)) throw SingularError("singular model y^2 + h y = g");
    }

    const F& field() const { return field_; }
    const Poly& h() const { return h_; }
    const Poly& g() const { return g_; }
    std::size_t genus() const { return (g_.deg() - 1) / 2; }
    bool on_curve(const Element& x, const Element& y) const { return y * y + h_(x) * y == g_(x); }

private:
    F field_;
    Poly h_, g_;
};

}  // namespace curvecert
