#pragma once

#include "curvecert/hyperelliptic/curve.hpp"

namespace curvecert {

/// Mumford pair (u, v): u monic, deg v < deg u, u | v^2 + h v - g. Stands for
/// the class of div(u, y - v) minus deg(u) times infinity.
template <Field F>
struct MumfordDivisor {
    Polynomial<F> u, v;

    bool is_neutral() const { return u.is_one(); }
    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }
    std::string to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ")"; }
};

/// Jacobian group law by Cantor's algorithm (composition and reduction), valid
/// for any h, so in characteristic 2 as well.
template <Field F>
class Jacobian {
public:
    using Poly = Polynomial<F>;
    using Divisor = MumfordDivisor<F>;

    explicit Jacobian(HyperellipticCurve<F> c) : c_(std::move(c)) {}

    const HyperellipticCurve<F>& curve() const { return c_; }

    Divisor neutral() const { return {one(), Poly(c_.field())}; }

    /// Mumford condition plus normalization.
    bool is_valid(const Divisor& d) const {
        if (d.u.is_zero() || !d.u.is_monic()) return false;
        if (!d.v.is_zero() && d.v.deg() >= d.u.deg()) return false;
        return ((d.v * d.v + c_.h() * d.v - c_.g()) % d.u).is_zero();
    }
    bool is_reduced(const Divisor& d) const { return is_valid(d) && d.u.deg() <= c_.genus(); }

    Divisor make(Poly u, Poly v) const {
        Divisor d{std::move(u), std::move(v)};
        if (!is_valid(d)) throw DomainError("Mumford condition fails for " + d.to_string());
        return reduce(d);
    }

    /// [P - infinity] for an affine point P.
    Divisor embed(const typename F::Element& x, const typename F::Element& y) const {
        if (!c_.on_curve(x, y)) throw DomainError("point is not on the curve");
        const F& k = c_.field();
        return {Poly(k, {-x, k.one()}), Poly::constant(k, y)};
    }

    Divisor neg(const Divisor& d) const {
        return {d.u, (-(c_.h() + d.v)) % d.u};
    }

    Divisor add(const Divisor& a, const Divisor& b) const { return reduce(compose(a, b)); }

    Divisor smul(Integer n, Divisor d) const {
        if (n < 0) {
            n = -n;
            d = neg(d);
        }
        Divisor r = neutral();
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) r = add(r, d);
            n >>= 1;
            if (n > 0) d = add(d, d);
        }
        return r;
    }

    Divisor compose(const Divisor& a, const Divisor& b) const {
        auto x1 = poly_xgcd(a.u, b.u);
        auto x2 = poly_xgcd(x1.gcd, a.v + b.v + c_.h());
        const Poly& d = x2.gcd;
        Poly s1 = x2.s * x1.s, s2 = x2.s * x1.t, s3 = x2.t;
        Poly u = (a.u * b.u) / (d * d);
        Poly v = ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + c_.g())) / d) % u;
        return {u, v};
    }

    Divisor reduce(Divisor d) const {
        while (d.u.deg() > c_.genus()) {
            Poly u2 = (c_.g() - c_.h() * d.v - d.v * d.v) / d.u;
            u2 = u2.monic();
            Poly v2 = (-(c_.h() + d.v)) % u2;
            d = {std::move(u2), std::move(v2)};
        }
        if (!d.v.is_zero() && d.v.deg() >= d.u.deg()) d.v = d.v % d.u;
        return d;
    }

private:
    Poly one() const { return Poly::constant(c_.field(), c_.field().one()); }
    HyperellipticCurve<F> c_;
};

template <Field F>
MumfordDivisor<F> mum_add(const Jacobian<F>& j, const MumfordDivisor<F>& a, const MumfordDivisor<F>& b) {
    if (!j.is_valid(a) || !j.is_valid(b)) throw DomainError("Mumford condition violated");
    return j.add(a, b);
}

template <Field F>
MumfordDivisor<F> mum_neg(const Jacobian<F>& j, const MumfordDivisor<F>& a) {
    if (!j.is_valid(a)) throw DomainError("Mumford condition violated");
    return j.neg(a);
}

template <Field F>
MumfordDivisor<F> mum_smul(const Jacobian<F>& j, const Integer& n, const MumfordDivisor<F>& a) {
    if (!j.is_valid(a)) throw DomainError("Mumford condition violated");
    return j.smul(n, a);
}

template <Field F>
MumfordDivisor<F> hc_embed_point(const Jacobian<F>& j, const typename F::Element& x, const typename F::Element& y) {
    return j.embed(x, y);
}

}  // namespace curvecert
