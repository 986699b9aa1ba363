#pragma once

#include <string>
#include <utility>

#include "curvecert/exactfield/field.hpp"

namespace curvecert {

/// Point of a Weierstrass curve: the point at infinity or an affine (x, y).
template <Field F>
struct EPoint {
    using Element = typename F::Element;
    bool infinity = true;
    Element x{}, y{};

    static EPoint at_infinity() { return EPoint{}; }
    static EPoint affine(Element x, Element y) { return EPoint{false, std::move(x), std::move(y)}; }

    friend bool operator==(const EPoint& a, const EPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

/// y^2 = x^3 + a x + b over a field of characteristic != 2, with
/// discriminant -16(4a^3 + 27b^2) != 0.
template <Field F>
class EllipticCurve {
public:
    using Element = typename F::Element;
    using Point = EPoint<F>;

    EllipticCurve(F field, Element a, Element b) : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
        if (field_.characteristic() == 2) throw DomainError("short Weierstrass form needs characteristic != 2");
        if (field_.is_zero(discriminant())) throw SingularError("singular curve: 4a^3 + 27b^2 = 0");
    }

    const F& field() const { return field_; }
    const Element& a() const { return a_; }
    const Element& b() const { return b_; }

    /// 4a^3 + 27b^2.
    Element disc_term() const {
        Element t = field_.from_integer(4) * a_ * a_ * a_ + field_.from_integer(27) * b_ * b_;
        return t;
    }
    /// -16(4a^3 + 27b^2).
    Element discriminant() const {
        Element d = field_.from_integer(-16) * disc_term();
        return d;
    }
    /// 6912 a^3 / (4a^3 + 27b^2).
    Element j_invariant() const {
        Element j = field_.from_integer(6912) * a_ * a_ * a_ * field_.inverse(disc_term());
        return j;
    }

    Element rhs(const Element& x) const {
        Element r = (x * x + a_) * x + b_;
        return r;
    }

    bool on_curve(const Point& p) const { return p.infinity || p.y * p.y == rhs(p.x); }

    Point point(const Element& x, const Element& y) const {
        Point p = Point::affine(x, y);
        if (!on_curve(p)) throw DomainError("point is not on the curve");
        return p;
    }

    Point neg(const Point& p) const {
        if (p.infinity) return p;
        return Point::affine(p.x, -p.y);
    }

    Point add(const Point& p, const Point& q) const {
        if (p.infinity) return q;
        if (q.infinity) return p;
        Element lambda;
        if (p.x == q.x) {
            if (field_.is_zero(p.y + q.y)) return Point::at_infinity();
            lambda = (field_.from_integer(3) * p.x * p.x + a_) * field_.inverse(field_.from_integer(2) * p.y);
        } else {
            lambda = (q.y - p.y) * field_.inverse(q.x - p.x);
        }
        Element x3 = lambda * lambda - p.x - q.x;
        Element y3 = lambda * (p.x - x3) - p.y;
        return Point::affine(std::move(x3), std::move(y3));
    }

    Point smul(Integer n, Point p) const {
        if (n < 0) {
            n = -n;
            p = neg(p);
        }
        Point r = Point::at_infinity();
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) r = add(r, p);
            n >>= 1;
            if (n > 0) p = add(p, p);
        }
        return r;
    }

    std::string to_string() const {
        return "y^2 = x^3 + (" + element_string(a_) + ")*x + (" + element_string(b_) + ")";
    }

    static std::string element_string(const Element& e) {
        if constexpr (requires { e.to_string(); })
            return e.to_string();
        else
            return curvecert::to_string(e);
    }

private:
    F field_;
    Element a_, b_;
};

template <Field F>
std::string to_string(const EPoint<F>& p) {
    if (p.infinity) return "infinity";
    return "(" + EllipticCurve<F>::element_string(p.x) + ", " + EllipticCurve<F>::element_string(p.y) + ")";
}

template <Field F>
EllipticCurve<F> ec_create(const F& field, const typename F::Element& a, const typename F::Element& b) {
    return EllipticCurve<F>(field, a, b);
}

template <Field F>
EPoint<F> ec_add(const EllipticCurve<F>& e, const EPoint<F>& p, const EPoint<F>& q) {
    if (!e.on_curve(p) || !e.on_curve(q)) throw DomainError("point is not on the curve");
    return e.add(p, q);
}

template <Field F>
EPoint<F> ec_neg(const EllipticCurve<F>& e, const EPoint<F>& p) {
    if (!e.on_curve(p)) throw DomainError("point is not on the curve");
    return e.neg(p);
}

template <Field F>
EPoint<F> ec_smul(const EllipticCurve<F>& e, const Integer& n, const EPoint<F>& p) {
    if (!e.on_curve(p)) throw DomainError("point is not on the curve");
    return e.smul(n, p);
}

template <Field F>
bool ec_on_curve(const EllipticCurve<F>& e, const EPoint<F>& p) {
    return e.on_curve(p);
}

/// Curves y^2 = x^3 + x + d^2 and y^2 = x^3 + x + d'^2 are isomorphic over the
/// algebraic closure iff d^4 = d'^4 (equal j-invariants).
template <Field F>
bool ec_qbar_isomorphic(const F& field, const typename F::Element& d, const typename F::Element& d2) {
    EllipticCurve<F> e1(field, field.one(), d * d);
    EllipticCurve<F> e2(field, field.one(), d2 * d2);
    typename F::Element d4 = d * d * d * d, e4 = d2 * d2 * d2 * d2;
    return d4 == e4;
}

/// For three distinct points on a common horizontal line, checks P1 + P2 + P3 = infinity.
template <Field F>
bool ec_collinear_sum_zero(const EllipticCurve<F>& e, const EPoint<F>& p1, const EPoint<F>& p2, const EPoint<F>& p3) {
    for (const auto* p : {&p1, &p2, &p3})
        if (p->infinity || !e.on_curve(*p)) throw DomainError("point is not an affine point on the curve");
    if (!(p1.y == p2.y) || !(p2.y == p3.y)) throw DomainError("points do not share a y-coordinate");
    if (p1.x == p2.x || p2.x == p3.x || p1.x == p3.x) throw DomainError("points are not distinct");
    return e.add(e.add(p1, p2), p3).infinity;
}

}  // namespace curvecert
