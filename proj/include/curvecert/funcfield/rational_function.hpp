#pragma once

#include <string>
#include <utility>

#include "curvecert/exactfield/finite_poly.hpp"

namespace curvecert {

/// num/den in F_q(t), kept with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : num_(GaloisField::prime(2)), den_(GaloisField::prime(2)) {}
    RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit RatFunc(FqPoly num) : num_(std::move(num)), den_(FqPoly::constant(num_.field(), num_.field().one())) {}

    const FqPoly& numerator() const { return num_; }
    const FqPoly& denominator() const { return den_; }
    const GaloisField& base() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = r.num_.scaled(-base().one());
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_polynomial() && b.is_polynomial()) {
            RatFunc r = a;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("inverse of zero in F_q(t)");
        return RatFunc(den_, num_);
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string("t");
        return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("zero denominator in F_q(t)");
        if (num_.is_zero()) {
            den_ = FqPoly::constant(den_.field(), den_.field().one());
            return;
        }
        if (!den_.is_constant()) {
            FqPoly g = poly_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        GaloisElement lc = den_.leading();
        if (!(lc == den_.field().one())) {
            GaloisElement inv = den_.field().inverse(lc);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    FqPoly num_, den_;
};

/// K = F_q(t).
class RationalFunctionField {
public:
    using Element = RatFunc;

    explicit RationalFunctionField(GaloisField base) : base_(std::move(base)) {}

    const GaloisField& base() const { return base_; }
    Element zero() const { return Element(FqPoly(base_)); }
    Element one() const { return constant(base_.one()); }
    Element from_integer(const Integer& n) const { return constant(base_.from_integer(n)); }
    Element constant(const GaloisElement& c) const { return Element(FqPoly::constant(base_, c)); }
    /// The transcendental t.
    Element t() const { return Element(FqPoly::x(base_)); }
    Element from_polynomial(const FqPoly& f) const { return Element(f); }
    Element fraction(const FqPoly& num, const FqPoly& den) const { return Element(num, den); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element inverse(const Element& a) const { return a.inverse(); }
    std::uint64_t characteristic() const { return base_.characteristic(); }

    std::string description() const { return base_.description() + "(t)"; }

    friend bool operator==(const RationalFunctionField& a, const RationalFunctionField& b) { return a.base_ == b.base_; }

private:
    GaloisField base_;
};

static_assert(Field<RationalFunctionField>);

using FFPoly = Polynomial<RationalFunctionField>;

}  // namespace curvecert
