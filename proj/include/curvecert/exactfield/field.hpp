#pragma once

#include <concepts>
#include <cstdint>

#include "curvecert/exactfield/integer.hpp"

namespace curvecert {

// A field handle F is a cheap, copyable value that creates elements. Elements
// carry whatever context they need, so arithmetic is written with operators.
template <class F>
concept Field = std::copy_constructible<F> && requires(const F& f, const typename F::Element& a, const Integer& n) {
    typename F::Element;
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_integer(n) } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.inverse(a) } -> std::same_as<typename F::Element>;
    { f.characteristic() } -> std::same_as<std::uint64_t>;
    { a + a } -> std::convertible_to<typename F::Element>;
    { a - a } -> std::convertible_to<typename F::Element>;
    { a * a } -> std::convertible_to<typename F::Element>;
    { -a } -> std::convertible_to<typename F::Element>;
    { a == a } -> std::convertible_to<bool>;
};

// Finite fields additionally support enumeration by index in [0, order()).
template <class F>
concept FiniteField = Field<F> && requires(const F& f, const typename F::Element& a, std::uint64_t i) {
    { f.order() } -> std::same_as<std::uint64_t>;
    { f.element_at(i) } -> std::same_as<typename F::Element>;
    { f.index_of(a) } -> std::same_as<std::uint64_t>;
};

/// The field of rational numbers.
class RationalField {
public:
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_integer(const Integer& n) const { return Rational(n); }
    bool is_zero(const Element& a) const { return a == 0; }
    Element inverse(const Element& a) const {
        if (a == 0) throw DomainError("inverse of zero in Q");
        return Rational(1) / a;
    }
    std::uint64_t characteristic() const { return 0; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <Field F>
typename F::Element power(const F& field, typename F::Element base, Integer e) {
    if (e < 0) {
        base = field.inverse(base);
        e = -e;
    }
    typename F::Element r = field.one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

}  // namespace curvecert
