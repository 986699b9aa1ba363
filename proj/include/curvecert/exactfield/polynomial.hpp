#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curvecert/exactfield/field.hpp"

namespace curvecert {

/// Polynomial degree with a distinguished value for the zero polynomial that
/// sorts below every natural number and absorbs addition.
class Degree {
public:
    constexpr Degree(std::size_t d) : value_(d) {}  // NOLINT(google-explicit-constructor)
    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return !value_.has_value(); }
    std::size_t value() const {
        if (!value_) throw DomainError("degree of the zero polynomial");
        return *value_;
    }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.value_ || !b.value_) return neg_infinity();
        return Degree(*a.value_ + *b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

private:
    constexpr Degree() = default;
    std::optional<std::size_t> value_;
};

/// Dense univariate polynomial over a field; coefficient i multiplies x^i.
/// Trailing zero coefficients are never stored.
template <Field F>
class Polynomial {
public:
    using Element = typename F::Element;

    explicit Polynomial(F field) : field_(std::move(field)) {}
    Polynomial(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const F& field, const Element& c) { return Polynomial(field, {c}); }
    static Polynomial monomial(const F& field, const Element& c, std::size_t deg) {
        std::vector<Element> v(deg + 1, field.zero());
        v[deg] = c;
        return Polynomial(field, std::move(v));
    }
    static Polynomial x(const F& field) { return monomial(field, field.one(), 1); }
    static Polynomial from_integers(const F& field, const std::vector<Integer>& coeffs) {
        std::vector<Element> v;
        v.reserve(coeffs.size());
        for (const auto& n : coeffs) v.push_back(field.from_integer(n));
        return Polynomial(field, std::move(v));
    }

    const F& field() const { return field_; }
    const std::vector<Element>& coefficients() const { return c_; }
    std::size_t size() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
    Degree degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(c_.size() - 1); }
    /// Degree as an integer; precondition: nonzero.
    std::size_t deg() const { return degree().value(); }

    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Element leading() const { return c_.empty() ? field_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

    Element operator()(const Element& at) const {
        Element acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// Evaluate at an element of another ring that accepts Element-scaled addition
    /// (e.g. an extension field); `embed` maps coefficients across.
    template <class T, class Embed>
    T evaluate_in(const T& at, const T& zero, Embed embed) const {
        T acc = zero;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + embed(*it);
        return acc;
    }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        Element inv = field_.inverse(c_.back());
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a * inv);
        return Polynomial(field_, std::move(v));
    }

    Polynomial derivative() const {
        std::vector<Element> v;
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(field_.from_integer(Integer(static_cast<unsigned long>(i))) * c_[i]);
        return Polynomial(field_, std::move(v));
    }

    Polynomial scaled(const Element& s) const {
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a * s);
        return Polynomial(field_, std::move(v));
    }

    Polynomial shifted(std::size_t k) const {
        if (c_.empty()) return *this;
        std::vector<Element> v(k, field_.zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Polynomial(field_, std::move(v));
    }

    Polynomial operator-() const {
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(-a);
        return Polynomial(field_, std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return Polynomial(a.field_);
        std::vector<Element> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.field_.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(a.field_, std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        if (c_.size() < d.c_.size()) return {Polynomial(field_), *this};
        std::vector<Element> r = c_;
        std::vector<Element> q(c_.size() - d.c_.size() + 1, field_.zero());
        Element inv = field_.inverse(d.c_.back());
        bool monic = d.c_.back() == field_.one();
        for (std::size_t k = q.size(); k-- > 0;) {
            Element coef = r[k + d.c_.size() - 1];
            if (field_.is_zero(coef)) continue;
            if (!monic) coef = coef * inv;
            q[k] = coef;
            for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] = r[k + j] - coef * d.c_[j];
        }
        r.resize(d.c_.size() - 1, field_.zero());
        return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (field_.is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            bool unit = c_[i] == field_.one();
            if (!unit || i == 0) os << "(" << element_string(c_[i]) << ")";
            if (i > 0) {
                if (!unit) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    static std::string element_string(const Element& e) {
        if constexpr (requires { e.to_string(); })
            return e.to_string();
        else
            return curvecert::to_string(e);
    }

    F field_;
    std::vector<Element> c_;
};

template <Field F>
Polynomial<F> poly_pow(Polynomial<F> base, unsigned long e) {
    Polynomial<F> r = Polynomial<F>::constant(base.field(), base.field().one());
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

/// base^e mod m.
template <Field F>
Polynomial<F> poly_powmod(Polynomial<F> base, Integer e, const Polynomial<F>& m) {
    Polynomial<F> r = Polynomial<F>::constant(base.field(), base.field().one()) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

/// Monic greatest common divisor; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
template <Field F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    if (!(a.field() == b.field())) throw DomainError("gcd of polynomials over different fields");
    while (!b.is_zero()) {
        Polynomial<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <Field F>
struct ExtendedGcd {
    Polynomial<F> gcd, s, t;  // s*a + t*b = gcd, gcd monic
};

template <Field F>
ExtendedGcd<F> poly_xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (!(a.field() == b.field())) throw DomainError("xgcd of polynomials over different fields");
    const F& k = a.field();
    Polynomial<F> r0 = a, r1 = b;
    Polynomial<F> s0 = Polynomial<F>::constant(k, k.one()), s1(k);
    Polynomial<F> t0(k), t1 = Polynomial<F>::constant(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    typename F::Element inv = k.inverse(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// True iff gcd(f, f') = 1.
template <Field F>
bool poly_is_separable(const Polynomial<F>& f) {
    if (f.is_zero()) throw DomainError("separability of the zero polynomial");
    return poly_gcd(f, f.derivative()).is_one();
}

/// Resultant with respect to the actual degrees of a and b.
template <Field F>
typename F::Element poly_resultant(Polynomial<F> a, Polynomial<F> b) {
    const F& k = a.field();
    using E = typename F::Element;
    if (a.is_zero() || b.is_zero()) return k.zero();
    E acc = k.one();
    while (true) {
        std::size_t m = a.deg(), n = b.deg();
        if (n == 0) return acc * power(k, b.leading(), Integer(static_cast<unsigned long>(m)));
        Polynomial<F> r = a % b;
        if (r.is_zero()) return k.zero();
        std::size_t dr = r.deg();
        if ((m * n) % 2 == 1) acc = -acc;
        acc = acc * power(k, b.leading(), Integer(static_cast<unsigned long>(m - dr)));
        a = std::move(b);
        b = std::move(r);
    }
}

/// disc(f) = (-1)^{n(n-1)/2} Res_{n,n-1}(f, f') / lc(f), with f' at its formal degree n-1.
template <Field F>
typename F::Element poly_discriminant(const Polynomial<F>& f) {
    const F& k = f.field();
    std::size_t n = f.deg();
    if (n == 0) throw DomainError("discriminant of a constant");
    Polynomial<F> df = f.derivative();
    if (df.is_zero()) return k.zero();
    using E = typename F::Element;
    E res = poly_resultant(f, df);
    std::size_t gap = (n - 1) - df.deg();
    res = res * power(k, f.leading(), Integer(static_cast<unsigned long>(gap)));
    E out = res * k.inverse(f.leading());
    if (((n * (n - 1)) / 2) % 2 == 1) out = -out;
    return out;
}

/// f(g(x)).
template <Field F>
Polynomial<F> poly_compose(const Polynomial<F>& f, const Polynomial<F>& g) {
    Polynomial<F> acc(f.field());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * g + Polynomial<F>::constant(f.field(), f.coeff(i));
    return acc;
}

/// Integer-coefficient polynomial over Q from a coefficient list, constant term first.
inline Polynomial<RationalField> rational_poly(const std::vector<Integer>& coeffs) {
    return Polynomial<RationalField>::from_integers(RationalField{}, coeffs);
}

inline bool has_integer_coefficients(const Polynomial<RationalField>& f) {
    return std::all_of(f.coefficients().begin(), f.coefficients().end(), [](const Rational& c) { return is_integral(c); });
}

}  // namespace curvecert
