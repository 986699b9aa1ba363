#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "curvecert/galois/irreducibility.hpp"

namespace curvecert {

namespace detail {

struct NumberFieldContext {
    Polynomial<RationalField> minpoly{RationalField{}};
    Integer disc;
    IrreducibilityCertificate irreducibility;
};

}  // namespace detail

/// Element of K = Q[x]/(m(x)) in the power basis 1, t, ..., t^{n-1}.
class NFElement {
public:
    NFElement() = default;
    NFElement(std::shared_ptr<const detail::NumberFieldContext> ctx, std::vector<Rational> c)
        : ctx_(std::move(ctx)), c_(std::move(c)) {}

    const std::vector<Rational>& coefficients() const { return c_; }
    const std::shared_ptr<const detail::NumberFieldContext>& context() const { return ctx_; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    /// Coefficients as a polynomial in x of degree < n.
    Polynomial<RationalField> as_polynomial() const { return Polynomial<RationalField>(RationalField{}, c_); }

    friend NFElement operator+(const NFElement& a, const NFElement& b) {
        std::vector<Rational> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
        return NFElement(a.ctx_, std::move(r));
    }
    friend NFElement operator-(const NFElement& a, const NFElement& b) {
        std::vector<Rational> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] - b.c_[i];
        return NFElement(a.ctx_, std::move(r));
    }
    NFElement operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
        return NFElement(ctx_, std::move(r));
    }
    friend NFElement operator*(const NFElement& a, const NFElement& b) {
        const auto& m = a.ctx_->minpoly.coefficients();
        std::size_t n = a.c_.size();
        std::vector<Rational> t(2 * n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b.c_[j] != 0) t[i + j] += a.c_[i] * b.c_[j];
        }
        for (std::size_t i = t.size(); i-- > n;) {
            if (t[i] == 0) continue;
            Rational coef = t[i];
            for (std::size_t j = 0; j < n; ++j) t[i - n + j] -= coef * m[j];
            t[i] = 0;
        }
        t.resize(n);
        return NFElement(a.ctx_, std::move(t));
    }
    friend bool operator==(const NFElement& a, const NFElement& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].get_str();
            if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s.empty() ? "0" : s;
    }

private:
    std::shared_ptr<const detail::NumberFieldContext> ctx_;
    std::vector<Rational> c_;
};

/// K = Q[x]/(m(x)) for a monic irreducible integer polynomial m; t denotes the class of x.
class NumberField {
public:
    using Element = NFElement;

    /// Requires a certificate of irreducibility for exactly this m; re-verifies it.
    static NumberField create(const Polynomial<RationalField>& m, const IrreducibilityCertificate& cert) {
        require_monic_integral(m);
        if (!(cert.polynomial == m)) throw DomainError("irreducibility certificate is for a different polynomial");
        if (!verify(cert)) throw DomainError("irreducibility certificate does not verify");
        if (cert.status == IrreducibilityStatus::reducible) throw DomainError("defining polynomial is reducible: " + m.to_string());
        if (cert.status != IrreducibilityStatus::irreducible)
            throw DomainError("irreducibility of " + m.to_string() + " is inconclusive");
        auto ctx = std::make_shared<detail::NumberFieldContext>();
        ctx->minpoly = m;
        ctx->disc = integer_discriminant(m);
        ctx->irreducibility = cert;
        return NumberField(std::move(ctx));
    }

    /// Certifies irreducibility with primes up to prime_bound, then creates.
    static NumberField certify(const Polynomial<RationalField>& m, std::uint64_t prime_bound = 1000) {
        require_monic_integral(m);
        return create(m, ga_irreducible_over_Q(m, prime_bound));
    }

    /// Q itself, presented as Q[x]/(x).
    static NumberField rationals() { return certify(rational_poly({0, 1})); }

    std::size_t degree() const { return ctx_->minpoly.deg(); }
    const Polynomial<RationalField>& minpoly() const { return ctx_->minpoly; }
    const Integer& disc() const { return ctx_->disc; }
    const IrreducibilityCertificate& irreducibility() const { return ctx_->irreducibility; }
    std::uint64_t characteristic() const { return 0; }

    Element zero() const { return Element(ctx_, std::vector<Rational>(degree())); }
    Element one() const { return from_rational(1); }
    Element from_integer(const Integer& n) const { return from_rational(Rational(n)); }
    Element from_rational(const Rational& r) const {
        std::vector<Rational> v(degree());
        v[0] = r;
        return Element(ctx_, std::move(v));
    }
    /// The class t of x (for degree 1, the root of m).
    Element generator() const {
        if (degree() == 1) return from_rational(-ctx_->minpoly.coeff(0));
        std::vector<Rational> v(degree());
        v[1] = 1;
        return Element(ctx_, std::move(v));
    }
    Element element(std::vector<Rational> coeffs) const {
        if (coeffs.size() > degree()) throw DomainError("too many coefficients for field element");
        coeffs.resize(degree());
        return Element(ctx_, std::move(coeffs));
    }
    /// a(t) for a rational polynomial a of any degree.
    Element element(const Polynomial<RationalField>& a) const {
        return element((a % ctx_->minpoly).coefficients());
    }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element inverse(const Element& a) const {
        if (a.is_zero()) throw DomainError("inverse of zero in number field");
        auto x = poly_xgcd(a.as_polynomial(), ctx_->minpoly);
        if (!x.gcd.is_one()) throw DomainError("element not invertible (reducible modulus?)");
        return element(x.s);
    }

    /// N_{K/Q}(a) = Res(m, a) for monic m.
    Rational norm(const Element& a) const {
        if (a.is_zero()) return 0;
        return poly_resultant(ctx_->minpoly, a.as_polynomial());
    }

    /// [Q(a) : Q], the rank of 1, a, ..., a^{n-1} over Q.
    std::size_t generated_degree(const Element& a) const {
        std::size_t n = degree();
        std::vector<std::vector<Rational>> rows;
        Element pw = one();
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(pw.coefficients());
            pw = pw * a;
        }
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
            std::size_t piv = rank;
            while (piv < rows.size() && rows[piv][col] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                Rational f = rows[r][col] / rows[rank][col];
                for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
            }
            ++rank;
        }
        return rank;
    }

    /// True iff K = Q(a).
    bool generates(const Element& a) const { return generated_degree(a) == degree(); }

    std::string description() const {
        if (degree() == 1 && ctx_->minpoly.coeff(0) == 0) return "Q";
        return "Q[t]/(" + ctx_->minpoly.to_string("t") + ")";
    }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.ctx_ == b.ctx_ || a.ctx_->minpoly == b.ctx_->minpoly;
    }

private:
    explicit NumberField(std::shared_ptr<const detail::NumberFieldContext> ctx) : ctx_(std::move(ctx)) {}
    std::shared_ptr<const detail::NumberFieldContext> ctx_;
};

static_assert(Field<NumberField>);

/// Free-function spellings of the field operations.
inline Rational nf_norm(const NFElement& a, const NumberField& k) { return k.norm(a); }

}  // namespace curvecert
