#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "curvecert/exactfield/field.hpp"

namespace curvecert {

namespace detail {

struct GaloisContext {
    std::uint64_t p = 0;
    std::size_t k = 0;
    std::vector<std::uint64_t> modulus;  // monic, degree k, constant term first
    Integer order;                       // p^k
};

}  // namespace detail

/// Element of F_{p^k} = F_p[a]/(modulus(a)), stored as k residues mod p.
class GaloisElement {
public:
    GaloisElement() = default;
    GaloisElement(std::shared_ptr<const detail::GaloisContext> ctx, std::vector<std::uint64_t> c)
        : ctx_(std::move(ctx)), c_(std::move(c)) {}

    const std::vector<std::uint64_t>& residues() const { return c_; }
    const std::shared_ptr<const detail::GaloisContext>& context() const { return ctx_; }
    bool is_zero() const {
        for (auto v : c_)
            if (v) return false;
        return true;
    }

    friend GaloisElement operator+(const GaloisElement& a, const GaloisElement& b) {
        std::uint64_t p = a.ctx_->p;
        std::vector<std::uint64_t> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = modarith::add(a.c_[i], b.c_[i], p);
        return GaloisElement(a.ctx_, std::move(r));
    }
    friend GaloisElement operator-(const GaloisElement& a, const GaloisElement& b) {
        std::uint64_t p = a.ctx_->p;
        std::vector<std::uint64_t> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = modarith::sub(a.c_[i], b.c_[i], p);
        return GaloisElement(a.ctx_, std::move(r));
    }
    GaloisElement operator-() const {
        std::uint64_t p = ctx_->p;
        std::vector<std::uint64_t> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] ? p - c_[i] : 0;
        return GaloisElement(ctx_, std::move(r));
    }
    friend GaloisElement operator*(const GaloisElement& a, const GaloisElement& b) {
        const auto& ctx = *a.ctx_;
        std::uint64_t p = ctx.p;
        if (ctx.k == 1) return GaloisElement(a.ctx_, {modarith::mul(a.c_[0], b.c_[0], p)});
        std::size_t k = ctx.k;
        std::vector<unsigned __int128> acc(2 * k - 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < k; ++j) acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
        }
        std::vector<std::uint64_t> t(2 * k - 1);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint64_t>(acc[i] % p);
        for (std::size_t i = t.size(); i-- > k;) {
            std::uint64_t coef = t[i];
            if (!coef) continue;
            t[i] = 0;
            for (std::size_t j = 0; j < k; ++j)
                t[i - k + j] = modarith::sub(t[i - k + j], modarith::mul(coef, ctx.modulus[j], p), p);
        }
        t.resize(k);
        return GaloisElement(a.ctx_, std::move(t));
    }
    friend bool operator==(const GaloisElement& a, const GaloisElement& b) { return a.c_ == b.c_; }

    std::string to_string() const {
        if (c_.size() == 1) return std::to_string(c_[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
        return s + ")";
    }

private:
    std::shared_ptr<const detail::GaloisContext> ctx_;
    std::vector<std::uint64_t> c_;
};

/// Finite field F_q, q = p^k, with an explicitly stored defining modulus.
/// Validated construction (irreducibility of the modulus) lives in finite_poly.hpp.
class GaloisField {
public:
    using Element = GaloisElement;

    /// The prime field F_p.
    static GaloisField prime(std::uint64_t p) {
        if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 62)) throw DomainError("characteristic too large");
        return GaloisField(p, {0, 1});
    }

    /// F_p[a]/(modulus); the caller guarantees the modulus is monic irreducible of degree >= 1.
    static GaloisField from_modulus_unchecked(std::uint64_t p, std::vector<std::uint64_t> modulus) {
        return GaloisField(p, std::move(modulus));
    }

    std::uint64_t characteristic() const { return ctx_->p; }
    std::size_t degree() const { return ctx_->k; }
    const std::vector<std::uint64_t>& modulus() const { return ctx_->modulus; }
    const Integer& order_integer() const { return ctx_->order; }
    std::uint64_t order() const {
        if (!ctx_->order.fits_ulong_p()) throw BoundExceeded("field order exceeds 64 bits");
        return ctx_->order.get_ui();
    }
    bool is_prime_field() const { return ctx_->k == 1; }

    Element zero() const { return Element(ctx_, std::vector<std::uint64_t>(ctx_->k, 0)); }
    Element one() const {
        std::vector<std::uint64_t> v(ctx_->k, 0);
        v[0] = 1 % ctx_->p;
        return Element(ctx_, std::move(v));
    }
    Element from_integer(const Integer& n) const {
        std::vector<std::uint64_t> v(ctx_->k, 0);
        v[0] = mod_u64(n, ctx_->p);
        return Element(ctx_, std::move(v));
    }
    Element from_u64(std::uint64_t n) const { return from_integer(Integer(static_cast<unsigned long>(n))); }
    /// Element from residues c_0 + c_1 a + ... (reduced mod p; length <= k).
    Element from_residues(std::vector<std::uint64_t> c) const {
        if (c.size() > ctx_->k) throw DomainError("too many residues for field element");
        c.resize(ctx_->k, 0);
        for (auto& v : c) v %= ctx_->p;
        return Element(ctx_, std::move(c));
    }
    /// The class of a, i.e. the root of the modulus (a generator over F_p when k > 1).
    Element generator() const {
        if (ctx_->k == 1) return from_u64((ctx_->p - ctx_->modulus[0]) % ctx_->p);
        std::vector<std::uint64_t> v(ctx_->k, 0);
        v[1] = 1;
        return Element(ctx_, std::move(v));
    }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element inverse(const Element& a) const {
        if (a.is_zero()) throw DomainError("inverse of zero in finite field");
        if (ctx_->k == 1) return Element(ctx_, {modarith::inv(a.residues()[0], ctx_->p)});
        return power(*this, a, ctx_->order - 2);
    }

    Element element_at(std::uint64_t index) const {
        std::vector<std::uint64_t> v(ctx_->k, 0);
        for (std::size_t i = 0; i < ctx_->k; ++i) {
            v[i] = index % ctx_->p;
            index /= ctx_->p;
        }
        return Element(ctx_, std::move(v));
    }
    std::uint64_t index_of(const Element& a) const {
        std::uint64_t idx = 0;
        const auto& c = a.residues();
        for (std::size_t i = c.size(); i-- > 0;) idx = idx * ctx_->p + c[i];
        return idx;
    }

    template <class Rng>
    Element random(Rng& rng) const {
        std::vector<std::uint64_t> v(ctx_->k);
        std::uniform_int_distribution<std::uint64_t> dist(0, ctx_->p - 1);
        for (auto& c : v) c = dist(rng);
        return Element(ctx_, std::move(v));
    }

    /// Quadratic character: 0, 1 or -1.
    int legendre(const Element& a) const {
        if (a.is_zero()) return 0;
        if (ctx_->p == 2) return 1;
        Element t = power(*this, a, (ctx_->order - 1) / 2);
        return t == one() ? 1 : -1;
    }

    std::string description() const {
        if (ctx_->k == 1) return "F_" + std::to_string(ctx_->p);
        return "F_" + std::to_string(ctx_->p) + "^" + std::to_string(ctx_->k);
    }

    friend bool operator==(const GaloisField& a, const GaloisField& b) {
        return a.ctx_ == b.ctx_ || (a.ctx_->p == b.ctx_->p && a.ctx_->modulus == b.ctx_->modulus);
    }

private:
    GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus) {
        auto ctx = std::make_shared<detail::GaloisContext>();
        ctx->p = p;
        if (modulus.size() < 2 || modulus.back() != 1) throw DomainError("field modulus must be monic of degree >= 1");
        for (auto& c : modulus) c %= p;
        ctx->k = modulus.size() - 1;
        ctx->modulus = std::move(modulus);
        ctx->order = ipow(Integer(static_cast<unsigned long>(p)), ctx->k);
        ctx_ = std::move(ctx);
    }

    std::shared_ptr<const detail::GaloisContext> ctx_;
};

static_assert(FiniteField<GaloisField>);

}  // namespace curvecert
