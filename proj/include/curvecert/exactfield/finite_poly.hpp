#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "curvecert/exactfield/galois_field.hpp"
#include "curvecert/exactfield/polynomial.hpp"

namespace curvecert {

using FqPoly = Polynomial<GaloisField>;

/// One block of a distinct-degree factorisation: the product of all monic
/// irreducible factors of the given degree.
struct DegreePart {
    std::size_t degree;
    FqPoly product;
};

/// Distinct-degree factorisation of a monic squarefree polynomial over F_q.
inline std::vector<DegreePart> poly_ddf(const FqPoly& f) {
    if (f.is_zero() || f.is_constant()) throw DomainError("ddf of a constant polynomial");
    if (!f.is_monic()) throw DomainError("ddf requires a monic polynomial");
    if (!poly_is_separable(f)) throw DomainError("ddf requires a squarefree polynomial");
    const GaloisField& k = f.field();
    const Integer& q = k.order_integer();
    FqPoly x = FqPoly::x(k);
    FqPoly rest = f;
    FqPoly h = x % rest;
    std::vector<DegreePart> out;
    std::size_t d = 0;
    while (rest.deg() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(h, q, rest);
        FqPoly g = poly_gcd(rest, h - x);
        if (!g.is_one()) {
            out.push_back({d, g});
            rest = rest / g;
            h = h % rest;
        }
    }
    if (!rest.is_constant()) out.push_back({rest.deg(), rest});
    return out;
}

namespace detail {

template <class Rng>
FqPoly random_poly_below(const GaloisField& k, std::size_t n, Rng& rng) {
    std::vector<GaloisElement> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(k.random(rng));
    return FqPoly(k, std::move(c));
}

// Cantor-Zassenhaus split of g (product of distinct irreducibles of degree d).
template <class Rng>
void equal_degree_split(const FqPoly& g, std::size_t d, Rng& rng, std::vector<FqPoly>& out) {
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    const GaloisField& k = g.field();
    const Integer& q = k.order_integer();
    const bool char2 = k.characteristic() == 2;
    Integer half = (ipow(q, static_cast<unsigned long>(d)) - 1) / 2;
    std::size_t trace_len = k.degree() * d;
    while (true) {
        FqPoly a = random_poly_below(k, g.deg(), rng);
        if (a.is_constant()) continue;
        FqPoly b(k);
        if (char2) {
            FqPoly t = a;
            b = a;
            for (std::size_t i = 1; i < trace_len; ++i) {
                t = (t * t) % g;
                b += t;
            }
        } else {
            b = poly_powmod(a, half, g) - FqPoly::constant(k, k.one());
        }
        FqPoly c = poly_gcd(g, b);
        if (!c.is_zero() && c.deg() > 0 && c.deg() < g.deg()) {
            equal_degree_split(c, d, rng, out);
            equal_degree_split(g / c, d, rng, out);
            return;
        }
    }
}

inline bool poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const GaloisField& k = a.field();
    for (std::size_t i = a.size(); i-- > 0;) {
        auto ia = k.index_of(a.coefficients()[i]), ib = k.index_of(b.coefficients()[i]);
        if (ia != ib) return ia < ib;
    }
    return false;
}

}  // namespace detail

/// Full factorisation of a squarefree polynomial into monic irreducibles,
/// sorted by degree then coefficients. Randomness comes only from `seed`.
inline std::vector<FqPoly> poly_factor_squarefree(const FqPoly& f, std::uint64_t seed = 0) {
    FqPoly m = f.monic();
    std::mt19937_64 rng(seed);
    std::vector<FqPoly> out;
    for (const auto& part : poly_ddf(m)) detail::equal_degree_split(part.product, part.degree, rng, out);
    std::sort(out.begin(), out.end(), detail::poly_less);
    return out;
}

/// Roots of f in F_q, each once, sorted by element index.
inline std::vector<GaloisElement> poly_roots(const FqPoly& f, std::uint64_t seed = 0) {
    if (f.is_zero()) throw DomainError("roots of the zero polynomial");
    const GaloisField& k = f.field();
    if (f.is_constant()) return {};
    FqPoly m = f.monic();
    FqPoly x = FqPoly::x(k);
    FqPoly split = poly_gcd(m, poly_powmod(x, k.order_integer(), m) - x);
    std::vector<GaloisElement> roots;
    if (split.is_constant()) return roots;
    std::mt19937_64 rng(seed);
    std::vector<FqPoly> linear;
    detail::equal_degree_split(split, 1, rng, linear);
    for (const auto& l : linear) roots.push_back(-l.coeff(0));
    std::sort(roots.begin(), roots.end(),
              [&](const GaloisElement& a, const GaloisElement& b) { return k.index_of(a) < k.index_of(b); });
    return roots;
}

/// Irreducibility over F_q via distinct-degree factorisation.
inline bool poly_is_irreducible(const FqPoly& f) {
    if (f.is_zero() || f.is_constant()) throw DomainError("irreducibility of a constant polynomial");
    FqPoly m = f.monic();
    if (m.deg() == 1) return true;
    if (!poly_is_separable(m)) return false;
    auto parts = poly_ddf(m);
    return parts.size() == 1 && parts[0].degree == m.deg();
}

/// F_p[a]/(modulus) after checking the modulus is monic irreducible over F_p.
inline GaloisField make_galois_field(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
    GaloisField fp = GaloisField::prime(p);
    if (modulus.size() == 2 && modulus[0] % p == 0 && modulus[1] % p == 1) return fp;
    std::vector<GaloisElement> c;
    for (auto v : modulus) c.push_back(fp.from_u64(v));
    FqPoly m(fp, c);
    if (m.is_constant() || !m.is_monic()) throw DomainError("field modulus must be monic of degree >= 1");
    if (!poly_is_irreducible(m)) throw DomainError("field modulus is reducible over F_" + std::to_string(p));
    std::vector<std::uint64_t> residues;
    for (const auto& e : m.coefficients()) residues.push_back(e.residues()[0]);
    return GaloisField::from_modulus_unchecked(p, residues);
}

/// F_{p^k} with the first monic irreducible modulus in the order of the integer
/// sum c_0 + c_1 p + ... + c_{k-1} p^{k-1} (leading 1 implicit).
inline GaloisField make_galois_field(std::uint64_t p, std::size_t k) {
    if (k == 0) throw DomainError("extension degree must be >= 1");
    GaloisField fp = GaloisField::prime(p);
    if (k == 1) return fp;
    Integer count = ipow(Integer(static_cast<unsigned long>(p)), k);
    for (Integer idx = 0; idx < count; ++idx) {
        std::vector<GaloisElement> c;
        Integer t = idx;
        for (std::size_t i = 0; i < k; ++i) {
            c.push_back(fp.from_u64(mod_u64(t, p)));
            t /= static_cast<unsigned long>(p);
        }
        if (c[0].is_zero()) continue;
        c.push_back(fp.one());
        FqPoly m(fp, c);
        if (poly_is_irreducible(m)) {
            std::vector<std::uint64_t> residues;
            for (const auto& e : m.coefficients()) residues.push_back(e.residues()[0]);
            return GaloisField::from_modulus_unchecked(p, residues);
        }
    }
    throw DomainError("no irreducible polynomial found");  // unreachable
}

/// Prime-field polynomial as a residue list (constant first).
inline std::vector<std::uint64_t> residue_list(const FqPoly& f) {
    std::vector<std::uint64_t> out;
    for (const auto& c : f.coefficients()) {
        if (!f.field().is_prime_field()) throw DomainError("residue list of a non-prime-field polynomial");
        out.push_back(c.residues()[0]);
    }
    return out;
}

inline FqPoly fq_poly(const GaloisField& k, const std::vector<std::uint64_t>& coeffs) {
    std::vector<GaloisElement> c;
    for (auto v : coeffs) c.push_back(k.from_u64(v));
    return FqPoly(k, std::move(c));
}

/// Reduction of a rational polynomial modulo p; denominators must be prime to p.
inline FqPoly reduce_mod_p(const Polynomial<RationalField>& f, const GaloisField& k) {
    std::uint64_t p = k.characteristic();
    std::vector<GaloisElement> c;
    for (const auto& r : f.coefficients()) {
        std::uint64_t den = mod_u64(r.get_den(), p);
        if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p));
        c.push_back(k.from_u64(modarith::mul(mod_u64(r.get_num(), p), modarith::inv(den, p), p)));
    }
    return FqPoly(k, std::move(c));
}

/// Embedding of a finite field into an extension of it, fixed by the image of
/// the generator of the small field (a root of its modulus in the big field).
class FieldEmbedding {
public:
    FieldEmbedding(GaloisField small, GaloisField big) : small_(std::move(small)), big_(std::move(big)) {
        if (small_.characteristic() != big_.characteristic() || big_.degree() % small_.degree() != 0)
            throw DomainError("no embedding " + small_.description() + " -> " + big_.description());
        if (small_.degree() == 1) {
            image_ = big_.from_u64(small_.generator().residues()[0]);
        } else {
            FqPoly m = fq_poly(big_, small_.modulus());
            auto roots = poly_roots(m);
            if (roots.empty()) throw DomainError("modulus has no root in the extension");
            image_ = roots.front();
        }
    }

    const GaloisField& target() const { return big_; }

    GaloisElement operator()(const GaloisElement& a) const {
        GaloisElement acc = big_.zero();
        const auto& c = a.residues();
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * image_ + big_.from_u64(c[i]);
        return acc;
    }

    FqPoly operator()(const FqPoly& f) const {
        std::vector<GaloisElement> c;
        for (const auto& e : f.coefficients()) c.push_back((*this)(e));
        return FqPoly(big_, std::move(c));
    }

private:
    GaloisField small_, big_;
    GaloisElement image_;
};

/// Degree-k extension of `base` together with the embedding base -> extension.
inline FieldEmbedding extension_of(const GaloisField& base, std::size_t k) {
    return FieldEmbedding(base, make_galois_field(base.characteristic(), base.degree() * k));
}

}  // namespace curvecert
