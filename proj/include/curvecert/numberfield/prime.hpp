#pragma once

#include <string>
#include <vector>

#include "curvecert/numberfield/number_field.hpp"

namespace curvecert {

/// A prime of Z[t] above an odd rational prime p not dividing disc(m), given by a
/// monic irreducible factor h of m mod p. Residue field F_p[x]/(h).
class UnramifiedPrime {
public:
    static UnramifiedPrime create(const NumberField& k, std::uint64_t p, const std::vector<std::uint64_t>& h_residues) {
        if (p == 2) throw HypothesisError("odd-prime", "primes above 2 are not supported");
        if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
        if (mpz_divisible_ui_p(k.disc().get_mpz_t(), p))
            throw HypothesisError("unramified", std::to_string(p) + " divides disc(m) = " + k.disc().get_str() +
                                                    " (ramified or index obstruction; pick another prime)");
        GaloisField fp = GaloisField::prime(p);
        FqPoly h = fq_poly(fp, h_residues);
        if (h.is_constant() || !h.is_monic()) throw DomainError("prime generator h must be monic of degree >= 1");
        if (!poly_is_irreducible(h)) throw DomainError("h is reducible mod " + std::to_string(p));
        if (!(reduce_mod_p(k.minpoly(), fp) % h).is_zero()) throw DomainError("h does not divide m mod " + std::to_string(p));
        return UnramifiedPrime(k, p, h);
    }

    const NumberField& field() const { return field_; }
    std::uint64_t p() const { return p_; }
    const FqPoly& h() const { return h_; }
    std::vector<std::uint64_t> h_residues() const { return residue_list(h_); }
    std::size_t residue_degree() const { return h_.deg(); }
    const GaloisField& residue_field() const { return residue_; }
    /// Image of t in the residue field.
    const GaloisElement& theta_image() const { return theta_; }

    bool is_integral(const NFElement& a) const {
        for (const auto& c : a.coefficients())
            if (mpz_divisible_ui_p(c.get_den_mpz_t(), p_)) return false;
        return true;
    }

    /// Ring morphism Z[t]_(p) -> O/P sending t to the class of x.
    GaloisElement reduce(const NFElement& a) const {
        if (!is_integral(a))
            throw DomainError("element " + a.to_string() + " is not integral at the prime over " + std::to_string(p_));
        const auto& c = a.coefficients();
        GaloisElement acc = residue_.zero();
        for (std::size_t i = c.size(); i-- > 0;) {
            std::uint64_t num = mod_u64(c[i].get_num(), p_);
            std::uint64_t den = mod_u64(c[i].get_den(), p_);
            acc = acc * theta_ + residue_.from_u64(modarith::mul(num, modarith::inv(den, p_), p_));
        }
        return acc;
    }

    GaloisElement reduce(const Rational& r) const { return reduce(field_.from_rational(r)); }

    bool contains(const NFElement& a) const { return reduce(a).is_zero(); }

    Polynomial<GaloisField> reduce(const Polynomial<NumberField>& f) const {
        std::vector<GaloisElement> c;
        for (const auto& e : f.coefficients()) c.push_back(reduce(e));
        return Polynomial<GaloisField>(residue_, std::move(c));
    }

    std::string description() const {
        if (h_.deg() == 1)
            return "prime over " + std::to_string(p_) + " with t = " + theta_.to_string() + " mod " + std::to_string(p_);
        return "prime over " + std::to_string(p_) + " with h = " + h_.to_string() + " (residue degree " +
               std::to_string(h_.deg()) + ")";
    }

    friend bool operator==(const UnramifiedPrime& a, const UnramifiedPrime& b) {
        return a.field_ == b.field_ && a.p_ == b.p_ && a.h_ == b.h_;
    }

private:
    UnramifiedPrime(NumberField k, std::uint64_t p, FqPoly h)
        : field_(std::move(k)), p_(p), h_(std::move(h)), residue_(GaloisField::prime(p)) {
        if (h_.deg() == 1) {
            theta_ = -h_.coeff(0);
        } else {
            residue_ = GaloisField::from_modulus_unchecked(p_, residue_list(h_));
            theta_ = residue_.generator();
        }
    }

    NumberField field_;
    std::uint64_t p_;
    FqPoly h_;
    GaloisField residue_;
    GaloisElement theta_;
};

/// One prime per irreducible factor of m mod p, ordered by residue degree.
inline std::vector<UnramifiedPrime> nf_primes_above(const NumberField& k, std::uint64_t p, std::uint64_t seed = 0) {
    if (p == 2) throw HypothesisError("odd-prime", "primes above 2 are not supported");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (mpz_divisible_ui_p(k.disc().get_mpz_t(), p))
        throw HypothesisError("unramified", std::to_string(p) + " divides disc(m) (ramified or index obstruction; pick another prime)");
    GaloisField fp = GaloisField::prime(p);
    std::vector<UnramifiedPrime> out;
    for (const auto& h : poly_factor_squarefree(reduce_mod_p(k.minpoly(), fp), seed))
        out.push_back(UnramifiedPrime::create(k, p, residue_list(h)));
    return out;
}

/// Degree-one primes over the odd primes p in [lo, hi] with p not dividing disc(m).
inline std::vector<UnramifiedPrime> degree_one_primes(const NumberField& k, std::uint64_t lo, std::uint64_t hi) {
    std::vector<UnramifiedPrime> out;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p) {
        if (!is_prime(p) || mpz_divisible_ui_p(k.disc().get_mpz_t(), p)) continue;
        GaloisField fp = GaloisField::prime(p);
        for (const auto& r : poly_roots(reduce_mod_p(k.minpoly(), fp)))
            out.push_back(UnramifiedPrime::create(k, p, {(p - r.residues()[0]) % p, 1}));
    }
    return out;
}

inline GaloisElement nf_reduce(const NFElement& a, const UnramifiedPrime& P) { return P.reduce(a); }
inline bool nf_in_prime(const NFElement& a, const UnramifiedPrime& P) { return P.contains(a); }

}  // namespace curvecert
