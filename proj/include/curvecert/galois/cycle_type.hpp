#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "curvecert/exactfield/finite_poly.hpp"

namespace curvecert {

/// Factor-degree multiset of f mod p (the cycle type of Frobenius at p).
struct CycleType {
    std::uint64_t p = 0;
    std::vector<std::size_t> degrees;  // ascending

    std::size_t total() const { return std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}); }
    bool is_even() const {
        std::size_t transpositions = 0;
        for (auto d : degrees) transpositions += d - 1;
        return transpositions % 2 == 0;
    }
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
        return s + "}";
    }
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

inline void require_monic_integral(const Polynomial<RationalField>& f) {
    if (f.is_zero() || !f.is_monic()) throw DomainError("polynomial must be monic");
    if (!has_integer_coefficients(f)) throw DomainError("polynomial must have integer coefficients");
}

/// Exact integer discriminant of a monic integer polynomial of degree >= 1.
inline Integer integer_discriminant(const Polynomial<RationalField>& f) {
    require_monic_integral(f);
    if (f.deg() == 1) return 1;
    Rational d = poly_discriminant(f);
    return d.get_num();
}

/// Cycle type of f at a prime p not dividing disc(f).
inline CycleType cycle_type_at(const Polynomial<RationalField>& f, std::uint64_t p) {
    require_monic_integral(f);
    GaloisField k = GaloisField::prime(p);
    FqPoly fp = reduce_mod_p(f, k);
    if (fp.deg() == 0) throw DomainError("degree drops mod p");
    CycleType t{p, {}};
    if (fp.deg() == 1) {
        t.degrees = {1};
        return t;
    }
    if (!poly_is_separable(fp)) throw DomainError("f is not squarefree mod " + std::to_string(p));
    for (const auto& part : poly_ddf(fp))
        for (std::size_t i = 0; i < part.product.deg() / part.degree; ++i) t.degrees.push_back(part.degree);
    std::sort(t.degrees.begin(), t.degrees.end());
    return t;
}

/// Cycle types at every prime p <= prime_bound with p not dividing disc(f), in
/// increasing order of p. Sampling is exhaustive, so the seed does not change the
/// result; it is carried for provenance.
inline std::vector<CycleType> ga_cycle_types(const Polynomial<RationalField>& f, std::uint64_t prime_bound,
                                             std::uint64_t seed = 0) {
    (void)seed;
    Integer disc = integer_discriminant(f);
    if (disc == 0) throw DomainError("polynomial is not squarefree");
    std::vector<CycleType> out;
    for (std::uint64_t p = 2; p <= prime_bound; p = next_prime(p)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        out.push_back(cycle_type_at(f, p));
    }
    return out;
}

/// Sizes of proper nonempty sub-multisets of a cycle type's parts.
inline std::vector<bool> feasible_factor_degrees(const CycleType& t, std::size_t n) {
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (auto d : t.degrees)
        for (std::size_t s = n; s >= d; --s)
            if (reach[s - d]) reach[s] = true;
    reach[0] = false;
    reach[n] = false;
    return reach;
}

}  // namespace curvecert
