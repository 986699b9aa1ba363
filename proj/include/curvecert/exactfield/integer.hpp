#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvecert/error.hpp"

namespace curvecert {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;
/// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_sqrt(const Integer& n) {
    if (n < 0) throw DomainError("square root of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// True iff r is the square of a rational number.
inline bool is_rational_square(const Rational& r) {
    return is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
    Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
    r.canonicalize();
    return r;
}

/// Non-negative residue of n modulo m (m > 0).
inline std::uint64_t mod_u64(const Integer& n, std::uint64_t m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), m);
    return r.get_ui();
}

inline std::uint64_t to_u64(const Integer& n) {
    if (n < 0 || !n.fits_ulong_p()) throw DomainError("integer does not fit in 64 bits: " + n.get_str());
    return n.get_ui();
}

namespace modarith {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul(r, base, m);
        base = mul(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Inverse modulo a prime m; a must be nonzero mod m.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    if (newr == 0) throw DomainError("inverse of zero modulo " + std::to_string(m));
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DomainError("element not invertible modulo " + std::to_string(m));
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

}  // namespace modarith

/// Deterministic primality by trial division; intended for the small primes used here.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
    return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

inline std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

/// Prime factorisation by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Distinct prime divisors of |n| found by trial division up to `bound`.
/// The second member is true when the cofactor left over is 1 (factorisation complete).
inline std::pair<std::vector<Integer>, bool> small_prime_divisors(Integer n, std::uint64_t bound) {
    std::vector<Integer> out;
    if (n < 0) n = -n;
    if (n == 0) return {out, false};
    for (std::uint64_t d = 2; d <= bound && Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.emplace_back(static_cast<unsigned long>(d));
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= static_cast<unsigned long>(d);
        }
    }
    if (n > 1 && is_prime(n)) {
        out.push_back(n);
        n = 1;
    }
    return {out, n == 1};
}

}  // namespace curvecert
