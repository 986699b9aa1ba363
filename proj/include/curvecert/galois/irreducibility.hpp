#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvecert/galois/cycle_type.hpp"

namespace curvecert {

enum class IrreducibilityStatus { irreducible, reducible, inconclusive };

inline std::string to_string(IrreducibilityStatus s) {
    switch (s) {
        case IrreducibilityStatus::irreducible: return "irreducible";
        case IrreducibilityStatus::reducible: return "reducible";
        default: return "inconclusive";
    }
}

/// Evidence that a monic integer polynomial is (or is not) irreducible over Q.
/// Methods: "linear", "irreducible-mod-p", "degree-sum-exclusion" (certify),
/// "rational-root", "repeated-factor" (refute), "none".
struct IrreducibilityCertificate {
    Polynomial<RationalField> polynomial{RationalField{}};
    IrreducibilityStatus status = IrreducibilityStatus::inconclusive;
    std::string method = "none";
    std::vector<CycleType> witnesses;
    std::optional<Integer> root;

    bool certifies() const { return status == IrreducibilityStatus::irreducible; }
};

namespace detail {

inline std::optional<Integer> small_integer_root(const Polynomial<RationalField>& f, std::uint64_t search) {
    Integer c0 = f.coeff(0).get_num();
    if (c0 == 0) return Integer(0);
    Integer bound = abs(c0);
    if (bound > search) bound = static_cast<unsigned long>(search);
    for (Integer r = 1; r <= bound; ++r) {
        if (!mpz_divisible_p(c0.get_mpz_t(), r.get_mpz_t())) continue;
        if (f(Rational(r)) == 0) return r;
        if (f(Rational(-r)) == 0) return Integer(-r);
    }
    return std::nullopt;
}

// Conclusion forced by a list of cycle types: irreducible iff some type is a
// single part, or no proper factor degree is feasible at every listed prime.
inline std::optional<std::string> conclusion_from_types(const std::vector<CycleType>& types, std::size_t n) {
    std::vector<bool> common(n + 1, true);
    common[0] = common[n] = false;
    for (const auto& t : types) {
        if (t.degrees.size() == 1 && t.degrees[0] == n) return std::string("irreducible-mod-p");
        auto feas = feasible_factor_degrees(t, n);
        for (std::size_t s = 0; s <= n; ++s) common[s] = common[s] && feas[s];
    }
    if (!types.empty() && std::none_of(common.begin(), common.end(), [](bool b) { return b; }))
        return std::string("degree-sum-exclusion");
    return std::nullopt;
}

}  // namespace detail

/// Certificate of irreducibility over Q from Frobenius cycle types; never claims
/// reducibility except from an explicit rational root or a repeated factor.
inline IrreducibilityCertificate ga_irreducible_over_Q(const Polynomial<RationalField>& f,
                                                      std::uint64_t prime_bound = 1000) {
    require_monic_integral(f);
    IrreducibilityCertificate cert;
    cert.polynomial = f;
    std::size_t n = f.deg();
    if (n == 0) throw DomainError("constant polynomial");
    if (n == 1) {
        cert.status = IrreducibilityStatus::irreducible;
        cert.method = "linear";
        return cert;
    }
    if (auto r = detail::small_integer_root(f, 100000)) {
        cert.status = IrreducibilityStatus::reducible;
        cert.method = "rational-root";
        cert.root = *r;
        return cert;
    }
    Integer disc = integer_discriminant(f);
    if (disc == 0) {
        cert.status = IrreducibilityStatus::reducible;
        cert.method = "repeated-factor";
        return cert;
    }
    std::vector<bool> common(n + 1, true);
    common[0] = common[n] = false;
    for (std::uint64_t p = 2; p <= prime_bound; p = next_prime(p)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        CycleType t = cycle_type_at(f, p);
        if (t.degrees.size() == 1) {
            cert.status = IrreducibilityStatus::irreducible;
            cert.method = "irreducible-mod-p";
            cert.witnesses = {t};
            return cert;
        }
        auto feas = feasible_factor_degrees(t, n);
        bool shrinks = false;
        for (std::size_t s = 1; s < n; ++s)
            if (common[s] && !feas[s]) {
                common[s] = false;
                shrinks = true;
            }
        if (shrinks) cert.witnesses.push_back(t);
        if (std::none_of(common.begin(), common.end(), [](bool b) { return b; })) {
            cert.status = IrreducibilityStatus::irreducible;
            cert.method = "degree-sum-exclusion";
            return cert;
        }
    }
    cert.witnesses.clear();
    return cert;
}

/// Re-checks the stored evidence from scratch.
inline bool verify(const IrreducibilityCertificate& cert) {
    const auto& f = cert.polynomial;
    try {
        require_monic_integral(f);
        std::size_t n = f.deg();
        switch (cert.status) {
            case IrreducibilityStatus::irreducible: {
                if (cert.method == "linear") return n == 1;
                if (integer_discriminant(f) == 0) return false;
                for (const auto& t : cert.witnesses)
                    if (!(cycle_type_at(f, t.p) == t)) return false;
                auto c = detail::conclusion_from_types(cert.witnesses, n);
                return c.has_value() && *c == cert.method;
            }
            case IrreducibilityStatus::reducible:
                if (cert.method == "rational-root") return cert.root && n >= 2 && f(Rational(*cert.root)) == 0;
                if (cert.method == "repeated-factor") return n >= 2 && !poly_is_separable(f);
                return false;
            default:
                return true;
        }
    } catch (const Error&) {
        return false;
    }
}

}  // namespace curvecert
