#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "curvecert/galois/irreducibility.hpp"

namespace curvecert {

using Partition = std::vector<std::size_t>;  // ascending

/// A maximal transitive subgroup of S_n other than A_n, described by the set of
/// cycle types its elements have.
struct MaximalTransitiveSubgroup {
    std::string name;
    std::size_t degree;
    std::size_t order;
    std::vector<Partition> cycle_types;
};

/// Conjugacy classes of maximal transitive subgroups of S_n (n <= 7) except A_n,
/// which is handled through permutation parity.
inline const std::vector<MaximalTransitiveSubgroup>& maximal_transitive_subgroups(std::size_t n) {
    static const std::map<std::size_t, std::vector<MaximalTransitiveSubgroup>> table = {
        {1, {}},
        {2, {}},
        {3, {}},
        {4, {{"D4", 4, 8, {{1, 1, 1, 1}, {2, 2}, {4}, {1, 1, 2}}}}},
        {5, {{"F20", 5, 20, {{1, 1, 1, 1, 1}, {5}, {1, 2, 2}, {1, 4}}}}},
        {6,
         {{"PGL(2,5)", 6, 120, {{1, 1, 1, 1, 1, 1}, {1, 1, 2, 2}, {2, 2, 2}, {3, 3}, {1, 1, 4}, {1, 5}, {6}}},
          {"S3wrS2", 6, 72, {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 1, 3}, {1, 1, 2, 2}, {1, 2, 3}, {3, 3}, {2, 2, 2}, {2, 4}, {6}}},
          {"S2wrS3", 6, 48, {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 2, 2}, {2, 2, 2}, {1, 1, 4}, {2, 4}, {3, 3}, {6}}}}},
        {7, {{"F42", 7, 42, {{1, 1, 1, 1, 1, 1, 1}, {7}, {1, 2, 2, 2}, {1, 3, 3}, {1, 6}}}}},
    };
    auto it = table.find(n);
    if (it == table.end()) throw DomainError("no subgroup table for degree " + std::to_string(n));
    return it->second;
}

enum class GaloisClaim { symmetric, alternating_subgroup, cited_unverified };

inline std::string to_string(GaloisClaim c) {
    switch (c) {
        case GaloisClaim::symmetric: return "symmetric";
        case GaloisClaim::alternating_subgroup: return "alternating-subgroup";
        default: return "cited-unverified";
    }
}

/// Evidence for a claim about Gal(f) over Q.
struct GaloisCertificate {
    Polynomial<RationalField> polynomial{RationalField{}};
    GaloisClaim claim = GaloisClaim::cited_unverified;
    std::string group;      // "S5", "A7-subgroup", or the cited group name
    std::string criterion;  // "maximal-subgroup-table", "jordan", "discriminant-square", "citation"
    std::vector<CycleType> evidence;
    std::vector<std::string> excluded;  // "<subgroup> by <type>@p"
    bool disc_square = false;
    std::string citation;
    std::uint64_t prime_bound = 0;
    std::uint64_t seed = 0;
    IrreducibilityCertificate irreducibility;

    bool carries_proof() const { return claim != GaloisClaim::cited_unverified; }
};

struct Inconclusive {
    std::string reason;
};

/// True iff disc(f) is a square in Q (Gal(f) is contained in A_n).
inline bool ga_disc_square(const Polynomial<RationalField>& f) {
    Integer disc = integer_discriminant(f);
    if (disc == 0) throw DomainError("polynomial is not squarefree");
    return is_perfect_square(disc);
}

namespace detail {

inline bool contains_type(const MaximalTransitiveSubgroup& g, const Partition& t) {
    return std::find(g.cycle_types.begin(), g.cycle_types.end(), t) != g.cycle_types.end();
}

// A part equal to a prime p with n/2 < p < n-2 yields a p-cycle after powering.
inline std::optional<std::uint64_t> jordan_prime(const CycleType& t, std::size_t n) {
    for (auto d : t.degrees)
        if (is_prime(static_cast<std::uint64_t>(d)) && 2 * d > n && d + 2 < n) return d;
    return std::nullopt;
}

struct SnDecision {
    bool certified = false;
    std::string criterion;
    std::vector<std::string> excluded;
    std::vector<CycleType> used;
};

inline SnDecision decide_symmetric(const std::vector<CycleType>& types, std::size_t n, bool disc_square) {
    SnDecision out;
    if (n <= 2) {
        out.certified = true;
        out.criterion = "maximal-subgroup-table";
        return out;
    }
    auto keep = [&](const CycleType& t) {
        if (std::find(out.used.begin(), out.used.end(), t) == out.used.end()) out.used.push_back(t);
    };
    auto tag = [](const CycleType& t) { return t.to_string() + "@" + std::to_string(t.p); };
    if (n <= 7) {
        out.criterion = "maximal-subgroup-table";
        auto odd = std::find_if(types.begin(), types.end(), [](const CycleType& t) { return !t.is_even(); });
        if (odd == types.end()) return out;
        keep(*odd);
        out.excluded.push_back("A" + std::to_string(n) + " by " + tag(*odd));
        for (const auto& g : maximal_transitive_subgroups(n)) {
            auto w = std::find_if(types.begin(), types.end(), [&](const CycleType& t) { return !contains_type(g, t.degrees); });
            if (w == types.end()) return out;
            keep(*w);
            out.excluded.push_back(g.name + " by " + tag(*w));
        }
        out.certified = true;
        return out;
    }
    out.criterion = "jordan";
    auto pc = std::find_if(types.begin(), types.end(), [&](const CycleType& t) { return jordan_prime(t, n).has_value(); });
    if (pc == types.end()) return out;
    keep(*pc);
    out.excluded.push_back("proper primitive subgroups by " + tag(*pc));
    if (disc_square) return out;
    auto odd = std::find_if(types.begin(), types.end(), [](const CycleType& t) { return !t.is_even(); });
    if (odd != types.end()) {
        keep(*odd);
        out.excluded.push_back("A" + std::to_string(n) + " by " + tag(*odd));
    } else {
        out.excluded.push_back("A" + std::to_string(n) + " by non-square discriminant");
    }
    out.certified = true;
    return out;
}

}  // namespace detail

/// Certifies Gal(f) = S_n from sampled Frobenius cycle types. For n <= 7 every
/// maximal transitive subgroup must be excluded by an observed type; above 7,
/// Jordan's criterion with an odd witness is used.
inline std::variant<GaloisCertificate, Inconclusive> ga_certify_Sn(const Polynomial<RationalField>& f,
                                                                   std::uint64_t prime_bound = 200,
                                                                   std::uint64_t seed = 0) {
    require_monic_integral(f);
    auto irr = ga_irreducible_over_Q(f, prime_bound);
    if (!irr.certifies()) return Inconclusive{"irreducibility not certified (" + to_string(irr.status) + ")"};
    std::size_t n = f.deg();
    bool square = n >= 2 && ga_disc_square(f);
    auto types = n >= 2 ? ga_cycle_types(f, prime_bound, seed) : std::vector<CycleType>{};
    auto d = detail::decide_symmetric(types, n, square);
    if (!d.certified) return Inconclusive{"cycle types up to " + std::to_string(prime_bound) + " do not exclude every proper transitive subgroup"};
    GaloisCertificate cert;
    cert.polynomial = f;
    cert.claim = GaloisClaim::symmetric;
    cert.group = "S" + std::to_string(n);
    cert.criterion = d.criterion;
    cert.evidence = d.used;
    cert.excluded = d.excluded;
    cert.disc_square = square;
    cert.prime_bound = prime_bound;
    cert.seed = seed;
    cert.irreducibility = irr;
    return cert;
}

/// Certificate that Gal(f) lies in A_n (square discriminant), for irreducible f.
inline std::variant<GaloisCertificate, Inconclusive> ga_certify_alternating_subgroup(const Polynomial<RationalField>& f,
                                                                                     std::uint64_t prime_bound = 200) {
    auto irr = ga_irreducible_over_Q(f, prime_bound);
    if (!irr.certifies()) return Inconclusive{"irreducibility not certified"};
    if (!ga_disc_square(f)) return Inconclusive{"discriminant is not a square"};
    GaloisCertificate cert;
    cert.polynomial = f;
    cert.claim = GaloisClaim::alternating_subgroup;
    cert.group = "A" + std::to_string(f.deg()) + "-subgroup";
    cert.criterion = "discriminant-square";
    cert.disc_square = true;
    cert.prime_bound = prime_bound;
    cert.irreducibility = irr;
    return cert;
}

/// Records a group identification taken from the literature; carries no proof weight.
inline GaloisCertificate ga_cite(const Polynomial<RationalField>& f, std::string group, std::string citation) {
    GaloisCertificate cert;
    cert.polynomial = f;
    cert.claim = GaloisClaim::cited_unverified;
    cert.group = std::move(group);
    cert.criterion = "citation";
    cert.citation = std::move(citation);
    return cert;
}

/// Re-derives the certificate's conclusion from its stored evidence.
inline bool verify(const GaloisCertificate& cert) {
    const auto& f = cert.polynomial;
    try {
        switch (cert.claim) {
            case GaloisClaim::cited_unverified:
                return !cert.citation.empty();
            case GaloisClaim::alternating_subgroup:
                return verify(cert.irreducibility) && cert.irreducibility.certifies() &&
                       cert.irreducibility.polynomial == f && cert.disc_square && ga_disc_square(f);
            case GaloisClaim::symmetric: {
                if (!verify(cert.irreducibility) || !cert.irreducibility.certifies() || !(cert.irreducibility.polynomial == f))
                    return false;
                std::size_t n = f.deg();
                if (cert.group != "S" + std::to_string(n)) return false;
                bool square = n >= 2 && ga_disc_square(f);
                if (square != cert.disc_square) return false;
                for (const auto& t : cert.evidence)
                    if (!(cycle_type_at(f, t.p) == t)) return false;
                auto d = detail::decide_symmetric(cert.evidence, n, square);
                return d.certified && d.criterion == cert.criterion;
            }
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

}  // namespace curvecert
