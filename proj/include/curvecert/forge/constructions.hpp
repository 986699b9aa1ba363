#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvecert/forge/instance.hpp"

namespace curvecert::forge {

struct ForgeOptions {
    std::uint64_t seed = 0;
    std::uint64_t prime_bound = 200;
    std::uint64_t count_bound = kDefaultCountBound;
};

struct SuppliedPrimes {
    UnramifiedPrime first, second;
};

struct CitedGroup {
    std::string group;
    std::string citation;
};

namespace detail {

using QPoly = Polynomial<RationalField>;

inline Json elt(const NFElement& e) { return io::nf_elt_json(e); }

inline TheoremInstance start(std::string theorem, const ForgeOptions& o) {
    TheoremInstance t;
    t.theorem = std::move(theorem);
    t.seed = o.seed;
    t.prime_bound = o.prime_bound;
    return t;
}

// Every forged instance must pass its own serialized verification.
inline TheoremInstance finish(TheoremInstance t) {
    auto r = verify(t);
    if (!r.ok) throw Error("forged instance fails self-verification: " + r.failures.front());
    return t;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

inline QPoly rational_constant(const Rational& c) { return QPoly::constant(RationalField{}, c); }

inline Polynomial<NumberField> lift(const NumberField& k, const QPoly& f) {
    std::vector<NFElement> c;
    for (const auto& r : f.coefficients()) c.push_back(k.from_rational(r));
    return Polynomial<NumberField>(k, std::move(c));
}

/// First two primes (increasing residue characteristic, then factor order) at
/// which P has different reduced orders.
inline std::optional<EInfOrderCert> search_order_mismatch(const NFCurve& e, const NFPoint& pt, const ForgeOptions& o) {
    std::optional<std::pair<UnramifiedPrime, std::uint64_t>> first;
    for (std::uint64_t p = 3; p <= o.prime_bound; p = next_prime(p)) {
        std::vector<UnramifiedPrime> above;
        try {
            above = nf_primes_above(e.field(), p, o.seed);
        } catch (const HypothesisError&) {
            continue;
        }
        for (const auto& pr : above) {
            if (pr.residue_field().order_integer() > 100000) continue;
            std::uint64_t ord = 0;
            try {
                auto er = ec_reduce(e, pr);
                auto r = ec_reduce(pt, pr);
                if (r.infinity) continue;
                ord = ec_point_order(er, r, ec_count_points(er, o.count_bound));
            } catch (const HypothesisError&) {
                continue;
            }
            if (!first) {
                first.emplace(pr, ord);
            } else if (ord != first->second) {
                auto c = ec_nontorsion_order_mismatch(e, pt, first->first, pr, o.count_bound);
                if (auto* cert = std::get_if<EInfOrderCert>(&c)) return *cert;
            }
        }
    }
    return std::nullopt;
}

inline Json prime_param(const UnramifiedPrime& p) { return Json{{"p", p.p()}, {"h_coeffs", p.h_residues()}, {"description", p.description()}}; }

// j(E) for y^2 = x^3 + a x + b.
inline NFElement j_invariant(const NFCurve& e) { return e.j_invariant(); }

}  // namespace detail

// ---- y^2 = x^3 + x + d^2 over Q --------------------------------------------

/// Curve y^2 = x^3 + x + d^2 with P = (0, d); Lutz-Nagell decides |d| >= 3.
inline TheoremInstance forge_orig(const Integer& d, const ForgeOptions& o = {}) {
    if (d == 0) throw DomainError("d must be nonzero");
    auto t = detail::start("orig", o);
    NumberField k = NumberField::rationals();
    NFCurve e(k, k.one(), k.from_integer(d * d));
    t.parameters = Json{{"d", d.get_str()}};
    t.field = io::nf_json(k);
    t.curve = io::ec_json(e);
    auto q = [&](const Rational& r) { return detail::elt(k.from_rational(r)); };
    t.add_point("P", q(0), q(Rational(d)));
    std::vector<std::string> labels = {"P"};
    if (d == 82) {
        t.add_point("P2", q(12), q(92));
        t.add_point("P3", q(60), q(472));
        t.add_point("P4", q(Rational(465, 4)), q(Rational(10049, 8)));
        labels = {"P", "P2", "P3", "P4"};
    }
    t.add_claim("the points " + detail::join(labels, ", ") + " lie on E", ClaimStatus::certified, {},
                "exact on-curve test of every listed point");
    auto ln = ec_lutz_nagell_nontorsion(e, NFPoint::affine(k.zero(), k.from_integer(d)));
    if (auto* cert = std::get_if<EInfOrderCert>(&ln)) {
        auto id = t.add_certificate(*cert);
        t.add_claim("P = (0, d) has infinite order, so rank E(Q) >= 1", ClaimStatus::certified, {id}, "Lutz-Nagell");
    } else {
        t.add_claim("P = (0, d) has infinite order, so rank E(Q) >= 1", ClaimStatus::unresolved, {},
                    "Lutz-Nagell inconclusive: " + std::get<Inconclusive>(ln).reason);
    }
    return detail::finish(std::move(t));
}

// ---- y^2 = (x - a)(x - b)(x - c) + d^2 over Q ------------------------------

inline TheoremInstance forge_orig2(const Integer& a, const Integer& b, const Integer& c, const Integer& d,
                                   const ForgeOptions& o = {}) {
    if (d == 0) throw DomainError("d must be nonzero");
    if (a == b || a == c || b == c) throw DomainError("a, b, c must be distinct for six distinct points");
    auto t = detail::start("orig2", o);
    NumberField k = NumberField::rationals();
    using detail::QPoly;
    QPoly x = QPoly::x(RationalField{});
    QPoly f = (x - detail::rational_constant(Rational(a))) * (x - detail::rational_constant(Rational(b))) *
              (x - detail::rational_constant(Rational(c)));
    Rational shift = Rational(a + b + c) / 3;
    QPoly w = detail::translate(f, shift) + detail::rational_constant(Rational(d * d));
    NFCurve e(k, k.from_rational(w.coeff(1)), k.from_rational(w.coeff(0)));  // throws SingularError
    t.parameters = Json{{"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()}, {"d", d.get_str()},
                        {"model", "x = X + " + shift.get_str() + " moves y^2 = (X-a)(X-b)(X-c) + d^2 to short form"}};
    t.field = io::nf_json(k);
    t.curve = io::ec_json(e);
    auto model = t.add_check("shifted-model", "E is y^2 = (X-a)(X-b)(X-c) + d^2 translated to short Weierstrass form",
                             Json{{"f", io::qpoly_json(f)}, {"d", d.get_str()}, {"shift", shift.get_str()}});
    std::vector<std::pair<std::string, Integer>> roots = {{"Pa", a}, {"Pb", b}, {"Pc", c}};
    for (const auto& [label, r] : roots) {
        auto xr = detail::elt(k.from_rational(Rational(r) - shift));
        t.add_point(label, xr, detail::elt(k.from_integer(d)));
        t.add_point(label + "-", xr, detail::elt(k.from_integer(-d)));
    }
    t.add_claim("the six points (a, +-d), (b, +-d), (c, +-d) lie on E", ClaimStatus::certified, {model});
    auto rel = t.add_check("sum-zero", "(a,d) + (b,d) + (c,d) = O: the three points lie on the line y = d",
                           Json{{"points", {"Pa", "Pb", "Pc"}}});
    t.add_claim("(a, d) + (b, d) + (c, d) = O", ClaimStatus::certified, {rel});
    for (const auto& [label, r] : roots) {
        NFPoint pt = NFPoint::affine(k.from_rational(Rational(r) - shift), k.from_integer(d));
        std::optional<EInfOrderCert> cert;
        if (shift.get_den() == 1) {
            try {
                auto ln = ec_lutz_nagell_nontorsion(e, pt);
                if (auto* c2 = std::get_if<EInfOrderCert>(&ln)) cert = *c2;
            } catch (const DomainError&) {
            }
        }
        if (!cert) cert = detail::search_order_mismatch(e, pt, o);
        std::string stmt = "the point " + label + " (x = " + r.get_str() + " on the original model) has infinite order";
        if (cert)
            t.add_claim(stmt, ClaimStatus::certified, {t.add_certificate(*cert)}, cert->method);
        else
            t.add_claim(stmt, ClaimStatus::unresolved, {}, "no certificate with primes up to " + std::to_string(o.prime_bound));
    }
    t.add_claim("rank E(Q) >= 2", ClaimStatus::unresolved, {},
                "independence of (a,d) and (b,d) needs heights or descent");
    return detail::finish(std::move(t));
}

// ---- y^2 = x^3 + x + d^2 over a number field -------------------------------

namespace detail {

struct Rank1Choice {
    NFElement d;
    NFCurve curve;
    EInfOrderCert cert;
};

inline void require_pair(const UnramifiedPrime& wp, const UnramifiedPrime& wq) {
    if (wp.residue_degree() != 1 || wq.residue_degree() != 1)
        throw HypothesisError("residue-field", "both primes must have prime residue fields");
    if (!curvecert::detail::hasse_gap(wp.p(), wq.p()))
        throw HypothesisError("hasse-gap", std::to_string(wq.p()) + " <= " + std::to_string(wp.p()) + " + 1 + 2*sqrt(" +
                                               std::to_string(wp.p()) + ")");
}

inline void require_integral(const NFElement& a, const UnramifiedPrime& pr, const std::string& name) {
    if (!pr.is_integral(a)) throw HypothesisError("integral", name + " is not integral at the " + pr.description());
}

inline Rank1Choice rank1_candidate(const NumberField& k, const NFElement& d, const UnramifiedPrime& wp,
                                   const UnramifiedPrime& wq, const ForgeOptions& o) {
    require_pair(wp, wq);
    if (!k.generates(d)) throw HypothesisError("hypothesis-1", "K != Q(d)");
    if (d.is_zero()) throw HypothesisError("hypothesis-1", "d = 0");
    require_integral(d, wp, "d");
    require_integral(d, wq, "d");
    NFElement d2 = d * d;
    NFElement disc = k.from_integer(-16) * (k.from_integer(4) + k.from_integer(27) * d2 * d2);
    if (wp.contains(disc)) throw HypothesisError("hypothesis-2", "-16(4 + 27 d^4) lies in the first prime");
    if (!wq.contains(d)) throw HypothesisError("hypothesis-3", "d does not lie in the second prime");
    NFCurve e(k, k.one(), d2);
    auto cert = ec_nontorsion_two_prime(e, NFPoint::affine(k.zero(), d), wp, wq, o.count_bound);
    return {d, e, cert};
}

}  // namespace detail

/// Rank-one recipe over K: d = p q d1 with degree-one primes over p < q and
/// q > p + 1 + 2 sqrt(p). With `primes` the search is skipped; with `d` the
/// multiplier is skipped too.
inline TheoremInstance forge_nf_rank1(const NumberField& k, const NFElement& d1, const ForgeOptions& o = {},
                                      const std::optional<SuppliedPrimes>& primes = std::nullopt,
                                      const std::optional<NFElement>& d_given = std::nullopt) {
    if (d_given && !primes) throw DomainError("an explicit d needs explicit primes");
    if (!d_given && !k.generates(d1)) throw HypothesisError("hypothesis-1", "K != Q(d1)");
    auto t = detail::start("nf-rank1", o);
    std::optional<detail::Rank1Choice> choice;
    std::optional<SuppliedPrimes> used;
    if (primes) {
        NFElement d = d_given ? *d_given : k.from_integer(Integer(static_cast<unsigned long>(primes->first.p() * primes->second.p()))) * d1;
        choice = detail::rank1_candidate(k, d, primes->first, primes->second, o);
        used = primes;
    } else {
        auto list = degree_one_primes(k, 3, o.prime_bound);
        for (std::size_t i = 0; i < list.size() && !choice; ++i)
            for (std::size_t j = 0; j < list.size() && !choice; ++j) {
                if (list[j].p() == list[i].p() || !curvecert::detail::hasse_gap(list[i].p(), list[j].p())) continue;
                NFElement d = k.from_integer(Integer(static_cast<unsigned long>(list[i].p() * list[j].p()))) * d1;
                try {
                    choice = detail::rank1_candidate(k, d, list[i], list[j], o);
                    used = SuppliedPrimes{list[i], list[j]};
                } catch (const HypothesisError&) {
                }
            }
        if (!choice)
            throw BoundExceeded("no admissible pair of degree-one primes with p, q <= " + std::to_string(o.prime_bound) +
                                "; raise the prime bound");
    }
    const auto& [d, e, cert] = *choice;
    const auto& wp = used->first;
    const auto& wq = used->second;
    t.parameters = Json{{"field", k.description()},
                        {"d1", detail::elt(d1)},
                        {"d", detail::elt(d)},
                        {"d_text", d.to_string("t")},
                        {"first_prime", detail::prime_param(wp)},
                        {"second_prime", detail::prime_param(wq)},
                        {"search", primes ? "supplied" : "first admissible pair in increasing order"}};
    t.field = io::nf_json(k);
    t.curve = io::ec_json(e);
    t.add_point("P", detail::elt(k.zero()), detail::elt(d));
    auto r1 = t.add_check("residue-degree", "first prime has prime residue field", Json{{"prime", io::prime_json(wp)}, {"degree", 1}});
    auto r2 = t.add_check("residue-degree", "second prime has prime residue field", Json{{"prime", io::prime_json(wq)}, {"degree", 1}});
    auto gap = t.add_check("hasse-gap", "q > p + 1 + 2 sqrt(p)", Json{{"p", wp.p()}, {"q", wq.p()}});
    auto h1 = t.add_check("generates-field", "hypothesis (1): K = Q(d)", Json{{"element", detail::elt(d)}});
    auto integ = t.add_check("integral-at", "d is integral at both primes",
                             Json{{"prime", io::prime_json(wp)}, {"elements", Json::array({detail::elt(d)})}});
    auto integ2 = t.add_check("integral-at", "d is integral at both primes",
                              Json{{"prime", io::prime_json(wq)}, {"elements", Json::array({detail::elt(d)})}});
    auto h2 = t.add_check("not-in-prime", "hypothesis (2): -16(4 + 27 d^4) is not in the first prime",
                          Json{{"element", detail::elt(e.discriminant())}, {"prime", io::prime_json(wp)}});
    auto h3 = t.add_check("in-prime", "hypothesis (3): d lies in the second prime",
                          Json{{"element", detail::elt(d)}, {"prime", io::prime_json(wq)}});
    auto cid = t.add_certificate(cert);
    t.add_claim("K = Q(d)", ClaimStatus::certified, {h1});
    t.add_claim("P = (0, d) has infinite order in E(K), so rank E(K) >= 1", ClaimStatus::certified,
                {cid, r1, r2, gap, integ, integ2, h1, h2, h3}, "two-prime reduction");
    t.add_claim("P is not defined over a proper subfield of K", ClaimStatus::certified, {h1},
                "the y-coordinate d generates K");
    NFElement j = e.j_invariant();
    if (k.generates(j)) {
        auto jc = t.add_check("generates-field", "j(E) = 6912/(4 + 27 d^4) generates K", Json{{"element", detail::elt(j)}});
        t.add_claim("E is not isomorphic to a curve defined over a proper subfield of K", ClaimStatus::certified, {jc},
                    "any model over a subfield F has j(E) in F");
    } else {
        t.add_claim("E is not isomorphic to a curve defined over a proper subfield of K", ClaimStatus::unresolved, {},
                    "j(E) lies in a proper subfield; the isomorphism class may descend");
    }
    return detail::finish(std::move(t));
}

// ---- y^2 = x^3 - beta^2 x + d^2 over a number field ------------------------

namespace detail {

struct Rank2Choice {
    NFElement d, beta;
    NFCurve curve;
    EInfOrderCert cert_p, cert_q;
};

inline Rank2Choice rank2_candidate(const NumberField& k, const NFElement& d, const NFElement& beta,
                                   const UnramifiedPrime& wp, const UnramifiedPrime& wq, const ForgeOptions& o) {
    require_pair(wp, wq);
    if (d.is_zero() || !k.generates(d)) throw HypothesisError("hypothesis-1", "K != Q(d)");
    if (!k.generates(beta)) throw HypothesisError("hypothesis-1", "K != Q(beta)");
    for (const auto* pr : {&wp, &wq}) {
        require_integral(d, *pr, "d");
        require_integral(beta, *pr, "beta");
    }
    NFElement b2 = beta * beta, d2 = d * d;
    NFElement a = -b2;
    NFElement disc = k.from_integer(-16) * (k.from_integer(4) * a * a * a + k.from_integer(27) * d2 * d2);
    if (wp.contains(disc)) throw HypothesisError("hypothesis-2", "16(-4 beta^6 + 27 d^4) lies in the first prime");
    if (!wq.contains(d)) throw HypothesisError("hypothesis-3", "d does not lie in the second prime");
    if (wp.contains(beta)) throw HypothesisError("hypothesis-4", "beta lies in the first prime");
    if (wq.contains(beta)) throw HypothesisError("hypothesis-5", "beta lies in the second prime");
    NFCurve e(k, a, d2);
    auto cp = ec_nontorsion_two_prime(e, NFPoint::affine(k.zero(), d), wp, wq, o.count_bound);
    auto cq = ec_nontorsion_two_prime(e, NFPoint::affine(beta, d), wp, wq, o.count_bound);
    return {d, beta, e, cp, cq};
}

}  // namespace detail

/// Rank-two recipe over K with P = (0, d) and Q = (beta, d).
inline TheoremInstance forge_nf_rank2(const NumberField& k, const NFElement& d1, const NFElement& beta1,
                                      const ForgeOptions& o = {},
                                      const std::optional<SuppliedPrimes>& primes = std::nullopt,
                                      const std::optional<NFElement>& d_given = std::nullopt) {
    if (beta1.is_zero()) throw DomainError("beta = 0 gives a singular family: Q = P and hypothesis (4) fails");
    if (d_given && !primes) throw DomainError("an explicit d needs explicit primes");
    if (!d_given && !k.generates(d1)) throw HypothesisError("hypothesis-1", "K != Q(d1)");
    if (!k.generates(beta1)) throw HypothesisError("hypothesis-1", "K != Q(beta)");
    auto t = detail::start("nf-rank2", o);
    std::optional<detail::Rank2Choice> choice;
    std::optional<SuppliedPrimes> used;
    if (primes) {
        NFElement d = d_given ? *d_given : k.from_integer(Integer(static_cast<unsigned long>(primes->first.p() * primes->second.p()))) * d1;
        choice = detail::rank2_candidate(k, d, beta1, primes->first, primes->second, o);
        used = primes;
    } else {
        auto list = degree_one_primes(k, 3, o.prime_bound);
        for (std::size_t i = 0; i < list.size() && !choice; ++i)
            for (std::size_t j = 0; j < list.size() && !choice; ++j) {
                if (list[j].p() == list[i].p() || !curvecert::detail::hasse_gap(list[i].p(), list[j].p())) continue;
                NFElement d = k.from_integer(Integer(static_cast<unsigned long>(list[i].p() * list[j].p()))) * d1;
                try {
                    choice = detail::rank2_candidate(k, d, beta1, list[i], list[j], o);
                    used = SuppliedPrimes{list[i], list[j]};
                } catch (const HypothesisError&) {
                }
            }
        if (!choice)
            throw BoundExceeded("no admissible pair of degree-one primes with p, q <= " + std::to_string(o.prime_bound) +
                                "; raise the prime bound");
    }
    const auto& [d, beta, e, cp, cq] = *choice;
    const auto& wp = used->first;
    const auto& wq = used->second;
    t.parameters = Json{{"field", k.description()},
                        {"d", detail::elt(d)},
                        {"d_text", d.to_string("t")},
                        {"beta", detail::elt(beta)},
                        {"beta_text", beta.to_string("t")},
                        {"first_prime", detail::prime_param(wp)},
                        {"second_prime", detail::prime_param(wq)},
                        {"search", primes ? "supplied" : "first admissible pair in increasing order"}};
    t.field = io::nf_json(k);
    t.curve = io::ec_json(e);
    t.add_point("P", detail::elt(k.zero()), detail::elt(d));
    t.add_point("Q", detail::elt(beta), detail::elt(d));
    auto r1 = t.add_check("residue-degree", "first prime has prime residue field", Json{{"prime", io::prime_json(wp)}, {"degree", 1}});
    auto r2 = t.add_check("residue-degree", "second prime has prime residue field", Json{{"prime", io::prime_json(wq)}, {"degree", 1}});
    auto gap = t.add_check("hasse-gap", "q > p + 1 + 2 sqrt(p)", Json{{"p", wp.p()}, {"q", wq.p()}});
    auto h1a = t.add_check("generates-field", "hypothesis (1): K = Q(d)", Json{{"element", detail::elt(d)}});
    auto h1b = t.add_check("generates-field", "hypothesis (1): K = Q(beta)", Json{{"element", detail::elt(beta)}});
    auto h2 = t.add_check("not-in-prime", "hypothesis (2): 16(-4 beta^6 + 27 d^4) is not in the first prime",
                          Json{{"element", detail::elt(e.discriminant())}, {"prime", io::prime_json(wp)}});
    auto h3 = t.add_check("in-prime", "hypothesis (3): d lies in the second prime",
                          Json{{"element", detail::elt(d)}, {"prime", io::prime_json(wq)}});
    auto h4 = t.add_check("not-in-prime", "hypothesis (4): beta is not in the first prime",
                          Json{{"element", detail::elt(beta)}, {"prime", io::prime_json(wp)}});
    auto h5 = t.add_check("not-in-prime", "hypothesis (5): beta is not in the second prime",
                          Json{{"element", detail::elt(beta)}, {"prime", io::prime_json(wq)}});
    auto c1 = t.add_certificate(cp);
    auto c2 = t.add_certificate(cq);
    t.add_claim("K = Q(d) = Q(beta)", ClaimStatus::certified, {h1a, h1b});
    t.add_claim("P = (0, d) has infinite order in E(K)", ClaimStatus::certified, {c1, r1, r2, gap, h2, h3}, "two-prime reduction");
    t.add_claim("Q = (beta, d) has infinite order in E(K)", ClaimStatus::certified, {c2, r1, r2, gap, h2, h3, h4, h5},
                "two-prime reduction");
    t.add_claim("P and Q are not defined over a proper subfield of K", ClaimStatus::certified, {h1a, h1b});
    NFElement j = e.j_invariant();
    if (k.generates(j)) {
        auto jc = t.add_check("generates-field", "j(E) generates K", Json{{"element", detail::elt(j)}});
        t.add_claim("E is not isomorphic to a curve defined over a proper subfield of K", ClaimStatus::certified, {jc},
                    "any model over a subfield F has j(E) in F");
    } else {
        t.add_claim("E is not isomorphic to a curve defined over a proper subfield of K", ClaimStatus::unresolved, {},
                    "j(E) lies in a proper subfield; the isomorphism class may descend");
    }
    t.add_claim("P and Q are linearly independent in E(K)", ClaimStatus::unresolved, {}, "needs a height pairing");
    return detail::finish(std::move(t));
}

// ---- y^2 = (x - a_1)...(x - a_q) + d^2 over K ------------------------------

/// Residue-class cover curve. `reps` default to 0, 1, ..., p - 1.
inline TheoremInstance forge_residue_cover(const NumberField& k, const UnramifiedPrime& pr, const NFElement& d,
                                           std::optional<std::vector<NFElement>> reps = std::nullopt,
                                           const ForgeOptions& o = {}) {
    if (!(pr.field() == k)) throw DomainError("prime belongs to a different field");
    if (pr.residue_degree() != 1 || pr.p() < 5)
        throw HypothesisError("residue-field", "the residue field must have prime order q >= 5");
    std::uint64_t q = pr.p();
    if (!reps) {
        reps.emplace();
        for (std::uint64_t i = 0; i < q; ++i) reps->push_back(k.from_integer(Integer(static_cast<unsigned long>(i))));
    }
    {
        std::set<std::uint64_t> seen;
        for (const auto& a : *reps) {
            if (!pr.is_integral(a)) throw HypothesisError("cover", "representative " + a.to_string() + " is not integral");
            seen.insert(pr.residue_field().index_of(pr.reduce(a)));
        }
        if (reps->size() != q || seen.size() != q)
            throw HypothesisError("cover", "representatives must cover the " + std::to_string(q) + " residue classes exactly once");
    }
    if (d.is_zero() || !pr.is_integral(d) || !pr.contains(d)) throw HypothesisError("d-in-prime", "d must be a nonzero element of the prime");
    auto t = detail::start("residue-cover", o);
    using NFPoly = Polynomial<NumberField>;
    NFPoly x = NFPoly::x(k);
    NFPoly f = NFPoly::constant(k, k.one());
    for (const auto& a : *reps) f = f * (x - NFPoly::constant(k, a));
    NFHypCurve c(k, f + NFPoly::constant(k, d * d));
    Json reps_json = Json::array();
    for (const auto& a : *reps) reps_json.push_back(detail::elt(a));
    t.parameters = Json{{"field", k.description()}, {"prime", detail::prime_param(pr)}, {"d", detail::elt(d)}, {"reps", reps_json}};
    t.field = io::nf_json(k);
    t.curve = io::hc_json(c);
    std::vector<std::pair<NFElement, NFElement>> pts;
    for (std::size_t i = 0; i < reps->size(); ++i) {
        t.add_point("A" + std::to_string(i + 1) + "+", detail::elt((*reps)[i]), detail::elt(d));
        t.add_point("A" + std::to_string(i + 1) + "-", detail::elt((*reps)[i]), detail::elt(-d));
        pts.emplace_back((*reps)[i], d);
        pts.emplace_back((*reps)[i], -d);
    }
    auto model = t.add_check("hyperelliptic-model", "C is y^2 = (x - a_1)...(x - a_q) + d^2",
                             Json{{"f", io::nfpoly_json(f)}, {"d", detail::elt(d)}});
    auto cover = t.add_check("residue-cover", "a_1, ..., a_q meet every residue class mod the prime once",
                             Json{{"prime", io::prime_json(pr)}, {"elements", reps_json}});
    auto din = t.add_check("in-prime", "d lies in the prime", Json{{"element", detail::elt(d)}, {"prime", io::prime_json(pr)}});
    auto dnz = t.add_check("nonzero", "d != 0", Json{{"element", detail::elt(d)}});
    std::vector<std::uint64_t> fermat(q + 1, 0);
    fermat[1] = q - 1;
    fermat[q] = 1;
    auto red = t.add_check("reduction-equals", "C mod the prime is y^2 = x^q - x",
                           Json{{"prime", io::prime_json(pr)}, {"expected", fermat}});
    t.add_claim("C has the 2q + 1 = " + std::to_string(2 * q + 1) + " points (a_i, +-d) and infinity over K",
                ClaimStatus::certified, {model, dnz}, "the points are distinct since the a_i are distinct and d != 0");
    t.add_claim("C mod the prime is y^2 = x^q - x", ClaimStatus::certified, {cover, din, red});
    auto rc = hc_coleman_rank_cert(c, pts, true, pr);
    std::string rank_stmt = "rank J(K) >= g = " + std::to_string(c.genus());
    if (auto* cert = std::get_if<HRankCert>(&rc))
        t.add_claim(rank_stmt, ClaimStatus::certified, {t.add_certificate(*cert)}, "Coleman bound exceeded");
    else
        t.add_claim(rank_stmt, ClaimStatus::unresolved, {}, std::get<Inconclusive>(rc).reason);
    if (k.degree() > 1) {
        std::vector<NFElement> gens = *reps;
        gens.push_back(d);
        auto g = std::find_if(gens.begin(), gens.end(), [&](const NFElement& a) { return k.generates(a); });
        if (g != gens.end()) {
            auto gc = t.add_check("generates-field", "one of a_1, ..., a_q, d generates K", Json{{"element", detail::elt(*g)}});
            t.add_claim("K = Q(a_1, ..., a_q, d)", ClaimStatus::certified, {gc});
        } else {
            t.add_claim("K = Q(a_1, ..., a_q, d)", ClaimStatus::unresolved, {}, "no single parameter generates K");
        }
    }
    return detail::finish(std::move(t));
}

// ---- y^2 = f(x) + d^2 over Q(u), f(u) = 0 ----------------------------------

/// Hyperelliptic curve y^2 = f + d^2 with the points (u, +-d) over Q(u), for
/// monic integral f of odd degree n >= 5.
inline TheoremInstance forge_trinomial_hyp(const Polynomial<RationalField>& f, const Rational& d,
                                           const ForgeOptions& o = {},
                                           const std::optional<CitedGroup>& cited = std::nullopt,
                                           const MGTable& table = MGTable::builtin()) {
    require_monic_integral(f);
    std::size_t n = f.deg();
    if (n < 5 || n % 2 == 0) throw DomainError("deg f must be odd and at least 5");
    if (d == 0) throw DomainError("d = 0: the d^2 term vanishes and the points collapse to Weierstrass points");
    using detail::QPoly;
    QPoly gq = f + detail::rational_constant(d * d);
    if (!poly_is_separable(gq)) throw DomainError("g = f + d^2 is not separable");
    auto irr = ga_irreducible_over_Q(f, std::max<std::uint64_t>(o.prime_bound, 1000));
    if (!irr.certifies()) throw DomainError("f is not certified irreducible over Q (" + to_string(irr.status) + ")");
    NumberField k = NumberField::create(f, irr);
    auto t = detail::start("trinomial", o);
    NFHypCurve c(k, detail::lift(k, gq));
    NFElement u = k.generator(), dk = k.from_rational(d);
    t.parameters = Json{{"f", f.to_string("x")}, {"d", d.get_str()}, {"genus", c.genus()}};
    if (cited) t.parameters["cited_group"] = cited->group;
    t.field = io::nf_json(k);
    t.curve = io::hc_json(c);
    t.add_point("U+", detail::elt(u), detail::elt(dk));
    t.add_point("U-", detail::elt(u), detail::elt(-dk));
    auto irr_id = t.add_certificate(irr);
    t.add_claim("f is irreducible over Q", ClaimStatus::certified, {irr_id});
    auto model = t.add_check("hyperelliptic-model", "C is y^2 = f(x) + d^2",
                             Json{{"f", io::nfpoly_json(detail::lift(k, f))}, {"d", detail::elt(dk)}});
    auto sep = t.add_check("separable-over-Q", "g = f + d^2 is separable", Json{{"polynomial", io::qpoly_json(gq)}});
    auto dnz = t.add_check("nonzero", "d != 0", Json{{"element", detail::elt(dk)}});
    t.add_claim("(u, d) and (u, -d) lie on C over Q(u)", ClaimStatus::certified, {model});
    t.add_claim("|C(L_f)| >= 2n = 4g + 2 = " + std::to_string(2 * n), ClaimStatus::certified, {irr_id, model, dnz},
                "the n conjugates u_i are distinct roots of f and (u_i, d) != (u_i, -d)");

    // Galois group
    std::string group;
    bool group_proved = false;
    std::string galois_id;
    auto sn = ga_certify_Sn(f, o.prime_bound, o.seed);
    if (auto* gc = std::get_if<GaloisCertificate>(&sn)) {
        galois_id = t.add_certificate(*gc);
        group = gc->group;
        group_proved = true;
        t.add_claim("Gal(L_f/Q) = " + group, ClaimStatus::certified, {galois_id}, gc->criterion);
    } else if (ga_disc_square(f)) {
        auto an = ga_certify_alternating_subgroup(f, o.prime_bound);
        if (auto* gc = std::get_if<GaloisCertificate>(&an))
            t.add_claim("Gal(L_f/Q) is contained in A" + std::to_string(n), ClaimStatus::certified, {t.add_certificate(*gc)},
                        "square discriminant");
        if (cited) {
            galois_id = t.add_certificate(ga_cite(f, cited->group, cited->citation));
            group = cited->group;
            t.add_claim("Gal(L_f/Q) = " + group, ClaimStatus::cited_unverified, {galois_id}, "citation: " + cited->citation);
        }
    } else {
        t.add_claim("Gal(L_f/Q) = S" + std::to_string(n), ClaimStatus::unresolved, {},
                    std::get<Inconclusive>(sn).reason);
    }

    // non-torsion at a prime over a divisor of d
    std::optional<HInfOrderCert> wcert;
    std::string prime_checks_sep, prime_checks_deg;
    Integer num = abs(d.get_num());
    for (std::uint64_t l = 3; l <= o.prime_bound && !wcert; l = next_prime(l)) {
        if (!mpz_divisible_ui_p(num.get_mpz_t(), l)) continue;
        std::vector<UnramifiedPrime> above;
        try {
            above = nf_primes_above(k, l, o.seed);
        } catch (const HypothesisError&) {
            continue;
        }
        for (const auto& pr : above) {
            try {
                wcert = hc_nontorsion_weierstrass_cert(c, u, dk, pr);
            } catch (const Error&) {
                continue;
            }
            prime_checks_sep = t.add_check("separable-mod-p", "f mod " + std::to_string(l) + " has distinct roots",
                                           Json{{"polynomial", io::qpoly_json(f)}, {"p", l}});
            prime_checks_deg = t.add_check("residue-degree", "residue degree of the chosen prime",
                                           Json{{"prime", io::prime_json(pr)}, {"degree", pr.residue_degree()}});
            break;
        }
    }
    std::string nt_stmt = "[(u, d) - infinity] has infinite order in J(Q(u)), hence in J(L_f)";
    std::string wid;
    if (wcert) {
        wid = t.add_certificate(*wcert);
        t.add_claim(nt_stmt, ClaimStatus::certified, {wid, prime_checks_sep, prime_checks_deg},
                    "reduction to a 2-torsion class at a good odd unramified prime, while the point is not a Weierstrass point");
    } else {
        t.add_claim(nt_stmt, ClaimStatus::unresolved, {},
                    "no odd prime divisor of d up to " + std::to_string(o.prime_bound) + " gives a usable prime");
    }

    // rank >= m(G)
    auto entry = group.empty() ? std::nullopt : table.lookup(group);
    if (!group.empty() && entry) {
        std::string stmt = "rank J(L_f) >= m(" + group + ") = " + std::to_string(entry->value);
        std::string arg =
            "the conjugates D_i of D = (u, d) - infinity sum to div(y - d), so a kernel of the Galois action on their "
            "Q-span containing a transitive subgroup would force nD = 0; the action is faithful and the span has "
            "dimension >= m(G)";
        std::vector<std::string> basis;
        if (!wid.empty()) basis.push_back(wid);
        basis.push_back(galois_id);
        if (!entry->external)
            basis.push_back(t.add_check("mg-value", "stored m(" + group + ")", Json{{"group", group}, {"value", entry->value}}));
        ClaimStatus st = ClaimStatus::certified;
        if (!wcert) st = ClaimStatus::unresolved;
        else if (!group_proved || entry->external) st = ClaimStatus::conditional;
        if (st == ClaimStatus::conditional) arg += "; conditional on the identification of G and the value m(G)";
        t.add_claim(stmt, st, basis, arg);
    } else {
        t.add_claim("rank J(L_f) >= m(G)", ClaimStatus::unresolved, {},
                    group.empty() ? "Galois group not identified" : "m(" + group + ") is not in the table");
    }
    (void)sep;
    return detail::finish(std::move(t));
}

/// f = x^n + a x^s + b.
inline Polynomial<RationalField> trinomial(std::size_t n, std::size_t s, const Integer& a, const Integer& b) {
    if (s == 0 || s >= n) throw DomainError("need 0 < s < n");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    c[s] += Rational(a);
    c[0] += Rational(b);
    return Polynomial<RationalField>(RationalField{}, std::move(c));
}

// ---- E: Y^2 = X^3 - a X^2 - (a+3) X - 1 + d^2 over the simplest cubic field --

inline TheoremInstance forge_shanks(const Integer& a, const Rational& d, const ForgeOptions& o = {}) {
    if (a < 1) throw DomainError("a must be a positive integer");
    if (d == 0) throw DomainError("d must be nonzero");
    using detail::QPoly;
    QPoly f = rational_poly({Integer(-1), Integer(-(a + 3)), Integer(-a), Integer(1)});
    QPoly gq = f + detail::rational_constant(d * d);
    if (!poly_is_separable(gq)) throw DomainError("f + d^2 is not separable");
    NumberField k = NumberField::certify(f);
    auto t = detail::start("shanks", o);
    NFElement rho = k.generator();
    NFElement rho2 = -k.inverse(rho + k.one());
    NFElement rho3 = -k.inverse(rho2 + k.one());
    Rational shift = Rational(a) / 3;
    QPoly w = detail::translate(f, shift) + detail::rational_constant(d * d);
    NFCurve e(k, k.from_rational(w.coeff(1)), k.from_rational(w.coeff(0)));
    NFElement s = k.from_rational(shift), dk = k.from_rational(d);
    NFPoint P = NFPoint::affine(rho - s, dk), Q = NFPoint::affine(rho2 - s, dk), R = NFPoint::affine(rho3 - s, dk);
    NFPoint P1 = e.add(P, Q), P2 = e.add(P, e.neg(Q));
    t.parameters = Json{{"a", a.get_str()},
                        {"d", d.get_str()},
                        {"f", f.to_string("X")},
                        {"model", "X = x + " + shift.get_str() + " moves Y^2 = f(X) + d^2 to short form"}};
    t.field = io::nf_json(k);
    t.curve = io::ec_json(e);
    for (auto [label, pt] : {std::pair{"P", P}, {"Q", Q}, {"R", R}, {"P1", P1}, {"P2", P2}})
        t.add_point(label, detail::elt(pt.x), detail::elt(pt.y));
    Integer root = a * a + 3 * a + 9;
    auto dsq = t.add_check("disc-square", "disc(f) = (a^2 + 3a + 9)^2",
                           Json{{"polynomial", io::qpoly_json(f)}, {"root", root.get_str()}});
    auto m2 = t.add_check("inverse-shift", "rho_2 = -1/(1 + rho)", Json{{"from", detail::elt(rho)}, {"to", detail::elt(rho2)}});
    auto m3 = t.add_check("inverse-shift", "rho_3 = -1/(1 + rho_2)", Json{{"from", detail::elt(rho2)}, {"to", detail::elt(rho3)}});
    auto z2 = t.add_check("root-of", "f(rho_2) = 0", Json{{"element", detail::elt(rho2)}, {"polynomial", io::qpoly_json(f)}});
    auto z3 = t.add_check("root-of", "f(rho_3) = 0", Json{{"element", detail::elt(rho3)}, {"polynomial", io::qpoly_json(f)}});
    auto dist = t.add_check("distinct", "rho, rho_2, rho_3 are distinct",
                            Json{{"elements", Json::array({detail::elt(rho), detail::elt(rho2), detail::elt(rho3)})}});
    auto nm = t.add_check("norm", "N(rho) = 1", Json{{"element", detail::elt(rho)}, {"value", "1"}});
    auto model = t.add_check("shifted-model", "E is Y^2 = f(X) + d^2 translated to short Weierstrass form",
                             Json{{"f", io::qpoly_json(f)}, {"d", d.get_str()}, {"shift", shift.get_str()}});
    auto rel = t.add_check("sum-zero", "P + Q + R = O", Json{{"points", {"P", "Q", "R"}}});
    auto s1 = t.add_check("sum", "P1 = P + Q", Json{{"terms", {"P", "Q"}}, {"result", "P1"}});
    auto s2 = t.add_check("sum", "P2 = P - Q", Json{{"terms", {"P", "-Q"}}, {"result", "P2"}});
    t.add_claim("Gal(L_f/Q) = Z/3 and L_f = Q(rho)", ClaimStatus::certified, {dsq, z2, z3, dist},
                "all three roots of f lie in Q(rho)");
    t.add_claim("the other roots of f are rho_2 = -1/(1 + rho) and rho_3 = -1/(1 + rho_2)", ClaimStatus::certified,
                {m2, m3, z2, z3, dist});
    t.add_claim("rho, rho_2, rho_3 are units (fundamentality is not certified)", ClaimStatus::certified, {nm},
                "roots of a monic integer polynomial with norm 1");
    t.add_claim("(rho, +-d), (rho_2, +-d), (rho_3, +-d) lie on E over L_f", ClaimStatus::certified, {model});
    t.add_claim("P + Q + R = O", ClaimStatus::certified, {rel});
    t.add_claim("P1 = P + Q and P2 = P - Q", ClaimStatus::certified, {s1, s2});
    std::string conj_arg = "sigma: rho -> rho_2 is an automorphism of L_f fixing the rational model and d, with sigma(P) = Q "
                           "and sigma(Q) = R";
    auto cert = detail::search_order_mismatch(e, P, o);
    if (cert) {
        auto cid = t.add_certificate(*cert);
        t.add_claim("P, Q, R have infinite order", ClaimStatus::certified, {cid, m2, m3, z2, z3, model},
                    "P by reduction; " + conj_arg);
        t.add_claim("rank E(L_f) >= 2", ClaimStatus::certified, {cid, rel, m2, m3, z2, z3, model},
                    "the Q-span V of P, Q, R in E(L_f) (x) Q is a nonzero Z/3-module killed by 1 + sigma + sigma^2, so it "
                    "has no trivial summand and dim V >= 2");
    } else {
        t.add_claim("P, Q, R have infinite order", ClaimStatus::unresolved, {},
                    "no reduced-order mismatch at primes up to " + std::to_string(o.prime_bound));
        t.add_claim("rank E(L_f) >= 2", ClaimStatus::unresolved, {}, "needs P of infinite order");
    }
    t.add_claim("P1 and P2 are orthogonal for the canonical height", ClaimStatus::certified, {m2, z2, model, s1, s2},
                "<P + Q, P - Q> = h(P) - h(Q) = 0 because Q = sigma(P) and the canonical height of a curve over Q is "
                "Galois invariant");
    return detail::finish(std::move(t));
}

// ---- function-field models -------------------------------------------------

namespace detail {

inline void ff_common(TheoremInstance& t, const RationalFunctionField& k, const FFPoly& f, const FFPoly& g,
                      const RatFunc& alpha) {
    t.field = io::fffield_json(k);
    HyperellipticModel<RationalFunctionField> model(k, FFPoly::constant(k, alpha), g);
    t.curve = Json{{"type", "hyperelliptic-model"},
                   {"alpha", io::ratfunc_json(alpha)},
                   {"g", io::ffpoly_json(g)},
                   {"root_of", io::ffpoly_json(f)},
                   {"degree", g.deg()},
                   {"genus", (g.deg() - 1) / 2}};
}

}  // namespace detail

/// y^2 = U^N + U + t + d^2 over F_q(t), N = (q^m - 1)/(q - 1), q odd.
inline TheoremInstance forge_pgl(const GaloisField& base, std::size_t m, const RatFunc& d, const ForgeOptions& o = {}) {
    if (base.characteristic() == 2) throw DomainError("q must be odd");
    if (d.is_zero()) throw DomainError("d must be nonzero");
    RationalFunctionField k(base);
    FFPoly f = ff_trinomial(k, m);
    if (!ff_separable(f)) throw DomainError("U^N + U + t is not separable");
    FFPoly g = f + FFPoly::constant(k, d * d);
    if (!ff_separable(g)) throw DomainError("g = f + d^2 is not separable");
    auto t = detail::start("pgl", o);
    FFQuotientRing ring(k, f);
    detail::ff_common(t, k, f, g, k.zero());
    std::size_t n = f.deg();
    t.parameters = Json{{"q", base.order()}, {"m", m}, {"N", n}, {"d", d.to_string()}, {"f", f.to_string("U")}};
    t.add_point("U+", "u", io::ratfunc_json(d));
    t.add_point("U-", "u", io::ratfunc_json(-d));
    auto tri = t.add_check("ff-trinomial", "f = U^N + U + t", Json{{"polynomial", io::ffpoly_json(f)}, {"m", m}});
    auto sf = t.add_check("ff-separable", "f is separable", Json{{"polynomial", io::ffpoly_json(f)}});
    auto sg = t.add_check("ff-separable", "g = f + d^2 is separable", Json{{"polynomial", io::ffpoly_json(g)}});
    auto mod = t.add_check("ff-shifted-model", "g = f + d^2",
                           Json{{"f", io::ffpoly_json(f)}, {"g", io::ffpoly_json(g)}, {"d", io::ratfunc_json(d)},
                                {"alpha", io::ratfunc_json(k.zero())}});
    auto dnz = t.add_check("ff-nonzero", "d != 0", Json{{"value", io::ratfunc_json(d)}});
    t.add_claim("(u, d) and (u, -d) lie on y^2 = g(x) over K(u)", ClaimStatus::certified, {tri, mod, sg});
    t.add_claim("|C(L)| >= 2N = " + std::to_string(2 * n), ClaimStatus::certified, {sf, mod, dnz},
                "the N roots of f are distinct and d != -d in odd characteristic");
    t.add_claim("Gal(L_f/K) = PGL(" + std::to_string(m) + ", F_" + std::to_string(base.order()) + ")",
                ClaimStatus::cited_unverified, {}, "citation: Abhyankar, trinomials over F_q(t)");
    return detail::finish(std::move(t));
}

/// y^2 + alpha y = f + d(d + alpha) over F_{2^k}(t) for a supplied f.
inline TheoremInstance forge_m24(const FFPoly& f, const RatFunc& alpha, const RatFunc& d, const ForgeOptions& o = {}) {
    const RationalFunctionField& k = f.field();
    if (k.characteristic() != 2) throw DomainError("the model needs characteristic 2");
    if (alpha.is_zero()) throw DomainError("alpha = 0 degenerates the model");
    if (f.is_constant() || !f.is_monic()) throw DomainError("f must be monic of positive degree");
    if (!ff_separable(f)) throw DomainError("f is not separable");
    FFPoly g = f + FFPoly::constant(k, d * (d + alpha));
    if (!ff_separable(g)) throw DomainError("g = f + d(d + alpha) is not separable");
    auto t = detail::start("m24", o);
    FFQuotientRing ring(k, f);
    detail::ff_common(t, k, f, g, alpha);
    std::size_t n = f.deg();
    t.parameters = Json{{"q", k.base().order()}, {"alpha", alpha.to_string()}, {"d", d.to_string()}, {"deg_f", n}};
    t.add_point("U0", "u", io::ratfunc_json(d));
    t.add_point("U1", "u", io::ratfunc_json(d + alpha));
    auto sf = t.add_check("ff-separable", "f is separable", Json{{"polynomial", io::ffpoly_json(f)}});
    auto sg = t.add_check("ff-separable", "g = f + d(d + alpha) is separable", Json{{"polynomial", io::ffpoly_json(g)}});
    auto mod = t.add_check("ff-shifted-model", "g = f + d(d + alpha)",
                           Json{{"f", io::ffpoly_json(f)}, {"g", io::ffpoly_json(g)}, {"d", io::ratfunc_json(d)},
                                {"alpha", io::ratfunc_json(alpha)}});
    auto anz = t.add_check("ff-nonzero", "alpha != 0", Json{{"value", io::ratfunc_json(alpha)}});
    t.add_claim("(u, d) and (u, d + alpha) lie on y^2 + alpha y = g(x) over K(u)", ClaimStatus::certified, {mod, sg},
                "d^2 + alpha d = d(d + alpha)");
    t.add_claim("|C(L)| >= 2 deg f = " + std::to_string(2 * n), ClaimStatus::certified, {sf, mod, anz},
                "the roots of f are distinct and d != d + alpha");
    t.add_claim("Gal(L_f/K) = M24 for the supplied f", ClaimStatus::cited_unverified, {},
                "citation: Conway, Hulpke, McKay");
    return detail::finish(std::move(t));
}

}  // namespace curvecert::forge
