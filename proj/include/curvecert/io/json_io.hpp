#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "curvecert/elliptic/certificates.hpp"
#include "curvecert/funcfield/quotient_ring.hpp"
#include "curvecert/hyperelliptic/certificates.hpp"

namespace curvecert::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "curvecert-report/1";

// ---- scalars -------------------------------------------------------------

inline Json rational_json(const Rational& r) { return r.get_str(); }
inline Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}
inline Json integer_json(const Integer& n) { return n.get_str(); }
inline Integer integer_from(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    Integer n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer " + j.dump());
    return n;
}

inline Json qpoly_json(const Polynomial<RationalField>& f) {
    Json a = Json::array();
    for (const auto& c : f.coefficients()) a.push_back(rational_json(c));
    return a;
}
inline Polynomial<RationalField> qpoly_from(const Json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from(e));
    return Polynomial<RationalField>(RationalField{}, std::move(c));
}

// ---- finite fields -------------------------------------------------------

inline Json gf_json(const GaloisField& k) {
    Json m = Json::array();
    for (auto c : k.modulus()) m.push_back(c);
    return Json{{"type", "finite-field"}, {"p", k.characteristic()}, {"modulus", m}};
}
inline GaloisField gf_from(const Json& j) {
    auto p = j.at("p").get<std::uint64_t>();
    auto m = j.at("modulus").get<std::vector<std::uint64_t>>();
    if (m.size() == 2 && m[1] == 1) return GaloisField::prime(p);
    return make_galois_field(p, m);
}
inline Json gf_elt_json(const GaloisField& k, const GaloisElement& e) { return k.index_of(e); }
inline GaloisElement gf_elt_from(const GaloisField& k, const Json& j) {
    auto i = j.get<std::uint64_t>();
    if (i >= k.order()) throw ParseError("field element index out of range");
    return k.element_at(i);
}
inline Json fqpoly_json(const FqPoly& f) {
    Json a = Json::array();
    for (const auto& c : f.coefficients()) a.push_back(gf_elt_json(f.field(), c));
    return a;
}
inline FqPoly fqpoly_from(const GaloisField& k, const Json& j) {
    std::vector<GaloisElement> c;
    for (const auto& e : j) c.push_back(gf_elt_from(k, e));
    return FqPoly(k, std::move(c));
}

// ---- Galois / irreducibility ---------------------------------------------

inline Json cycle_type_json(const CycleType& t) { return Json{{"p", t.p}, {"degrees", t.degrees}}; }
inline CycleType cycle_type_from(const Json& j) {
    return CycleType{j.at("p").get<std::uint64_t>(), j.at("degrees").get<std::vector<std::size_t>>()};
}

inline Json irreducibility_json(const IrreducibilityCertificate& c) {
    Json w = Json::array();
    for (const auto& t : c.witnesses) w.push_back(cycle_type_json(t));
    Json j{{"type", "irreducibility"},
           {"polynomial", qpoly_json(c.polynomial)},
           {"status", to_string(c.status)},
           {"method", c.method},
           {"witnesses", w}};
    if (c.root) j["root"] = integer_json(*c.root);
    return j;
}
inline IrreducibilityCertificate irreducibility_from(const Json& j) {
    IrreducibilityCertificate c;
    c.polynomial = qpoly_from(j.at("polynomial"));
    auto s = j.at("status").get<std::string>();
    c.status = s == "irreducible"  ? IrreducibilityStatus::irreducible
               : s == "reducible" ? IrreducibilityStatus::reducible
                                  : IrreducibilityStatus::inconclusive;
    c.method = j.at("method").get<std::string>();
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(cycle_type_from(w));
    if (j.contains("root")) c.root = integer_from(j.at("root"));
    return c;
}

inline Json galois_json(const GaloisCertificate& c) {
    Json ev = Json::array();
    for (const auto& t : c.evidence) ev.push_back(cycle_type_json(t));
    Json j{{"type", "galois"},
           {"polynomial", qpoly_json(c.polynomial)},
           {"claim", to_string(c.claim)},
           {"group", c.group},
           {"criterion", c.criterion},
           {"evidence", ev},
           {"excluded", c.excluded},
           {"disc_square", c.disc_square},
           {"prime_bound", c.prime_bound},
           {"seed", c.seed}};
    if (!c.citation.empty()) j["citation"] = c.citation;
    if (c.claim != GaloisClaim::cited_unverified) j["irreducibility"] = irreducibility_json(c.irreducibility);
    return j;
}
inline GaloisCertificate galois_from(const Json& j) {
    GaloisCertificate c;
    c.polynomial = qpoly_from(j.at("polynomial"));
    auto s = j.at("claim").get<std::string>();
    c.claim = s == "symmetric"              ? GaloisClaim::symmetric
              : s == "alternating-subgroup" ? GaloisClaim::alternating_subgroup
                                            : GaloisClaim::cited_unverified;
    c.group = j.at("group").get<std::string>();
    c.criterion = j.at("criterion").get<std::string>();
    for (const auto& t : j.at("evidence")) c.evidence.push_back(cycle_type_from(t));
    c.excluded = j.at("excluded").get<std::vector<std::string>>();
    c.disc_square = j.at("disc_square").get<bool>();
    c.prime_bound = j.at("prime_bound").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("citation")) c.citation = j.at("citation").get<std::string>();
    if (j.contains("irreducibility")) c.irreducibility = irreducibility_from(j.at("irreducibility"));
    return c;
}

// ---- number fields -------------------------------------------------------

inline Json nf_json(const NumberField& k) {
    return Json{{"type", "number-field"},
                {"minpoly", qpoly_json(k.minpoly())},
                {"disc", integer_json(k.disc())},
                {"irreducibility", irreducibility_json(k.irreducibility())}};
}
/// Rebuilds the field, re-verifying the stored irreducibility certificate.
inline NumberField nf_from(const Json& j) {
    if (j.at("type") != "number-field") throw ParseError("expected a number field");
    auto k = NumberField::create(qpoly_from(j.at("minpoly")), irreducibility_from(j.at("irreducibility")));
    if (j.contains("disc") && integer_from(j.at("disc")) != k.disc()) throw ParseError("stored discriminant is wrong");
    return k;
}
inline Json nf_elt_json(const NFElement& e) {
    Json a = Json::array();
    for (const auto& c : e.coefficients()) a.push_back(rational_json(c));
    return a;
}
inline NFElement nf_elt_from(const NumberField& k, const Json& j) {
    if (!j.is_array()) return k.from_rational(rational_from(j));
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from(e));
    return k.element(std::move(c));
}
inline Json nfpoly_json(const Polynomial<NumberField>& f) {
    Json a = Json::array();
    for (const auto& c : f.coefficients()) a.push_back(nf_elt_json(c));
    return a;
}
inline Polynomial<NumberField> nfpoly_from(const NumberField& k, const Json& j) {
    std::vector<NFElement> c;
    for (const auto& e : j) c.push_back(nf_elt_from(k, e));
    return Polynomial<NumberField>(k, std::move(c));
}
inline Json prime_json(const UnramifiedPrime& p) { return Json{{"p", p.p()}, {"h_coeffs", p.h_residues()}}; }
inline UnramifiedPrime prime_from(const NumberField& k, const Json& j) {
    return UnramifiedPrime::create(k, j.at("p").get<std::uint64_t>(), j.at("h_coeffs").get<std::vector<std::uint64_t>>());
}

// ---- elliptic ------------------------------------------------------------

inline Json ec_json(const NFCurve& e) {
    return Json{{"type", "short-weierstrass"}, {"a", nf_elt_json(e.a())}, {"b", nf_elt_json(e.b())},
                {"discriminant", nf_elt_json(e.discriminant())}};
}
inline NFCurve ec_from(const NumberField& k, const Json& j) {
    return NFCurve(k, nf_elt_from(k, j.at("a")), nf_elt_from(k, j.at("b")));
}
inline Json ec_point_json(const NFPoint& p) {
    if (p.infinity) return "infinity";
    return Json{{"x", nf_elt_json(p.x)}, {"y", nf_elt_json(p.y)}};
}
inline NFPoint ec_point_from(const NumberField& k, const Json& j) {
    if (j.is_string() && j == "infinity") return NFPoint::at_infinity();
    return NFPoint::affine(nf_elt_from(k, j.at("x")), nf_elt_from(k, j.at("y")));
}

inline Json einf_json(const EInfOrderCert& c) {
    Json red = Json::array();
    for (const auto& r : c.reductions)
        red.push_back(Json{{"prime", prime_json(r.prime)}, {"group_order", r.group_order}, {"point_order", r.point_order}});
    Json j{{"type", "elliptic-infinite-order"},
           {"method", c.method},
           {"field", nf_json(c.curve.field())},
           {"curve", ec_json(c.curve)},
           {"point", ec_point_json(c.point)},
           {"reductions", red}};
    if (c.method == "lutz-nagell") {
        j["y_squared"] = integer_json(c.y_squared);
        j["disc_term"] = integer_json(c.disc_term);
        j["remainder"] = integer_json(c.remainder);
    }
    j["transcript"] = c.transcript;
    return j;
}
inline EInfOrderCert einf_from(const Json& j) {
    NumberField k = nf_from(j.at("field"));
    EInfOrderCert c{j.at("method").get<std::string>(), ec_from(k, j.at("curve")), ec_point_from(k, j.at("point")),
                    {}, 0, 0, 0, {}};
    for (const auto& r : j.at("reductions"))
        c.reductions.push_back({prime_from(k, r.at("prime")), r.at("group_order").get<std::uint64_t>(),
                                r.at("point_order").get<std::uint64_t>()});
    if (j.contains("y_squared")) {
        c.y_squared = integer_from(j.at("y_squared"));
        c.disc_term = integer_from(j.at("disc_term"));
        c.remainder = integer_from(j.at("remainder"));
    }
    if (j.contains("transcript")) c.transcript = j.at("transcript").get<std::vector<std::string>>();
    return c;
}

// ---- hyperelliptic -------------------------------------------------------

inline Json hc_json(const NFHypCurve& c) {
    return Json{{"type", "hyperelliptic"}, {"h", nfpoly_json(c.h())}, {"g", nfpoly_json(c.g())}, {"genus", c.genus()}};
}
inline NFHypCurve hc_from(const NumberField& k, const Json& j) {
    return NFHypCurve(k, nfpoly_from(k, j.at("h")), nfpoly_from(k, j.at("g")));
}
inline Json mumford_json(const MumfordDivisor<GaloisField>& d) {
    return Json{{"u_coeffs", fqpoly_json(d.u)}, {"v_coeffs", fqpoly_json(d.v)}};
}
inline MumfordDivisor<GaloisField> mumford_from(const GaloisField& k, const Json& j) {
    return {fqpoly_from(k, j.at("u_coeffs")), fqpoly_from(k, j.at("v_coeffs"))};
}

inline Json hinf_json(const HInfOrderCert& c) {
    return Json{{"type", "jacobian-infinite-order"},
                {"method", c.method},
                {"field", nf_json(c.curve.field())},
                {"curve", hc_json(c.curve)},
                {"point", Json{{"x", nf_elt_json(c.x)}, {"y", nf_elt_json(c.y)}}},
                {"prime", prime_json(c.prime)},
                {"residue_field", gf_json(c.prime.residue_field())},
                {"reduced_divisor", mumford_json(c.reduced)},
                {"reduced_order", 2},
                {"transcript", c.transcript}};
}
inline HInfOrderCert hinf_from(const Json& j) {
    NumberField k = nf_from(j.at("field"));
    auto pr = prime_from(k, j.at("prime"));
    return HInfOrderCert{j.at("method").get<std::string>(),
                         hc_from(k, j.at("curve")),
                         nf_elt_from(k, j.at("point").at("x")),
                         nf_elt_from(k, j.at("point").at("y")),
                         pr,
                         mumford_from(pr.residue_field(), j.at("reduced_divisor")),
                         j.value("transcript", std::vector<std::string>{})};
}

inline Json hrank_json(const HRankCert& c) {
    Json pts = Json::array();
    for (const auto& [x, y] : c.points) pts.push_back(Json{{"x", nf_elt_json(x)}, {"y", nf_elt_json(y)}});
    return Json{{"type", "jacobian-rank"},
                {"method", "coleman-count"},
                {"field", nf_json(c.curve.field())},
                {"curve", hc_json(c.curve)},
                {"points", pts},
                {"include_infinity", c.include_infinity},
                {"prime", prime_json(c.prime)},
                {"residue_points", c.residue_points},
                {"point_count", c.point_count},
                {"rank_at_least", c.rank_bound},
                {"transcript", c.transcript}};
}
inline HRankCert hrank_from(const Json& j) {
    NumberField k = nf_from(j.at("field"));
    std::vector<std::pair<NFElement, NFElement>> pts;
    for (const auto& p : j.at("points")) pts.emplace_back(nf_elt_from(k, p.at("x")), nf_elt_from(k, p.at("y")));
    return HRankCert{hc_from(k, j.at("curve")),
                     std::move(pts),
                     j.at("include_infinity").get<bool>(),
                     prime_from(k, j.at("prime")),
                     j.at("residue_points").get<std::uint64_t>(),
                     j.at("point_count").get<std::uint64_t>(),
                     j.at("rank_at_least").get<std::size_t>(),
                     j.value("transcript", std::vector<std::string>{})};
}

// ---- function fields -----------------------------------------------------

inline Json ratfunc_json(const RatFunc& r) {
    return Json{{"num_coeffs", fqpoly_json(r.numerator())}, {"den_coeffs", fqpoly_json(r.denominator())}};
}
inline RatFunc ratfunc_from(const RationalFunctionField& k, const Json& j) {
    return k.fraction(fqpoly_from(k.base(), j.at("num_coeffs")), fqpoly_from(k.base(), j.at("den_coeffs")));
}
inline Json ffpoly_json(const FFPoly& f) {
    Json a = Json::array();
    for (const auto& c : f.coefficients()) a.push_back(ratfunc_json(c));
    return a;
}
inline FFPoly ffpoly_from(const RationalFunctionField& k, const Json& j) {
    std::vector<RatFunc> c;
    for (const auto& e : j) c.push_back(ratfunc_from(k, e));
    return FFPoly(k, std::move(c));
}
inline Json fffield_json(const RationalFunctionField& k) {
    return Json{{"type", "rational-function-field"}, {"base", gf_json(k.base())}};
}
inline RationalFunctionField fffield_from(const Json& j) {
    if (j.at("type") != "rational-function-field") throw ParseError("expected a rational function field");
    return RationalFunctionField(gf_from(j.at("base")));
}

// ---- certificate variant -------------------------------------------------

using Certificate = std::variant<EInfOrderCert, HInfOrderCert, HRankCert, GaloisCertificate, IrreducibilityCertificate>;

inline Json certificate_json(const Certificate& c) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EInfOrderCert>) return einf_json(x);
            else if constexpr (std::is_same_v<T, HInfOrderCert>) return hinf_json(x);
            else if constexpr (std::is_same_v<T, HRankCert>) return hrank_json(x);
            else if constexpr (std::is_same_v<T, GaloisCertificate>) return galois_json(x);
            else return irreducibility_json(x);
        },
        c);
}

inline Certificate certificate_from(const Json& j) {
    auto t = j.at("type").get<std::string>();
    if (t == "elliptic-infinite-order") return einf_from(j);
    if (t == "jacobian-infinite-order") return hinf_from(j);
    if (t == "jacobian-rank") return hrank_from(j);
    if (t == "galois") return galois_from(j);
    if (t == "irreducibility") return irreducibility_from(j);
    throw ParseError("unknown certificate type " + t);
}

inline bool verify_certificate(const Certificate& c) {
    return std::visit([](const auto& x) { return verify(x); }, c);
}

}  // namespace curvecert::io
