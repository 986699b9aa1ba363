#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curvecert/galois/mg_table.hpp"
#include "curvecert/io/json_io.hpp"

namespace curvecert::forge {

using io::Certificate;
using io::Json;

inline constexpr const char* kToolkitVersion = "curvecert 1.0.0";

enum class ClaimStatus { certified, conditional, cited_unverified, unresolved };

inline std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::certified: return "certified";
        case ClaimStatus::conditional: return "conditional";
        case ClaimStatus::cited_unverified: return "cited-unverified";
        default: return "unresolved";
    }
}

inline ClaimStatus claim_status_from(const std::string& s) {
    if (s == "certified") return ClaimStatus::certified;
    if (s == "conditional") return ClaimStatus::conditional;
    if (s == "cited-unverified") return ClaimStatus::cited_unverified;
    if (s == "unresolved") return ClaimStatus::unresolved;
    throw ParseError("unknown claim status " + s);
}

/// A statement about the instance. `basis` names the checks and certificates it
/// rests on; `argument` is the deduction applied to them.
struct Claim {
    std::string id;
    std::string statement;
    ClaimStatus status = ClaimStatus::unresolved;
    std::vector<std::string> basis;
    std::string argument;
};

/// An exact re-runnable check; `data` holds everything needed to repeat it.
struct Check {
    std::string id;
    std::string kind;
    std::string description;
    Json data;
};

struct TheoremInstance {
    std::string theorem;
    Json parameters = Json::object();
    Json field;
    Json curve;
    Json points = Json::array();
    std::vector<Certificate> certificates;
    std::vector<Check> checks;
    std::vector<Claim> claims;
    std::uint64_t seed = 0;
    std::uint64_t prime_bound = 0;

    std::string add_certificate(Certificate c) {
        certificates.push_back(std::move(c));
        return "cert-" + std::to_string(certificates.size());
    }
    std::string add_check(std::string kind, std::string description, Json data) {
        std::string id = "check-" + std::to_string(checks.size() + 1);
        checks.push_back({id, std::move(kind), std::move(description), std::move(data)});
        return id;
    }
    void add_claim(std::string statement, ClaimStatus status, std::vector<std::string> basis, std::string argument = {}) {
        claims.push_back({"claim-" + std::to_string(claims.size() + 1), std::move(statement), status, std::move(basis),
                          std::move(argument)});
    }
    void add_point(const std::string& label, Json x, Json y) {
        points.push_back(Json{{"label", label}, {"x", std::move(x)}, {"y", std::move(y)}});
    }

    /// Statements of every claim that is not certified.
    std::vector<std::string> unresolved() const {
        std::vector<std::string> out;
        for (const auto& c : claims)
            if (c.status != ClaimStatus::certified) out.push_back(c.statement + " [" + to_string(c.status) + "]");
        return out;
    }
    int exit_code() const { return unresolved().empty() ? 0 : 2; }
};

inline Json to_json(const TheoremInstance& t) {
    Json certs = Json::array();
    for (std::size_t i = 0; i < t.certificates.size(); ++i) {
        Json c = io::certificate_json(t.certificates[i]);
        Json withid{{"id", "cert-" + std::to_string(i + 1)}};
        withid.update(c);
        certs.push_back(withid);
    }
    Json checks = Json::array();
    for (const auto& c : t.checks)
        checks.push_back(Json{{"id", c.id}, {"kind", c.kind}, {"description", c.description}, {"data", c.data}});
    Json claims = Json::array();
    for (const auto& c : t.claims) {
        Json j{{"id", c.id}, {"statement", c.statement}, {"status", to_string(c.status)}, {"basis", c.basis}};
        if (!c.argument.empty()) j["argument"] = c.argument;
        claims.push_back(j);
    }
    return Json{{"theorem", t.theorem},
                {"parameters", t.parameters},
                {"field", t.field},
                {"curve", t.curve},
                {"points", t.points},
                {"certificates", certs},
                {"checks", checks},
                {"claims", claims},
                {"unresolved", t.unresolved()},
                {"toolkit_version", kToolkitVersion},
                {"seed", t.seed},
                {"prime_bound", t.prime_bound}};
}

// ---- verification --------------------------------------------------------

namespace detail {

inline NFElement eval_at(const Polynomial<RationalField>& f, const NFElement& a, const NumberField& k) {
    NFElement acc = k.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * a + k.from_rational(f.coeff(i));
    return acc;
}

/// f(x + s)
inline Polynomial<RationalField> translate(const Polynomial<RationalField>& f, const Rational& s) {
    using P = Polynomial<RationalField>;
    P lin = P::x(RationalField{}) + P::constant(RationalField{}, s);
    P acc(RationalField{});
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * lin + P::constant(RationalField{}, f.coeff(i));
    return acc;
}

// Objects a report's checks refer to, rebuilt from its JSON.
struct Context {
    std::optional<NumberField> K;
    std::optional<NFCurve> E;
    std::optional<NFHypCurve> C;
    std::optional<RationalFunctionField> F;
    std::optional<FFQuotientRing> ring;
    std::optional<FFPoly> model_g;
    std::optional<RatFunc> model_alpha;
    std::map<std::string, NFPoint> epoints;
    std::map<std::string, std::pair<NFElement, NFElement>> hpoints;
    std::map<std::string, RatFunc> ffpoints;

    NFElement elt(const Json& j) const { return io::nf_elt_from(*K, j); }
    UnramifiedPrime prime(const Json& j) const { return io::prime_from(*K, j); }

    NFPoint epoint(const std::string& label) const {
        if (label == "infinity") return NFPoint::at_infinity();
        bool neg = !label.empty() && label[0] == '-';
        auto it = epoints.find(neg ? label.substr(1) : label);
        if (it == epoints.end()) throw ParseError("unknown point " + label);
        return neg ? E->neg(it->second) : it->second;
    }
};

inline Context build_context(const Json& report) {
    Context ctx;
    const Json& field = report.at("field");
    const Json& curve = report.at("curve");
    auto ftype = field.at("type").get<std::string>();
    if (ftype == "number-field") {
        ctx.K = io::nf_from(field);
        auto ctype = curve.at("type").get<std::string>();
        if (ctype == "short-weierstrass") {
            ctx.E = io::ec_from(*ctx.K, curve);
            for (const auto& p : report.at("points")) {
                NFPoint pt = NFPoint::affine(ctx.elt(p.at("x")), ctx.elt(p.at("y")));
                if (!ctx.E->on_curve(pt)) throw DomainError("point " + p.at("label").get<std::string>() + " is not on the curve");
                ctx.epoints[p.at("label").get<std::string>()] = pt;
            }
        } else if (ctype == "hyperelliptic") {
            ctx.C = io::hc_from(*ctx.K, curve);
            for (const auto& p : report.at("points")) {
                auto x = ctx.elt(p.at("x")), y = ctx.elt(p.at("y"));
                if (!ctx.C->on_curve(x, y)) throw DomainError("point " + p.at("label").get<std::string>() + " is not on the curve");
                ctx.hpoints[p.at("label").get<std::string>()] = {x, y};
            }
        } else {
            throw ParseError("unknown curve type " + ctype);
        }
    } else if (ftype == "rational-function-field") {
        ctx.F = io::fffield_from(field);
        if (curve.at("type") != "hyperelliptic-model") throw ParseError("expected a hyperelliptic model");
        ctx.ring.emplace(*ctx.F, io::ffpoly_from(*ctx.F, curve.at("root_of")));
        ctx.model_g = io::ffpoly_from(*ctx.F, curve.at("g"));
        ctx.model_alpha = io::ratfunc_from(*ctx.F, curve.at("alpha"));
        HyperellipticModel<RationalFunctionField> model(*ctx.F, FFPoly::constant(*ctx.F, *ctx.model_alpha), *ctx.model_g);
        (void)model;
        for (const auto& p : report.at("points")) {
            if (p.at("x") != "u") throw ParseError("function-field points must have x = u");
            auto y = io::ratfunc_from(*ctx.F, p.at("y"));
            if (!qr_eval_point(*ctx.ring, *ctx.model_g, y, *ctx.model_alpha))
                throw DomainError("point " + p.at("label").get<std::string>() + " is not on the curve");
            ctx.ffpoints[p.at("label").get<std::string>()] = y;
        }
    } else {
        throw ParseError("unknown field type " + ftype);
    }
    return ctx;
}

inline NFPoint sum_points(const Context& ctx, const Json& labels) {
    NFPoint acc = NFPoint::at_infinity();
    for (const auto& l : labels) acc = ctx.E->add(acc, ctx.epoint(l.get<std::string>()));
    return acc;
}

/// Re-runs one check; true iff it holds.
inline bool run_check(const Context& ctx, const std::string& kind, const Json& d) {
    if (kind == "generates-field") return ctx.K->generates(ctx.elt(d.at("element")));
    if (kind == "in-prime") return ctx.prime(d.at("prime")).contains(ctx.elt(d.at("element")));
    if (kind == "not-in-prime") {
        auto pr = ctx.prime(d.at("prime"));
        auto e = ctx.elt(d.at("element"));
        return pr.is_integral(e) && !pr.contains(e);
    }
    if (kind == "integral-at") {
        auto pr = ctx.prime(d.at("prime"));
        for (const auto& e : d.at("elements"))
            if (!pr.is_integral(ctx.elt(e))) return false;
        return true;
    }
    if (kind == "residue-degree") return ctx.prime(d.at("prime")).residue_degree() == d.at("degree").get<std::size_t>();
    if (kind == "hasse-gap") {
        auto p = d.at("p").get<std::uint64_t>(), q = d.at("q").get<std::uint64_t>();
        return curvecert::detail::hasse_gap(p, q);
    }
    if (kind == "nonzero") return !ctx.elt(d.at("element")).is_zero();
    if (kind == "rational") return ctx.elt(d.at("element")).is_rational();
    if (kind == "root-of") return eval_at(io::qpoly_from(d.at("polynomial")), ctx.elt(d.at("element")), *ctx.K).is_zero();
    if (kind == "inverse-shift") {
        // to = -1/(1 + from)
        auto from = ctx.elt(d.at("from")), to = ctx.elt(d.at("to"));
        auto s = from + ctx.K->one();
        if (s.is_zero()) return false;
        return (to * s + ctx.K->one()).is_zero();
    }
    if (kind == "distinct") {
        std::vector<NFElement> es;
        for (const auto& e : d.at("elements")) es.push_back(ctx.elt(e));
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (es[i] == es[j]) return false;
        return true;
    }
    if (kind == "norm") return ctx.K->norm(ctx.elt(d.at("element"))) == io::rational_from(d.at("value"));
    if (kind == "disc-square") {
        auto f = io::qpoly_from(d.at("polynomial"));
        Integer r = io::integer_from(d.at("root"));
        return integer_discriminant(f) == r * r;
    }
    if (kind == "separable-over-Q") return poly_is_separable(io::qpoly_from(d.at("polynomial")));
    if (kind == "separable-mod-p") {
        auto f = io::qpoly_from(d.at("polynomial"));
        auto fp = reduce_mod_p(f, GaloisField::prime(d.at("p").get<std::uint64_t>()));
        return fp.deg() == f.deg() && poly_is_separable(fp);
    }
    if (kind == "no-root-mod-p") {
        auto fp = reduce_mod_p(io::qpoly_from(d.at("polynomial")), GaloisField::prime(d.at("p").get<std::uint64_t>()));
        return poly_roots(fp).empty();
    }
    if (kind == "sum-zero") return sum_points(ctx, d.at("points")).infinity;
    if (kind == "sum") {
        NFPoint s = sum_points(ctx, d.at("terms"));
        NFPoint r = ctx.epoint(d.at("result").get<std::string>());
        return s == r;
    }
    if (kind == "residue-cover") {
        auto pr = ctx.prime(d.at("prime"));
        if (pr.residue_degree() != 1) return false;
        std::set<std::uint64_t> seen;
        for (const auto& e : d.at("elements")) {
            auto a = ctx.elt(e);
            if (!pr.is_integral(a)) return false;
            if (!seen.insert(pr.residue_field().index_of(pr.reduce(a))).second) return false;
        }
        return seen.size() == pr.p();
    }
    if (kind == "reduction-equals") {
        auto pr = ctx.prime(d.at("prime"));
        auto got = pr.reduce(ctx.C->g());
        auto want = fq_poly(pr.residue_field(), d.at("expected").get<std::vector<std::uint64_t>>());
        return ctx.C->h().is_zero() && got == want;
    }
    if (kind == "mg-value") {
        auto e = MGTable::builtin().lookup(d.at("group").get<std::string>());
        return e && !e->external && e->value == d.at("value").get<int>();
    }
    if (kind == "ff-separable") return ff_separable(io::ffpoly_from(*ctx.F, d.at("polynomial")));
    if (kind == "ff-nonzero") return !io::ratfunc_from(*ctx.F, d.at("value")).is_zero();
    if (kind == "ff-shifted-model") {
        // g = f + d(d + alpha)
        auto f = io::ffpoly_from(*ctx.F, d.at("f"));
        auto g = io::ffpoly_from(*ctx.F, d.at("g"));
        auto dd = io::ratfunc_from(*ctx.F, d.at("d"));
        auto al = io::ratfunc_from(*ctx.F, d.at("alpha"));
        return g == f + FFPoly::constant(*ctx.F, dd * (dd + al)) && f == ctx.ring->modulus() && g == *ctx.model_g &&
               al == *ctx.model_alpha;
    }
    if (kind == "ff-trinomial") {
        auto f = io::ffpoly_from(*ctx.F, d.at("polynomial"));
        return f == ff_trinomial(*ctx.F, d.at("m").get<std::size_t>());
    }
    if (kind == "shifted-model") {
        // E is y^2 = f(x) + d^2 after x -> X + shift, with f a monic cubic over Q.
        auto f = io::qpoly_from(d.at("f"));
        Rational dd = io::rational_from(d.at("d"));
        Rational s = io::rational_from(d.at("shift"));
        if (f.deg() != 3 || !f.is_monic()) return false;
        auto shifted = translate(f, s) + Polynomial<RationalField>::constant(RationalField{}, dd * dd);
        return shifted.coeff(2) == 0 && ctx.E->a() == ctx.K->from_rational(shifted.coeff(1)) &&
               ctx.E->b() == ctx.K->from_rational(shifted.coeff(0));
    }
    if (kind == "hyperelliptic-model") {
        // C is y^2 = f(x) + d^2
        auto f = io::nfpoly_from(*ctx.K, d.at("f"));
        auto dd = ctx.elt(d.at("d"));
        return ctx.C->h().is_zero() && ctx.C->g() == f + Polynomial<NumberField>::constant(*ctx.K, dd * dd);
    }
    throw ParseError("unknown check kind " + kind);
}

}  // namespace detail

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> failures;
    std::vector<std::string> unresolved;
};

/// Re-checks a serialized instance: rebuilds field, curve and points (on-curve
/// tests included), verifies every certificate from its stored witnesses, re-runs
/// every check, and recomputes the unresolved list from the claims.
inline VerifyResult verify_report(const Json& report) {
    VerifyResult r;
    auto fail = [&](std::string m) { r.failures.push_back(std::move(m)); };
    detail::Context ctx;
    try {
        ctx = detail::build_context(report);
    } catch (const std::exception& e) {
        fail(std::string("construction: ") + e.what());
        return r;
    }
    std::set<std::string> passed, known;
    for (const auto& c : report.at("certificates")) {
        auto id = c.at("id").get<std::string>();
        known.insert(id);
        try {
            auto cert = io::certificate_from(c);
            if (!io::verify_certificate(cert)) {
                fail(id + ": witnesses do not re-verify");
                continue;
            }
            if (c.contains("curve") && !(c.at("curve") == report.at("curve"))) {
                fail(id + ": certificate is about a different curve");
                continue;
            }
            passed.insert(id);
        } catch (const std::exception& e) {
            fail(id + ": " + e.what());
        }
    }
    for (const auto& c : report.at("checks")) {
        auto id = c.at("id").get<std::string>();
        known.insert(id);
        try {
            if (detail::run_check(ctx, c.at("kind").get<std::string>(), c.at("data")))
                passed.insert(id);
            else
                fail(id + " (" + c.at("kind").get<std::string>() + "): does not hold");
        } catch (const std::exception& e) {
            fail(id + ": " + e.what());
        }
    }
    std::vector<std::string> unresolved;
    for (const auto& c : report.at("claims")) {
        auto status = claim_status_from(c.at("status").get<std::string>());
        for (const auto& b : c.at("basis")) {
            auto id = b.get<std::string>();
            if (!known.count(id)) fail(c.at("id").get<std::string>() + ": basis " + id + " is missing");
        }
        if (status != ClaimStatus::certified)
            unresolved.push_back(c.at("statement").get<std::string>() + " [" + to_string(status) + "]");
    }
    if (report.at("unresolved").get<std::vector<std::string>>() != unresolved) fail("unresolved list does not match the claims");
    r.unresolved = std::move(unresolved);
    r.ok = r.failures.empty();
    return r;
}

inline VerifyResult verify(const TheoremInstance& t) { return verify_report(to_json(t)); }

}  // namespace curvecert::forge
