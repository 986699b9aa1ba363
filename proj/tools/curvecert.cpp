// curvecert: forge, verify and inspect curve certificates.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "curvecert/forge/constructions.hpp"
#include "curvecert/io/parse.hpp"

using namespace curvecert;
using forge::Json;

namespace {

struct Global {
    std::uint64_t seed = 0;
    std::uint64_t prime_bound = 200;
    std::string out;
    bool timing = false;
};

void write_output(const Global& g, const Json& report) {
    std::string text = report.dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path target(g.out);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw Error("cannot write " + tmp.string());
        f << text;
    }
    std::filesystem::rename(tmp, target);
}

Json report(const std::string& command, const Json& inputs, const Global& g) {
    return Json{{"schema", io::kSchema},
                {"command", command},
                {"inputs", inputs},
                {"seed", g.seed},
                {"prime_bound", g.prime_bound},
                {"version", forge::kToolkitVersion}};
}

NumberField parse_field(const std::string& text, std::uint64_t bound) {
    return NumberField::certify(io::parse_qpoly(text), std::max<std::uint64_t>(bound, 1000));
}

GaloisField parse_prime_power(std::uint64_t q) {
    auto f = factor_u64(q);
    if (f.size() != 1) throw DomainError(std::to_string(q) + " is not a prime power");
    return make_galois_field(f[0].first, f[0].second);
}

Rational parse_rational_param(const std::string& text, const std::string& name) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw DomainError(name + " must be rational (got " + text + ")");
    }
}

Integer parse_integer_param(const std::string& text, const std::string& name) {
    Rational r = parse_rational_param(text, name);
    if (r.get_den() != 1) throw DomainError(name + " must be an integer (got " + text + ")");
    return r.get_num();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int emit_instance(const std::string& command, Json inputs, const forge::TheoremInstance& t, const Global& g,
                  std::chrono::steady_clock::time_point start) {
    Json r = report(command, std::move(inputs), g);
    r["instance"] = forge::to_json(t);
    if (g.timing)
        r["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    write_output(g, r);
    for (const auto& u : t.unresolved()) std::cerr << "unresolved: " << u << "\n";
    return t.exit_code();
}

// Curve over F_q from a rational model, reduced coefficientwise.
std::pair<FqPoly, FqPoly> reduce_curve(const std::string& text, const GaloisField& k) {
    auto [h, g] = io::parse_curve(text);
    return {reduce_mod_p(h, k), reduce_mod_p(g, k)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificates for points of infinite order on elliptic and hyperelliptic curves"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--seed", g.seed, "seed for every randomized step")->default_val(0);
    app.add_option("--prime-bound", g.prime_bound, "largest prime scanned by searches")->default_val(200);
    app.add_option("--out", g.out, "write the report here instead of stdout");
    app.add_flag("--timing", g.timing, "add wall-clock timing to the report (breaks byte-identity)");

    int code = 0;
    auto start = std::chrono::steady_clock::now();
    auto opts = [&] {
        forge::ForgeOptions o;
        o.seed = g.seed;
        o.prime_bound = g.prime_bound;
        return o;
    };

    // ---- forge ----
    auto* fg = app.add_subcommand("forge", "build a theorem instance");
    fg->require_subcommand(1);

    std::string d_s, a_s, b_s, c_s;
    auto* orig = fg->add_subcommand("orig", "y^2 = x^3 + x + d^2 over Q");
    orig->add_option("--d", d_s, "nonzero integer")->required();
    orig->callback([&] {
        Integer d = parse_integer_param(d_s, "d");
        code = emit_instance("forge orig", Json{{"d", d_s}}, forge::forge_orig(d, opts()), g, start);
    });

    auto* orig2 = fg->add_subcommand("orig2", "y^2 = (x-a)(x-b)(x-c) + d^2 over Q");
    orig2->add_option("--a", a_s)->required();
    orig2->add_option("--b", b_s)->required();
    orig2->add_option("--c", c_s)->required();
    orig2->add_option("--d", d_s)->required();
    orig2->callback([&] {
        auto t = forge::forge_orig2(parse_integer_param(a_s, "a"), parse_integer_param(b_s, "b"),
                                    parse_integer_param(c_s, "c"), parse_integer_param(d_s, "d"), opts());
        code = emit_instance("forge orig2", Json{{"a", a_s}, {"b", b_s}, {"c", c_s}, {"d", d_s}}, t, g, start);
    });

    std::string field_s = "x", d1_s, beta_s, p_prime_s, q_prime_s, explicit_d;
    auto add_nf_opts = [&](CLI::App* sc) {
        sc->add_option("--field", field_s, "minimal polynomial of K in x (default x, i.e. Q)");
        sc->add_option("--d1", d1_s, "element of K in t with Q(d1) = K");
        sc->add_option("--p-prime", p_prime_s, "first prime as p:h0,h1,... (skips the search)");
        sc->add_option("--q-prime", q_prime_s, "second prime as q:h0,h1,...");
        sc->add_option("--d", explicit_d, "explicit d (needs both primes)");
    };
    auto supplied = [&](const NumberField& k) -> std::optional<forge::SuppliedPrimes> {
        if (p_prime_s.empty() != q_prime_s.empty()) throw DomainError("give both --p-prime and --q-prime or neither");
        if (p_prime_s.empty()) return std::nullopt;
        return forge::SuppliedPrimes{io::parse_prime(k, p_prime_s), io::parse_prime(k, q_prime_s)};
    };
    auto nf_inputs = [&] {
        Json j{{"field", field_s}, {"d1", d1_s}};
        if (!beta_s.empty()) j["beta"] = beta_s;
        if (!p_prime_s.empty()) j["p_prime"] = p_prime_s;
        if (!q_prime_s.empty()) j["q_prime"] = q_prime_s;
        if (!explicit_d.empty()) j["d"] = explicit_d;
        return j;
    };

    auto* r1 = fg->add_subcommand("nf-rank1", "y^2 = x^3 + x + d^2 over a number field");
    add_nf_opts(r1);
    r1->callback([&] {
        NumberField k = parse_field(field_s, g.prime_bound);
        std::optional<NFElement> d;
        if (!explicit_d.empty()) d = io::parse_nf_element(k, explicit_d);
        if (d1_s.empty() && !d) throw DomainError("--d1 is required");
        NFElement d1 = d1_s.empty() ? *d : io::parse_nf_element(k, d1_s);
        code = emit_instance("forge nf-rank1", nf_inputs(), forge::forge_nf_rank1(k, d1, opts(), supplied(k), d), g, start);
    });

    auto* r2 = fg->add_subcommand("nf-rank2", "y^2 = x^3 - beta^2 x + d^2 over a number field");
    add_nf_opts(r2);
    r2->add_option("--beta", beta_s, "element of K in t with Q(beta) = K")->required();
    r2->callback([&] {
        NumberField k = parse_field(field_s, g.prime_bound);
        std::optional<NFElement> d;
        if (!explicit_d.empty()) d = io::parse_nf_element(k, explicit_d);
        if (d1_s.empty() && !d) throw DomainError("--d1 is required");
        NFElement d1 = d1_s.empty() ? *d : io::parse_nf_element(k, d1_s);
        auto t = forge::forge_nf_rank2(k, d1, io::parse_nf_element(k, beta_s), opts(), supplied(k), d);
        code = emit_instance("forge nf-rank2", nf_inputs(), t, g, start);
    });

    std::string prime_s, reps_s;
    auto* rc = fg->add_subcommand("residue-cover", "y^2 = (x-a_1)...(x-a_q) + d^2 over K");
    rc->add_option("--field", field_s, "minimal polynomial of K in x (default x, i.e. Q)");
    rc->add_option("--prime", prime_s, "prime as p:h0,h1 with residue degree 1, p >= 5")->required();
    rc->add_option("--d", d_s, "nonzero element of the prime")->required();
    rc->add_option("--reps", reps_s, "comma-separated residue representatives (default 0..p-1)");
    rc->callback([&] {
        NumberField k = parse_field(field_s, g.prime_bound);
        std::optional<std::vector<NFElement>> reps;
        if (!reps_s.empty()) {
            reps.emplace();
            for (const auto& r : split_list(reps_s)) reps->push_back(io::parse_nf_element(k, r));
        }
        auto t = forge::forge_residue_cover(k, io::parse_prime(k, prime_s), io::parse_nf_element(k, d_s), reps, opts());
        Json in{{"field", field_s}, {"prime", prime_s}, {"d", d_s}};
        if (!reps_s.empty()) in["reps"] = reps_s;
        code = emit_instance("forge residue-cover", in, t, g, start);
    });

    std::size_t n = 0, s = 0;
    std::string poly_s, cite_group, citation = "literature identification", mg_file;
    auto* tri = fg->add_subcommand("trinomial", "y^2 = f(x) + d^2 with f = x^n + a x^s + b (or --poly)");
    tri->add_option("--n", n);
    tri->add_option("--s", s);
    tri->add_option("--a", a_s);
    tri->add_option("--b", b_s);
    tri->add_option("--poly", poly_s, "any monic integral f of odd degree >= 5");
    tri->add_option("--d", d_s, "nonzero rational")->required();
    tri->add_option("--cite-group", cite_group, "Galois group taken from the literature (no proof weight)");
    tri->add_option("--citation", citation, "citation for --cite-group");
    tri->add_option("--mg-table", mg_file, "extra m(G) values as {\"entries\": {...}} (treated as external)");
    tri->callback([&] {
        Polynomial<RationalField> f(RationalField{});
        Json in{{"d", d_s}};
        if (!poly_s.empty()) {
            f = io::parse_qpoly(poly_s);
            in["poly"] = poly_s;
        } else {
            if (n == 0 || s == 0 || a_s.empty() || b_s.empty()) throw DomainError("give --poly or all of --n --s --a --b");
            f = forge::trinomial(n, s, parse_integer_param(a_s, "a"), parse_integer_param(b_s, "b"));
            in["n"] = n;
            in["s"] = s;
            in["a"] = a_s;
            in["b"] = b_s;
        }
        MGTable table = MGTable::builtin();
        if (!mg_file.empty()) {
            table.merge_file(mg_file, true);
            in["mg_table"] = mg_file;
        }
        std::optional<forge::CitedGroup> cited;
        if (!cite_group.empty()) {
            cited = forge::CitedGroup{cite_group, citation};
            in["cite_group"] = cite_group;
            in["citation"] = citation;
        }
        auto t = forge::forge_trinomial_hyp(f, parse_rational_param(d_s, "d"), opts(), cited, table);
        code = emit_instance("forge trinomial", in, t, g, start);
    });

    auto* sh = fg->add_subcommand("shanks", "Y^2 = X^3 - aX^2 - (a+3)X - 1 + d^2 over the simplest cubic field");
    sh->add_option("--a", a_s, "positive integer")->required();
    sh->add_option("--d", d_s, "nonzero rational")->required();
    sh->callback([&] {
        auto t = forge::forge_shanks(parse_integer_param(a_s, "a"), parse_rational_param(d_s, "d"), opts());
        code = emit_instance("forge shanks", Json{{"a", a_s}, {"d", d_s}}, t, g, start);
    });

    std::uint64_t q = 0;
    std::size_t m = 0;
    std::string alpha_s, f_s;
    auto* pgl = fg->add_subcommand("pgl", "y^2 = U^N + U + t + d^2 over F_q(t)");
    pgl->add_option("--q", q, "odd prime power")->required();
    pgl->add_option("--m", m, ">= 2")->required();
    pgl->add_option("--d", d_s, "element of F_q(t), e.g. t or (t+1)/(t^2)")->default_val("t");
    pgl->callback([&] {
        GaloisField base = parse_prime_power(q);
        RationalFunctionField k(base);
        auto t = forge::forge_pgl(base, m, io::parse_ratfunc(k, d_s), opts());
        code = emit_instance("forge pgl", Json{{"q", q}, {"m", m}, {"d", d_s}}, t, g, start);
    });

    auto* m24 = fg->add_subcommand("m24", "y^2 + alpha y = f + d(d + alpha) over F_2(t)");
    m24->add_option("--f", f_s, "monic separable polynomial in U over F_2[t]")->required();
    m24->add_option("--alpha", alpha_s, "nonzero element of F_2(t)")->default_val("1");
    m24->add_option("--d", d_s, "element of F_2(t)")->default_val("t");
    m24->callback([&] {
        RationalFunctionField k(GaloisField::prime(2));
        auto t = forge::forge_m24(io::parse_ffpoly(k, f_s), io::parse_ratfunc(k, alpha_s), io::parse_ratfunc(k, d_s), opts());
        code = emit_instance("forge m24", Json{{"f", f_s}, {"alpha", alpha_s}, {"d", d_s}}, t, g, start);
    });

    // ---- verify ----
    std::string file;
    auto* ver = app.add_subcommand("verify", "re-check a report produced by forge");
    ver->add_option("report", file, "report file")->required()->check(CLI::ExistingFile);
    ver->callback([&] {
        std::ifstream in(file);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception& e) {
            throw ParseError(std::string("cannot parse report: ") + e.what());
        }
        const Json& inst = j.contains("instance") ? j.at("instance") : j;
        auto r = forge::verify_report(inst);
        for (const auto& f : r.failures) std::cerr << "FAILED " << f << "\n";
        for (const auto& u : r.unresolved) std::cerr << "warning: unresolved: " << u << "\n";
        std::cout << (r.ok ? "verified" : "verification failed") << ": " << inst.at("certificates").size()
                  << " certificates, " << inst.at("checks").size() << " checks, " << r.unresolved.size()
                  << " unresolved claims\n";
        code = r.ok ? 0 : 1;
    });

    // ---- count / jacobian ----
    std::string curve_s;
    std::uint64_t p = 0;
    std::size_t k_ext = 1;
    auto* cnt = app.add_subcommand("count", "count points over F_q, q = p^k");
    cnt->add_option("--curve", curve_s, "y2=x3+x, y^2=x^5+x+1, y^2+(x)y=x^5+1, ...")->required();
    cnt->add_option("--p", p)->required();
    cnt->add_option("--k", k_ext)->default_val(1);
    cnt->callback([&] {
        GaloisField f = make_galois_field(p, k_ext);
        auto [h, gp] = reduce_curve(curve_s, f);
        Json res{{"field", f.description()}, {"q", f.order()}};
        if (h.is_zero() && gp.deg() == 3 && gp.is_monic() && gp.coeff(2).is_zero() && f.characteristic() != 2) {
            EllipticCurve<GaloisField> e(f, gp.coeff(1), gp.coeff(0));
            res["kind"] = "elliptic";
            res["points"] = ec_count_points(e);
        } else {
            HyperellipticCurve<GaloisField> c(f, h, gp);
            res["kind"] = "hyperelliptic";
            res["genus"] = c.genus();
            res["points"] = hc_count_points(c);
        }
        Json r = report("count", Json{{"curve", curve_s}, {"p", p}, {"k", k_ext}}, g);
        r["result"] = res;
        write_output(g, r);
    });

    auto* jac = app.add_subcommand("jacobian", "L-polynomial and #J(F_q) of a hyperelliptic curve");
    jac->add_option("--curve", curve_s)->required();
    jac->add_option("--p", p)->required();
    jac->add_option("--k", k_ext)->default_val(1);
    jac->callback([&] {
        GaloisField f = make_galois_field(p, k_ext);
        auto [h, gp] = reduce_curve(curve_s, f);
        HyperellipticCurve<GaloisField> c(f, h, gp);
        auto L = hc_lpoly(c);
        Json coeffs = Json::array();
        for (const auto& a : L.coeffs) coeffs.push_back(a.get_str());
        Json res{{"field", f.description()},
                 {"genus", L.genus},
                 {"lpoly", coeffs},
                 {"counts", L.counts},
                 {"jacobian_order", L.at_one().get_str()},
                 {"extra_count_checked", L.extra_count_checked}};
        Json r = report("jacobian", Json{{"curve", curve_s}, {"p", p}, {"k", k_ext}}, g);
        r["result"] = res;
        write_output(g, r);
    });

    // ---- galois ----
    std::uint64_t gbound = 200;
    auto* gal = app.add_subcommand("galois", "certify Gal(f) = S_n or Gal(f) <= A_n");
    gal->add_option("--poly", poly_s, "monic integral polynomial in x")->required();
    gal->add_option("--bound", gbound, "largest prime sampled")->default_val(200);
    gal->callback([&] {
        auto f = io::parse_qpoly(poly_s);
        Json r = report("galois", Json{{"poly", poly_s}, {"bound", gbound}}, g);
        auto sn = ga_certify_Sn(f, gbound, g.seed);
        if (auto* c = std::get_if<GaloisCertificate>(&sn)) {
            r["result"] = io::galois_json(*c);
        } else {
            auto an = ga_certify_alternating_subgroup(f, gbound);
            if (auto* c2 = std::get_if<GaloisCertificate>(&an)) {
                r["result"] = io::galois_json(*c2);
            } else {
                r["result"] = Json{{"inconclusive", std::get<Inconclusive>(sn).reason}};
                code = 2;
            }
        }
        write_output(g, r);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc2 = app.exit(e);
        return rc2 == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
