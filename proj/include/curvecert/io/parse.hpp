#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "curvecert/funcfield/rational_function.hpp"
#include "curvecert/numberfield/prime.hpp"

namespace curvecert::io {

// Grammar (whitespace ignored):
//   poly  := '[' rat (',' rat)* ']'          coefficient list, constant first
//          | term (('+'|'-') term)*
//   term  := ['-'] [rat] ['*'] factor*       e.g. 3/2x^2, -x5, 265t, t*U^3
//   factor:= var ['^'] [digits] ['*']
//   rat   := digits ['/' digits]
//   curve := ('y^2'|'y2') ['+' (h) 'y'] '=' poly     h a parenthesised poly or a term

struct Term {
    Rational coeff;
    std::vector<unsigned> exps;
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

class TermParser {
public:
    TermParser(std::string text, std::vector<char> vars) : s_(strip(text)), vars_(std::move(vars)) {}

    std::vector<Term> parse() {
        if (s_.empty()) throw ParseError("empty polynomial");
        std::vector<Term> out;
        while (i_ < s_.size()) {
            bool neg = false;
            if (s_[i_] == '+' || s_[i_] == '-') {
                neg = s_[i_] == '-';
                ++i_;
            } else if (!out.empty()) {
                fail("expected + or -");
            }
            Term t = term();
            if (neg) t.coeff = -t.coeff;
            out.push_back(std::move(t));
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
    }

    bool digit() const { return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

    Integer number() {
        std::size_t start = i_;
        while (digit()) ++i_;
        return Integer(s_.substr(start, i_ - start));
    }

    int var_index() const {
        if (i_ >= s_.size()) return -1;
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (s_[i_] == vars_[v]) return static_cast<int>(v);
        return -1;
    }

    Term term() {
        Term t{Rational(1), std::vector<unsigned>(vars_.size(), 0)};
        bool any = false;
        if (digit()) {
            Integer num = number();
            Integer den = 1;
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                if (!digit()) fail("expected a denominator");
                den = number();
                if (den == 0) fail("zero denominator");
            }
            t.coeff = Rational(num, den);
            t.coeff.canonicalize();
            any = true;
            if (i_ < s_.size() && s_[i_] == '*') ++i_;
        }
        while (true) {
            int v = var_index();
            if (v < 0) break;
            ++i_;
            if (i_ < s_.size() && s_[i_] == '^') {
                ++i_;
                if (!digit()) fail("expected an exponent");
            }
            unsigned e = digit() ? static_cast<unsigned>(number().get_ui()) : 1;
            t.exps[v] += e;
            any = true;
            if (i_ < s_.size() && s_[i_] == '*') ++i_;
        }
        if (!any) fail("expected a term");
        return t;
    }

    std::string s_;
    std::vector<char> vars_;
    std::size_t i_ = 0;
};

inline std::vector<Rational> dense(const std::vector<Term>& terms) {
    std::vector<Rational> c;
    for (const auto& t : terms) {
        if (c.size() <= t.exps[0]) c.resize(t.exps[0] + 1, Rational(0));
        c[t.exps[0]] += t.coeff;
    }
    return c;
}

inline std::vector<Rational> coefficient_list(const std::string& text) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("bad coefficient list " + text);
    std::vector<Rational> c;
    std::string item;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == ',' || i + 1 == s.size()) {
            if (!item.empty()) c.push_back(parse_rational(item));
            item.clear();
        } else {
            item += s[i];
        }
    }
    return c;
}

}  // namespace detail

inline std::vector<Term> parse_terms(const std::string& text, std::vector<char> vars) {
    return detail::TermParser(text, std::move(vars)).parse();
}

/// Rational polynomial in one variable, or a coefficient list.
inline Polynomial<RationalField> parse_qpoly(const std::string& text, char var = 'x') {
    std::string s = detail::strip(text);
    if (!s.empty() && s.front() == '[') return Polynomial<RationalField>(RationalField{}, detail::coefficient_list(s));
    return Polynomial<RationalField>(RationalField{}, detail::dense(parse_terms(s, {var})));
}

/// Element of K written as a polynomial in t (the class of x), or a coefficient list.
inline NFElement parse_nf_element(const NumberField& k, const std::string& text) {
    return k.element(parse_qpoly(text, 't'));
}

/// Polynomial over F_q (prime field coefficients) in one variable.
inline FqPoly parse_fqpoly(const GaloisField& k, const std::string& text, char var) {
    auto q = parse_qpoly(text, var);
    GaloisField fp = GaloisField::prime(k.characteristic());
    std::vector<GaloisElement> c;
    for (const auto& r : q.coefficients()) {
        std::uint64_t den = mod_u64(r.get_den(), k.characteristic());
        if (den == 0) throw ParseError("denominator divisible by the characteristic");
        std::uint64_t v = modarith::mul(mod_u64(r.get_num(), k.characteristic()), modarith::inv(den, k.characteristic()),
                                        k.characteristic());
        c.push_back(k.from_u64(v));
    }
    return FqPoly(k, std::move(c));
}

/// Element of F_q(t): "num" or "(num)/(den)".
inline RatFunc parse_ratfunc(const RationalFunctionField& k, const std::string& text) {
    std::string s = detail::strip(text);
    auto unwrap = [](std::string p) {
        if (p.size() >= 2 && p.front() == '(' && p.back() == ')') return p.substr(1, p.size() - 2);
        return p;
    };
    auto slash = s.find(")/(");
    if (slash != std::string::npos)
        return k.fraction(parse_fqpoly(k.base(), unwrap(s.substr(0, slash + 1)), 't'),
                          parse_fqpoly(k.base(), unwrap(s.substr(slash + 2)), 't'));
    return k.fraction(parse_fqpoly(k.base(), unwrap(s), 't'), FqPoly::constant(k.base(), k.base().one()));
}

/// Polynomial in U with coefficients in F_q[t], e.g. "U^24 + U + t".
inline FFPoly parse_ffpoly(const RationalFunctionField& k, const std::string& text) {
    std::uint64_t p = k.base().characteristic();
    std::vector<std::vector<std::uint64_t>> rows;  // rows[u-degree][t-degree]
    for (const auto& term : parse_terms(text, {'U', 't'})) {
        auto [ue, te] = std::pair{term.exps[0], term.exps[1]};
        if (rows.size() <= ue) rows.resize(ue + 1);
        if (rows[ue].size() <= te) rows[ue].resize(te + 1, 0);
        std::uint64_t den = mod_u64(term.coeff.get_den(), p);
        if (den == 0) throw ParseError("denominator divisible by the characteristic");
        std::uint64_t v = modarith::mul(mod_u64(term.coeff.get_num(), p), modarith::inv(den, p), p);
        rows[ue][te] = (rows[ue][te] + v) % p;
    }
    std::vector<RatFunc> c;
    for (const auto& r : rows) c.push_back(k.from_polynomial(fq_poly(k.base(), r)));
    return FFPoly(k, std::move(c));
}

/// Prime spec "p:h0,h1,...": the prime over p cut out by h (residues, constant first).
inline UnramifiedPrime parse_prime(const NumberField& k, const std::string& text) {
    std::string s = detail::strip(text);
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("prime must look like p:h0,h1,... (got " + text + ")");
    std::uint64_t p = std::stoull(s.substr(0, colon));
    std::vector<std::uint64_t> h;
    std::string item;
    for (std::size_t i = colon + 1; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            if (item.empty()) throw ParseError("empty coefficient in prime " + text);
            long long v = std::stoll(item);
            h.push_back(static_cast<std::uint64_t>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                                   static_cast<long long>(p)));
            item.clear();
        } else {
            item += s[i];
        }
    }
    return UnramifiedPrime::create(k, p, h);
}

/// Curve "y^2 [+ h y] = g" as (h, g) over Q.
inline std::pair<Polynomial<RationalField>, Polynomial<RationalField>> parse_curve(const std::string& text) {
    std::string s = detail::strip(text);
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("curve must contain '=' (got " + text + ")");
    std::string lhs = s.substr(0, eq), rhs = s.substr(eq + 1);
    std::string rest;
    if (lhs.rfind("y^2", 0) == 0)
        rest = lhs.substr(3);
    else if (lhs.rfind("y2", 0) == 0)
        rest = lhs.substr(2);
    else
        throw ParseError("curve must start with y^2 or y2 (got " + text + ")");
    Polynomial<RationalField> h(RationalField{});
    if (!rest.empty()) {
        if (rest.front() != '+' || rest.back() != 'y') throw ParseError("expected '+ h y' after y^2 (got " + lhs + ")");
        std::string hs = rest.substr(1, rest.size() - 2);
        if (!hs.empty() && hs.back() == '*') hs.pop_back();
        if (hs.size() >= 2 && hs.front() == '(' && hs.back() == ')') hs = hs.substr(1, hs.size() - 2);
        h = hs.empty() ? Polynomial<RationalField>::constant(RationalField{}, 1) : parse_qpoly(hs);
    }
    return {h, parse_qpoly(rhs)};
}

}  // namespace curvecert::io
