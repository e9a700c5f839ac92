#pragma once

#include "fano/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fano {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t col, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                             what),
          line(line),
          col(col) {}
    std::size_t line;
    std::size_t col;
};

namespace detail {

/// One polynomial line, whitespace-insensitive.
template <class K>
Polynomial<K> parse_poly_line(const RingPtr& ring, const std::string& raw, std::size_t lineno) {
    std::string s;
    std::vector<std::size_t> colmap;  // position in raw for each char of s
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(raw[i]))) {
            s.push_back(raw[i]);
            colmap.push_back(i + 1);
        }
    auto err = [&](std::size_t pos, const std::string& what) -> ParseError {
        return ParseError(lineno, pos < colmap.size() ? colmap[pos] : raw.size() + 1, what);
    };

    std::size_t pos = 0;
    std::vector<Term<K>> terms;
    bool first = true;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw err(pos, "expected '+' or '-' between terms");
        }
        first = false;
        if (pos >= s.size()) throw err(pos, "dangling sign");

        K coeff = field_ops<K>::one(*ring);
        bool saw_factor = false;
        Monomial mono(ring->arity());
        while (true) {
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                std::int64_t num = std::stoll(s.substr(start, pos - start));
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    std::size_t dstart = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (dstart == pos) throw err(pos, "expected denominator digits");
                    std::int64_t den = std::stoll(s.substr(dstart, pos - dstart));
                    if (den == 0) throw err(dstart, "zero denominator");
                    coeff *= field_ops<K>::from_int(*ring, num) * field_ops<K>::from_int(*ring, den).inverse();
                } else {
                    coeff *= field_ops<K>::from_int(*ring, num);
                }
                saw_factor = true;
            } else if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                std::size_t start = pos;
                while (pos < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
                    ++pos;
                std::string name = s.substr(start, pos - start);
                std::size_t vi;
                try {
                    vi = ring->var_index(name);
                } catch (const std::invalid_argument&) {
                    throw err(start, "unknown variable '" + name + "'");
                }
                std::uint16_t exp = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                        throw err(pos, "expected exponent digits after '^'");
                    std::size_t estart = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    unsigned long e = std::stoul(s.substr(estart, pos - estart));
                    if (e > 0xffff) throw err(estart, "exponent too large");
                    exp = static_cast<std::uint16_t>(e);
                }
                mono = mono * Monomial::variable(ring->arity(), vi, exp);
                saw_factor = true;
            } else {
                throw err(pos, "expected coefficient or variable");
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                if (pos >= s.size()) throw err(pos, "dangling '*'");
                continue;
            }
            break;
        }
        if (!saw_factor) throw err(pos, "empty term");
        if (neg) coeff = -coeff;
        terms.push_back({std::move(mono), std::move(coeff)});
    }
    return Polynomial<K>::from_terms(ring, std::move(terms));
}

inline std::string coeff_str(const Fp& c) { return c.str(); }
inline std::string coeff_str(const Rational& c) { return c.str(); }

}  // namespace detail

template <class K>
std::string to_string(const Polynomial<K>& f, const MonomialOrder& ord = MonomialOrder::grevlex()) {
    if (f.is_zero()) return "0";
    std::vector<Term<K>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
    std::ostringstream out;
    const Ring& R = *f.ring();
    bool first = true;
    for (const auto& t : terms) {
        std::string cs = detail::coeff_str(t.c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        bool unit_coeff = (cs == "1") && !t.m.is_one();
        bool printed = false;
        if (!unit_coeff) {
            out << cs;
            printed = true;
        }
        for (std::size_t i = 0; i < R.arity(); ++i) {
            if (t.m[i] == 0) continue;
            if (printed) out << "*";
            out << R.vars[i];
            if (t.m[i] > 1) out << "^" << t.m[i];
            printed = true;
        }
    }
    return out.str();
}

inline std::string ring_header(const Ring& R, const MonomialOrder& ord) {
    std::string s = "ring vars=";
    for (std::size_t i = 0; i < R.vars.size(); ++i) {
        if (i) s += ",";
        s += R.vars[i];
    }
    s += " field=" + R.field.str() + " order=" + ord.str();
    return s;
}

struct IdealFile {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::grevlex();
    std::variant<std::vector<PolyFp>, std::vector<PolyQ>> polys;

    bool is_prime_field() const { return ring->field.kind == FieldDesc::Kind::Prime; }
};

/// Parse an ideal file: `ring ...` header, optional `ideal` section header,
/// then one polynomial per line. Blank lines and `#` comments are skipped.
inline IdealFile parse_ideal_file(std::istream& in) {
    IdealFile out;
    std::string line;
    std::size_t lineno = 0;
    bool have_ring = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch)) || !trimmed.empty()) trimmed.push_back(ch);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.rfind("ring", 0) == 0 && !have_ring) {
            std::vector<std::string> vars;
            FieldDesc field = FieldDesc::prime(32003);
            MonomialOrder ord = MonomialOrder::grevlex();
            std::istringstream hs(trimmed.substr(4));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw ParseError(lineno, 1, "malformed ring header token '" + tok + "'");
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "vars") {
                    std::istringstream vs(val);
                    std::string v;
                    while (std::getline(vs, v, ',')) vars.push_back(v);
                } else if (key == "field") {
                    if (val == "QQ")
                        field = FieldDesc::rationals();
                    else if (val.rfind("Fp:", 0) == 0)
                        field = FieldDesc::prime(static_cast<std::uint32_t>(std::stoul(val.substr(3))));
                    else
                        throw ParseError(lineno, 1, "unknown field '" + val + "'");
                } else if (key == "order") {
                    try {
                        ord = MonomialOrder::parse(val);
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(lineno, 1, e.what());
                    }
                } else {
                    throw ParseError(lineno, 1, "unknown ring header key '" + key + "'");
                }
            }
            if (vars.empty()) throw ParseError(lineno, 1, "ring header declares no variables");
            out.ring = make_ring(std::move(vars), field);
            out.order = ord;
            have_ring = true;
            if (field.kind == FieldDesc::Kind::Prime)
                out.polys = std::vector<PolyFp>{};
            else
                out.polys = std::vector<PolyQ>{};
            continue;
        }
        if (!have_ring) throw ParseError(lineno, 1, "expected ring header before polynomials");
        if (trimmed == "ideal") continue;
        if (out.is_prime_field())
            std::get<std::vector<PolyFp>>(out.polys).push_back(detail::parse_poly_line<Fp>(out.ring, line, lineno));
        else
            std::get<std::vector<PolyQ>>(out.polys).push_back(detail::parse_poly_line<Rational>(out.ring, line, lineno));
    }
    if (!have_ring) throw ParseError(lineno + 1, 1, "missing ring header");
    return out;
}

}  // namespace fano
