// Rendering, parsing, and diffing of ConjPolynomial values.

#include <cctype>
#include <map>
#include <sstream>

#include "schurcoef/errors.hpp"
#include "schurcoef/symbolic.hpp"

namespace schurcoef::symbolic {

namespace {

std::string latex_index(std::size_t j) {
    return j < 10 ? std::to_string(j) : "{" + std::to_string(j) + "}";
}

std::string latex_power(unsigned e) {
    if (e == 1) return "";
    return e < 10 ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
}

std::string plain_monomial(const Monomial& m, Alphabet a) {
    const char* holo = a == Alphabet::gamma ? "g" : "x";
    const char* anti = a == Alphabet::gamma ? "gbar" : "xbar";
    std::string s;
    for (std::size_t j = 1; j <= m.max_index(); ++j) {
        if (unsigned e = m.holo(j)) {
            s += holo + std::to_string(j);
            if (e > 1) s += "^" + std::to_string(e);
        }
        if (unsigned e = m.anti(j)) {
            s += anti + std::to_string(j);
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

std::string latex_monomial(const Monomial& m, Alphabet a) {
    const std::string holo = a == Alphabet::gamma ? "\\gamma_" : "x_";
    const std::string anti = a == Alphabet::gamma ? "\\bar\\gamma_" : "\\bar x_";
    std::string s;
    for (std::size_t j = 1; j <= m.max_index(); ++j) {
        if (unsigned e = m.holo(j)) s += holo + latex_index(j) + latex_power(e);
        if (unsigned e = m.anti(j)) s += anti + latex_index(j) + latex_power(e);
    }
    return s;
}

// Appends "c*body" with the sign glued to the previous output.
void append_term(std::string& out, const Integer& c, const std::string& body) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (negative)
        out += "-";
    else if (!out.empty())
        out += "+";
    if (body.empty() || magnitude != 1) out += magnitude.str();
    out += body;
}

// Key of the grouped normal form: powers of d_j = (1 - gamma_j conj(gamma_j))
// and a monomial in which no gamma_j conj(gamma_j) pair remains.
struct GroupedKey {
    std::vector<unsigned> d;
    Monomial rest;
};

struct GroupedOrder {
    bool operator()(const GroupedKey& a, const GroupedKey& b) const {
        const std::size_t len = std::max(a.d.size(), b.d.size());
        for (std::size_t i = 0; i < len; ++i) {
            const unsigned x = i < a.d.size() ? a.d[i] : 0;
            const unsigned y = i < b.d.size() ? b.d[i] : 0;
            if (x != y) return x > y;
        }
        return MonomialOrder{}(a.rest, b.rest);
    }
};

Integer binomial(unsigned m, unsigned i) {
    Integer r = 1;
    for (unsigned k = 1; k <= i; ++k) r = r * (m - i + k) / k;
    return r;
}

// gamma_j conj(gamma_j) = 1 - d_j, so (gamma_j conj(gamma_j))^m = sum_i C(m,i) (-d_j)^i.
std::map<GroupedKey, Integer, GroupedOrder> to_grouped(const ConjPolynomial& p) {
    std::map<GroupedKey, Integer, GroupedOrder> out;
    for (const auto& [m, c] : p.terms()) {
        const std::size_t n = m.max_index();
        std::vector<unsigned> pairs(n);
        std::vector<std::uint16_t> rest(2 * n, 0);
        for (std::size_t j = 1; j <= n; ++j) {
            const unsigned a = m.holo(j), b = m.anti(j);
            pairs[j - 1] = std::min(a, b);
            rest[2 * (j - 1)] = static_cast<std::uint16_t>(a - pairs[j - 1]);
            rest[2 * (j - 1) + 1] = static_cast<std::uint16_t>(b - pairs[j - 1]);
        }
        const Monomial rest_monomial{std::move(rest)};
        // Expand the product over j of sum_i C(pairs_j, i) (-d_j)^i.
        std::vector<std::pair<std::vector<unsigned>, Integer>> partial{{{}, c}};
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::pair<std::vector<unsigned>, Integer>> next;
            for (const auto& [d, coef] : partial) {
                for (unsigned i = 0; i <= pairs[j]; ++i) {
                    auto dd = d;
                    dd.push_back(i);
                    Integer cc = coef * binomial(pairs[j], i);
                    if (i % 2) cc = -cc;
                    next.emplace_back(std::move(dd), std::move(cc));
                }
            }
            partial = std::move(next);
        }
        for (auto& [d, coef] : partial) {
            while (!d.empty() && d.back() == 0) d.pop_back();
            auto& slot = out[GroupedKey{d, rest_monomial}];
            slot += coef;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// -------------------------------------------------------------------------
// Parser

class LatexParser {
public:
    explicit LatexParser(std::string_view text) : s_(text) {}

    ConjPolynomial parse() {
        auto p = expression();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse_latex: " << msg << " at offset " << pos_;
        throw usage_error(os.str());
    }

    bool starts_with(std::string_view t) const { return s_.substr(pos_, t.size()) == t; }

    void skip() {
        for (;;) {
            if (pos_ >= s_.size()) return;
            const char ch = s_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '&') {
                ++pos_;
            } else if (starts_with("\\\\")) {
                pos_ += 2;
            } else if (starts_with("\\qquad")) {
                pos_ += 6;
            } else if (starts_with("\\quad")) {
                pos_ += 5;
            } else if (starts_with("\\,") || starts_with("\\;") || starts_with("\\!")) {
                pos_ += 2;
            } else if (starts_with("\\left")) {
                pos_ += 5;
            } else if (starts_with("\\right")) {
                pos_ += 6;
            } else {
                return;
            }
        }
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    unsigned integer_literal() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        unsigned v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
        return v;
    }

    // Token after '_' or '^': a single digit or a braced integer.
    unsigned script_value() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '{') {
            ++pos_;
            skip();
            const unsigned v = integer_literal();
            if (peek() != '}') fail("expected '}'");
            ++pos_;
            return v;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a digit");
        return static_cast<unsigned>(s_[pos_++] - '0');
    }

    std::size_t subscript() {
        if (peek() != '_') fail("expected '_'");
        ++pos_;
        const unsigned j = script_value();
        if (j == 0) fail("variable index must be positive");
        return j;
    }

    ConjPolynomial expression() {
        ConjPolynomial sum;
        bool first = true;
        for (;;) {
            const char ch = peek();
            int sign = 1;
            if (ch == '+' || ch == '-') {
                sign = ch == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                return sum;
            }
            auto t = term();
            if (sign < 0)
                sum -= t;
            else
                sum += t;
            first = false;
        }
    }

    bool factor_ahead() {
        const char ch = peek();
        return ch == '(' || (ch == '|' && !in_modulus_) || ch == '\\' || ch == 'x' || ch == 'b' || ch == 'c' ||
               std::isdigit(static_cast<unsigned char>(ch));
    }

    ConjPolynomial term() {
        if (!factor_ahead()) fail("expected a factor");
        ConjPolynomial prod = factor();
        while (factor_ahead()) prod *= factor();
        return prod;
    }

    ConjPolynomial factor() {
        auto base = primary();
        while (peek() == '^') {
            ++pos_;
            base = base.pow(script_value());
        }
        return base;
    }

    ConjPolynomial primary() {
        const char ch = peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) return ConjPolynomial(Integer(integer_literal()));
        if (ch == '(') {
            ++pos_;
            auto inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (ch == '|') {
            if (in_modulus_) fail("nested modulus");
            ++pos_;
            in_modulus_ = true;
            auto inner = expression();
            in_modulus_ = false;
            if (peek() != '|') fail("expected closing '|'");
            ++pos_;
            if (peek() != '^') fail("modulus must be squared");
            ++pos_;
            if (script_value() != 2) fail("modulus must be squared");
            return inner * inner.conj();
        }
        if (ch == 'x' || ch == 'b' || ch == 'c') {
            ++pos_;
            return ConjPolynomial::variable(subscript());
        }
        if (ch == '\\') {
            if (starts_with("\\bar")) {
                pos_ += 4;
                skip();
                if (!starts_with("\\gamma")) fail("expected \\gamma after \\bar");
                pos_ += 6;
                return ConjPolynomial::conj_variable(subscript());
            }
            if (starts_with("\\gamma")) {
                pos_ += 6;
                return ConjPolynomial::variable(subscript());
            }
            fail("unknown command");
        }
        fail("expected a factor");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    bool in_modulus_ = false;
};

}  // namespace

std::string render_plain(const ConjPolynomial& p, Alphabet alphabet) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) append_term(out, c, plain_monomial(m, alphabet));
    return out;
}

std::string render_latex(const ConjPolynomial& p, Alphabet alphabet, bool grouped) {
    if (p.is_zero()) return "0";
    std::string out;
    if (!grouped) {
        for (const auto& [m, c] : p.terms()) append_term(out, c, latex_monomial(m, alphabet));
        return out;
    }
    const std::string sym = alphabet == Alphabet::gamma ? "\\gamma_" : "x_";
    for (const auto& [key, c] : to_grouped(p)) {
        std::string body;
        for (std::size_t j = 0; j < key.d.size(); ++j) {
            if (key.d[j] == 0) continue;
            body += "(1-|" + sym + latex_index(j + 1) + "|^2)" + latex_power(key.d[j]);
        }
        body += latex_monomial(key.rest, alphabet);
        append_term(out, c, body);
    }
    return out;
}

ConjPolynomial parse_latex(std::string_view text) { return LatexParser(text).parse(); }

std::vector<std::string> diff_terms(const ConjPolynomial& a, const ConjPolynomial& b,
                                    Alphabet alphabet) {
    std::vector<std::string> lines;
    const ConjPolynomial delta = a - b;
    for (const auto& [m, c] : delta.terms()) {
        std::ostringstream os;
        const std::string name = m.exponents().empty() ? "1" : plain_monomial(m, alphabet);
        os << name << ": " << a.coefficient(m) << " vs " << b.coefficient(m);
        lines.push_back(os.str());
    }
    return lines;
}

}  // namespace schurcoef::symbolic
