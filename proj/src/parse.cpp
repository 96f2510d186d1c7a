#include "resloc/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "resloc/errors.hpp"

namespace resloc {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 20;

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    MultiPoly parse() {
        MultiPoly p(nvars_);
        skip_ws();
        bool negative = accept_sign();
        p += parse_term(negative);
        skip_ws();
        while (!done()) {
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            p += parse_term(c == '-');
            skip_ws();
        }
        return p;
    }

private:
    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept_sign() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    // term := factor ('*' factor)*
    MultiPoly parse_term(bool negative) {
        GaussianRational coeff(1);
        Monomial mono(nvars_);
        parse_factor(coeff, mono);
        skip_ws();
        while (!done() && peek() == '*') {
            ++pos_;
            skip_ws();
            parse_factor(coeff, mono);
            skip_ws();
        }
        if (negative) coeff = -coeff;
        return MultiPoly::term(nvars_, std::move(mono), std::move(coeff));
    }

    void parse_factor(GaussianRational& coeff, Monomial& mono) {
        if (done()) fail("expected factor");
        char c = peek();
        if (c == 'z') {
            parse_varpow(mono);
        } else if (c == 'i') {
            ++pos_;
            coeff *= GaussianRational::i();
        } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            coeff *= parse_coeff();
        } else {
            fail("unexpected character");
        }
    }

    void parse_varpow(Monomial& mono) {
        ++pos_;  // 'z'
        const std::size_t digits_at = pos_;
        mpz_class index = parse_nat("variable index");
        if (index < 1 || index > static_cast<long>(nvars_)) {
            throw ParseError("unknown variable z" + index.get_str(), digits_at);
        }
        std::size_t var = index.get_ui() - 1;
        std::uint32_t exp = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            skip_ws();
            mpz_class e = parse_nat("exponent");
            if (e > kMaxExponent) fail("exponent overflow");
            exp = static_cast<std::uint32_t>(e.get_ui());
        }
        if (mono.exps[var] > kMaxExponent - exp) fail("exponent overflow");
        mono.exps[var] += exp;
    }

    // coeff := rational 'i'? | '(' rational ')' 'i'?
    GaussianRational parse_coeff() {
        mpq_class q;
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            q = parse_rational();
            skip_ws();
            if (done() || peek() != ')') fail("expected ')'");
            ++pos_;
        } else {
            q = parse_rational();
        }
        if (!done() && peek() == 'i') {
            ++pos_;
            return {mpq_class(0), std::move(q)};
        }
        return GaussianRational(std::move(q));
    }

    mpq_class parse_rational() {
        bool neg = false;
        if (!done() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos_;
            skip_ws();
        }
        mpz_class num = parse_nat("number");
        mpz_class den = 1;
        skip_ws();
        if (!done() && peek() == '/') {
            ++pos_;
            skip_ws();
            den = parse_nat("denominator");
            if (den == 0) fail("zero denominator");
        }
        mpq_class q(neg ? -num : num, den);
        q.canonicalize();
        return q;
    }

    mpz_class parse_nat(const std::string& what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + what);
        std::string digits;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
        return mpz_class(digits);
    }
};

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(i + 1);
        if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
}

// |q| as a grammar coefficient token; empty string for a suppressed 1.
std::string coeff_str(const mpq_class& q, bool imaginary, bool monomial_is_one) {
    mpq_class a = abs(q);
    std::string body;
    if (a.get_den() == 1) {
        body = a.get_num().get_str();
    } else {
        body = "(" + a.get_str() + ")";
    }
    if (imaginary) {
        if (a == 1) return "i";
        return body + "i";
    }
    if (a == 1 && !monomial_is_one) return "";
    return body;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t nvars) {
    return Parser(text, nvars).parse();
}

std::string print_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";

    std::vector<const Monomial*> order;
    order.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) order.push_back(&m);
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    std::sort(order.begin(), order.end(),
              [&](const Monomial* a, const Monomial* b) { return grevlex.less(*b, *a); });

    std::string out;
    auto emit = [&](const mpq_class& q, bool imaginary, const Monomial& m) {
        if (sgn(q) == 0) return;
        if (out.empty()) {
            if (sgn(q) < 0) out += "-";
        } else {
            out += sgn(q) < 0 ? " - " : " + ";
        }
        std::string cs = coeff_str(q, imaginary, m.is_one());
        std::string ms = monomial_str(m);
        if (cs.empty()) {
            out += ms;
        } else if (ms.empty()) {
            out += cs;
        } else {
            out += cs + "*" + ms;
        }
    };

    for (const Monomial* m : order) {
        const GaussianRational& c = p.terms().at(*m);
        emit(c.re(), false, *m);
        emit(c.im(), true, *m);
    }
    return out;
}

std::string MultiPoly::str() const { return print_poly(*this); }

}  // namespace resloc
