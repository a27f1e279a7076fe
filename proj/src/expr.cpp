#include "conflap/expr.hpp"

#include <cctype>

namespace conflap {

namespace {

class Parser {
public:
    Parser(const std::string& text, int var_count, char letter)
        : text_(text), var_count_(var_count), letter_(letter) {}

    Polynomial parse() {
        Polynomial acc(var_count_);
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
        acc += Rational(sign) * term();
        skip_ws();
        while (pos_ < text_.size()) {
            char c = take();
            if (c != '+' && c != '-') fail("expected '+' or '-'", pos_ - 1);
            acc += Rational(c == '-' ? -1 : 1) * term();
            skip_ws();
        }
        return acc;
    }

private:
    const std::string& text_;
    int var_count_;
    char letter_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input", pos_);
        return text_[pos_++];
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_var() {
        char c = peek();
        return c == 'x' || c == 'y';
    }

    mpz_class natural(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) fail(std::string("expected ") + what, start);
        return mpz_class(digits);
    }

    Rational coeff() {
        skip_ws();
        int sign = 1;
        if (peek() == '-' || peek() == '+') sign = take() == '-' ? -1 : 1;
        mpz_class num = natural("integer");
        if (peek() == '/') {
            take();
            std::size_t at = pos_;
            mpz_class den = natural("denominator");
            if (den == 0) fail("zero denominator", at);
            mpq_class q(sign * num, den);
            q.canonicalize();
            return Rational(q);
        }
        return Rational(mpq_class(sign * num));
    }

    // var ('^' nat)? as an exponent contribution
    void factor(Exponents& exps) {
        skip_ws();
        std::size_t at = pos_;
        char c = take();
        if (c != 'x' && c != 'y') fail("expected factor", at);
        if (c != letter_)
            fail(std::string("expected variable letter '") + letter_ + "'", at);
        std::size_t idx_at = pos_;
        mpz_class idx = natural("variable index");
        if (idx < 1 || idx > var_count_)
            fail("variable index out of range 1.." + std::to_string(var_count_), idx_at);
        unsigned e = 1;
        if (peek() == '^') {
            take();
            std::size_t exp_at = pos_;
            mpz_class n = natural("exponent");
            if (n > 64) fail("exponent too large", exp_at);
            e = static_cast<unsigned>(n.get_ui());
        }
        exps[idx.get_ui() - 1] += e;
    }

    Polynomial term() {
        Rational c(1);
        Exponents exps(var_count_, 0);
        skip_ws();
        if (at_digit() || peek() == '-' || peek() == '+') {
            c = coeff();
            while (peek() == '*') {
                take();
                factor(exps);
            }
        } else if (at_var()) {
            factor(exps);
            while (peek() == '*') {
                take();
                factor(exps);
            }
        } else {
            fail("expected term", pos_);
        }
        return Polynomial::monomial(var_count_, std::move(exps), c);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int var_count, char letter) {
    if (var_count < 1) throw DomainError("var_count must be >= 1");
    return Parser(text, var_count, letter).parse();
}

}  // namespace conflap
