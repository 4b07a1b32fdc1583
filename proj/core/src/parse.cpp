#include "multispec/parse.hpp"

#include <cctype>

namespace multispec {

namespace {

class Parser {
   public:
    explicit Parser(const std::string& text) : s_(text) {}

    Poly parse() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("empty input", pos_);
        Poly p = expr();
        skip_ws();
        if (pos_ < s_.size()) throw ParseError("unexpected character", pos_);
        return p;
    }

   private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Poly factor() {
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-')
                throw ParseError("negative exponent", pos_);
            unsigned long e = integer_literal("exponent expected");
            return base.pow(e);
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'z') {
            ++pos_;
            return Poly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError("unknown variable (only z is allowed)", pos_);
        throw ParseError("expected a number, z, or '('", pos_);
    }

    unsigned long integer_literal(const char* msg) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(msg, pos_);
        return std::stoul(s_.substr(start, pos_ - start));
    }

    Poly rational_literal() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        std::string den = "1";
        // a literal denominator binds tighter than general division, which
        // the grammar does not have
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("denominator expected", pos_);
            den = s_.substr(dstart, pos_ - dstart);
            if (Rational(den) == 0) throw ParseError("zero denominator", dstart);
        }
        Rational v(num + "/" + den);
        v.canonicalize();
        return Poly(v);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace multispec
