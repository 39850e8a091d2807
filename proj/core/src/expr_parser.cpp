#include "dring/expr_parser.hpp"

#include <cctype>

namespace dring {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, RingPtr ring, SourcePos origin)
        : text_(text), ring_(std::move(ring)), origin_(origin) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        std::size_t line = origin_.line;
        std::size_t col = origin_.column;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction constant(long v) const { return RationalFunction(Poly::constant(ring_, Rational(v))); }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction d = unary();
                if (d.is_zero()) fail_at("division by zero", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        if (pos_ - start > 6) fail_at("exponent too large", start);
        unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
        RationalFunction out = constant(1);
        for (unsigned k = 0; k < e; ++k) out = out * base;
        return out;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Rational r = Rational::parse(text_.substr(start, pos_ - start));
            return RationalFunction(Poly::constant(ring_, r));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            std::size_t idx = ring_->index_of(name);
            if (idx == ring_->size()) fail_at("unknown variable '" + name + "'", start);
            return RationalFunction(Poly::variable(ring_, idx));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    RingPtr ring_;
    SourcePos origin_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const RingPtr& ring, SourcePos origin) {
    return ExprParser(text, ring, origin).parse();
}

Poly parse_polynomial(std::string_view text, const RingPtr& ring, SourcePos origin) {
    RationalFunction f = parse_expression(text, ring, origin);
    if (!f.denominator().is_constant()) {
        throw ParseError("expected a polynomial, got a rational function", origin.line, origin.column);
    }
    return f.numerator() * f.denominator().constant_term().inverse();
}

Rational parse_constant(std::string_view text, const RingPtr& ring, SourcePos origin) {
    RationalFunction f = parse_expression(text, ring, origin);
    if (!f.is_constant()) throw ParseError("expected a rational constant", origin.line, origin.column);
    return f.constant_value();
}

}  // namespace dring
