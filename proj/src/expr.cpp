#include "hyperseq/expr.hpp"

#include <cctype>

namespace hyperseq {

ExprPtr FuncExpr::variable(std::string name, SourceSpan span) {
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::Variable;
    e->name_ = std::move(name);
    e->span_ = span;
    return e;
}

ExprPtr FuncExpr::constant(Rational value, SourceSpan span) {
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::Constant;
    e->value_ = std::move(value);
    e->span_ = span;
    return e;
}

ExprPtr FuncExpr::binary(Kind k, Ptr lhs, Ptr rhs, SourceSpan span) {
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = k;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    e->span_ = span;
    return e;
}

ExprPtr FuncExpr::pow(Ptr base, unsigned exponent, SourceSpan span) {
    auto e = std::shared_ptr<FuncExpr>(new FuncExpr());
    e->kind_ = Kind::Pow;
    e->lhs_ = std::move(base);
    e->exponent_ = exponent;
    e->span_ = span;
    return e;
}

const RationalFunc& FuncExpr::canonical() const {
    if (!canonical_) {
        RationalFunc r;
        switch (kind_) {
            case Kind::Variable: r = RationalFunc::variable(); break;
            case Kind::Constant: r = RationalFunc::constant(value_); break;
            case Kind::Add: r = lhs_->canonical() + rhs_->canonical(); break;
            case Kind::Sub: r = lhs_->canonical() - rhs_->canonical(); break;
            case Kind::Mul: r = lhs_->canonical() * rhs_->canonical(); break;
            case Kind::Div: r = lhs_->canonical() / rhs_->canonical(); break;
            case Kind::Pow:
                r = RationalFunc(lhs_->canonical().num().pow(exponent_),
                                 lhs_->canonical().den().pow(exponent_));
                break;
        }
        canonical_ = std::make_shared<const RationalFunc>(std::move(r));
    }
    return *canonical_;
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw SyntaxError("unexpected trailing input", pos_, "'+', '-', '*', '/', '^' or end of input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            std::size_t at = pos_;
            if (try_consume('+'))
                e = FuncExpr::binary(FuncExpr::Kind::Add, e, term(), {e->span().begin, pos_});
            else if (try_consume('-'))
                e = FuncExpr::binary(FuncExpr::Kind::Sub, e, term(), {e->span().begin, pos_});
            else {
                pos_ = at;
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            std::size_t at = pos_;
            if (try_consume('*'))
                e = FuncExpr::binary(FuncExpr::Kind::Mul, e, factor(), {e->span().begin, pos_});
            else if (try_consume('/'))
                e = FuncExpr::binary(FuncExpr::Kind::Div, e, factor(), {e->span().begin, pos_});
            else {
                pos_ = at;
                return e;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr b = base();
        if (!try_consume('^')) return b;
        std::size_t expAt = pos_;
        skip_ws();
        expAt = pos_;
        bool paren = try_consume('(');
        Rational e = rational_literal("exponent");
        if (paren && !try_consume(')'))
            throw SyntaxError("unclosed exponent parenthesis", pos_, "')'");
        if (!is_integer(e)) throw NonIntegerExponent(expAt);
        if (e < 0) throw NegativeExponent(expAt);
        if (e > 4096) throw SyntaxError("exponent too large", expAt, "integer <= 4096");
        return FuncExpr::pow(b, static_cast<unsigned>(numerator(e)), {b->span().begin, pos_});
    }

    ExprPtr base() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!try_consume(')'))
                throw SyntaxError("unclosed parenthesis", pos_, "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            Rational v = rational_literal("number");
            return FuncExpr::constant(std::move(v), {start, pos_});
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            if (!varName_.empty() && name != varName_)
                throw SyntaxError("expression must use a single variable (saw '" + name +
                                      "' after '" + varName_ + "')",
                                  start, "'" + varName_ + "'");
            varName_ = name;
            return FuncExpr::variable(std::move(name), {start, pos_});
        }
        throw SyntaxError("expected a value", pos_, "rational, variable, or '('");
    }

    Rational rational_literal(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        std::size_t digitsStart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digitsStart)
            throw SyntaxError(std::string("expected ") + what, start, "digit");
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // only a fraction when digits follow, so "1/x" still parses as division
            std::size_t slash = pos_;
            ++pos_;
            std::size_t denStart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == denStart) pos_ = slash;
        }
        auto r = try_parse_rational(text_.substr(start, pos_ - start));
        if (!r) throw SyntaxError("malformed rational literal", start, "p/q");
        return *r;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::string varName_;
};

} // namespace

ExprPtr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string print_expr(const ExprPtr& e) {
    switch (e->kind()) {
        case FuncExpr::Kind::Variable: return e->name();
        case FuncExpr::Kind::Constant: return format_rational(e->value());
        case FuncExpr::Kind::Add: return "(" + print_expr(e->lhs()) + " + " + print_expr(e->rhs()) + ")";
        case FuncExpr::Kind::Sub: return "(" + print_expr(e->lhs()) + " - " + print_expr(e->rhs()) + ")";
        case FuncExpr::Kind::Mul: return "(" + print_expr(e->lhs()) + " * " + print_expr(e->rhs()) + ")";
        case FuncExpr::Kind::Div: return "(" + print_expr(e->lhs()) + " / " + print_expr(e->rhs()) + ")";
        case FuncExpr::Kind::Pow: return print_expr(e->lhs()) + "^" + std::to_string(e->exponent());
    }
    return "?";
}

} // namespace hyperseq
