#ifndef HYPERSEQ_EXPR_HPP
#define HYPERSEQ_EXPR_HPP

#include "hyperseq/ratfun.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace hyperseq {

struct ExprError : std::invalid_argument {
    ExprError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position(position) {}
    std::size_t position;
};

struct SyntaxError : ExprError {
    SyntaxError(const std::string& what, std::size_t position, std::string expected)
        : ExprError(what, position), expected(std::move(expected)) {}
    std::string expected; // human-readable expected-token set
};

struct NonIntegerExponent : ExprError {
    explicit NonIntegerExponent(std::size_t position)
        : ExprError("exponent must be a non-negative integer", position) {}
};

struct NegativeExponent : ExprError {
    explicit NegativeExponent(std::size_t position)
        : ExprError("negative exponents are not allowed; use division", position) {}
};

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// AST of a univariate rational-function expression. Nodes are immutable and
/// shared; the canonical numerator/denominator pair is derived lazily.
class FuncExpr {
public:
    enum class Kind { Variable, Constant, Add, Sub, Mul, Div, Pow };

    using Ptr = std::shared_ptr<const FuncExpr>;

    static Ptr variable(std::string name, SourceSpan span);
    static Ptr constant(Rational value, SourceSpan span);
    static Ptr binary(Kind k, Ptr lhs, Ptr rhs, SourceSpan span);
    static Ptr pow(Ptr base, unsigned exponent, SourceSpan span);

    Kind kind() const { return kind_; }
    SourceSpan span() const { return span_; }
    const Rational& value() const { return value_; }
    const std::string& name() const { return name_; }
    unsigned exponent() const { return exponent_; }
    const Ptr& lhs() const { return lhs_; }
    const Ptr& rhs() const { return rhs_; }

    /// Canonical num/den pair of the denoted rational function (cached).
    const RationalFunc& canonical() const;

    /// True iff the canonical denominator is constant.
    bool is_polynomial() const { return canonical().den().is_constant(); }

private:
    FuncExpr() = default;

    Kind kind_ = Kind::Constant;
    SourceSpan span_;
    Rational value_;
    std::string name_;
    unsigned exponent_ = 0;
    Ptr lhs_, rhs_;

    mutable std::shared_ptr<const RationalFunc> canonical_;
};

using ExprPtr = FuncExpr::Ptr;

/// Recursive-descent parser for
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' nonneg-int)?
///   base   := rational | variable | '(' expr ')'
/// with left associativity and signed rational literals p/q at base position.
ExprPtr parse_expr(std::string_view text);

/// Parenthesized infix rendering, mostly for --trace output.
std::string print_expr(const ExprPtr& e);

} // namespace hyperseq

#endif
