#ifndef HYPERSEQ_RATFUN_HPP
#define HYPERSEQ_RATFUN_HPP

#include "hyperseq/polynomial.hpp"

#include <optional>

namespace hyperseq {

struct ZeroDenominatorPolynomial : std::domain_error {
    ZeroDenominatorPolynomial() : std::domain_error("denominator polynomial is zero") {}
};

struct EventuallyZeroDivisor : std::domain_error {
    EventuallyZeroDivisor() : std::domain_error("division by an eventually-zero sequence branch") {}
};

/// Eventual limit of a rational function as the argument grows.
enum class LimitKind { Finite, PlusInfinity, MinusInfinity };

struct BranchLimit {
    LimitKind kind;
    Rational value; // meaningful only when kind == Finite
    bool operator==(const BranchLimit&) const = default;
};

/// Quotient of two polynomials in canonical form: numerator and denominator
/// coprime, denominator monic. Structural equality is mathematical equality;
/// zero is 0/1.
class RationalFunc {
public:
    RationalFunc() : num_(), den_(Polynomial::constant(Rational(1))) {}
    RationalFunc(Polynomial num, Polynomial den);

    static RationalFunc constant(const Rational& c) {
        return RationalFunc(Polynomial::constant(c), Polynomial::constant(Rational(1)));
    }
    static RationalFunc variable() {
        return RationalFunc(Polynomial::variable(), Polynomial::constant(Rational(1)));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunc operator-() const;
    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator*(const RationalFunc& o) const;
    /// Throws EventuallyZeroDivisor when o is the zero function.
    RationalFunc operator/(const RationalFunc& o) const;

    bool operator==(const RationalFunc& o) const = default;

    /// Value at x, or nullopt when the denominator vanishes there.
    std::optional<Rational> eval(const Rational& x) const;

    /// Substitute another rational function for the variable. Throws
    /// EventuallyZeroDivisor when the substituted denominator is identically zero.
    RationalFunc compose(const RationalFunc& inner) const;

    /// Sign of the function for all arguments >= sign_stable_bound():
    /// -1, 0 (zero function), or +1.
    int eventual_sign() const;

    /// Behavior as the argument tends to infinity, from degree comparison.
    BranchLimit limit_at_infinity() const;

    /// Bound beyond which numerator and denominator both keep a constant sign.
    Integer sign_stable_bound() const;

private:
    /// Skips the gcd step; requires num and den already coprime, den nonzero.
    static RationalFunc reduced(Polynomial num, Polynomial den);

    Polynomial num_;
    Polynomial den_;
};

} // namespace hyperseq

#endif
