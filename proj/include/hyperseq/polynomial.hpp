#ifndef HYPERSEQ_POLYNOMIAL_HPP
#define HYPERSEQ_POLYNOMIAL_HPP

#include "hyperseq/rational.hpp"

#include <vector>

namespace hyperseq {

/// Dense univariate polynomial over exact rationals, coefficients lowest-degree-first.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has an
/// empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator/(const Rational& c) const;

    bool operator==(const Polynomial& o) const = default;

    Polynomial pow(unsigned k) const;

    /// Substitute another polynomial for the variable.
    Polynomial compose(const Polynomial& inner) const;

    /// Euclidean division: *this = q * d + r with deg r < deg d. d must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    /// Monic gcd over the rationals; gcd(0,0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// Smallest integer B >= 1 such that the polynomial has constant sign on
    /// [B, infinity): ceil of the Cauchy root bound 1 + max|c_i|/|c_lead|.
    /// Returns 1 for constants and for the zero polynomial.
    Integer sign_stable_bound() const;

    /// All positive integer roots >= from (found by scanning up to the Cauchy bound).
    std::vector<Integer> positive_integer_roots(const Integer& from = 1) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace hyperseq

#endif
