#ifndef HYPERSEQ_CALCULUS_HPP
#define HYPERSEQ_CALCULUS_HPP

#include "hyperseq/expr.hpp"
#include "hyperseq/shadow.hpp"

#include <mutex>

namespace hyperseq {

struct DegreeBoundExceeded : std::invalid_argument {
    DegreeBoundExceeded() : std::invalid_argument("power-sum degree bound exceeded") {}
};

struct PoleAtPoint : std::domain_error {
    PoleAtPoint() : std::domain_error("the function has a pole at the evaluation point") {}
};

struct PoleInInterval : std::domain_error {
    PoleInInterval() : std::domain_error("the function has a pole inside the interval") {}
};

struct NonPolynomialIntegrand : std::invalid_argument {
    NonPolynomialIntegrand()
        : std::invalid_argument("exact integration requires a polynomial integrand") {}
};

struct InvalidInterval : std::invalid_argument {
    InvalidInterval() : std::invalid_argument("integration interval requires a <= b") {}
};

struct NoConvergenceWithinBudget : std::runtime_error {
    NoConvergenceWithinBudget()
        : std::runtime_error("Riemann sums did not settle within the refinement budget") {}
};

/// Memoized Bernoulli numbers with the B1 = +1/2 convention, so that
/// sum_{i=1..n} i^k has the closed form (1/(k+1)) sum_j C(k+1,j) B_j n^{k+1-j}.
/// Safe for concurrent lookup.
class BernoulliTable {
public:
    static constexpr unsigned kDefaultBound = 64;

    const Rational& get(unsigned k);

    static BernoulliTable& shared();

private:
    std::mutex mu_;
    std::vector<Rational> values_;
};

/// Exact binomial coefficient.
Integer binomial(unsigned n, unsigned k);

/// The Faulhaber polynomial P_k with P_k(n) = sum_{i=1..n} i^k.
/// Throws DegreeBoundExceeded for k beyond the bound.
Polynomial power_sum(unsigned k, unsigned bound = BernoulliTable::kDefaultBound);

/// Termwise extension: the sequence n -> f(s(n)), computed branchwise by
/// rational-function composition. Throws EventuallyZeroDivisor if a substituted
/// denominator branch vanishes identically.
EventualSeq extend(const ExprPtr& f, const EventualSeq& s);

struct DerivativeDetail {
    EventualSeq quotient; // the simplified difference quotient as a sequence
    Rational value;
};

/// Derivative of f at x0 as the shadow of the difference quotient along the
/// infinitesimal 1/n. Exact for rational f. Throws PoleAtPoint.
Rational derivative(const ExprPtr& f, const Rational& x0);
DerivativeDetail derivative_detail(const ExprPtr& f, const Rational& x0);

struct IntegralDetail {
    RationalFunc riemannSum; // closed form of the Riemann sum as a function of n
    Rational value;
};

/// Definite integral of a polynomial f over [a,b] as the shadow of the
/// hyperfinite Riemann sum with right endpoints, expanded via power_sum.
/// Throws NonPolynomialIntegrand or InvalidInterval.
Rational integral(const ExprPtr& f, const Rational& a, const Rational& b);
IntegralDetail integral_detail(const ExprPtr& f, const Rational& a, const Rational& b);

/// Numeric fallback for rational non-polynomial integrands: Riemann sums on a
/// doubling schedule n = 2^4 .. 2^20 until successive values differ by < tol/2.
/// Throws PoleInInterval or NoConvergenceWithinBudget.
ShadowResult numeric_shadow(const ExprPtr& f, const Rational& a, const Rational& b,
                            const Rational& tol);

} // namespace hyperseq

#endif
