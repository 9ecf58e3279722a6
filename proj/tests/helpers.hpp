#ifndef HYPERSEQ_TEST_HELPERS_HPP
#define HYPERSEQ_TEST_HELPERS_HPP

// Test-only generators and independent oracles. Nothing here may call the
// implementation paths it is used to check.

#include "hyperseq/calculus.hpp"
#include "hyperseq/seqcore.hpp"

#include <random>

namespace hyperseq::testing {

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, long long maxAbsNum = 9, long long maxDen = 9) {
    return Rational(rand_int(rng, -maxAbsNum, maxAbsNum), rand_int(rng, 1, maxDen));
}

inline Rational rand_positive_rational(Rng& rng, long long maxNum = 1000, long long maxDen = 1000) {
    return Rational(rand_int(rng, 1, maxNum), rand_int(rng, 1, maxDen));
}

inline Polynomial rand_poly(Rng& rng, int maxDeg, long long coeffRange) {
    int deg = static_cast<int>(rand_int(rng, 0, maxDeg));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(Rational(rand_int(rng, -coeffRange, coeffRange)));
    return Polynomial(std::move(c));
}

inline Polynomial rand_nonzero_poly(Rng& rng, int maxDeg, long long coeffRange) {
    for (;;) {
        Polynomial p = rand_poly(rng, maxDeg, coeffRange);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunc rand_ratfun(Rng& rng, int maxDeg = 4, long long coeffRange = 10) {
    return RationalFunc(rand_poly(rng, maxDeg, coeffRange), rand_nonzero_poly(rng, maxDeg, coeffRange));
}

inline EventualSeq rand_seq(Rng& rng, unsigned maxModulus = 4, int maxDeg = 4,
                            long long coeffRange = 10) {
    unsigned m = static_cast<unsigned>(rand_int(rng, 1, maxModulus));
    std::vector<RationalFunc> branches;
    for (unsigned r = 0; r < m; ++r) branches.push_back(rand_ratfun(rng, maxDeg, coeffRange));
    EventualSeq s = EventualSeq::masked(m, std::move(branches));
    if (rand_int(rng, 0, 1)) {
        EventualSeq::PatchMap patches;
        int k = static_cast<int>(rand_int(rng, 1, 3));
        for (int i = 0; i < k; ++i)
            patches[Integer(rand_int(rng, 1, 30))] = rand_rational(rng);
        s = s.with_patches(patches);
    }
    return s;
}

/// A random sequence with a finite, branch-agreeing limit: constant + decaying parts.
inline EventualSeq rand_convergent_seq(Rng& rng, unsigned maxModulus = 3) {
    Rational limit = rand_rational(rng);
    unsigned m = static_cast<unsigned>(rand_int(rng, 1, maxModulus));
    std::vector<RationalFunc> branches;
    for (unsigned r = 0; r < m; ++r) {
        // limit + p(n)/q(n) with deg p < deg q
        Polynomial den = rand_nonzero_poly(rng, 3, 9);
        std::vector<Rational> dc{Rational(0)};
        dc.insert(dc.end(), den.coeffs().begin(), den.coeffs().end());
        Polynomial bigDen{std::move(dc)}; // n * den, degree strictly above num
        Polynomial num = rand_poly(rng, den.degree(), 9);
        branches.push_back(RationalFunc::constant(limit) + RationalFunc(num, bigDen));
    }
    return EventualSeq::masked(m, std::move(branches));
}

// ---- independent symbolic oracles -----------------------------------------

/// Power-rule derivative of a polynomial.
inline Polynomial poly_derivative(const Polynomial& p) {
    std::vector<Rational> c;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        c.push_back(p.coeffs()[i] * Rational(i));
    return Polynomial(std::move(c));
}

/// Antiderivative with zero constant term.
inline Polynomial poly_antiderivative(const Polynomial& p) {
    std::vector<Rational> c{Rational(0)};
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        c.push_back(p.coeffs()[i] / Rational(i + 1));
    return Polynomial(std::move(c));
}

/// Brute-force sum_{i=1..n} i^k.
inline Rational brute_power_sum(unsigned k, unsigned n) {
    Rational acc(0);
    for (unsigned i = 1; i <= n; ++i) {
        Rational t(1);
        for (unsigned j = 0; j < k; ++j) t *= Rational(i);
        acc += t;
    }
    return acc;
}

/// FuncExpr for a polynomial, built as a sum of monomial AST nodes.
inline ExprPtr expr_from_poly(const Polynomial& p) {
    SourceSpan span{0, 0};
    ExprPtr x = FuncExpr::variable("x", span);
    ExprPtr acc;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0 && !(p.is_zero() && i == 0)) continue;
        ExprPtr term = FuncExpr::constant(p.coeffs()[i], span);
        if (i > 0)
            term = FuncExpr::binary(FuncExpr::Kind::Mul, term,
                                    FuncExpr::pow(x, static_cast<unsigned>(i), span), span);
        acc = acc ? FuncExpr::binary(FuncExpr::Kind::Add, acc, term, span) : term;
    }
    if (!acc) acc = FuncExpr::constant(Rational(0), span);
    return acc;
}

/// Lagrange interpolation through exact points (xs distinct).
inline Polynomial lagrange_interpolate(const std::vector<Rational>& xs,
                                       const std::vector<Rational>& ys) {
    Polynomial acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * Polynomial{-xs[j], Rational(1)};
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

} // namespace hyperseq::testing

#endif
