#include "hyperseq/calculus.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hyperseq {

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

const Rational& BernoulliTable::get(unsigned k) {
    std::scoped_lock lock(mu_);
    while (values_.size() <= k) {
        unsigned m = static_cast<unsigned>(values_.size());
        // sum_{j=0..m} C(m+1,j) B_j = m+1  (B1 = +1/2 convention)
        Rational acc(m + 1);
        for (unsigned j = 0; j < m; ++j) acc -= Rational(binomial(m + 1, j)) * values_[j];
        values_.push_back(acc / Rational(m + 1));
    }
    return values_[k];
}

BernoulliTable& BernoulliTable::shared() {
    static BernoulliTable table;
    return table;
}

Polynomial power_sum(unsigned k, unsigned bound) {
    if (k > bound) throw DegreeBoundExceeded();
    BernoulliTable& B = BernoulliTable::shared();
    std::vector<Rational> coeffs(k + 2, Rational(0));
    for (unsigned j = 0; j <= k; ++j) {
        // coefficient of n^{k+1-j}
        coeffs[k + 1 - j] = Rational(binomial(k + 1, j)) * B.get(j) / Rational(k + 1);
    }
    return Polynomial(std::move(coeffs));
}

EventualSeq extend(const ExprPtr& f, const EventualSeq& s) {
    const RationalFunc& rf = f->canonical();
    std::vector<RationalFunc> branches;
    branches.reserve(s.modulus());
    for (const auto& b : s.branches()) branches.push_back(rf.compose(b));

    EventualSeq::PatchMap mapped;
    for (const auto& [i, v] : s.patches()) {
        auto fv = rf.eval(v);
        mapped.emplace(i, fv ? *fv : Rational(0));
    }
    return EventualSeq::masked(s.modulus(), std::move(branches), s.start_index())
        .with_patches(mapped);
}

DerivativeDetail derivative_detail(const ExprPtr& f, const Rational& x0) {
    const RationalFunc& rf = f->canonical();
    if (rf.den().eval(x0) == 0) throw PoleAtPoint();

    EventualSeq eps = make_ratfun({Rational(1)}, {Rational(0), Rational(1)}); // 1/n
    EventualSeq shifted = EventualSeq::constant(x0) + eps;                    // x0 + 1/n
    EventualSeq quotient = (extend(f, shifted) - extend(f, EventualSeq::constant(x0))) / eps;

    ShadowResult sh = shadow_exact(quotient);
    // For rational f off its poles the difference quotient is a convergent
    // rational function of n, so the shadow is always exact.
    assert(sh.verdict == ShadowVerdict::Exact);
    if (sh.verdict != ShadowVerdict::Exact)
        throw std::logic_error("difference quotient did not converge");
    return {std::move(quotient), std::move(sh.value)};
}

Rational derivative(const ExprPtr& f, const Rational& x0) {
    return derivative_detail(f, x0).value;
}

IntegralDetail integral_detail(const ExprPtr& f, const Rational& a, const Rational& b) {
    const RationalFunc& rf = f->canonical();
    if (!rf.den().is_constant()) throw NonPolynomialIntegrand();
    if (a > b) throw InvalidInterval();

    // p(x) with rational coefficients
    Polynomial p = rf.num() / rf.den().leading();
    Rational width = b - a;

    // sum_{i=1..n} p(a + i*width/n) * width/n
    //   = sum_j coef_j * width^{j+1} * P_j(n) / n^{j+1},
    //   coef_j = sum_{k>=j} c_k C(k,j) a^{k-j}
    RationalFunc total;
    unsigned deg = p.is_zero() ? 0 : static_cast<unsigned>(p.degree());
    Rational widthPow = width;
    for (unsigned j = 0; j <= deg; ++j) {
        Rational coef(0);
        Rational apow(1);
        for (unsigned k = j; k <= deg; ++k) {
            coef += p.coeff(k) * Rational(binomial(k, j)) * apow;
            apow *= a;
        }
        if (coef != 0) {
            std::vector<Rational> denCoeffs(j + 2, Rational(0));
            denCoeffs[j + 1] = 1; // n^{j+1}
            total = total + RationalFunc(power_sum(j) * (coef * widthPow),
                                         Polynomial(std::move(denCoeffs)));
        }
        widthPow *= width;
    }

    BranchLimit lim = total.limit_at_infinity();
    assert(lim.kind == LimitKind::Finite);
    return {std::move(total), std::move(lim.value)};
}

Rational integral(const ExprPtr& f, const Rational& a, const Rational& b) {
    return integral_detail(f, a, b).value;
}

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

double eval_double(const RationalFunc& rf, double x) {
    auto horner = [x](const Polynomial& p) {
        double acc = 0;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = acc * x + it->convert_to<double>();
        return acc;
    };
    return horner(rf.num()) / horner(rf.den());
}

/// All divisors of |z| (trial division; z is expected to be modest).
std::vector<Integer> divisors(Integer z) {
    if (z < 0) z = -z;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= z; ++d) {
        if (z % d == 0) {
            out.push_back(d);
            out.push_back(z / d);
        }
    }
    return out;
}

/// Rational roots of p (nonzero, nonconstant) via the rational root theorem.
std::vector<Rational> rational_roots(const Polynomial& p) {
    // clear denominators to an integer polynomial
    Integer lcmDen = 1;
    for (const auto& c : p.coeffs()) lcmDen = boost::multiprecision::lcm(lcmDen, denominator(c));
    std::vector<Integer> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ic.push_back(numerator(c * Rational(lcmDen)));
    std::size_t lowest = 0;
    while (lowest < ic.size() && ic[lowest] == 0) ++lowest;

    std::vector<Rational> roots;
    if (lowest > 0) roots.push_back(Rational(0));
    if (lowest + 1 >= ic.size()) return roots;

    for (const Integer& pnum : divisors(ic[lowest]))
        for (const Integer& qden : divisors(ic.back())) {
            for (int s : {1, -1}) {
                Rational cand(pnum * s, qden);
                if (p.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    return roots;
}

} // namespace

ShadowResult numeric_shadow(const ExprPtr& f, const Rational& a, const Rational& b,
                            const Rational& tol) {
    if (a > b) throw InvalidInterval();
    if (tol <= 0) throw ToleranceNotPositive();
    const RationalFunc& rf = f->canonical();

    const Polynomial& den = rf.den();
    if (den.eval(a) == 0 || den.eval(b) == 0) throw PoleInInterval();
    if (sign(den.eval(a)) != sign(den.eval(b))) throw PoleInInterval();
    if (!den.is_constant())
        for (const Rational& r : rational_roots(den))
            if (a <= r && r <= b) throw PoleInInterval();

    double av = to_double(a);
    double wv = to_double(b - a);
    double tolv = to_double(tol);

    bool havePrev = false;
    double prev = 0;
    for (long n = 16; n <= (1L << 20); n *= 2) {
        double h = wv / static_cast<double>(n);
        double sum = 0;
        for (long i = 1; i <= n; ++i) sum += eval_double(rf, av + h * static_cast<double>(i));
        sum *= h;
        if (havePrev && std::fabs(sum - prev) < tolv / 2) {
            Rational center(sum);
            return ShadowResult::enclosure(center - tol / 2, center + tol / 2);
        }
        prev = sum;
        havePrev = true;
    }
    throw NoConvergenceWithinBudget();
}

} // namespace hyperseq
