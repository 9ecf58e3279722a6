#include "hyperseq/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace hyperseq {

const Rational& Polynomial::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    auto c = coeffs_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    auto v = coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator/(const Rational& c) const {
    assert(c != 0);
    auto v = coeffs_;
    for (auto& x : v) x /= c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc = constant(Rational(1));
    Polynomial base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + constant(*it);
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    assert(!d.is_zero());
    Polynomial r = *this;
    std::vector<Rational> q(r.coeffs_.size(), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        Rational f = r.leading() / d.leading();
        q[shift] = f;
        std::vector<Rational> sub(shift, Rational(0));
        sub.insert(sub.end(), d.coeffs_.begin(), d.coeffs_.end());
        for (auto& x : sub) x *= f;
        r = r - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(q)), std::move(r)};
}

namespace {

// Integer-coefficient workhorse for gcd: rational remainder sequences spend
// most of their time normalizing fractions, so the Euclidean loop runs on
// primitive integer polynomials with pseudo-remainders instead.
using ZPoly = std::vector<Integer>; // lowest degree first, no trailing zeros

void trim_z(ZPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(ZPoly& v) {
    Integer g = 0;
    for (const Integer& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Integer& x : v) x /= g;
}

ZPoly to_primitive_z(const Polynomial& p) {
    Integer scale = 1;
    for (const auto& c : p.coeffs()) scale = boost::multiprecision::lcm(scale, denominator(c));
    ZPoly v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(numerator(c) * (scale / denominator(c)));
    trim_z(v);
    make_primitive(v);
    return v;
}

// lc(b)^k * a mod b over the integers.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        Integer lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (Integer& x : a) x *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
        trim_z(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    if (a.is_zero()) return b.is_zero() ? b : b / b.leading();
    if (b.is_zero()) return a / a.leading();
    ZPoly x = to_primitive_z(a);
    ZPoly y = to_primitive_z(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = pseudo_rem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> c;
    c.reserve(x.size());
    const Integer& lead = x.back();
    for (const Integer& v : x) c.emplace_back(Rational(v) / Rational(lead));
    return Polynomial(std::move(c));
}

Integer Polynomial::sign_stable_bound() const {
    if (coeffs_.size() <= 1) return 1;
    Rational mx(0);
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) mx = std::max(mx, hyperseq::abs(coeffs_[i]));
    Rational bound = Rational(1) + mx / hyperseq::abs(leading());
    Integer b = ceil_int(bound);
    return b < 1 ? Integer(1) : b;
}

std::vector<Integer> Polynomial::positive_integer_roots(const Integer& from) const {
    std::vector<Integer> roots;
    if (is_zero() || is_constant()) return roots;
    Integer lo = std::max(Integer(1), from);
    Integer hi = sign_stable_bound();
    if (lo > hi) return roots;

    // Clear denominators; integer roots of the result divide its lowest
    // nonzero coefficient (the x^k factor contributes only the root 0).
    Integer scale = 1;
    for (const auto& c : coeffs_) scale = boost::multiprecision::lcm(scale, denominator(c));
    std::vector<Integer> ic;
    ic.reserve(coeffs_.size());
    for (const auto& c : coeffs_) ic.push_back(numerator(c) * (scale / denominator(c)));
    std::size_t k = 0;
    while (ic[k] == 0) ++k;
    Integer c0 = ic[k] < 0 ? Integer(-ic[k]) : ic[k];

    auto horner = [&](const Integer& n) {
        Integer acc = 0;
        for (std::size_t i = ic.size(); i-- > k;) acc = acc * n + ic[i];
        return acc;
    };
    std::vector<Integer> candidates;
    for (Integer d = 1; d <= hi && d * d <= c0; ++d) {
        if (c0 % d != 0) continue;
        candidates.push_back(d);
        Integer e = c0 / d;
        if (e != d && e <= hi) candidates.push_back(e);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const Integer& n : candidates)
        if (n >= lo && horner(n) == 0) roots.push_back(n);
    return roots;
}

} // namespace hyperseq
