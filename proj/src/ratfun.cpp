#include "hyperseq/ratfun.hpp"

namespace hyperseq {

RationalFunc::RationalFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominatorPolynomial();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_ / lead;
        den_ = den_ / lead;
    }
}

RationalFunc RationalFunc::reduced(Polynomial num, Polynomial den) {
    RationalFunc r;
    if (num.is_zero()) return r;
    Rational lead = den.leading();
    if (lead != 1) {
        num = num / lead;
        den = den / lead;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RationalFunc RationalFunc::operator-() const { return reduced(-num_, den_); }

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    // Cancel the common denominator factor up front; any factor the sum shares
    // with the combined denominator divides g, so the final gcd stays small.
    Polynomial g = Polynomial::gcd(den_, o.den_);
    Polynomial left = o.den_.divmod(g).first;  // o.den_ / g
    Polynomial right = den_.divmod(g).first;   // den_ / g
    Polynomial num = num_ * left + o.num_ * right;
    Polynomial den = den_ * left;
    if (g.degree() == 0) return reduced(std::move(num), std::move(den));
    return RationalFunc(std::move(num), std::move(den));
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    // Coprime inputs cross-cancelled this way multiply to a coprime result.
    Polynomial g1 = Polynomial::gcd(num_, o.den_);
    Polynomial g2 = Polynomial::gcd(o.num_, den_);
    return reduced(num_.divmod(g1).first * o.num_.divmod(g2).first,
                   den_.divmod(g2).first * o.den_.divmod(g1).first);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    if (o.is_zero()) throw EventuallyZeroDivisor();
    Polynomial g1 = Polynomial::gcd(num_, o.num_);
    Polynomial g2 = Polynomial::gcd(o.den_, den_);
    return reduced(num_.divmod(g1).first * o.den_.divmod(g2).first,
                   den_.divmod(g2).first * o.num_.divmod(g1).first);
}

std::optional<Rational> RationalFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

RationalFunc RationalFunc::compose(const RationalFunc& inner) const {
    // num(A/B)/den(A/B), cleared by B^max(deg num, deg den).
    const Polynomial& a = inner.num();
    const Polynomial& b = inner.den();
    int d = std::max(num_.degree(), den_.degree());
    if (d < 0) d = 0;
    auto clear = [&](const Polynomial& p) {
        Polynomial acc;
        for (int i = 0; i <= d; ++i) {
            Rational c = p.coeff(static_cast<std::size_t>(i));
            if (c == 0) continue;
            acc = acc + a.pow(static_cast<unsigned>(i)) *
                            b.pow(static_cast<unsigned>(d - i)) * c;
        }
        return acc;
    };
    Polynomial newDen = clear(den_);
    if (newDen.is_zero()) throw EventuallyZeroDivisor();
    return RationalFunc(clear(num_), std::move(newDen));
}

int RationalFunc::eventual_sign() const {
    if (num_.is_zero()) return 0;
    return sign(num_.leading()) * sign(den_.leading());
}

BranchLimit RationalFunc::limit_at_infinity() const {
    int dn = num_.degree();
    int dd = den_.degree();
    if (dn < dd) return {LimitKind::Finite, Rational(0)};
    if (dn == dd) return {LimitKind::Finite, num_.leading() / den_.leading()};
    int s = sign(num_.leading()) * sign(den_.leading());
    return {s > 0 ? LimitKind::PlusInfinity : LimitKind::MinusInfinity, Rational(0)};
}

Integer RationalFunc::sign_stable_bound() const {
    return std::max(num_.sign_stable_bound(), den_.sign_stable_bound());
}

} // namespace hyperseq
