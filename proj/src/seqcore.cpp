#include "hyperseq/seqcore.hpp"

#include <cassert>
#include <numeric>

namespace hyperseq {

EventualSeq EventualSeq::build(unsigned modulus, std::vector<RationalFunc> branches,
                               PatchMap patches, Integer startIndex, bool autoPatch) {
    assert(modulus >= 1 && branches.size() == modulus);
    if (startIndex < 1) startIndex = 1;

    // Minimal modulus: smallest divisor d with branches periodic of period d.
    unsigned d = modulus;
    for (unsigned cand = 1; cand < modulus; ++cand) {
        if (modulus % cand != 0) continue;
        bool periodic = true;
        for (unsigned r = cand; r < modulus && periodic; ++r)
            periodic = branches[r] == branches[r % cand];
        if (periodic) {
            d = cand;
            break;
        }
    }
    branches.resize(d);

    std::erase_if(patches, [&](const auto& kv) { return kv.first < startIndex; });

    if (autoPatch) {
        // Totalize at denominator roots: value 0 unless a patch already overrides.
        for (unsigned r = 0; r < d; ++r)
            for (const Integer& n : branches[r].den().positive_integer_roots(startIndex))
                if (static_cast<unsigned>(n % d) == r) patches.emplace(n, Rational(0));
    }

    std::erase_if(patches, [&](const auto& kv) {
        auto v = branches[static_cast<std::size_t>(kv.first % d)].eval(Rational(kv.first));
        return v && *v == kv.second;
    });

    EventualSeq s;
    s.modulus_ = d;
    s.branches_ = std::move(branches);
    s.patches_ = std::move(patches);
    s.startIndex_ = std::move(startIndex);
    return s;
}

EventualSeq EventualSeq::from_ratfun(RationalFunc f, Integer startIndex) {
    return build(1, {std::move(f)}, {}, std::move(startIndex), true);
}

EventualSeq EventualSeq::masked(unsigned modulus, std::vector<RationalFunc> branches,
                                Integer startIndex) {
    if (modulus == 0 || branches.size() != modulus) throw BranchCountMismatch();
    return build(modulus, std::move(branches), {}, std::move(startIndex), true);
}

Rational EventualSeq::eval_at(const Integer& n) const {
    assert(n >= startIndex_);
    if (auto it = patches_.find(n); it != patches_.end()) return it->second;
    auto v = branch_for(n).eval(Rational(n));
    return v ? *v : Rational(0);
}

EventualSeq EventualSeq::with_patches(const PatchMap& extra) const {
    PatchMap merged = patches_;
    for (const auto& [k, v] : extra) merged[k] = v;
    return build(modulus_, branches_, std::move(merged), startIndex_, true);
}

EventualSeq EventualSeq::without_patches() const {
    return build(modulus_, branches_, {}, 1, false);
}

EventualSeq EventualSeq::operator-() const {
    std::vector<RationalFunc> b;
    b.reserve(modulus_);
    for (const auto& f : branches_) b.push_back(-f);
    PatchMap p;
    for (const auto& [k, v] : patches_) p.emplace(k, -v);
    return build(modulus_, std::move(b), std::move(p), startIndex_, true);
}

namespace {
enum class PointOp { Add, Sub, Mul, Div };

RationalFunc apply_branch(PointOp op, const RationalFunc& a, const RationalFunc& b) {
    switch (op) {
        case PointOp::Add: return a + b;
        case PointOp::Sub: return a - b;
        case PointOp::Mul: return a * b;
        case PointOp::Div: return a / b;
    }
    return {};
}

Rational apply_value(PointOp op, const Rational& a, const Rational& b) {
    switch (op) {
        case PointOp::Add: return a + b;
        case PointOp::Sub: return a - b;
        case PointOp::Mul: return a * b;
        case PointOp::Div: return b == 0 ? Rational(0) : Rational(a / b);
    }
    return {};
}
} // namespace

namespace {

EventualSeq combine(const EventualSeq& a, const EventualSeq& b, PointOp op) {
    unsigned m = std::lcm(a.modulus(), b.modulus());
    Integer start = std::max(a.start_index(), b.start_index());

    std::vector<RationalFunc> branches;
    branches.reserve(m);
    for (unsigned r = 0; r < m; ++r) {
        const RationalFunc& fb = b.branches()[r % b.modulus()];
        if (op == PointOp::Div && fb.is_zero()) throw EventuallyZeroDivisor();
        branches.push_back(apply_branch(op, a.branches()[r % a.modulus()], fb));
    }

    // Indices needing pointwise values: existing patches, plus (for division)
    // the finitely many indices where the divisor vanishes.
    std::vector<Integer> candidates;
    for (const auto& [k, v] : a.patches()) candidates.push_back(k);
    for (const auto& [k, v] : b.patches()) candidates.push_back(k);
    if (op == PointOp::Div)
        for (unsigned r = 0; r < b.modulus(); ++r)
            for (const Integer& n : b.branches()[r].num().positive_integer_roots(start))
                if (static_cast<unsigned>(n % b.modulus()) == r) candidates.push_back(n);

    EventualSeq::PatchMap patches;
    for (const Integer& i : candidates) {
        if (i < start) continue;
        patches.insert_or_assign(i, apply_value(op, a.eval_at(i), b.eval_at(i)));
    }
    return EventualSeq::masked(m, std::move(branches), start).with_patches(patches);
}

} // namespace

EventualSeq EventualSeq::operator+(const EventualSeq& o) const { return combine(*this, o, PointOp::Add); }
EventualSeq EventualSeq::operator-(const EventualSeq& o) const { return combine(*this, o, PointOp::Sub); }
EventualSeq EventualSeq::operator*(const EventualSeq& o) const { return combine(*this, o, PointOp::Mul); }
EventualSeq EventualSeq::operator/(const EventualSeq& o) const { return combine(*this, o, PointOp::Div); }

Integer EventualSeq::stabilization_index() const {
    Integer n0 = startIndex_;
    for (const auto& f : branches_) n0 = std::max(n0, f.sign_stable_bound());
    if (!patches_.empty()) n0 = std::max(n0, Integer(patches_.rbegin()->first + 1));
    return n0;
}

EventualSeq make_ratfun(const std::vector<Rational>& numCoeffs,
                        const std::vector<Rational>& denCoeffs) {
    Polynomial den{std::vector<Rational>(denCoeffs)};
    if (den.is_zero()) throw ZeroDenominatorPolynomial();
    return EventualSeq::from_ratfun(RationalFunc(Polynomial{std::vector<Rational>(numCoeffs)}, std::move(den)));
}

EventualSeq make_masked(unsigned modulus, std::vector<RationalFunc> branches) {
    return EventualSeq::masked(modulus, std::move(branches));
}

Ordering compare(const EventualSeq& a, const EventualSeq& b) {
    EventualSeq d = a - b;
    bool anyNeg = false, anyPos = false, anyZero = false;
    for (const auto& f : d.branches()) {
        int s = f.eventual_sign();
        (s < 0 ? anyNeg : s > 0 ? anyPos : anyZero) = true;
    }
    if (!anyNeg && !anyPos) return Ordering::EQ;
    if (anyNeg && !anyPos && !anyZero) return Ordering::LT;
    if (anyPos && !anyNeg && !anyZero) return Ordering::GT;
    return Ordering::Incomparable;
}

Ordering compare(const HyperNum& a, const HyperNum& b) { return compare(a.rep(), b.rep()); }

Classification classify(const EventualSeq& s) {
    Classification c;
    c.branchLimits.reserve(s.modulus());
    for (const auto& f : s.branches()) c.branchLimits.push_back(f.limit_at_infinity());

    bool allZero = true, allFinite = true, allInfinite = true, allEqual = true;
    const BranchLimit& first = c.branchLimits.front();
    for (const auto& bl : c.branchLimits) {
        if (bl.kind == LimitKind::Finite) {
            allInfinite = false;
            if (bl.value != 0) allZero = false;
        } else {
            allFinite = false;
            allZero = false;
        }
        if (!(bl == first)) allEqual = false;
    }

    if (allZero)
        c.tag = GrowthClass::Infinitesimal;
    else if (allInfinite)
        c.tag = GrowthClass::InfiniteElement;
    else if (allFinite && allEqual)
        c.tag = GrowthClass::Appreciable;
    else if (allFinite)
        c.tag = GrowthClass::FiniteNonConvergent;
    else
        c.tag = GrowthClass::MixedGalaxy;
    return c;
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
        case Ordering::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

const char* to_string(GrowthClass c) {
    switch (c) {
        case GrowthClass::Infinitesimal: return "infinitesimal";
        case GrowthClass::Appreciable: return "appreciable";
        case GrowthClass::InfiniteElement: return "infinite-element";
        case GrowthClass::FiniteNonConvergent: return "finite-non-convergent";
        case GrowthClass::MixedGalaxy: return "mixed-galaxy";
    }
    return "?";
}

} // namespace hyperseq
