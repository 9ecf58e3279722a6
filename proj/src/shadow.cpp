#include "hyperseq/shadow.hpp"

namespace hyperseq {

std::string ShadowResult::to_text() const {
    switch (verdict) {
        case ShadowVerdict::Exact: return "exact " + format_rational(value);
        case ShadowVerdict::Enclosure:
            return "enclosure [" + format_rational(lo) + ", " + format_rational(hi) + "]";
        case ShadowVerdict::Divergent: return "divergent";
        case ShadowVerdict::NotCauchy: return "not-cauchy";
    }
    return "?";
}

std::string ShadowResult::to_key_value() const {
    switch (verdict) {
        case ShadowVerdict::Exact: return "verdict=exact value=" + format_rational(value);
        case ShadowVerdict::Enclosure:
            return "verdict=enclosure lo=" + format_rational(lo) + " hi=" + format_rational(hi);
        case ShadowVerdict::Divergent: return "verdict=divergent";
        case ShadowVerdict::NotCauchy: return "verdict=not-cauchy";
    }
    return "?";
}

bool is_convergent(const EventualSeq& s) {
    return shadow_exact(s).verdict == ShadowVerdict::Exact;
}

ShadowResult shadow_exact(const EventualSeq& s) {
    std::vector<BranchLimit> limits;
    limits.reserve(s.modulus());
    bool anyInfinite = false;
    bool allEqual = true;
    for (const auto& f : s.branches()) {
        limits.push_back(f.limit_at_infinity());
        if (limits.back().kind != LimitKind::Finite) anyInfinite = true;
        if (!(limits.back() == limits.front())) allEqual = false;
    }
    ShadowResult r = anyInfinite ? ShadowResult::divergent()
                    : allEqual   ? ShadowResult::exact(limits.front().value)
                                 : ShadowResult::not_cauchy();
    r.branchLimits = std::move(limits);
    return r;
}

bool refined_equivalent(const EventualSeq& u, const EventualSeq& v) {
    EventualSeq d = u - v;
    for (const auto& f : d.branches())
        if (!f.is_zero()) return false;
    return true;
}

bool epimorphism_check(const EventualSeq& a, const EventualSeq& b) {
    ShadowResult sa = shadow_exact(a);
    ShadowResult sb = shadow_exact(b);
    if (sa.verdict != ShadowVerdict::Exact || sb.verdict != ShadowVerdict::Exact)
        throw PreconditionViolation("epimorphism_check requires convergent inputs");
    ShadowResult sum = shadow_exact(a + b);
    ShadowResult prod = shadow_exact(a * b);
    return sum.verdict == ShadowVerdict::Exact && sum.value == sa.value + sb.value &&
           prod.verdict == ShadowVerdict::Exact && prod.value == sa.value * sb.value;
}

std::vector<Integer> default_horizon_schedule() {
    std::vector<Integer> s;
    for (Integer h = 1; h <= 65536; h *= 2) s.push_back(h);
    return s;
}

ShadowResult bisection_shadow(const IndexEvaluator& eval, const Rational& lo, const Rational& hi,
                              const Rational& tol, const std::vector<Integer>& horizonSchedule) {
    if (lo >= hi) throw InvalidBounds();
    if (tol <= 0) throw ToleranceNotPositive();
    if (horizonSchedule.empty()) throw PreconditionViolation("empty horizon schedule");

    constexpr int kWindow = 24;

    // Sampled indices beyond a horizon: every later schedule point, plus a
    // short window at the deepest one.
    std::vector<Rational> values;
    for (const Integer& h : horizonSchedule) values.push_back(eval(h));
    std::vector<Rational> deepWindow;
    for (int k = 1; k <= kWindow; ++k) deepWindow.push_back(eval(horizonSchedule.back() + k));

    Rational l = lo, h = hi;
    std::size_t horizon = 0;

    while (h - l > tol) {
        Rational mid = (l + h) / 2;
        bool lower = false, upper = false;
        Rational sampleMin, sampleMax;
        for (;;) {
            lower = upper = false;
            bool first = true;
            auto classify = [&](const Rational& v) {
                (v <= mid ? lower : upper) = true; // midpoint ties go to the lower half
                if (first) {
                    sampleMin = sampleMax = v;
                    first = false;
                } else {
                    sampleMin = std::min(sampleMin, v);
                    sampleMax = std::max(sampleMax, v);
                }
            };
            for (std::size_t j = horizon; j < values.size(); ++j) classify(values[j]);
            for (const Rational& v : deepWindow) classify(v);
            if (lower && upper && horizon + 1 < horizonSchedule.size()) {
                ++horizon; // tail still straddles the midpoint, look farther out
                continue;
            }
            break;
        }
        if (lower && upper) {
            // Margin tie-break: a tail clustered tightly around the midpoint is
            // kept whole by shrinking to the middle half instead of choosing.
            Rational quarter = (h - l) / 4;
            if (mid - sampleMin <= quarter && sampleMax - mid <= quarter) {
                l = mid - quarter;
                h = mid + quarter;
                continue;
            }
            return ShadowResult::not_cauchy();
        }
        if (lower)
            h = mid;
        else
            l = mid;
    }
    return ShadowResult::enclosure(l, h);
}

} // namespace hyperseq
