#ifndef HYPERSEQ_SHADOW_HPP
#define HYPERSEQ_SHADOW_HPP

#include "hyperseq/seqcore.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hyperseq {

struct PreconditionViolation : std::invalid_argument {
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidBounds : std::invalid_argument {
    InvalidBounds() : std::invalid_argument("bisection requires lo < hi") {}
};

struct ToleranceNotPositive : std::invalid_argument {
    ToleranceNotPositive() : std::invalid_argument("tolerance must be positive") {}
};

enum class ShadowVerdict { Exact, Enclosure, Divergent, NotCauchy };

/// Result of taking the standard part of a sequence: an exact rational limit,
/// a certified enclosing interval, or a verdict explaining why none exists.
struct ShadowResult {
    ShadowVerdict verdict;
    Rational value;      // Exact
    Rational lo, hi;     // Enclosure
    std::vector<BranchLimit> branchLimits; // witness, when derived from a class member

    static ShadowResult exact(Rational v) {
        return {ShadowVerdict::Exact, std::move(v), {}, {}, {}};
    }
    static ShadowResult enclosure(Rational lo, Rational hi) {
        return {ShadowVerdict::Enclosure, {}, std::move(lo), std::move(hi), {}};
    }
    static ShadowResult divergent() { return {ShadowVerdict::Divergent, {}, {}, {}, {}}; }
    static ShadowResult not_cauchy() { return {ShadowVerdict::NotCauchy, {}, {}, {}, {}}; }

    bool operator==(const ShadowResult& o) const {
        if (verdict != o.verdict) return false;
        if (verdict == ShadowVerdict::Exact) return value == o.value;
        if (verdict == ShadowVerdict::Enclosure) return lo == o.lo && hi == o.hi;
        return true;
    }

    /// Human form: "exact p/q", "enclosure [p/q, p/q]", "divergent", "not-cauchy".
    std::string to_text() const;
    /// Machine form for batch mode: "verdict=exact value=p/q" etc.
    std::string to_key_value() const;
};

/// True iff every branch converges and all branch limits agree.
bool is_convergent(const EventualSeq& s);

/// The standard-part map: Exact(limit) for convergent sequences, Divergent
/// when some branch is unbounded, NotCauchy for bounded disagreement.
ShadowResult shadow_exact(const EventualSeq& s);

/// True iff u and v coincide on a cofinite set (branchwise eventual equality).
/// Strictly stronger than having equal shadows.
bool refined_equivalent(const EventualSeq& u, const EventualSeq& v);

/// Checks sh(a+b) = sh(a)+sh(b) and sh(a*b) = sh(a)*sh(b) exactly.
/// Throws PreconditionViolation unless both inputs are convergent.
bool epimorphism_check(const EventualSeq& a, const EventualSeq& b);

using IndexEvaluator = std::function<Rational(const Integer&)>;

/// Default horizon schedule: powers of two up to 2^16.
std::vector<Integer> default_horizon_schedule();

/// Nested-interval shadow extraction over an arbitrary index evaluator.
/// Repeatedly bisects [lo, hi], keeping the half that contains the evaluator's
/// values at all sampled indices beyond the current horizon (advancing the
/// horizon through the schedule when the samples straddle the midpoint; a value
/// equal to the midpoint counts as the lower half). Stops at width <= tol with
/// an Enclosure; returns NotCauchy when the tail keeps hitting both halves at
/// every available horizon.
ShadowResult bisection_shadow(const IndexEvaluator& eval, const Rational& lo, const Rational& hi,
                              const Rational& tol,
                              const std::vector<Integer>& horizonSchedule = default_horizon_schedule());

} // namespace hyperseq

#endif
