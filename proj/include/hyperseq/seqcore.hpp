#ifndef HYPERSEQ_SEQCORE_HPP
#define HYPERSEQ_SEQCORE_HPP

#include "hyperseq/ratfun.hpp"

#include <map>
#include <vector>

namespace hyperseq {

struct BranchCountMismatch : std::invalid_argument {
    BranchCountMismatch() : std::invalid_argument("branch count does not match modulus") {}
};

/// Canonical representative of a total function on {startIndex, startIndex+1, ...}:
/// residue-class branches (branch r gives the value at indices n == r mod modulus),
/// each a rational function of n, plus finitely many index patches.
///
/// Canonical form: every branch reduced, the modulus minimal, and every patch
/// either necessary (the branch denominator vanishes there, value 0 by convention
/// unless overridden) or differing from the branch value. Equal canonical forms
/// represent the same function.
class EventualSeq {
public:
    using PatchMap = std::map<Integer, Rational>;

    /// Single-branch sequence num/den; denominator roots are patched to 0.
    static EventualSeq from_ratfun(RationalFunc f, Integer startIndex = 1);

    /// Sequence with the given residue-class branches.
    /// Throws BranchCountMismatch unless branches.size() == modulus.
    static EventualSeq masked(unsigned modulus, std::vector<RationalFunc> branches,
                              Integer startIndex = 1);

    static EventualSeq constant(const Rational& c) {
        return from_ratfun(RationalFunc::constant(c));
    }

    unsigned modulus() const { return modulus_; }
    const std::vector<RationalFunc>& branches() const { return branches_; }
    const RationalFunc& branch_for(const Integer& n) const {
        return branches_[static_cast<std::size_t>(n % modulus_)];
    }
    const PatchMap& patches() const { return patches_; }
    const Integer& start_index() const { return startIndex_; }

    bool operator==(const EventualSeq& o) const = default;

    /// Exact value at index n >= startIndex (total by construction).
    Rational eval_at(const Integer& n) const;

    /// Copy with the given patches applied on top of the existing ones.
    EventualSeq with_patches(const PatchMap& extra) const;

    /// Copy with every patch removed (only eventual behavior survives; the
    /// result may be partial at denominator roots and is used for HyperNum reps).
    EventualSeq without_patches() const;

    EventualSeq operator-() const;
    EventualSeq operator+(const EventualSeq& o) const;
    EventualSeq operator-(const EventualSeq& o) const;
    EventualSeq operator*(const EventualSeq& o) const;
    /// Pointwise quotient; indices where o vanishes become 0-valued patches.
    /// Throws EventuallyZeroDivisor when some branch of o is the zero function.
    EventualSeq operator/(const EventualSeq& o) const;

    /// N0 such that for all n >= N0 no patch applies and every branch's
    /// numerator and denominator keep a constant sign.
    Integer stabilization_index() const;

private:
    EventualSeq() = default;
    static EventualSeq build(unsigned modulus, std::vector<RationalFunc> branches,
                             PatchMap patches, Integer startIndex, bool autoPatch);

    unsigned modulus_ = 1;
    std::vector<RationalFunc> branches_{RationalFunc()};
    PatchMap patches_;
    Integer startIndex_ = 1;
};

/// Convenience constructors mirroring the CLI literal forms.
EventualSeq make_ratfun(const std::vector<Rational>& numCoeffs,
                        const std::vector<Rational>& denCoeffs);
EventualSeq make_masked(unsigned modulus, std::vector<RationalFunc> branches);

/// Equivalence class of EventualSeq under branchwise eventual equality.
/// The representative is patch-free and canonical, so equality is structural.
class HyperNum {
public:
    HyperNum() : rep_(EventualSeq::constant(Rational(0))) {}
    explicit HyperNum(const EventualSeq& s) : rep_(s.without_patches()) {}

    static HyperNum constant(const Rational& c) { return HyperNum(EventualSeq::constant(c)); }

    const EventualSeq& rep() const { return rep_; }

    bool operator==(const HyperNum& o) const = default;

    HyperNum operator-() const { return HyperNum(-rep_); }
    HyperNum operator+(const HyperNum& o) const { return HyperNum(rep_ + o.rep_); }
    HyperNum operator-(const HyperNum& o) const { return HyperNum(rep_ - o.rep_); }
    HyperNum operator*(const HyperNum& o) const { return HyperNum(rep_ * o.rep_); }
    HyperNum operator/(const HyperNum& o) const { return HyperNum(rep_ / o.rep_); }

private:
    EventualSeq rep_;
};

/// Outcome of the eventual comparison; the order is partial, so incomparable
/// pairs exist (e.g. the two parity indicators).
enum class Ordering { LT, EQ, GT, Incomparable };

/// LT iff every branch of a-b is eventually negative, GT iff eventually
/// positive, EQ iff a-b is the zero sequence, Incomparable otherwise.
Ordering compare(const HyperNum& a, const HyperNum& b);
Ordering compare(const EventualSeq& a, const EventualSeq& b);

enum class GrowthClass {
    Infinitesimal,      // every branch tends to 0
    Appreciable,        // all branch limits finite, equal, nonzero
    InfiniteElement,    // every branch tends to +/- infinity
    FiniteNonConvergent, // bounded, but branch limits disagree
    MixedGalaxy          // finite and infinite branches mixed
};

struct Classification {
    GrowthClass tag;
    std::vector<BranchLimit> branchLimits;
};

Classification classify(const EventualSeq& s);

const char* to_string(Ordering o);
const char* to_string(GrowthClass c);

} // namespace hyperseq

#endif
