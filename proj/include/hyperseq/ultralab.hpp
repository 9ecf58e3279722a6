#ifndef HYPERSEQ_ULTRALAB_HPP
#define HYPERSEQ_ULTRALAB_HPP

#include "hyperseq/rational.hpp"

#include <iosfwd>
#include <map>
#include <set>
#include <vector>

namespace hyperseq {

struct CandidateOutOfUniverse : std::invalid_argument {
    CandidateOutOfUniverse() : std::invalid_argument("candidate set leaves the universe") {}
};

struct ChainNotDecreasing : std::invalid_argument {
    ChainNotDecreasing() : std::invalid_argument("chain sets must be inclusion-decreasing") {}
};

struct SceneFormatError : std::invalid_argument {
    explicit SceneFormatError(const std::string& what) : std::invalid_argument(what) {}
};

using IndexSet = std::set<unsigned>;

/// Finite-universe partition/chain structures for filter combinatorics:
/// the universe {1..N}, a partition into disjoint cells, and an optional
/// inclusion-decreasing chain X1 = {1..N} >= X2 >= ... >= Xd.
struct FilterScene {
    unsigned universeSize = 0;
    std::vector<IndexSet> partition;
    std::vector<IndexSet> chain;

    /// Validates the invariants; throws SceneFormatError / ChainNotDecreasing.
    void validate() const;

    static FilterScene parse(std::istream& in);
};

/// Finite truncation of a sequence: a total map {1..N} -> rational.
using SeqTable = std::map<unsigned, Rational>;

/// True iff |candidate ∩ C| <= bound for every partition cell C.
bool check_pseudo_intersection(const FilterScene& scene, const IndexSet& candidate,
                               unsigned bound);

/// One representative per cell (the least element); always passes
/// check_pseudo_intersection with bound 1.
IndexSet greedy_pseudo_intersection(const FilterScene& scene);

/// The diagonal sequence of the chain: f(i) = 1/n for the unique n with
/// i in X_n \ X_{n+1} (X_{d+1} = empty). Throws ChainNotDecreasing.
SeqTable build_diagonal_sequence(const FilterScene& scene);

/// max |f(i) - f(j)| over i, j in subset with i, j >= fromIndex;
/// 0 when fewer than two such indices remain.
Rational oscillation_on(const SeqTable& table, const IndexSet& subset, unsigned fromIndex);

} // namespace hyperseq

#endif
