#include "hyperseq/ultralab.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace hyperseq {

void FilterScene::validate() const {
    if (universeSize == 0) throw SceneFormatError("universe size must be positive");

    std::vector<bool> seen(universeSize + 1, false);
    for (const auto& cell : partition) {
        if (cell.empty()) throw SceneFormatError("empty partition cell");
        for (unsigned i : cell) {
            if (i < 1 || i > universeSize) throw SceneFormatError("cell element outside universe");
            if (seen[i]) throw SceneFormatError("partition cells overlap");
            seen[i] = true;
        }
    }
    if (!partition.empty())
        for (unsigned i = 1; i <= universeSize; ++i)
            if (!seen[i]) throw SceneFormatError("partition does not cover the universe");

    if (!chain.empty()) {
        for (unsigned i : chain.front())
            if (i < 1 || i > universeSize) throw SceneFormatError("chain element outside universe");
        if (chain.front().size() != universeSize)
            throw ChainNotDecreasing(); // X1 must be the whole universe
        for (std::size_t k = 1; k < chain.size(); ++k)
            if (!std::includes(chain[k - 1].begin(), chain[k - 1].end(), chain[k].begin(),
                               chain[k].end()))
                throw ChainNotDecreasing();
    }
}

FilterScene FilterScene::parse(std::istream& in) {
    FilterScene scene;
    bool inChain = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "universe") {
            if (!(ls >> scene.universeSize)) throw SceneFormatError("universe needs a size");
            inChain = false;
        } else if (head == "cell") {
            IndexSet cell;
            unsigned v;
            while (ls >> v) cell.insert(v);
            scene.partition.push_back(std::move(cell));
            inChain = false;
        } else if (head == "chain") {
            inChain = true;
        } else if (inChain) {
            IndexSet xs;
            unsigned v;
            std::istringstream again(line);
            while (again >> v) xs.insert(v);
            if (xs.empty()) throw SceneFormatError("empty chain line");
            scene.chain.push_back(std::move(xs));
        } else {
            throw SceneFormatError("unrecognized scene line: " + line);
        }
    }
    scene.validate();
    return scene;
}

bool check_pseudo_intersection(const FilterScene& scene, const IndexSet& candidate,
                               unsigned bound) {
    for (unsigned i : candidate)
        if (i < 1 || i > scene.universeSize) throw CandidateOutOfUniverse();
    for (const auto& cell : scene.partition) {
        std::size_t hits = 0;
        for (unsigned i : candidate) hits += cell.count(i);
        if (hits > bound) return false;
    }
    return true;
}

IndexSet greedy_pseudo_intersection(const FilterScene& scene) {
    IndexSet out;
    for (const auto& cell : scene.partition)
        if (!cell.empty()) out.insert(*cell.begin());
    return out;
}

SeqTable build_diagonal_sequence(const FilterScene& scene) {
    if (scene.chain.empty()) throw SceneFormatError("scene has no chain");
    scene.validate();

    SeqTable f;
    // f(i) = 1/n for i in X_n \ X_{n+1}, with X_{d+1} = empty
    for (std::size_t n = 0; n < scene.chain.size(); ++n) {
        const IndexSet* next = n + 1 < scene.chain.size() ? &scene.chain[n + 1] : nullptr;
        for (unsigned i : scene.chain[n])
            if (!next || !next->count(i)) f[i] = Rational(1, static_cast<long long>(n + 1));
    }
    return f;
}

Rational oscillation_on(const SeqTable& table, const IndexSet& subset, unsigned fromIndex) {
    Rational lo, hi;
    bool any = false;
    for (unsigned i : subset) {
        if (i < fromIndex) continue;
        auto it = table.find(i);
        if (it == table.end()) continue;
        if (!any) {
            lo = hi = it->second;
            any = true;
        } else {
            lo = std::min(lo, it->second);
            hi = std::max(hi, it->second);
        }
    }
    return any ? Rational(hi - lo) : Rational(0);
}

} // namespace hyperseq
