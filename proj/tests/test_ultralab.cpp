#include "helpers.hpp"

#include "hyperseq/ultralab.hpp"

#include <doctest.h>
#include <sstream>

using namespace hyperseq;
using namespace hyperseq::testing;

namespace {

FilterScene three_cell_scene() {
    FilterScene s;
    s.universeSize = 12;
    s.partition = {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}};
    s.validate();
    return s;
}

FilterScene depth4_chain_scene() {
    FilterScene s;
    s.universeSize = 8;
    s.chain = {{1, 2, 3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 8}, {5, 6, 7, 8}, {7, 8}};
    s.validate();
    return s;
}

} // namespace

TEST_CASE("pseudo-intersection check") {
    FilterScene s = three_cell_scene();
    CHECK(check_pseudo_intersection(s, {1, 5, 9}, 1));
    CHECK(!check_pseudo_intersection(s, {1, 2, 3, 4}, 1));
    CHECK(check_pseudo_intersection(s, {}, 1));
    CHECK_THROWS_AS(check_pseudo_intersection(s, {13}, 1), CandidateOutOfUniverse);
}

TEST_CASE("diagonal sequence from a chain") {
    SeqTable f = build_diagonal_sequence(depth4_chain_scene());
    // f = (1, 1, 1/2, 1/2, 1/3, 1/3, 1/4, 1/4)
    std::vector<Rational> expected{Rational(1), Rational(1),    Rational(1, 2), Rational(1, 2),
                                   Rational(1, 3), Rational(1, 3), Rational(1, 4), Rational(1, 4)};
    REQUIRE(f.size() == 8);
    for (unsigned i = 1; i <= 8; ++i) CHECK(f.at(i) == expected[i - 1]);

    FilterScene single;
    single.universeSize = 4;
    single.chain = {{1, 2, 3, 4}};
    SeqTable g = build_diagonal_sequence(single);
    for (unsigned i = 1; i <= 4; ++i) CHECK(g.at(i) == 1);

    FilterScene bad;
    bad.universeSize = 4;
    bad.chain = {{1, 2, 3, 4}, {2, 3}, {1, 2}}; // X3 not inside X2
    CHECK_THROWS_AS(build_diagonal_sequence(bad), ChainNotDecreasing);

    FilterScene notWhole;
    notWhole.universeSize = 4;
    notWhole.chain = {{1, 2}};
    CHECK_THROWS_AS(build_diagonal_sequence(notWhole), ChainNotDecreasing);
}

TEST_CASE("oscillation") {
    SeqTable f = build_diagonal_sequence(depth4_chain_scene());
    CHECK(oscillation_on(f, {3, 4, 7}, 1) == Rational(1, 4)); // 1/2 - 1/4
    CHECK(oscillation_on(f, {3}, 1) == 0);
    CHECK(oscillation_on(f, {1, 2, 3, 4, 5, 6, 7, 8}, 7) == 0); // both tails are 1/4
}

TEST_CASE("proof mechanism at finite scale") {
    FilterScene scene = depth4_chain_scene();
    SeqTable f = build_diagonal_sequence(scene);
    // any Y with two indices in X_n \ X_{n+1} and one in X_{n+2} oscillates
    // by at least 1/n - 1/(n+2)
    for (std::size_t n = 1; n + 2 <= scene.chain.size(); ++n) {
        IndexSet stratum;
        for (unsigned i : scene.chain[n - 1])
            if (!scene.chain[n].count(i)) stratum.insert(i);
        REQUIRE(stratum.size() >= 2);
        IndexSet y = stratum;
        y.insert(*scene.chain[n + 1].begin());
        Rational bound = Rational(1, static_cast<long long>(n)) -
                         Rational(1, static_cast<long long>(n + 2));
        CHECK(oscillation_on(f, y, 1) >= bound);
    }
}

TEST_CASE("greedy pseudo-intersection exists for every partition") {
    Rng rng(307);
    for (int trial = 0; trial < 30; ++trial) {
        FilterScene s;
        s.universeSize = 64;
        unsigned cells = static_cast<unsigned>(rand_int(rng, 1, 16));
        s.partition.assign(cells, {});
        for (unsigned i = 1; i <= 64; ++i)
            s.partition[static_cast<std::size_t>(rand_int(rng, 0, cells - 1))].insert(i);
        std::erase_if(s.partition, [](const IndexSet& c) { return c.empty(); });
        s.validate();

        IndexSet greedy = greedy_pseudo_intersection(s);
        CHECK(greedy.size() == s.partition.size());
        CHECK(check_pseudo_intersection(s, greedy, 1));
    }
}

TEST_CASE("bound monotonicity") {
    Rng rng(311);
    FilterScene s = three_cell_scene();
    for (int trial = 0; trial < 20; ++trial) {
        IndexSet candidate;
        for (unsigned i = 1; i <= 12; ++i)
            if (rand_int(rng, 0, 1)) candidate.insert(i);
        for (unsigned b = 1; b < 6; ++b)
            if (check_pseudo_intersection(s, candidate, b))
                CHECK(check_pseudo_intersection(s, candidate, b + 1));
    }
}

TEST_CASE("scene file parsing") {
    std::istringstream in(
        "# demo scene\n"
        "universe 8\n"
        "cell 1 2 3 4\n"
        "cell 5 6 7 8\n"
        "chain\n"
        "1 2 3 4 5 6 7 8\n"
        "3 4 5 6 7 8\n"
        "5 6 7 8\n"
        "7 8\n");
    FilterScene s = FilterScene::parse(in);
    CHECK(s.universeSize == 8);
    CHECK(s.partition.size() == 2);
    CHECK(s.chain.size() == 4);
    CHECK(build_diagonal_sequence(s).at(7) == Rational(1, 4));

    std::istringstream bad("universe 4\ncell 1 2\ncell 2 3 4\n");
    CHECK_THROWS_AS(FilterScene::parse(bad), SceneFormatError);
}
