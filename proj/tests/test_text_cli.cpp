#include "helpers.hpp"

#include "hyperseq/cli.hpp"
#include "hyperseq/seq_text.hpp"

#include <doctest.h>
#include <fstream>
#include <sstream>

using namespace hyperseq;
using namespace hyperseq::testing;

TEST_CASE("sequence literals parse") {
    CHECK(parse_seq("ratfun(0,1; 1)") == make_ratfun({Rational(0), Rational(1)}, {Rational(1)}));
    CHECK(parse_seq("const 1000000") == EventualSeq::constant(Rational(1000000)));
    CHECK(parse_seq("const -3/2") == EventualSeq::constant(Rational(-3, 2)));

    EventualSeq even = parse_seq("masked(2; 1 | 0)");
    CHECK(even.eval_at(2) == 1);
    CHECK(even.eval_at(3) == 0);

    EventualSeq patched = parse_seq("patch(ratfun(1; 0,1); 3=99)");
    CHECK(patched.eval_at(3) == 99);
    CHECK(patched.eval_at(4) == Rational(1, 4));

    CHECK_THROWS_AS(parse_seq("ratfun(1; 0)"), ZeroDenominatorPolynomial);
    CHECK_THROWS_AS(parse_seq("masked(3; 1 | 0)"), BranchCountMismatch);
    CHECK_THROWS_AS(parse_seq("garbage"), SeqParseError);
    CHECK_THROWS_AS(parse_seq("ratfun(1; 1) extra"), SeqParseError);
}

TEST_CASE("print/parse round-trip is exact") {
    Rng rng(401);
    for (int i = 0; i < 60; ++i) {
        EventualSeq s = rand_seq(rng);
        CHECK(parse_seq(print_seq(s)) == s);
    }
    // a few fixed shapes
    for (const char* lit :
         {"ratfun(1; 0,1)", "const 5", "masked(2; 1 | 0)", "patch(ratfun(1; 0,1); 3=99, 7=0)",
          "masked(3; ratfun(0,1; 1) | 1/2 | ratfun(1; 2,1))"}) {
        EventualSeq s = parse_seq(lit);
        CHECK(parse_seq(print_seq(s)) == s);
    }
}

TEST_CASE("CLI spec examples are byte-exact") {
    auto r1 = cli::run({"deriv", "--expr", "x^2", "--at", "3"});
    CHECK(r1.status == 0);
    CHECK(r1.out == "6\n");

    auto r2 = cli::run({"classify", "--seq", "ratfun(1; 0,1)"});
    CHECK(r2.status == 0);
    CHECK(r2.out == "infinitesimal\n");

    auto r3 = cli::run({"compare", "--a", "ratfun(0,1; 1)", "--b", "const 1000000"});
    CHECK(r3.status == 0);
    CHECK(r3.out == "GT\n");
}

TEST_CASE("CLI verbs") {
    CHECK(cli::run({"eval", "--seq", "masked(2; 1 | 0)", "--at", "4"}).out == "1\n");
    CHECK(cli::run({"eval", "--expr", "x^2+1/2", "--at", "3/2"}).out == "11/4\n");
    CHECK(cli::run({"shadow", "--seq", "ratfun(1,3; 2,1)"}).out == "exact 3\n");
    CHECK(cli::run({"shadow", "--seq", "ratfun(0,1; 1)"}).out == "divergent\n");
    CHECK(cli::run({"integrate", "--expr", "x^2", "--from", "0", "--to", "1"}).out == "1/3\n");

    auto bis = cli::run({"shadow", "--seq", "ratfun(1; 0,1)", "--lo", "0", "--hi", "1",
                         "--tol", "1/8"});
    CHECK(bis.status == 0);
    CHECK(bis.out.rfind("enclosure [", 0) == 0);
}

TEST_CASE("CLI trace output is line-oriented key: value") {
    auto r = cli::run({"deriv", "--expr", "x^2", "--at", "3", "--trace"});
    CHECK(r.status == 0);
    CHECK(r.out.find("quotient: ratfun(1,6; 0,1)\n") != std::string::npos);
    CHECK(r.out.find("shadow: 6\n") != std::string::npos);

    auto ri = cli::run({"integrate", "--expr", "x^2", "--from", "0", "--to", "1", "--trace"});
    CHECK(ri.out.find("riemann-sum: ") != std::string::npos);
    CHECK(ri.out.find("shadow: 1/3\n") != std::string::npos);
}

TEST_CASE("CLI exit codes") {
    CHECK(cli::run({}).status == 2);
    CHECK(cli::run({"frobnicate"}).status == 2);
    CHECK(cli::run({"deriv", "--expr", "x^2"}).status == 2);          // missing --at
    CHECK(cli::run({"deriv", "--expr", "x +", "--at", "1"}).status == 2);
    CHECK(cli::run({"deriv", "--expr", "x^(1/2)", "--at", "1"}).status == 2);
    CHECK(cli::run({"deriv", "--expr", "1/x", "--at", "0"}).status == 1); // pole: domain error
    CHECK(cli::run({"integrate", "--expr", "1/(1+x)", "--from", "0", "--to", "1"}).status == 1);
    CHECK(cli::run({"compare", "--a", "garbage", "--b", "const 1"}).status == 2);

    auto r = cli::run({"deriv", "--expr", "x +", "--at", "1"});
    CHECK(r.err.find("^") != std::string::npos); // caret diagnostic
    CHECK(r.err.find("grammar:") != std::string::npos);
}

TEST_CASE("CLI json format") {
    auto r = cli::run({"deriv", "--expr", "x^2", "--at", "3", "--format", "json"});
    CHECK(r.out == "{\"derivative\":\"6\"}\n");
    auto s = cli::run({"shadow", "--seq", "ratfun(1,3; 2,1)", "--format", "json"});
    CHECK(s.out == "{\"value\":\"3\",\"verdict\":\"exact\"}\n");
}

TEST_CASE("CLI batch mode uses key=value shadow form") {
    std::istringstream in(
        "shadow --seq \"ratfun(1,3; 2,1)\"\n"
        "shadow --seq \"masked(2; 1 | 0)\"\n"
        "deriv --expr \"x^3\" --at 2\n");
    auto r = cli::run({"batch"}, &in);
    CHECK(r.status == 0);
    CHECK(r.out == "verdict=exact value=3\nverdict=not-cauchy\n12\n");
}

TEST_CASE("CLI ppoint demo") {
    std::string path = "ppoint_scene_test.txt";
    {
        std::ofstream f(path);
        f << "universe 8\ncell 1 2 3 4\ncell 5 6 7 8\nchain\n1 2 3 4 5 6 7 8\n3 4 5 6 7 8\n"
             "5 6 7 8\n7 8\n";
    }
    auto r = cli::run({"demo", "ppoint", "--scene", path});
    CHECK(r.status == 0);
    CHECK(r.out.find("f(1) = 1") != std::string::npos);
    CHECK(r.out.find("f(8) = 1/4") != std::string::npos);
    CHECK(r.out.find("greedy pseudo-intersection: {1, 5}") != std::string::npos);
    CHECK(r.out.find("check (bound 1): pass") != std::string::npos);
    std::remove(path.c_str());
}
