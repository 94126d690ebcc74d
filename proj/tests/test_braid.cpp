#include <doctest.h>

#include "qcol/braid.hpp"
#include "support.hpp"

using namespace qcol;

TEST_CASE("parse_braid") {
    const BraidWord w = parse_braid("s2^-2 s1", 4);
    CHECK(w.rank == 4);
    CHECK(w.letters == std::vector<BraidLetter>{{2, -1}, {2, -1}, {1, 1}});

    CHECK(parse_braid("", 4).letters.empty());
    CHECK(parse_braid("  \t ", 4).letters.empty());
    CHECK(parse_braid("s1^0", 4).letters.empty());

    CHECK(parse_braid("s2^-2 s1 s2^2", 4).letters ==
          std::vector<BraidLetter>{{2, -1}, {2, -1}, {1, 1}, {2, 1}, {2, 1}});
    CHECK(parse_braid("s3^2", 4).letters == std::vector<BraidLetter>{{3, 1}, {3, 1}});
}

TEST_CASE("parse_braid rejects bad input") {
    CHECK_THROWS_AS(parse_braid("t1", 4), BraidParseError);
    CHECK_THROWS_AS(parse_braid("s", 4), BraidParseError);
    CHECK_THROWS_AS(parse_braid("s1^", 4), BraidParseError);
    CHECK_THROWS_AS(parse_braid("s1x", 4), BraidParseError);
    CHECK_THROWS_AS(parse_braid("s0", 4), BraidParseError);
    CHECK_THROWS_AS(parse_braid("s4", 4), BraidParseError);  // rank 4 has generators 1..3
    CHECK_THROWS_AS(parse_braid("s1", 1), BraidParseError);
    CHECK_THROWS_AS(parse_braid("s1^99999999", 4), BraidParseError);
    CHECK_THROWS_AS(parse_braid("s1", 0), std::invalid_argument);
}

TEST_CASE("braid_to_text folds exponents and round-trips") {
    CHECK(braid_to_text(parse_braid("s2^-2 s1 s2^2", 4)) == "s2^-2 s1 s2^2");
    CHECK(braid_to_text(parse_braid("", 4)).empty());
    CHECK(braid_to_text(parse_braid("s1 s1 s1^-1", 4)) == "s1^2 s1^-1");

    std::mt19937 rng(7);
    for (int c = 0; c < 300; ++c) {
        const int rank = testing::pick(rng, 2, 6);
        const BraidWord w = testing::random_word(rng, rank, 20);
        CHECK(parse_braid(braid_to_text(w), rank) == w);
    }
}

TEST_CASE("act on the worked 4-braid example") {
    const GeneratorImage image = act(parse_braid("s2^-2 s1", 4));
    REQUIRE(image.rank == 4);
    CHECK(render(image.terms[0]) == "(x2~x1)");
    CHECK(render(image.terms[1]) == "(x1*x3)");
    CHECK(render(image.terms[2]) == "(x3*(x1*x3))");
    CHECK(render(image.terms[3]) == "x4");

    const Term expected_x3 =
        Term::op(Term::generator(3), Term::op(Term::generator(1), Term::generator(3)));
    CHECK(image.terms[2] == expected_x3);
}

TEST_CASE("act on the trivial word is the identity tuple") {
    const GeneratorImage image = act(parse_braid("", 4));
    for (int j = 0; j < 4; ++j) {
        CHECK(image.terms[j] == Term::generator(j + 1));
    }
}

TEST_CASE("act_evaluated matches hand-computed tuples") {
    // starting from (1,1,N,N): after s2^-1 the tuple is (1,N,2,N); after
    // s1 s2^-1 it is (N,1,2,N)
    for (int n : {3, 4, 5, 6}) {
        const FiniteQuandle q = FiniteQuandle::qn(n);
        const Assignment a{{1, 1, n, n}};
        CHECK(act_evaluated(parse_braid("s2^-1", 4), a, q) == std::vector<int>{1, n, 2, n});
        CHECK(act_evaluated(parse_braid("s1 s2^-1", 4), a, q) == std::vector<int>{n, 1, 2, n});
    }

    const FiniteQuandle q4 = FiniteQuandle::qn(4);
    const Assignment id4{{1, 2, 3, 4}};
    CHECK(act_evaluated(parse_braid("", 4), id4, q4) == id4.values);

    // fusion on the worked example
    const BraidWord w = parse_braid("s2^-2 s1", 4);
    const GeneratorImage image = act(w);
    const std::vector<int> fused = act_evaluated(w, id4, q4);
    for (int j = 0; j < 4; ++j) CHECK(fused[j] == evaluate(image.terms[j], id4, q4));
}

TEST_CASE("act_evaluated validates input") {
    const FiniteQuandle q = FiniteQuandle::qn(3);
    CHECK_THROWS_AS(act_evaluated(parse_braid("s1", 4), Assignment{{1, 2, 3}}, q),
                    std::invalid_argument);
    CHECK_THROWS_AS(act_evaluated(parse_braid("s1", 4), Assignment{{1, 2, 3, 9}}, q),
                    std::out_of_range);
}

TEST_CASE("hand-built malformed words are rejected") {
    const BraidWord bad_index{4, {{9, 1}}};
    const BraidWord bad_sign{4, {{1, 3}}};
    CHECK_THROWS_AS(act(bad_index), std::invalid_argument);
    CHECK_THROWS_AS(act(bad_sign), std::invalid_argument);
    const FiniteQuandle q = FiniteQuandle::qn(3);
    CHECK_THROWS_AS(act_evaluated(bad_index, Assignment{{1, 1, 1, 1}}, q), std::invalid_argument);
    CHECK_NOTHROW(check_braid_word(parse_braid("s1 s3^-2", 4)));
}

TEST_CASE("mixed-pair agreement depends on the tangle depth") {
    // with start (1,1,N,N), the first two images under s2^-(k+1) s1 s2^2
    // agree exactly when k = 2N-5 modulo 2(N-1)
    for (int n = 3; n <= 6; ++n) {
        const FiniteQuandle q = FiniteQuandle::qn(n);
        const Assignment a{{1, 1, n, n}};
        const int period = 2 * (n - 1);
        for (int k = 0; k <= 3 * period; ++k) {
            const BraidWord w =
                parse_braid("s2^-" + std::to_string(k + 1) + " s1 s2^2", 4);
            const std::vector<int> v = act_evaluated(w, a, q);
            const bool agree = v[0] == v[1];
            CHECK(agree == (k % period == (2 * n - 5) % period));
        }
    }
}
