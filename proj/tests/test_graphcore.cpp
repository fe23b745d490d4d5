#include "doctest.h"

#include <set>
#include <sstream>

#include "zsf/generators.hpp"
#include "zsf/rng.hpp"
#include "zsf/zsg_io.hpp"

using namespace zsf;

TEST_CASE("edge indexing is row-major upper-triangular") {
    // n=4: {0,1}=0 {0,2}=1 {0,3}=2 {1,2}=3 {1,3}=4 {2,3}=5
    CHECK(EdgeLabeling::edge_index(0, 1, 4) == 0);
    CHECK(EdgeLabeling::edge_index(0, 3, 4) == 2);
    CHECK(EdgeLabeling::edge_index(1, 2, 4) == 3);
    CHECK(EdgeLabeling::edge_index(2, 3, 4) == 5);
    // bijectivity for a few n
    for (int n : {1, 2, 5, 9, 12}) {
        std::set<std::size_t> seen;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) seen.insert(EdgeLabeling::edge_index(i, j, n));
        CHECK(seen.size() == static_cast<std::size_t>(n) * (n - 1) / 2);
        if (!seen.empty()) CHECK(*seen.rbegin() == seen.size() - 1);
    }
}

TEST_CASE("from_positive_set basics") {
    const VertexPair half[] = {{0, 1}, {2, 3}, {0, 2}};
    const auto l = from_positive_set(4, half);
    CHECK(l.total_weight() == 0);
    CHECK(l.zero_sum());
    CHECK(l.label(0, 1) == 1);
    CHECK(l.label(1, 3) == -1);

    const auto empty = from_positive_set(4, {});
    CHECK(empty.total_weight() == -6);
    CHECK_FALSE(empty.zero_sum());

    CHECK_THROWS_AS(from_positive_set(4, std::vector<VertexPair>{{0, 4}}), InvalidEdgeError);
    CHECK_THROWS_AS(VertexPair::of(2, 2), InvalidEdgeError);
}

TEST_CASE("total_weight extremes and parity") {
    CHECK(EdgeLabeling::all_positive(4).total_weight() == 6);
    CHECK(EdgeLabeling(4).total_weight() == -6);

    // parity invariant: total_weight == n(n-1)/2 (mod 2), over random labelings
    Xoshiro256StarStar rng(123);
    for (int n : {2, 3, 5, 8, 11}) {
        EdgeLabeling l(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.below(2)) l.set_label(i, j, +1);
        const long long m = static_cast<long long>(l.edge_count());
        CHECK(((l.total_weight() - m) % 2 + 2) % 2 == 0);
        CHECK(std::abs(l.total_weight()) <= m);
    }
}

TEST_CASE("random_zero_sum contract") {
    const auto l = random_zero_sum(8, 42);
    CHECK(l.total_weight() == 0);
    CHECK(l.positive_count() == 14);

    CHECK_THROWS_AS(random_zero_sum(6, 0), ParityError);
    CHECK_THROWS_AS(random_zero_sum(7, 0), ParityError);

    // deterministic in (n, seed)
    CHECK(random_zero_sum(9, 7) == random_zero_sum(9, 7));
    CHECK(random_zero_sum(9, 7).positive_count() == 18);
    CHECK_FALSE(random_zero_sum(9, 7) == random_zero_sum(9, 8));
}

TEST_CASE("random_zero_sum n=9 seed=7 regression fixture") {
    // Frozen once from this generator; guards cross-platform stability of
    // the PRNG and the ZSG writer together.
    const auto l = random_zero_sum(9, 7);
    CHECK(l.positive_count() == 18);
    CHECK(to_zsg(l) ==
          "zsg 1\n"
          "9\n"
          "++--+++-\n"
          "+-+-+--\n"
          "--++-+\n"
          "--+-+\n"
          "++++\n"
          "--+\n"
          "--\n"
          "-\n");
}

TEST_CASE("negate is a label-flipping involution") {
    const auto l = random_zero_sum(8, 42);
    CHECK(l.negated().negated() == l);
    CHECK(l.negated().total_weight() == 0);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) CHECK(l.negated().label(i, j) == -l.label(i, j));

    CHECK(EdgeLabeling::all_positive(4).negated().total_weight() == -6);
    const auto r = random_zero_sum(13, 5);
    CHECK(r.negated().total_weight() == -r.total_weight());
}

TEST_CASE("extremal constructions are zero-sum for all admissible n up to 101") {
    for (int n = 4; n <= 100; n += 4) CHECK(construct_star_extremal_0mod4(n).total_weight() == 0);
    for (int n = 5; n <= 101; n += 4) CHECK(construct_star_extremal_1mod4(n).total_weight() == 0);
    CHECK_THROWS_AS(construct_star_extremal_0mod4(10), DivisibilityError);
    CHECK_THROWS_AS(construct_star_extremal_1mod4(8), DivisibilityError);
}

TEST_CASE("zsg round trip and exact bytes") {
    const auto l = random_zero_sum(8, 42);
    CHECK(parse_zsg(to_zsg(l)) == l);

    const VertexPair half[] = {{0, 1}, {2, 3}, {0, 2}};
    const auto small = from_positive_set(4, half);
    CHECK(to_zsg(small) == "zsg 1\n4\n++-\n--\n+\n");

    // n=1: header only, no rows
    CHECK(to_zsg(EdgeLabeling(1)) == "zsg 1\n1\n");
    CHECK(parse_zsg("zsg 1\n1\n").n() == 1);

    CHECK_THROWS_AS(parse_zsg("zsg 2\n4\n"), ParseError);
    CHECK_THROWS_AS(parse_zsg("zsg 1\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_zsg("zsg 1\n4\n++\n-+\n-\n"), ParseError);
    CHECK_THROWS_AS(parse_zsg("zsg 1\n4\n++*\n-+\n-\n"), ParseError);
}
