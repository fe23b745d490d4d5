#include "doctest.h"

#include "zsf/enumerate.hpp"
#include "zsf/generators.hpp"
#include "zsf/rng.hpp"
#include "zsf/swapwalk.hpp"

using namespace zsf;

namespace {

void check_step(const ForestPattern& p, const WalkStep& s) {
    validate_embedding(p, s.after);
    CHECK(s.removed.size() <= static_cast<std::size_t>(p.max_degree) + 1);
    CHECK(s.added.size() <= static_cast<std::size_t>(p.max_degree) + 1);
}

} // namespace

TEST_CASE("role_swap: star center with a leaf is one step") {
    const auto star = parse_pattern("star", 4);
    const auto e = Embedding::identity(4);
    const auto steps = role_swap(star, e, 0, 2); // host 0 = center image
    REQUIRE(steps.size() == 1);
    check_step(star, steps[0]);
    // the star is now centered at host 2
    const Embedding& after = steps[0].after;
    CHECK(after[0] == 2);
    CHECK(after[2] == 0);
}

TEST_CASE("role_swap: two internal path vertices pivot in three steps") {
    const auto path = parse_pattern("path", 4);
    const auto e = Embedding::identity(4);
    // hosts 1 and 2 carry the two degree-2 vertices
    const auto steps = role_swap(path, e, 1, 2);
    REQUIRE(steps.size() == 3);
    Embedding cur = e;
    for (const auto& s : steps) {
        CHECK(s.before == cur);
        check_step(path, s);
        cur = s.after;
    }
    // net effect: roles of hosts 1 and 2 exchanged, others fixed
    CHECK(cur[0] == 0);
    CHECK(cur[1] == 2);
    CHECK(cur[2] == 1);
    CHECK(cur[3] == 3);
}

TEST_CASE("role_swap twice is the identity") {
    const auto p = parse_pattern("factor:P3", 9);
    Embedding e = Embedding::identity(9);
    for (auto [a, b] : {std::pair{0, 1}, std::pair{4, 8}, std::pair{2, 5}}) {
        Embedding cur = e;
        for (const auto& s : role_swap(p, cur, a, b)) cur = s.after;
        for (const auto& s : role_swap(p, cur, a, b)) cur = s.after;
        CHECK(cur == e);
    }
    CHECK_THROWS_AS(role_swap(p, e, 3, 3), PreconditionError);
}

TEST_CASE("walk step weight bookkeeping matches removed/added labels") {
    const auto l = random_zero_sum(9, 3);
    const auto p = parse_pattern("factor:P3", 9);
    Embedding cur = Embedding::identity(9);
    Xoshiro256StarStar rng(11);
    for (int i = 0; i < 30; ++i) {
        const int a = static_cast<int>(rng.below(9));
        int b = static_cast<int>(rng.below(9));
        if (a == b) b = (b + 1) % 9;
        for (const auto& s : role_swap(p, cur, a, b)) {
            long long sum = 0;
            for (const auto& edge : s.added) sum += l.label(edge);
            for (const auto& edge : s.removed) sum -= l.label(edge);
            CHECK(copy_weight(l, p, s.after) - copy_weight(l, p, s.before) == sum);
            check_step(p, s);
            cur = s.after;
        }
    }
}

TEST_CASE("bounded_copy respects the max_degree+1 bound with parity") {
    struct Case {
        int n;
        const char* spec;
    };
    const Case cases[] = {{8, "star"},  {8, "path"},       {8, "matching"},
                          {9, "star"},  {9, "path"},       {9, "factor:P3"},
                          {12, "star"}, {12, "matching"},  {12, "factor:P3"}};
    for (const auto& c : cases) {
        const auto p = parse_pattern(c.spec, c.n);
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto l = random_zero_sum(c.n, seed);
            const auto r = bounded_copy(l, p, {.seed = seed});
            CHECK(copy_weight(l, p, r.embedding) == r.weight);
            CHECK(std::llabs(r.weight) <= p.max_degree + 1);
            CHECK(((r.weight - static_cast<long long>(p.edges.size())) % 2 + 2) % 2 == 0);
            for (const auto& s : r.walk) check_step(p, s);
            CHECK(copy_weight(l, p, r.non_negative_copy) >= 0);
            CHECK(copy_weight(l, p, r.non_positive_copy) <= 0);
        }
    }
}

TEST_CASE("bounded_copy examples") {
    // P3 factor at n=12: bound 3, parity even, so <= 2
    const auto l12 = random_zero_sum(12, 3);
    const auto p3f = parse_pattern("factor:P3", 12);
    const auto r = bounded_copy(l12, p3f);
    CHECK(std::llabs(r.weight) <= 2);

    // extremal star: every copy has |weight| 3 <= 8
    const auto l8 = construct_star_extremal_0mod4(8);
    const auto star = parse_pattern("star", 8);
    const auto rs = bounded_copy(l8, star);
    CHECK(std::llabs(rs.weight) == 3);

    // cross-check against the exhaustive oracle
    const auto l9 = random_zero_sum(9, 7);
    const auto path9 = parse_pattern("path", 9);
    const auto rw = bounded_copy(l9, path9);
    CHECK(std::llabs(rw.weight) <= 3);
    const auto oracle = min_abs_weight_exhaustive(l9, path9, kEnumerationGuard,
                                                  std::llabs(rw.weight));
    CHECK(oracle.min_abs <= std::llabs(rw.weight));

    CHECK_THROWS_AS(bounded_copy(EdgeLabeling::all_positive(8), star), PreconditionError);
}

TEST_CASE("walk reaches the target copy exactly") {
    const auto l = random_zero_sum(9, 5);
    const auto p = parse_pattern("factor:P3", 9);
    const auto r = bounded_copy(l, p, {.seed = 99});
    if (!r.walk.empty()) {
        // replaying the full transposition schedule from the non-negative
        // copy must end at the non-positive one; bounded_copy stops early,
        // so just re-walk by continuing the recorded schedule
        Embedding cur = r.non_negative_copy;
        for (const auto& s : r.walk) {
            CHECK(s.before == cur);
            cur = s.after;
        }
        CHECK(cur == r.embedding);
    }
}
