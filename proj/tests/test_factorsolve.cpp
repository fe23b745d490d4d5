#include "doctest.h"

#include "catalog_check.hpp"
#include "zsf/enumerate.hpp"
#include "zsf/factor_solver.hpp"
#include "zsf/generators.hpp"
#include "zsf/swapwalk.hpp"

using namespace zsf;

namespace {

PathFactor blocks_factor(int n, int k) {
    PathFactor f;
    f.k = k;
    for (int base = 0; base < n; base += k) {
        std::array<int, 4> p{-1, -1, -1, -1};
        for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = base + i;
        f.paths.push_back(p);
    }
    return f;
}

} // namespace

TEST_CASE("classify") {
    const auto all_pos = EdgeLabeling::all_positive(9);
    const auto f9 = blocks_factor(9, 3);
    const auto census = classify(all_pos, f9);
    REQUIRE(census.size() == 1);
    CHECK(census.begin()->first == PathType{3, {1, 1, 0}});
    CHECK(census.begin()->second == 3);
    CHECK(factor_weight(all_pos, f9) == 6);

    const EdgeLabeling all_neg(8);
    const auto f8 = blocks_factor(8, 4);
    const auto census8 = classify(all_neg, f8);
    REQUIRE(census8.size() == 1);
    CHECK(census8.begin()->first == PathType{4, {-1, -1, -1}});

    // type weights add up to the factor weight
    const auto l12 = random_zero_sum(12, 3);
    const auto f12 = blocks_factor(12, 3);
    long long sum = 0;
    for (const auto& [type, count] : classify(l12, f12)) sum += type.weight() * count;
    CHECK(sum == factor_weight(l12, f12));
}

TEST_CASE("path_type canonicalizes under reversal") {
    EdgeLabeling l(3);
    l.set_label(0, 1, -1);
    l.set_label(1, 2, +1);
    CHECK(path_type(l, {0, 1, 2, -1}, 3) == PathType{3, {1, -1, 0}});
    CHECK(path_type(l, {2, 1, 0, -1}, 3) == PathType{3, {1, -1, 0}});
}

TEST_CASE("apply_exchange on the (1,1)x(1,-1) two-negative-crosses case") {
    // P: 0-1-2 type (1,1); R: 3-4-5 type (1,-1); crosses 0-3 and 2-5 negative
    EdgeLabeling l(6);
    l.set_label(0, 1, +1);
    l.set_label(1, 2, +1);
    l.set_label(3, 4, +1);
    l.set_label(4, 5, -1);
    const auto factor = blocks_factor(6, 3);
    CHECK(factor_weight(l, factor) == 2);

    EdgeExchange ex;
    ex.removed = {VertexPair::of(0, 1), VertexPair::of(4, 5)};
    ex.added = {VertexPair::of(0, 3), VertexPair::of(2, 5)};
    ex.delta = -2;
    const auto next = apply_exchange(l, factor, ex);
    CHECK(factor_weight(l, next) == 0);
    validate_factor(next, 6);

    // empty exchange: identical factor
    const auto same = apply_exchange(l, factor, EdgeExchange{});
    CHECK(same.paths == factor.paths);

    // removing a middle edge with no replacement is not a factor
    EdgeExchange bad;
    bad.removed = {VertexPair::of(1, 2)};
    bad.delta = -1;
    CHECK_THROWS_AS(apply_exchange(l, factor, bad), NotAFactorError);

    // removing a non-factor edge is rejected
    EdgeExchange alien;
    alien.removed = {VertexPair::of(0, 3)};
    CHECK_THROWS_AS(apply_exchange(l, factor, alien), NotAFactorError);
}

TEST_CASE("p4_normalize") {
    // P0: 0-1-2-3 type (1,-1,1), P1: 4-5-6-7 type (1,1,-1); weight 2
    EdgeLabeling base(8);
    base.set_label(0, 1, +1);
    base.set_label(1, 2, -1);
    base.set_label(2, 3, +1);
    base.set_label(4, 5, +1);
    base.set_label(5, 6, +1);
    base.set_label(6, 7, -1);
    const auto factor = blocks_factor(8, 4);

    SUBCASE("positive long chord: rotate away the (1,-1,1) path") {
        EdgeLabeling l = base;
        l.set_label(0, 3, +1);
        CHECK(factor_weight(l, factor) == 2);
        const auto r = p4_normalize(l, factor);
        CHECK_FALSE(r.zero_sum);
        CHECK(factor_weight(l, r.factor) == 2);
        const auto census = classify(l, r.factor);
        CHECK(census.find(PathType{4, {1, -1, 1}}) == census.end());
    }
    SUBCASE("negative long chord: direct zero-sum factor") {
        EdgeLabeling l = base;
        l.set_label(0, 3, -1);
        const auto r = p4_normalize(l, factor);
        CHECK(r.zero_sum);
        CHECK(factor_weight(l, r.factor) == 0);
    }
    SUBCASE("no (1,-1,1) path: unchanged") {
        EdgeLabeling l = base;
        l.set_label(0, 3, +1);
        l.set_label(1, 2, +1);
        l.set_label(6, 7, +1); // P0 (1,1,1), P1 (1,1,1): weight 6 -> not 2
        l.set_label(2, 3, -1);
        l.set_label(5, 6, -1); // P0 (1,1,-1) w=1, P1 (1,-1,-1) w=-1 -> weight 0? adjust
        l.set_label(4, 5, +1);
        l.set_label(6, 7, -1);
        // P0: (1,1,-1) w=1; P1: (1,-1,-1) w=-1; total 0 -> make it 2
        l.set_label(5, 6, +1); // P1 (1,1,-1) w=1 -> total 2
        CHECK(factor_weight(l, factor) == 2);
        const auto r = p4_normalize(l, factor);
        CHECK_FALSE(r.zero_sum);
        CHECK(r.factor.paths == factor.paths);
    }
}

TEST_CASE("template_search finds the two-pair endgame and resolves via negation") {
    // P: 0-1-2, Q: 3-4-5 type (1,1); S: 6-7-8 type (-1,-1); all P-Q edges
    // negative, all other crosses and chords positive
    auto l = EdgeLabeling::all_positive(9);
    l.set_label(6, 7, -1);
    l.set_label(7, 8, -1);
    for (int u : {0, 1, 2})
        for (int v : {3, 4, 5}) l.set_label(u, v, -1);
    const auto factor = blocks_factor(9, 3);
    REQUIRE(factor_weight(l, factor) == 2);

    const auto ex = template_search(l, factor);
    REQUIRE(ex.has_value());
    CHECK(ex->delta == -4); // no route to zero here, drop to -2
    const auto dropped = apply_exchange(l, factor, *ex);
    CHECK(factor_weight(l, dropped) == -2);

    const auto ex2 = template_search(l, dropped);
    REQUIRE(ex2.has_value());
    CHECK(ex2->delta == +2); // negation symmetry drives -2 to 0
    const auto done = apply_exchange(l, dropped, *ex2);
    CHECK(factor_weight(l, done) == 0);
}

TEST_CASE("template_search matches the (1,-1)x(1,-1) two-negative case exactly") {
    // paths: 0-1-2 type (1,1); R: 3-4-5 and T: 6-7-8 type (1,-1);
    // only negative crosses are w1y1 = {3,6} and w3y3 = {5,8}
    auto l = EdgeLabeling::all_positive(9);
    l.set_label(4, 5, -1);
    l.set_label(7, 8, -1);
    l.set_label(3, 6, -1);
    l.set_label(5, 8, -1);
    const auto factor = blocks_factor(9, 3);
    REQUIRE(factor_weight(l, factor) == 2);

    const auto ex = template_search(l, factor);
    REQUIRE(ex.has_value());
    CHECK(ex->delta == -2);
    CHECK(ex->removed == std::vector<VertexPair>{{4, 5}, {6, 7}});
    CHECK(ex->added == std::vector<VertexPair>{{3, 6}, {5, 8}});
    CHECK(factor_weight(l, apply_exchange(l, factor, *ex)) == 0);
}

TEST_CASE("template_search returns absent on weight-0 factors") {
    const auto l = random_zero_sum(9, 7);
    const auto r = solve_p3(l, 1);
    CHECK_FALSE(template_search(l, r.factor).has_value());
    CHECK_FALSE(repartition_search(l, r.factor, 3).has_value());
}

TEST_CASE("repartition counts") {
    CHECK(count_k_path_partitions(6, 3) == 90);
    CHECK(count_k_path_partitions(3, 3) == 3);
    CHECK(count_k_path_partitions(8, 4) == 5040);
    CHECK(count_k_path_partitions(4, 4) == 12);
}

TEST_CASE("repartition subsumes templates") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 40 && checked < 12; ++seed) {
        const auto l = random_zero_sum(9, seed);
        const auto pattern = parse_pattern("factor:P3", 9);
        const auto bc = bounded_copy(l, pattern, {.seed = seed});
        auto factor = factor_from_embedding(3, bc.embedding);
        if (std::llabs(factor_weight(l, factor)) != 2) continue;
        const auto tex = template_search(l, factor);
        if (tex && tex->delta == -2 * (factor_weight(l, factor) > 0 ? 1 : -1)) {
            const auto rex = repartition_search(l, factor, 3);
            REQUIRE(rex.has_value());
            CHECK(factor_weight(l, apply_exchange(l, factor, *rex)) == 0);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("solve_p3 on random zero-sum instances") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto l = random_zero_sum(9, seed);
        const auto r = solve_p3(l, seed);
        CHECK(factor_weight(l, r.factor) == 0);
        validate_factor(r.factor, 9);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto l = random_zero_sum(12, seed);
        const auto r = solve_p3(l, seed);
        CHECK(factor_weight(l, r.factor) == 0);
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto l = random_zero_sum(21, seed);
        CHECK(factor_weight(l, solve_p3(l, seed).factor) == 0);
        const auto l24 = random_zero_sum(24, seed);
        CHECK(factor_weight(l24, solve_p3(l24, seed).factor) == 0);
    }

    // n=12 cross-check against the exhaustive oracle
    const auto l12 = random_zero_sum(12, 7);
    CHECK(min_abs_weight_exhaustive(l12, parse_pattern("factor:P3", 12)).min_abs == 0);

    CHECK_THROWS_AS(solve_p3(EdgeLabeling(6)), DivisibilityError);
    CHECK_THROWS_AS(solve_p3(EdgeLabeling::all_positive(9)), PreconditionError);
}

TEST_CASE("solve_p4 at n=8 agrees with exhaustive enumeration") {
    const auto pattern = parse_pattern("factor:P4", 8);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto l = random_zero_sum(8, seed);
        const auto r = solve_p4(l, seed);
        const auto oracle = min_abs_weight_exhaustive(l, pattern, kEnumerationGuard, 0);
        if (r.solved()) {
            CHECK(factor_weight(l, *r.factor) == 0);
            CHECK(oracle.min_abs == 0);
        } else {
            CHECK(oracle.min_abs > 0);
            CHECK(r.report->proven_infeasible);
        }
    }
    CHECK_THROWS_AS(solve_p4(EdgeLabeling(12)), DivisibilityError);
}

TEST_CASE("solve_p4 at n=16") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto l = random_zero_sum(16, seed);
        const auto r = solve_p4(l, seed);
        REQUIRE(r.solved());
        CHECK(factor_weight(l, *r.factor) == 0);
        validate_factor(*r.factor, 16);
    }
}

TEST_CASE("catalog snapshot") {
    // generated once from the transcribed cases; a change here means the
    // transcription or the closure rules changed
    CHECK(p3_base_templates().size() == 12);
    CHECK(p3_catalog().size() == 56);
    CHECK(p4_base_templates().size() == 145);
    CHECK(p4_catalog().size() == 3086);
}

TEST_CASE("catalog soundness: every template applies with its stated delta") {
    for (const auto& t : p3_catalog()) {
        const auto fail = zsf::testing::check_template(t);
        CHECK_MESSAGE(fail.empty(), fail);
    }
    for (const auto& t : p4_catalog()) {
        const auto fail = zsf::testing::check_template(t);
        CHECK_MESSAGE(fail.empty(), fail);
    }
}
