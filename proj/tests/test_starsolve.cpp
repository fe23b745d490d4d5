#include "doctest.h"

#include "zsf/enumerate.hpp"
#include "zsf/generators.hpp"
#include "zsf/starsolve.hpp"

using namespace zsf;

namespace {

// Independent star oracle: weight of the star centered at u, edge by edge.
long long star_weight_at(const EdgeLabeling& l, int u) {
    long long w = 0;
    for (int v = 0; v < l.n(); ++v)
        if (v != u) w += l.label(std::min(u, v), std::max(u, v));
    return w;
}

long long star_min_oracle(const EdgeLabeling& l) {
    long long best = l.n();
    for (int u = 0; u < l.n(); ++u) best = std::min(best, std::llabs(star_weight_at(l, u)));
    return best;
}

} // namespace

TEST_CASE("abs_weight identity: star weight is 2 d_G(u) - (n-1)") {
    const auto l = random_zero_sum(12, 5);
    for (int u = 0; u < 12; ++u) {
        int pos = 0;
        for (int v = 0; v < 12; ++v)
            if (v != u && l.label(std::min(u, v), std::max(u, v)) > 0) ++pos;
        CHECK(star_weight_at(l, u) == 2 * pos - 11);
    }
}

TEST_CASE("balanced_center on the extremal constructions") {
    const auto r8 = balanced_center(construct_star_extremal_0mod4(8));
    CHECK(r8.abs_weight == 3); // n/2 - 1, tight

    const auto r9 = balanced_center(construct_star_extremal_1mod4(9));
    CHECK(r9.abs_weight == 2); // (n-5)/2

    const auto r12 = balanced_center(random_zero_sum(12, 5));
    CHECK(r12.abs_weight <= 5);
    CHECK(r12.abs_weight == star_min_oracle(random_zero_sum(12, 5)));
}

TEST_CASE("balanced_center window and exactness over random instances") {
    for (int n : {4, 5, 8, 9, 12, 13}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto l = random_zero_sum(n, seed);
            const auto r = balanced_center(l);
            CHECK(2 * r.abs_weight <= n - 2);
            CHECK(4 * r.pos_degree >= n);
            CHECK(4 * r.pos_degree <= 3 * n - 4);
            CHECK(r.abs_weight == star_min_oracle(l));
            CHECK(std::llabs(star_weight_at(l, r.center)) == r.abs_weight);
        }
    }
    CHECK_THROWS_AS(balanced_center(EdgeLabeling::all_positive(4)), PreconditionError);
    CHECK_THROWS_AS(balanced_center(EdgeLabeling(1)), PreconditionError);
}

TEST_CASE("extremal tightness: every star attains the bound") {
    for (int n = 4; n <= 64; n += 4) {
        const auto l = construct_star_extremal_0mod4(n);
        for (int u = 0; u < n; ++u) CHECK(std::llabs(star_weight_at(l, u)) == n / 2 - 1);
    }
    for (int n = 5; n <= 65; n += 4) {
        const auto l = construct_star_extremal_1mod4(n);
        for (int u = 0; u < n; ++u) {
            const long long w = std::llabs(star_weight_at(l, u));
            CHECK((w == (n - 5) / 2 || w == (n - 1) / 2));
        }
        CHECK(balanced_center(l).abs_weight == (n - 5) / 2);
    }
}

TEST_CASE("1mod4 construction star values follow the two-case center formula") {
    const int n = 9, half = 4;
    const auto l = construct_star_extremal_1mod4(n);
    for (int i = 1; i <= half; ++i) {
        CHECK(std::llabs(star_weight_at(l, i - 1)) == 2);            // u_i
        const long long vw = std::llabs(star_weight_at(l, half + i - 1));
        CHECK(vw == (i % 2 == 0 ? 2 : 4));                           // v_i by parity of i
    }
    CHECK(std::llabs(star_weight_at(l, n - 1)) == 4);                // w
}

TEST_CASE("corollary1_copy") {
    const auto l8 = construct_star_extremal_0mod4(8);
    const auto star = parse_pattern("star", 8);
    const auto e = corollary1_copy(l8, star);
    CHECK(std::llabs(copy_weight(l8, star, e)) <= 3);

    // broom: max_degree 5 >= 8/2 + 1
    const auto broom = parse_pattern("edges:0-1,0-2,0-3,0-4,0-5,5-6,6-7", 8);
    for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
        const auto l = random_zero_sum(8, seed);
        const auto eb = corollary1_copy(l, broom);
        const long long w = copy_weight(l, broom, eb);
        CHECK(std::llabs(w) <= 3);
        CHECK(min_abs_weight_exhaustive(l, broom).min_abs <= std::llabs(w));
    }

    CHECK_THROWS_AS(corollary1_copy(random_zero_sum(8, 11), parse_pattern("path", 8)),
                    PreconditionError);
}

TEST_CASE("corollary1_copy holds over many random instances") {
    for (int n : {8, 9, 12}) {
        const std::string spec = "star";
        const auto star = parse_pattern(spec, n);
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto l = random_zero_sum(n, seed);
            const auto e = corollary1_copy(l, star);
            CHECK(2 * std::llabs(copy_weight(l, star, e)) <= n - 2);
        }
    }
}
