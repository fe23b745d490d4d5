#include "doctest.h"

#include <cmath>

#include "zsf/quadmin.hpp"

using namespace zsf;

TEST_CASE("f_eval at pinned points") {
    CHECK(f_eval({{0.25, 0, 0, 0.75, 0}}) == 5.0 / 256.0); // dyadic, exact in doubles
    CHECK(f_eval({{1, 0, 0, 0, 0}}) == 0.5);
    CHECK(f_eval({{0, 0, 0, 0, 1}}) == -0.5);
    // that last point is infeasible
    CHECK(halfspace_value({{0, 0, 0, 0, 1}}) == -3.0);
    CHECK_FALSE(feasible({{0, 0, 0, 0, 1}}));
    CHECK(feasible({{0.25, 0, 0, 0.75, 0}}));
}

TEST_CASE("exact fraction evaluation certifies 5/256") {
    const auto q = [](long long n, long long d) { return Fraction::of(n, d); };
    const auto v = f_eval_exact({q(1, 4), q(0, 1), q(0, 1), q(3, 4), q(0, 1)});
    CHECK(v == Fraction::of(5, 256));
}

TEST_CASE("minimize certifies the bound") {
    const auto r = minimize();
    CHECK(r.value >= 5.0 / 256.0 - 1e-9);
    CHECK(std::abs(r.value - 5.0 / 256.0) <= 1e-9);
    CHECK(std::abs(r.point.x[0] - 0.25) <= 1e-4);
    CHECK(std::abs(r.point.x[1]) <= 1e-4);
    CHECK(std::abs(r.point.x[2]) <= 1e-4);
    CHECK(std::abs(r.point.x[3] - 0.75) <= 1e-4);
    CHECK(std::abs(r.point.x[4]) <= 1e-4);
    // elimination identities at the minimizer, and 3 x1 = x4
    CHECK(std::abs(3 * r.point.x[0] - r.point.x[3]) <= 4e-4);
    // the descent never left the feasible set
    CHECK(r.max_sum_residual <= 1e-9);
    CHECK(r.max_halfspace_violation <= 1e-9);
    // every grid point already satisfied the bound
    CHECK(r.grid_value >= 5.0 / 256.0 - 1e-12);
}

TEST_CASE("face x4 = x5 = 0: dense scan agrees with f_eval") {
    // On this face f collapses to (x1+x2+x3)^2/2 = 1/2; the scan is the
    // independent check that the implementation agrees everywhere.
    double lo = 1e300, hi = -1e300;
    const int r = 1000;
    for (int a = 0; a <= r; ++a) {
        for (int b = 0; a + b <= r; ++b) {
            SimplexPoint p{{a / static_cast<double>(r), b / static_cast<double>(r),
                            (r - a - b) / static_cast<double>(r), 0, 0}};
            if (!feasible(p, 1e-9)) continue;
            const double v = f_eval(p);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    CHECK(std::abs(lo - 0.5) <= 1e-12);
    CHECK(std::abs(hi - 0.5) <= 1e-12);
}
