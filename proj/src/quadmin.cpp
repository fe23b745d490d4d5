#include "zsf/quadmin.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zsf/parallel.hpp"

namespace zsf {

double f_eval(const SimplexPoint& p) {
    const auto& x = p.x;
    return x[0] * x[0] / 2 + x[1] * x[1] / 2 + x[2] * x[2] / 2 - 3 * x[3] * x[3] / 16 -
           x[4] * x[4] / 2 + x[0] * x[1] + x[0] * x[2] + x[1] * x[2] + x[0] * x[3] / 2 +
           x[0] * x[4] / 2 - x[3] * x[4] / 2;
}

double halfspace_value(const SimplexPoint& p) {
    const auto& x = p.x;
    return 3 * x[0] + x[1] - x[2] - x[3] - 3 * x[4];
}

double sum_residual(const SimplexPoint& p) {
    return std::abs(p.x[0] + p.x[1] + p.x[2] + p.x[3] + p.x[4] - 1.0);
}

bool feasible(const SimplexPoint& p, double tol) {
    for (double v : p.x)
        if (v < -tol || v > 1 + tol) return false;
    return sum_residual(p) <= tol && halfspace_value(p) >= -tol;
}

namespace {

constexpr int kGridResolution = 64;

struct GridBest {
    double value = 1e300;
    std::array<int, 5> counts{};
};

GridBest scan_range(std::uint64_t begin, std::uint64_t end) {
    // flat index over (a1, a2, a3) prefixes; a4 iterated, a5 forced
    GridBest best;
    const int r = kGridResolution;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const int a1 = static_cast<int>(idx / ((r + 1) * (r + 1)));
        const int a2 = static_cast<int>(idx / (r + 1) % (r + 1));
        const int a3 = static_cast<int>(idx % (r + 1));
        if (a1 + a2 + a3 > r) continue;
        for (int a4 = 0; a4 + a1 + a2 + a3 <= r; ++a4) {
            const int a5 = r - a1 - a2 - a3 - a4;
            if (3 * a1 + a2 - a3 - a4 - 3 * a5 < 0) continue;
            SimplexPoint p;
            p.x = {a1 / 64.0, a2 / 64.0, a3 / 64.0, a4 / 64.0, a5 / 64.0};
            const double v = f_eval(p);
            if (v < best.value) best = {v, {a1, a2, a3, a4, a5}};
        }
    }
    return best;
}

} // namespace

MinimizeResult minimize(int jobs) {
    if (jobs <= 0) jobs = default_jobs();
    const int r = kGridResolution;
    const std::uint64_t prefixes =
        static_cast<std::uint64_t>(r + 1) * (r + 1) * (r + 1);
    const GridBest grid = parallel_reduce(
        prefixes, jobs, GridBest{}, scan_range, [](GridBest acc, GridBest b) {
            // ties resolved toward the lexicographically first grid point
            if (b.value < acc.value) return b;
            return acc;
        });

    MinimizeResult result;
    result.grid_value = grid.value;
    for (int i = 0; i < 5; ++i)
        result.point.x[static_cast<std::size_t>(i)] = grid.counts[static_cast<std::size_t>(i)] / 64.0;
    result.value = grid.value;

    // projected descent: move mass between coordinate pairs, keeping the
    // sum exact and rejecting any step that leaves the feasible set
    double step = 1.0 / kGridResolution;
    while (step > 1e-9) {
        double best_value = result.value;
        SimplexPoint best_point = result.point;
        bool improved = false;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                if (i == j) continue;
                SimplexPoint cand = result.point;
                cand.x[static_cast<std::size_t>(i)] -= step;
                cand.x[static_cast<std::size_t>(j)] += step;
                if (!feasible(cand, 1e-12)) continue;
                const double v = f_eval(cand);
                if (v < best_value) {
                    best_value = v;
                    best_point = cand;
                    improved = true;
                }
            }
        }
        if (improved) {
            result.point = best_point;
            result.value = best_value;
            result.max_sum_residual = std::max(result.max_sum_residual, sum_residual(best_point));
            result.max_halfspace_violation =
                std::max(result.max_halfspace_violation, -std::min(0.0, halfspace_value(best_point)));
        } else {
            step /= 2;
        }
    }
    return result;
}

Fraction Fraction::of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("fraction with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return Fraction{g ? n / g : n, g ? d / g : d};
}

Fraction Fraction::operator+(const Fraction& o) const {
    return of(num * o.den + o.num * den, den * o.den);
}
Fraction Fraction::operator-(const Fraction& o) const {
    return of(num * o.den - o.num * den, den * o.den);
}
Fraction Fraction::operator*(const Fraction& o) const { return of(num * o.num, den * o.den); }

Fraction f_eval_exact(const std::array<Fraction, 5>& x) {
    const auto half = Fraction::of(1, 2);
    Fraction v = Fraction::of(0, 1);
    v = v + x[0] * x[0] * half + x[1] * x[1] * half + x[2] * x[2] * half;
    v = v - x[3] * x[3] * Fraction::of(3, 16);
    v = v - x[4] * x[4] * half;
    v = v + x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
    v = v + x[0] * x[3] * half + x[0] * x[4] * half;
    v = v - x[3] * x[4] * half;
    return v;
}

} // namespace zsf
