#ifndef ZSF_QUADMIN_HPP
#define ZSF_QUADMIN_HPP

// Constrained minimization of the quadratic
//   f(x) = x1^2/2 + x2^2/2 + x3^2/2 - 3 x4^2/16 - x5^2/2
//        + x1 x2 + x1 x3 + x2 x3 + x1 x4/2 + x1 x5/2 - x4 x5/2
// over x in [0,1]^5 with x1+..+x5 = 1 and 3x1+x2-x3-x4-3x5 >= 0.
// The certified minimum is 5/256 at (1/4, 0, 0, 3/4, 0).

#include <array>
#include <cstdint>

namespace zsf {

struct SimplexPoint {
    std::array<double, 5> x{};
};

double f_eval(const SimplexPoint& p);

// 3x1 + x2 - x3 - x4 - 3x5 (feasible when >= -1e-12 alongside sum == 1)
double halfspace_value(const SimplexPoint& p);
double sum_residual(const SimplexPoint& p);
bool feasible(const SimplexPoint& p, double tol = 1e-12);

struct MinimizeResult {
    SimplexPoint point;
    double value = 0;
    double grid_value = 0;          // best value seen on the 1/64 grid
    double max_sum_residual = 0;    // over all accepted descent steps
    double max_halfspace_violation = 0;
};

// Grid search at resolution 1/64 over the feasible set, then projected
// descent by pairwise mass transfers with step halving down to 1e-9.
MinimizeResult minimize(int jobs = 0);

// Exact-fraction evaluation: f at rational points, for the certified
// value f(1/4, 0, 0, 3/4, 0) = 5/256.
struct Fraction {
    long long num = 0;
    long long den = 1;

    static Fraction of(long long n, long long d);
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    bool operator==(const Fraction&) const = default;
};

Fraction f_eval_exact(const std::array<Fraction, 5>& x);

} // namespace zsf

#endif
