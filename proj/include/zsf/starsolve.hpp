#ifndef ZSF_STARSOLVE_HPP
#define ZSF_STARSOLVE_HPP

#include "zsf/embedding.hpp"

namespace zsf {

struct StarResult {
    int center = 0;
    long long abs_weight = 0; // |2*pos_degree - (n-1)|
    int pos_degree = 0;       // positive-degree of the center
};

// The spanning star with minimum |weight| (smallest center on ties).
// For a zero-sum labeling the result always satisfies
// abs_weight <= n/2 - 1, equivalently n/4 <= pos_degree <= 3n/4 - 1.
StarResult balanced_center(const EdgeLabeling& labeling);

// A copy of F with |weight| <= n/2 - 1 for patterns of maximum degree at
// least n/2 + 1: the max-degree vertex lands on a balanced host, its
// incident edges are selected to cancel, the rest is completed greedily.
Embedding corollary1_copy(const EdgeLabeling& labeling, const ForestPattern& pattern);

} // namespace zsf

#endif
