#ifndef ZSF_SWAPWALK_HPP
#define ZSF_SWAPWALK_HPP

#include <cstdint>
#include <vector>

#include "zsf/embedding.hpp"

namespace zsf {

// One elementary move between copies: two hosts exchange their pattern
// roles, where at least one of the two images has pattern-degree <= 1.
// Both |removed| and |added| are at most max_degree + 1.
struct WalkStep {
    Embedding before;
    Embedding after;
    std::vector<VertexPair> removed;
    std::vector<VertexPair> added;
};

// Exchanges the roles of hosts a and b and fixes all other roles.
// Returns 1 step when one of the two images has degree <= 1, otherwise
// 3 steps pivoting through a degree-<=1 vertex (smallest host index).
std::vector<WalkStep> role_swap(const ForestPattern& pattern, const Embedding& e, int a, int b);

struct BoundedCopyOptions {
    std::uint64_t seed = 0;
    int restarts = 64;
};

struct BoundedCopyResult {
    Embedding embedding;
    long long weight = 0;
    // The walk from the non-negative copy up to and including the step that
    // produced `embedding` (empty when the first copy already qualified).
    std::vector<WalkStep> walk;
    Embedding non_negative_copy; // weight >= 0
    Embedding non_positive_copy; // weight <= 0
};

// A copy with |weight| <= max_degree(F) + 1: locates copies of each sign by
// greedy hill-climbing with restarts, then walks between them by role
// swaps and returns the first copy inside the bound.
BoundedCopyResult bounded_copy(const EdgeLabeling& labeling, const ForestPattern& pattern,
                               BoundedCopyOptions options = {});

} // namespace zsf

#endif
