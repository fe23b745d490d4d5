#ifndef ZSF_PATTERN_HPP
#define ZSF_PATTERN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "zsf/edge_labeling.hpp"

namespace zsf {

// A spanning forest of K_n given abstractly: vertex set {0..n-1}, an
// acyclic edge list, per-vertex degrees.  Isolated vertices are allowed.
//
// Construction also precomputes the canonical rooted decomposition used
// by the copy enumerator: vertices in an assignment order (parents before
// children), and for every position the symmetry constraint that breaks
// automorphisms exactly (equal sibling subtrees, the end-for-end flip of
// symmetric bicentral trees, and equal components are each forced into
// increasing host order).
struct ForestPattern {
    int n = 0;
    std::vector<VertexPair> edges;
    std::vector<int> degrees;
    int max_degree = 0;
    std::vector<std::vector<int>> adjacency;
    std::string spec;

    // enumeration shape
    std::vector<int> order;      // pattern vertices, assignment order
    std::vector<int> parent_of;  // parent_of[p]: pattern vertex adjacent to
                                 // order[p] among already-assigned ones, -1 for roots
    std::vector<int> prev_equal; // position whose host must be smaller, or -1
    unsigned long long copies = 0; // n!/|Aut|, ULLONG_MAX if it overflows
};

// Validates (forest, vertex range) and computes the shape.
ForestPattern make_pattern(int n, std::vector<VertexPair> edges, std::string spec_string = {});

// spec is one of: "star", "path", "matching", "factor:P<k>",
// "edges:<i-j,...>" (0-based, comma-separated).
ForestPattern parse_pattern(std::string_view spec, int n);

} // namespace zsf

#endif
