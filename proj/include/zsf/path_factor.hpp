#ifndef ZSF_PATH_FACTOR_HPP
#define ZSF_PATH_FACTOR_HPP

#include <array>
#include <map>
#include <vector>

#include "zsf/embedding.hpp"

namespace zsf {

// A partition of {0..n-1} into vertex-disjoint paths on k vertices,
// k = 3 or 4.  Stored canonically: each path oriented with its smaller
// endpoint first, paths sorted by their smallest contained vertex.
struct PathFactor {
    int k = 3;
    std::vector<std::array<int, 4>> paths; // entry [3] is -1 when k == 3

    int n() const { return k * static_cast<int>(paths.size()); }
    void canonicalize();
};

// The labels along a path, canonical under reversal (the lexicographically
// larger orientation, with +1 > -1).
struct PathType {
    int k = 3;
    std::array<std::int8_t, 3> signs{}; // entry [2] unused when k == 3

    long long weight() const {
        long long w = 0;
        for (int i = 0; i + 1 < k; ++i) w += signs[static_cast<std::size_t>(i)];
        return w;
    }
    auto operator<=>(const PathType&) const = default;
};

std::string to_string(const PathType& type);

// Removing E_out from and adding E_in to a factor; delta is the weight
// change (sum of added labels minus sum of removed labels).
struct EdgeExchange {
    std::vector<VertexPair> removed;
    std::vector<VertexPair> added;
    long long delta = 0;
};

// Throws NotAFactorError unless the paths partition {0..n-1} and k matches.
void validate_factor(const PathFactor& factor, int n);

long long factor_weight(const EdgeLabeling& labeling, const PathFactor& factor);

std::vector<VertexPair> factor_edges(const PathFactor& factor);

PathType path_type(const EdgeLabeling& labeling, const std::array<int, 4>& path, int k);

// Per-path canonical types with multiplicities.
std::map<PathType, int> classify(const EdgeLabeling& labeling, const PathFactor& factor);

// Applies the exchange and re-validates; throws NotAFactorError when the
// removed edges are not factor edges or the result is not a path factor.
PathFactor apply_exchange(const EdgeLabeling& labeling, const PathFactor& factor,
                          const EdgeExchange& exchange);

// Conversions against the factor:P<k> pattern (blocks of consecutive
// pattern vertices).
PathFactor factor_from_embedding(int k, const Embedding& e);
Embedding embedding_from_factor(const PathFactor& factor);

struct NormalizeResult {
    PathFactor factor;
    bool zero_sum = false; // true: factor already reached weight 0
};

// For a weight-2 P4 factor: removes every (1,-1,1) path, either by the
// direct weight-0 exchange when the long chord is negative, or by rotating
// the path into type (1,1,-1).
NormalizeResult p4_normalize(const EdgeLabeling& labeling, const PathFactor& factor);

} // namespace zsf

#endif
