#ifndef ZSF_EMBEDDING_HPP
#define ZSF_EMBEDDING_HPP

#include <vector>

#include "zsf/edge_labeling.hpp"
#include "zsf/pattern.hpp"

namespace zsf {

// An isomorphic copy of a spanning pattern: pattern vertex -> host vertex.
// Spanning, so this is a permutation of {0..n-1}.
struct Embedding {
    std::vector<int> to_host;

    int operator[](int pattern_vertex) const {
        return to_host[static_cast<std::size_t>(pattern_vertex)];
    }

    static Embedding identity(int n) {
        Embedding e;
        e.to_host.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) e.to_host[static_cast<std::size_t>(v)] = v;
        return e;
    }

    std::vector<int> inverse() const {
        std::vector<int> inv(to_host.size(), -1);
        for (std::size_t p = 0; p < to_host.size(); ++p)
            inv[static_cast<std::size_t>(to_host[p])] = static_cast<int>(p);
        return inv;
    }

    bool operator==(const Embedding&) const = default;
};

// Throws InvalidEmbeddingError unless e is a permutation of {0..n-1}
// matching the pattern's vertex count.
void validate_embedding(const ForestPattern& pattern, const Embedding& e);
void validate_embedding(const ForestPattern& pattern, const EdgeLabeling& labeling,
                        const Embedding& e);

// Sum of labels over the images of the pattern edges.
long long copy_weight(const EdgeLabeling& labeling, const ForestPattern& pattern,
                      const Embedding& e);

} // namespace zsf

#endif
