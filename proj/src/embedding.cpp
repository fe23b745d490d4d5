#include "zsf/embedding.hpp"

namespace zsf {

void validate_embedding(const ForestPattern& pattern, const Embedding& e) {
    if (static_cast<int>(e.to_host.size()) != pattern.n)
        throw InvalidEmbeddingError("embedding has " + std::to_string(e.to_host.size()) +
                                    " entries, expected " + std::to_string(pattern.n));
    std::vector<char> seen(static_cast<std::size_t>(pattern.n), 0);
    for (int h : e.to_host) {
        if (h < 0 || h >= pattern.n)
            throw InvalidEmbeddingError("host vertex " + std::to_string(h) + " out of range");
        if (seen[static_cast<std::size_t>(h)]++)
            throw InvalidEmbeddingError("host vertex " + std::to_string(h) + " used twice");
    }
}

void validate_embedding(const ForestPattern& pattern, const EdgeLabeling& labeling,
                        const Embedding& e) {
    if (pattern.n != labeling.n())
        throw InvalidEmbeddingError("pattern n=" + std::to_string(pattern.n) +
                                    " does not match labeling n=" + std::to_string(labeling.n()));
    validate_embedding(pattern, e);
}

long long copy_weight(const EdgeLabeling& labeling, const ForestPattern& pattern,
                      const Embedding& e) {
    validate_embedding(pattern, labeling, e);
    long long total = 0;
    for (const auto& edge : pattern.edges) total += labeling.label(e[edge.a], e[edge.b]);
    return total;
}

} // namespace zsf
