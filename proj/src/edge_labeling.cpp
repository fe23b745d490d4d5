#include "zsf/edge_labeling.hpp"

#include <bit>

namespace zsf {

std::size_t EdgeLabeling::positive_count() const {
    std::size_t count = 0;
    for (auto word : bits_) count += static_cast<std::size_t>(std::popcount(word));
    return count;
}

} // namespace zsf
