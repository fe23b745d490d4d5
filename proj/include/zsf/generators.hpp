#ifndef ZSF_GENERATORS_HPP
#define ZSF_GENERATORS_HPP

#include <cstdint>
#include <span>

#include "zsf/edge_labeling.hpp"

namespace zsf {

// Labeling with c(e)=+1 exactly on the given edge set.
EdgeLabeling from_positive_set(int n, std::span<const VertexPair> positive);

// Uniformly random labeling with exactly half the edges positive.
// Deterministic in (n, seed); throws ParityError when n(n-1)/2 is odd.
EdgeLabeling random_zero_sum(int n, std::uint64_t seed);

// Zero-sum labeling for n = 0 mod 4 in which every spanning star has
// |weight| = n/2 - 1.  Vertex convention: u_i -> i-1 and
// v_i -> n/2 + i - 1 for i in 1..n/2.
EdgeLabeling construct_star_extremal_0mod4(int n);

// Zero-sum labeling for n = 1 mod 4 in which every spanning star has
// |weight| in {(n-5)/2, (n-1)/2}.  Vertex convention: u_i -> i-1,
// v_i -> (n-1)/2 + i - 1 for i in 1..(n-1)/2, and w -> n-1.
EdgeLabeling construct_star_extremal_1mod4(int n);

} // namespace zsf

#endif
