#ifndef ZSF_ENUMERATE_HPP
#define ZSF_ENUMERATE_HPP

#include <functional>

#include "zsf/embedding.hpp"

namespace zsf {

inline constexpr unsigned long long kEnumerationGuard = 1'000'000'000ULL;

// Number of automorphism-distinct copies of the pattern in K_n, i.e.
// n!/|Aut(F)|; ULLONG_MAX when the exact count does not fit.
unsigned long long copy_count(const ForestPattern& pattern);

// Visits every automorphism-distinct copy exactly once, together with its
// weight under the labeling.  Returns the number of copies visited.  The
// visitor returns false to stop.  Throws TooLargeError when the copy count
// exceeds the guard.
unsigned long long enumerate_copies(
    const EdgeLabeling& labeling, const ForestPattern& pattern,
    const std::function<bool(const Embedding&, long long weight)>& visit,
    unsigned long long guard = kEnumerationGuard);

struct MinAbsResult {
    long long min_abs = 0;
    Embedding witness;
    unsigned long long visited = 0;
};

// Exact minimum of |weight| over all distinct copies, with a witness.
// Stops early once min_abs reaches stop_at (pass the parity floor, or the
// default -1 to derive it: |E| mod 2, the smallest value parity permits).
MinAbsResult min_abs_weight_exhaustive(const EdgeLabeling& labeling,
                                       const ForestPattern& pattern,
                                       unsigned long long guard = kEnumerationGuard,
                                       long long stop_at = -1);

} // namespace zsf

#endif
