#ifndef ZSF_FACTOR_SOLVER_HPP
#define ZSF_FACTOR_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "zsf/exchange_templates.hpp"
#include "zsf/path_factor.hpp"

namespace zsf {

// Scans the catalog over ordered path tuples (both orientations each) and
// returns the first exchange that drives |weight|=2 to zero, or failing
// that to the opposite sign (the -4 moves, finished after negation).
// The returned delta is against the given labeling.
std::optional<EdgeExchange> template_search(const EdgeLabeling& labeling,
                                            const PathFactor& factor);

// Per-family counts of bindings whose path types matched but whose label
// preconditions failed; diagnostics for unresolved instances.
std::map<std::string, long long> template_match_stats(const EdgeLabeling& labeling,
                                                      const PathFactor& factor);

// Complete neighborhood: for every subset of at most max_paths paths,
// enumerates all re-partitions of their vertices into k-paths and returns
// an exchange reaching weight zero if one exists.  Subsumes every
// template over that many paths.
std::optional<EdgeExchange> repartition_search(const EdgeLabeling& labeling,
                                               const PathFactor& factor, int max_paths);

// Number of distinct partitions of a labeled vertex set into k-paths.
unsigned long long count_k_path_partitions(int num_vertices, int k);

enum class SolveStage { direct, templates, repartition2, repartition3, exhaustive };
const char* to_string(SolveStage stage);

struct UnresolvedReport {
    PathFactor best_factor;
    long long best_weight = 0;
    std::map<PathType, int> census;
    std::map<std::string, long long> near_misses;
    std::vector<std::string> notes;
    bool proven_infeasible = false; // exhaustive search showed no zero-sum factor
    std::string text() const;
};

struct UnresolvedError : Error {
    explicit UnresolvedError(UnresolvedReport r);
    UnresolvedReport report;
};

struct P3Result {
    PathFactor factor;
    SolveStage stage = SolveStage::direct;
};

// Zero-sum P3 factor; needs 3 | n and even edge count.  Throws
// UnresolvedError only if every fallback is exhausted, which cannot
// happen at guarded sizes.
P3Result solve_p3(const EdgeLabeling& labeling, std::uint64_t seed = 0);

struct P4Result {
    std::optional<PathFactor> factor;
    SolveStage stage = SolveStage::direct;
    std::optional<UnresolvedReport> report;
    bool solved() const { return factor.has_value(); }
};

// Zero-sum P4 factor; needs 8 | n.  An unresolved outcome at small n is a
// legitimate result (the guarantee is asymptotic) and carries the best
// factor found plus diagnostics.
P4Result solve_p4(const EdgeLabeling& labeling, std::uint64_t seed = 0);

} // namespace zsf

#endif
