#include "zsf/enumerate.hpp"

#include <climits>
#include <cstdlib>

namespace zsf {
namespace {

// Backtracking over the pattern's canonical assignment order.  Each
// position carries at most one edge (to its parent), so the partial weight
// is maintained incrementally.  prev_equal constraints realize the exact
// automorphism dedup prepared by make_pattern.
struct Enumerator {
    const EdgeLabeling& labeling;
    const ForestPattern& pattern;
    std::vector<char> used;
    Embedding emb;
    std::vector<int> edges_remaining_after; // pattern edges assigned after position p
    long long partial = 0;
    unsigned long long visited = 0;
    bool stopped = false;

    // full-visit mode
    const std::function<bool(const Embedding&, long long)>* visit = nullptr;

    // min-|weight| mode
    bool minimizing = false;
    long long best = LLONG_MAX;
    long long stop_at = 0;
    Embedding best_emb;

    Enumerator(const EdgeLabeling& l, const ForestPattern& f) : labeling(l), pattern(f) {
        used.assign(static_cast<std::size_t>(f.n), 0);
        emb.to_host.assign(static_cast<std::size_t>(f.n), -1);
        edges_remaining_after.assign(static_cast<std::size_t>(f.n) + 1, 0);
        for (int p = f.n - 1; p >= 0; --p)
            edges_remaining_after[static_cast<std::size_t>(p)] =
                edges_remaining_after[static_cast<std::size_t>(p) + 1] +
                (f.parent_of[static_cast<std::size_t>(p)] >= 0 ? 1 : 0);
    }

    void run(int pos) {
        if (stopped) return;
        if (pos == pattern.n) {
            ++visited;
            if (minimizing) {
                if (std::llabs(partial) < best) {
                    best = std::llabs(partial);
                    best_emb = emb;
                    if (best <= stop_at) stopped = true;
                }
            } else {
                if (!(*visit)(emb, partial)) stopped = true;
            }
            return;
        }
        const int v = pattern.order[static_cast<std::size_t>(pos)];
        const int parent = pattern.parent_of[static_cast<std::size_t>(pos)];
        const int constraint = pattern.prev_equal[static_cast<std::size_t>(pos)];
        const int low = constraint >= 0
                            ? emb.to_host[static_cast<std::size_t>(
                                  pattern.order[static_cast<std::size_t>(constraint)])]
                            : -1;
        const int rem = edges_remaining_after[static_cast<std::size_t>(pos) + 1];
        for (int h = low + 1; h < pattern.n; ++h) {
            if (used[static_cast<std::size_t>(h)]) continue;
            const long long delta =
                parent >= 0 ? labeling.label(emb.to_host[static_cast<std::size_t>(parent)], h) : 0;
            if (minimizing) {
                const long long bound = std::llabs(partial + delta) - rem;
                if (bound >= best && bound > 0) continue;
            }
            used[static_cast<std::size_t>(h)] = 1;
            emb.to_host[static_cast<std::size_t>(v)] = h;
            partial += delta;
            run(pos + 1);
            partial -= delta;
            emb.to_host[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(h)] = 0;
            if (stopped) return;
        }
    }
};

void check_guard(const ForestPattern& pattern, unsigned long long guard) {
    if (pattern.copies > guard)
        throw TooLargeError("pattern has " +
                            (pattern.copies == ULLONG_MAX ? std::string("more than 2^64")
                                                          : std::to_string(pattern.copies)) +
                            " copies, guard is " + std::to_string(guard));
}

} // namespace

unsigned long long copy_count(const ForestPattern& pattern) { return pattern.copies; }

unsigned long long enumerate_copies(
    const EdgeLabeling& labeling, const ForestPattern& pattern,
    const std::function<bool(const Embedding&, long long)>& visit, unsigned long long guard) {
    if (labeling.n() != pattern.n)
        throw PreconditionError("labeling and pattern disagree on n");
    check_guard(pattern, guard);
    Enumerator e(labeling, pattern);
    e.visit = &visit;
    e.run(0);
    return e.visited;
}

MinAbsResult min_abs_weight_exhaustive(const EdgeLabeling& labeling, const ForestPattern& pattern,
                                       unsigned long long guard, long long stop_at) {
    if (labeling.n() != pattern.n)
        throw PreconditionError("labeling and pattern disagree on n");
    check_guard(pattern, guard);
    Enumerator e(labeling, pattern);
    e.minimizing = true;
    e.stop_at = stop_at >= 0 ? stop_at : static_cast<long long>(pattern.edges.size() % 2);
    e.run(0);
    return MinAbsResult{e.best, std::move(e.best_emb), e.visited};
}

} // namespace zsf
