#include "zsf/swapwalk.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "zsf/rng.hpp"

namespace zsf {
namespace {

// Step swapping the roles of hosts a and b; caller guarantees one of the
// two images has pattern-degree <= 1.
WalkStep make_step(const ForestPattern& pattern, const Embedding& e,
                   const std::vector<int>& inverse, int a, int b) {
    const int p = inverse[static_cast<std::size_t>(a)];
    const int q = inverse[static_cast<std::size_t>(b)];
    WalkStep step;
    step.before = e;
    step.after = e;
    std::swap(step.after.to_host[static_cast<std::size_t>(p)],
              step.after.to_host[static_cast<std::size_t>(q)]);

    std::set<VertexPair> before_edges, after_edges;
    for (int r : {p, q}) {
        for (int x : pattern.adjacency[static_cast<std::size_t>(r)]) {
            before_edges.insert(VertexPair::of(e[r], e[x]));
            after_edges.insert(VertexPair::of(step.after[r], step.after[x]));
        }
    }
    std::set_difference(before_edges.begin(), before_edges.end(), after_edges.begin(),
                        after_edges.end(), std::back_inserter(step.removed));
    std::set_difference(after_edges.begin(), after_edges.end(), before_edges.begin(),
                        before_edges.end(), std::back_inserter(step.added));
    return step;
}

// Weight change of exchanging the roles of hosts a and b.
long long swap_delta(const EdgeLabeling& labeling, const ForestPattern& pattern,
                     const Embedding& e, const std::vector<int>& inverse, int a, int b) {
    const int p = inverse[static_cast<std::size_t>(a)];
    const int q = inverse[static_cast<std::size_t>(b)];
    long long delta = 0;
    for (int x : pattern.adjacency[static_cast<std::size_t>(p)])
        if (x != q) delta += labeling.label(b, e[x]) - labeling.label(a, e[x]);
    for (int y : pattern.adjacency[static_cast<std::size_t>(q)])
        if (y != p) delta += labeling.label(a, e[y]) - labeling.label(b, e[y]);
    return delta;
}

void apply_swap(Embedding& e, std::vector<int>& inverse, int a, int b) {
    const int p = inverse[static_cast<std::size_t>(a)];
    const int q = inverse[static_cast<std::size_t>(b)];
    std::swap(e.to_host[static_cast<std::size_t>(p)], e.to_host[static_cast<std::size_t>(q)]);
    inverse[static_cast<std::size_t>(a)] = q;
    inverse[static_cast<std::size_t>(b)] = p;
}

Embedding random_embedding(int n, Xoshiro256StarStar& rng) {
    Embedding e = Embedding::identity(n);
    shuffle(e.to_host, rng);
    return e;
}

// Greedy hill-climb to a copy with weight >= 0 (direction +1) or <= 0 (-1).
// Returns true on success, leaving the copy in e.
bool climb(const EdgeLabeling& labeling, const ForestPattern& pattern, Embedding& e,
           int direction) {
    const int n = pattern.n;
    std::vector<int> inverse = e.inverse();
    long long weight = copy_weight(labeling, pattern, e);
    while (direction * weight < 0) {
        long long best_delta = 0;
        int best_a = -1, best_b = -1;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const long long d =
                    direction * swap_delta(labeling, pattern, e, inverse, a, b);
                if (d > best_delta) {
                    best_delta = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_a < 0) return false; // local optimum on the wrong side
        weight += direction * best_delta;
        apply_swap(e, inverse, best_a, best_b);
    }
    return true;
}

Embedding find_signed_copy(const EdgeLabeling& labeling, const ForestPattern& pattern,
                           int direction, std::uint64_t seed, int restarts) {
    for (int r = 0; r < restarts; ++r) {
        Xoshiro256StarStar rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        Embedding e = random_embedding(pattern.n, rng);
        if (climb(labeling, pattern, e, direction)) return e;
    }
    throw SearchExhaustedError(
        std::string("no copy with weight ") + (direction > 0 ? ">= 0" : "<= 0") +
        " found after " + std::to_string(restarts) +
        " restarts; impossible for a zero-sum labeling");
}

} // namespace

std::vector<WalkStep> role_swap(const ForestPattern& pattern, const Embedding& e, int a, int b) {
    if (a == b) throw PreconditionError("role_swap needs two distinct hosts");
    validate_embedding(pattern, e);
    const std::vector<int> inverse = e.inverse();
    const int p = inverse[static_cast<std::size_t>(a)];
    const int q = inverse[static_cast<std::size_t>(b)];
    const auto degree = [&](int v) { return pattern.degrees[static_cast<std::size_t>(v)]; };

    if (degree(p) <= 1 || degree(q) <= 1) return {make_step(pattern, e, inverse, a, b)};

    // both images internal: pivot through the smallest host whose image has
    // degree <= 1 (a forest with two degree->=2 vertices always has one)
    int pivot = -1;
    for (int h = 0; h < pattern.n; ++h) {
        if (h == a || h == b) continue;
        if (degree(inverse[static_cast<std::size_t>(h)]) <= 1) {
            pivot = h;
            break;
        }
    }
    if (pivot < 0) throw PreconditionError("no degree-<=1 vertex available as pivot");

    std::vector<WalkStep> steps;
    Embedding cur = e;
    std::vector<int> inv = inverse;
    for (const auto& [x, y] : {std::pair{a, pivot}, std::pair{a, b}, std::pair{b, pivot}}) {
        steps.push_back(make_step(pattern, cur, inv, x, y));
        apply_swap(cur, inv, x, y);
    }
    return steps;
}

BoundedCopyResult bounded_copy(const EdgeLabeling& labeling, const ForestPattern& pattern,
                               BoundedCopyOptions options) {
    if (labeling.n() != pattern.n)
        throw PreconditionError("labeling and pattern disagree on n");
    if (!labeling.zero_sum()) throw PreconditionError("bounded_copy needs a zero-sum labeling");
    if (pattern.max_degree < 1)
        throw PreconditionError("bounded_copy needs a pattern with at least one edge");

    const long long bound = pattern.max_degree + 1;
    BoundedCopyResult result;
    result.non_negative_copy = find_signed_copy(labeling, pattern, +1,
                                                derive_seed(options.seed, "bounded_copy.plus"),
                                                options.restarts);
    result.non_positive_copy = find_signed_copy(labeling, pattern, -1,
                                                derive_seed(options.seed, "bounded_copy.minus"),
                                                options.restarts);

    long long weight = copy_weight(labeling, pattern, result.non_negative_copy);
    if (weight <= bound) {
        result.embedding = result.non_negative_copy;
        result.weight = weight;
        return result;
    }

    // walk: decompose target o source^-1 into cycles, smallest element
    // first, each rotated by adjacent transpositions
    const std::vector<int> inv_source = result.non_negative_copy.inverse();
    std::vector<int> tau(static_cast<std::size_t>(pattern.n));
    for (int h = 0; h < pattern.n; ++h)
        tau[static_cast<std::size_t>(h)] =
            result.non_positive_copy[inv_source[static_cast<std::size_t>(h)]];

    Embedding cur = result.non_negative_copy;
    std::vector<char> done(static_cast<std::size_t>(pattern.n), 0);
    for (int start = 0; start < pattern.n; ++start) {
        if (done[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int h = start; !done[static_cast<std::size_t>(h)]; h = tau[static_cast<std::size_t>(h)]) {
            done[static_cast<std::size_t>(h)] = 1;
            cycle.push_back(h);
        }
        for (std::size_t i = cycle.size(); i >= 2; --i) {
            for (auto& step : role_swap(pattern, cur, cycle[i - 2], cycle[i - 1])) {
                cur = step.after;
                long long sum = 0;
                for (const auto& edge : step.added) sum += labeling.label(edge);
                for (const auto& edge : step.removed) sum -= labeling.label(edge);
                weight += sum;
                result.walk.push_back(std::move(step));
                if (std::llabs(weight) <= bound) {
                    result.embedding = cur;
                    result.weight = weight;
                    return result;
                }
            }
        }
    }
    // unreachable: the walk ends at the non-positive copy, so some
    // intermediate copy must fall inside the bound
    throw SearchExhaustedError("walk crossed zero without entering the bound");
}

} // namespace zsf
