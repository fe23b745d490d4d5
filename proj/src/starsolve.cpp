#include "zsf/starsolve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zsf {

StarResult balanced_center(const EdgeLabeling& labeling) {
    const int n = labeling.n();
    if (n < 2) throw PreconditionError("balanced_center needs n >= 2");
    if (!labeling.zero_sum())
        throw PreconditionError("balanced_center needs a zero-sum labeling");

    StarResult best;
    best.abs_weight = n; // above any star weight
    for (int u = 0; u < n; ++u) {
        int pos = 0;
        for (int v = 0; v < n; ++v)
            if (v != u && labeling.label(std::min(u, v), std::max(u, v)) > 0) ++pos;
        const long long abs_w = std::llabs(2LL * pos - (n - 1));
        if (abs_w < best.abs_weight) best = {u, abs_w, pos};
    }
    return best;
}

Embedding corollary1_copy(const EdgeLabeling& labeling, const ForestPattern& pattern) {
    const int n = labeling.n();
    if (pattern.n != n) throw PreconditionError("labeling and pattern disagree on n");
    const int delta = pattern.max_degree;
    if (2 * delta < n + 2)
        throw PreconditionError("corollary1_copy needs max_degree >= n/2 + 1, got " +
                                std::to_string(delta) + " for n=" + std::to_string(n));
    if (!labeling.zero_sum())
        throw PreconditionError("corollary1_copy needs a zero-sum labeling");

    const StarResult balanced = balanced_center(labeling);
    const int u = balanced.center;
    const auto label_at_u = [&](int h) { return labeling.label(std::min(u, h), std::max(u, h)); };

    std::vector<int> positive_hosts, negative_hosts;
    for (int h = 0; h < n; ++h) {
        if (h == u) continue;
        (label_at_u(h) > 0 ? positive_hosts : negative_hosts).push_back(h);
    }
    const bool positive_minority = positive_hosts.size() <= negative_hosts.size();
    auto& minority = positive_minority ? positive_hosts : negative_hosts;
    auto& majority = positive_minority ? negative_hosts : positive_hosts;

    // select the hosts of the max-degree vertex's neighbors
    std::vector<int> selected;
    if (delta >= 2 * static_cast<int>(minority.size())) {
        // all minority edges plus majority edges; the window on the
        // balanced center makes the star part small enough
        selected = minority;
        selected.insert(selected.end(), majority.begin(),
                        majority.begin() + (delta - static_cast<long>(minority.size())));
    } else {
        // balance the star part to |sum| <= 1
        const int take_majority = (delta + 1) / 2;
        selected.assign(majority.begin(), majority.begin() + take_majority);
        selected.insert(selected.end(), minority.begin(),
                        minority.begin() + (delta - take_majority));
    }
    std::sort(selected.begin(), selected.end());

    int center = 0; // max-degree pattern vertex, smallest index
    for (int v = 0; v < n; ++v)
        if (pattern.degrees[static_cast<std::size_t>(v)] == delta) {
            center = v;
            break;
        }

    Embedding e;
    e.to_host.assign(static_cast<std::size_t>(n), -1);
    e.to_host[static_cast<std::size_t>(center)] = u;
    std::vector<char> host_used(static_cast<std::size_t>(n), 0);
    host_used[static_cast<std::size_t>(u)] = 1;
    for (int h : selected) host_used[static_cast<std::size_t>(h)] = 1;

    std::vector<int> neighbors = pattern.adjacency[static_cast<std::size_t>(center)];
    std::sort(neighbors.begin(), neighbors.end());
    for (std::size_t i = 0; i < neighbors.size(); ++i)
        e.to_host[static_cast<std::size_t>(neighbors[i])] = selected[i];

    int next_host = 0;
    for (int v = 0; v < n; ++v) {
        if (e.to_host[static_cast<std::size_t>(v)] >= 0) continue;
        while (host_used[static_cast<std::size_t>(next_host)]) ++next_host;
        e.to_host[static_cast<std::size_t>(v)] = next_host;
        host_used[static_cast<std::size_t>(next_host)] = 1;
    }

    // greedy improvement by role swaps that keep the star selection at u:
    // swap two hosts only when both or neither serve the center's
    // neighbors, or when their labels at u agree
    std::vector<int> inverse = e.inverse();
    std::vector<char> is_neighbor(static_cast<std::size_t>(n), 0);
    for (int v : neighbors) is_neighbor[static_cast<std::size_t>(v)] = 1;

    const auto swap_delta = [&](int a, int b) {
        const int p = inverse[static_cast<std::size_t>(a)];
        const int q = inverse[static_cast<std::size_t>(b)];
        long long d = 0;
        for (int x : pattern.adjacency[static_cast<std::size_t>(p)])
            if (x != q) d += labeling.label(std::min(b, e[x]), std::max(b, e[x])) -
                             labeling.label(std::min(a, e[x]), std::max(a, e[x]));
        for (int y : pattern.adjacency[static_cast<std::size_t>(q)])
            if (y != p) d += labeling.label(std::min(a, e[y]), std::max(a, e[y])) -
                             labeling.label(std::min(b, e[y]), std::max(b, e[y]));
        return d;
    };

    long long weight = copy_weight(labeling, pattern, e);
    for (int round = 0; round < 4 * n; ++round) {
        long long best_gain = 0;
        int best_a = -1, best_b = -1;
        for (int a = 0; a < n; ++a) {
            if (a == u) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == u) continue;
                const int p = inverse[static_cast<std::size_t>(a)];
                const int q = inverse[static_cast<std::size_t>(b)];
                if (p == center || q == center) continue;
                const bool pa = is_neighbor[static_cast<std::size_t>(p)];
                const bool qb = is_neighbor[static_cast<std::size_t>(q)];
                if (pa != qb && label_at_u(a) != label_at_u(b)) continue;
                const long long gain = std::llabs(weight) - std::llabs(weight + swap_delta(a, b));
                if (gain > best_gain) {
                    best_gain = gain;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_a < 0) break;
        weight += swap_delta(best_a, best_b);
        const int p = inverse[static_cast<std::size_t>(best_a)];
        const int q = inverse[static_cast<std::size_t>(best_b)];
        std::swap(e.to_host[static_cast<std::size_t>(p)], e.to_host[static_cast<std::size_t>(q)]);
        inverse[static_cast<std::size_t>(best_a)] = q;
        inverse[static_cast<std::size_t>(best_b)] = p;
    }

    weight = copy_weight(labeling, pattern, e);
    if (2 * std::llabs(weight) > n - 2)
        throw std::logic_error("corollary1_copy exceeded its n/2 - 1 guarantee");
    return e;
}

} // namespace zsf
