#include "zsf/path_factor.hpp"

#include <algorithm>
#include <set>

namespace zsf {

void PathFactor::canonicalize() {
    for (auto& path : paths) {
        const int last = k == 3 ? path[2] : path[3];
        if (last < path[0]) std::reverse(path.begin(), path.begin() + k);
    }
    std::sort(paths.begin(), paths.end(), [&](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.begin() + k) <
               *std::min_element(b.begin(), b.begin() + k);
    });
}

void validate_factor(const PathFactor& factor, int n) {
    if (factor.k != 3 && factor.k != 4)
        throw NotAFactorError("path length must be 3 or 4, got " + std::to_string(factor.k));
    if (factor.n() != n)
        throw NotAFactorError("factor covers " + std::to_string(factor.n()) +
                              " vertices, host has " + std::to_string(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& path : factor.paths) {
        for (int i = 0; i < factor.k; ++i) {
            const int v = path[static_cast<std::size_t>(i)];
            if (v < 0 || v >= n)
                throw NotAFactorError("vertex " + std::to_string(v) + " out of range");
            if (seen[static_cast<std::size_t>(v)]++)
                throw NotAFactorError("vertex " + std::to_string(v) + " appears twice");
        }
        if (factor.k == 3 && path[3] != -1)
            throw NotAFactorError("k=3 path carries a fourth vertex");
    }
}

long long factor_weight(const EdgeLabeling& labeling, const PathFactor& factor) {
    long long w = 0;
    for (const auto& path : factor.paths)
        for (int i = 0; i + 1 < factor.k; ++i)
            w += labeling.label(path[static_cast<std::size_t>(i)],
                                path[static_cast<std::size_t>(i) + 1]);
    return w;
}

std::vector<VertexPair> factor_edges(const PathFactor& factor) {
    std::vector<VertexPair> edges;
    for (const auto& path : factor.paths)
        for (int i = 0; i + 1 < factor.k; ++i)
            edges.push_back(VertexPair::of(path[static_cast<std::size_t>(i)],
                                           path[static_cast<std::size_t>(i) + 1]));
    return edges;
}

PathType path_type(const EdgeLabeling& labeling, const std::array<int, 4>& path, int k) {
    PathType type;
    type.k = k;
    for (int i = 0; i + 1 < k; ++i)
        type.signs[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(
            labeling.label(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i) + 1]));
    PathType reversed = type;
    std::reverse(reversed.signs.begin(), reversed.signs.begin() + (k - 1));
    return std::max(type, reversed);
}

std::string to_string(const PathType& type) {
    std::string s = "(";
    for (int i = 0; i + 1 < type.k; ++i) {
        if (i) s += ",";
        s += type.signs[static_cast<std::size_t>(i)] > 0 ? "1" : "-1";
    }
    return s + ")";
}

std::map<PathType, int> classify(const EdgeLabeling& labeling, const PathFactor& factor) {
    std::map<PathType, int> census;
    for (const auto& path : factor.paths) ++census[path_type(labeling, path, factor.k)];
    return census;
}

PathFactor apply_exchange(const EdgeLabeling& labeling, const PathFactor& factor,
                          const EdgeExchange& exchange) {
    const int n = factor.n();
    std::set<VertexPair> edges;
    for (const auto& e : factor_edges(factor)) edges.insert(e);
    const long long before = factor_weight(labeling, factor);

    for (const auto& e : exchange.removed)
        if (edges.erase(e) == 0)
            throw NotAFactorError("removed edge {" + std::to_string(e.a) + "," +
                                  std::to_string(e.b) + "} is not a factor edge");
    for (const auto& e : exchange.added)
        if (!edges.insert(e).second)
            throw NotAFactorError("added edge {" + std::to_string(e.a) + "," +
                                  std::to_string(e.b) + "} already present");

    // rebuild paths from the edge set
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
        if (adj[static_cast<std::size_t>(e.a)].size() > 2 ||
            adj[static_cast<std::size_t>(e.b)].size() > 2)
            throw NotAFactorError("vertex degree exceeds 2 after exchange");
    }
    PathFactor result;
    result.k = factor.k;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (visited[static_cast<std::size_t>(v)] || adj[static_cast<std::size_t>(v)].size() != 1)
            continue;
        std::array<int, 4> path{-1, -1, -1, -1};
        int len = 0, cur = v, prev = -1;
        while (cur != -1) {
            if (len == factor.k) throw NotAFactorError("component longer than k");
            visited[static_cast<std::size_t>(cur)] = 1;
            path[static_cast<std::size_t>(len++)] = cur;
            int next = -1;
            for (int u : adj[static_cast<std::size_t>(cur)])
                if (u != prev) next = u;
            prev = cur;
            cur = next;
        }
        if (len != factor.k) throw NotAFactorError("component shorter than k");
        result.paths.push_back(path);
    }
    for (int v = 0; v < n; ++v)
        if (!visited[static_cast<std::size_t>(v)])
            throw NotAFactorError("vertex " + std::to_string(v) +
                                  " is isolated or on a cycle after exchange");

    result.canonicalize();
    validate_factor(result, n);
    const long long after = factor_weight(labeling, result);
    if (after != before + exchange.delta)
        throw NotAFactorError("exchange delta " + std::to_string(exchange.delta) +
                              " does not match recomputed change " + std::to_string(after - before));
    return result;
}

PathFactor factor_from_embedding(int k, const Embedding& e) {
    PathFactor factor;
    factor.k = k;
    const int n = static_cast<int>(e.to_host.size());
    for (int base = 0; base < n; base += k) {
        std::array<int, 4> path{-1, -1, -1, -1};
        for (int i = 0; i < k; ++i) path[static_cast<std::size_t>(i)] = e[base + i];
        factor.paths.push_back(path);
    }
    factor.canonicalize();
    return factor;
}

Embedding embedding_from_factor(const PathFactor& factor) {
    Embedding e;
    for (const auto& path : factor.paths)
        for (int i = 0; i < factor.k; ++i) e.to_host.push_back(path[static_cast<std::size_t>(i)]);
    return e;
}

NormalizeResult p4_normalize(const EdgeLabeling& labeling, const PathFactor& factor) {
    if (factor.k != 4) throw PreconditionError("p4_normalize needs k=4");
    if (factor_weight(labeling, factor) != 2)
        throw PreconditionError("p4_normalize needs a weight-2 factor");

    const PathType bad{4, {1, -1, 1}};
    NormalizeResult result{factor, false};
    for (;;) {
        bool changed = false;
        for (const auto& path : result.factor.paths) {
            if (path_type(labeling, path, 4) != bad) continue;
            EdgeExchange ex;
            const VertexPair chord = VertexPair::of(path[0], path[3]);
            if (labeling.label(chord) < 0) {
                // drop a positive path edge for the negative long chord
                ex.removed = {VertexPair::of(path[0], path[1])};
                ex.added = {chord};
                ex.delta = -2;
                result.factor = apply_exchange(labeling, result.factor, ex);
                result.zero_sum = true;
                return result;
            }
            // rotate into type (1,1,-1); weight unchanged
            ex.removed = {VertexPair::of(path[2], path[3])};
            ex.added = {chord};
            ex.delta = 0;
            result.factor = apply_exchange(labeling, result.factor, ex);
            changed = true;
            break;
        }
        if (!changed) return result;
    }
}

} // namespace zsf
