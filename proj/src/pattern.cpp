#include "zsf/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <map>
#include <numeric>
#include <tuple>

namespace zsf {
namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Centers of a tree (1 or 2 adjacent vertices) by leaf stripping.
std::vector<int> tree_centers(const std::vector<int>& verts,
                              const std::vector<std::vector<int>>& adj) {
    if (verts.size() <= 2) return verts;
    std::map<int, int> deg;
    for (int v : verts) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    for (int v : verts)
        if (deg[v] <= 1) layer.push_back(v);
    std::size_t remaining = verts.size();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<int> next;
        for (int v : layer)
            for (int u : adj[v])
                if (--deg[u] == 1) next.push_back(u);
        layer = std::move(next);
    }
    return layer;
}

struct ShapeBuilder {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> order, parent_of, prev_equal;
    std::vector<int> position; // pattern vertex -> position in order
    u128 aut = 1;

    explicit ShapeBuilder(const ForestPattern& p)
        : adj(p.adjacency), position(static_cast<std::size_t>(p.n), -1) {}

    // AHU code of the subtree at v, away from parent.
    std::string code(int v, int parent) const {
        std::vector<std::string> child_codes;
        for (int u : adj[v])
            if (u != parent) child_codes.push_back(code(u, v));
        std::sort(child_codes.begin(), child_codes.end());
        std::string s = "(";
        for (const auto& c : child_codes) s += c;
        s += ")";
        return s;
    }

    // Emits the subtree at v in preorder; returns v's position.
    int emit(int v, int parent, int constraint_pos) {
        const int pos = static_cast<int>(order.size());
        order.push_back(v);
        parent_of.push_back(parent);
        prev_equal.push_back(constraint_pos);
        position[static_cast<std::size_t>(v)] = pos;

        std::vector<std::pair<std::string, int>> kids;
        for (int u : adj[v])
            if (u != parent) kids.emplace_back(code(u, v), u);
        std::sort(kids.begin(), kids.end());
        for (std::size_t i = 0; i < kids.size();) {
            std::size_t j = i;
            int prev_pos = -1;
            while (j < kids.size() && kids[j].first == kids[i].first) {
                prev_pos = emit(kids[j].second, v, prev_pos);
                ++j;
            }
            for (std::size_t m = 2; m <= j - i; ++m) aut *= m;
            i = j;
        }
        return pos;
    }
};

unsigned long long copies_from(int n, u128 aut) {
    // n! / aut with interleaved cancellation; exact at desk scale,
    // saturates to ULLONG_MAX when the count cannot fit.
    constexpr u128 kCap = u128{1} << 96;
    u128 num = 1;
    for (int k = 2; k <= n; ++k) {
        num *= static_cast<unsigned>(k);
        const u128 g = gcd128(num, aut);
        num /= g;
        aut /= g;
        if (num > kCap) return ULLONG_MAX;
    }
    if (num > static_cast<u128>(ULLONG_MAX)) return ULLONG_MAX;
    return static_cast<unsigned long long>(num);
}

} // namespace

ForestPattern make_pattern(int n, std::vector<VertexPair> edges, std::string spec_string) {
    if (n < 1) throw SpecError("pattern needs n >= 1");
    ForestPattern pattern;
    pattern.n = n;
    pattern.spec = std::move(spec_string);
    pattern.degrees.assign(static_cast<std::size_t>(n), 0);
    pattern.adjacency.assign(static_cast<std::size_t>(n), {});

    DisjointSet components(n);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.a < 0 || e.b >= n || e.a >= e.b)
            throw SpecError("pattern edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                            "} invalid for n=" + std::to_string(n));
        if (i > 0 && edges[i - 1] == e) throw SpecError("duplicate pattern edge");
        if (!components.unite(e.a, e.b)) throw SpecError("pattern has a cycle, not a forest");
        pattern.degrees[static_cast<std::size_t>(e.a)]++;
        pattern.degrees[static_cast<std::size_t>(e.b)]++;
        pattern.adjacency[static_cast<std::size_t>(e.a)].push_back(e.b);
        pattern.adjacency[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    pattern.edges = std::move(edges);
    pattern.max_degree =
        pattern.degrees.empty() ? 0 : *std::max_element(pattern.degrees.begin(), pattern.degrees.end());

    std::map<int, std::vector<int>> comp_verts;
    for (int v = 0; v < n; ++v) comp_verts[components.find(v)].push_back(v);

    ShapeBuilder builder(pattern);

    struct Component {
        std::string code;
        int root = -1;
        int flip_partner = -1; // second center of a symmetric bicentral tree
        int min_vertex = 0;
    };
    std::vector<Component> comps;
    for (auto& [rep, verts] : comp_verts) {
        const auto centers = tree_centers(verts, pattern.adjacency);
        Component c;
        c.min_vertex = verts.front();
        if (centers.size() == 1) {
            c.root = centers[0];
        } else {
            const std::string half0 = builder.code(centers[0], centers[1]);
            const std::string half1 = builder.code(centers[1], centers[0]);
            c.root = half0 <= half1 ? centers[0] : centers[1];
            if (half0 == half1) {
                c.flip_partner = (c.root == centers[0]) ? centers[1] : centers[0];
                builder.aut *= 2;
            }
        }
        c.code = builder.code(c.root, -1);
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        return std::tie(a.code, a.min_vertex) < std::tie(b.code, b.min_vertex);
    });

    for (std::size_t i = 0; i < comps.size();) {
        std::size_t j = i;
        int prev_pos = -1;
        while (j < comps.size() && comps[j].code == comps[i].code) {
            prev_pos = builder.emit(comps[j].root, -1, prev_pos);
            if (comps[j].flip_partner >= 0) {
                // end-for-end flip: the partner center's host must exceed the root's
                const int partner_pos = builder.position[static_cast<std::size_t>(comps[j].flip_partner)];
                builder.prev_equal[static_cast<std::size_t>(partner_pos)] = prev_pos;
            }
            ++j;
        }
        for (std::size_t m = 2; m <= j - i; ++m) builder.aut *= m;
        i = j;
    }

    pattern.order = std::move(builder.order);
    pattern.parent_of = std::move(builder.parent_of);
    pattern.prev_equal = std::move(builder.prev_equal);
    pattern.copies = copies_from(n, builder.aut);
    return pattern;
}

namespace {

int parse_int(std::string_view s, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw SpecError(std::string("bad ") + what + " '" + std::string(s) + "'");
    return value;
}

} // namespace

ForestPattern parse_pattern(std::string_view spec, int n) {
    if (n < 1) throw SpecError("pattern needs n >= 1");
    std::vector<VertexPair> edges;
    if (spec == "star") {
        for (int j = 1; j < n; ++j) edges.push_back({0, j});
    } else if (spec == "path") {
        for (int j = 0; j + 1 < n; ++j) edges.push_back({j, j + 1});
    } else if (spec == "matching") {
        if (n % 2 != 0)
            throw DivisibilityError("matching needs even n, got n=" + std::to_string(n));
        for (int j = 0; j < n; j += 2) edges.push_back({j, j + 1});
    } else if (spec.starts_with("factor:P")) {
        const int k = parse_int(spec.substr(8), "path length");
        if (k < 2) throw SpecError("factor:P<k> needs k >= 2");
        if (n % k != 0)
            throw DivisibilityError("factor:P" + std::to_string(k) + " needs " +
                                    std::to_string(k) + " | n, got n=" + std::to_string(n));
        for (int base = 0; base < n; base += k)
            for (int j = 0; j + 1 < k; ++j) edges.push_back({base + j, base + j + 1});
    } else if (spec.starts_with("edges:")) {
        std::string_view rest = spec.substr(6);
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string_view pair = rest.substr(0, comma);
            const std::size_t dash = pair.find('-');
            if (dash == std::string_view::npos)
                throw SpecError("edge pair '" + std::string(pair) + "' needs the form i-j");
            const int a = parse_int(pair.substr(0, dash), "edge endpoint");
            const int b = parse_int(pair.substr(dash + 1), "edge endpoint");
            if (a == b) throw SpecError("self-loop " + std::string(pair));
            edges.push_back(a < b ? VertexPair{a, b} : VertexPair{b, a});
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    } else {
        throw SpecError("unknown pattern spec '" + std::string(spec) + "'");
    }
    return make_pattern(n, std::move(edges), std::string(spec));
}

} // namespace zsf
