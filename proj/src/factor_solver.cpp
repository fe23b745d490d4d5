#include "zsf/factor_solver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zsf/enumerate.hpp"
#include "zsf/pattern.hpp"
#include "zsf/swapwalk.hpp"

namespace zsf {
namespace {

struct OrientedPath {
    std::array<int, 4> verts{-1, -1, -1, -1};
    std::array<std::int8_t, 3> labels{};
};

// Both orientations of every factor path with their label tuples.
std::vector<std::array<OrientedPath, 2>> orient_paths(const EdgeLabeling& labeling,
                                                      const PathFactor& factor) {
    std::vector<std::array<OrientedPath, 2>> out(factor.paths.size());
    const int k = factor.k;
    for (std::size_t i = 0; i < factor.paths.size(); ++i) {
        OrientedPath fwd;
        fwd.verts = factor.paths[i];
        for (int j = 0; j + 1 < k; ++j)
            fwd.labels[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(
                labeling.label(fwd.verts[static_cast<std::size_t>(j)],
                               fwd.verts[static_cast<std::size_t>(j) + 1]));
        OrientedPath rev = fwd;
        std::reverse(rev.verts.begin(), rev.verts.begin() + k);
        std::reverse(rev.labels.begin(), rev.labels.begin() + (k - 1));
        out[i] = {fwd, rev};
    }
    return out;
}

// Attempts to bind the template to the given oriented paths; returns the
// concrete exchange on success.
std::optional<EdgeExchange> bind_template(const EdgeLabeling& labeling, const ExchangeTemplate& tmpl,
                                 const std::array<const OrientedPath*, 3>& bound) {
    const auto vertex = [&](const SlotVertex& v) {
        return bound[v.path]->verts[v.pos];
    };
    for (const auto& r : tmpl.required) {
        const int a = vertex(r.edge.x), b = vertex(r.edge.y);
        if (labeling.label(std::min(a, b), std::max(a, b)) != r.label) return std::nullopt;
    }
    EdgeExchange ex;
    for (const auto& e : tmpl.removed)
        ex.removed.push_back(VertexPair::of(vertex(e.x), vertex(e.y)));
    for (const auto& e : tmpl.added)
        ex.added.push_back(VertexPair::of(vertex(e.x), vertex(e.y)));
    for (const auto& e : ex.added) ex.delta += labeling.label(e);
    for (const auto& e : ex.removed) ex.delta -= labeling.label(e);
    return ex;
}

// Runs one catalog pass over all bindings; wanted_delta is in normalized
// (weight +2) terms.  When `stats` is set, collects type-matching
// bindings whose label preconditions failed instead of returning.
std::optional<EdgeExchange> scan_catalog(const EdgeLabeling& normalized,
                                         const PathFactor& factor, int wanted_delta,
                                         std::map<std::string, long long>* stats) {
    const auto& catalog = catalog_for(factor.k);
    const auto oriented = orient_paths(normalized, factor);
    const int paths = static_cast<int>(factor.paths.size());

    for (const auto& tmpl : catalog) {
        if (!stats && tmpl.delta != wanted_delta) continue;
        // candidate (path, orientation) lists per slot
        std::array<std::vector<const OrientedPath*>, 3> cands;
        std::array<std::vector<int>, 3> cand_path;
        bool feasible = true;
        for (int s = 0; s < tmpl.slots && feasible; ++s) {
            for (int i = 0; i < paths; ++i)
                for (int o = 0; o < 2; ++o)
                    if (oriented[static_cast<std::size_t>(i)][static_cast<std::size_t>(o)].labels ==
                        tmpl.types[static_cast<std::size_t>(s)]) {
                        cands[static_cast<std::size_t>(s)].push_back(
                            &oriented[static_cast<std::size_t>(i)][static_cast<std::size_t>(o)]);
                        cand_path[static_cast<std::size_t>(s)].push_back(i);
                    }
            feasible = !cands[static_cast<std::size_t>(s)].empty();
        }
        if (!feasible) continue;

        std::array<std::size_t, 3> pick{0, 0, 0};
        for (;;) {
            bool distinct = true;
            for (int s = 0; s < tmpl.slots && distinct; ++s)
                for (int r = s + 1; r < tmpl.slots; ++r)
                    if (cand_path[static_cast<std::size_t>(s)][pick[static_cast<std::size_t>(s)]] ==
                        cand_path[static_cast<std::size_t>(r)][pick[static_cast<std::size_t>(r)]]) {
                        distinct = false;
                        break;
                    }
            if (distinct) {
                std::array<const OrientedPath*, 3> bound{nullptr, nullptr, nullptr};
                for (int s = 0; s < tmpl.slots; ++s)
                    bound[static_cast<std::size_t>(s)] =
                        cands[static_cast<std::size_t>(s)][pick[static_cast<std::size_t>(s)]];
                if (auto ex = bind_template(normalized, tmpl, bound)) {
                    if (!stats) return ex;
                } else if (stats) {
                    ++(*stats)[tmpl.family];
                }
            }
            // advance in lexicographic path order: last slot varies fastest
            int s = tmpl.slots - 1;
            while (s >= 0 && ++pick[static_cast<std::size_t>(s)] ==
                                 cands[static_cast<std::size_t>(s)].size()) {
                pick[static_cast<std::size_t>(s)] = 0;
                --s;
            }
            if (s < 0) break;
        }
    }
    return std::nullopt;
}

EdgeExchange renormalize(const EdgeLabeling& labeling, EdgeExchange ex) {
    ex.delta = 0;
    for (const auto& e : ex.added) ex.delta += labeling.label(e);
    for (const auto& e : ex.removed) ex.delta -= labeling.label(e);
    return ex;
}

} // namespace

std::optional<EdgeExchange> template_search(const EdgeLabeling& labeling,
                                            const PathFactor& factor) {
    const long long w = factor_weight(labeling, factor);
    if (std::llabs(w) != 2) return std::nullopt; // nothing to do away from |weight| = 2
    const EdgeLabeling normalized = w > 0 ? labeling : labeling.negated();
    // first the exchanges reaching zero, then the ones passing through -2
    if (auto ex = scan_catalog(normalized, factor, -2, nullptr))
        return renormalize(labeling, *ex);
    if (auto ex = scan_catalog(normalized, factor, -4, nullptr))
        return renormalize(labeling, *ex);
    return std::nullopt;
}

std::map<std::string, long long> template_match_stats(const EdgeLabeling& labeling,
                                                      const PathFactor& factor) {
    const long long w = factor_weight(labeling, factor);
    const EdgeLabeling normalized = w >= 0 ? labeling : labeling.negated();
    std::map<std::string, long long> stats;
    scan_catalog(normalized, factor, 0, &stats);
    return stats;
}

namespace {

// Enumerates partitions of `verts` into k-paths; the visitor receives the
// paths and the partition's weight and returns true to keep going.
struct PartitionEnum {
    const EdgeLabeling* labeling = nullptr;
    int k = 3;
    std::vector<int> verts;
    std::vector<char> used;
    std::vector<std::array<int, 4>> blocks;
    long long weight = 0;
    unsigned long long leaves = 0;
    std::optional<long long> target; // prune against remaining edge count
    std::function<bool(const std::vector<std::array<int, 4>>&, long long)> visit;
    bool stopped = false;

    void run() {
        const std::size_t first = [&] {
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (!used[i]) return i;
            return verts.size();
        }();
        if (first == verts.size()) {
            ++leaves;
            if (!visit(blocks, weight)) stopped = true;
            return;
        }
        if (target) {
            const long long remaining =
                static_cast<long long>(verts.size() - blocks.size() * k) / k * (k - 1);
            if (std::llabs(*target - weight) > remaining) return;
        }
        used[first] = 1;
        std::vector<std::size_t> chosen;
        pick_members(first, first, chosen);
        used[first] = 0;
    }

    void pick_members(std::size_t anchor, std::size_t from, std::vector<std::size_t>& chosen) {
        if (stopped) return;
        if (static_cast<int>(chosen.size()) == k - 1) {
            arrange(anchor, chosen);
            return;
        }
        for (std::size_t i = from + 1; i < verts.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            chosen.push_back(i);
            pick_members(anchor, i, chosen);
            chosen.pop_back();
            used[i] = 0;
            if (stopped) return;
        }
    }

    // all k!/2 paths on {anchor} + chosen
    void arrange(std::size_t anchor, const std::vector<std::size_t>& chosen) {
        std::array<int, 4> members{-1, -1, -1, -1};
        members[0] = verts[anchor];
        for (std::size_t i = 0; i < chosen.size(); ++i)
            members[i + 1] = verts[chosen[i]];
        std::array<int, 4> perm = members;
        std::sort(perm.begin(), perm.begin() + k);
        do {
            if (perm[0] > perm[static_cast<std::size_t>(k - 1)]) continue;
            long long block_weight = 0;
            for (int i = 0; i + 1 < k; ++i)
                block_weight += labeling->label(perm[static_cast<std::size_t>(i)],
                                                perm[static_cast<std::size_t>(i) + 1]);
            blocks.push_back(perm);
            weight += block_weight;
            run();
            weight -= block_weight;
            blocks.pop_back();
            if (stopped) return;
        } while (std::next_permutation(perm.begin(), perm.begin() + k));
    }
};

} // namespace

std::optional<EdgeExchange> repartition_search(const EdgeLabeling& labeling,
                                               const PathFactor& factor, int max_paths) {
    const long long w = factor_weight(labeling, factor);
    if (std::llabs(w) != 2) return std::nullopt;
    const int paths = static_cast<int>(factor.paths.size());
    const int k = factor.k;

    std::vector<int> subset;
    std::optional<EdgeExchange> found;

    const auto try_subset = [&]() {
        std::vector<int> verts;
        long long old_sub = 0;
        std::vector<VertexPair> old_edges;
        for (int idx : subset) {
            const auto& path = factor.paths[static_cast<std::size_t>(idx)];
            for (int i = 0; i < k; ++i) verts.push_back(path[static_cast<std::size_t>(i)]);
            for (int i = 0; i + 1 < k; ++i) {
                const auto e = VertexPair::of(path[static_cast<std::size_t>(i)],
                                              path[static_cast<std::size_t>(i) + 1]);
                old_edges.push_back(e);
                old_sub += labeling.label(e);
            }
        }
        std::sort(verts.begin(), verts.end());
        std::sort(old_edges.begin(), old_edges.end());

        PartitionEnum en;
        en.labeling = &labeling;
        en.k = k;
        en.verts = verts;
        en.used.assign(verts.size(), 0);
        en.target = old_sub - w;
        en.visit = [&](const std::vector<std::array<int, 4>>& blocks, long long sub) {
            if (sub != old_sub - w) return true;
            EdgeExchange ex;
            std::vector<VertexPair> new_edges;
            for (const auto& b : blocks)
                for (int i = 0; i + 1 < k; ++i)
                    new_edges.push_back(VertexPair::of(b[static_cast<std::size_t>(i)],
                                                       b[static_cast<std::size_t>(i) + 1]));
            std::sort(new_edges.begin(), new_edges.end());
            std::set_difference(old_edges.begin(), old_edges.end(), new_edges.begin(),
                                new_edges.end(), std::back_inserter(ex.removed));
            std::set_difference(new_edges.begin(), new_edges.end(), old_edges.begin(),
                                old_edges.end(), std::back_inserter(ex.added));
            ex.delta = -w;
            found = std::move(ex);
            return false;
        };
        en.run();
        return found.has_value();
    };

    // subsets in lexicographic order, sizes 1..max_paths
    const std::function<bool(int, int)> choose = [&](int from, int need) {
        if (need == 0) return try_subset();
        for (int i = from; i < paths; ++i) {
            subset.push_back(i);
            if (choose(i + 1, need - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= max_paths && !found; ++size) choose(0, size);
    return found;
}

unsigned long long count_k_path_partitions(int num_vertices, int k) {
    if (num_vertices % k != 0)
        throw DivisibilityError("vertex count must be a multiple of k");
    PartitionEnum en;
    const EdgeLabeling dummy(num_vertices);
    en.labeling = &dummy;
    en.k = k;
    en.verts.resize(static_cast<std::size_t>(num_vertices));
    for (int i = 0; i < num_vertices; ++i) en.verts[static_cast<std::size_t>(i)] = i;
    en.used.assign(en.verts.size(), 0);
    en.visit = [](const std::vector<std::array<int, 4>>&, long long) { return true; };
    en.run();
    return en.leaves;
}

const char* to_string(SolveStage stage) {
    switch (stage) {
        case SolveStage::direct: return "direct";
        case SolveStage::templates: return "templates";
        case SolveStage::repartition2: return "repartition2";
        case SolveStage::repartition3: return "repartition3";
        case SolveStage::exhaustive: return "exhaustive";
    }
    return "unknown";
}

std::string UnresolvedReport::text() const {
    std::ostringstream out;
    out << "unresolved=true\n";
    out << "best_weight=" << best_weight << "\n";
    for (const auto& [type, count] : census)
        out << "census" << to_string(type) << "=" << count << "\n";
    for (const auto& [family, count] : near_misses)
        out << "near_miss." << family << "=" << count << "\n";
    out << "proven_infeasible=" << (proven_infeasible ? "true" : "false") << "\n";
    for (const auto& note : notes) out << "note=" << note << "\n";
    return out.str();
}

UnresolvedError::UnresolvedError(UnresolvedReport r)
    : Error("factor solve unresolved:\n" + r.text()), report(std::move(r)) {}

namespace {

struct PipelineOutcome {
    std::optional<PathFactor> factor;
    SolveStage stage = SolveStage::direct;
    std::optional<UnresolvedReport> report;
};

PipelineOutcome run_pipeline(const EdgeLabeling& labeling, int k, std::uint64_t seed) {
    const int n = labeling.n();
    const auto pattern = parse_pattern("factor:P" + std::to_string(k), n);

    const auto bc = bounded_copy(labeling, pattern, {.seed = seed});
    PathFactor factor = factor_from_embedding(k, bc.embedding);

    PipelineOutcome outcome;
    constexpr int kMaxRounds = 64;
    constexpr int kTemplateRounds = 32;
    for (int round = 0; round < kMaxRounds; ++round) {
        const long long w = factor_weight(labeling, factor);
        if (w == 0) {
            validate_factor(factor, n);
            outcome.factor = std::move(factor);
            return outcome;
        }

        if (k == 4) {
            // normalize against the weight-positive view of the labels
            const EdgeLabeling view = w > 0 ? labeling : labeling.negated();
            const auto norm = p4_normalize(view, factor);
            factor = norm.factor;
            if (norm.zero_sum) {
                outcome.stage = std::max(outcome.stage, SolveStage::templates);
                continue;
            }
        }

        if (round < kTemplateRounds) {
            if (auto ex = template_search(labeling, factor)) {
                factor = apply_exchange(labeling, factor, *ex);
                outcome.stage = std::max(outcome.stage, SolveStage::templates);
                continue;
            }
        }
        if (auto ex = repartition_search(labeling, factor, 2)) {
            factor = apply_exchange(labeling, factor, *ex);
            outcome.stage = std::max(outcome.stage, SolveStage::repartition2);
            continue;
        }
        if (auto ex = repartition_search(labeling, factor, 3)) {
            factor = apply_exchange(labeling, factor, *ex);
            outcome.stage = std::max(outcome.stage, SolveStage::repartition3);
            continue;
        }
        break;
    }

    // stuck: exhaustive fallback at guarded sizes, else report
    UnresolvedReport report;
    report.best_factor = factor;
    report.best_weight = factor_weight(labeling, factor);
    report.census = classify(labeling, factor);
    report.near_misses = template_match_stats(labeling, factor);

    if (n <= 12) {
        const auto oracle = min_abs_weight_exhaustive(labeling, pattern, kEnumerationGuard, 0);
        if (oracle.min_abs == 0) {
            PathFactor found = factor_from_embedding(k, oracle.witness);
            validate_factor(found, n);
            outcome.factor = std::move(found);
            outcome.stage = SolveStage::exhaustive;
            return outcome;
        }
        report.proven_infeasible = true;
        report.notes.push_back("exhaustive search: minimum |weight| over all factors is " +
                               std::to_string(oracle.min_abs));
    } else {
        report.notes.push_back("exhaustive fallback disabled for n=" + std::to_string(n) +
                               " (guard is n <= 12)");
    }
    if (k == 4) {
        int mixed = 0;
        for (const auto& [type, count] : report.census)
            if (type.weight() != 3 && type.weight() != -3) mixed += count;
        report.notes.push_back(
            "mixed-type paths=" + std::to_string(mixed) +
            "; the pair-counting argument closes only for n >= 84, n=" + std::to_string(n) +
            (n < 84 ? " is below the asymptotic regime" : ""));
    }
    outcome.report = std::move(report);
    return outcome;
}

void check_zero_sum(const EdgeLabeling& labeling, const char* who) {
    if (!labeling.zero_sum())
        throw PreconditionError(std::string(who) + " needs a zero-sum labeling");
}

} // namespace

P3Result solve_p3(const EdgeLabeling& labeling, std::uint64_t seed) {
    const int n = labeling.n();
    if (n % 3 != 0)
        throw DivisibilityError("solve_p3 needs 3 | n, got n=" + std::to_string(n));
    if ((static_cast<long long>(n) * (n - 1) / 2) % 2 != 0)
        throw DivisibilityError("solve_p3 needs an even edge count, got n=" + std::to_string(n));
    check_zero_sum(labeling, "solve_p3");

    auto outcome = run_pipeline(labeling, 3, seed);
    if (!outcome.factor) throw UnresolvedError(std::move(*outcome.report));
    if (factor_weight(labeling, *outcome.factor) != 0)
        throw std::logic_error("solve_p3 produced a non-zero factor");
    return {std::move(*outcome.factor), outcome.stage};
}

P4Result solve_p4(const EdgeLabeling& labeling, std::uint64_t seed) {
    const int n = labeling.n();
    if (n % 8 != 0)
        throw DivisibilityError("solve_p4 needs 8 | n, got n=" + std::to_string(n));
    check_zero_sum(labeling, "solve_p4");

    auto outcome = run_pipeline(labeling, 4, seed);
    P4Result result;
    result.stage = outcome.stage;
    if (outcome.factor) {
        if (factor_weight(labeling, *outcome.factor) != 0)
            throw std::logic_error("solve_p4 produced a non-zero factor");
        result.factor = std::move(*outcome.factor);
    } else {
        result.report = std::move(outcome.report);
    }
    return result;
}

} // namespace zsf
