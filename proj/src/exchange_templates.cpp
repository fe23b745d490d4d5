#include "zsf/exchange_templates.hpp"


#include "zsf/errors.hpp"
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace zsf {
namespace {

using Type = std::array<std::int8_t, 3>;

constexpr Type kP3_PP{1, 1, 0};
constexpr Type kP3_PM{1, -1, 0};
constexpr Type kP3_MM{-1, -1, 0};

constexpr Type kP4_PPP{1, 1, 1};
constexpr Type kP4_PPM{1, 1, -1};
constexpr Type kP4_MPM{-1, 1, -1};
constexpr Type kP4_PMM{1, -1, -1};
constexpr Type kP4_MMM{-1, -1, -1};
constexpr Type kP4_PMP{1, -1, 1};

SlotEdge edge(int pa, int va, int pb, int vb) {
    return SlotEdge::of({static_cast<std::uint8_t>(pa), static_cast<std::uint8_t>(va)},
                        {static_cast<std::uint8_t>(pb), static_cast<std::uint8_t>(vb)});
}

bool is_path_edge(const SlotEdge& e, int /*k*/) {
    return e.x.path == e.y.path && e.y.pos == e.x.pos + 1;
}

struct Builder {
    ExchangeTemplate t;

    Builder(int k, std::initializer_list<Type> types, std::string family) {
        t.k = k;
        t.slots = static_cast<int>(types.size());
        int s = 0;
        for (const auto& ty : types) t.types[static_cast<std::size_t>(s++)] = ty;
        t.family = std::move(family);
    }

    Builder& req(int pa, int va, int pb, int vb, int label) {
        t.required.push_back({edge(pa, va, pb, vb), static_cast<std::int8_t>(label)});
        return *this;
    }
    Builder& out(int pa, int va, int pb, int vb) {
        t.removed.push_back(edge(pa, va, pb, vb));
        return *this;
    }
    Builder& in(int pa, int va, int pb, int vb) {
        t.added.push_back(edge(pa, va, pb, vb));
        return *this;
    }

    int resolve(const SlotEdge& e) const {
        if (is_path_edge(e, t.k)) return t.types[e.x.path][e.x.pos];
        for (const auto& r : t.required)
            if (r.edge == e) return r.label;
        throw std::logic_error("template " + t.family + " references an unpinned edge label");
    }

    ExchangeTemplate done() {
        for (const auto& e : t.removed)
            if (!is_path_edge(e, t.k))
                throw std::logic_error("template " + t.family + " removes a non-factor edge");
        int delta = 0;
        for (const auto& e : t.added) delta += resolve(e);
        for (const auto& e : t.removed) delta -= resolve(e);
        t.delta = delta;
        std::sort(t.required.begin(), t.required.end());
        std::sort(t.removed.begin(), t.removed.end());
        std::sort(t.added.begin(), t.added.end());
        return t;
    }
};

// ---------------------------------------------------------------------
// Base transcriptions, P3.  Slot coordinates: path s = (s:0, s:1, s:2).

std::vector<ExchangeTemplate> build_p3_base() {
    std::vector<ExchangeTemplate> v;

    // a positive chord closes a (1,1) or (1,-1) path onto itself
    v.push_back(Builder(3, {kP3_PP}, "p3.single.pp")
                    .req(0, 0, 0, 2, -1)
                    .out(0, 0, 0, 1)
                    .in(0, 0, 0, 2)
                    .done());
    v.push_back(Builder(3, {kP3_PM}, "p3.single.pm")
                    .req(0, 0, 0, 2, -1)
                    .out(0, 0, 0, 1)
                    .in(0, 0, 0, 2)
                    .done());

    // (1,1) x (1,-1)
    v.push_back(Builder(3, {kP3_PP, kP3_PM}, "p3.pp_pm.a")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, -1)
                    .out(0, 0, 0, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());
    v.push_back(Builder(3, {kP3_PP, kP3_PM}, "p3.pp_pm.b")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());
    v.push_back(Builder(3, {kP3_PP, kP3_PM}, "p3.pp_pm.c")
                    .req(0, 0, 1, 0, +1)
                    .req(0, 2, 1, 2, -1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());

    // (1,1) x (-1,-1)
    v.push_back(Builder(3, {kP3_PP, kP3_MM}, "p3.pp_mm.a")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, -1)
                    .out(0, 0, 0, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());
    v.push_back(Builder(3, {kP3_PP, kP3_MM}, "p3.pp_mm.b")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 1, 1, 1, -1)
                    .req(0, 0, 0, 2, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 0, 0, 2)
                    .in(0, 1, 1, 1)
                    .done());

    // (1,-1) x (1,-1)
    v.push_back(Builder(3, {kP3_PM, kP3_PM}, "p3.pm_pm.a")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, -1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());
    v.push_back(Builder(3, {kP3_PM, kP3_PM}, "p3.pm_pm.b")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 0, 1, 1, -1)
                    .req(0, 2, 1, 2, +1)
                    .out(0, 0, 0, 1)
                    .out(1, 0, 1, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 0, 1, 1)
                    .in(0, 2, 1, 2)
                    .done());
    v.push_back(Builder(3, {kP3_PM, kP3_PM}, "p3.pm_pm.c")
                    .req(0, 0, 1, 0, +1)
                    .req(0, 0, 1, 1, -1)
                    .req(0, 1, 1, 2, -1)
                    .out(0, 0, 0, 1)
                    .out(1, 0, 1, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 0, 1, 1)
                    .in(0, 1, 1, 2)
                    .done());

    // (1,1) x (1,1): reach zero, or pass through weight -2
    v.push_back(Builder(3, {kP3_PP, kP3_PP}, "p3.pp_pp.zero")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, +1)
                    .out(0, 0, 0, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());
    v.push_back(Builder(3, {kP3_PP, kP3_PP}, "p3.pp_pp.drop")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, -1)
                    .out(0, 0, 0, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());

    return v;
}

// ---------------------------------------------------------------------
// Base transcriptions, P4.

std::vector<ExchangeTemplate> build_p4_base() {
    std::vector<ExchangeTemplate> v;

    // single path: a negative long chord absorbs any positive path edge
    struct ChordCase {
        Type type;
        std::vector<int> positive_edges;
        const char* name;
    };
    const ChordCase long_chord_cases[] = {
        {kP4_PPP, {0, 1, 2}, "p4.single.ppp"}, {kP4_PPM, {0, 1}, "p4.single.ppm"},
        {kP4_PMP, {0, 2}, "p4.single.pmp"},    {kP4_MPM, {1}, "p4.single.mpm"},
        {kP4_PMM, {0}, "p4.single.pmm"},
    };
    for (const auto& c : long_chord_cases)
        for (int e : c.positive_edges)
            v.push_back(Builder(4, {c.type}, c.name)
                            .req(0, 0, 0, 3, -1)
                            .out(0, e, 0, e + 1)
                            .in(0, 0, 0, 3)
                            .done());

    // single path with a positive middle edge: negative short chords
    for (const auto& [type, name] : {std::pair{kP4_PPP, "p4.single2.ppp"},
                                     std::pair{kP4_PPM, "p4.single2.ppm"},
                                     std::pair{kP4_MPM, "p4.single2.mpm"}}) {
        v.push_back(Builder(4, {type}, name)
                        .req(0, 0, 0, 2, -1)
                        .out(0, 1, 0, 2)
                        .in(0, 0, 0, 2)
                        .done());
        v.push_back(Builder(4, {type}, name)
                        .req(0, 1, 0, 3, -1)
                        .out(0, 1, 0, 2)
                        .in(0, 1, 0, 3)
                        .done());
    }

    // (1,1,1) x (1,1,-1)
    for (int eu = 2; eu <= 3; ++eu)
        for (int ev = 2; ev <= 3; ++ev)
            for (int fu = 0; fu <= 1; ++fu)
                for (int fv = 0; fv <= 1; ++fv)
                    v.push_back(Builder(4, {kP4_PPP, kP4_PPM}, "p4.ppp_ppm.a")
                                    .req(0, eu, 1, ev, -1)
                                    .req(0, fu, 1, fv, +1)
                                    .out(0, 1, 0, 2)
                                    .out(1, 1, 1, 2)
                                    .in(0, eu, 1, ev)
                                    .in(0, fu, 1, fv)
                                    .done());
    for (int eu = 2; eu <= 3; ++eu)
        for (int fu = 0; fu <= 1; ++fu) {
            v.push_back(Builder(4, {kP4_PPP, kP4_PPM}, "p4.ppp_ppm.b")
                            .req(0, eu, 1, 2, -1)
                            .req(0, fu, 1, 0, -1)
                            .req(1, 0, 1, 3, +1)
                            .out(0, 1, 0, 2)
                            .out(1, 0, 1, 1)
                            .out(1, 2, 1, 3)
                            .in(0, eu, 1, 2)
                            .in(0, fu, 1, 0)
                            .in(1, 0, 1, 3)
                            .done());
            v.push_back(Builder(4, {kP4_PPP, kP4_PPM}, "p4.ppp_ppm.c")
                            .req(0, eu, 1, 3, -1)
                            .req(0, fu, 1, 1, -1)
                            .req(1, 0, 1, 3, +1)
                            .out(0, 1, 0, 2)
                            .out(1, 0, 1, 1)
                            .out(1, 2, 1, 3)
                            .in(0, eu, 1, 3)
                            .in(0, fu, 1, 1)
                            .in(1, 0, 1, 3)
                            .done());
            v.push_back(Builder(4, {kP4_PPP, kP4_PPM}, "p4.ppp_ppm.d")
                            .req(0, eu, 1, 2, -1)
                            .req(0, fu, 1, 1, -1)
                            .req(1, 0, 1, 2, +1)
                            .req(1, 1, 1, 3, +1)
                            .out(0, 1, 0, 2)
                            .out(1, 0, 1, 1)
                            .out(1, 1, 1, 2)
                            .out(1, 2, 1, 3)
                            .in(0, eu, 1, 2)
                            .in(0, fu, 1, 1)
                            .in(1, 0, 1, 2)
                            .in(1, 1, 1, 3)
                            .done());
            v.push_back(Builder(4, {kP4_PPP, kP4_PPM}, "p4.ppp_ppm.e")
                            .req(0, eu, 1, 3, -1)
                            .req(0, fu, 1, 0, -1)
                            .req(1, 0, 1, 2, +1)
                            .req(1, 1, 1, 3, +1)
                            .out(0, 1, 0, 2)
                            .out(1, 0, 1, 1)
                            .out(1, 1, 1, 2)
                            .out(1, 2, 1, 3)
                            .in(0, eu, 1, 3)
                            .in(0, fu, 1, 0)
                            .in(1, 0, 1, 2)
                            .in(1, 1, 1, 3)
                            .done());
        }
    for (int fu = 0; fu <= 1; ++fu)
        for (int fv = 0; fv <= 1; ++fv)
            v.push_back(Builder(4, {kP4_PPP, kP4_PPM}, "p4.ppp_ppm.f")
                            .req(0, fu, 1, fv, -1)
                            .req(0, 3, 1, 3, +1)
                            .out(0, 1, 0, 2)
                            .out(1, 1, 1, 2)
                            .in(0, fu, 1, fv)
                            .in(0, 3, 1, 3)
                            .done());

    // (1,1,1) x (-1,1,-1)
    v.push_back(Builder(4, {kP4_PPP, kP4_MPM}, "p4.ppp_mpm.a")
                    .req(0, 1, 1, 1, -1)
                    .req(0, 3, 1, 3, -1)
                    .req(0, 0, 0, 2, +1)
                    .req(1, 0, 1, 2, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .out(1, 2, 1, 3)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .in(0, 0, 0, 2)
                    .in(1, 0, 1, 2)
                    .done());
    v.push_back(Builder(4, {kP4_PPP, kP4_MPM}, "p4.ppp_mpm.b")
                    .req(0, 1, 1, 1, -1)
                    .req(0, 3, 1, 3, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPP, kP4_MPM}, "p4.ppp_mpm.c")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());

    // (1,1,-1) x (-1,1,-1)
    v.push_back(Builder(4, {kP4_PPM, kP4_MPM}, "p4.ppm_mpm.a")
                    .req(0, 1, 1, 1, -1)
                    .req(0, 3, 1, 3, -1)
                    .req(0, 0, 0, 3, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 2, 0, 3)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .in(0, 0, 0, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_MPM}, "p4.ppm_mpm.b")
                    .req(0, 1, 1, 1, +1)
                    .req(0, 3, 1, 3, -1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_MPM}, "p4.ppm_mpm.c")
                    .req(0, 1, 1, 1, -1)
                    .req(0, 3, 1, 3, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .done());

    // (1,1,-1) x (1,1,-1)
    v.push_back(Builder(4, {kP4_PPM, kP4_PPM}, "p4.ppm_ppm.a")
                    .req(0, 1, 1, 1, -1)
                    .req(0, 3, 1, 3, -1)
                    .req(0, 0, 0, 3, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 2, 0, 3)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .in(0, 0, 0, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PPM}, "p4.ppm_ppm.b")
                    .req(0, 1, 1, 1, +1)
                    .req(0, 3, 1, 3, -1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PPM}, "p4.ppm_ppm.c")
                    .req(0, 1, 1, 1, -1)
                    .req(0, 3, 1, 3, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PPM}, "p4.ppm_ppm.d")
                    .req(0, 2, 1, 1, -1)
                    .req(0, 1, 1, 2, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 2, 1, 1)
                    .in(0, 1, 1, 2)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PPM}, "p4.ppm_ppm.e")
                    .req(0, 2, 1, 1, -1)
                    .req(0, 1, 1, 2, -1)
                    .req(0, 0, 0, 2, +1)
                    .req(0, 1, 0, 3, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(0, 2, 0, 3)
                    .out(1, 1, 1, 2)
                    .in(0, 2, 1, 1)
                    .in(0, 1, 1, 2)
                    .in(0, 0, 0, 2)
                    .in(0, 1, 0, 3)
                    .done());

    // (1,1,1) x (1,1,1), plus the three-path rescue when all cross edges
    // between two such paths are negative
    v.push_back(Builder(4, {kP4_PPP, kP4_PPP}, "p4.ppp_ppp.zero")
                    .req(0, 1, 1, 1, -1)
                    .req(0, 3, 1, 3, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 1, 1, 1)
                    .in(0, 3, 1, 3)
                    .done());
    for (const auto& [rtype, rname] : {std::pair{kP4_PPM, "p4.ppp_ppp_r.ppm"},
                                       std::pair{kP4_MPM, "p4.ppp_ppp_r.mpm"},
                                       std::pair{kP4_PMM, "p4.ppp_ppp_r.pmm"}})
        v.push_back(Builder(4, {kP4_PPP, kP4_PPP, rtype}, rname)
                        .req(0, 0, 1, 1, -1)
                        .req(0, 1, 1, 0, -1)
                        .req(2, 0, 2, 3, +1)
                        .out(0, 0, 0, 1)
                        .out(1, 0, 1, 1)
                        .out(2, 2, 2, 3)
                        .in(0, 0, 1, 1)
                        .in(0, 1, 1, 0)
                        .in(2, 0, 2, 3)
                        .done());

    // (1,1,1) x (-1,-1,-1)
    for (int fu = 0; fu <= 1; ++fu)
        for (int fv = 0; fv <= 1; ++fv)
            for (int eu = 2; eu <= 3; ++eu)
                for (int ev = 2; ev <= 3; ++ev)
                    v.push_back(Builder(4, {kP4_PPP, kP4_MMM}, "p4.ppp_mmm.a")
                                    .req(0, fu, 1, fv, -1)
                                    .req(0, eu, 1, ev, -1)
                                    .out(0, 1, 0, 2)
                                    .out(1, 1, 1, 2)
                                    .in(0, fu, 1, fv)
                                    .in(0, eu, 1, ev)
                                    .done());
    v.push_back(Builder(4, {kP4_PPP, kP4_MMM}, "p4.ppp_mmm.b")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 1, 1, 0, -1)
                    .req(0, 1, 1, 1, -1)
                    .req(0, 2, 1, 2, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 1, 1, 0)
                    .in(0, 1, 1, 1)
                    .in(0, 2, 1, 2)
                    .done());

    // (1,1,1) x (1,-1,-1)
    v.push_back(Builder(4, {kP4_PPP, kP4_PMM}, "p4.ppp_pmm.a")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 1, 1, 1, -1)
                    .req(0, 0, 0, 3, +1)
                    .req(1, 0, 1, 3, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 2, 0, 3)
                    .out(1, 0, 1, 1)
                    .out(1, 2, 1, 3)
                    .in(0, 0, 1, 0)
                    .in(0, 1, 1, 1)
                    .in(0, 0, 0, 3)
                    .in(1, 0, 1, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPP, kP4_PMM}, "p4.ppp_pmm.b")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 1, 1, 1, +1)
                    .req(0, 0, 0, 2, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 1, 1, 1)
                    .in(0, 0, 0, 2)
                    .done());
    v.push_back(Builder(4, {kP4_PPP, kP4_PMM}, "p4.ppp_pmm.c")
                    .req(0, 3, 1, 3, -1)
                    .req(0, 0, 1, 0, +1)
                    .out(0, 2, 0, 3)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 3, 1, 3)
                    .done());

    // (1,1,-1) x (1,-1,-1)
    v.push_back(Builder(4, {kP4_PPM, kP4_PMM}, "p4.ppm_pmm.a")
                    .req(0, 2, 1, 0, -1)
                    .req(0, 1, 1, 3, -1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 2, 1, 0)
                    .in(0, 1, 1, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PMM}, "p4.ppm_pmm.b")
                    .req(0, 2, 1, 0, -1)
                    .req(0, 1, 1, 3, +1)
                    .req(0, 0, 0, 3, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 2, 1, 0)
                    .in(0, 1, 1, 3)
                    .in(0, 0, 0, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PMM}, "p4.ppm_pmm.c")
                    .req(0, 0, 1, 1, +1)
                    .req(0, 1, 1, 0, -1)
                    .out(0, 0, 0, 1)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 1)
                    .in(0, 1, 1, 0)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PMM}, "p4.ppm_pmm.d")
                    .req(0, 0, 1, 1, -1)
                    .req(0, 1, 1, 0, -1)
                    .req(0, 0, 0, 3, +1)
                    .req(1, 0, 1, 3, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 1)
                    .in(0, 1, 1, 0)
                    .in(0, 0, 0, 3)
                    .in(1, 0, 1, 3)
                    .done());
    v.push_back(Builder(4, {kP4_PPM, kP4_PMM}, "p4.ppm_pmm.e")
                    .req(0, 0, 1, 1, -1)
                    .req(0, 1, 1, 0, +1)
                    .out(0, 0, 0, 1)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 1)
                    .in(0, 1, 1, 0)
                    .done());

    // (-1,1,-1) x (1,-1,-1)
    for (int eu = 0; eu <= 1; ++eu)
        for (int fu = 2; fu <= 3; ++fu) {
            v.push_back(Builder(4, {kP4_MPM, kP4_PMM}, "p4.mpm_pmm.a")
                            .req(0, eu, 1, 1, -1)
                            .req(0, fu, 1, 3, -1)
                            .req(1, 0, 1, 3, +1)
                            .out(0, 1, 0, 2)
                            .out(1, 0, 1, 1)
                            .out(1, 2, 1, 3)
                            .in(0, eu, 1, 1)
                            .in(0, fu, 1, 3)
                            .in(1, 0, 1, 3)
                            .done());
            v.push_back(Builder(4, {kP4_MPM, kP4_PMM}, "p4.mpm_pmm.b")
                            .req(0, eu, 1, 0, -1)
                            .req(0, fu, 1, 2, -1)
                            .out(0, 1, 0, 2)
                            .out(1, 1, 1, 2)
                            .in(0, eu, 1, 0)
                            .in(0, fu, 1, 2)
                            .done());
        }

    // (1,1,-1) x (-1,-1,-1) and (-1,1,-1) x (-1,-1,-1)
    for (const auto& [ptype, pname] : {std::pair{kP4_PPM, "p4.ppm_mmm"},
                                       std::pair{kP4_MPM, "p4.mpm_mmm"}})
        for (int eu = 0; eu <= 1; ++eu)
            for (int ev = 0; ev <= 1; ++ev)
                for (int fu = 2; fu <= 3; ++fu)
                    for (int fv = 2; fv <= 3; ++fv)
                        v.push_back(Builder(4, {ptype, kP4_MMM}, pname)
                                        .req(0, eu, 1, ev, -1)
                                        .req(0, fu, 1, fv, -1)
                                        .out(0, 1, 0, 2)
                                        .out(1, 1, 1, 2)
                                        .in(0, eu, 1, ev)
                                        .in(0, fu, 1, fv)
                                        .done());

    // (1,-1,-1) x (-1,-1,-1)
    for (int ev : {0, 2})
        for (int fu : {1, 3})
            v.push_back(Builder(4, {kP4_PMM, kP4_MMM}, "p4.pmm_mmm.a")
                            .req(0, 0, 1, ev, -1)
                            .req(0, fu, 1, 3, -1)
                            .out(0, 0, 0, 1)
                            .out(1, 2, 1, 3)
                            .in(0, 0, 1, ev)
                            .in(0, fu, 1, 3)
                            .done());
    for (int ev : {1, 3})
        for (int fu : {1, 3})
            v.push_back(Builder(4, {kP4_PMM, kP4_MMM}, "p4.pmm_mmm.b")
                            .req(0, 0, 1, ev, -1)
                            .req(0, fu, 1, 0, -1)
                            .out(0, 0, 0, 1)
                            .out(1, 0, 1, 1)
                            .in(0, 0, 1, ev)
                            .in(0, fu, 1, 0)
                            .done());

    // (-1,1,-1) x (-1,1,-1): reach zero, or pass through weight -2
    v.push_back(Builder(4, {kP4_MPM, kP4_MPM}, "p4.mpm_mpm.zero")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, +1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());
    v.push_back(Builder(4, {kP4_MPM, kP4_MPM}, "p4.mpm_mpm.drop")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 2, -1)
                    .out(0, 1, 0, 2)
                    .out(1, 1, 1, 2)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 2)
                    .done());

    // (1,-1,-1) x (1,-1,-1): four cases, two reach zero, two drop to -2
    v.push_back(Builder(4, {kP4_PMM, kP4_PMM}, "p4.pmm_pmm.a0")
                    .req(0, 1, 1, 0, -1)
                    .req(0, 0, 1, 1, +1)
                    .out(0, 0, 0, 1)
                    .out(1, 0, 1, 1)
                    .in(0, 1, 1, 0)
                    .in(0, 0, 1, 1)
                    .done());
    v.push_back(Builder(4, {kP4_PMM, kP4_PMM}, "p4.pmm_pmm.a2")
                    .req(0, 1, 1, 0, -1)
                    .req(0, 0, 1, 1, -1)
                    .out(0, 0, 0, 1)
                    .out(1, 0, 1, 1)
                    .in(0, 1, 1, 0)
                    .in(0, 0, 1, 1)
                    .done());
    v.push_back(Builder(4, {kP4_PMM, kP4_PMM}, "p4.pmm_pmm.b0")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 0, -1)
                    .req(0, 1, 1, 1, +1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 0)
                    .in(0, 1, 1, 1)
                    .done());
    v.push_back(Builder(4, {kP4_PMM, kP4_PMM}, "p4.pmm_pmm.b2")
                    .req(0, 0, 1, 0, -1)
                    .req(0, 2, 1, 0, -1)
                    .req(0, 1, 1, 1, -1)
                    .out(0, 0, 0, 1)
                    .out(0, 1, 0, 2)
                    .out(1, 0, 1, 1)
                    .in(0, 0, 1, 0)
                    .in(0, 2, 1, 0)
                    .in(0, 1, 1, 1)
                    .done());

    return v;
}

// ---------------------------------------------------------------------
// Symmetry closure: compose each base entry with the weight-preserving
// re-orderings its path types allow and re-express everything in factor
// coordinates.

struct Reordering {
    std::array<std::uint8_t, 4> perm; // virtual position i held by factor position perm[i]
};

std::vector<Reordering> reorderings_for(int k, const Type& type) {
    std::vector<Reordering> out{{{0, 1, 2, 3}}};
    if (k == 3) {
        if (type == kP3_PP) {
            out.push_back({{1, 0, 2, 3}});
            out.push_back({{0, 2, 1, 3}});
        } else if (type == kP3_PM) {
            out.push_back({{0, 2, 1, 3}});
        }
    } else {
        if (type == kP4_PPP) {
            out.clear();
            std::array<std::uint8_t, 4> p{0, 1, 2, 3};
            std::sort(p.begin(), p.end());
            do {
                if (p[0] < p[3]) out.push_back({p});
            } while (std::next_permutation(p.begin(), p.end()));
        } else if (type == kP4_PPM || type == kP4_MPM) {
            out.push_back({{1, 0, 2, 3}});
            out.push_back({{0, 1, 3, 2}});
            out.push_back({{1, 0, 3, 2}});
        } else if (type == kP4_PMM) {
            out.push_back({{0, 3, 2, 1}});
        }
    }
    return out;
}

std::optional<ExchangeTemplate> compose(const ExchangeTemplate& base,
                                        const std::vector<Reordering>& rho) {
    const int k = base.k;
    ExchangeTemplate t;
    t.k = k;
    t.slots = base.slots;
    t.types = base.types;
    t.family = base.family;

    const auto map_vertex = [&](SlotVertex v) {
        return SlotVertex{v.path, rho[v.path].perm[v.pos]};
    };
    const auto map_edge = [&](const SlotEdge& e) {
        return SlotEdge::of(map_vertex(e.x), map_vertex(e.y));
    };

    // requirements in factor coordinates; reject on conflict
    std::map<SlotEdge, int> reqs;
    const auto add_req = [&](const SlotEdge& e, int label) {
        if (is_path_edge(e, k)) return t.types[e.x.path][e.x.pos] == label;
        const auto [it, fresh] = reqs.insert({e, label});
        return fresh || it->second == label;
    };

    // per-slot rotation pre-exchange
    std::set<SlotEdge> pre_out, pre_in;
    for (int s = 0; s < base.slots; ++s) {
        std::set<SlotEdge> factor_edges, virtual_edges;
        for (int i = 0; i + 1 < k; ++i) {
            factor_edges.insert(edge(s, i, s, i + 1));
            const SlotEdge ve = map_edge(edge(s, i, s, i + 1));
            virtual_edges.insert(ve);
            // the virtual path must carry the slot's type
            if (!add_req(ve, base.types[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]))
                return std::nullopt;
        }
        for (const auto& e : factor_edges)
            if (!virtual_edges.contains(e)) pre_out.insert(e);
        for (const auto& e : virtual_edges)
            if (!factor_edges.contains(e)) pre_in.insert(e);
    }

    for (const auto& r : base.required)
        if (!add_req(map_edge(r.edge), r.label)) return std::nullopt;

    std::set<SlotEdge> mapped_out, mapped_in;
    for (const auto& e : base.removed) mapped_out.insert(map_edge(e));
    for (const auto& e : base.added) mapped_in.insert(map_edge(e));

    // net effect of rotation followed by the mapped base exchange
    for (const auto& e : pre_out)
        if (!mapped_in.contains(e)) t.removed.push_back(e);
    for (const auto& e : mapped_out)
        if (!pre_in.contains(e)) t.removed.push_back(e);
    for (const auto& e : pre_in)
        if (!mapped_out.contains(e)) t.added.push_back(e);
    for (const auto& e : mapped_in)
        if (!pre_out.contains(e)) t.added.push_back(e);

    for (const auto& e : t.removed)
        if (!is_path_edge(e, k)) return std::nullopt; // rotation chord not re-added; cannot happen

    const auto resolve = [&](const SlotEdge& e) -> int {
        if (is_path_edge(e, k)) return t.types[e.x.path][e.x.pos];
        return reqs.at(e);
    };
    int delta = 0;
    for (const auto& e : t.added) delta += resolve(e);
    for (const auto& e : t.removed) delta -= resolve(e);
    t.delta = delta;

    for (const auto& [e, label] : reqs)
        t.required.push_back({e, static_cast<std::int8_t>(label)});
    std::sort(t.required.begin(), t.required.end());
    std::sort(t.removed.begin(), t.removed.end());
    std::sort(t.added.begin(), t.added.end());
    if (t.removed.empty()) return std::nullopt; // degenerate: exchange vanished
    return t;
}

std::vector<ExchangeTemplate> close_under_symmetries(const std::vector<ExchangeTemplate>& base) {
    std::vector<ExchangeTemplate> out;
    std::set<std::tuple<std::array<std::array<std::int8_t, 3>, 3>, std::vector<LabelRequirement>,
                        std::vector<SlotEdge>, std::vector<SlotEdge>, int>>
        seen;
    for (const auto& b : base) {
        std::vector<std::vector<Reordering>> slot_choices;
        for (int s = 0; s < b.slots; ++s)
            slot_choices.push_back(reorderings_for(b.k, b.types[static_cast<std::size_t>(s)]));
        std::vector<std::size_t> idx(static_cast<std::size_t>(b.slots), 0);
        for (;;) {
            std::vector<Reordering> rho;
            for (int s = 0; s < b.slots; ++s)
                rho.push_back(slot_choices[static_cast<std::size_t>(s)][idx[static_cast<std::size_t>(s)]]);
            while (rho.size() < 3) rho.push_back({{0, 1, 2, 3}});
            if (auto composed = compose(b, rho)) {
                auto key = std::make_tuple(composed->types, composed->required, composed->removed,
                                           composed->added, composed->delta);
                if (seen.insert(std::move(key)).second) out.push_back(std::move(*composed));
            }
            int s = 0;
            while (s < b.slots && ++idx[static_cast<std::size_t>(s)] ==
                                      slot_choices[static_cast<std::size_t>(s)].size()) {
                idx[static_cast<std::size_t>(s)] = 0;
                ++s;
            }
            if (s == b.slots) break;
        }
    }
    return out;
}

} // namespace

const std::vector<ExchangeTemplate>& p3_base_templates() {
    static const std::vector<ExchangeTemplate> base = build_p3_base();
    return base;
}

const std::vector<ExchangeTemplate>& p4_base_templates() {
    static const std::vector<ExchangeTemplate> base = build_p4_base();
    return base;
}

const std::vector<ExchangeTemplate>& p3_catalog() {
    static const std::vector<ExchangeTemplate> catalog = close_under_symmetries(p3_base_templates());
    return catalog;
}

const std::vector<ExchangeTemplate>& p4_catalog() {
    static const std::vector<ExchangeTemplate> catalog = close_under_symmetries(p4_base_templates());
    return catalog;
}

const std::vector<ExchangeTemplate>& catalog_for(int k) {
    if (k == 3) return p3_catalog();
    if (k == 4) return p4_catalog();
    throw PreconditionError("no template catalog for k=" + std::to_string(k));
}

} // namespace zsf
