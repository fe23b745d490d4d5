#ifndef ZSF_EXCHANGE_TEMPLATES_HPP
#define ZSF_EXCHANGE_TEMPLATES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace zsf {

// Template coordinates: (path slot, position along the path).
struct SlotVertex {
    std::uint8_t path = 0;
    std::uint8_t pos = 0;
    auto operator<=>(const SlotVertex&) const = default;
};

struct SlotEdge {
    SlotVertex x, y;
    static SlotEdge of(SlotVertex a, SlotVertex b) { return a < b ? SlotEdge{a, b} : SlotEdge{b, a}; }
    auto operator<=>(const SlotEdge&) const = default;
};

struct LabelRequirement {
    SlotEdge edge;
    std::int8_t label = 0;
    auto operator<=>(const LabelRequirement&) const = default;
};

// One exchange move over 1..3 paths of a weight-2 factor.  types[s] pins
// the labels along slot s's path; `required` pins chord and cross labels.
// Under these preconditions, applying removed -> added always yields a
// valid factor whose weight changes by exactly `delta` (-2 reaches zero,
// -4 passes through weight -2 and is finished after negating the labels).
//
// The catalog is data: base entries transcribe the case analysis of the
// factor proofs one for one, and a closure pass composes each entry with
// the weight-preserving path re-orderings those arguments allow (rotating
// a path onto one of its positive chords), so a single transcription
// covers all the positions the case is invoked for.
struct ExchangeTemplate {
    int k = 3;
    int slots = 1;
    std::array<std::array<std::int8_t, 3>, 3> types{};
    std::vector<LabelRequirement> required;
    std::vector<SlotEdge> removed;
    std::vector<SlotEdge> added;
    int delta = 0;
    std::string family;
};

const std::vector<ExchangeTemplate>& p3_catalog();
const std::vector<ExchangeTemplate>& p4_catalog();
const std::vector<ExchangeTemplate>& catalog_for(int k);

// Base transcriptions only, before symmetry closure (for the soundness
// and snapshot tests).
const std::vector<ExchangeTemplate>& p3_base_templates();
const std::vector<ExchangeTemplate>& p4_base_templates();

} // namespace zsf

#endif
