#pragma once

// JSON interchange. Field names are part of the tool's contract:
//   group        {"factors":[n1,...,nr]}
//   element      [c1,...,cr]
//   sequence     {"group":G, "terms":[[element, multiplicity],...]}
//   homomorphism {"domain":G, "codomain":G, "images":[element,...]}
//   weight set   {"domain":G, "codomain":G, "homs":[[element,...],...]}
//   omega set    {"group":G, "members":[sequence,...], "provenance":str}
//   result       {"value":int | {"above_cap":int}, "witness":sequence}
//   cover        {"group":G, "cosets":[{"rep":element,
//                                       "subgroup_gens":[element,...]},...]}

#include <string>
#include <vector>

#include <json.hpp>

#include "zerosum/certificates.hpp"
#include "zerosum/covers.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/hom.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/sequence.hpp"
#include "zerosum/weighted.hpp"

namespace zerosum {

using json = nlohmann::json;

namespace detail {

inline const json& need(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

inline std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw InputError(std::string(what) + ": expected integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace detail

// --- encoders -------------------------------------------------------------

inline json encode(const FiniteAbelianGroup& g) {
    return json{{"factors", g.factors()}};
}

inline json encode(const GroupElement& e) { return json(e.coords()); }

inline json encode(const GSequence& t) {
    json terms = json::array();
    for (auto [i, m] : t.terms())
        terms.push_back(json::array({encode(t.group().element_at(i)), m}));
    return json{{"group", encode(t.group())}, {"terms", terms}};
}

inline json encode(const Homomorphism& h) {
    json images = json::array();
    for (const auto& e : h.gen_images()) images.push_back(encode(e));
    return json{{"domain", encode(h.domain())},
                {"codomain", encode(h.codomain())},
                {"images", images}};
}

inline json encode(const WeightSet& psi) {
    json homs = json::array();
    for (const auto& h : psi.homs()) {
        json images = json::array();
        for (const auto& e : h.gen_images()) images.push_back(encode(e));
        homs.push_back(images);
    }
    return json{{"domain", encode(psi.domain())},
                {"codomain", encode(psi.codomain())},
                {"homs", homs}};
}

inline json encode(const OmegaSet& omega) {
    json members = json::array();
    for (const auto& v : omega.members()) members.push_back(encode(v));
    return json{{"group", encode(omega.group())},
                {"members", members},
                {"provenance", omega.provenance()}};
}

inline json encode(const InvariantResult& r) {
    json value = r.above_cap ? json{{"above_cap", r.value}} : json(r.value);
    return json{{"value", value}, {"witness", encode(r.witness)}};
}

inline json encode(const IntSequence& t) {
    IntSequence sorted(t);
    std::sort(sorted.begin(), sorted.end());
    return json(sorted);
}

inline json encode(const Coset& c) {
    // emit a small generating set of the subgroup rather than all members
    const auto& g = c.group();
    IndexSet span{0};
    std::vector<int> gens;
    for (int h : c.subgroup()) {
        if (std::binary_search(span.begin(), span.end(), h)) continue;
        gens.push_back(h);
        span = subgroup_generated_idx(g, gens);
    }
    json jg = json::array();
    for (int x : gens) jg.push_back(encode(g.element_at(x)));
    return json{{"rep", encode(c.representative())}, {"subgroup_gens", jg}};
}

inline json encode(const CoverSystem& s) {
    json cs = json::array();
    for (const auto& c : s.cosets) cs.push_back(encode(c));
    return json{{"group", encode(s.ambient)}, {"cosets", cs}};
}

// --- decoders -------------------------------------------------------------

inline FiniteAbelianGroup decode_group(const json& j) {
    return FiniteAbelianGroup(
        detail::int_list(detail::need(j, "factors", "group"), "group factors"));
}

inline GroupElement decode_element(const json& j, const FiniteAbelianGroup& g) {
    return g.element(detail::int_list(j, "element"));
}

inline GSequence decode_sequence(const json& j) {
    auto g = decode_group(detail::need(j, "group", "sequence"));
    const auto& terms = detail::need(j, "terms", "sequence");
    if (!terms.is_array()) throw InputError("sequence: terms must be an array");
    std::vector<std::pair<int, int>> counts;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2)
            throw InputError("sequence: each term is [element, multiplicity]");
        auto e = decode_element(t.at(0), g);
        if (!t.at(1).is_number_integer() || t.at(1).get<int>() < 1)
            throw InputError("sequence: multiplicity must be a positive integer");
        counts.emplace_back(e.index(), t.at(1).get<int>());
    }
    return GSequence::from_counts(g, std::move(counts));
}

inline Homomorphism decode_hom(const json& j) {
    auto f = decode_group(detail::need(j, "domain", "homomorphism"));
    auto g = decode_group(detail::need(j, "codomain", "homomorphism"));
    const auto& images = detail::need(j, "images", "homomorphism");
    if (!images.is_array()) throw InputError("homomorphism: images must be an array");
    std::vector<GroupElement> gi;
    for (const auto& e : images) gi.push_back(decode_element(e, g));
    return {f, g, std::move(gi)};
}

inline WeightSet decode_weightset(const json& j) {
    auto f = decode_group(detail::need(j, "domain", "weight set"));
    auto g = decode_group(detail::need(j, "codomain", "weight set"));
    const auto& homs = detail::need(j, "homs", "weight set");
    if (!homs.is_array()) throw InputError("weight set: homs must be an array");
    std::vector<Homomorphism> hs;
    for (const auto& images : homs) {
        if (!images.is_array()) throw InputError("weight set: each hom is an image list");
        std::vector<GroupElement> gi;
        for (const auto& e : images) gi.push_back(decode_element(e, g));
        hs.emplace_back(f, g, std::move(gi));
    }
    return {f, g, std::move(hs)};
}

inline OmegaSet decode_omegaset(const json& j) {
    auto g = decode_group(detail::need(j, "group", "omega set"));
    const auto& members = detail::need(j, "members", "omega set");
    if (!members.is_array()) throw InputError("omega set: members must be an array");
    std::vector<GSequence> ms;
    for (const auto& m : members) {
        auto v = decode_sequence(m);
        if (v.group() != g) throw InputError("omega set: member over a different group");
        ms.push_back(std::move(v));
    }
    std::string prov = j.contains("provenance") && j.at("provenance").is_string()
                           ? j.at("provenance").get<std::string>()
                           : "explicit";
    return {g, std::move(ms), prov};
}

inline InvariantResult decode_invariant(const json& j) {
    auto w = decode_sequence(detail::need(j, "witness", "invariant result"));
    const auto& value = detail::need(j, "value", "invariant result");
    if (value.is_number_integer())
        return {value.get<int>(), false, std::move(w)};
    if (value.is_object() && value.contains("above_cap"))
        return {value.at("above_cap").get<int>(), true, std::move(w)};
    throw InputError("invariant result: malformed value");
}

inline CoverSystem decode_cover(const json& j) {
    auto g = decode_group(detail::need(j, "group", "cover"));
    const auto& cs = detail::need(j, "cosets", "cover");
    if (!cs.is_array()) throw InputError("cover: cosets must be an array");
    std::vector<Coset> out;
    for (const auto& c : cs) {
        auto rep = decode_element(detail::need(c, "rep", "coset"), g);
        const auto& gens = detail::need(c, "subgroup_gens", "coset");
        if (!gens.is_array()) throw InputError("coset: subgroup_gens must be an array");
        IndexSet gi;
        for (const auto& e : gens) gi.push_back(decode_element(e, g).index());
        out.emplace_back(g, rep.index(), subgroup_generated_idx(g, gi));
    }
    return {g, std::move(out)};
}

} // namespace zerosum
