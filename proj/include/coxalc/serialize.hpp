#pragma once

// JSON wire formats.  Words are 1-based generator index arrays; Laurent
// polynomials are [exponent, coefficient] pairs, exponent-ascending;
// translations are coroot coordinates.  Requires the vendored nlohmann/json.

#include <json.hpp>

#include "cato.hpp"
#include "padic.hpp"
#include "periodic.hpp"

namespace coxalc {

using nlohmann::json;

inline json to_json(const Laurent& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({e, c.str()});
    return a;
}
inline Laurent laurent_from_json(const json& a) {
    Laurent::Terms t;
    for (const auto& item : a) t.emplace_back(item.at(0).get<long>(), Int(item.at(1).get<std::string>()));
    return Laurent::from_terms(std::move(t));
}

inline json to_json(const Word& w) {
    json a = json::array();
    for (auto i : w) a.push_back(i + 1);
    return a;
}
inline Word word_from_json(const json& a) {
    Word w;
    for (const auto& item : a) {
        long i = item.get<long>();
        if (i < 1) throw std::invalid_argument("generator indices are 1-based");
        w.push_back(static_cast<std::uint8_t>(i - 1));
    }
    return w;
}

inline json to_json(const AlcoveGeometry& G, const AffineElt& x) {
    json t = json::array();
    for (long c : G.coroot_coords(x.t)) t.push_back(c);
    return {{"word", to_json(x.w.word())}, {"translation", t}};
}
inline AffineElt affine_from_json(const AlcoveGeometry& G, const json& j) {
    std::vector<long> coroot;
    for (const auto& c : j.at("translation")) coroot.push_back(c.get<long>());
    AffineElt x{G.group().from_word(word_from_json(j.at("word"))),
                G.coweight_of_coroot(coroot)};
    return x;
}

inline json to_json(const AlcoveGeometry& G, const PeriodicVec& v) {
    json terms = json::array();
    for (const auto& [k, c] : v.terms)
        terms.push_back({to_json(G, G.elt_of(k)), to_json(c)});
    return {{"floor", v.floor}, {"terms", terms}};
}
inline PeriodicVec periodic_from_json(const AlcoveGeometry& G, const json& j) {
    PeriodicVec v;
    v.floor = j.at("floor").get<long>();
    for (const auto& item : j.at("terms"))
        v.terms.emplace(G.key_of(affine_from_json(G, item.at(0))), laurent_from_json(item.at(1)));
    return v;
}

inline json to_json(const WeylGroup& W, const HeckeElt& h) {
    json terms = json::array();
    for (const auto& [wid, c] : h.c) terms.push_back({to_json(W.enumerate()[wid].word()), to_json(c)});
    json out = {{"basis", "tilde_T"}, {"terms", terms}};
    if (h.floor) out["floor"] = *h.floor;
    return out;
}
inline HeckeElt hecke_from_json(const WeylGroup& W, const json& j) {
    if (j.at("basis").get<std::string>() != "tilde_T")
        throw std::invalid_argument("unsupported Hecke basis tag");
    HeckeElt h;
    for (const auto& item : j.at("terms"))
        h.c.emplace(W.element_id(W.from_word(word_from_json(item.at(0)))),
                    laurent_from_json(item.at(1)));
    if (j.contains("floor")) h.floor = j.at("floor").get<long>();
    return h;
}

inline json to_json(const SimpleKL& s) {
    return {{"w", to_json(s.w.word())}, {"z", to_json(s.z.word())}};
}
inline SimpleKL simple_from_json(const WeylGroup& W, const json& j) {
    return {W.from_word(word_from_json(j.at("w"))), W.from_word(word_from_json(j.at("z")))};
}

inline json to_json(const BoxFunction& f) {
    json a = json::array();
    for (const auto& [b, c] : f.terms) a.push_back({b.first, b.second, to_json(c)});
    return a;
}
inline BoxFunction box_from_json(const json& a) {
    BoxFunction f;
    for (const auto& item : a)
        f.add_box(item.at(0).get<long>(), item.at(1).get<long>(), laurent_from_json(item.at(2)));
    return f;
}

inline json to_json(const CartanDatum& d) {
    if (d.label != "custom") return json(d.label);
    json rows = json::array();
    for (const auto& row : d.pair_rc) rows.push_back(row);
    return rows;
}
inline CartanDatum cartan_from_json(const json& j) {
    if (j.is_string()) return cartan_datum(j.get<std::string>());
    std::vector<std::vector<long>> m;
    for (const auto& row : j) m.push_back(row.get<std::vector<long>>());
    return cartan_from_matrix(std::move(m));
}

}  // namespace coxalc
