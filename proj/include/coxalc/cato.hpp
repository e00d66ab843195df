#pragma once

// The combinatorial model of Kazhdan-Laumon Category O: simple objects are
// pairs (w, P(w)z) stored with the canonical minimal coset representative,
// together with restriction supports, the W-action by index translation,
// counting, and the eta' dictionary into alcoves.

#include "alcove.hpp"
#include "laurent.hpp"

#include <optional>

namespace coxalc {

struct SimpleKL {
    WeylElt w;  // the IC label
    WeylElt z;  // minimal-length representative of P(w) z

    bool operator==(const SimpleKL& o) const { return w == o.w && z == o.z; }
    bool operator<(const SimpleKL& o) const {
        if (!(w == o.w)) return w < o.w;
        return z < o.z;
    }
};

// finitely supported SimpleKL -> Laurent, canonical order, no zero terms
using K0Vec = std::map<SimpleKL, Laurent>;

inline void k0_add(K0Vec& a, const SimpleKL& s, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = a.emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

class CategoryO {
public:
    explicit CategoryO(const WeylGroup& W) : W_(W) { W_.enumerate(); }

    const WeylGroup& group() const { return W_; }

    SimpleKL classify(const WeylElt& z, const WeylElt& w) const {
        return {w, W_.min_coset_rep(W_.right_ascents(w), z)};
    }

    // support P(w) z as a sorted element list
    std::vector<WeylElt> support(const SimpleKL& s) const {
        std::vector<WeylElt> out;
        for (const auto& p : W_.subgroup_elements(W_.right_ascents(s.w))) out.push_back(W_.mult(p, s.z));
        std::sort(out.begin(), out.end());
        return out;
    }

    // j_y^* of the simple: IC_w when y lies in P(w) z, zero otherwise
    std::optional<WeylElt> restrict_value(const SimpleKL& s, const WeylElt& y) const {
        if (W_.min_coset_rep(W_.right_ascents(s.w), y) == s.z) return s.w;
        return std::nullopt;
    }

    // F_z: (w, P(w)y) -> (w, P(w) y z^{-1})
    SimpleKL f_action(const WeylElt& z, const SimpleKL& s) const {
        return classify(W_.mult(s.z, W_.inverse(z)), s.w);
    }

    // all simples, canonical order: w by (length, lex), then z
    std::vector<SimpleKL> all_simples() const {
        std::vector<SimpleKL> out;
        for (const auto& w : W_.enumerate()) {
            auto pd = W_.coset_min_reps(W_.right_ascents(w));
            for (const auto& z : pd.min_reps) out.push_back({w, z});
        }
        return out;
    }

    // sum over w of |P(w)\W|; exact even when enumeration is large
    unsigned long long count() const {
        unsigned long long total = 0;
        size_t n = W_.order();
        for (const auto& w : W_.enumerate())
            total += n / W_.subgroup_elements(W_.right_ascents(w)).size();
        return total;
    }

    // orbits of the F-action, each sorted, ordered by their minimal element
    std::vector<std::vector<SimpleKL>> f_orbits() const {
        std::vector<std::vector<SimpleKL>> orbits;
        std::set<SimpleKL> seen;
        for (const auto& s : all_simples()) {
            if (seen.count(s)) continue;
            std::set<SimpleKL> orbit;
            std::vector<SimpleKL> frontier{s};
            orbit.insert(s);
            while (!frontier.empty()) {
                std::vector<SimpleKL> next;
                for (const auto& cur : frontier)
                    for (size_t i = 0; i < W_.rank(); ++i) {
                        SimpleKL img = f_action(W_.simple(i), cur);
                        if (orbit.insert(img).second) next.push_back(img);
                    }
                frontier = std::move(next);
            }
            orbits.emplace_back(orbit.begin(), orbit.end());
            seen.insert(orbit.begin(), orbit.end());
        }
        return orbits;
    }

    // eta': the alcove star(z^{-1}, A_w) indexing the quotient-basis image
    AffineElt eta_prime_alcove(const AlcoveGeometry& G, const SimpleKL& s) const {
        return G.star(W_.inverse(s.z), G.alcove_of_index(s.w));
    }

private:
    const WeylGroup& W_;
};

inline std::string word_label(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (auto i : w) s += "s" + std::to_string(i + 1);
    return s;
}

// the restriction table as CSV: one row per simple, one column per y in W,
// cells "IC_w" or "0"
inline std::string restriction_table_csv(const CategoryO& C) {
    const WeylGroup& W = C.group();
    std::string os = "simple";
    for (const auto& y : W.enumerate()) os += ",j_" + word_label(y.word());
    os += "\n";
    for (const auto& s : C.all_simples()) {
        os += "j_" + word_label(s.z.word()) + "!*(IC_" + word_label(s.w.word()) + ")";
        for (const auto& y : W.enumerate()) {
            auto v = C.restrict_value(s, y);
            os += ",";
            os += v ? "IC_" + word_label(v->word()) : std::string("0");
        }
        os += "\n";
    }
    return os;
}

}  // namespace coxalc
