#pragma once

// The finite Hecke algebra in the tilde-normalized basis, with
// (T~_s - v)(T~_s + v^{-1}) = 0, the bar involution, the signed canonical
// basis C_w built from Kazhdan-Lusztig polynomials, and the K_0 dictionary
// used by the category model: [nabla_w] = T~_w, [Delta_w] = bar(T~_w),
// [IC_w] = C_w, half Tate twist = v^{-1}.

#include "kl.hpp"

#include <optional>

namespace coxalc {

struct HeckeElt {
    // T~ basis coefficients, keyed by enumerated element id.
    std::map<size_t, Laurent> c;
    // Exactness floor inherited from periodic-module inputs, if any:
    // coefficients are exact in exponents > -floor.
    std::optional<long> floor;

    bool is_zero() const { return c.empty(); }

    HeckeElt truncated(long f) const {
        HeckeElt r;
        r.floor = f;
        for (const auto& [w, p] : c) {
            Laurent t = p.truncate_below(f);
            if (!t.is_zero()) r.c.emplace(w, std::move(t));
        }
        return r;
    }
};

class HeckeAlgebra {
public:
    explicit HeckeAlgebra(const WeylGroup& W) : W_(W), kl_(W) { W_.enumerate(); }

    const WeylGroup& group() const { return W_; }
    const KLContext& kl_context() const { return kl_; }

    HeckeElt zero() const { return {}; }
    HeckeElt one() const { return tilde_T(W_.identity()); }

    HeckeElt tilde_T(const WeylElt& w) const {
        HeckeElt h;
        h.c.emplace(W_.element_id(w), Laurent(1));
        return h;
    }

    static HeckeElt scale(const Laurent& a, HeckeElt h) {
        HeckeElt r;
        if (a.is_zero()) return r;
        r.floor = h.floor;
        for (auto& [w, p] : h.c) {
            Laurent t = a * p;
            if (!t.is_zero()) r.c.emplace(w, std::move(t));
        }
        return r;
    }

    static HeckeElt add(const HeckeElt& a, const HeckeElt& b) {
        HeckeElt r = a;
        if (b.floor && (!r.floor || *b.floor < *r.floor)) r.floor = b.floor;
        for (const auto& [w, p] : b.c) {
            auto [it, fresh] = r.c.emplace(w, p);
            if (!fresh) {
                it->second += p;
                if (it->second.is_zero()) r.c.erase(it);
            }
        }
        return r;
    }

    static HeckeElt sub(const HeckeElt& a, const HeckeElt& b) { return add(a, scale(Laurent(-1), b)); }

    // h * T~_{s_i}
    HeckeElt mult_gen(const HeckeElt& h, size_t i) const {
        HeckeElt r;
        r.floor = h.floor;
        const auto& all = W_.enumerate();
        for (const auto& [wid, p] : h.c) {
            const WeylElt& w = all[wid];
            WeylElt ws = W_.mult_gen(w, i);
            size_t wsid = W_.element_id(ws);
            add_term(r, wsid, p);
            if (ws.length() < w.length()) add_term(r, wid, p * laurent_delta());
        }
        return r;
    }

    HeckeElt mult(const HeckeElt& a, const HeckeElt& b) const {
        // expand b into words on the right of a
        HeckeElt r;
        r.floor = a.floor;
        if (b.floor && (!r.floor || *b.floor < *r.floor)) r.floor = b.floor;
        const auto& all = W_.enumerate();
        for (const auto& [wid, p] : b.c) {
            HeckeElt term = scale(p, a);
            for (auto letter : all[wid].word()) term = mult_gen(term, letter);
            r = add(r, term);
        }
        r.floor = a.floor && b.floor ? std::min(a.floor, b.floor) : (a.floor ? a.floor : b.floor);
        return r;
    }

    // T~_s^{-1} = T~_s - (v - v^{-1});  T~_w^{-1} multiplies the letter
    // inverses in reverse order.
    HeckeElt tilde_T_inv(const WeylElt& w) const {
        HeckeElt r = one();
        const Word& word = w.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            HeckeElt rs = mult_gen(r, *it);
            r = sub(rs, scale(laurent_delta(), r));
        }
        return r;
    }

    // bar: antilinear ring automorphism, bar(T~_w) = T~_{w^{-1}}^{-1}.
    HeckeElt bar(const HeckeElt& h) const {
        HeckeElt r;
        const auto& all = W_.enumerate();
        for (const auto& [wid, p] : h.c) {
            HeckeElt t = scale(p.bar(), tilde_T_inv(W_.inverse(all[wid])));
            r = add(r, t);
        }
        r.floor = h.floor;
        return r;
    }

    // C_w = sum_{x <= w} (-1)^{l(w)-l(x)} v^{l(x)-l(w)} P_{x,w}(q=v^2) T~_{x^{-1}}^{-1}
    HeckeElt c_basis(const WeylElt& w) const {
        size_t wid = W_.element_id(w);
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cmemo_.find(wid);
            if (it != cmemo_.end()) return it->second;
        }
        HeckeElt r;
        for (const auto& x : W_.enumerate()) {
            if (!W_.bruhat_leq(x, w)) continue;
            QPoly pq = kl_.kl(x, w);
            // q = v^2
            Laurent pv;
            for (const auto& [e, cc] : pq.terms()) pv += Laurent::monomial(cc, 2 * e);
            long d = static_cast<long>(w.length()) - static_cast<long>(x.length());
            Laurent coeff = Laurent::monomial((d % 2 == 0) ? 1 : -1, -d) * pv;
            r = add(r, scale(coeff, tilde_T_inv(W_.inverse(x))));
        }
        std::lock_guard<std::mutex> lk(mu_);
        cmemo_.emplace(wid, r);
        return r;
    }

    // Invert the unitriangular change of basis: h = sum coords[w] C_w.
    std::map<size_t, Laurent> expand_in_c(HeckeElt h) const {
        std::map<size_t, Laurent> coords;
        const auto& all = W_.enumerate();
        while (!h.is_zero()) {
            // maximal-length surviving term
            auto best = h.c.begin();
            for (auto it = h.c.begin(); it != h.c.end(); ++it)
                if (all[it->first].length() > all[best->first].length()) best = it;
            size_t wid = best->first;
            Laurent a = best->second;
            coords[wid] = a;
            h = sub(h, scale(a, c_basis(all[wid])));
            if (h.c.count(wid)) throw std::logic_error("expand_in_c: leading term did not cancel");
        }
        return coords;
    }

    // K0 dictionary.
    HeckeElt nabla_class(const WeylElt& w) const { return tilde_T(w); }
    HeckeElt delta_class(const WeylElt& w) const { return tilde_T_inv(W_.inverse(w)); }
    HeckeElt ic_class(const WeylElt& w) const { return c_basis(w); }
    static HeckeElt twist(const HeckeElt& h, long m) { return scale(Laurent::v_pow(-m), h); }

    // phi_s: right convolution with nabla_s(1/2), i.e. right mult by v^{-1} T~_s.
    HeckeElt phi_s(const HeckeElt& h, size_t i) const {
        return scale(Laurent::v_pow(-1), mult_gen(h, i));
    }

    // left action of T~_s
    HeckeElt left_action(size_t i, const HeckeElt& h) const { return mult(tilde_T(W_.simple(i)), h); }

    // h in K_s iff its C-expansion is supported on {w' : l(w's) < l(w')}.
    bool k_s_membership(const HeckeElt& h, size_t i) const {
        const auto& all = W_.enumerate();
        for (const auto& [wid, coeff] : expand_in_c(h))
            if (!W_.has_right_descent(all[wid], i)) return false;
        return true;
    }

    bool equal(const HeckeElt& a, const HeckeElt& b) const {
        if (a.floor || b.floor) {
            long f = std::min(a.floor.value_or(1000000000L), b.floor.value_or(1000000000L));
            return a.truncated(f).c == b.truncated(f).c;
        }
        return a.c == b.c;
    }

private:
    void add_term(HeckeElt& r, size_t wid, const Laurent& p) const {
        if (p.is_zero()) return;
        auto [it, fresh] = r.c.emplace(wid, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) r.c.erase(it);
        }
    }
    const WeylGroup& W_;
    KLContext kl_;
    mutable std::mutex mu_;
    mutable std::map<size_t, HeckeElt> cmemo_;
};

}  // namespace coxalc
