#pragma once

// Kazhdan-Lusztig polynomials P_{x,w}, computed by the usual recursion on a
// left descent of w, with memoization keyed by enumerated element ids.
// Polynomials live in q; the Hecke layer substitutes q = v^2.

#include "weyl.hpp"
#include "laurent.hpp"

#include <mutex>
#include <unordered_map>

namespace coxalc {

// Exponents are powers of q (always >= 0 here).
using QPoly = Laurent;

class KLContext {
public:
    explicit KLContext(const WeylGroup& W) : W_(W) { W_.enumerate(); }

    const WeylGroup& group() const { return W_; }

    QPoly kl(const WeylElt& x, const WeylElt& w) const {
        return kl_ids(W_.element_id(x), W_.element_id(w));
    }

    // mu(x, w): coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}.
    Int mu(const WeylElt& x, const WeylElt& w) const {
        long d = static_cast<long>(w.length()) - static_cast<long>(x.length());
        if (d <= 0 || d % 2 == 0) return 0;
        return kl(x, w).coeff((d - 1) / 2);
    }

private:
    QPoly kl_ids(size_t xi, size_t wi) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = memo_.find(key(xi, wi));
            if (it != memo_.end()) return it->second;
        }
        const auto& all = W_.enumerate();
        const WeylElt& x = all[xi];
        const WeylElt& w = all[wi];
        QPoly result = compute(x, w);
        std::lock_guard<std::mutex> lk(mu_);
        memo_.emplace(key(xi, wi), result);
        return result;
    }

    QPoly compute(const WeylElt& x, const WeylElt& w) const {
        if (x == w) return QPoly(1);
        if (!W_.bruhat_leq(x, w)) return QPoly(0);
        if (w.is_identity()) return QPoly(0);
        // left descent of w
        size_t s = 0;
        bool found = false;
        for (size_t i = 0; i < W_.rank() && !found; ++i)
            if (W_.has_left_descent(w, i)) {
                s = i;
                found = true;
            }
        WeylElt sw = W_.mult(W_.simple(s), w);
        WeylElt sx = W_.mult(W_.simple(s), x);
        if (sx.length() > x.length()) return kl(sx, w);
        // l(sx) < l(x):
        QPoly p = kl(sx, sw) + laurent_q_var() * kl(x, sw);
        for (const auto& z : W_.enumerate()) {
            if (!W_.has_left_descent(z, s)) continue;
            if (z.length() >= sw.length()) continue;
            if (!W_.bruhat_leq(x, z) || !W_.bruhat_leq(z, sw)) continue;
            Int m = mu(z, sw);
            if (m == 0) continue;
            long e = (static_cast<long>(w.length()) - static_cast<long>(z.length())) / 2;
            p -= QPoly::monomial(m, e) * kl(x, z);
        }
        long bound = (static_cast<long>(w.length()) - static_cast<long>(x.length()) - 1) / 2;
        if (!p.is_zero() && p.degree() > bound)
            throw std::logic_error("KL degree bound violated; recursion bug");
        return p;
    }

    static QPoly laurent_q_var() { return QPoly::v_pow(1); }  // the variable q
    static std::uint64_t key(size_t a, size_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

    const WeylGroup& W_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, QPoly> memo_;
};

}  // namespace coxalc
