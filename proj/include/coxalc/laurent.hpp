#pragma once

// Laurent polynomials in one variable v with integer coefficients.
//
// v is the Hecke-algebra parameter (q = v^2); the bar involution v -> v^{-1}
// and exact specialization at rational values of v are the two non-plumbing
// operations.  Terms are kept sparse, exponent-ascending, with no stored
// zero coefficients.

#include "numeric.hpp"

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace coxalc {

class Laurent {
public:
    // [exponent, coefficient] pairs, exponent-ascending.
    using Terms = std::vector<std::pair<long, Int>>;

    Laurent() = default;
    Laurent(const Int& c) {
        if (c != 0) terms_.emplace_back(0, c);
    }
    Laurent(long c) : Laurent(Int(c)) {}
    Laurent(int c) : Laurent(Int(c)) {}

    static Laurent monomial(const Int& c, long exp) {
        Laurent p;
        if (c != 0) p.terms_.emplace_back(exp, c);
        return p;
    }
    // v^exp
    static Laurent v_pow(long exp) { return monomial(1, exp); }

    static Laurent from_terms(Terms t) {
        std::sort(t.begin(), t.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Laurent p;
        for (auto& [e, c] : t) {
            if (c == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().first == e)
                p.terms_.back().second += c;
            else
                p.terms_.emplace_back(e, c);
        }
        p.strip_zeros();
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Largest exponent with nonzero coefficient; throws on zero.
    long degree() const {
        require_nonzero("degree");
        return terms_.back().first;
    }
    // Smallest exponent with nonzero coefficient; throws on zero.
    long valuation() const {
        require_nonzero("valuation");
        return terms_.front().first;
    }

    Int coeff(long exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const auto& t, long e) { return t.first < e; });
        if (it != terms_.end() && it->first == exp) return it->second;
        return 0;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                r.terms_.push_back(*ib++);
            } else {
                Int c = ia->second + ib->second;
                if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia, ++ib;
            }
        }
        return r;
    }

    friend Laurent operator-(const Laurent& a) {
        Laurent r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::map<long, Int> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
        Laurent r;
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.emplace_back(e, std::move(c));
        return r;
    }

    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    auto operator<=>(const Laurent& o) const = default;

    // Bar involution v -> v^{-1}.
    Laurent bar() const {
        Terms t;
        t.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            t.emplace_back(-it->first, it->second);
        Laurent r;
        r.terms_ = std::move(t);
        return r;
    }

    // Exact evaluation at v = x.  x = 0 is rejected: v is a unit.
    Rat specialize(const Rat& x) const {
        if (x == Rat(0)) throw std::invalid_argument("Laurent::specialize: v = 0 is not allowed");
        Rat acc(0);
        for (const auto& [e, c] : terms_) acc += Rat(c) * pow_rat(x, e);
        return acc;
    }

    // Drops every term with exponent <= -floor (the uncertified tail).
    Laurent truncate_below(long floor) const {
        Laurent r;
        for (const auto& [e, c] : terms_)
            if (e > -floor) r.terms_.emplace_back(e, c);
        return r;
    }

    // Multiply by v^k.
    Laurent shifted(long k) const {
        Laurent r = *this;
        for (auto& [e, c] : r.terms_) e += k;
        return r;
    }

    // Exact division; throws if the division leaves a remainder.  Used by
    // fraction-free elimination, where divisions are exact by construction.
    friend Laurent divide_exact(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
        if (a.is_zero()) return {};
        // Reduce to ordinary polynomial division by stripping valuations.
        Laurent num = a.shifted(-a.valuation());
        Laurent den = b.shifted(-b.valuation());
        Laurent quot;
        while (!num.is_zero()) {
            long e = num.degree() - den.degree();
            if (e < 0) throw std::logic_error("divide_exact: inexact division");
            Int lead = num.terms_.back().second;
            const Int& dl = den.terms_.back().second;
            if (lead % dl != 0) throw std::logic_error("divide_exact: inexact division");
            Laurent t = monomial(lead / dl, e);
            quot += t;
            num -= t * den;
        }
        return quot.shifted(a.valuation() - b.valuation());
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int ab = c < 0 ? Int(-c) : c;
            if (!first) s += (c < 0) ? " - " : " + ";
            else if (c < 0) s += "-";
            first = false;
            bool unit = (ab == 1);
            if (!unit || e == 0) s += ab.str();
            if (e != 0) {
                if (!unit) s += "*";
                s += "v";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

private:
    static Rat pow_rat(const Rat& x, long e) {
        Rat r(1);
        Rat base = e >= 0 ? x : Rat(x.denominator(), x.numerator());
        for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) r *= base;
        return r;
    }

    void strip_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const auto& t) { return t.second == 0; }),
                     terms_.end());
    }
    void require_nonzero(const char* who) const {
        if (terms_.empty()) throw std::logic_error(std::string(who) + " of zero polynomial");
    }

    Terms terms_;
};

// Convenience: v, q = v^2, and the recurring v - v^{-1}.
inline const Laurent& laurent_v() {
    static const Laurent p = Laurent::v_pow(1);
    return p;
}
inline const Laurent& laurent_q() {
    static const Laurent p = Laurent::v_pow(2);
    return p;
}
inline const Laurent& laurent_delta() {
    static const Laurent p = Laurent::v_pow(1) - Laurent::v_pow(-1);
    return p;
}

}  // namespace coxalc
