#pragma once

// Rank-1 exact p-adic Schwartz calculus on X(k) = k^2 \ {0}.
//
// Functions are finite combinations of box indicators chi_{pi^a O x pi^b O}
// with Laurent coefficients (q = v^2 stays symbolic).  The model: column
// vectors, basepoint (1,0), Iwahori = SL2(O) matrices that are upper
// triangular mod pi.  This puts the Iwahori orbit of w = s1 at
// O x O \ O x piO and pairs the alcove A_n with the orbit
//   n = 2m:      pi^m O x pi^{m+1} O  minus  pi^{m+1} O x pi^{m+1} O
//   n = 2m - 1:  pi^m O x pi^m O      minus  pi^m O x pi^{m+1} O.
//
// Convolution by chi_{IsI} is computed as an honest coset sum over the q
// residue lifts, evaluated symbolically on valuation profiles; the result is
// reassembled from orbit indicators, which also detects non-invariant input.

#include "periodic.hpp"

namespace coxalc {

using Box = std::pair<long, long>;

struct BoxFunction {
    std::map<Box, Laurent> terms;

    bool is_zero() const { return terms.empty(); }

    static BoxFunction box(long a, long b, Laurent c = Laurent(1)) {
        BoxFunction f;
        if (!c.is_zero()) f.terms.emplace(Box{a, b}, std::move(c));
        return f;
    }

    BoxFunction& add_box(long a, long b, const Laurent& c) {
        if (c.is_zero()) return *this;
        auto [it, fresh] = terms.emplace(Box{a, b}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
        return *this;
    }

    friend BoxFunction operator+(const BoxFunction& x, const BoxFunction& y) {
        BoxFunction r = x;
        for (const auto& [b, c] : y.terms) r.add_box(b.first, b.second, c);
        return r;
    }
    friend BoxFunction operator-(const BoxFunction& x, const BoxFunction& y) {
        return x + scale(Laurent(-1), y);
    }
    static BoxFunction scale(const Laurent& c, const BoxFunction& f) {
        BoxFunction r;
        for (const auto& [b, p] : f.terms) r.add_box(b.first, b.second, c * p);
        return r;
    }
    // box indicators are linearly independent, so term equality is equality
    bool operator==(const BoxFunction& o) const { return terms == o.terms; }

    // equality of all terms with a + b < bound (the certified range of a
    // truncated telescoping image)
    static bool equal_below(const BoxFunction& x, const BoxFunction& y, long bound) {
        BoxFunction d = x - y;
        for (const auto& [b, c] : d.terms)
            if (b.first + b.second < bound) return false;
        return true;
    }
};

// additive character of conductor n, and normalization c = q^{c_exponent}
struct CharacterSpec {
    long conductor = 1;
    long c_exponent = 1;
};

class PadicSchwartz {
public:
    PadicSchwartz(const AlcoveGeometry& G, const PeriodicModule& M) : G_(G), M_(M) {
        if (G.rank() != 1) throw std::invalid_argument("PadicSchwartz requires type A1");
    }

    // ----- Fourier transform --------------------------------------------

    // chi_{a,b} -> c q^{-a-b} chi_{n-b, n-a}, from the one integration
    // primitive  int_{pi^m O} psi_n(ux) dx = q^{-m} chi_{pi^{n-m} O}(u)
    BoxFunction fourier(const BoxFunction& f, const CharacterSpec& s) const {
        BoxFunction r;
        for (const auto& [b, c] : f.terms) {
            long e = 2 * (s.c_exponent - b.first - b.second);  // power of v
            r.add_box(s.conductor - b.second, s.conductor - b.first, c * Laurent::v_pow(e));
        }
        return r;
    }

    BoxFunction fourier_word(const WeylElt& z, BoxFunction f, const CharacterSpec& s) const {
        for (size_t k = 0; k < z.length(); ++k) f = fourier(f, s);
        return f;
    }

    // ----- Iwahori orbits --------------------------------------------------

    BoxFunction orbit_indicator(long n) const {
        if (n % 2 == 0) {
            long m = n / 2;
            return BoxFunction::box(m, m + 1) - BoxFunction::box(m + 1, m + 1);
        }
        long m = (n + 1) / 2;
        return BoxFunction::box(m, m) - BoxFunction::box(m, m + 1);
    }
    BoxFunction orbit_indicator(const AffineElt& idx) const {
        return orbit_indicator(G_.bands(G_.alcove_of_index(idx))[0]);
    }

    // Psi: A -> (-v)^{d(A_e, A)} chi_{IwU}, extended over stored terms
    BoxFunction psi(const PeriodicVec& m) const {
        BoxFunction r;
        for (const auto& [k, c] : m.terms) {
            long n = G_.bands(G_.elt_of(k))[0];  // = d(A_e, A_n)
            Laurent sgn = Laurent::monomial(n % 2 == 0 ? 1 : -1, n);
            r = r + BoxFunction::scale(c * sgn, orbit_indicator(n));
        }
        return r;
    }

    // decompose into orbit indicators; throws when the input is not
    // I x T(O)-invariant
    std::map<long, Laurent> orbit_decompose(BoxFunction f) const {
        std::map<long, Laurent> out;
        size_t fuel = 4 * f.terms.size() + 64;
        while (!f.is_zero()) {
            if (fuel-- == 0) throw std::invalid_argument("not an invariant function (no orbit decomposition)");
            auto [b, c] = *f.terms.begin();
            long n;
            if (b.second == b.first)
                n = 2 * b.first - 1;  // head of the odd orbit
            else if (b.second == b.first + 1)
                n = 2 * b.first;  // head of the even orbit
            else
                throw std::invalid_argument("not an invariant function (stray box)");
            out[n] += c;
            f = f - BoxFunction::scale(c, orbit_indicator(n));
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    // ----- convolution by chi_{IsI} ------------------------------------------

    // s = 0 is the affine generator, s = 1 the finite one, matching the
    // affine generator numbering of AlcoveGeometry
    BoxFunction convolve(size_t s, const BoxFunction& f) const {
        if (s > 1) throw std::out_of_range("convolve: generator must be 0 or 1");
        BoxFunction out;
        for (const auto& [n, c] : orbit_decompose(f))
            out = out + BoxFunction::scale(c, convolve_orbit(s, n));
        return out;
    }

    // transported affine Hecke action: T~_s^{-1} f = -v^{-1} chi_s * f.
    // (The G(O)-invariant chi_{OxO} pins the normalization: the coset sum
    // multiplies it by q, and the module side wants eigenvalue -v for the
    // inverse generator.)
    BoxFunction transported_T_inv(size_t s, const BoxFunction& f) const {
        return BoxFunction::scale(-Laurent::v_pow(-1), convolve(s, f));
    }
    BoxFunction transported_T(size_t s, const BoxFunction& f) const {
        return transported_T_inv(s, f) + BoxFunction::scale(laurent_delta(), f);
    }

    // ----- Eisenstein lift ---------------------------------------------------

    // extension by zero of a function on X(F_q) pulled back through
    // X(O)_fin = IeU ⊔ Is1U; the two cells are the orbits of e and s1
    BoxFunction eisenstein_lift(const Laurent& c_e, const Laurent& c_s1) const {
        return BoxFunction::scale(c_e, orbit_indicator(0)) +
               BoxFunction::scale(c_s1, orbit_indicator(-1));
    }
    // tr(Delta_w) = (-q^{-1/2})^{l(w)} chi_w on the finite cells
    BoxFunction theta_of_delta(const WeylElt& w) const {
        if (w.is_identity()) return eisenstein_lift(Laurent(1), Laurent(0));
        return eisenstein_lift(Laurent(0), -Laurent::v_pow(-1));
    }

    // ----- the intertwining check ---------------------------------------------

    struct IntertwineReport {
        bool ok = true;
        std::optional<long> witness_alcove;
        std::optional<Box> witness_box;
    };

    // fourier(psi(A_n)) = psi(theta(A_n)) for all |n| <= window.  Theta tails
    // telescope under psi, so the comparison is restricted to boxes with
    // a + b < floor - window - 2, the range where the truncated image is
    // exact.
    IntertwineReport intertwine_check(const CharacterSpec& spec, long window, long floor) const {
        long box_bound = floor - window - 2;
        if (box_bound < 2)
            throw std::invalid_argument("intertwine_check: floor too small for the window");
        IntertwineReport rep;
        std::vector<long> order{0};
        for (long n = 1; n <= window; ++n) {
            order.push_back(-n);
            order.push_back(n);
        }
        for (long n : order) {
            PeriodicVec an = M_.basis(M_.a1_alcove(n), floor);
            BoxFunction lhs = fourier(psi(an), spec);
            BoxFunction rhs = psi(M_.theta(0, an));
            if (!BoxFunction::equal_below(lhs, rhs, box_bound)) {
                rep.ok = false;
                rep.witness_alcove = n;
                BoxFunction d = lhs - rhs;
                for (const auto& [b, c] : d.terms) {
                    if (b.first + b.second >= box_bound) continue;
                    if (!rep.witness_box) rep.witness_box = b;
                    if (b == Box{0, 0}) rep.witness_box = b;  // the classical witness
                }
                return rep;
            }
        }
        return rep;
    }

    // evaluation hook for tests: the coset sum over the q representatives at
    // a point with multiplier-one components (nullopt = the zero component)
    Laurent coset_sum_at(size_t s, const BoxFunction& f, std::optional<long> v1,
                         std::optional<long> v2) const {
        Comp c1 = v1 ? Comp::of(*v1) : Comp::nil();
        Comp c2 = v2 ? Comp::of(*v2) : Comp::nil();
        return coset_sum(s, f, c1, c2);
    }

private:
    // a point component: zero, or exactly pi^val (unit multiplier one)
    struct Comp {
        bool zero = false;
        long val = 0;
        static Comp of(long v) { return {false, v}; }
        static Comp nil() { return {true, 0}; }
        Comp shifted(long d) const { return zero ? *this : Comp{false, val + d}; }
    };

    static bool in_ball(const Comp& x, long a) { return x.zero || x.val >= a; }

    static Laurent eval(const BoxFunction& f, const Comp& x1, const Comp& x2) {
        Laurent v;
        for (const auto& [b, c] : f.terms)
            if (in_ball(x1, b.first) && in_ball(x2, b.second)) v += c;
        return v;
    }

    // sum over the q coset representatives of f(g_t^{-1} x); the three
    // symbolic weights are 1 (t = 0), 1 (t = 1) and q - 2 (other units),
    // or q - 1 when the unit branches coincide
    Laurent coset_sum(size_t s, const BoxFunction& f, const Comp& x1, const Comp& x2) const {
        const Laurent q = laurent_q();
        Laurent total;
        if (s == 1) {
            // g_t^{-1}(x1, x2) = (x2, t x2 - x1)
            total += eval(f, x2, x1);  // t = 0
            if (x2.zero) {
                total += (q - Laurent(1)) * eval(f, Comp::nil(), x1);
            } else if (x1.zero) {
                total += (q - Laurent(1)) * eval(f, x2, x2);
            } else if (x2.val < x1.val) {
                total += (q - Laurent(1)) * eval(f, x2, Comp::of(x2.val));
            } else if (x2.val > x1.val) {
                total += (q - Laurent(1)) * eval(f, x2, Comp::of(x1.val));
            } else {
                total += eval(f, x2, Comp::nil());  // t = 1 kills t x2 - x1 exactly
                total += (q - Laurent(2)) * eval(f, x2, Comp::of(x1.val));
            }
        } else {
            // g_t^{-1}(x1, x2) = (-t x1 + pi^{-1} x2, -pi x1)
            Comp y2 = x1.shifted(1);
            Comp p2 = x2.shifted(-1);
            total += eval(f, p2, y2);  // t = 0
            if (x1.zero) {
                total += (q - Laurent(1)) * eval(f, p2, y2);
            } else if (x2.zero) {
                total += (q - Laurent(1)) * eval(f, Comp::of(x1.val), y2);
            } else if (x1.val < p2.val) {
                total += (q - Laurent(1)) * eval(f, Comp::of(x1.val), y2);
            } else if (x1.val > p2.val) {
                total += (q - Laurent(1)) * eval(f, p2, y2);
            } else {
                total += eval(f, Comp::nil(), y2);  // t = 1: pi^c (1 - t) = 0
                total += (q - Laurent(2)) * eval(f, Comp::of(x1.val), y2);
            }
        }
        return total;
    }

    static Comp rep1(long n) { return n % 2 == 0 ? Comp::of(n / 2) : Comp::nil(); }
    static Comp rep2(long n) { return n % 2 == 0 ? Comp::nil() : Comp::of((n + 1) / 2); }

    BoxFunction convolve_orbit(size_t s, long n) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = conv_memo_.find({s, n});
            if (it != conv_memo_.end()) return it->second;
        }
        BoxFunction orb = orbit_indicator(n);
        BoxFunction out;
        for (long k = n - 2; k <= n + 2; ++k) {
            Laurent c = coset_sum(s, orb, rep1(k), rep2(k));
            out = out + BoxFunction::scale(c, orbit_indicator(k));
        }
        // support is confined to adjacent orbits
        for (long k : {n - 4, n - 3, n + 3, n + 4})
            if (!coset_sum(s, orb, rep1(k), rep2(k)).is_zero())
                throw std::logic_error("convolution support leaked outside the adjacent orbits");
        std::lock_guard<std::mutex> lk(mu_);
        conv_memo_.emplace(std::make_pair(s, n), out);
        return out;
    }

    const AlcoveGeometry& G_;
    const PeriodicModule& M_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<size_t, long>, BoxFunction> conv_memo_;
};

}  // namespace coxalc
