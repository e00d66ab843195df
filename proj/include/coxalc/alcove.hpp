#pragma once

// Alcove geometry for the affine Weyl group.
//
// Points live in coweight coordinates, so <alpha_i, x> is coordinate i.  An
// alcove is identified by its coordinate x in the affine Weyl group, meaning
// the geometric image x(A+) of the fundamental alcove.  The two commuting
// actions: crossing the wall of type s sends coordinate x to x*s, while the
// reflection through the fixed hyperplane of a simple root sends x to s*x.
//
// The module-side subscript in A_w is the wall-crossing torsor: A_w has
// coordinate w^{-1}.  index_of / alcove_of_index convert between the two.
// This is what makes T~_s(A_w) = A_{sw} + ... and the *-action stabilizer
// of A_w equal to P(w).

#include "weyl.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace coxalc {

struct AffineElt {
    WeylElt w;
    std::vector<long> t;  // translation, coweight coordinates

    bool operator==(const AffineElt& o) const { return t == o.t && w == o.w; }
    bool operator<(const AffineElt& o) const {
        if (t != o.t) return t < o.t;
        return w < o.w;
    }
};

// Compact ordered key for maps over alcoves (rank <= 4).
struct AlcoveKey {
    std::uint16_t wid = 0;
    std::array<std::int16_t, 4> t{0, 0, 0, 0};
    auto operator<=>(const AlcoveKey&) const = default;
};

class AlcoveGeometry {
public:
    explicit AlcoveGeometry(const WeylGroup& W) : W_(W) {
        n_ = W.rank();
        const CartanDatum& d = W.datum();
        // symmetrizers d_i = |alpha_i|^2 / 2, normalized to smallest = 1
        sym_.assign(n_, Rat(0));
        sym_[0] = Rat(1);
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t i = 0; i < n_; ++i)
                for (size_t j = 0; j < n_; ++j) {
                    if (d.pair_rc[i][j] == 0 || sym_[i] == Rat(0) || sym_[j] != Rat(0)) continue;
                    // d_j * pair[i][j] = d_i * pair[j][i]
                    sym_[j] = sym_[i] * Rat(d.pair_rc[j][i]) / Rat(d.pair_rc[i][j]);
                    changed = true;
                }
        }
        Rat mn = sym_[0];
        for (const Rat& s : sym_)
            if (s < mn) mn = s;
        for (Rat& s : sym_) s = s / mn;

        // barycenter of A+ over common denominator bden_
        long lcm_marks = 1;
        for (long m : d.marks) lcm_marks = std::lcm(lcm_marks, m);
        bden_ = static_cast<long>(n_ + 1) * lcm_marks;
        bnum_.assign(n_, 0);
        for (size_t i = 0; i < n_; ++i) bnum_[i] = bden_ / (static_cast<long>(n_ + 1) * d.marks[i]);

        theta_vee_ = coroot_of(d.positive_roots[d.highest_root]);
        s_theta_ = W_.reflection(d.positive_roots[d.highest_root]);

        // coroots of all positive roots, in coweight coordinates
        pos_coroots_.reserve(d.positive_roots.size());
        for (const auto& b : d.positive_roots) pos_coroots_.push_back(coroot_of(b));
    }

    const WeylGroup& group() const { return W_; }
    size_t rank() const { return n_; }
    size_t num_positive_roots() const { return W_.datum().positive_roots.size(); }

    // ----- affine elements ---------------------------------------------

    AffineElt identity() const { return {W_.identity(), std::vector<long>(n_, 0)}; }

    AffineElt from_weyl(const WeylElt& w) const { return {w, std::vector<long>(n_, 0)}; }

    AffineElt translation(std::vector<long> t_coweight) const {
        return {W_.identity(), std::move(t_coweight)};
    }

    AffineElt compose(const AffineElt& a, const AffineElt& b) const {
        std::vector<long> t = matop::apply(a.w.point_matrix(), b.t, n_);
        for (size_t i = 0; i < n_; ++i) t[i] += a.t[i];
        return {W_.mult(a.w, b.w), std::move(t)};
    }

    AffineElt inverse(const AffineElt& a) const {
        WeylElt wi = W_.inverse(a.w);
        std::vector<long> t = matop::apply(wi.point_matrix(), a.t, n_);
        for (auto& c : t) c = -c;
        return {std::move(wi), std::move(t)};
    }

    // Affine simple generators: 0 is the affine reflection through
    // <theta, x> = 1; i in 1..rank is the finite simple reflection s_i.
    AffineElt affine_generator(size_t s) const {
        if (s == 0) return {s_theta_, theta_vee_};
        return from_weyl(W_.simple(s - 1));
    }
    size_t num_affine_generators() const { return n_ + 1; }

    // translation part in coroot coordinates; throws if the element lies
    // outside the (non-extended) affine Weyl group
    std::vector<long> coroot_coords(const std::vector<long>& t_coweight) const {
        std::vector<Rat> rhs(n_);
        for (size_t i = 0; i < n_; ++i) rhs[i] = Rat(t_coweight[i]);
        std::vector<Rat> c = solve_pair_matrix(rhs);
        std::vector<long> out(n_);
        for (size_t i = 0; i < n_; ++i) {
            if (c[i].denominator() != 1)
                throw std::invalid_argument("translation lies outside the coroot lattice");
            out[i] = static_cast<long>(c[i].numerator());
        }
        return out;
    }
    bool is_extended(const AffineElt& a) const {
        std::vector<Rat> rhs(n_);
        for (size_t i = 0; i < n_; ++i) rhs[i] = Rat(a.t[i]);
        for (const Rat& c : solve_pair_matrix(rhs))
            if (c.denominator() != 1) return true;
        return false;
    }
    std::vector<long> coweight_of_coroot(const std::vector<long>& t_coroot) const {
        std::vector<long> out(n_, 0);
        for (size_t j = 0; j < n_; ++j)
            for (size_t i = 0; i < n_; ++i) out[i] += W_.datum().pair_rc[i][j] * t_coroot[j];
        return out;
    }

    // ----- alcove data ---------------------------------------------------

    // band coordinates k_beta(x(A+)) for all positive roots, simple first
    std::vector<long> bands(const AffineElt& x) const {
        std::vector<long> bary = barycenter_scaled(x);
        const auto& roots = W_.datum().positive_roots;
        std::vector<long> out(roots.size());
        for (size_t r = 0; r < roots.size(); ++r) {
            long num = 0;
            for (size_t i = 0; i < n_; ++i) num += roots[r][i] * bary[i];
            long q = num / bden_;
            if (num % bden_ != 0 && num < 0) --q;
            out[r] = q;
        }
        return out;
    }

    long band(const AffineElt& x, size_t root_index) const { return bands(x)[root_index]; }

    // exact barycenter times bden_ (integer vector)
    std::vector<long> barycenter_scaled(const AffineElt& x) const {
        std::vector<long> b = matop::apply(x.w.point_matrix(), bnum_, n_);
        for (size_t i = 0; i < n_; ++i) b[i] += bden_ * x.t[i];
        return b;
    }
    long barycenter_denominator() const { return bden_; }

    // ----- the two actions ----------------------------------------------

    // wall crossing: coordinate x -> x * s
    AffineElt cross(const AffineElt& x, size_t s) const { return compose(x, affine_generator(s)); }

    // reflection through the linear hyperplane of simple root alpha_i
    AffineElt right_reflect(const AffineElt& x, size_t i) const {
        return compose(from_weyl(W_.simple(i)), x);
    }

    // ----- distances -------------------------------------------------------

    long distance_alpha(const AffineElt& a, const AffineElt& b, size_t root_index) const {
        return bands(b)[root_index] - bands(a)[root_index];
    }
    long distance(const AffineElt& a, const AffineElt& b) const {
        auto ka = bands(a), kb = bands(b);
        long d = 0;
        for (size_t r = 0; r < ka.size(); ++r) d += kb[r] - ka[r];
        return d;
    }
    // number of separating hyperplanes (gallery distance); finite balls
    long gallery_distance(const AffineElt& a, const AffineElt& b) const {
        auto ka = bands(a), kb = bands(b);
        long d = 0;
        for (size_t r = 0; r < ka.size(); ++r) d += std::abs(kb[r] - ka[r]);
        return d;
    }

    // L(A): affine generators s with d(sA, A) = +1 where sA = cross(A, s)
    std::vector<size_t> lset(const AffineElt& x) const {
        std::vector<size_t> out;
        for (size_t s = 0; s < num_affine_generators(); ++s)
            if (distance(cross(x, s), x) == 1) out.push_back(s);
        return out;
    }

    // ----- boxes and the *-action ---------------------------------------

    // coweight gamma with A inside the box Pi_gamma (coweight coordinates)
    std::vector<long> box_coweight(const AffineElt& x) const {
        std::vector<long> bary = barycenter_scaled(x);
        std::vector<long> g(n_);
        for (size_t i = 0; i < n_; ++i) {
            long q = bary[i] / bden_;
            if (bary[i] % bden_ != 0 && bary[i] < 0) --q;
            g[i] = q;
        }
        return g;
    }

    // star(z, A) = A + z(gamma) - gamma
    AffineElt star(const WeylElt& z, const AffineElt& x) const {
        std::vector<long> g = box_coweight(x);
        std::vector<long> zg = matop::apply(z.point_matrix(), g, n_);
        AffineElt r = x;
        for (size_t i = 0; i < n_; ++i) r.t[i] += zg[i] - g[i];
        return r;
    }

    // ----- the torsor subscript (index) -----------------------------------

    AffineElt alcove_of_index(const AffineElt& idx) const { return inverse(idx); }
    AffineElt index_of(const AffineElt& coord) const { return inverse(coord); }
    AffineElt alcove_of_index(const WeylElt& w) const { return from_weyl(W_.inverse(w)); }

    // epsilon_z on indices: z * A_idx = A_{epsilon_z(idx)}
    AffineElt epsilon(const WeylElt& z, const AffineElt& idx) const {
        return index_of(star(z, alcove_of_index(idx)));
    }

    // the involution i(w . t_lambda) = w . t_{-lambda}; in (w, mu) storage
    // with mu = w(lambda) this is simply mu -> -mu
    AffineElt semiinf_involution(const AffineElt& idx) const {
        AffineElt r = idx;
        for (auto& c : r.t) c = -c;
        return r;
    }

    // ----- theta chains ----------------------------------------------------

    // [A^0, ..., A^floor]: A^0 = As_alpha, then repeated reflection through
    // the ceiling hyperplane <alpha, .> = k_alpha + 1
    std::vector<AffineElt> theta_chain(const AffineElt& x, size_t i, long floor) const {
        std::vector<AffineElt> chain;
        chain.reserve(static_cast<size_t>(floor) + 1);
        AffineElt cur = right_reflect(x, i);
        chain.push_back(cur);
        std::vector<long> alpha_vee = coroot_of(simple_root(i));
        for (long k = 1; k <= floor; ++k) {
            // simple-root band = floor of coordinate i of the barycenter
            long num = barycenter_scaled(cur)[i];
            long band_i = num / bden_ - ((num % bden_ != 0 && num < 0) ? 1 : 0);
            AffineElt refl{W_.simple(i), std::vector<long>(n_, 0)};
            for (size_t j = 0; j < n_; ++j) refl.t[j] = (band_i + 1) * alpha_vee[j];
            cur = compose(refl, cur);
            chain.push_back(cur);
        }
        return chain;
    }

    // ----- regions ---------------------------------------------------------

    bool in_xi_fin(const AffineElt& x) const {
        for (long c : x.t)
            if (c != 0) return false;
        return true;
    }

    // A lies outside Xi_fin and inside a Weyl chamber whose closure contains
    // the coroot of some root in R (roots given over the simple basis)
    bool xi_plus(const AffineElt& x, const std::vector<RootVec>& R) const {
        if (R.empty() || in_xi_fin(x)) return false;
        auto k = bands(x);
        const auto& roots = W_.datum().positive_roots;
        for (const auto& alpha : R) {
            std::vector<long> av = coroot_of(alpha);
            bool ok = true;
            for (size_t r = 0; r < roots.size() && ok; ++r) {
                long c = 0;
                for (size_t i = 0; i < n_; ++i) c += roots[r][i] * av[i];
                if (c > 0 && k[r] < 0) ok = false;
                if (c < 0 && k[r] >= 0) ok = false;
            }
            if (ok) return true;
        }
        return false;
    }

    // member of W_<=: every epsilon_y image is w . t_nu with nu <= 0
    bool in_w_leq(const AffineElt& idx) const {
        for (const auto& y : W_.enumerate()) {
            AffineElt e = epsilon(y, idx);
            // e = (w, mu) stores w . t_lambda with mu = w(lambda)
            std::vector<long> mu_cw = matop::apply(W_.inverse(e.w).point_matrix(), e.t, n_);
            std::vector<long> lam;
            try {
                lam = coroot_coords(mu_cw);
            } catch (const std::invalid_argument&) {
                return false;
            }
            for (long c : lam)
                if (c > 0) return false;
        }
        return true;
    }

    // orbit of the finite-Weyl indices under all epsilon_z
    const std::set<AffineElt>& w_prime_orbit() const {
        std::lock_guard<std::mutex> lk(mu_);
        if (!wprime_.empty()) return wprime_;
        std::vector<AffineElt> frontier;
        for (const auto& w : W_.enumerate()) {
            AffineElt idx = from_weyl(w);
            if (wprime_.insert(idx).second) frontier.push_back(idx);
        }
        size_t guard = W_.order() * W_.order();
        while (!frontier.empty()) {
            std::vector<AffineElt> next;
            for (const auto& idx : frontier)
                for (size_t i = 0; i < n_; ++i) {
                    AffineElt e = epsilon(W_.simple(i), idx);
                    if (wprime_.size() > guard) throw std::logic_error("w_prime orbit exceeded |W|^2");
                    if (wprime_.insert(e).second) next.push_back(e);
                }
            frontier = std::move(next);
        }
        return wprime_;
    }
    bool in_w_prime(const AffineElt& idx) const { return w_prime_orbit().count(idx) > 0; }

    // ----- window enumeration ----------------------------------------------

    // all alcoves with gallery distance <= radius from A+ (BFS over crossings)
    std::vector<AffineElt> window(long radius) const {
        std::set<AffineElt> seen;
        std::vector<AffineElt> frontier{identity()}, out;
        seen.insert(identity());
        out.push_back(identity());
        while (!frontier.empty()) {
            std::vector<AffineElt> next;
            for (const auto& x : frontier)
                for (size_t s = 0; s < num_affine_generators(); ++s) {
                    AffineElt y = cross(x, s);
                    if (seen.count(y)) continue;
                    if (gallery_distance(identity(), y) > radius) continue;
                    seen.insert(y);
                    out.push_back(y);
                    next.push_back(y);
                }
            frontier = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // ----- keys ------------------------------------------------------------

    AlcoveKey key_of(const AffineElt& x) const {
        AlcoveKey k;
        k.wid = static_cast<std::uint16_t>(W_.element_id(x.w));
        for (size_t i = 0; i < n_; ++i) {
            if (x.t[i] > 30000 || x.t[i] < -30000) throw std::overflow_error("alcove key overflow");
            k.t[i] = static_cast<std::int16_t>(x.t[i]);
        }
        return k;
    }
    AffineElt elt_of(const AlcoveKey& k) const {
        AffineElt x{W_.enumerate()[k.wid], std::vector<long>(n_, 0)};
        for (size_t i = 0; i < n_; ++i) x.t[i] = k.t[i];
        return x;
    }

    RootVec simple_root(size_t i) const {
        RootVec r(n_, 0);
        r[i] = 1;
        return r;
    }

    // coroot of a root, coweight coordinates (integral for crystallographic data)
    std::vector<long> coroot_of(const RootVec& beta) const {
        Rat dbeta(0);
        const auto& P = W_.datum().pair_rc;
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j) dbeta += Rat(beta[i]) * Rat(beta[j]) * sym_[j] * Rat(P[i][j]);
        dbeta = dbeta / Rat(2);  // (beta,beta)/2 with (a_i,a_j) = sym_j * P[i][j]
        std::vector<long> out(n_, 0);
        for (size_t j = 0; j < n_; ++j) {
            Rat v(0);
            for (size_t i = 0; i < n_; ++i) v += Rat(beta[i]) * (sym_[i] / dbeta) * Rat(P[j][i]);
            if (v.denominator() != 1) throw std::logic_error("coroot is not integral");
            out[j] = static_cast<long>(v.numerator());
        }
        return out;
    }

    const std::vector<std::vector<long>>& positive_coroots() const { return pos_coroots_; }
    const std::vector<long>& theta_vee() const { return theta_vee_; }

private:
    std::vector<Rat> solve_pair_matrix(std::vector<Rat> rhs) const {
        // solve P c = rhs where column j of P is alpha_j^vee in coweight coords
        const auto& P = W_.datum().pair_rc;
        std::vector<std::vector<Rat>> m(n_, std::vector<Rat>(n_ + 1));
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = 0; j < n_; ++j) m[i][j] = Rat(P[i][j]);
            m[i][n_] = rhs[i];
        }
        for (size_t c = 0; c < n_; ++c) {
            size_t piv = c;
            while (piv < n_ && m[piv][c] == Rat(0)) ++piv;
            if (piv == n_) throw std::logic_error("pair matrix singular");
            std::swap(m[c], m[piv]);
            for (size_t i = 0; i < n_; ++i) {
                if (i == c || m[i][c] == Rat(0)) continue;
                Rat f = m[i][c] / m[c][c];
                for (size_t j = c; j <= n_; ++j) m[i][j] -= f * m[c][j];
            }
        }
        std::vector<Rat> out(n_);
        for (size_t i = 0; i < n_; ++i) out[i] = m[i][n_] / m[i][i];
        return out;
    }

    const WeylGroup& W_;
    size_t n_;
    std::vector<Rat> sym_;
    std::vector<long> bnum_;
    long bden_ = 1;
    std::vector<long> theta_vee_;
    WeylElt s_theta_;
    std::vector<std::vector<long>> pos_coroots_;
    mutable std::mutex mu_;
    mutable std::set<AffineElt> wprime_;
};

}  // namespace coxalc
