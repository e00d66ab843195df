#pragma once

// The periodic Hecke module: finitely supported alcove vectors with a
// truncation-exactness floor, the affine Hecke action, the theta operators,
// the restriction J_e to fundamental alcoves and its section, and the
// generator set of the finite submodule M0 with exact window linear algebra.
//
// Floor semantics: in a vector with floor N, every stored coefficient is
// exact in exponents > -N and absent terms above -N are genuinely zero;
// nothing is claimed at or below -N.  Operations shrink the floor by the
// largest positive exponent they can transport uncertainty across: crossing
// costs 1 (the v in v - v^{-1}), theta costs only the top exponent of the
// input coefficients (its own series has non-positive exponents).

#include "alcove.hpp"
#include "hecke.hpp"
#include "linalg.hpp"

namespace coxalc {

struct PeriodicVec {
    std::map<AlcoveKey, Laurent> terms;
    long floor = 0;
};

struct M0Generator {
    WeylElt w;       // fundamental alcove label
    WeylElt z;       // minimal-length representative of P(w) z
    PeriodicVec vec;  // theta_{z^{-1}}(A_w)
};

struct WindowRankResult {
    size_t rank = 0;
    size_t columns = 0;
    bool full = false;
    // top exponent of the pivot-minor determinant vs. the largest exponent
    // an uncertified tail could contribute to it; certified when the former
    // clears the latter
    long det_top = 0;
    long error_bound = 0;
    bool certified = false;
    size_t rank_at_v2 = 0;
};

struct GeneratorSolve {
    bool consistent = false;
    LaurentVec num;  // coordinates num[i] / den
    Laurent den;
    std::optional<AffineElt> witness;  // window alcove exhibiting the residual
};

class PeriodicModule {
public:
    PeriodicModule(const AlcoveGeometry& G, const HeckeAlgebra& H) : G_(G), H_(H), W_(G.group()) {
        if (&H.group() != &G.group()) throw std::invalid_argument("mismatched group contexts");
    }

    const AlcoveGeometry& geometry() const { return G_; }

    // ----- construction ---------------------------------------------------

    PeriodicVec zero(long floor) const { return {.terms = {}, .floor = check_floor(floor)}; }

    PeriodicVec basis(const AffineElt& coord, long floor) const {
        PeriodicVec v = zero(floor);
        v.terms.emplace(G_.key_of(coord), Laurent(1));
        return v;
    }
    // A_w for w in the finite Weyl group (or a general affine index)
    PeriodicVec basis_index(const WeylElt& w, long floor) const {
        return basis(G_.alcove_of_index(w), floor);
    }
    PeriodicVec basis_index(const AffineElt& idx, long floor) const {
        return basis(G_.alcove_of_index(idx), floor);
    }

    PeriodicVec add(const PeriodicVec& a, const PeriodicVec& b) const {
        PeriodicVec r;
        r.floor = check_floor(std::min(a.floor, b.floor));
        r.terms = a.terms;
        for (const auto& [k, c] : b.terms) {
            auto [it, fresh] = r.terms.emplace(k, c);
            if (!fresh) it->second += c;
        }
        trim(r);
        return r;
    }
    PeriodicVec scale(const Laurent& c, const PeriodicVec& a) const {
        PeriodicVec r;
        long cost = (c.is_zero() || c.degree() <= 0) ? 0 : c.degree();
        r.floor = check_floor(a.floor - cost);
        for (const auto& [k, p] : a.terms) r.terms.emplace(k, p * c);
        trim(r);
        return r;
    }
    PeriodicVec sub(const PeriodicVec& a, const PeriodicVec& b) const {
        return add(a, scale(Laurent(-1), b));
    }

    bool equal_certified(const PeriodicVec& a, const PeriodicVec& b) const {
        long f = std::min(a.floor, b.floor);
        PeriodicVec x = a, y = b;
        x.floor = y.floor = f;
        trim(x);
        trim(y);
        return x.terms == y.terms;
    }

    Laurent coeff(const PeriodicVec& v, const AffineElt& coord) const {
        auto it = v.terms.find(G_.key_of(coord));
        return it == v.terms.end() ? Laurent(0) : it->second;
    }

    // ----- module operations ----------------------------------------------

    // T~_s for an affine generator s (0 = affine reflection, i >= 1 finite)
    PeriodicVec hecke_apply(size_t s, const PeriodicVec& m) const {
        PeriodicVec r;
        r.floor = check_floor(m.floor - 1);
        for (const auto& [k, c] : m.terms) {
            AffineElt a = G_.elt_of(k);
            AffineElt sa = G_.cross(a, s);
            add_term(r, G_.key_of(sa), c);
            if (G_.distance(sa, a) == 1) add_term(r, k, c * laurent_delta());
        }
        trim(r);
        return r;
    }

    // operator T~_w: letters act rightmost-first, so that
    // hecke_apply_word(uv) = hecke_apply_word(u) o hecke_apply_word(v)
    PeriodicVec hecke_apply_word(std::span<const std::uint8_t> affine_letters, PeriodicVec m) const {
        for (auto it = affine_letters.rbegin(); it != affine_letters.rend(); ++it)
            m = hecke_apply(*it, m);
        return m;
    }

    // theta_alpha for a finite simple root index (0-based)
    PeriodicVec theta(size_t i, const PeriodicVec& m) const {
        long top = 0;
        for (const auto& [k, c] : m.terms)
            if (!c.is_zero()) top = std::max(top, c.degree());
        PeriodicVec r;
        r.floor = check_floor(m.floor - std::max(0L, top));
        for (const auto& [k, c] : m.terms) {
            auto chain = G_.theta_chain(G_.elt_of(k), i, m.floor);
            // v^{-1} A^0 + sum_{n>=1} (-1)^{n+1} (v^{-n+1} - v^{-n-1}) A^n
            add_term(r, G_.key_of(chain[0]), c * Laurent::v_pow(-1));
            for (size_t n = 1; n < chain.size(); ++n) {
                long sign = (n % 2 == 1) ? 1 : -1;
                Laurent coef = Laurent::monomial(sign, -static_cast<long>(n) + 1) -
                               Laurent::monomial(sign, -static_cast<long>(n) - 1);
                add_term(r, G_.key_of(chain[n]), c * coef);
            }
        }
        trim(r);
        return r;
    }

    // theta_z along the canonical reduced word of z (rightmost letter first)
    PeriodicVec theta_word(const WeylElt& z, PeriodicVec m) const {
        const Word& word = z.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) m = theta(*it, m);
        return m;
    }

    // rank-1 canonical basis element A_n^sharp, truncated at the floor
    PeriodicVec sharp_rank1(long n, long floor) const {
        if (G_.rank() != 1) throw std::invalid_argument("sharp_rank1 requires type A1");
        PeriodicVec r = zero(floor);
        for (long i = 0; i < floor; ++i)
            add_term(r, G_.key_of(a1_alcove(n + i)), Laurent::monomial(i % 2 == 0 ? 1 : -1, -i));
        trim(r);
        return r;
    }

    AffineElt a1_alcove(long n) const {
        if (G_.rank() != 1) throw std::invalid_argument("a1_alcove requires type A1");
        if (n % 2 == 0) return G_.translation({n});
        return {W_.simple(0), {n + 1}};
    }

    // ----- restriction to fundamental alcoves ------------------------------

    // J_e: A_w -> [Delta_w] for w in W, 0 outside
    HeckeElt j_e(const PeriodicVec& m) const {
        HeckeElt h;
        long cost = 0;
        for (const auto& [k, c] : m.terms) {
            AffineElt a = G_.elt_of(k);
            if (!G_.in_xi_fin(a)) continue;
            WeylElt w = W_.inverse(a.w);  // index of the fundamental alcove
            HeckeElt d = delta_cached(w);
            for (const auto& [wid, p] : d.c)
                if (!p.is_zero() && p.degree() > 0) cost = std::max(cost, p.degree());
            h = HeckeAlgebra::add(h, HeckeAlgebra::scale(c, d));
        }
        h.floor = check_floor(m.floor - cost);
        return h;
    }

    // J_e': the section of J_e landing in the span of the fundamental alcoves
    PeriodicVec j_e_section(const HeckeElt& h, long floor) const {
        PeriodicVec r = zero(h.floor ? std::min(*h.floor, floor) : floor);
        // invert through the delta basis (unitriangular by length)
        HeckeElt rest = h;
        const auto& all = W_.enumerate();
        while (!rest.is_zero()) {
            auto best = rest.c.begin();
            for (auto it = rest.c.begin(); it != rest.c.end(); ++it)
                if (all[it->first].length() > all[best->first].length()) best = it;
            WeylElt w = all[best->first];
            Laurent a = best->second;
            add_term(r, G_.key_of(G_.alcove_of_index(w)), a);
            rest = HeckeAlgebra::sub(rest, HeckeAlgebra::scale(a, delta_cached(w)));
        }
        trim(r);
        return r;
    }

    // xi: support restriction to Xi_fin; rho = id - xi
    PeriodicVec xi_proj(const PeriodicVec& m) const {
        PeriodicVec r = zero(m.floor);
        for (const auto& [k, c] : m.terms)
            if (G_.in_xi_fin(G_.elt_of(k))) r.terms.emplace(k, c);
        return r;
    }
    PeriodicVec rho_proj(const PeriodicVec& m) const {
        PeriodicVec r = zero(m.floor);
        for (const auto& [k, c] : m.terms)
            if (!G_.in_xi_fin(G_.elt_of(k))) r.terms.emplace(k, c);
        return r;
    }

    // ----- M0 ----------------------------------------------------------------

    // theta_{z^{-1}}(A_w) over all w in W and minimal coset representatives z
    // of P(w)\W, in canonical order
    // the alcove indexing the image of a generator in the quotient basis
    AffineElt eta_lead(const M0Generator& g) const {
        return G_.star(W_.inverse(g.z), G_.alcove_of_index(g.w));
    }

    std::vector<M0Generator> m0_generators(long floor) const {
        if (G_.rank() > 2) throw std::invalid_argument("m0_generators: exhaustive generation is guarded to rank <= 2");
        std::vector<M0Generator> out;
        for (const auto& w : W_.enumerate()) {
            auto pd = W_.coset_min_reps(W_.right_ascents(w));
            for (const auto& z : pd.min_reps) {
                M0Generator g{w, z, theta_word(W_.inverse(z), basis_index(w, floor))};
                if (g.vec.floor <= 0) throw std::runtime_error("m0_generators: floor exhausted");
                out.push_back(std::move(g));
            }
        }
        return out;
    }

    // ----- window linear algebra --------------------------------------------

    std::vector<AffineElt> window(long radius) const { return G_.window(radius); }

    LaurentMatrix window_matrix(const std::vector<PeriodicVec>& vecs,
                                const std::vector<AffineElt>& win) const {
        LaurentMatrix m(vecs.size(), LaurentVec(win.size()));
        for (size_t i = 0; i < vecs.size(); ++i) {
            if (vecs[i].floor <= 0)
                throw std::invalid_argument("window_matrix: uncertified vector (floor exhausted)");
            for (size_t j = 0; j < win.size(); ++j) m[i][j] = coeff(vecs[i], win[j]);
        }
        return m;
    }

    // The certificate minor: without designated columns the Bareiss pivot
    // minor is used, which is valid but can under-shoot; the M0 suites pass
    // the eta'-leading alcoves star(z^{-1}, A_w), whose minor has unit top
    // degree when the generators are independent.
    WindowRankResult window_rank(const std::vector<PeriodicVec>& vecs, long radius,
                                 const std::vector<AffineElt>& lead_columns = {}) const {
        auto win = window(radius);
        LaurentMatrix m = window_matrix(vecs, win);
        WindowRankResult out;
        out.columns = win.size();
        EchelonResult ech = bareiss_echelon(m);
        out.rank = ech.rank;
        out.full = (out.rank == vecs.size());
        out.rank_at_v2 = rank_specialized(m, Rat(2));
        if (out.full && out.rank > 0) {
            Laurent lastpiv = ech.mat[out.rank - 1][ech.pivot_cols[out.rank - 1]];
            if (lead_columns.size() == vecs.size()) {
                LaurentMatrix s(vecs.size(), LaurentVec(vecs.size()));
                for (size_t i = 0; i < vecs.size(); ++i)
                    for (size_t j = 0; j < vecs.size(); ++j) s[i][j] = coeff(vecs[i], lead_columns[j]);
                EchelonResult se = bareiss_echelon(s);
                if (se.rank == vecs.size()) {
                    Laurent det = se.mat[se.rank - 1][se.pivot_cols[se.rank - 1]];
                    if (det.degree() > lastpiv.degree()) lastpiv = det;
                }
            }
            out.det_top = lastpiv.degree();
            // worst case: one uncertified tail entry (exponent <= -floor)
            // times stored entries of maximal degree from the other rows
            long minfloor = vecs[0].floor;
            for (const auto& v : vecs) minfloor = std::min(minfloor, v.floor);
            long tops = 0;
            std::vector<long> rowtop(vecs.size(), 0);
            for (size_t i = 0; i < vecs.size(); ++i)
                for (const auto& [k, c] : vecs[i].terms)
                    if (!c.is_zero()) rowtop[i] = std::max(rowtop[i], c.degree());
            std::sort(rowtop.begin(), rowtop.end(),
                      [](long a, long b) { return a > b; });
            for (size_t i = 0; i + 1 < vecs.size(); ++i) tops += std::max(rowtop[i], 0L);
            out.error_bound = -minfloor + tops;
            out.certified = out.det_top > out.error_bound;
        }
        return out;
    }

    GeneratorSolve solve_in_generators(const PeriodicVec& m, const std::vector<M0Generator>& gens,
                                       long radius) const {
        auto win = window(radius);
        std::vector<PeriodicVec> vs;
        vs.reserve(gens.size());
        for (const auto& g : gens) vs.push_back(g.vec);
        LaurentMatrix gm = window_matrix(vs, win);
        if (m.floor <= 0) throw std::invalid_argument("solve_in_generators: uncertified target");
        // rows = window alcoves, columns = generators
        LaurentMatrix A(win.size(), LaurentVec(gens.size()));
        LaurentVec b(win.size());
        for (size_t j = 0; j < win.size(); ++j) {
            for (size_t i = 0; i < gens.size(); ++i) A[j][i] = gm[i][j];
            b[j] = coeff(m, win[j]);
        }
        GeneratorSolve out;
        // Fast path: solve on the square minor of eta'-leading rows (the
        // system has full column rank there), then verify against every
        // window row by cross-multiplication.
        std::map<AffineElt, size_t> row_of;
        for (size_t j = 0; j < win.size(); ++j) row_of.emplace(win[j], j);
        std::vector<size_t> lead_rows;
        for (const auto& g : gens) {
            auto it = row_of.find(eta_lead(g));
            if (it == row_of.end()) break;
            lead_rows.push_back(it->second);
        }
        if (lead_rows.size() == gens.size()) {
            LaurentMatrix As(lead_rows.size(), LaurentVec(gens.size()));
            LaurentVec bs(lead_rows.size());
            for (size_t r = 0; r < lead_rows.size(); ++r) {
                As[r] = A[lead_rows[r]];
                bs[r] = b[lead_rows[r]];
            }
            auto sol = solve_linear(As, bs);
            if (sol.consistent && sol.rank == gens.size()) {
                bool verified = true;
                std::optional<size_t> badrow;
                for (size_t j = 0; j < win.size() && verified; ++j) {
                    Laurent lhs(0);
                    for (size_t i = 0; i < gens.size(); ++i)
                        if (!sol.num[i].is_zero() && !A[j][i].is_zero()) lhs += A[j][i] * sol.num[i];
                    if (!(lhs == sol.den * b[j])) {
                        verified = false;
                        badrow = j;
                    }
                }
                if (verified) {
                    out.consistent = true;
                    out.num = std::move(sol.num);
                    out.den = std::move(sol.den);
                    return out;
                }
                // a unique candidate failed globally: genuinely inconsistent
                out.consistent = false;
                out.witness = win[*badrow];
                return out;
            }
        }
        auto sol = solve_linear(A, b);
        out.consistent = sol.consistent;
        if (sol.consistent) {
            out.num = std::move(sol.num);
            out.den = std::move(sol.den);
        } else if (sol.witness_row) {
            out.witness = win[*sol.witness_row];
        }
        return out;
    }

private:
    long check_floor(long f) const {
        if (f <= 0) throw std::runtime_error("periodic floor exhausted (<= 0)");
        return f;
    }
    void add_term(PeriodicVec& r, const AlcoveKey& k, const Laurent& c) const {
        if (c.is_zero()) return;
        auto [it, fresh] = r.terms.emplace(k, c);
        if (!fresh) it->second += c;
    }
    void trim(PeriodicVec& r) const {
        for (auto it = r.terms.begin(); it != r.terms.end();) {
            it->second = it->second.truncate_below(r.floor);
            if (it->second.is_zero())
                it = r.terms.erase(it);
            else
                ++it;
        }
    }
    HeckeElt delta_cached(const WeylElt& w) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = delta_memo_.find(w.word());
        if (it != delta_memo_.end()) return it->second;
        HeckeElt d = H_.delta_class(w);
        delta_memo_.emplace(w.word(), d);
        return d;
    }

    const AlcoveGeometry& G_;
    const HeckeAlgebra& H_;
    const WeylGroup& W_;
    mutable std::mutex mu_;
    mutable std::map<Word, HeckeElt> delta_memo_;
};

}  // namespace coxalc
