#pragma once

// Exact linear algebra for matrices of Laurent polynomials, over the
// fraction field Q(v).  Rank and forward elimination are fraction-free
// (Bareiss), so every intermediate entry is a minor of the input matrix;
// solutions come out as (numerator, denominator) pairs that callers can
// verify by cross-multiplication without ever reducing a fraction.

#include "laurent.hpp"

#include <optional>
#include <vector>

namespace coxalc {

using LaurentVec = std::vector<Laurent>;
using LaurentMatrix = std::vector<LaurentVec>;

namespace detail {

// gcd in Q[v] (monic Euclid), returned as a primitive integer polynomial.
// Only used to keep solve() fractions small; correctness never depends on it.
inline Laurent poly_gcd(Laurent a, Laurent b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    a = a.shifted(-a.valuation());
    b = b.shifted(-b.valuation());
    // Euclid with rational coefficients, tracked as vectors of Rat.
    auto to_vec = [](const Laurent& p) {
        std::vector<Rat> v(static_cast<size_t>(p.degree()) + 1, Rat(0));
        for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e)] = Rat(c);
        return v;
    };
    auto deg = [](const std::vector<Rat>& v) {
        for (size_t i = v.size(); i-- > 0;)
            if (v[i] != Rat(0)) return static_cast<long>(i);
        return -1L;
    };
    std::vector<Rat> x = to_vec(a), y = to_vec(b);
    while (deg(y) >= 0) {
        long dx = deg(x), dy = deg(y);
        if (dx < dy) {
            std::swap(x, y);
            continue;
        }
        Rat f = x[static_cast<size_t>(dx)] / y[static_cast<size_t>(dy)];
        for (long i = 0; i <= dy; ++i)
            x[static_cast<size_t>(i + dx - dy)] -= f * y[static_cast<size_t>(i)];
        x[static_cast<size_t>(dx)] = Rat(0);
    }
    long dx = deg(x);
    if (dx < 0) return Laurent(1);
    // Clear denominators and divide by integer content.
    Int den = 1;
    for (long i = 0; i <= dx; ++i) den = boost::multiprecision::lcm(den, x[static_cast<size_t>(i)].denominator());
    std::vector<Int> z(static_cast<size_t>(dx) + 1);
    Int content = 0;
    for (long i = 0; i <= dx; ++i) {
        z[static_cast<size_t>(i)] = x[static_cast<size_t>(i)].numerator() * (den / x[static_cast<size_t>(i)].denominator());
        content = boost::multiprecision::gcd(content, z[static_cast<size_t>(i)]);
    }
    Laurent::Terms t;
    for (long i = 0; i <= dx; ++i)
        if (z[static_cast<size_t>(i)] != 0) t.emplace_back(i, z[static_cast<size_t>(i)] / content);
    return Laurent::from_terms(std::move(t));
}

}  // namespace detail

// A fraction of Laurent polynomials, normalized just enough to keep back
// substitution from blowing up.
struct LFrac {
    Laurent num, den;

    LFrac() : num(0), den(1) {}
    LFrac(Laurent n) : num(std::move(n)), den(1) {}
    LFrac(Laurent n, Laurent d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (den.is_zero()) throw std::logic_error("LFrac: zero denominator");
        if (num.is_zero()) {
            den = Laurent(1);
            return;
        }
        Laurent g = detail::poly_gcd(num, den);
        if (!(g == Laurent(1))) {
            num = divide_by(num, g);
            den = divide_by(den, g);
        }
        // Normalize so den is a genuine polynomial with positive leading term.
        long shift = -den.valuation();
        num = num.shifted(shift);
        den = den.shifted(shift);
        if (den.terms().back().second < 0) {
            num = -num;
            den = -den;
        }
        Int g2 = 0;
        for (const auto& [e, c] : num.terms()) g2 = boost::multiprecision::gcd(g2, c);
        for (const auto& [e, c] : den.terms()) g2 = boost::multiprecision::gcd(g2, c);
        if (g2 > 1) {
            num = divide_const(num, g2);
            den = divide_const(den, g2);
        }
    }

    friend LFrac operator+(const LFrac& a, const LFrac& b) {
        return LFrac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend LFrac operator-(const LFrac& a, const LFrac& b) {
        return LFrac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend LFrac operator*(const LFrac& a, const LFrac& b) { return LFrac(a.num * b.num, a.den * b.den); }
    friend LFrac operator/(const LFrac& a, const LFrac& b) {
        if (b.is_zero()) throw std::logic_error("LFrac: division by zero");
        return LFrac(a.num * b.den, a.den * b.num);
    }
    bool operator==(const LFrac& o) const { return num * o.den == o.num * den; }

private:
    // g is primitive, so by Gauss's lemma divisibility over Q implies
    // divisibility over Z and divide_exact succeeds.
    static Laurent divide_by(const Laurent& p, const Laurent& g) { return divide_exact(p, g); }
    static Laurent divide_const(const Laurent& p, const Int& k) {
        Laurent::Terms t;
        for (const auto& [e, c] : p.terms()) t.emplace_back(e, c / k);
        return Laurent::from_terms(std::move(t));
    }
};

struct EchelonResult {
    LaurentMatrix mat;           // fraction-free echelon form
    std::vector<size_t> pivot_cols;
    std::vector<size_t> row_perm;  // original index of each row
    size_t rank = 0;
};

// Fraction-free row echelon (Bareiss).  Pivots are chosen among candidates
// by minimal (degree - valuation), which keeps entry growth down.
inline EchelonResult bareiss_echelon(LaurentMatrix m, size_t pivot_col_limit = SIZE_MAX) {
    EchelonResult res;
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    res.row_perm.resize(rows);
    for (size_t i = 0; i < rows; ++i) res.row_perm[i] = i;
    size_t r = 0;
    Laurent prev(1);
    for (size_t c = 0; c < cols && c < pivot_col_limit && r < rows; ++c) {
        // pick pivot row: nonzero entry of minimal spread in column c
        size_t best = SIZE_MAX;
        long best_spread = 0;
        for (size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            long spread = m[i][c].degree() - m[i][c].valuation();
            if (best == SIZE_MAX || spread < best_spread) {
                best = i;
                best_spread = spread;
            }
        }
        if (best == SIZE_MAX) continue;
        std::swap(m[r], m[best]);
        std::swap(res.row_perm[r], res.row_perm[best]);
        const Laurent piv = m[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Laurent t = m[i][j] * piv - m[i][c] * m[r][j];
                m[i][j] = divide_exact(t, prev);
            }
            m[i][c] = Laurent(0);
        }
        prev = piv;
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

inline size_t rank_over_qv(const LaurentMatrix& m) { return bareiss_echelon(m).rank; }

// Rank after exact specialization v = x (x a nonzero rational).
inline size_t rank_specialized(const LaurentMatrix& m, const Rat& x) {
    std::vector<std::vector<Rat>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Rat> r;
        r.reserve(row.size());
        for (const auto& p : row) r.push_back(p.specialize(x));
        a.push_back(std::move(r));
    }
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = SIZE_MAX;
        for (size_t i = rank; i < rows; ++i)
            if (a[i][c] != Rat(0)) { piv = i; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(a[rank], a[piv]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == Rat(0)) continue;
            Rat f = a[i][c] / a[rank][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

struct SolveResult {
    bool consistent = false;
    size_t rank = 0;  // rank of the coefficient matrix
    // coordinates x_j = num[j] / den, satisfying  A * num = den * b  exactly.
    LaurentVec num;
    Laurent den;
    std::optional<size_t> witness_row;  // a row of A | b exhibiting inconsistency
};

// Solve A x = b exactly over Q(v).  A is rows x n.  If the system is
// consistent the returned coordinates are verified by cross-multiplication
// before returning; free variables (if any) are set to zero.
inline SolveResult solve_linear(const LaurentMatrix& A, const LaurentVec& b) {
    size_t rows = A.size();
    size_t n = rows == 0 ? 0 : A[0].size();
    LaurentMatrix aug = A;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    EchelonResult ech = bareiss_echelon(std::move(aug), n);

    SolveResult out;
    out.rank = ech.rank;
    // Inconsistency: a row that is zero on A-columns but nonzero on b.
    for (size_t i = ech.rank; i < rows; ++i) {
        bool zero = true;
        for (size_t j = 0; j < n && zero; ++j) zero = ech.mat[i][j].is_zero();
        if (zero && !ech.mat[i][n].is_zero()) {
            out.consistent = false;
            out.witness_row = ech.row_perm[i];
            return out;
        }
    }
    // Back substitution over fractions on the pivot rows.
    std::vector<LFrac> x(n, LFrac(Laurent(0)));
    for (size_t k = ech.rank; k-- > 0;) {
        size_t pc = ech.pivot_cols[k];
        LFrac acc(ech.mat[k][n]);
        for (size_t j = pc + 1; j < n; ++j)
            if (!ech.mat[k][j].is_zero() && !x[j].is_zero())
                acc = acc - LFrac(ech.mat[k][j]) * x[j];
        x[pc] = acc / LFrac(ech.mat[k][pc]);
    }
    // Common denominator form.
    Laurent den(1);
    for (size_t j = 0; j < n; ++j)
        if (!x[j].is_zero()) den = den * x[j].den;  // product; reduced below by verification only
    LaurentVec num(n, Laurent(0));
    for (size_t j = 0; j < n; ++j)
        if (!x[j].is_zero()) num[j] = x[j].num * divide_exact(den, x[j].den);
    // Exact verification A * num == den * b.
    for (size_t i = 0; i < rows; ++i) {
        Laurent lhs(0);
        for (size_t j = 0; j < n; ++j)
            if (!num[j].is_zero() && !A[i][j].is_zero()) lhs += A[i][j] * num[j];
        if (!(lhs == den * b[i])) {
            out.consistent = false;
            out.witness_row = i;
            return out;
        }
    }
    out.consistent = true;
    out.num = std::move(num);
    out.den = std::move(den);
    return out;
}

// Basis of the right nullspace of A over Q(v), denominators cleared.
inline std::vector<LaurentVec> nullspace(const LaurentMatrix& A) {
    size_t rows = A.size();
    size_t n = rows == 0 ? 0 : A[0].size();
    EchelonResult ech = bareiss_echelon(A);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<LaurentVec> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<LFrac> x(n, LFrac(Laurent(0)));
        x[f] = LFrac(Laurent(1));
        for (size_t k = ech.rank; k-- > 0;) {
            size_t pc = ech.pivot_cols[k];
            LFrac acc(Laurent(0));
            for (size_t j = pc + 1; j < n; ++j)
                if (!ech.mat[k][j].is_zero() && !x[j].is_zero())
                    acc = acc - LFrac(ech.mat[k][j]) * x[j];
            x[pc] = acc / LFrac(ech.mat[k][pc]);
        }
        Laurent den(1);
        for (size_t j = 0; j < n; ++j)
            if (!x[j].is_zero()) den = den * x[j].den;
        LaurentVec vec(n, Laurent(0));
        for (size_t j = 0; j < n; ++j)
            if (!x[j].is_zero()) vec[j] = x[j].num * divide_exact(den, x[j].den);
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace coxalc
