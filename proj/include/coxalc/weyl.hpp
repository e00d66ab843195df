#pragma once

// Finite Weyl groups.  Elements carry their canonical (lexicographically
// least) reduced word together with exact integer action matrices, one for
// points in coweight coordinates and one pair for the permutation action on
// roots.  Two elements are equal iff their matrices are equal, which the
// canonical word encodes uniquely, so words double as map keys.

#include "cartan.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace coxalc {

using Word = std::vector<std::uint8_t>;  // generator indices, 0-based
using IntMat = std::vector<long>;        // rank x rank, row major

namespace matop {

inline IntMat identity(size_t n) {
    IntMat m(n * n, 0);
    for (size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}
inline IntMat mul(const IntMat& a, const IntMat& b, size_t n) {
    IntMat r(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long aik = a[i * n + k];
            if (aik == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i * n + j] += aik * b[k * n + j];
        }
    return r;
}
template <typename T>
std::vector<T> apply(const IntMat& m, const std::vector<T>& x, size_t n) {
    std::vector<T> r(n, T(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (m[i * n + j] != 0) r[i] += T(m[i * n + j]) * x[j];
    return r;
}

}  // namespace matop

class WeylElt {
public:
    const Word& word() const { return word_; }
    size_t length() const { return word_.size(); }
    bool is_identity() const { return word_.empty(); }

    // Action on points in coweight coordinates.
    const IntMat& point_matrix() const { return mat_pt_; }
    // Action on root coefficient vectors, for this element and its inverse.
    const IntMat& root_matrix() const { return mat_rt_; }
    const IntMat& root_matrix_inv() const { return mat_rt_inv_; }

    bool operator==(const WeylElt& o) const { return word_ == o.word_; }
    bool operator!=(const WeylElt& o) const { return word_ != o.word_; }
    // Canonical order: by length, then lexicographic on the canonical word.
    bool operator<(const WeylElt& o) const {
        if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
        return word_ < o.word_;
    }

private:
    friend class WeylGroup;
    Word word_;
    IntMat mat_pt_, mat_rt_, mat_rt_inv_;
};

struct ParabolicData {
    std::vector<size_t> generators;   // the subset J
    std::vector<WeylElt> min_reps;    // minimal-length reps of <J>\W, sorted
    size_t subgroup_order = 0;
};

class WeylGroup {
public:
    static constexpr size_t kEnumerationGuard = 1152;

    explicit WeylGroup(CartanDatum d) : datum_(std::move(d)) {
        n_ = datum_.rank;
        gen_pt_.resize(n_);
        gen_rt_.resize(n_);
        for (size_t i = 0; i < n_; ++i) {
            // point action: x_j -> x_j - x_i * <alpha_j, alpha_i^vee>
            IntMat p = matop::identity(n_);
            for (size_t j = 0; j < n_; ++j) p[j * n_ + i] -= datum_.pair_rc[j][i];
            gen_pt_[i] = std::move(p);
            // root action: beta -> beta - <beta, alpha_i^vee> alpha_i
            IntMat r = matop::identity(n_);
            for (size_t j = 0; j < n_; ++j) r[i * n_ + j] -= datum_.pair_rc[j][i];
            gen_rt_[i] = std::move(r);
        }
        id_.word_ = {};
        id_.mat_pt_ = matop::identity(n_);
        id_.mat_rt_ = matop::identity(n_);
        id_.mat_rt_inv_ = matop::identity(n_);
    }

    const CartanDatum& datum() const { return datum_; }
    size_t rank() const { return n_; }

    WeylElt identity() const { return id_; }

    WeylElt simple(size_t i) const {
        check_gen(i);
        WeylElt w;
        w.word_ = {static_cast<std::uint8_t>(i)};
        w.mat_pt_ = gen_pt_[i];
        w.mat_rt_ = gen_rt_[i];
        w.mat_rt_inv_ = gen_rt_[i];
        return w;
    }

    // w * s_i
    WeylElt mult_gen(const WeylElt& w, size_t i) const {
        check_gen(i);
        WeylElt r;
        r.mat_pt_ = matop::mul(w.mat_pt_, gen_pt_[i], n_);
        r.mat_rt_ = matop::mul(w.mat_rt_, gen_rt_[i], n_);
        r.mat_rt_inv_ = matop::mul(gen_rt_[i], w.mat_rt_inv_, n_);
        r.word_ = canonical_word(r.mat_rt_, r.mat_rt_inv_);
        return r;
    }

    WeylElt mult(const WeylElt& a, const WeylElt& b) const {
        WeylElt r;
        r.mat_pt_ = matop::mul(a.mat_pt_, b.mat_pt_, n_);
        r.mat_rt_ = matop::mul(a.mat_rt_, b.mat_rt_, n_);
        r.mat_rt_inv_ = matop::mul(b.mat_rt_inv_, a.mat_rt_inv_, n_);
        r.word_ = canonical_word(r.mat_rt_, r.mat_rt_inv_);
        return r;
    }

    WeylElt inverse(const WeylElt& w) const {
        WeylElt r;
        r.mat_rt_ = w.mat_rt_inv_;
        r.mat_rt_inv_ = w.mat_rt_;
        // point matrix of w^{-1}: rebuild from the reversed word
        IntMat p = matop::identity(n_);
        for (auto it = w.word_.rbegin(); it != w.word_.rend(); ++it)
            p = matop::mul(p, gen_pt_[*it], n_);
        r.mat_pt_ = std::move(p);
        r.word_ = canonical_word(r.mat_rt_, r.mat_rt_inv_);
        return r;
    }

    WeylElt from_word(std::span<const std::uint8_t> letters) const {
        WeylElt w = id_;
        for (auto i : letters) w = mult_gen(w, i);
        return w;
    }

    // true iff the given word is reduced for the element it spells
    bool is_reduced(std::span<const std::uint8_t> letters) const {
        return from_word(letters).length() == letters.size();
    }

    // w(beta) on root coefficient vectors
    RootVec root_image(const WeylElt& w, const RootVec& beta) const {
        std::vector<long> b(beta.begin(), beta.end());
        auto r = matop::apply(w.mat_rt_, b, n_);
        return RootVec(r.begin(), r.end());
    }

    bool sends_root_negative(const WeylElt& w, size_t simple_idx) const {
        // sign of w(alpha_i): read column i of the root matrix
        for (size_t j = 0; j < n_; ++j) {
            long c = w.mat_rt_[j * n_ + simple_idx];
            if (c != 0) return c < 0;
        }
        return false;
    }

    // {i : l(w s_i) < l(w)}
    std::vector<size_t> right_descents(const WeylElt& w) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < n_; ++i)
            if (sends_root_negative(w, i)) out.push_back(i);
        return out;
    }

    // P(w) generators: {i : l(w s_i) > l(w)}.  P(e) = S, P(w0) = empty.
    std::vector<size_t> right_ascents(const WeylElt& w) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < n_; ++i)
            if (!sends_root_negative(w, i)) out.push_back(i);
        return out;
    }

    bool has_right_descent(const WeylElt& w, size_t i) const { return sends_root_negative(w, i); }
    bool has_left_descent(const WeylElt& w, size_t i) const {
        for (size_t j = 0; j < n_; ++j) {
            long c = w.mat_rt_inv_[j * n_ + i];
            if (c != 0) return c < 0;
        }
        return false;
    }

    // Bruhat order via the descent recursion.
    bool bruhat_leq(const WeylElt& x, const WeylElt& w) const {
        if (x.length() > w.length()) return false;
        if (x == w) return true;
        if (w.is_identity()) return false;
        size_t i = right_descents(w).front();
        WeylElt ws = mult_gen(w, i);
        if (has_right_descent(x, i)) return bruhat_leq(mult_gen(x, i), ws);
        return bruhat_leq(x, ws);
    }

    // All elements, sorted by (length, lex canonical word).  Guarded.
    const std::vector<WeylElt>& enumerate() const {
        std::lock_guard<std::mutex> lk(mu_);
        if (!elements_.empty()) return elements_;
        std::map<Word, WeylElt> seen;
        std::vector<WeylElt> frontier{id_};
        seen.emplace(id_.word_, id_);
        while (!frontier.empty()) {
            std::vector<WeylElt> next;
            for (const auto& w : frontier)
                for (size_t i = 0; i < n_; ++i) {
                    WeylElt u = mult_gen(w, i);
                    if (seen.size() > kEnumerationGuard)
                        throw std::length_error("WeylGroup::enumerate: group order exceeds guard (1152)");
                    if (seen.emplace(u.word_, u).second) next.push_back(u);
                }
            frontier = std::move(next);
        }
        elements_.reserve(seen.size());
        for (auto& [word, w] : seen) elements_.push_back(std::move(w));
        // std::map over (length, lex)-comparable words is not sorted that way;
        // sort explicitly by the canonical order.
        std::sort(elements_.begin(), elements_.end());
        for (size_t k = 0; k < elements_.size(); ++k) index_[elements_[k].word_] = k;
        return elements_;
    }

    size_t order() const { return enumerate().size(); }

    size_t element_id(const WeylElt& w) const {
        enumerate();
        std::lock_guard<std::mutex> lk(mu_);
        auto it = index_.find(w.word_);
        if (it == index_.end()) throw std::logic_error("element_id: not an element of this group");
        return it->second;
    }

    WeylElt longest() const {
        const auto& all = enumerate();
        return all.back();
    }

    // Subgroup <J> by BFS; |<J>| * |cosets| = |W|.
    std::vector<WeylElt> subgroup_elements(const std::vector<size_t>& J) const {
        std::map<Word, WeylElt> seen;
        seen.emplace(id_.word_, id_);
        std::vector<WeylElt> frontier{id_};
        while (!frontier.empty()) {
            std::vector<WeylElt> next;
            for (const auto& w : frontier)
                for (size_t i : J) {
                    WeylElt u = mult_gen(w, i);
                    if (seen.size() > kEnumerationGuard)
                        throw std::length_error("subgroup_elements: order exceeds guard");
                    if (seen.emplace(u.word_, u).second) next.push_back(u);
                }
            frontier = std::move(next);
        }
        std::vector<WeylElt> out;
        out.reserve(seen.size());
        for (auto& [k, v] : seen) out.push_back(std::move(v));
        std::sort(out.begin(), out.end());
        return out;
    }

    // The unique minimal-length element of the right coset <J> w.
    WeylElt min_coset_rep(const std::vector<size_t>& J, WeylElt w) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i : J)
                if (has_left_descent(w, i)) {
                    w = mult(simple(i), w);
                    changed = true;
                    break;
                }
        }
        return w;
    }

    ParabolicData coset_min_reps(const std::vector<size_t>& J) const {
        ParabolicData pd;
        pd.generators = J;
        pd.subgroup_order = subgroup_elements(J).size();
        std::map<Word, WeylElt> reps;
        for (const auto& w : enumerate()) {
            WeylElt r = min_coset_rep(J, w);
            reps.emplace(r.word_, r);
        }
        for (auto& [k, v] : reps) pd.min_reps.push_back(std::move(v));
        std::sort(pd.min_reps.begin(), pd.min_reps.end());
        if (pd.min_reps.size() * pd.subgroup_order != order())
            throw std::logic_error("coset decomposition failed a size check");
        return pd;
    }

    // R(v) for a reduced word: {a_{i1}, s_{i1} a_{i2}, ...}
    std::vector<RootVec> reflection_subset(std::span<const std::uint8_t> word) const {
        if (!is_reduced(word)) throw std::invalid_argument("reflection_subset: word is not reduced");
        std::vector<RootVec> out;
        WeylElt prefix = id_;
        for (size_t k = 0; k < word.size(); ++k) {
            RootVec alpha(n_, 0);
            alpha[word[k]] = 1;
            out.push_back(root_image(prefix, alpha));
            prefix = mult_gen(prefix, word[k]);
        }
        return out;
    }

    // Reduced word for the reflection s_beta, beta a positive root.
    WeylElt reflection(const RootVec& beta) const {
        long height = 0;
        for (long c : beta) height += c;
        if (height == 1) {
            for (size_t i = 0; i < n_; ++i)
                if (beta[i] == 1) return simple(i);
        }
        for (size_t i = 0; i < n_; ++i) {
            if (datum_.pair_with_simple_coroot(beta, i) > 0 && !(beta == unit_root(i))) {
                RootVec b2 = datum_.reflect_root(i, beta);
                if (CartanDatum::root_positive(b2)) {
                    WeylElt inner = reflection(b2);
                    return mult(mult(simple(i), inner), simple(i));
                }
            }
        }
        throw std::invalid_argument("reflection: not a positive root");
    }

private:
    RootVec unit_root(size_t i) const {
        RootVec r(n_, 0);
        r[i] = 1;
        return r;
    }
    void check_gen(size_t i) const {
        if (i >= n_) throw std::out_of_range("generator index out of range");
    }

    Word canonical_word(IntMat rt, IntMat rt_inv) const {
        Word out;
        auto is_id = [&](const IntMat& m) { return m == id_.mat_rt_; };
        while (!is_id(rt)) {
            size_t pick = n_;
            for (size_t i = 0; i < n_ && pick == n_; ++i) {
                // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0: column i of rt_inv
                for (size_t j = 0; j < n_; ++j) {
                    long c = rt_inv[j * n_ + i];
                    if (c != 0) {
                        if (c < 0) pick = i;
                        break;
                    }
                }
            }
            if (pick == n_) throw std::logic_error("canonical_word: no left descent found");
            out.push_back(static_cast<std::uint8_t>(pick));
            rt = matop::mul(gen_rt_[pick], rt, n_);
            rt_inv = matop::mul(rt_inv, gen_rt_[pick], n_);
            if (out.size() > 10000) throw std::logic_error("canonical_word: runaway");
        }
        return out;
    }

    CartanDatum datum_;
    size_t n_;
    std::vector<IntMat> gen_pt_, gen_rt_;
    WeylElt id_;
    mutable std::mutex mu_;
    mutable std::vector<WeylElt> elements_;
    mutable std::map<Word, size_t> index_;
};

}  // namespace coxalc
