#pragma once

// Crystallographic Cartan data.  Points of the reflection representation are
// kept in the fundamental-coweight basis, so <alpha_i, x> is simply the i-th
// coordinate of x; roots are kept as integer coefficient vectors over the
// simple roots.  pair_rc[i][j] = <alpha_i, alpha_j^vee>.

#include "numeric.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace coxalc {

using RootVec = std::vector<long>;  // coefficients over the simple roots

struct CartanDatum {
    std::string label;
    size_t rank = 0;
    std::vector<std::vector<long>> pair_rc;  // <alpha_i, alpha_j^vee>
    std::vector<RootVec> positive_roots;     // sorted by height, then lex
    size_t highest_root = 0;                 // index into positive_roots
    std::vector<size_t> simple_pos;          // position of alpha_i in positive_roots
    std::vector<long> marks;                 // coefficients of the highest root

    // <beta, alpha_j^vee> for a root given by coefficients.
    long pair_with_simple_coroot(const RootVec& beta, size_t j) const {
        long s = 0;
        for (size_t i = 0; i < rank; ++i) s += beta[i] * pair_rc[i][j];
        return s;
    }

    // s_j acting on a root coefficient vector.
    RootVec reflect_root(size_t j, RootVec beta) const {
        beta[j] -= pair_with_simple_coroot(beta, j);
        return beta;
    }

    static bool root_positive(const RootVec& b) {
        for (long c : b)
            if (c != 0) return c > 0;
        return false;  // zero vector: caller beware
    }

    // Coordinates of alpha_j^vee in the coweight basis: column j of pair_rc.
    std::vector<long> simple_coroot_coords(size_t j) const {
        std::vector<long> v(rank);
        for (size_t i = 0; i < rank; ++i) v[i] = pair_rc[i][j];
        return v;
    }
};

namespace detail {

inline void generate_roots(CartanDatum& d) {
    std::set<RootVec> all;
    std::vector<RootVec> frontier;
    for (size_t i = 0; i < d.rank; ++i) {
        RootVec e(d.rank, 0);
        e[i] = 1;
        all.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& b : frontier)
            for (size_t j = 0; j < d.rank; ++j) {
                RootVec r = d.reflect_root(j, b);
                if (all.insert(r).second) next.push_back(r);
            }
        if (all.size() > 400) throw std::invalid_argument("Cartan matrix is not of finite type");
        frontier = std::move(next);
    }
    for (const auto& b : all)
        if (CartanDatum::root_positive(b)) d.positive_roots.push_back(b);
    std::sort(d.positive_roots.begin(), d.positive_roots.end(),
              [](const RootVec& a, const RootVec& b) {
                  long ha = 0, hb = 0;
                  for (long c : a) ha += c;
                  for (long c : b) hb += c;
                  if (ha != hb) return ha < hb;
                  return a < b;
              });
    // Highest root: the maximal element in the dominance order; for an
    // irreducible system it is the last entry after the height sort.
    d.highest_root = d.positive_roots.size() - 1;
    d.marks = d.positive_roots[d.highest_root];
    d.simple_pos.assign(d.rank, 0);
    for (size_t i = 0; i < d.rank; ++i) {
        RootVec e(d.rank, 0);
        e[i] = 1;
        for (size_t r = 0; r < d.positive_roots.size(); ++r)
            if (d.positive_roots[r] == e) d.simple_pos[i] = r;
    }
    for (const auto& b : d.positive_roots) {
        for (size_t i = 0; i < d.rank; ++i)
            if (b[i] > d.marks[i])
                throw std::invalid_argument("root system is reducible; alcove geometry needs an irreducible type");
    }
}

inline void validate_matrix(const std::vector<std::vector<long>>& m) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
        if (m[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) throw std::invalid_argument("Cartan matrix off-diagonal must be <= 0");
            if ((m[i][j] == 0) != (m[j][i] == 0))
                throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
            long p = m[i][j] * m[j][i];
            if (p > 3) throw std::invalid_argument("Cartan matrix is not crystallographic of finite type");
        }
    }
}

}  // namespace detail

inline CartanDatum cartan_from_matrix(std::vector<std::vector<long>> m, std::string label = "custom") {
    detail::validate_matrix(m);
    CartanDatum d;
    d.label = std::move(label);
    d.rank = m.size();
    d.pair_rc = std::move(m);
    detail::generate_roots(d);
    return d;
}

// Named types.  A1..A6 are the simply-laced chains; B2 has alpha_1 long,
// C2 is its transpose, G2 has alpha_1 short.
inline CartanDatum cartan_datum(const std::string& label) {
    auto chain = [](size_t n) {
        std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
        for (size_t i = 0; i < n; ++i) {
            m[i][i] = 2;
            if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
        }
        return m;
    };
    if (label.size() == 2 && label[0] == 'A' && label[1] >= '1' && label[1] <= '6')
        return cartan_from_matrix(chain(static_cast<size_t>(label[1] - '0')), label);
    if (label == "B2") return cartan_from_matrix({{2, -2}, {-1, 2}}, label);
    if (label == "C2") return cartan_from_matrix({{2, -1}, {-2, 2}}, label);
    if (label == "G2") return cartan_from_matrix({{2, -1}, {-3, 2}}, label);
    throw std::invalid_argument("unknown Cartan type label: " + label);
}

}  // namespace coxalc
