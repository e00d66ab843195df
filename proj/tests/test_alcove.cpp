#include <catch2/catch_amalgamated.hpp>

#include "coxalc/alcove.hpp"

#include <random>

using namespace coxalc;

namespace {

// A_n in type A1: the interval (n, n+1) in the coroot line.
AffineElt a1_alcove(const AlcoveGeometry& G, long n) {
    if (n % 2 == 0) return G.translation({n});
    AffineElt x{G.group().simple(0), {n + 1}};
    return x;
}

std::vector<Word> all_reduced_words(const WeylGroup& W, const WeylElt& w) {
    if (w.is_identity()) return {Word{}};
    std::vector<Word> out;
    for (size_t i : W.right_descents(w)) {
        for (Word u : all_reduced_words(W, W.mult_gen(w, i))) {
            u.push_back(static_cast<std::uint8_t>(i));
            out.push_back(std::move(u));
        }
    }
    return out;
}

AffineElt random_alcove(const AlcoveGeometry& G, std::mt19937_64& rng, long spread) {
    const auto& all = G.group().enumerate();
    AffineElt x{all[rng() % all.size()], std::vector<long>(G.rank())};
    for (auto& c : x.t) c = static_cast<long>(rng() % (2 * spread + 1)) - spread;
    return x;
}

}  // namespace

TEST_CASE("A1 alcove dictionary sanity") {
    WeylGroup W(cartan_datum("A1"));
    AlcoveGeometry G(W);
    for (long n = -6; n <= 6; ++n) {
        auto b = G.bands(a1_alcove(G, n));
        REQUIRE(b.size() == 1);
        CHECK(b[0] == n);
    }
    // A_e = A_0, A_{s1} = A_{-1}
    CHECK(G.alcove_of_index(W.identity()) == a1_alcove(G, 0));
    CHECK(G.alcove_of_index(W.simple(0)) == a1_alcove(G, -1));
    // A_1 has index s_0
    CHECK(G.index_of(a1_alcove(G, 1)) == G.affine_generator(0));
}

TEST_CASE("cross examples") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    CHECK(G1.cross(a1_alcove(G1, 0), 1) == a1_alcove(G1, -1));
    CHECK(G1.cross(a1_alcove(G1, 1), 1) == a1_alcove(G1, 2));
    CHECK(G1.cross(G1.cross(a1_alcove(G1, 3), 0), 0) == a1_alcove(G1, 3));

    WeylGroup W2(cartan_datum("A2"));
    AlcoveGeometry G2(W2);
    AffineElt ae = G2.identity();
    AffineElt c = G2.cross(ae, 0);
    // neighbor through the highest-root wall at level 1: bands flip only there
    auto kb = G2.bands(c);
    CHECK(kb[W2.datum().highest_root] == 1);
    long shared = 0;
    auto ka = G2.bands(ae);
    for (size_t r = 0; r < ka.size(); ++r) shared += std::abs(ka[r] - kb[r]);
    CHECK(shared == 1);
    CHECK(G2.cross(c, 0) == ae);
}

TEST_CASE("right_reflect examples") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    CHECK(G1.right_reflect(a1_alcove(G1, 5), 0) == a1_alcove(G1, -6));
    CHECK(G1.right_reflect(a1_alcove(G1, 0), 0) == a1_alcove(G1, -1));

    WeylGroup W2(cartan_datum("A2"));
    AlcoveGeometry G2(W2);
    CHECK(G2.right_reflect(G2.identity(), 0) == G2.alcove_of_index(W2.simple(0)));
}

TEST_CASE("distance") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    CHECK(G1.distance(a1_alcove(G1, 0), a1_alcove(G1, 3)) == 3);
    CHECK(G1.distance(a1_alcove(G1, 2), a1_alcove(G1, 2)) == 0);

    for (const char* label : {"A2", "B2"}) {
        WeylGroup W(cartan_datum(label));
        AlcoveGeometry G(W);
        for (const auto& w : W.enumerate())
            CHECK(G.distance(G.identity(), G.alcove_of_index(w)) == -static_cast<long>(w.length()));
        // additivity and antisymmetry on random triples
        std::mt19937_64 rng(99);
        for (int t = 0; t < 40; ++t) {
            AffineElt a = random_alcove(G, rng, 3), b = random_alcove(G, rng, 3), c = random_alcove(G, rng, 3);
            CHECK(G.distance(a, b) + G.distance(b, c) == G.distance(a, c));
            CHECK(G.distance(a, b) == -G.distance(b, a));
        }
    }
}

TEST_CASE("lset") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    CHECK(G1.lset(a1_alcove(G1, 0)) == std::vector<size_t>{1});
    CHECK(G1.lset(a1_alcove(G1, 1)) == std::vector<size_t>{0});

    WeylGroup W2(cartan_datum("A2"));
    AlcoveGeometry G2(W2);
    CHECK(G2.lset(G2.identity()) == std::vector<size_t>{1, 2});

    // the two sides of a wall: s in lset(A) xor s in lset(sA)
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        AffineElt a = random_alcove(G2, rng, 3);
        for (size_t s = 0; s < G2.num_affine_generators(); ++s) {
            auto la = G2.lset(a);
            auto lb = G2.lset(G2.cross(a, s));
            bool ina = std::count(la.begin(), la.end(), s) > 0;
            bool inb = std::count(lb.begin(), lb.end(), s) > 0;
            CHECK(ina != inb);
        }
    }
}

TEST_CASE("box coweight") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    for (long n = -5; n <= 5; ++n) CHECK(G1.box_coweight(a1_alcove(G1, n)) == std::vector<long>{n});

    WeylGroup W2(cartan_datum("A2"));
    AlcoveGeometry G2(W2);
    CHECK(G2.box_coweight(G2.identity()) == std::vector<long>({0, 0}));
    CHECK(G2.box_coweight(G2.alcove_of_index(W2.simple(0))) == std::vector<long>({-1, 0}));
    // translation equivariance over the coroot lattice
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        AffineElt a = random_alcove(G2, rng, 3);
        std::vector<long> mu = {static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2};
        auto mu_cw = G2.coweight_of_coroot(mu);
        AffineElt b = a;
        for (size_t i = 0; i < 2; ++i) b.t[i] += mu_cw[i];
        auto ga = G2.box_coweight(a), gb = G2.box_coweight(b);
        for (size_t i = 0; i < 2; ++i) CHECK(gb[i] == ga[i] + mu_cw[i]);
    }
}

TEST_CASE("star action: rank-1 closed form and A2 data points") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    for (long n = -8; n <= 8; ++n)
        CHECK(G1.star(W1.simple(0), a1_alcove(G1, n)) == a1_alcove(G1, -n));

    WeylGroup W2(cartan_datum("A2"));
    AlcoveGeometry G2(W2);
    AffineElt as1 = G2.alcove_of_index(W2.simple(0));
    CHECK(G2.star(W2.simple(1), as1) == as1);
    AffineElt moved = G2.star(W2.simple(0), as1);
    AffineElt expect = as1;
    auto a1vee = G2.coroot_of(G2.simple_root(0));
    for (size_t i = 0; i < 2; ++i) expect.t[i] += a1vee[i];
    CHECK(moved == expect);
}

TEST_CASE("star is a W-action and the stabilizer of A_w is P(w)") {
    for (const char* label : {"A2", "B2", "G2"}) {
        WeylGroup W(cartan_datum(label));
        AlcoveGeometry G(W);
        std::mt19937_64 rng(31337);
        const auto& all = W.enumerate();
        for (int t = 0; t < 200; ++t) {
            AffineElt a = random_alcove(G, rng, 4);
            const WeylElt& z1 = all[rng() % all.size()];
            const WeylElt& z2 = all[rng() % all.size()];
            CHECK(G.star(z1, G.star(z2, a)) == G.star(W.mult(z1, z2), a));
        }
        for (const auto& w : W.enumerate()) {
            AffineElt aw = G.alcove_of_index(w);
            std::set<Word> stab;
            for (const auto& z : all)
                if (G.star(z, aw) == aw) stab.insert(z.word());
            std::set<Word> pw;
            for (const auto& u : W.subgroup_elements(W.right_ascents(w))) pw.insert(u.word());
            CHECK(stab == pw);
        }
    }
}

TEST_CASE("epsilon") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    // epsilon_z(e) = e
    CHECK(G1.epsilon(W1.simple(0), G1.from_weyl(W1.identity())) == G1.from_weyl(W1.identity()));
    // epsilon_{s1}(s0) = s1
    CHECK(G1.epsilon(W1.simple(0), G1.affine_generator(0)) == G1.from_weyl(W1.simple(0)));

    WeylGroup W2(cartan_datum("B2"));
    AlcoveGeometry G2(W2);
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 100; ++t) {
        AffineElt idx = random_alcove(G2, rng, 3);
        CHECK(G2.epsilon(W2.simple(0), G2.epsilon(W2.simple(0), idx)) == idx);
        const auto& all = W2.enumerate();
        const WeylElt& z1 = all[rng() % all.size()];
        const WeylElt& z2 = all[rng() % all.size()];
        CHECK(G2.epsilon(z1, G2.epsilon(z2, idx)) == G2.epsilon(W2.mult(z1, z2), idx));
    }
}

TEST_CASE("theta chains") {
    WeylGroup W1(cartan_datum("A1"));
    AlcoveGeometry G1(W1);
    auto chain = G1.theta_chain(a1_alcove(G1, 0), 0, 5);
    REQUIRE(chain.size() == 6);
    for (long k = 0; k < 6; ++k) CHECK(chain[static_cast<size_t>(k)] == a1_alcove(G1, k - 1));

    WeylGroup W2(cartan_datum("A2"));
    AlcoveGeometry G2(W2);
    auto c2 = G2.theta_chain(G2.identity(), 0, 4);
    CHECK(c2[0] == G2.alcove_of_index(W2.simple(0)));
    CHECK(c2[1] == G2.identity());
    CHECK_FALSE(G2.in_xi_fin(c2[2]));

    WeylGroup WB(cartan_datum("B2"));
    AlcoveGeometry GB(WB);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 25; ++t) {
        AffineElt a = random_alcove(GB, rng, 3);
        for (size_t i = 0; i < 2; ++i) {
            auto ch = GB.theta_chain(a, i, 6);
            size_t pos = WB.datum().simple_pos[i];
            for (size_t k = 0; k + 1 < ch.size(); ++k) {
                CHECK(GB.distance_alpha(ch[k], ch[k + 1], pos) == 1);
                CHECK(GB.bands(ch[k + 1])[pos] == GB.bands(ch[0])[pos] + static_cast<long>(k) + 1);
            }
        }
    }
}

TEST_CASE("xi_fin and xi_plus") {
    for (const char* label : {"A2", "B2"}) {
        WeylGroup W(cartan_datum(label));
        AlcoveGeometry G(W);
        // Xi_fin = the |W| alcoves A_w
        size_t count = 0;
        for (const auto& x : G.window(6))
            if (G.in_xi_fin(x)) ++count;
        CHECK(count == W.order());
        for (const auto& w : W.enumerate()) CHECK(G.in_xi_fin(G.alcove_of_index(w)));

        // empty R: always false
        std::mt19937_64 rng(1);
        for (int t = 0; t < 20; ++t) CHECK_FALSE(G.xi_plus(random_alcove(G, rng, 3), {}));

        // Xi+(R(v)) does not depend on the reduced word (exhaustive in rank 2)
        for (const auto& v : W.enumerate()) {
            auto words = all_reduced_words(W, v);
            if (words.size() < 2) continue;
            auto r0 = W.reflection_subset(words[0]);
            for (size_t k = 1; k < words.size(); ++k) {
                auto rk = W.reflection_subset(words[k]);
                for (int t = 0; t < 40; ++t) {
                    AffineElt a = random_alcove(G, rng, 4);
                    CHECK(G.xi_plus(a, r0) == G.xi_plus(a, rk));
                }
            }
        }

        // chain elements beyond index 1 starting in Xi_fin lie in Xi+({alpha})
        for (const auto& w : W.enumerate())
            for (size_t i = 0; i < W.rank(); ++i) {
                auto ch = G.theta_chain(G.alcove_of_index(w), i, 5);
                for (size_t k = 2; k < ch.size(); ++k)
                    if (!G.in_xi_fin(ch[k]))
                        CHECK(G.xi_plus(ch[k], {G.simple_root(i)}));
            }
    }
}

TEST_CASE("W' orbit and W_<= in A1") {
    WeylGroup W(cartan_datum("A1"));
    AlcoveGeometry G(W);
    const auto& orbit = G.w_prime_orbit();
    CHECK(orbit.size() == 3);  // indices of A_{-1}, A_0, A_1
    CHECK(orbit.count(G.from_weyl(W.identity())) == 1);
    CHECK(orbit.count(G.from_weyl(W.simple(0))) == 1);
    CHECK(orbit.count(G.affine_generator(0)) == 1);
    for (const auto& idx : orbit) CHECK(G.in_w_leq(idx));
    // the involution i fixes W and flips translations
    AffineElt s0 = G.affine_generator(0);
    AffineElt i_s0 = G.semiinf_involution(s0);
    CHECK(G.semiinf_involution(i_s0) == s0);
    CHECK(i_s0.w == s0.w);
    CHECK(i_s0.t[0] == -s0.t[0]);
}

TEST_CASE("W' inside W_<= in B2") {
    WeylGroup W(cartan_datum("B2"));
    AlcoveGeometry G(W);
    for (const auto& idx : G.w_prime_orbit()) CHECK(G.in_w_leq(idx));
}

TEST_CASE("affine composition law and extension flag") {
    WeylGroup W(cartan_datum("A2"));
    AlcoveGeometry G(W);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        AffineElt a = random_alcove(G, rng, 3), b = random_alcove(G, rng, 3);
        AffineElt ab = G.compose(a, b);
        CHECK(ab.w == W.mult(a.w, b.w));
        auto wb = matop::apply(a.w.point_matrix(), b.t, 2);
        for (size_t i = 0; i < 2; ++i) CHECK(ab.t[i] == wb[i] + a.t[i]);
        CHECK(G.compose(a, G.inverse(a)) == G.identity());
    }
    // omega_1^vee is a coweight but not a coroot in A2
    CHECK(G.is_extended(G.translation({1, 0})));
    CHECK_FALSE(G.is_extended(G.translation(G.coweight_of_coroot({1, 0}))));
}
