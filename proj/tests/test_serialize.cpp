#include <catch2/catch_amalgamated.hpp>

#include "coxalc/serialize.hpp"

#include <random>

using namespace coxalc;

TEST_CASE("serialization round trips") {
    WeylGroup W(cartan_datum("B2"));
    AlcoveGeometry G(W);
    HeckeAlgebra H(W);
    PeriodicModule M(G, H);
    std::mt19937_64 rng(99);
    const auto& all = W.enumerate();

    for (int t = 0; t < 25; ++t) {
        // a random certified periodic vector, built from module operations
        PeriodicVec v = M.theta(rng() % 2, M.basis_index(all[rng() % all.size()], 10));
        PeriodicVec v2 = periodic_from_json(G, to_json(G, v));
        CHECK(v2.terms == v.terms);
        CHECK(v2.floor == v.floor);

        HeckeElt h = H.c_basis(all[rng() % all.size()]);
        CHECK(H.equal(hecke_from_json(W, to_json(W, h)), h));

        SimpleKL s{all[rng() % all.size()],
                   W.min_coset_rep(W.right_ascents(all[rng() % all.size()]), all[rng() % all.size()])};
        // note: z here may not be minimal for w; classify first
        CategoryO C(W);
        SimpleKL sc = C.classify(s.z, s.w);
        CHECK(simple_from_json(W, to_json(sc)) == sc);
    }

    // ordering invariants of the wire format
    Laurent p = Laurent::v_pow(3) - Laurent::v_pow(-2);
    json jp = to_json(p);
    CHECK(jp[0][0].get<long>() < jp[1][0].get<long>());
    CHECK(laurent_from_json(jp) == p);

    // Cartan by label and by matrix
    CHECK(cartan_from_json(json("G2")).label == "G2");
    auto d = cartan_from_json(to_json(cartan_from_matrix({{2, -1}, {-1, 2}})));
    CHECK(d.positive_roots.size() == 3);
}

TEST_CASE("box function wire format is (a, b)-sorted") {
    WeylGroup W(cartan_datum("A1"));
    AlcoveGeometry G(W);
    HeckeAlgebra H(W);
    PeriodicModule M(G, H);
    PadicSchwartz S(G, M);
    BoxFunction f = S.orbit_indicator(2) + S.orbit_indicator(-3);
    json j = to_json(f);
    for (size_t i = 0; i + 1 < j.size(); ++i) {
        auto a = std::make_pair(j[i][0].get<long>(), j[i][1].get<long>());
        auto b = std::make_pair(j[i + 1][0].get<long>(), j[i + 1][1].get<long>());
        CHECK(a < b);
    }
    CHECK(box_from_json(j) == f);
}
