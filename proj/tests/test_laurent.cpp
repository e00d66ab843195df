#include <catch2/catch_amalgamated.hpp>

#include "coxalc/laurent.hpp"

using namespace coxalc;

static Laurent V(long e) { return Laurent::v_pow(e); }

TEST_CASE("laurent basic arithmetic") {
    Laurent a = V(1) - V(-1);
    Laurent b = V(1) + V(-1);
    CHECK(a * b == V(2) - V(-2));
    CHECK((a + b) == Laurent::monomial(2, 1));
    CHECK(a - a == Laurent(0));
    CHECK(Laurent(0).is_zero());
    CHECK(a.degree() == 1);
    CHECK(a.valuation() == -1);
    CHECK(a.coeff(-1) == -1);
    CHECK(a.coeff(3) == 0);
}

TEST_CASE("bar involution") {
    Laurent a = V(1) - V(-1);
    CHECK(a.bar() == V(-1) - V(1));
    Laurent p = Laurent::monomial(3, 5) + Laurent::monomial(-2, 0) + Laurent::monomial(7, -4);
    CHECK(p.bar().bar() == p);
    CHECK((p * a).bar() == p.bar() * a.bar());
}

TEST_CASE("specialize") {
    CHECK(V(-2).specialize(Rat(2)) == Rat(1, 4));
    Laurent p = V(2) - Laurent(1);
    CHECK(p.specialize(Rat(5, 2)) == Rat(21, 4));
    CHECK_THROWS_AS(p.specialize(Rat(0)), std::invalid_argument);
}

TEST_CASE("truncate_below keeps exponents above -floor") {
    Laurent p = V(2) + V(-3) + V(-8);
    CHECK(p.truncate_below(3) == V(2));
    CHECK(p.truncate_below(4) == V(2) + V(-3));
    CHECK(p.truncate_below(100) == p);
}

TEST_CASE("divide_exact") {
    Laurent a = (V(1) - V(-1)) * (V(3) + Laurent(7));
    CHECK(divide_exact(a, V(1) - V(-1)) == V(3) + Laurent(7));
    CHECK(divide_exact(a, V(3) + Laurent(7)) == V(1) - V(-1));
    CHECK_THROWS(divide_exact(V(2) + Laurent(1), V(1) + Laurent(1)));
}

TEST_CASE("serialization order is exponent-ascending") {
    Laurent p = Laurent::from_terms({{3, Int(2)}, {-1, Int(5)}, {0, Int(0)}});
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms()[0].first == -1);
    CHECK(p.terms()[1].first == 3);
}
