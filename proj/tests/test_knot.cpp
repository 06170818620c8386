#include "doctest.h"

#include "concord/knot.hpp"

using namespace concord;

TEST_CASE("parse and render round-trip") {
    for (const char* text : {
             "U",
             "T(2,3)",
             "T(3,4)",
             "C(2,13; T(2,3))",
             "-T(2,5)",
             "T(2,3) # -T(2,3)",
             "C(2,7; T(2,3)) # -T(2,7)",
         }) {
        KnotPtr e = normalize(parse_knot(text));
        CHECK(render(e) == text);
        CHECK(equal(normalize(parse_knot(render(e))), e));
    }
}

TEST_CASE("minus parses as mirror of reverse") {
    KnotPtr e = parse_knot("-T(2,3)");
    REQUIRE(e->kind == KnotExpr::Mirror);
    REQUIRE(e->child->kind == KnotExpr::Reverse);
    CHECK(e->child->child->kind == KnotExpr::Torus);

    // torus knots absorb the reverse, the mirror stays
    KnotPtr n = normalize(e);
    CHECK(n->kind == KnotExpr::Mirror);
    CHECK(n->child->kind == KnotExpr::Torus);
}

TEST_CASE("normalization rules") {
    CHECK(render(normalize(parse_knot("--T(2,3)"))) == "T(2,3)");
    CHECK(render(normalize(parse_knot("T(2,3)r"))) == "T(2,3)");
    CHECK(render(normalize(parse_knot("C(2,5; T(2,3))r"))) == "C(2,5; T(2,3))");
    CHECK(render(normalize(parse_knot("C(2,1; U)"))) == "U");
    CHECK(render(normalize(parse_knot("C(2,13; U)"))) == "T(2,13)");
    CHECK(render(normalize(parse_knot("C(13,2; U)"))) == "T(2,13)");
    CHECK(render(normalize(parse_knot("T(5,2)"))) == "T(2,5)");
    CHECK(render(normalize(parse_knot("U # T(2,3) # U"))) == "T(2,3)");
    CHECK(render(normalize(parse_knot("T(2,3) # (T(2,5) # T(2,7))"))) ==
          "T(2,3) # T(2,5) # T(2,7)");
    CHECK(normalize(parse_knot("U # U"))->kind == KnotExpr::Unknot);

    // mirror distributes over sums and cancels pairwise
    CHECK(render(normalize(parse_knot("-(T(2,3) # -T(2,5))"))) == "-T(2,3) # T(2,5)");

    // no cancellation of K # -K
    KnotPtr s = normalize(parse_knot("T(2,3) # -T(2,3)"));
    REQUIRE(s->kind == KnotExpr::Sum);
    CHECK(s->kids.size() == 2);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_knot("T(2,4)"), input_error);   // not coprime
    CHECK_THROWS_AS(parse_knot("T(1,5)"), input_error);   // p < 2
    CHECK_THROWS_AS(parse_knot("T(2,1)"), input_error);
    CHECK_THROWS_AS(parse_knot("C(1,3; U)"), input_error);
    CHECK_THROWS_AS(parse_knot("C(2,0; U)"), input_error);
    CHECK_THROWS_AS(parse_knot("T(2,3) #"), input_error);
    CHECK_THROWS_AS(parse_knot("T(2,3) T(2,5)"), input_error);
    CHECK_THROWS_AS(parse_knot("T(2,3))"), input_error);
    CHECK_THROWS_AS(parse_knot("X"), input_error);
    CHECK_THROWS_AS(parse_knot(""), input_error);
    CHECK_THROWS_AS(parse_knot("T(2,3000000)"), input_error);

    try {
        parse_knot("T(2,3) % U");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    }
}

TEST_CASE("iterated torus recognition") {
    CHECK(is_iterated_torus(parse_knot("T(2,3)")));
    CHECK(is_iterated_torus(parse_knot("C(2,13; C(2,5; T(2,3)))")));
    CHECK(is_iterated_torus(parse_knot("C(2,13; U)"))); // collapses to T(2,13)
    CHECK(!is_iterated_torus(parse_knot("U")));
    CHECK(!is_iterated_torus(parse_knot("-T(2,3)")));
    CHECK(!is_iterated_torus(parse_knot("T(2,3) # T(2,5)")));
}

TEST_CASE("algebraic-knot witness") {
    AlgebraicKnotWitness w = is_algebraic(parse_knot("C(2,13; T(2,3))"));
    REQUIRE(w.indices.size() == 2);
    CHECK(w.indices[0] == std::pair{2, 3});
    CHECK(w.indices[1] == std::pair{2, 13});
    CHECK(w.flags == std::vector<bool>{true, true}); // 13 > 2*3*2
    CHECK(w.valid);

    AlgebraicKnotWitness bad = is_algebraic(parse_knot("C(2,11; T(2,3))"));
    CHECK(bad.flags == std::vector<bool>{true, false}); // 11 < 12
    CHECK(!bad.valid);

    AlgebraicKnotWitness plain = is_algebraic(parse_knot("T(3,4)"));
    CHECK(plain.indices.size() == 1);
    CHECK(plain.valid);

    CHECK_THROWS_AS(is_algebraic(parse_knot("U")), input_error);
    CHECK_THROWS_AS(is_algebraic(parse_knot("-T(2,3)")), input_error);
    CHECK_THROWS_AS(is_algebraic(parse_knot("T(2,3) # T(2,5)")), input_error);
}
