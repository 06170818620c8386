#include "doctest.h"

#include "concord/signatures.hpp"
#include "oracles.hpp"

using namespace concord;

namespace {

std::map<Rat, int> jumps(std::initializer_list<std::pair<Rat, int>> pts) {
    std::map<Rat, int> m;
    for (auto& [t, v] : pts) m[t] = v;
    return m;
}

} // namespace

TEST_CASE("torus knot jump functions") {
    CHECK(torus_jump(2, 3).at == jumps({{Rat(1, 6), -1}, {Rat(5, 6), -1}}));
    CHECK(torus_jump(2, 5).at ==
          jumps({{Rat(1, 10), -1}, {Rat(3, 10), -1}, {Rat(7, 10), -1}, {Rat(9, 10), -1}}));
    CHECK(torus_jump(3, 4).at == jumps({{Rat(1, 12), -1},
                                        {Rat(2, 12), -1},
                                        {Rat(5, 12), -1},
                                        {Rat(7, 12), -1},
                                        {Rat(10, 12), -1},
                                        {Rat(11, 12), -1}}));
    check_symmetric(torus_jump(3, 7));
    check_symmetric(torus_jump(4, 5));
}

TEST_CASE("torus jumps match the Seifert-form computation") {
    for (int k = 3; k <= 19; k += 2) {
        CHECK(torus_jump(2, k).at == oracles::seifert_t2k_jumps(k));
        CHECK(signature_at_minus_one(torus_jump(2, k)) == -(k - 1));
    }
}

TEST_CASE("stored versus one-sided steps") {
    JumpFunction f = torus_jump(2, 3);
    CHECK(stored_at(f, Rat(1, 6)) == -1);
    CHECK(stored_at(f, Rat(5, 6)) == -1);
    CHECK(stored_at(f, Rat(1, 4)) == 0);
    CHECK(rightward_at(f, Rat(1, 6)) == -2);  // left of 1/2: descending through the root
    CHECK(rightward_at(f, Rat(5, 6)) == 2);   // right of 1/2: climbing back
    CHECK(rightward_at(f, Rat(1, 4)) == 0);
}

TEST_CASE("cable jump composition") {
    JumpFunction c = cable_jump(torus_jump(2, 3), 2, 5);
    CHECK(c.at == jumps({{Rat(1, 12), -1},
                         {Rat(1, 10), -1},
                         {Rat(3, 10), -1},
                         {Rat(5, 12), 1},
                         {Rat(7, 12), 1},
                         {Rat(7, 10), -1},
                         {Rat(9, 10), -1},
                         {Rat(11, 12), -1}}));
    check_symmetric(c);

    // trivial companion: cable reduces to the torus knot
    CHECK(cable_jump(JumpFunction{}, 2, 7).at == torus_jump(2, 7).at);

    // q = 1 contributes no torus part: jumps at theta with 2 theta a root
    JumpFunction infl = cable_jump(torus_jump(2, 3), 2, 1);
    CHECK(infl.at == jumps({{Rat(1, 12), -1}, {Rat(5, 12), 1}, {Rat(7, 12), 1}, {Rat(11, 12), -1}}));

    CHECK(signature_at_minus_one(cable_jump(torus_jump(2, 3), 2, 15)) == -14);
}

TEST_CASE("jump functions over the DSL") {
    CHECK(jump_of(parse_knot("T(2,5)")).at == torus_jump(2, 5).at);
    CHECK(jump_of(parse_knot("-T(2,5)")).at == negated(torus_jump(2, 5)).at);
    CHECK(jump_of(parse_knot("T(2,5)r")).at == torus_jump(2, 5).at);
    CHECK(jump_of(parse_knot("C(2,5; T(2,3))")).at == cable_jump(torus_jump(2, 3), 2, 5).at);
    CHECK(jump_of(parse_knot("T(2,3) # -T(2,3)")).at.empty());
    CHECK(jump_of(parse_knot("U")).at.empty());

    // the four-summand family has identically vanishing signature function
    JumpFunction fam =
        jump_of(parse_knot("C(2,5; T(2,3)) # -T(2,5) # -C(2,7; T(2,3)) # T(2,7)"));
    CHECK(fam.at.empty());

    JumpFunction s = added(torus_jump(2, 3), torus_jump(2, 5));
    CHECK(jump_of(parse_knot("T(2,3) # T(2,5)")).at == s.at);
    CHECK(scaled(torus_jump(2, 3), 3).at == jumps({{Rat(1, 6), -3}, {Rat(5, 6), -3}}));
    CHECK(scaled(torus_jump(2, 3), 0).at.empty());
}

TEST_CASE("relation parsing") {
    std::vector<RelTerm> r = parse_relation("2*T(2,5) + 3*K(2,5) - K(2,7)");
    REQUIRE(r.size() == 3);
    CHECK(r[0].mult == 2);  CHECK(!r[0].cable); CHECK(r[0].k == 5);
    CHECK(r[1].mult == 3);  CHECK(r[1].cable);  CHECK(r[1].k == 5);
    CHECK(r[2].mult == -1); CHECK(r[2].cable);  CHECK(r[2].k == 7);

    CHECK(parse_relation("-T(2,5)")[0].mult == -1);
    CHECK(parse_relation("  T(2,11)  ")[0].k == 11);
    CHECK(render_term(RelTerm{-2, true, 7}) == "K(2,7)");
    CHECK(render_term(RelTerm{1, false, 5}) == "T(2,5)");

    CHECK_THROWS_AS(parse_relation("T(3,5)"), input_error);  // first index must be 2
    CHECK_THROWS_AS(parse_relation("T(2,4)"), input_error);  // even k
    CHECK_THROWS_AS(parse_relation("T(2,1)"), input_error);
    CHECK_THROWS_AS(parse_relation("2T(2,5)"), input_error); // missing '*'
    CHECK_THROWS_AS(parse_relation("T(2,5) +"), input_error);
    CHECK_THROWS_AS(parse_relation("T(2,5) junk"), input_error);
    CHECK(parse_relation("").empty()); // vacuous relation is allowed
}

TEST_CASE("independence by signature probes") {
    KnotPtr tre = parse_knot("T(2,3)");

    IndependenceResult direct =
        independence_check(parse_relation("2*T(2,5) + 3*K(2,5)"), tre);
    REQUIRE(direct.probes.size() == 1);
    CHECK(direct.probes[0].theta == Rat(1, 10));
    CHECK(direct.probes[0].total == -5);
    CHECK(!direct.probes[0].forces_opposite);
    CHECK(direct.signature_nonzero);
    CHECK(direct.residual.empty());
    CHECK(direct.independent);

    IndependenceResult res = independence_check(parse_relation("T(2,5) - K(2,5)"), tre);
    CHECK(res.probes[0].total == 0);
    CHECK(res.probes[0].forces_opposite);
    CHECK(!res.signature_nonzero);
    REQUIRE(res.residual.size() == 1);
    CHECK(res.residual[0] == std::pair{5, -1LL});
    REQUIRE(res.verdicts.size() == 1);
    CHECK(res.verdicts[0].obstructed);
    CHECK(res.independent);

    // terms coalesce before probing: 2 - 2 = 0 copies of T drops the term
    IndependenceResult co =
        independence_check(parse_relation("2*T(2,5) - 2*T(2,5) + K(2,5) - T(2,5)"), tre);
    REQUIRE(co.terms.size() == 2);
    CHECK(co.probes[0].n == -1);
    CHECK(co.probes[0].m == 1);
    CHECK(co.probes[0].forces_opposite);
    CHECK(co.independent);

    IndependenceResult empty = independence_check({}, tre);
    CHECK(!empty.independent);
    CHECK(empty.probes.empty());

    // hypothesis requires k above the doubling threshold of the companion
    CHECK_THROWS_AS(independence_check(parse_relation("T(2,3) - K(2,3)"), tre), input_error);
    CHECK_THROWS_AS(independence_check(parse_relation("T(2,9) - K(2,9)"), tre), input_error);
}

TEST_CASE("independence with a cabled companion") {
    KnotPtr comp = parse_knot("C(2,13; T(2,3))");
    IndependenceResult r = independence_check(parse_relation("T(2,5) - K(2,5)"), comp);
    CHECK(r.m_of_companion == 1);
    CHECK(r.probes[0].forces_opposite);
    REQUIRE(r.verdicts.size() == 1);
    CHECK(r.verdicts[0].obstructed);
    CHECK(r.independent);
}
