#include "doctest.h"

#include "concord/alexander.hpp"
#include "concord/laurent.hpp"

using namespace concord;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, long long>> pairs) {
    return LaurentPoly::from_pairs(std::vector<std::pair<int, long long>>(pairs));
}

} // namespace

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly a = lp({{1, 1}, {0, -1}, {-1, 1}});
    CHECK(a.coeff(1) == 1);
    CHECK(a.coeff(0) == -1);
    CHECK(a.coeff(2) == 0);
    CHECK(a.min_exp() == -1);
    CHECK(a.max_exp() == 1);
    CHECK(a.eval_at_one() == 1);
    CHECK(a.is_symmetric());

    LaurentPoly b = a + a;
    CHECK(b.coeff(0) == -2);
    CHECK((a - a).is_zero());

    LaurentPoly sq = a * a;
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(1) == -2);
    CHECK(sq.coeff(0) == 3);
    CHECK(sq.eval_at_one() == 1);

    CHECK(LaurentPoly::divide_exact(sq, a) == a);
    CHECK_THROWS_AS(LaurentPoly::divide_exact(lp({{1, 1}, {0, 1}}), lp({{1, 2}})),
                    check_error);
}

TEST_CASE("laurent shifts and normal forms") {
    LaurentPoly a = lp({{3, 1}, {1, -1}});
    CHECK(a.shifted(-1).max_exp() == 2);
    CHECK(a.inflated(2).max_exp() == 6);
    CHECK(a.inflated(2).coeff(2) == -1);

    LaurentPoly c = lp({{4, 1}, {2, -1}, {0, 1}});
    LaurentPoly r = c.recentered();
    CHECK(r.max_exp() == 2);
    CHECK(r.min_exp() == -2);
    CHECK(r.is_symmetric());

    CHECK(lp({{0, -3}}).normalized_sign().coeff(0) == 3);
}

TEST_CASE("torus Alexander polynomials") {
    LaurentPoly t23 = torus_alexander(2, 3);
    CHECK(t23 == lp({{1, 1}, {0, -1}, {-1, 1}}));

    LaurentPoly t34 = torus_alexander(3, 4);
    CHECK(t34 == lp({{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}}));

    LaurentPoly t25 = torus_alexander(2, 5);
    CHECK(t25.max_exp() == 2);
    CHECK(t25.terms() == 5);

    for (auto [p, q] : {std::pair{2, 7}, {3, 5}, {4, 5}, {5, 6}}) {
        LaurentPoly d = torus_alexander(p, q);
        CHECK(d.eval_at_one() == 1);
        CHECK(d.is_symmetric());
        CHECK(d.max_exp() == (p - 1) * (q - 1) / 2);
    }

    CHECK_THROWS_AS(torus_alexander(2, 4), input_error);
    CHECK_THROWS_AS(torus_alexander(1, 5), input_error);
}

TEST_CASE("cable Alexander polynomials") {
    LaurentPoly base = torus_alexander(2, 3);
    LaurentPoly c = cable_alexander(base, 2, 13);
    CHECK(c.max_exp() == 8);
    CHECK(c.eval_at_one() == 1);
    CHECK(c.is_symmetric());

    // q = 1: pure inflation, no torus factor
    LaurentPoly infl = cable_alexander(base, 2, 1);
    CHECK(infl == base.inflated(2));
}

TEST_CASE("L-space form recognition") {
    auto f = is_lspace_form(torus_alexander(2, 3));
    REQUIRE(f.has_value());
    CHECK(f->exponents == std::vector<int>{-1, 0, 1});
    CHECK(f->genus == 1);
    CHECK(f->m == 1);

    auto g = is_lspace_form(torus_alexander(3, 4));
    REQUIRE(g.has_value());
    CHECK(g->exponents == std::vector<int>{-3, -2, 0, 2, 3});
    CHECK(g->genus == 3);
    CHECK(g->m == 1);

    auto u = is_lspace_form(LaurentPoly::one());
    REQUIRE(u.has_value());
    CHECK(u->genus == 0);
    CHECK(u->m == 0);

    std::string reason;
    CHECK(!is_lspace_form(lp({{2, 1}, {1, -2}, {0, 3}, {-1, -2}, {-2, 1}}), &reason));
    CHECK(!reason.empty());
    CHECK(!is_lspace_form(lp({{2, 1}, {0, -1}, {-1, 1}})));     // asymmetric
    CHECK(!is_lspace_form(lp({{1, 1}, {0, 1}, {-1, 1}})));      // not alternating
    CHECK(!is_lspace_form(lp({{2, 1}, {1, -1}, {0, 1}, {-1, -1}}))); // even term count
}

TEST_CASE("Alexander over the expression DSL") {
    KnotPtr k = parse_knot("C(2,13;T(2,3))");
    LaurentPoly d = alexander_of(k);
    auto f = is_lspace_form(d);
    REQUIRE(f.has_value());
    CHECK(f->genus == 8);
    CHECK(f->m == 1);

    CHECK(alexander_of(parse_knot("-T(2,5)")) == alexander_of(parse_knot("T(2,5)")));
    CHECK(alexander_of(parse_knot("T(2,5)r")) == alexander_of(parse_knot("T(2,5)")));
    CHECK(alexander_of(parse_knot("U")) == LaurentPoly::one());

    LaurentPoly prod = alexander_of(parse_knot("T(2,3) # T(2,5)"));
    CHECK(prod == (torus_alexander(2, 3) * torus_alexander(2, 5)).recentered());
    CHECK(!is_lspace_form(alexander_of(parse_knot("T(2,3) # T(2,3)"))));
}
