#include "doctest.h"

#include <numeric>
#include <random>

#include "concord/staircase.hpp"

using namespace concord;

namespace {

StepVector steps_of(const char* text) {
    auto form = is_lspace_form(alexander_of(parse_knot(text)));
    REQUIRE(form.has_value());
    return steps_from_alexander(*form);
}

StepVector random_palindrome(std::mt19937& rng) {
    std::uniform_int_distribution<int> half_len(1, 4), entry(1, 3);
    int h = half_len(rng);
    StepVector s(2 * h);
    for (int i = 0; i < h; ++i) s[i] = s[2 * h - 1 - i] = entry(rng);
    return s;
}

} // namespace

TEST_CASE("step vectors from Alexander exponent gaps") {
    CHECK(steps_of("T(2,3)") == StepVector{1, 1});
    CHECK(steps_of("T(2,7)") == StepVector{1, 1, 1, 1, 1, 1});
    CHECK(steps_of("T(3,4)") == StepVector{1, 2, 2, 1});
    CHECK(steps_of("T(3,5)") == StepVector{1, 2, 1, 1, 2, 1});
    CHECK(steps_of("U").empty());
}

TEST_CASE("lattice realization") {
    LatticeStaircase tre = lattice_points({1, 1});
    REQUIRE(tre.gens.size() == 3);
    CHECK(tre.gens[0].x == 0); CHECK(tre.gens[0].y == 1); CHECK(tre.gens[0].type == 'A');
    CHECK(tre.gens[1].x == 1); CHECK(tre.gens[1].y == 1); CHECK(tre.gens[1].type == 'B');
    CHECK(tre.gens[2].x == 1); CHECK(tre.gens[2].y == 0); CHECK(tre.gens[2].type == 'A');
    CHECK(tre.span() == 1);

    LatticeStaircase t34 = lattice_points({1, 2, 2, 1});
    REQUIRE(t34.gens.size() == 5);
    CHECK(t34.gens[2].x == 1); CHECK(t34.gens[2].y == 1);
    CHECK(t34.gens[4].x == 3); CHECK(t34.gens[4].y == 0);
    CHECK(t34.span() == 3);

    LatticeStaircase u = lattice_points({});
    REQUIRE(u.gens.size() == 1);
    CHECK(u.gens[0].x == 0); CHECK(u.gens[0].y == 0); CHECK(u.gens[0].type == 'A');
    CHECK(u.span() == 0);
}

TEST_CASE("step vector validation") {
    CHECK_THROWS_AS(validate_steps({1, 1, 1}), input_error);   // odd length
    CHECK_THROWS_AS(validate_steps({1, 2}), input_error);      // not palindromic
    CHECK_THROWS_AS(validate_steps({0, 1, 1, 0}), input_error);
    CHECK_THROWS_AS(validate_steps({1, -1, -1, 1}), input_error);
    CHECK_NOTHROW(validate_steps({}));
    CHECK_NOTHROW(validate_steps({2, 1, 1, 2}));
}

TEST_CASE("doubling lands the middle generator on the diagonal") {
    DoubledStaircase d = double_staircase({1, 1});
    REQUIRE(d.lat.gens.size() == 5);
    CHECK(d.middle == 2);
    CHECK(d.lat.gens[d.middle].x == 1);
    CHECK(d.lat.gens[d.middle].y == 1);
    CHECK(d.lat.steps == StepVector{1, 1, 1, 1});
    CHECK(d.lat.span() == 2);

    DoubledStaircase d34 = double_staircase({1, 2, 2, 1});
    CHECK(d34.middle == 4);
    CHECK(d34.lat.gens[d34.middle].x == 3);
    CHECK(d34.lat.gens[d34.middle].y == 3);
    CHECK(d34.lat.span() == 6);
}

TEST_CASE("random palindromic staircases stay in the box") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        StepVector s = random_palindrome(rng);
        validate_steps(s);
        int g = std::accumulate(s.begin(), s.end(), 0) / 2;
        LatticeStaircase lat = lattice_points(s);
        REQUIRE(lat.gens.size() == s.size() + 1);
        CHECK(lat.span() == g);
        CHECK(lat.gens.front().x == 0);
        CHECK(lat.gens.front().y == g);
        CHECK(lat.gens.back().x == g);
        CHECK(lat.gens.back().y == 0);
        for (size_t i = 0; i < lat.gens.size(); ++i) {
            CHECK(lat.gens[i].type == (i % 2 ? 'B' : 'A'));
            CHECK(lat.gens[i].x >= 0);
            CHECK(lat.gens[i].x <= g);
            CHECK(lat.gens[i].y >= 0);
            CHECK(lat.gens[i].y <= g);
            if (i > 0) {
                CHECK(lat.gens[i].x >= lat.gens[i - 1].x);
                CHECK(lat.gens[i].y <= lat.gens[i - 1].y);
            }
        }
    }
}
