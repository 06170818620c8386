#include "doctest.h"

#include <random>

#include "concord/gf2.hpp"

using namespace concord::gf2;

namespace {

Matrix random_matrix(int r, int c, double density, std::mt19937& rng) {
    Matrix m(r, c);
    std::bernoulli_distribution bit(density);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (bit(rng)) m.set(i, j);
    return m;
}

} // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank_serial(Matrix(0, 0)) == 0);
    CHECK(rank_serial(Matrix(5, 3)) == 0); // all zero

    Matrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i);
    CHECK(rank_serial(id) == 4);
    CHECK(rank_parallel(id) == 4);

    // rows: 110, 011, 101 -> third is the sum of the first two
    Matrix dep(3, 3);
    dep.set(0, 0); dep.set(0, 1);
    dep.set(1, 1); dep.set(1, 2);
    dep.set(2, 0); dep.set(2, 2);
    CHECK(rank_serial(dep) == 2);

    Matrix dup(2, 70); // spans two words per row
    dup.set(0, 0); dup.set(0, 69);
    dup.set(1, 0); dup.set(1, 69);
    CHECK(rank_serial(dup) == 1);
}

TEST_CASE("serial and parallel elimination agree") {
    std::mt19937 rng(20240311);
    for (double density : {0.03, 0.2, 0.5}) {
        for (int trial = 0; trial < 4; ++trial) {
            Matrix m = random_matrix(160, 211, density, rng);
            int rs = rank_serial(m);
            int rp = rank_parallel(m);
            CHECK(rs == rp);
            CHECK(rs <= 160);
            CHECK(rs <= 211);
            CHECK(rank(m, false) == rs);
            CHECK(rank(m, true) == rs);
        }
    }
}

TEST_CASE("rank is invariant under row duplication") {
    std::mt19937 rng(99);
    Matrix m = random_matrix(40, 60, 0.3, rng);
    int r = rank_serial(m);

    Matrix m2(80, 60);
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 60; ++j)
            if (m.get(i, j)) { m2.set(i, j); m2.set(i + 40, j); }
    CHECK(rank_serial(m2) == r);
    CHECK(rank_parallel(m2) == r);
}
