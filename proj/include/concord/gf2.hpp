#pragma once
#include <cstdint>
#include <vector>

namespace concord::gf2 {

// Dense bit-packed matrix over GF(2), row-major.
struct Matrix {
    int rows = 0, cols = 0;
    int words_per_row = 0;
    std::vector<std::uint64_t> bits;

    Matrix() = default;
    Matrix(int r, int c)
        : rows(r), cols(c), words_per_row((c + 63) / 64), bits((size_t)r * words_per_row, 0) {}

    void set(int r, int c) { bits[(size_t)r * words_per_row + c / 64] |= (std::uint64_t)1 << (c % 64); }
    bool get(int r, int c) const {
        return (bits[(size_t)r * words_per_row + c / 64] >> (c % 64)) & 1;
    }
};

// Gaussian elimination rank. The serial version is the reference; the
// parallel version distributes the elimination of rows below the pivot with
// OpenMP and must return identical results on any thread count.
int rank_serial(Matrix m);
int rank_parallel(Matrix m);
int rank(const Matrix& m, bool parallel = true);

} // namespace concord::gf2
