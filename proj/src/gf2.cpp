#include "concord/gf2.hpp"

namespace concord::gf2 {

namespace {

inline int find_pivot(const Matrix& m, int from_row, int col) {
    int w = col / 64;
    std::uint64_t mask = (std::uint64_t)1 << (col % 64);
    for (int r = from_row; r < m.rows; ++r)
        if (m.bits[(size_t)r * m.words_per_row + w] & mask) return r;
    return -1;
}

inline void swap_rows(Matrix& m, int a, int b) {
    if (a == b) return;
    auto* pa = &m.bits[(size_t)a * m.words_per_row];
    auto* pb = &m.bits[(size_t)b * m.words_per_row];
    for (int w = 0; w < m.words_per_row; ++w) std::swap(pa[w], pb[w]);
}

inline void xor_row(Matrix& m, int dst, int src, int from_word) {
    auto* pd = &m.bits[(size_t)dst * m.words_per_row];
    const auto* ps = &m.bits[(size_t)src * m.words_per_row];
    for (int w = from_word; w < m.words_per_row; ++w) pd[w] ^= ps[w];
}

} // namespace

int rank_serial(Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = find_pivot(m, rank, col);
        if (piv < 0) continue;
        swap_rows(m, rank, piv);
        std::uint64_t mask = (std::uint64_t)1 << (col % 64);
        int w0 = col / 64;
        for (int r = rank + 1; r < m.rows; ++r)
            if (m.bits[(size_t)r * m.words_per_row + w0] & mask) xor_row(m, r, rank, w0);
        ++rank;
    }
    return rank;
}

int rank_parallel(Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = find_pivot(m, rank, col);
        if (piv < 0) continue;
        swap_rows(m, rank, piv);
        std::uint64_t mask = (std::uint64_t)1 << (col % 64);
        int w0 = col / 64;
#pragma omp parallel for schedule(static)
        for (int r = rank + 1; r < m.rows; ++r)
            if (m.bits[(size_t)r * m.words_per_row + w0] & mask) xor_row(m, r, rank, w0);
        ++rank;
    }
    return rank;
}

int rank(const Matrix& m, bool parallel) {
    // Fork overhead dominates on small matrices.
    if (!parallel || m.rows < 256) return rank_serial(m);
    return rank_parallel(m);
}

} // namespace concord::gf2
