#pragma once
#include <optional>
#include <string>
#include <vector>

#include "concord/staircase.hpp"

namespace concord {

// Region of the (x,y) plane used for subquotient complexes. AS is
// max(x, y-s) >= 0, B is x >= 0; arrows leaving the region are dropped.
struct Region {
    enum Kind { All, AS, B } kind = All;
    int s = 0;

    static Region all() { return {All, 0}; }
    static Region a_plus(int s) { return {AS, s}; }
    static Region b_plus() { return {B, 0}; }

    bool contains(int x, int y) const {
        switch (kind) {
        case All: return true;
        case AS: return x >= 0 || y >= s;
        case B: return x >= 0;
        }
        return true;
    }
    std::string str() const;
};

struct CfkGen {
    int x = 0, y = 0;
    int copy = 0;   // diagonal shift of the copy this generator belongs to
    int i = 0;      // index within the copy pattern, or first tensor factor index
    int j = -1;     // second tensor factor index (-1 outside tensors)
};

// Finite truncation of a staircase complex tensored with the group ring of U,
// or a tensor/quotient built from such. Differential over GF(2).
struct BigradedComplex {
    std::vector<CfkGen> gens;
    std::vector<std::pair<int, int>> arrows; // (from, to) generator indices
    int window = 0;
    int pattern = 0;            // generators per copy when copies are uniform
    bool staircase_copies = false; // true when every copy is a full staircase
    int factor1_pattern = 0;    // set by tensor(): pattern sizes of the factors
    int factor2_pattern = 0;

    void validate() const; // arrows strictly decrease x or y; boundary squares to zero
};

// Every diagonal translate of the staircase whose generators all lie in
// [-window, window]^2; arrows from each B-generator to its two A-neighbors.
BigradedComplex materialize(const LatticeStaircase& st, int window);

// Single copy at shift 0.
BigradedComplex single_block(const LatticeStaircase& st);

// Bilinear tensor product with the Leibniz differential.
BigradedComplex tensor(const BigradedComplex& a, const BigradedComplex& b);

// The complex of K # K^r over the truncation window: one staircase factor
// tensored (over the group ring) with the materialized translates.
BigradedComplex sum_complex(const LatticeStaircase& st, int window);

// Quotient by the subcomplex spanned by a1 (x) everything and everything (x)
// a_last. Verifies the deleted generators form translates of the doubled
// staircase and that they span a subcomplex.
BigradedComplex quotient_by_double(const BigradedComplex& full, const DoubledStaircase& dbl);

struct HomologyResult {
    int rank = 0;
    std::optional<int> bottom_shift; // max U-power m with the copy at shift -m inside the region
};

// GF(2) homology rank of the region-restricted complex. For staircase
// materializations also returns the tower bottom and cross-checks
// rank == number of fully included copies (partial copies contribute 0).
HomologyResult homology_rank(const BigradedComplex& c, const Region& region, bool parallel = true);

// Tower bottom of the doubled-staircase copies embedded in a sum_complex.
std::optional<int> embedded_double_bottom(const BigradedComplex& full, const Region& region);

// V_s extracted from homology tower bottoms of the materialized staircase,
// recomputed at window+2 as a truncation guard.
int oracle_v(const StepVector& steps, int s, int window_override = 0);

std::vector<int> oracle_v_sequence(const StepVector& steps, int smax, bool parallel = true,
                                   int window_override = 0);

} // namespace concord
