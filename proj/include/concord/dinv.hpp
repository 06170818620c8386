#pragma once
#include <vector>

#include "concord/rational.hpp"
#include "concord/staircase.hpp"

namespace concord {

// V_s of the staircase with the given step vector (pass the doubled step
// vector for K # K^r): tower-bottom difference between the A_s and B regions,
// computed by coordinate containment.
int v_value(const StepVector& steps, int s);

struct VSequence {
    StepVector steps;
    std::vector<int> v; // V_0 .. V_smax
    int smax() const { return (int)v.size() - 1; }
};

VSequence v_sequence(const StepVector& steps, int smax, bool parallel = true);

// L^s = s - (V_0 - V_s): number of unit steps j -> j+1 in [0,s) with V_j == V_{j+1}.
int overlap_length(const VSequence& vs, int s);

// Largest s with V_s == V_0 (0 for the point staircase).
int m_threshold(const StepVector& steps);

// d(L(k,1), i) = ((2i-k)^2 - k) / (4k).
Rat lens_d(int k, int i);

struct DTable {
    int k = 0;
    std::vector<Rat> d;    // indexed by residue 0..k-1
    std::vector<Rat> dbar; // d(i) - d(0); spin index is 0 for odd k
};

void validate_dtable(const DTable& t); // conjugation symmetry, dbar(0)=0, denominators divide 4k

bool is_odd_prime(long long k);

// d(S^3_k, i) = lens_d(k,i) - 2 max{V_i, V_{k-i}}. k must be an odd prime,
// or 1 (degenerate single-structure case). vseq must cover s = 0..k.
DTable surgery_d(const VSequence& vseq, int k);

DTable lens_table(int k);
DTable negated(const DTable& t); // orientation reversal

} // namespace concord
