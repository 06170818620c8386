#pragma once
#include <vector>

#include "concord/alexander.hpp"

namespace concord {

// Consecutive exponent gaps (s_1,...,s_2m) of an L-space Alexander polynomial.
// Odd positions (1-based) are horizontal steps, even positions vertical.
using StepVector = std::vector<int>;

struct StairGen {
    int x = 0, y = 0;
    char type = 'A'; // 'A': no outgoing differential, 'B': two arrows to its neighbors
};

// Generators on the lattice path from (0,g) to (g,0), alternating right/down.
struct LatticeStaircase {
    StepVector steps;
    std::vector<StairGen> gens;
    int span() const { return gens.empty() ? 0 : gens.front().y; } // = top y = g
};

struct DoubledStaircase {
    LatticeStaircase lat;   // staircase of the concatenated step vector
    size_t middle = 0;      // index of the generator at (g,g)
};

void validate_steps(const StepVector& steps); // palindromic, positive entries, even length

StepVector steps_from_alexander(const LSpaceForm& form);

LatticeStaircase lattice_points(const StepVector& steps);

// Concatenation (s,s) realized from (0,2g) to (2g,0); asserts the middle
// generator lands on (g,g).
DoubledStaircase double_staircase(const StepVector& steps);

} // namespace concord
