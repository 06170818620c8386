#pragma once
#include <optional>
#include <string>
#include <vector>

#include "concord/knot.hpp"
#include "concord/laurent.hpp"

namespace concord {

// Alexander polynomial with alternating +-1 coefficients: the exponent list
// n_0 < ... < n_{2m} with signs (+,-,...,+), symmetric about 0, Delta(1)=1.
struct LSpaceForm {
    std::vector<int> exponents;
    int genus = 0; // top exponent
    int m = 0;     // gap n_{2m} - n_{2m-1} between the two highest exponents
};

// Symmetric normalization of (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)).
LaurentPoly torus_alexander(int p, int q);

// Delta_K(t^p) * Delta_{T(p,q)}(t), symmetric-normalized.
LaurentPoly cable_alexander(const LaurentPoly& delta, int p, int q);

// Succeeds iff delta has all coefficients +-1, alternating along the support,
// symmetric, with leading sign +1. On failure returns the first violated
// condition in `reason`.
std::optional<LSpaceForm> is_lspace_form(const LaurentPoly& delta, std::string* reason = nullptr);

// Alexander polynomial across the whole DSL: multiplicative under Sum,
// invariant under Mirror/Reverse (symmetric normalization).
LaurentPoly alexander_of(const KnotPtr& expr);

} // namespace concord
