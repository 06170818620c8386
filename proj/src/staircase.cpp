#include "concord/staircase.hpp"

#include <numeric>

namespace concord {

void validate_steps(const StepVector& steps) {
    require(steps.size() % 2 == 0, "step vector must have even length");
    for (size_t i = 0; i < steps.size(); ++i) {
        require(steps[i] >= 1, "step lengths must be positive");
        require(steps[i] == steps[steps.size() - 1 - i], "step vector must be palindromic");
    }
}

StepVector steps_from_alexander(const LSpaceForm& form) {
    StepVector steps;
    for (size_t i = 1; i < form.exponents.size(); ++i)
        steps.push_back(form.exponents[i] - form.exponents[i - 1]);
    validate_steps(steps);
    return steps;
}

LatticeStaircase lattice_points(const StepVector& steps) {
    validate_steps(steps);
    int g = 0;
    for (size_t i = 0; i < steps.size(); i += 2) g += steps[i];
    LatticeStaircase st;
    st.steps = steps;
    int x = 0, y = g;
    st.gens.push_back({x, y, 'A'});
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i % 2 == 0) {
            x += steps[i];
            st.gens.push_back({x, y, 'B'});
        } else {
            y -= steps[i];
            st.gens.push_back({x, y, 'A'});
        }
    }
    check(x == g && y == 0, "staircase must end at (g,0)");
    for (auto& gen : st.gens) check(gen.x >= 0 && gen.y >= 0, "staircase coordinates must be nonnegative");
    return st;
}

DoubledStaircase double_staircase(const StepVector& steps) {
    validate_steps(steps);
    StepVector twice = steps;
    twice.insert(twice.end(), steps.begin(), steps.end());
    DoubledStaircase d;
    d.lat = lattice_points(twice);
    d.middle = steps.size();
    int g = d.lat.span() / 2;
    check(d.lat.gens[d.middle].x == g && d.lat.gens[d.middle].y == g,
          "doubled staircase middle generator must sit at (g,g)");
    return d;
}

} // namespace concord
