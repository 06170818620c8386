#include "concord/dinv.hpp"

#include <algorithm>

namespace concord {

int v_value(const StepVector& steps, int s) {
    require(s >= 0, "v_value needs s >= 0");
    LatticeStaircase st = lattice_points(steps);
    int bottom_a = st.gens[0].x > st.gens[0].y - s ? st.gens[0].x : st.gens[0].y - s;
    int bottom_b = st.gens[0].x;
    for (const auto& g : st.gens) {
        bottom_a = std::min(bottom_a, std::max(g.x, g.y - s));
        bottom_b = std::min(bottom_b, g.x);
    }
    check(bottom_a >= bottom_b, "A-region tower bottom below B-region bottom");
    return bottom_a - bottom_b;
}

VSequence v_sequence(const StepVector& steps, int smax, bool parallel) {
    require(smax >= 0, "v_sequence needs smax >= 0");
    VSequence vs;
    vs.steps = steps;
    vs.v.resize(smax + 1);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int s = 0; s <= smax; ++s) vs.v[s] = v_value(steps, s);
    } else {
        for (int s = 0; s <= smax; ++s) vs.v[s] = v_value(steps, s);
    }
    for (int s = 0; s < smax; ++s)
        check(vs.v[s] >= vs.v[s + 1] && vs.v[s + 1] >= vs.v[s] - 1,
              "V-sequence must decrease monotonically in unit steps");
    return vs;
}

int overlap_length(const VSequence& vs, int s) {
    require(s >= 0 && s <= vs.smax(), "overlap_length: s out of range");
    return s - (vs.v[0] - vs.v[s]);
}

int m_threshold(const StepVector& steps) {
    LatticeStaircase st = lattice_points(steps);
    int span = st.span();
    if (span == 0) return 0;
    VSequence vs = v_sequence(steps, span, false);
    int m = 0;
    for (int s = 0; s <= span; ++s)
        if (vs.v[s] == vs.v[0]) m = s;
    check(m < span, "V cannot stay at V_0 all the way to s = span");
    return m;
}

Rat lens_d(int k, int i) {
    require(k >= 1, "lens_d needs k >= 1");
    require(i >= 0 && i < k, "lens_d residue out of range");
    long long c = 2LL * i - k;
    return Rat(c * c - k, 4LL * k);
}

bool is_odd_prime(long long k) {
    if (k < 3 || k % 2 == 0) return false;
    for (long long d = 3; d * d <= k; d += 2)
        if (k % d == 0) return false;
    return true;
}

void validate_dtable(const DTable& t) {
    check((int)t.d.size() == t.k && (int)t.dbar.size() == t.k, "d-table size mismatch");
    for (int i = 1; i < t.k; ++i)
        check(t.d[i] == t.d[t.k - i], "d-table must be conjugation symmetric");
    check(t.dbar[0].is_zero(), "dbar(0) must vanish at the spin structure");
    for (int i = 0; i < t.k; ++i) {
        check((4LL * t.k) % t.d[i].den == 0, "d denominators must divide 4k");
        check(t.dbar[i] == t.d[i] - t.d[0], "dbar must be d - d(spin)");
    }
}

DTable surgery_d(const VSequence& vseq, int k) {
    require(k == 1 || is_odd_prime(k), "surgery coefficient must be an odd prime (or 1), got " +
                                           std::to_string(k));
    require(vseq.smax() >= k, "V-sequence too short: need s up to k");
    DTable t;
    t.k = k;
    for (int i = 0; i < k; ++i) {
        int vmax = std::max(vseq.v[i], vseq.v[k - i]);
        t.d.push_back(lens_d(k, i) - Rat(2LL * vmax));
    }
    for (int i = 0; i < k; ++i) t.dbar.push_back(t.d[i] - t.d[0]);
    validate_dtable(t);
    return t;
}

DTable lens_table(int k) {
    require(k == 1 || is_odd_prime(k), "lens table needs an odd prime (or 1), got " + std::to_string(k));
    DTable t;
    t.k = k;
    for (int i = 0; i < k; ++i) t.d.push_back(lens_d(k, i));
    for (int i = 0; i < k; ++i) t.dbar.push_back(t.d[i] - t.d[0]);
    validate_dtable(t);
    return t;
}

DTable negated(const DTable& t) {
    DTable n;
    n.k = t.k;
    for (const Rat& x : t.d) n.d.push_back(-x);
    for (const Rat& x : t.dbar) n.dbar.push_back(-x);
    validate_dtable(n);
    return n;
}

} // namespace concord
