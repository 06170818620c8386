#include "concord/cfk.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "concord/gf2.hpp"

namespace concord {

std::string Region::str() const {
    switch (kind) {
    case All: return "all";
    case AS: return "A_" + std::to_string(s);
    case B: return "B";
    }
    return "?";
}

void BigradedComplex::validate() const {
    for (auto [f, t] : arrows) {
        const auto& a = gens[f];
        const auto& b = gens[t];
        check(b.x <= a.x && b.y <= a.y && (b.x < a.x || b.y < a.y),
              "differential must strictly decrease x or y");
    }
    // boundary squared: every length-2 path must occur an even number of times
    std::vector<std::vector<int>> out(gens.size());
    for (auto [f, t] : arrows) out[f].push_back(t);
    std::map<std::pair<int, int>, int> parity;
    for (size_t u = 0; u < gens.size(); ++u)
        for (int v : out[u])
            for (int w : out[v]) parity[{(int)u, w}] ^= 1;
    for (auto& [k, p] : parity) check(p == 0, "boundary does not square to zero");
}

static void add_staircase_arrows(BigradedComplex& c, int base, int count) {
    for (int i = 1; i < count; i += 2) {
        c.arrows.emplace_back(base + i, base + i - 1);
        c.arrows.emplace_back(base + i, base + i + 1);
    }
}

BigradedComplex materialize(const LatticeStaircase& st, int window) {
    int span = st.span();
    require(window >= span + 2, "window " + std::to_string(window) +
                                    " too small: would truncate a single staircase copy (span " +
                                    std::to_string(span) + ")");
    BigradedComplex c;
    c.window = window;
    c.pattern = (int)st.gens.size();
    c.staircase_copies = true;
    for (int t = -window; t <= window - span; ++t) {
        int base = (int)c.gens.size();
        for (int k = 0; k < (int)st.gens.size(); ++k)
            c.gens.push_back({st.gens[k].x + t, st.gens[k].y + t, t, k, -1});
        add_staircase_arrows(c, base, (int)st.gens.size());
    }
    c.validate();
    return c;
}

BigradedComplex single_block(const LatticeStaircase& st) {
    BigradedComplex c;
    c.window = st.span();
    c.pattern = (int)st.gens.size();
    c.staircase_copies = true;
    for (int k = 0; k < (int)st.gens.size(); ++k)
        c.gens.push_back({st.gens[k].x, st.gens[k].y, 0, k, -1});
    add_staircase_arrows(c, 0, (int)st.gens.size());
    c.validate();
    return c;
}

BigradedComplex tensor(const BigradedComplex& a, const BigradedComplex& b) {
    BigradedComplex c;
    c.window = a.window + b.window;
    c.pattern = a.pattern * b.pattern;
    c.factor1_pattern = a.pattern;
    c.factor2_pattern = b.pattern;
    size_t nb = b.gens.size();
    c.gens.reserve(a.gens.size() * nb);
    for (size_t i = 0; i < a.gens.size(); ++i)
        for (size_t j = 0; j < nb; ++j)
            c.gens.push_back({a.gens[i].x + b.gens[j].x, a.gens[i].y + b.gens[j].y,
                              a.gens[i].copy + b.gens[j].copy, (int)i, (int)j});
    for (auto [f, t] : a.arrows)
        for (size_t j = 0; j < nb; ++j)
            c.arrows.emplace_back((int)(f * nb + j), (int)(t * nb + j));
    for (auto [f, t] : b.arrows)
        for (size_t i = 0; i < a.gens.size(); ++i)
            c.arrows.emplace_back((int)(i * nb + f), (int)(i * nb + t));
    c.validate();
    return c;
}

BigradedComplex sum_complex(const LatticeStaircase& st, int window) {
    return tensor(single_block(st), materialize(st, window));
}

BigradedComplex quotient_by_double(const BigradedComplex& full, const DoubledStaircase& dbl) {
    check(full.factor1_pattern > 0 && full.factor2_pattern > 0,
          "quotient_by_double needs a tensor complex with factor provenance");
    int f1 = full.factor1_pattern, f2 = full.factor2_pattern;
    auto deleted = [&](const CfkGen& g) {
        return g.i % f1 == 0 || g.j % f2 == f2 - 1;
    };

    // the deleted generators must be a subcomplex
    for (auto [f, t] : full.arrows)
        if (deleted(full.gens[f]))
            check(deleted(full.gens[t]), "deleted span is not a subcomplex");

    // and must assemble into diagonal translates of the doubled staircase
    std::map<int, std::multiset<std::pair<int, int>>> by_copy;
    for (const auto& g : full.gens)
        if (deleted(g)) by_copy[g.copy].insert({g.x, g.y});
    for (auto& [t, pts] : by_copy) {
        check(pts.size() == dbl.lat.gens.size(),
              "deleted block at shift " + std::to_string(t) + " has wrong size");
        std::multiset<std::pair<int, int>> want;
        for (const auto& g : dbl.lat.gens) want.insert({g.x + t, g.y + t});
        check(pts == want, "deleted block at shift " + std::to_string(t) +
                               " does not match the doubled staircase");
    }

    BigradedComplex q;
    q.window = full.window;
    q.pattern = full.pattern > 0 ? full.pattern - (int)dbl.lat.gens.size() : 0;
    std::vector<int> remap(full.gens.size(), -1);
    for (size_t n = 0; n < full.gens.size(); ++n)
        if (!deleted(full.gens[n])) {
            remap[n] = (int)q.gens.size();
            q.gens.push_back(full.gens[n]);
        }
    for (auto [f, t] : full.arrows)
        if (remap[f] >= 0 && remap[t] >= 0) q.arrows.emplace_back(remap[f], remap[t]);
    q.validate();
    return q;
}

HomologyResult homology_rank(const BigradedComplex& c, const Region& region, bool parallel) {
    std::vector<int> sel(c.gens.size(), -1);
    int nsel = 0;
    for (size_t n = 0; n < c.gens.size(); ++n)
        if (region.contains(c.gens[n].x, c.gens[n].y)) sel[n] = nsel++;

    gf2::Matrix m((int)c.gens.size(), nsel);
    std::vector<bool> row_used(c.gens.size(), false);
    for (auto [f, t] : c.arrows)
        if (sel[f] >= 0 && sel[t] >= 0) {
            m.set(f, sel[t]);
            row_used[f] = true;
        }
    // compact away empty rows
    gf2::Matrix mm(0, nsel);
    mm.rows = 0;
    mm.words_per_row = m.words_per_row;
    for (int r = 0; r < m.rows; ++r)
        if (row_used[r]) {
            mm.bits.insert(mm.bits.end(), m.bits.begin() + (size_t)r * m.words_per_row,
                           m.bits.begin() + (size_t)(r + 1) * m.words_per_row);
            ++mm.rows;
        }
    int brank = gf2::rank(mm, parallel);

    HomologyResult hr;
    hr.rank = nsel - 2 * brank;

    if (c.staircase_copies && c.pattern > 0) {
        int copies = (int)c.gens.size() / c.pattern;
        int included = 0;
        std::optional<int> min_t;
        for (int k = 0; k < copies; ++k) {
            bool all_in = true;
            for (int g = k * c.pattern; g < (k + 1) * c.pattern; ++g)
                all_in = all_in && sel[g] >= 0;
            if (all_in) {
                ++included;
                int t = c.gens[k * c.pattern].copy;
                if (!min_t || t < *min_t) min_t = t;
            }
        }
        check(hr.rank == included,
              "staircase region homology rank " + std::to_string(hr.rank) +
                  " does not equal the fully-included copy count " + std::to_string(included) +
                  " (region " + region.str() + ")");
        if (min_t) hr.bottom_shift = -*min_t;
    }
    return hr;
}

std::optional<int> embedded_double_bottom(const BigradedComplex& full, const Region& region) {
    check(full.factor1_pattern > 0 && full.factor2_pattern > 0,
          "embedded_double_bottom needs a tensor complex");
    int f1 = full.factor1_pattern, f2 = full.factor2_pattern;
    int expect = f1 + f2 - 1;
    std::map<int, std::pair<int, int>> per_copy; // copy -> (count, count inside region)
    for (const auto& g : full.gens)
        if (g.i % f1 == 0 || g.j % f2 == f2 - 1) {
            auto& [total, inside] = per_copy[g.copy];
            ++total;
            if (region.contains(g.x, g.y)) ++inside;
        }
    std::optional<int> min_t;
    for (auto& [t, cnt] : per_copy)
        if (cnt.first == expect && cnt.second == expect && (!min_t || t < *min_t)) min_t = t;
    if (!min_t) return std::nullopt;
    return -*min_t;
}

int oracle_v(const StepVector& steps, int s, int window_override) {
    require(s >= 0, "oracle_v needs s >= 0");
    LatticeStaircase st = lattice_points(steps);
    int w = window_override > 0 ? window_override : st.span() + s + 4;
    auto run = [&](int window) {
        BigradedComplex c = materialize(st, window);
        HomologyResult a = homology_rank(c, Region::a_plus(s));
        HomologyResult b = homology_rank(c, Region::b_plus());
        check(a.bottom_shift && b.bottom_shift, "region contains no full staircase copy");
        return *a.bottom_shift - *b.bottom_shift;
    };
    int v = run(w);
    check(v == run(w + 2), "window guard: V_" + std::to_string(s) +
                               " changed when recomputed with window+2 (window " +
                               std::to_string(w) + " insufficient)");
    return v;
}

std::vector<int> oracle_v_sequence(const StepVector& steps, int smax, bool parallel,
                                   int window_override) {
    std::vector<int> v(smax + 1, 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s <= smax; ++s) v[s] = oracle_v(steps, s, window_override);
    } else {
        for (int s = 0; s <= smax; ++s) v[s] = oracle_v(steps, s, window_override);
    }
    return v;
}

} // namespace concord
