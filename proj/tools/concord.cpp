#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "concord/json_io.hpp"

namespace {

using namespace concord;

struct Common {
    std::string format = "json";
    bool oracle = false;
    int limit = 2;
    int window = 0;
    int sample = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--oracle", c.oracle,
                  "recheck V-values against the truncated-homology oracle");
    sub->add_option("--limit-n", c.limit, "exact metabolizer enumeration limit (default 2)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--window", c.window, "truncation window override for the oracle")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--sample", c.sample,
                    "random metabolizer sample budget once n exceeds the limit")
        ->check(CLI::NonNegativeNumber);
}

StepVector doubled_steps_of(const KnotPtr& knot) {
    LaurentPoly delta = alexander_of(knot);
    std::string reason;
    auto form = is_lspace_form(delta, &reason);
    require(form.has_value(), render(knot) + " does not have an L-space Alexander polynomial: " +
                                  reason);
    return double_staircase(steps_from_alexander(*form)).lat.steps;
}

void oracle_check(const StepVector& doubled, const std::vector<int>& v, int smax, int window) {
    std::vector<int> ov = oracle_v_sequence(doubled, smax, true, window);
    for (int s = 0; s <= smax; ++s)
        check(ov[s] == v[s], "oracle V_" + std::to_string(s) + " = " + std::to_string(ov[s]) +
                                 " disagrees with " + std::to_string(v[s]));
}

void emit(const std::string& s) { std::fputs(s.c_str(), stdout); }

int run_alexander(const std::string& expr, const Common& c) {
    KnotPtr knot = normalize(parse_knot(expr));
    if (c.format == "json")
        emit(dump(alexander_json(knot)));
    else if (c.format == "csv")
        emit(alexander_csv(knot));
    else {
        ordered_json j = alexander_json(knot);
        std::string out = "knot: " + j["knot"].get<std::string>() + "\ndelta: " +
                          j["delta_str"].get<std::string>() + "\n";
        if (j["lspace_form"].get<bool>()) {
            out += "L-space form: yes, genus " + std::to_string(j["genus"].get<int>()) +
                   ", m = " + std::to_string(j["m"].get<int>()) + "\n";
        } else {
            out += "L-space form: no (" + j["reason"].get<std::string>() + ")\n";
        }
        emit(out);
    }
    return 0;
}

int run_staircase(const std::string& expr, bool doubled, const Common& c) {
    KnotPtr knot = normalize(parse_knot(expr));
    LaurentPoly delta = alexander_of(knot);
    std::string reason;
    auto form = is_lspace_form(delta, &reason);
    require(form.has_value(),
            render(knot) + " does not have an L-space Alexander polynomial: " + reason);
    StepVector steps = steps_from_alexander(*form);
    LatticeStaircase st = doubled ? double_staircase(steps).lat : lattice_points(steps);
    if (c.format == "json")
        emit(dump(staircase_json(st)));
    else if (c.format == "csv")
        emit(staircase_csv(st));
    else {
        std::string out = "knot: " + render(knot) + (doubled ? " (doubled)" : "") + "\nsteps:";
        for (int s : st.steps) out += " " + std::to_string(s);
        out += "\n";
        for (const StairGen& g : st.gens)
            out += std::string(1, g.type) + "(" + std::to_string(g.x) + "," +
                   std::to_string(g.y) + ")\n";
        emit(out);
    }
    return 0;
}

int run_vs(const std::string& expr, int smax, const Common& c) {
    VsReport r;
    r.knot = normalize(parse_knot(expr));
    r.steps = doubled_steps_of(r.knot);
    int span = 0;
    for (size_t i = 0; i < r.steps.size(); i += 2) span += r.steps[i];
    if (smax < 0) smax = span + 2;
    r.vs = v_sequence(r.steps, smax, true);
    if (c.oracle) {
        r.oracle = oracle_v_sequence(r.steps, smax, true, c.window);
        for (int s = 0; s <= smax; ++s)
            check(r.oracle[s] == r.vs.v[s],
                  "oracle V_" + std::to_string(s) + " disagrees with the containment formula");
    }
    if (c.format == "json")
        emit(dump(vs_json(r)));
    else if (c.format == "csv")
        emit(vs_csv(r));
    else
        emit(vs_text(r));
    return 0;
}

int run_dtable(const std::string& expr, int k, const Common& c) {
    KnotPtr knot = normalize(parse_knot(expr));
    StepVector doubled = doubled_steps_of(knot);
    VSequence vs = v_sequence(doubled, k, true);
    if (c.oracle) oracle_check(doubled, vs.v, k, c.window);
    DTable t = surgery_d(vs, k);
    if (c.format == "json")
        emit(dump(dtable_json(t)));
    else if (c.format == "csv")
        emit(dtable_csv(t));
    else
        emit(dtable_text(t));
    return 0;
}

KnotPtr build_family(const KnotPtr& companion, const std::vector<int>& primes) {
    std::vector<KnotPtr> parts;
    int sign = 1;
    for (int k : primes) {
        KnotPtr cab = make_cable(2, k, companion);
        parts.push_back(sign > 0 ? cab : make_mirror(cab));
        if (k >= 2) {
            KnotPtr tor = make_torus(2, k);
            parts.push_back(sign > 0 ? make_mirror(tor) : tor);
        }
        sign = -sign;
    }
    return parts.size() == 1 ? parts[0] : make_sum(parts);
}

int run_obstruct(const std::string& expr, std::vector<int> primes, int n, const Common& c) {
    for (size_t i = 0; i < primes.size(); ++i) {
        require(primes[i] == 1 || is_odd_prime(primes[i]),
                "k=" + std::to_string(primes[i]) + " must be an odd prime (or the degenerate 1)");
        for (size_t j = i + 1; j < primes.size(); ++j)
            require(primes[i] != primes[j], "primes must be distinct");
    }
    ObstructReport r;
    r.companion = normalize(parse_knot(expr));
    r.family = normalize(build_family(r.companion, primes));
    r.n = n;
    if (r.family->kind == KnotExpr::Unknot) {
        // C(2,1;U) with nothing else: the family is literally the unknot.
        for (int k : primes) {
            Verdict v;
            v.prime = k;
            v.n = n;
            v.threshold_2m_plus_1 = 1;
            v.reports.push_back(MetabolizerReport{Metabolizer{}, std::nullopt, false});
            r.verdicts.push_back(v);
        }
    } else {
        if (c.oracle) {
            StepVector doubled = doubled_steps_of(r.companion);
            int kmax = 1;
            for (int k : primes) kmax = std::max(kmax, k);
            oracle_check(doubled, v_sequence(doubled, kmax, true).v, kmax, c.window);
        }
        r.verdicts = obstruct(r.family, n, c.limit, c.sample, true);
    }
    for (const Verdict& v : r.verdicts) r.not_slice = r.not_slice || v.obstructed;
    if (c.format == "json")
        emit(dump(obstruct_json(r)));
    else if (c.format == "csv")
        emit(obstruct_csv(r));
    else
        emit(obstruct_text(r));
    return 0;
}

int run_independence(const std::string& relation, const std::string& companion_expr,
                     const Common& c) {
    std::vector<RelTerm> rel = parse_relation(relation);
    KnotPtr companion = normalize(parse_knot(companion_expr));
    if (c.oracle && !rel.empty()) {
        int kmax = 0;
        for (const RelTerm& t : rel) kmax = std::max(kmax, t.k);
        StepVector doubled = doubled_steps_of(companion);
        oracle_check(doubled, v_sequence(doubled, kmax, true).v, kmax, c.window);
    }
    IndependenceResult res = independence_check(rel, companion, c.limit, c.sample, true);
    if (c.format == "json")
        emit(dump(independence_json(res)));
    else if (c.format == "csv")
        emit(independence_csv(res));
    else
        emit(independence_text(res));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact staircase/d-invariant sliceness obstruction engine"};
    app.require_subcommand(1);

    Common c;
    std::string expr, relation, companion = "T(2,3)";
    bool doubled = false;
    int smax = -1, n = 1;
    std::vector<int> primes;

    CLI::App* sa = app.add_subcommand("alexander", "Alexander polynomial with L-space diagnosis");
    sa->add_option("expr", expr, "knot expression")->required();
    add_common(sa, c);

    CLI::App* ss = app.add_subcommand("staircase", "staircase generators of an L-space knot");
    ss->add_option("expr", expr, "knot expression")->required();
    ss->add_flag("--double", doubled, "doubled staircase of K # K^r");
    add_common(ss, c);

    CLI::App* sv = app.add_subcommand("vs", "V-sequence of the doubled staircase");
    sv->add_option("expr", expr, "companion knot K; the sequence is for K # K^r")->required();
    sv->add_option("--smax", smax, "largest s (default: doubled genus + 2)");
    add_common(sv, c);

    CLI::App* sd = app.add_subcommand("dtable", "d and dbar of k-surgery on K # K^r");
    sd->add_option("expr", expr, "companion knot K")->required();
    sd->add_option("k", primes, "surgery coefficient, an odd prime (or 1)")
        ->required()
        ->expected(1);
    add_common(sd, c);

    CLI::App* so = app.add_subcommand("obstruct", "metabolizer obstruction for the cable family");
    so->add_option("expr", expr, "companion knot K")->required();
    so->add_option("primes", primes, "one or two odd primes k")->required()->expected(1, 2);
    so->add_option("--n", n, "number of copies of the family")->check(CLI::PositiveNumber);
    add_common(so, c);

    CLI::App* si = app.add_subcommand("independence", "signature probes plus residual obstruction");
    si->add_option("relation", relation, "e.g. \"2*T(2,5) - 2*K(2,5) + T(2,7)\"")->required();
    si->add_option("--companion", companion, "companion K for the K(2,k) terms");
    add_common(si, c);

    try {
        app.parse(argc, argv);
        if (sa->parsed()) return run_alexander(expr, c);
        if (ss->parsed()) return run_staircase(expr, doubled, c);
        if (sv->parsed()) return run_vs(expr, smax, c);
        if (sd->parsed()) return run_dtable(expr, primes.at(0), c);
        if (so->parsed()) return run_obstruct(expr, primes, n, c);
        if (si->parsed()) return run_independence(relation, companion, c);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const concord::input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const concord::check_error& e) {
        std::fprintf(stderr, "internal check failed: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
