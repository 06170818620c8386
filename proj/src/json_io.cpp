#include "concord/json_io.hpp"

#include <sstream>

namespace concord {

namespace {

std::string bool_word(bool b) { return b ? "yes" : "no"; }

ordered_json int_vec(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x);
    return a;
}

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json laurent_json(const LaurentPoly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& [e, c] : p.pairs()) a.push_back(ordered_json{{"exp", e}, {"coeff", c}});
    return a;
}

ordered_json alexander_json(const KnotPtr& knot) {
    KnotPtr nf = normalize(knot);
    LaurentPoly delta = alexander_of(nf);
    std::string reason;
    auto form = is_lspace_form(delta, &reason);
    ordered_json j;
    j["knot"] = render(nf);
    j["delta"] = laurent_json(delta);
    j["delta_str"] = delta.str();
    j["lspace_form"] = form.has_value();
    if (form) {
        j["reason"] = nullptr;
        j["exponents"] = int_vec(form->exponents);
        j["genus"] = form->genus;
        j["m"] = form->m;
    } else {
        j["reason"] = reason;
        j["exponents"] = nullptr;
        j["genus"] = nullptr;
        j["m"] = nullptr;
    }
    return j;
}

std::string alexander_csv(const KnotPtr& knot) {
    LaurentPoly delta = alexander_of(normalize(knot));
    std::ostringstream os;
    os << "exp,coeff\n";
    for (const auto& [e, c] : delta.pairs()) os << e << "," << c << "\n";
    return os.str();
}

ordered_json staircase_json(const LatticeStaircase& st) {
    ordered_json j;
    j["steps"] = int_vec(st.steps);
    ordered_json gens = ordered_json::array();
    for (const StairGen& g : st.gens)
        gens.push_back(ordered_json{{"x", g.x}, {"y", g.y}, {"type", std::string(1, g.type)}});
    j["generators"] = gens;
    return j;
}

std::string staircase_csv(const LatticeStaircase& st) {
    std::ostringstream os;
    os << "x,y,type\n";
    for (const StairGen& g : st.gens) os << g.x << "," << g.y << "," << g.type << "\n";
    return os.str();
}

ordered_json vs_json(const VsReport& r) {
    ordered_json j;
    j["knot"] = render(r.knot);
    j["steps"] = int_vec(r.steps);
    j["smax"] = r.vs.smax();
    j["v"] = int_vec(r.vs.v);
    if (r.oracle.empty()) {
        j["oracle"] = nullptr;
    } else {
        j["oracle"] = int_vec(r.oracle);
    }
    return j;
}

std::string vs_csv(const VsReport& r) {
    std::ostringstream os;
    os << (r.oracle.empty() ? "s,v\n" : "s,v,oracle\n");
    for (int s = 0; s <= r.vs.smax(); ++s) {
        os << s << "," << r.vs.v[s];
        if (!r.oracle.empty()) os << "," << r.oracle[s];
        os << "\n";
    }
    return os.str();
}

std::string vs_text(const VsReport& r) {
    std::ostringstream os;
    os << "knot: " << render(r.knot) << "\n";
    os << "doubled steps:";
    for (int s : r.steps) os << " " << s;
    os << "\n   s  V_s" << (r.oracle.empty() ? "" : "  oracle") << "\n";
    for (int s = 0; s <= r.vs.smax(); ++s) {
        os << std::string(s < 10 ? 3 : (s < 100 ? 2 : 1), ' ') << s << "  " << r.vs.v[s];
        if (!r.oracle.empty()) os << "  " << r.oracle[s];
        os << "\n";
    }
    return os.str();
}

ordered_json dtable_json(const DTable& t) {
    ordered_json j;
    j["k"] = t.k;
    ordered_json d = ordered_json::array(), dbar = ordered_json::array();
    for (const Rat& x : t.d) d.push_back(x.str());
    for (const Rat& x : t.dbar) dbar.push_back(x.str());
    j["d"] = d;
    j["dbar"] = dbar;
    return j;
}

std::string dtable_csv(const DTable& t) {
    std::ostringstream os;
    os << "i,d,dbar\n";
    for (int i = 0; i < t.k; ++i) os << i << "," << t.d[i].str() << "," << t.dbar[i].str() << "\n";
    return os.str();
}

std::string dtable_text(const DTable& t) {
    std::ostringstream os;
    os << "k = " << t.k << "\n   i  d           dbar\n";
    for (int i = 0; i < t.k; ++i) {
        std::string ds = t.d[i].str();
        os << std::string(i < 10 ? 3 : (i < 100 ? 2 : 1), ' ') << i << "  " << ds
           << std::string(ds.size() < 12 ? 12 - ds.size() : 1, ' ') << t.dbar[i].str() << "\n";
    }
    return os.str();
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["prime"] = v.prime;
    j["metabolizers"] = (long long)v.reports.size();
    j["obstructed"] = v.obstructed;
    if (!v.exhaustive) j["exhaustive"] = false;
    ordered_json certs = ordered_json::array();
    for (const MetabolizerReport& r : v.reports) {
        ordered_json c;
        ordered_json basis = ordered_json::array();
        for (const auto& row : r.m.basis) basis.push_back(int_vec(row));
        c["basis"] = basis;
        if (r.cert) {
            c["element"] = int_vec(r.cert->element);
            c["dbar"] = r.cert->dbar.str();
        } else {
            c["element"] = nullptr;
            c["dbar"] = nullptr;
        }
        certs.push_back(c);
    }
    j["certificates"] = certs;
    j["threshold"] = ordered_json{{"k", v.prime}, {"2m+1", v.threshold_2m_plus_1}};
    return j;
}

ordered_json obstruct_json(const ObstructReport& r) {
    ordered_json j;
    j["companion"] = render(r.companion);
    j["family"] = render(r.family);
    j["n"] = r.n;
    ordered_json vs = ordered_json::array();
    for (const Verdict& v : r.verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = vs;
    j["not_slice"] = r.not_slice;
    return j;
}

std::string obstruct_csv(const ObstructReport& r) {
    std::ostringstream os;
    os << "prime,n,metabolizers,obstructed,threshold\n";
    for (const Verdict& v : r.verdicts)
        os << v.prime << "," << v.n << "," << v.reports.size() << ","
           << (v.obstructed ? "true" : "false") << "," << v.threshold_2m_plus_1 << "\n";
    return os.str();
}

std::string obstruct_text(const ObstructReport& r) {
    std::ostringstream os;
    os << "companion: " << render(r.companion) << "\n";
    os << "family:    " << render(r.family) << "\n";
    os << "copies:    n = " << r.n << "\n";
    for (const Verdict& v : r.verdicts) {
        os << "prime " << v.prime << ": " << v.reports.size() << " metabolizer"
           << (v.reports.size() == 1 ? "" : "s") << ", obstructed " << bool_word(v.obstructed)
           << ", threshold 2m+1 = " << v.threshold_2m_plus_1
           << (v.prime > v.threshold_2m_plus_1 ? " (k above threshold)" : " (k at or below threshold)");
        if (!v.exhaustive) os << ", SAMPLED (non-exhaustive)";
        os << "  [" << v.seconds << " s]\n";
        size_t shown = 0;
        for (const MetabolizerReport& mr : v.reports) {
            if (++shown > 64) {
                os << "  ... (" << v.reports.size() - 64 << " more)\n";
                break;
            }
            os << "  M" << shown << " basis";
            for (const auto& row : mr.m.basis) os << " " << vec_str(row);
            if (mr.cert)
                os << "  certificate " << vec_str(mr.cert->element) << " dbar "
                   << mr.cert->dbar.str();
            else
                os << "  all dbar vanish";
            os << (mr.meets_diagonal ? "  [meets diagonal]" : "") << "\n";
        }
    }
    os << "not slice: " << bool_word(r.not_slice) << "\n";
    return os.str();
}

ordered_json jump_json(const JumpFunction& f) {
    ordered_json a = ordered_json::array();
    for (const auto& [theta, j] : f.at)
        a.push_back(ordered_json{{"theta", theta.str()}, {"jump", j}});
    return a;
}

ordered_json independence_json(const IndependenceResult& r) {
    ordered_json j;
    ordered_json rel = ordered_json::array();
    for (const RelTerm& t : r.terms)
        rel.push_back(ordered_json{{"mult", t.mult}, {"term", render_term(t)}});
    j["relation"] = rel;
    j["companion"] = render(r.companion);
    j["threshold"] = ordered_json{{"2m+1", 2 * r.m_of_companion + 1}};
    ordered_json probes = ordered_json::array();
    for (const ProbeResult& p : r.probes)
        probes.push_back(ordered_json{{"k", p.k},
                                      {"theta", p.theta.str()},
                                      {"n", p.n},
                                      {"m", p.m},
                                      {"total", p.total},
                                      {"forces_n_eq_minus_m", p.forces_opposite}});
    j["probes"] = probes;
    j["signature_obstructed"] = r.signature_nonzero;
    ordered_json resid = ordered_json::array();
    for (const auto& [k, m] : r.residual)
        resid.push_back(ordered_json{{"k", k}, {"copies", m < 0 ? -m : m}});
    j["residual"] = resid;
    ordered_json vs = ordered_json::array();
    for (const Verdict& v : r.verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = vs;
    j["independent"] = r.independent;
    return j;
}

std::string independence_csv(const IndependenceResult& r) {
    std::ostringstream os;
    os << "k,theta,n,m,total,forces_n_eq_minus_m\n";
    for (const ProbeResult& p : r.probes)
        os << p.k << "," << p.theta.str() << "," << p.n << "," << p.m << "," << p.total << ","
           << (p.forces_opposite ? "true" : "false") << "\n";
    os << "independent," << (r.independent ? "true" : "false") << ",,,,\n";
    return os.str();
}

std::string independence_text(const IndependenceResult& r) {
    std::ostringstream os;
    os << "relation:";
    if (r.terms.empty()) os << " (empty)";
    for (size_t i = 0; i < r.terms.size(); ++i) {
        const RelTerm& t = r.terms[i];
        long long a = t.mult < 0 ? -t.mult : t.mult;
        os << " " << (t.mult < 0 ? "-" : (i ? "+" : "")) << " ";
        if (a != 1) os << a << "*";
        os << render_term(t);
    }
    os << "\ncompanion: " << render(r.companion) << "  (threshold 2m+1 = "
       << 2 * r.m_of_companion + 1 << ")\n";
    for (const ProbeResult& p : r.probes) {
        os << "probe k=" << p.k << " theta=" << p.theta.str() << ": n=" << p.n << " m=" << p.m
           << " total jump = " << p.total;
        if (p.total != 0)
            os << "  -> nonzero, not slice\n";
        else
            os << "  -> zero, forces n = -m\n";
    }
    if (r.terms.empty()) {
        os << "empty relation: vacuously slice, nothing to certify\n";
    } else if (r.signature_nonzero) {
        os << "signature jumps already certify the relation is not slice\n";
    } else {
        if (r.residual.empty()) {
            os << "all multiplicities vanish; nothing to certify\n";
        } else {
            os << "residual dispatched to the obstruction engine:\n";
            check(r.verdicts.size() == r.residual.size(), "verdict/residual mismatch");
            for (size_t i = 0; i < r.residual.size(); ++i) {
                const Verdict& v = r.verdicts[i];
                os << "  k=" << r.residual[i].first << " copies="
                   << (r.residual[i].second < 0 ? -r.residual[i].second : r.residual[i].second)
                   << ": obstructed " << bool_word(v.obstructed) << "  [" << v.seconds << " s]\n";
            }
        }
    }
    os << "independent: " << bool_word(r.independent) << "\n";
    return os.str();
}

} // namespace concord
