#include "concord/signatures.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "concord/alexander.hpp"
#include "concord/errors.hpp"

namespace concord {

namespace {

const Rat kHalf(1, 2);

Rat frac_part(const Rat& r) {
    long long m = ((r.num % r.den) + r.den) % r.den;
    return Rat(m, r.den);
}

} // namespace

int stored_at(const JumpFunction& f, const Rat& theta) {
    auto it = f.at.find(theta);
    return it == f.at.end() ? 0 : it->second;
}

int rightward_at(const JumpFunction& f, const Rat& theta) {
    int s = stored_at(f, theta);
    return theta < kHalf ? 2 * s : -2 * s;
}

void check_symmetric(const JumpFunction& f) {
    for (const auto& [theta, j] : f.at) {
        check(Rat(0) < theta && theta < Rat(1), "jump point outside (0,1)");
        check(stored_at(f, Rat(1) - theta) == j, "jump function not symmetric at " + theta.str());
    }
}

JumpFunction negated(const JumpFunction& f) {
    JumpFunction out;
    for (const auto& [theta, j] : f.at) out.at[theta] = -j;
    return out;
}

JumpFunction added(const JumpFunction& a, const JumpFunction& b) {
    JumpFunction out = a;
    for (const auto& [theta, j] : b.at) {
        int v = stored_at(out, theta) + j;
        if (v == 0)
            out.at.erase(theta);
        else
            out.at[theta] = v;
    }
    return out;
}

JumpFunction scaled(const JumpFunction& f, long long c) {
    JumpFunction out;
    if (c == 0) return out;
    for (const auto& [theta, j] : f.at) out.at[theta] = (int)(c * j);
    return out;
}

long long signature_at_minus_one(const JumpFunction& f) {
    long long s = 0;
    for (const auto& [theta, j] : f.at)
        if (!(kHalf < theta)) s += j;
    return 2 * s;
}

JumpFunction torus_jump(int p, int q) {
    require(p >= 2 && q >= 2 && std::gcd(p, q) == 1,
            "torus indices must be coprime and at least 2");
    std::map<Rat, int> right;
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < q; ++j) {
            Rat v((long long)i * q + (long long)j * p, (long long)p * q);
            if (v < Rat(1))
                right[v] += 2;
            else
                right[v - Rat(1)] -= 2;
        }
    JumpFunction out;
    for (const auto& [theta, r] : right) {
        int s = theta < kHalf ? r / 2 : -r / 2;
        if (s != 0) out.at[theta] = s;
    }
    check_symmetric(out);
    return out;
}

JumpFunction cable_jump(const JumpFunction& base, int p, int q) {
    require(p >= 2 && q >= 1 && std::gcd(p, q) == 1,
            "cable indices must be coprime with p >= 2, q >= 1");
    JumpFunction tor;
    if (q >= 2) tor = torus_jump(p, q);
    std::set<Rat> candidates;
    for (const auto& [theta, j] : tor.at) candidates.insert(theta);
    for (const auto& [phi, j] : base.at)
        for (int t = 0; t < p; ++t)
            candidates.insert(Rat(phi.num + (long long)t * phi.den, (long long)p * phi.den));
    JumpFunction out;
    for (const Rat& theta : candidates) {
        int right = rightward_at(tor, theta);
        Rat pt = frac_part(Rat(Rat::checked_mul(theta.num, p), theta.den));
        if (!pt.is_zero()) right += rightward_at(base, pt);
        int s = theta < kHalf ? right / 2 : -right / 2;
        if (s != 0) out.at[theta] = s;
    }
    check_symmetric(out);
    return out;
}

namespace {

JumpFunction jump_rec(const KnotPtr& e) {
    switch (e->kind) {
        case KnotExpr::Unknot:
            return {};
        case KnotExpr::Torus:
            return torus_jump(e->p, e->q);
        case KnotExpr::Cable:
            return cable_jump(jump_rec(e->child), e->p, e->q);
        case KnotExpr::Mirror:
            return negated(jump_rec(e->child));
        case KnotExpr::Reverse:
            return jump_rec(e->child);
        case KnotExpr::Sum: {
            JumpFunction out;
            for (const KnotPtr& kid : e->kids) out = added(out, jump_rec(kid));
            return out;
        }
    }
    check(false, "unreachable knot kind");
    return {};
}

} // namespace

JumpFunction jump_of(const KnotPtr& e) { return jump_rec(normalize(e)); }

namespace {

struct RelParser {
    const std::string& s;
    size_t pos = 0;

    explicit RelParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("relation parse error at offset " + std::to_string(pos) + ": " + what);
    }
    void ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    long long uint_lit() {
        ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected a number");
        long long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 1000000) fail("number too large");
        }
        return v;
    }

    RelTerm sterm(int sign) {
        RelTerm t;
        t.mult = sign;
        ws();
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            t.mult = sign * uint_lit();
            expect('*');
            ws();
        }
        if (pos >= s.size() || (s[pos] != 'T' && s[pos] != 'K'))
            fail("expected 'T(2,k)' or 'K(2,k)'");
        t.cable = s[pos] == 'K';
        ++pos;
        expect('(');
        long long p = uint_lit();
        if (p != 2) fail("only (2,k) patterns are supported");
        expect(',');
        long long k = uint_lit();
        if (k < 3 || k % 2 == 0) fail("k must be odd and at least 3");
        t.k = (int)k;
        expect(')');
        return t;
    }

    std::vector<RelTerm> relation() {
        std::vector<RelTerm> out;
        ws();
        if (pos == s.size()) return out;
        int sign = eat('-') ? -1 : 1;
        out.push_back(sterm(sign));
        while (true) {
            ws();
            if (pos == s.size()) return out;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                fail("expected '+', '-' or end of relation");
            out.push_back(sterm(sign));
        }
    }
};

} // namespace

std::vector<RelTerm> parse_relation(const std::string& text) {
    return RelParser(text).relation();
}

std::string render_term(const RelTerm& t) {
    return (t.cable ? "K(2," : "T(2,") + std::to_string(t.k) + ")";
}

IndependenceResult independence_check(const std::vector<RelTerm>& relation,
                                      const KnotPtr& companion, int limit, int sample_budget,
                                      bool parallel) {
    IndependenceResult res;
    res.companion = normalize(companion);

    LaurentPoly delta = alexander_of(res.companion);
    std::string reason;
    auto form = is_lspace_form(delta, &reason);
    require(form.has_value(), "companion " + render(res.companion) +
                                  " does not have an L-space Alexander polynomial: " + reason);
    res.m_of_companion = form->m;
    const int threshold = 2 * form->m + 1;

    std::map<int, std::pair<long long, long long>> coalesced; // k -> (n, m)
    for (const RelTerm& t : relation) {
        auto& nm = coalesced[t.k];
        (t.cable ? nm.second : nm.first) += t.mult;
    }
    for (auto it = coalesced.begin(); it != coalesced.end();)
        it = it->second.first == 0 && it->second.second == 0 ? coalesced.erase(it) : std::next(it);
    if (coalesced.empty()) return res; // vacuously slice

    std::map<int, JumpFunction> jT, jK;
    JumpFunction base = jump_of(res.companion);
    for (const auto& [k, nm] : coalesced) {
        require(is_odd_prime(k), "k=" + std::to_string(k) + " must be an odd prime");
        require(k > threshold, "k=" + std::to_string(k) + " is not above the companion threshold " +
                                   std::to_string(threshold));
        jT[k] = torus_jump(2, k);
        jK[k] = cable_jump(base, 2, k);
        if (nm.first != 0) res.terms.push_back(RelTerm{nm.first, false, k});
        if (nm.second != 0) res.terms.push_back(RelTerm{nm.second, true, k});
    }

    for (const auto& [kl, nml] : coalesced) {
        ProbeResult pr;
        pr.k = kl;
        pr.theta = Rat(1, 2LL * kl);
        pr.n = nml.first;
        pr.m = nml.second;
        for (const auto& [ki, nmi] : coalesced) {
            int expected = ki == kl ? -1 : 0;
            int jt = stored_at(jT[ki], pr.theta);
            int jk = stored_at(jK[ki], pr.theta);
            require(jt == expected, "probe hypothesis fails: T(2," + std::to_string(ki) +
                                        ") jumps " + std::to_string(jt) + " at theta=" +
                                        pr.theta.str());
            require(jk == expected, "probe hypothesis fails: K(2," + std::to_string(ki) +
                                        ") jumps " + std::to_string(jk) + " at theta=" +
                                        pr.theta.str() + " (companion jump interferes)");
            pr.total += nmi.first * jt + nmi.second * jk;
        }
        check(pr.total == -(pr.n + pr.m), "probe total disagrees with -(n+m)");
        pr.forces_opposite = pr.total == 0;
        res.signature_nonzero = res.signature_nonzero || pr.total != 0;
        res.probes.push_back(pr);
    }

    if (res.signature_nonzero) {
        res.independent = true;
        return res;
    }

    for (const auto& [k, nm] : coalesced) {
        long long m = nm.second;
        if (m == 0) continue;
        res.residual.emplace_back(k, m);
        KnotPtr cab = make_cable(2, k, res.companion);
        KnotPtr tor = make_torus(2, k);
        KnotPtr fam = m > 0 ? make_sum({cab, make_mirror(tor)})
                            : make_sum({make_mirror(cab), tor});
        std::vector<Verdict> vs =
            obstruct(fam, (int)(m > 0 ? m : -m), limit, sample_budget, parallel);
        for (Verdict& v : vs) res.verdicts.push_back(std::move(v));
    }
    bool all = !res.verdicts.empty();
    for (const Verdict& v : res.verdicts) all = all && v.obstructed;
    res.independent = all;
    return res;
}

} // namespace concord
