#include "concord/knot.hpp"

#include <numeric>

namespace concord {

KnotPtr make_unknot() {
    static const KnotPtr u = std::make_shared<KnotExpr>();
    return u;
}

static void validate_torus(int p, int q) {
    require(p >= 2 && q >= 2, "torus indices must both be >= 2, got T(" +
                                  std::to_string(p) + "," + std::to_string(q) + ")");
    require(std::gcd(p, q) == 1, "torus indices must be coprime, got T(" +
                                     std::to_string(p) + "," + std::to_string(q) + ")");
}

KnotPtr make_torus(int p, int q) {
    validate_torus(p, q);
    auto e = std::make_shared<KnotExpr>();
    e->kind = KnotExpr::Torus;
    e->p = p;
    e->q = q;
    return e;
}

KnotPtr make_cable(int p, int q, KnotPtr companion) {
    require(p >= 2, "cable requires p >= 2, got C(" + std::to_string(p) + "," + std::to_string(q) + "; .)");
    require(q >= 1, "cable requires q >= 1, got C(" + std::to_string(p) + "," + std::to_string(q) + "; .)");
    require(std::gcd(p, q) == 1, "cable indices must be coprime, got C(" +
                                     std::to_string(p) + "," + std::to_string(q) + "; .)");
    auto e = std::make_shared<KnotExpr>();
    e->kind = KnotExpr::Cable;
    e->p = p;
    e->q = q;
    e->child = std::move(companion);
    return e;
}

static KnotPtr wrap(KnotExpr::Kind kind, KnotPtr child) {
    auto e = std::make_shared<KnotExpr>();
    e->kind = kind;
    e->child = std::move(child);
    return e;
}

KnotPtr make_mirror(KnotPtr k) { return wrap(KnotExpr::Mirror, std::move(k)); }
KnotPtr make_reverse(KnotPtr k) { return wrap(KnotExpr::Reverse, std::move(k)); }

KnotPtr make_sum(std::vector<KnotPtr> kids) {
    require(kids.size() >= 2, "connected sum needs at least 2 summands");
    auto e = std::make_shared<KnotExpr>();
    e->kind = KnotExpr::Sum;
    e->kids = std::move(kids);
    return e;
}

// ---- parser ----

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& expected) const {
        throw input_error("parse error at position " + std::to_string(pos) + ": expected " +
                          expected +
                          (pos < s.size() ? std::string(", got '") + s[pos] + "'" : ", got end of input"));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("'") + c + "'");
        ++pos;
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == digits) { pos = start; fail("an integer"); }
        long long v = std::stoll(s.substr(start, pos - start));
        if (v == 0) { pos = start; fail("a nonzero integer"); }
        if (v > 1000000 || v < -1000000) { pos = start; fail("an index of reasonable size"); }
        return (int)v;
    }

    KnotPtr expr() {
        std::vector<KnotPtr> kids{term()};
        while (peek() == '#') {
            ++pos;
            kids.push_back(term());
        }
        return kids.size() == 1 ? kids[0] : make_sum(std::move(kids));
    }

    KnotPtr term() {
        if (peek() == '-') {
            ++pos;
            return make_mirror(make_reverse(term()));
        }
        KnotPtr a = atom();
        if (peek() == 'r') {
            ++pos;
            a = make_reverse(a);
        }
        return a;
    }

    KnotPtr atom() {
        char c = peek();
        switch (c) {
        case 'U':
            ++pos;
            return make_unknot();
        case 'T': {
            ++pos;
            expect('(');
            int p = integer();
            expect(',');
            int q = integer();
            expect(')');
            return make_torus(p, q);
        }
        case 'C': {
            ++pos;
            expect('(');
            int p = integer();
            expect(',');
            int q = integer();
            expect(';');
            KnotPtr companion = expr();
            expect(')');
            return make_cable(p, q, std::move(companion));
        }
        case '(': {
            ++pos;
            KnotPtr e = expr();
            expect(')');
            return e;
        }
        default:
            fail("'U', 'T', 'C', '-' or '('");
        }
    }
};

} // namespace

KnotPtr parse_knot(const std::string& text) {
    Parser p(text);
    KnotPtr e = p.expr();
    if (p.peek() != '\0') p.fail("end of input or '#'");
    return e;
}

// ---- canonical form ----

static KnotPtr apply_reverse(const KnotPtr& e);
static KnotPtr apply_mirror(const KnotPtr& e);

// e is already normalized (Reverse-free); push one Reverse through it.
// The reverse of a cable is the cable of the reverse; torus knots and the
// unknot absorb it.
static KnotPtr apply_reverse(const KnotPtr& e) {
    switch (e->kind) {
    case KnotExpr::Unknot:
    case KnotExpr::Torus:
        return e;
    case KnotExpr::Cable:
        return make_cable(e->p, e->q, apply_reverse(e->child));
    case KnotExpr::Mirror:
        return make_mirror(apply_reverse(e->child));
    case KnotExpr::Sum: {
        std::vector<KnotPtr> kids;
        for (auto& k : e->kids) kids.push_back(apply_reverse(k));
        return make_sum(std::move(kids));
    }
    case KnotExpr::Reverse:
        return e->child; // unreachable on normalized input, kept for safety
    }
    return e;
}

// e is already normalized; apply one Mirror.
static KnotPtr apply_mirror(const KnotPtr& e) {
    switch (e->kind) {
    case KnotExpr::Unknot:
        return e;
    case KnotExpr::Mirror:
        return e->child;
    case KnotExpr::Sum: {
        std::vector<KnotPtr> kids;
        for (auto& k : e->kids) kids.push_back(apply_mirror(k));
        return make_sum(std::move(kids));
    }
    default:
        return make_mirror(e);
    }
}

KnotPtr normalize(const KnotPtr& e) {
    switch (e->kind) {
    case KnotExpr::Unknot:
        return e;
    case KnotExpr::Torus:
        return e->p <= e->q ? e : make_torus(e->q, e->p);
    case KnotExpr::Cable: {
        KnotPtr c = normalize(e->child);
        if (c->kind == KnotExpr::Unknot) {
            if (e->q == 1) return make_unknot(); // T(p,1)
            return e->p <= e->q ? make_torus(e->p, e->q) : make_torus(e->q, e->p);
        }
        return make_cable(e->p, e->q, std::move(c));
    }
    case KnotExpr::Mirror:
        return apply_mirror(normalize(e->child));
    case KnotExpr::Reverse:
        return apply_reverse(normalize(e->child));
    case KnotExpr::Sum: {
        std::vector<KnotPtr> kids;
        for (auto& k : e->kids) {
            KnotPtr nk = normalize(k);
            if (nk->kind == KnotExpr::Unknot) continue;
            if (nk->kind == KnotExpr::Sum)
                kids.insert(kids.end(), nk->kids.begin(), nk->kids.end());
            else
                kids.push_back(std::move(nk));
        }
        if (kids.empty()) return make_unknot();
        if (kids.size() == 1) return kids[0];
        return make_sum(std::move(kids));
    }
    }
    return e;
}

bool equal(const KnotPtr& a, const KnotPtr& b) {
    if (a->kind != b->kind || a->p != b->p || a->q != b->q) return false;
    if ((a->child == nullptr) != (b->child == nullptr)) return false;
    if (a->child && !equal(a->child, b->child)) return false;
    if (a->kids.size() != b->kids.size()) return false;
    for (size_t i = 0; i < a->kids.size(); ++i)
        if (!equal(a->kids[i], b->kids[i])) return false;
    return true;
}

std::string render(const KnotPtr& e) {
    switch (e->kind) {
    case KnotExpr::Unknot:
        return "U";
    case KnotExpr::Torus:
        return "T(" + std::to_string(e->p) + "," + std::to_string(e->q) + ")";
    case KnotExpr::Cable:
        return "C(" + std::to_string(e->p) + "," + std::to_string(e->q) + "; " + render(e->child) + ")";
    case KnotExpr::Mirror: {
        std::string inner = render(e->child);
        if (e->child->kind == KnotExpr::Sum) inner = "(" + inner + ")";
        return "-" + inner;
    }
    case KnotExpr::Reverse: {
        std::string inner = render(e->child);
        if (e->child->kind == KnotExpr::Sum || e->child->kind == KnotExpr::Mirror ||
            e->child->kind == KnotExpr::Reverse)
            inner = "(" + inner + ")";
        return inner + "r";
    }
    case KnotExpr::Sum: {
        std::string out;
        for (auto& k : e->kids) {
            if (!out.empty()) out += " # ";
            std::string inner = render(k);
            if (k->kind == KnotExpr::Sum) inner = "(" + inner + ")";
            out += inner;
        }
        return out;
    }
    }
    return "U";
}

bool is_iterated_torus(const KnotPtr& e) {
    KnotPtr n = normalize(e);
    while (n->kind == KnotExpr::Cable) n = n->child;
    return n->kind == KnotExpr::Torus;
}

AlgebraicKnotWitness is_algebraic(const KnotPtr& e) {
    KnotPtr n = normalize(e);
    std::vector<std::pair<int, int>> chain; // outermost first while unwinding
    while (n->kind == KnotExpr::Cable) {
        chain.emplace_back(n->p, n->q);
        n = n->child;
    }
    if (n->kind != KnotExpr::Torus) {
        require(n->kind != KnotExpr::Unknot, "algebraic classification refused: unknot core");
        throw input_error("algebraic classification refused: expression contains " +
                          std::string(n->kind == KnotExpr::Sum ? "a connected sum" : "a mirror") +
                          "; only iterated torus knots are classified");
    }
    AlgebraicKnotWitness w;
    w.indices.emplace_back(n->p, n->q);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) w.indices.push_back(*it);
    w.flags.resize(w.indices.size());
    w.flags[0] = w.indices[0].first > 0 && w.indices[0].second > 0;
    for (size_t i = 1; i < w.indices.size(); ++i) {
        auto [pi, qi] = w.indices[i - 1];
        auto [pj, qj] = w.indices[i];
        w.flags[i] = pj > 0 && (long long)qj > (long long)pi * qi * pj;
    }
    w.valid = true;
    for (bool f : w.flags) w.valid = w.valid && f;
    return w;
}

} // namespace concord
