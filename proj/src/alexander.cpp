#include "concord/alexander.hpp"

#include <numeric>

namespace concord {

static LaurentPoly tpow_minus_one(int n) {
    return LaurentPoly::monomial(n, 1) - LaurentPoly::one();
}

LaurentPoly torus_alexander(int p, int q) {
    require(p >= 2 && q >= 2, "torus_alexander needs p,q >= 2");
    require(std::gcd(p, q) == 1, "torus_alexander needs coprime indices");
    LaurentPoly num = tpow_minus_one(p * q) * tpow_minus_one(1);
    LaurentPoly den = tpow_minus_one(p) * tpow_minus_one(q);
    LaurentPoly d = LaurentPoly::divide_exact(num, den).recentered();
    check(d.eval_at_one() == 1, "torus Alexander polynomial not normalized at 1");
    check(d.max_exp() == (p - 1) * (q - 1) / 2, "torus Alexander degree mismatch");
    return d;
}

LaurentPoly cable_alexander(const LaurentPoly& delta, int p, int q) {
    require(std::gcd(p, q) == 1, "cable_alexander needs coprime indices");
    require(!delta.is_zero() && delta.is_symmetric() && delta.eval_at_one() == 1,
            "cable_alexander needs a symmetric companion polynomial with Delta(1)=1");
    LaurentPoly torus_part = q == 1 ? LaurentPoly::one() : torus_alexander(p, q);
    return (delta.inflated(p) * torus_part).recentered();
}

std::optional<LSpaceForm> is_lspace_form(const LaurentPoly& delta, std::string* reason) {
    auto refuse = [&](const std::string& why) -> std::optional<LSpaceForm> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    if (delta.is_zero()) return refuse("zero polynomial");
    auto pairs = delta.pairs();
    if (pairs.size() % 2 == 0) return refuse("even number of terms (need 2m+1)");
    long long expected = 1; // leading sign, walking downward from the top
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [e, c] = pairs[pairs.size() - 1 - i];
        if (c != expected)
            return refuse("coefficient at t^" + std::to_string(e) + " is " + std::to_string(c) +
                          ", expected " + std::to_string(expected) + " (signs must alternate +-1)");
        expected = -expected;
    }
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first != -pairs[pairs.size() - 1 - i].first)
            return refuse("support is not symmetric about 0");
    LSpaceForm f;
    for (auto [e, c] : pairs) f.exponents.push_back(e);
    f.genus = f.exponents.back();
    f.m = f.exponents.size() >= 2 ? f.exponents[f.exponents.size() - 1] - f.exponents[f.exponents.size() - 2]
                                  : 0;
    check(delta.eval_at_one() == 1, "alternating symmetric polynomial should evaluate to 1 at t=1");
    return f;
}

LaurentPoly alexander_of(const KnotPtr& expr) {
    switch (expr->kind) {
    case KnotExpr::Unknot:
        return LaurentPoly::one();
    case KnotExpr::Torus:
        return expr->p <= expr->q ? torus_alexander(expr->p, expr->q)
                                  : torus_alexander(expr->q, expr->p);
    case KnotExpr::Cable:
        return cable_alexander(alexander_of(expr->child), expr->p, expr->q);
    case KnotExpr::Mirror:
    case KnotExpr::Reverse:
        return alexander_of(expr->child);
    case KnotExpr::Sum: {
        LaurentPoly d = LaurentPoly::one();
        for (auto& k : expr->kids) d = (d * alexander_of(k)).recentered();
        return d;
    }
    }
    return LaurentPoly::one();
}

} // namespace concord
