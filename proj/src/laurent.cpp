#include "concord/laurent.hpp"

#include "concord/rational.hpp"

namespace concord {

void LaurentPoly::trim() {
    for (auto it = c_.begin(); it != c_.end();)
        it = it->second == 0 ? c_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, long long>>& pairs) {
    LaurentPoly p;
    for (auto [e, c] : pairs) p.c_[e] += c;
    p.trim();
    return p;
}

long long LaurentPoly::eval_at_one() const {
    long long s = 0;
    for (auto [e, c] : c_) s += c;
    return s;
}

bool LaurentPoly::is_symmetric() const {
    for (auto [e, c] : c_)
        if (coeff(-e) != c) return false;
    return true;
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly p;
    for (auto [e, c] : c_) p.c_[e + by] = c;
    return p;
}

LaurentPoly LaurentPoly::inflated(int p) const {
    LaurentPoly r;
    for (auto [e, c] : c_) r.c_[e * p] = c;
    return r;
}

LaurentPoly LaurentPoly::recentered() const {
    check(!c_.empty(), "recenter of zero polynomial");
    int span = max_exp() + min_exp();
    check(span % 2 == 0, "recenter: odd total degree, no symmetric representative");
    return shifted(-span / 2);
}

LaurentPoly LaurentPoly::normalized_sign() const {
    check(!c_.empty(), "sign normalization of zero polynomial");
    if (c_.rbegin()->second > 0) return *this;
    LaurentPoly p;
    for (auto [e, c] : c_) p.c_[e] = -c;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto [e, c] : b.c_) r.c_[e] += c;
    r.trim();
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto [e, c] : b.c_) r.c_[e] -= c;
    r.trim();
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [ea, ca] : a.c_)
        for (auto [eb, cb] : b.c_) r.c_[ea + eb] += Rat::checked_mul(ca, cb);

    r.trim();
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    check(!den.is_zero(), "division by zero polynomial");
    LaurentPoly rem = num, quot;
    long long lead = den.c_.rbegin()->second;
    int lexp = den.max_exp();
    while (!rem.is_zero()) {
        long long rc = rem.c_.rbegin()->second;
        check(rc % lead == 0, "division not exact over the integers");
        int shift = rem.max_exp() - lexp;
        long long q = rc / lead;
        quot.c_[shift] += q;
        rem = rem - den.shifted(shift) * LaurentPoly::monomial(0, q);
        check(rem.is_zero() || rem.max_exp() < lexp + shift, "division failed to reduce degree");
    }
    quot.trim();
    return quot;
}

std::vector<std::pair<int, long long>> LaurentPoly::pairs() const {
    return {c_.begin(), c_.end()};
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, c] = *it;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) s += std::to_string(a);
        if (e != 0) {
            s += "t";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace concord
