#pragma once
#include <map>
#include <string>
#include <vector>

#include "concord/errors.hpp"

namespace concord {

// Integer Laurent polynomial in one variable t. Zero coefficients are never
// stored, so the map's support is the mathematical support.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exp, long long coeff) {
        LaurentPoly p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }
    static LaurentPoly from_pairs(const std::vector<std::pair<int, long long>>& pairs);

    bool is_zero() const { return c_.empty(); }
    long long coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }
    int min_exp() const { check(!c_.empty(), "min_exp of zero polynomial"); return c_.begin()->first; }
    int max_exp() const { check(!c_.empty(), "max_exp of zero polynomial"); return c_.rbegin()->first; }
    size_t terms() const { return c_.size(); }

    long long eval_at_one() const;
    bool is_symmetric() const; // a_e == a_{-e} for all e

    LaurentPoly shifted(int by) const;           // multiply by t^by
    LaurentPoly inflated(int p) const;           // substitute t -> t^p
    LaurentPoly recentered() const;              // shift so max_exp == -min_exp; span must be even
    LaurentPoly normalized_sign() const;         // make leading coefficient positive

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    // Exact division: throws check_error if the remainder is nonzero or a
    // leading-coefficient division does not go through over the integers.
    static LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

    // Sorted [exponent, coefficient] pairs.
    std::vector<std::pair<int, long long>> pairs() const;
    std::string str() const;

  private:
    std::map<int, long long> c_;
    void trim();
};

} // namespace concord
