#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "speh/half_int.hpp"

namespace speh {

/// Finite multiset over (1/2)Z with strictly positive multiplicities.
///
/// Used both for pole multisets (location w0 -> order) and for multisets of
/// |det| exponents in a cuspidal support.
class HalfIntMultiset {
public:
    using map_type = std::map<HalfInt, int>;

    HalfIntMultiset() = default;
    HalfIntMultiset(std::initializer_list<std::pair<const HalfInt, int>> init) {
        for (auto [k, m] : init) add(k, m);
    }

    void add(HalfInt key, int multiplicity = 1) {
        if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
        if (multiplicity == 0) return;
        entries_[key] += multiplicity;
    }

    int count(HalfInt key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t distinct() const { return entries_.size(); }
    long long total() const {
        long long t = 0;
        for (auto& [_, m] : entries_) t += m;
        return t;
    }

    const map_type& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Pointwise minimum.
    friend HalfIntMultiset intersect(const HalfIntMultiset& x, const HalfIntMultiset& y) {
        HalfIntMultiset out;
        for (auto [k, m] : x.entries_) out.add(k, std::min(m, y.count(k)));
        return out;
    }

    /// x(k) >= y(k) for every k.
    friend bool dominates(const HalfIntMultiset& x, const HalfIntMultiset& y) {
        return std::all_of(y.begin(), y.end(), [&](const auto& e) { return x.count(e.first) >= e.second; });
    }

    HalfIntMultiset negated() const {
        HalfIntMultiset out;
        for (auto [k, m] : entries_) out.add(-k, m);
        return out;
    }

    friend bool operator==(const HalfIntMultiset&, const HalfIntMultiset&) = default;

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto [k, m] : entries_) {
            if (!first) s += ", ";
            first = false;
            s += k.to_string() + ":" + std::to_string(m);
        }
        return s + "}";
    }

private:
    map_type entries_;
};

using PoleMultiset = HalfIntMultiset;

/// Raised by LFactorProduct::evaluate when a stored pole sits on the
/// evaluation point.
class EvaluationAtPole : public std::domain_error {
public:
    EvaluationAtPole(HalfInt shift, long double w)
        : std::domain_error("evaluation at pole: factor L(w+" + shift.to_string() + ") at w=" + format(w)),
          shift_(shift) {}
    HalfInt shift() const { return shift_; }

private:
    static std::string format(long double w) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17Lg", w);
        return buf;
    }
    HalfInt shift_;
};

/// Factored product prod_n L(w+n)^{e_n} with L(x) = (1 - q^{-x})^{-1} and q a
/// formal parameter.
///
/// Factors with distinct shifts are coprime, so the canonical form is just the
/// map n -> e_n with zero exponents dropped; equality is map equality. A pair
/// (n, e) with e > 0 is a pole of order e at w = -n, with e < 0 a zero.
class LFactorProduct {
public:
    using map_type = std::map<HalfInt, int>;

    LFactorProduct() = default;
    LFactorProduct(std::initializer_list<std::pair<const HalfInt, int>> init) {
        for (auto [n, e] : init) multiply_factor(n, e);
    }

    /// The single factor L(w+shift)^exponent.
    static LFactorProduct factor(HalfInt shift, int exponent = 1) {
        LFactorProduct p;
        p.multiply_factor(shift, exponent);
        return p;
    }

    void multiply_factor(HalfInt shift, int exponent) {
        if (exponent == 0) return;
        auto [it, inserted] = factors_.try_emplace(shift, exponent);
        if (!inserted && (it->second += exponent) == 0) factors_.erase(it);
    }

    int exponent(HalfInt shift) const {
        auto it = factors_.find(shift);
        return it == factors_.end() ? 0 : it->second;
    }

    const map_type& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    auto begin() const { return factors_.begin(); }
    auto end() const { return factors_.end(); }

    LFactorProduct& operator*=(const LFactorProduct& y) {
        for (auto [n, e] : y.factors_) multiply_factor(n, e);
        return *this;
    }
    LFactorProduct& operator/=(const LFactorProduct& y) {
        for (auto [n, e] : y.factors_) multiply_factor(n, -e);
        return *this;
    }
    friend LFactorProduct operator*(LFactorProduct x, const LFactorProduct& y) { return x *= y; }
    friend LFactorProduct operator/(LFactorProduct x, const LFactorProduct& y) { return x /= y; }

    LFactorProduct inverse() const { return LFactorProduct{} / *this; }

    /// Substitute w -> w + delta, i.e. every shift n becomes n + delta.
    LFactorProduct shifted(HalfInt delta) const {
        LFactorProduct out;
        for (auto [n, e] : factors_) out.factors_.emplace(n + delta, e);
        return out;
    }

    friend bool operator==(const LFactorProduct&, const LFactorProduct&) = default;

    /// Positive-exponent part re-indexed by pole location w0 = -n.
    PoleMultiset pole_part() const {
        PoleMultiset out;
        for (auto [n, e] : factors_)
            if (e > 0) out.add(-n, e);
        return out;
    }

    /// Zero locations w0 = -n of the negative-exponent part.
    PoleMultiset zero_part() const {
        PoleMultiset out;
        for (auto [n, e] : factors_)
            if (e < 0) out.add(-n, -e);
        return out;
    }

    /// prod (1 - q^{-(w+n)})^{-e_n}. Numeric cross-check only.
    long double evaluate(long double q, long double w) const {
        if (!(q > 1.0L)) throw std::invalid_argument("q must be > 1");
        long double value = 1.0L;
        for (auto [n, e] : factors_) {
            long double x = w + n.to_long_double();
            if (e > 0 && x == 0.0L) throw EvaluationAtPole(n, w);
            long double base = 1.0L - std::pow(q, -x);
            value *= std::pow(base, static_cast<long double>(-e));
        }
        return value;
    }

    /// "L(w)*L(w+1/2)^2/(L(w+1)*L(w+3))"; "1" for the empty product.
    std::string to_string() const {
        std::string num, den;
        int den_count = 0;
        for (auto [n, e] : factors_) {
            std::string& target = e > 0 ? num : den;
            if (!target.empty()) target += "*";
            target += render_factor(n, e > 0 ? e : -e);
            if (e < 0) ++den_count;
        }
        if (num.empty()) num = "1";
        if (den.empty()) return num;
        return num + "/" + (den_count > 1 ? "(" + den + ")" : den);
    }

    static std::string render_factor(HalfInt shift, int exponent, std::string_view variable = "w") {
        std::string s = "L(" + std::string(variable);
        if (shift > HalfInt(0))
            s += "+" + shift.to_string();
        else if (shift < HalfInt(0))
            s += shift.to_string();
        s += ")";
        if (exponent != 1) s += "^" + std::to_string(exponent);
        return s;
    }

private:
    map_type factors_;
};

inline PoleMultiset pole_part(const LFactorProduct& x) { return x.pole_part(); }

/// Location-wise minimum of the two pole parts: the poles shared by x and y,
/// i.e. the vanishing factors of gcd(x^{-1}, y^{-1}).
inline PoleMultiset common_pole_part(const LFactorProduct& x, const LFactorProduct& y) {
    return intersect(x.pole_part(), y.pole_part());
}

}  // namespace speh
