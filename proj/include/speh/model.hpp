#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "speh/half_int.hpp"
#include "speh/lfactor.hpp"

namespace speh {

/// rho_c(tau_a)|det|^s x rho_d(tau_b)|det|^{-s} over a single supercuspidal
/// tau of GL_t. Only the rank t of tau is carried; nothing downstream depends
/// on tau beyond L(s, tau x tau^vee).
struct InductionProblem {
    int a = 1;
    int b = 1;
    int c = 1;
    int d = 1;
    int tau_rank = 1;

    InductionProblem() = default;
    InductionProblem(int a_, int b_, int c_, int d_, int tau_rank_ = 1)
        : a(a_), b(b_), c(c_), d(d_), tau_rank(tau_rank_) {
        if (a < 1 || b < 1 || c < 1 || d < 1 || tau_rank < 1)
            throw std::invalid_argument("parameters must be >= 1");
    }

    friend bool operator==(const InductionProblem&, const InductionProblem&) = default;

    std::string to_string() const {
        return "(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ", c=" + std::to_string(c) +
               ", d=" + std::to_string(d) + ")";
    }
};

using ExponentMultiset = HalfIntMultiset;

/// A rank-one piece tau|det|^{e1} (x) tau|det|^{e2}; its operator has at most
/// a simple pole, at w = e2 - e1.
struct RankOneFactor {
    HalfInt e1;
    HalfInt e2;

    HalfInt pole_location() const { return e2 - e1; }
    friend bool operator==(const RankOneFactor&, const RankOneFactor&) = default;
};

/// {(a-1)/2, (a-3)/2, ..., -(a-1)/2}, in descending order.
inline std::vector<HalfInt> segment(int a) {
    std::vector<HalfInt> out;
    out.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) out.push_back(HalfInt::half(a - 1 - 2 * i));
    return out;
}

inline ExponentMultiset segment_exponents(int a) {
    if (a < 1) throw std::invalid_argument("segment length must be >= 1");
    ExponentMultiset out;
    for (HalfInt e : segment(a)) out.add(e);
    return out;
}

/// Exponents j + k of the c x a ladder of rho_c(tau_a).
inline ExponentMultiset cuspidal_support(int c, int a) {
    if (c < 1 || a < 1) throw std::invalid_argument("ladder dimensions must be >= 1");
    ExponentMultiset out;
    for (HalfInt j : segment(c))
        for (HalfInt k : segment(a)) out.add(j + k);
    return out;
}

/// Zelevinsky-Aubert dual on this family: rho_c(tau_a) -> rho_a(tau_c).
inline InductionProblem dual(const InductionProblem& p) { return {p.c, p.d, p.a, p.b, p.tau_rank}; }

/// All pairs (e1, e2) over the two cuspidal supports, with multiplicity.
inline std::vector<RankOneFactor> rank_one_factors(const InductionProblem& p) {
    std::vector<HalfInt> left, right;
    for (auto [e, m] : cuspidal_support(p.c, p.a)) left.insert(left.end(), static_cast<std::size_t>(m), e);
    for (auto [e, m] : cuspidal_support(p.d, p.b)) right.insert(right.end(), static_cast<std::size_t>(m), e);
    std::vector<RankOneFactor> out;
    out.reserve(left.size() * right.size());
    for (auto it = left.rbegin(); it != left.rend(); ++it)
        for (HalfInt e2 : right) out.push_back({*it, e2});
    return out;
}

/// The index range |x-y|/2, ..., (x+y-2)/2 shared by all normalization factors.
inline std::vector<HalfInt> pair_range(int x, int y) {
    std::vector<HalfInt> out;
    for_each_step(HalfInt::half(std::abs(x - y)), HalfInt::half(x + y - 2), [&](HalfInt v) { out.push_back(v); });
    return out;
}

}  // namespace speh
