#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "speh/lfactor.hpp"
#include "speh/model.hpp"

namespace speh {

/// prod_{j in [|c-d|/2, (c+d-2)/2]} prod_{k in [|a-b|/2, (a+b-2)/2]} L(w - j + k).
inline LFactorProduct alpha(const InductionProblem& p) {
    LFactorProduct out;
    for (HalfInt j : pair_range(p.c, p.d))
        for (HalfInt k : pair_range(p.a, p.b)) out.multiply_factor(k - j, 1);
    return out;
}

/// prod_j prod_k L(w + j + k + 1). Symmetric in (a,b), in (c,d), and under
/// (a,b) <-> (c,d).
inline LFactorProduct beta(const InductionProblem& p) {
    LFactorProduct out;
    for (HalfInt j : pair_range(p.c, p.d))
        for (HalfInt k : pair_range(p.a, p.b)) out.multiply_factor(j + k + HalfInt(1), 1);
    return out;
}

inline LFactorProduct gamma(const InductionProblem& p) { return alpha(p) / beta(p); }

/// Product of the rank-one factors L(w+e1-e2)/L(w+e1-e2+1) over every pair of
/// the two cuspidal supports.
///
/// Agrees with gamma() only when a = b = 1: the cuspidal pair distribution has
/// mass (ca)(db) while gamma needs cd*min(a,b).
inline LFactorProduct gamma_rank_one_oracle(const InductionProblem& p) {
    LFactorProduct out;
    for (const RankOneFactor& f : rank_one_factors(p)) {
        HalfInt n = f.e1 - f.e2;
        out.multiply_factor(n, 1);
        out.multiply_factor(n + HalfInt(1), -1);
    }
    return out;
}

/// Telescoping along the Speh direction only: rank-one pieces
/// tau_a|det|^{j1} (x) tau_b|det|^{j2} for j1 in seg(c), j2 in seg(d), each
/// carrying L(x, tau_a x tau_b^vee) = prod_k L(x + k).
inline LFactorProduct gamma_ladder_oracle(const InductionProblem& p) {
    LFactorProduct out;
    for (HalfInt j1 : segment(p.c))
        for (HalfInt j2 : segment(p.d))
            for (HalfInt k : pair_range(p.a, p.b)) {
                HalfInt n = j1 - j2 + k;
                out.multiply_factor(n, 1);
                out.multiply_factor(n + HalfInt(1), -1);
            }
    return out;
}

class NotSelfAssociate : public std::invalid_argument {
public:
    NotSelfAssociate() : std::invalid_argument("local coefficient requires c = d") {}
};

/// C_psi(s) = beta(-s) / alpha(s) for c = d.
///
/// beta(-s) is kept as a separate "mirrored" product: a stored (n, e) there
/// stands for L(-w + n)^e, with a pole of order e at w = n.
struct LocalCoefficient {
    LFactorProduct mirrored;     ///< beta shifts, read as L(-w+n)
    LFactorProduct denominator;  ///< alpha(s)

    /// Net order at each w: positive for poles, negative for zeros.
    std::map<HalfInt, int> net_orders() const {
        std::map<HalfInt, int> out;
        for (auto [n, e] : mirrored) out[n] += e;
        for (auto [n, e] : denominator) out[-n] -= e;
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }
    PoleMultiset poles() const {
        PoleMultiset out;
        for (auto [w, e] : net_orders())
            if (e > 0) out.add(w, e);
        return out;
    }
    PoleMultiset zeros() const {
        PoleMultiset out;
        for (auto [w, e] : net_orders())
            if (e < 0) out.add(w, -e);
        return out;
    }
};

inline LocalCoefficient c_psi(const InductionProblem& p) {
    if (p.c != p.d) throw NotSelfAssociate();
    return {beta(p), alpha(p)};
}

/// Which factor is unfolded into its |det| twists when matching alpha across
/// the decomposition. Right: rho_d(tau_b) over j2 in seg(b) (used when a >= b).
/// Left: rho_c(tau_a) over j1 in seg(a).
enum class DecomposedSide { right, left };

inline DecomposedSide natural_side(const InductionProblem& p) {
    return p.a >= p.b ? DecomposedSide::right : DecomposedSide::left;
}

/// Twist index range of the unfolded factor.
inline std::vector<HalfInt> decomposition_indices(const InductionProblem& p, DecomposedSide side) {
    return segment(side == DecomposedSide::right ? p.b : p.a);
}

namespace detail {

inline bool on_segment(HalfInt x, int length) {
    HalfInt top = HalfInt::half(length - 1);
    return x <= top && x >= -top && (x - top).is_integer();
}

inline InductionProblem sub_problem(const InductionProblem& p, DecomposedSide side) {
    return side == DecomposedSide::right ? InductionProblem{p.a, 1, p.c, p.d, p.tau_rank}
                                         : InductionProblem{1, p.b, p.c, p.d, p.tau_rank};
}

// s1 - s2 moves by -j2 when the right factor is twisted, by +j1 for the left.
inline HalfInt sub_shift(DecomposedSide side, HalfInt index) {
    return side == DecomposedSide::right ? -index : index;
}

}  // namespace detail

/// alpha of rho_c(tau_a) (x) rho_d(tau)|det|^{j2}: shifts (a-1)/2 - j2 - j.
inline LFactorProduct alpha_factor_in_decomposition(const InductionProblem& p, HalfInt j2) {
    if (!detail::on_segment(j2, p.b)) throw std::invalid_argument("j2 is not in segment_exponents(b)");
    return alpha(detail::sub_problem(p, DecomposedSide::right)).shifted(-j2);
}

/// alpha of rho_c(tau)|det|^{j1} (x) rho_d(tau_b): shifts (b-1)/2 + j1 - j.
inline LFactorProduct alpha_factor_in_left_decomposition(const InductionProblem& p, HalfInt j1) {
    if (!detail::on_segment(j1, p.a)) throw std::invalid_argument("j1 is not in segment_exponents(a)");
    return alpha(detail::sub_problem(p, DecomposedSide::left)).shifted(j1);
}

inline LFactorProduct alpha_factor(const InductionProblem& p, DecomposedSide side, HalfInt index) {
    return side == DecomposedSide::right ? alpha_factor_in_decomposition(p, index)
                                         : alpha_factor_in_left_decomposition(p, index);
}

inline LFactorProduct beta_factor(const InductionProblem& p, DecomposedSide side, HalfInt index) {
    if (!detail::on_segment(index, side == DecomposedSide::right ? p.b : p.a))
        throw std::invalid_argument("decomposition index out of segment");
    return beta(detail::sub_problem(p, side)).shifted(detail::sub_shift(side, index));
}

/// prod over the unfolded twists of the sub-problem alphas.
inline LFactorProduct alpha_decomposition_product(const InductionProblem& p, DecomposedSide side) {
    LFactorProduct out;
    for (HalfInt t : decomposition_indices(p, side)) out *= alpha_factor(p, side, t);
    return out;
}

inline bool alpha_matches(const InductionProblem& p) {
    return alpha_decomposition_product(p, natural_side(p)) == alpha(p);
}

}  // namespace speh
