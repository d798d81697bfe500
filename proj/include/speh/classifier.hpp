#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "speh/lfactor.hpp"
#include "speh/model.hpp"
#include "speh/normalization.hpp"

namespace speh {

/// Which criterion certifies reducibility at a point, in priority order.
enum class Tier {
    gcd_trivial_i,   ///< alpha has no pole there
    gcd_trivial_ii,  ///< the dual alpha has no pole there
    degree_iii,      ///< beta order exceeds alpha order
    degree_iv,       ///< beta order exceeds dual alpha order
    theorem_only,    ///< only the unconditional reducibility theorem applies
};

inline std::string_view to_string(Tier t) {
    switch (t) {
        case Tier::gcd_trivial_i: return "GCD_TRIVIAL_I";
        case Tier::gcd_trivial_ii: return "GCD_TRIVIAL_II";
        case Tier::degree_iii: return "DEGREE_III";
        case Tier::degree_iv: return "DEGREE_IV";
        case Tier::theorem_only: return "THEOREM_ONLY";
    }
    return "?";
}

inline Tier parse_tier(std::string_view s) {
    for (Tier t : {Tier::gcd_trivial_i, Tier::gcd_trivial_ii, Tier::degree_iii, Tier::degree_iv, Tier::theorem_only})
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown tier: " + std::string(s));
}

struct PointVerdict {
    HalfInt point;  ///< w0 = 2 s0
    int beta_order = 0;
    int alpha_order = 0;
    int dual_alpha_order = 0;
    bool reducible = false;
    Tier tier = Tier::theorem_only;

    friend bool operator==(const PointVerdict&, const PointVerdict&) = default;
};

/// Poles of beta(s) beta(-s) in w: the beta pole part together with its mirror.
inline PoleMultiset candidate_points(const InductionProblem& p) {
    PoleMultiset poles = pole_part(beta(p));
    PoleMultiset out = poles;
    for (auto [w, m] : poles.negated()) out.add(w, m);
    return out;
}

inline bool coprime_bruteforce(const InductionProblem& p) { return common_pole_part(alpha(p), beta(p)).empty(); }

/// |c - d| >= min(a - 1, b - 1).
inline bool coprime_closed_form(const InductionProblem& p) {
    return std::abs(p.c - p.d) >= std::min(p.a - 1, p.b - 1);
}

inline bool dual_coprime_bruteforce(const InductionProblem& p) {
    return common_pole_part(alpha(dual(p)), beta(p)).empty();
}

/// |a - b| >= min(c - 1, d - 1).
inline bool dual_coprime_closed_form(const InductionProblem& p) {
    return std::abs(p.a - p.b) >= std::min(p.c - 1, p.d - 1);
}

inline Tier assign_tier(int beta_order, int alpha_order, int dual_alpha_order) {
    if (alpha_order == 0) return Tier::gcd_trivial_i;
    if (dual_alpha_order == 0) return Tier::gcd_trivial_ii;
    if (beta_order > alpha_order) return Tier::degree_iii;
    if (beta_order > dual_alpha_order) return Tier::degree_iv;
    return Tier::theorem_only;
}

/// One verdict per candidate point, sorted by w. Tiers are decided at the
/// negative point w0 and copied onto its mirror -w0, whose orders are the raw
/// orders at -w0 (beta_order there counts beta(-s)).
inline std::vector<PointVerdict> classify(const InductionProblem& p) {
    const PoleMultiset beta_poles = pole_part(beta(p));
    const PoleMultiset alpha_poles = pole_part(alpha(p));
    const PoleMultiset dual_alpha_poles = pole_part(alpha(dual(p)));

    std::vector<PointVerdict> out;
    for (auto [w0, order] : beta_poles) {
        PointVerdict v{w0, order, alpha_poles.count(w0), dual_alpha_poles.count(w0), order > 0, Tier::theorem_only};
        v.tier = assign_tier(v.beta_order, v.alpha_order, v.dual_alpha_order);
        PointVerdict mirror{-w0, order, alpha_poles.count(-w0), dual_alpha_poles.count(-w0), v.reducible, v.tier};
        out.push_back(v);
        out.push_back(mirror);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.point < y.point; });
    return out;
}

inline std::set<HalfInt> exceptional_points(const InductionProblem& p) {
    std::set<HalfInt> out;
    for (const PointVerdict& v : classify(p))
        if (v.tier == Tier::theorem_only) out.insert(v.point);
    return out;
}

enum class Which { alpha, beta };

inline std::string_view to_string(Which w) { return w == Which::alpha ? "alpha" : "beta"; }

/// Pole locations laid out by (j, k): rows j ascending, columns k ascending.
/// Entry is j - k for alpha and -(j + k + 1) for beta; flagged entries sit on
/// a common pole of alpha and beta.
struct PoleMatrix {
    struct Entry {
        HalfInt value;
        bool flagged = false;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    Which which = Which::alpha;
    std::vector<HalfInt> rows;
    std::vector<HalfInt> cols;
    std::vector<std::vector<Entry>> entries;

    std::string to_text() const {
        std::vector<std::vector<std::string>> cells;
        std::size_t width = 0;
        for (const auto& row : entries) {
            auto& out = cells.emplace_back();
            for (const Entry& e : row) {
                out.push_back(e.flagged ? "*" + e.value.to_string() + "*" : e.value.to_string());
                width = std::max(width, out.back().size());
            }
        }
        std::string s;
        for (const auto& row : cells) {
            s += "[";
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) s += " ";
                s += std::string(width - row[i].size(), ' ') + row[i];
            }
            s += "]\n";
        }
        return s;
    }

    std::string to_latex() const {
        auto latex = [](HalfInt h) {
            if (h.is_integer()) return h.to_string();
            std::int64_t n = h.doubled();
            return std::string(n < 0 ? "-" : "") + "\\frac{" + std::to_string(std::llabs(n)) + "}{2}";
        };
        std::size_t ncols = cols.size();
        std::string s = "\\left[\\begin{array}{" + std::string(ncols, 'c') + "}\n";
        for (std::size_t r = 0; r < entries.size(); ++r) {
            for (std::size_t i = 0; i < entries[r].size(); ++i) {
                if (i) s += " & ";
                const Entry& e = entries[r][i];
                s += e.flagged ? "\\mathbf{" + latex(e.value) + "}" : latex(e.value);
            }
            s += r + 1 < entries.size() ? " \\\\\n" : "\n";
        }
        s += "\\end{array}\\right]_{\\" + std::string(to_string(which)) + "}\n";
        return s;
    }
};

inline PoleMatrix pole_matrix(const InductionProblem& p, Which which) {
    const PoleMultiset common = common_pole_part(alpha(p), beta(p));
    PoleMatrix m;
    m.which = which;
    m.rows = pair_range(p.c, p.d);
    m.cols = pair_range(p.a, p.b);
    for (HalfInt j : m.rows) {
        auto& row = m.entries.emplace_back();
        for (HalfInt k : m.cols) {
            HalfInt v = which == Which::alpha ? j - k : -(j + k + HalfInt(1));
            row.push_back({v, common.count(v) > 0});
        }
    }
    return m;
}

}  // namespace speh
