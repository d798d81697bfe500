#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "speh/lfactor.hpp"
#include "speh/model.hpp"
#include "speh/normalization.hpp"

namespace speh {

/// Half-open window [lo, hi) of possible pole locations; the admissible points
/// are lo, lo+1, ... below hi (so the lattice follows the parity of lo).
struct PoleWindow {
    HalfInt lo;
    HalfInt hi_exclusive;

    std::vector<HalfInt> admissible_points() const {
        std::vector<HalfInt> out;
        for (HalfInt x = lo; x < hi_exclusive; x += HalfInt(1)) out.push_back(x);
        return out;
    }
    bool admits(HalfInt x) const {
        return x >= lo && x < hi_exclusive && (x - lo).is_integer();
    }
    friend bool operator==(const PoleWindow&, const PoleWindow&) = default;
};

/// [shift - (c+d)/2, shift - |c-d|/2).
inline PoleWindow mw_pole_window(int c, int d, HalfInt shift) {
    return {shift - HalfInt::half(c + d), shift - HalfInt::half(std::abs(c - d))};
}

struct NamedCheck {
    std::string name;
    bool passed = false;
    friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

struct LedgerEntry {
    HalfInt j2;  ///< twist index of the unfolded factor
    PoleWindow window;
    HalfInt rank_one_floor;
    std::vector<HalfInt> alpha_pole_locations;
    std::vector<NamedCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
    }
    friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

enum class CertificateKind { supercuspidal, discrete };

struct HolomorphyCertificate {
    InductionProblem problem;
    CertificateKind kind = CertificateKind::discrete;
    DecomposedSide side = DecomposedSide::right;
    std::vector<LedgerEntry> entries;
    bool supercuspidal_distinctness = false;
    bool alpha_matching = false;
    bool verdict = false;

    /// Recomputes the conjunction from the stored checks.
    bool consistent() const {
        bool all = supercuspidal_distinctness && alpha_matching;
        for (const LedgerEntry& e : entries) all = all && e.passed();
        return all == verdict;
    }
    friend bool operator==(const HolomorphyCertificate&, const HolomorphyCertificate&) = default;
};

namespace detail {

inline std::vector<HalfInt> pole_locations(const LFactorProduct& x) {
    std::vector<HalfInt> out;
    for (auto [w, m] : x.pole_part()) out.insert(out.end(), static_cast<std::size_t>(m), w);
    return out;
}

inline void seal(HolomorphyCertificate& cert) {
    bool all = cert.supercuspidal_distinctness && cert.alpha_matching;
    for (const LedgerEntry& e : cert.entries) all = all && e.passed();
    cert.verdict = all;
}

}  // namespace detail

/// Replays the a = b = 1 argument: rho_d(tau) is unfolded into tau|det|^{j2},
/// each piece has the single candidate w0 = j2 - (c+1)/2, which must sit
/// strictly below every rank-one pole j2 - j1 and be pairwise distinct.
inline HolomorphyCertificate certify_supercuspidal(int c, int d) {
    HolomorphyCertificate cert;
    cert.problem = InductionProblem{1, 1, c, d};
    cert.kind = CertificateKind::supercuspidal;
    cert.side = DecomposedSide::right;

    const InductionProblem piece{1, 1, c, 1};
    const LFactorProduct piece_alpha = alpha(piece);
    const LFactorProduct piece_beta = beta(piece);
    const std::vector<HalfInt> inner = segment(c);

    std::set<HalfInt> seen;
    bool distinct = true;
    for (HalfInt j2 : segment(d)) {
        LedgerEntry e;
        e.j2 = j2;
        e.window = mw_pole_window(c, 1, j2);
        const HalfInt candidate = j2 - HalfInt::half(c + 1);
        e.rank_one_floor = j2 - inner.front();
        e.alpha_pole_locations = detail::pole_locations(piece_alpha.shifted(-j2));

        bool below = std::all_of(inner.begin(), inner.end(), [&](HalfInt j1) { return candidate < j2 - j1; });
        e.checks = {
            {"candidate_in_window", e.window.admits(candidate)},
            {"candidate_below_rank_one_poles", below},
            {"candidate_is_beta_pole", piece_beta.shifted(-j2).pole_part() == PoleMultiset{{candidate, 1}}},
        };
        distinct = seen.insert(candidate).second && distinct;
        cert.entries.push_back(std::move(e));
    }
    cert.supercuspidal_distinctness = distinct;
    cert.alpha_matching = alpha_matches(cert.problem);
    detail::seal(cert);
    return cert;
}

/// Replays the discrete-series argument. One factor is unfolded into its
/// twists (rho_d(tau_b) over j2 when a >= b, rho_c(tau_a) over j1 otherwise).
/// For every twist t the window of the piece must lie below the floor of all
/// rank-one pole ranges, and its admissible points must be exactly the simple
/// poles of the piece's beta, so every pole of the piece comes from the
/// normalization factor. Globally the alphas must match and the
/// supercuspidal (c, d) certificate must hold.
inline HolomorphyCertificate certify_discrete(const InductionProblem& p) {
    HolomorphyCertificate cert;
    cert.problem = p;
    cert.kind = CertificateKind::discrete;
    cert.side = natural_side(p);

    const bool right = cert.side == DecomposedSide::right;
    const HalfInt spread = HalfInt::half(std::abs(p.c - p.d));
    const std::vector<HalfInt> kept = segment(right ? p.a : p.b);

    for (HalfInt t : decomposition_indices(p, cert.side)) {
        LedgerEntry e;
        e.j2 = t;
        const HalfInt shift = right ? t - HalfInt::half(p.a - 1) : -t - HalfInt::half(p.b - 1);
        e.window = mw_pole_window(p.c, p.d, shift);
        e.rank_one_floor = shift - spread;
        e.alpha_pole_locations = detail::pole_locations(alpha_factor(p, cert.side, t));

        bool floor_ok = std::all_of(kept.begin(), kept.end(), [&](HalfInt inner) {
            HalfInt lower_bound = (right ? t - inner : inner - t) - spread;
            return e.rank_one_floor <= lower_bound;
        });
        PoleMultiset window_points;
        for (HalfInt w : e.window.admissible_points()) window_points.add(w);

        e.checks = {
            {"floor_below_rank_one_poles", floor_ok},
            {"window_below_floor", e.window.hi_exclusive <= e.rank_one_floor},
            {"window_poles_from_normalization", beta_factor(p, cert.side, t).pole_part() == window_points},
        };
        cert.entries.push_back(std::move(e));
    }
    cert.supercuspidal_distinctness = certify_supercuspidal(p.c, p.d).verdict;
    cert.alpha_matching = alpha_matches(p);
    detail::seal(cert);
    return cert;
}

/// Rank-one pole budget: at each w0, how many rank-one pieces may put a
/// (simple) pole there.
inline PoleMultiset pole_budget(const InductionProblem& p) {
    PoleMultiset out;
    for (const RankOneFactor& f : rank_one_factors(p)) out.add(f.pole_location());
    return out;
}

}  // namespace speh
