#pragma once

// JSON renderings of the library's value types. Field names are a stability
// contract: additions only.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>
#include "speh/certificate.hpp"
#include "speh/classifier.hpp"
#include "speh/lfactor.hpp"
#include "speh/model.hpp"
#include "speh/normalization.hpp"

namespace speh {

using Json = nlohmann::ordered_json;

template <typename J>
void to_json(J& j, const HalfInt& h) {
    j = h.to_string();
}
template <typename J>
void from_json(const J& j, HalfInt& h) {
    h = HalfInt::parse(j.template get<std::string>());
}

template <typename J>
void to_json(J& j, const LFactorProduct& x) {
    j = J::array();
    for (auto [n, e] : x) j.push_back({{"shift", n.to_string()}, {"exp", e}});
}
template <typename J>
void from_json(const J& j, LFactorProduct& x) {
    x = {};
    for (const auto& f : j) x.multiply_factor(f.at("shift").template get<HalfInt>(), f.at("exp").template get<int>());
}

template <typename J>
void to_json(J& j, const HalfIntMultiset& m) {
    j = J::object();
    for (auto [k, v] : m) j[k.to_string()] = v;
}
template <typename J>
void from_json(const J& j, HalfIntMultiset& m) {
    m = {};
    for (auto it = j.begin(); it != j.end(); ++it) m.add(HalfInt::parse(it.key()), it.value().template get<int>());
}

template <typename J>
void to_json(J& j, const InductionProblem& p) {
    j = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"tau_rank", p.tau_rank}};
}
template <typename J>
void from_json(const J& j, InductionProblem& p) {
    p = InductionProblem(j.at("a").template get<int>(), j.at("b").template get<int>(), j.at("c").template get<int>(),
                         j.at("d").template get<int>(), j.value("tau_rank", 1));
}

template <typename J>
void to_json(J& j, const PointVerdict& v) {
    j = {{"w", v.point.to_string()},
         {"s", format_halved(v.point)},
         {"beta_order", v.beta_order},
         {"alpha_order", v.alpha_order},
         {"dual_alpha_order", v.dual_alpha_order},
         {"reducible", v.reducible},
         {"tier", std::string(to_string(v.tier))}};
}
template <typename J>
void from_json(const J& j, PointVerdict& v) {
    v.point = j.at("w").template get<HalfInt>();
    v.beta_order = j.at("beta_order").template get<int>();
    v.alpha_order = j.at("alpha_order").template get<int>();
    v.dual_alpha_order = j.at("dual_alpha_order").template get<int>();
    v.reducible = j.at("reducible").template get<bool>();
    v.tier = parse_tier(j.at("tier").template get<std::string>());
}

template <typename J>
void to_json(J& j, const LocalCoefficient& cp) {
    J factors = J::array();
    for (auto [n, e] : cp.mirrored) factors.push_back({{"mirrored", true}, {"shift", n.to_string()}, {"exp", e}});
    for (auto [n, e] : cp.denominator) factors.push_back({{"mirrored", false}, {"shift", n.to_string()}, {"exp", -e}});
    j = {{"factors", factors}, {"poles", cp.poles()}, {"zeros", cp.zeros()}};
}
template <typename J>
void from_json(const J& j, LocalCoefficient& cp) {
    cp = {};
    for (const auto& f : j.at("factors")) {
        HalfInt n = f.at("shift").template get<HalfInt>();
        int e = f.at("exp").template get<int>();
        if (f.at("mirrored").template get<bool>())
            cp.mirrored.multiply_factor(n, e);
        else
            cp.denominator.multiply_factor(n, -e);
    }
}

template <typename J>
void to_json(J& j, const LedgerEntry& e) {
    J checks = J::object();
    for (const NamedCheck& c : e.checks) checks[c.name] = c.passed;
    j = {{"j2", e.j2.to_string()},
         {"window", {e.window.lo.to_string(), e.window.hi_exclusive.to_string()}},
         {"floor", e.rank_one_floor.to_string()},
         {"alpha_poles", e.alpha_pole_locations},
         {"checks", checks}};
}
template <typename J>
void from_json(const J& j, LedgerEntry& e) {
    e.j2 = j.at("j2").template get<HalfInt>();
    e.window = {j.at("window").at(0).template get<HalfInt>(), j.at("window").at(1).template get<HalfInt>()};
    e.rank_one_floor = j.at("floor").template get<HalfInt>();
    e.alpha_pole_locations = j.at("alpha_poles").template get<std::vector<HalfInt>>();
    e.checks.clear();
    for (auto it = j.at("checks").begin(); it != j.at("checks").end(); ++it)
        e.checks.push_back({it.key(), it.value().template get<bool>()});
}

template <typename J>
void to_json(J& j, const HolomorphyCertificate& c) {
    j = {{"problem", c.problem},
         {"kind", c.kind == CertificateKind::supercuspidal ? "supercuspidal" : "discrete"},
         {"decomposition", c.side == DecomposedSide::right ? "right" : "left"},
         {"entries", c.entries},
         {"supercuspidal_distinctness", c.supercuspidal_distinctness},
         {"alpha_matching", c.alpha_matching},
         {"verdict", c.verdict}};
}
template <typename J>
void from_json(const J& j, HolomorphyCertificate& c) {
    c.problem = j.at("problem").template get<InductionProblem>();
    c.kind = j.at("kind").template get<std::string>() == "supercuspidal" ? CertificateKind::supercuspidal
                                                                         : CertificateKind::discrete;
    c.side = j.at("decomposition").template get<std::string>() == "left" ? DecomposedSide::left
                                                                         : DecomposedSide::right;
    c.entries = j.at("entries").template get<std::vector<LedgerEntry>>();
    c.supercuspidal_distinctness = j.at("supercuspidal_distinctness").template get<bool>();
    c.alpha_matching = j.at("alpha_matching").template get<bool>();
    c.verdict = j.at("verdict").template get<bool>();
}

/// The per-problem factor report: alpha, beta, gamma, their pole parts, and
/// the local coefficient when c = d.
inline Json factor_report(const InductionProblem& p) {
    const LFactorProduct a = alpha(p), b = beta(p);
    Json j = {{"problem", p},
              {"alpha", a},
              {"beta", b},
              {"gamma", gamma(p)},
              {"poles", {{"alpha", a.pole_part()}, {"beta", b.pole_part()}, {"common", common_pole_part(a, b)}}}};
    if (p.c == p.d) j["c_psi"] = c_psi(p);
    return j;
}

}  // namespace speh
