#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "linrel/campaign.hpp"
#include "linrel/extension.hpp"

namespace linrel::io {

using json = nlohmann::ordered_json;

// Scalar as ["re", "im"] with each part "p" or "p/q".
inline json scalar_to_json(const Scalar& s) { return json::array({s.re().str(), s.im().str()}); }

inline json vector_to_json(const Vector& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(scalar_to_json(s));
    return a;
}

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw parse_error((path.empty() ? std::string("/") : path) + ": " + what);
}

inline Scalar scalar_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected a two-element array [re, im]");
    Rational parts[2];
    for (std::size_t k = 0; k < 2; ++k) {
        if (!j[k].is_string()) fail(path + "/" + std::to_string(k), "expected a rational string");
        try {
            parts[k] = Rational::parse(j[k].get<std::string>());
        } catch (const parse_error& e) {
            fail(path + "/" + std::to_string(k), e.what());
        }
    }
    return {parts[0], parts[1]};
}

inline Vector vector_from_json(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of scalars");
    if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = scalar_from_json(j[k], path + "/" + std::to_string(k));
    return v;
}

}  // namespace detail

// Canonical form: the graph's canonical basis in pivot order.
inline json relation_to_json(const LinearRelation& t) {
    json pairs = json::array();
    for (const auto& [x, y] : t.pairs()) pairs.push_back({{"x", vector_to_json(x)}, {"y", vector_to_json(y)}});
    return {{"space_dim", t.space_dim()}, {"pairs", pairs}};
}

inline LinearRelation relation_from_json(const json& j) {
    if (!j.is_object()) detail::fail("", "expected an object with space_dim and pairs");
    for (const auto& [key, value] : j.items())
        if (key != "space_dim" && key != "pairs") detail::fail("/" + key, "unknown field");
    if (!j.contains("space_dim")) detail::fail("/space_dim", "missing field");
    if (!j.contains("pairs")) detail::fail("/pairs", "missing field");
    const json& nd = j["space_dim"];
    if (!nd.is_number_unsigned()) detail::fail("/space_dim", "expected a natural number");
    const auto n = nd.get<std::size_t>();
    if (n > 64) detail::fail("/space_dim", "dimension too large");
    const json& ps = j["pairs"];
    if (!ps.is_array()) detail::fail("/pairs", "expected an array");
    std::vector<std::pair<Vector, Vector>> pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string path = "/pairs/" + std::to_string(i);
        const json& p = ps[i];
        if (!p.is_object()) detail::fail(path, "expected an object with x and y");
        for (const auto& [key, value] : p.items())
            if (key != "x" && key != "y") detail::fail(path + "/" + key, "unknown field");
        if (!p.contains("x")) detail::fail(path + "/x", "missing field");
        if (!p.contains("y")) detail::fail(path + "/y", "missing field");
        pairs.emplace_back(detail::vector_from_json(p["x"], n, path + "/x"),
                           detail::vector_from_json(p["y"], n, path + "/y"));
    }
    return LinearRelation::from_pairs(n, pairs);
}

namespace detail {

inline bool flat(const json& j) {
    if (j.is_object()) return false;
    if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const json& e) { return flat(e); });
    return true;
}

inline bool flat_object(const json& j) {
    return j.is_object() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

inline void pretty(const json& j, std::string& out, int depth, bool in_array) {
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    if (flat(j)) {
        if (!j.is_array()) {
            out += j.dump();
            return;
        }
        out += '[';
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k) out += ", ";
            pretty(j[k], out, depth, true);
        }
        out += ']';
        return;
    }
    if (in_array && flat_object(j)) {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ", ";
            first = false;
            out += json(key).dump() + ": " + value.dump();
        }
        out += '}';
        return;
    }
    if (j.is_array()) {
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out += pad;
            pretty(j[k], out, depth + 1, true);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
        return;
    }
    if (j.empty()) {
        out += "{}";
        return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
        out += pad + json(key).dump() + ": ";
        pretty(value, out, depth + 1, false);
        out += ++k < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
}

}  // namespace detail

// Two-space indentation; arrays without objects and flat objects inside arrays stay on one line.
inline std::string dump(const json& j) {
    std::string out;
    detail::pretty(j, out, 0, false);
    return out + "\n";
}

inline std::string serialize_relation(const LinearRelation& t) { return dump(relation_to_json(t)); }

inline LinearRelation parse_relation(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return relation_from_json(j);
}

inline LinearRelation read_relation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_relation(ss.str());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

// true, false or "not-applicable".
inline json tri(const std::optional<bool>& v) { return v ? json(*v) : json("not-applicable"); }
inline json nullable(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

inline json hypotheses_to_json(const HypothesisReport& h) {
    return {{"h1", h.h1}, {"h2", h.h2}, {"k1", h.k1}, {"k2", h.k2}};
}

/*
 * Single-pair analysis. Gated checks are "not-applicable" outside their
 * hypotheses unless `override_hypotheses` is set, in which case they are
 * evaluated anyway.
 */
inline json analyze_report(const DualPair& p, bool override_hypotheses = false) {
    const HypothesisReport h = hypotheses(p);
    const Gating gating = override_hypotheses ? Gating::bypassed : Gating::enforced;
    const Surplus s = surplus(p);
    const KernelSpaces ks = kernel_spaces(p);
    const BlockS bs = build_S(p);
    const LinearRelation s_star = adjoint(bs.relation);
    const DeficiencyPair d{kernel(shift(s_star, Scalar::i())).dim(), kernel(shift(s_star, -Scalar::i())).dim()};

    auto when = [&](bool hyp, auto eval) -> std::optional<bool> {
        if (hyp || override_hypotheses) return eval();
        return std::nullopt;
    };
    json dims = {{"dimA", p.a().dim()},
                 {"dimB", p.b().dim()},
                 {"dimAstar", p.a_star().dim()},
                 {"dimBstar", p.b_star().dim()},
                 {"n_ab", s.n_ab},
                 {"n_ba", s.n_ba},
                 {"k_ba", ks.k_ba.dim()},
                 {"k_ab", ks.k_ab.dim()},
                 {"s_nplus", d.n_plus},
                 {"s_nminus", d.n_minus}};
    json checks = {
        {"e1", tri(when(h.h1, [&] { return decompose_e1(p, gating).holds(); }))},
        {"e2", tri(when(h.h2, [&] { return decompose_e2(p, gating).holds(); }))},
        {"e6", tri(when(h.k_pair(), [&] { return ks.k_ba.dim() == ks.k_ab.dim(); }))},
        {"e5", tri(when(h.all(), [&] { return s.n_ab == s.n_ba; }))},
        {"e11", s_star == block_relation(p.b_star(), p.a_star())},
        {"e12", tri(when(h.all(), [&] { return d.n_plus == d.n_minus && d.n_minus == s.n_ab && s.n_ab == s.n_ba; }))},
        {"e13", tri(when(h.k_pair(), [&] { return d.n_plus == ks.k_ba.dim() && d.n_minus == ks.k_ba.dim(); }))},
        {"selfadjoint_criterion", (s_star == bs.relation) == (p.a() == p.b_star())},
        {"degeneracy", tri(when(h.all(), [&] { return p.a() == p.b_star() && p.b() == p.a_star(); }))},
    };
    return {{"hypotheses", hypotheses_to_json(h)}, {"dims", dims}, {"checks", checks}};
}

// Nullable fields are null outside the hypotheses; "recorded" always carries the evaluated values.
inline json extension_report_to_json(const ExtensionReport& r) {
    json profile = json::array();
    for (auto v : r.profile.as_array()) profile.push_back(v);
    json recorded = {{"e32", r.recorded33.e32},
                     {"e33", nullable(r.recorded33.e33)},
                     {"parity", nullable(r.recorded33.parity)},
                     {"e37", r.recorded34.e37},
                     {"thm34", r.recorded34.implication}};
    return {{"profile", profile},         {"quasi", r.quasi},       {"e32", nullable(r.e32)},
            {"e33", nullable(r.e33)},     {"parity", nullable(r.parity)}, {"thm34", nullable(r.thm34)},
            {"recorded", recorded}};
}

inline json lemma32_to_json(const Lemma32Probe& r) {
    return {{"n_plus", r.n_pm.n_plus},
            {"n_minus", r.n_pm.n_minus},
            {"d1", r.d1},
            {"d2", r.d2},
            {"graph_version_holds", r.graph_version_holds},
            {"domain_version_holds", r.domain_version_holds},
            {"flagged", !r.domain_version_holds}};
}

inline json config_to_json(const VerificationReport& rep) {
    json suites = json::array();
    for (const auto& s : rep.suites) suites.push_back(s);
    const GenConfig& c = rep.config;
    return {{"seed", c.seed},
            {"trials", c.trials},
            {"dim_min", c.dim_min},
            {"dim_max", c.dim_max},
            {"entry_bound", c.entry_bound},
            {"strategy", std::string(to_string(c.strategy))},
            {"retry_budget", c.retry_budget},
            {"suites", suites},
            {"override_hypotheses", rep.override_hypotheses}};
}

inline json trial_to_json(const TrialRecord& r) {
    json out = {{"index", r.index}, {"attempts", r.attempts}, {"starved", r.starved}};
    if (r.starved) return out;
    const TrialDims& d = r.dims;
    out["space_dim"] = r.space_dim;
    out["hypotheses"] = hypotheses_to_json(r.hypotheses);
    out["dims"] = {{"dimA", d.dim_a},   {"dimB", d.dim_b}, {"dimAstar", d.dim_a_star}, {"dimBstar", d.dim_b_star},
                   {"n_ab", d.n_ab},    {"n_ba", d.n_ba},  {"k_ba", d.k_ba},           {"k_ab", d.k_ab},
                   {"s_nplus", d.s_nplus}, {"s_nminus", d.s_nminus}};
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"tier", std::string(to_string(c.tier))},
                          {"outcome", std::string(to_string(c.outcome))}});
    out["checks"] = checks;
    return out;
}

inline json verification_report_to_json(const VerificationReport& rep) {
    json aggregates = json::object();
    for (const auto& [name, a] : rep.aggregates)
        aggregates[name] = {{"asserted_pass", a.asserted_pass},
                            {"asserted_fail", a.asserted_fail},
                            {"recorded_pass", a.recorded_pass},
                            {"recorded_fail", a.recorded_fail},
                            {"not_applicable", a.not_applicable}};
    json coverage = json::object();
    for (const auto& [name, c] : rep.coverage) coverage[name] = {{"count", c.count}, {"required", c.required}};
    json fals = json::array();
    for (const auto& f : rep.falsifications) fals.push_back({{"index", f.index}, {"check", f.check}, {"detail", f.detail}});
    json records = json::array();
    for (const auto& r : rep.records) records.push_back(trial_to_json(r));
    json summary = {{"trials", rep.records.size()},
                    {"starved", rep.starved},
                    {"full_hypotheses_population", rep.full_hypotheses_population},
                    {"falsifications", rep.falsifications.size()},
                    {"coverage_ok", rep.coverage_ok()},
                    {"exit_code", rep.exit_code()}};
    return {{"config", config_to_json(rep)}, {"summary", summary}, {"aggregates", aggregates},
            {"coverage", coverage},          {"falsifications", fals}, {"records", records}};
}

}  // namespace linrel::io
