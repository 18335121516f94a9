#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "linrel/extension.hpp"
#include "linrel/generate.hpp"

namespace linrel {

// Von Neumann bookkeeping for S ⊆ T, S Hermitian and T self-adjoint.
struct Lemma32Probe {
    DeficiencyPair n_pm;
    std::size_t d1 = 0;  // dim(D(T)/D(S))
    std::size_t d2 = 0;  // dim(D(S*)/D(T))
    bool graph_version_holds = false;
    bool domain_version_holds = false;
};

inline Lemma32Probe lemma32_probe(const LinearRelation& s, const LinearRelation& t) {
    detail::check_same_space(s, t);
    if (!is_hermitian(s)) throw precondition_error("lemma32_probe: S is not Hermitian");
    if (!is_selfadjoint(t)) throw precondition_error("lemma32_probe: T is not self-adjoint");
    if (!t.contains(s)) throw precondition_error("lemma32_probe: S is not contained in T");
    LinearRelation ss = adjoint(s);
    Lemma32Probe r;
    r.n_pm = deficiency(s);
    r.d1 = quotient_dim(domain(t), domain(s));
    r.d2 = quotient_dim(domain(ss), domain(t));
    const std::size_t np = r.n_pm.n_plus, nm = r.n_pm.n_minus;
    const std::size_t g1 = t.dim() - s.dim(), g2 = ss.dim() - t.dim();
    r.graph_version_holds = g1 == np && g1 == nm && g2 == nm && g2 == np;
    r.domain_version_holds = r.d1 == np && r.d1 == nm && r.d2 == np && r.d2 == nm;
    return r;
}

enum class Tier { asserted, recorded };
enum class Outcome { pass, fail, not_applicable };

inline std::string_view to_string(Tier t) { return t == Tier::asserted ? "asserted" : "recorded"; }
inline std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::not_applicable: return "not-applicable";
    }
    return "?";
}

struct CheckRecord {
    std::string name;
    Tier tier = Tier::asserted;
    Outcome outcome = Outcome::not_applicable;
    std::string detail;  // exception text, if any
};

struct TrialDims {
    std::size_t dim_a = 0, dim_b = 0, dim_a_star = 0, dim_b_star = 0;
    std::size_t n_ab = 0, n_ba = 0, k_ba = 0, k_ab = 0;
    std::size_t s_nplus = 0, s_nminus = 0;
};

struct TrialRecord {
    std::size_t index = 0;
    std::size_t attempts = 0;
    bool starved = false;
    std::size_t space_dim = 0;
    HypothesisReport hypotheses;
    TrialDims dims;
    std::vector<CheckRecord> checks;
    std::vector<std::string> coverage_hits;
};

struct CheckAggregate {
    std::size_t asserted_pass = 0, asserted_fail = 0;
    std::size_t recorded_pass = 0, recorded_fail = 0;
    std::size_t not_applicable = 0;
};

struct Falsification {
    std::size_t index = 0;
    std::string check;
    std::string detail;
};

struct CoverageCounter {
    std::size_t count = 0;
    bool required = false;  // the suite expects at least one hit
};

struct CampaignOptions {
    bool override_hypotheses = false;  // evaluate gated checks outside their hypotheses, as recorded
    std::size_t threads = 1;
};

struct VerificationReport {
    GenConfig config;
    std::vector<std::string> suites;
    bool override_hypotheses = false;
    std::vector<TrialRecord> records;
    std::map<std::string, CheckAggregate> aggregates;
    std::map<std::string, CoverageCounter> coverage;
    std::vector<Falsification> falsifications;
    std::size_t starved = 0;
    std::size_t full_hypotheses_population = 0;

    [[nodiscard]] bool coverage_ok() const {
        return std::all_of(coverage.begin(), coverage.end(),
                           [](const auto& kv) { return !kv.second.required || kv.second.count > 0; });
    }
    // Coverage gaps are reported but never change the exit code.
    [[nodiscard]] int exit_code() const { return falsifications.empty() ? 0 : 1; }
};

inline constexpr std::array<std::string_view, 13> kSuites = {
    "arens",        "adjoint-duality", "e1e2", "q-iso",  "surplus-eq",    "s-block",   "s-deficiency",
    "sa-criterion", "thm33",           "thm34", "degeneracy", "lemma32-probe", "vn-formula"};

// Coverage counters each suite expects to be hit at least once on a campaign of reasonable size.
inline std::vector<std::string> required_coverage(std::string_view suite) {
    if (suite == "arens") return {"arens.multivalued"};
    if (suite == "adjoint-duality") return {"adjoint-duality.nondense_domain"};
    if (suite == "e1e2") return {"e1e2.kernel_nonzero"};
    if (suite == "q-iso") return {"q-iso.kernel_nonzero"};
    if (suite == "surplus-eq") return {"surplus-eq.full_hypotheses"};
    if (suite == "s-block") return {"s-block.deficiency_nonzero"};
    if (suite == "s-deficiency") return {"s-deficiency.kernel_nonzero"};
    if (suite == "sa-criterion") return {"sa-criterion.selfadjoint"};
    if (suite == "thm33") return {"thm33.full_hypotheses"};
    if (suite == "thm34") return {"thm34.full_hypotheses"};
    if (suite == "degeneracy") return {"degeneracy.full_hypotheses"};
    if (suite == "lemma32-probe") return {"lemma32-probe.deficiency_nonzero"};
    if (suite == "vn-formula") return {"vn-formula.deficiency_nonzero"};
    return {};
}

// Validated, de-duplicated, canonical order; empty input selects every suite.
inline std::vector<std::string> normalize_suites(const std::vector<std::string>& requested) {
    std::vector<std::string> out;
    for (const auto& r : requested)
        if (std::find(kSuites.begin(), kSuites.end(), r) == kSuites.end())
            throw precondition_error("unknown suite: " + r);
    for (auto s : kSuites)
        if (requested.empty() || std::find(requested.begin(), requested.end(), s) != requested.end())
            out.emplace_back(s);
    return out;
}

namespace detail {

// Everything the suites share for one pair, computed on first use.
class Analysis {
public:
    explicit Analysis(const DualPair& p, std::optional<HypothesisReport> known = std::nullopt)
        : p_(p), h_(known ? *known : hypotheses(p)) {}

    [[nodiscard]] const DualPair& pair() const { return p_; }
    [[nodiscard]] const HypothesisReport& h() const { return h_; }

    const Surplus& surplus() {
        if (!surplus_) surplus_ = linrel::surplus(p_);
        return *surplus_;
    }
    const KernelSpaces& kernels() {
        if (!kernels_) kernels_ = kernel_spaces(p_);
        return *kernels_;
    }
    const LinearRelation& s() {
        if (!s_) s_ = build_S(p_).relation;
        return *s_;
    }
    const LinearRelation& s_star() {
        if (!s_star_) s_star_ = adjoint(s());
        return *s_star_;
    }
    // Deficiency indices of S; S is Hermitian by construction, checked by the s-block suite.
    const DeficiencyPair& s_deficiency() {
        if (!s_def_)
            s_def_ = DeficiencyPair{kernel(shift(s_star(), Scalar::i())).dim(), kernel(shift(s_star(), -Scalar::i())).dim()};
        return *s_def_;
    }
    bool a_is_b_star() const { return p_.a() == p_.b_star(); }

private:
    const DualPair& p_;
    HypothesisReport h_;
    std::optional<Surplus> surplus_;
    std::optional<KernelSpaces> kernels_;
    std::optional<LinearRelation> s_, s_star_;
    std::optional<DeficiencyPair> s_def_;
};

class Trial {
public:
    Trial(TrialRecord& rec, bool override_hypotheses) : rec_(rec), override_(override_hypotheses) {}

    void asserted(const std::string& name, const std::function<bool()>& eval) { run(name, Tier::asserted, eval); }
    void recorded(const std::string& name, const std::function<bool()>& eval) { run(name, Tier::recorded, eval); }

    // Asserted under its hypotheses; outside them recorded under override, else not applicable.
    void gated(const std::string& name, bool hypotheses_hold, const std::function<bool()>& eval) {
        if (hypotheses_hold) run(name, Tier::asserted, eval);
        else if (override_) run(name, Tier::recorded, eval);
        else not_applicable(name);
    }
    void not_applicable(const std::string& name) { rec_.checks.push_back({name, Tier::asserted, Outcome::not_applicable, {}}); }
    void hit(const std::string& counter) { rec_.coverage_hits.push_back(counter); }

private:
    TrialRecord& rec_;
    bool override_;

    void run(const std::string& name, Tier tier, const std::function<bool()>& eval) {
        try {
            rec_.checks.push_back({name, tier, eval() ? Outcome::pass : Outcome::fail, {}});
        } catch (const std::exception& e) {
            // An exception is never a legitimate outcome: count it as an asserted failure.
            rec_.checks.push_back({name, Tier::asserted, Outcome::fail, e.what()});
        }
    }
};

inline std::vector<LinearRelation> hermitian_candidates(Analysis& an) {
    std::vector<LinearRelation> out{an.s()};
    const DualPair& p = an.pair();
    if (p.a_star().contains(p.a())) out.push_back(p.a());
    if (!(p.b() == p.a()) && p.b_star().contains(p.b())) out.push_back(p.b());
    return out;
}

// Ã = A, Ã = B* and one sampled intermediate extension when there is room.
inline std::vector<ProperExtension> extension_candidates(const DualPair& p, std::uint64_t seed) {
    std::vector<ProperExtension> out;
    out.emplace_back(p, p.a());
    const std::size_t m = p.b_star().dim() - p.a().dim();
    if (m == 0) return out;
    out.emplace_back(p, p.b_star());
    if (m >= 2) {
        Stream rng(seed, 0, 0x6B);
        auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(m) - 1));
        auto sampled = sample_extensions(p, k, 1, seed);
        out.push_back(std::move(sampled.front()));
    }
    return out;
}

inline void suite_arens(Analysis& an, Trial& t) {
    const DualPair& p = an.pair();
    std::vector<ArensChecks> cs;
    bool multi = false;
    for (const LinearRelation* r : {&p.a(), &p.b(), &p.a_star(), &p.b_star()}) {
        cs.push_back(arens_checks(*r, arens_split(*r)));
        multi = multi || !multivalued_part(*r).is_zero();
    }
    auto every = [&](bool ArensChecks::*field) {
        return [&cs, field] { return std::all_of(cs.begin(), cs.end(), [field](const ArensChecks& c) { return c.*field; }); };
    };
    t.asserted("arens.reconstruction", every(&ArensChecks::reconstruction));
    t.asserted("arens.single_valued", every(&ArensChecks::single_valued));
    t.asserted("arens.same_domain", every(&ArensChecks::same_domain));
    t.asserted("arens.range_orthogonal", every(&ArensChecks::range_orthogonal));
    t.asserted("arens.multi_part", every(&ArensChecks::multi_is_slice));
    if (multi) t.hit("arens.multivalued");
}

inline void suite_adjoint_duality(Analysis& an, Trial& t) {
    const DualPair& p = an.pair();
    const std::size_t n = p.space_dim();
    std::array<std::pair<const LinearRelation*, const LinearRelation*>, 2> rels{{{&p.a(), &p.a_star()}, {&p.b(), &p.b_star()}}};
    auto each = [&](auto pred) {
        return [&rels, pred] {
            return std::all_of(rels.begin(), rels.end(), [&](const auto& rs) { return pred(*rs.first, *rs.second); });
        };
    };
    t.asserted("adjoint-duality.involution",
               each([](const LinearRelation& r, const LinearRelation& rs) { return adjoint(rs) == r; }));
    t.asserted("adjoint-duality.dimension",
               each([n](const LinearRelation& r, const LinearRelation& rs) { return r.dim() + rs.dim() == 2 * n; }));
    t.asserted("adjoint-duality.multivalued_vs_domain", each([](const LinearRelation& r, const LinearRelation& rs) {
                   return multivalued_part(rs) == orth_complement(domain(r));
               }));
    t.asserted("adjoint-duality.kernel_vs_range", each([](const LinearRelation& r, const LinearRelation& rs) {
                   return kernel(rs) == orth_complement(range(r));
               }));
    t.asserted("adjoint-duality.domain_vs_multivalued", each([](const LinearRelation& r, const LinearRelation& rs) {
                   return domain(rs) == orth_complement(multivalued_part(r));
               }));
    t.asserted("adjoint-duality.dual_pair", [&] { return p.b_star().contains(p.a()) && p.a_star().contains(p.b()); });
    if (!domain(p.a()).is_full() || !domain(p.b()).is_full()) t.hit("adjoint-duality.nondense_domain");
}

inline void suite_e1e2(Analysis& an, Trial& t) {
    const DualPair& p = an.pair();
    const auto& h = an.h();
    t.gated("e1e2.e1", h.h1, [&] { return decompose_e1(p, Gating::bypassed).holds(); });
    t.gated("e1e2.e2", h.h2, [&] { return decompose_e2(p, Gating::bypassed).holds(); });
    t.gated("e1e2.gram_complement", h.h1, [&] {
        PlusGram pg = plus_gram(p);
        return gram_orth_complement_within(pg.space, domain(p.b()), pg.gram) == an.kernels().k_ba;
    });
    const bool degenerate = an.a_is_b_star();
    if (degenerate) t.asserted("e1e2.kernels_trivial", [&] { return an.kernels().k_ba.is_zero() && an.kernels().k_ab.is_zero(); });
    else t.not_applicable("e1e2.kernels_trivial");
    if (h.h1 && !an.kernels().k_ba.is_zero()) t.hit("e1e2.kernel_nonzero");
}

inline void suite_q_iso(Analysis& an, Trial& t) {
    const DualPair& p = an.pair();
    const bool k = an.h().k_pair();
    if (k) {
        t.asserted("q-iso.q_bijective", [&] {
            Matrix q = q_map(p);
            return q.rows() == an.kernels().k_ab.dim() && q.cols() == an.kernels().k_ba.dim();
        });
    } else {
        t.not_applicable("q-iso.q_bijective");
    }
    t.gated("q-iso.e6", k, [&] { return an.kernels().k_ba.dim() == an.kernels().k_ab.dim(); });
    if (k && !an.kernels().k_ba.is_zero()) t.hit("q-iso.kernel_nonzero");
}

inline void suite_surplus_eq(Analysis& an, Trial& t) {
    t.gated("surplus-eq.e5", an.h().all(), [&] { return an.surplus().n_ab == an.surplus().n_ba; });
    if (an.h().all()) t.hit("surplus-eq.full_hypotheses");
    if (an.surplus().n_ab > 0 || an.surplus().n_ba > 0) t.hit("surplus-eq.surplus_nonzero");
}

inline void suite_s_block(Analysis& an, Trial& t) {
    const DualPair& p = an.pair();
    const std::size_t n = p.space_dim();
    t.asserted("s-block.s_hermitian", [&] { return an.s_star().contains(an.s()); });
    t.asserted("s-block.e11", [&] { return an.s_star() == block_relation(p.b_star(), p.a_star()); });
    t.asserted("s-block.s_domain", [&] {
        std::vector<Vector> gens;
        Subspace db = domain(p.b()), da = domain(p.a());
        for (const auto& f : db.basis()) gens.push_back(concat(f, Vector::zero(n)));
        for (const auto& f : da.basis()) gens.push_back(concat(Vector::zero(n), f));
        return domain(an.s()) == Subspace::span(gens, 2 * n);
    });
    if (an.s_deficiency().n_plus > 0) t.hit("s-block.deficiency_nonzero");
}

inline void suite_s_deficiency(Analysis& an, Trial& t) {
    const DualPair& p = an.pair();
    const auto& h = an.h();
    const DeficiencyPair& d = an.s_deficiency();
    t.gated("s-deficiency.e13", h.k_pair(), [&] {
        const std::size_t k = an.kernels().k_ba.dim();
        return d.n_plus == k && d.n_minus == k;
    });
    if (h.k_pair()) t.asserted("s-deficiency.p_bijective", [&] { return p_map(p).rows() == an.kernels().k_ba.dim(); });
    else t.not_applicable("s-deficiency.p_bijective");
    t.gated("s-deficiency.e12", h.all(), [&] {
        const Surplus& s = an.surplus();
        return d.n_plus == d.n_minus && d.n_minus == s.n_ab && s.n_ab == s.n_ba;
    });
    t.recorded("s-deficiency.indices_equal", [&] { return d.n_plus == d.n_minus; });
    if (h.k_pair() && !an.kernels().k_ba.is_zero()) t.hit("s-deficiency.kernel_nonzero");
}

inline void suite_sa_criterion(Analysis& an, Trial& t) {
    const bool sa = an.s_star() == an.s();
    t.asserted("sa-criterion.criterion", [&] { return sa == an.a_is_b_star(); });
    if (sa) t.hit("sa-criterion.selfadjoint");
}

inline void suite_thm33(Analysis& an, Trial& t, std::uint64_t seed) {
    const bool all = an.h().all();
    for (const auto& e : extension_candidates(an.pair(), seed)) {
        t.hit("thm33.extensions");
        t.asserted("thm33.tower", [&] { return tower_identities_hold(e); });
        Thm33Result r = check_thm33(e);
        t.gated("thm33.e32", all, [&] { return r.e32; });
        if (r.e33) {
            t.gated("thm33.e33", all, [&] { return *r.e33; });
            t.gated("thm33.parity", all, [&] { return *r.parity; });
        } else {
            t.not_applicable("thm33.e33");
            t.not_applicable("thm33.parity");
        }
    }
    if (all) t.hit("thm33.full_hypotheses");
}

inline void suite_thm34(Analysis& an, Trial& t, std::uint64_t seed) {
    const bool all = an.h().all();
    for (const auto& e : extension_candidates(an.pair(), seed)) {
        Thm34Result r = check_thm34(e);
        t.gated("thm34.implication", all, [&] { return r.implication; });
    }
    t.gated("thm34.correct_pair_parity", all, [&] {
        CorrectnessProbe c = correctness_probe(an.pair(), 4, seed);
        return !c.found || surplus(an.pair()).n_ab % 2 == 0;
    });
    if (all) t.hit("thm34.full_hypotheses");
}

inline void suite_degeneracy(Analysis& an, Trial& t) {
    const DualPair& p = an.pair();
    const bool all = an.h().all();
    t.gated("degeneracy.a_equals_bstar", all, [&] { return an.a_is_b_star() && p.b() == p.a_star(); });
    t.gated("degeneracy.surplus_zero", all, [&] { return an.surplus().n_ab == 0 && an.surplus().n_ba == 0; });
    t.gated("degeneracy.e12", all, [&] {
        const DeficiencyPair& d = an.s_deficiency();
        return d.n_plus == 0 && d.n_minus == 0 && an.surplus().n_ab == 0 && an.surplus().n_ba == 0;
    });
    t.gated("degeneracy.extension_formulas", all, [&] {
        ProperExtension e(p, p.a());
        Thm33Result r33 = check_thm33(e);
        Thm34Result r34 = check_thm34(e);
        return r33.e32 && r33.e33.value_or(false) && r33.parity.value_or(false) && r34.e37 && r34.implication;
    });
    if (all) t.hit("degeneracy.full_hypotheses");
}

inline void suite_lemma32(Analysis& an, Trial& t) {
    for (const auto& s : hermitian_candidates(an)) {
        Lemma32Probe r = lemma32_probe(s, self_adjoint_extension(s));
        t.asserted("lemma32-probe.graph_version", [&] { return r.graph_version_holds; });
        t.recorded("lemma32-probe.domain_version", [&] { return r.domain_version_holds; });
        if (!r.domain_version_holds) t.hit("lemma32-probe.domain_counterexample");
        if (r.n_pm.n_plus > 0) t.hit("lemma32-probe.deficiency_nonzero");
    }
}

inline void suite_vn(Analysis& an, Trial& t) {
    const Scalar i = Scalar::i();
    const std::array<Scalar, 3> upper{i, Scalar(2) * i, Scalar(1) + i};
    const std::array<Scalar, 3> lower{-i, Scalar(-2) * i, Scalar(1) - i};
    for (const auto& s : hermitian_candidates(an)) {
        t.asserted("vn-formula.von_neumann", [&] { return von_neumann_check(s); });
        t.asserted("vn-formula.m_lambda_constant", [&] {
            auto dims = [&](const std::array<Scalar, 3>& ls) {
                std::vector<std::size_t> d;
                for (const auto& l : ls) d.push_back(m_lambda(s, l).dim());
                return d;
            };
            auto u = dims(upper), l = dims(lower);
            return std::adjacent_find(u.begin(), u.end(), std::not_equal_to<>()) == u.end() &&
                   std::adjacent_find(l.begin(), l.end(), std::not_equal_to<>()) == l.end();
        });
        DeficiencyPair d = deficiency(s);
        if (d.n_plus != d.n_minus) t.hit("vn-formula.unequal_indices");
        if (d.n_plus > 0) t.hit("vn-formula.deficiency_nonzero");
    }
}

inline TrialRecord run_trial(const GenConfig& config, std::size_t index, const std::vector<std::string>& suites,
                             const CampaignOptions& opts) {
    TrialRecord rec;
    rec.index = index;
    Generated g;
    try {
        g = generate(config, index);
    } catch (const std::exception& e) {
        rec.checks.push_back({"generate", Tier::asserted, Outcome::fail, e.what()});
        return rec;
    }
    rec.attempts = g.attempts;
    if (!g.pair) {
        rec.starved = true;
        return rec;
    }
    const DualPair& p = *g.pair;
    rec.space_dim = p.space_dim();
    Trial t(rec, opts.override_hypotheses);
    try {
        Analysis an(p, g.hypotheses);
        rec.hypotheses = an.h();
        const KernelSpaces& ks = an.kernels();
        const DeficiencyPair& sd = an.s_deficiency();
        rec.dims = {p.a().dim(),        p.b().dim(),        p.a_star().dim(), p.b_star().dim(), an.surplus().n_ab,
                    an.surplus().n_ba,  ks.k_ba.dim(),      ks.k_ab.dim(),    sd.n_plus,        sd.n_minus};
        const std::uint64_t seed = mix_seed(config.seed, index, 0x657874);
        for (const auto& s : suites) {
            try {
                if (s == "arens") suite_arens(an, t);
                else if (s == "adjoint-duality") suite_adjoint_duality(an, t);
                else if (s == "e1e2") suite_e1e2(an, t);
                else if (s == "q-iso") suite_q_iso(an, t);
                else if (s == "surplus-eq") suite_surplus_eq(an, t);
                else if (s == "s-block") suite_s_block(an, t);
                else if (s == "s-deficiency") suite_s_deficiency(an, t);
                else if (s == "sa-criterion") suite_sa_criterion(an, t);
                else if (s == "thm33") suite_thm33(an, t, seed);
                else if (s == "thm34") suite_thm34(an, t, seed);
                else if (s == "degeneracy") suite_degeneracy(an, t);
                else if (s == "lemma32-probe") suite_lemma32(an, t);
                else if (s == "vn-formula") suite_vn(an, t);
            } catch (const std::exception& e) {
                rec.checks.push_back({s + ".exception", Tier::asserted, Outcome::fail, e.what()});
            }
        }
    } catch (const std::exception& e) {
        rec.checks.push_back({"analysis", Tier::asserted, Outcome::fail, e.what()});
    }
    return rec;
}

}  // namespace detail

/*
 * Runs the selected suites on config.trials generated pairs. Trials may run on
 * several threads; records are stored by index, so the report does not depend
 * on scheduling.
 */
inline VerificationReport run_campaign(const GenConfig& config, const std::vector<std::string>& suites,
                                       const CampaignOptions& opts = {}) {
    config.validate();
    VerificationReport rep;
    rep.config = config;
    rep.suites = normalize_suites(suites);
    rep.override_hypotheses = opts.override_hypotheses;
    rep.records.resize(config.trials);

    const std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, config.trials));
    auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < config.trials; i += threads)
            rep.records[i] = detail::run_trial(config, i, rep.suites, opts);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    for (const auto& s : rep.suites)
        for (const auto& c : required_coverage(s)) rep.coverage[c].required = true;
    for (const auto& r : rep.records) {
        if (r.starved) ++rep.starved;
        else if (r.hypotheses.all()) ++rep.full_hypotheses_population;
        for (const auto& c : r.coverage_hits) ++rep.coverage[c].count;
        for (const auto& c : r.checks) {
            CheckAggregate& a = rep.aggregates[c.name];
            if (c.outcome == Outcome::not_applicable) ++a.not_applicable;
            else if (c.tier == Tier::asserted) ++(c.outcome == Outcome::pass ? a.asserted_pass : a.asserted_fail);
            else ++(c.outcome == Outcome::pass ? a.recorded_pass : a.recorded_fail);
            if (c.tier == Tier::asserted && c.outcome == Outcome::fail) rep.falsifications.push_back({r.index, c.name, c.detail});
        }
    }
    return rep;
}

}  // namespace linrel
