#include <gtest/gtest.h>

#include <map>

#include "linrel/campaign.hpp"
#include "linrel/io.hpp"

using namespace linrel;

namespace {

Vector e(std::size_t n, std::size_t k) { return Vector::unit(n, k); }

LinearRelation g1() { return LinearRelation::from_pairs(2, {{e(2, 0), e(2, 1)}}); }
LinearRelation swap() { return LinearRelation::graph_of(Matrix{{0, 1}, {1, 0}}); }

GenConfig config(Strategy s, std::size_t trials, std::uint64_t seed = 1) {
    GenConfig c;
    c.seed = seed;
    c.strategy = s;
    c.trials = trials;
    return c;
}

}  // namespace

TEST(Generate, DeterministicPerIndex) {
    GenConfig c = config(Strategy::free, 1);
    c.dim_max = 2;
    for (std::size_t i = 0; i < 20; ++i) {
        Generated a = generate(c, i), b = generate(c, i);
        ASSERT_TRUE(a.pair && b.pair);
        EXPECT_EQ(a.pair->a(), b.pair->a());
        EXPECT_EQ(a.pair->b(), b.pair->b());
        EXPECT_LE(a.pair->space_dim(), 2u);
    }
    EXPECT_NE(io::serialize_relation(generate(c, 0).pair->b()) + io::serialize_relation(generate(c, 1).pair->b()),
              io::serialize_relation(generate(c, 0).pair->b()) + io::serialize_relation(generate(c, 0).pair->b()));
}

TEST(Generate, StrategiesKeepTheirPromises) {
    for (std::size_t i = 0; i < 30; ++i) {
        HypothesisReport k = hypotheses(*generate(config(Strategy::k_filtered, 1), i).pair);
        EXPECT_TRUE(k.k_pair());
        HypothesisReport h = hypotheses(*generate(config(Strategy::h_filtered, 1), i).pair);
        EXPECT_TRUE(h.h1 && h.h2);
        Generated f = generate(config(Strategy::full_hypotheses, 1), i);
        ASSERT_TRUE(f.hypotheses);
        EXPECT_TRUE(hypotheses(*f.pair).all());
        EXPECT_EQ(*f.hypotheses, hypotheses(*f.pair));
        DualPair s = *generate(config(Strategy::selfadjoint_subspace, 1), i).pair;
        EXPECT_EQ(s.a(), s.b());
        EXPECT_TRUE(is_hermitian(s.a()));
        DualPair iso = *generate(config(Strategy::isotropic, 1), i).pair;
        EXPECT_TRUE(is_hermitian(iso.a()));
        EXPECT_EQ(generate(config(Strategy::free, 1), i).attempts, 1u);
    }
}

TEST(Generate, StarvationIsReportedNotThrown) {
    GenConfig c = config(Strategy::full_hypotheses, 30);
    c.retry_budget = 1;
    std::size_t starved = 0;
    for (std::size_t i = 0; i < c.trials; ++i) starved += generate(c, i).pair ? 0 : 1;
    EXPECT_GT(starved, 0u);
    VerificationReport rep = run_campaign(c, {"degeneracy"});
    EXPECT_EQ(rep.starved, starved);
    EXPECT_EQ(rep.records.size(), c.trials);
    EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Generate, ConfigValidation) {
    GenConfig c;
    c.dim_min = 0;
    EXPECT_THROW(c.validate(), precondition_error);
    c.dim_min = 3;
    c.dim_max = 2;
    EXPECT_THROW(c.validate(), precondition_error);
    c.dim_max = GenConfig::kMaxDim + 1;
    EXPECT_THROW(c.validate(), precondition_error);
    c = GenConfig{};
    c.entry_bound = 0;
    EXPECT_THROW(c.validate(), precondition_error);
    EXPECT_FALSE(parse_strategy("bogus"));
    EXPECT_EQ(parse_strategy("dual-pair"), Strategy::dual_pair);
}

TEST(ExtensionProbe, CannedInstances) {
    Lemma32Probe a = lemma32_probe(g1(), swap());
    EXPECT_EQ(a.n_pm, (DeficiencyPair{1, 1}));
    EXPECT_EQ(a.d1, 1u);
    EXPECT_EQ(a.d2, 0u);
    EXPECT_TRUE(a.graph_version_holds);
    EXPECT_FALSE(a.domain_version_holds);

    Lemma32Probe b = lemma32_probe(LinearRelation::zero(1), LinearRelation::domain_everything_to_zero(1));
    EXPECT_EQ(b.n_pm, (DeficiencyPair{1, 1}));
    EXPECT_EQ(b.d1, 1u);
    EXPECT_EQ(b.d2, 0u);
    EXPECT_TRUE(b.graph_version_holds);
    EXPECT_FALSE(b.domain_version_holds);

    Lemma32Probe c = lemma32_probe(swap(), swap());
    EXPECT_TRUE(c.graph_version_holds && c.domain_version_holds);
    EXPECT_EQ(c.n_pm, (DeficiencyPair{0, 0}));

    EXPECT_THROW(lemma32_probe(swap(), g1()), precondition_error);
    EXPECT_THROW(lemma32_probe(g1(), LinearRelation::graph_of(Matrix{{1, 0}, {0, 1}})), precondition_error);
}

TEST(Campaign, SuiteNames) {
    EXPECT_EQ(normalize_suites({}).size(), kSuites.size());
    EXPECT_EQ(normalize_suites({"vn-formula", "arens", "arens"}), (std::vector<std::string>{"arens", "vn-formula"}));
    EXPECT_THROW(normalize_suites({"nope"}), precondition_error);
    EXPECT_THROW(run_campaign(config(Strategy::free, 2), {"nope"}), precondition_error);
}

TEST(Campaign, ReportIndependentOfThreadCount) {
    GenConfig c = config(Strategy::free, 24, 9);
    c.dim_max = 4;
    CampaignOptions one, three;
    three.threads = 3;
    std::string a = io::dump(io::verification_report_to_json(run_campaign(c, {}, one)));
    std::string b = io::dump(io::verification_report_to_json(run_campaign(c, {}, three)));
    EXPECT_EQ(a, b);
}

TEST(Campaign, AggregatesRecomputableFromRecords) {
    GenConfig c = config(Strategy::free, 40, 3);
    c.dim_max = 4;
    VerificationReport rep = run_campaign(c, {});
    EXPECT_EQ(rep.records.size(), c.trials);
    std::map<std::string, CheckAggregate> again;
    std::size_t full = 0;
    for (const auto& r : rep.records) {
        if (!r.starved && r.hypotheses.all()) ++full;
        for (const auto& ch : r.checks) {
            CheckAggregate& a = again[ch.name];
            if (ch.outcome == Outcome::not_applicable) ++a.not_applicable;
            else if (ch.tier == Tier::asserted) ++(ch.outcome == Outcome::pass ? a.asserted_pass : a.asserted_fail);
            else ++(ch.outcome == Outcome::pass ? a.recorded_pass : a.recorded_fail);
        }
    }
    ASSERT_EQ(again.size(), rep.aggregates.size());
    std::size_t asserted_fail = 0;
    for (const auto& [name, a] : rep.aggregates) {
        const CheckAggregate& b = again[name];
        EXPECT_EQ(a.asserted_pass, b.asserted_pass) << name;
        EXPECT_EQ(a.asserted_fail, b.asserted_fail) << name;
        EXPECT_EQ(a.recorded_pass, b.recorded_pass) << name;
        EXPECT_EQ(a.recorded_fail, b.recorded_fail) << name;
        EXPECT_EQ(a.not_applicable, b.not_applicable) << name;
        asserted_fail += a.asserted_fail;
    }
    EXPECT_EQ(asserted_fail, rep.falsifications.size());
    EXPECT_EQ(full, rep.full_hypotheses_population);
    EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Campaign, OverrideTurnsNotApplicableIntoRecorded) {
    GenConfig c = config(Strategy::free, 30, 5);
    c.dim_max = 3;
    VerificationReport plain = run_campaign(c, {"e1e2", "q-iso"});
    CampaignOptions o;
    o.override_hypotheses = true;
    VerificationReport forced = run_campaign(c, {"e1e2", "q-iso"}, o);
    EXPECT_GT(plain.aggregates.at("e1e2.e1").not_applicable, 0u);
    EXPECT_EQ(forced.aggregates.at("e1e2.e1").not_applicable, 0u);
    const CheckAggregate& f = forced.aggregates.at("e1e2.e1");
    EXPECT_EQ(f.recorded_pass + f.recorded_fail, plain.aggregates.at("e1e2.e1").not_applicable);
    EXPECT_GT(f.recorded_fail, 0u);
    // Recorded failures never count as falsifications.
    EXPECT_TRUE(forced.falsifications.empty());
}

TEST(Campaign, SmallFreeCampaignHasNoFalsifications) {
    GenConfig c = config(Strategy::free, 60, 1);
    VerificationReport rep = run_campaign(c, {});
    for (const auto& f : rep.falsifications) ADD_FAILURE() << f.index << " " << f.check << " " << f.detail;
    EXPECT_GT(rep.coverage.at("arens.multivalued").count, 0u);
    EXPECT_GT(rep.coverage.at("q-iso.kernel_nonzero").count, 0u);
    EXPECT_GT(rep.aggregates.at("lemma32-probe.domain_version").recorded_fail, 0u);
}
