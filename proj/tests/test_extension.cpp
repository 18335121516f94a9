#include <gtest/gtest.h>

#include "linrel/extension.hpp"
#include "linrel/generate.hpp"

using namespace linrel;

namespace {

Vector e(std::size_t n, std::size_t k) { return Vector::unit(n, k); }

LinearRelation g1() { return LinearRelation::from_pairs(2, {{e(2, 0), e(2, 1)}}); }
LinearRelation sa2() { return LinearRelation::from_pairs(2, {{e(2, 0), e(2, 0)}, {Vector::zero(2), e(2, 1)}}); }
LinearRelation swap() { return LinearRelation::graph_of(Matrix{{0, 1}, {1, 0}}); }

DualPair g1_pair() { return {g1(), g1()}; }
DualPair sa2_pair() { return {sa2(), sa2()}; }

QuotientProfile profile(std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return {a, b, c, d}; }

}  // namespace

TEST(Extension, MakeExtensionExamples) {
    ProperExtension s = make_extension(g1_pair(), {{e(2, 1), e(2, 0)}});
    EXPECT_EQ(s.ext(), swap());
    EXPECT_EQ(make_extension(g1_pair(), {}).ext(), g1());
    try {
        make_extension(g1_pair(), {{e(2, 0), e(2, 0)}});
        FAIL() << "(e1, e1) accepted";
    } catch (const not_proper_extension_error& err) {
        EXPECT_EQ(err.generator.first, e(2, 0));
    }
    EXPECT_THROW(make_extension(g1_pair(), {{e(3, 0), e(3, 0)}}), dimension_error);
    EXPECT_THROW(ProperExtension(g1_pair(), LinearRelation::zero(2)), precondition_error);
}

TEST(Extension, ProfileExamples) {
    ProperExtension s(g1_pair(), swap());
    EXPECT_EQ(quotient_profile(s), profile(1, 1, 0, 0));
    EXPECT_TRUE(is_quasi_selfadjoint(s));
    ProperExtension a(sa2_pair(), sa2());
    EXPECT_EQ(quotient_profile(a), profile(0, 0, 0, 0));
    EXPECT_TRUE(is_quasi_selfadjoint(a));
    ProperExtension g(g1_pair(), g1());
    EXPECT_EQ(quotient_profile(g), profile(0, 1, 1, 0));
    EXPECT_FALSE(is_quasi_selfadjoint(g));
}

TEST(Extension, DimensionFormulaExamples) {
    Thm33Result a = check_thm33(ProperExtension(sa2_pair(), sa2()));
    EXPECT_TRUE(a.gated);
    EXPECT_TRUE(a.e32);
    EXPECT_EQ(a.e33, std::optional<bool>(true));
    EXPECT_EQ(a.parity, std::optional<bool>(true));

    Thm33Result s = check_thm33(ProperExtension(g1_pair(), swap()));
    EXPECT_FALSE(s.gated);
    EXPECT_FALSE(s.e32);

    Thm33Result g = check_thm33(ProperExtension(g1_pair(), g1()));
    EXPECT_FALSE(g.gated);
    EXPECT_TRUE(g.e32);
    EXPECT_FALSE(g.e33.has_value());
}

TEST(Extension, SufficiencyExamples) {
    Thm34Result a = check_thm34(ProperExtension(sa2_pair(), sa2()));
    EXPECT_TRUE(a.e37 && a.implication);
    Thm34Result s = check_thm34(ProperExtension(g1_pair(), swap()));
    EXPECT_FALSE(s.e37);
    EXPECT_TRUE(s.implication);
    // A = B*: take the self-adjoint pair and Ã = B*.
    DualPair d(LinearRelation::graph_of(Matrix{{1, 0}, {0, 2}}), LinearRelation::graph_of(Matrix{{1, 0}, {0, 2}}));
    Thm34Result t = check_thm34(ProperExtension(d, d.b_star()));
    EXPECT_TRUE(t.e37 && t.implication);
}

TEST(Extension, ReportNullsOutsideHypotheses) {
    ExtensionReport s = extension_report(ProperExtension(g1_pair(), swap()));
    EXPECT_TRUE(s.quasi);
    EXPECT_FALSE(s.e32.has_value());
    EXPECT_FALSE(s.thm34.has_value());
    EXPECT_FALSE(s.recorded33.e32);
    ExtensionReport a = extension_report(ProperExtension(sa2_pair(), sa2()));
    EXPECT_EQ(a.e32, std::optional<bool>(true));
    EXPECT_EQ(a.thm34, std::optional<bool>(true));
}

TEST(Extension, SampleExamples) {
    DualPair p = g1_pair();
    for (const auto& x : sample_extensions(p, 2, 4, 99)) EXPECT_EQ(x.ext(), p.b_star());
    for (const auto& x : sample_extensions(p, 0, 3, 99)) EXPECT_EQ(x.ext(), p.a());
    auto first = sample_extensions(p, 1, 5, 7), again = sample_extensions(p, 1, 5, 7);
    ASSERT_EQ(first.size(), 5u);
    for (std::size_t i = 0; i < first.size(); ++i) {
        EXPECT_EQ(first[i].ext(), again[i].ext());
        EXPECT_EQ(first[i].ext().dim(), 2u);
        EXPECT_TRUE(first[i].ext().contains(p.a()));
        EXPECT_TRUE(p.b_star().contains(first[i].ext()));
    }
    EXPECT_THROW(sample_extensions(p, 3, 1, 7), precondition_error);
}

TEST(Extension, CorrectnessProbeExamples) {
    CorrectnessProbe g = correctness_probe(g1_pair(), 8, 1);
    EXPECT_TRUE(g.found);
    ASSERT_TRUE(g.witness);
    EXPECT_TRUE(is_quasi_selfadjoint(*g.witness));
    EXPECT_FALSE(g.parity_condition.has_value());

    CorrectnessProbe s = correctness_probe(sa2_pair(), 8, 1);
    EXPECT_TRUE(s.found);
    EXPECT_EQ(s.tried, 1u);
    EXPECT_EQ(s.witness->ext(), sa2());
    EXPECT_EQ(s.parity_condition, std::optional<bool>(true));

    EXPECT_EQ(correctness_probe(g1_pair(), 0, 1).tried, 0u);
}

TEST(ExtensionProperty, TowerIdentitiesAndContainments) {
    GenConfig c;
    c.seed = 51;
    c.dim_max = 5;
    std::size_t extensions = 0;
    for (std::size_t i = 0; i < 80; ++i) {
        DualPair p = *generate(c, i).pair;
        const std::size_t m = completion_basis(p).size();
        ASSERT_EQ(m, p.b_star().dim() - p.a().dim());
        for (std::size_t k = 0; k <= m; ++k) {
            for (const auto& x : sample_extensions(p, k, 2, i)) {
                ++extensions;
                ASSERT_TRUE(x.ext_star().contains(p.b()));
                ASSERT_TRUE(p.a_star().contains(x.ext_star()));
                ASSERT_TRUE(tower_identities_hold(x));
                QuotientProfile q = quotient_profile(x);
                Surplus s = surplus(p);
                ASSERT_EQ(q.d_extstar_over_b + q.d_astar_over_extstar, s.n_ab);
                ASSERT_TRUE(check_thm34(x).implication || !check_thm34(x).gated);
            }
        }
    }
    EXPECT_GT(extensions, 80u);
}

TEST(ExtensionProperty, FullHypothesesFormulasHold) {
    GenConfig c;
    c.seed = 52;
    c.strategy = Strategy::full_hypotheses;
    c.dim_max = 4;
    for (std::size_t i = 0; i < 40; ++i) {
        Generated g = generate(c, i);
        ASSERT_TRUE(g.pair);
        const DualPair& p = *g.pair;
        const std::size_t m = completion_basis(p).size();
        ASSERT_EQ(m, 0u);  // A = B*
        ProperExtension x(p, p.a());
        Thm33Result r = check_thm33(x);
        ASSERT_TRUE(r.gated && r.e32 && r.e33.value_or(false));
        ASSERT_TRUE(check_thm34(x).implication);
    }
}
