#include <gtest/gtest.h>

#include "linrel/generate.hpp"
#include "oracle.hpp"

using namespace linrel;

namespace {

const Scalar I = Scalar::i();

Vector e(std::size_t n, std::size_t k) { return Vector::unit(n, k); }

LinearRelation mult(const Scalar& a) {
    Matrix m(1, 1);
    m(0, 0) = a;
    return LinearRelation::graph_of(m);
}

LinearRelation diag12() { return LinearRelation::graph_of(Matrix{{1, 0}, {0, 2}}); }
LinearRelation g1() { return LinearRelation::from_pairs(2, {{e(2, 0), e(2, 1)}}); }
LinearRelation sa2() { return LinearRelation::from_pairs(2, {{e(2, 0), e(2, 0)}, {Vector::zero(2), e(2, 1)}}); }

// {(f, g) : g1 = f2}, written out by hand.
LinearRelation g1_star() {
    return LinearRelation::from_pairs(2, {{e(2, 0), Vector::zero(2)}, {e(2, 1), e(2, 0)}, {Vector::zero(2), e(2, 1)}});
}

// Mixed corpus: generic relations and subspaces of self-adjoint ones (Hermitian).
LinearRelation draw(Stream& rng, std::size_t n) {
    return rng.chance(1, 3) ? gen::subrelation(rng, gen::selfadjoint(rng, n, 3), 3) : gen::relation(rng, n, 3);
}

}  // namespace

TEST(Relation, FromPairsExamples) {
    LinearRelation m = LinearRelation::from_pairs(1, {{Vector{1}, Vector{I}}});
    EXPECT_EQ(m.dim(), 1u);
    EXPECT_EQ(m, mult(I));
    EXPECT_EQ(g1().dim(), 1u);
    EXPECT_EQ(LinearRelation::from_pairs(1, {}), LinearRelation::zero(1));
    EXPECT_THROW(LinearRelation::from_pairs(2, {{Vector{1}, Vector{1, 0}}}), dimension_error);
}

TEST(Relation, PartsExamples) {
    RelationParts p = parts(g1());
    EXPECT_EQ(p.domain, Subspace::span({e(2, 0)}, 2));
    EXPECT_EQ(p.range, Subspace::span({e(2, 1)}, 2));
    EXPECT_TRUE(p.kernel.is_zero());
    EXPECT_TRUE(p.multivalued.is_zero());

    RelationParts m0 = parts(LinearRelation::zero_to_everything(1));
    EXPECT_TRUE(m0.domain.is_zero());
    EXPECT_EQ(m0.range, Subspace::full(1));
    EXPECT_EQ(m0.multivalued, Subspace::full(1));

    EXPECT_FALSE(image_of(g1(), e(2, 1)).representative);
    Image at_e1 = image_of(g1(), e(2, 0));
    ASSERT_TRUE(at_e1.representative);
    EXPECT_EQ(*at_e1.representative, e(2, 1));
    EXPECT_THROW(image_of(g1(), e(3, 0)), dimension_error);
}

TEST(Relation, AlgebraExamples) {
    EXPECT_EQ(shift(mult(I), I), LinearRelation::domain_everything_to_zero(1));
    EXPECT_EQ(rel_sum(mult(2), mult(3)), mult(5));
    EXPECT_EQ(inverse(g1()), LinearRelation::from_pairs(2, {{e(2, 1), e(2, 0)}}));
    EXPECT_EQ(scalar_mul(mult(2), I), mult(Scalar(2) * I));
    // Coupled sum on a shared x: D(M0) = {0} leaves only M0, not the span of both graphs.
    LinearRelation m0 = LinearRelation::zero_to_everything(1);
    EXPECT_EQ(rel_sum(mult(1), m0), m0);
    EXPECT_EQ(rel_sum(LinearRelation::zero(1), mult(1)), LinearRelation::zero(1));
}

TEST(Relation, DirectSumPreconditions) {
    LinearRelation x0 = LinearRelation::domain_everything_to_zero(1), m0 = LinearRelation::zero_to_everything(1);
    EXPECT_EQ(direct_sum(x0, m0), LinearRelation::full(1));
    EXPECT_EQ(orth_sum(x0, m0), LinearRelation::full(1));
    EXPECT_THROW(direct_sum(mult(1), mult(1)), precondition_error);
    // Transversal but not orthogonal.
    EXPECT_EQ(direct_sum(mult(1), m0), LinearRelation::full(1));
    EXPECT_THROW(orth_sum(mult(1), m0), precondition_error);
    EXPECT_THROW(direct_sum(mult(1), g1()), dimension_error);
}

TEST(Relation, ProductExamples) {
    EXPECT_EQ(product(mult(3), mult(2)), mult(6));
    EXPECT_EQ(product(LinearRelation::domain_everything_to_zero(1), LinearRelation::zero_to_everything(1)),
              LinearRelation::zero(1));
    EXPECT_EQ(product(g1_star(), g1_star()), LinearRelation::full(2));
    EXPECT_EQ(product(g1(), g1()), LinearRelation::zero(2));
}

TEST(Relation, AdjointExamples) {
    EXPECT_EQ(adjoint(mult(I)), mult(-I));
    LinearRelation m0 = LinearRelation::zero_to_everything(1), x0 = LinearRelation::domain_everything_to_zero(1);
    EXPECT_EQ(adjoint(m0), m0);
    EXPECT_EQ(adjoint(x0), x0);
    EXPECT_EQ(adjoint(g1()), g1_star());
    EXPECT_EQ(adjoint(g1()).dim(), 3u);
    EXPECT_EQ(adjoint(LinearRelation::zero(1)), LinearRelation::full(1));
}

TEST(Relation, ArensExamples) {
    LinearRelation m0 = LinearRelation::zero_to_everything(1);
    ArensParts a = arens_decompose(m0);
    EXPECT_EQ(a.op_part, LinearRelation::zero(1));
    EXPECT_EQ(a.multi_part, m0);

    ArensParts d = arens_decompose(diag12());
    EXPECT_EQ(d.op_part, diag12());
    EXPECT_EQ(d.multi_part, LinearRelation::zero(2));

    ArensParts s = arens_decompose(sa2());
    EXPECT_EQ(s.op_part, LinearRelation::from_pairs(2, {{e(2, 0), e(2, 0)}}));
    EXPECT_EQ(s.multi_part, LinearRelation::multivalued(Subspace::span({e(2, 1)}, 2)));
}

TEST(Relation, ArensChecksRejectAWrongSplit) {
    // Feeding the checks a non-orthogonal split must fail reconstruction or range orthogonality.
    LinearRelation t = sa2();
    ArensParts bad{LinearRelation::from_pairs(2, {{e(2, 0), e(2, 0) + e(2, 1)}}),
                   LinearRelation::multivalued(Subspace::span({e(2, 1)}, 2))};
    ArensChecks c = arens_checks(t, bad);
    EXPECT_FALSE(c.all());
    EXPECT_FALSE(c.range_orthogonal);
}

TEST(Relation, OperatorPartExamples) {
    EXPECT_EQ(apply_operator_part(g1_star(), e(2, 0)), Vector::zero(2));
    EXPECT_EQ(apply_operator_part(sa2(), e(2, 0)), e(2, 0));
    EXPECT_EQ(apply_operator_part(diag12(), e(2, 1)), Scalar(2) * e(2, 1));
    EXPECT_THROW(apply_operator_part(g1(), e(2, 1)), precondition_error);
}

TEST(Relation, HermitianExamples) {
    EXPECT_TRUE(is_hermitian(diag12()));
    EXPECT_TRUE(is_selfadjoint(diag12()));
    EXPECT_TRUE(is_hermitian(g1()));
    EXPECT_FALSE(is_selfadjoint(g1()));
    EXPECT_FALSE(is_hermitian(mult(I)));
    EXPECT_TRUE(is_selfadjoint(sa2()));
}

TEST(Relation, DeficiencyExamples) {
    EXPECT_EQ(m_lambda(LinearRelation::zero(1), Scalar(3) * I), Subspace::full(1));
    EXPECT_EQ(deficiency(LinearRelation::zero(1)), (DeficiencyPair{1, 1}));
    EXPECT_EQ(m_lambda(g1(), I), Subspace::span({Vector{1, I}}, 2));
    EXPECT_EQ(m_lambda(g1(), Scalar(2)), Subspace::span({Vector{1, 2}}, 2));
    EXPECT_EQ(deficiency(g1()), (DeficiencyPair{1, 1}));
    EXPECT_EQ(deficiency(diag12()), (DeficiencyPair{0, 0}));
    EXPECT_THROW(deficiency(mult(I)), precondition_error);
}

TEST(Relation, VonNeumannExamples) {
    EXPECT_TRUE(von_neumann_check(LinearRelation::zero(1)));
    EXPECT_TRUE(von_neumann_check(diag12()));
    EXPECT_TRUE(von_neumann_check(g1()));
    EXPECT_THROW(von_neumann_check(mult(I)), precondition_error);
}

TEST(Relation, SelfAdjointExtensionExamples) {
    for (const LinearRelation& h : {LinearRelation::zero(1), g1(), diag12(), sa2(), LinearRelation::zero(3)}) {
        LinearRelation t = self_adjoint_extension(h);
        EXPECT_TRUE(is_selfadjoint(t));
        EXPECT_TRUE(t.contains(h));
    }
    EXPECT_THROW(self_adjoint_extension(mult(I)), precondition_error);
}

TEST(RelationProperty, AdjointAndProductMatchOracle) {
    Stream rng(31, 0);
    for (int t = 0; t < 150; ++t) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        LinearRelation a = draw(rng, n), b = draw(rng, n);
        LinearRelation as = adjoint(a);
        ASSERT_TRUE(oracle::same_span(as.graph(), oracle::adjoint(a.graph().basis(), n)));
        LinearRelation ab = product(a, b);
        ASSERT_TRUE(oracle::same_span(ab.graph(), oracle::product(a.graph().basis(), b.graph().basis(), n)));
    }
}

TEST(RelationProperty, AdjointIdentities) {
    Stream rng(32, 0);
    for (int t = 0; t < 300; ++t) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 6));
        LinearRelation a = draw(rng, n);
        LinearRelation as = adjoint(a);
        ASSERT_EQ(adjoint(as), a);
        ASSERT_EQ(a.dim() + as.dim(), 2 * n);
        Subspace d = domain(a), r = range(a), m = multivalued_part(a);
        ASSERT_EQ(multivalued_part(as), orth_complement(d));
        ASSERT_EQ(kernel(as), orth_complement(r));
        ASSERT_EQ(domain(as), orth_complement(m));
        // The defining form vanishes on generator pairs.
        for (const auto& [f, g] : as.pairs())
            for (const auto& [x, y] : a.pairs()) ASSERT_EQ(inner(g, x), inner(f, y));
    }
}

TEST(RelationProperty, ProductAdjointContainment) {
    Stream rng(33, 0);
    for (int t = 0; t < 200; ++t) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        LinearRelation a = draw(rng, n), b = draw(rng, n);
        ASSERT_TRUE(adjoint(product(a, b)).contains(product(adjoint(b), adjoint(a))));
        ASSERT_EQ(inverse(inverse(a)), a);
        ASSERT_EQ(adjoint(inverse(a)), inverse(adjoint(a)));
    }
}

TEST(RelationProperty, ArensDecomposition) {
    Stream rng(34, 0);
    for (int t = 0; t < 300; ++t) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 6));
        LinearRelation a = draw(rng, n);
        ArensParts p = detail::arens_split(a);
        ArensChecks c = arens_checks(a, p);
        ASSERT_TRUE(c.all());
        ASSERT_EQ(p.op_part.dim(), domain(a).dim());
        Subspace d = domain(a);
        for (const auto& f : d.basis()) {
            Vector y = apply_operator_part(a, f);
            ASSERT_TRUE(a.contains(f, y));
            ASSERT_TRUE(p.op_part.contains(f, y));
        }
    }
}

TEST(RelationProperty, DeficiencyAndVonNeumannOnHermitianRelations) {
    Stream rng(35, 0);
    int selfadjoint_seen = 0, deficient_seen = 0;
    for (int t = 0; t < 300; ++t) {
        auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        LinearRelation sa = gen::selfadjoint(rng, n, 3);
        ASSERT_TRUE(is_selfadjoint(sa));
        ASSERT_EQ(deficiency(sa), (DeficiencyPair{0, 0}));
        LinearRelation h = rng.chance(1, 2) ? gen::subrelation(rng, sa, 3) : gen::isotropic(rng, n, 3);
        ASSERT_TRUE(is_hermitian(h));
        DeficiencyPair d = deficiency(h);
        ASSERT_EQ(d.n_plus, d.n_minus);
        ASSERT_EQ(d.n_plus + h.dim(), n);
        if (d.n_plus == 0) {
            ASSERT_TRUE(is_selfadjoint(h));
            ++selfadjoint_seen;
        } else {
            ++deficient_seen;
        }
        ASSERT_TRUE(von_neumann_check(h));
        // Same dimension at other points of each half-plane.
        ASSERT_EQ(m_lambda(h, Scalar(2) * I).dim(), d.n_plus);
        ASSERT_EQ(m_lambda(h, Scalar(1) + I).dim(), d.n_plus);
        ASSERT_EQ(m_lambda(h, Scalar(-1) - I).dim(), d.n_minus);
        LinearRelation ext = self_adjoint_extension(h);
        ASSERT_TRUE(is_selfadjoint(ext) && ext.contains(h));
    }
    EXPECT_GT(selfadjoint_seen, 0);
    EXPECT_GT(deficient_seen, 0);
}
