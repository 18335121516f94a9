#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linrel/relation.hpp"

namespace linrel {

// Raised when A ⊄ B*; carries generators (f,g) ∈ A and (h,k) ∈ B with <g,h> ≠ <f,k>.
class not_dual_pair_error : public precondition_error {
public:
    not_dual_pair_error(std::pair<Vector, Vector> from_a, std::pair<Vector, Vector> from_b)
        : precondition_error("not a dual pair: <g,h> != <f,k> for a generator (f,g) of A and (h,k) of B"),
          a_witness(std::move(from_a)),
          b_witness(std::move(from_b)) {}
    std::pair<Vector, Vector> a_witness;
    std::pair<Vector, Vector> b_witness;
};

// Whether hypothesis-gated operations refuse (enforced) or evaluate anyway
// (bypassed, used by the necessity prober).
enum class Gating { enforced, bypassed };

/*
 * Dual pair {A, B}: A ⊆ B* (equivalently B ⊆ A*), validated at construction,
 * with both adjoints cached.
 */
class DualPair {
public:
    DualPair(LinearRelation a, LinearRelation b) : a_(std::move(a)), b_(std::move(b)) {
        detail::check_same_space(a_, b_);
        for (const auto& [f, g] : a_.pairs())
            for (const auto& [h, k] : b_.pairs())
                if (!(inner(g, h) == inner(f, k))) throw not_dual_pair_error({f, g}, {h, k});
        a_star_ = adjoint(a_);
        b_star_ = adjoint(b_);
        if (!b_star_.contains(a_) || !a_star_.contains(b_))
            throw internal_error("dual pair generator check disagrees with adjoint containment");
    }

    [[nodiscard]] std::size_t space_dim() const { return a_.space_dim(); }
    [[nodiscard]] const LinearRelation& a() const { return a_; }
    [[nodiscard]] const LinearRelation& b() const { return b_; }
    [[nodiscard]] const LinearRelation& a_star() const { return a_star_; }
    [[nodiscard]] const LinearRelation& b_star() const { return b_star_; }

private:
    LinearRelation a_, b_, a_star_, b_star_;
};

inline DualPair new_dual_pair(LinearRelation a, LinearRelation b) { return {std::move(a), std::move(b)}; }

struct HypothesisReport {
    bool h1 = false;  // (A*)_s|D(B) = B_s
    bool h2 = false;  // (B*)_s|D(A) = A_s
    bool k1 = false;  // B*(0) ∩ N(A*) = {0}
    bool k2 = false;  // A*(0) ∩ N(B*) = {0}

    [[nodiscard]] bool k_pair() const { return k1 && k2; }
    [[nodiscard]] bool all() const { return h1 && h2 && k1 && k2; }
    friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

namespace detail {

// (T*)_s|D(U) = U_s, checked pointwise on a basis of D(U). Requires U ⊆ T*.
inline bool operator_parts_agree(const LinearRelation& t_star, const LinearRelation& u) {
    Subspace d = domain(u);
    for (const auto& f : d.basis())
        if (!(apply_operator_part(t_star, f) == apply_operator_part(u, f))) return false;
    return true;
}

// Finite-dimensional form of the same statement: R(U_s) ⊆ D(T).
inline bool operator_range_inside(const LinearRelation& u, const LinearRelation& t) {
    return domain(t).contains(range(arens_decompose(u).op_part));
}

}  // namespace detail

// The four standing hypotheses, each computed by two independent routes.
inline HypothesisReport hypotheses(const DualPair& p) {
    const std::size_t n = p.space_dim();
    HypothesisReport direct{
        detail::operator_parts_agree(p.a_star(), p.b()),
        detail::operator_parts_agree(p.b_star(), p.a()),
        intersect(multivalued_part(p.b_star()), kernel(p.a_star())).is_zero(),
        intersect(multivalued_part(p.a_star()), kernel(p.b_star())).is_zero(),
    };
    HypothesisReport dual{
        detail::operator_range_inside(p.b(), p.a()),
        detail::operator_range_inside(p.a(), p.b()),
        sum_subspaces(domain(p.b()), range(p.a())).dim() == n,
        sum_subspaces(domain(p.a()), range(p.b())).dim() == n,
    };
    if (!(direct == dual)) throw internal_error("hypothesis routes disagree");
    return direct;
}

struct Surplus {
    std::size_t n_ab = 0;  // dim(D(A*)/D(B))
    std::size_t n_ba = 0;  // dim(D(B*)/D(A))
};

inline Surplus surplus(const DualPair& p) {
    return {quotient_dim(domain(p.a_star()), domain(p.b())), quotient_dim(domain(p.b_star()), domain(p.a()))};
}

// Gram matrix of <f,g>_{+T} = <f,g> + <(T*)_s f, (T*)_s g> on the canonical basis of D(T*).
struct PlusGram {
    Subspace space;  // D(T*)
    Matrix gram;
};

inline PlusGram plus_gram_of(const LinearRelation& t_star) {
    Subspace d = domain(t_star);
    std::vector<Vector> images;
    for (const auto& f : d.basis()) images.push_back(apply_operator_part(t_star, f));
    const std::size_t m = d.dim();
    Matrix g(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            g(j, k) = inner(d.basis()[j], d.basis()[k]) + inner(images[j], images[k]);
    if (!is_hermitian_positive_definite(g)) throw internal_error("plus inner product is not positive definite");
    return {std::move(d), std::move(g)};
}

// X_{+A}: D(A*) with the +A form.
inline PlusGram plus_gram(const DualPair& p) { return plus_gram_of(p.a_star()); }

// Evaluates form(u, v) for u, v in the space of a PlusGram.
inline Scalar plus_form(const PlusGram& pg, const Vector& u, const Vector& v) {
    auto a = pg.space.coordinates(u);
    auto b = pg.space.coordinates(v);
    if (!a || !b) throw precondition_error("plus_form: argument outside D(T*)");
    Scalar acc;
    for (std::size_t j = 0; j < a->size(); ++j) {
        if ((*a)[j].is_zero()) continue;
        for (std::size_t k = 0; k < b->size(); ++k)
            if (!(*b)[k].is_zero()) acc += (*a)[j] * pg.gram(j, k) * (*b)[k].conj();
    }
    return acc;
}

namespace detail {

// {g : (g, −g) ∈ R}
inline Subspace minus_one_slice(const LinearRelation& r) {
    const std::size_t n = r.space_dim();
    Subspace anti = LinearRelation::graph_of(Scalar(-1) * Matrix::identity(n)).graph();
    std::vector<Vector> v;
    Subspace slice = intersect(r.graph(), anti);
    for (const auto& b : slice.basis()) v.push_back(b.slice(0, n));
    return Subspace::span(v, n);
}

}  // namespace detail

struct KernelSpaces {
    Subspace k_ba;  // N(1 + B*A*)
    Subspace k_ab;  // N(1 + A*B*)
};

inline KernelSpaces kernel_spaces(const DualPair& p) {
    return {detail::minus_one_slice(product(p.b_star(), p.a_star())),
            detail::minus_one_slice(product(p.a_star(), p.b_star()))};
}

struct Decomposition {
    Subspace first;   // D(B) for (e1), D(A) for (e2)
    Subspace second;  // the kernel space
    bool trivial_intersection = false;
    bool spans = false;
    bool gram_orthogonal = false;
    [[nodiscard]] bool holds() const { return trivial_intersection && spans && gram_orthogonal; }
};

namespace detail {

inline Decomposition decompose(const LinearRelation& t_star, const Subspace& first, const Subspace& second) {
    Decomposition d{first, second};
    Subspace target = domain(t_star);
    d.trivial_intersection = intersect(first, second).is_zero();
    d.spans = sum_subspaces(first, second) == target;
    PlusGram pg = plus_gram_of(t_star);
    d.gram_orthogonal = true;
    for (const auto& u : first.basis())
        for (const auto& v : second.basis())
            if (!plus_form(pg, u, v).is_zero()) d.gram_orthogonal = false;
    return d;
}

}  // namespace detail

// D(A*) = D(B) ⊕_A N(1 + B*A*). Gated on h1, the only hypothesis its proof uses.
inline Decomposition decompose_e1(const DualPair& p, Gating gating = Gating::enforced) {
    if (gating == Gating::enforced && !hypotheses(p).h1)
        throw hypothesis_error("decompose_e1 requires (A*)_s|D(B) = B_s");
    return detail::decompose(p.a_star(), domain(p.b()), kernel_spaces(p).k_ba);
}

// D(B*) = D(A) ⊕_B N(1 + A*B*). Gated on h2.
inline Decomposition decompose_e2(const DualPair& p, Gating gating = Gating::enforced) {
    if (gating == Gating::enforced && !hypotheses(p).h2)
        throw hypothesis_error("decompose_e2 requires (B*)_s|D(A) = A_s");
    return detail::decompose(p.b_star(), domain(p.a()), kernel_spaces(p).k_ab);
}

/*
 * Q : N(1+B*A*) → N(1+A*B*), (g, Qg) ∈ A* and (Qg, −g) ∈ B*.
 * Returned as the matrix whose column j holds the K_ab coordinates of Q applied
 * to the j-th canonical basis vector of K_ba. Requires k1 ∧ k2.
 */
inline Matrix q_map(const DualPair& p) {
    if (!hypotheses(p).k_pair()) throw hypothesis_error("q_map requires B*(0) ∩ N(A*) = {0} and A*(0) ∩ N(B*) = {0}");
    const std::size_t n = p.space_dim();
    KernelSpaces ks = kernel_spaces(p);
    const auto& as = p.a_star().graph().basis();
    const auto& bs = p.b_star().graph().basis();
    const std::size_t ca = as.size(), cb = bs.size();
    // Unknowns (c, d): sum c_j x(a*_j) = g, sum c_j y(a*_j) − sum d_l x(b*_l) = 0, sum d_l y(b*_l) = −g.
    std::vector<Vector> cols(ca + cb, Vector(3 * n));
    for (std::size_t j = 0; j < ca; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            cols[j][i] = as[j][i];
            cols[j][n + i] = as[j][n + i];
        }
    for (std::size_t l = 0; l < cb; ++l)
        for (std::size_t i = 0; i < n; ++i) {
            cols[ca + l][n + i] = -bs[l][i];
            cols[ca + l][2 * n + i] = bs[l][n + i];
        }
    auto h_of = [&](const Vector& coeffs) {
        Vector h(n);
        for (std::size_t j = 0; j < ca; ++j)
            if (!coeffs[j].is_zero()) h.axpy(coeffs[j], as[j].slice(n, n));
        return h;
    };

    Matrix q(ks.k_ab.dim(), ks.k_ba.dim());
    for (std::size_t j = 0; j < ks.k_ba.dim(); ++j) {
        const Vector& g = ks.k_ba.basis()[j];
        Vector rhs = concat(concat(g, Vector::zero(n)), -g);
        auto sol = solve(cols, rhs);
        if (!sol.particular) throw internal_error("q_map: kernel vector has no partner");
        for (const auto& z : sol.nullspace.basis())
            if (!h_of(z).is_zero()) throw hypothesis_error("q_map: partner is not unique");
        Vector h = h_of(*sol.particular);
        if (!p.a_star().contains(g, h) || !p.b_star().contains(h, -g))
            throw internal_error("q_map: partner violates its defining memberships");
        auto coords = ks.k_ab.coordinates(h);
        if (!coords) throw internal_error("q_map: image outside N(1+A*B*)");
        for (std::size_t i = 0; i < coords->size(); ++i) q(i, j) = (*coords)[i];
    }
    if (!is_invertible(q)) throw internal_error("q_map is not bijective");
    return q;
}

struct DimEquality {
    bool e6 = false;                // dim N(1+B*A*) = dim N(1+A*B*)
    std::optional<bool> e5;         // n(A*,B) = n(B*,A), present under all four hypotheses
};

inline DimEquality dim_equality(const DualPair& p, Gating gating = Gating::enforced) {
    HypothesisReport h = hypotheses(p);
    if (gating == Gating::enforced && !h.k_pair())
        throw hypothesis_error("dim_equality requires B*(0) ∩ N(A*) = {0} and A*(0) ∩ N(B*) = {0}");
    KernelSpaces ks = kernel_spaces(p);
    DimEquality out{ks.k_ba.dim() == ks.k_ab.dim(), std::nullopt};
    if (h.all() || gating == Gating::bypassed) {
        Surplus s = surplus(p);
        out.e5 = s.n_ab == s.n_ba;
    }
    return out;
}

/*
 * Block relation on X ⊕ X (space dimension 2n), coordinates laid out as
 * (x1, x2 | y1, y2): {((x1,x2),(y1,y2)) : (x1,y2) ∈ lower_left, (x2,y1) ∈ upper_right}.
 * With upper_right = A and lower_left = B this is S; with B*, A* it is S*.
 */
inline LinearRelation block_relation(const LinearRelation& upper_right, const LinearRelation& lower_left) {
    detail::check_same_space(upper_right, lower_left);
    const std::size_t n = upper_right.space_dim();
    std::vector<Vector> gens;
    for (const auto& [x, y] : lower_left.pairs()) {
        Vector g(4 * n);
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = x[i];
            g[3 * n + i] = y[i];
        }
        gens.push_back(std::move(g));
    }
    for (const auto& [x, y] : upper_right.pairs()) {
        Vector g(4 * n);
        for (std::size_t i = 0; i < n; ++i) {
            g[n + i] = x[i];
            g[2 * n + i] = y[i];
        }
        gens.push_back(std::move(g));
    }
    return LinearRelation::from_generators(2 * n, gens);
}

struct BlockS {
    LinearRelation relation;
};

inline BlockS build_S(const DualPair& p) { return {block_relation(p.a(), p.b())}; }

// adjoint(S), computed directly in the doubled space, equals the block assembly of B*, A*.
inline bool s_adjoint_check(const DualPair& p) {
    return adjoint(build_S(p).relation) == block_relation(p.b_star(), p.a_star());
}

/*
 * P : N(S* + i) → N(1+B*A*), first-component projection, as a matrix from the
 * canonical basis of N(S* + i) = M_{−i}(S) to K_ba coordinates. Requires k1 ∧ k2.
 */
inline Matrix p_map(const DualPair& p) {
    if (!hypotheses(p).k_pair()) throw hypothesis_error("p_map requires B*(0) ∩ N(A*) = {0} and A*(0) ∩ N(B*) = {0}");
    const std::size_t n = p.space_dim();
    Subspace m = m_lambda(build_S(p).relation, -Scalar::i());
    Subspace k = kernel_spaces(p).k_ba;
    Matrix out(k.dim(), m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
        auto coords = k.coordinates(m.basis()[j].slice(0, n));
        if (!coords) throw internal_error("p_map: first component outside N(1+B*A*)");
        for (std::size_t i = 0; i < coords->size(); ++i) out(i, j) = (*coords)[i];
    }
    if (!is_invertible(out)) throw internal_error("p_map is not bijective");
    return out;
}

struct SDeficiency {
    DeficiencyPair n;
    std::optional<bool> e13;  // dim N(S* ∓ i) = dim N(1+B*A*), under k1 ∧ k2
    std::optional<bool> e12;  // n+(S) = n−(S) = n(A*,B) = n(B*,A), under all four
};

inline SDeficiency s_deficiency(const DualPair& p, Gating gating = Gating::enforced) {
    HypothesisReport h = hypotheses(p);
    SDeficiency out{deficiency(build_S(p).relation), std::nullopt, std::nullopt};
    const bool bypass = gating == Gating::bypassed;
    if (h.k_pair() || bypass) {
        std::size_t k = kernel_spaces(p).k_ba.dim();
        out.e13 = out.n.n_plus == k && out.n.n_minus == k;
    }
    if (h.all() || bypass) {
        Surplus s = surplus(p);
        out.e12 = out.n.n_plus == out.n.n_minus && out.n.n_minus == s.n_ab && s.n_ab == s.n_ba;
    }
    return out;
}

struct SelfadjointCriterion {
    bool s_selfadjoint = false;
    bool a_equals_b_star = false;
    [[nodiscard]] bool holds() const { return s_selfadjoint == a_equals_b_star; }
};

// S = S* iff A = B*.
inline SelfadjointCriterion selfadjoint_criterion(const DualPair& p) {
    return {is_selfadjoint(build_S(p).relation), p.a() == p.b_star()};
}

// Under all four hypotheses a finite-dimensional dual pair satisfies A = B* and B = A*.
inline bool degeneracy_check(const DualPair& p) {
    if (!hypotheses(p).all()) throw hypothesis_error("degeneracy_check requires all four hypotheses");
    return p.a() == p.b_star() && p.b() == p.a_star();
}

}  // namespace linrel
