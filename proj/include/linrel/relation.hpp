#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linrel/linalg.hpp"

namespace linrel {

/*
 * Linear relation T ⊆ X × X on X = Q(i)^n, stored as its graph: a subspace of
 * Q(i)^{2n} with coordinates ordered (x_1..x_n, y_1..y_n). In finite
 * dimensions every relation is closed, so closedness is never checked.
 */
class LinearRelation {
public:
    LinearRelation() = default;
    LinearRelation(std::size_t space_dim, Subspace graph) : n_(space_dim), graph_(std::move(graph)) {
        graph_.check_ambient(2 * n_);
    }

    static LinearRelation from_pairs(std::size_t n, std::span<const std::pair<Vector, Vector>> pairs) {
        std::vector<Vector> gens;
        gens.reserve(pairs.size());
        for (const auto& [x, y] : pairs) {
            if (x.size() != n || y.size() != n)
                throw dimension_error("relation pair has length (" + std::to_string(x.size()) + ", " +
                                      std::to_string(y.size()) + "), expected " + std::to_string(n));
            gens.push_back(concat(x, y));
        }
        return {n, Subspace::span(gens, 2 * n)};
    }
    static LinearRelation from_pairs(std::size_t n, std::initializer_list<std::pair<Vector, Vector>> pairs) {
        return from_pairs(n, std::span<const std::pair<Vector, Vector>>(pairs.begin(), pairs.size()));
    }
    static LinearRelation from_generators(std::size_t n, std::span<const Vector> gens) {
        return {n, Subspace::span(gens, 2 * n)};
    }

    // {(0,0)}
    static LinearRelation zero(std::size_t n) { return {n, Subspace::zero(2 * n)}; }
    // X × X
    static LinearRelation full(std::size_t n) { return {n, Subspace::full(2 * n)}; }
    // {(x, Mx) : x ∈ X}
    static LinearRelation graph_of(const Matrix& m) {
        if (m.rows() != m.cols()) throw dimension_error("graph_of needs a square matrix");
        const std::size_t n = m.rows();
        std::vector<Vector> gens;
        for (std::size_t k = 0; k < n; ++k) gens.push_back(concat(Vector::unit(n, k), m.column(k)));
        return from_generators(n, gens);
    }
    // {(x, 0) : x ∈ X}
    static LinearRelation domain_everything_to_zero(std::size_t n) { return graph_of(Matrix(n, n)); }
    // {(0, y) : y ∈ X}
    static LinearRelation zero_to_everything(std::size_t n) {
        std::vector<Vector> gens;
        for (std::size_t k = 0; k < n; ++k) gens.push_back(concat(Vector::zero(n), Vector::unit(n, k)));
        return from_generators(n, gens);
    }
    // {(0, y) : y ∈ W}
    static LinearRelation multivalued(const Subspace& w) {
        const std::size_t n = w.ambient_dim();
        std::vector<Vector> gens;
        for (const auto& b : w.basis()) gens.push_back(concat(Vector::zero(n), b));
        return from_generators(n, gens);
    }

    [[nodiscard]] std::size_t space_dim() const { return n_; }
    [[nodiscard]] const Subspace& graph() const { return graph_; }
    [[nodiscard]] std::size_t dim() const { return graph_.dim(); }

    [[nodiscard]] bool contains(const Vector& x, const Vector& y) const { return graph_.contains(concat(x, y)); }
    [[nodiscard]] bool contains(const LinearRelation& other) const { return graph_.contains(other.graph_); }

    // Generators split into their (x, y) halves.
    [[nodiscard]] std::vector<std::pair<Vector, Vector>> pairs() const {
        std::vector<std::pair<Vector, Vector>> out;
        for (const auto& g : graph_.basis()) out.emplace_back(g.slice(0, n_), g.slice(n_, n_));
        return out;
    }

    friend bool operator==(const LinearRelation& a, const LinearRelation& b) = default;

private:
    std::size_t n_ = 0;
    Subspace graph_;
};

namespace detail {

inline void check_same_space(const LinearRelation& a, const LinearRelation& b) {
    if (a.space_dim() != b.space_dim())
        throw dimension_error("relations on spaces of dimension " + std::to_string(a.space_dim()) + " and " +
                              std::to_string(b.space_dim()));
}

inline Subspace x_parts(const LinearRelation& t) {
    std::vector<Vector> v;
    for (const auto& g : t.graph().basis()) v.push_back(g.slice(0, t.space_dim()));
    return Subspace::span(v, t.space_dim());
}

inline Subspace y_parts(const LinearRelation& t) {
    std::vector<Vector> v;
    for (const auto& g : t.graph().basis()) v.push_back(g.slice(t.space_dim(), t.space_dim()));
    return Subspace::span(v, t.space_dim());
}

template <class F>
LinearRelation map_generators(const LinearRelation& t, F&& f) {
    const std::size_t n = t.space_dim();
    std::vector<Vector> gens;
    for (const auto& g : t.graph().basis()) gens.push_back(f(g.slice(0, n), g.slice(n, n)));
    return LinearRelation::from_generators(n, gens);
}

}  // namespace detail

// D(T)
inline Subspace domain(const LinearRelation& t) { return detail::x_parts(t); }
// R(T)
inline Subspace range(const LinearRelation& t) { return detail::y_parts(t); }

// T(0) = {y : (0, y) ∈ T}. With x coordinates first in the echelon order, the
// basis rows whose pivot lies in the y block are exactly a basis of T ∩ ({0}×X).
inline Subspace multivalued_part(const LinearRelation& t) {
    const std::size_t n = t.space_dim();
    std::vector<Vector> v;
    const auto& basis = t.graph().basis();
    const auto& piv = t.graph().pivots();
    for (std::size_t r = 0; r < basis.size(); ++r)
        if (piv[r] >= n) v.push_back(basis[r].slice(n, n));
    return Subspace::span(v, n);
}

// N(T) = {x : (x, 0) ∈ T}
inline Subspace kernel(const LinearRelation& t) {
    const std::size_t n = t.space_dim();
    Subspace slice = intersect(t.graph(), LinearRelation::domain_everything_to_zero(n).graph());
    std::vector<Vector> v;
    for (const auto& b : slice.basis()) v.push_back(b.slice(0, n));
    return Subspace::span(v, n);
}

struct RelationParts {
    Subspace domain;
    Subspace range;
    Subspace kernel;
    Subspace multivalued;  // T(0)
};

inline RelationParts parts(const LinearRelation& t) {
    return {domain(t), range(t), kernel(t), multivalued_part(t)};
}

// T(x) as a representative plus the coset space T(0). No representative iff x ∉ D(T).
struct Image {
    std::optional<Vector> representative;
    Subspace coset_space;
};

inline Image image_of(const LinearRelation& t, const Vector& x) {
    const std::size_t n = t.space_dim();
    if (x.size() != n) throw dimension_error("image_of: vector length does not match the space");
    std::vector<Vector> xs;
    for (const auto& g : t.graph().basis()) xs.push_back(g.slice(0, n));
    Image img{std::nullopt, multivalued_part(t)};
    auto sol = solve(xs, x);
    if (sol.particular) {
        Vector y(n);
        for (std::size_t j = 0; j < xs.size(); ++j) y.axpy((*sol.particular)[j], t.graph().basis()[j].slice(n, n));
        img.representative = std::move(y);
    }
    return img;
}

// αT = {(x, αy)}
inline LinearRelation scalar_mul(const LinearRelation& t, const Scalar& alpha) {
    return detail::map_generators(t, [&](const Vector& x, const Vector& y) { return concat(x, alpha * y); });
}

// T − α = {(x, y − αx)}
inline LinearRelation shift(const LinearRelation& t, const Scalar& alpha) {
    return detail::map_generators(t, [&](const Vector& x, const Vector& y) { return concat(x, y - alpha * x); });
}

// T^{-1} = {(y, x)}
inline LinearRelation inverse(const LinearRelation& t) {
    return detail::map_generators(t, [](const Vector& x, const Vector& y) { return concat(y, x); });
}

/*
 * T + A = {(x, y + z) : (x, y) ∈ T, (x, z) ∈ A}, coupled on a shared x.
 * Solved as one kernel: coefficients (c, d) with sum c_j x(t_j) = sum d_l x(a_l).
 */
inline LinearRelation rel_sum(const LinearRelation& t, const LinearRelation& a) {
    detail::check_same_space(t, a);
    const std::size_t n = t.space_dim();
    const auto& tb = t.graph().basis();
    const auto& ab = a.graph().basis();
    const std::size_t p = tb.size(), q = ab.size();
    std::vector<Vector> rows(n, Vector(p + q));
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < n; ++i) rows[i][j] = tb[j][i];
    for (std::size_t l = 0; l < q; ++l)
        for (std::size_t i = 0; i < n; ++i) rows[i][p + l] = -ab[l][i];
    Subspace ker = nullspace(std::move(rows), p + q);
    std::vector<Vector> gens;
    for (const auto& c : ker.basis()) {
        Vector g(2 * n);
        for (std::size_t j = 0; j < p; ++j) g.axpy(c[j], tb[j]);
        for (std::size_t l = 0; l < q; ++l) {
            if (c[p + l].is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) g[n + i] += c[p + l] * ab[l][n + i];
        }
        gens.push_back(std::move(g));
    }
    return LinearRelation::from_generators(n, gens);
}

// T ∔ A; requires T ∩ A = {(0,0)}.
inline LinearRelation direct_sum(const LinearRelation& t, const LinearRelation& a) {
    detail::check_same_space(t, a);
    if (!intersect(t.graph(), a.graph()).is_zero())
        throw precondition_error("direct_sum: relations intersect nontrivially");
    return {t.space_dim(), sum_subspaces(t.graph(), a.graph())};
}

// T ⊕ A; requires T ∩ A = {(0,0)} and T ⊥ A in X².
inline LinearRelation orth_sum(const LinearRelation& t, const LinearRelation& a) {
    detail::check_same_space(t, a);
    for (const auto& u : t.graph().basis())
        for (const auto& v : a.graph().basis())
            if (!inner(u, v).is_zero()) throw precondition_error("orth_sum: relations are not orthogonal");
    return direct_sum(t, a);
}

/*
 * Product AT = {(x, z) : (x, y) ∈ T, (y, z) ∈ A for some y}. One kernel
 * computation: coefficients (c, d) with sum c_j y(t_j) = sum d_l x(a_l).
 */
inline LinearRelation product(const LinearRelation& a, const LinearRelation& t) {
    detail::check_same_space(a, t);
    const std::size_t n = t.space_dim();
    const auto& tb = t.graph().basis();
    const auto& ab = a.graph().basis();
    const std::size_t p = tb.size(), q = ab.size();
    std::vector<Vector> rows(n, Vector(p + q));
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < n; ++i) rows[i][j] = tb[j][n + i];
    for (std::size_t l = 0; l < q; ++l)
        for (std::size_t i = 0; i < n; ++i) rows[i][p + l] = -ab[l][i];
    Subspace ker = nullspace(std::move(rows), p + q);
    std::vector<Vector> gens;
    for (const auto& c : ker.basis()) {
        Vector g(2 * n);
        for (std::size_t j = 0; j < p; ++j) {
            if (c[j].is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) g[i] += c[j] * tb[j][i];
        }
        for (std::size_t l = 0; l < q; ++l) {
            if (c[p + l].is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) g[n + i] += c[p + l] * ab[l][n + i];
        }
        gens.push_back(std::move(g));
    }
    return LinearRelation::from_generators(n, gens);
}

/*
 * T* = {(f, g) : <g, x> = <f, y> for all (x, y) ∈ T}.
 * (f, g) ∈ T* iff (g, −f) ⊥ T, so T* is the image of T^⊥ under (u, v) ↦ (−v, u).
 */
inline LinearRelation adjoint(const LinearRelation& t) {
    const std::size_t n = t.space_dim();
    Subspace perp = orth_complement(t.graph());
    std::vector<Vector> gens;
    for (const auto& w : perp.basis()) gens.push_back(concat(-w.slice(n, n), w.slice(0, n)));
    return LinearRelation::from_generators(n, gens);
}

struct ArensParts {
    LinearRelation op_part;     // T_s
    LinearRelation multi_part;  // T_∞ = {0} × T(0)
};

namespace detail {

// T_s = T ⊖ T_∞ taken inside the graph, T_∞ = {0} × T(0); unverified.
inline ArensParts arens_split(const LinearRelation& t) {
    const std::size_t n = t.space_dim();
    LinearRelation multi = LinearRelation::multivalued(multivalued_part(t));
    LinearRelation op{n, orth_complement_within(t.graph(), multi.graph())};
    return {std::move(op), std::move(multi)};
}

}  // namespace detail

struct ArensChecks {
    bool reconstruction = false;    // T = T_s ∔ T_∞
    bool single_valued = false;     // T_s(0) = {0}
    bool same_domain = false;       // D(T_s) = D(T)
    bool range_orthogonal = false;  // R(T_s) ⊆ T(0)^⊥
    bool multi_is_slice = false;    // T_∞ = T ∩ ({0} × X)
    [[nodiscard]] bool all() const {
        return reconstruction && single_valued && same_domain && range_orthogonal && multi_is_slice;
    }
};

inline ArensChecks arens_checks(const LinearRelation& t, const ArensParts& parts) {
    const std::size_t n = t.space_dim();
    const auto& op = parts.op_part;
    const auto& multi = parts.multi_part;
    ArensChecks c;
    bool orthogonal = true;
    for (const auto& u : op.graph().basis())
        for (const auto& v : multi.graph().basis()) orthogonal = orthogonal && inner(u, v).is_zero();
    c.reconstruction = orthogonal && op.dim() + multi.dim() == t.dim() &&
                       sum_subspaces(op.graph(), multi.graph()) == t.graph();
    c.single_valued = multivalued_part(op).is_zero();
    c.same_domain = domain(op) == domain(t);
    c.range_orthogonal = orth_complement(multivalued_part(t)).contains(range(op));
    c.multi_is_slice = multi.graph() == intersect(t.graph(), LinearRelation::zero_to_everything(n).graph());
    return c;
}

// T = T_s ⊕ T_∞. The defining properties are re-verified before returning.
inline ArensParts arens_decompose(const LinearRelation& t) {
    ArensParts parts = detail::arens_split(t);
    if (!arens_checks(t, parts).all()) throw internal_error("arens_decompose: decomposition failed its own verification");
    return parts;
}

// T_s(f): the unique element of T(f) orthogonal to T(0). Requires f ∈ D(T).
inline Vector apply_operator_part(const LinearRelation& t, const Vector& f) {
    Image img = image_of(t, f);
    if (!img.representative) throw precondition_error("apply_operator_part: vector is not in the domain");
    return *img.representative - orthogonal_projection(img.coset_space, *img.representative);
}

inline bool is_hermitian(const LinearRelation& t) { return adjoint(t).contains(t); }
inline bool is_selfadjoint(const LinearRelation& t) { return adjoint(t) == t; }

// M_λ(T) = N(T* − λ) = {f : (f, λf) ∈ T*}
inline Subspace m_lambda(const LinearRelation& t, const Scalar& lambda) { return kernel(shift(adjoint(t), lambda)); }

struct DeficiencyPair {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    friend bool operator==(const DeficiencyPair&, const DeficiencyPair&) = default;
};

// n±(T) = dim M_{±i}(T); defined for Hermitian T only.
inline DeficiencyPair deficiency(const LinearRelation& t) {
    if (!is_hermitian(t)) throw precondition_error("deficiency: relation is not Hermitian");
    return {m_lambda(t, Scalar::i()).dim(), m_lambda(t, -Scalar::i()).dim()};
}

namespace detail {

// {(f, λf) : f ∈ M}
inline LinearRelation eigen_graph(const Subspace& m, const Scalar& lambda) {
    std::vector<Vector> gens;
    for (const auto& f : m.basis()) gens.push_back(concat(f, lambda * f));
    return LinearRelation::from_generators(m.ambient_dim(), gens);
}

}  // namespace detail

// First von Neumann formula T* = T ∔ N̂₊ ∔ N̂₋ with N̂± = {(f, ±if) : f ∈ M_{±i}(T)}.
inline bool von_neumann_check(const LinearRelation& t) {
    if (!is_hermitian(t)) throw precondition_error("von_neumann_check: relation is not Hermitian");
    const std::size_t n = t.space_dim();
    LinearRelation ts = adjoint(t);
    LinearRelation np = detail::eigen_graph(m_lambda(t, Scalar::i()), Scalar::i());
    LinearRelation nm = detail::eigen_graph(m_lambda(t, -Scalar::i()), -Scalar::i());
    bool pairwise = intersect(t.graph(), np.graph()).is_zero() && intersect(t.graph(), nm.graph()).is_zero() &&
                    intersect(np.graph(), nm.graph()).is_zero();
    bool dims = t.dim() + np.dim() + nm.dim() == 2 * n - t.dim() && ts.dim() == 2 * n - t.dim();
    Subspace total = sum_subspaces(sum_subspaces(t.graph(), np.graph()), nm.graph());
    return pairwise && dims && total == ts.graph();
}

/*
 * A self-adjoint extension of a Hermitian relation H, exact over Q(i).
 * For any self-adjoint L with H ∩ L = {0}, H ∔ (H* ∩ L) is self-adjoint:
 * it is Hermitian, and dim(H* ∩ L) ≥ (2n − dim H) + n − 2n forces dimension n.
 * Candidates are tried in a fixed order, so the result is deterministic.
 */
inline LinearRelation self_adjoint_extension(const LinearRelation& h) {
    if (!is_hermitian(h)) throw precondition_error("self_adjoint_extension: relation is not Hermitian");
    const std::size_t n = h.space_dim();
    LinearRelation hs = adjoint(h);
    auto attempt = [&](const LinearRelation& l) -> std::optional<LinearRelation> {
        if (!intersect(h.graph(), l.graph()).is_zero()) return std::nullopt;
        LinearRelation t{n, sum_subspaces(h.graph(), intersect(hs.graph(), l.graph()))};
        if (!is_selfadjoint(t)) throw internal_error("self_adjoint_extension: transversal construction failed");
        return t;
    };
    if (auto t = attempt(LinearRelation::zero_to_everything(n))) return *t;
    if (auto t = attempt(LinearRelation::domain_everything_to_zero(n))) return *t;
    // Graphs of Hermitian matrices from a fixed sequence; transversality is
    // generic, so this terminates after a handful of candidates in practice.
    for (std::int64_t s = 1; s < 4096; ++s) {
        Matrix d(n, n);
        std::uint64_t state = static_cast<std::uint64_t>(s) * 0x9E3779B97F4A7C15ULL;
        auto next = [&state]() {
            state ^= state >> 31;
            state *= 0xBF58476D1CE4E5B9ULL;
            state ^= state >> 29;
            return static_cast<std::int64_t>(state % 7) - 3;
        };
        for (std::size_t i = 0; i < n; ++i) {
            d(i, i) = Scalar(next());
            for (std::size_t j = i + 1; j < n; ++j) {
                d(i, j) = Scalar(Rational(next()), Rational(next()));
                d(j, i) = d(i, j).conj();
            }
        }
        if (auto t = attempt(LinearRelation::graph_of(d))) return *t;
    }
    throw internal_error("self_adjoint_extension: no transversal Lagrangian found");
}

}  // namespace linrel
