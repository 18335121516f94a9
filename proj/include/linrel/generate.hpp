#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linrel/dual_pair.hpp"
#include "linrel/rng.hpp"

namespace linrel {

enum class Strategy {
    free,                  // B random, A a random subspace of B*
    dual_pair,             // A random, B a random subspace of A*
    k_filtered,            // free draws rejected until k1 ∧ k2
    h_filtered,            // free draws rejected until h1 ∧ h2
    full_hypotheses,       // free draws rejected until all four hold
    selfadjoint_subspace,  // A = B = random subspace of a random self-adjoint relation
    isotropic,             // A = B grown greedily by isotropic vectors
};

inline std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::free: return "free";
        case Strategy::dual_pair: return "dual-pair";
        case Strategy::k_filtered: return "k-filtered";
        case Strategy::h_filtered: return "h-filtered";
        case Strategy::full_hypotheses: return "full-hypotheses";
        case Strategy::selfadjoint_subspace: return "selfadjoint-subspace";
        case Strategy::isotropic: return "isotropic";
    }
    return "?";
}

inline std::optional<Strategy> parse_strategy(std::string_view s) {
    for (auto st : {Strategy::free, Strategy::dual_pair, Strategy::k_filtered, Strategy::h_filtered,
                    Strategy::full_hypotheses, Strategy::selfadjoint_subspace, Strategy::isotropic})
        if (to_string(st) == s) return st;
    return std::nullopt;
}

struct GenConfig {
    std::uint64_t seed = 1;
    std::size_t dim_min = 1;
    std::size_t dim_max = 6;
    std::int64_t entry_bound = 3;
    Strategy strategy = Strategy::free;
    std::size_t trials = 100;
    std::size_t retry_budget = 1000;

    static constexpr std::size_t kMaxDim = 8;

    void validate() const {
        if (dim_min < 1) throw precondition_error("dim-min must be at least 1");
        if (dim_max < dim_min) throw precondition_error("dim-max must be at least dim-min");
        if (dim_max > kMaxDim) throw precondition_error("dim-max is capped at 8");
        if (entry_bound < 1) throw precondition_error("entry-bound must be at least 1");
        if (retry_budget < 1) throw precondition_error("retry budget must be at least 1");
    }
};

namespace gen {

// Gaussian integer with parts in [−b, b]; zero a third of the time, real half of the rest.
inline Scalar scalar(Stream& rng, std::int64_t b) {
    if (rng.chance(1, 3)) return {};
    Rational re(rng.uniform(-b, b));
    if (rng.chance(1, 2)) return Scalar(re);
    return {re, Rational(rng.uniform(-b, b))};
}

inline Vector vec(Stream& rng, std::size_t n, std::int64_t b) {
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = scalar(rng, b);
    return v;
}

// Span of a uniformly chosen number (0..ambient) of random vectors.
inline Subspace subspace(Stream& rng, std::size_t ambient, std::int64_t b) {
    auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ambient)));
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < r; ++j) gens.push_back(vec(rng, ambient, b));
    return Subspace::span(gens, ambient);
}

// Random integer mixture of a subspace's canonical basis.
inline Subspace subspace_of(Stream& rng, const Subspace& s, std::int64_t b) {
    auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.dim())));
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Scalar> c(s.dim());
        for (auto& x : c) x = Scalar(rng.uniform(-b, b));
        gens.push_back(s.combine(c));
    }
    return Subspace::span(gens, s.ambient_dim());
}

inline Matrix matrix(Stream& rng, std::size_t n, std::int64_t b) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar(rng, b);
    return m;
}

inline Matrix hermitian_matrix(Stream& rng, std::size_t n, std::int64_t b) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Scalar(rng.uniform(-b, b));
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = scalar(rng, b);
            m(j, i) = m(i, j).conj();
        }
    }
    return m;
}

/*
 * Random relation. Half the draws are generic subspaces of X²; the other half
 * are structured as {(v, Mv) : v ∈ V} + {0} × W so that non-dense domains and
 * nontrivial multivalued parts occur together.
 */
inline LinearRelation relation(Stream& rng, std::size_t n, std::int64_t b) {
    if (rng.chance(1, 2)) return {n, subspace(rng, 2 * n, b)};
    Subspace v = subspace(rng, n, b);
    Subspace w = subspace(rng, n, b);
    Matrix m = matrix(rng, n, b);
    std::vector<Vector> gens;
    for (const auto& x : v.basis()) gens.push_back(concat(x, m * x));
    for (const auto& y : w.basis()) gens.push_back(concat(Vector::zero(n), y));
    return LinearRelation::from_generators(n, gens);
}

// Random subspace of a relation's graph.
inline LinearRelation subrelation(Stream& rng, const LinearRelation& t, std::int64_t b) {
    return {t.space_dim(), subspace_of(rng, t.graph(), b)};
}

// {(v, Dv + w) : v ∈ V, w ∈ V^⊥} with D Hermitian: always self-adjoint.
inline LinearRelation selfadjoint(Stream& rng, std::size_t n, std::int64_t b) {
    Subspace v = subspace(rng, n, b);
    Matrix d = hermitian_matrix(rng, n, b);
    std::vector<Vector> gens;
    for (const auto& x : v.basis()) gens.push_back(concat(x, d * x));
    Subspace vperp = orth_complement(v);
    for (const auto& y : vperp.basis()) gens.push_back(concat(Vector::zero(n), y));
    return LinearRelation::from_generators(n, gens);
}

/*
 * Hermitian relation grown greedily: candidates are sparse mixtures of the
 * current adjoint's canonical basis, kept when <y, x> is real (the candidate
 * is then orthogonal to itself for the form defining the adjoint).
 */
inline LinearRelation isotropic(Stream& rng, std::size_t n, std::int64_t b) {
    LinearRelation t = LinearRelation::zero(n);
    const std::size_t target = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
    for (std::size_t attempt = 0; attempt < 8 * n && t.dim() < target; ++attempt) {
        LinearRelation ts = adjoint(t);
        const auto& basis = ts.graph().basis();
        Vector p(2 * n);
        std::size_t terms = 1 + static_cast<std::size_t>(rng.uniform(0, 1));
        for (std::size_t j = 0; j < terms; ++j) {
            auto idx = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(basis.size()) - 1));
            p.axpy(Scalar(rng.uniform(1, b)), basis[idx]);
        }
        if (t.graph().contains(p)) continue;
        if (!inner(p.slice(n, n), p.slice(0, n)).is_real()) continue;
        t = {n, sum_subspaces(t.graph(), Subspace::span({p}, 2 * n))};
    }
    return t;
}

}  // namespace gen

struct Generated {
    std::optional<DualPair> pair;  // empty when the strategy starved
    std::size_t attempts = 0;
    std::optional<HypothesisReport> hypotheses;  // filled when the strategy already computed it
};

// Deterministic in (config.seed, index); draw `a` uses the stream keyed by (seed, index, a).
inline Generated generate(const GenConfig& config, std::size_t index) {
    const std::int64_t b = config.entry_bound;
    const std::size_t budget = config.strategy == Strategy::k_filtered || config.strategy == Strategy::h_filtered ||
                                       config.strategy == Strategy::full_hypotheses
                                   ? config.retry_budget
                                   : 1;
    Generated out;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        out.attempts = attempt + 1;
        Stream rng(config.seed, index, attempt);
        const auto n = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(config.dim_min), static_cast<std::int64_t>(config.dim_max)));
        switch (config.strategy) {
            case Strategy::dual_pair: {
                LinearRelation a = gen::relation(rng, n, b);
                LinearRelation bb = gen::subrelation(rng, adjoint(a), b);
                out.pair.emplace(std::move(a), std::move(bb));
                return out;
            }
            case Strategy::selfadjoint_subspace: {
                LinearRelation t = gen::selfadjoint(rng, n, b);
                LinearRelation a = gen::subrelation(rng, t, b);
                out.pair.emplace(a, a);
                return out;
            }
            case Strategy::isotropic: {
                LinearRelation a = gen::isotropic(rng, n, b);
                out.pair.emplace(a, a);
                return out;
            }
            default: break;
        }
        LinearRelation bb = gen::relation(rng, n, b);
        LinearRelation a = gen::subrelation(rng, adjoint(bb), b);
        DualPair p(std::move(a), std::move(bb));
        if (config.strategy == Strategy::free) {
            out.pair.emplace(std::move(p));
            return out;
        }
        HypothesisReport h = hypotheses(p);
        bool accept = config.strategy == Strategy::k_filtered   ? h.k_pair()
                      : config.strategy == Strategy::h_filtered ? (h.h1 && h.h2)
                                                                : h.all();
        if (accept) {
            out.pair.emplace(std::move(p));
            out.hypotheses = h;
            return out;
        }
    }
    return out;
}

}  // namespace linrel
