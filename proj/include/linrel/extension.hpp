#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linrel/dual_pair.hpp"
#include "linrel/rng.hpp"

namespace linrel {

class not_proper_extension_error : public precondition_error {
public:
    explicit not_proper_extension_error(std::pair<Vector, Vector> offending)
        : precondition_error("extension generator does not lie in B*"), generator(std::move(offending)) {}
    std::pair<Vector, Vector> generator;
};

// Ã with A ⊆ Ã ⊆ B*, together with its cached adjoint.
class ProperExtension {
public:
    ProperExtension(DualPair pair, LinearRelation ext) : pair_(std::move(pair)), ext_(std::move(ext)) {
        if (!ext_.contains(pair_.a()) || !pair_.b_star().contains(ext_))
            throw precondition_error("relation is not a proper extension: A ⊆ Ã ⊆ B* fails");
        ext_star_ = adjoint(ext_);
        if (!ext_star_.contains(pair_.b()) || !pair_.a_star().contains(ext_star_))
            throw internal_error("B ⊆ Ã* ⊆ A* fails for a proper extension");
    }

    [[nodiscard]] const DualPair& pair() const { return pair_; }
    [[nodiscard]] const LinearRelation& ext() const { return ext_; }
    [[nodiscard]] const LinearRelation& ext_star() const { return ext_star_; }

private:
    DualPair pair_;
    LinearRelation ext_, ext_star_;
};

// Ã = span(A ∪ extra); every extra pair must lie in B*.
inline ProperExtension make_extension(const DualPair& p, std::span<const std::pair<Vector, Vector>> extra) {
    std::vector<Vector> gens = p.a().graph().basis();
    for (const auto& [f, g] : extra) {
        if (f.size() != p.space_dim() || g.size() != p.space_dim())
            throw dimension_error("extension pair length does not match the space");
        if (!p.b_star().contains(f, g)) throw not_proper_extension_error({f, g});
        gens.push_back(concat(f, g));
    }
    return {p, LinearRelation::from_generators(p.space_dim(), gens)};
}

inline ProperExtension make_extension(const DualPair& p, std::initializer_list<std::pair<Vector, Vector>> extra) {
    return make_extension(p, std::span<const std::pair<Vector, Vector>>(extra.begin(), extra.size()));
}

struct QuotientProfile {
    std::size_t d_ext_over_a = 0;          // dim(D(Ã)/D(A))
    std::size_t d_extstar_over_b = 0;      // dim(D(Ã*)/D(B))
    std::size_t d_bstar_over_ext = 0;      // dim(D(B*)/D(Ã))
    std::size_t d_astar_over_extstar = 0;  // dim(D(A*)/D(Ã*))

    [[nodiscard]] std::array<std::size_t, 4> as_array() const {
        return {d_ext_over_a, d_extstar_over_b, d_bstar_over_ext, d_astar_over_extstar};
    }
    friend bool operator==(const QuotientProfile&, const QuotientProfile&) = default;
};

inline QuotientProfile quotient_profile(const ProperExtension& e) {
    const DualPair& p = e.pair();
    Subspace d_ext = domain(e.ext()), d_ext_star = domain(e.ext_star());
    return {quotient_dim(d_ext, domain(p.a())), quotient_dim(d_ext_star, domain(p.b())),
            quotient_dim(domain(p.b_star()), d_ext), quotient_dim(domain(p.a_star()), d_ext_star)};
}

inline bool is_quasi_selfadjoint(const QuotientProfile& q) { return q.d_ext_over_a == q.d_extstar_over_b; }
inline bool is_quasi_selfadjoint(const ProperExtension& e) { return is_quasi_selfadjoint(quotient_profile(e)); }

// Quotient-tower bookkeeping, true for every proper extension:
//   d_ext_over_a + d_bstar_over_ext = dim(D(B*)/D(A)),  d_extstar_over_b + d_astar_over_extstar = n(A*,B).
inline bool tower_identities_hold(const ProperExtension& e) {
    QuotientProfile q = quotient_profile(e);
    Surplus s = surplus(e.pair());
    return q.d_ext_over_a + q.d_bstar_over_ext == s.n_ba && q.d_extstar_over_b + q.d_astar_over_extstar == s.n_ab;
}

/*
 * Dimension formulas for a proper extension. `gated` records whether all four
 * hypotheses hold: only then are the outcomes claims; otherwise they are
 * evaluated and recorded for the necessity study.
 */
struct Thm33Result {
    bool gated = false;
    bool e32 = false;
    std::optional<bool> e33;     // present iff quasi-selfadjoint
    std::optional<bool> parity;  // n(A*,B) even; present iff quasi-selfadjoint
};

inline Thm33Result check_thm33(const ProperExtension& e) {
    QuotientProfile q = quotient_profile(e);
    std::size_t n_ab = surplus(e.pair()).n_ab;
    Thm33Result r;
    r.gated = hypotheses(e.pair()).all();
    r.e32 = n_ab == q.d_bstar_over_ext + q.d_astar_over_extstar && n_ab == q.d_ext_over_a + q.d_extstar_over_b;
    if (is_quasi_selfadjoint(q)) {
        r.parity = n_ab % 2 == 0;
        std::size_t half = n_ab / 2;
        r.e33 = *r.parity && q.d_bstar_over_ext == half && q.d_astar_over_extstar == half &&
                q.d_ext_over_a == half && q.d_extstar_over_b == half;
    }
    return r;
}

struct Thm34Result {
    bool gated = false;
    bool e37 = false;          // dim(D(B*)/D(Ã)) = dim(D(Ã)/D(A))
    bool implication = false;  // e37 ⇒ quasi-selfadjoint
};

inline Thm34Result check_thm34(const ProperExtension& e) {
    QuotientProfile q = quotient_profile(e);
    Thm34Result r;
    r.gated = hypotheses(e.pair()).all();
    r.e37 = q.d_bstar_over_ext == q.d_ext_over_a;
    r.implication = !r.e37 || is_quasi_selfadjoint(q);
    return r;
}

// Full per-extension record; the nullable fields are null outside the hypotheses.
struct ExtensionReport {
    QuotientProfile profile;
    bool quasi = false;
    std::optional<bool> e32, e33, parity, thm34;
    Thm33Result recorded33;
    Thm34Result recorded34;
};

inline ExtensionReport extension_report(const ProperExtension& e) {
    ExtensionReport r;
    r.profile = quotient_profile(e);
    r.quasi = is_quasi_selfadjoint(r.profile);
    r.recorded33 = check_thm33(e);
    r.recorded34 = check_thm34(e);
    if (r.recorded33.gated) {
        r.e32 = r.recorded33.e32;
        r.e33 = r.recorded33.e33;
        r.parity = r.recorded33.parity;
        r.thm34 = r.recorded34.implication;
    }
    return r;
}

// Basis vectors of B* completing A, chosen greedily from B*'s canonical basis.
inline std::vector<Vector> completion_basis(const DualPair& p) {
    std::vector<Vector> out;
    Subspace acc = p.a().graph();
    for (const auto& v : p.b_star().graph().basis()) {
        if (acc.contains(v)) continue;
        out.push_back(v);
        acc = sum_subspaces(acc, Subspace::span({v}, v.size()));
    }
    return out;
}

/*
 * `count` extensions with dim Ã = dim A + k. Sample i mixes the completion
 * basis with a k×m small-integer matrix drawn from the stream keyed by
 * (seed, i); rank-deficient draws are redrawn.
 */
inline std::vector<ProperExtension> sample_extensions(const DualPair& p, std::size_t k, std::size_t count,
                                                      std::uint64_t seed, std::int64_t entry_bound = 3) {
    const std::size_t n = p.space_dim();
    std::vector<Vector> comp = completion_basis(p);
    const std::size_t m = comp.size();
    if (k > m)
        throw precondition_error("sample_extensions: k = " + std::to_string(k) + " exceeds dim B* - dim A = " +
                                 std::to_string(m));
    std::vector<ProperExtension> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Stream rng(seed, i, 0x657874ULL);
        std::vector<std::pair<Vector, Vector>> extra;
        while (true) {
            Matrix coef(k, m);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < m; ++c) coef(r, c) = Scalar(rng.uniform(-entry_bound, entry_bound));
            if (rank(coef) != k) continue;
            extra.clear();
            for (std::size_t r = 0; r < k; ++r) {
                Vector g(2 * n);
                for (std::size_t c = 0; c < m; ++c) g.axpy(coef(r, c), comp[c]);
                extra.emplace_back(g.slice(0, n), g.slice(n, n));
            }
            break;
        }
        out.push_back(make_extension(p, extra));
        if (out.back().ext().dim() != p.a().dim() + k) throw internal_error("sampled extension has wrong dimension");
    }
    return out;
}

struct CorrectnessProbe {
    bool found = false;
    std::optional<ProperExtension> witness;
    std::size_t tried = 0;
    // n(A*,B) even: the necessary condition, reported only under all four hypotheses.
    std::optional<bool> parity_condition;
};

/*
 * Searches for a quasi-selfadjoint extension: first Ã = A and Ã = B*, then
 * sampled extensions cycling k = 1 .. m−1, until `budget` candidates are used.
 */
inline CorrectnessProbe correctness_probe(const DualPair& p, std::size_t budget, std::uint64_t seed) {
    CorrectnessProbe out;
    if (hypotheses(p).all()) out.parity_condition = surplus(p).n_ab % 2 == 0;
    const std::size_t m = completion_basis(p).size();
    auto consider = [&](ProperExtension e) {
        ++out.tried;
        if (is_quasi_selfadjoint(e)) {
            out.found = true;
            out.witness = std::move(e);
        }
        return out.found;
    };
    if (budget == 0) return out;
    if (consider(ProperExtension(p, p.a())) || out.tried >= budget) return out;
    if (m > 0 && (consider(ProperExtension(p, p.b_star())) || out.tried >= budget)) return out;
    if (m < 2) return out;
    for (std::size_t round = 0; out.tried < budget; ++round) {
        std::size_t k = 1 + round % (m - 1);
        auto e = sample_extensions(p, k, 1, mix_seed(seed, round));
        if (consider(std::move(e.front()))) break;
    }
    return out;
}

}  // namespace linrel
