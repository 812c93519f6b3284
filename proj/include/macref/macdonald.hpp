#pragma once

#include <optional>

#include "macref/symfunc.hpp"

namespace macref {

// Per-degree Macdonald data: monomial-basis expansions of P_λ, Schur-basis
// expansions of the modified polynomials H̃_μ, and the Kostka matrix
// K̃_{λμ}(q,t) with H̃_μ = Σ_λ K̃_{λμ} s_λ.
struct MacdonaldTable {
    int degree = 0;
    std::vector<Partition> parts;
    std::map<Partition, SymFunc> P;
    std::map<Partition, SymFunc> H;
    std::map<std::pair<Partition, Partition>, RatFunc> K;
};

// Shared, lazily built tables. When a cache directory is configured the
// tables are persisted one JSON document per degree.
const MacdonaldTable& macdonald_table(int degree);

void macdonald_set_cache_dir(std::optional<std::string> dir);
std::optional<std::string> macdonald_cache_dir();
long macdonald_cache_clear();                   // returns #files removed
std::vector<std::pair<int, long>> macdonald_cache_stats();  // (degree, bytes)

SymFunc macdonald_p(const Partition& lam);
SymFunc macdonald_j(const Partition& lam);
SymFunc modified_h(const Partition& mu);
RatFunc kostka_coefficient(const Partition& lam, const Partition& mu);

// ⟨P_λ, P_λ⟩_{q,t} = c'_λ/c_λ
RatFunc pp_norm_qt(const Partition& lam);

// ⟨P_λ, P_λ⟩''_N (vanishes when l(λ) > N)
RatFunc pp_norm_finite(const Partition& lam, int N);

// finite-variable inner product, diagonal on the P basis
RatFunc inner_product_finite_n(const SymFunc& f, const SymFunc& g, int N);

// expansion of f in the P basis (unitriangular solve against dominance)
std::map<Partition, RatFunc> expand_in_p_basis(const SymFunc& f);

// expansion of f in the H̃ basis via the star-product duality
std::map<Partition, RatFunc> expand_in_h_basis(const SymFunc& f);

// ⟨H̃_μ, H̃_μ⟩_* = q^{n(μ^t)} t^{n(μ)} c_μ(q^{-1},t) c'_μ(q,t^{-1})
RatFunc h_star_norm(const Partition& mu);

// the ∇ eigenvalue q^{n(μ^t)} t^{n(μ)}
RatFunc nabla_eigenvalue(const Partition& mu);

SymFunc nabla(const SymFunc& f, long power = 1);
SymFunc delta_f(const SymFunc& g, const SymFunc& f);  // Δ_f applied to g

// P_λ(t^{(N−1)/2}, ..., t^{(1−N)/2}; q, t), computed by both the closed
// product form and the direct plethystic evaluation; the two are asserted
// equal. Returns 0 when l(λ) > N.
RatFunc principal_specialization(const Partition& lam, int N);

} // namespace macref
