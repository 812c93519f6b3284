#pragma once

#include "macref/macdonald.hpp"
#include "macref/speckit.hpp"

namespace macref {

// Normalized Hopf-link S-matrix entry at rank N: evaluated both through the
// defining principal specialization of Macdonald polynomials and through the
// closed modified-Macdonald form; the two routes are asserted equal.
// Vanishes when l(λ) > N or l(μ) > N. Carries q^{1/N} and t^{1/2}.
RatFunc snorm_finite(const Partition& lam, const Partition& mu, int N);

// Stable four-variable version; u plays t^N and v plays q^{1/N}.
RatFunc snorm_stable(const Partition& lam, const Partition& mu);

// Diagonal entry of the normalized T-matrix.
RatFunc tnorm(const Partition& lam, int N);

// Operator entry S^λ_μ = S^norm_{λμ} / ⟨P_λ,P_λ⟩''_N, computed through both
// displayed forms (direct and symmetry-flipped) and asserted equal.
// Requires l(λ) ≤ N−1.
RatFunc s_operator_entry(const Partition& lam, const Partition& mu, int N);

// S^norm_{λμ} evaluated at q^k t^N = 1 (well-defined by the reduction lemma;
// vanishes unless the stripped transposes fit in k rows).
CycFunc hopf_invariant(const Partition& lam, const Partition& mu, int k, int N);

// Level-rank duality identity at q^k t^N = 1.
bool level_rank_check(const Partition& lam, const Partition& mu, int k, int N);

enum class KernelVariant { plain, modified };

// Coefficients of H̃_λ(x) H̃_μ(y) in the stable kernel, exact in (q,t,u,v).
std::map<std::pair<Partition, Partition>, RatFunc> kernel_z(int degX, int degY,
                                                            KernelVariant variant);

RatFunc kernel_z_coefficient(const Partition& lam, const Partition& mu, KernelVariant variant);

} // namespace macref
