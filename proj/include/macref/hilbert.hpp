#pragma once

#include "macref/macdonald.hpp"

namespace macref {

// Torus-fixed-point data at I_μ on the Hilbert scheme of |μ| points.
struct FixedPointData {
    Partition mu;
    RatFunc tangent_alt_sum;  // ch Λ_{-1} T* = c_μ(q^{-1},t)·c'_μ(q,t^{-1})
    RatFunc taut_char;        // ch O^{[n]} = B_μ(q,t)
    RatFunc det_weight;       // ch L = q^{n(μ^t)} t^{n(μ)}
    RatFunc universal_char;   // ch E_(0,I_μ) = A_μ(q,t)
};

FixedPointData fixed_point_data(const Partition& mu);

// A K-theory class given as a tensor product of generator atoms; each atom
// has a well-defined character at every fixed point.
struct ClassAtom {
    enum class Kind {
        structure_sheaf,  // O
        wedge_taut,       // Λ_{-w} O^{[n]} with formal parameter `var`
        schur_e0,         // s_λ[E/[0]]
        schur_ex,         // s_λ[E/{x=0}]
        schur_ey,         // s_λ[E/{y=0}]
        det_twist         // L^{exponent}
    };
    Kind kind = Kind::structure_sheaf;
    Partition lambda;
    int exponent = 1;
    int var = VU;
};

struct ClassSpec {
    std::vector<ClassAtom> atoms;
    static ClassSpec structure_sheaf() { return ClassSpec{{ClassAtom{}}}; }
};

// fiber character of the class at the fixed point I_μ
RatFunc class_char_at(const ClassSpec& spec, const Partition& mu);

// Atiyah–Bott localization: coefficient of u^n is
// Σ_{|μ|=n} ch(spec at μ) / ch Λ_{-1} T*_{I_μ}.
std::vector<RatFunc> euler_char_series(const ClassSpec& spec, int D);

// Σ u^n ch RΓ(O) up to u^D (memoized)
std::vector<RatFunc> structure_sheaf_series(int D);

// Schur-functor plethysms at fixed-point characters, cached:
// kind 0: s_λ[A_μ], 1: s_λ[A_μ/(1−q)], 2: s_λ[A_μ/(1−t)]
RatFunc schur_at_fixed_point(const Partition& lam, const Partition& mu, int kind);

// u-coefficientwise identity H̃_μ[1−uA_λ]/Ω[uB_λ] =
//   Ω[−u/(1−q)(1−t)]·⟨∇^{-1}Ω̃[−XA_μ/(1−q)(1−t)], Ω̃[−uXA_λ/(1−q)(1−t)]⟩_*
bool verify_symmetry_ght(const Partition& lam, const Partition& mu, int D);

// the same left side times Σ uⁿ chRΓ(O) against the localization series of
// (ω∇^{-1}H̃_λ)[E/[0]] ⊗ (ω∇^{-1}H̃_μ)[E/[0]]
bool verify_hilb_hilb(const Partition& lam, const Partition& mu, int D);

// (∇ s_{λ^t})[1−u]·Σ uⁿ chRΓ(O) = Σ uⁿ chRΓ(s_λ[E/[0]])
bool verify_corollary_empty(const Partition& lam, int D);

// (−1)^{|λ|} H̃_μ[−A_λ] q^{n(λ^t)} t^{n(λ)} is symmetric in λ ↔ μ
bool verify_lemma_symmetry(const Partition& lam, const Partition& mu);

// ⟨∇^{-1} H̃_λ, H̃_μ⟩_* = δ_{λμ} · tangent weight
bool verify_pairing_geom(const Partition& lam, const Partition& mu);

// coefficient of s_λ[X/(1−t)] s_μ[Y/(1−q)] in the plain stable kernel equals
// the localization ratio for s_λ[E/{x=0}] ⊗ s_μ[E/{y=0}], to order u^D
bool verify_main_kernel(const Partition& lam, const Partition& mu, int D);

// series helpers shared with the acceptance suite
std::vector<RatFunc> series_mul(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                int D);

// LHS of the GHT identity as an exact rational function (a u-polynomial)
RatFunc ght_left_side(const Partition& lam, const Partition& mu);

} // namespace macref
