#pragma once

#include <string>
#include <vector>

#include "macref/partition.hpp"

namespace macref {

// The specialization q = v^N, t = v^{-k}·ω₁ with ω₁^{N/m} = ω a primitive
// m-th root of unity, m = gcd(k,N). For m = 1 everything stays rational
// (ω₁ = 1); otherwise ω₁ = ζ_N, represented inside ℚ[z]/Φ_{2N} so that the
// square root of t has somewhere to live.
struct SpecContext {
    int k = 1;
    int N = 1;
    int m = 1;
    Cyc omega;        // primitive m-th root ω (= ω₁^{N/m})
    Cyc omega1;       // ω₁
    CycFunc q_image;  // v^N
    CycFunc t_image;  // v^{-k}·ω₁
};

SpecContext make_spec_context(int k, int N);

// Image of r in ℚ(ζ)(v). Throws DenominatorVanishes when the denominator
// lands on the q^k t^N = 1 locus, IncompatibleExponents for fractional
// exponents the root data cannot absorb.
CycFunc evaluate_at(const RatFunc& r, const SpecContext& ctx);

// Order of vanishing at s = 1 along the family q = v^N s, t = v^{-k}ω₁
// (so that q^k t^N = s^k). Zero means nonvanishing.
int vanishing_order(const RatFunc& r, const SpecContext& ctx);

// Ω[t^N B_λ(q, t^{-1})] and relatives used throughout the S-matrix formulas
RatFunc omega_tn_b(const Partition& lam, int N);       // Ω[t^N B_λ(q,t^{-1})]
RatFunc omega_tn_b_inv(const Partition& lam, int N);   // ∏_s (1 − t^{N−l'} q^{a'})
RatFunc omega_tnm1_q_b(const Partition& lam, int N);   // Ω[t^{N-1} q B_λ(q,t^{-1})]

struct LemmaAuditRecord {
    Partition lambda;
    std::string check;
    std::string expected;
    std::string got;
    bool pass = false;
};

// Per-λ verification of the vanishing/nonvanishing lemmas and the
// column-stripping product identities, over all |λ| ≤ max_size.
std::vector<LemmaAuditRecord> lemma_audit(const SpecContext& ctx, int max_size);

bool lemma_audit_passes(const SpecContext& ctx, int max_size);

} // namespace macref
