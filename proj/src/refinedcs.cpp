#include "macref/refinedcs.hpp"

namespace macref {

namespace {

RatFunc tpow(long num, long den = 1) { return RatFunc::monomial(VT, num, den); }
RatFunc qpow(long num, long den = 1) { return RatFunc::monomial(VQ, num, den); }
RatFunc upow(long num, long den = 1) { return RatFunc::monomial(VU, num, den); }

RatFunc subst1(const RatFunc& r, int var, const RatFunc& tgt) {
    std::map<int, RatFunc> sigma{{var, tgt}};
    return substitute(r, sigma);
}

// A_λ(q, t^{-1}) as a Laurent polynomial
RatFunc a_lambda_tinv(const Partition& lam) {
    auto [B, A] = box_generating(lam);
    (void)B;
    return subst1(A, VT, RatFunc::monomial(VT, -1));
}

SymFunc modified_h_tinv(const Partition& mu) {
    return modified_h(mu).map_coefficients(
        [](const RatFunc& c) { return subst1(c, VT, RatFunc::monomial(VT, -1)); });
}

// H̃_μ[1 − w·A_λ(q,t^{-1}); q, t^{-1}] with w = t^N (finite) or w = u (stable)
RatFunc h_pleth_factor(const Partition& mu, const Partition& lam, int N_or_stable_u) {
    RatFunc A = a_lambda_tinv(lam);
    const bool stable = N_or_stable_u < 0;
    const int N = N_or_stable_u;
    PlethAlphabet alpha = alphabet_scalar([A, stable, N](long j) {
        RatFunc w = stable ? RatFunc::monomial(VU, j) : RatFunc::monomial(VT, j * N);
        return RatFunc::one() - w * A.adams(j);
    });
    return plethysm_scalar(modified_h_tinv(mu), alpha);
}

} // namespace

RatFunc snorm_finite(const Partition& lam, const Partition& mu, int N) {
    // route 1: literal principal specializations
    RatFunc pref = qpow(-static_cast<long>(lam.size()) * mu.size(), N);
    RatFunc routeA;
    {
        RatFunc first = principal_specialization(lam, N);
        if (first.is_zero()) {
            routeA = RatFunc::zero();
        } else {
            RatFunc A = a_lambda_tinv(lam);
            PlethAlphabet alpha = alphabet_scalar([A, N](long j) {
                RatFunc num = RatFunc::one() - tpow(j * N) * A.adams(j);
                return num / (RatFunc::one() - tpow(j));
            });
            RatFunc second = plethysm_scalar(macdonald_p(mu), alpha);
            routeA = pref * first * tpow(-static_cast<long>(N - 1) * mu.size(), 2) * second;
        }
    }
    // route 2: the closed modified-Macdonald form
    RatFunc routeB;
    {
        auto [c_lam, cp_lam] = hook_products(lam);
        auto [c_mu, cp_mu] = hook_products(mu);
        (void)cp_lam;
        (void)cp_mu;
        RatFunc tfac = tpow(2 * (lam.n_stat() + mu.n_stat()) -
                                static_cast<long>(N - 1) * (lam.size() + mu.size()),
                            2);
        routeB = pref * tfac * h_pleth_factor(mu, lam, N) * omega_tn_b_inv(lam, N) /
                 (c_lam * c_mu);
    }
    if (routeA != routeB)
        throw internal_mismatch_error("snorm routes disagree at " + lam.to_string() + "," +
                                      mu.to_string() + ", N=" + std::to_string(N));
    return routeB;
}

RatFunc snorm_stable(const Partition& lam, const Partition& mu) {
    auto [c_lam, cp_lam] = hook_products(lam);
    auto [c_mu, cp_mu] = hook_products(mu);
    (void)cp_lam;
    (void)cp_mu;
    RatFunc vfac = RatFunc::monomial(VV, -static_cast<long>(lam.size()) * mu.size());
    // t^{(‖λ^t‖² + ‖μ^t‖²)/2} = t^{n(λ)+n(μ)+(|λ|+|μ|)/2}
    RatFunc tfac = tpow(2 * (lam.n_stat() + mu.n_stat()) + lam.size() + mu.size(), 2);
    RatFunc ufac = upow(-(static_cast<long>(lam.size()) + mu.size()), 2);
    // Ω[u B_λ(q,t^{-1})]^{-1} = ∏ (1 − u q^{a'} t^{-l'})
    RatFunc omega_inv = RatFunc::one();
    for (auto [col, row] : lam.boxes())
        omega_inv *= RatFunc::one() - upow(1) * qpow(col) * tpow(-row);
    return vfac * tfac * ufac * h_pleth_factor(mu, lam, -1) * omega_inv / (c_lam * c_mu);
}

RatFunc tnorm(const Partition& lam, int N) {
    long nsq = lam.norm_sq();
    long ntsq = lam.transpose().norm_sq();
    long sz = lam.size();
    return qpow(nsq * N - sz * sz, 2 * N) * tpow(static_cast<long>(N) * sz - ntsq, 2);
}

RatFunc s_operator_entry(const Partition& lam, const Partition& mu, int N) {
    if (lam.length() > N - 1) throw row_out_of_range_error();
    auto [c_lam, cp_lam] = hook_products(lam);
    auto [c_mu, cp_mu] = hook_products(mu);
    (void)c_lam;
    (void)cp_mu;
    RatFunc pref = qpow(-static_cast<long>(lam.size()) * mu.size(), N) *
                   tpow(2 * (lam.n_stat() + mu.n_stat()) -
                            static_cast<long>(N - 1) * (lam.size() + mu.size()),
                        2) /
                   (cp_lam * c_mu);
    // direct form
    RatFunc direct = pref * h_pleth_factor(mu, lam, N) / omega_tnm1_q_b(lam, N);
    // symmetry-flipped form
    RatFunc flipped = pref * (omega_tn_b(lam, N) / omega_tnm1_q_b(lam, N)) *
                      h_pleth_factor(lam, mu, N) / omega_tn_b(mu, N);
    if (direct != flipped)
        throw internal_mismatch_error("operator entry forms disagree at " + lam.to_string() +
                                      "," + mu.to_string());
    return direct;
}

CycFunc hopf_invariant(const Partition& lam, const Partition& mu, int k, int N) {
    if (lam.length() > N || mu.length() > N) throw too_many_rows_error();
    SpecContext ctx = make_spec_context(k, N);
    return evaluate_at(snorm_finite(lam, mu, N), ctx);
}

bool level_rank_check(const Partition& lam, const Partition& mu, int k, int N) {
    const SpecContext ctx = make_spec_context(k, N);
    const int m = ctx.m;
    // ω₁' with (ω₁')^k = ω
    const Cyc omega1p = m == 1 ? Cyc(1) : Cyc::root_of_unity(k * m, 1);
    // LHS: S^norm_{λ^t μ^t}(t^{-1}, q^{-1}) at the specialization, with
    // t^{1/k} read as v^{-1} ω₁'. Two-step substitution keeps root branches
    // explicit: first move onto integer grids via u and s.
    RatFunc F = snorm_finite(lam.transpose(), mu.transpose(), k);
    auto eval_lhs = [&](int eps_q) {
        std::map<int, RatFunc> lift{{VQ, RatFunc::monomial(VU, k)},
                                    {VT, RatFunc::monomial(VS, 2)}};
        CycFunc lifted = CycFunc(substitute(F, lift));
        // u = q̃^{1/k} ↦ v·(ω₁')^{-1};  s = t̃^{1/2} = q^{-1/2} ↦ ε_q v^{-N/2}
        std::map<int, CycFunc> fin{
            {VU, CycFunc::monomial(VV, 1, 1, omega1p.inverse())},
            {VS, CycFunc::monomial(VV, -N, 2, Cyc(Rat(eps_q)))}};
        return substitute(lifted, fin);
    };
    // RHS pieces
    RatFunc G = snorm_finite(lam, mu, N) / (pp_norm_qt(lam) * pp_norm_qt(mu));
    auto eval_rhs_core = [&](int eps_t_sign) {
        std::map<int, RatFunc> lift{{VQ, RatFunc::monomial(VU, N)},
                                    {VT, RatFunc::monomial(VS, 2)}};
        CycFunc lifted = CycFunc(substitute(G, lift));
        Cyc zeta = m == 1 ? Cyc(Rat(eps_t_sign))
                          : Cyc(Rat(eps_t_sign)) * Cyc::root_of_unity(2 * N, 1);
        std::map<int, CycFunc> fin{{VU, CycFunc::variable(VV)},
                                   {VS, CycFunc::monomial(VV, -k, 2, zeta)}};
        return substitute(lifted, fin);
    };
    const long P = lam.size() + mu.size();
    const long PP = static_cast<long>(lam.size()) * mu.size();
    for (int eps_q : {1, -1}) {
        for (int eps_t : {1, -1}) {
            CycFunc xi_q = CycFunc::monomial(VV, N, 2, Cyc(Rat(eps_q)));
            Cyc zeta = m == 1 ? Cyc(Rat(eps_t)) : Cyc(Rat(eps_t)) * Cyc::root_of_unity(2 * N, 1);
            CycFunc xi_t = CycFunc::monomial(VV, -k, 2, zeta);
            // branch pin √q^k √t^N = −1
            if (xi_q.pow(k) * xi_t.pow(N) != CycFunc(Cyc(Rat(-1)))) continue;
            CycFunc lhs = eval_lhs(eps_q);
            CycFunc rhs = eval_rhs_core(eps_t) * (xi_q / xi_t).pow(P) *
                          CycFunc(Cyc(omega1p)).pow(PP);
            if (lhs == rhs) return true;
        }
    }
    return false;
}

RatFunc kernel_z_coefficient(const Partition& a, const Partition& b, KernelVariant variant) {
    RatFunc vfac = RatFunc::monomial(VV, -static_cast<long>(a.size()) * b.size());
    RatFunc tufac = tpow(-(static_cast<long>(a.size()) + b.size()), 2) *
                    upow(-(static_cast<long>(a.size()) + b.size()), 2);
    // H̃_b[1 − u A_a(q,t); q,t]
    auto [Ba, Aa] = box_generating(a);
    (void)Ba;
    PlethAlphabet alpha = alphabet_scalar([Aa = Aa](long j) {
        return RatFunc::one() - RatFunc::monomial(VU, j) * Aa.adams(j);
    });
    RatFunc hple = plethysm_scalar(modified_h(b), alpha);
    // Ω[u B_a(q,t)]^{-1}
    RatFunc omega_inv = RatFunc::one();
    for (auto [col, row] : a.boxes())
        omega_inv *= RatFunc::one() - upow(1) * qpow(col) * tpow(row);
    RatFunc c = vfac * tufac * nabla_eigenvalue(a) * nabla_eigenvalue(b) /
                (h_star_norm(a) * h_star_norm(b)) * hple * omega_inv;
    if (variant == KernelVariant::modified) {
        for (const Partition* p : {&a, &b}) {
            RatFunc ratio = RatFunc::one();
            for (auto [col, row] : p->boxes()) {
                RatFunc mono = qpow(col) * tpow(row);
                ratio *= (RatFunc::one() - upow(1) * qpow(1) * tpow(1) * mono) /
                         (RatFunc::one() - upow(1) * mono);
            }
            c *= ratio;
        }
    }
    return c;
}

std::map<std::pair<Partition, Partition>, RatFunc> kernel_z(int degX, int degY,
                                                            KernelVariant variant) {
    std::map<std::pair<Partition, Partition>, RatFunc> out;
    for (const auto& a : partitions_up_to(degX))
        for (const auto& b : partitions_up_to(degY))
            out.emplace(std::make_pair(a, b), kernel_z_coefficient(a, b, variant));
    return out;
}

} // namespace macref
