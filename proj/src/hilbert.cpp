#include "macref/hilbert.hpp"

#include <mutex>

#include "macref/refinedcs.hpp"

namespace macref {

namespace {

RatFunc qpow(long n, long d = 1) { return RatFunc::monomial(VQ, n, d); }
RatFunc tpow(long n, long d = 1) { return RatFunc::monomial(VT, n, d); }
RatFunc upow(long n, long d = 1) { return RatFunc::monomial(VU, n, d); }

RatFunc subst1(const RatFunc& r, int var, const RatFunc& tgt) {
    std::map<int, RatFunc> sigma{{var, tgt}};
    return substitute(r, sigma);
}

SymFunc invert_params(const SymFunc& f) {
    return f.map_coefficients([](const RatFunc& c) {
        std::map<int, RatFunc> sigma{{VQ, RatFunc::monomial(VQ, -1)},
                                     {VT, RatFunc::monomial(VT, -1)}};
        return substitute(c, sigma);
    });
}

std::mutex g_mutex;
std::map<std::tuple<Partition, Partition, int>, RatFunc> g_schur_cache;
std::vector<RatFunc> g_o_series;

} // namespace

FixedPointData fixed_point_data(const Partition& mu) {
    FixedPointData d;
    d.mu = mu;
    auto [B, A] = box_generating(mu);
    d.taut_char = B;
    d.universal_char = A;
    d.det_weight = nabla_eigenvalue(mu);
    auto [c, cp] = hook_products(mu);
    d.tangent_alt_sum = subst1(c, VQ, RatFunc::monomial(VQ, -1)) *
                        subst1(cp, VT, RatFunc::monomial(VT, -1));
    return d;
}

RatFunc schur_at_fixed_point(const Partition& lam, const Partition& mu, int kind) {
    {
        std::lock_guard<std::mutex> lk(g_mutex);
        auto it = g_schur_cache.find({lam, mu, kind});
        if (it != g_schur_cache.end()) return it->second;
    }
    auto [B, A] = box_generating(mu);
    (void)B;
    PlethAlphabet alpha = alphabet_scalar([A = A, kind](long j) {
        RatFunc v = A.adams(j);
        if (kind == 1) v /= RatFunc::one() - RatFunc::monomial(VQ, j);
        if (kind == 2) v /= RatFunc::one() - RatFunc::monomial(VT, j);
        return v;
    });
    RatFunc val = plethysm_scalar(sym_s(lam), alpha);
    std::lock_guard<std::mutex> lk(g_mutex);
    return g_schur_cache.emplace(std::make_tuple(lam, mu, kind), std::move(val)).first->second;
}

RatFunc class_char_at(const ClassSpec& spec, const Partition& mu) {
    RatFunc acc = RatFunc::one();
    for (const auto& atom : spec.atoms) {
        switch (atom.kind) {
            case ClassAtom::Kind::structure_sheaf:
                break;
            case ClassAtom::Kind::wedge_taut: {
                RatFunc prod = RatFunc::one();
                for (auto [col, row] : mu.boxes())
                    prod *= RatFunc::one() -
                            RatFunc::variable(atom.var) * qpow(col) * tpow(row);
                acc *= prod;
                break;
            }
            case ClassAtom::Kind::schur_e0:
                acc *= schur_at_fixed_point(atom.lambda, mu, 0);
                break;
            case ClassAtom::Kind::schur_ex:
                acc *= schur_at_fixed_point(atom.lambda, mu, 1);
                break;
            case ClassAtom::Kind::schur_ey:
                acc *= schur_at_fixed_point(atom.lambda, mu, 2);
                break;
            case ClassAtom::Kind::det_twist:
                acc *= nabla_eigenvalue(mu).pow(atom.exponent);
                break;
        }
    }
    return acc;
}

std::vector<RatFunc> euler_char_series(const ClassSpec& spec, int D) {
    std::vector<RatFunc> out;
    out.reserve(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        std::vector<RatFunc> terms;
        for (const auto& mu : partitions_of(n)) {
            FixedPointData d = fixed_point_data(mu);
            terms.push_back(class_char_at(spec, mu) / d.tangent_alt_sum);
        }
        out.push_back(frac_sum(std::move(terms)));
    }
    return out;
}

std::vector<RatFunc> structure_sheaf_series(int D) {
    std::lock_guard<std::mutex> lk(g_mutex);
    for (int n = static_cast<int>(g_o_series.size()); n <= D; ++n) {
        std::vector<RatFunc> terms;
        for (const auto& mu : partitions_of(n)) {
            auto [c, cp] = hook_products(mu);
            RatFunc tangent = subst1(c, VQ, RatFunc::monomial(VQ, -1)) *
                              subst1(cp, VT, RatFunc::monomial(VT, -1));
            terms.push_back(tangent.inverse());
        }
        g_o_series.push_back(frac_sum(std::move(terms)));
    }
    return std::vector<RatFunc>(g_o_series.begin(), g_o_series.begin() + D + 1);
}

std::vector<RatFunc> series_mul(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                                int D) {
    std::vector<std::vector<RatFunc>> buckets(static_cast<size_t>(D) + 1);
    for (int i = 0; i <= D && i < static_cast<int>(a.size()); ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= D && j < static_cast<int>(b.size()); ++j)
            buckets[static_cast<size_t>(i + j)].push_back(a[static_cast<size_t>(i)] *
                                                          b[static_cast<size_t>(j)]);
    }
    std::vector<RatFunc> out;
    out.reserve(buckets.size());
    for (auto& bucket : buckets) out.push_back(frac_sum(std::move(bucket)));
    return out;
}

RatFunc ght_left_side(const Partition& lam, const Partition& mu) {
    auto [B, A] = box_generating(lam);
    (void)B;
    PlethAlphabet alpha = alphabet_scalar([A = A](long j) {
        return RatFunc::one() - RatFunc::monomial(VU, j) * A.adams(j);
    });
    RatFunc pleth = plethysm_scalar(modified_h(mu), alpha);
    RatFunc prod = RatFunc::one();
    for (auto [col, row] : lam.boxes())
        prod *= RatFunc::one() - upow(1) * qpow(col) * tpow(row);
    return pleth * prod;
}

bool verify_symmetry_ght(const Partition& lam, const Partition& mu, int D) {
    auto lhs = series_coefficients(ght_left_side(lam, mu), VU, D);

    // Ω[−u/(1−q)(1−t)] series
    PlethAlphabet neg_inv = alphabet_scalar([](long j) {
        RatFunc d = (RatFunc::one() - qpow(j)) * (RatFunc::one() - tpow(j));
        return -(RatFunc::one() / d);
    });
    std::vector<RatFunc> outer;
    for (int n = 0; n <= D; ++n) outer.push_back(plethysm_scalar(sym_h(n), neg_inv));

    // degree-k parts of the two Ω̃ arguments
    auto tilde_part = [](const Partition& p, int k) {
        auto [B, A] = box_generating(p);
        (void)B;
        RatFunc g = -(A / ((RatFunc::one() - RatFunc::variable(VQ)) *
                           (RatFunc::one() - RatFunc::variable(VT))));
        return plethysm_sym(sym_e(k), alphabet_x_times(g));
    };
    std::vector<RatFunc> inner;
    for (int k = 0; k <= D; ++k) {
        SymFunc left = nabla(tilde_part(mu, k), -1);
        SymFunc right = tilde_part(lam, k);
        inner.push_back(inner_product(left, right, InnerKind::star));
    }
    auto rhs = series_mul(outer, inner, D);
    for (int n = 0; n <= D; ++n)
        if (lhs[static_cast<size_t>(n)] != rhs[static_cast<size_t>(n)]) return false;
    return true;
}

bool verify_hilb_hilb(const Partition& lam, const Partition& mu, int D) {
    auto lhs = series_mul(series_coefficients(ght_left_side(lam, mu), VU, D),
                          structure_sheaf_series(D), D);
    SymFunc hl = invert_params(modified_h(lam));
    SymFunc hm = invert_params(modified_h(mu));
    std::vector<RatFunc> rhs;
    for (int n = 0; n <= D; ++n) {
        std::vector<RatFunc> terms;
        for (const auto& nu : partitions_of(n)) {
            std::vector<RatFunc> ls, rs;
            for (const auto& [sig, c] : hl.terms()) ls.push_back(c * schur_at_fixed_point(sig, nu, 0));
            for (const auto& [tau, c] : hm.terms()) rs.push_back(c * schur_at_fixed_point(tau, nu, 0));
            terms.push_back(frac_sum(std::move(ls)) * frac_sum(std::move(rs)) /
                            fixed_point_data(nu).tangent_alt_sum);
        }
        rhs.push_back(frac_sum(std::move(terms)));
    }
    for (int n = 0; n <= D; ++n)
        if (lhs[static_cast<size_t>(n)] != rhs[static_cast<size_t>(n)]) return false;
    return true;
}

bool verify_corollary_empty(const Partition& lam, int D) {
    SymFunc nab = nabla(sym_s(lam.transpose()));
    PlethAlphabet one_minus_u = alphabet_scalar([](long j) {
        return RatFunc::one() - RatFunc::monomial(VU, j);
    });
    RatFunc poly = plethysm_scalar(nab, one_minus_u);
    auto lhs = series_mul(series_coefficients(poly, VU, D), structure_sheaf_series(D), D);
    for (int n = 0; n <= D; ++n) {
        std::vector<RatFunc> terms;
        for (const auto& nu : partitions_of(n))
            terms.push_back(schur_at_fixed_point(lam, nu, 0) /
                            fixed_point_data(nu).tangent_alt_sum);
        if (lhs[static_cast<size_t>(n)] != frac_sum(std::move(terms))) return false;
    }
    return true;
}

bool verify_lemma_symmetry(const Partition& lam, const Partition& mu) {
    auto side = [](const Partition& a, const Partition& b) {
        // (−1)^{|a|} H̃_b[−A_a] q^{n(a^t)} t^{n(a)}
        auto [B, A] = box_generating(a);
        (void)B;
        PlethAlphabet alpha = alphabet_scalar([A = A](long j) { return -A.adams(j); });
        RatFunc v = plethysm_scalar(modified_h(b), alpha) * nabla_eigenvalue(a);
        return a.size() % 2 == 0 ? v : -v;
    };
    return side(lam, mu) == side(mu, lam);
}

bool verify_pairing_geom(const Partition& lam, const Partition& mu) {
    RatFunc got = inner_product(nabla(modified_h(lam), -1), modified_h(mu), InnerKind::star);
    if (lam == mu) return got == fixed_point_data(mu).tangent_alt_sum;
    return got.is_zero();
}

bool verify_main_kernel(const Partition& lam, const Partition& mu, int D) {
    // coefficient of s_λ[X/(1−t)] s_μ[Y/(1−q)] extracted from the plain kernel
    RatFunc extract = RatFunc::zero();
    RatFunc one_minus_t = RatFunc::one() - RatFunc::variable(VT);
    RatFunc one_minus_q = RatFunc::one() - RatFunc::variable(VQ);
    for (const auto& a : partitions_of(lam.size())) {
        RatFunc dx = plethysm_scale_x(modified_h(a), one_minus_t)
                         .converted(Basis::schur)
                         .coefficient(lam);
        if (dx.is_zero()) continue;
        for (const auto& b : partitions_of(mu.size())) {
            RatFunc dy = plethysm_scale_x(modified_h(b), one_minus_q)
                             .converted(Basis::schur)
                             .coefficient(mu);
            if (dy.is_zero()) continue;
            extract += dx * dy * kernel_z_coefficient(a, b, KernelVariant::plain);
        }
    }
    const long P = lam.size() + mu.size();
    RatFunc normalizer = upow(P, 2) * tpow(P, 2) *
                         RatFunc::monomial(VV, static_cast<long>(lam.size()) * mu.size());
    auto lhs = series_mul(series_coefficients(normalizer * extract, VU, D),
                          structure_sheaf_series(D), D);
    for (int n = 0; n <= D; ++n) {
        std::vector<RatFunc> terms;
        for (const auto& nu : partitions_of(n))
            terms.push_back(schur_at_fixed_point(lam, nu, 1) * schur_at_fixed_point(mu, nu, 2) /
                            fixed_point_data(nu).tangent_alt_sum);
        if (lhs[static_cast<size_t>(n)] != frac_sum(std::move(terms))) return false;
    }
    return true;
}

} // namespace macref
