#include "macref/speckit.hpp"

#include <numeric>

namespace macref {

SpecContext make_spec_context(int k, int N) {
    if (k <= 0 || N <= 0) throw error("level and rank must be positive");
    SpecContext ctx;
    ctx.k = k;
    ctx.N = N;
    ctx.m = std::gcd(k, N);
    if (ctx.m == 1) {
        ctx.omega = Cyc(1);
        ctx.omega1 = Cyc(1);
    } else {
        // ω₁ = ζ_N = ζ_{2N}^2, ω = ω₁^{N/m} = ζ_m
        ctx.omega1 = Cyc::root_of_unity(2 * N, 2);
        ctx.omega = Cyc::root_of_unity(2 * N, 2 * (N / ctx.m));
    }
    ctx.q_image = CycFunc::monomial(VV, N);
    ctx.t_image = CycFunc::monomial(VV, -k, 1, ctx.omega1);
    return ctx;
}

namespace {

void check_spec_input(const RatFunc& r) {
    if (r.num().depends_on(VV) || r.den().depends_on(VV) || r.num().depends_on(VS) ||
        r.den().depends_on(VS))
        throw error("expression already uses the specialization variables v or s");
}

// order of the zero at s = 1 of a (Laurent) polynomial in v, s
int order_at_s1(const Poly<Cyc>& p0) {
    if (p0.is_zero()) throw error("order of the zero polynomial");
    // move to an integer grid: a power substitution does not change the order
    Poly<Cyc> p = Poly<Cyc>::on_grid(p0, 1);
    Mono mn = p.min_exponents();
    p = p.shifted(mono_sub(mono_zero(), mn));  // monomials are units for this count
    int order = 0;
    while (true) {
        // evaluate at s = 1 by dropping the s exponent
        // (sum coefficients of equal v-monomials)
        std::vector<Poly<Cyc>::Term> at1;
        at1.reserve(p.size());
        for (const auto& [m, c] : p.terms()) {
            Mono n = m;
            n[VS] = 0;
            at1.push_back({n, c});
        }
        if (!Poly<Cyc>::from_terms(1, std::move(at1)).is_zero()) return order;
        // divide by (s − 1): synthetic division on s-coefficient slices
        int32_t d = p.deg_in(VS);
        std::map<int32_t, std::vector<Poly<Cyc>::Term>> slices;
        for (const auto& [m, c] : p.terms()) {
            Mono n = m;
            n[VS] = 0;
            slices[m[VS]].push_back({n, c});
        }
        std::map<int32_t, Poly<Cyc>> A;
        for (auto& [j, ts] : slices) A.emplace(j, Poly<Cyc>::from_terms(1, std::move(ts)));
        // P = (s−1) Q with Q_j = Σ_{i > j} A_i
        std::vector<Poly<Cyc>::Term> qt;
        Poly<Cyc> run = Poly<Cyc>::zero();
        for (int32_t j = d; j >= 1; --j) {
            auto it = A.find(j);
            if (it != A.end()) run += it->second;
            Mono s = mono_zero();
            s[VS] = j - 1;
            for (const auto& [m, c] : run.terms()) qt.push_back({mono_add(m, s), c});
        }
        p = Poly<Cyc>::from_terms(1, std::move(qt));
        ++order;
    }
}

} // namespace

CycFunc evaluate_at(const RatFunc& r, const SpecContext& ctx) {
    check_spec_input(r);
    std::map<int, CycFunc> sigma{{VQ, ctx.q_image}, {VT, ctx.t_image}};
    return substitute(CycFunc(r), sigma);
}

int vanishing_order(const RatFunc& r, const SpecContext& ctx) {
    check_spec_input(r);
    if (r.is_zero()) throw not_defined_along_family_error("zero expression has no finite order");
    CycFunc qs = CycFunc::monomial(VV, ctx.N) * CycFunc::variable(VS);
    std::map<int, CycFunc> sigma{{VQ, qs}, {VT, ctx.t_image}};
    CycFunc num_img = substitute_poly(CycFunc(r).num(), sigma);
    CycFunc den_img = substitute_poly(CycFunc(r).den(), sigma);
    // monomial targets keep polynomials polynomial (up to a Laurent prefactor)
    int num_ord = order_at_s1(num_img.num());
    int den_ord = order_at_s1(den_img.num());
    if (num_ord < den_ord)
        throw not_defined_along_family_error("pole along the deformation family");
    return num_ord - den_ord;
}

RatFunc omega_tn_b_inv(const Partition& lam, int N) {
    RatFunc acc = RatFunc::one();
    for (auto [col, row] : lam.boxes())
        acc *= RatFunc::one() - RatFunc::monomial(VQ, col) * RatFunc::monomial(VT, N - row);
    return acc;
}

RatFunc omega_tn_b(const Partition& lam, int N) { return omega_tn_b_inv(lam, N).inverse(); }

RatFunc omega_tnm1_q_b(const Partition& lam, int N) {
    RatFunc acc = RatFunc::one();
    for (auto [col, row] : lam.boxes())
        acc *= RatFunc::one() -
               RatFunc::monomial(VQ, col + 1) * RatFunc::monomial(VT, N - 1 - row);
    return acc.inverse();
}

namespace {

std::string bool_str(bool b) { return b ? "zero" : "nonzero"; }

} // namespace

std::vector<LemmaAuditRecord> lemma_audit(const SpecContext& ctx, int max_size) {
    std::vector<LemmaAuditRecord> out;
    const int k = ctx.k, N = ctx.N;
    for (int n = 0; n <= max_size; ++n) {
        for (const auto& lam : partitions_of(n)) {
            const int llen = lam.length();
            const int ltlen = lam.transpose().length();

            // (a) Lemma vanish: ∏(1 − t^{N−l'} q^{a'}) vanishes iff
            //     l(λ) > N or l(λ^t) > k; order 1 in the second case
            {
                LemmaAuditRecord rec;
                rec.lambda = lam;
                rec.check = "vanish";
                RatFunc V = omega_tn_b_inv(lam, N);
                bool expected = llen > N || ltlen > k;
                rec.expected = bool_str(expected);
                if (V.is_zero()) {
                    rec.got = "zero";
                    rec.pass = (llen > N) && expected;
                } else {
                    CycFunc img = evaluate_at(V, ctx);
                    rec.got = bool_str(img.is_zero());
                    rec.pass = img.is_zero() == expected;
                    if (rec.pass && img.is_zero()) {
                        int ord = vanishing_order(V, ctx);
                        if (ord != 1) {
                            rec.pass = false;
                            rec.got += " of order " + std::to_string(ord);
                        }
                    }
                }
                out.push_back(std::move(rec));
            }

            if (llen > N) continue;  // the remaining lemmas assume l(λ) ≤ N
            Partition bar = lam.strip_full_columns(N);
            auto [c_lam, cp_lam] = hook_products(lam);

            // (b) Lemma nonvanish: c'_λ nonzero; c_λ zero iff
            //     l(λ^t) > k and l(λ̄^t) ≤ k, with order 1
            {
                LemmaAuditRecord rec;
                rec.lambda = lam;
                rec.check = "nonvanish";
                bool cp_nonzero = !evaluate_at(cp_lam, ctx).is_zero();
                bool c_zero = evaluate_at(c_lam, ctx).is_zero();
                bool c_zero_expected = ltlen > k && bar.transpose().length() <= k;
                rec.expected = "c' nonzero, c " + bool_str(c_zero_expected);
                rec.got = std::string(cp_nonzero ? "c' nonzero" : "c' zero") + ", c " + bool_str(c_zero);
                rec.pass = cp_nonzero && (c_zero == c_zero_expected);
                if (rec.pass && c_zero) {
                    int ord = vanishing_order(c_lam, ctx);
                    if (ord != 1) {
                        rec.pass = false;
                        rec.got += " of order " + std::to_string(ord);
                    }
                }
                out.push_back(std::move(rec));
            }

            // (c) the column-stripping product identities
            {
                LemmaAuditRecord rec;
                rec.lambda = lam;
                rec.check = "cut-product";
                auto [c_bar, cp_bar] = hook_products(bar);
                bool first = c_lam * omega_tn_b(lam, N) == c_bar * omega_tn_b(bar, N);
                bool second =
                    cp_lam * omega_tnm1_q_b(lam, N) == cp_bar * omega_tnm1_q_b(bar, N);
                rec.expected = "equal";
                rec.got = first && second ? "equal" : "different";
                rec.pass = first && second;
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

bool lemma_audit_passes(const SpecContext& ctx, int max_size) {
    for (const auto& rec : lemma_audit(ctx, max_size))
        if (!rec.pass) return false;
    return true;
}

} // namespace macref
