#include "macref/verify.hpp"

#include <chrono>
#include <functional>
#include <future>

#include "macref/hilbert.hpp"
#include "macref/refinedcs.hpp"

namespace macref {

namespace {

using CheckFn = std::function<CheckResult()>;

RatFunc Q() { return RatFunc::variable(VQ); }
RatFunc T() { return RatFunc::variable(VT); }

CheckResult pass_result(std::string name) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = true;
    return r;
}

CheckResult fail_result(std::string name, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = false;
    r.detail = std::move(detail);
    return r;
}

std::string pair_witness(const Partition& a, const Partition& b) {
    return "lambda=" + a.to_string() + " mu=" + b.to_string();
}

// ---- plethysm / symmetric-function checks ----

CheckResult check_basis_roundtrip(int s) {
    const Basis bases[] = {Basis::monomial, Basis::elementary, Basis::homogeneous,
                           Basis::powersum, Basis::schur};
    for (int n = 0; n <= s; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis from : bases)
                for (Basis to : bases) {
                    SymFunc f = SymFunc::basis_element(from, lam);
                    if (f.converted(to).converted(from) != f)
                        return fail_result("plethysm.basis-roundtrip",
                                           lam.to_string() + " via " + basis_name(to));
                }
    return pass_result("plethysm.basis-roundtrip");
}

CheckResult check_plethysm_identity(int s) {
    for (int n = 0; n <= s; ++n)
        for (const auto& lam : partitions_of(n)) {
            if (plethysm_sym(sym_s(lam), alphabet_x()) != sym_s(lam))
                return fail_result("plethysm.identity-alphabet", lam.to_string());
            if (plethysm_sym(sym_s(lam), alphabet_minus_eps_x()) != omega(sym_s(lam)))
                return fail_result("plethysm.omega-eps", lam.to_string());
        }
    return pass_result("plethysm.identity-alphabet");
}

CheckResult check_plethysm_multiplicative(int s) {
    PlethAlphabet A = alphabet_x_times(RatFunc::one() / (RatFunc::one() - Q()));
    int cap = std::min(s, 3);
    for (int a = 1; a <= cap; ++a)
        for (int b = 1; b <= cap; ++b)
            for (const auto& f : partitions_of(a))
                for (const auto& g : partitions_of(b)) {
                    SymFunc lhs = plethysm_sym(sym_s(f) * sym_s(g), A);
                    SymFunc rhs = plethysm_sym(sym_s(f), A) * plethysm_sym(sym_s(g), A);
                    if (lhs != rhs)
                        return fail_result("plethysm.multiplicativity", pair_witness(f, g));
                }
    return pass_result("plethysm.multiplicativity");
}

CheckResult check_qt_star_relation(int s) {
    RatFunc inv1mt = RatFunc::one() / (RatFunc::one() - T());
    int cap = std::min(s, 4);
    for (int n = 1; n <= cap; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                RatFunc lhs = inner_product(sym_s(a), sym_s(b), InnerKind::qt);
                RatFunc rhs = inner_product(plethysm_scale_x(sym_s(a), inv1mt),
                                            omega(plethysm_scale_x(sym_s(b), inv1mt)),
                                            InnerKind::star);
                if (lhs != rhs) return fail_result("plethysm.qt-star-relation", pair_witness(a, b));
            }
    return pass_result("plethysm.qt-star-relation");
}

CheckResult check_omega_b(int s) {
    for (int n = 0; n <= s; ++n)
        for (const auto& lam : partitions_of(n)) {
            Poly<Rat> uB = box_poly(lam) * Poly<Rat>::variable(VU);
            RatFunc lhs = omega_closed(uB).inverse();
            RatFunc prod = RatFunc::one();
            for (auto [c, r] : lam.boxes())
                prod *= RatFunc::one() - RatFunc::monomial(VU, 1) * RatFunc::monomial(VQ, c) *
                                             RatFunc::monomial(VT, r);
            if (lhs != prod) return fail_result("plethysm.omegaB", lam.to_string());
        }
    return pass_result("plethysm.omegaB");
}

CheckResult check_cauchy_pq(int s) {
    // Σ_μ P_μ(X) Q_μ(Y) = Ω[XY(1−t)/(1−q)] degree by degree
    PlethAlphabet g = alphabet_scalar([](long j) {
        return (RatFunc::one() - RatFunc::monomial(VT, j)) /
               (RatFunc::one() - RatFunc::monomial(VQ, j));
    });
    int cap = std::min(s, 4);
    for (int d = 0; d <= cap; ++d) {
        SymFunc2 lhs(Basis::monomial, Basis::monomial);
        for (const auto& mu : partitions_of(d)) {
            SymFunc P = macdonald_p(mu);
            SymFunc Qm = P.scaled(pp_norm_qt(mu).inverse());
            lhs += SymFunc2::outer(P, Qm);
        }
        SymFunc2 rhs = omega_kernel2(g, d).converted(Basis::monomial, Basis::monomial);
        if (!(lhs == rhs)) return fail_result("plethysm.cauchy-macdonald", "degree " + std::to_string(d));
    }
    return pass_result("plethysm.cauchy-macdonald");
}

// ---- macdonald checks ----

CheckResult check_characterization(int s) {
    RatFunc one_minus_q = RatFunc::one() - Q();
    RatFunc one_minus_t = RatFunc::one() - T();
    PlethAlphabet one_alpha = alphabet_scalar([](long) { return RatFunc::one(); });
    for (int n = 1; n <= s; ++n)
        for (const auto& mu : partitions_of(n)) {
            SymFunc H = modified_h(mu);
            SymFunc in_q = plethysm_scale_x(H, one_minus_q).converted(Basis::schur);
            for (const auto& [lam, c] : in_q.terms())
                if (!Partition::dominated_by(mu, lam))
                    return fail_result("macdonald.characterization",
                                       mu.to_string() + " q-triangularity at " + lam.to_string());
            SymFunc in_t = plethysm_scale_x(H, one_minus_t).converted(Basis::schur);
            Partition mt = mu.transpose();
            for (const auto& [lam, c] : in_t.terms())
                if (!Partition::dominated_by(mt, lam))
                    return fail_result("macdonald.characterization",
                                       mu.to_string() + " t-triangularity at " + lam.to_string());
            if (plethysm_scalar(H, one_alpha) != RatFunc::one())
                return fail_result("macdonald.characterization", mu.to_string() + " normalization");
        }
    return pass_result("macdonald.characterization");
}

CheckResult check_omega_h(int s) {
    for (int n = 1; n <= s; ++n)
        for (const auto& mu : partitions_of(n)) {
            SymFunc inv = modified_h(mu).map_coefficients([](const RatFunc& c) {
                std::map<int, RatFunc> sg{{VQ, RatFunc::monomial(VQ, -1)},
                                          {VT, RatFunc::monomial(VT, -1)}};
                return substitute(c, sg);
            });
            if (modified_h(mu) != omega(inv).scaled(nabla_eigenvalue(mu)))
                return fail_result("macdonald.omegaH", mu.to_string());
        }
    return pass_result("macdonald.omegaH");
}

CheckResult check_transpose(int s) {
    for (int n = 1; n <= s; ++n)
        for (const auto& mu : partitions_of(n)) {
            SymFunc swapped = modified_h(mu).map_coefficients([](const RatFunc& c) {
                std::map<int, RatFunc> sg{{VQ, T()}, {VT, Q()}};
                return substitute(c, sg);
            });
            if (modified_h(mu.transpose()) != swapped)
                return fail_result("macdonald.transpose", mu.to_string());
        }
    return pass_result("macdonald.transpose");
}

CheckResult check_hinner(int s) {
    for (int n = 1; n <= s; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                RatFunc got = inner_product(modified_h(a), modified_h(b), InnerKind::star);
                RatFunc want = a == b ? h_star_norm(a) : RatFunc::zero();
                if (got != want) return fail_result("macdonald.hinner", pair_witness(a, b));
            }
    return pass_result("macdonald.hinner");
}

CheckResult check_cauchy_modified(int s) {
    PlethAlphabet inv = alphabet_scalar([](long j) {
        RatFunc d = (RatFunc::one() - RatFunc::monomial(VQ, j)) *
                    (RatFunc::one() - RatFunc::monomial(VT, j));
        return RatFunc::one() / d;
    });
    for (int d = 0; d <= s; ++d) {
        SymFunc2 lhs = omega_kernel2(inv, d, true).converted(Basis::schur, Basis::schur);
        SymFunc2 rhs(Basis::schur, Basis::schur);
        for (const auto& mu : partitions_of(d))
            rhs += SymFunc2::outer(modified_h(mu), modified_h(mu)).scaled(h_star_norm(mu).inverse());
        if (!(lhs == rhs)) return fail_result("macdonald.cauchy", "degree " + std::to_string(d));
    }
    return pass_result("macdonald.cauchy");
}

CheckResult check_nabla_selfadjoint(int s) {
    int cap = std::min(s, 4);
    for (int n = 1; n <= cap; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                if (inner_product(nabla(sym_s(a)), sym_s(b), InnerKind::star) !=
                    inner_product(sym_s(a), nabla(sym_s(b)), InnerKind::star))
                    return fail_result("macdonald.nabla-selfadjoint", pair_witness(a, b));
    return pass_result("macdonald.nabla-selfadjoint");
}

CheckResult check_positivity(int s) {
    for (int n = 1; n <= s; ++n) {
        const auto& t = macdonald_table(n);
        for (const auto& [lm, c] : t.K) {
            bool ok = c.is_polynomial() && c.num().eden() == 1;
            if (ok)
                for (const auto& [m, coef] : c.num().terms())
                    ok = ok && m[VQ] >= 0 && m[VT] >= 0 && m[VU] == 0 && m[VV] == 0 &&
                         coef.get_den() == 1 && sgn(coef) > 0;
            if (!ok)
                return fail_result("macdonald.positivity", pair_witness(lm.first, lm.second));
        }
    }
    return pass_result("macdonald.positivity");
}

CheckResult check_principal(int s) {
    for (int N = 1; N <= 3; ++N)
        for (int n = 0; n <= s; ++n)
            for (const auto& lam : partitions_of(n)) {
                try {
                    principal_specialization(lam, N);
                } catch (const internal_mismatch_error&) {
                    return fail_result("macdonald.principal-dualroute",
                                       lam.to_string() + " N=" + std::to_string(N));
                }
            }
    return pass_result("macdonald.principal-dualroute");
}

// ---- specialization checks ----

CheckResult check_lemma_audit(int k, int N, int s) {
    std::string name = "specialization.lemma-audit(" + std::to_string(k) + "," +
                       std::to_string(N) + ")";
    auto recs = lemma_audit(make_spec_context(k, N), s);
    for (const auto& rec : recs)
        if (!rec.pass)
            return fail_result(name, rec.lambda.to_string() + " " + rec.check + ": expected " +
                                         rec.expected + ", got " + rec.got);
    return pass_result(name);
}

CheckResult check_trunc(int s) {
    for (int N = 1; N <= 3; ++N)
        for (int n = N; n <= s; ++n)
            for (const auto& mu : partitions_of(n)) {
                if (mu.length() != N) continue;
                Partition bar = mu.strip_full_columns(N);
                for (const auto& lam : partitions_up_to(2))
                    if (snorm_finite(lam, mu, N) != snorm_finite(lam, bar, N))
                        return fail_result("specialization.trunc",
                                           pair_witness(lam, mu) + " N=" + std::to_string(N));
            }
    return pass_result("specialization.trunc");
}

CheckResult check_lemma_cut(int s) {
    for (int N = 1; N <= 3; ++N)
        for (int n = N; n <= s; ++n)
            for (const auto& mu : partitions_of(n)) {
                if (mu.length() != N) continue;
                std::vector<int> rp;
                for (int p : mu.parts())
                    if (p - 1 > 0) rp.push_back(p - 1);
                Partition reduced(rp);
                auto lhs = expand_in_variables(macdonald_p(mu), N);
                auto rhs0 = expand_in_variables(macdonald_p(reduced), N);
                std::map<std::vector<int>, RatFunc> rhs;
                for (const auto& [e, c] : rhs0) {
                    std::vector<int> e2 = e;
                    for (auto& x : e2) x += 1;
                    rhs.emplace(e2, c);
                }
                if (lhs != rhs)
                    return fail_result("specialization.lemma-cut",
                                       mu.to_string() + " N=" + std::to_string(N));
            }
    return pass_result("specialization.lemma-cut");
}

// ---- snorm checks ----

CheckResult check_unknot(int) {
    for (int N = 1; N <= 5; ++N) {
        RatFunc got = snorm_finite(Partition({1}), Partition::empty(), N);
        RatFunc expect = (RatFunc::monomial(VT, N, 2) - RatFunc::monomial(VT, -N, 2)) /
                         (RatFunc::monomial(VT, 1, 2) - RatFunc::monomial(VT, -1, 2));
        if (got != expect) return fail_result("snorm.unknot", "N=" + std::to_string(N));
    }
    return pass_result("snorm.unknot");
}

CheckResult check_snorm_symmetry(int s, int maxN) {
    int cap = std::min(s, 4);
    for (int N = 1; N <= maxN; ++N)
        for (int a = 0; a <= cap; ++a)
            for (int b = a; b <= cap; ++b)
                for (const auto& lam : partitions_of(a))
                    for (const auto& mu : partitions_of(b)) {
                        try {
                            if (snorm_finite(lam, mu, N) != snorm_finite(mu, lam, N))
                                return fail_result("snorm.dualroute-symmetry",
                                                   pair_witness(lam, mu) + " N=" + std::to_string(N));
                        } catch (const internal_mismatch_error& e) {
                            return fail_result("snorm.dualroute-symmetry", e.what());
                        }
                    }
    return pass_result("snorm.dualroute-symmetry");
}

CheckResult check_stability(int s) {
    int cap = std::min(s, 3);
    for (int N = 1; N <= 3; ++N) {
        std::map<int, RatFunc> sigma{{VU, RatFunc::monomial(VT, N)},
                                     {VV, RatFunc::monomial(VQ, 1, N)}};
        for (int a = 0; a <= cap; ++a)
            for (int b = 0; b <= cap; ++b)
                for (const auto& lam : partitions_of(a))
                    for (const auto& mu : partitions_of(b)) {
                        if (lam.length() > N || mu.length() > N) continue;
                        if (substitute(snorm_stable(lam, mu), sigma) != snorm_finite(lam, mu, N))
                            return fail_result("snorm.stability",
                                               pair_witness(lam, mu) + " N=" + std::to_string(N));
                    }
    }
    return pass_result("snorm.stability");
}

CheckResult check_hopf_vanishing(int s) {
    for (auto [k, N] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
        for (int n = 0; n <= s; ++n)
            for (const auto& lam : partitions_of(n)) {
                if (lam.length() > N) continue;
                Partition bar = lam.strip_full_columns(N);
                if (bar.transpose().length() > k) {
                    CycFunc val = hopf_invariant(lam, Partition::empty(), k, N);
                    if (!val.is_zero())
                        return fail_result("snorm.hopf-vanishing",
                                           lam.to_string() + " k=" + std::to_string(k) +
                                               " N=" + std::to_string(N));
                }
            }
    }
    return pass_result("snorm.hopf-vanishing");
}

CheckResult check_tnorm_trunc(int s) {
    for (int N = 1; N <= 3; ++N)
        for (int n = N; n <= s; ++n)
            for (const auto& lam : partitions_of(n)) {
                if (lam.length() != N) continue;
                if (tnorm(lam, N) != tnorm(lam.strip_full_columns(N), N))
                    return fail_result("snorm.tnorm-trunc",
                                       lam.to_string() + " N=" + std::to_string(N));
            }
    return pass_result("snorm.tnorm-trunc");
}

// ---- hilbert checks ----

CheckResult check_ght(int s, int D) {
    for (int a = 0; a <= s; ++a)
        for (int b = a; b <= s; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    if (!verify_symmetry_ght(lam, mu, D))
                        return fail_result("hilbert.ght", pair_witness(lam, mu));
    return pass_result("hilbert.ght");
}

CheckResult check_hilbhilb(int s, int D) {
    for (int a = 0; a <= s; ++a)
        for (int b = a; b <= s; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    if (!verify_hilb_hilb(lam, mu, D))
                        return fail_result("hilbert.hilbhilb", pair_witness(lam, mu));
    return pass_result("hilbert.hilbhilb");
}

CheckResult check_cor_empty(int s, int D) {
    for (int n = 0; n <= s; ++n)
        for (const auto& lam : partitions_of(n))
            if (!verify_corollary_empty(lam, D))
                return fail_result("hilbert.cor-empty", lam.to_string());
    return pass_result("hilbert.cor-empty");
}

CheckResult check_lemma_symmetry_grid(int s) {
    for (int a = 0; a <= s; ++a)
        for (int b = a; b <= s; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    if (!verify_lemma_symmetry(lam, mu))
                        return fail_result("hilbert.lemma-symmetry", pair_witness(lam, mu));
    return pass_result("hilbert.lemma-symmetry");
}

CheckResult check_pairing_geom_grid(int s) {
    for (int n = 1; n <= s; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                if (!verify_pairing_geom(a, b))
                    return fail_result("hilbert.pairing-geom", pair_witness(a, b));
    return pass_result("hilbert.pairing-geom");
}

CheckResult check_main_kernel(int s, int D) {
    int cap = std::min(s, 2);
    int dcap = std::min(D, 3);
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; b <= cap; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    if (!verify_main_kernel(lam, mu, dcap))
                        return fail_result("hilbert.main-kernel", pair_witness(lam, mu));
    return pass_result("hilbert.main-kernel");
}

CheckResult check_specialized_cauchy(int s) {
    PlethAlphabet plane = alphabet_scalar([](long j) {
        return RatFunc::one() /
               ((RatFunc::one() - RatFunc::monomial(VQ, j)) *
                (RatFunc::one() - RatFunc::monomial(VT, j)));
    });
    auto series = structure_sheaf_series(s);
    for (int n = 0; n <= s; ++n)
        if (series[static_cast<size_t>(n)] != plethysm_scalar(sym_h(n), plane))
            return fail_result("hilbert.specialized-cauchy", "n=" + std::to_string(n));
    return pass_result("hilbert.specialized-cauchy");
}

CheckResult check_scala(int s) {
    ClassSpec spec{{ClassAtom{ClassAtom::Kind::wedge_taut, Partition::empty(), 1, VV}}};
    auto got = euler_char_series(spec, s);
    PlethAlphabet plane = alphabet_scalar([](long j) {
        return RatFunc::one() /
               ((RatFunc::one() - RatFunc::monomial(VQ, j)) *
                (RatFunc::one() - RatFunc::monomial(VT, j)));
    });
    for (int n = 0; n <= s; ++n) {
        auto by_v = series_coefficients(got[static_cast<size_t>(n)], VV, n);
        for (int k = 0; k <= n; ++k) {
            RatFunc expect = plethysm_scalar(sym_h(n - k), plane) *
                             plethysm_scalar(sym_e(k), plane);
            if (k % 2 == 1) expect = -expect;
            if (by_v[static_cast<size_t>(k)] != expect)
                return fail_result("hilbert.scala",
                                   "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return pass_result("hilbert.scala");
}

std::vector<std::pair<std::string, CheckFn>> suite_checks(const std::string& suite,
                                                          const VerifyOptions& opt) {
    const int s = opt.max_size;
    const int D = opt.trunc;
    std::vector<std::pair<std::string, CheckFn>> out;
    auto add = [&](const char* which, CheckFn fn) { out.push_back({which, std::move(fn)}); };
    if (suite == "plethysm" || suite == "all") {
        add("plethysm", [s] { return check_basis_roundtrip(s); });
        add("plethysm", [s] { return check_plethysm_identity(s); });
        add("plethysm", [s] { return check_plethysm_multiplicative(s); });
        add("plethysm", [s] { return check_qt_star_relation(s); });
        add("plethysm", [s] { return check_omega_b(s); });
        add("plethysm", [s] { return check_cauchy_pq(s); });
    }
    if (suite == "macdonald" || suite == "all") {
        add("macdonald", [s] { return check_characterization(s); });
        add("macdonald", [s] { return check_omega_h(s); });
        add("macdonald", [s] { return check_transpose(s); });
        add("macdonald", [s] { return check_hinner(s); });
        add("macdonald", [s] { return check_cauchy_modified(s); });
        add("macdonald", [s] { return check_nabla_selfadjoint(s); });
        add("macdonald", [s] { return check_positivity(s); });
        add("macdonald", [s] { return check_principal(s); });
    }
    if (suite == "specialization" || suite == "all") {
        for (auto [k, N] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 2}})
            add("specialization", [k = k, N = N, s] { return check_lemma_audit(k, N, s); });
        add("specialization", [s] { return check_trunc(s); });
        add("specialization", [s] { return check_lemma_cut(s); });
    }
    if (suite == "snorm" || suite == "all") {
        add("snorm", [s] { return check_unknot(s); });
        add("snorm", [s] { return check_snorm_symmetry(s, 3); });
        add("snorm", [s] { return check_stability(s); });
        add("snorm", [s] { return check_hopf_vanishing(s); });
        add("snorm", [s] { return check_tnorm_trunc(s); });
    }
    if (suite == "hilbert" || suite == "all") {
        add("hilbert", [s, D] { return check_ght(s, D); });
        add("hilbert", [s, D] { return check_hilbhilb(s, D); });
        add("hilbert", [s, D] { return check_cor_empty(s, D); });
        add("hilbert", [s] { return check_lemma_symmetry_grid(s); });
        add("hilbert", [s] { return check_pairing_geom_grid(s); });
        add("hilbert", [s, D] { return check_main_kernel(s, D); });
        add("hilbert", [s] { return check_specialized_cauchy(s + 1); });
        add("hilbert", [s] { return check_scala(s); });
    }
    return out;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"plethysm", "macdonald", "specialization",
                                                   "snorm", "hilbert"};
    return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
    bool known = suite == "all";
    for (const auto& n : verify_suite_names()) known = known || n == suite;
    if (!known) throw error("unknown verify suite: " + suite);
    auto checks = suite_checks(suite, opt);
    std::vector<CheckResult> results(checks.size());
    auto run_one = [&](size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = checks[i].second();
        } catch (const std::exception& e) {
            r = fail_result(checks[i].first, std::string("exception: ") + e.what());
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results[i] = std::move(r);
    };
    if (opt.parallel) {
        std::vector<std::future<void>> futs;
        futs.reserve(checks.size());
        for (size_t i = 0; i < checks.size(); ++i)
            futs.push_back(std::async(std::launch::async, run_one, i));
        for (auto& f : futs) f.get();
    } else {
        for (size_t i = 0; i < checks.size(); ++i) run_one(i);
    }
    return results;
}

} // namespace macref
