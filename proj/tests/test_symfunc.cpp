#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macref/symfunc.hpp"
#include "oracle_dense.hpp"

using namespace macref;

namespace {

RatFunc Q() { return RatFunc::variable(VQ); }
RatFunc T() { return RatFunc::variable(VT); }
RatFunc U() { return RatFunc::variable(VU); }

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

SymFunc random_symfunc(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-3, 3), pick(0, 4);
    SymFunc f(static_cast<Basis>(pick(rng)));
    for (int i = 0; i < 3; ++i) {
        auto parts = partitions_of(deg(rng));
        std::uniform_int_distribution<size_t> which(0, parts.size() - 1);
        int c = coef(rng);
        if (c == 0) c = 1;
        f += SymFunc::basis_element(f.basis(), parts[which(rng)], RatFunc(c));
    }
    return f;
}

} // namespace

TEST_CASE("conversions against the dense oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lam : partitions_of(n)) {
            // library expansions in n variables vs direct dense constructions
            auto check = [&](const SymFunc& f, const oracle::Dense& expect) {
                auto got = expand_in_variables(f, n);
                REQUIRE(got.size() == expect.size());
                for (const auto& [e, c] : expect) {
                    REQUIRE(got.count(e) == 1);
                    CHECK(got.at(e) == RatFunc(c));
                }
            };
            check(SymFunc::basis_element(Basis::monomial, lam), oracle::monomial_sym(lam, n));
            check(SymFunc::basis_element(Basis::powersum, lam),
                  oracle::product_over_parts(lam, n, oracle::power_sum));
            check(SymFunc::basis_element(Basis::elementary, lam),
                  oracle::product_over_parts(lam, n, oracle::elementary));
            check(SymFunc::basis_element(Basis::homogeneous, lam),
                  oracle::product_over_parts(lam, n, oracle::homogeneous));
            check(SymFunc::basis_element(Basis::schur, lam), oracle::schur_jt(lam, n));
        }
    }
}

TEST_CASE("basis round trips are the identity") {
    const Basis all[] = {Basis::monomial, Basis::elementary, Basis::homogeneous, Basis::powersum,
                         Basis::schur};
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lam : partitions_of(n)) {
            for (Basis from : all) {
                SymFunc f = SymFunc::basis_element(from, lam);
                for (Basis to : all) {
                    SymFunc g = f.converted(to).converted(from);
                    CHECK(g == f);
                }
            }
        }
    }
}

TEST_CASE("named conversion examples") {
    // s_{(1,1)} in the e-basis is e_2
    CHECK(sym_s(P({1, 1})).converted(Basis::elementary) ==
          SymFunc::basis_element(Basis::elementary, P({2})));
    // p_2 = s_2 − s_{(1,1)}
    SymFunc p2s = sym_p(2).converted(Basis::schur);
    CHECK(p2s.coefficient(P({2})) == RatFunc::one());
    CHECK(p2s.coefficient(P({1, 1})) == -RatFunc::one());
    // h_2 = (p_1^2 + p_2)/2
    SymFunc h2p = sym_h(2).converted(Basis::powersum);
    CHECK(h2p.coefficient(P({2})) == RatFunc(1) / RatFunc(2));
    CHECK(h2p.coefficient(P({1, 1})) == RatFunc(1) / RatFunc(2));
}

TEST_CASE("products: Pieri cases and unit") {
    SymFunc s1 = sym_s(P({1}));
    SymFunc out = s1 * s1;
    CHECK(out == sym_s(P({2})) + sym_s(P({1, 1})));
    CHECK(s1 * sym_s(P({1, 1})) == sym_s(P({2, 1})) + sym_s(P({1, 1, 1})));
    std::mt19937 rng(4242);
    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(rng, 4);
        CHECK(f * SymFunc::one(f.basis()) == f);
    }
    // schur structure constants at degree 3+2 stay nonnegative integers
    SymFunc prod = (sym_s(P({2, 1})) * sym_s(P({2}))).converted(Basis::schur);
    for (const auto& [p, c] : prod.terms()) {
        CHECK(c.is_constant());
        Rat v = c.constant_value();
        CHECK(v.get_den() == 1);
        CHECK(sgn(v) > 0);
    }
}

TEST_CASE("plethysm basics") {
    // p_k[X/(1−q)] = p_k/(1−q^k)
    PlethAlphabet x_over_1mq = alphabet_x_times(RatFunc::one() / (RatFunc::one() - Q()));
    for (long k = 1; k <= 4; ++k) {
        SymFunc img = plethysm_sym(sym_p(k), x_over_1mq);
        SymFunc expect = sym_p(k).scaled(RatFunc::one() / (RatFunc::one() - Q().pow(k)));
        CHECK(img == expect);
    }
    // f[qX] = q^deg f for homogeneous f
    std::mt19937 rng(55);
    for (int i = 0; i < 8; ++i) {
        auto parts = partitions_of(4);
        SymFunc f = sym_s(parts[static_cast<size_t>(i) % parts.size()]);
        SymFunc img = plethysm_sym(f, alphabet_x_times(Q()));
        CHECK(img == f.scaled(Q().pow(4)));
    }
    // f[−εX] = ω f
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(plethysm_sym(sym_s(lam), alphabet_minus_eps_x()) == omega(sym_s(lam)));
    // genuine alphabet is the identity
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(plethysm_sym(sym_s(lam), alphabet_x()) == sym_s(lam));
}

TEST_CASE("plethysm is multiplicative in f") {
    std::mt19937 rng(77);
    PlethAlphabet A = alphabet_x_times(RatFunc::one() / (RatFunc::one() - T()));
    for (int i = 0; i < 6; ++i) {
        SymFunc f = random_symfunc(rng, 3), g = random_symfunc(rng, 3);
        CHECK(plethysm_sym(f * g, A) == plethysm_sym(f, A) * plethysm_sym(g, A));
    }
    // scalar alphabets too
    PlethAlphabet B = alphabet_of(Q() + T() * T());
    for (int i = 0; i < 6; ++i) {
        SymFunc f = random_symfunc(rng, 3), g = random_symfunc(rng, 3);
        CHECK(plethysm_scalar(f * g, B) == plethysm_scalar(f, B) * plethysm_scalar(g, B));
    }
}

TEST_CASE("omega involutions") {
    for (long n = 1; n <= 5; ++n) CHECK(omega(sym_e(n)) == sym_h(n));
    CHECK(omega(sym_s(P({2, 1}))) == sym_s(P({2, 1})));
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(omega(sym_s(lam)) == sym_s(lam.transpose()));
    // ω_{q,t} p_1 = (1−q)/(1−t) p_1
    SymFunc w = omega_qt(sym_p(1));
    CHECK(w == sym_p(1).scaled((RatFunc::one() - Q()) / (RatFunc::one() - T())));
    // ω_{q,t} f = ω f[(1−q)/(1−t) X]
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : partitions_of(n)) {
            SymFunc lhs = omega_qt(sym_s(lam));
            SymFunc rhs = omega(plethysm_scale_x(sym_s(lam), (RatFunc::one() - Q()) / (RatFunc::one() - T())));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("inner products") {
    CHECK(inner_product(sym_s(P({2})), sym_s(P({2})), InnerKind::hall) == RatFunc::one());
    CHECK(inner_product(sym_s(P({2})), sym_s(P({1, 1})), InnerKind::hall).is_zero());
    // ⟨p_λ, p_λ⟩ = z_λ
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(inner_product(sym_p(lam), sym_p(lam), InnerKind::hall) ==
                  RatFunc::one().scaled(z_lambda(lam)));
    // star product agrees with its definition ⟨f, ω g[(1−q)(1−t)X]⟩
    RatFunc mqmt = (RatFunc::one() - Q()) * (RatFunc::one() - T());
    for (int n = 1; n <= 4; ++n)
        for (const auto& f : partitions_of(n))
            for (const auto& g : partitions_of(n)) {
                RatFunc lhs = inner_product(sym_s(f), sym_s(g), InnerKind::star);
                RatFunc rhs = inner_product(sym_s(f), omega(plethysm_scale_x(sym_s(g), mqmt)),
                                            InnerKind::hall);
                CHECK(lhs == rhs);
            }
    // Hall pairing of dual bases: ⟨h_λ, m_μ⟩ = δ
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                RatFunc v = inner_product(SymFunc::basis_element(Basis::homogeneous, a),
                                          SymFunc::basis_element(Basis::monomial, b), InnerKind::hall);
                CHECK(v == (a == b ? RatFunc::one() : RatFunc::zero()));
            }
}

TEST_CASE("the q,t-inner-product relation to star") {
    // ⟨f, g⟩_{q,t} = ⟨f[X/(1−t)], ω g[X/(1−t)]⟩_*
    RatFunc inv1mt = RatFunc::one() / (RatFunc::one() - T());
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                RatFunc lhs = inner_product(sym_s(a), sym_s(b), InnerKind::qt);
                RatFunc rhs = inner_product(plethysm_scale_x(sym_s(a), inv1mt),
                                            omega(plethysm_scale_x(sym_s(b), inv1mt)), InnerKind::star);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("omega series") {
    // Ω[u·B_{(1)}] truncated at degree 1 in u is 1 + u (B_{(1)} = 1)
    PlethAlphabet uB1 = alphabet_of(U());
    RatFunc s1 = std::get<RatFunc>(omega_series(uB1, 1));
    CHECK(s1 == RatFunc::one() + U());
    // multiplicativity Ω[A+B] = Ω[A]·Ω[B] up to u-degree 4
    PlethAlphabet A = alphabet_of(U() * Q());
    PlethAlphabet B = alphabet_of(U() * T());
    RatFunc both = std::get<RatFunc>(omega_series(alphabet_sum(A, B), 4));
    RatFunc prodAB = std::get<RatFunc>(omega_series(A, 4)) * std::get<RatFunc>(omega_series(B, 4));
    auto cb = series_coefficients(both, VU, 4);
    auto cp = series_coefficients(prodAB, VU, 4);
    for (int k = 0; k <= 4; ++k) CHECK(cb[static_cast<size_t>(k)] == cp[static_cast<size_t>(k)]);
}

TEST_CASE("omega closed form and the box-product identity") {
    // Ω[uB_λ]^{-1} = ∏_{s∈λ} (1 − u q^{a'} t^{l'}) for all |λ| ≤ 6
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lam : partitions_of(n)) {
            Poly<Rat> uB = box_poly(lam) * Poly<Rat>::variable(VU).pow(1);
            RatFunc lhs = omega_closed(uB).inverse();
            RatFunc prod = RatFunc::one();
            for (auto [c, r] : lam.boxes()) {
                RatFunc mono = RatFunc::monomial(VU, 1) * RatFunc::monomial(VQ, c) *
                               RatFunc::monomial(VT, r);
                prod *= RatFunc::one() - mono;
            }
            CHECK(lhs == prod);
            // Ω[−uB_λ] is the same finite product (h_k[−uB] vanishes past |λ|)
            RatFunc neg_form = RatFunc::one();
            {
                PlethAlphabet negUB = alphabet_of(-(RatFunc(uB)));
                SymVal v = omega_series(negUB, n, false);
                neg_form = std::get<RatFunc>(v);
            }
            CHECK(neg_form == prod);
            // series agreement of Ω[uB] with the closed form
            PlethAlphabet alf = alphabet_of(RatFunc(uB));
            RatFunc series = std::get<RatFunc>(omega_series(alf, n + 2));
            auto ca = series_coefficients(series, VU, n + 2);
            auto cbx = series_coefficients(omega_closed(uB), VU, n + 2);
            for (int k = 0; k <= n + 2; ++k) CHECK(ca[static_cast<size_t>(k)] == cbx[static_cast<size_t>(k)]);
        }
    }
}

TEST_CASE("expand in modified schur basis") {
    // s_1 = (1/(1−t))·s_1[(1−t)X]
    auto m = expand_in_modified_schur(sym_s(P({1})), VT);
    REQUIRE(m.size() == 1);
    CHECK(m.at(P({1})) == RatFunc::one() / (RatFunc::one() - T()));
    // integrality certificate: f = s_1[X/(1−t)] has X-coefficient 1/(1−t)^2,
    // and f[(1−t)X] = s_1 is integral
    SymFunc f = plethysm_scale_x(sym_s(P({1})), RatFunc::one() / (RatFunc::one() - T()));
    auto mf = expand_in_modified_schur(f, VT);
    REQUIRE(mf.size() == 1);
    CHECK(mf.at(P({1})) == (RatFunc::one() / (RatFunc::one() - T())).pow(2));
    SymFunc back = plethysm_scale_x(f, RatFunc::one() - T());
    CHECK(back == sym_s(P({1})));
    // b_{(1,1)}(t) = (1−t)(1−t^2)
    CHECK(b_lambda(P({1, 1}), VT) ==
          (RatFunc::one() - T()) * (RatFunc::one() - T().pow(2)));
}

TEST_CASE("two-alphabet Cauchy kernels for Schur functions") {
    // Ω[XY] degree d = Σ_{|λ|=d} s_λ(X) s_λ(Y)
    PlethAlphabet unit = alphabet_scalar([](long) { return RatFunc::one(); });
    for (int d = 0; d <= 4; ++d) {
        SymFunc2 lhs = omega_kernel2(unit, d).converted(Basis::schur, Basis::schur);
        SymFunc2 rhs(Basis::schur, Basis::schur);
        for (const auto& lam : partitions_of(d)) rhs += SymFunc2::outer(sym_s(lam), sym_s(lam));
        CHECK(lhs == rhs);
        // Ω̃[XY] degree d = Σ s_λ(X) s_{λ^t}(Y)
        SymFunc2 lt = omega_kernel2(unit, d, true).converted(Basis::schur, Basis::schur);
        SymFunc2 rt(Basis::schur, Basis::schur);
        for (const auto& lam : partitions_of(d))
            rt += SymFunc2::outer(sym_s(lam), sym_s(lam.transpose()));
        CHECK(lt == rt);
    }
}
