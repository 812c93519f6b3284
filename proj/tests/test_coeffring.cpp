#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macref/cyclotomic.hpp"
#include "macref/ratfunc.hpp"
#include "macref/ratfunc_json.hpp"

using namespace macref;

namespace {

RatFunc Q() { return RatFunc::variable(VQ); }
RatFunc T() { return RatFunc::variable(VT); }
RatFunc U() { return RatFunc::variable(VU); }
RatFunc V() { return RatFunc::variable(VV); }

// small random Laurent polynomials for property tests
Poly<Rat> random_poly(std::mt19937& rng, bool laurent = false) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(laurent ? -2 : 0, 3), coef(-3, 3);
    std::vector<Poly<Rat>::Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Mono m = mono_zero();
        m[VQ] = expo(rng);
        m[VT] = expo(rng);
        int c = coef(rng);
        ts.push_back({m, Rat(c == 0 ? 1 : c)});
    }
    return Poly<Rat>::from_terms(1, std::move(ts));
}

RatFunc random_frac(std::mt19937& rng) {
    Poly<Rat> num = random_poly(rng, true);
    Poly<Rat> den = random_poly(rng);
    while (den.is_zero()) den = random_poly(rng);
    return RatFunc(num, den);
}

} // namespace

TEST_CASE("cyclotomic arithmetic") {
    Cyc i = Cyc::root_of_unity(4, 1);
    CHECK(i * i == Cyc(Rat(-1)));
    CHECK((i * i).is_rational());
    Cyc w = Cyc::root_of_unity(3, 1);
    CHECK(w * w + w + Cyc(1) == Cyc(Rat(0)));
    CHECK(w.inverse() * w == Cyc(1));
    // conductor merge: ζ_6^3 = −1 = ζ_2
    CHECK(Cyc::root_of_unity(6, 3) == Cyc::root_of_unity(2, 1));
    // inverse in a nontrivial field
    Cyc z8 = Cyc::root_of_unity(8, 1);
    Cyc x = z8 + Cyc(2);
    CHECK(x * x.inverse() == Cyc(1));
    CHECK(Cyc::root_of_unity(5, 5) == Cyc(1));
}

TEST_CASE("normalize: common factor q") {
    // (q^2 − q t)/q → q − t
    RatFunc r(Q().num() * Q().num() - Q().num() * T().num(), Q().num());
    CHECK(r == Q() - T());
    CHECK(r.is_polynomial());
}

TEST_CASE("normalize: geometric factor") {
    // (1 − q^2)/(1 − q) → 1 + q
    RatFunc r((RatFunc::one() - Q() * Q()).num(), (RatFunc::one() - Q()).num());
    CHECK(r == RatFunc::one() + Q());
}

TEST_CASE("normalize: zero denominator") {
    CHECK_THROWS_AS(RatFunc(Poly<Rat>::zero(), Poly<Rat>::zero()), zero_denominator_error);
    CHECK_THROWS_AS(RatFunc::one() / RatFunc::zero(), zero_denominator_error);
}

TEST_CASE("normalize canonical: den monic, coprime, Laurent prefactor") {
    // (2q^2 t^{-1})/(4 − 4q) → den normalized to monic, gcd cleared
    Poly<Rat> num = Poly<Rat>::monomial(VQ, 2, 1, Rat(2)) *
                    Poly<Rat>::monomial(VT, -1, 1, Rat(1));
    Poly<Rat> den = Poly<Rat>::constant(Rat(4)) - Poly<Rat>::monomial(VQ, 1, 1, Rat(4));
    RatFunc r(num, den);
    CHECK(r.den().leading().second == Rat(1));
    RatFunc same = RatFunc(Poly<Rat>::monomial(VQ, 2, 1, Rat(1)) *
                               Poly<Rat>::monomial(VT, -1, 1, Rat(1)),
                           Poly<Rat>::constant(Rat(2)) - Poly<Rat>::monomial(VQ, 1, 1, Rat(2)));
    CHECK(r == same);
}

TEST_CASE("normalize agrees with cross-multiplication on random inputs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 120; ++trial) {
        RatFunc a = random_frac(rng);
        Poly<Rat> b = random_poly(rng);
        if (b.is_zero()) continue;
        // a·b / b == a  (normalize respects equality)
        RatFunc prod(a.num() * b, a.den() * b);
        CHECK(prod == a);
        CHECK(cross_equal(prod, a));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc a = random_frac(rng), b = random_frac(rng), c = random_frac(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("substitute: q t ↦ 1 kills 1 − q t") {
    std::map<int, RatFunc> sigma{{VQ, V()}, {VT, V().pow(-1)}};
    RatFunc r = RatFunc::one() - Q() * T();
    CHECK(substitute(r, sigma).is_zero());
    RatFunc s = RatFunc::one() / (RatFunc::one() - Q() * T());
    CHECK_THROWS_AS(substitute(s, sigma), denominator_vanishes_error);
}

TEST_CASE("substitute: fractional exponent composition") {
    // t^{1/2} with t ↦ v^{-2} gives v^{-1}
    RatFunc r = RatFunc::monomial(VT, 1, 2);
    std::map<int, RatFunc> sigma{{VT, RatFunc::monomial(VV, -2)}};
    CHECK(substitute(r, sigma) == RatFunc::monomial(VV, -1));
}

TEST_CASE("substitute: incompatible fractional exponent") {
    RatFunc r = RatFunc::monomial(VT, 1, 2);
    std::map<int, RatFunc> sigma{{VT, RatFunc::one() + V()}};
    CHECK_THROWS_AS(substitute(r, sigma), incompatible_exponents_error);
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937 rng(13579);
    std::map<int, RatFunc> sigma{{VQ, RatFunc::one() + V()}, {VT, V().pow(2) - RatFunc(3)}};
    for (int trial = 0; trial < 40; ++trial) {
        Poly<Rat> pa = random_poly(rng), pb = random_poly(rng);
        RatFunc a{pa}, b{pb};
        CHECK(substitute(a * b, sigma) == substitute(a, sigma) * substitute(b, sigma));
        CHECK(substitute(a + b, sigma) == substitute(a, sigma) + substitute(b, sigma));
    }
}

TEST_CASE("substitute with negative-power monomial target on negative exponents") {
    // q^{-2} with q ↦ v^{-1} → v^2
    RatFunc r = RatFunc::monomial(VQ, -2);
    std::map<int, RatFunc> sigma{{VQ, V().pow(-1)}};
    CHECK(substitute(r, sigma) == V().pow(2));
}

TEST_CASE("series: geometric") {
    RatFunc r = RatFunc::one() / (RatFunc::one() - U());
    auto cs = series_coefficients(r, VU, 3);
    REQUIRE(cs.size() == 4);
    for (auto& c : cs) CHECK(c == RatFunc::one());
}

TEST_CASE("series: cancelling product") {
    RatFunc r = (RatFunc::one() - U()) * (RatFunc::one() / (RatFunc::one() - U()));
    auto cs = series_coefficients(r, VU, 2);
    CHECK(cs[0] == RatFunc::one());
    CHECK(cs[1].is_zero());
    CHECK(cs[2].is_zero());
}

TEST_CASE("series: pole at u = 0") {
    RatFunc r = RatFunc::one() / U();
    CHECK_THROWS_AS(series_coefficients(r, VU, 1), not_series_expandable_error);
}

TEST_CASE("series of a product is the Cauchy convolution") {
    std::mt19937 rng(24680);
    for (int trial = 0; trial < 25; ++trial) {
        // build series-expandable fractions: den with nonzero constant term
        auto mk = [&]() {
            Poly<Rat> den = Poly<Rat>::one();
            Poly<Rat> num = Poly<Rat>::zero();
            std::uniform_int_distribution<int> e(0, 2), c(-2, 2);
            for (int i = 0; i < 3; ++i) {
                Mono m = mono_zero();
                m[VU] = e(rng);
                m[VQ] = e(rng);
                num = num + Poly<Rat>::from_terms(1, {{m, Rat(c(rng))}});
                Mono md = mono_zero();
                md[VU] = e(rng) + 1;
                den = den + Poly<Rat>::from_terms(1, {{md, Rat(c(rng))}});
            }
            return RatFunc(num, den);
        };
        RatFunc a = mk(), b = mk();
        const int D = 4;
        auto ca = series_coefficients(a, VU, D);
        auto cb = series_coefficients(b, VU, D);
        auto cab = series_coefficients(a * b, VU, D);
        for (int n = 0; n <= D; ++n) {
            RatFunc conv = RatFunc::zero();
            for (int k = 0; k <= n; ++k) conv += ca[size_t(k)] * cb[size_t(n - k)];
            CHECK(cab[size_t(n)] == conv);
        }
    }
}

TEST_CASE("gcd unit tests") {
    Poly<Rat> p = (RatFunc::one() - Q() * Q()).num();
    Poly<Rat> q = (RatFunc::one() - Q()).num();
    Poly<Rat> g = poly_gcd(p, q);
    // monic version of 1 − q is q − 1... leading coefficient normalized to 1
    CHECK(g.leading().second == Rat(1));
    CHECK(try_divide_exact(p, g).has_value());
    CHECK(try_divide_exact(q, g).has_value());
    CHECK(g.deg_in(VQ) == 1);

    // multivariate: gcd((1−qt)(1−q), (1−qt)(1−t)) = 1−qt up to sign
    Poly<Rat> qt = (RatFunc::one() - Q() * T()).num();
    Poly<Rat> a = qt * (RatFunc::one() - Q()).num();
    Poly<Rat> b = qt * (RatFunc::one() - T()).num();
    Poly<Rat> g2 = poly_gcd(a, b);
    CHECK(try_divide_exact(g2, qt).has_value());
    CHECK(try_divide_exact(qt, g2).has_value());
}

TEST_CASE("gcd with random cofactors") {
    std::mt19937 rng(55555);
    for (int trial = 0; trial < 40; ++trial) {
        Poly<Rat> g = random_poly(rng);
        Poly<Rat> a = random_poly(rng), b = random_poly(rng);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        Poly<Rat> ga = g * a, gb = g * b;
        Poly<Rat> d = poly_gcd(ga, gb);
        CHECK(try_divide_exact(ga, d).has_value());
        CHECK(try_divide_exact(gb, d).has_value());
        // g divides the gcd
        CHECK(try_divide_exact(d, poly_gcd(d, g)).has_value());
        CHECK(poly_equal(poly_gcd(d, g), make_monic(g)));
    }
}

TEST_CASE("adams operation is a ring homomorphism with fractional exponents") {
    RatFunc r = RatFunc::monomial(VT, 1, 2) + Q();
    RatFunc s = r.adams(3);
    CHECK(s == RatFunc::monomial(VT, 3, 2) + Q().pow(3));
    std::mt19937 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        RatFunc a = random_frac(rng), b = random_frac(rng);
        CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
        CHECK((a + b).adams(2) == a.adams(2) + b.adams(2));
    }
}

TEST_CASE("json round trip") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        RatFunc a = random_frac(rng) + RatFunc::monomial(VT, 1, 2);
        auto j = frac_to_json(a);
        RatFunc back = frac_from_json<Rat>(j);
        CHECK(back == a);
    }
    // cyclotomic coefficients
    CycFunc c = CycFunc(Cyc::root_of_unity(4, 1)) * CycFunc::variable(VV) + CycFunc(1);
    auto j = frac_to_json(c);
    CHECK(frac_from_json<Cyc>(j) == c);
}

TEST_CASE("to_string sanity") {
    // canonical form keeps the denominator monic in deg-lex order
    RatFunc r = (RatFunc::one() - Q()) / (RatFunc::one() - T());
    CHECK(r.to_string() == std::string("(q - 1)/(t - 1)"));
    CHECK(RatFunc::monomial(VT, 1, 2).to_string() == std::string("t^(1/2)"));
}
