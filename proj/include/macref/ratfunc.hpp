#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macref/poly.hpp"

namespace macref {

// Reduced fraction of sparse Laurent polynomials. Canonical form: the
// denominator is a true polynomial (nonnegative exponents, no monomial
// content) and monic in deg-lex order; the numerator carries the Laurent /
// fractional monomial prefactor; numerator and denominator are coprime.
// Equality of canonical forms is plain structural comparison and agrees
// with cross-multiplication.
template <class C>
class Frac {
public:
    Frac() : num_(Poly<C>::zero()), den_(Poly<C>::one()) {}
    Frac(long n) : Frac(Poly<C>::constant(C(n)), Poly<C>::one()) {}
    Frac(const C& c) : Frac(Poly<C>::constant(c), Poly<C>::one()) {}
    Frac(const Poly<C>& p) : Frac(p, Poly<C>::one()) {}

    Frac(Poly<C> num, Poly<C> den) { normalize(std::move(num), std::move(den)); }

    template <class C2>
    explicit Frac(const Frac<C2>& o) {
        num_ = convert_poly(o.num());
        den_ = convert_poly(o.den());
    }

    static Frac zero() { return Frac(); }
    static Frac one() { return Frac(1); }
    static Frac variable(int var) { return Frac(Poly<C>::variable(var)); }
    // x_var^(num/den)
    static Frac monomial(int var, long e_num, long e_den = 1, C c = C(1)) {
        if (e_den < 0) {
            e_den = -e_den;
            e_num = -e_num;
        }
        return Frac(Poly<C>::monomial(var, e_num, e_den, std::move(c)));
    }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly<C>::one() && num_ == Poly<C>::one(); }
    bool is_polynomial() const { return den_ == Poly<C>::one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    C constant_value() const {
        if (!is_constant()) throw error("rational function is not constant");
        if (num_.is_zero()) return C(0);
        return num_.constant_value() / den_.constant_value();
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    Frac operator-() const {
        Frac r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
        Poly<C> g = poly_gcd(a.den_, b.den_);
        if (g.is_constant()) {
            return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        }
        Poly<C> da = divide_exact(a.den_, g);
        Poly<C> db = divide_exact(b.den_, g);
        return Frac(a.num_ * db + b.num_ * da, a.den_ * db);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

    friend Frac operator*(const Frac& a, const Frac& b) {
        if (a.is_zero() || b.is_zero()) return Frac();
        // cross-reduce so no further gcd is required on the product
        auto [pa, na] = strip_prefactor(a.num_);
        auto [pb, nb] = strip_prefactor(b.num_);
        Poly<C> g1 = poly_gcd(na, b.den_);
        Poly<C> g2 = poly_gcd(nb, a.den_);
        Poly<C> n1 = g1.is_constant() ? na : divide_exact(na, g1);
        Poly<C> d2 = g1.is_constant() ? b.den_ : divide_exact(b.den_, g1);
        Poly<C> n2 = g2.is_constant() ? nb : divide_exact(nb, g2);
        Poly<C> d1 = g2.is_constant() ? a.den_ : divide_exact(a.den_, g2);
        const int32_t pl = std::lcm(pa.second, pb.second);
        Mono pm;
        for (int i = 0; i < NVARS; ++i)
            pm[i] = pa.first[i] * (pl / pa.second) + pb.first[i] * (pl / pb.second);
        Frac r;
        r.assign_reduced(apply_prefactor(n1 * n2, pm, pl), d1 * d2);
        return r;
    }

    Frac inverse() const {
        if (is_zero()) throw zero_denominator_error("inverse of zero rational function");
        Frac r;
        r.assign_reduced(den_, num_);
        return r;
    }

    friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }

    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    Frac pow(long k) const {
        if (k == 0) return one();
        if (k < 0) return inverse().pow(-k);
        Frac r;
        r.assign_reduced(num_.pow(static_cast<unsigned long>(k)),
                         den_.pow(static_cast<unsigned long>(k)));
        return r;
    }

    // multiply by a scalar of the coefficient field (keeps canonical form)
    Frac scaled(const C& k) const {
        if (macref::is_zero(k)) return zero();
        Frac r;
        r.num_ = num_.scaled(k);
        r.den_ = den_;
        return r;
    }

    // Adams operation: all variable exponents ×k (a ring homomorphism).
    Frac adams(long k) const {
        if (k == 1) return *this;
        Frac r;
        Poly<C> n = num_.adams(k), d = den_.adams(k);
        if (k < 0)
            r.normalize(std::move(n), std::move(d));
        else
            r.assign_reduced(std::move(n), std::move(d));
        return r;
    }

    std::string to_string() const {
        if (is_polynomial()) return poly_to_string(num_);
        std::string n = poly_to_string(num_);
        std::string d = poly_to_string(den_);
        bool nw = num_.size() > 1;
        bool dw = den_.size() > 1;
        return (nw ? "(" + n + ")" : n) + "/" + (dw ? "(" + d + ")" : d);
    }

    // numerator split as monomial prefactor (exponents, eden) × unit-content poly
    static std::pair<std::pair<Mono, int32_t>, Poly<C>> strip_prefactor(const Poly<C>& p) {
        Mono mn = p.min_exponents();
        Poly<C> core = p.shifted(mono_sub(mono_zero(), mn));
        return {{mn, p.eden()}, std::move(core)};
    }

    static Poly<C> apply_prefactor(Poly<C> p, const Mono& pre, int32_t pre_eden) {
        int32_t d = std::lcm(p.eden(), pre_eden);
        p.rescale_to(d);
        Mono scaled;
        for (int i = 0; i < NVARS; ++i)
            scaled[i] = pre[i] * (d / pre_eden);
        return p.shifted(scaled);
    }

private:
    template <class C2>
    static Poly<C> convert_poly(const Poly<C2>& p) {
        std::vector<typename Poly<C>::Term> ts;
        ts.reserve(p.size());
        for (const auto& [m, c] : p.terms()) ts.push_back({m, C(c)});
        return Poly<C>::from_terms(p.eden(), std::move(ts));
    }

    // full canonicalization
    void normalize(Poly<C> num, Poly<C> den) {
        if (den.is_zero()) throw zero_denominator_error();
        if (num.is_zero()) {
            num_ = Poly<C>::zero();
            den_ = Poly<C>::one();
            return;
        }
        auto [n, d] = Poly<C>::on_common_grid(num, den);
        const int32_t grid = n.eden();
        Mono mn = n.min_exponents(), md = d.min_exponents();
        Mono pre = mono_sub(mn, md);
        Poly<C> ns = n.shifted(mono_sub(mono_zero(), mn));
        Poly<C> ds = d.shifted(mono_sub(mono_zero(), md));
        if (!ns.is_constant() && !ds.is_constant()) {
            Poly<C> g = poly_gcd(ns, ds);
            if (!g.is_constant()) {
                ns = divide_exact(ns, g);
                ds = divide_exact(ds, g);
            }
        }
        const C lc = ds.leading().second;
        if (!macref::is_one(lc)) {
            C inv = C(1) / lc;
            ns = ns.scaled(inv);
            ds = ds.scaled(inv);
        }
        num_ = apply_prefactor(std::move(ns), pre, grid);
        den_ = std::move(ds);
    }

    // inputs already coprime; only monomial content / monic fix-ups needed
    void assign_reduced(Poly<C> num, Poly<C> den) {
        if (den.is_zero()) throw zero_denominator_error();
        if (num.is_zero()) {
            num_ = Poly<C>::zero();
            den_ = Poly<C>::one();
            return;
        }
        Mono md = den.min_exponents();
        if (!mono_is_zero(md)) {
            Poly<C> ds = den.shifted(mono_sub(mono_zero(), md));
            num = apply_prefactor(std::move(num), mono_sub(mono_zero(), md), den.eden());
            den = std::move(ds);
        }
        const C lc = den.leading().second;
        if (!macref::is_one(lc)) {
            C inv = C(1) / lc;
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    Poly<C> num_, den_;
};

using RatFunc = Frac<Rat>;
using CycFunc = Frac<Cyc>;

template <class C>
bool poly_equal(const Poly<C>& a, const Poly<C>& b) {
    if (a.eden() == b.eden()) return a == b;
    auto [x, y] = Poly<C>::on_common_grid(a, b);
    return x == y;
}

// a/b == c/d by cross multiplication (no normalization needed).
template <class C>
bool cross_equal(const Frac<C>& a, const Frac<C>& b) {
    return poly_equal(a.num() * b.den(), b.num() * a.den());
}

// ---- substitution ----

// Decompose a coefficient as (positive-rational scale) × ζ_L^j when possible.
inline std::optional<std::pair<Rat, std::pair<int, long>>> coeff_as_scaled_root(const Rat& c) {
    if (is_zero(c)) return std::nullopt;
    if (sgn(c) > 0) return std::make_pair(c, std::make_pair(1, 0L));
    return std::make_pair(-c, std::make_pair(2, 1L));
}

inline std::optional<std::pair<Rat, std::pair<int, long>>> coeff_as_scaled_root(const Cyc& c) {
    if (c.is_zero()) return std::nullopt;
    if (c.is_rational()) return coeff_as_scaled_root(c.rational_value());
    const int L = c.conductor();
    for (long j = 0; j < L; ++j) {
        Cyc q = c / Cyc::root_of_unity(L, j);
        if (q.is_rational() && sgn(q.rational_value()) > 0)
            return std::make_pair(q.rational_value(), std::make_pair(L, j));
    }
    return std::nullopt;
}

template <class C>
C root_power(int L, long j);

template <>
inline Rat root_power<Rat>(int L, long j) {
    long r = ((j % L) + L) % L;
    if (r == 0) return Rat(1);
    if (2 * r == L) return Rat(-1);
    throw incompatible_exponents_error("non-rational root of unity in rational substitution");
}

template <>
inline Cyc root_power<Cyc>(int L, long j) {
    return Cyc::root_of_unity(L, j);
}

namespace detail {

// 64-bit exact fraction accumulator for composed exponents.
struct ExpFrac {
    int64_t n = 0;
    int64_t d = 1;
    void add(int64_t an, int64_t ad) {
        int64_t l = std::lcm(d, ad);
        n = n * (l / d) + an * (l / ad);
        d = l;
        int64_t g = std::gcd(std::abs(n), d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
};

} // namespace detail

// Image of a polynomial under var ↦ target. Targets that are single
// monomials compose exponents exactly (fractional exponents allowed when the
// coefficient is a scaled root of unity of compatible order); general
// targets require integral exponents.
template <class C>
Frac<C> substitute_poly(const Poly<C>& p, const std::map<int, Frac<C>>& sigma) {
    struct MonoTarget {
        detail::ExpFrac e[NVARS];
        Rat scale;
        int L;
        long rootpow;
    };
    std::map<int, MonoTarget> mono_targets;
    std::map<int, const Frac<C>*> general_targets;
    for (const auto& [var, tgt] : sigma) {
        if (tgt.is_polynomial() && tgt.num().is_monomial()) {
            const auto& [m, c] = tgt.num().leading();
            auto sr = coeff_as_scaled_root(c);
            if (sr) {
                MonoTarget mt;
                for (int i = 0; i < NVARS; ++i) {
                    mt.e[i].n = m[i];
                    mt.e[i].d = tgt.num().eden();
                    int64_t g = std::gcd(std::abs(mt.e[i].n), mt.e[i].d);
                    mt.e[i].n /= g;
                    mt.e[i].d /= g;
                }
                mt.scale = sr->first;
                mt.L = sr->second.first;
                mt.rootpow = sr->second.second;
                mono_targets.emplace(var, std::move(mt));
                continue;
            }
        }
        general_targets.emplace(var, &tgt);
    }

    Frac<C> out = Frac<C>::zero();
    int64_t fast_eden = 1;

    // pure-monomial substitutions: exponents compose exactly
    if (general_targets.empty()) {
        // determine the lcm of all result exponent denominators
        std::vector<std::pair<Mono, C>> staged;
        staged.reserve(p.size());
        for (const auto& [m, c] : p.terms()) {
            detail::ExpFrac acc[NVARS];
            C coef = c;
            for (int i = 0; i < NVARS; ++i) {
                if (m[i] == 0) continue;
                auto it = mono_targets.find(i);
                if (it == mono_targets.end()) {
                    acc[i].add(m[i], p.eden());
                    continue;
                }
                const MonoTarget& mt = it->second;
                // exponent of source var: m[i]/eden
                int64_t en = m[i], ed = p.eden();
                int64_t g = std::gcd(std::abs(en), ed);
                en /= g;
                ed /= g;
                for (int j = 0; j < NVARS; ++j) {
                    if (mt.e[j].n == 0) continue;
                    // add (en/ed)·(mt.e[j])
                    int64_t nn = en * mt.e[j].n;
                    int64_t nd = ed * mt.e[j].d;
                    int64_t gg = std::gcd(std::abs(nn), nd);
                    acc[j].add(nn / gg, nd / gg);
                }
                // coefficient: scale^(en/ed) · ζ_L^(rootpow·en/ed)
                if (!is_one(mt.scale)) {
                    if (ed != 1)
                        throw incompatible_exponents_error(
                            "fractional exponent applied to non-unit coefficient");
                    coef *= C(rat_pow(mt.scale, en));
                }
                if (mt.rootpow != 0) {
                    int64_t jn = mt.rootpow * en;
                    if (jn % ed != 0) {
                        // principal-branch root in the minimal larger conductor
                        int64_t f = ed / std::gcd(std::abs(jn), ed);
                        coef *= root_power<C>(static_cast<int>(mt.L * f),
                                              static_cast<long>(jn * f / ed));
                    } else {
                        coef *= root_power<C>(mt.L, static_cast<long>(jn / ed));
                    }
                }
            }
            // common denominator for this term
            int64_t lcm = 1;
            for (int i = 0; i < NVARS; ++i) lcm = std::lcm(lcm, acc[i].d);
            fast_eden = std::lcm(fast_eden, lcm);
            Mono nm;
            for (int i = 0; i < NVARS; ++i) nm[i] = 0;
            staged.push_back({nm, coef});
            // stash fractions; recompute below once fast_eden known
            // store numerators temporarily scaled later — keep acc via second pass
            // (recompute to avoid storing per-term fractions)
        }
        // second pass with final eden
        std::vector<typename Poly<C>::Term> ts;
        ts.reserve(p.size());
        size_t idx = 0;
        for (const auto& [m, c] : p.terms()) {
            detail::ExpFrac acc[NVARS];
            for (int i = 0; i < NVARS; ++i) {
                if (m[i] == 0) continue;
                auto it = mono_targets.find(i);
                if (it == mono_targets.end()) {
                    acc[i].add(m[i], p.eden());
                    continue;
                }
                const MonoTarget& mt = it->second;
                int64_t en = m[i], ed = p.eden();
                int64_t g = std::gcd(std::abs(en), ed);
                en /= g;
                ed /= g;
                for (int j = 0; j < NVARS; ++j) {
                    if (mt.e[j].n == 0) continue;
                    int64_t nn = en * mt.e[j].n;
                    int64_t nd = ed * mt.e[j].d;
                    int64_t gg = std::gcd(std::abs(nn), nd);
                    acc[j].add(nn / gg, nd / gg);
                }
            }
            Mono nm;
            for (int i = 0; i < NVARS; ++i) {
                if (fast_eden % acc[i].d != 0)
                    throw incompatible_exponents_error();
                nm[i] = static_cast<int32_t>(acc[i].n * (fast_eden / acc[i].d));
            }
            ts.push_back({nm, staged[idx++].second});
        }
        return Frac<C>(Poly<C>::from_terms(static_cast<int32_t>(fast_eden), std::move(ts)));
    }

    // general path: term-wise evaluation, integral exponents required for
    // general targets, monomial targets handled as above term by term
    for (const auto& [m, c] : p.terms()) {
        Frac<C> term = Frac<C>(c);
        Mono residual = mono_zero();
        int32_t reden = p.eden();
        for (int i = 0; i < NVARS; ++i) {
            if (m[i] == 0) continue;
            auto git = general_targets.find(i);
            auto mit = mono_targets.find(i);
            if (git == general_targets.end() && mit == mono_targets.end()) {
                residual[i] = m[i];
                continue;
            }
            if (git != general_targets.end()) {
                if (m[i] % reden != 0)
                    throw incompatible_exponents_error(
                        "fractional exponent on variable with non-monomial image");
                term *= git->second->pow(m[i] / reden);
            } else {
                // single-variable monomial power via a small poly substitute
                std::map<int, Frac<C>> single;
                single.emplace(i, sigma.at(i));
                Poly<C> mono = Poly<C>::monomial(i, m[i], reden, C(1));
                term *= substitute_poly(mono, single);
            }
        }
        if (!mono_is_zero(residual))
            term *= Frac<C>(Poly<C>::from_terms(reden, {{residual, C(1)}}));
        out += term;
    }
    return out;
}

// Ring-homomorphism substitution on a rational function. Throws
// DenominatorVanishes when the image of the denominator is zero.
template <class C>
Frac<C> substitute(const Frac<C>& r, const std::map<int, Frac<C>>& sigma) {
    Frac<C> n = substitute_poly(r.num(), sigma);
    Frac<C> d = substitute_poly(r.den(), sigma);
    if (d.is_zero()) throw denominator_vanishes_error();
    return n / d;
}

// Balanced summation: pairwise merging keeps intermediate denominators (and
// the gcds that reduce them) small in the telescoping sums this library
// produces; linear folds can be orders of magnitude slower.
template <class C>
Frac<C> frac_sum(std::vector<Frac<C>> terms) {
    if (terms.empty()) return Frac<C>::zero();
    while (terms.size() > 1) {
        std::vector<Frac<C>> next;
        next.reserve(terms.size() / 2 + 1);
        for (size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2) next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return std::move(terms[0]);
}

// ---- series expansion ----

// First D+1 Taylor coefficients of r in `var` about 0; exact. The
// coefficients are rational functions in the remaining variables.
template <class C>
std::vector<Frac<C>> series_coefficients(const Frac<C>& r, int var, int D) {
    if (r.is_zero()) return std::vector<Frac<C>>(static_cast<size_t>(D) + 1, Frac<C>::zero());
    auto split = [&](const Poly<C>& p) {
        std::map<int32_t, Poly<C>> by_pow;
        std::map<int32_t, std::vector<typename Poly<C>::Term>> raw;
        for (const auto& [m, c] : p.terms()) {
            if (m[var] % p.eden() != 0)
                throw not_series_expandable_error("fractional exponent in series variable");
            if (m[var] < 0) throw not_series_expandable_error("pole in series variable");
            Mono n = m;
            n[var] = 0;
            raw[m[var] / p.eden()].push_back({n, c});
        }
        for (auto& [k, ts] : raw) by_pow.emplace(k, Poly<C>::from_terms(p.eden(), std::move(ts)));
        return by_pow;
    };
    // numerator may carry a negative or fractional power of var in its prefactor
    auto nsplit = split(r.num());
    auto dsplit = split(r.den());
    // canonical den has unit content, so its var-degree-0 part is nonzero
    Frac<C> d0 = Frac<C>(dsplit.at(0));
    std::vector<Frac<C>> out;
    out.reserve(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        Frac<C> acc = Frac<C>::zero();
        auto nit = nsplit.find(n);
        if (nit != nsplit.end()) acc += Frac<C>(nit->second);
        for (int k = 1; k <= n; ++k) {
            auto dit = dsplit.find(k);
            if (dit == dsplit.end()) continue;
            acc -= Frac<C>(dit->second) * out[static_cast<size_t>(n - k)];
        }
        out.push_back(acc / d0);
    }
    return out;
}

} // namespace macref
