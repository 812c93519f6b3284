#pragma once

#include <array>
#include <cstdint>
#include <type_traits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "macref/cyclotomic.hpp"
#include "macref/errors.hpp"
#include "macref/rational.hpp"

namespace macref {

// Variable slots of the coefficient ring: q, t, u, v and the deformation
// variable s used when measuring vanishing orders along q^k t^N = s^k.
inline constexpr int NVARS = 5;
inline constexpr int VQ = 0, VT = 1, VU = 2, VV = 3, VS = 4;
inline constexpr const char* VAR_NAMES[NVARS] = {"q", "t", "u", "v", "s"};

// Exponent numerators; the owning Poly carries the shared denominator.
using Mono = std::array<int32_t, NVARS>;

inline Mono mono_zero() { return Mono{0, 0, 0, 0, 0}; }

inline Mono mono_add(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < NVARS; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Mono mono_sub(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < NVARS; ++i) r[i] = a[i] - b[i];
    return r;
}

inline int64_t mono_degree(const Mono& m) {
    int64_t d = 0;
    for (int i = 0; i < NVARS; ++i) d += m[i];
    return d;
}

// Degree-lexicographic order in (q,t,u,v,s); fixes canonical leading terms.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int64_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        for (int i = 0; i < NVARS; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline bool mono_is_zero(const Mono& m) {
    for (int i = 0; i < NVARS; ++i)
        if (m[i] != 0) return false;
    return true;
}

// Sparse Laurent polynomial with exponents in (1/eden)·ℤ over a coefficient
// field C (Rat or Cyc). Terms are kept sorted in deg-lex order with no zero
// coefficients, and eden is minimal for the exponents present.
template <class C>
class Poly {
public:
    using Term = std::pair<Mono, C>;

    Poly() : eden_(1) {}

    static Poly zero() { return Poly(); }

    static Poly constant(C c) {
        Poly p;
        if (!macref::is_zero(c)) p.t_.push_back({mono_zero(), std::move(c)});
        return p;
    }

    static Poly one() { return constant(C(1)); }

    // c · x_var^(num/den)
    static Poly monomial(int var, long num, long den, C c = C(1)) {
        Poly p;
        if (macref::is_zero(c)) return p;
        if (den <= 0) throw error("exponent denominator must be positive");
        long g = std::gcd(std::abs(num), den);
        num /= g;
        den /= g;
        Mono m = mono_zero();
        m[var] = static_cast<int32_t>(num);
        p.eden_ = static_cast<int32_t>(den);
        p.t_.push_back({m, std::move(c)});
        return p;
    }

    static Poly variable(int var) { return monomial(var, 1, 1); }

    // Terms given on the eden grid; accumulates duplicates and normalizes.
    static Poly from_terms(int32_t eden, std::vector<Term> terms) {
        std::map<Mono, C, MonoLess> acc;
        for (auto& [m, c] : terms) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, std::move(c));
            else
                it->second += c;
        }
        Poly p;
        p.eden_ = eden;
        for (auto& [m, c] : acc)
            if (!macref::is_zero(c)) p.t_.push_back({m, std::move(c)});
        p.reduce_eden();
        return p;
    }

    int32_t eden() const { return eden_; }
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && mono_is_zero(t_[0].first)); }
    bool is_monomial() const { return t_.size() == 1; }

    C constant_value() const {
        if (t_.empty()) return C(0);
        if (!is_constant()) throw error("polynomial is not constant");
        return t_[0].second;
    }

    const Term& leading() const {
        if (t_.empty()) throw error("leading term of zero polynomial");
        return t_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.eden_ == b.eden_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        auto [x, y] = on_common_grid(a, b);
        Poly r;
        r.eden_ = x.eden_;
        r.t_.reserve(x.t_.size() + y.t_.size());
        MonoLess less;
        size_t i = 0, j = 0;
        while (i < x.t_.size() && j < y.t_.size()) {
            if (less(x.t_[i].first, y.t_[j].first)) {
                r.t_.push_back(std::move(x.t_[i++]));
            } else if (less(y.t_[j].first, x.t_[i].first)) {
                r.t_.push_back(std::move(y.t_[j++]));
            } else {
                C c = x.t_[i].second + y.t_[j].second;
                if (!macref::is_zero(c)) r.t_.push_back({x.t_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        for (; i < x.t_.size(); ++i) r.t_.push_back(std::move(x.t_[i]));
        for (; j < y.t_.size(); ++j) r.t_.push_back(std::move(y.t_[j]));
        r.reduce_eden();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        auto [x, y] = on_common_grid(a, b);
        std::map<Mono, C, MonoLess> acc;
        for (const auto& [ma, ca] : x.t_) {
            for (const auto& [mb, cb] : y.t_) {
                Mono m = mono_add(ma, mb);
                C c = ca * cb;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, std::move(c));
                else
                    it->second += c;
            }
        }
        Poly r;
        r.eden_ = x.eden_;
        for (auto& [m, c] : acc)
            if (!macref::is_zero(c)) r.t_.push_back({m, std::move(c)});
        r.reduce_eden();
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const C& c) const {
        if (macref::is_zero(c)) return Poly();
        Poly r = *this;
        for (auto& [m, k] : r.t_) k *= c;
        return r;
    }

    // Multiply by x^shift where shift is on this poly's eden grid.
    Poly shifted(const Mono& shift) const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) m = mono_add(m, shift);
        r.reduce_eden();
        return r;
    }

    Poly pow(unsigned long k) const {
        Poly acc = one();
        Poly base = *this;
        while (k) {
            if (k & 1) acc *= base;
            if (k >>= 1) base *= base;
        }
        return acc;
    }

    // Adams operation on the coefficient ring: every variable exponent ×k.
    Poly adams(long k) const {
        if (k == 1) return *this;
        Poly r;
        r.eden_ = eden_;
        r.t_.reserve(t_.size());
        for (const auto& [m, c] : t_) {
            Mono n;
            for (int i = 0; i < NVARS; ++i) n[i] = static_cast<int32_t>(m[i] * k);
            r.t_.push_back({n, c});
        }
        if (k < 0) std::reverse(r.t_.begin(), r.t_.end());
        std::sort(r.t_.begin(), r.t_.end(),
                  [](const Term& a, const Term& b) { return MonoLess{}(a.first, b.first); });
        r.reduce_eden();
        return r;
    }

    // Per-variable minimum exponent over all terms (numerators on eden grid).
    Mono min_exponents() const {
        Mono m = mono_zero();
        bool first = true;
        for (const auto& [mo, c] : t_) {
            for (int i = 0; i < NVARS; ++i) m[i] = first ? mo[i] : std::min(m[i], mo[i]);
            first = false;
        }
        return m;
    }

    int32_t deg_in(int var) const {
        int32_t d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m[var]);
        return d;
    }

    int32_t low_in(int var) const {
        if (t_.empty()) return 0;
        int32_t d = t_[0].first[var];
        for (const auto& [m, c] : t_) d = std::min(d, m[var]);
        return d;
    }

    bool depends_on(int var) const {
        for (const auto& [m, c] : t_)
            if (m[var] != 0) return true;
        return false;
    }

    void rescale_to(int32_t d) {
        if (d == eden_) return;
        if (d % eden_ != 0) throw error("rescale target not a multiple of eden");
        int32_t f = d / eden_;
        for (auto& [m, c] : t_)
            for (int i = 0; i < NVARS; ++i) m[i] *= f;
        eden_ = d;
    }

    void reduce_eden() {
        if (eden_ == 1) return;
        int64_t g = eden_;
        for (const auto& [m, c] : t_) {
            for (int i = 0; i < NVARS; ++i) g = std::gcd(g, static_cast<int64_t>(std::abs(m[i])));
            if (g == 1) return;
        }
        for (auto& [m, c] : t_)
            for (int i = 0; i < NVARS; ++i) m[i] = static_cast<int32_t>(m[i] / g);
        eden_ = static_cast<int32_t>(eden_ / g);
    }

    static std::pair<Poly, Poly> on_common_grid(const Poly& a, const Poly& b) {
        Poly x = a, y = b;
        int32_t d = std::lcm(x.eden_, y.eden_);
        x.rescale_to(d);
        y.rescale_to(d);
        return {std::move(x), std::move(y)};
    }

    // Reinterpret the exponent numerators on another grid without scaling
    // them (a formal variable change x ↦ x^(old/new)).
    static Poly on_grid(Poly p, int32_t eden) {
        p.eden_ = eden;
        p.reduce_eden();
        return p;
    }

private:
    int32_t eden_;
    std::vector<Term> t_;
};

// ---- exact division and gcd (integer-grid, nonnegative exponents) ----

// Single-divisor division in deg-lex order; succeeds iff b | a exactly.
template <class C>
std::optional<Poly<C>> try_divide_exact(const Poly<C>& a0, const Poly<C>& b0) {
    if (b0.is_zero()) return std::nullopt;
    if (a0.is_zero()) return Poly<C>::zero();
    auto [a, b] = Poly<C>::on_common_grid(a0, b0);
    {
        // quick filters: leading and trailing monomials must divide
        const Mono& la = a.leading().first;
        const Mono& lb = b.leading().first;
        const Mono& ta = a.terms().front().first;
        const Mono& tb = b.terms().front().first;
        for (int i = 0; i < NVARS; ++i)
            if (la[i] < lb[i] || ta[i] < tb[i]) return std::nullopt;
    }
    if (b.is_monomial()) {
        const auto& [mb, cb] = b.leading();
        C inv = C(1) / cb;
        std::vector<typename Poly<C>::Term> out;
        out.reserve(a.size());
        for (const auto& [m, c] : a.terms()) {
            Mono d = mono_sub(m, mb);
            for (int i = 0; i < NVARS; ++i)
                if (d[i] < 0) return std::nullopt;
            out.push_back({d, c * inv});
        }
        return Poly<C>::from_terms(a.eden(), std::move(out));
    }
    const auto& [lmb, lcb] = b.leading();
    std::vector<typename Poly<C>::Term> qt;
    Poly<C> rem = std::move(a);
    while (!rem.is_zero()) {
        const auto& [lma, lca] = rem.leading();
        Mono d = mono_sub(lma, lmb);
        for (int i = 0; i < NVARS; ++i)
            if (d[i] < 0) return std::nullopt;
        C c = lca / lcb;
        qt.push_back({d, c});
        Poly<C> piece = b.shifted(d).scaled(c);
        rem = rem - piece;
    }
    return Poly<C>::from_terms(b.eden(), std::move(qt));
}

template <class C>
Poly<C> divide_exact(const Poly<C>& a, const Poly<C>& b) {
    auto q = try_divide_exact(a, b);
    if (!q) throw error("inexact polynomial division");
    return *q;
}

template <class C>
Poly<C> make_monic(Poly<C> p) {
    if (p.is_zero()) return p;
    const C lc = p.leading().second;
    if (macref::is_one(lc)) return p;
    return p.scaled(C(1) / lc);
}

// scalar-content normalization: integer-primitive with positive leading
// coefficient over ℚ; monic over a cyclotomic field
inline void remove_scalar_content(Poly<Rat>& p) {
    if (p.is_zero()) return;
    mpz_class g(0), l(1);
    for (const auto& [m, c] : p.terms()) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rat content = Rat(g) / Rat(l);
    if (sgn(p.leading().second) < 0) content = -content;
    if (!is_one(content)) p = p.scaled(rat_inv(content));
}

inline void remove_scalar_content(Poly<Cyc>& p) {
    if (p.is_zero()) return;
    const Cyc lc = p.leading().second;
    if (!is_one(lc)) p = p.scaled(lc.inverse());
}

namespace detail {

template <class C>
int32_t vdeg(const Poly<C>& p, int v) {
    return p.deg_in(v);
}

// Coefficient of v^k (v-exponent zeroed out).
template <class C>
Poly<C> vcoeff(const Poly<C>& p, int v, int32_t k) {
    std::vector<typename Poly<C>::Term> out;
    for (const auto& [m, c] : p.terms()) {
        if (m[v] != k) continue;
        Mono n = m;
        n[v] = 0;
        out.push_back({n, c});
    }
    return Poly<C>::from_terms(p.eden(), std::move(out));
}

template <class C>
Poly<C> poly_gcd_inner(const Poly<C>& a, const Poly<C>& b);

template <class C>
Poly<C> vcontent(const Poly<C>& p, int v) {
    Poly<C> g = Poly<C>::zero();
    for (int32_t k = 0; k <= vdeg(p, v); ++k) {
        Poly<C> c = vcoeff(p, v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? make_monic(std::move(c)) : poly_gcd_inner(g, c);
        if (g.is_constant()) return Poly<C>::one();
    }
    return g.is_zero() ? Poly<C>::one() : g;
}

// Pseudo-remainder prem(a, b) in variable v: lc_v(b)^(δ+1)·a reduced mod b,
// with the power applied incrementally. All inputs live on the eden=1 grid.
template <class C>
Poly<C> pseudo_rem(const Poly<C>& a, const Poly<C>& b, int v) {
    const int32_t db = vdeg(b, v);
    const Poly<C> lb = vcoeff(b, v, db);
    Poly<C> r = a;
    int32_t delta = vdeg(a, v) - db;
    int32_t steps = 0;
    while (!r.is_zero() && vdeg(r, v) >= db) {
        const int32_t dr = vdeg(r, v);
        Poly<C> lr = vcoeff(r, v, dr);
        Mono s = mono_zero();
        s[v] = dr - db;
        r = lb * r - lr * b.shifted(s);
        ++steps;
    }
    for (int32_t i = steps; i <= delta; ++i) r = r * lb;
    return r;
}

template <class C>
Poly<C> primitive_part_v(const Poly<C>& p, int v) {
    Poly<C> cont = vcontent(p, v);
    Poly<C> out = cont.is_constant() ? p : divide_exact(p, cont);
    remove_scalar_content(out);
    return out;
}

// dense univariate gcd (primitive, positive leading coefficient)
inline std::vector<mpz_class> dense_gcd(std::vector<mpz_class> A, std::vector<mpz_class> B) {
    auto trim = [](std::vector<mpz_class>& p) {
        while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    };
    auto make_primitive = [&](std::vector<mpz_class>& p) {
        mpz_class g(0);
        for (const auto& c : p) g = gcd(g, c);
        if (!p.empty() && sgn(p.back()) < 0) g = -g;
        if (g != 0 && g != 1)
            for (auto& c : p) c /= g;
    };
    trim(A);
    trim(B);
    if (A.empty()) {
        make_primitive(B);
        return B;
    }
    if (B.empty()) {
        make_primitive(A);
        return A;
    }
    if (A.size() < B.size()) std::swap(A, B);
    make_primitive(A);
    make_primitive(B);
    while (true) {
        std::vector<mpz_class> R = A;
        const mpz_class lb = B.back();
        while (R.size() >= B.size()) {
            mpz_class lr = R.back();
            size_t shift = R.size() - B.size();
            for (auto& c : R) c *= lb;
            for (size_t i = 0; i < B.size(); ++i) R[shift + i] -= lr * B[i];
            trim(R);
            if (R.empty()) break;
        }
        if (R.empty()) return B;
        if (R.size() == 1) return {mpz_class(1)};
        make_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
}

inline int dense_gcd_degree(std::vector<mpz_class> A, std::vector<mpz_class> B) {
    auto g = dense_gcd(std::move(A), std::move(B));
    return g.empty() ? 0 : static_cast<int>(g.size()) - 1;
}

// Coprimality certificate: evaluate all variables except v at deterministic
// points (leading v-coefficients must stay nonzero) and take the univariate
// gcd. Zero image degree proves the primitive parts in v are coprime.
inline std::optional<int> eval_gcd_degree(const Poly<Rat>& a, const Poly<Rat>& b, int v) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        Rat vals[NVARS];
        for (int i = 0; i < NVARS; ++i) vals[i] = Rat(2 + i + 5 * attempt);
        auto image = [&](const Poly<Rat>& p) {
            std::vector<Rat> out(static_cast<size_t>(p.deg_in(v)) + 1, Rat(0));
            for (const auto& [m, c] : p.terms()) {
                Rat w = c;
                for (int i = 0; i < NVARS; ++i) {
                    if (i == v || m[i] == 0) continue;
                    w *= rat_pow(vals[i], m[i]);
                }
                out[static_cast<size_t>(m[v])] += w;
            }
            return out;
        };
        std::vector<Rat> ia = image(a), ib = image(b);
        if (is_zero(ia.back()) || is_zero(ib.back())) continue;  // degenerate point
        // clear denominators to integers
        auto to_int = [](const std::vector<Rat>& p) {
            mpz_class l(1);
            for (const auto& c : p) l = lcm(l, c.get_den());
            std::vector<mpz_class> out;
            out.reserve(p.size());
            for (const auto& c : p) out.push_back(c.get_num() * (l / c.get_den()));
            return out;
        };
        return dense_gcd_degree(to_int(ia), to_int(ib));
    }
    return std::nullopt;
}

inline std::optional<int> eval_gcd_degree(const Poly<Cyc>&, const Poly<Cyc>&, int) {
    return std::nullopt;
}

// exact single-variable gcd through the dense integer PRS
inline std::optional<Poly<Rat>> univariate_gcd(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (a.eden() != 1 || b.eden() != 1) return std::nullopt;
    int v = -1;
    for (int i = 0; i < NVARS; ++i) {
        if (a.depends_on(i) || b.depends_on(i)) {
            if (v >= 0) return std::nullopt;
            v = i;
        }
    }
    if (v < 0) return Poly<Rat>::one();
    auto dense = [&](const Poly<Rat>& p) {
        std::vector<Rat> out(static_cast<size_t>(p.deg_in(v)) + 1, Rat(0));
        for (const auto& [m, c] : p.terms()) out[static_cast<size_t>(m[v])] += c;
        mpz_class l(1);
        for (const auto& c : out) l = lcm(l, c.get_den());
        std::vector<mpz_class> zi;
        zi.reserve(out.size());
        for (const auto& c : out) zi.push_back(c.get_num() * (l / c.get_den()));
        return zi;
    };
    auto g = dense_gcd(dense(a), dense(b));
    std::vector<Poly<Rat>::Term> ts;
    for (size_t j = 0; j < g.size(); ++j) {
        if (sgn(g[j]) == 0) continue;
        Mono m = mono_zero();
        m[v] = static_cast<int32_t>(j);
        ts.push_back({m, Rat(g[j])});
    }
    return make_monic(Poly<Rat>::from_terms(1, std::move(ts)));
}

// coefficients of the polynomial through (xs[i], ys[i]) by divided differences
inline std::vector<Rat> newton_interpolate(const std::vector<Rat>& xs, std::vector<Rat> ys) {
    const size_t n = xs.size();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<Rat> acc{ys[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k];
            next[k] -= acc[k] * xs[i];
        }
        next[0] += ys[i];
        acc = std::move(next);
    }
    return acc;
}

template <class C>
Poly<C> eval_var(const Poly<C>& p, int w, const C& r) {
    std::vector<typename Poly<C>::Term> ts;
    ts.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        Mono n = m;
        n[w] = 0;
        C coef = c;
        if (m[w] != 0) {
            C rp = r;
            // integer exponent expected (callers keep the eden-1 grid)
            long e = m[w];
            C acc = C(1);
            long k = e;
            while (k) {
                if (k & 1) acc = acc * rp;
                rp = rp * rp;
                k >>= 1;
            }
            coef = coef * acc;
        }
        ts.push_back({n, coef});
    }
    return Poly<C>::from_terms(p.eden(), std::move(ts));
}

Poly<Rat> poly_gcd_rat_entry(const Poly<Rat>& a, const Poly<Rat>& b);

// Interpolated gcd candidate (Brown-style): gcds of images at w = r are
// interpolated back into a polynomial. Soundness does not depend on the
// points being lucky — callers verify divisibility and recurse via
// gcd(a,b) = G·gcd(a/G, b/G).
inline std::optional<Poly<Rat>> gcd_interp_candidate(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (a.eden() != 1 || b.eden() != 1) return std::nullopt;
    int w = -1;
    for (int i = NVARS - 1; i >= 0; --i)
        if (a.deg_in(i) > 0 && b.deg_in(i) > 0) {
            w = i;
            break;
        }
    if (w < 0) return std::nullopt;

    // dense-in-w coefficient of the deg-lex-largest projected monomial
    auto lc_dense = [&](const Poly<Rat>& p) {
        Mono best = mono_zero();
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            Mono proj = m;
            proj[w] = 0;
            if (first || MonoLess{}(best, proj)) {
                best = proj;
                first = false;
            }
        }
        std::vector<Rat> out(static_cast<size_t>(p.deg_in(w)) + 1, Rat(0));
        for (const auto& [m, c] : p.terms()) {
            Mono proj = m;
            proj[w] = 0;
            if (proj == best) out[static_cast<size_t>(m[w])] += c;
        }
        while (!out.empty() && is_zero(out.back())) out.pop_back();
        return out;
    };
    auto to_int = [](const std::vector<Rat>& p) {
        mpz_class l(1);
        for (const auto& c : p) l = lcm(l, c.get_den());
        std::vector<mpz_class> out;
        out.reserve(p.size());
        for (const auto& c : p) out.push_back(c.get_num() * (l / c.get_den()));
        return out;
    };
    std::vector<Rat> la = lc_dense(a), lb = lc_dense(b);
    if (la.empty() || lb.empty()) return std::nullopt;
    auto gamma = dense_gcd(to_int(la), to_int(lb));
    auto eval_dense_z = [](const std::vector<mpz_class>& p, const Rat& r) {
        Rat acc(0);
        for (size_t i = p.size(); i-- > 0;) acc = acc * r + Rat(p[i]);
        return acc;
    };
    auto eval_dense_q = [](const std::vector<Rat>& p, const Rat& r) {
        Rat acc(0);
        for (size_t i = p.size(); i-- > 0;) acc = acc * r + p[i];
        return acc;
    };

    const int D = static_cast<int>(gamma.size()) - 1 + std::min(a.deg_in(w), b.deg_in(w));
    std::vector<Rat> xs;
    std::vector<Poly<Rat>> hs;
    Mono best_lead = mono_zero();
    bool have_lead = false;
    for (long r0 = 2; r0 < 2 + D + 30 && static_cast<int>(xs.size()) < D + 1; ++r0) {
        Rat r(r0);
        if (is_zero(eval_dense_q(la, r)) || is_zero(eval_dense_q(lb, r))) continue;
        Poly<Rat> ia = eval_var(a, w, r), ib = eval_var(b, w, r);
        if (ia.is_zero() || ib.is_zero()) continue;
        Poly<Rat> g = poly_gcd_rat_entry(ia, ib);
        const Mono lead = g.leading().first;
        if (!have_lead || MonoLess{}(lead, best_lead)) {
            best_lead = lead;
            have_lead = true;
            xs.clear();
            hs.clear();
        } else if (MonoLess{}(best_lead, lead)) {
            continue;  // unlucky point
        }
        xs.push_back(r);
        hs.push_back(g.scaled(eval_dense_z(gamma, r)));
    }
    if (static_cast<int>(xs.size()) != D + 1) return std::nullopt;

    // interpolate every projected monomial across the sample points
    std::map<Mono, std::vector<Rat>, MonoLess> columns;
    for (size_t i = 0; i < hs.size(); ++i)
        for (const auto& [m, c] : hs[i].terms()) {
            auto it = columns.find(m);
            if (it == columns.end())
                it = columns.emplace(m, std::vector<Rat>(xs.size(), Rat(0))).first;
            it->second[i] = c;
        }
    std::vector<Poly<Rat>::Term> ts;
    for (const auto& [m, vals] : columns) {
        std::vector<Rat> coefs = newton_interpolate(xs, vals);
        for (size_t j = 0; j < coefs.size(); ++j) {
            if (is_zero(coefs[j])) continue;
            Mono n = m;
            n[w] = static_cast<int32_t>(j);
            ts.push_back({n, coefs[j]});
        }
    }
    Poly<Rat> cand = Poly<Rat>::from_terms(1, std::move(ts));
    if (cand.is_zero()) return std::nullopt;
    remove_scalar_content(cand);
    return cand;
}

template <class C>
Poly<C> poly_gcd_inner(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly<C>::one();
    if (a == b) return make_monic(a);
    // trial-division fast paths: catch exact factor cancellation cheaply
    if (auto q = try_divide_exact(a, b)) {
        (void)q;
        return make_monic(b);
    }
    if (auto q = try_divide_exact(b, a)) {
        (void)q;
        return make_monic(a);
    }
    if constexpr (std::is_same_v<C, Rat>) {
        if (auto u = univariate_gcd(a, b)) return *u;
    }
    // main variable: present in both with the smallest min-degree
    int v = -1;
    int32_t best = 0;
    for (int i = 0; i < NVARS; ++i) {
        int32_t da = a.deg_in(i), db = b.deg_in(i);
        if (da > 0 && db > 0) {
            int32_t score = std::min(da, db);
            if (v < 0 || score < best) {
                v = i;
                best = score;
            }
        }
    }
    if (v < 0) {
        // no shared variable: the gcd divides both contents
        for (int i = NVARS - 1; i >= 0; --i) {
            if (a.depends_on(i) && !b.depends_on(i)) return poly_gcd_inner(vcontent(a, i), b);
            if (b.depends_on(i) && !a.depends_on(i)) return poly_gcd_inner(a, vcontent(b, i));
        }
        return Poly<C>::one();
    }

    // cheap coprimality certificate before the expensive PRS
    if (auto d = eval_gcd_degree(a, b, v); d && *d == 0)
        return poly_gcd_inner(vcontent(a, v), vcontent(b, v));

    // interpolated candidate; composition gcd(a,b) = G·gcd(a/G, b/G) is an
    // identity for any common divisor G, so luck only affects speed
    if constexpr (std::is_same_v<C, Rat>) {
        if (auto cand = gcd_interp_candidate(a, b)) {
            if (!cand->is_constant()) {
                auto qa = try_divide_exact(a, *cand);
                if (qa) {
                    auto qb = try_divide_exact(b, *cand);
                    if (qb) return make_monic(*cand * poly_gcd_inner(*qa, *qb));
                }
            }
        }
    }

    Poly<C> ca = vcontent(a, v), cb = vcontent(b, v);
    Poly<C> c = poly_gcd_inner(ca, cb);
    Poly<C> A = ca.is_constant() ? a : divide_exact(a, ca);
    Poly<C> B = cb.is_constant() ? b : divide_exact(b, cb);
    remove_scalar_content(A);
    remove_scalar_content(B);
    if (vdeg(A, v) < vdeg(B, v)) std::swap(A, B);

    // primitive PRS: full content removal each step keeps sizes small
    Poly<C> pp;
    while (true) {
        Poly<C> R = pseudo_rem(A, B, v);
        if (R.is_zero()) {
            pp = primitive_part_v(B, v);
            break;
        }
        if (vdeg(R, v) == 0) {
            pp = Poly<C>::one();
            break;
        }
        A = std::move(B);
        B = primitive_part_v(R, v);
    }
    return make_monic(c * pp);
}

} // namespace detail

// Monic gcd with the common monomial factor included. Inputs may live on
// fractional-exponent grids but must have nonnegative exponent numerators.
template <class C>
Poly<C> poly_gcd(const Poly<C>& a0, const Poly<C>& b0) {
    if (a0.is_zero()) return make_monic(b0);
    if (b0.is_zero()) return make_monic(a0);
    auto [a, b] = Poly<C>::on_common_grid(a0, b0);
    const int32_t grid = a.eden();
    Mono ma = a.min_exponents(), mb = b.min_exponents();
    Mono shared;
    for (int i = 0; i < NVARS; ++i) {
        if (ma[i] < 0 || mb[i] < 0) throw error("poly_gcd requires nonnegative exponents");
        shared[i] = std::min(ma[i], mb[i]);
    }
    // run the PRS on the formal integer grid so v-degrees stay comparable
    Poly<C> as = Poly<C>::on_grid(a.shifted(mono_sub(mono_zero(), ma)), 1);
    Poly<C> bs = Poly<C>::on_grid(b.shifted(mono_sub(mono_zero(), mb)), 1);
    Poly<C> g = detail::poly_gcd_inner(as, bs);
    g = Poly<C>::on_grid(std::move(g), grid);
    g.rescale_to(grid);
    return make_monic(g.shifted(shared));
}

namespace detail {
inline Poly<Rat> poly_gcd_rat_entry(const Poly<Rat>& a, const Poly<Rat>& b) {
    return poly_gcd(a, b);
}
}

// ---- printing ----

template <class C>
std::string coeff_to_string(const C& c);

template <>
inline std::string coeff_to_string<Rat>(const Rat& c) {
    return rat_to_string(c);
}

template <>
inline std::string coeff_to_string<Cyc>(const Cyc& c) {
    return c.to_string();
}

template <class C>
std::string poly_to_string(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& ts = p.terms();
    for (size_t idx = ts.size(); idx-- > 0;) {
        const auto& [m, c] = ts[idx];
        std::string cs = coeff_to_string<C>(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string vars;
        for (int i = 0; i < NVARS; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += VAR_NAMES[i];
            long num = m[i];
            long den = p.eden();
            long g = std::gcd(std::abs(num), den);
            num /= g;
            den /= g;
            if (!(num == 1 && den == 1)) {
                vars += "^";
                if (den == 1)
                    vars += std::to_string(num);
                else
                    vars += "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
            }
        }
        if (vars.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += vars;
        } else {
            bool wrap = cs.find_first_of("+-/ ") != std::string::npos &&
                        !(cs.front() == '(' && cs.back() == ')');
            out += (wrap ? "(" + cs + ")" : cs) + "*" + vars;
        }
    }
    return out;
}

} // namespace macref
