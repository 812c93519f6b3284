#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "macref/rational.hpp"

namespace macref {

namespace detail {

// Dense ℚ[z] helpers for the residue arithmetic. Vectors are coefficient
// lists c[0] + c[1] z + ..., no trailing zeros.
using ZPoly = std::vector<Rat>;

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

// a mod b and a / b (b nonzero), standard long division over ℚ.
inline void zp_divmod(ZPoly a, const ZPoly& b, ZPoly& quo, ZPoly& rem) {
    quo.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    const Rat lc = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / lc;
        size_t shift = a.size() - b.size();
        quo[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        zp_trim(a);
    }
    zp_trim(quo);
    rem = std::move(a);
}

// Cyclotomic polynomial Φ_L, computed by Φ_L = (z^L − 1) / ∏_{d|L, d<L} Φ_d.
inline const ZPoly& cyclotomic_polynomial(int L) {
    static std::map<int, ZPoly> table;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = table.find(L);
    if (it != table.end()) return it->second;
    ZPoly num(static_cast<size_t>(L) + 1, Rat(0));
    num[0] = Rat(-1);
    num[static_cast<size_t>(L)] = Rat(1);
    for (int d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        // recurse without re-locking
        auto dit = table.find(d);
        ZPoly phi_d;
        if (dit != table.end()) {
            phi_d = dit->second;
        } else {
            ZPoly nd(static_cast<size_t>(d) + 1, Rat(0));
            nd[0] = Rat(-1);
            nd[static_cast<size_t>(d)] = Rat(1);
            for (int e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                ZPoly q, r;
                zp_divmod(nd, table.at(e), q, r);
                nd = std::move(q);
            }
            phi_d = nd;
            table.emplace(d, phi_d);
        }
        ZPoly q, r;
        zp_divmod(num, phi_d, q, r);
        num = std::move(q);
    }
    return table.emplace(L, std::move(num)).first->second;
}

// Extended Euclid in ℚ[z]: returns (g, s) with s·a ≡ g (mod b), g = gcd.
inline void zp_half_ext_gcd(ZPoly a, ZPoly b, ZPoly& g, ZPoly& s) {
    ZPoly s0{Rat(1)}, s1{};
    while (!b.empty()) {
        ZPoly q, r;
        zp_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        ZPoly qs = zp_mul(q, s1);
        ZPoly ns(std::max(s0.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) ns[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        zp_trim(ns);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    g = std::move(a);
    s = std::move(s0);
}

} // namespace detail

// Element of ℚ[z]/Φ_L(z). Conductor 1 is plain ℚ (the default everywhere);
// values are stored as reduced residues, so an element is rational exactly
// when its residue has degree 0. Conductors are merged by embedding
// ζ_{L'} = ζ_L^{L/L'} into the lcm field.
class Cyc {
public:
    Cyc() : cond_(1) {}
    Cyc(const Rat& r) : cond_(1) {
        if (!macref::is_zero(r)) c_.push_back(r);
    }
    Cyc(long n) : Cyc(Rat(n)) {}

    // ζ_L^p
    static Cyc root_of_unity(int L, long p) {
        Cyc z;
        z.cond_ = L;
        long q = ((p % L) + L) % L;
        detail::ZPoly m(static_cast<size_t>(q) + 1, Rat(0));
        m[static_cast<size_t>(q)] = Rat(1);
        z.c_ = std::move(m);
        z.reduce();
        return z;
    }

    int conductor() const { return cond_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rat rational_value() const {
        if (!is_rational()) throw error("cyclotomic value is not rational");
        return c_.empty() ? Rat(0) : c_[0];
    }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        Cyc x = a, y = b;
        merge(x, y);
        if (y.c_.size() > x.c_.size()) x.c_.resize(y.c_.size(), Rat(0));
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
        detail::zp_trim(x.c_);
        x.shrink();
        return x;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
    Cyc operator-() const {
        Cyc x = *this;
        for (auto& c : x.c_) c = -c;
        return x;
    }
    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        Cyc x = a, y = b;
        merge(x, y);
        x.c_ = detail::zp_mul(x.c_, y.c_);
        x.reduce();
        x.shrink();
        return x;
    }
    Cyc inverse() const {
        if (is_zero()) throw zero_denominator_error("division by zero cyclotomic");
        if (cond_ == 1 || c_.size() == 1) {
            Cyc r;
            r.cond_ = cond_;
            r.c_ = {rat_inv(c_[0])};
            r.shrink();
            return r;
        }
        detail::ZPoly g, s;
        detail::zp_half_ext_gcd(c_, detail::cyclotomic_polynomial(cond_), g, s);
        // g is a nonzero constant (Φ irreducible over ℚ)
        Cyc r;
        r.cond_ = cond_;
        r.c_ = std::move(s);
        Rat inv = rat_inv(g.at(0));
        for (auto& c : r.c_) c *= inv;
        r.reduce();
        r.shrink();
        return r;
    }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    Cyc& operator/=(const Cyc& o) { return *this = *this / o; }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        Cyc x = a, y = b;
        merge(x, y);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    // Deterministic order for canonical term sorting (not a field order).
    friend bool cyc_less(const Cyc& a, const Cyc& b) {
        Cyc x = a, y = b;
        merge(x, y);
        if (x.c_.size() != y.c_.size()) return x.c_.size() < y.c_.size();
        for (size_t i = x.c_.size(); i-- > 0;)
            if (x.c_[i] != y.c_[i]) return x.c_[i] < y.c_[i];
        return false;
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        if (c_.size() == 1) return rat_to_string(c_[0]);
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (macref::is_zero(c_[i])) continue;
            Rat a = c_[i];
            if (!s.empty()) {
                s += sgn(a) < 0 ? " - " : " + ";
                if (sgn(a) < 0) a = -a;
            }
            if (i == 0) {
                s += rat_to_string(a);
            } else {
                if (!macref::is_one(a)) s += rat_to_string(a) + "*";
                s += "z" + std::to_string(cond_);
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return "(" + s + ")";
    }

private:
    void reduce() {
        detail::zp_trim(c_);
        if (cond_ == 1) return;
        const auto& phi = detail::cyclotomic_polynomial(cond_);
        if (c_.size() >= phi.size()) {
            detail::ZPoly q, r;
            detail::zp_divmod(c_, phi, q, r);
            c_ = std::move(r);
        }
    }
    // Drop the conductor when the residue is plainly rational.
    void shrink() {
        if (c_.size() <= 1) cond_ = 1;
    }
    static void embed(Cyc& x, int L) {
        if (x.cond_ == L) return;
        int k = L / x.cond_;
        detail::ZPoly out;
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (macref::is_zero(x.c_[i])) continue;
            size_t j = i * static_cast<size_t>(k);
            if (out.size() <= j) out.resize(j + 1, Rat(0));
            out[j] += x.c_[i];
        }
        x.c_ = std::move(out);
        x.cond_ = L;
        x.reduce();
    }
    static void merge(Cyc& x, Cyc& y) {
        if (x.cond_ == y.cond_) return;
        int L = std::lcm(x.cond_, y.cond_);
        embed(x, L);
        embed(y, L);
    }

    int cond_;
    detail::ZPoly c_;
};

inline bool is_zero(const Cyc& c) { return c.is_zero(); }
inline bool is_one(const Cyc& c) { return c.is_rational() && !c.is_zero() && is_one(c.rational_value()); }

} // namespace macref
