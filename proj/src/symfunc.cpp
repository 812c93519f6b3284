#include "macref/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

namespace macref {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "monomial";
        case Basis::elementary: return "elementary";
        case Basis::homogeneous: return "homogeneous";
        case Basis::powersum: return "powersum";
        case Basis::schur: return "schur";
    }
    return "?";
}

Basis basis_from_name(const std::string& s) {
    if (s == "monomial" || s == "m") return Basis::monomial;
    if (s == "elementary" || s == "e") return Basis::elementary;
    if (s == "homogeneous" || s == "h") return Basis::homogeneous;
    if (s == "powersum" || s == "p") return Basis::powersum;
    if (s == "schur" || s == "s") return Basis::schur;
    throw error("unknown basis: " + s);
}

Rat z_lambda(const Partition& p) {
    Rat z(1);
    int prev = -1, mult = 0;
    auto flush = [&]() {
        for (int i = 2; i <= mult; ++i) z *= Rat(i);
    };
    for (int part : p.parts()) {
        z *= Rat(part);
        if (part == prev) {
            ++mult;
        } else {
            flush();
            prev = part;
            mult = 1;
        }
    }
    flush();
    return z;
}

// ---- Murnaghan–Nakayama ----

namespace {

std::vector<int> beta_set(const std::vector<int>& lam) {
    int L = static_cast<int>(lam.size());
    std::vector<int> beta(lam.size());
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (L - 1 - i);
    return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int L = static_cast<int>(beta.size());
    std::vector<int> lam;
    for (int i = 0; i < L; ++i) {
        int part = beta[static_cast<size_t>(i)] - (L - 1 - i);
        if (part > 0) lam.push_back(part);
    }
    return lam;
}

long mn_rec(const std::vector<int>& lam, const std::vector<int>& mu, size_t idx,
            std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
    if (idx == mu.size()) return lam.empty() ? 1 : 0;
    auto key = std::make_pair(lam, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int k = mu[idx];
    long total = 0;
    std::vector<int> beta = beta_set(lam);
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int nb = b - k;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int other : beta)
            if (nb < other && other < b) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        long sub = mn_rec(partition_from_beta(std::move(nbeta)), mu, idx + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

long mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw error("character requires |λ| = |μ|");
    std::map<std::pair<std::vector<int>, size_t>, long> memo;
    return mn_rec(lam.parts(), mu.parts(), 0, memo);
}

// ---- per-degree transition tables ----

namespace {

using QMat = std::vector<std::vector<Rat>>;

QMat qmat_inverse(QMat a) {
    const size_t n = a.size();
    QMat inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw error("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            Rat f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct DegreeTables {
    int n = 0;
    std::vector<Partition> parts;
    std::map<Partition, int> idx;
    std::vector<Rat> z;
    QMat h2p, e2p, s2p, m2p;
    QMat p2h, p2e, p2s, p2m;
};

// p-expansions of h_k / e_k for k ≤ n as maps partition → coefficient
std::vector<std::map<Partition, Rat>> newton_family(int n, bool elementary) {
    std::vector<std::map<Partition, Rat>> out(static_cast<size_t>(n) + 1);
    out[0][Partition::empty()] = Rat(1);
    for (int k = 1; k <= n; ++k) {
        std::map<Partition, Rat> acc;
        for (int i = 1; i <= k; ++i) {
            Rat sign = (!elementary || i % 2 == 1) ? Rat(1) : Rat(-1);
            for (const auto& [part, c] : out[static_cast<size_t>(k - i)]) {
                std::vector<int> np = part.parts();
                np.insert(std::upper_bound(np.begin(), np.end(), i, std::greater<int>()), i);
                acc[Partition(np)] += sign * c;
            }
        }
        for (auto& [part, c] : acc) c /= Rat(k);
        for (auto it = acc.begin(); it != acc.end();) {
            if (is_zero(it->second))
                it = acc.erase(it);
            else
                ++it;
        }
        out[static_cast<size_t>(k)] = std::move(acc);
    }
    return out;
}

std::map<Partition, Rat> convolve_family(const std::vector<std::map<Partition, Rat>>& fam,
                                         const Partition& lam) {
    std::map<Partition, Rat> acc;
    acc[Partition::empty()] = Rat(1);
    for (int part : lam.parts()) {
        std::map<Partition, Rat> next;
        for (const auto& [pa, ca] : acc) {
            for (const auto& [pb, cb] : fam[static_cast<size_t>(part)]) {
                std::vector<int> merged = pa.parts();
                for (int x : pb.parts())
                    merged.insert(std::upper_bound(merged.begin(), merged.end(), x, std::greater<int>()), x);
                next[Partition(merged)] += ca * cb;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

const DegreeTables& degree_tables(int n) {
    static std::map<int, std::unique_ptr<DegreeTables>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<DegreeTables>();
    t->n = n;
    t->parts = partitions_of(n);
    const size_t m = t->parts.size();
    for (size_t i = 0; i < m; ++i) t->idx[t->parts[i]] = static_cast<int>(i);
    t->z.reserve(m);
    for (const auto& p : t->parts) t->z.push_back(z_lambda(p));

    auto hfam = newton_family(n, false);
    auto efam = newton_family(n, true);
    auto to_row = [&](const std::map<Partition, Rat>& mp) {
        std::vector<Rat> row(m, Rat(0));
        for (const auto& [p, c] : mp) row[static_cast<size_t>(t->idx.at(p))] = c;
        return row;
    };
    t->h2p.reserve(m);
    t->e2p.reserve(m);
    for (const auto& p : t->parts) {
        t->h2p.push_back(to_row(convolve_family(hfam, p)));
        t->e2p.push_back(to_row(convolve_family(efam, p)));
    }
    t->p2h = qmat_inverse(t->h2p);
    t->p2e = qmat_inverse(t->e2p);

    // characters: s2p[λ][ν] = χ^λ_ν / z_ν, p2s[ν][λ] = χ^λ_ν
    t->s2p.assign(m, std::vector<Rat>(m, Rat(0)));
    t->p2s.assign(m, std::vector<Rat>(m, Rat(0)));
    for (size_t li = 0; li < m; ++li) {
        std::map<std::pair<std::vector<int>, size_t>, long> memo;
        for (size_t ni = 0; ni < m; ++ni) {
            memo.clear();
            long chi = mn_rec(t->parts[li].parts(), t->parts[ni].parts(), 0, memo);
            t->s2p[li][ni] = Rat(chi) / t->z[ni];
            t->p2s[ni][li] = Rat(chi);
        }
    }

    // monomial basis through Hall duality with h
    t->m2p.assign(m, std::vector<Rat>(m, Rat(0)));
    t->p2m.assign(m, std::vector<Rat>(m, Rat(0)));
    for (size_t mi = 0; mi < m; ++mi)
        for (size_t ni = 0; ni < m; ++ni) {
            t->m2p[mi][ni] = t->p2h[ni][mi] / t->z[ni];
            t->p2m[ni][mi] = t->z[ni] * t->h2p[mi][ni];
        }

    auto& ref = *t;
    cache.emplace(n, std::move(t));
    return ref;
}

const QMat& to_p_matrix(const DegreeTables& t, Basis b) {
    switch (b) {
        case Basis::monomial: return t.m2p;
        case Basis::elementary: return t.e2p;
        case Basis::homogeneous: return t.h2p;
        case Basis::schur: return t.s2p;
        default: throw error("no to-p matrix for powersum");
    }
}

const QMat& from_p_matrix(const DegreeTables& t, Basis b) {
    switch (b) {
        case Basis::monomial: return t.p2m;
        case Basis::elementary: return t.p2e;
        case Basis::homogeneous: return t.p2h;
        case Basis::schur: return t.p2s;
        default: throw error("no from-p matrix for powersum");
    }
}

} // namespace

// ---- SymFunc ----

SymFunc SymFunc::basis_element(Basis b, const Partition& p, RatFunc c) {
    SymFunc f(b);
    if (!c.is_zero()) f.terms_.emplace(p, std::move(c));
    return f;
}

int SymFunc::max_degree() const {
    int d = 0;
    for (const auto& [p, c] : terms_) d = std::max(d, p.size());
    return d;
}

SymFunc SymFunc::degree_part(int d) const {
    SymFunc f(basis_);
    for (const auto& [p, c] : terms_)
        if (p.size() == d) f.terms_.emplace(p, c);
    return f;
}

RatFunc SymFunc::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RatFunc::zero() : it->second;
}

void SymFunc::set_coefficient(const Partition& p, RatFunc c) {
    if (c.is_zero())
        terms_.erase(p);
    else
        terms_[p] = std::move(c);
}

SymFunc SymFunc::converted(Basis target) const {
    if (target == basis_) return *this;
    // route through powersum
    const SymFunc* src = this;
    SymFunc through;
    if (basis_ != Basis::powersum) {
        through = SymFunc(Basis::powersum);
        std::map<int, std::vector<std::pair<Partition, RatFunc>>> by_deg;
        for (const auto& [p, c] : terms_) by_deg[p.size()].push_back({p, c});
        for (const auto& [d, elems] : by_deg) {
            const auto& t = degree_tables(d);
            const QMat& mat = to_p_matrix(t, basis_);
            for (const auto& [p, c] : elems) {
                const auto& row = mat[static_cast<size_t>(t.idx.at(p))];
                for (size_t j = 0; j < row.size(); ++j) {
                    if (macref::is_zero(row[j])) continue;
                    RatFunc add = c.scaled(row[j]);
                    auto it = through.terms_.find(t.parts[j]);
                    if (it == through.terms_.end())
                        through.terms_.emplace(t.parts[j], std::move(add));
                    else {
                        it->second += add;
                        if (it->second.is_zero()) through.terms_.erase(it);
                    }
                }
            }
        }
        src = &through;
    }
    if (target == Basis::powersum) return *src;
    SymFunc out(target);
    std::map<int, std::vector<std::pair<Partition, RatFunc>>> by_deg;
    for (const auto& [p, c] : src->terms_) by_deg[p.size()].push_back({p, c});
    for (const auto& [d, elems] : by_deg) {
        const auto& t = degree_tables(d);
        const QMat& mat = from_p_matrix(t, target);
        for (const auto& [p, c] : elems) {
            const auto& row = mat[static_cast<size_t>(t.idx.at(p))];
            for (size_t j = 0; j < row.size(); ++j) {
                if (macref::is_zero(row[j])) continue;
                RatFunc add = c.scaled(row[j]);
                auto it = out.terms_.find(t.parts[j]);
                if (it == out.terms_.end())
                    out.terms_.emplace(t.parts[j], std::move(add));
                else {
                    it->second += add;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        }
    }
    return out;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    if (a.basis_ != b.basis_) return a + b.converted(a.basis_);
    SymFunc out = a;
    for (const auto& [p, c] : b.terms_) {
        auto it = out.terms_.find(p);
        if (it == out.terms_.end())
            out.terms_.emplace(p, c);
        else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc out(basis_);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
    return out;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = a.converted(Basis::powersum);
    SymFunc pb = b.converted(Basis::powersum);
    SymFunc out(Basis::powersum);
    for (const auto& [x, cx] : pa.terms_) {
        for (const auto& [y, cy] : pb.terms_) {
            std::vector<int> merged = x.parts();
            for (int v : y.parts())
                merged.insert(std::upper_bound(merged.begin(), merged.end(), v, std::greater<int>()), v);
            Partition key(merged);
            RatFunc add = cx * cy;
            auto it = out.terms_.find(key);
            if (it == out.terms_.end())
                out.terms_.emplace(std::move(key), std::move(add));
            else {
                it->second += add;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out.converted(a.basis_);
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
    if (c.is_zero()) return SymFunc(basis_);
    SymFunc out(basis_);
    for (const auto& [p, k] : terms_) {
        RatFunc v = k * c;
        if (!v.is_zero()) out.terms_.emplace(p, std::move(v));
    }
    return out;
}

SymFunc SymFunc::map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const {
    SymFunc out(basis_);
    for (const auto& [p, c] : terms_) {
        RatFunc v = fn(c);
        if (!v.is_zero()) out.terms_.emplace(p, std::move(v));
    }
    return out;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
    return a.terms_ == b.converted(a.basis_).terms_;
}

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    const char* tag = nullptr;
    switch (basis_) {
        case Basis::monomial: tag = "m"; break;
        case Basis::elementary: tag = "e"; break;
        case Basis::homogeneous: tag = "h"; break;
        case Basis::powersum: tag = "p"; break;
        case Basis::schur: tag = "s"; break;
    }
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        if (cs == "1")
            out += std::string(tag) + p.to_string();
        else
            out += "(" + cs + ")*" + tag + p.to_string();
    }
    return out;
}

SymFunc sym_p(const Partition& p) { return SymFunc::basis_element(Basis::powersum, p); }
SymFunc sym_p(long k) { return sym_p(Partition({static_cast<int>(k)})); }
SymFunc sym_s(const Partition& p) { return SymFunc::basis_element(Basis::schur, p); }
SymFunc sym_m(const Partition& p) { return SymFunc::basis_element(Basis::monomial, p); }
SymFunc sym_e(long k) {
    return k == 0 ? SymFunc::one(Basis::elementary)
                  : SymFunc::basis_element(Basis::elementary, Partition({static_cast<int>(k)}));
}
SymFunc sym_h(long k) {
    return k == 0 ? SymFunc::one(Basis::homogeneous)
                  : SymFunc::basis_element(Basis::homogeneous, Partition({static_cast<int>(k)}));
}

// ---- plethysm ----

PlethAlphabet alphabet_x() {
    return PlethAlphabet{[](long k) -> SymVal { return sym_p(k); }};
}

PlethAlphabet alphabet_scalar(std::function<RatFunc(long)> fn) {
    return PlethAlphabet{[fn = std::move(fn)](long k) -> SymVal { return fn(k); }};
}

PlethAlphabet alphabet_of(const RatFunc& r) {
    return PlethAlphabet{[r](long k) -> SymVal { return r.adams(k); }};
}

PlethAlphabet alphabet_x_times(const RatFunc& g) {
    return PlethAlphabet{[g](long k) -> SymVal { return sym_p(k).scaled(g.adams(k)); }};
}

PlethAlphabet alphabet_minus_eps_x() {
    return PlethAlphabet{[](long k) -> SymVal {
        return k % 2 == 1 ? sym_p(k) : sym_p(k).scaled(RatFunc(-1));
    }};
}

PlethAlphabet alphabet_sum(const PlethAlphabet& a, const PlethAlphabet& b) {
    auto fa = a.adams, fb = b.adams;
    return PlethAlphabet{[fa, fb](long k) -> SymVal { return sym_val_add(fa(k), fb(k)); }};
}

PlethAlphabet alphabet_negate(const PlethAlphabet& a) {
    auto fa = a.adams;
    return PlethAlphabet{[fa](long k) -> SymVal {
        SymVal v = fa(k);
        if (std::holds_alternative<RatFunc>(v)) return -std::get<RatFunc>(v);
        return -std::get<SymFunc>(v);
    }};
}

SymVal sym_val_add(const SymVal& a, const SymVal& b) {
    if (std::holds_alternative<RatFunc>(a) && std::holds_alternative<RatFunc>(b))
        return std::get<RatFunc>(a) + std::get<RatFunc>(b);
    auto as_sym = [](const SymVal& v) -> SymFunc {
        if (std::holds_alternative<SymFunc>(v)) return std::get<SymFunc>(v);
        return SymFunc::one(Basis::powersum).scaled(std::get<RatFunc>(v));
    };
    return as_sym(a) + as_sym(b);
}

SymVal sym_val_mul(const SymVal& a, const SymVal& b) {
    if (std::holds_alternative<RatFunc>(a) && std::holds_alternative<RatFunc>(b))
        return std::get<RatFunc>(a) * std::get<RatFunc>(b);
    if (std::holds_alternative<RatFunc>(a))
        return std::get<SymFunc>(b).scaled(std::get<RatFunc>(a));
    if (std::holds_alternative<RatFunc>(b))
        return std::get<SymFunc>(a).scaled(std::get<RatFunc>(b));
    return std::get<SymFunc>(a) * std::get<SymFunc>(b);
}

SymVal plethysm(const SymFunc& f, const PlethAlphabet& A) {
    SymFunc fp = f.converted(Basis::powersum);
    std::vector<SymVal> vals;
    bool all_scalar = true;
    for (const auto& [nu, c] : fp.terms()) {
        SymVal term = RatFunc(c);
        for (int part : nu.parts()) term = sym_val_mul(term, A.adams(part));
        all_scalar = all_scalar && std::holds_alternative<RatFunc>(term);
        vals.push_back(std::move(term));
    }
    if (all_scalar) {
        std::vector<RatFunc> terms;
        terms.reserve(vals.size());
        for (auto& v : vals) terms.push_back(std::move(std::get<RatFunc>(v)));
        return frac_sum(std::move(terms));
    }
    SymVal acc = RatFunc::zero();
    for (auto& v : vals) acc = sym_val_add(acc, v);
    return acc;
}

RatFunc plethysm_scalar(const SymFunc& f, const PlethAlphabet& A) {
    SymVal v = plethysm(f, A);
    if (std::holds_alternative<RatFunc>(v)) return std::get<RatFunc>(v);
    const SymFunc& s = std::get<SymFunc>(v);
    if (s.is_zero()) return RatFunc::zero();
    if (s.max_degree() == 0) return s.coefficient(Partition::empty());
    throw error("plethysm did not produce a scalar");
}

SymFunc plethysm_sym(const SymFunc& f, const PlethAlphabet& A) {
    SymVal v = plethysm(f, A);
    if (std::holds_alternative<SymFunc>(v)) return std::get<SymFunc>(v);
    return SymFunc::one(Basis::powersum).scaled(std::get<RatFunc>(v));
}

SymFunc plethysm_scale_x(const SymFunc& f, const RatFunc& g) {
    SymFunc fp = f.converted(Basis::powersum);
    SymFunc out(Basis::powersum);
    for (const auto& [nu, c] : fp.terms()) {
        RatFunc w = c;
        for (int part : nu.parts()) w *= g.adams(part);
        if (!w.is_zero()) out.set_coefficient(nu, w);
    }
    return out.converted(f.basis());
}

// ---- involutions, inner products ----

SymFunc omega(const SymFunc& f) {
    SymFunc fp = f.converted(Basis::powersum);
    SymFunc out(Basis::powersum);
    for (const auto& [nu, c] : fp.terms()) {
        int sign = (nu.size() - nu.length()) % 2 == 0 ? 1 : -1;
        out.set_coefficient(nu, sign > 0 ? c : -c);
    }
    return out.converted(f.basis());
}

SymFunc omega_qt(const SymFunc& f) {
    SymFunc fp = f.converted(Basis::powersum);
    SymFunc out(Basis::powersum);
    RatFunc q = RatFunc::variable(VQ), t = RatFunc::variable(VT);
    for (const auto& [nu, c] : fp.terms()) {
        RatFunc w = c;
        for (int part : nu.parts()) {
            RatFunc num = RatFunc::one() - q.pow(part);
            RatFunc den = RatFunc::one() - t.pow(part);
            w *= num / den;
            if (part % 2 == 0) w = -w;
        }
        out.set_coefficient(nu, w);
    }
    return out.converted(f.basis());
}

RatFunc inner_product(const SymFunc& f, const SymFunc& g, InnerKind kind) {
    SymFunc fp = f.converted(Basis::powersum);
    SymFunc gp = g.converted(Basis::powersum);
    RatFunc q = RatFunc::variable(VQ), t = RatFunc::variable(VT);
    std::vector<RatFunc> terms;
    for (const auto& [nu, cf] : fp.terms()) {
        RatFunc cg = gp.coefficient(nu);
        if (cg.is_zero()) continue;
        RatFunc w = (cf * cg).scaled(z_lambda(nu));
        switch (kind) {
            case InnerKind::hall:
                break;
            case InnerKind::qt:
                for (int part : nu.parts())
                    w *= (RatFunc::one() - q.pow(part)) / (RatFunc::one() - t.pow(part));
                break;
            case InnerKind::star: {
                for (int part : nu.parts())
                    w *= (RatFunc::one() - q.pow(part)) * (RatFunc::one() - t.pow(part));
                if ((nu.size() - nu.length()) % 2 != 0) w = -w;
                break;
            }
        }
        terms.push_back(std::move(w));
    }
    return frac_sum(std::move(terms));
}

// ---- Ω ----

SymVal omega_series(const PlethAlphabet& A, int D, bool tilde) {
    SymVal acc = RatFunc::zero();
    for (int k = 0; k <= D; ++k) {
        SymFunc base = tilde ? sym_e(k) : sym_h(k);
        acc = sym_val_add(acc, plethysm(base, A));
    }
    return acc;
}

RatFunc omega_closed(const Poly<Rat>& monomial_sum) {
    RatFunc acc = RatFunc::one();
    for (const auto& [m, c] : monomial_sum.terms()) {
        if (c.get_den() != 1) throw error("omega_closed needs integer multiplicities");
        long mult = c.get_num().get_si();
        RatFunc mono(Poly<Rat>::from_terms(monomial_sum.eden(), {{m, Rat(1)}}));
        acc *= (RatFunc::one() - mono).pow(-mult);
    }
    return acc;
}

// ---- expansions ----

std::map<Partition, RatFunc> expand_in_modified_schur(const SymFunc& f, int param_var) {
    RatFunc x = RatFunc::variable(param_var);
    RatFunc g = RatFunc::one() / (RatFunc::one() - x);
    SymFunc shifted = plethysm_scale_x(f, g);
    return shifted.converted(Basis::schur).terms();
}

RatFunc b_lambda(const Partition& p, int param_var) {
    RatFunc x = RatFunc::variable(param_var);
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    RatFunc acc = RatFunc::one();
    for (const auto& [part, m] : mult)
        for (int j = 1; j <= m; ++j) acc *= RatFunc::one() - x.pow(j);
    return acc;
}

std::map<std::vector<int>, RatFunc> expand_in_variables(const SymFunc& f, int nvars) {
    SymFunc fm = f.converted(Basis::monomial);
    std::map<std::vector<int>, RatFunc> out;
    for (const auto& [lam, c] : fm.terms()) {
        if (lam.length() > nvars) continue;
        std::vector<int> exp(static_cast<size_t>(nvars), 0);
        for (int i = 0; i < lam.length(); ++i) exp[static_cast<size_t>(i)] = lam.parts()[static_cast<size_t>(i)];
        std::sort(exp.begin(), exp.end());
        do {
            auto it = out.find(exp);
            if (it == out.end())
                out.emplace(exp, c);
            else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        } while (std::next_permutation(exp.begin(), exp.end()));
    }
    return out;
}

// ---- two-alphabet ----

SymFunc2 SymFunc2::outer(const SymFunc& f, const SymFunc& g) {
    SymFunc2 out(f.basis(), g.basis());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            RatFunc c = ca * cb;
            if (!c.is_zero()) out.terms_[{a, b}] = c;
        }
    return out;
}

SymFunc2 SymFunc2::converted(Basis bx, Basis by) const {
    SymFunc2 cur = *this;
    if (bx != bx_) {
        SymFunc2 next(bx, cur.by_);
        for (const auto& [key, c] : cur.terms_) {
            SymFunc row = SymFunc::basis_element(cur.bx_, key.first, c).converted(bx);
            for (const auto& [a2, c2] : row.terms()) {
                auto& slot = next.terms_[{a2, key.second}];
                slot += c2;
                if (slot.is_zero()) next.terms_.erase({a2, key.second});
            }
        }
        cur = std::move(next);
    }
    if (by != cur.by_) {
        SymFunc2 next(cur.bx_, by);
        for (const auto& [key, c] : cur.terms_) {
            SymFunc col = SymFunc::basis_element(cur.by_, key.second, c).converted(by);
            for (const auto& [b2, c2] : col.terms()) {
                auto& slot = next.terms_[{key.first, b2}];
                slot += c2;
                if (slot.is_zero()) next.terms_.erase({key.first, b2});
            }
        }
        cur = std::move(next);
    }
    return cur;
}

RatFunc SymFunc2::coefficient(const Partition& a, const Partition& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? RatFunc::zero() : it->second;
}

SymFunc2 operator+(const SymFunc2& a, const SymFunc2& b) {
    if (a.bx_ != b.bx_ || a.by_ != b.by_) return a + b.converted(a.bx_, a.by_);
    SymFunc2 out = a;
    for (const auto& [key, c] : b.terms_) {
        auto& slot = out.terms_[key];
        slot += c;
        if (slot.is_zero()) out.terms_.erase(key);
    }
    return out;
}

SymFunc2 SymFunc2::scaled(const RatFunc& c) const {
    SymFunc2 out(bx_, by_);
    if (c.is_zero()) return out;
    for (const auto& [key, k] : terms_) {
        RatFunc v = k * c;
        if (!v.is_zero()) out.terms_.emplace(key, std::move(v));
    }
    return out;
}

bool operator==(const SymFunc2& a, const SymFunc2& b) {
    if (a.bx_ == b.bx_ && a.by_ == b.by_) return a.terms_ == b.terms_;
    SymFunc2 bc = b.converted(a.bx_, a.by_);
    return a.terms_ == bc.terms_;
}

SymFunc2 omega_kernel2(const PlethAlphabet& g, int d, bool tilde) {
    SymFunc2 acc(Basis::powersum, Basis::powersum);
    for (const auto& nu : partitions_of(d)) {
        RatFunc w = RatFunc::one();
        for (int part : nu.parts()) {
            SymVal a = g.adams(part);
            if (!std::holds_alternative<RatFunc>(a))
                throw error("omega_kernel2 needs a scalar alphabet");
            w *= std::get<RatFunc>(a);
        }
        Rat z = z_lambda(nu);
        w = w.scaled(Rat(1) / z);
        if (tilde && (nu.size() - nu.length()) % 2 != 0) w = -w;
        if (!w.is_zero()) acc += SymFunc2::outer(sym_p(nu).scaled(w), sym_p(nu));
    }
    return acc;
}

} // namespace macref
