#include "macref/macdonald.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>

#include "macref/sym_json.hpp"

namespace macref {

namespace {

constexpr int kCacheSchema = 1;

std::mutex g_mutex;
std::map<int, std::unique_ptr<MacdonaldTable>> g_tables;
std::optional<std::string> g_cache_dir;

RatFunc q_var() { return RatFunc::variable(VQ); }
RatFunc t_var() { return RatFunc::variable(VT); }

RatFunc subst_var(const RatFunc& r, int var, const RatFunc& target) {
    std::map<int, RatFunc> sigma{{var, target}};
    return substitute(r, sigma);
}

std::filesystem::path cache_file(int degree) {
    return std::filesystem::path(*g_cache_dir) / "macdonald" / (std::to_string(degree) + ".json");
}

std::unique_ptr<MacdonaldTable> load_cached(int degree) {
    if (!g_cache_dir) return nullptr;
    std::ifstream in(cache_file(degree));
    if (!in) return nullptr;
    nlohmann::json j;
    try {
        in >> j;
        if (j.value("schema", 0) != kCacheSchema || j.value("degree", -1) != degree) return nullptr;
        auto t = std::make_unique<MacdonaldTable>();
        t->degree = degree;
        t->parts = partitions_of(degree);
        for (const auto& e : j.at("P"))
            t->P.emplace(partition_from_json(e.at("mu")), symfunc_from_json(e.at("f")));
        for (const auto& e : j.at("H"))
            t->H.emplace(partition_from_json(e.at("mu")), symfunc_from_json(e.at("f")));
        for (const auto& e : j.at("K"))
            t->K.emplace(std::make_pair(partition_from_json(e.at("lambda")),
                                        partition_from_json(e.at("mu"))),
                         frac_from_json<Rat>(e.at("c")));
        if (t->P.size() != t->parts.size() || t->H.size() != t->parts.size()) return nullptr;
        return t;
    } catch (...) {
        return nullptr;
    }
}

void store_cached(const MacdonaldTable& t) {
    if (!g_cache_dir) return;
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(*g_cache_dir) / "macdonald", ec);
    if (ec) return;
    nlohmann::json j;
    j["schema"] = kCacheSchema;
    j["degree"] = t.degree;
    nlohmann::json P = nlohmann::json::array(), H = nlohmann::json::array(),
                   K = nlohmann::json::array();
    for (const auto& [mu, f] : t.P) P.push_back({{"mu", partition_to_json(mu)}, {"f", symfunc_to_json(f)}});
    for (const auto& [mu, f] : t.H) H.push_back({{"mu", partition_to_json(mu)}, {"f", symfunc_to_json(f)}});
    for (const auto& [lm, c] : t.K)
        K.push_back({{"lambda", partition_to_json(lm.first)},
                     {"mu", partition_to_json(lm.second)},
                     {"c", frac_to_json(c)}});
    j["P"] = std::move(P);
    j["H"] = std::move(H);
    j["K"] = std::move(K);
    std::ofstream out(cache_file(t.degree));
    if (out) out << j.dump();
}

// H̃_μ = t^{n(μ)} J_μ[X/(1 − t^{-1}); q, 1/t]
SymFunc modified_h_from_j(const Partition& mu, const SymFunc& J) {
    RatFunc tinv = RatFunc::monomial(VT, -1);
    SymFunc Jswap = J.map_coefficients([&](const RatFunc& c) { return subst_var(c, VT, tinv); });
    RatFunc g = RatFunc::one() / (RatFunc::one() - tinv);
    SymFunc H = plethysm_scale_x(Jswap, g);
    H = H.scaled(RatFunc::monomial(VT, mu.n_stat()));
    return H.converted(Basis::schur);
}

// the three defining properties, asserted post hoc
void assert_characterization(const Partition& mu, const SymFunc& H) {
    // (1) H̃_μ[(1−q)X] supported on {s_λ : λ ≥ μ}
    SymFunc in_q = plethysm_scale_x(H, RatFunc::one() - q_var()).converted(Basis::schur);
    for (const auto& [lam, c] : in_q.terms())
        if (!Partition::dominated_by(mu, lam))
            throw internal_mismatch_error("modified Macdonald triangularity in q failed for " +
                                          mu.to_string());
    // (2) H̃_μ[(1−t)X] supported on {s_λ : λ ≥ μ^t}
    SymFunc in_t = plethysm_scale_x(H, RatFunc::one() - t_var()).converted(Basis::schur);
    Partition mt = mu.transpose();
    for (const auto& [lam, c] : in_t.terms())
        if (!Partition::dominated_by(mt, lam))
            throw internal_mismatch_error("modified Macdonald triangularity in t failed for " +
                                          mu.to_string());
    // (3) H̃_μ[1] = 1
    PlethAlphabet one_alpha = alphabet_scalar([](long) { return RatFunc::one(); });
    if (plethysm_scalar(H, one_alpha) != RatFunc::one())
        throw internal_mismatch_error("modified Macdonald normalization failed for " + mu.to_string());
}

std::unique_ptr<MacdonaldTable> build_table(int degree) {
    auto t = std::make_unique<MacdonaldTable>();
    t->degree = degree;
    t->parts = partitions_of(degree);

    // Gram–Schmidt over the dominance order, bottom (most dominated) first
    std::vector<Partition> order = t->parts;
    std::reverse(order.begin(), order.end());
    std::map<Partition, RatFunc> norms;
    for (const auto& lam : order) {
        SymFunc p = sym_m(lam);
        for (const auto& mu : order) {
            if (mu == lam) break;
            if (!Partition::dominated_by(mu, lam)) continue;
            const SymFunc& Pmu = t->P.at(mu);
            RatFunc c = inner_product(sym_m(lam), Pmu, InnerKind::qt) / norms.at(mu);
            if (!c.is_zero()) p -= Pmu.scaled(c);
        }
        norms.emplace(lam, inner_product(p, p, InnerKind::qt));
        t->P.emplace(lam, p.converted(Basis::monomial));
    }

    for (const auto& mu : t->parts) {
        auto [c, cp] = hook_products(mu);
        (void)cp;
        SymFunc J = t->P.at(mu).scaled(c);
        SymFunc H = modified_h_from_j(mu, J);
        assert_characterization(mu, H);
        for (const auto& [lam, coef] : H.terms()) t->K.emplace(std::make_pair(lam, mu), coef);
        t->H.emplace(mu, std::move(H));
    }
    return t;
}

const MacdonaldTable& table_locked(int degree) {
    auto it = g_tables.find(degree);
    if (it != g_tables.end()) {
        if (g_cache_dir) {
            std::error_code ec;
            if (!std::filesystem::exists(cache_file(degree), ec)) store_cached(*it->second);
        }
        return *it->second;
    }
    auto t = load_cached(degree);
    if (!t) t = build_table(degree);
    store_cached(*t);
    return *g_tables.emplace(degree, std::move(t)).first->second;
}

} // namespace

const MacdonaldTable& macdonald_table(int degree) {
    std::lock_guard<std::mutex> lk(g_mutex);
    return table_locked(degree);
}

void macdonald_set_cache_dir(std::optional<std::string> dir) {
    std::lock_guard<std::mutex> lk(g_mutex);
    g_cache_dir = std::move(dir);
}

std::optional<std::string> macdonald_cache_dir() {
    std::lock_guard<std::mutex> lk(g_mutex);
    return g_cache_dir;
}

long macdonald_cache_clear() {
    std::lock_guard<std::mutex> lk(g_mutex);
    if (!g_cache_dir) return 0;
    std::error_code ec;
    auto dir = std::filesystem::path(*g_cache_dir) / "macdonald";
    long removed = 0;
    if (std::filesystem::exists(dir, ec))
        for (const auto& e : std::filesystem::directory_iterator(dir, ec))
            if (e.path().extension() == ".json" && std::filesystem::remove(e.path(), ec)) ++removed;
    return removed;
}

std::vector<std::pair<int, long>> macdonald_cache_stats() {
    std::lock_guard<std::mutex> lk(g_mutex);
    std::vector<std::pair<int, long>> out;
    if (!g_cache_dir) return out;
    std::error_code ec;
    auto dir = std::filesystem::path(*g_cache_dir) / "macdonald";
    if (!std::filesystem::exists(dir, ec)) return out;
    for (const auto& e : std::filesystem::directory_iterator(dir, ec)) {
        if (e.path().extension() != ".json") continue;
        try {
            int deg = std::stoi(e.path().stem().string());
            out.push_back({deg, static_cast<long>(std::filesystem::file_size(e.path(), ec))});
        } catch (...) {
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SymFunc macdonald_p(const Partition& lam) { return macdonald_table(lam.size()).P.at(lam); }

SymFunc macdonald_j(const Partition& lam) {
    auto [c, cp] = hook_products(lam);
    (void)cp;
    return macdonald_p(lam).scaled(c);
}

SymFunc modified_h(const Partition& mu) { return macdonald_table(mu.size()).H.at(mu); }

RatFunc kostka_coefficient(const Partition& lam, const Partition& mu) {
    const auto& t = macdonald_table(mu.size());
    auto it = t.K.find({lam, mu});
    return it == t.K.end() ? RatFunc::zero() : it->second;
}

RatFunc pp_norm_qt(const Partition& lam) {
    auto [c, cp] = hook_products(lam);
    return cp / c;
}

RatFunc pp_norm_finite(const Partition& lam, int N) {
    RatFunc ratio = RatFunc::one();
    for (auto [col, row] : lam.boxes()) {
        // 1 − q^{a'} t^{N−l'} over 1 − q^{a'+1} t^{N−l'−1}
        RatFunc num = RatFunc::one() -
                      RatFunc::monomial(VQ, col) * RatFunc::monomial(VT, N - row);
        RatFunc den = RatFunc::one() -
                      RatFunc::monomial(VQ, col + 1) * RatFunc::monomial(VT, N - row - 1);
        ratio *= num / den;
    }
    return pp_norm_qt(lam) * ratio;
}

std::map<Partition, RatFunc> expand_in_p_basis(const SymFunc& f) {
    std::map<Partition, RatFunc> out;
    SymFunc work = f.converted(Basis::monomial);
    std::map<int, std::vector<Partition>> order;
    for (const auto& [p, c] : work.terms()) order[p.size()] = {};
    for (auto& [d, v] : order) v = partitions_of(d);
    for (const auto& [d, parts] : order) {
        for (const auto& lam : parts) {  // dominance-descending enumeration
            RatFunc c = work.coefficient(lam);
            if (c.is_zero()) continue;
            out.emplace(lam, c);
            work -= macdonald_p(lam).scaled(c);
        }
    }
    if (!work.is_zero()) throw internal_mismatch_error("P-basis expansion did not terminate");
    return out;
}

RatFunc inner_product_finite_n(const SymFunc& f, const SymFunc& g, int N) {
    auto fc = expand_in_p_basis(f);
    auto gc = expand_in_p_basis(g);
    RatFunc acc = RatFunc::zero();
    for (const auto& [lam, cf] : fc) {
        auto it = gc.find(lam);
        if (it == gc.end()) continue;
        if (lam.length() > N) continue;  // radical of the finite-N form
        acc += cf * it->second * pp_norm_finite(lam, N);
    }
    return acc;
}

RatFunc h_star_norm(const Partition& mu) {
    auto [c, cp] = hook_products(mu);
    RatFunc qinv = RatFunc::monomial(VQ, -1), tinv = RatFunc::monomial(VT, -1);
    RatFunc c_qinv = subst_var(c, VQ, qinv);
    RatFunc cp_tinv = subst_var(cp, VT, tinv);
    return nabla_eigenvalue(mu) * c_qinv * cp_tinv;
}

RatFunc nabla_eigenvalue(const Partition& mu) {
    return RatFunc::monomial(VQ, mu.n_stat_transpose()) * RatFunc::monomial(VT, mu.n_stat());
}

std::map<Partition, RatFunc> expand_in_h_basis(const SymFunc& f) {
    std::map<Partition, RatFunc> out;
    for (int d = 0; d <= f.max_degree(); ++d) {
        SymFunc part = f.degree_part(d);
        if (part.is_zero()) continue;
        const auto& t = macdonald_table(d);
        for (const auto& mu : t.parts) {
            RatFunc c = inner_product(part, t.H.at(mu), InnerKind::star) / h_star_norm(mu);
            if (!c.is_zero()) out.emplace(mu, c);
        }
    }
    return out;
}

SymFunc nabla(const SymFunc& f, long power) {
    auto coeffs = expand_in_h_basis(f);
    SymFunc out(Basis::schur);
    for (const auto& [mu, c] : coeffs)
        out += modified_h(mu).scaled(c * nabla_eigenvalue(mu).pow(power));
    return out.converted(f.basis());
}

SymFunc delta_f(const SymFunc& g, const SymFunc& f) {
    auto coeffs = expand_in_h_basis(g);
    SymFunc out(Basis::schur);
    for (const auto& [mu, c] : coeffs) {
        auto [B, A] = box_generating(mu);
        (void)A;
        RatFunc eig = plethysm_scalar(f, alphabet_of(B));
        out += modified_h(mu).scaled(c * eig);
    }
    return out.converted(g.basis());
}

RatFunc principal_specialization(const Partition& lam, int N) {
    if (lam.length() > N) return RatFunc::zero();
    // closed form: t^{−(N−1)|λ|/2 + n(λ)} ∏_s (1 − q^{a'} t^{N−l'}) / c_λ(q,t)
    RatFunc closed = RatFunc::monomial(VT, -(static_cast<long>(N - 1) * lam.size()) + 2 * lam.n_stat(), 2);
    for (auto [col, row] : lam.boxes())
        closed *= RatFunc::one() - RatFunc::monomial(VQ, col) * RatFunc::monomial(VT, N - row);
    auto [c, cp] = hook_products(lam);
    (void)cp;
    closed /= c;
    // direct route: plethystic evaluation of P_λ at Σ_i t^{(N+1−2i)/2}
    PlethAlphabet staircase = alphabet_scalar([N](long k) {
        RatFunc acc = RatFunc::zero();
        for (int i = 1; i <= N; ++i) acc += RatFunc::monomial(VT, k * (N + 1 - 2 * i), 2);
        return acc;
    });
    RatFunc direct = plethysm_scalar(macdonald_p(lam), staircase);
    if (closed != direct)
        throw internal_mismatch_error("principal specialization routes disagree for " +
                                      lam.to_string());
    return closed;
}

} // namespace macref
