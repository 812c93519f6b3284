#include "macref/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "macref/hilbert.hpp"
#include "macref/refinedcs.hpp"
#include "macref/sym_json.hpp"
#include "macref/verify.hpp"

namespace macref {

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string trimmed;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "-" || trimmed == "[]") return Partition();
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw error("malformed partition: " + s);
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw error("malformed partition: " + s);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

namespace {

std::optional<std::string> default_cache_dir() {
    if (const char* env = std::getenv("MACREF_CACHE")) return std::string(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::string(xdg) + "/macref";
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/macref";
    return std::nullopt;
}

ClassSpec parse_class_spec(const std::string& s) {
    ClassSpec spec;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        std::string t;
        for (char c : tok)
            if (!isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw error("empty atom in class expression");
        ClassAtom atom;
        if (t == "O") {
            atom.kind = ClassAtom::Kind::structure_sheaf;
        } else if (t == "wedge(u)" || t == "wedge(v)") {
            atom.kind = ClassAtom::Kind::wedge_taut;
            atom.var = t[6] == 'u' ? VU : VV;
        } else if (t == "L") {
            atom.kind = ClassAtom::Kind::det_twist;
            atom.exponent = 1;
        } else if (t.rfind("L^", 0) == 0) {
            atom.kind = ClassAtom::Kind::det_twist;
            atom.exponent = std::stoi(t.substr(2));
        } else if (t.rfind("s[", 0) == 0) {
            size_t close = t.find(']');
            if (close == std::string::npos || close + 1 >= t.size() || t[close + 1] != ':')
                throw error("malformed Schur atom: " + tok);
            atom.lambda = parse_partition(t.substr(2, close - 2));
            std::string target = t.substr(close + 2);
            if (target == "E0")
                atom.kind = ClassAtom::Kind::schur_e0;
            else if (target == "Ex")
                atom.kind = ClassAtom::Kind::schur_ex;
            else if (target == "Ey")
                atom.kind = ClassAtom::Kind::schur_ey;
            else
                throw error("unknown Schur target (want E0, Ex or Ey): " + target);
        } else {
            throw error("unknown class atom: " + tok);
        }
        spec.atoms.push_back(std::move(atom));
    }
    if (spec.atoms.empty()) throw error("empty class expression");
    return spec;
}

template <class C>
nlohmann::json value_json(const Frac<C>& v) {
    nlohmann::json j = frac_to_json(v);
    j["str"] = v.to_string();
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int emit(const Config& cfg, const nlohmann::json& j, const std::vector<std::string>& csv_rows,
         std::string& out) {
    if (cfg.output_format == "csv") {
        for (const auto& row : csv_rows) out += row + "\n";
    } else {
        out += j.dump(1) + "\n";
    }
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& argv, std::string& out, std::string& err) {
    CLI::App app{"exact Macdonald-polynomial / refined Chern-Simons toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    bool no_cache = false;
    std::string cache_dir_flag;
    app.add_option("--cache-dir", cache_dir_flag, "directory for persisted tables");
    app.add_flag("--no-cache", no_cache, "disable the on-disk table cache");
    app.add_option("--format", cfg.output_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // macdonald --n <d>
    auto* cmd_mac = app.add_subcommand("macdonald", "emit the Macdonald table at one degree");
    int mac_n = 0;
    cmd_mac->add_option("--n", mac_n, "degree")->required()->check(CLI::NonNegativeNumber);

    // snorm
    auto* cmd_snorm = app.add_subcommand("snorm", "normalized Hopf-link S-matrix entry");
    std::string sn_lam, sn_mu;
    int sn_N = 0;
    bool sn_stable = false;
    cmd_snorm->add_option("--lambda", sn_lam, "first color (comma-separated parts)")->required();
    cmd_snorm->add_option("--mu", sn_mu, "second color")->required();
    auto* optN = cmd_snorm->add_option("--N", sn_N, "rank");
    cmd_snorm->add_flag("--stable", sn_stable, "four-variable stable version");

    // tnorm
    auto* cmd_tnorm = app.add_subcommand("tnorm", "normalized T-matrix entry");
    std::string tn_lam;
    int tn_N = 1;
    cmd_tnorm->add_option("--lambda", tn_lam)->required();
    cmd_tnorm->add_option("--N", tn_N, "rank")->required()->check(CLI::PositiveNumber);

    // hopf
    auto* cmd_hopf = app.add_subcommand("hopf", "Hopf-link invariant at q^k t^N = 1");
    std::string hp_lam, hp_mu;
    int hp_k = 1, hp_N = 1;
    bool hp_any_m = false;
    cmd_hopf->add_option("--lambda", hp_lam)->required();
    cmd_hopf->add_option("--mu", hp_mu)->required();
    cmd_hopf->add_option("--k", hp_k, "level")->required()->check(CLI::PositiveNumber);
    cmd_hopf->add_option("--N", hp_N, "rank")->required()->check(CLI::PositiveNumber);
    cmd_hopf->add_flag("--allow-large-m", hp_any_m, "lift the default gcd(k,N) ≤ 4 bound");

    // euler
    auto* cmd_euler = app.add_subcommand("euler", "equivariant Euler characteristic series");
    std::string eu_spec = "O";
    int eu_trunc = 4;
    cmd_euler->add_option("--spec", eu_spec,
                          "class expression: atoms O, wedge(u), wedge(v), s[parts]:E0|Ex|Ey, "
                          "L^k joined by '*'");
    cmd_euler->add_option("--trunc", eu_trunc, "series order")->check(CLI::NonNegativeNumber);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite = "all";
    int vf_size = 3, vf_trunc = 3;
    bool vf_serial = false;
    cmd_verify->add_option("--suite", vf_suite)
        ->check(CLI::IsMember({"plethysm", "macdonald", "specialization", "snorm", "hilbert",
                               "all"}));
    cmd_verify->add_option("--max-size", vf_size)->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--trunc", vf_trunc)->check(CLI::NonNegativeNumber);
    cmd_verify->add_flag("--serial", vf_serial, "run checks sequentially");

    // cache
    auto* cmd_cache = app.add_subcommand("cache", "manage the table cache");
    std::string cache_action;
    cmd_cache->add_option("action", cache_action, "clear or stats")
        ->required()
        ->check(CLI::IsMember({"clear", "stats"}));

    std::vector<const char*> cargv;
    cargv.push_back("macref");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out += app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    }

    if (no_cache)
        cfg.cache_dir = std::nullopt;
    else if (!cache_dir_flag.empty())
        cfg.cache_dir = cache_dir_flag;
    else
        cfg.cache_dir = default_cache_dir();
    macdonald_set_cache_dir(cfg.cache_dir);

    try {
        if (*cmd_mac) {
            const auto& t = macdonald_table(mac_n);
            nlohmann::json j;
            j["schema"] = 1;
            j["degree"] = t.degree;
            nlohmann::json P = nlohmann::json::array(), H = nlohmann::json::array(),
                           K = nlohmann::json::array();
            std::vector<std::string> rows;
            rows.push_back("lambda,mu,kostka");
            for (const auto& [mu, f] : t.P)
                P.push_back({{"mu", partition_to_json(mu)}, {"f", symfunc_to_json(f)}});
            for (const auto& [mu, f] : t.H)
                H.push_back({{"mu", partition_to_json(mu)}, {"f", symfunc_to_json(f)}});
            for (const auto& [lm, c] : t.K) {
                K.push_back({{"lambda", partition_to_json(lm.first)},
                             {"mu", partition_to_json(lm.second)},
                             {"c", value_json(c)}});
                rows.push_back(csv_escape(lm.first.to_string()) + "," +
                               csv_escape(lm.second.to_string()) + "," +
                               csv_escape(c.to_string()));
            }
            j["P"] = P;
            j["H"] = H;
            j["K"] = K;
            return emit(cfg, j, rows, out);
        }
        if (*cmd_snorm) {
            Partition lam = parse_partition(sn_lam), mu = parse_partition(sn_mu);
            if (sn_stable == (optN->count() > 0))
                throw error("choose exactly one of --N and --stable");
            nlohmann::json j;
            j["schema"] = 1;
            j["lambda"] = partition_to_json(lam);
            j["mu"] = partition_to_json(mu);
            RatFunc v;
            if (sn_stable) {
                j["stable"] = true;
                v = snorm_stable(lam, mu);
            } else {
                j["N"] = sn_N;
                v = snorm_finite(lam, mu, sn_N);
            }
            j["value"] = value_json(v);
            std::vector<std::string> rows{"lambda,mu,value",
                                          csv_escape(lam.to_string()) + "," +
                                              csv_escape(mu.to_string()) + "," +
                                              csv_escape(v.to_string())};
            return emit(cfg, j, rows, out);
        }
        if (*cmd_tnorm) {
            Partition lam = parse_partition(tn_lam);
            RatFunc v = tnorm(lam, tn_N);
            nlohmann::json j;
            j["schema"] = 1;
            j["lambda"] = partition_to_json(lam);
            j["N"] = tn_N;
            j["value"] = value_json(v);
            std::vector<std::string> rows{"lambda,value", csv_escape(lam.to_string()) + "," +
                                                              csv_escape(v.to_string())};
            return emit(cfg, j, rows, out);
        }
        if (*cmd_hopf) {
            Partition lam = parse_partition(hp_lam), mu = parse_partition(hp_mu);
            int m = std::gcd(hp_k, hp_N);
            if (m > 4 && !hp_any_m) {
                err += "gcd(k,N) = " + std::to_string(m) +
                       " > 4; pass --allow-large-m to lift the default bound\n";
                return 2;
            }
            CycFunc v = hopf_invariant(lam, mu, hp_k, hp_N);
            nlohmann::json j;
            j["schema"] = 1;
            j["lambda"] = partition_to_json(lam);
            j["mu"] = partition_to_json(mu);
            j["k"] = hp_k;
            j["N"] = hp_N;
            j["m"] = m;
            j["value"] = value_json(v);
            std::vector<std::string> rows{"lambda,mu,value",
                                          csv_escape(lam.to_string()) + "," +
                                              csv_escape(mu.to_string()) + "," +
                                              csv_escape(v.to_string())};
            return emit(cfg, j, rows, out);
        }
        if (*cmd_euler) {
            ClassSpec spec = parse_class_spec(eu_spec);
            auto series = euler_char_series(spec, eu_trunc);
            nlohmann::json j;
            j["schema"] = 1;
            j["spec"] = eu_spec;
            nlohmann::json arr = nlohmann::json::array();
            std::vector<std::string> rows{"n,character"};
            for (int n = 0; n <= eu_trunc; ++n) {
                arr.push_back({{"n", n}, {"character", value_json(series[static_cast<size_t>(n)])}});
                rows.push_back(std::to_string(n) + "," +
                               csv_escape(series[static_cast<size_t>(n)].to_string()));
            }
            j["series"] = arr;
            return emit(cfg, j, rows, out);
        }
        if (*cmd_verify) {
            VerifyOptions opt;
            opt.max_size = vf_size;
            opt.trunc = vf_trunc;
            opt.parallel = !vf_serial;
            auto results = run_verify_suite(vf_suite, opt);
            bool all_pass = true;
            nlohmann::json arr = nlohmann::json::array();
            std::vector<std::string> rows{"check,pass,seconds,detail"};
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                nlohmann::json e;
                e["name"] = r.name;
                e["pass"] = r.pass;
                e["seconds"] = r.seconds;
                if (!r.pass) e["detail"] = r.detail;
                arr.push_back(e);
                rows.push_back(r.name + "," + (r.pass ? "pass" : "FAIL") + "," +
                               std::to_string(r.seconds) + "," + csv_escape(r.detail));
            }
            nlohmann::json j;
            j["schema"] = 1;
            j["suite"] = vf_suite;
            j["max_size"] = vf_size;
            j["trunc"] = vf_trunc;
            j["pass"] = all_pass;
            j["results"] = arr;
            emit(cfg, j, rows, out);
            return all_pass ? 0 : 1;
        }
        if (*cmd_cache) {
            nlohmann::json j;
            j["schema"] = 1;
            std::vector<std::string> rows;
            if (!cfg.cache_dir) {
                j["dir"] = nullptr;
            } else {
                j["dir"] = *cfg.cache_dir;
            }
            if (cache_action == "clear") {
                long removed = macdonald_cache_clear();
                j["removed"] = removed;
                rows.push_back("removed," + std::to_string(removed));
            } else {
                auto stats = macdonald_cache_stats();
                nlohmann::json arr = nlohmann::json::array();
                rows.push_back("degree,bytes");
                for (auto [deg, bytes] : stats) {
                    arr.push_back({{"degree", deg}, {"bytes", bytes}});
                    rows.push_back(std::to_string(deg) + "," + std::to_string(bytes));
                }
                j["entries"] = arr;
            }
            return emit(cfg, j, rows, out);
        }
    } catch (const CLI::Error& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    } catch (const error& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    }
    err += "no subcommand\n";
    return 2;
}

} // namespace macref
