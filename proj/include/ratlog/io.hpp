#pragma once

// JSON config parsing (strict: unknown keys are rejected by name), CSV and
// SVG writers, and the on-disk coefficient cache with content-hash keys and
// atomic write-then-rename.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ratlog/aak.hpp"
#include "ratlog/asymptotics.hpp"
#include "ratlog/symbol.hpp"

namespace ratlog {

using nlohmann::json;

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok)
            throw std::invalid_argument("config: unknown key \"" + it.key() + "\" in " + where);
    }
}

inline std::complex<double> complex_from_json(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("config: " + where + " must be a number or [re, im]");
}

inline Poly poly_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument("config: " + where + " must be an array");
    Poly p;
    for (std::size_t i = 0; i < j.size(); ++i)
        p.push_back(complex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return p;
}

inline json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

inline json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(complex_to_json(c));
    return out;
}

}  // namespace detail

inline SymbolSpec symbol_from_json(const json& j) {
    detail::reject_unknown_keys(
        j, {"alpha", "singularities", "cutoff", "smooth_extra", "eps_min"}, "symbol");
    SymbolSpec sym;
    if (j.contains("cutoff")) {
        detail::reject_unknown_keys(j.at("cutoff"), {"c1", "c"}, "symbol.cutoff");
        sym.cutoff.c1 = j.at("cutoff").value("c1", sym.cutoff.c1);
        sym.cutoff.c = j.at("cutoff").value("c", sym.cutoff.c);
    }
    if (j.contains("eps_min")) sym.eps_min = j.at("eps_min").get<double>();
    const double alpha = j.at("alpha").get<double>();
    for (const json& sj : j.at("singularities")) {
        detail::reject_unknown_keys(sj,
                                    {"zeta", "v0_plus", "v0_minus", "v1_plus", "v1_minus",
                                     "u0_plus", "u0_minus", "u1_plus", "u1_minus", "jump_mode"},
                                    "symbol.singularities[]");
        SingularityParams p;
        p.alpha = alpha;
        if (sj.contains("zeta")) p.zeta = detail::complex_from_json(sj.at("zeta"), "zeta");
        auto get = [&](const char* key, Poly& dst) {
            if (sj.contains(key)) dst = detail::poly_from_json(sj.at(key), key);
        };
        get("v0_plus", p.v0_plus);
        get("v0_minus", p.v0_minus);
        get("v1_plus", p.v1_plus);
        get("v1_minus", p.v1_minus);
        get("u0_plus", p.u0_plus);
        get("u0_minus", p.u0_minus);
        get("u1_plus", p.u1_plus);
        get("u1_minus", p.u1_minus);
        p.jump_mode = sj.value("jump_mode", false) ? JumpMode::jump : JumpMode::normal;
        sym.singularities.push_back(std::move(p));
    }
    if (j.contains("smooth_extra"))
        for (const json& tj : j.at("smooth_extra")) {
            detail::reject_unknown_keys(tj, {"k", "c"}, "symbol.smooth_extra[]");
            sym.smooth_extra.emplace_back(tj.at("k").get<int>(),
                                          detail::complex_from_json(tj.at("c"), "smooth_extra.c"));
        }
    sym.validate();
    return sym;
}

inline json symbol_to_json(const SymbolSpec& sym) {
    json j;
    j["alpha"] = sym.singularities.empty() ? 0.0 : sym.singularities[0].alpha;
    j["cutoff"] = {{"c1", sym.cutoff.c1}, {"c", sym.cutoff.c}};
    j["eps_min"] = sym.eps_min;
    j["singularities"] = json::array();
    for (const SingularityParams& p : sym.singularities) {
        json sj;
        sj["zeta"] = detail::complex_to_json(p.zeta);
        sj["v0_plus"] = detail::poly_to_json(p.v0_plus);
        sj["v0_minus"] = detail::poly_to_json(p.v0_minus);
        sj["v1_plus"] = detail::poly_to_json(p.v1_plus);
        sj["v1_minus"] = detail::poly_to_json(p.v1_minus);
        sj["u0_plus"] = detail::poly_to_json(p.u0_plus);
        sj["u0_minus"] = detail::poly_to_json(p.u0_minus);
        sj["u1_plus"] = detail::poly_to_json(p.u1_plus);
        sj["u1_minus"] = detail::poly_to_json(p.u1_minus);
        sj["jump_mode"] = p.jump_mode == JumpMode::jump;
        j["singularities"].push_back(std::move(sj));
    }
    j["smooth_extra"] = json::array();
    for (const auto& [k, c] : sym.smooth_extra)
        j["smooth_extra"].push_back({{"k", k}, {"c", detail::complex_to_json(c)}});
    return j;
}

inline AnalyticSymbolSpec analytic_symbol_from_json(const json& j) {
    detail::reject_unknown_keys(j, {"alpha", "singularities"}, "analytic_symbol");
    AnalyticSymbolSpec out;
    out.alpha = j.at("alpha").get<double>();
    for (const json& sj : j.at("singularities")) {
        detail::reject_unknown_keys(sj, {"zeta", "v", "u"}, "analytic_symbol.singularities[]");
        AnalyticSingularity s;
        if (sj.contains("zeta")) s.zeta = detail::complex_from_json(sj.at("zeta"), "zeta");
        if (sj.contains("v")) s.v = detail::poly_from_json(sj.at("v"), "v");
        if (sj.contains("u")) s.u = detail::poly_from_json(sj.at("u"), "u");
        out.singularities.push_back(std::move(s));
    }
    out.validate();
    return out;
}

struct ExperimentConfig {
    std::optional<SymbolSpec> symbol;
    std::optional<AnalyticSymbolSpec> analytic_symbol;
    long J = 0;
    std::vector<long> N;
    long n_max = 8;
    long k = 16;
    double tol = 1e-10;
    std::uint64_t seed = 0x5eed5eedULL;
    long crossover = 10000;
    std::vector<std::string> commands;
    std::vector<std::string> checks;
    std::string out_dir = "out";
    std::string cache_dir;

    void validate() const {
        if (!symbol && !analytic_symbol)
            throw std::invalid_argument("config: need \"symbol\" or \"analytic_symbol\"");
        if (symbol && analytic_symbol)
            throw std::invalid_argument("config: \"symbol\" and \"analytic_symbol\" are exclusive");
        if (N.empty()) throw std::invalid_argument("config: \"N\" must be a non-empty list");
        long n_min_of = N[0], n_max_of = N[0];
        for (long n : N) {
            if (n < 1 || (n & (n - 1)) != 0)
                throw std::invalid_argument("config: N entries must be powers of two, got " +
                                            std::to_string(n));
            n_min_of = std::min(n_min_of, n);
            n_max_of = std::max(n_max_of, n);
        }
        if (J < 2 * n_max_of - 1)
            throw std::invalid_argument("config: J must be >= 2*max(N)-1 = " +
                                        std::to_string(2 * n_max_of - 1));
        if (!(1 <= n_max && n_max <= k && k <= n_min_of))
            throw std::invalid_argument("config: need 1 <= n_max <= k <= min(N)");
        if (!(tol > 0)) throw std::invalid_argument("config: tol must be positive");
    }
};

inline ExperimentConfig config_from_json(const json& j) {
    detail::reject_unknown_keys(j,
                                {"symbol", "analytic_symbol", "J", "N", "n_max", "k", "tol",
                                 "seed", "crossover", "commands", "checks", "out", "cache"},
                                "config");
    ExperimentConfig cfg;
    if (j.contains("symbol")) cfg.symbol = symbol_from_json(j.at("symbol"));
    if (j.contains("analytic_symbol"))
        cfg.analytic_symbol = analytic_symbol_from_json(j.at("analytic_symbol"));
    cfg.J = j.value("J", cfg.J);
    if (j.contains("N")) {
        if (j.at("N").is_number())
            cfg.N = {j.at("N").get<long>()};
        else
            cfg.N = j.at("N").get<std::vector<long>>();
    }
    cfg.n_max = j.value("n_max", cfg.n_max);
    cfg.k = j.value("k", cfg.k);
    cfg.tol = j.value("tol", cfg.tol);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.crossover = j.value("crossover", cfg.crossover);
    cfg.commands = j.value("commands", cfg.commands);
    cfg.checks = j.value("checks", cfg.checks);
    cfg.out_dir = j.value("out", cfg.out_dir);
    cfg.cache_dir = j.value("cache", cfg.cache_dir);
    cfg.validate();
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("config: " + path + ": " + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const json::exception& e) {
        throw std::runtime_error("config: " + path + ": " + e.what());
    }
}

inline json prediction_to_json(const Prediction& p) {
    json j;
    j["alpha"] = p.alpha;
    j["kappa"] = kappa(p.alpha);
    j["decay_exponent"] = p.decay_exponent;
    j["compact"] = p.compact;
    j["a_plus"] = p.a_plus;
    j["a_minus"] = p.a_minus;
    j["a_merged"] = p.a_merged;
    j["b_minus"] = json::array();
    for (const auto& b : p.b_minus) j["b_minus"].push_back(detail::complex_to_json(b));
    j["b_plus"] = json::array();
    for (const auto& b : p.b_plus) j["b_plus"].push_back(detail::complex_to_json(b));
    return j;
}

inline json distance_series_to_json(const DistanceSeries& d) {
    json j;
    j["side"] = to_string(d.side);
    j["N_used"] = d.N_used;
    j["tail_proxy"] = d.tail_proxy;
    j["converged_count"] = d.converged_count;
    j["values"] = d.values;
    return j;
}

inline json report_to_json(const DistanceReport& r) {
    json j;
    j["prediction"] = prediction_to_json(r.prediction);
    j["minus"] = distance_series_to_json(r.minus);
    j["plus"] = distance_series_to_json(r.plus);
    j["merged"] = distance_series_to_json(r.merged);
    j["degenerate"] = r.degenerate;
    return j;
}

// --- CSV ---

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::quadrature: return "quadrature";
        case Provenance::contour: return "contour";
        default: return "asymptotic_model";
    }
}

inline std::string series_csv(const FourierSeries& s) {
    std::string out = "j,re,im,abs_err,provenance\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        out += std::to_string(i + 1) + "," + fmt17(s.values[i].real()) + "," +
               fmt17(s.values[i].imag()) + "," + fmt17(s.accuracy[i]) + "," +
               to_string(s.provenance[i]) + "\n";
    }
    return out;
}

inline std::string svd_csv(const SingularValues& sv) {
    std::string out = "n,s_n,residual\n";
    for (std::size_t i = 0; i < sv.values.size(); ++i)
        out += std::to_string(i) + "," + fmt17(sv.values[i]) + "," +
               fmt17(sv.residual_estimates[i]) + "\n";
    return out;
}

inline std::string ratio_csv(const DistanceReport& r) {
    std::string out = "side,n,rho_n,n^alpha*rho_n,ratio_to_a\n";
    for (const RatioRow& row : r.scaled_ratios)
        out += std::string(to_string(row.side)) + "," + std::to_string(row.n) + "," +
               fmt17(row.rho) + "," + fmt17(row.scaled) + "," + fmt17(row.ratio) + "\n";
    return out;
}

// --- atomic files and the coefficient cache ---

inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

inline std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Cache key over everything that affects the numeric content of a series.
inline std::string series_cache_key(const SymbolSpec& sym, Side side, long J,
                                    const MethodPolicy& policy) {
    std::string blob = symbol_to_json(sym).dump();
    blob += "|side=" + std::string(side == Side::minus ? "minus" : "plus");
    blob += "|J=" + std::to_string(J);
    blob += "|crossover=" + std::to_string(policy.crossover);
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(blob)));
    return buf;
}

inline std::optional<FourierSeries> load_series_csv(const std::filesystem::path& path, Side side,
                                                    long J) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "j,re,im,abs_err,provenance") return std::nullopt;
    FourierSeries s;
    s.side = side;
    s.values.reserve(std::size_t(J));
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string field;
        double re = 0, im = 0, err = 0;
        long j = 0;
        std::string prov;
        try {
            std::getline(row, field, ',');
            j = std::stol(field);
            std::getline(row, field, ',');
            re = std::stod(field);
            std::getline(row, field, ',');
            im = std::stod(field);
            std::getline(row, field, ',');
            err = std::stod(field);
            std::getline(row, prov, ',');
        } catch (const std::exception&) {
            return std::nullopt;  // corrupt row; caller recomputes
        }
        if (j != long(s.values.size()) + 1) return std::nullopt;
        s.values.emplace_back(re, im);
        s.accuracy.push_back(err);
        if (prov == "quadrature")
            s.provenance.push_back(Provenance::quadrature);
        else if (prov == "contour")
            s.provenance.push_back(Provenance::contour);
        else if (prov == "asymptotic_model")
            s.provenance.push_back(Provenance::asymptotic_model);
        else
            return std::nullopt;
    }
    if (long(s.values.size()) < J) return std::nullopt;
    return s;
}

// --- SVG ---

/// Polyline plot of (x, y) curves with a log-scaled x axis and an optional
/// horizontal reference line.
struct SvgCurve {
    std::string color;
    std::vector<std::pair<double, double>> points;
};

inline std::string svg_plot(const std::vector<SvgCurve>& curves, std::optional<double> href,
                            const std::string& title) {
    const double W = 720, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 0.0, ymax = -1e300;
    for (const SvgCurve& c : curves)
        for (auto [x, y] : c.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymax = std::max(ymax, y);
        }
    if (href) ymax = std::max(ymax, *href);
    if (xmax <= xmin || ymax <= ymin) {
        xmin = 1;
        xmax = 10;
        ymax = 1;
    }
    ymax *= 1.1;
    auto sx = [&](double x) {
        return ml + (std::log(x) - std::log(xmin)) / (std::log(xmax) - std::log(xmin) + 1e-300) *
                        (W - ml - mr);
    };
    auto sy = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt17(W) +
                    "\" height=\"" + fmt17(H) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fmt17(W / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
         title + "</text>\n";
    s += "<line x1=\"" + fmt17(ml) + "\" y1=\"" + fmt17(H - mb) + "\" x2=\"" + fmt17(W - mr) +
         "\" y2=\"" + fmt17(H - mb) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fmt17(ml) + "\" y1=\"" + fmt17(mt) + "\" x2=\"" + fmt17(ml) +
         "\" y2=\"" + fmt17(H - mb) + "\" stroke=\"black\"/>\n";
    if (href) {
        s += "<line x1=\"" + fmt17(ml) + "\" y1=\"" + fmt17(sy(*href)) + "\" x2=\"" +
             fmt17(W - mr) + "\" y2=\"" + fmt17(sy(*href)) +
             "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
        s += "<text x=\"" + fmt17(W - mr) + "\" y=\"" + fmt17(sy(*href) - 5) +
             "\" text-anchor=\"end\" font-size=\"12\" fill=\"gray\">a</text>\n";
    }
    for (const SvgCurve& c : curves) {
        if (c.points.empty()) continue;
        s += "<polyline fill=\"none\" stroke=\"" + c.color + "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : c.points) s += fmt17(sx(x)) + "," + fmt17(sy(y)) + " ";
        s += "\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace ratlog
