// ratlog command line front-end.
//
// Subcommands: predict | coeffs | svd | distance | verify, each driven by a
// JSON experiment config. With no subcommand, the config's "commands" list is
// executed in order. Coefficient series are cached on disk keyed by a content
// hash of everything that affects their values.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ratlog/aak.hpp"
#include "ratlog/asymptotics.hpp"
#include "ratlog/fourier.hpp"
#include "ratlog/hankel.hpp"
#include "ratlog/io.hpp"

namespace fs = std::filesystem;
using namespace ratlog;

namespace {

struct Session {
    ExperimentConfig cfg;
    fs::path out_dir;
    fs::path cache_dir;  // empty disables caching
    MethodPolicy policy;

    // an analytic spec is reduced to boundary singularity data once
    SymbolSpec working_symbol() const {
        if (cfg.symbol) return *cfg.symbol;
        SymbolSpec sym;
        for (std::size_t ell = 0; ell < cfg.analytic_symbol->singularities.size(); ++ell)
            sym.singularities.push_back(analytic_boundary_params(*cfg.analytic_symbol, ell));
        sym.validate();
        return sym;
    }
};

FourierSeries get_series(const Session& s, const SymbolSpec& sym, Side side) {
    if (s.cache_dir.empty()) return make_series(sym, side, s.cfg.J, s.policy);
    const fs::path path = s.cache_dir / (series_cache_key(sym, side, s.cfg.J, s.policy) + ".csv");
    if (fs::exists(path)) {
        if (auto cached = load_series_csv(path, side, s.cfg.J)) return *cached;
        std::fprintf(stderr, "warning: cache entry %s is corrupt; recomputing\n",
                     path.string().c_str());
    }
    FourierSeries ser = make_series(sym, side, s.cfg.J, s.policy);
    atomic_write(path, series_csv(ser));
    return ser;
}

void cmd_predict(const Session& s) {
    json j;
    if (s.cfg.symbol) {
        j = prediction_to_json(predict(*s.cfg.symbol));
    } else {
        j["alpha"] = s.cfg.analytic_symbol->alpha;
        j["kappa"] = kappa(s.cfg.analytic_symbol->alpha);
        j["limit"] = predict_analytic(*s.cfg.analytic_symbol);
        j["degenerate"] = s.cfg.analytic_symbol->alpha == 1.0;
    }
    atomic_write(s.out_dir / "prediction.json", j.dump(2) + "\n");
}

void cmd_coeffs(const Session& s) {
    SymbolSpec sym = s.working_symbol();
    atomic_write(s.out_dir / "coeffs_minus.csv", series_csv(get_series(s, sym, Side::minus)));
    atomic_write(s.out_dir / "coeffs_plus.csv", series_csv(get_series(s, sym, Side::plus)));
}

void cmd_svd(const Session& s) {
    SymbolSpec sym = s.working_symbol();
    for (Side side : {Side::minus, Side::plus}) {
        FourierSeries ser = get_series(s, sym, side);
        for (long N : s.cfg.N) {
            HankelOperator op(ser, N);
            SingularValues sv = singular_values_iterative(op, s.cfg.k, s.cfg.tol, s.cfg.seed);
            std::string name = std::string("svd_") + (side == Side::minus ? "minus" : "plus") +
                               "_N" + std::to_string(N) + ".csv";
            atomic_write(s.out_dir / name, svd_csv(sv));
        }
    }
}

void cmd_distance(const Session& s) {
    SymbolSpec sym = s.working_symbol();
    FourierSeries minus_ser = get_series(s, sym, Side::minus);
    FourierSeries plus_ser = get_series(s, sym, Side::plus);
    SolverOptions opt;
    opt.tol = s.cfg.tol;
    opt.seed = s.cfg.seed;
    for (long N : s.cfg.N) {
        DistanceReport rep;
        rep.prediction = predict(sym);
        rep.minus = distances_from_series(minus_ser, s.cfg.n_max, N, opt);
        rep.plus = distances_from_series(plus_ser, s.cfg.n_max, N, opt);
        rep.merged = merge(rep.plus, rep.minus);
        rep.degenerate = rep.prediction.a_merged == 0.0;
        const double g = rep.prediction.decay_exponent;
        auto add = [&](const DistanceSeries& d, double a) {
            if (a <= 0.0) return;
            for (long n = 1; n < std::min<long>(long(d.values.size()), d.converged_count); ++n) {
                double sc = std::pow(double(n), g) * d.values[std::size_t(n)];
                rep.scaled_ratios.push_back({d.side, n, d.values[std::size_t(n)], sc, sc / a});
            }
        };
        if (rep.prediction.compact) {
            add(rep.minus, rep.prediction.a_minus);
            add(rep.plus, rep.prediction.a_plus);
            add(rep.merged, rep.prediction.a_merged);
        }
        const std::string tag = "_N" + std::to_string(N);
        atomic_write(s.out_dir / ("report" + tag + ".json"), report_to_json(rep).dump(2) + "\n");
        atomic_write(s.out_dir / ("ratio" + tag + ".csv"), ratio_csv(rep));
        std::vector<SvgCurve> curves(3);
        curves[0].color = "steelblue";
        curves[1].color = "firebrick";
        curves[2].color = "darkgreen";
        for (const RatioRow& r : rep.scaled_ratios) {
            int idx = r.side == DistanceSide::minus ? 0 : r.side == DistanceSide::plus ? 1 : 2;
            curves[std::size_t(idx)].points.emplace_back(double(r.n), r.scaled);
        }
        atomic_write(s.out_dir / ("ratio" + tag + ".svg"),
                     svg_plot(curves, rep.prediction.a_merged > 0
                                          ? std::optional<double>(rep.prediction.a_merged)
                                          : std::nullopt,
                              "n^g rho_n vs n (log scale)"));
    }
}

int cmd_verify(const Session& s) {
    json results = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, double measured, double threshold) {
        results.push_back({{"check", name},
                           {"status", ok ? "pass" : "fail"},
                           {"measured", measured},
                           {"threshold", threshold}});
        all_ok = all_ok && ok;
        std::printf("%-24s %s  (measured %.3e, threshold %.3e)\n", name.c_str(),
                    ok ? "pass" : "FAIL", measured, threshold);
    };

    for (const std::string& check : s.cfg.checks) {
        if (check == "kappa-closed-forms") {
            double m = std::max(std::abs(kappa(1.0) - 0.5), std::abs(kappa(0.5) - 1.0));
            record(check, m <= 1e-12, m, 1e-12);
        } else if (check == "merge-minmax") {
            std::mt19937_64 rng(s.cfg.seed);
            std::uniform_real_distribution<double> uni(0.0, 1.0);
            double worst = 0.0;
            for (int trial = 0; trial < 50; ++trial) {
                DistanceSeries a, b;
                a.side = DistanceSide::plus;
                b.side = DistanceSide::minus;
                for (int i = 0; i < 40; ++i) a.values.push_back(uni(rng));
                for (int i = 0; i < 40; ++i) b.values.push_back(uni(rng));
                std::sort(a.values.rbegin(), a.values.rend());
                std::sort(b.values.rbegin(), b.values.rend());
                a.converged_count = 40;
                b.converged_count = 40;
                DistanceSeries m = merge(a, b);
                for (std::size_t n = 0; n < m.values.size(); ++n) {
                    double best = 1e300;
                    for (std::size_t np = 0; np <= n; ++np) {
                        std::size_t nm = n - np;
                        double vp = np < a.values.size() ? a.values[np] : 0.0;
                        double vm = nm < b.values.size() ? b.values[nm] : 0.0;
                        if (np < a.values.size() || nm < b.values.size())
                            best = std::min(best, std::max(vp, vm));
                    }
                    worst = std::max(worst, std::abs(m.values[n] - best));
                }
            }
            record(check, worst == 0.0, worst, 0.0);
        } else if (check == "rank-one") {
            FourierSeries geo;
            for (int j = 0; j < 511; ++j) geo.values.push_back({std::pow(0.5, j), 0.0});
            auto sv = singular_values_iterative(HankelOperator(geo, 256), 2, 1e-12);
            double m = std::max(std::abs(sv.values[0] - 4.0 / 3.0), sv.values[1]);
            record(check, m <= 1e-10, m, 1e-10);
        } else if (check == "matvec") {
            std::mt19937_64 rng(s.cfg.seed);
            std::normal_distribution<double> g;
            FourierSeries r;
            for (int j = 0; j < 1023; ++j) r.values.push_back({g(rng), g(rng)});
            HankelOperator op(r, 512);
            Eigen::VectorXcd x(512);
            for (int i = 0; i < 512; ++i) x[i] = std::complex<double>(g(rng), g(rng));
            double m = (op.matvec_fast(x) - op.matvec_naive(x)).norm() / op.matvec_naive(x).norm();
            record(check, m <= 1e-12, m, 1e-12);
        } else {
            std::fprintf(stderr, "error: unknown check \"%s\"\n", check.c_str());
            record(check, false, 0.0, 0.0);
        }
    }
    if (s.cfg.checks.empty())
        std::fprintf(stderr, "warning: empty check list, trivial pass\n");
    atomic_write(s.out_dir / "verify.json", results.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

int dispatch(const Session& s, const std::string& command) {
    if (command == "predict")
        cmd_predict(s);
    else if (command == "coeffs")
        cmd_coeffs(s);
    else if (command == "svd")
        cmd_svd(s);
    else if (command == "distance")
        cmd_distance(s);
    else if (command == "verify")
        return cmd_verify(s);
    else {
        std::fprintf(stderr, "error: unknown command \"%s\" in config\n", command.c_str());
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel singular values and BMO rational approximation distances"};
    std::string config_path, out_override, cache_override;
    int jobs = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    app.add_option("--config", config_path, "experiment config (JSON)")->required();
    app.add_option("--out", out_override, "output directory (overrides config)");
    app.add_option("--cache", cache_override, "cache directory (overrides config)");
    app.add_option("--jobs", jobs, "worker threads for series evaluation");
    app.add_option("--seed", seed, "iterative solver seed (overrides config)")
        ->each([&](const std::string&) { seed_set = true; });
    for (const char* name : {"predict", "coeffs", "svd", "distance", "verify"})
        app.add_subcommand(name)->fallthrough();
    app.require_subcommand(0, 5);
    CLI11_PARSE(app, argc, argv);

    try {
        Session s;
        s.cfg = load_config(config_path);
        if (!out_override.empty()) s.cfg.out_dir = out_override;
        if (!cache_override.empty()) s.cfg.cache_dir = cache_override;
        if (seed_set) s.cfg.seed = seed;
        s.out_dir = s.cfg.out_dir;
        if (!s.cfg.cache_dir.empty()) {
            s.cache_dir = s.cfg.cache_dir;
        } else if (const char* env = std::getenv("RATLOG_CACHE")) {
            s.cache_dir = env;
        }
        s.policy.crossover = s.cfg.crossover;
        s.policy.jobs = jobs;

        std::vector<std::string> commands;
        for (const auto* sub : app.get_subcommands()) commands.push_back(sub->get_name());
        if (commands.empty()) commands = s.cfg.commands;
        if (commands.empty()) {
            std::fprintf(stderr, "error: no command given and config lists none\n");
            return 2;
        }
        for (const std::string& c : commands)
            if (int rc = dispatch(s, c)) return rc;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
