#include "adsq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <thread>

#include "adsq/analytic.hpp"
#include "adsq/dynamics.hpp"
#include "adsq/ed.hpp"
#include "adsq/ff.hpp"
#include "adsq/io.hpp"
#include "adsq/render.hpp"
#include "adsq/rng.hpp"
#include "adsq/spectral.hpp"

namespace adsq {
namespace {

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
    throw std::invalid_argument("config key '" + key + "': " + why);
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        bad_key(key, "wrong type");
    }
}

Geometry geometry_from(const json& config) {
    json g = config.value("geometry", json::object());
    int N = get_or<int>(g, "N", 12);
    double a = get_or<double>(g, "a", 1.0);
    double L = get_or<double>(g, "L", 1.0);
    double rh = get_or<double>(g, "r_h", 0.0);
    try {
        return Geometry(N, a, L, rh);
    } catch (const std::invalid_argument& e) {
        bad_key("geometry", e.what());
    }
}

ModelParams params_from(const json& config) {
    json m = config.value("model", json::object());
    ModelParams p;
    p.mass = get_or<double>(m, "m", 0.0);
    p.chem_potential = get_or<double>(m, "mu", 0.0);
    p.disorder_width = get_or<double>(m, "W", 0.0);
    p.disorder_weighted = get_or<bool>(m, "weighted_disorder", false);
    p.seed = get_or<std::uint64_t>(m, "seed", 1);
    std::string rs = get_or<std::string>(m, "redshift", "raw");
    if (rs == "raw")
        p.redshift_mode = RedshiftMode::Raw;
    else if (rs == "effective")
        p.redshift_mode = RedshiftMode::Effective;
    else
        bad_key("model.redshift", "must be 'raw' or 'effective'");
    std::string sc = get_or<std::string>(m, "scaling", "scaled");
    if (sc == "scaled")
        p.scaling = FieldScaling::Scaled;
    else if (sc == "unscaled")
        p.scaling = FieldScaling::Unscaled;
    else
        bad_key("model.scaling", "must be 'scaled' or 'unscaled'");
    p.chiral_radius_weight = get_or<bool>(m, "chiral_radius_weight", false);
    if (p.disorder_width < 0) bad_key("model.W", "must be >= 0");
    return p;
}

// ed | ff | auto; 'auto' picks ff when every requested observable is
// free-fermion capable (all static experiments here are), else ed.
std::string resolve_engine(const json& config, const std::string& kind) {
    std::string engine = get_or<std::string>(config, "engine", "auto");
    if (engine != "ed" && engine != "ff" && engine != "auto")
        bad_key("engine", "must be 'ed', 'ff' or 'auto'");
    if (engine == "auto") {
        bool ed_only = kind == "current" || kind == "otoc" || kind == "rstats" ||
                       kind == "quench" || kind == "spectrum";
        engine = ed_only ? "ed" : "ff";
    }
    return engine;
}

void check_ed_cap(const std::string& engine, int N) {
    if (engine == "ed" && N > kEdSiteCap)
        throw std::invalid_argument("ed engine refused: N=" + std::to_string(N) +
                                    " exceeds the cap of " + std::to_string(kEdSiteCap));
}

void parallel_for(int total, int threads, const std::function<void(int)>& body) {
    threads = std::max(1, threads);
    if (threads == 1 || total < 2) {
        for (int i = 0; i < total; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<double> grid(const json& sweep, const std::string& axis, double lo_def,
                         double hi_def, int pts_def) {
    double lo = get_or<double>(sweep, axis + "_min", lo_def);
    double hi = get_or<double>(sweep, axis + "_max", hi_def);
    int pts = get_or<int>(sweep, axis + "_points", pts_def);
    if (pts < 1) bad_key("sweep." + axis + "_points", "must be >= 1");
    return linspace(lo, hi, pts);
}

struct StaticPoint {
    double E0, E1, gap, q_flat, q_weighted, s_half;
};

StaticPoint static_observables_ff(const Geometry& geom, const ModelParams& p) {
    ModeBasis modes = diagonalize_modes(build_single_particle(geom, p));
    Eigen::MatrixXcd C = correlation_matrix(modes);
    ChargeProfiles prof = charge_profiles(C, geom);
    StaticPoint out;
    out.E0 = ground_energy(modes);
    out.E1 = first_excited_energy(modes);
    out.gap = out.E1 - out.E0;
    out.q_flat = prof.flat.sum();
    out.q_weighted = prof.weighted.sum();
    out.s_half = entanglement_from_correlation(C, geom.num_sites() / 2);
    return out;
}

StaticPoint static_observables_ed(const Geometry& geom, const ModelParams& p) {
    PauliSum H = build_spin_hamiltonian(geom, p);
    GroundResult g = ground_and_first_excited(H, geom.num_sites(), geom.spacing());
    auto sectors = enumerate_sectors(geom.num_sites(), geom.spacing());
    Eigen::VectorXcd full = embed(g.ground, sectors[g.sector0], geom.num_sites());
    StaticPoint out;
    out.E0 = g.E0;
    out.E1 = g.E1;
    out.gap = g.E1 - g.E0;
    out.q_flat = expectation(full, operator_q_flat(geom));
    out.q_weighted = expectation(full, operator_q_weighted(geom));
    out.s_half = entanglement_entropy(full, geom.num_sites(), geom.num_sites() / 2);
    return out;
}

// --- experiment bodies ----------------------------------------------------

CsvTable exp_heatmap(const json& config, int threads, bool gap_only) {
    Geometry geom = geometry_from(config);
    ModelParams base = params_from(config);
    std::string engine = resolve_engine(config, "heatmap");
    check_ed_cap(engine, geom.num_sites());
    json sweep = config.value("sweep", json::object());
    std::vector<double> ms = grid(sweep, "m", -10, 10, 41);
    std::vector<double> mus = grid(sweep, "mu", -10, 10, 41);

    CsvTable t;
    if (gap_only)
        t.columns = {"m", "mu", "gap", "gap_continuum"};
    else
        t.columns = {"m", "mu", "E0", "E1", "gap", "q_flat", "q_weighted", "s_ee_half"};
    const int total = static_cast<int>(ms.size() * mus.size());
    t.rows.resize(total);
    parallel_for(total, threads, [&](int idx) {
        double m = ms[idx / mus.size()];
        double mu = mus[idx % mus.size()];
        ModelParams p = base;
        p.mass = m;
        p.chem_potential = mu;
        StaticPoint sp = engine == "ff" ? static_observables_ff(geom, p)
                                        : static_observables_ed(geom, p);
        if (gap_only)
            t.rows[idx] = {m, mu, sp.gap, analytic::gap_continuum(m, mu)};
        else
            t.rows[idx] = {m, mu, sp.E0, sp.E1, sp.gap, sp.q_flat, sp.q_weighted, sp.s_half};
    });
    return t;
}

CsvTable exp_ee(const json& config) {
    Geometry geom = geometry_from(config);
    ModelParams base = params_from(config);
    json sweep = config.value("sweep", json::object());
    std::vector<double> masses = get_or<std::vector<double>>(sweep, "masses", {0.0, 1.0, 10.0, 100.0});

    CsvTable t;
    t.columns = {"l"};
    for (double m : masses) t.columns.push_back("S_m" + format_real(m));
    const int N = geom.num_sites();
    for (int l = 1; l < N; ++l) t.rows.push_back({static_cast<double>(l)});
    for (double m : masses) {
        ModelParams p = base;
        p.mass = m;
        Eigen::MatrixXcd C = correlation_matrix(diagonalize_modes(build_single_particle(geom, p)));
        for (int l = 1; l < N; ++l) t.rows[l - 1].push_back(entanglement_from_correlation(C, l));
    }
    return t;
}

CsvTable exp_chirality(const json& config) {
    ModelParams base = params_from(config);
    json g = config.value("geometry", json::object());
    double a = get_or<double>(g, "a", 1.0), L = get_or<double>(g, "L", 1.0);
    double rh = get_or<double>(g, "r_h", 0.0);
    json sweep = config.value("sweep", json::object());
    std::vector<int> Ns = get_or<std::vector<int>>(sweep, "N_values", {20, 40, 80, 160});

    CsvTable t;
    t.columns = {"N", "kappa_mean", "chi_mean", "chi_max_abs"};
    for (int N : Ns) {
        Geometry geom(N, a, L, rh);
        Eigen::MatrixXcd C =
            correlation_matrix(diagonalize_modes(build_single_particle(geom, base)));
        double ksum = 0.0;
        for (int i = 1; i < N; ++i) ksum += kappa_expectation(C, i);
        double csum = 0.0, cmax = 0.0;
        for (int i = 1; i <= N - 2; ++i) {
            double c = chi_expectation(C, i);
            csum += c;
            cmax = std::max(cmax, std::abs(c));
        }
        t.rows.push_back({static_cast<double>(N), ksum / (N - 1), csum / (N - 2), cmax});
    }
    return t;
}

CsvTable exp_current(const json& config) {
    Geometry geom = geometry_from(config);
    check_ed_cap("ed", geom.num_sites());
    ModelParams p = params_from(config);
    json sweep = config.value("sweep", json::object());
    double tmax = get_or<double>(sweep, "t_max", 50.0);
    int tpts = get_or<int>(sweep, "t_points", 500);
    bool weighted = get_or<bool>(sweep, "weighted", false);
    std::string init = get_or<std::string>(sweep, "initial", "mu-quench");
    QuenchInitialState st;
    if (init == "mu-quench")
        st = QuenchInitialState::GroundOfMuZero;
    else if (init == "ground")
        st = QuenchInitialState::Ground;
    else if (init == "neel")
        st = QuenchInitialState::Neel;
    else
        bad_key("sweep.initial", "must be 'mu-quench', 'ground' or 'neel'");

    Series s = current_evolution(geom, p, linspace(0, tmax, tpts), weighted, st);
    CsvTable t;
    t.columns = {"t", weighted ? "J_weighted" : "J"};
    for (std::size_t i = 0; i < s.times.size(); ++i) t.rows.push_back({s.times[i], s.values[i]});
    return t;
}

CsvTable exp_otoc(const json& config) {
    Geometry geom = geometry_from(config);
    check_ed_cap("ed", geom.num_sites());
    ModelParams p = params_from(config);
    json sweep = config.value("sweep", json::object());
    double tmax = get_or<double>(sweep, "t_max", 20.0);
    int tpts = get_or<int>(sweep, "t_points", 201);
    int i = get_or<int>(sweep, "i", 4);
    int j = get_or<int>(sweep, "j", 8);
    std::string state = get_or<std::string>(sweep, "state", "neel");
    OtocState ref;
    if (state == "ground")
        ref = OtocState::Ground;
    else if (state == "neel")
        ref = OtocState::Neel;
    else if (state == "infinite-temperature")
        ref = OtocState::InfiniteTemperature;
    else
        bad_key("sweep.state", "must be 'ground', 'neel' or 'infinite-temperature'");

    std::vector<double> times = linspace(0, tmax, tpts);
    PauliSum H = build_spin_hamiltonian(geom, p);
    auto series = otoc(H, geom.num_sites(), i, j, times, ref, geom.spacing());
    CsvTable t;
    t.columns = {"t", "re_C", "im_C"};
    for (std::size_t k = 0; k < times.size(); ++k)
        t.rows.push_back({times[k], series[k].real(), series[k].imag()});
    return t;
}

CsvTable exp_rstats(const json& config) {
    json g = config.value("geometry", json::object());
    int N = get_or<int>(g, "N", 12);
    double a = get_or<double>(g, "a", 1.0), L = get_or<double>(g, "L", 1.0);
    check_ed_cap("ed", N);
    ModelParams base = params_from(config);
    json sweep = config.value("sweep", json::object());
    json points = sweep.value("points", json::array());
    if (points.empty())
        points = json::array({{{"r_h", get_or<double>(g, "r_h", 1.0)}, {"m", base.mass}}});
    int degree = get_or<int>(sweep, "unfold_degree", 6);
    int min_levels = get_or<int>(sweep, "min_levels", 10);

    CsvTable t;
    t.columns = {"r_h", "m", "mean_r", "beta", "p0"};
    for (const auto& pt : points) {
        double rh = get_or<double>(pt, "r_h", 1.0);
        double m = get_or<double>(pt, "m", 0.0);
        Geometry geom(N, a, L, rh);
        ModelParams p = base;
        p.mass = m;
        SpectrumResult spec = eigensolve(build_spin_hamiltonian(geom, p), N, a);
        RStats rs = r_statistics(spec, degree, min_levels);

        // pooled per-sector spacings for the Brody fit / zero-spacing fraction
        std::map<double, std::vector<double>> by_q;
        for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
            by_q[spec.sector_labels[static_cast<std::size_t>(i)]].push_back(spec.eigenvalues[i]);
        std::vector<double> unf_spacings, raw_spacings;
        for (auto& [q, lv] : by_q) {
            std::sort(lv.begin(), lv.end());
            for (std::size_t i = 1; i < lv.size(); ++i) raw_spacings.push_back(lv[i] - lv[i - 1]);
            if (static_cast<int>(lv.size()) < min_levels) continue;
            auto u = unfold(lv, std::min<int>(degree, static_cast<int>(lv.size()) - 2)).unfolded;
            for (std::size_t i = 1; i < u.size(); ++i) unf_spacings.push_back(u[i] - u[i - 1]);
        }
        BrodyFit bf = brody_fit(unf_spacings);
        t.rows.push_back({rh, m, rs.weighted_mean, bf.beta,
                          delta_of_zero_spacing_fraction(raw_spacings)});
    }
    return t;
}

struct QuenchFiles {
    CsvTable summary;
    std::vector<std::pair<std::string, CsvTable>> samples;
    json frozen;
};

QuenchFiles exp_quench(const json& config) {
    Geometry geom = geometry_from(config);
    check_ed_cap("ed", geom.num_sites());
    ModelParams p = params_from(config);
    json sweep = config.value("sweep", json::object());
    std::vector<double> Ws = get_or<std::vector<double>>(sweep, "W_values", {0.4, 5.0});
    int nsamp = get_or<int>(sweep, "n_samples", 100);
    double tmax = get_or<double>(sweep, "t_max", 50.0);
    int tpts = get_or<int>(sweep, "t_points", 200);
    bool weighted = get_or<bool>(sweep, "weighted", false);
    double tail = get_or<double>(sweep, "tail_fraction", 0.4);
    std::vector<double> times = linspace(0, tmax, tpts);

    QuenchFiles out;
    out.summary.columns = {"t"};
    for (double W : Ws) {
        out.summary.columns.push_back("mean_W" + format_real(W));
        out.summary.columns.push_back("std_W" + format_real(W));
    }
    for (double t : times) out.summary.rows.push_back({t});
    out.frozen = json::array();
    for (double W : Ws) {
        QuenchSeries qs = quench_imbalance(geom, p, W, nsamp, times, weighted);
        for (int it = 0; it < tpts; ++it) {
            out.summary.rows[it].push_back(qs.mean[it]);
            out.summary.rows[it].push_back(qs.stddev[it]);
        }
        FrozenMemory fm = frozen_memory(qs, tail);
        out.frozen.push_back({{"W", W},
                              {"I_inf", fm.value},
                              {"std_error", fm.std_error},
                              {"window", {fm.t1, fm.t2}}});
        CsvTable per;
        per.columns = {"t"};
        for (int s = 0; s < nsamp; ++s) per.columns.push_back("sample_" + std::to_string(s));
        for (int it = 0; it < tpts; ++it) {
            std::vector<double> row{times[static_cast<std::size_t>(it)]};
            for (int s = 0; s < nsamp; ++s) row.push_back(qs.per_sample(s, it));
            per.rows.push_back(std::move(row));
        }
        out.samples.push_back({"samples_W" + format_real(W), std::move(per)});
    }
    return out;
}

CsvTable exp_continuum(const json& config) {
    json g = config.value("geometry", json::object());
    double L = get_or<double>(g, "L", 1.0);
    double rh = get_or<double>(g, "r_h", 10.0);
    ModelParams p = params_from(config);
    json sweep = config.value("sweep", json::object());
    std::vector<int> Ns = get_or<std::vector<int>>(sweep, "N_values", {64, 144, 256});

    CsvTable t;
    t.columns = {"N", "a", "Q_weighted", "aQ_per_length"};
    for (int N : Ns) {
        double a = 1.0 / std::sqrt(static_cast<double>(N));  // continuum-limit spacing
        Geometry geom(N, a, L, rh);
        Eigen::MatrixXcd C = correlation_matrix(diagonalize_modes(build_single_particle(geom, p)));
        double Q = charge_profiles(C, geom).weighted.sum();
        t.rows.push_back({static_cast<double>(N), a, Q, a * Q / N});
    }
    return t;
}

CsvTable exp_spectrum(const json& config) {
    Geometry geom = geometry_from(config);
    check_ed_cap("ed", geom.num_sites());
    SpectrumResult spec = eigensolve(build_spin_hamiltonian(geom, params_from(config)),
                                     geom.num_sites(), geom.spacing());
    CsvTable t;
    t.columns = {"energy", "q"};
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
        t.rows.push_back({spec.eigenvalues[i], spec.sector_labels[static_cast<std::size_t>(i)]});
    return t;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig-e0-heatmap", "fig-gap",   "fig-ee-mass-scan", "fig-chirality-n", "fig-otoc",
            "fig-rstats",     "fig-mbl-flat", "fig-mbl-weighted", "fig-continuum"};
}

json preset_config(const std::string& name) {
    json c;
    c["name"] = name;
    if (name == "fig-e0-heatmap") {
        c["experiment"] = "heatmap";
        c["geometry"] = {{"N", 12}, {"a", 1.0}, {"L", 1.0}, {"r_h", 1.0}};
        c["model"] = {{"m", 0.0}, {"mu", 0.0}};
        c["sweep"] = {{"m_min", -10.0}, {"m_max", 10.0}, {"m_points", 41},
                      {"mu_min", -10.0}, {"mu_max", 10.0}, {"mu_points", 41}};
        c["engine"] = "ff";
        c["render"] = "heatmap";
    } else if (name == "fig-gap") {
        c["experiment"] = "gap";
        c["geometry"] = {{"N", 12}, {"a", 1.0}, {"L", 1.0}, {"r_h", 0.0}};
        c["sweep"] = {{"m_min", -10.0}, {"m_max", 10.0}, {"m_points", 41},
                      {"mu_min", -10.0}, {"mu_max", 10.0}, {"mu_points", 41}};
        c["engine"] = "ff";
        c["render"] = "heatmap";
    } else if (name == "fig-ee-mass-scan") {
        c["experiment"] = "ee";
        c["geometry"] = {{"N", 20}, {"a", 1.0}, {"L", 1.0}, {"r_h", 1.0}};
        c["sweep"] = {{"masses", {0.0, 1.0, 10.0, 100.0}}};
        c["engine"] = "ff";
        c["render"] = "line";
    } else if (name == "fig-chirality-n") {
        c["experiment"] = "chirality";
        c["geometry"] = {{"a", 1.0}, {"L", 1.0}, {"r_h", 0.0}};
        c["model"] = {{"m", 0.0}, {"mu", 0.1}};
        c["sweep"] = {{"N_values", {20, 40, 80, 160, 320}}};
        c["engine"] = "ff";
    } else if (name == "fig-otoc") {
        c["experiment"] = "otoc";
        c["geometry"] = {{"N", 12}, {"a", 1.0}, {"L", 1.0}, {"r_h", 2.0}};
        c["model"] = {{"m", 0.5}, {"mu", 0.1}, {"redshift", "effective"}};
        c["sweep"] = {{"t_max", 20.0}, {"t_points", 201}, {"i", 4}, {"j", 8}, {"state", "neel"}};
        c["engine"] = "ed";
        c["render"] = "line";
    } else if (name == "fig-rstats") {
        c["experiment"] = "rstats";
        c["geometry"] = {{"N", 12}, {"a", 1.0}, {"L", 1.0}};
        c["model"] = {{"mu", 0.1}};
        c["sweep"] = {{"points", {{{"r_h", 1.0}, {"m", 0.0}}, {{"r_h", 1.0}, {"m", 0.5}},
                                  {{"r_h", 1.0}, {"m", 1.0}}, {{"r_h", 2.0}, {"m", 0.0}},
                                  {{"r_h", 2.0}, {"m", 0.5}}, {{"r_h", 2.0}, {"m", 1.0}}}},
                      {"unfold_degree", 6}, {"min_levels", 10}};
        c["engine"] = "ed";
    } else if (name == "fig-mbl-flat" || name == "fig-mbl-weighted") {
        c["experiment"] = "quench";
        c["geometry"] = {{"N", 10}, {"a", 1.0}, {"L", 1.0}, {"r_h", 1.0}};
        c["model"] = {{"m", 0.25}, {"mu", 0.1}, {"seed", 12345},
                      {"redshift", "effective"},
                      {"weighted_disorder", name == "fig-mbl-weighted"}};
        c["sweep"] = {{"W_values", {0.4, 5.0}}, {"n_samples", 100}, {"t_max", 50.0},
                      {"t_points", 200}, {"weighted", name == "fig-mbl-weighted"},
                      {"tail_fraction", 0.4}};
        c["engine"] = "ed";
        c["render"] = "line";
    } else if (name == "fig-continuum") {
        c["experiment"] = "continuum";
        c["geometry"] = {{"L", 1.0}, {"r_h", 10.0}};
        c["model"] = {{"m", 0.0}, {"mu", 0.0}};
        c["sweep"] = {{"N_values", {64, 144, 256}}};
        c["engine"] = "ff";
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return c;
}

RunOutput run_experiment(json config, const std::filesystem::path& outdir, int threads) {
    const auto t_start = std::chrono::steady_clock::now();
    std::string kind = get_or<std::string>(config, "experiment", "");
    if (kind.empty()) bad_key("experiment", "missing");
    std::string name = get_or<std::string>(config, "name", kind);
    std::filesystem::create_directories(outdir);

    RunOutput out;
    auto emit = [&](const std::string& stem, const CsvTable& table) {
        auto path = outdir / (stem + ".csv");
        write_csv(path, table);
        out.files.push_back(path);
        return path;
    };

    json frozen;
    if (kind == "heatmap" || kind == "gap") {
        emit(name, exp_heatmap(config, threads, kind == "gap"));
    } else if (kind == "ee") {
        emit(name, exp_ee(config));
    } else if (kind == "chirality") {
        emit(name, exp_chirality(config));
    } else if (kind == "current") {
        emit(name, exp_current(config));
    } else if (kind == "otoc") {
        emit(name, exp_otoc(config));
    } else if (kind == "rstats") {
        emit(name, exp_rstats(config));
    } else if (kind == "quench") {
        QuenchFiles q = exp_quench(config);
        emit(name, q.summary);
        for (const auto& [stem, table] : q.samples) emit(name + "_" + stem, table);
        frozen = q.frozen;
    } else if (kind == "continuum") {
        emit(name, exp_continuum(config));
    } else if (kind == "spectrum") {
        emit(name, exp_spectrum(config));
    } else if (kind == "validate") {
        int failures = run_validation(get_or<bool>(config, "quick", false));
        if (failures > 0)
            throw std::runtime_error(std::to_string(failures) + " validation check(s) failed");
    } else {
        bad_key("experiment", "unknown kind '" + kind + "'");
    }

    std::string render_kind = get_or<std::string>(config, "render", "");
    if (!render_kind.empty() && !out.files.empty()) {
        auto svg = outdir / (name + ".svg");
        render_svg(read_csv(out.files.front()), render_kind, svg);
        out.files.push_back(svg);
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    out.metadata = {{"config", config},
                    {"version", kVersion},
                    {"engine", config.contains("engine") ? config["engine"] : json("auto")},
                    {"threads", threads},
                    {"wall_seconds", wall}};
    if (!frozen.is_null()) out.metadata["frozen_memory"] = frozen;
    json files = json::array();
    for (const auto& f : out.files) files.push_back(f.filename().string());
    out.metadata["files"] = files;
    auto meta_path = outdir / (name + ".meta.json");
    std::ofstream meta(meta_path);
    meta << out.metadata.dump(2) << "\n";
    out.files.push_back(meta_path);
    return out;
}

int run_validation(bool quick) {
    int failures = 0;
    auto check = [&](const std::string& what, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
        if (!ok) ++failures;
    };

    // geometry basics
    {
        Geometry geom(10, 1.0, 1.0, 10.0);
        bool mono = true;
        for (int n = 1; n < 10; ++n) mono = mono && geom.redshift(n) < geom.redshift(n + 1);
        check("geometry: redshift strictly increasing", mono);
        Geometry scaled(10, 1.0, 2.0, 10.0);
        check("geometry: 1/L scaling",
              std::abs(scaled.redshift(3) - geom.redshift(3) / 2.0) < 1e-14);
    }

    // engine equivalence on random draws
    {
        std::vector<int> Ns = quick ? std::vector<int>{4, 6} : std::vector<int>{4, 6, 8, 10};
        int draws = quick ? 3 : 8;
        bool ok = true;
        CounterRng rng(42);
        std::uint64_t idx = 0;
        for (int N : Ns)
            for (int d = 0; d < draws && ok; ++d) {
                Geometry geom(N, 1.0, 1.0, std::floor(rng.uniform(idx++) * 3) * 2.0);
                ModelParams p;
                p.mass = 6.0 * rng.uniform(idx++) - 3.0;
                p.chem_potential = 6.0 * rng.uniform(idx++) - 3.0;
                GroundResult g = ground_and_first_excited(build_spin_hamiltonian(geom, p), N);
                ModeBasis modes = diagonalize_modes(build_single_particle(geom, p));
                double scale = std::max(1.0, std::abs(g.E0));
                ok = ok && std::abs(g.E0 - ground_energy(modes)) < 1e-9 * scale &&
                     std::abs(g.E1 - first_excited_energy(modes)) < 1e-9 * scale;
            }
        check("engines: ED vs free-fermion ground/first-excited energies", ok);
    }

    // spectrum symmetry under (m, mu) -> (-m, -mu)
    {
        Geometry geom(8, 1.0, 1.0, 1.0);
        ModelParams p;
        p.mass = 1.0;
        p.chem_potential = 0.3;
        PauliSum Hp = build_spin_hamiltonian(geom, p);
        p.mass = -1.0;
        p.chem_potential = -0.3;
        PauliSum Hm = build_spin_hamiltonian(geom, p);
        SpectrumResult sp = eigensolve(Hp, 8);
        SpectrumResult sm = eigensolve(Hm, 8);
        // the identity constant is odd under the map; compare reported energies
        check("model: spectrum symmetric under (m,mu) -> (-m,-mu)",
              ((sp.eigenvalues.array() - Hp.constant) - (sm.eigenvalues.array() - Hm.constant))
                      .abs()
                      .maxCoeff() < 1e-10);
    }

    // [H, Q_flat] = 0 on random states
    {
        int N = quick ? 8 : 10;
        Geometry geom(N, 1.0, 1.0, 1.0);
        ModelParams p;
        p.mass = 0.7;
        p.chem_potential = -0.4;
        PauliSum H = build_spin_hamiltonian(geom, p);
        PauliSum Q = operator_q_flat(geom);
        CounterRng rng(7);
        bool ok = true;
        for (int trial = 0; trial < (quick ? 3 : 10); ++trial) {
            Eigen::VectorXcd psi(Eigen::Index(1) << N);
            for (Eigen::Index i = 0; i < psi.size(); ++i)
                psi[i] = cdouble(rng.uniform(2 * (trial * psi.size() + i)) - 0.5,
                                 rng.uniform(2 * (trial * psi.size() + i) + 1) - 0.5);
            psi.normalize();
            Eigen::VectorXcd comm = apply_op(H, apply_op(Q, psi)) - apply_op(Q, apply_op(H, psi));
            ok = ok && comm.norm() < 1e-12 * std::pow(2.0, N);
        }
        check("model: [H, Q_flat] vanishes on random states", ok);
    }

    // free-fermion structure
    {
        Geometry geom(10, 1.0, 1.0, 1.0);
        ModelParams p;
        p.mass = 0.7;
        p.chem_potential = -0.3;
        ModeBasis modes = diagonalize_modes(build_single_particle(geom, p));
        Eigen::MatrixXcd C = correlation_matrix(modes);
        check("ff: correlation matrix is a projector",
              (C * C - C).cwiseAbs().maxCoeff() < 1e-10);
        check("ff: mode basis unitary",
              (modes.wavefunctions.adjoint() * modes.wavefunctions -
               Eigen::MatrixXcd::Identity(10, 10))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
    }

    // spectral statistics sanity
    {
        auto spacings = sample_poisson_spacings(quick ? 20000 : 100000, 11);
        double mean_r = 0.0;
        int cnt = 0;
        for (std::size_t i = 1; i < spacings.size(); ++i) {
            double lo = std::min(spacings[i - 1], spacings[i]);
            double hi = std::max(spacings[i - 1], spacings[i]);
            mean_r += lo / hi;
            ++cnt;
        }
        mean_r /= cnt;
        check("spectral: Poisson r-statistic near 2ln2-1", std::abs(mean_r - 0.386294) < 0.01);

        double norm = 0.0;
        const int steps = 200000;
        for (int i = 0; i < steps; ++i) {
            double s = (i + 0.5) * (20.0 / steps);
            norm += brody_pdf(0.35, s) * (20.0 / steps);
        }
        check("spectral: Brody density normalized", std::abs(norm - 1.0) < 1e-6);
    }

    // CSV round-trip
    {
        CsvTable t;
        t.columns = {"x", "y"};
        t.rows = {{0.1, -1.0 / 3.0}, {1e-17, 12345.678901234567}};
        auto tmp = std::filesystem::temp_directory_path() / "adsq_validate_roundtrip.csv";
        write_csv(tmp, t);
        CsvTable back = read_csv(tmp);
        bool ok = back.rows.size() == t.rows.size();
        for (std::size_t i = 0; ok && i < t.rows.size(); ++i)
            for (std::size_t j = 0; j < t.columns.size(); ++j)
                ok = ok && back.rows[i][j] == t.rows[i][j];
        std::filesystem::remove(tmp);
        check("io: CSV round-trips at full precision", ok);
    }

    std::cout << (failures == 0 ? "all checks passed" : "validation FAILED") << "\n";
    return failures;
}

}  // namespace adsq
