// Copyright 2026 The qcorr Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * qcorr command-line driver. Every subcommand runs a deterministic batch
 * experiment (seed-per-sample design, so --jobs never changes results),
 * writes plot-ready CSV/JSON artifacts into --out, and prints a JSON run
 * manifest to stdout. Exit codes: 0 success, 2 bad flags, 3 runtime or
 * numerical failure (diagnostic on stderr).
 */

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcorr/closed_forms.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/json_io.hpp"
#include "qcorr/measurements.hpp"
#include "qcorr/spin_models.hpp"
#include "qcorr/states.hpp"
#include "qcorr/stats.hpp"

namespace {

using nlohmann::json;
using namespace qcorr;

constexpr const char *kVersion = "1.0.0";

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return xs;
}

json versions_json() {
    json v;
    v["qcorr"] = kVersion;
    v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                 "." + std::to_string(EIGEN_MINOR_VERSION);
    v["cli11"] = std::to_string(CLI11_VERSION_MAJOR) + "." + std::to_string(CLI11_VERSION_MINOR) +
                 "." + std::to_string(CLI11_VERSION_PATCH);
    v["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                         std::to_string(NLOHMANN_JSON_VERSION_PATCH);
    return v;
}

// ---------------------------------------------------------------------------
// shared option groups

struct CommonOpts {
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    int jobs = 0;
    std::string out = ".";
};

void add_common(CLI::App *sub, CommonOpts &c) {
    sub->add_option("--seed", c.seed, "RNG seed (default 0)");
    sub->add_option("--samples", c.samples, "ensemble size (default 10000)");
    sub->add_option("--jobs", c.jobs, "worker threads; 0 = QCORR_JOBS env or hardware count");
    sub->add_option("--out", c.out, "output directory (default .)");
}

struct SetOpts {
    std::string set = "triad";
    double ftheta = 0.0;
    double phi = 0.0;
    double fcenter = 0.0;
    int n = 64;
    int n1 = 8;
    int n2 = 1;
};

void add_set_options(CLI::App *sub, SetOpts &s) {
    sub->add_option("--set", s.set, "measurement set: circle|circle-phi|disc|grid|triad")
        ->check(CLI::IsMember({"circle", "circle-phi", "disc", "grid", "triad"}));
    sub->add_option("--ftheta", s.ftheta, "circle latitude f_theta (set=circle)");
    sub->add_option("--phi", s.phi, "meridian azimuth (set=circle-phi)");
    sub->add_option("--fcenter", s.fcenter, "disc-stack center latitude (set=disc)");
    sub->add_option("--n", s.n, "points per circle (set=circle|circle-phi)");
    sub->add_option("--n1", s.n1, "latitude count (grid) / azimuths per disc (disc)");
    sub->add_option("--n2", s.n2, "azimuth count (grid) / odd disc count (disc)");
}

EarmarkedSet parse_set(const SetOpts &s, int dA) {
    if (s.set == "circle") {
        return circle_fixed_ftheta(s.ftheta, s.n);
    }
    if (s.set == "circle-phi") {
        return circle_fixed_phi(s.phi, s.n);
    }
    if (s.set == "disc") {
        return disc_stack(s.fcenter, s.n1, s.n2);
    }
    if (s.set == "grid") {
        return sphere_grid(s.n1, s.n2);
    }
    if (s.set == "triad") {
        return triad(dA);
    }
    throw OutOfRange("unknown set '" + s.set + "' (circle|circle-phi|disc|grid|triad)");
}

json set_params_json(const SetOpts &s) {
    json j;
    j["set"] = s.set;
    if (s.set == "circle") {
        j["ftheta"] = s.ftheta;
        j["n"] = s.n;
    } else if (s.set == "circle-phi") {
        j["phi"] = s.phi;
        j["n"] = s.n;
    } else if (s.set == "disc") {
        j["fcenter"] = s.fcenter;
        j["n1"] = s.n1;
        j["n2"] = s.n2;
    } else if (s.set == "grid") {
        j["n1"] = s.n1;
        j["n2"] = s.n2;
    }
    return j;
}

struct EnsembleOpts {
    std::string family = "haar";
    int da = 2;
    int db = 2;
    int rank = 4;
    std::string axis = "x";
    std::string ppt = "all";
};

void add_ensemble_options(CLI::App *sub, EnsembleOpts &e) {
    sub->add_option("--family", e.family, "state family: haar|correlator|rho-m")
        ->check(CLI::IsMember({"haar", "correlator", "rho-m"}));
    sub->add_option("--da", e.da, "subsystem A dimension (haar)");
    sub->add_option("--db", e.db, "subsystem B dimension (haar)");
    sub->add_option("--rank", e.rank, "state rank (haar)");
    sub->add_option("--axis", e.axis, "magnetization axis x|y|z (rho-m)")
        ->check(CLI::IsMember({"x", "y", "z"}));
    sub->add_option("--ppt", e.ppt, "post-sampling filter: all|ppt|nppt")
        ->check(CLI::IsMember({"all", "ppt", "nppt"}));
}

Axis parse_axis(const std::string &axis) {
    if (axis == "x") {
        return Axis::X;
    }
    if (axis == "y") {
        return Axis::Y;
    }
    if (axis == "z") {
        return Axis::Z;
    }
    throw OutOfRange("unknown axis '" + axis + "' (x|y|z)");
}

PptFilter parse_ppt(const std::string &ppt) {
    if (ppt == "all") {
        return PptFilter::All;
    }
    if (ppt == "ppt") {
        return PptFilter::Ppt;
    }
    if (ppt == "nppt") {
        return PptFilter::Nppt;
    }
    throw OutOfRange("unknown filter '" + ppt + "' (all|ppt|nppt)");
}

EnsembleSpec to_spec(const EnsembleOpts &e, const CommonOpts &c) {
    EnsembleSpec spec;
    if (e.family == "haar") {
        spec.family = EnsembleFamily::HaarMixed;
    } else if (e.family == "correlator") {
        spec.family = EnsembleFamily::Correlator;
    } else if (e.family == "rho-m") {
        spec.family = EnsembleFamily::Magnetized;
    } else {
        throw OutOfRange("unknown family '" + e.family + "' (haar|correlator|rho-m)");
    }
    spec.dA = e.da;
    spec.dB = e.db;
    spec.rank = e.rank;
    spec.axis = parse_axis(e.axis);
    spec.filter = parse_ppt(e.ppt);
    spec.samples = c.samples;
    spec.seed = c.seed;
    spec.jobs = c.jobs;
    return spec;
}

json ensemble_params_json(const EnsembleOpts &e) {
    return json{{"family", e.family}, {"da", e.da},     {"db", e.db},
                {"rank", e.rank},     {"axis", e.axis}, {"ppt", e.ppt}};
}

const char *ppt_name(PptClass c) { return c == PptClass::PPT ? "PPT" : "NPPT"; }

const char *branch_axis(int branch) {
    switch (branch) {
    case 0:
        return "z";
    case 1:
        return "x";
    default:
        return "y";
    }
}

// ---------------------------------------------------------------------------
// artifact plumbing

std::filesystem::path ensure_out(const std::string &out) {
    std::filesystem::path dir(out);
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
    }
    return dir;
}

std::string
write_artifact(const std::filesystem::path &dir, const std::string &name, const std::string &body,
               std::vector<std::string> &outputs) {
    const std::string path = (dir / name).string();
    write_text_file(path, body);
    outputs.push_back(path);
    return path;
}

void emit_manifest(const std::string &command, const json &parameters, const CommonOpts &c,
                   const std::vector<std::string> &outputs, const json &result,
                   std::chrono::steady_clock::time_point t0) {
    json m;
    m["command"] = command;
    m["parameters"] = parameters;
    m["seed"] = c.seed;
    m["samples"] = c.samples;
    m["jobs"] = resolve_jobs(c.jobs);
    m["versions"] = versions_json();
    m["outputs"] = outputs;
    if (!result.is_null()) {
        m["result"] = result;
    }
    const auto dt = std::chrono::steady_clock::now() - t0;
    m["wall_time_s"] = std::chrono::duration<double>(dt).count();
    std::cout << m.dump(2) << "\n";
}

json histogram_json(const BinnedDensity &h) {
    return json{{"edges", h.edges}, {"densities", h.densities}};
}

json error_stats_json(const ErrorStats &st, const std::string &ppt) {
    json j;
    j["samples"] = st.samples;
    j["mean"] = st.mean;
    j["std_error"] = st.std_error;
    j["max_ve"] = st.max_ve;
    j["rank"] = st.rank;
    j["ppt_class"] = ppt;
    j["histogram"] = histogram_json(st.histogram);
    return j;
}

// ---------------------------------------------------------------------------
// subcommands

void run_sample_errors(const CommonOpts &c, const EnsembleOpts &e, const SetOpts &s,
                       const std::string &measure_str) {
    const auto t0 = std::chrono::steady_clock::now();
    const EnsembleSpec spec = to_spec(e, c);
    const Measure measure = measure_from_name(measure_str);
    const EarmarkedSet set = parse_set(s, spec.family == EnsembleFamily::HaarMixed ? spec.dA : 2);
    std::cerr << "[qcorr] sampling " << spec.samples << " states ("
              << measure_name(measure) << ", " << set_kind_name(set.kind) << ", n=" << set.size()
              << ")\n";
    const std::vector<VeSample> records = sample_ve(spec, set, measure);
    const int rank = spec.family == EnsembleFamily::HaarMixed ? spec.rank : 0;
    const ErrorStats stats = summarize_ve(records, rank, spec.filter);

    std::ostringstream csv;
    csv << "sample_id,rank,ppt,measure,set_kind,n,ve\n";
    for (const auto &r : records) {
        csv << r.sample_id << ',' << r.rank << ',' << ppt_name(r.ppt) << ','
            << measure_name(measure) << ',' << set_kind_name(set.kind) << ',' << set.size() << ','
            << fmt(r.ve) << '\n';
    }

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "errors.csv", csv.str(), outputs);
    const json stats_json = error_stats_json(stats, e.ppt);
    write_artifact(dir, "error_stats.json", stats_json.dump(2) + "\n", outputs);

    json params = ensemble_params_json(e);
    params.update(set_params_json(s));
    params["measure"] = measure_str;
    json result;
    result["samples"] = stats.samples;
    result["mean_ve"] = stats.mean;
    result["std_error"] = stats.std_error;
    result["max_ve"] = stats.max_ve;
    emit_manifest("sample-errors", params, c, outputs, result, t0);
}

void run_fit_scaling(const CommonOpts &c, const EnsembleOpts &e, const std::string &measure_str,
                     const std::string &sweep_set, double ftheta, double phi,
                     const std::vector<int> &n_list, int n_dense) {
    const auto t0 = std::chrono::steady_clock::now();
    const EnsembleSpec spec = to_spec(e, c);
    const Measure measure = measure_from_name(measure_str);
    SweepSpec sweep;
    if (sweep_set == "circle") {
        sweep.kind = SweepKind::AzimuthCircle;
        sweep.fixed = ftheta;
        sweep.n_dense = n_dense > 0 ? n_dense : 4096;
    } else if (sweep_set == "circle-phi") {
        sweep.kind = SweepKind::MeridianCircle;
        sweep.fixed = phi;
        sweep.n_dense = n_dense > 0 ? n_dense : 4097;
    } else {
        throw OutOfRange("fit-scaling supports --set circle|circle-phi, got '" + sweep_set + "'");
    }
    sweep.n_list = n_list;
    std::cerr << "[qcorr] nested sweep over " << spec.samples << " states, dense n="
              << sweep.n_dense << "\n";
    const std::vector<SweepSample> records = circle_scaling_sweep(spec, sweep);
    if (records.size() < 100) {
        throw InsufficientSamples("sweep kept " + std::to_string(records.size()) + " states");
    }

    // The power law lives in the number of equal divisions of the spanning
    // parameter: n azimuths divide the full circle into n arcs, while n
    // inclusive meridian points divide [-1, 1] into n - 1 intervals.
    const int abscissa_shift = sweep.kind == SweepKind::MeridianCircle ? 1 : 0;
    const auto n = static_cast<double>(records.size());
    std::vector<std::pair<double, double>> points;
    std::vector<int> abscissae;
    std::ostringstream csv;
    csv << "n,mean_ve,stderr\n";
    for (std::size_t k = 0; k < sweep.n_list.size(); ++k) {
        double sum = 0;
        for (const auto &r : records) {
            sum += (measure == Measure::QD ? r.ve_qd[k] : r.ve_qwd[k]);
        }
        const double mean = sum / n;
        double ss = 0;
        for (const auto &r : records) {
            const double v = (measure == Measure::QD ? r.ve_qd[k] : r.ve_qwd[k]) - mean;
            ss += v * v;
        }
        const double se = records.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
        csv << sweep.n_list[k] << ',' << fmt(mean) << ',' << fmt(se) << '\n';
        abscissae.push_back(sweep.n_list[k] - abscissa_shift);
        points.emplace_back(static_cast<double>(abscissae.back()), mean);
    }
    double eps_inf = 0;
    for (const auto &r : records) {
        eps_inf += (measure == Measure::QD ? r.ve_inf_qd : r.ve_inf_qwd);
    }
    eps_inf /= n;

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "scaling.csv", csv.str(), outputs);

    const PowerLawFit fit = fit_power_law(points, eps_inf);
    json fit_json;
    fit_json["kappa"] = fit.kappa;
    fit_json["tau"] = fit.tau;
    fit_json["eps_inf"] = fit.eps_inf;
    fit_json["kappa_err"] = fit.kappa_err;
    fit_json["tau_err"] = fit.tau_err;
    fit_json["residual_se"] = fit.residual_se;
    fit_json["flagged"] = fit.flagged;
    fit_json["kept_samples"] = records.size();
    fit_json["fit_abscissae"] = abscissae;
    write_artifact(dir, "fit.json", fit_json.dump(2) + "\n", outputs);

    json params = ensemble_params_json(e);
    params["measure"] = measure_str;
    params["set"] = sweep_set;
    params["ftheta"] = ftheta;
    params["phi"] = phi;
    params["n_list"] = n_list;
    params["n_dense"] = sweep.n_dense;
    emit_manifest("fit-scaling", params, c, outputs, fit_json, t0);
}

void run_landscape(const CommonOpts &c, const EnsembleOpts &e, const std::string &measure_str,
                   int bins_f, int bins_phi) {
    const auto t0 = std::chrono::steady_clock::now();
    const EnsembleSpec spec = to_spec(e, c);
    const Measure measure = measure_from_name(measure_str);
    std::cerr << "[qcorr] locating optimizers for " << spec.samples << " states\n";
    const Landscape ls = optimizer_landscape(spec, measure, bins_f, bins_phi);
    const RegionFractions regions = region_fractions(ls);

    std::ostringstream csv;
    csv << "f_theta_bin,phi_bin,density\n";
    for (int bf = 0; bf < ls.bins_f; ++bf) {
        for (int bp = 0; bp < ls.bins_phi; ++bp) {
            csv << bf << ',' << bp << ',' << fmt(ls.density(bf, bp)) << '\n';
        }
    }

    json summary;
    summary["samples"] = ls.optimizers.size();
    summary["bins_f"] = ls.bins_f;
    summary["bins_phi"] = ls.bins_phi;
    summary["f_edges"] = ls.f_edges;
    summary["phi_edges"] = ls.phi_edges;
    summary["marginal_f"] = ls.marginal_f;
    summary["marginal_phi"] = ls.marginal_phi;
    summary["region_fractions"] = ls.optimizers.empty() ? json::array()
                                                        : json(regions.region);
    summary["region_total"] = regions.total;

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "landscape.csv", csv.str(), outputs);
    write_artifact(dir, "landscape.json", summary.dump(2) + "\n", outputs);

    json params = ensemble_params_json(e);
    params["measure"] = measure_str;
    params["bins_f"] = bins_f;
    params["bins_phi"] = bins_phi;
    json result;
    result["samples"] = ls.optimizers.size();
    result["region_total"] = regions.total;
    emit_manifest("landscape", params, c, outputs, result, t0);
}

void run_xstate_eval(const CommonOpts &c, double a1, double a2, double a3, double a4, double b1,
                     double b2) {
    const auto t0 = std::chrono::steady_clock::now();
    const XStateParams p{a1, a2, a3, a4, b1, b2};
    const BipartiteDensityMatrix rho = make_x_state(p);
    const ClosedFormValue cqd = x_state_cqd_detail(p);
    const ClosedFormValue cqwd = x_state_cqwd_detail(p);
    const StateContext ctx(rho);
    const EarmarkedSet set = triad(2);
    const CorrelationEval tqd = constrained_min(ctx, set, Measure::QD);
    const CorrelationEval tqwd = constrained_min(ctx, set, Measure::QWD);
    const auto [rqd, rqwd] = reference_min_both(ctx);

    json doc;
    doc["params"] = {{"a1", a1}, {"a2", a2}, {"a3", a3}, {"a4", a4}, {"b1", b1}, {"b2", b2}};
    doc["closed_form"] = {
        {"cqd", {{"value", cqd.value}, {"branch", branch_axis(cqd.branch)}}},
        {"cqwd", {{"value", cqwd.value}, {"branch", branch_axis(cqwd.branch)}}},
    };
    doc["triad"] = {{"qd", tqd.value_constrained.value()}, {"qwd", tqwd.value_constrained.value()}};
    doc["reference"] = {{"qd", rqd.value_actual.value()}, {"qwd", rqwd.value_actual.value()}};
    doc["ve"] = {{"qd", std::abs(cqd.value - rqd.value_actual.value())},
                 {"qwd", std::abs(cqwd.value - rqwd.value_actual.value())}};

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "xstate.json", doc.dump(2) + "\n", outputs);
    emit_manifest("xstate-eval", doc["params"], c, outputs, doc, t0);
}

void run_spin_scan(const CommonOpts &c, double g, const std::vector<int> &l_list,
                   const std::string &measure_str, double lambda_min, double lambda_max,
                   int lambda_points, bool fixed_grid) {
    const auto t0 = std::chrono::steady_clock::now();
    const Measure measure = measure_from_name(measure_str);
    const std::vector<double> grid = linspace(lambda_min, lambda_max, lambda_points);

    std::ostringstream scan_csv;
    scan_csv << "L,lambda,Q,dQ_dlambda\n";
    std::ostringstream peaks_csv;
    peaks_csv << "L,lambda_cL\n";
    std::vector<std::pair<double, double>> peaks;
    for (const int L : l_list) {
        std::cerr << "[qcorr] scanning L=" << L << "\n";
        const QptScan scan = qpt_scan(g, L, grid, measure);
        for (const auto &pt : scan.curve) {
            scan_csv << L << ',' << fmt(pt.lam) << ',' << fmt(pt.q) << ',' << fmt(pt.dq_dlam)
                     << '\n';
        }
        const double peak = fixed_grid ? scan.lambda_cL : qpt_peak(g, L, measure);
        peaks_csv << L << ',' << fmt(peak) << '\n';
        peaks.emplace_back(static_cast<double>(L), peak);
    }

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "spin_scan.csv", scan_csv.str(), outputs);
    write_artifact(dir, "spin_peaks.csv", peaks_csv.str(), outputs);

    json result;
    result["peaks"] = json::array();
    for (const auto &[L, peak] : peaks) {
        result["peaks"].push_back({{"L", static_cast<int>(L)}, {"lambda_cL", peak}});
    }
    if (peaks.size() >= 4) {
        const FiniteSizeFit fit = finite_size_fit(peaks);
        json fit_json = {{"alpha", fit.alpha},
                         {"gamma", fit.gamma},
                         {"alpha_err", fit.alpha_err},
                         {"gamma_err", fit.gamma_err}};
        write_artifact(dir, "spin_fit.json", fit_json.dump(2) + "\n", outputs);
        result["fit"] = fit_json;
    }

    json params;
    params["g"] = g;
    params["L_list"] = l_list;
    params["measure"] = measure_str;
    params["lambda_min"] = lambda_min;
    params["lambda_max"] = lambda_max;
    params["lambda_points"] = lambda_points;
    params["fixed_grid"] = fixed_grid;
    emit_manifest("spin-scan", params, c, outputs, result, t0);
}

void run_thermal_scan(const CommonOpts &c, double g, double betaj, double h_max, double h_step,
                      const std::string &measure_str, const SetOpts &s) {
    const auto t0 = std::chrono::steady_clock::now();
    const Measure measure = measure_from_name(measure_str);
    const EarmarkedSet set = parse_set(s, 2);
    const auto steps = static_cast<int>(std::llround(2.0 * h_max / h_step));
    std::cerr << "[qcorr] thermal grid " << (steps + 1) << "x" << (steps + 1) << "\n";

    std::ostringstream csv;
    csv << "h1,h2,constrained,actual,ve\n";
    double max_ve = -1.0;
    double max_h1 = 0;
    double max_h2 = 0;
    for (int i = 0; i <= steps; ++i) {
        const double h1 = -h_max + i * h_step;
        for (int j = 0; j <= steps; ++j) {
            const double h2 = -h_max + j * h_step;
            const XStateParams xp = thermal_two_qubit({g, h1, h2, betaj});
            const StateContext ctx(make_x_state(xp));
            const double constrained = constrained_min(ctx, set, measure).value_constrained.value();
            const double actual = reference_min(ctx, measure).value_actual.value();
            const double ve = std::abs(constrained - actual);
            csv << fmt(h1) << ',' << fmt(h2) << ',' << fmt(constrained) << ',' << fmt(actual)
                << ',' << fmt(ve) << '\n';
            if (ve > max_ve) {
                max_ve = ve;
                max_h1 = h1;
                max_h2 = h2;
            }
        }
    }

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "thermal.csv", csv.str(), outputs);
    json result;
    result["max_ve"] = max_ve;
    result["at"] = {{"h1", max_h1}, {"h2", max_h2}};
    write_artifact(dir, "thermal.json", result.dump(2) + "\n", outputs);

    json params = set_params_json(s);
    params["g"] = g;
    params["betaj"] = betaj;
    params["h_max"] = h_max;
    params["h_step"] = h_step;
    params["measure"] = measure_str;
    emit_manifest("thermal-scan", params, c, outputs, result, t0);
}

void run_be_sweep(const CommonOpts &c, const std::string &state, const std::string &measure_str,
                  double step, bool b_side, double onset_threshold) {
    const auto t0 = std::chrono::steady_clock::now();
    const Measure measure = measure_from_name(measure_str);
    double hi = 1.0;
    if (state == "horodecki") {
        hi = 5.0;
    } else if (state != "be24" && state != "be33") {
        throw OutOfRange("unknown state family '" + state + "' (be24|be33|horodecki)");
    }
    const auto steps = static_cast<int>(std::llround(hi / step));
    std::cerr << "[qcorr] sweeping " << state << (b_side ? " (B side)" : "") << ", "
              << (steps + 1) << " points\n";

    std::ostringstream csv;
    csv << "param,constrained,actual,ve,optimal_basis\n";
    double max_ve = -1.0;
    double max_at = 0;
    double onset = -1.0;
    for (int i = 0; i <= steps; ++i) {
        const double x = std::min(i * step, hi);
        BipartiteDensityMatrix rho = state == "be24"        ? be_2x4(x)
                                     : state == "be33"      ? be_3x3_tiles(x)
                                                            : be_3x3_horodecki(x);
        if (b_side) {
            rho = swap_subsystems(rho);
        }
        const StateContext ctx(rho);
        const EarmarkedSet set = triad(ctx.dA());
        const CorrelationEval cons = constrained_min(ctx, set, measure);
        const double constrained = cons.value_constrained.value();
        const double actual = reference_min(ctx, measure).value_actual.value();
        const double ve = std::abs(constrained - actual);
        csv << fmt(x) << ',' << fmt(constrained) << ',' << fmt(actual) << ',' << fmt(ve) << ','
            << cons.optimal_basis_index << '\n';
        if (ve > max_ve) {
            max_ve = ve;
            max_at = x;
        }
        if (onset < 0 && ve > onset_threshold) {
            onset = x;
        }
    }

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "be_sweep.csv", csv.str(), outputs);
    json result;
    result["max_ve"] = max_ve;
    result["max_at"] = max_at;
    result["onset"] = onset < 0 ? json(nullptr) : json(onset);
    result["onset_threshold"] = onset_threshold;
    write_artifact(dir, "be_sweep.json", result.dump(2) + "\n", outputs);

    json params;
    params["state"] = state;
    params["measure"] = measure_str;
    params["step"] = step;
    params["b_side"] = b_side;
    params["onset_threshold"] = onset_threshold;
    emit_manifest("be-sweep", params, c, outputs, result, t0);
}

void run_eval_state(const CommonOpts &c, const std::string &file, const std::string &measure_str,
                    const SetOpts &s, bool skip_reference) {
    const auto t0 = std::chrono::steady_clock::now();
    const Measure measure = measure_from_name(measure_str);
    const BipartiteDensityMatrix rho = state_from_json(read_text_file(file));
    const StateContext ctx(rho);
    const EarmarkedSet set = parse_set(s, ctx.dA());
    CorrelationEval eval = constrained_min(ctx, set, measure);
    if (!skip_reference && ctx.dA() <= 3) {
        const CorrelationEval ref = reference_min(ctx, measure);
        eval.value_actual = ref.value_actual;
        eval.ve = std::abs(eval.value_constrained.value() - ref.value_actual.value());
    }
    const std::string eval_text = eval_to_json(eval);

    const auto dir = ensure_out(c.out);
    std::vector<std::string> outputs;
    write_artifact(dir, "eval.json", eval_text + "\n", outputs);

    json params = set_params_json(s);
    params["file"] = file;
    params["measure"] = measure_str;
    params["skip_reference"] = skip_reference;
    emit_manifest("eval-state", params, c, outputs, json::parse(eval_text), t0);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"deterministic quantum-correlation experiments"};
    app.require_subcommand(1);

    // sample-errors
    CommonOpts se_common;
    EnsembleOpts se_ens;
    SetOpts se_set;
    std::string se_measure = "qd";
    auto *se = app.add_subcommand("sample-errors",
                                  "voluntary-error records and PDF over a state ensemble");
    add_common(se, se_common);
    add_ensemble_options(se, se_ens);
    add_set_options(se, se_set);
    se->add_option("--measure", se_measure, "qd|qwd")->check(CLI::IsMember({"qd", "qwd"}));
    se->callback([&] { run_sample_errors(se_common, se_ens, se_set, se_measure); });

    // fit-scaling
    CommonOpts fs_common;
    EnsembleOpts fs_ens;
    std::string fs_measure = "qd";
    std::string fs_set = "circle";
    double fs_ftheta = 0.0;
    double fs_phi = 0.0;
    std::vector<int> fs_n_list = {2, 4, 8, 16, 32, 64};
    int fs_n_dense = 0;
    auto *fs = app.add_subcommand("fit-scaling",
                                  "mean voluntary error vs circle size with a power-law fit");
    add_common(fs, fs_common);
    add_ensemble_options(fs, fs_ens);
    fs->add_option("--measure", fs_measure, "qd|qwd")->check(CLI::IsMember({"qd", "qwd"}));
    fs->add_option("--set", fs_set, "circle (fixed f_theta) | circle-phi (fixed phi)")
        ->check(CLI::IsMember({"circle", "circle-phi"}));
    fs->add_option("--ftheta", fs_ftheta, "circle latitude");
    fs->add_option("--phi", fs_phi, "meridian azimuth");
    fs->add_option("--n-list", fs_n_list, "comma-separated circle sizes")->delimiter(',');
    fs->add_option("--n-dense", fs_n_dense,
                   "dense circle for the plateau estimate (0 = 4096/4097)");
    fs->callback([&] {
        run_fit_scaling(fs_common, fs_ens, fs_measure, fs_set, fs_ftheta, fs_phi, fs_n_list,
                        fs_n_dense);
    });

    // landscape
    CommonOpts ls_common;
    EnsembleOpts ls_ens;
    std::string ls_measure = "qd";
    int ls_bins_f = 40;
    int ls_bins_phi = 40;
    auto *ls = app.add_subcommand("landscape", "optimizer-location density over the Bloch chart");
    add_common(ls, ls_common);
    add_ensemble_options(ls, ls_ens);
    ls->add_option("--measure", ls_measure, "qd|qwd")->check(CLI::IsMember({"qd", "qwd"}));
    ls->add_option("--bins-f", ls_bins_f, "latitude bins");
    ls->add_option("--bins-phi", ls_bins_phi, "azimuth bins");
    ls->callback([&] { run_landscape(ls_common, ls_ens, ls_measure, ls_bins_f, ls_bins_phi); });

    // xstate-eval
    CommonOpts xs_common;
    double xs_a1 = 0.25, xs_a2 = 0.25, xs_a3 = 0.25, xs_a4 = 0.25, xs_b1 = 0.0, xs_b2 = 0.0;
    auto *xs = app.add_subcommand("xstate-eval",
                                  "closed forms vs numeric minima for one X state");
    add_common(xs, xs_common);
    xs->add_option("--a1", xs_a1, "population |00>");
    xs->add_option("--a2", xs_a2, "population |01>");
    xs->add_option("--a3", xs_a3, "population |10>");
    xs->add_option("--a4", xs_a4, "population |11>");
    xs->add_option("--b1", xs_b1, "coherence <00|rho|11>");
    xs->add_option("--b2", xs_b2, "coherence <01|rho|10>");
    xs->callback([&] { run_xstate_eval(xs_common, xs_a1, xs_a2, xs_a3, xs_a4, xs_b1, xs_b2); });

    // spin-scan
    CommonOpts sp_common;
    double sp_g = 0.5;
    std::vector<int> sp_l_list = {20, 40, 80, 160, 320};
    std::string sp_measure = "qwd";
    double sp_lmin = 0.9;
    double sp_lmax = 1.2;
    int sp_points = 61;
    bool sp_fixed_grid = false;
    auto *sp = app.add_subcommand("spin-scan",
                                  "XY-chain pseudocritical couplings and finite-size fit");
    add_common(sp, sp_common);
    sp->add_option("--g", sp_g, "anisotropy");
    sp->add_option("--l-list", sp_l_list, "comma-separated chain lengths")->delimiter(',');
    sp->add_option("--measure", sp_measure, "qd|qwd")->check(CLI::IsMember({"qd", "qwd"}));
    sp->add_option("--lambda-min", sp_lmin, "scan window lower edge");
    sp->add_option("--lambda-max", sp_lmax, "scan window upper edge");
    sp->add_option("--lambda-points", sp_points, "scan grid size");
    sp->add_flag("--fixed-grid", sp_fixed_grid,
                 "take peaks from the supplied grid instead of the adaptive search");
    sp->callback([&] {
        run_spin_scan(sp_common, sp_g, sp_l_list, sp_measure, sp_lmin, sp_lmax, sp_points,
                      sp_fixed_grid);
    });

    // thermal-scan
    CommonOpts th_common;
    double th_g = 0.5;
    double th_betaj = 1.0;
    double th_hmax = 2.0;
    double th_hstep = 0.05;
    std::string th_measure = "qwd";
    SetOpts th_set;
    auto *th = app.add_subcommand("thermal-scan",
                                  "voluntary error over the staggered-field Gibbs family");
    add_common(th, th_common);
    th->add_option("--g", th_g, "anisotropy");
    th->add_option("--betaj", th_betaj, "inverse temperature (units of J)");
    th->add_option("--h-max", th_hmax, "field range: |h/J| <= h-max");
    th->add_option("--h-step", th_hstep, "field grid step");
    th->add_option("--measure", th_measure, "qd|qwd")->check(CLI::IsMember({"qd", "qwd"}));
    add_set_options(th, th_set);
    th->callback([&] {
        run_thermal_scan(th_common, th_g, th_betaj, th_hmax, th_hstep, th_measure, th_set);
    });

    // be-sweep
    CommonOpts be_common;
    std::string be_state = "be24";
    std::string be_measure = "qd";
    double be_step = 0.01;
    bool be_b_side = false;
    double be_onset = 1e-6;
    auto *be = app.add_subcommand("be-sweep",
                                  "parameter sweep of a bound-entangled family");
    add_common(be, be_common);
    be->add_option("--state", be_state, "be24|be33|horodecki")
        ->check(CLI::IsMember({"be24", "be33", "horodecki"}));
    be->add_option("--measure", be_measure, "qd|qwd")->check(CLI::IsMember({"qd", "qwd"}));
    be->add_option("--b-step,--step", be_step, "parameter step");
    be->add_flag("--b-side", be_b_side, "measure on the second subsystem instead");
    be->add_option("--onset-threshold", be_onset, "ve level defining the reported onset");
    be->callback(
        [&] { run_be_sweep(be_common, be_state, be_measure, be_step, be_b_side, be_onset); });

    // eval-state
    CommonOpts ev_common;
    std::string ev_file;
    std::string ev_measure = "qd";
    SetOpts ev_set;
    bool ev_skip_ref = false;
    auto *ev = app.add_subcommand("eval-state", "evaluate one state loaded from JSON");
    add_common(ev, ev_common);
    ev->add_option("--file", ev_file, "state JSON path")->required();
    ev->add_option("--measure", ev_measure, "qd|qwd")->check(CLI::IsMember({"qd", "qwd"}));
    add_set_options(ev, ev_set);
    ev->add_flag("--skip-reference", ev_skip_ref, "report the constrained minimum only");
    ev->callback([&] { run_eval_state(ev_common, ev_file, ev_measure, ev_set, ev_skip_ref); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
