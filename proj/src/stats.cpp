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

#include "qcorr/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kVeBins = 100;

/// Slope/intercept least squares with the usual homoscedastic error bars.
struct OlsLine {
    double slope = 0;
    double intercept = 0;
    double slope_err = 0;
    double intercept_err = 0;
    double residual_se = 0;
};

OlsLine ols_line(const std::vector<double> &xs, const std::vector<double> &ys) {
    const auto n = static_cast<double>(xs.size());
    double mean_x = 0, mean_y = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    if (!(sxx > 0)) {
        throw DegenerateFit("abscissas carry no spread");
    }
    OlsLine line;
    line.slope = sxy / sxx;
    line.intercept = mean_y - line.slope * mean_x;
    double ssr = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (line.intercept + line.slope * xs[i]);
        ssr += r * r;
    }
    if (xs.size() > 2) {
        const double s2 = ssr / (n - 2.0);
        line.residual_se = std::sqrt(s2);
        line.slope_err = std::sqrt(s2 / sxx);
        line.intercept_err = std::sqrt(s2 * (1.0 / n + mean_x * mean_x / sxx));
    }
    return line;
}

/// Regularized lower incomplete gamma P(a, x) by power series (x < a + 1).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Regularized upper incomplete gamma Q(a, x) by continued fraction
/// (x >= a + 1), modified Lentz iteration.
double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x) {
    if (x <= 0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_contfrac(a, x);
}

/// Uniform index in [0, n).
std::size_t draw_index(RandomStream &stream, std::size_t n) {
    const auto idx = static_cast<std::size_t>(stream.uniform() * static_cast<double>(n));
    return idx >= n ? n - 1 : idx;
}

bool passes_filter(PptFilter filter, PptClass ppt) {
    switch (filter) {
    case PptFilter::All:
        return true;
    case PptFilter::Ppt:
        return ppt == PptClass::PPT;
    case PptFilter::Nppt:
        return ppt == PptClass::NPPT;
    }
    return true;
}

int rank_label(const EnsembleSpec &spec) {
    return spec.family == EnsembleFamily::HaarMixed ? spec.rank : 0;
}

int histogram_bin(double ve, int bins) {
    auto b = static_cast<int>(ve * bins);
    return std::clamp(b, 0, bins - 1);
}

} // namespace

BipartiteDensityMatrix draw_state(const EnsembleSpec &spec, std::uint64_t sample_index) {
    switch (spec.family) {
    case EnsembleFamily::HaarMixed:
        return sample_haar_mixed(spec.dA, spec.dB, spec.rank, spec.seed, sample_index);
    case EnsembleFamily::Correlator:
        return sample_correlator_state(spec.seed, sample_index);
    case EnsembleFamily::Magnetized:
        return sample_rho_m(spec.axis, spec.seed, sample_index);
    }
    throw OutOfRange("unknown ensemble family");
}

int resolve_jobs(int jobs) {
    if (jobs > 0) {
        return jobs;
    }
    if (const char *env = std::getenv("QCORR_JOBS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<int>(std::min(v, 256L));
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &fn) {
    const int workers =
        static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), count));
    if (workers < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(run);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

std::vector<VeSample> sample_ve(const EnsembleSpec &spec, const EarmarkedSet &set, Measure measure,
                                const RefineOptions &opts) {
    std::vector<std::optional<VeSample>> slots(spec.samples);
    const int rank = rank_label(spec);
    parallel_for(spec.samples, spec.jobs, [&](std::size_t i) {
        BipartiteDensityMatrix rho = draw_state(spec, i);
        const PptClass ppt = classify_ppt(rho);
        if (!passes_filter(spec.filter, ppt)) {
            return;
        }
        const StateContext ctx(std::move(rho));
        const double actual = reference_min(ctx, measure, opts).value_actual.value();
        const double constrained = constrained_min(ctx, set, measure).value_constrained.value();
        slots[i] = VeSample{i, rank, ppt, std::abs(constrained - actual)};
    });
    std::vector<VeSample> records;
    records.reserve(spec.samples);
    for (const auto &slot : slots) {
        if (slot) {
            records.push_back(*slot);
        }
    }
    return records;
}

ErrorStats summarize_ve(const std::vector<VeSample> &records, int rank, PptFilter ppt_class) {
    if (records.empty()) {
        throw InsufficientSamples("no records to summarize");
    }
    if (ppt_class != PptFilter::All && records.size() < 100) {
        throw InsufficientSamples("filtered cell holds " + std::to_string(records.size()) +
                                  " states, need 100");
    }
    ErrorStats stats;
    stats.samples = records.size();
    stats.rank = rank;
    stats.ppt_class = ppt_class;
    std::vector<std::size_t> counts(kVeBins, 0);
    double sum = 0;
    for (const auto &r : records) {
        sum += r.ve;
        stats.max_ve = std::max(stats.max_ve, r.ve);
        ++counts[static_cast<std::size_t>(histogram_bin(r.ve, kVeBins))];
    }
    const auto n = static_cast<double>(records.size());
    stats.mean = sum / n;
    if (records.size() > 1) {
        double ss = 0;
        for (const auto &r : records) {
            ss += (r.ve - stats.mean) * (r.ve - stats.mean);
        }
        stats.std_error = std::sqrt(ss / (n - 1.0) / n);
    }
    stats.histogram.edges.resize(kVeBins + 1);
    stats.histogram.densities.resize(kVeBins);
    for (int b = 0; b <= kVeBins; ++b) {
        stats.histogram.edges[static_cast<std::size_t>(b)] = static_cast<double>(b) / kVeBins;
    }
    for (int b = 0; b < kVeBins; ++b) {
        stats.histogram.densities[static_cast<std::size_t>(b)] =
            static_cast<double>(counts[static_cast<std::size_t>(b)]) * kVeBins / n;
    }
    return stats;
}

ErrorStats average_ve(const EnsembleSpec &spec, const EarmarkedSet &set, Measure measure,
                      const RefineOptions &opts) {
    return summarize_ve(sample_ve(spec, set, measure, opts), rank_label(spec), spec.filter);
}

std::vector<SweepSample> circle_scaling_sweep(const EnsembleSpec &spec, const SweepSpec &sweep,
                                              const RefineOptions &opts) {
    const bool azimuth = sweep.kind == SweepKind::AzimuthCircle;
    const int dense = sweep.n_dense;
    if (dense < (azimuth ? 1 : 2)) {
        throw OutOfRange("dense circle needs " + std::string(azimuth ? "n >= 1" : "n >= 2"));
    }
    std::vector<int> strides;
    strides.reserve(sweep.n_list.size());
    for (const int n : sweep.n_list) {
        if (azimuth) {
            if (n < 1 || dense % n != 0) {
                throw OutOfRange("subset size " + std::to_string(n) + " does not divide " +
                                 std::to_string(dense));
            }
            strides.push_back(dense / n);
        } else {
            if (n < 2 || (dense - 1) % (n - 1) != 0) {
                throw OutOfRange("subset size " + std::to_string(n) + " does not nest in " +
                                 std::to_string(dense) + " meridian points");
            }
            strides.push_back((dense - 1) / (n - 1));
        }
    }
    std::vector<double> grid(static_cast<std::size_t>(dense));
    for (int j = 0; j < dense; ++j) {
        grid[static_cast<std::size_t>(j)] =
            azimuth ? kTwoPi * j / dense : -1.0 + 2.0 * j / (dense - 1);
    }
    const int rank = rank_label(spec);
    std::vector<std::optional<SweepSample>> slots(spec.samples);
    parallel_for(spec.samples, spec.jobs, [&](std::size_t i) {
        BipartiteDensityMatrix rho = draw_state(spec, i);
        const PptClass ppt = classify_ppt(rho);
        if (!passes_filter(spec.filter, ppt)) {
            return;
        }
        const StateContext ctx(std::move(rho));
        const auto [qd_ref, qwd_ref] = reference_min_both(ctx, opts);
        const double actual_qd = qd_ref.value_actual.value();
        const double actual_qwd = qwd_ref.value_actual.value();
        std::vector<double> vals_qd(static_cast<std::size_t>(dense));
        std::vector<double> vals_qwd(static_cast<std::size_t>(dense));
        for (int j = 0; j < dense; ++j) {
            const double coord = grid[static_cast<std::size_t>(j)];
            const BasisValue v =
                azimuth ? ctx.eval_qubit(sweep.fixed, coord) : ctx.eval_qubit(coord, sweep.fixed);
            vals_qd[static_cast<std::size_t>(j)] = v.qd;
            vals_qwd[static_cast<std::size_t>(j)] = v.qwd;
        }
        auto subset_ve = [&](const std::vector<double> &vals, int n, int stride, double actual) {
            double lo = vals[0];
            for (int k = 1; k < n; ++k) {
                lo = std::min(lo, vals[static_cast<std::size_t>(k * stride)]);
            }
            return std::abs(std::max(lo, 0.0) - actual);
        };
        SweepSample rec;
        rec.sample_id = i;
        rec.rank = rank;
        rec.ppt = ppt;
        rec.ve_qd.reserve(sweep.n_list.size());
        rec.ve_qwd.reserve(sweep.n_list.size());
        for (std::size_t k = 0; k < sweep.n_list.size(); ++k) {
            rec.ve_qd.push_back(subset_ve(vals_qd, sweep.n_list[k], strides[k], actual_qd));
            rec.ve_qwd.push_back(subset_ve(vals_qwd, sweep.n_list[k], strides[k], actual_qwd));
        }
        rec.ve_inf_qd = subset_ve(vals_qd, dense, 1, actual_qd);
        rec.ve_inf_qwd = subset_ve(vals_qwd, dense, 1, actual_qwd);
        slots[i] = std::move(rec);
    });
    std::vector<SweepSample> records;
    records.reserve(spec.samples);
    for (auto &slot : slots) {
        if (slot) {
            records.push_back(std::move(*slot));
        }
    }
    return records;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>> &points, double eps_inf) {
    if (points.size() < 4) {
        throw DegenerateFit("power-law fit needs at least 4 points, got " +
                            std::to_string(points.size()));
    }
    if (eps_inf < 0) {
        throw OutOfRange("eps_inf must be nonnegative");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto &[n, mean_ve] : points) {
        if (n <= 0) {
            throw OutOfRange("set sizes must be positive");
        }
        if (mean_ve <= eps_inf) {
            throw NegativeResidual("mean ve " + std::to_string(mean_ve) + " at n = " +
                                   std::to_string(n) + " does not exceed the plateau " +
                                   std::to_string(eps_inf));
        }
        xs.push_back(std::log(n));
        ys.push_back(std::log(mean_ve - eps_inf));
    }
    const OlsLine line = ols_line(xs, ys);
    PowerLawFit fit;
    fit.tau = -line.slope;
    fit.kappa = std::exp(line.intercept);
    fit.eps_inf = eps_inf;
    fit.tau_err = line.slope_err;
    fit.kappa_err = fit.kappa * line.intercept_err;
    fit.residual_se = line.residual_se;
    fit.flagged = !(fit.tau > 0) || fit.tau_err > 0.1 * fit.tau;
    return fit;
}

LinearFit fit_linear(const std::vector<std::pair<double, double>> &points) {
    if (points.size() < 3) {
        throw DegenerateFit("linear fit needs at least 3 points, got " +
                            std::to_string(points.size()));
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto &[x, y] : points) {
        xs.push_back(x);
        ys.push_back(y);
    }
    const OlsLine line = ols_line(xs, ys);
    return LinearFit{line.slope, line.intercept};
}

QubitProjectorParams fold_to_half_chart(const QubitProjectorParams &p) {
    double f = std::clamp(p.f_theta, -1.0, 1.0);
    double phi = std::fmod(p.phi, kTwoPi);
    if (phi < 0) {
        phi += kTwoPi;
    }
    if (phi >= kPi) {
        phi -= kPi;
        f = -f;
    }
    if (phi >= kPi) { // fmod round-off at the seam
        phi = 0;
    }
    return {f, phi};
}

Landscape optimizer_landscape(const EnsembleSpec &spec, Measure measure, int bins_f, int bins_phi,
                              const RefineOptions &opts) {
    if (spec.family == EnsembleFamily::HaarMixed && spec.dA != 2) {
        throw UnsupportedDim("optimizer landscape is defined for qubit measurements");
    }
    if (bins_f < 1 || bins_phi < 1) {
        throw OutOfRange("landscape needs at least one bin per axis");
    }
    std::vector<std::optional<QubitProjectorParams>> slots(spec.samples);
    parallel_for(spec.samples, spec.jobs, [&](std::size_t i) {
        BipartiteDensityMatrix rho = draw_state(spec, i);
        if (!passes_filter(spec.filter, classify_ppt(rho))) {
            return;
        }
        const StateContext ctx(std::move(rho));
        const CorrelationEval ref = reference_min(ctx, measure, opts);
        slots[i] = fold_to_half_chart(ref.optimal_params.value());
    });
    Landscape ls;
    ls.bins_f = bins_f;
    ls.bins_phi = bins_phi;
    ls.optimizers.reserve(spec.samples);
    for (const auto &slot : slots) {
        if (slot) {
            ls.optimizers.push_back(*slot);
        }
    }
    ls.f_edges.resize(static_cast<std::size_t>(bins_f) + 1);
    ls.phi_edges.resize(static_cast<std::size_t>(bins_phi) + 1);
    for (int b = 0; b <= bins_f; ++b) {
        ls.f_edges[static_cast<std::size_t>(b)] = -1.0 + 2.0 * b / bins_f;
    }
    for (int b = 0; b <= bins_phi; ++b) {
        ls.phi_edges[static_cast<std::size_t>(b)] = kPi * b / bins_phi;
    }
    RMatrix joint = RMatrix::Zero(bins_f, bins_phi);
    std::vector<double> count_f(static_cast<std::size_t>(bins_f), 0.0);
    std::vector<double> count_phi(static_cast<std::size_t>(bins_phi), 0.0);
    for (const auto &p : ls.optimizers) {
        const int bf = std::clamp(static_cast<int>((p.f_theta + 1.0) / 2.0 * bins_f), 0, bins_f - 1);
        const int bp = std::clamp(static_cast<int>(p.phi / kPi * bins_phi), 0, bins_phi - 1);
        joint(bf, bp) += 1.0;
        count_f[static_cast<std::size_t>(bf)] += 1.0;
        count_phi[static_cast<std::size_t>(bp)] += 1.0;
    }
    const auto n = static_cast<double>(std::max<std::size_t>(ls.optimizers.size(), 1));
    const double df = 2.0 / bins_f;
    const double dphi = kPi / bins_phi;
    ls.density = joint / (n * df * dphi);
    ls.marginal_f.resize(static_cast<std::size_t>(bins_f));
    ls.marginal_phi.resize(static_cast<std::size_t>(bins_phi));
    for (int b = 0; b < bins_f; ++b) {
        ls.marginal_f[static_cast<std::size_t>(b)] = count_f[static_cast<std::size_t>(b)] / (n * df);
    }
    for (int b = 0; b < bins_phi; ++b) {
        ls.marginal_phi[static_cast<std::size_t>(b)] =
            count_phi[static_cast<std::size_t>(b)] / (n * dphi);
    }
    return ls;
}

RegionFractions region_fractions(const Landscape &landscape) {
    if (landscape.optimizers.empty()) {
        throw InsufficientSamples("landscape holds no optimizer locations");
    }
    constexpr double omega = 0.3;
    constexpr double omega2 = omega * omega;
    RegionFractions out;
    std::array<double, 5> counts{};
    double any = 0;
    for (const auto &p : landscape.optimizers) {
        const double f = p.f_theta;
        const double phi = p.phi;
        const std::array<bool, 5> in = {
            f <= -0.9,
            f >= 0.9,
            f * f + phi * phi <= omega2,
            f * f + (phi - kPi) * (phi - kPi) <= omega2,
            f * f + (phi - kPi / 2) * (phi - kPi / 2) <= omega2,
        };
        bool hit = false;
        for (std::size_t r = 0; r < in.size(); ++r) {
            if (in[r]) {
                counts[r] += 1.0;
                hit = true;
            }
        }
        if (hit) {
            any += 1.0;
        }
    }
    const auto n = static_cast<double>(landscape.optimizers.size());
    for (std::size_t r = 0; r < counts.size(); ++r) {
        out.region[r] = counts[r] / n;
    }
    out.total = any / n;
    return out;
}

double chi_square_uniform_pvalue(const std::vector<std::size_t> &counts) {
    if (counts.size() < 2) {
        throw OutOfRange("chi-square test needs at least 2 bins");
    }
    std::size_t total = 0;
    for (const std::size_t c : counts) {
        total += c;
    }
    if (total == 0) {
        throw OutOfRange("chi-square test needs at least one observation");
    }
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double chi2 = 0;
    for (const std::size_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    const double dof = static_cast<double>(counts.size()) - 1.0;
    return gamma_q(dof / 2.0, chi2 / 2.0);
}

double ks_uniform_pvalue(std::vector<double> samples) {
    if (samples.empty()) {
        throw OutOfRange("KS test needs at least one sample");
    }
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double dmax = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double x = std::clamp(samples[i], 0.0, 1.0);
        const double hi = (static_cast<double>(i) + 1.0) / n - x;
        const double lo = x - static_cast<double>(i) / n;
        dmax = std::max({dmax, hi, lo});
    }
    const double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * dmax;
    if (lambda < 1e-8) {
        return 1.0;
    }
    double p = 0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        p += sign * term;
        sign = -sign;
        if (term < 1e-16) {
            break;
        }
    }
    return std::clamp(2.0 * p, 0.0, 1.0);
}

double bootstrap_mean_greater(const std::vector<double> &x, const std::vector<double> &y,
                              int resamples, std::uint64_t seed) {
    if (x.empty() || y.empty() || resamples < 1) {
        throw InsufficientSamples("bootstrap needs nonempty samples and resamples >= 1");
    }
    int wins = 0;
    for (int r = 0; r < resamples; ++r) {
        RandomStream stream(seed, static_cast<std::uint64_t>(r));
        double sum_x = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sum_x += x[draw_index(stream, x.size())];
        }
        double sum_y = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            sum_y += y[draw_index(stream, y.size())];
        }
        if (sum_x / static_cast<double>(x.size()) > sum_y / static_cast<double>(y.size())) {
            ++wins;
        }
    }
    return static_cast<double>(wins) / static_cast<double>(resamples);
}

double bootstrap_paired_mean_greater(const std::vector<double> &x, const std::vector<double> &y,
                                     int resamples, std::uint64_t seed) {
    if (x.empty() || x.size() != y.size() || resamples < 1) {
        throw InsufficientSamples("paired bootstrap needs equal-length nonempty samples");
    }
    int wins = 0;
    for (int r = 0; r < resamples; ++r) {
        RandomStream stream(seed, static_cast<std::uint64_t>(r));
        double sum = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const std::size_t j = draw_index(stream, x.size());
            sum += x[j] - y[j];
        }
        if (sum > 0) {
            ++wins;
        }
    }
    return static_cast<double>(wins) / static_cast<double>(resamples);
}

} // namespace qcorr
