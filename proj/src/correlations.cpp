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

#include "qcorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInf = std::numeric_limits<double>::infinity();

double fold_phi(double phi) {
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0)
        phi += kTwoPi;
    return phi;
}

// ---------------------------------------------------------------------------
// Nelder-Mead simplex search (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). Stops when the simplex diameter falls below xatol AND the
// objective spread below fatol, or after maxiter iterations.
// ---------------------------------------------------------------------------

struct NmResult {
    RVector x;
    double fval;
};

NmResult nelder_mead(const std::function<double(const RVector &)> &f,
                     const RVector &x0, double step, double xatol, double fatol,
                     int maxiter) {
    const int n = static_cast<int>(x0.size());
    std::vector<RVector> sim(n + 1, x0);
    std::vector<double> fs(n + 1);
    for (int i = 0; i < n; ++i)
        sim[i + 1](i) += step;
    for (int i = 0; i <= n; ++i)
        fs[i] = f(sim[i]);

    std::vector<int> order(n + 1);
    for (int iter = 0; iter < maxiter; ++iter) {
        for (int i = 0; i <= n; ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return fs[a] < fs[b]; });
        {
            std::vector<RVector> s2(n + 1);
            std::vector<double> f2(n + 1);
            for (int i = 0; i <= n; ++i) {
                s2[i] = sim[order[i]];
                f2[i] = fs[order[i]];
            }
            sim.swap(s2);
            fs.swap(f2);
        }

        double xspread = 0.0, fspread = 0.0;
        for (int i = 1; i <= n; ++i) {
            xspread = std::max(xspread, (sim[i] - sim[0]).cwiseAbs().maxCoeff());
            fspread = std::max(fspread, std::abs(fs[i] - fs[0]));
        }
        if (xspread <= xatol && fspread <= fatol)
            break;

        RVector centroid = RVector::Zero(n);
        for (int i = 0; i < n; ++i)
            centroid += sim[i];
        centroid /= n;

        const RVector xr = 2.0 * centroid - sim[n];
        const double fr = f(xr);
        if (fr < fs[0]) {
            const RVector xe = 3.0 * centroid - 2.0 * sim[n];
            const double fe = f(xe);
            if (fe < fr) {
                sim[n] = xe;
                fs[n] = fe;
            } else {
                sim[n] = xr;
                fs[n] = fr;
            }
            continue;
        }
        if (fr < fs[n - 1]) {
            sim[n] = xr;
            fs[n] = fr;
            continue;
        }
        if (fr < fs[n]) {
            const RVector xc = 1.5 * centroid - 0.5 * sim[n];
            const double fc = f(xc);
            if (fc <= fr) {
                sim[n] = xc;
                fs[n] = fc;
                continue;
            }
        } else {
            const RVector xc = 0.5 * centroid + 0.5 * sim[n];
            const double fc = f(xc);
            if (fc < fs[n]) {
                sim[n] = xc;
                fs[n] = fc;
                continue;
            }
        }
        for (int i = 1; i <= n; ++i) {
            sim[i] = sim[0] + 0.5 * (sim[i] - sim[0]);
            fs[i] = f(sim[i]);
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fs[i] < fs[best])
            best = i;
    return {sim[best], fs[best]};
}

// Keep the k smallest (value, theta, phi) rows seen during a grid scan.
class TopK {
  public:
    explicit TopK(int k) : rows_(k, {kInf, 0.0, 0.0}) {}

    void push(double val, double theta, double phi) {
        if (val >= rows_.back()[0])
            return;
        std::size_t i = rows_.size() - 1;
        while (i > 0 && rows_[i - 1][0] > val) {
            rows_[i] = rows_[i - 1];
            --i;
        }
        rows_[i] = {val, theta, phi};
    }

    const std::vector<std::array<double, 3>> &rows() const { return rows_; }

  private:
    std::vector<std::array<double, 3>> rows_;
};

// ---------------------------------------------------------------------------
// Eight-angle qutrit basis chart around an arbitrary start unitary:
//   U(x) = U0 . diag(e^{i x0}, e^{i x1}, 1) . R01(x2,x3) . R12(x4,x5) . R01(x6,x7)
// with R_pq a two-level rotation. x = 0 gives U0; eight real parameters
// match the dimension of the projective-basis manifold at dA = 3.
// ---------------------------------------------------------------------------

CMatrix two_level_rotation(int p, int q, double theta, double phi) {
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex e(std::cos(phi), std::sin(phi));
    CMatrix r = CMatrix::Identity(3, 3);
    r(p, p) = c;
    r(p, q) = -std::conj(e) * s;
    r(q, p) = e * s;
    r(q, q) = c;
    return r;
}

CMatrix qutrit_chart(const CMatrix &u0, const RVector &x) {
    CMatrix phase = CMatrix::Identity(3, 3);
    phase(0, 0) = Complex(std::cos(x(0)), std::sin(x(0)));
    phase(1, 1) = Complex(std::cos(x(1)), std::sin(x(1)));
    return u0 * phase * two_level_rotation(0, 1, x(2), x(3)) *
           two_level_rotation(1, 2, x(4), x(5)) *
           two_level_rotation(0, 1, x(6), x(7));
}

double clamp_value(double v) { return v > 0.0 ? v : 0.0; }

} // namespace

// ---------------------------------------------------------------------------
// StateContext
// ---------------------------------------------------------------------------

StateContext::StateContext(BipartiteDensityMatrix rho) : rho_(std::move(rho)) {
    const int dA = rho_.dA, dB = rho_.dB;
    if (dA < 1 || dB < 1 || rho_.m.rows() != rho_.dim() ||
        rho_.m.cols() != rho_.dim())
        throw DimensionMismatch("state matrix size does not equal dA*dB");
    if (!is_hermitian(rho_.m, 1e-12))
        throw NonPhysicalOperator("state is not Hermitian within 1e-12");
    const RVector evals = hermitian_eigenvalues(rho_.m);
    if (std::abs(evals.sum() - 1.0) > 1e-10)
        throw NonPhysicalOperator("state trace deviates from 1 by more than 1e-10");
    if (evals.minCoeff() < kPsdTol)
        throw NonPhysicalOperator("state has an eigenvalue below -1e-10");
    entropy_ = 0.0;
    for (Eigen::Index i = 0; i < evals.size(); ++i)
        entropy_ -= xlog2x(evals(i));

    const RVector wa = hermitian_eigenvalues(partial_trace(rho_, Subsystem::A));
    entropy_a_ = 0.0;
    for (Eigen::Index i = 0; i < wa.size(); ++i)
        entropy_a_ -= xlog2x(wa(i));

    blocks_.reserve(static_cast<std::size_t>(dA) * dA);
    for (int a = 0; a < dA; ++a)
        for (int ap = 0; ap < dA; ++ap)
            blocks_.push_back(rho_.m.block(a * dB, ap * dB, dB, dB));
    rho_b_ = CMatrix::Zero(dB, dB);
    for (int a = 0; a < dA; ++a)
        rho_b_ += blocks_[static_cast<std::size_t>(a) * dA + a];
}

BasisValue StateContext::eval(const MeasurementBasis &basis) const {
    const int dA = rho_.dA, dB = rho_.dB;
    if (basis.dim() != dA)
        throw DimensionMismatch("basis dimension does not match dA");
    double ent = 0.0, hp = 0.0;
    CMatrix rest = rho_b_;
    CMatrix m(dB, dB);
    for (int k = 0; k < dA; ++k) {
        if (k == dA - 1) {
            m = rest;
        } else {
            m.setZero();
            for (int a = 0; a < dA; ++a) {
                const Complex va = std::conj(basis.vectors(a, k));
                for (int ap = 0; ap < dA; ++ap)
                    m.noalias() +=
                        (va * basis.vectors(ap, k)) *
                        blocks_[static_cast<std::size_t>(a) * dA + ap];
            }
            rest -= m;
        }
        hp -= xlog2x(m.trace().real());
        const RVector w = hermitian_eigenvalues(m);
        for (Eigen::Index i = 0; i < w.size(); ++i)
            ent -= xlog2x(w(i));
    }
    return {entropy_a_ - entropy_ + ent - hp, ent - entropy_};
}

BasisValue StateContext::eval_qubit(double f_theta, double phi) const {
    if (rho_.dA != 2)
        throw DimensionMismatch("eval_qubit requires dA = 2");
    const double f = std::clamp(f_theta, -1.0, 1.0);
    const double c2 = 0.5 * (1.0 + f);
    const double s2 = 0.5 * (1.0 - f);
    const double cs = std::sqrt(c2 * s2);
    const Complex w(std::cos(phi), -std::sin(phi)); // e^{-i phi}

    if (rho_.dB == 2) {
        const CMatrix &b00 = blocks_[0];
        const CMatrix &b01 = blocks_[1];
        const CMatrix &b11 = blocks_[3];
        const double m00 = c2 * std::real(b00(0, 0)) + s2 * std::real(b11(0, 0)) -
                           2.0 * cs * std::real(w * b01(0, 0));
        const double m11 = c2 * std::real(b00(1, 1)) + s2 * std::real(b11(1, 1)) -
                           2.0 * cs * std::real(w * b01(1, 1));
        const Complex m01 = c2 * b00(0, 1) + s2 * b11(0, 1) -
                            cs * (w * b01(0, 1) + std::conj(w * b01(1, 0)));
        const double n00 = std::real(rho_b_(0, 0)) - m00;
        const double n11 = std::real(rho_b_(1, 1)) - m11;
        const Complex n01 = rho_b_(0, 1) - m01;
        const double p0 = m00 + m11;
        const double p1 = n00 + n11;
        const double mu0 = 0.5 * p0;
        const double r0 = std::sqrt(0.25 * (m00 - m11) * (m00 - m11) + std::norm(m01));
        const double mu1 = 0.5 * p1;
        const double r1 = std::sqrt(0.25 * (n00 - n11) * (n00 - n11) + std::norm(n01));
        const double ent = -(xlog2x(mu0 - r0) + xlog2x(mu0 + r0) +
                             xlog2x(mu1 - r1) + xlog2x(mu1 + r1));
        const double hp = -(xlog2x(p0) + xlog2x(p1));
        return {entropy_a_ - entropy_ + ent - hp, ent - entropy_};
    }

    const CMatrix cross = w * blocks_[1];
    const CMatrix m0 = c2 * blocks_[0] + s2 * blocks_[3] - cs * (cross + cross.adjoint());
    const CMatrix m1 = rho_b_ - m0;
    double ent = 0.0, hp = 0.0;
    for (const CMatrix *m : {&m0, &m1}) {
        hp -= xlog2x(m->trace().real());
        const RVector w1 = hermitian_eigenvalues(*m);
        for (Eigen::Index i = 0; i < w1.size(); ++i)
            ent -= xlog2x(w1(i));
    }
    return {entropy_a_ - entropy_ + ent - hp, ent - entropy_};
}

// ---------------------------------------------------------------------------
// One-shot evaluations
// ---------------------------------------------------------------------------

std::vector<PostMeasurementOutcome>
post_measurement_ensemble(const BipartiteDensityMatrix &rho,
                          const MeasurementBasis &basis) {
    const int dA = rho.dA, dB = rho.dB;
    if (basis.dim() != dA)
        throw DimensionMismatch("basis dimension does not match dA");
    if (rho.m.rows() != rho.dim() || rho.m.cols() != rho.dim())
        throw DimensionMismatch("state matrix size does not equal dA*dB");
    std::vector<PostMeasurementOutcome> out;
    out.reserve(dA);
    for (int k = 0; k < dA; ++k) {
        CMatrix m = CMatrix::Zero(dB, dB);
        for (int a = 0; a < dA; ++a)
            for (int ap = 0; ap < dA; ++ap)
                m.noalias() +=
                    (std::conj(basis.vectors(a, k)) * basis.vectors(ap, k)) *
                    rho.m.block(a * dB, ap * dB, dB, dB);
        const double p = m.trace().real();
        if (p < 1e-12) {
            out.push_back({p,
                           BipartiteDensityMatrix{
                               dA, dB, CMatrix::Zero(rho.dim(), rho.dim())},
                           true});
            continue;
        }
        const CMatrix proj =
            basis.vectors.col(k) * basis.vectors.col(k).adjoint();
        out.push_back(
            {p, BipartiteDensityMatrix{dA, dB, tensor_product(proj, m) / p},
             false});
    }
    return out;
}

double discord_given_basis(const BipartiteDensityMatrix &rho,
                           const MeasurementBasis &basis) {
    return StateContext(rho).eval(basis).qd;
}

double workdeficit_given_basis(const BipartiteDensityMatrix &rho,
                               const MeasurementBasis &basis) {
    return StateContext(rho).eval(basis).qwd;
}

// ---------------------------------------------------------------------------
// Constrained minimization
// ---------------------------------------------------------------------------

CorrelationEval constrained_min(const StateContext &ctx, const EarmarkedSet &set,
                                Measure measure) {
    if (set.bases.empty())
        throw EmptySet("earmarked set has no bases");
    const int n = set.size();
    const bool via_points =
        ctx.dA() == 2 && set.points.size() == set.bases.size();
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i)
        vals[i] = via_points
                      ? ctx.eval_qubit(set.points[i].f_theta, set.points[i].phi,
                                       measure)
                      : ctx.eval(set.bases[i], measure);
    const double vmin = *std::min_element(vals.begin(), vals.end());
    int idx = 0;
    while (vals[idx] > vmin + 1e-12)
        ++idx;
    CorrelationEval r;
    r.measure = measure;
    r.value_constrained = clamp_value(vmin);
    r.optimal_basis_index = idx;
    if (via_points)
        r.optimal_params = set.points[idx];
    else
        r.optimal_basis = set.bases[idx].vectors;
    return r;
}

CorrelationEval constrained_min(const BipartiteDensityMatrix &rho,
                                const EarmarkedSet &set, Measure measure) {
    return constrained_min(StateContext(rho), set, measure);
}

// ---------------------------------------------------------------------------
// Reference (unconstrained) minimization
// ---------------------------------------------------------------------------

namespace {

void reference_qubit(const StateContext &ctx, const RefineOptions &opts,
                     CorrelationEval *out_qd, CorrelationEval *out_qwd) {
    const int nf = std::max(2, opts.grid_f);
    const int nphi = std::max(1, opts.grid_phi);
    const int k = std::max(1, opts.refine_starts);
    TopK top_qd(k), top_qwd(k);
    for (int i = 0; i < nf; ++i) {
        const double f = -1.0 + 2.0 * i / (nf - 1);
        const double theta = std::acos(f);
        for (int j = 0; j < nphi; ++j) {
            const double phi = kTwoPi * j / nphi;
            const BasisValue v = ctx.eval_qubit(f, phi);
            if (out_qd)
                top_qd.push(v.qd, theta, phi);
            if (out_qwd)
                top_qwd.push(v.qwd, theta, phi);
        }
    }
    const auto refine = [&](Measure m, const TopK &top) {
        const std::function<double(const RVector &)> obj =
            [&](const RVector &x) {
                return ctx.eval_qubit(std::cos(x(0)), x(1), m);
            };
        double best = top.rows()[0][0];
        double theta = top.rows()[0][1], phi = top.rows()[0][2];
        for (const auto &row : top.rows()) {
            if (row[0] == kInf)
                continue;
            RVector x0(2);
            x0 << row[1], row[2];
            const NmResult r = nelder_mead(obj, x0, 0.05, opts.simplex_tol,
                                           opts.value_tol, opts.max_iter);
            if (r.fval < best) {
                best = r.fval;
                theta = r.x(0);
                phi = r.x(1);
            }
        }
        CorrelationEval e;
        e.measure = m;
        e.value_actual = clamp_value(best);
        e.optimal_params = QubitProjectorParams{std::cos(theta), fold_phi(phi)};
        return e;
    };
    if (out_qd)
        *out_qd = refine(Measure::QD, top_qd);
    if (out_qwd)
        *out_qwd = refine(Measure::QWD, top_qwd);
}

void reference_qutrit(const StateContext &ctx, const RefineOptions &opts,
                      CorrelationEval *out_qd, CorrelationEval *out_qwd) {
    std::vector<CMatrix> starts;
    for (const MeasurementBasis &b : triad(3).bases)
        starts.push_back(b.vectors);
    RandomStream stream(opts.seed);
    for (int i = 0; i < opts.random_starts; ++i)
        starts.push_back(haar_unitary(3, stream));

    const auto refine = [&](Measure m) {
        double best = kInf;
        CMatrix best_u;
        for (const CMatrix &u0 : starts) {
            const std::function<double(const RVector &)> obj =
                [&](const RVector &x) {
                    return ctx.eval(MeasurementBasis{qutrit_chart(u0, x)}, m);
                };
            const NmResult r =
                nelder_mead(obj, RVector::Zero(8), 0.05,
                            opts.simplex_tol_qutrit, opts.value_tol,
                            opts.max_iter);
            if (r.fval < best) {
                best = r.fval;
                best_u = qutrit_chart(u0, r.x);
            }
        }
        CorrelationEval e;
        e.measure = m;
        e.value_actual = clamp_value(best);
        e.optimal_basis = best_u;
        return e;
    };
    if (out_qd)
        *out_qd = refine(Measure::QD);
    if (out_qwd)
        *out_qwd = refine(Measure::QWD);
}

void reference_dispatch(const StateContext &ctx, const RefineOptions &opts,
                        CorrelationEval *out_qd, CorrelationEval *out_qwd) {
    if (ctx.dA() == 2)
        reference_qubit(ctx, opts, out_qd, out_qwd);
    else if (ctx.dA() == 3)
        reference_qutrit(ctx, opts, out_qd, out_qwd);
    else
        throw UnsupportedDim("reference minimization covers dA in {2, 3}");
}

} // namespace

CorrelationEval reference_min(const StateContext &ctx, Measure measure,
                              const RefineOptions &opts) {
    CorrelationEval e;
    if (measure == Measure::QD)
        reference_dispatch(ctx, opts, &e, nullptr);
    else
        reference_dispatch(ctx, opts, nullptr, &e);
    return e;
}

CorrelationEval reference_min(const BipartiteDensityMatrix &rho, Measure measure,
                              const RefineOptions &opts) {
    return reference_min(StateContext(rho), measure, opts);
}

std::pair<CorrelationEval, CorrelationEval>
reference_min_both(const StateContext &ctx, const RefineOptions &opts) {
    CorrelationEval qd, qwd;
    reference_dispatch(ctx, opts, &qd, &qwd);
    return {qd, qwd};
}

double voluntary_error(const StateContext &ctx, const EarmarkedSet &set,
                       Measure measure, const RefineOptions &opts) {
    const CorrelationEval c = constrained_min(ctx, set, measure);
    const CorrelationEval a = reference_min(ctx, measure, opts);
    return std::abs(*c.value_constrained - *a.value_actual);
}

double voluntary_error(const BipartiteDensityMatrix &rho, const EarmarkedSet &set,
                       Measure measure, const RefineOptions &opts) {
    return voluntary_error(StateContext(rho), set, measure, opts);
}

} // namespace qcorr
