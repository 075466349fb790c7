#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "resetfreq/lti.hpp"
#include "resetfreq/matkit.hpp"

namespace resetfreq {

/// Minimum spacing enforced between resets when none is given. For the
/// sinusoid-driven open-loop case resets are pi/omega apart, so any gap
/// below that is behaviour-neutral.
inline constexpr double kDefaultMinResetGap = 1e-6;

/// An LTI element whose state jumps to reset_matrix * x whenever the input
/// crosses zero (subject to the minimum reset gap).
struct ResetElement {
    StateSpace base;
    Mat reset_matrix;     // m x m
    double min_reset_gap; // seconds, >= 0

    ResetElement(StateSpace base_, Mat reset_matrix_, double min_reset_gap_ = kDefaultMinResetGap)
        : base(std::move(base_)), reset_matrix(std::move(reset_matrix_)),
          min_reset_gap(min_reset_gap_) {
        if (!reset_matrix.is_square() || reset_matrix.rows() != base.order())
            throw dimension_error("ResetElement: reset matrix must be m x m");
        if (!reset_matrix.all_finite())
            throw dimension_error("ResetElement: non-finite reset matrix");
        if (!(min_reset_gap >= 0.0))
            throw dimension_error("ResetElement: minimum reset gap must be >= 0");
    }

    std::size_t order() const { return base.order(); }

    /// Pure-integrator base dynamics (A identically zero)?
    bool integrator_base() const { return base.A.all_zero(); }
};

/// First-order reset element: A=-wr, B=wr, C=1, D=0.
inline ResetElement make_fore(double omega_r, const Mat& rho,
                              double min_reset_gap = kDefaultMinResetGap) {
    if (!(omega_r > 0.0)) throw dimension_error("make_fore: omega_r must be positive");
    StateSpace base(Mat::from_rows({{-omega_r}}), Mat::from_rows({{omega_r}}),
                    Mat::from_rows({{1.0}}), Mat::from_rows({{0.0}}));
    return ResetElement(std::move(base), rho, min_reset_gap);
}

/// Second-order reset element: A=[[0,1],[-wr^2,-2 br wr]], B=[0; wr^2], C=[1 0].
inline ResetElement make_sore(double omega_r, double beta_r, const Mat& rho,
                              double min_reset_gap = kDefaultMinResetGap) {
    if (!(omega_r > 0.0)) throw dimension_error("make_sore: omega_r must be positive");
    StateSpace base(
        Mat::from_rows({{0.0, 1.0}, {-omega_r * omega_r, -2.0 * beta_r * omega_r}}),
        Mat::col({0.0, omega_r * omega_r}), Mat::from_rows({{1.0, 0.0}}),
        Mat::from_rows({{0.0}}));
    return ResetElement(std::move(base), rho, min_reset_gap);
}

/// Reset integrator bank: m decoupled scalar integrators fed by the same
/// scalar input (B is a column of ones so the element stays SISO); output is
/// the first state. m=1 with full reset is the Clegg integrator.
inline ResetElement make_integrator(std::size_t m, const Mat& rho,
                                    double min_reset_gap = kDefaultMinResetGap) {
    if (m < 1) throw dimension_error("make_integrator: need at least one state");
    Mat c(1, m);
    c(0, 0) = 1.0;
    StateSpace base(Mat::zeros(m, m), Mat::ones(m, 1), std::move(c), Mat::from_rows({{0.0}}));
    return ResetElement(std::move(base), rho, min_reset_gap);
}

/// Scalar shorthand: rho = gamma * I.
inline Mat scaled_identity(std::size_t m, double gamma) { return Mat::identity(m) * gamma; }

/// State jump applied at a reset instant.
inline Mat apply_reset(const ResetElement& el, const Mat& x) {
    if (x.rows() != el.order() || x.cols() != 1)
        throw dimension_error("apply_reset: state dimension mismatch");
    return el.reset_matrix * x;
}

/// Result of scanning rho(A_rho * e^{A delta}) over a delta grid. The
/// underlying condition is "< 1 for every positive delta"; a finite grid can
/// only gate, not prove, so the scan parameters are part of the report.
struct ConvergenceReport {
    double max_radius = 0.0;
    double worst_delta = 0.0;
    bool pass = false;
    std::vector<double> delta_grid;
};

/// Sample the uniform-convergence condition on a log-spaced grid in
/// (delta_max * 1e-6, delta_max]. Pass requires max radius < 1 - margin.
inline ConvergenceReport check_convergence(const ResetElement& el, double delta_max,
                                           std::size_t n_grid) {
    if (!(delta_max > 0.0)) throw dimension_error("check_convergence: delta_max must be > 0");
    if (n_grid < 2) throw dimension_error("check_convergence: need at least 2 grid points");
    ConvergenceReport rep;
    rep.delta_grid.reserve(n_grid);
    const double lo = std::log(delta_max * 1e-6);
    const double hi = std::log(delta_max);
    for (std::size_t i = 0; i < n_grid; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(n_grid - 1);
        const double delta = std::exp(lo + f * (hi - lo));
        rep.delta_grid.push_back(delta);
        const double radius = spectral_radius(el.reset_matrix * mat_exp(el.base.A * delta));
        if (radius >= rep.max_radius) {
            rep.max_radius = radius;
            rep.worst_delta = delta;
        }
    }
    rep.pass = rep.max_radius < 1.0 - tol::convergence_margin;
    return rep;
}

/// Default-scan overload: delta_max = 10x the slowest base time constant, or
/// 1 when the base has no decaying mode (for A = 0 the radius is
/// delta-independent, so the choice is immaterial).
inline ConvergenceReport check_convergence(const ResetElement& el, std::size_t n_grid = 400) {
    double slowest = 0.0;
    for (const auto& lam : eigenvalues(el.base.A)) {
        const double re = lam.real();
        if (re < 0.0) slowest = std::max(slowest, 1.0 / -re);
    }
    const double delta_max = slowest > 0.0 ? 10.0 * slowest : 1.0;
    return check_convergence(el, delta_max, n_grid);
}

} // namespace resetfreq
