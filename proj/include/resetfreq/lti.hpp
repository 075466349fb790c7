#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "resetfreq/matkit.hpp"

namespace resetfreq {

/// SISO linear time-invariant state-space quadruple.
struct StateSpace {
    Mat A; // m x m
    Mat B; // m x 1
    Mat C; // 1 x m
    Mat D; // 1 x 1

    StateSpace(Mat a, Mat b, Mat c, Mat d)
        : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
        if (!A.is_square()) throw dimension_error("StateSpace: A must be square");
        const std::size_t m = A.rows();
        if (B.rows() != m || B.cols() != 1) throw dimension_error("StateSpace: B must be m x 1");
        if (C.rows() != 1 || C.cols() != m) throw dimension_error("StateSpace: C must be 1 x m");
        if (D.rows() != 1 || D.cols() != 1) throw dimension_error("StateSpace: D must be 1 x 1");
        if (!A.all_finite() || !B.all_finite() || !C.all_finite() || !D.all_finite())
            throw dimension_error("StateSpace: non-finite entries");
    }

    std::size_t order() const { return A.rows(); }

    double output(const Mat& x, double u) const {
        return (C * x).scalar() + D.scalar() * u;
    }
};

/// Sinusoidal drive u(t) = amplitude * sin(omega * t). Zero amplitude is
/// accepted so free decay can reuse the propagation entry points.
struct SinusoidInput {
    double amplitude;
    double omega; // rad/s

    SinusoidInput(double amplitude_, double omega_) : amplitude(amplitude_), omega(omega_) {
        if (!(omega > 0.0) || !std::isfinite(omega))
            throw dimension_error("SinusoidInput: omega must be positive");
        if (amplitude < 0.0 || !std::isfinite(amplitude))
            throw dimension_error("SinusoidInput: amplitude must be >= 0");
    }

    double period() const { return 2.0 * std::numbers::pi / omega; }
    double half_period() const { return std::numbers::pi / omega; }
    double value(double t) const { return amplitude * std::sin(omega * t); }
};

/// Whether every eigenvalue of A has strictly negative real part.
inline bool is_hurwitz(const Mat& a) {
    for (const auto& lam : eigenvalues(a))
        if (!(lam.real() < 0.0)) return false;
    return true;
}

/// Transfer function value C (sI - A)^-1 B + D.
inline std::complex<double> freq_response(const StateSpace& ss, std::complex<double> s) {
    const std::size_t m = ss.order();
    CMat lhs = -to_complex(ss.A);
    for (std::size_t i = 0; i < m; ++i) lhs(i, i) += s;
    const CMat x = solve_c(lhs, to_complex(ss.B));
    return (to_complex(ss.C) * x)(0, 0) + std::complex<double>(ss.D.scalar());
}

namespace detail {

/// Phasor state of the particular sinusoidal solution:
/// w = (j omega I - A)^-1 B b, so x_p(t) = Im(w e^{j omega t}).
inline CMat sinusoid_phasor(const StateSpace& ss, const SinusoidInput& in) {
    const std::size_t m = ss.order();
    CMat lhs = -to_complex(ss.A);
    for (std::size_t i = 0; i < m; ++i) lhs(i, i) += std::complex<double>(0.0, in.omega);
    return solve_c(lhs, to_complex(ss.B)) * std::complex<double>(in.amplitude);
}

inline Mat phasor_at(const CMat& w, double phase) {
    const std::complex<double> rot(std::cos(phase), std::sin(phase));
    Mat x(w.rows(), 1);
    for (std::size_t i = 0; i < w.rows(); ++i) x(i, 0) = (w(i, 0) * rot).imag();
    return x;
}

} // namespace detail

/// Sinusoidal steady-state state of a Hurwitz system: Im[(jwI-A)^-1 B b e^{jwt}].
inline Mat sss_state(const StateSpace& ss, const SinusoidInput& in, double t) {
    if (!is_hurwitz(ss.A))
        throw dimension_error("sss_state: A must be Hurwitz for a unique steady state");
    return detail::phasor_at(detail::sinusoid_phasor(ss, in), in.omega * t);
}

enum class ResetParity { odd, even };

/// Steady-state value of a Hurwitz base-linear system at a reset instant
/// t_k = k pi / omega:  +(A^2 + w^2 I)^-1 B b w for odd k, negated for even k.
inline Mat x_bls_at_reset(const StateSpace& ss, const SinusoidInput& in, ResetParity parity) {
    if (!is_hurwitz(ss.A))
        throw dimension_error("x_bls_at_reset: A must be Hurwitz");
    const std::size_t m = ss.order();
    Mat lhs = ss.A * ss.A;
    for (std::size_t i = 0; i < m; ++i) lhs(i, i) += in.omega * in.omega;
    Mat v = solve(lhs, ss.B) * (in.amplitude * in.omega);
    return parity == ResetParity::odd ? v : -v;
}

/// Zero-initial-condition response of an m-state integrator bank driven by
/// b sin(wt) on every state: x(t) = (b/w)(1 - cos wt) per state. This is the
/// base-linear convention under which the reset integrator's square-wave
/// mean comes out as -b/w.
inline Mat integrator_bls(std::size_t m, const SinusoidInput& in, double t) {
    const double v = in.amplitude / in.omega * (1.0 - std::cos(in.omega * t));
    Mat x(m, 1);
    for (std::size_t i = 0; i < m; ++i) x(i, 0) = v;
    return x;
}

/// Exact state at t0 + dt under sinusoidal forcing, no time-stepping error:
/// x(t0+dt) = x_p(t0+dt) + e^{A dt} (x0 - x_p(t0)) with x_p the particular
/// sinusoidal solution. Valid whenever jw is not an eigenvalue of A (which
/// covers both Hurwitz A and the pure integrator A = 0).
inline Mat propagate_interval(const StateSpace& ss, const Mat& x0, const SinusoidInput& in,
                              double t0, double dt) {
    if (dt < 0.0) throw dimension_error("propagate_interval: dt must be >= 0");
    if (x0.rows() != ss.order() || x0.cols() != 1)
        throw dimension_error("propagate_interval: state dimension mismatch");
    if (dt == 0.0) return x0;
    const Mat ead = mat_exp(ss.A * dt);
    if (in.amplitude == 0.0) return ead * x0;
    const CMat w = detail::sinusoid_phasor(ss, in);
    const Mat xp0 = detail::phasor_at(w, in.omega * t0);
    const Mat xp1 = detail::phasor_at(w, in.omega * (t0 + dt));
    return xp1 + ead * (x0 - xp0);
}

} // namespace resetfreq
