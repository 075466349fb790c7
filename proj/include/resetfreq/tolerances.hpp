#pragma once

namespace resetfreq::tol {

// Shared numeric tolerances. Tests assert against the same constants the
// operations use, so a change here tightens or loosens both sides at once.

inline constexpr double mat_exp_rel = 1e-12;        // matrix exponential, ||M|| <= 1e3
inline constexpr double eig_accuracy = 1e-10;       // eigenvalue / spectral radius
inline constexpr double solve_residual = 1e-10;     // linear solve backward residual
inline constexpr double condition_limit = 1e14;     // solve_c rejects beyond this
inline constexpr double lstsq_orthogonality = 1e-8; // A^T r orthogonality bound
inline constexpr double convergence_margin = 1e-12; // spectral-radius gate: pass iff rho < 1 - margin
inline constexpr double steady_state_default = 1e-10; // period-to-period sup norm
inline constexpr double reset_instant_rel = 1e-12;  // reset instants vs k*pi/omega, relative to period
inline constexpr double harmonic_identity = 1e-12;  // H_1 = G + q_1 wiring identity

} // namespace resetfreq::tol
