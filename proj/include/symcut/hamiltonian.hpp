#pragma once

#include "symcut/cotangent.hpp"

#include <functional>

namespace symcut {

/// H_k(p, q) = k |q| on T*S^n(k).
struct HamiltonianSpec {
  double base_radius = 1.0;

  [[nodiscard]] double value(const CotangentPoint& m) const { return base_radius * m.fiber_norm(); }
  [[nodiscard]] double value(const RealVector& /*p*/, const RealVector& q) const {
    return base_radius * q.norm();
  }
};

/// Solution X of omega_std(X, v) = dH(v) on the tangent space.
///
/// dH is taken by central differences along retracted curves through the
/// orthonormal tangent basis; the 2n x 2n system is solved by LU. Throws
/// DomainError near the zero section (|q| <= 1e-8) and NumericalRankError if
/// the restricted form is singular or the solve residual exceeds 1e-8.
CotangentTangent hamiltonian_vector_field(const HamiltonianSpec& h, const CotangentPoint& m,
                                          double fd_step = 1e-5);

/// Closed form of the same field: (k q/|q|, -|q| p/k).
CotangentTangent analytic_vector_field(const HamiltonianSpec& h, const CotangentPoint& m);

/// Exact flow of H_k for any fiber radius: rotation of (p, k q/|q|) at unit speed.
CotangentPoint cogeodesic_flow(const HamiltonianSpec& h, const CotangentPoint& m, double t);

/// sigma_t(p, q) = (cos t p + sin t q, cos t q - sin t p). Requires |q| = |p|.
CotangentPoint flow_closed_form(const CotangentPoint& m, double t);

/// Real and imaginary parts of e^{-it} (p + i q).
CotangentPoint scalar_action(const CotangentPoint& m, double t);

struct FlowResult {
  CotangentPoint endpoint;
  double energy_drift = 0.0;      // |H(end) - H(start)|
  double constraint_drift = 0.0;  // largest pre-reprojection constraint residual
  int steps = 0;
};

enum class FieldSource { analytic, solved };

using FlowObserver = std::function<void(double t, const CotangentPoint&)>;

/// Classical RK4 in the ambient space, reprojecting onto the constraint set
/// after every step. The step is shrunk to t_final / ceil(t_final / dt) so the
/// endpoint lands exactly on t_final. `observe` sees every accepted state.
FlowResult rk4_integrate(const HamiltonianSpec& h, const CotangentPoint& m, double t_final,
                         double dt, FieldSource source = FieldSource::analytic,
                         const FlowObserver& observe = {}, double fd_step = 1e-5);

}  // namespace symcut
