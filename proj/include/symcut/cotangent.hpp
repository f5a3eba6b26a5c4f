#pragma once

#include "symcut/numerics.hpp"

#include <vector>

namespace symcut {

/// A point (p, q) of T*S^n(k) inside R^{n+1} (+) R^{n+1}: |p| = k, <p, q> = 0.
///
/// Flat coordinates are the interleaved real coordinates of z = p + i q, so
/// omega_std on the flat vector is sum dp_k ^ dq_k.
class CotangentPoint {
 public:
  /// Validates both constraints to 1e-12 (relative to k). Throws PreconditionError.
  static CotangentPoint make(RealVector p, RealVector q, double base_radius = 1.0);

  /// Reads flat (interleaved p + i q) coordinates and validates.
  static CotangentPoint from_flat(const RealVector& x, double base_radius = 1.0);

  [[nodiscard]] const RealVector& p() const { return p_; }
  [[nodiscard]] const RealVector& q() const { return q_; }
  [[nodiscard]] double base_radius() const { return base_radius_; }
  /// Dimension n of the base sphere.
  [[nodiscard]] Index n() const { return p_.size() - 1; }
  [[nodiscard]] double fiber_norm() const { return q_.norm(); }

  [[nodiscard]] ComplexVector embedded() const;
  [[nodiscard]] RealVector flat() const { return to_real(embedded()); }

 private:
  CotangentPoint(RealVector p, RealVector q, double k)
      : p_(std::move(p)), q_(std::move(q)), base_radius_(k) {}

  RealVector p_;
  RealVector q_;
  double base_radius_;
};

/// Tangent vector (u, w) at a cotangent point: <p,u> = 0 and <u,q> + <p,w> = 0.
struct CotangentTangent {
  CotangentPoint at;
  RealVector u;
  RealVector w;

  [[nodiscard]] ComplexVector embedded() const;
  [[nodiscard]] RealVector flat() const { return to_real(embedded()); }
};

/// Residuals of the two linearized constraints (max of the two).
double linearized_constraint_residual(const CotangentPoint& m, const RealVector& u,
                                      const RealVector& w);

/// Nearest-ish point of the constraint set: p rescaled to k, then q made orthogonal to p.
CotangentPoint retract(const RealVector& p, const RealVector& q, double base_radius);

/// Uniform base point, fiber vector uniform by volume in the open disc of `fiber_radius`.
CotangentPoint sample_disc_bundle(int n, double base_radius, double fiber_radius, Rng& rng);

/// Uniform base point, fiber vector uniform on the sphere |q| = fiber_radius.
CotangentPoint sample_cosphere(int n, double base_radius, double fiber_radius, Rng& rng);

/// Orthonormal basis (2n vectors) of the tangent space in the ambient metric.
std::vector<CotangentTangent> tangent_basis(const CotangentPoint& m);

/// Orthogonal projection of an ambient vector (u, w) onto the tangent space.
CotangentTangent project_tangent(const CotangentPoint& m, const RealVector& u,
                                 const RealVector& w);

CotangentPoint antipode(const CotangentPoint& m);

/// (p, q) -> (sqrt(r) p, q / sqrt(r)): U*_r S^n(1) onto U*_sqrt(r) S^n(sqrt(r)).
CotangentPoint even_rescale(const CotangentPoint& m, double r);
CotangentPoint even_rescale_inverse(const CotangentPoint& m, double r);

}  // namespace symcut
