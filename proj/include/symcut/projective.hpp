#pragma once

#include "symcut/numerics.hpp"

namespace symcut {

/// A point of CP^n stored as its canonical unit representative.
///
/// Canonical phase: the entry of largest modulus (lowest index on ties) is
/// real and strictly positive.
class ProjectivePoint {
 public:
  /// Canonical representative of [z]. Throws DegeneratePointError if |z| <= 1e-12.
  static ProjectivePoint from(const ComplexVector& z);

  [[nodiscard]] const ComplexVector& rep() const { return rep_; }
  /// Number of homogeneous coordinates (n + 1 for CP^n).
  [[nodiscard]] Index size() const { return rep_.size(); }
  /// Complex dimension n of the ambient CP^n.
  [[nodiscard]] Index dim() const { return rep_.size() - 1; }
  [[nodiscard]] RealVector flat() const { return to_real(rep_); }

 private:
  explicit ProjectivePoint(ComplexVector rep) : rep_(std::move(rep)) {}

  ComplexVector rep_;
};

inline ProjectivePoint proj_normalize(const ComplexVector& z) { return ProjectivePoint::from(z); }

/// Gauge-free distance ||b - c a|| with c the unit phase aligning a to b.
double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// |<a, b>| >= 1 - tol.
bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, double tol = 1e-9);

/// Tangent vector of CP^n realized as a horizontal vector at the representative.
struct ProjectiveTangent {
  ProjectivePoint base;
  ComplexVector vec;
};

/// v - <v,z>_R z - <v,iz>_R iz at the unit representative z.
ComplexVector horizontal_part(const ComplexVector& rep, const ComplexVector& v);

ProjectiveTangent horizontal_project(const ProjectivePoint& base, const ComplexVector& v);

/// Pushes the derivative of a smooth lift F (with F(x) = lambda * base.rep())
/// to a horizontal tangent at `base`.
ProjectiveTangent tangent_from_lift(const ProjectivePoint& base, const ComplexVector& lift_value,
                                    const ComplexVector& lift_derivative);

/// Sum of squares of the representative; zero exactly on the Fermat quadric.
Complex quadric_residual(const ProjectivePoint& p);

bool on_quadric(const ProjectivePoint& p, double tol = 1e-10);

/// |rep_i| <= tol. Throws DimensionError for an out-of-range index.
bool in_hyperplane(const ProjectivePoint& p, Index i, double tol = 1e-10);

}  // namespace symcut
