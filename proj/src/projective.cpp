#include "symcut/projective.hpp"

#include "symcut/errors.hpp"

#include <cmath>
#include <string>

namespace symcut {

ProjectivePoint ProjectivePoint::from(const ComplexVector& z) {
  if (z.size() < 1) throw DimensionError("proj_normalize: empty vector");
  if (!all_finite(z)) throw DomainError("proj_normalize: non-finite entry");
  const double norm = z.norm();
  if (norm <= 1e-12) throw DegeneratePointError("proj_normalize: representative is ~0");
  Index lead = 0;
  double best = -1.0;
  for (Index k = 0; k < z.size(); ++k) {
    const double m = std::abs(z[k]);
    if (m > best) {
      best = m;
      lead = k;
    }
  }
  const Complex phase = std::conj(z[lead]) / std::abs(z[lead]);
  ComplexVector rep = z * (phase / norm);
  rep[lead] = Complex(std::abs(rep[lead]), 0.0);
  return ProjectivePoint(std::move(rep));
}

double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.size() != b.size()) throw DimensionError("projective_distance: size mismatch");
  const Complex overlap = hermitian(a.rep(), b.rep());
  const double m = std::abs(overlap);
  const Complex phase = m > 0 ? overlap / m : Complex(1.0, 0.0);
  return (b.rep() - phase * a.rep()).norm();
}

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::abs(hermitian(a.rep(), b.rep())) >= 1.0 - tol;
}

ComplexVector horizontal_part(const ComplexVector& rep, const ComplexVector& v) {
  if (rep.size() != v.size()) throw DimensionError("horizontal_project: size mismatch");
  // <v, z>_R and <v, iz>_R are the real and imaginary parts of the hermitian product.
  const Complex c = hermitian(rep, v);
  return v - c * rep;
}

ProjectiveTangent horizontal_project(const ProjectivePoint& base, const ComplexVector& v) {
  return {base, horizontal_part(base.rep(), v)};
}

ProjectiveTangent tangent_from_lift(const ProjectivePoint& base, const ComplexVector& lift_value,
                                    const ComplexVector& lift_derivative) {
  const Complex lambda = hermitian(base.rep(), lift_value);
  if (std::abs(lambda) <= 1e-300) throw DegeneratePointError("tangent_from_lift: zero lift");
  return horizontal_project(base, lift_derivative / lambda);
}

Complex quadric_residual(const ProjectivePoint& p) {
  Complex s = 0.0;
  for (const auto& z : p.rep()) s += z * z;
  return s;
}

bool on_quadric(const ProjectivePoint& p, double tol) {
  return std::abs(quadric_residual(p)) <= tol;
}

bool in_hyperplane(const ProjectivePoint& p, Index i, double tol) {
  if (i < 0 || i >= p.size()) {
    throw DimensionError("in_hyperplane: index " + std::to_string(i) + " out of range");
  }
  return std::abs(p.rep()[i]) <= tol;
}

}  // namespace symcut
