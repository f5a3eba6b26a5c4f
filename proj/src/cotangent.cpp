#include "symcut/cotangent.hpp"

#include "symcut/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symcut {

namespace {

constexpr double kConstructionTol = 1e-12;

ComplexVector combine(const RealVector& re, const RealVector& im) {
  ComplexVector z(re.size());
  for (Index k = 0; k < re.size(); ++k) z[k] = Complex(re[k], im[k]);
  return z;
}

}  // namespace

CotangentPoint CotangentPoint::make(RealVector p, RealVector q, double base_radius) {
  if (!(base_radius > 0)) throw PreconditionError("cotangent point: base radius must be > 0");
  if (p.size() != q.size() || p.size() < 2) {
    throw DimensionError("cotangent point: p and q must have equal length >= 2");
  }
  if (!p.allFinite() || !q.allFinite()) throw PreconditionError("cotangent point: non-finite");
  const double scale = std::max(1.0, base_radius);
  const double radial = std::abs(p.norm() - base_radius);
  const double ortho = std::abs(p.dot(q));
  if (radial > kConstructionTol * scale) {
    throw PreconditionError("cotangent point: |p| - k = " + std::to_string(radial));
  }
  if (ortho > kConstructionTol * scale * std::max(1.0, q.norm())) {
    throw PreconditionError("cotangent point: <p,q> = " + std::to_string(ortho));
  }
  return CotangentPoint(std::move(p), std::move(q), base_radius);
}

CotangentPoint CotangentPoint::from_flat(const RealVector& x, double base_radius) {
  const ComplexVector z = to_complex(x);
  return make(z.real(), z.imag(), base_radius);
}

ComplexVector CotangentPoint::embedded() const { return combine(p_, q_); }

ComplexVector CotangentTangent::embedded() const { return combine(u, w); }

double linearized_constraint_residual(const CotangentPoint& m, const RealVector& u,
                                      const RealVector& w) {
  return std::max(std::abs(m.p().dot(u)), std::abs(u.dot(m.q()) + m.p().dot(w)));
}

CotangentPoint retract(const RealVector& p, const RealVector& q, double base_radius) {
  const double norm = p.norm();
  if (norm <= 1e-300) throw DomainError("retract: base vector is zero");
  RealVector pr = p * (base_radius / norm);
  const RealVector unit = pr / base_radius;
  RealVector qr = q - unit.dot(q) * unit;
  return CotangentPoint::make(std::move(pr), std::move(qr), base_radius);
}

namespace {

RealVector sample_direction(int n, Rng& rng) {
  RealVector g = sample_gaussian(n + 1, rng);
  return g / g.norm();
}

RealVector sample_fiber_direction(const RealVector& unit_p, Rng& rng) {
  RealVector g = sample_gaussian(unit_p.size(), rng);
  g -= unit_p.dot(g) * unit_p;
  return g / g.norm();
}

CotangentPoint build(const RealVector& unit_p, const RealVector& unit_q, double base_radius,
                     double fiber_norm) {
  RealVector p = base_radius * unit_p;
  RealVector q = fiber_norm * unit_q;
  // one more orthogonalization pass keeps <p,q> at rounding level
  q -= unit_p.dot(q) * unit_p;
  return CotangentPoint::make(std::move(p), std::move(q), base_radius);
}

void check_sampler_args(int n, double base_radius, double fiber_radius) {
  if (n < 1) throw PreconditionError("sampler: n must be >= 1");
  if (!(base_radius > 0) || !(fiber_radius > 0)) {
    throw PreconditionError("sampler: radii must be > 0");
  }
}

}  // namespace

CotangentPoint sample_disc_bundle(int n, double base_radius, double fiber_radius, Rng& rng) {
  check_sampler_args(n, base_radius, fiber_radius);
  const RealVector unit_p = sample_direction(n, rng);
  const RealVector unit_q = sample_fiber_direction(unit_p, rng);
  const double radius = fiber_radius * std::pow(rng.uniform(), 1.0 / n);
  return build(unit_p, unit_q, base_radius, radius);
}

CotangentPoint sample_cosphere(int n, double base_radius, double fiber_radius, Rng& rng) {
  check_sampler_args(n, base_radius, fiber_radius);
  const RealVector unit_p = sample_direction(n, rng);
  const RealVector unit_q = sample_fiber_direction(unit_p, rng);
  return build(unit_p, unit_q, base_radius, fiber_radius);
}

std::vector<CotangentTangent> tangent_basis(const CotangentPoint& m) {
  const Index d = m.p().size();
  // Rows of the linearized constraints as columns of A; the tangent space is their
  // orthogonal complement in R^{2d}, read off from a full QR of A.
  RealMatrix a = RealMatrix::Zero(2 * d, 2);
  a.col(0).head(d) = m.p();
  a.col(1).head(d) = m.q();
  a.col(1).tail(d) = m.p();
  Eigen::HouseholderQR<RealMatrix> qr(a);
  const RealMatrix r = qr.matrixQR().topRows(2).triangularView<Eigen::Upper>();
  if (std::abs(r(0, 0)) < 1e-12 || std::abs(r(1, 1)) < 1e-12) {
    throw NumericalRankError("tangent_basis: constraint rows are rank deficient");
  }
  const RealMatrix q = qr.householderQ();
  std::vector<CotangentTangent> basis;
  basis.reserve(2 * d - 2);
  for (Index j = 2; j < 2 * d; ++j) {
    basis.push_back({m, q.col(j).head(d), q.col(j).tail(d)});
  }
  return basis;
}

CotangentTangent project_tangent(const CotangentPoint& m, const RealVector& u,
                                 const RealVector& w) {
  RealVector pu = RealVector::Zero(u.size());
  RealVector pw = RealVector::Zero(w.size());
  for (const auto& b : tangent_basis(m)) {
    const double c = b.u.dot(u) + b.w.dot(w);
    pu += c * b.u;
    pw += c * b.w;
  }
  return {m, pu, pw};
}

CotangentPoint antipode(const CotangentPoint& m) {
  return CotangentPoint::make(-m.p(), -m.q(), m.base_radius());
}

CotangentPoint even_rescale(const CotangentPoint& m, double r) {
  if (!(r > 0)) throw PreconditionError("even_rescale: r must be > 0");
  if (std::abs(m.base_radius() - 1.0) > 1e-15) {
    throw PreconditionError("even_rescale: expects a point of T*S^n(1)");
  }
  const double s = std::sqrt(r);
  return CotangentPoint::make(s * m.p(), m.q() / s, s);
}

CotangentPoint even_rescale_inverse(const CotangentPoint& m, double r) {
  if (!(r > 0)) throw PreconditionError("even_rescale_inverse: r must be > 0");
  const double s = std::sqrt(r);
  if (std::abs(m.base_radius() - s) > 1e-15 * std::max(1.0, s)) {
    throw PreconditionError("even_rescale_inverse: expects a point of T*S^n(sqrt r)");
  }
  return CotangentPoint::make(m.p() / s, s * m.q(), 1.0);
}

}  // namespace symcut
