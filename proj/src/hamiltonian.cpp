#include "symcut/hamiltonian.hpp"

#include "symcut/errors.hpp"
#include "symcut/forms.hpp"

#include <cmath>

namespace symcut {

namespace {

constexpr double kZeroSection = 1e-8;

void require_off_zero_section(const RealVector& q) {
  if (q.norm() <= kZeroSection) throw DomainError("Hamiltonian |q| is not smooth at the zero section");
}

}  // namespace

CotangentTangent hamiltonian_vector_field(const HamiltonianSpec& h, const CotangentPoint& m,
                                          double fd_step) {
  require_off_zero_section(m.q());
  const auto basis = tangent_basis(m);
  const auto dim = static_cast<Index>(basis.size());
  const double k = m.base_radius();

  RealMatrix omega(dim, dim);
  RealVector grad(dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) omega(i, j) = omega_std(basis[i], basis[j]);
    const CotangentPoint plus = retract(m.p() + fd_step * basis[i].u, m.q() + fd_step * basis[i].w, k);
    const CotangentPoint minus = retract(m.p() - fd_step * basis[i].u, m.q() - fd_step * basis[i].w, k);
    grad[i] = (h.value(plus) - h.value(minus)) / (2 * fd_step);
  }
  // omega(X, b_j) = sum_i x_i omega(b_i, b_j) = g_j
  const RealMatrix system = omega.transpose();
  Eigen::FullPivLU<RealMatrix> lu(system);
  if (!lu.isInvertible()) throw NumericalRankError("restricted symplectic form is singular");
  const RealVector x = lu.solve(grad);
  if ((system * x - grad).norm() > 1e-8) {
    throw NumericalRankError("Hamiltonian vector field solve residual above 1e-8");
  }
  RealVector u = RealVector::Zero(m.p().size());
  RealVector w = RealVector::Zero(m.p().size());
  for (Index i = 0; i < dim; ++i) {
    u += x[i] * basis[i].u;
    w += x[i] * basis[i].w;
  }
  return {m, u, w};
}

CotangentTangent analytic_vector_field(const HamiltonianSpec& h, const CotangentPoint& m) {
  require_off_zero_section(m.q());
  const double k = h.base_radius;
  const double nq = m.fiber_norm();
  return {m, k * m.q() / nq, -nq * m.p() / k};
}

CotangentPoint cogeodesic_flow(const HamiltonianSpec& h, const CotangentPoint& m, double t) {
  require_off_zero_section(m.q());
  const double k = h.base_radius;
  const double nq = m.fiber_norm();
  const RealVector e1 = m.p() / k;
  const RealVector e2 = m.q() / nq;
  const double c = std::cos(t);
  const double s = std::sin(t);
  return CotangentPoint::make(k * (c * e1 + s * e2), nq * (c * e2 - s * e1), m.base_radius());
}

CotangentPoint flow_closed_form(const CotangentPoint& m, double t) {
  const double k = m.base_radius();
  if (std::abs(m.fiber_norm() - k) > 1e-10 * std::max(1.0, k)) {
    throw PreconditionError(
        "flow_closed_form: requires |q| = |p| (apply even_rescale to reach an evened bundle)");
  }
  const double c = std::cos(t);
  const double s = std::sin(t);
  return CotangentPoint::make(c * m.p() + s * m.q(), c * m.q() - s * m.p(), k);
}

CotangentPoint scalar_action(const CotangentPoint& m, double t) {
  const ComplexVector z = m.embedded() * std::exp(Complex(0.0, -t));
  return CotangentPoint::make(z.real(), z.imag(), m.base_radius());
}

namespace {

struct State {
  RealVector p;
  RealVector q;
};

State field_at(const HamiltonianSpec& h, const State& s, FieldSource source, double k,
               double fd_step) {
  if (source == FieldSource::analytic) {
    const double nq = s.q.norm();
    if (nq <= kZeroSection) throw DomainError("rk4_integrate: trajectory reached the zero section");
    return {k * s.q / nq, -nq * s.p / k};
  }
  const CotangentPoint on = retract(s.p, s.q, k);
  const CotangentTangent x = hamiltonian_vector_field(h, on, fd_step);
  return {x.u, x.w};
}

}  // namespace

FlowResult rk4_integrate(const HamiltonianSpec& h, const CotangentPoint& m, double t_final,
                         double dt, FieldSource source, const FlowObserver& observe,
                         double fd_step) {
  if (!(dt > 0)) throw PreconditionError("rk4_integrate: dt must be > 0");
  if (!(t_final >= 0)) throw PreconditionError("rk4_integrate: t_final must be >= 0");
  if (std::abs(h.base_radius - m.base_radius()) > 1e-15 * std::max(1.0, h.base_radius)) {
    throw PreconditionError("rk4_integrate: Hamiltonian and point disagree on base radius");
  }
  const double k = m.base_radius();
  const int steps = static_cast<int>(std::ceil(t_final / dt - 1e-12));
  const double step = steps > 0 ? t_final / steps : 0.0;

  State s{m.p(), m.q()};
  double constraint_drift = 0.0;
  if (observe) observe(0.0, m);
  for (int i = 0; i < steps; ++i) {
    const State k1 = field_at(h, s, source, k, fd_step);
    const State k2 = field_at(h, {s.p + 0.5 * step * k1.p, s.q + 0.5 * step * k1.q}, source, k, fd_step);
    const State k3 = field_at(h, {s.p + 0.5 * step * k2.p, s.q + 0.5 * step * k2.q}, source, k, fd_step);
    const State k4 = field_at(h, {s.p + step * k3.p, s.q + step * k3.q}, source, k, fd_step);
    s.p += step / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
    s.q += step / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    if (!s.p.allFinite() || !s.q.allFinite()) throw DomainError("rk4_integrate: step failure");
    constraint_drift = std::max({constraint_drift, std::abs(s.p.norm() - k), std::abs(s.p.dot(s.q))});
    const CotangentPoint projected = retract(s.p, s.q, k);
    s.p = projected.p();
    s.q = projected.q();
    if (observe) observe((i + 1) * step, projected);
  }
  CotangentPoint end = CotangentPoint::make(s.p, s.q, k);
  const double drift = std::abs(h.value(end) - h.value(m));
  return {std::move(end), drift, constraint_drift, steps};
}

}  // namespace symcut
