#include <doctest.h>

#include "symcut/errors.hpp"
#include "symcut/forms.hpp"
#include "symcut/hamiltonian.hpp"
#include "symcut/maps.hpp"

#include <cmath>

using namespace symcut;

namespace {

RealVector unit(Index n, Index k) { return RealVector::Unit(n, k); }

double distance(const CotangentPoint& a, const CotangentPoint& b) { return (a.flat() - b.flat()).norm(); }

// Ambient orbit of the scalar circle action; valid off the evened cosphere too.
RealVector scalar_orbit(const CotangentPoint& m, double t) {
  return to_real(ComplexVector(std::exp(Complex(0, -t)) * m.embedded()));
}

double rk4_error(const CotangentPoint& m, int steps) {
  const FlowResult run = rk4_integrate(HamiltonianSpec{m.base_radius()}, m, 2 * kPi, 2 * kPi / steps);
  return distance(run.endpoint, flow_closed_form(m, 2 * kPi));
}

}  // namespace

TEST_CASE("Hamiltonian field example") {
  const CotangentPoint m = CotangentPoint::make(unit(3, 0), unit(3, 1));
  const CotangentTangent x = hamiltonian_vector_field(HamiltonianSpec{1.0}, m);
  CHECK((x.u - unit(3, 1)).norm() < 1e-6);
  CHECK((x.w + unit(3, 0)).norm() < 1e-6);
}

TEST_CASE("property: solved field satisfies the defining equation") {
  Rng rng(3);
  const double h = 1e-5;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const double k = 0.5 + rng.uniform();
    CotangentPoint m = sample_disc_bundle(n, k, 2.0, rng);
    if (m.fiber_norm() < 0.05) continue;
    const HamiltonianSpec spec{k};
    const CotangentTangent x = hamiltonian_vector_field(spec, m);
    CHECK(std::abs(linearized_constraint_residual(m, x.u, x.w)) < 1e-9);
    for (const auto& b : tangent_basis(m)) {
      const double dh = (spec.value(m.p() + h * b.u, m.q() + h * b.w) -
                         spec.value(m.p() - h * b.u, m.q() - h * b.w)) / (2 * h);
      CHECK(std::abs(omega_std(x, b) - dh) < 1e-8);
    }
    const double along = (spec.value(m.p() + h * x.u, m.q() + h * x.w) -
                          spec.value(m.p() - h * x.u, m.q() - h * x.w)) / (2 * h);
    CHECK(std::abs(along) < 1e-8);
    const CotangentTangent exact = analytic_vector_field(spec, m);
    CHECK((exact.u - x.u).norm() + (exact.w - x.w).norm() < 1e-6);
  }
}

TEST_CASE("field is undefined on the zero section") {
  const CotangentPoint m = CotangentPoint::make(unit(3, 0), RealVector::Zero(3));
  CHECK_THROWS_AS(hamiltonian_vector_field(HamiltonianSpec{1.0}, m), DomainError);
  CHECK_THROWS_AS(analytic_vector_field(HamiltonianSpec{1.0}, m), DomainError);
}

TEST_CASE("closed-form flow examples") {
  const CotangentPoint m = CotangentPoint::make(unit(3, 0), unit(3, 1));
  CHECK(distance(flow_closed_form(m, 0.0), m) == 0.0);
  CHECK(distance(flow_closed_form(m, kPi), antipode(m)) < 1e-15);
  const CotangentPoint quarter = flow_closed_form(m, kPi / 2);
  CHECK((quarter.p() - unit(3, 1)).norm() < 1e-15);
  CHECK((quarter.q() + unit(3, 0)).norm() < 1e-15);
  CHECK_THROWS_AS(flow_closed_form(CotangentPoint::make(unit(3, 0), 0.5 * unit(3, 1)), 1.0), PreconditionError);
}

TEST_CASE("property: flow equals the scalar action on evened cospheres") {
  Rng rng(17);
  for (double r : {0.5, 1.0, 2.0}) {
    for (int trial = 0; trial < 100; ++trial) {
      const double k = std::sqrt(r);
      const CotangentPoint m = sample_cosphere(1 + trial % 3, k, k, rng);
      const ProjectivePoint edge = cosphere_boundary(m);
      for (int j = 0; j < 100; ++j) {
        const double t = 2 * kPi * j / 100.0;
        CHECK(distance(flow_closed_form(m, t), scalar_action(m, t)) < 1e-12);
      }
      CHECK(distance(scalar_action(m, 2 * kPi), m) < 1e-14);
      CHECK(projective_distance(cosphere_boundary(scalar_action(m, 1.234)), edge) < 1e-12);
    }
  }
}

TEST_CASE("cogeodesic flow matches the closed form where both apply") {
  Rng rng(5);
  const CotangentPoint m = sample_cosphere(2, 1.0, 1.0, rng);
  for (double t : {0.0, 0.7, 3.0, 6.0}) {
    CHECK(distance(cogeodesic_flow(HamiltonianSpec{1.0}, m, t), flow_closed_form(m, t)) < 1e-14);
  }
}

TEST_CASE("property: even rescaling conjugates the flows with the naive time parameter") {
  Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const double r = 0.25 + 3.0 * rng.uniform();
    const CotangentPoint m = sample_cosphere(1 + trial % 3, 1.0, r, rng);
    const double t = 2 * kPi * rng.uniform();
    const CotangentPoint lhs = even_rescale(cogeodesic_flow(HamiltonianSpec{1.0}, m, t), r);
    const CotangentPoint rhs = flow_closed_form(even_rescale(m, r), t);
    CHECK(distance(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("RK4 over one period against the closed form") {
  Rng rng(23);
  for (double r : {0.5, 1.0, 2.0}) {
    const double k = std::sqrt(r);
    const CotangentPoint m = sample_cosphere(2, k, k, rng);
    const FlowResult run = rk4_integrate(HamiltonianSpec{k}, m, 2 * kPi, 1e-3);
    CHECK(run.steps == 6284);
    CHECK(distance(run.endpoint, flow_closed_form(m, 2 * kPi)) < 1e-6);
    CHECK(run.energy_drift < 1e-8);
    CHECK(std::isfinite(run.constraint_drift));
  }
}

TEST_CASE("RK4 with the solved field closes the loop") {
  Rng rng(29);
  const CotangentPoint m = sample_cosphere(2, 1.0, 1.0, rng);
  const FlowResult run = rk4_integrate(HamiltonianSpec{1.0}, m, kPi, 1e-2, FieldSource::solved);
  CHECK(distance(run.endpoint, flow_closed_form(m, kPi)) < 1e-6);
}

TEST_CASE("RK4 is fourth order") {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const CotangentPoint m = sample_cosphere(1 + trial % 3, 1.0, 1.0, rng);
    const double ratio = rk4_error(m, 64) / rk4_error(m, 128);
    CHECK(std::abs(ratio - 16.0) < 4.0);
  }
}

TEST_CASE("RK4 observer and preconditions") {
  Rng rng(2);
  const CotangentPoint m = sample_cosphere(2, 1.0, 1.0, rng);
  int calls = 0;
  double last = -1.0;
  rk4_integrate(HamiltonianSpec{1.0}, m, 1.0, 0.3, FieldSource::analytic, [&](double t, const CotangentPoint&) {
    ++calls;
    last = t;
  });
  CHECK(calls == 5);
  CHECK(last == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(rk4_integrate(HamiltonianSpec{2.0}, m, 1.0, 0.1), PreconditionError);
  CHECK_THROWS_AS(rk4_integrate(HamiltonianSpec{1.0}, m, 1.0, 0.0), PreconditionError);
}

TEST_CASE("uneven cosphere drifts from the scalar action until rescaled") {
  Rng rng(37);
  const double r = 0.5;
  const CotangentPoint m = sample_cosphere(2, 1.0, r, rng);
  double uneven = 0.0;
  rk4_integrate(HamiltonianSpec{1.0}, m, 2 * kPi, 1e-3, FieldSource::analytic, [&](double t, const CotangentPoint& s) {
    uneven = std::max(uneven, (s.flat() - scalar_orbit(m, t)).norm());
  });
  CHECK(uneven > 0.01);

  const CotangentPoint evened = even_rescale(m, r);
  double restored = 0.0;
  rk4_integrate(HamiltonianSpec{evened.base_radius()}, evened, 2 * kPi, 1e-3, FieldSource::analytic,
                [&](double t, const CotangentPoint& s) {
                  restored = std::max(restored, distance(s, scalar_action(evened, t)));
                });
  CHECK(restored < 1e-6);
}
