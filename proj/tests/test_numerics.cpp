#include <doctest.h>

#include "symcut/errors.hpp"
#include "symcut/maps.hpp"
#include "symcut/numerics.hpp"

#include <cmath>
#include <string>

using namespace symcut;

TEST_CASE("complex and real layouts are inverse") {
  Rng rng(7);
  const ComplexVector z = sample_complex_gaussian(5, rng);
  const RealVector x = to_real(z);
  REQUIRE(x.size() == 10);
  CHECK(x[2] == z[1].real());
  CHECK(x[3] == z[1].imag());
  CHECK((to_complex(x) - z).norm() == 0.0);
  CHECK_THROWS_AS(to_complex(RealVector::Zero(3)), DimensionError);
}

TEST_CASE("tolerance profiles validate") {
  CHECK_NOTHROW(ToleranceProfile::standard().validate());
  CHECK_NOTHROW(ToleranceProfile::strict().validate());
  CHECK(ToleranceProfile::strict().check_scale < 1.0);
  ToleranceProfile bad;
  bad.fd_step = 1e-2;
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
  bad = {};
  bad.branch_margin = 0.0;
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
}

TEST_CASE("jacobian of a linear map is its matrix") {
  Rng rng(1);
  RealMatrix a(3, 4);
  for (Index i = 0; i < a.rows(); ++i) a.row(i) = sample_gaussian(4, rng).transpose();
  const RealVector x = sample_gaussian(4, rng);
  const RealMatrix j = jacobian([&](const RealVector& v) -> RealVector { return a * v; }, x, 1e-5);
  CHECK((j - a).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("central difference is exact for a quadratic") {
  RealVector x(1);
  x << 3.0;
  const RealMatrix j =
      jacobian([](const RealVector& v) -> RealVector { return v.cwiseProduct(v); }, x, 1e-5);
  CHECK(std::abs(j(0, 0) - 6.0) < 1e-9);
}

TEST_CASE("ball embedding lift has a flat last coordinate at the origin") {
  const SmoothMap phi = ball_embedding_map(2, 1.5);
  const RealMatrix j = jacobian([&](const RealVector& x) { return phi.lift(x); }, RealVector::Zero(6), 1e-5);
  // hand derivative: identity on the first 6 rows, d(i sqrt(r^2 - |z|^2)) = 0 at z = 0
  CHECK((j.topRows(6) - RealMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(j.bottomRows(2).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("jacobian errors name the offset point") {
  const RealMap f = [](const RealVector& x) -> RealVector {
    if (x[1] > 0.5) throw DomainError("outside");
    return x;
  };
  RealVector x(2);
  x << 0.0, 0.5;
  try {
    (void)jacobian(f, x, 1e-3);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("x + h*e_1") != std::string::npos);
  }
}

TEST_CASE("property: jacobian of a composition is the product of jacobians") {
  const RealMap f = [](const RealVector& x) -> RealVector {
    RealVector y(3);
    y << std::sin(x[0]) * x[1], std::exp(0.3 * x[1]), x[0] * x[0] - x[1];
    return y;
  };
  const RealMap g = [](const RealVector& y) -> RealVector {
    RealVector z(2);
    z << std::cos(y[0] + y[2]), y[1] * y[0] + 0.5 * y[2] * y[2];
    return z;
  };
  const double h = 1e-5;
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const RealVector x = sample_gaussian(2, rng) * 0.7;
    const RealMatrix whole = jacobian([&](const RealVector& v) { return g(f(v)); }, x, h);
    const RealMatrix chain = jacobian(g, f(x), h) * jacobian(f, x, h);
    CHECK((whole - chain).cwiseAbs().maxCoeff() < 10 * h * h);
  }
}

TEST_CASE("directional derivative matches jacobian action") {
  const RealMap f = [](const RealVector& x) -> RealVector {
    RealVector y(2);
    y << x[0] * x[1], std::sin(x[0]);
    return y;
  };
  Rng rng(3);
  const RealVector x = sample_gaussian(2, rng);
  const RealVector v = sample_gaussian(2, rng);
  CHECK((directional_derivative(f, x, v, 1e-5) - jacobian(f, x, 1e-5) * v).norm() < 1e-9);
}

TEST_CASE("gaussian samples are reproducible and seed sensitive") {
  Rng a(42);
  Rng b(42);
  Rng c(43);
  const RealVector first = sample_gaussian(4, a);
  CHECK((first - sample_gaussian(4, b)).norm() == 0.0);
  CHECK((first - sample_gaussian(4, c)).norm() > 0.0);
}

TEST_CASE("property: equal seeds give equal 10^4 prefixes") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
    Rng a(seed);
    Rng b(seed);
    bool equal = true;
    for (int i = 0; i < 10000; ++i) equal = equal && a.normal() == b.normal();
    CHECK(equal);
  }
}

TEST_CASE("gaussian sample mean is near zero") {
  Rng rng(5);
  RealVector sum = RealVector::Zero(3);
  const int count = 100000;
  for (int i = 0; i < count; ++i) sum += sample_gaussian(3, rng);
  CHECK((sum / count).cwiseAbs().maxCoeff() < 0.02);
}

TEST_CASE("uniform draws stay in the open unit interval") {
  Rng rng(9);
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  CHECK(lo < 1e-3);
  CHECK(hi > 1.0 - 1e-3);
}

TEST_CASE("derived streams are independent of the parent's position") {
  Rng parent = Rng::for_stream(42, "alpha");
  const Rng before = parent.derive("child");
  parent.next_u64();
  Rng after = parent.derive("child");
  Rng copy = before;
  CHECK(copy.next_u64() == after.next_u64());
  CHECK(Rng::for_stream(42, "alpha").key() != Rng::for_stream(42, "beta").key());
}

TEST_CASE("gauss-legendre rule integrates polynomials of degree 2n-1") {
  for (int n : {1, 2, 5, 12, 40}) {
    const GaussLegendreRule rule = gauss_legendre_rule(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double weight_sum = 0.0;
    double top = 0.0;
    for (int i = 0; i < n; ++i) {
      weight_sum += rule.weights[i];
      top += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK(std::abs(weight_sum - 2.0) < 1e-13);
    CHECK(std::abs(top - 2.0 / (2 * n - 1)) < 1e-12);
  }
}

TEST_CASE("2d quadrature spot values") {
  CHECK(std::abs(gauss_legendre_2d([](double, double) { return 1.0; }, 0, 1, 0, 1) - 1.0) < 1e-13);
  CHECK(std::abs(gauss_legendre_2d([](double u, double) { return std::sin(u); }, 0, kPi, 0, 1, 50) -
                 2.0) < 1e-12);
  // Round sphere of radius 1/2: area element (1/4) sin(theta).
  const double area = gauss_legendre_2d([](double t, double) { return 0.25 * std::sin(t); }, 0, kPi,
                                        0, 2 * kPi, 200);
  CHECK(std::abs(area - kPi) < 1e-8);
}

TEST_CASE("2d quadrature rejects non-finite integrands") {
  CHECK_THROWS_AS(gauss_legendre_2d([](double, double) { return NAN; }, 0, 1, 0, 1, 4), DomainError);
}

TEST_CASE("property: doubling nodes shrinks the error tenfold until the rounding floor") {
  const double e1 = std::exp(1.0) - 1.0;
  struct Case {
    std::function<double(double, double)> g;
    double exact;
  };
  const std::vector<Case> cases = {
      {[](double u, double v) { return std::exp(u + v); }, e1 * e1},
      {[](double u, double v) { return std::cos(3 * u) * v * v; }, std::sin(3.0) / 3.0 / 3.0},
      {[](double u, double v) { return 1.0 / (1.0 + u * u + v); }, 0.0},
  };
  // Reference for the last integrand comes from a much finer rule.
  const double ref = gauss_legendre_2d(cases[2].g, 0, 1, 0, 1, 400);
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const double exact = c == 2 ? ref : cases[c].exact;
    double previous = std::abs(gauss_legendre_2d(cases[c].g, 0, 1, 0, 1, 2) - exact);
    for (int nodes = 4; nodes <= 32; nodes *= 2) {
      const double err = std::abs(gauss_legendre_2d(cases[c].g, 0, 1, 0, 1, nodes) - exact);
      if (previous > 1e-13) CHECK(err <= previous / 10.0 + 1e-14);
      previous = err;
    }
  }
}
