#include "symcut/numerics.hpp"

#include "symcut/errors.hpp"

#include <cmath>
#include <string>

namespace symcut {

RealVector to_real(const ComplexVector& z) {
  RealVector x(2 * z.size());
  for (Index k = 0; k < z.size(); ++k) {
    x[2 * k] = z[k].real();
    x[2 * k + 1] = z[k].imag();
  }
  return x;
}

ComplexVector to_complex(const RealVector& x) {
  if (x.size() % 2 != 0) {
    throw DimensionError("to_complex: odd real dimension " + std::to_string(x.size()));
  }
  ComplexVector z(x.size() / 2);
  for (Index k = 0; k < z.size(); ++k) z[k] = Complex(x[2 * k], x[2 * k + 1]);
  return z;
}

bool all_finite(const RealVector& x) { return x.allFinite(); }

bool all_finite(const ComplexVector& z) {
  for (const auto& c : z) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

Complex hermitian(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw DimensionError("hermitian: size mismatch");
  return a.dot(b);  // Eigen conjugates the left operand
}

ToleranceProfile ToleranceProfile::standard() { return {}; }

ToleranceProfile ToleranceProfile::strict() {
  ToleranceProfile p;
  p.fd_step = 5e-6;
  p.branch_margin = 1e-2;
  p.check_scale = 0.1;
  return p;
}

void ToleranceProfile::validate() const {
  const bool positive = fd_step > 0 && residual_tol > 0 && flow_tol > 0 &&
                        quadrature_tol > 0 && branch_margin > 0 && check_scale > 0;
  if (!positive) throw PreconditionError("tolerance profile: all fields must be positive");
  if (fd_step >= 1e-3) throw PreconditionError("tolerance profile: fd_step must be < 1e-3");
}

RealMatrix jacobian(const RealMap& f, const RealVector& x, double h) {
  if (!(h > 0)) throw PreconditionError("jacobian: step must be positive");
  RealMatrix jac;
  for (Index j = 0; j < x.size(); ++j) {
    RealVector plus = x;
    RealVector minus = x;
    plus[j] += h;
    minus[j] -= h;
    RealVector fp;
    RealVector fm;
    try {
      fp = f(plus);
    } catch (const DomainError& e) {
      throw DomainError("jacobian: evaluation failed at x + h*e_" + std::to_string(j) +
                        ": " + e.what());
    }
    try {
      fm = f(minus);
    } catch (const DomainError& e) {
      throw DomainError("jacobian: evaluation failed at x - h*e_" + std::to_string(j) +
                        ": " + e.what());
    }
    if (j == 0) jac.resize(fp.size(), x.size());
    jac.col(j) = (fp - fm) / (2 * h);
  }
  return jac;
}

RealVector directional_derivative(const RealMap& f, const RealVector& x,
                                  const RealVector& v, double h) {
  if (x.size() != v.size()) throw DimensionError("directional_derivative: size mismatch");
  RealVector fp;
  RealVector fm;
  try {
    fp = f(x + h * v);
  } catch (const DomainError& e) {
    throw DomainError(std::string("directional_derivative: evaluation failed at x + h*v: ") +
                      e.what());
  }
  try {
    fm = f(x - h * v);
  } catch (const DomainError& e) {
    throw DomainError(std::string("directional_derivative: evaluation failed at x - h*v: ") +
                      e.what());
  }
  return (fp - fm) / (2 * h);
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(mix64(seed + kGolden)) {}

Rng Rng::for_stream(std::uint64_t master_seed, std::string_view name) {
  return Rng(master_seed).derive(name);
}

Rng Rng::derive(std::string_view name) const {
  return Rng(mix64(key_ ^ mix64(fnv1a(name))), 0);
}

std::uint64_t Rng::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double Rng::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

RealVector sample_gaussian(Index dim, Rng& rng) {
  if (dim < 1) throw PreconditionError("sample_gaussian: dim must be >= 1");
  RealVector x(dim);
  for (Index i = 0; i < dim; ++i) x[i] = rng.normal();
  return x;
}

ComplexVector sample_complex_gaussian(Index dim, Rng& rng) {
  return to_complex(sample_gaussian(2 * dim, rng));
}

GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 1) throw PreconditionError("gauss_legendre_rule: need at least 1 node");
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double gauss_legendre_2d(const std::function<double(double, double)>& g, double a,
                         double b, double c, double d, int nodes_per_axis) {
  const GaussLegendreRule rule = gauss_legendre_rule(nodes_per_axis);
  const double hu = 0.5 * (b - a);
  const double mu = 0.5 * (b + a);
  const double hv = 0.5 * (d - c);
  const double mv = 0.5 * (d + c);
  double total = 0.0;
  for (int i = 0; i < nodes_per_axis; ++i) {
    const double u = mu + hu * rule.nodes[i];
    double row = 0.0;
    for (int j = 0; j < nodes_per_axis; ++j) {
      const double v = mv + hv * rule.nodes[j];
      const double value = g(u, v);
      if (!std::isfinite(value)) {
        throw DomainError("gauss_legendre_2d: non-finite integrand at (" + std::to_string(u) +
                          ", " + std::to_string(v) + ")");
      }
      row += rule.weights[j] * value;
    }
    total += rule.weights[i] * row;
  }
  return total * hu * hv;
}

}  // namespace symcut
