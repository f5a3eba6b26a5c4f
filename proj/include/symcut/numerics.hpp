#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace symcut {

using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;

/// Interleaved real coordinates of a complex vector: z_k = x[2k] + i x[2k+1].
RealVector to_real(const ComplexVector& z);
/// Inverse of to_real. Throws DimensionError on odd length.
ComplexVector to_complex(const RealVector& x);

bool all_finite(const RealVector& x);
bool all_finite(const ComplexVector& z);

/// Hermitian inner product, conjugate-linear in the first slot.
Complex hermitian(const ComplexVector& a, const ComplexVector& b);

/// Numerical knobs shared by all checks.
struct ToleranceProfile {
  double fd_step = 1e-5;
  double residual_tol = 1e-10;
  double flow_tol = 1e-6;
  double quadrature_tol = 1e-6;
  double branch_margin = 1e-3;
  // Multiplies every pinned check tolerance; 1 for the default profile.
  double check_scale = 1.0;

  static ToleranceProfile standard();
  /// Tightens every check tolerance by 10x and widens the branch margin.
  static ToleranceProfile strict();

  /// Throws PreconditionError unless all fields are positive and fd_step < 1e-3.
  void validate() const;
};

using RealMap = std::function<RealVector(const RealVector&)>;

/// Central-difference Jacobian, J(i,j) = (f_i(x + h e_j) - f_i(x - h e_j)) / 2h.
///
/// A DomainError thrown by `f` at an offset point is rethrown with the offset
/// named, e.g. "x - h*e_3".
RealMatrix jacobian(const RealMap& f, const RealVector& x, double h);

/// Central difference of `f` along `v`: (f(x + h v) - f(x - h v)) / 2h.
RealVector directional_derivative(const RealMap& f, const RealVector& x,
                                  const RealVector& v, double h);

/// Counter-based generator: the n-th draw is a pure function of (key, n).
///
/// Streams are keyed by hashing a master seed with a name, so each named
/// consumer owns an independent sequence and adding one never perturbs another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng for_stream(std::uint64_t master_seed, std::string_view name);

  /// Child stream keyed by this stream's key and `name`; does not advance this one.
  [[nodiscard]] Rng derive(std::string_view name) const;

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Standard normal (Box-Muller, cosine branch).
  double normal();

  [[nodiscard]] std::uint64_t key() const { return key_; }
  [[nodiscard]] std::uint64_t counter() const { return counter_; }

 private:
  Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

RealVector sample_gaussian(Index dim, Rng& rng);
ComplexVector sample_complex_gaussian(Index dim, Rng& rng);

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// Nodes and weights by Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre_rule(int n);

/// Tensor-product Gauss-Legendre estimate of the integral of g over [a,b]x[c,d].
/// Throws DomainError if g is non-finite at a node.
double gauss_legendre_2d(const std::function<double(double, double)>& g, double a,
                         double b, double c, double d, int nodes_per_axis = 200);

}  // namespace symcut
