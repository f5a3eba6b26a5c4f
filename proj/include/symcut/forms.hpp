#pragma once

#include "symcut/cotangent.hpp"
#include "symcut/numerics.hpp"
#include "symcut/projective.hpp"

#include <functional>
#include <string>
#include <vector>

namespace symcut {

/// How the flat coordinates of a space are read.
///
/// An empty factor list means plain real coordinates. Otherwise the flat vector
/// is the concatenation of interleaved real representatives of projective
/// factors; `factors[i]` is the number of homogeneous coordinates of factor i.
struct SpaceLayout {
  std::vector<Index> factors;

  static SpaceLayout real() { return {}; }
  static SpaceLayout projective(Index coords) { return {{coords}}; }
  static SpaceLayout product(std::vector<Index> coords) { return {std::move(coords)}; }

  [[nodiscard]] bool is_real() const { return factors.empty(); }
};

/// A smooth map given by a smooth lift in flat coordinates.
///
/// For projective targets the lift returns unnormalized representatives; the
/// map canonicalizes each factor and pushes tangents to horizontal vectors.
/// For projective domains the lift must be homogeneous in each factor, so it
/// may be evaluated off the unit sphere.
class SmoothMap {
 public:
  SmoothMap(std::string name, SpaceLayout target, RealMap lift)
      : name_(std::move(name)), target_(std::move(target)), lift_(std::move(lift)) {}

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const SpaceLayout& target() const { return target_; }

  /// Image in flat coordinates (canonical representatives for projective factors).
  [[nodiscard]] RealVector evaluate(const RealVector& x) const;

  /// Differential applied to `v` by central differences of the lift.
  [[nodiscard]] RealVector push_forward(const RealVector& x, const RealVector& v,
                                        double h = 1e-5) const;

  /// Full central-difference Jacobian of the lift.
  [[nodiscard]] RealMatrix lift_jacobian(const RealVector& x, double h = 1e-5) const;

  [[nodiscard]] RealVector lift(const RealVector& x) const { return lift_(x); }

 private:
  std::string name_;
  SpaceLayout target_;
  RealMap lift_;
};

/// Antisymmetric bilinear evaluator on flat points and flat tangent vectors.
class TwoForm {
 public:
  using Evaluator =
      std::function<double(const RealVector&, const RealVector&, const RealVector&)>;

  TwoForm(std::string name, Evaluator eval) : name_(std::move(name)), eval_(std::move(eval)) {}

  [[nodiscard]] const std::string& name() const { return name_; }

  double operator()(const RealVector& point, const RealVector& v1, const RealVector& v2) const {
    return eval_(point, v1, v2);
  }

  [[nodiscard]] TwoForm scaled(double factor) const;

 private:
  std::string name_;
  Evaluator eval_;
};

/// sum_k (v1x_k v2y_k - v1y_k v2x_k) on interleaved coordinates.
double omega_std(const RealVector& v1, const RealVector& v2);
/// Im <v1, v2>, the same form on complex vectors.
double omega_std(const ComplexVector& v1, const ComplexVector& v2);
/// sum <du1, dw2> - <dw1, du2> on cotangent tangent vectors.
double omega_std(const CotangentTangent& a, const CotangentTangent& b);

/// Fubini-Study form on horizontal vectors at the unit representative, normalized
/// so that the unit-sphere quotient pulls it back to omega_std (area of CP^1 = pi).
/// Throws DomainError if the tangents are based elsewhere.
double omega_fs(const ProjectivePoint& base, const ProjectiveTangent& u,
                const ProjectiveTangent& v);

/// Lift of a point of CP^n off the quadric to the sheet of Q^n in CP^{n+1} with
/// z_{n+1} = +i sqrt(sum rep_k^2) (principal root) or its negative.
ProjectivePoint quadric_sheet(const ProjectivePoint& base, bool principal = true);

/// Pushed-down form of 2r omega_FS through the branched cover Q^n -> CP^n.
///
/// Tangents are lifted to the chosen sheet by implicit differentiation of the
/// quadric equation. Throws BranchLocusError when |quadric_residual| <= margin.
double omega_r(const ProjectivePoint& base, const ProjectiveTangent& u,
               const ProjectiveTangent& v, double r, double branch_margin = 1e-3,
               bool principal_sheet = true);

TwoForm omega_std_form();
/// Fubini-Study on a single projective factor; points are flat canonical reps.
TwoForm omega_fs_form();
/// Direct sum of Fubini-Study forms on a product of projective factors.
TwoForm omega_fs_product_form(SpaceLayout layout);
/// omega_r on CP^n in flat coordinates.
TwoForm omega_r_form(double r, double branch_margin = 1e-3);

/// target_form(f(x), Df v1, Df v2).
double pullback(const SmoothMap& f, const TwoForm& target_form, const RealVector& x,
                const RealVector& v1, const RealVector& v2, double h = 1e-5);

/// Integral of form(param(u,v), d_u param, d_v param) over [a,b]x[c,d].
double integrate_surface(const SmoothMap& param, const TwoForm& form, double a, double b,
                         double c, double d, int nodes = 200, double h = 1e-5);

}  // namespace symcut
