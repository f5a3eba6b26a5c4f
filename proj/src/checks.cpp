#include "check_table.hpp"

#include "symcut/cotangent.hpp"
#include "symcut/errors.hpp"
#include "symcut/forms.hpp"
#include "symcut/hamiltonian.hpp"
#include "symcut/maps.hpp"
#include "symcut/projective.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace symcut::detail {

namespace {

const Complex kI(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * kPi;

// ---------------------------------------------------------------------------
// flat sample encoding

class Reader {
 public:
  explicit Reader(std::span<const double> data) : data_(data) {}

  RealVector take(Index n) {
    if (pos_ + static_cast<std::size_t>(n) > data_.size()) {
      throw UsageError("witness input is too short");
    }
    RealVector out(n);
    for (Index i = 0; i < n; ++i) out[i] = data_[pos_++];
    return out;
  }

  ComplexVector take_complex(Index n) { return to_complex(take(2 * n)); }

  void finish() const {
    if (pos_ != data_.size()) throw UsageError("witness input has trailing values");
  }

 private:
  std::span<const double> data_;
  std::size_t pos_ = 0;
};

void append(std::vector<double>& out, const RealVector& v) {
  out.insert(out.end(), v.data(), v.data() + v.size());
}

void append(std::vector<double>& out, const ComplexVector& z) { append(out, to_real(z)); }

int dim_of(const Setting& s) { return s.at("n").get<int>(); }
double radius_of(const Setting& s) { return s.at("r").get<double>(); }

// ---------------------------------------------------------------------------
// case grids

std::vector<Setting> by_dim(const std::vector<int>& dims) {
  std::vector<Setting> out;
  for (int n : dims) out.push_back({{"n", n}});
  return out;
}

std::vector<Setting> by_radius(const std::vector<double>& radii) {
  std::vector<Setting> out;
  for (double r : radii) out.push_back({{"r", r}});
  return out;
}

std::vector<Setting> by_dim_radius(const std::vector<int>& dims, const std::vector<double>& radii) {
  std::vector<Setting> out;
  for (int n : dims) {
    for (double r : radii) out.push_back({{"n", n}, {"r", r}});
  }
  return out;
}

std::vector<Setting> with_variants(std::vector<Setting> base, const std::string& key,
                                   const std::vector<std::string>& values) {
  std::vector<Setting> out;
  for (const auto& s : base) {
    for (const auto& v : values) {
      Setting copy = s;
      copy[key] = v;
      out.push_back(std::move(copy));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// samplers for the projective side

RealVector sample_ball(Index real_dim, double radius, Rng& rng) {
  RealVector g = sample_gaussian(real_dim, rng);
  g.normalize();
  return g * (radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(real_dim)));
}

Complex square_sum(const ComplexVector& z) { return z.cwiseProduct(z).sum(); }

// A representative of a point of Q^n in CP^{n+1}.
ComplexVector sample_quadric(int n, Rng& rng) {
  ComplexVector z(n + 2);
  z.head(n + 1) = sample_complex_gaussian(n + 1, rng);
  z[n + 1] = kI * std::sqrt(square_sum(z.head(n + 1)));
  return z;
}

// A representative of a point of Q^{n-1} in CP^n.
ComplexVector sample_branch_point(int n, Rng& rng) {
  ComplexVector z(n + 1);
  z.head(n) = sample_complex_gaussian(n, rng);
  z[n] = kI * std::sqrt(square_sum(z.head(n)));
  return z;
}

// Tangent to the quadric {sum z^2 = 0} and horizontal at the unit representative y.
ComplexVector quadric_tangent(const ComplexVector& y, ComplexVector v) {
  const Complex along = y.cwiseProduct(v).sum();
  v -= (along / y.squaredNorm()) * y.conjugate();
  return horizontal_part(y, v);
}

// Real orthonormal basis (2n vectors) of the horizontal tangent space of Q^n at y.
std::vector<ComplexVector> quadric_tangent_basis(const ComplexVector& y) {
  std::vector<ComplexVector> frame{y / y.norm()};
  ComplexVector c = y.conjugate();
  frame.push_back(c / c.norm());
  const Index m = y.size();
  for (Index k = 0; k < m && static_cast<Index>(frame.size()) < m; ++k) {
    ComplexVector e = ComplexVector::Unit(m, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& f : frame) e -= hermitian(f, e) * f;
    }
    if (e.norm() > 1e-6) frame.push_back(e / e.norm());
  }
  std::vector<ComplexVector> basis;
  for (std::size_t j = 2; j < frame.size(); ++j) {
    basis.push_back(frame[j]);
    basis.push_back(kI * frame[j]);
  }
  return basis;
}

RealVector horizontal_flat(const ComplexVector& rep, const ComplexVector& v) {
  return to_real(horizontal_part(rep, v));
}

// Tangent vector of CP^1 x CP^1 in flat product coordinates.
RealVector product_tangent(const ProjectivePoint& a, const ProjectivePoint& b,
                           const RealVector& raw) {
  RealVector out(8);
  out.head(4) = horizontal_flat(a.rep(), to_complex(raw.head(4)));
  out.tail(4) = horizontal_flat(b.rep(), to_complex(raw.tail(4)));
  return out;
}

double flat_distance(const CotangentPoint& a, const CotangentPoint& b) {
  return (a.flat() - b.flat()).norm();
}

CotangentPoint with_fiber_norm(const CotangentPoint& m, double radius) {
  return CotangentPoint::make(m.p(), m.q() * (radius / m.fiber_norm()), m.base_radius());
}

// sin(theta/2), cos(theta/2) parametrization of CP^1 by spherical angles.
ComplexVector sphere_rep(double theta, double phi) {
  ComplexVector z(2);
  z << std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi);
  return z;
}

// ---------------------------------------------------------------------------
// check bodies

CheckImpl ball_embedding_pullback() {
  CheckImpl c;
  c.desc = {"L-projemb", "ball-embedding",
            "ball embedding pulls r^2 omega_FS back to omega_std",
            CheckKind::bound, true, true, {1, 2, 3}, {1.0, std::sqrt(2.0), 2.0}, 1000, 1e-6};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const Index m = 2 * (dim_of(s) + 1);
    std::vector<double> in;
    append(in, sample_ball(m, 0.95 * radius_of(s), rng));
    for (int k = 0; k < 6; ++k) append(in, sample_gaussian(m, rng));
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    const double r = radius_of(s);
    const Index m = 2 * (n + 1);
    Reader rd(input);
    const RealVector z = rd.take(m);
    const SmoothMap phi = ball_embedding_map(n, r);
    const TwoForm target = omega_fs_form().scaled(r * r);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const RealVector v1 = rd.take(m);
      const RealVector v2 = rd.take(m);
      const double lhs = pullback(phi, target, z, v1, v2, tol.fd_step);
      worst = std::max(worst, std::abs(lhs - omega_std(v1, v2)));
    }
    rd.finish();
    return worst;
  };
  return c;
}

CheckImpl quadric_image() {
  CheckImpl c;
  c.desc = {"L-sphereembedding", "quadric-embedding",
            "disc bundle lands on Q^n and off H_{n+1}",
            CheckKind::bound, true, false, {1, 2, 3}, {}, 1000, 1e-10};
  c.settings = [](const auto& dims, const auto&) { return by_dim(dims); };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const CotangentPoint m = sample_disc_bundle(dim_of(s), 1.0, 1.0, rng);
    std::vector<double> in;
    append(in, m.p());
    append(in, m.q());
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    Reader rd(input);
    const RealVector p = rd.take(n + 1);
    const RealVector q = rd.take(n + 1);
    rd.finish();
    const ProjectivePoint image = cotangent_to_quadric(CotangentPoint::make(p, q));
    if (in_hyperplane(image, n + 1, tol.residual_tol)) return kInf;
    return std::abs(quadric_residual(image));
  };
  return c;
}

CheckImpl quadric_inverse() {
  CheckImpl c;
  c.desc = {"L-sphereembedding-inverse", "quadric-embedding",
            "points of Q^n - Q^{n-1} lift back to the unit disc bundle",
            CheckKind::bound, true, false, {1, 2, 3}, {}, 1000, 1e-8};
  c.settings = [](const auto& dims, const auto&) { return by_dim(dims); };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const int n = dim_of(s);
    ComplexVector z;
    do {
      z = sample_quadric(n, rng);
    } while (std::abs(z[n + 1]) < 1e-3 * z.norm());
    std::vector<double> in;
    append(in, z);
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    const int n = dim_of(s);
    Reader rd(input);
    const ProjectivePoint point = ProjectivePoint::from(rd.take_complex(n + 2));
    rd.finish();
    const auto [x, y] = quadric_to_cotangent(point);
    if (!(y.norm() < 1.0)) return kInf;
    ComplexVector z(n + 1);
    for (int k = 0; k <= n; ++k) z[k] = Complex(x[k], y[k]);
    const double back = projective_distance(ball_to_projective(z, std::sqrt(2.0)), point);
    return std::max({std::abs(x.norm() - 1.0), std::abs(x.dot(y)), back});
  };
  return c;
}

std::vector<double> draw_evened_cosphere(const Setting& s, Rng& rng) {
  const double k = std::sqrt(radius_of(s));
  const CotangentPoint m = sample_cosphere(dim_of(s), k, k, rng);
  std::vector<double> in;
  append(in, m.p());
  append(in, m.q());
  return in;
}

CotangentPoint read_point(const Setting& s, std::span<const double> input, double base_radius) {
  const int n = dim_of(s);
  Reader rd(input);
  RealVector p = rd.take(n + 1);
  RealVector q = rd.take(n + 1);
  rd.finish();
  return CotangentPoint::make(std::move(p), std::move(q), base_radius);
}

CheckImpl unitcut_flow() {
  CheckImpl c;
  c.desc = {"P-unitcut-flow", "cosphere-cut",
            "closed-form cogeodesic flow equals the scalar circle action on evened cospheres",
            CheckKind::bound, true, true, {1, 2, 3}, {0.5, 1.0, 2.0}, 100, 1e-12};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    return draw_evened_cosphere(s, rng);
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    const CotangentPoint m = read_point(s, input, std::sqrt(radius_of(s)));
    double worst = 0.0;
    for (int j = 0; j < 100; ++j) {
      const double t = kTwoPi * j / 100.0;
      worst = std::max(worst, flat_distance(flow_closed_form(m, t), scalar_action(m, t)));
    }
    return worst;
  };
  return c;
}

CheckImpl unitcut_boundary() {
  CheckImpl c;
  c.desc = {"P-unitcut-boundary", "cosphere-cut",
            "unit cosphere maps onto Q^{n-1} and circle orbits collapse to points",
            CheckKind::bound, true, false, {1, 2, 3}, {}, 1000, 1e-10};
  c.settings = [](const auto& dims, const auto&) { return by_dim(dims); };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const CotangentPoint m = sample_cosphere(dim_of(s), 1.0, 1.0, rng);
    std::vector<double> in;
    append(in, m.p());
    append(in, m.q());
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    const int n = dim_of(s);
    const CotangentPoint m = read_point(s, input, 1.0);
    const ProjectivePoint image = cosphere_boundary(m);
    double worst = std::max(std::abs(quadric_residual(image)), std::abs(image.rep()[n + 1]));
    for (int j = 1; j < 16; ++j) {
      const ProjectivePoint moved = cosphere_boundary(scalar_action(m, kTwoPi * j / 16.0));
      worst = std::max(worst, projective_distance(moved, image));
    }
    return worst;
  };
  return c;
}

std::vector<double> draw_field_point(const Setting& s, Rng& rng) {
  const double k = std::sqrt(radius_of(s));
  CotangentPoint m = sample_disc_bundle(dim_of(s), k, k, rng);
  while (m.fiber_norm() < 0.05 * k) m = sample_disc_bundle(dim_of(s), k, k, rng);
  std::vector<double> in;
  append(in, m.p());
  append(in, m.q());
  return in;
}

CheckImpl hamiltonian_field() {
  CheckImpl c;
  c.desc = {"P-hamiltonian-field", "cosphere-cut",
            "solved omega(X,.) = dH matches the closed-form field of k|q|",
            CheckKind::bound, true, true, {1, 2, 3}, {0.5, 1.0, 2.0}, 200, 1e-6};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    return draw_field_point(s, rng);
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const double k = std::sqrt(radius_of(s));
    const CotangentPoint m = read_point(s, input, k);
    const HamiltonianSpec h{k};
    const CotangentTangent solved = hamiltonian_vector_field(h, m, tol.fd_step);
    const CotangentTangent exact = analytic_vector_field(h, m);
    return std::max((solved.u - exact.u).norm(), (solved.w - exact.w).norm());
  };
  return c;
}

CheckImpl unitcut_rk4() {
  CheckImpl c;
  c.desc = {"P-unitcut-rk4", "cosphere-cut",
            "RK4 (dt = 1e-3) of H_k returns to the closed-form orbit after one period",
            CheckKind::bound, true, true, {1, 2, 3}, {0.5, 1.0, 2.0}, 4, 1e-6};
  c.settings = [](const auto& dims, const auto& radii) {
    return with_variants(by_dim_radius(dims, radii), "field", {"analytic", "solved"});
  };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    return draw_evened_cosphere(s, rng);
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const double k = std::sqrt(radius_of(s));
    const CotangentPoint m = read_point(s, input, k);
    const FieldSource source =
        s.at("field").get<std::string>() == "solved" ? FieldSource::solved : FieldSource::analytic;
    const FlowResult run = rk4_integrate(HamiltonianSpec{k}, m, kTwoPi, 1e-3, source, {}, tol.fd_step);
    const double miss = flat_distance(run.endpoint, flow_closed_form(m, kTwoPi));
    return std::max(miss, run.energy_drift);
  };
  return c;
}

double rk4_period_error(const CotangentPoint& m, int steps) {
  const HamiltonianSpec h{m.base_radius()};
  const FlowResult run = rk4_integrate(h, m, kTwoPi, kTwoPi / steps);
  return flat_distance(run.endpoint, flow_closed_form(m, kTwoPi));
}

CheckImpl unitcut_rk4_order() {
  CheckImpl c;
  c.desc = {"P-unitcut-rk4-order", "cosphere-cut",
            "halving the RK4 step divides the period error by 16 +- 4",
            CheckKind::bound, true, false, {1, 2, 3}, {}, 3, 4.0};
  c.settings = [](const auto& dims, const auto&) { return by_dim(dims); };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const CotangentPoint m = sample_cosphere(dim_of(s), 1.0, 1.0, rng);
    std::vector<double> in;
    append(in, m.p());
    append(in, m.q());
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    const CotangentPoint m = read_point(s, input, 1.0);
    // Coarse steps keep both errors far above the rounding floor.
    const double coarse = rk4_period_error(m, 64);
    const double fine = rk4_period_error(m, 128);
    return std::abs(coarse / fine - 16.0);
  };
  c.scale_with_profile = false;
  return c;
}

std::vector<double> draw_unit_disc(const Setting& s, Rng& rng) {
  const CotangentPoint m = sample_disc_bundle(dim_of(s), 1.0, 1.0, rng);
  std::vector<double> in;
  append(in, m.p());
  append(in, m.q());
  return in;
}

CheckImpl deck_equivariance() {
  CheckImpl c;
  c.desc = {"C-branchedcover-deck", "branched-cover",
            "deck map covers the antipode and is invisible to the branched cover",
            CheckKind::bound, true, false, {1, 2, 3}, {}, 1000, 1e-12};
  c.settings = [](const auto& dims, const auto&) { return by_dim(dims); };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) { return draw_unit_disc(s, rng); };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    const CotangentPoint m = read_point(s, input, 1.0);
    const ProjectivePoint image = cotangent_to_quadric(m);
    const ProjectivePoint flipped = deck(image);
    return std::max({projective_distance(flipped, cotangent_to_quadric(antipode(m))),
                     projective_distance(branched_cover(flipped), branched_cover(image)),
                     projective_distance(deck(flipped), image)});
  };
  return c;
}

CheckImpl fiber_counts() {
  CheckImpl c;
  c.desc = {"C-branchedcover-fibers", "branched-cover",
            "fibers of Q^n -> CP^n have two points off Q^{n-1} and one on it",
            CheckKind::bound, true, false, {1, 2, 3}, {}, 100, 1e-10};
  c.settings = [](const auto& dims, const auto&) {
    return with_variants(by_dim(dims), "locus", {"off", "on"});
  };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const int n = dim_of(s);
    ComplexVector z;
    if (s.at("locus").get<std::string>() == "on") {
      z = sample_branch_point(n, rng);
    } else {
      do {
        z = sample_complex_gaussian(n + 1, rng);
      } while (std::abs(square_sum(z)) < 1e-2 * z.squaredNorm());
    }
    std::vector<double> in;
    append(in, z);
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    Reader rd(input);
    const ProjectivePoint point = ProjectivePoint::from(rd.take_complex(n + 1));
    rd.finish();
    const auto fiber = branched_fiber(point, tol.residual_tol);
    const std::size_t expected = s.at("locus").get<std::string>() == "on" ? 1 : 2;
    if (fiber.size() != expected) return kInf;
    double worst = 0.0;
    for (const auto& y : fiber) {
      worst = std::max({worst, std::abs(quadric_residual(y)),
                        projective_distance(branched_cover(y), point)});
    }
    if (fiber.size() == 2 && projective_distance(fiber[0], fiber[1]) < 1e-6) return kInf;
    return worst;
  };
  return c;
}

CheckImpl omega_r_descent() {
  CheckImpl c;
  c.desc = {"P-omega-r-descent", "radius-r-cut",
            "branched cover pulls omega_r back to 2r omega_FS on Q^n, on either sheet",
            CheckKind::bound, true, true, {1, 2, 3}, {0.5, 1.0, 2.0}, 1000, 1e-6};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    ComplexVector y;
    do {
      y = sample_quadric(n, rng);
    } while (std::abs(square_sum(y.head(n + 1))) <= 2.0 * tol.branch_margin * y.head(n + 1).squaredNorm());
    std::vector<double> in;
    append(in, y);
    for (int k = 0; k < 4; ++k) append(in, sample_complex_gaussian(n + 2, rng));
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    const double r = radius_of(s);
    Reader rd(input);
    const ProjectivePoint y = ProjectivePoint::from(rd.take_complex(n + 2));
    const SmoothMap cover = branched_cover_map(n);
    const TwoForm pushed = omega_r_form(r, tol.branch_margin);
    const TwoForm upstairs = omega_fs_form().scaled(2.0 * r);
    const ProjectivePoint below = branched_cover(y);
    double worst = 0.0;
    for (int k = 0; k < 2; ++k) {
      const RealVector v1 = to_real(quadric_tangent(y.rep(), rd.take_complex(n + 2)));
      const RealVector v2 = to_real(quadric_tangent(y.rep(), rd.take_complex(n + 2)));
      const double lhs = pullback(cover, pushed, y.flat(), v1, v2, tol.fd_step);
      const double rhs = upstairs(y.flat(), v1, v2);
      const ProjectiveTangent d1 =
          horizontal_project(below, to_complex(cover.push_forward(y.flat(), v1, tol.fd_step)));
      const ProjectiveTangent d2 =
          horizontal_project(below, to_complex(cover.push_forward(y.flat(), v2, tol.fd_step)));
      const double principal = omega_r(below, d1, d2, r, tol.branch_margin, true);
      const double other = omega_r(below, d1, d2, r, tol.branch_margin, false);
      worst = std::max({worst, std::abs(lhs - rhs), std::abs(principal - other)});
    }
    rd.finish();
    return worst;
  };
  return c;
}

CheckImpl pi_not_symplectic() {
  CheckImpl c;
  c.desc = {"R-pi-not-symplectic", "branch-nonsymplectic",
            "at Q^{n-1} the vertical direction is killed by the cover but not by omega_FS",
            CheckKind::existence, true, false, {1, 2, 3}, {}, 100, 0.1};
  c.settings = [](const auto& dims, const auto&) { return by_dim(dims); };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    std::vector<double> in;
    append(in, sample_branch_point(dim_of(s), rng));
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    Reader rd(input);
    const ComplexVector w = rd.take_complex(n + 1);
    rd.finish();
    ComplexVector lifted = ComplexVector::Zero(n + 2);
    lifted.head(n + 1) = w;
    const ProjectivePoint y = ProjectivePoint::from(lifted);
    const ComplexVector vertical = ComplexVector::Unit(n + 2, n + 1);
    // the vertical direction must be a horizontal tangent of Q^n here
    if (std::abs(y.rep().cwiseProduct(vertical).sum()) > tol.residual_tol ||
        (horizontal_part(y.rep(), vertical) - vertical).norm() > tol.residual_tol) {
      return 0.0;
    }
    const SmoothMap cover = branched_cover_map(n);
    const TwoForm fs = omega_fs_form();
    double degeneracy = 0.0;
    for (const auto& b : quadric_tangent_basis(y.rep())) {
      degeneracy = std::max(
          degeneracy, std::abs(pullback(cover, fs, y.flat(), to_real(vertical), to_real(b), tol.fd_step)));
    }
    if (degeneracy >= 1e-8) return 0.0;
    return fs(y.flat(), to_real(vertical), to_real(ComplexVector(kI * vertical)));
  };
  c.scale_with_profile = false;
  return c;
}

CheckImpl omega_r_not_fs() {
  CheckImpl c;
  c.desc = {"R-omega-r-not-FS", "radius-r-cut",
            "omega_r / omega_FS varies between tangent planes at one point of CP^2",
            CheckKind::existence, false, true, {2}, {1.0}, 200, 0.1};
  c.settings = [](const auto&, const auto& radii) {
    std::vector<Setting> out;
    for (double r : radii) out.push_back({{"n", 2}, {"r", r}});
    return out;
  };
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const int n = dim_of(s);
    ComplexVector z;
    do {
      z = sample_complex_gaussian(n + 1, rng);
    } while (std::abs(square_sum(z)) < 0.05 * z.squaredNorm());
    std::vector<double> in;
    append(in, z);
    for (int k = 0; k < 4; ++k) append(in, sample_complex_gaussian(n + 1, rng));
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    const double r = radius_of(s);
    Reader rd(input);
    const ProjectivePoint point = ProjectivePoint::from(rd.take_complex(n + 1));
    double ratios[2];
    for (double& ratio : ratios) {
      const ProjectiveTangent a = horizontal_project(point, rd.take_complex(n + 1));
      const ProjectiveTangent b = horizontal_project(point, rd.take_complex(n + 1));
      const double fs = omega_fs(point, a, b);
      if (std::abs(fs) < 0.05) return 0.0;
      ratio = omega_r(point, a, b, r, tol.branch_margin) / fs;
    }
    rd.finish();
    return std::abs(ratios[0] - ratios[1]);
  };
  c.scale_with_profile = false;
  return c;
}

std::vector<double> draw_cp1_pair(Rng& rng) {
  std::vector<double> in;
  append(in, sample_complex_gaussian(2, rng));
  append(in, sample_complex_gaussian(2, rng));
  return in;
}

CheckImpl segre_pullback() {
  CheckImpl c;
  c.desc = {"P-segre-pullback", "segre-q2",
            "Segre-unitary map pulls 2 omega_FS back to 2 omega_FS + 2 omega_FS",
            CheckKind::bound, false, false, {}, {}, 1000, 1e-6};
  c.settings = [](const auto&, const auto&) { return std::vector<Setting>{Setting::object()}; };
  c.draw = [](const Setting&, Rng& rng, const ToleranceProfile&) {
    std::vector<double> in = draw_cp1_pair(rng);
    for (int k = 0; k < 6; ++k) append(in, sample_gaussian(8, rng));
    return in;
  };
  c.evaluate = [](const Setting&, std::span<const double> input, const ToleranceProfile& tol) {
    Reader rd(input);
    const ProjectivePoint a = ProjectivePoint::from(rd.take_complex(2));
    const ProjectivePoint b = ProjectivePoint::from(rd.take_complex(2));
    RealVector x(8);
    x << a.flat(), b.flat();
    const SmoothMap segre = segre_unitary_map();
    const TwoForm target = omega_fs_form().scaled(2.0);
    const TwoForm source = omega_fs_product_form(SpaceLayout::product({2, 2})).scaled(2.0);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const RealVector v1 = product_tangent(a, b, rd.take(8));
      const RealVector v2 = product_tangent(a, b, rd.take(8));
      worst = std::max(worst, std::abs(pullback(segre, target, x, v1, v2, tol.fd_step) - source(x, v1, v2)));
    }
    rd.finish();
    return worst;
  };
  return c;
}

CheckImpl segre_equivariance() {
  CheckImpl c;
  c.desc = {"P-segre-equivariance", "segre-q2",
            "Segre-unitary image lies on Q^2 and intertwines the deck map with the factor swap",
            CheckKind::bound, false, false, {}, {}, 1000, 1e-10};
  c.settings = [](const auto&, const auto&) { return std::vector<Setting>{Setting::object()}; };
  c.draw = [](const Setting&, Rng& rng, const ToleranceProfile&) { return draw_cp1_pair(rng); };
  c.evaluate = [](const Setting&, std::span<const double> input, const ToleranceProfile&) {
    Reader rd(input);
    const ProjectivePoint a = ProjectivePoint::from(rd.take_complex(2));
    const ProjectivePoint b = ProjectivePoint::from(rd.take_complex(2));
    rd.finish();
    const ProjectivePoint image = segre_unitary(a, b);
    const auto [sa, sb] = swap_factors(a, b);
    const ProjectivePoint diagonal = segre_unitary(a, a);
    return std::max({std::abs(quadric_residual(image)),
                     projective_distance(deck(image), segre_unitary(sa, sb)),
                     projective_distance(deck(diagonal), diagonal)});
  };
  return c;
}

CheckImpl diagonal_antidiagonal() {
  CheckImpl c;
  c.desc = {"R-diag-antidiag", "diagonal-antidiagonal",
            "diagonal maps to Q^1 and antidiagonal to RP^2 under the cover of the Segre image",
            CheckKind::bound, false, false, {}, {}, 1000, 1e-9};
  c.settings = [](const auto&, const auto&) {
    return std::vector<Setting>{{{"case", "diagonal"}}, {{"case", "antidiagonal"}}};
  };
  c.draw = [](const Setting&, Rng& rng, const ToleranceProfile&) {
    std::vector<double> in;
    append(in, sample_complex_gaussian(2, rng));
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    Reader rd(input);
    const ProjectivePoint a = ProjectivePoint::from(rd.take_complex(2));
    rd.finish();
    if (s.at("case").get<std::string>() == "diagonal") {
      const ProjectivePoint point = branched_cover(segre_unitary(a, a));
      if (locus_classify(point) != Locus::on_q1) return kInf;
      return std::abs(quadric_residual(point));
    }
    const ProjectivePoint point = branched_cover(segre_unitary(a, cp1_antipodal(a)));
    if (locus_classify(point) != Locus::on_rp2) return kInf;
    return real_locus_defect(point);
  };
  return c;
}

CheckImpl evened_rescale() {
  CheckImpl c;
  c.desc = {"P-evenedrescale", "evened-bundle",
            "even rescaling preserves omega_std, inverts cleanly and conjugates the flows",
            CheckKind::bound, true, true, {1, 2, 3}, {0.5, 1.0, 2.0}, 1000, 1e-9};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const int n = dim_of(s);
    const CotangentPoint m = sample_disc_bundle(n, 1.0, radius_of(s), rng);
    std::vector<double> in;
    append(in, m.p());
    append(in, m.q());
    for (int k = 0; k < 2; ++k) append(in, sample_gaussian(2 * (n + 1), rng));
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    const double r = radius_of(s);
    Reader rd(input);
    const RealVector p = rd.take(n + 1);
    const RealVector q = rd.take(n + 1);
    const CotangentPoint m = CotangentPoint::make(p, q);
    const RealVector raw1 = rd.take(2 * (n + 1));
    const RealVector raw2 = rd.take(2 * (n + 1));
    rd.finish();
    const CotangentTangent t1 = project_tangent(m, raw1.head(n + 1), raw1.tail(n + 1));
    const CotangentTangent t2 = project_tangent(m, raw2.head(n + 1), raw2.tail(n + 1));
    const double preserved = std::abs(
        pullback(even_rescale_map(n, r), omega_std_form(), m.flat(), t1.flat(), t2.flat(), tol.fd_step) -
        omega_std(t1, t2));
    const double round_trip = flat_distance(even_rescale_inverse(even_rescale(m, r), r), m);
    const CotangentPoint edge = with_fiber_norm(m, r);
    const HamiltonianSpec unit{1.0};
    double conjugation = 0.0;
    for (int j = 0; j < 8; ++j) {
      const double t = kTwoPi * j / 8.0 + 0.1;
      conjugation = std::max(conjugation, flat_distance(even_rescale(cogeodesic_flow(unit, edge, t), r),
                                                        flow_closed_form(even_rescale(edge, r), t)));
    }
    return std::max({preserved, round_trip, conjugation});
  };
  return c;
}

// Largest deviation between an RK4 trajectory of H_k and the scalar action.
double deviation_from_scalar_action(const CotangentPoint& m) {
  double worst = 0.0;
  rk4_integrate(HamiltonianSpec{m.base_radius()}, m, kTwoPi, 1e-3, FieldSource::analytic,
                [&](double t, const CotangentPoint& state) {
                  // off the evened cosphere the scalar orbit leaves the bundle, so compare ambiently
                  const RealVector orbit = to_real(ComplexVector(m.embedded() * std::exp(Complex(0.0, -t))));
                  worst = std::max(worst, (state.flat() - orbit).norm());
                });
  return worst;
}

std::vector<double> draw_uneven_edge(const Setting& s, Rng& rng) {
  const CotangentPoint m = sample_cosphere(dim_of(s), 1.0, radius_of(s), rng);
  std::vector<double> in;
  append(in, m.p());
  append(in, m.q());
  return in;
}

CheckImpl evened_rk4() {
  CheckImpl c;
  c.desc = {"P-evened-rk4", "evened-bundle",
            "after even rescaling the RK4 flow of H_k tracks the scalar action",
            CheckKind::bound, true, true, {1, 2, 3}, {0.5, 1.0, 2.0}, 5, 1e-6};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) { return draw_uneven_edge(s, rng); };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    const CotangentPoint m = read_point(s, input, 1.0);
    return deviation_from_scalar_action(even_rescale(m, radius_of(s)));
  };
  return c;
}

CheckImpl uneven_divergence() {
  CheckImpl c;
  c.desc = {"P-uneven-divergence", "evened-bundle",
            "without rescaling the flow of |q| on |q| = r != 1 drifts from the scalar action",
            CheckKind::existence, true, true, {1, 2, 3}, {0.5}, 5, 0.01};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) { return draw_uneven_edge(s, rng); };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    return deviation_from_scalar_action(read_point(s, input, 1.0));
  };
  c.scale_with_profile = false;
  return c;
}

CheckImpl radius_r_embedding() {
  CheckImpl c;
  c.desc = {"P-almostcompactif-embedding", "radius-r-cut",
            "U*_r S^n embeds in Q^n pulling 2r omega_FS back to omega_std",
            CheckKind::bound, true, true, {1, 2, 3}, {0.5, 1.0, 2.0}, 1000, 1e-6};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const int n = dim_of(s);
    const CotangentPoint m = sample_disc_bundle(n, 1.0, 0.95 * radius_of(s), rng);
    std::vector<double> in;
    append(in, m.p());
    append(in, m.q());
    for (int k = 0; k < 2; ++k) append(in, sample_gaussian(2 * (n + 1), rng));
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile& tol) {
    const int n = dim_of(s);
    const double r = radius_of(s);
    Reader rd(input);
    const RealVector p = rd.take(n + 1);
    const RealVector q = rd.take(n + 1);
    const CotangentPoint m = CotangentPoint::make(p, q);
    const RealVector raw1 = rd.take(2 * (n + 1));
    const RealVector raw2 = rd.take(2 * (n + 1));
    rd.finish();
    const CotangentTangent t1 = project_tangent(m, raw1.head(n + 1), raw1.tail(n + 1));
    const CotangentTangent t2 = project_tangent(m, raw2.head(n + 1), raw2.tail(n + 1));
    const SmoothMap embed = cotangent_quadric_map(n, r);
    const double lhs =
        pullback(embed, omega_fs_form().scaled(2.0 * r), m.flat(), t1.flat(), t2.flat(), tol.fd_step);
    const ProjectivePoint image = cotangent_to_quadric(even_rescale(m, r));
    return std::max(std::abs(lhs - omega_std(t1, t2)), std::abs(quadric_residual(image)));
  };
  return c;
}

SmoothMap cp1_parametrization() {
  return SmoothMap("cp1_sphere", SpaceLayout::projective(2),
                   [](const RealVector& x) { return to_real(sphere_rep(x[0], x[1])); });
}

SmoothMap conic_parametrization() {
  return SmoothMap("conic", SpaceLayout::projective(3), [](const RealVector& x) {
    const ComplexVector st = sphere_rep(x[0], x[1]);
    const Complex s = st[0];
    const Complex t = st[1];
    ComplexVector z(3);
    z << s * s + t * t, kI * (s * s - t * t), 2.0 * kI * s * t;
    return to_real(z);
  });
}

SmoothMap diagonal_parametrization() {
  return SmoothMap("diagonal", SpaceLayout::product({2, 2}), [](const RealVector& x) {
    const RealVector a = to_real(sphere_rep(x[0], x[1]));
    RealVector out(8);
    out << a, a;
    return out;
  });
}

constexpr int kPeriodNodes = 200;

CheckImpl period_cp1() {
  CheckImpl c;
  c.desc = {"I-period-CP1", "ball-embedding",
            "omega_FS has period pi on CP^1",
            CheckKind::bound, false, false, {}, {}, 1, 1e-6};
  c.settings = [](const auto&, const auto&) {
    return std::vector<Setting>{{{"nodes", kPeriodNodes}}};
  };
  c.evaluate = [](const Setting& s, std::span<const double>, const ToleranceProfile& tol) {
    const double area = integrate_surface(cp1_parametrization(), omega_fs_form(), 0.0, kPi, 0.0,
                                          kTwoPi, s.at("nodes").get<int>(), tol.fd_step);
    return std::abs(area - kPi);
  };
  return c;
}

CheckImpl period_q1() {
  CheckImpl c;
  c.desc = {"I-period-Q1", "diagonal-antidiagonal",
            "2r omega_FS has period 4 pi r on Q^1, matching the diagonal of CP^1 x CP^1",
            CheckKind::bound, false, true, {}, {0.5, 1.0, 2.0}, 1, 1e-5};
  c.settings = [](const auto&, const auto& radii) {
    std::vector<Setting> out = by_radius(radii);
    for (auto& s : out) s["nodes"] = kPeriodNodes;
    return out;
  };
  c.evaluate = [](const Setting& s, std::span<const double>, const ToleranceProfile& tol) {
    const double r = radius_of(s);
    const int nodes = s.at("nodes").get<int>();
    const double conic = integrate_surface(conic_parametrization(), omega_fs_form().scaled(2.0 * r),
                                           0.0, kPi, 0.0, kTwoPi, nodes, tol.fd_step);
    const double diagonal = integrate_surface(
        diagonal_parametrization(), omega_fs_product_form(SpaceLayout::product({2, 2})).scaled(2.0 * r),
        0.0, kPi, 0.0, kTwoPi, nodes, tol.fd_step);
    return std::max(std::abs(conic - 4.0 * kPi * r), std::abs(diagonal - conic));
  };
  return c;
}

CheckImpl compactification_pair() {
  CheckImpl c;
  c.desc = {"T-compact-zero-section", "compactification",
            "zero section lands on RP^n and the boundary cosphere on Q^{n-1} in CP^n",
            CheckKind::bound, true, true, {2}, {0.5, 1.0, 2.0}, 1000, 1e-9};
  c.settings = by_dim_radius;
  c.draw = [](const Setting& s, Rng& rng, const ToleranceProfile&) {
    const int n = dim_of(s);
    RealVector p = sample_gaussian(n + 1, rng);
    p.normalize();
    const CotangentPoint edge = sample_cosphere(n, 1.0, radius_of(s), rng);
    std::vector<double> in;
    append(in, p);
    append(in, edge.p());
    append(in, edge.q());
    return in;
  };
  c.evaluate = [](const Setting& s, std::span<const double> input, const ToleranceProfile&) {
    const int n = dim_of(s);
    const double r = radius_of(s);
    Reader rd(input);
    const RealVector p = rd.take(n + 1);
    const RealVector ep = rd.take(n + 1);
    const RealVector eq = rd.take(n + 1);
    rd.finish();
    const CotangentPoint zero = CotangentPoint::make(p, RealVector::Zero(n + 1));
    const ProjectivePoint core = branched_cover(cotangent_to_quadric(even_rescale(zero, r)));
    const ProjectivePoint rim = branched_cover(cosphere_boundary(even_rescale(CotangentPoint::make(ep, eq), r)));
    if (locus_classify(core) != Locus::on_rp2 || locus_classify(rim) != Locus::on_q1) return kInf;
    return std::max(real_locus_defect(core), std::abs(quadric_residual(rim)));
  };
  return c;
}

}  // namespace

const std::vector<CheckImpl>& check_table() {
  static const std::vector<CheckImpl> table = {
      ball_embedding_pullback(), period_cp1(),          quadric_image(),
      quadric_inverse(),         unitcut_flow(),        unitcut_boundary(),
      hamiltonian_field(),       unitcut_rk4(),         unitcut_rk4_order(),
      deck_equivariance(),       fiber_counts(),        pi_not_symplectic(),
      segre_pullback(),          segre_equivariance(),  diagonal_antidiagonal(),
      period_q1(),               evened_rescale(),      evened_rk4(),
      uneven_divergence(),       radius_r_embedding(),  omega_r_descent(),
      omega_r_not_fs(),          compactification_pair(),
  };
  return table;
}

}  // namespace symcut::detail
