#include "symcut/maps.hpp"

#include "symcut/errors.hpp"

#include <cmath>

namespace symcut {

namespace {

const Complex kI(0.0, 1.0);

ComplexVector rescaled_embedding(const ComplexVector& z, double r) {
  const double s = std::sqrt(r);
  ComplexVector out(z.size());
  for (Index k = 0; k < z.size(); ++k) out[k] = Complex(s * z[k].real(), z[k].imag() / s);
  return out;
}

}  // namespace

ComplexVector ball_lift(const ComplexVector& z, double r) {
  if (!(r > 0)) throw PreconditionError("ball embedding: radius must be > 0");
  const double gap = r * r - z.squaredNorm();
  if (!(gap > 0)) throw DomainError("ball embedding: |z| >= r");
  ComplexVector out(z.size() + 1);
  out.head(z.size()) = z;
  out[z.size()] = kI * std::sqrt(gap);
  return out;
}

ProjectivePoint ball_to_projective(const ComplexVector& z, double r) {
  return ProjectivePoint::from(ball_lift(z, r));
}

ProjectivePoint cotangent_to_quadric(const CotangentPoint& m) {
  const double k = m.base_radius();
  if (!(m.fiber_norm() < k)) throw DomainError("cotangent_to_quadric: requires |q| < base radius");
  return ball_to_projective(m.embedded(), std::sqrt(2.0) * k);
}

std::pair<RealVector, RealVector> quadric_to_cotangent(const ProjectivePoint& point,
                                                       double base_radius) {
  const Index last = point.size() - 1;
  const Complex c = point.rep()[last];
  if (std::abs(c) <= 1e-14) throw DomainError("quadric_to_cotangent: point lies on H_{n+1}");
  const Complex phase = kI * std::conj(c) / std::abs(c);
  const ComplexVector w = point.rep() * (phase * std::sqrt(2.0) * base_radius);
  return {w.head(last).real(), w.head(last).imag()};
}

ProjectivePoint cosphere_boundary(const CotangentPoint& m) {
  const double k = m.base_radius();
  if (std::abs(m.fiber_norm() - k) > 1e-10 * std::max(1.0, k)) {
    throw PreconditionError("cosphere_boundary: requires |q| = base radius");
  }
  ComplexVector z(m.p().size() + 1);
  z.head(m.p().size()) = m.embedded();
  z[m.p().size()] = 0.0;
  return ProjectivePoint::from(z);
}

ProjectivePoint branched_cover(const ProjectivePoint& point) {
  const Index m = point.size() - 1;
  if (m < 1) throw DimensionError("branched_cover: need CP^{n+1} with n >= 0");
  const ComplexVector head = point.rep().head(m);
  if (head.norm() <= 1e-12) throw DomainError("branched_cover: undefined at [0:...:0:1]");
  return ProjectivePoint::from(head);
}

std::vector<ProjectivePoint> branched_fiber(const ProjectivePoint& point, double tol) {
  if (on_quadric(point, tol)) {
    ComplexVector z(point.size() + 1);
    z.head(point.size()) = point.rep();
    z[point.size()] = 0.0;
    return {ProjectivePoint::from(z)};
  }
  return {quadric_sheet(point, true), quadric_sheet(point, false)};
}

ProjectivePoint deck(const ProjectivePoint& point) {
  ComplexVector z = point.rep();
  z[z.size() - 1] = -z[z.size() - 1];
  return ProjectivePoint::from(z);
}

ComplexVector segre_unitary_lift(const ComplexVector& first, const ComplexVector& second) {
  if (first.size() != 2 || second.size() != 2) {
    throw DimensionError("segre_unitary: factors must be points of CP^1");
  }
  const Complex x = first[0];
  const Complex y = first[1];
  const Complex a = second[0];
  const Complex b = second[1];
  ComplexVector out(4);
  out << x * a + y * b, kI * (x * a - y * b), kI * (x * b + y * a), x * b - y * a;
  return out;
}

ProjectivePoint segre_unitary(const ProjectivePoint& first, const ProjectivePoint& second) {
  return ProjectivePoint::from(segre_unitary_lift(first.rep(), second.rep()));
}

std::pair<ProjectivePoint, ProjectivePoint> swap_factors(const ProjectivePoint& first,
                                                         const ProjectivePoint& second) {
  return {second, first};
}

ProjectivePoint cp1_antipodal(const ProjectivePoint& point) {
  if (point.size() != 2) throw DimensionError("cp1_antipodal: expects a point of CP^1");
  ComplexVector z(2);
  z << -std::conj(point.rep()[1]), std::conj(point.rep()[0]);
  return ProjectivePoint::from(z);
}

std::string to_string(Locus locus) {
  switch (locus) {
    case Locus::on_q1:
      return "on_Q1";
    case Locus::on_rp2:
      return "on_RP2";
    case Locus::generic:
      return "generic";
  }
  return "generic";
}

double real_locus_defect(const ProjectivePoint& point) {
  double worst = 0.0;
  const auto& z = point.rep();
  for (Index j = 0; j < z.size(); ++j) {
    for (Index k = j + 1; k < z.size(); ++k) {
      worst = std::max(worst, std::abs((z[j] * std::conj(z[k])).imag()));
    }
  }
  return worst;
}

Locus locus_classify(const ProjectivePoint& point, double tol) {
  if (std::abs(quadric_residual(point)) < tol) return Locus::on_q1;
  if (real_locus_defect(point) < tol) return Locus::on_rp2;
  return Locus::generic;
}

SmoothMap ball_embedding_map(int n, double r) {
  return SmoothMap("ball_embedding", SpaceLayout::projective(n + 2),
                   [r](const RealVector& x) { return to_real(ball_lift(to_complex(x), r)); });
}

SmoothMap cotangent_quadric_map(int n, double r) {
  return SmoothMap("cotangent_to_quadric", SpaceLayout::projective(n + 2), [r](const RealVector& x) {
    return to_real(ball_lift(rescaled_embedding(to_complex(x), r), std::sqrt(2.0 * r)));
  });
}

SmoothMap branched_cover_map(int n) {
  return SmoothMap("branched_cover", SpaceLayout::projective(n + 1),
                   [](const RealVector& x) -> RealVector { return x.head(x.size() - 2); });
}

SmoothMap deck_map(int n) {
  return SmoothMap("deck", SpaceLayout::projective(n + 2), [](const RealVector& x) {
    RealVector y = x;
    y.tail(2) = -y.tail(2);
    return y;
  });
}

SmoothMap segre_unitary_map() {
  return SmoothMap("segre_unitary", SpaceLayout::projective(4), [](const RealVector& x) {
    return to_real(segre_unitary_lift(to_complex(x.head(4)), to_complex(x.tail(4))));
  });
}

SmoothMap even_rescale_map(int /*n*/, double r) {
  return SmoothMap("even_rescale", SpaceLayout::real(), [r](const RealVector& x) {
    return to_real(rescaled_embedding(to_complex(x), r));
  });
}

std::vector<MapCatalogEntry> map_catalog(int n, double r) {
  return {
      {"ball_embedding", ball_embedding_map(n, r),
       "ball of radius r onto CP^{n+1} - H_{n+1}; pulls r^2 omega_FS back to omega_std"},
      {"cotangent_to_quadric", cotangent_quadric_map(n, r),
       "U*_r S^n onto Q^n - Q^{n-1} with 2r omega_FS"},
      {"branched_cover", branched_cover_map(n), "Q^n -> CP^n, branched along Q^{n-1}"},
      {"deck", deck_map(n), "deck involution of the branched cover"},
      {"segre_unitary", segre_unitary_map(), "CP^1 x CP^1 onto Q^2"},
      {"even_rescale", even_rescale_map(n, r), "U*_r S^n(1) onto U*_sqrt(r) S^n(sqrt(r))"},
  };
}

}  // namespace symcut
