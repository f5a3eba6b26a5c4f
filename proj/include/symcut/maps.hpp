#pragma once

#include "symcut/cotangent.hpp"
#include "symcut/forms.hpp"
#include "symcut/projective.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symcut {

/// (z, i sqrt(r^2 - |z|^2)), the unnormalized lift of the ball embedding.
/// Throws DomainError unless |z| < r.
ComplexVector ball_lift(const ComplexVector& z, double r);

/// [z_0 : ... : z_n : i sqrt(r^2 - |z|^2)], a point of CP^{n+1} off H_{n+1}.
ProjectivePoint ball_to_projective(const ComplexVector& z, double r);

/// Evened disc bundle into the quadric: ball_to_projective(p + i q, sqrt(2) k).
/// Requires |q| < k (k = base radius; k = 1 is the unit disc bundle).
ProjectivePoint cotangent_to_quadric(const CotangentPoint& m);

/// Affine coordinates (x, y) of a point of Q^n off H_{n+1}, taken from the
/// representative with z_{n+1} = i t (t > 0) and norm sqrt(2) k.
/// On Q^n - Q^{n-1} this inverts cotangent_to_quadric. Throws DomainError on H_{n+1}.
std::pair<RealVector, RealVector> quadric_to_cotangent(const ProjectivePoint& point,
                                                       double base_radius = 1.0);

/// [p + i q : 0] for an evened cosphere point |q| = |p|.
ProjectivePoint cosphere_boundary(const CotangentPoint& m);

/// [z_0 : ... : z_n : z_{n+1}] -> [z_0 : ... : z_n]. Throws DomainError at [0:...:0:1].
ProjectivePoint branched_cover(const ProjectivePoint& point);

/// Points of Q^n over `point`: two off the quadric Q^{n-1}, one on it (|residual| <= tol).
std::vector<ProjectivePoint> branched_fiber(const ProjectivePoint& point, double tol = 1e-10);

/// Negates the last homogeneous coordinate.
ProjectivePoint deck(const ProjectivePoint& point);

/// ([x:y], [a:b]) -> [xa + yb : i(xa - yb) : i(xb + ya) : xb - ya].
ComplexVector segre_unitary_lift(const ComplexVector& first, const ComplexVector& second);
ProjectivePoint segre_unitary(const ProjectivePoint& first, const ProjectivePoint& second);

std::pair<ProjectivePoint, ProjectivePoint> swap_factors(const ProjectivePoint& first,
                                                         const ProjectivePoint& second);

/// Fixed-point-free involution [x:y] -> [-conj(y) : conj(x)] of CP^1.
ProjectivePoint cp1_antipodal(const ProjectivePoint& point);

enum class Locus { on_q1, on_rp2, generic };

std::string to_string(Locus locus);

/// max |Im(rep_j conj(rep_k))|; zero exactly when some gauge makes all entries real.
double real_locus_defect(const ProjectivePoint& point);

/// Classifies a point of CP^2 against the conic Q^1 and the real plane RP^2.
Locus locus_classify(const ProjectivePoint& point, double tol = 1e-9);

// SmoothMap views of the maps above, on flat coordinates.
SmoothMap ball_embedding_map(int n, double r);
/// Composite (p, q) -> cotangent_to_quadric(even_rescale((p, q), r)) on U*_r S^n(1).
SmoothMap cotangent_quadric_map(int n, double r = 1.0);
SmoothMap branched_cover_map(int n);
SmoothMap deck_map(int n);
SmoothMap segre_unitary_map();
SmoothMap even_rescale_map(int n, double r);

struct MapCatalogEntry {
  std::string name;
  SmoothMap map;
  std::string anchor;
};

/// Every explicit map with a short statement of what it realizes.
std::vector<MapCatalogEntry> map_catalog(int n, double r);

}  // namespace symcut
