#include "symcut/forms.hpp"

#include "symcut/errors.hpp"

#include <cmath>

namespace symcut {

namespace {

// Applies `fn(offset, length)` to each projective block of a flat vector.
template <class Fn>
void for_each_factor(const SpaceLayout& layout, Fn&& fn) {
  Index offset = 0;
  for (const Index coords : layout.factors) {
    fn(offset, 2 * coords);
    offset += 2 * coords;
  }
}

Index flat_size(const SpaceLayout& layout) {
  Index total = 0;
  for (const Index coords : layout.factors) total += 2 * coords;
  return total;
}

}  // namespace

RealVector SmoothMap::evaluate(const RealVector& x) const {
  RealVector y = lift_(x);
  if (target_.is_real()) return y;
  if (y.size() != flat_size(target_)) throw DimensionError(name_ + ": lift size mismatch");
  for_each_factor(target_, [&](Index offset, Index len) {
    const ProjectivePoint p = ProjectivePoint::from(to_complex(y.segment(offset, len)));
    y.segment(offset, len) = p.flat();
  });
  return y;
}

RealVector SmoothMap::push_forward(const RealVector& x, const RealVector& v, double h) const {
  RealVector dy = directional_derivative(lift_, x, v, h);
  if (target_.is_real()) return dy;
  const RealVector y = lift_(x);
  if (y.size() != flat_size(target_)) throw DimensionError(name_ + ": lift size mismatch");
  for_each_factor(target_, [&](Index offset, Index len) {
    const ComplexVector value = to_complex(y.segment(offset, len));
    const ProjectivePoint p = ProjectivePoint::from(value);
    const ProjectiveTangent t =
        tangent_from_lift(p, value, to_complex(dy.segment(offset, len)));
    dy.segment(offset, len) = to_real(t.vec);
  });
  return dy;
}

RealMatrix SmoothMap::lift_jacobian(const RealVector& x, double h) const {
  return jacobian(lift_, x, h);
}

TwoForm TwoForm::scaled(double factor) const {
  auto inner = eval_;
  return TwoForm(std::to_string(factor) + "*" + name_,
                 [inner, factor](const RealVector& x, const RealVector& a, const RealVector& b) {
                   return factor * inner(x, a, b);
                 });
}

double omega_std(const RealVector& v1, const RealVector& v2) {
  if (v1.size() != v2.size() || v1.size() % 2 != 0) {
    throw DimensionError("omega_std: need equal even dimensions");
  }
  double s = 0.0;
  for (Index k = 0; k < v1.size(); k += 2) s += v1[k] * v2[k + 1] - v1[k + 1] * v2[k];
  return s;
}

double omega_std(const ComplexVector& v1, const ComplexVector& v2) {
  return hermitian(v1, v2).imag();
}

double omega_std(const CotangentTangent& a, const CotangentTangent& b) {
  if (a.u.size() != b.u.size()) throw DimensionError("omega_std: dimension mismatch");
  return a.u.dot(b.w) - a.w.dot(b.u);
}

namespace {

void require_based_at(const ProjectivePoint& base, const ProjectiveTangent& t) {
  if (t.base.size() != base.size() || (t.base.rep() - base.rep()).norm() > 1e-12) {
    throw DomainError("omega_fs: tangent is based at a different point");
  }
}

double fs_on_rep(const ComplexVector& rep, const ComplexVector& u, const ComplexVector& v) {
  return omega_std(horizontal_part(rep, u), horizontal_part(rep, v));
}

Complex sheet_coordinate(const ComplexVector& rep, bool principal) {
  Complex s = 0.0;
  for (const auto& z : rep) s += z * z;
  const Complex root = Complex(0.0, 1.0) * std::sqrt(s);
  return principal ? root : -root;
}

double omega_r_on_rep(const ComplexVector& rep, const ComplexVector& u, const ComplexVector& v,
                      double r, double margin, bool principal) {
  Complex s = 0.0;
  for (const auto& z : rep) s += z * z;
  const double scale = rep.squaredNorm();
  if (std::abs(s) <= margin * scale) {
    throw BranchLocusError("omega_r: point within the branch margin of the quadric");
  }
  const Index m = rep.size();
  ComplexVector lifted(m + 1);
  lifted.head(m) = rep;
  lifted[m] = sheet_coordinate(rep, principal);
  // z_{n+1} dz_{n+1} = -sum z_k dz_k on the quadric
  auto lift_tangent = [&](const ComplexVector& t) {
    ComplexVector out(m + 1);
    out.head(m) = t;
    out[m] = -rep.cwiseProduct(t).sum() / lifted[m];
    return out;
  };
  const ProjectivePoint top = ProjectivePoint::from(lifted);
  const ProjectiveTangent tu = tangent_from_lift(top, lifted, lift_tangent(u));
  const ProjectiveTangent tv = tangent_from_lift(top, lifted, lift_tangent(v));
  return 2.0 * r * omega_std(tu.vec, tv.vec);
}

}  // namespace

double omega_fs(const ProjectivePoint& base, const ProjectiveTangent& u,
                const ProjectiveTangent& v) {
  require_based_at(base, u);
  require_based_at(base, v);
  return fs_on_rep(base.rep(), u.vec, v.vec);
}

ProjectivePoint quadric_sheet(const ProjectivePoint& base, bool principal) {
  ComplexVector lifted(base.size() + 1);
  lifted.head(base.size()) = base.rep();
  lifted[base.size()] = sheet_coordinate(base.rep(), principal);
  return ProjectivePoint::from(lifted);
}

double omega_r(const ProjectivePoint& base, const ProjectiveTangent& u,
               const ProjectiveTangent& v, double r, double branch_margin,
               bool principal_sheet) {
  require_based_at(base, u);
  require_based_at(base, v);
  return omega_r_on_rep(base.rep(), u.vec, v.vec, r, branch_margin, principal_sheet);
}

TwoForm omega_std_form() {
  return TwoForm("omega_std", [](const RealVector&, const RealVector& a, const RealVector& b) {
    return omega_std(a, b);
  });
}

TwoForm omega_fs_form() {
  return TwoForm("omega_fs", [](const RealVector& x, const RealVector& a, const RealVector& b) {
    return fs_on_rep(to_complex(x), to_complex(a), to_complex(b));
  });
}

TwoForm omega_fs_product_form(SpaceLayout layout) {
  return TwoForm("omega_fs_sum", [layout](const RealVector& x, const RealVector& a,
                                          const RealVector& b) {
    double total = 0.0;
    for_each_factor(layout, [&](Index offset, Index len) {
      total += fs_on_rep(to_complex(x.segment(offset, len)), to_complex(a.segment(offset, len)),
                         to_complex(b.segment(offset, len)));
    });
    return total;
  });
}

TwoForm omega_r_form(double r, double branch_margin) {
  return TwoForm("omega_r", [r, branch_margin](const RealVector& x, const RealVector& a,
                                               const RealVector& b) {
    return omega_r_on_rep(to_complex(x), to_complex(a), to_complex(b), r, branch_margin, true);
  });
}

double pullback(const SmoothMap& f, const TwoForm& target_form, const RealVector& x,
                const RealVector& v1, const RealVector& v2, double h) {
  return target_form(f.evaluate(x), f.push_forward(x, v1, h), f.push_forward(x, v2, h));
}

double integrate_surface(const SmoothMap& param, const TwoForm& form, double a, double b,
                         double c, double d, int nodes, double h) {
  const RealVector eu = RealVector::Unit(2, 0);
  const RealVector ev = RealVector::Unit(2, 1);
  return gauss_legendre_2d(
      [&](double s, double t) {
        const RealVector x{{s, t}};
        return form(param.evaluate(x), param.push_forward(x, eu, h),
                    param.push_forward(x, ev, h));
      },
      a, b, c, d, nodes);
}

}  // namespace symcut
