#ifndef STRANGEDUAL_BUNDLE_LEDGER_HPP
#define STRANGEDUAL_BUNDLE_LEDGER_HPP

#include <optional>
#include <string>
#include <vector>

#include "strangedual/group.hpp"
#include "strangedual/rational.hpp"

namespace strangedual::ledger {

/// Line bundle on an elliptic curve (or pointed curve) tracked through its
/// degree and the point-sum of a defining divisor. Tensor adds both fields,
/// dual negates both. The sum lives in a declared abelian group, so symbolic
/// points are ordinary group generators.
struct LineBundleOnCurve {
  Int deg;
  GroupElement sum;

  LineBundleOnCurve tensor(const LineBundleOnCurve& o) const { return {deg + o.deg, sum + o.sum}; }
  LineBundleOnCurve dual() const { return {-deg, -sum}; }
  LineBundleOnCurve power(const Int& n) const { return {deg * n, sum * n}; }

  /// Pullback along translation by x: (deg, s) -> (deg, s - deg*x).
  LineBundleOnCurve translate(const GroupElement& x) const { return {deg, sum - x * deg}; }
  /// Pullback along multiplication by n: (deg, s) -> (n^2 deg, n s).
  LineBundleOnCurve mult_pullback(const Int& n) const { return {deg * n * n, sum * n}; }

  /// Determinant of the Fourier transform of a line bundle on an elliptic
  /// curve: degree drops to -1, the point-sum is carried through unchanged.
  LineBundleOnCurve fm_det() const { return {Int(-1), sum}; }

  bool operator==(const LineBundleOnCurve& o) const { return deg == o.deg && sum == o.sum; }

  static LineBundleOnCurve structure(const GroupPtr& g) { return {Int(0), g->zero()}; }
  static LineBundleOnCurve of_origin(const GroupPtr& g, const Int& k) { return {k, g->zero()}; }
  static LineBundleOnCurve of_point(const GroupElement& x, const Int& mult = Int(1)) {
    return {mult, x * mult};
  }
  static LineBundleOnCurve degree_zero(const GroupElement& x) { return {Int(0), x}; }
};

/// Determinant of the Fourier transform of a skyscraper at z: the degree-zero
/// bundle attached to the point itself.
inline LineBundleOnCurve fm_det_skyscraper(const GroupElement& z) { return {Int(0), z}; }

/// Split line-bundle data on a product surface: c1 = a sigma + b f corresponds
/// to F-degree a and B-degree b.
struct SplitSurfaceBundle {
  LineBundleOnCurve base;   // B-factor: degree = f coefficient
  LineBundleOnCurve fiber;  // F-factor: degree = sigma coefficient

  SplitSurfaceBundle tensor(const SplitSurfaceBundle& o) const {
    return {base.tensor(o.base), fiber.tensor(o.fiber)};
  }
  SplitSurfaceBundle dual() const { return {base.dual(), fiber.dual()}; }
  SplitSurfaceBundle power(const Int& n) const { return {base.power(n), fiber.power(n)}; }
  bool operator==(const SplitSurfaceBundle& o) const {
    return base == o.base && fiber == o.fiber;
  }
  Int sigma_coefficient() const { return fiber.deg; }
  Int f_coefficient() const { return base.deg; }
};

struct SectionShape {
  Int h0;
  std::string divisor_form;
  /// Point-sum constraint (must vanish), when the shape imposes one.
  std::optional<GroupElement> constraint;
};

/// Section counts and divisor shapes of O(a sigma + b f) on the abelian
/// product surface, for the enumerated shapes (a,b>0), (0,l), (1,l), (l,0).
/// Symbolic divisor points z_1..z_l are generators of the returned constraint's
/// group when a constraint applies.
SectionShape section_shape(const Int& a, const Int& b);

struct RootLocus {
  Int count;       // r^{2g}
  std::string description;
  bool roots_are_torsion;  // true when the base bundle is trivial
};

/// r-th roots of the degree-zero bundle O(a_C(Z) - d_v o): a torsor under the
/// r-torsion of the Jacobian, of size r^{2g}.
RootLocus root_locus(const GroupElement& z_sum, const Int& d_v, const Int& r, int g);

}  // namespace strangedual::ledger

#endif
