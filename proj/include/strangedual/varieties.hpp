#ifndef STRANGEDUAL_VARIETIES_HPP
#define STRANGEDUAL_VARIETIES_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "strangedual/exterior.hpp"
#include "strangedual/rational.hpp"

namespace strangedual::varieties {

using exterior::Context;
using exterior::Element;
using exterior::Mask;
using exterior::Morphism;

/// An abelian variety of dimension g, modeled by the exterior algebra on 2g
/// degree-1 generators grouped in symplectic pairs (x_i, y_i), with
/// orientation x_1 y_1 ... x_g y_g.
struct AbelianModel {
  std::string label;
  int dim = 1;
  std::vector<std::string> generators;  // 2*dim names

  static AbelianModel elliptic(const std::string& label);
  static AbelianModel jacobian(const std::string& label, int g);
};

/// An ordered product of abelian factors sharing one exterior context whose
/// generator order (and hence orientation) is the concatenation of the
/// factors' generator lists.
class ProductModel {
 public:
  explicit ProductModel(std::vector<AbelianModel> factors);

  const Context& context() const { return ctx_; }
  std::size_t factor_count() const { return factors_.size(); }
  const AbelianModel& factor(std::size_t i) const { return factors_.at(i); }
  /// Generator indices (global, ascending) belonging to factor i.
  std::vector<int> factor_indices(std::size_t i) const;
  Mask factor_mask(std::size_t i) const;

  Element one() const { return Element::scalar(ctx_, Rat(1)); }
  Element scalar(Rat v) const { return Element::scalar(ctx_, std::move(v)); }
  /// Point class of factor i (its full ascending generator product).
  Element point_of(std::size_t i) const;
  /// Principal theta class of factor i: sum of x_j ∧ y_j over its pairs.
  Element theta_of(std::size_t i) const;
  Element top_point() const;

 private:
  std::vector<AbelianModel> factors_;
  std::vector<int> offsets_;
  Context ctx_;
};

/// Mixed Poincaré class on a two-factor product of equal-dimension abelian
/// models: theta_1 + theta_2 - m* theta, with m the addition map.
Element poincare_class(const ProductModel& m);

/// Diagonal class of a two-factor product of equal-dimension models.
Element diagonal_class(const ProductModel& m);

/// Named standard classes of a recognized model shape.
std::map<std::string, Element> standard_classes(const ProductModel& m);

/// A morphism of product models recorded by an integer pullback matrix on
/// degree-1 generators.
struct StandardMorphism {
  std::string name;
  Morphism action;

  static StandardMorphism multiplication(const ProductModel& m, const Int& n,
                                         const std::string& name = {});
  /// Per-factor multiplication (n_0, n_1, ...) on a product model.
  static StandardMorphism factor_scaling(const ProductModel& m, const std::vector<Int>& n,
                                         const std::string& name = {});
  /// Addition A x A -> A on a two-equal-factor product: x_i -> x_i + x_i'.
  static StandardMorphism addition(const ProductModel& src_double, const ProductModel& tgt_single);
  /// z -> (n z, z): single model into the two-factor product.
  static StandardMorphism graph_scaling(const ProductModel& src_single,
                                        const ProductModel& tgt_double, const Int& n);
};

/// A trivially fibered surface base x fiber. The even intersection ring is the
/// same for every base genus (sigma^2 = f^2 = 0, sigma.f = 1); the genus enters
/// through the canonical class K = 2(g-1) f and Todd class 1 - (g-1) f.
class Surface {
 public:
  Surface(std::string base_label, int base_genus, std::string fiber_label = "F");

  const ProductModel& model() const { return model_; }
  const Context& context() const { return model_.context(); }
  int base_genus() const { return genus_; }
  Int gbar() const { return Int(genus_ - 1); }
  bool abelian() const { return genus_ == 1; }

  Element sigma() const;  // [base x o_F]
  Element fiber() const;  // [o_base x F]
  Element omega() const;  // sigma . fiber
  Element canonical() const;  // 2 gbar f
  Element todd() const;       // 1 - gbar f

  /// ch of the line bundle O(a sigma + b f).
  Element chern_line(const Int& a, const Int& b) const;
  /// chi(O(a sigma + b f)) = integral of exp(c1) . td.
  Int euler_char_line(const Int& a, const Int& b) const;

  bool operator==(const Surface& o) const {
    return genus_ == o.genus_ && *context() == *o.context();
  }

 private:
  ProductModel model_;
  int genus_;
};

using SurfacePtr = std::shared_ptr<const Surface>;

SurfacePtr abelian_product_surface();  // X = B x F
SurfacePtr genus_surface(int g);       // X = C x F, C of genus g

/// Riemann-Roch on a smooth curve of genus g: chi(deg e) = e - (g-1).
Int euler_char_curve(int genus, const Int& deg);

/// JSON descriptor (factor list, generator names, orientation) round-trip.
std::string model_to_json(const ProductModel& m);
ProductModel model_from_json(const std::string& text);

}  // namespace strangedual::varieties

#endif
