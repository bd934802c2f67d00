#include "strangedual/varieties.hpp"

#include <stdexcept>

#include "json.hpp"

namespace strangedual::varieties {

AbelianModel AbelianModel::elliptic(const std::string& label) {
  return {label, 1, {label + "1", label + "2"}};
}

AbelianModel AbelianModel::jacobian(const std::string& label, int g) {
  if (g < 1) throw std::invalid_argument("jacobian: dimension must be >= 1");
  AbelianModel m{label, g, {}};
  for (int i = 1; i <= g; ++i) {
    m.generators.push_back(label + "x" + std::to_string(i));
    m.generators.push_back(label + "y" + std::to_string(i));
  }
  return m;
}

ProductModel::ProductModel(std::vector<AbelianModel> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("ProductModel: no factors");
  std::vector<std::string> names;
  for (const auto& f : factors_) {
    if (static_cast<int>(f.generators.size()) != 2 * f.dim)
      throw std::invalid_argument("ProductModel: factor needs exactly 2g generators");
    offsets_.push_back(static_cast<int>(names.size()));
    names.insert(names.end(), f.generators.begin(), f.generators.end());
  }
  ctx_ = exterior::make_context(std::move(names));  // rejects duplicate names
}

std::vector<int> ProductModel::factor_indices(std::size_t i) const {
  const auto& f = factors_.at(i);
  std::vector<int> idx;
  for (int k = 0; k < 2 * f.dim; ++k) idx.push_back(offsets_[i] + k);
  return idx;
}

Mask ProductModel::factor_mask(std::size_t i) const {
  Mask m = 0;
  for (int k : factor_indices(i)) m |= Mask{1} << k;
  return m;
}

Element ProductModel::point_of(std::size_t i) const {
  return Element::monomial(ctx_, factor_mask(i), Rat(1));
}

Element ProductModel::theta_of(std::size_t i) const {
  Element t = Element::zero(ctx_);
  auto idx = factor_indices(i);
  for (std::size_t k = 0; k + 1 < idx.size(); k += 2) {
    Mask m = (Mask{1} << idx[k]) | (Mask{1} << idx[k + 1]);
    t = t + Element::monomial(ctx_, m, Rat(1));
  }
  return t;
}

Element ProductModel::top_point() const {
  return Element::monomial(ctx_, ctx_->full_mask(), Rat(1));
}

static void require_double(const ProductModel& m, const char* what) {
  if (m.factor_count() != 2 || m.factor(0).dim != m.factor(1).dim)
    throw std::invalid_argument(std::string(what) + ": needs two factors of equal dimension");
}

Element poincare_class(const ProductModel& m) {
  require_double(m, "poincare_class");
  ProductModel single({m.factor(0)});
  auto add = StandardMorphism::addition(m, single);
  Element theta = single.theta_of(0);
  return m.theta_of(0) + m.theta_of(1) - exterior::pullback(theta, add.action);
}

Element diagonal_class(const ProductModel& m) {
  require_double(m, "diagonal_class");
  // Pushforward of 1 along the diagonal embedding; by the adjunction property
  // this is the class representing restriction to the diagonal.
  ProductModel single({m.factor(0)});
  const int n = 2 * m.factor(0).dim;
  // Pullback matrix of the diagonal: both blocks of target generators restrict
  // to the single model's generators.
  std::vector<std::vector<Rat>> mat(2 * n, std::vector<Rat>(n, Rat(0)));
  for (int t = 0; t < 2 * n; ++t) mat[t][t % n] = 1;
  Morphism diag(single.context(), m.context(), std::move(mat));
  return exterior::pushforward(single.one(), diag);
}

std::map<std::string, Element> standard_classes(const ProductModel& m) {
  std::map<std::string, Element> out;
  const auto nf = m.factor_count();
  if (nf == 1) {
    out["pt"] = m.point_of(0);
    out["theta"] = m.theta_of(0);
    return out;
  }
  if (nf == 2) {
    out["pt1"] = m.point_of(0);
    out["pt2"] = m.point_of(1);
    out["pt"] = m.top_point();
    if (m.factor(0).dim == m.factor(1).dim) {
      out["theta1"] = m.theta_of(0);
      out["theta2"] = m.theta_of(1);
      out["poincare"] = poincare_class(m);
      out["diagonal"] = diagonal_class(m);
    }
    if (m.factor(0).dim == 1 && m.factor(1).dim == 1) {
      // Surface reading of a two-elliptic-factor product: sigma is the section
      // class [base x o], f the fiber class [o x fiber].
      out["sigma"] = m.point_of(1);
      out["f"] = m.point_of(0);
      out["omega"] = m.point_of(1) * m.point_of(0);
    }
    return out;
  }
  if (nf == 3 || nf == 4 || nf == 6) {  // triple products and X x X shapes
    for (std::size_t i = 0; i < nf; ++i)
      out["pt" + std::to_string(i + 1)] = m.point_of(i);
    out["pt"] = m.top_point();
    return out;
  }
  throw std::invalid_argument("standard_classes: unrecognized model shape");
}

StandardMorphism StandardMorphism::multiplication(const ProductModel& m, const Int& n,
                                                  const std::string& name) {
  auto mor = Morphism::scaling(m.context(), Rat(n));
  return {name.empty() ? "mult" : name, std::move(mor)};
}

StandardMorphism StandardMorphism::factor_scaling(const ProductModel& m,
                                                  const std::vector<Int>& n,
                                                  const std::string& name) {
  if (n.size() != m.factor_count())
    throw std::invalid_argument("factor_scaling: one scale per factor required");
  const std::size_t g = m.context()->size();
  std::vector<std::vector<Rat>> mat(g, std::vector<Rat>(g, Rat(0)));
  for (std::size_t i = 0; i < m.factor_count(); ++i)
    for (int k : m.factor_indices(i)) mat[k][k] = Rat(n[i]);
  return {name, Morphism(m.context(), m.context(), std::move(mat))};
}

StandardMorphism StandardMorphism::addition(const ProductModel& src_double,
                                            const ProductModel& tgt_single) {
  require_double(src_double, "addition");
  const int n = 2 * tgt_single.factor(0).dim;
  if (tgt_single.factor_count() != 1 || static_cast<int>(src_double.context()->size()) != 2 * n)
    throw std::invalid_argument("addition: shape mismatch");
  std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int t = 0; t < n; ++t) {
    mat[t][t] = 1;
    mat[t][t + n] = 1;
  }
  return {"add", Morphism(src_double.context(), tgt_single.context(), std::move(mat))};
}

StandardMorphism StandardMorphism::graph_scaling(const ProductModel& src_single,
                                                 const ProductModel& tgt_double, const Int& n) {
  require_double(tgt_double, "graph_scaling");
  const int g = static_cast<int>(src_single.context()->size());
  if (static_cast<int>(tgt_double.context()->size()) != 2 * g)
    throw std::invalid_argument("graph_scaling: shape mismatch");
  std::vector<std::vector<Rat>> mat(2 * g, std::vector<Rat>(g, Rat(0)));
  for (int t = 0; t < g; ++t) mat[t][t] = Rat(n);
  for (int t = 0; t < g; ++t) mat[g + t][t] = 1;
  return {"graph", Morphism(src_single.context(), tgt_double.context(), std::move(mat))};
}

Surface::Surface(std::string base_label, int base_genus, std::string fiber_label)
    : model_({AbelianModel::elliptic(base_label), AbelianModel::elliptic(fiber_label)}),
      genus_(base_genus) {
  if (base_genus < 1) throw std::invalid_argument("Surface: base genus must be >= 1");
}

Element Surface::sigma() const { return model_.point_of(1); }
Element Surface::fiber() const { return model_.point_of(0); }
Element Surface::omega() const { return sigma() * fiber(); }

Element Surface::canonical() const { return fiber() * Rat(2 * gbar()); }

Element Surface::todd() const {
  return model_.one() - fiber() * Rat(gbar());
}

Element Surface::chern_line(const Int& a, const Int& b) const {
  return (sigma() * Rat(a) + fiber() * Rat(b)).exp();
}

Int Surface::euler_char_line(const Int& a, const Int& b) const {
  return to_integer((chern_line(a, b) * todd()).integrate(), "chi of a line bundle");
}

SurfacePtr abelian_product_surface() {
  static SurfacePtr x = std::make_shared<Surface>("b", 1, "f");
  return x;
}

SurfacePtr genus_surface(int g) {
  return std::make_shared<Surface>("c", g, "f");
}

Int euler_char_curve(int genus, const Int& deg) { return deg - (genus - 1); }

std::string model_to_json(const ProductModel& m) {
  nlohmann::json j;
  j["factors"] = nlohmann::json::array();
  for (std::size_t i = 0; i < m.factor_count(); ++i) {
    const auto& f = m.factor(i);
    j["factors"].push_back({{"label", f.label}, {"dim", f.dim}, {"generators", f.generators}});
  }
  j["orientation"] = m.context()->names();
  return j.dump(2);
}

ProductModel model_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<AbelianModel> factors;
  for (const auto& jf : j.at("factors")) {
    AbelianModel f;
    f.label = jf.at("label").get<std::string>();
    f.dim = jf.at("dim").get<int>();
    f.generators = jf.at("generators").get<std::vector<std::string>>();
    factors.push_back(std::move(f));
  }
  ProductModel m(std::move(factors));
  if (j.contains("orientation") &&
      j["orientation"].get<std::vector<std::string>>() != m.context()->names())
    throw std::invalid_argument("model_from_json: orientation does not match factor order");
  return m;
}

}  // namespace strangedual::varieties
