#include "doctest.h"
#include "strangedual/varieties.hpp"

using namespace strangedual;
using namespace strangedual::varieties;

TEST_CASE("surface intersection numbers") {
  auto x = abelian_product_surface();
  CHECK((x->sigma() * x->fiber()).integrate() == Rat(1));
  CHECK((x->sigma() * x->sigma()).integrate() == Rat(0));
  CHECK((x->fiber() * x->fiber()).integrate() == Rat(0));
}

TEST_CASE("standard classes on the two-elliptic-factor product") {
  ProductModel m({AbelianModel::elliptic("e"), AbelianModel::elliptic("g")});
  auto classes = standard_classes(m);
  Element p = classes.at("poincare");
  Element pt1 = classes.at("pt1"), pt2 = classes.at("pt2");
  CHECK(p * p == m.top_point() * Rat(-2));
  CHECK((p * pt1).is_zero());
  CHECK((p * pt2).is_zero());
  CHECK(classes.at("diagonal") == p + pt1 + pt2);
  // The abelian surface diagonal has self-intersection zero.
  Element d = classes.at("diagonal");
  CHECK((d * d).integrate() == Rat(0));
}

TEST_CASE("diagonal class restricts correctly against split classes") {
  ProductModel m({AbelianModel::elliptic("e"), AbelianModel::elliptic("g")});
  Element d = diagonal_class(m);
  // Pairing [Delta] . (alpha x beta) integrates alpha . beta on the factor.
  Element e1 = Element::generator(m.context(), 0);
  Element e2 = Element::generator(m.context(), 1);
  Element g1 = Element::generator(m.context(), 2);
  Element g2 = Element::generator(m.context(), 3);
  CHECK((d * (e1 * g2)).integrate() == Rat(1));   // ∫ e1 e2 = 1
  CHECK((d * (e2 * g1)).integrate() == Rat(-1));  // ∫ e2 e1 = -1
  CHECK((d * (e1 * g1)).integrate() == Rat(0));
}

TEST_CASE("theta power rule on principally polarized models") {
  for (int g = 1; g <= 3; ++g) {
    ProductModel a({AbelianModel::jacobian("a", g)});
    Element theta = a.theta_of(0);
    Element power = a.one();
    Int fact = 1;
    for (int k = 1; k <= g; ++k) { power = power * theta; fact *= k; }
    CHECK(power == a.top_point() * Rat(fact));
  }
}

TEST_CASE("poincare class on the double Jacobian matches the addition pullback") {
  for (int g = 1; g <= 2; ++g) {
    AbelianModel a = AbelianModel::jacobian("a", g);
    AbelianModel ap = a;
    ap.label += "'";
    for (auto& n : ap.generators) n += "'";
    ProductModel pair({a, ap});
    ProductModel single({a});
    auto add = StandardMorphism::addition(pair, single);
    Element expect =
        pair.theta_of(0) + pair.theta_of(1) - exterior::pullback(single.theta_of(0), add.action);
    CHECK(poincare_class(pair) == expect);
  }
}

TEST_CASE("line bundle Euler characteristics") {
  auto x = abelian_product_surface();
  CHECK(x->euler_char_line(3, 4) == 12);
  CHECK(x->euler_char_line(6, 2) == 12);
  CHECK(x->euler_char_line(0, 7) == 0);
  auto c2 = genus_surface(2);
  CHECK(c2->euler_char_line(6, 5) == 24);  // k(n - gbar) with gbar = 1
  CHECK(euler_char_curve(2, Int(0)) == -1);
  CHECK(euler_char_curve(1, Int(5)) == 5);
}

TEST_CASE("chern character of line bundles") {
  auto x = abelian_product_surface();
  Element ch = x->chern_line(2, 5);
  CHECK(ch.coefficient(0) == Rat(1));
  CHECK((ch.homogeneous_part(4)).integrate() == Rat(10));
  CHECK((x->chern_line(1, 0).homogeneous_part(4)).is_zero());  // sigma^2 = 0
  // chi of O((r+s) sigma - (chi+chi') f) is the coefficient product.
  CHECK(x->euler_char_line(6, -7) == -42);
}

TEST_CASE("multiplication morphism scales points by n^2") {
  ProductModel e({AbelianModel::elliptic("e")});
  auto n = StandardMorphism::multiplication(e, 4);
  CHECK(exterior::pullback(e.point_of(0), n.action) == e.point_of(0) * Rat(16));
}

TEST_CASE("model JSON round trip") {
  auto x = abelian_product_surface();
  std::string j = model_to_json(x->model());
  ProductModel back = model_from_json(j);
  CHECK(back.context()->names() == x->model().context()->names());
  CHECK(back.factor_count() == 2);
  CHECK(model_to_json(back) == j);
}
