#include "doctest.h"
#include "strangedual/exterior.hpp"

using namespace strangedual;
using namespace strangedual::exterior;

namespace {

Context exe2() { return make_context({"b1", "b2", "b1p", "b2p"}); }

Element gen(const Context& c, int i) { return Element::generator(c, i); }

}  // namespace

TEST_CASE("wedge of adjacent generators keeps sign +1") {
  auto c = make_context({"b1", "b2"});
  Element p = gen(c, 0) * gen(c, 1);
  CHECK(p.coefficient(0b11) == Rat(1));
  CHECK((gen(c, 1) * gen(c, 0)).coefficient(0b11) == Rat(-1));
  CHECK((gen(c, 0) * gen(c, 0)).is_zero());
}

TEST_CASE("even-degree classes commute without sign") {
  auto c = make_context({"b1", "b2", "f1", "f2"});
  Element b12 = gen(c, 0) * gen(c, 1);
  Element f12 = gen(c, 2) * gen(c, 3);
  Element p = b12 * f12;
  CHECK(p.coefficient(0b1111) == Rat(1));
  CHECK(p == f12 * b12);
}

TEST_CASE("square of the mixed Poincare class") {
  auto c = exe2();
  // c1 = b1 b2' - b2 b1'
  Element cl = gen(c, 0) * gen(c, 3) - gen(c, 1) * gen(c, 2);
  Element sq = cl * cl;
  CHECK(sq == Element::monomial(c, 0b1111, Rat(-2)));
}

TEST_CASE("homogeneous parts split and reassemble") {
  auto c = make_context({"b1", "b2", "f1", "f2"});
  Element sigma = gen(c, 2) * gen(c, 3);
  Element omega = Element::monomial(c, 0b1111, Rat(3));
  Element a = Element::scalar(c, Rat(1)) + sigma + omega;
  CHECK(a.homogeneous_part(2) == sigma);
  CHECK(a.homogeneous_part(0) == Element::scalar(c, Rat(1)));
  Element sum = Element::zero(c);
  for (int k = 0; k <= 4; ++k) sum = sum + a.homogeneous_part(k);
  CHECK(sum == a);
}

TEST_CASE("integration picks the orientation coefficient") {
  auto c = make_context({"b1", "b2", "f1", "f2"});
  Element sigma = gen(c, 2) * gen(c, 3);
  Element f = gen(c, 0) * gen(c, 1);
  CHECK((sigma * f).integrate() == Rat(1));
  CHECK((sigma * sigma).integrate() == Rat(0));
  CHECK(Element::monomial(c, 0b1111, Rat(1)).integrate() == Rat(1));
}

TEST_CASE("pullback along multiplication scales the point class") {
  auto c = make_context({"e1", "e2"});
  auto n = Morphism::scaling(c, Rat(3));
  Element pt = gen(c, 0) * gen(c, 1);
  CHECK(pullback(pt, n) == pt * Rat(9));
}

TEST_CASE("pullback along a factor scaling on the surface") {
  auto c = make_context({"b1", "b2", "f1", "f2"});
  // (r,1): b_i -> r b_i, f_i -> f_i. f = b1 b2 scales by r^2, sigma is fixed.
  std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4, Rat(0)));
  m[0][0] = 3; m[1][1] = 3; m[2][2] = 1; m[3][3] = 1;
  Morphism r1(c, c, std::move(m));
  Element sigma = gen(c, 2) * gen(c, 3);
  Element f = gen(c, 0) * gen(c, 1);
  const Rat rr(5), cc(7);
  Element cls = sigma * rr - f * cc;
  CHECK(pullback(cls, r1) == sigma * rr - f * (cc * 9));
}

TEST_CASE("pullback is multiplicative under the addition map") {
  auto dbl = make_context({"x", "y", "xp", "yp"});
  auto single = make_context({"x", "y"});
  std::vector<std::vector<Rat>> m(2, std::vector<Rat>(4, Rat(0)));
  m[0][0] = 1; m[0][2] = 1;  // x -> x + x'
  m[1][1] = 1; m[1][3] = 1;
  Morphism add(dbl, single, std::move(m));
  Element theta = gen(single, 0) * gen(single, 1);
  Element pulled = pullback(theta, add);
  Element expect = gen(dbl, 0) * gen(dbl, 1) + gen(dbl, 0) * gen(dbl, 3) +
                   gen(dbl, 2) * gen(dbl, 1) + gen(dbl, 2) * gen(dbl, 3);
  CHECK(pulled == expect);
  CHECK(pullback(theta * theta, add) == pulled * pulled);
}

TEST_CASE("fiber integration on the surface model") {
  auto c = make_context({"b1", "b2", "f1", "f2"});
  Mask fmask = 0b1100;  // f1, f2
  Element sigma = gen(c, 2) * gen(c, 3);
  Element f = gen(c, 0) * gen(c, 1);
  Element omega = sigma * f;
  CHECK(sigma.fiber_integrate(fmask) == Element::scalar(c, Rat(1)));
  CHECK(omega.fiber_integrate(fmask) == f);
  CHECK(f.fiber_integrate(fmask).is_zero());
}

TEST_CASE("fiber integration sign for odd interleavings") {
  auto c = make_context({"a", "s", "b"});
  // a s b with S = {s}: moving s past b gives one inversion.
  Element m = Element::monomial(c, 0b111, Rat(1));
  Element out = m.fiber_integrate(0b010);
  CHECK(out == Element::monomial(c, 0b101, Rat(-1)));
}

TEST_CASE("pushforward along the identity is the identity") {
  auto c = exe2();
  Element a = gen(c, 0) * gen(c, 1) * Rat(2) + Element::scalar(c, Rat(5));
  CHECK(pushforward(a, Morphism::identity(c)) == a);
}

TEST_CASE("pushforward of the graph of multiplication pairs to the degree") {
  auto single = make_context({"x", "y"});
  auto dbl = make_context({"x", "y", "xp", "yp"});
  // j: B -> B x B, z -> (rz, z) recorded by its pullback matrix.
  const int r = 3;
  std::vector<std::vector<Rat>> m(4, std::vector<Rat>(2, Rat(0)));
  m[0][0] = r; m[1][1] = r; m[2][0] = 1; m[3][1] = 1;
  Morphism j(single, dbl, std::move(m));
  Element cls = pushforward(Element::scalar(single, Rat(1)), j);
  // Pairing against pt x 1 computes the degree of multiplication by r.
  Element pt1 = gen(dbl, 0) * gen(dbl, 1);
  CHECK((cls * pt1).integrate() == Rat(r * r));
  // Pairing against 1 x pt sees the graph once.
  Element pt2 = gen(dbl, 2) * gen(dbl, 3);
  CHECK((cls * pt2).integrate() == Rat(1));
}

TEST_CASE("pushforward of a point inclusion is the point class") {
  auto origin = make_context({});
  auto e = make_context({"e1", "e2"});
  Morphism incl(origin, e, std::vector<std::vector<Rat>>(2, std::vector<Rat>(0)));
  Element pt = pushforward(Element::scalar(origin, Rat(1)), incl);
  CHECK(pt == gen(e, 0) * gen(e, 1));
}

TEST_CASE("lift and lower relabel along increasing injections") {
  auto small = make_context({"u", "v"});
  auto big = make_context({"a", "u", "b", "v"});
  Element x = gen(small, 0) * gen(small, 1);
  Element lifted = lift(x, big, {1, 3});
  CHECK(lifted == gen(big, 1) * gen(big, 3));
  CHECK(lower(lifted, small, {1, 3}) == x);
}

TEST_CASE("exp truncates at the top degree") {
  auto c = make_context({"b1", "b2", "f1", "f2"});
  Element sigma = gen(c, 2) * gen(c, 3);
  Element f = gen(c, 0) * gen(c, 1);
  Element ch = (sigma * Rat(2) + f * Rat(3)).exp();
  CHECK(ch.coefficient(0) == Rat(1));
  CHECK(ch == Element::scalar(c, Rat(1)) + sigma * Rat(2) + f * Rat(3) +
                  (sigma * f) * Rat(6));
}

TEST_CASE("context mismatch is rejected") {
  auto c1 = make_context({"a", "b"});
  auto c2 = make_context({"c", "d"});
  CHECK_THROWS_AS(gen(c1, 0) * gen(c2, 0), std::invalid_argument);
}

TEST_CASE("integration needs an oriented (even) context") {
  auto odd = make_context({"a", "b", "c"});
  CHECK_THROWS_AS(Element::scalar(odd, Rat(1)).integrate(), std::invalid_argument);
}
