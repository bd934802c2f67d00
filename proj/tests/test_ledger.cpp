#include "doctest.h"
#include "strangedual/bundle_ledger.hpp"

using namespace strangedual;
using namespace strangedual::ledger;

TEST_CASE("line bundle ledger arithmetic") {
  auto g = FGAbelianGroup::free_group({"x", "y"});
  LineBundleOnCurve a{3, g->symbol("x")};
  LineBundleOnCurve b{-1, g->symbol("y") * 2};
  auto t = a.tensor(b);
  CHECK(t.deg == 2);
  CHECK(t.sum == g->symbol("x") + g->symbol("y") * 2);
  CHECK(a.dual().tensor(a) == LineBundleOnCurve::structure(g));
  CHECK(a.power(-2).deg == -6);
  // Dual is an involution, tensor is commutative and associative.
  CHECK(a.dual().dual() == a);
  CHECK(a.tensor(b) == b.tensor(a));
  CHECK(a.tensor(b).tensor(a) == a.tensor(b.tensor(a)));
}

TEST_CASE("translation and multiplication pullbacks on the ledger") {
  auto g = FGAbelianGroup::free_group({"x", "p"});
  LineBundleOnCurve l{3, g->symbol("p")};
  auto moved = l.translate(g->symbol("x"));
  CHECK(moved.deg == 3);
  CHECK(moved.sum == g->symbol("p") - g->symbol("x") * 3);
  auto pulled = l.mult_pullback(2);
  CHECK(pulled.deg == 12);
  CHECK(pulled.sum == g->symbol("p") * 2);
  // Degree-zero bundles are translation invariant.
  LineBundleOnCurve d0 = LineBundleOnCurve::degree_zero(g->symbol("p"));
  CHECK(d0.translate(g->symbol("x")) == d0);
}

TEST_CASE("transform determinant rules on the ledger") {
  auto g = FGAbelianGroup::free_group({"c", "z"});
  // A line bundle of degree n with point-sum c transforms with determinant
  // of degree -1 carrying the same sum.
  LineBundleOnCurve m{-5, g->symbol("c")};
  CHECK(m.fm_det() == LineBundleOnCurve{-1, g->symbol("c")});
  CHECK(fm_det_skyscraper(g->symbol("z")) == LineBundleOnCurve{0, g->symbol("z")});
}

TEST_CASE("section shapes and their constraints") {
  auto both = section_shape(3, 4);
  CHECK(both.h0 == 12);
  CHECK_FALSE(both.constraint.has_value());

  auto fibers = section_shape(0, 6);
  CHECK(fibers.h0 == 6);
  REQUIRE(fibers.constraint.has_value());
  // The constraint is the full point sum z_1 + ... + z_6.
  auto grp = fibers.constraint->group();
  GroupElement sum = grp->zero();
  for (std::size_t i = 0; i < 6; ++i) sum = sum + grp->generator(i);
  CHECK(*fibers.constraint == sum);

  auto mixed = section_shape(1, 4);
  CHECK(mixed.h0 == 4);
  CHECK(mixed.constraint.has_value());
  CHECK(mixed.divisor_form.find("sigma") != std::string::npos);

  auto sections = section_shape(4, 0);
  CHECK(sections.h0 == 4);

  CHECK_THROWS_AS(section_shape(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(section_shape(-1, 3), std::invalid_argument);
}

TEST_CASE("root locus counts") {
  auto g = FGAbelianGroup::free_group({"M"});
  auto r = root_locus(g->symbol("M"), 6, 3, 1);
  CHECK(r.count == 9);
  CHECK_FALSE(r.roots_are_torsion);
  CHECK(root_locus(g->symbol("M"), 4, 2, 2).count == 16);
  auto trivial = root_locus(g->zero(), 5, 4, 1);
  CHECK(trivial.roots_are_torsion);
  CHECK(trivial.count == 16);
}
