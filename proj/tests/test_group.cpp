#include <algorithm>

#include "doctest.h"
#include "strangedual/group.hpp"

using namespace strangedual;
using namespace strangedual::ledger;

namespace {
IntMat mat2(Int a, Int b, Int c, Int d) {
  IntMat m(2, 2);
  m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = c; m.at(1, 1) = d;
  return m;
}
}  // namespace

TEST_CASE("smith normal form reference cases") {
  auto s = smith(mat2(2, 0, 0, 3));
  CHECK(s.diagonal() == std::vector<Int>{1, 6});
  CHECK(smith(IntMat::identity(4)).diagonal() == std::vector<Int>{1, 1, 1, 1});
  auto s3 = smith(mat2(1, 3, 0, -1));
  CHECK(s3.diagonal() == std::vector<Int>{1, 1});
}

TEST_CASE("smith handles rectangular and degenerate shapes") {
  IntMat m(3, 2);
  m.at(0, 0) = 4; m.at(1, 1) = 6; m.at(2, 0) = 2; m.at(2, 1) = 2;
  auto s = smith(m);
  CHECK(s.U * m * s.V == s.D);
  auto d = s.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
  IntMat z(2, 3);
  CHECK(smith(z).diagonal() == std::vector<Int>{0, 0});
  IntMat none(2, 0);
  CHECK(smith(none).diagonal().empty());
}

TEST_CASE("group normal forms and enumeration") {
  auto g = FGAbelianGroup::from_invariants({2, 4});
  CHECK(g->order() == 8);
  CHECK(g->enumerate().size() == 8);
  auto e = g->generator(0);
  CHECK(!(e * 1).is_zero());
  // Every element has order dividing 4.
  for (const auto& x : g->enumerate()) CHECK((x * 4).is_zero());
}

TEST_CASE("free groups keep symbols exact") {
  auto g = FGAbelianGroup::free_group({"z1", "z2", "mu"});
  auto z1 = g->symbol("z1"), z2 = g->symbol("z2"), mu = g->symbol("mu");
  auto expr = z1 * 2 + z2 * 3 - mu;
  CHECK(!expr.is_zero());
  CHECK(expr - expr == g->zero());
  CHECK_THROWS_AS(g->symbol("nope"), std::invalid_argument);
}

TEST_CASE("unimodular systems have the zero solution only") {
  auto g = FGAbelianGroup::free_group({"aZ", "mu"});
  auto sol = solve_in_group(mat2(1, 3, 0, -1), {g->zero(), g->zero()});
  CHECK(sol.consistent);
  CHECK(sol.count == 1);
  CHECK(sol.particular.at(0).is_zero());
  CHECK(sol.particular.at(1).is_zero());
  auto sol2 = solve_in_group(mat2(2, 3, -1, 2), {g->zero(), g->zero()});
  CHECK(sol2.count == 1);  // det = 7, still zero over a free group... see below
}

TEST_CASE("reference unimodular instance (2,3;-1,-2)") {
  // |det| = |-ad - br| = 1 for a=2, r=3, b=-1, d=2.
  auto g = FGAbelianGroup::free_group({"aZ", "mu"});
  auto sol = solve_in_group(mat2(2, 3, -1, -2), {g->zero(), g->zero()});
  CHECK(sol.consistent);
  CHECK(sol.count == 1);
  CHECK(sol.particular.at(0).is_zero());
  CHECK(sol.particular.at(1).is_zero());
}

TEST_CASE("determinant-seven system over a free group") {
  // Over Z^2 the homogeneous system with det 7 has only the zero solution.
  auto g = FGAbelianGroup::free_group({"u"});
  auto sol = solve_in_group(mat2(2, 3, -1, 2), {g->zero(), g->zero()});
  CHECK(sol.consistent);
  CHECK(sol.count == 1);
}

TEST_CASE("torsion solutions are enumerated") {
  auto g = FGAbelianGroup::from_invariants({4});
  auto sol = solve_in_group(mat2(2, 0, 0, 2), {g->zero(), g->zero()});
  CHECK(sol.consistent);
  CHECK(sol.count == 4);
  CHECK(sol.all.size() == 4);
  // Brute force agreement.
  auto elems = g->enumerate();
  int brute = 0;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if ((x * 2).is_zero() && (y * 2).is_zero()) ++brute;
  CHECK(Int(brute) == sol.count);
}

TEST_CASE("inconsistent systems are reported as empty") {
  auto g = FGAbelianGroup::from_invariants({2});
  IntMat m(2, 1);
  m.at(0, 0) = 2;  // 2x = g1 has no solution in Z/2
  m.at(1, 0) = 0;
  auto sol = solve_in_group(m, {g->generator(0), g->zero()});
  CHECK_FALSE(sol.consistent);
}

TEST_CASE("solver against brute force on mixed torsion") {
  auto g = FGAbelianGroup::from_invariants({2, 6});
  auto elems = g->enumerate();
  auto rhs1 = elems[5];
  auto sys = mat2(2, 3, 1, 4);
  auto sol = solve_in_group(sys, {rhs1, g->zero()});
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> brute, got;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (x * sys.at(0, 0) + y * sys.at(0, 1) == rhs1 &&
          x * sys.at(1, 0) + y * sys.at(1, 1) == g->zero())
        brute.push_back({x.coords(), y.coords()});
  if (sol.consistent)
    for (const auto& s : sol.all) got.push_back({s[0].coords(), s[1].coords()});
  std::sort(brute.begin(), brute.end());
  std::sort(got.begin(), got.end());
  CHECK(brute == got);
}

TEST_CASE("torsion counts through the presentation route") {
  CHECK(torsion_count(1, 3) == 9);
  CHECK(torsion_count(2, 2) == 16);
  CHECK(torsion_count(2, 3) == 81);
  CHECK(torsion_count(3, 2) == 64);
  CHECK(torsion_count(1, 1) == 1);
}

TEST_CASE("determinants by fraction-free elimination") {
  CHECK(mat2(1, 3, 0, -1).det() == -1);
  CHECK(mat2(2, 3, -1, 2).det() == 7);
  IntMat m(3, 3);
  m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(0, 2) = 0;
  m.at(1, 0) = 0; m.at(1, 1) = 3; m.at(1, 2) = 1;
  m.at(2, 0) = 1; m.at(2, 1) = 0; m.at(2, 2) = 4;
  CHECK(m.det() == 25);
}
