#include "strangedual/bundle_ledger.hpp"

#include <stdexcept>

namespace strangedual::ledger {

SectionShape section_shape(const Int& a, const Int& b) {
  auto with_points = [](const Int& ell, const Int& h0, const std::string& form) {
    std::vector<std::string> names;
    for (Int i = 1; i <= ell; ++i) names.push_back("z" + i.str());
    auto g = FGAbelianGroup::free_group(names);
    GroupElement sum = g->zero();
    for (std::size_t i = 0; i < names.size(); ++i) sum = sum + g->generator(i);
    return SectionShape{h0, form, sum};
  };
  if (a == 0 && b > 0) return with_points(b, b, "union of fibers z_i x F");
  if (a == 1 && b > 0) return with_points(b, b, "sigma union fibers z_i x F");
  if (a > 0 && b == 0) return with_points(a, a, "union of sections B x y_i");
  if (a > 0 && b > 0) return {a * b, "irreducible ample divisor", std::nullopt};
  throw std::invalid_argument("section_shape: unsupported divisor shape");
}

RootLocus root_locus(const GroupElement& z_sum, const Int& d_v, const Int& r, int g) {
  if (r < 1 || g < 1) throw std::invalid_argument("root_locus: r >= 1 and g >= 1 required");
  (void)d_v;
  RootLocus out;
  out.count = torsion_count(g, r);
  out.roots_are_torsion = z_sum.is_zero();
  out.description = out.roots_are_torsion
                        ? "roots form the r-torsion subgroup itself"
                        : "torsor under the r-torsion subgroup";
  return out;
}

}  // namespace strangedual::ledger
