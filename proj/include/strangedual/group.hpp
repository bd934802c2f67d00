#ifndef STRANGEDUAL_GROUP_HPP
#define STRANGEDUAL_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strangedual/rational.hpp"

namespace strangedual::ledger {

/// Dense integer matrix with exact entries.
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
  static IntMat identity(std::size_t n);

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  /// Exact determinant by fraction-free elimination (square matrices).
  Int det() const;
};

struct SmithDecomposition {
  IntMat U, D, V;  // U * M * V = D, U and V unimodular, d_i | d_{i+1}
  std::vector<Int> diagonal() const;
};

/// Smith normal form over arbitrary-precision integers with full pivoting.
/// The factorization U*M*V = D and unimodularity of U, V are re-verified by
/// explicit multiplication before returning.
SmithDecomposition smith(const IntMat& m);

class FGAbelianGroup;
using GroupPtr = std::shared_ptr<const FGAbelianGroup>;

/// Element of a finitely generated abelian group, stored in the unique normal
/// form determined by the group's Smith decomposition.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupPtr g, std::vector<Int> smith_coords);

  const GroupPtr& group() const { return group_; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement operator-(const GroupElement& o) const { return *this + (-o); }
  GroupElement operator*(const Int& n) const;
  friend GroupElement operator*(const Int& n, const GroupElement& e) { return e * n; }
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const { return coords_ < o.coords_; }

  std::string str() const;

 private:
  GroupPtr group_;
  std::vector<Int> coords_;
};

/// A finitely generated abelian group given by a presentation matrix: the
/// quotient of Z^n (one copy per generator) by the column span of the
/// relations. The Smith decomposition is computed eagerly and cached; element
/// normal forms are coordinates in the Smith basis reduced modulo the
/// invariant factors.
class FGAbelianGroup : public std::enable_shared_from_this<FGAbelianGroup> {
 public:
  static GroupPtr free_group(std::vector<std::string> generator_names);
  static GroupPtr from_presentation(std::vector<std::string> generator_names,
                                    const IntMat& relations);
  /// Direct product of cyclic groups Z/d_i (d_i = 0 gives a Z factor).
  static GroupPtr from_invariants(const std::vector<Int>& invariants);

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Int>& invariants() const { return invariants_; }

  /// 0 when the group is infinite.
  Int order() const;
  bool finite() const { return order() != 0; }

  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;
  /// Element from coordinates in the presentation's generator basis.
  GroupElement element(const std::vector<Int>& gen_coords) const;
  /// Element from a named-symbol combination, e.g. {{"mu", 2}}.
  GroupElement symbol(const std::string& name, const Int& mult = Int(1)) const;

  std::vector<GroupElement> enumerate() const;  // finite groups only

  std::vector<Int> reduce(std::vector<Int> smith_coords) const;

 private:
  FGAbelianGroup() = default;

  std::vector<std::string> names_;
  IntMat relations_;
  IntMat u_;               // Smith basis change: y = U x
  std::vector<Int> invariants_;  // one per generator; 0 = free
};

/// Outcome of solving A x = rhs for x in G^k: the coefficient matrix acts
/// entrywise through integer multiplication in G.
struct SolveResult {
  bool consistent = false;
  /// 0 when the solution set is infinite, otherwise its exact size.
  Int count = 0;
  /// One solution when consistent (coordinates per unknown).
  std::vector<GroupElement> particular;
  /// Full solution set when finite and of size <= enumeration_limit.
  std::vector<std::vector<GroupElement>> all;
  std::string note;
};

SolveResult solve_in_group(const IntMat& coefficients, const std::vector<GroupElement>& rhs,
                           const Int& enumeration_limit = Int(100000));

/// Number of r-torsion points of an abelian variety of dimension g, computed
/// as the order of Z^{2g} / (r * Id) through the Smith route.
Int torsion_count(int g, const Int& r);

}  // namespace strangedual::ledger

#endif
