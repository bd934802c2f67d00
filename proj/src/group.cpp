#include "strangedual/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strangedual::ledger {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("IntMat: dimension mismatch");
  IntMat r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Int IntMat::det() const {
  if (rows != cols) throw std::invalid_argument("det: square matrix required");
  if (rows == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < rows; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < rows && m.at(p, k) == 0) ++p;
      if (p == rows) return 0;
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i)
      for (std::size_t j = k + 1; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(rows - 1, rows - 1) : -m.at(rows - 1, rows - 1);
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D.at(i, i));
  return d;
}

namespace {

void row_swap(IntMat& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_swap(IntMat& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
void row_addmul(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += q * m.at(src, j);
}
void col_addmul(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, dst) += q * m.at(i, src);
}
void row_negate(IntMat& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

Int abs_int(const Int& x) { return x < 0 ? -x : x; }

}  // namespace

SmithDecomposition smith(const IntMat& mat) {
  SmithDecomposition s{IntMat::identity(mat.rows), mat, IntMat::identity(mat.cols)};
  IntMat& d = s.D;
  const std::size_t lim = std::min(mat.rows, mat.cols);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // Full pivoting: smallest nonzero entry of the trailing submatrix.
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j) {
          const Int& x = d.at(i, j);
          if (x != 0 && (best == 0 || abs_int(x) < best)) {
            best = abs_int(x);
            pi = i;
            pj = j;
          }
        }
      if (best == 0) { t = lim; break; }
      if (pi != t) { row_swap(d, t, pi); row_swap(s.U, t, pi); }
      if (pj != t) { col_swap(d, t, pj); col_swap(s.V, t, pj); }

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        row_addmul(d, i, t, -q);
        row_addmul(s.U, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        col_addmul(d, j, t, -q);
        col_addmul(s.V, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block for the divisibility chain.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_addmul(d, t, i, Int(1));
            row_addmul(s.U, t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (t == lim) break;
  }
  for (std::size_t t = 0; t < lim; ++t)
    if (d.at(t, t) < 0) { row_negate(d, t); row_negate(s.U, t); }

  if (!(s.U * mat * s.V == d)) throw std::logic_error("smith: factorization check failed");
  if (abs_int(s.U.det()) != 1 || abs_int(s.V.det()) != 1)
    throw std::logic_error("smith: transform matrices are not unimodular");
  for (std::size_t i = 0; i + 1 < lim; ++i)
    if (d.at(i, i) != 0 && d.at(i + 1, i + 1) % d.at(i, i) != 0)
      throw std::logic_error("smith: divisibility chain violated");
  return s;
}

GroupElement::GroupElement(GroupPtr g, std::vector<Int> smith_coords)
    : group_(std::move(g)), coords_(group_->reduce(std::move(smith_coords))) {}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

static void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group() && a.group() == b.group()) return;
  if (!a.group() || !b.group() ||
      a.group()->generator_names() != b.group()->generator_names() ||
      a.group()->invariants() != b.group()->invariants())
    throw std::invalid_argument("group elements live in different groups");
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  require_same_group(*this, o);
  std::vector<Int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-() const {
  std::vector<Int> c(coords_);
  for (auto& x : c) x = -x;
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator*(const Int& n) const {
  std::vector<Int> c(coords_);
  for (auto& x : c) x *= n;
  return GroupElement(group_, std::move(c));
}

bool GroupElement::operator==(const GroupElement& o) const {
  require_same_group(*this, o);
  return coords_ == o.coords_;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << coords_[i];
  }
  os << "]";
  return os.str();
}

GroupPtr FGAbelianGroup::free_group(std::vector<std::string> names) {
  return from_presentation(std::move(names), IntMat(0, 0));
}

GroupPtr FGAbelianGroup::from_presentation(std::vector<std::string> names, const IntMat& rel) {
  auto g = std::shared_ptr<FGAbelianGroup>(new FGAbelianGroup());
  const std::size_t n = names.size();
  g->names_ = std::move(names);
  g->relations_ = rel.rows == 0 ? IntMat(n, rel.cols) : rel;
  if (g->relations_.rows != n)
    throw std::invalid_argument("presentation must have one row per generator");
  auto s = smith(g->relations_);
  g->u_ = s.U;
  g->invariants_.assign(n, Int(0));
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) g->invariants_[i] = diag[i];
  return g;
}

GroupPtr FGAbelianGroup::from_invariants(const std::vector<Int>& invariants) {
  const std::size_t n = invariants.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i + 1));
  IntMat rel(n, n);
  for (std::size_t i = 0; i < n; ++i) rel.at(i, i) = invariants[i];
  return from_presentation(std::move(names), rel);
}

Int FGAbelianGroup::order() const {
  Int o = 1;
  for (const auto& d : invariants_) {
    if (d == 0) return 0;
    o *= d;
  }
  return o;
}

std::vector<Int> FGAbelianGroup::reduce(std::vector<Int> y) const {
  if (y.size() != invariants_.size())
    throw std::invalid_argument("group element has wrong coordinate count");
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Int& d = invariants_[i];
    if (d != 0) {
      y[i] %= d;
      if (y[i] < 0) y[i] += d;
    }
  }
  return y;
}

GroupElement FGAbelianGroup::zero() const {
  return GroupElement(shared_from_this(), std::vector<Int>(generator_count(), Int(0)));
}

GroupElement FGAbelianGroup::generator(std::size_t i) const {
  std::vector<Int> x(generator_count(), Int(0));
  if (i >= x.size()) throw std::invalid_argument("generator index out of range");
  x[i] = 1;
  return element(x);
}

GroupElement FGAbelianGroup::element(const std::vector<Int>& x) const {
  if (x.size() != generator_count())
    throw std::invalid_argument("coordinate count does not match generators");
  std::vector<Int> y(generator_count(), Int(0));
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += u_.at(i, j) * x[j];
  return GroupElement(shared_from_this(), std::move(y));
}

GroupElement FGAbelianGroup::symbol(const std::string& name, const Int& mult) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return generator(i) * mult;
  throw std::invalid_argument("unknown group symbol '" + name + "'");
}

std::vector<GroupElement> FGAbelianGroup::enumerate() const {
  Int o = order();
  if (o == 0) throw std::invalid_argument("enumerate: group is infinite");
  std::vector<GroupElement> out;
  std::vector<Int> y(generator_count(), Int(0));
  for (;;) {
    out.push_back(GroupElement(shared_from_this(), y));
    std::size_t i = 0;
    for (; i < y.size(); ++i) {
      y[i] += 1;
      if (invariants_[i] != 0 && y[i] == invariants_[i]) {
        y[i] = 0;
        continue;
      }
      break;
    }
    if (i == y.size()) break;
  }
  return out;
}

namespace {

/// Solutions t of d*t = c in Z/N (N = 0 means Z). Returns {consistent,
/// representatives} where representatives enumerates all solutions for N > 0
/// and the unique/free marker for N = 0.
struct CoordSolutions {
  bool consistent = true;
  bool free_line = false;   // all of Z/N (or Z) is a solution
  std::vector<Int> values;  // explicit solutions when not free
};

CoordSolutions solve_coord(const Int& d, const Int& c, const Int& n) {
  CoordSolutions s;
  if (n == 0) {
    if (d == 0) {
      if (c != 0) s.consistent = false;
      else s.free_line = true;
    } else {
      if (c % d != 0) s.consistent = false;
      else s.values = {c / d};
    }
    return s;
  }
  if (d == 0) {
    Int cc = c % n;
    if (cc != 0) { s.consistent = false; return s; }
    s.free_line = true;
    return s;
  }
  auto e = ext_gcd(d, n);
  if (c % e.g != 0) { s.consistent = false; return s; }
  Int step = n / e.g;
  Int t0 = (e.s * (c / e.g)) % n;
  if (t0 < 0) t0 += n;
  for (Int k = 0; k < e.g; ++k) s.values.push_back((t0 + k * step) % n);
  std::sort(s.values.begin(), s.values.end());
  return s;
}

}  // namespace

SolveResult solve_in_group(const IntMat& a, const std::vector<GroupElement>& rhs,
                           const Int& enumeration_limit) {
  if (rhs.size() != a.rows) throw std::invalid_argument("solve_in_group: rhs size mismatch");
  if (rhs.empty()) throw std::invalid_argument("solve_in_group: empty system");
  GroupPtr g = rhs.front().group();
  for (const auto& r : rhs) require_same_group(rhs.front(), r);
  const std::size_t k = a.cols;
  const std::size_t ng = g->generator_count();
  auto s = smith(a);

  // c = U * rhs, combined inside G.
  std::vector<GroupElement> c;
  for (std::size_t i = 0; i < a.rows; ++i) {
    GroupElement ci = g->zero();
    for (std::size_t j = 0; j < a.rows; ++j) ci = ci + rhs[j] * s.U.at(i, j);
    c.push_back(std::move(ci));
  }

  // In the transformed unknowns y (x = V y) the system is diagonal:
  // d_i * y_i = c_i, plus 0 = c_i for surplus equations.
  auto diag = s.diagonal();
  SolveResult out;
  out.consistent = true;
  for (std::size_t i = k; i < a.rows; ++i)
    if (!c[i].is_zero()) { out.consistent = false; out.note = "inconsistent system"; return out; }

  // Per unknown and per Smith coordinate of G, solve d*t = c (mod N).
  struct Line {
    bool free_line;
    std::vector<Int> values;
  };
  std::vector<std::vector<Line>> lines(k, std::vector<Line>(ng));
  Int count = 1;
  bool infinite = false;
  for (std::size_t i = 0; i < k; ++i) {
    Int d = i < diag.size() ? diag[i] : Int(0);
    for (std::size_t q = 0; q < ng; ++q) {
      const Int& n = g->invariants()[q];
      auto cs = solve_coord(d, i < a.rows ? c[i].coords()[q] : Int(0), n);
      if (!cs.consistent) { out.consistent = false; out.note = "inconsistent system"; return out; }
      lines[i][q] = {cs.free_line, cs.values};
      if (cs.free_line) {
        if (n == 0) infinite = true;
        else count *= n;
      } else {
        count *= Int(cs.values.size());
      }
    }
  }
  out.consistent = true;
  out.count = infinite ? Int(0) : count;

  auto to_x = [&](const std::vector<std::vector<Int>>& y) {
    std::vector<GroupElement> x;
    for (std::size_t j = 0; j < k; ++j) {
      GroupElement xj = g->zero();
      for (std::size_t i = 0; i < k; ++i)
        xj = xj + GroupElement(g, y[i]) * s.V.at(j, i);
      x.push_back(std::move(xj));
    }
    return x;
  };

  // Particular solution: first value of each line, 0 on free lines.
  std::vector<std::vector<Int>> y0(k, std::vector<Int>(ng, Int(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t q = 0; q < ng; ++q)
      if (!lines[i][q].free_line) y0[i][q] = lines[i][q].values.at(0);
  out.particular = to_x(y0);

  if (!infinite && out.count <= enumeration_limit) {
    // Enumerate the product of all per-coordinate solution sets.
    std::vector<std::vector<Int>> choices;  // flattened per (i, q)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t q = 0; q < ng; ++q) {
        if (lines[i][q].free_line) {
          std::vector<Int> vals;
          for (Int v = 0; v < g->invariants()[q]; ++v) vals.push_back(v);
          choices.push_back(std::move(vals));
        } else {
          choices.push_back(lines[i][q].values);
        }
      }
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
      std::vector<std::vector<Int>> y(k, std::vector<Int>(ng, Int(0)));
      for (std::size_t f = 0; f < choices.size(); ++f)
        y[f / ng][f % ng] = choices[f][idx[f]];
      out.all.push_back(to_x(y));
      std::size_t f = 0;
      for (; f < choices.size(); ++f) {
        if (++idx[f] < choices[f].size()) break;
        idx[f] = 0;
      }
      if (f == choices.size()) break;
    }
  }
  return out;
}

Int torsion_count(int g, const Int& r) {
  if (g < 1 || r < 1) throw std::invalid_argument("torsion_count: g >= 1 and r >= 1 required");
  IntMat rel(2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i) rel.at(i, i) = r;
  auto grp = FGAbelianGroup::from_presentation(
      [&] {
        std::vector<std::string> names;
        for (int i = 0; i < 2 * g; ++i) names.push_back("t" + std::to_string(i + 1));
        return names;
      }(),
      rel);
  return grp->order();
}

}  // namespace strangedual::ledger
