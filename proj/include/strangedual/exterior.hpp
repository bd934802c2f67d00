#ifndef STRANGEDUAL_EXTERIOR_HPP
#define STRANGEDUAL_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "strangedual/rational.hpp"

namespace strangedual::exterior {

/// A finite ordered set of anticommuting degree-1 generators.
///
/// The order is fixed at construction: it defines all product signs and the
/// orientation. The orientation monomial is the full ascending product of all
/// generators, with coefficient +1.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& n) const;

  bool operator==(const GeneratorSet& o) const { return names_ == o.names_; }
  bool operator!=(const GeneratorSet& o) const { return !(*this == o); }

  std::uint32_t full_mask() const {
    return size() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << size()) - 1);
  }

 private:
  std::vector<std::string> names_;
};

using Context = std::shared_ptr<const GeneratorSet>;

inline Context make_context(std::vector<std::string> names) {
  return std::make_shared<GeneratorSet>(std::move(names));
}

/// Monomials are square-free products of generators in strictly increasing
/// order, stored as bitmasks over the generator indices.
using Mask = std::uint32_t;

int degree(Mask m);

/// Sign of merging two disjoint ascending monomials a, b into one ascending
/// monomial (parity of the inversions between them); 0 when they overlap.
int merge_sign(Mask a, Mask b);

/// Sign of moving the s-part of monomial m (s must be contained in m) to the
/// rightmost position, keeping the relative order inside both parts.
int unshuffle_sign(Mask m, Mask s);

/// A finite rational-coefficient combination of square-free monomials.
/// Immutable value; all arithmetic is exact.
class Element {
 public:
  Element() = default;
  static Element zero(Context c);
  static Element scalar(Context c, Rat v);
  static Element generator(Context c, std::size_t i);
  static Element monomial(Context c, Mask m, Rat v);

  const Context& context() const { return ctx_; }
  const std::map<Mask, Rat>& terms() const { return terms_; }
  Rat coefficient(Mask m) const;
  Rat scalar_part() const { return coefficient(0); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest degree with a nonzero term; -1 for the zero element.
  int max_degree() const;

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // wedge product
  Element operator*(const Rat& s) const;
  friend Element operator*(const Rat& s, const Element& a) { return a * s; }

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  Element homogeneous_part(int k) const;

  /// Coefficient of the orientation monomial (the full ascending product).
  /// Requires an even number of generators.
  Rat integrate() const;

  /// Integrates out the generators in s: keeps monomials containing all of s,
  /// removes s with the sign of moving the s-generators rightmost.
  Element fiber_integrate(Mask s) const;

  /// exp of a nilpotent element with no scalar part, truncated at top degree.
  Element exp() const;

  std::string str() const;

 private:
  Element(Context c, std::map<Mask, Rat> t) : ctx_(std::move(c)), terms_(std::move(t)) {}
  void prune();
  static void require_same_context(const Element& a, const Element& b);

  Context ctx_;
  std::map<Mask, Rat> terms_;
};

/// A morphism between contexts, recorded through its pullback action on
/// degree-1 generators: mat[t][s] is the coefficient of source generator s in
/// the image of target generator t.
struct Morphism {
  Context src;
  Context tgt;
  std::vector<std::vector<Rat>> mat;

  Morphism(Context s, Context t, std::vector<std::vector<Rat>> m);
  static Morphism identity(Context c);
  /// Diagonal action g_i -> scale * g_i on a single context.
  static Morphism scaling(Context c, const Rat& scale);
  Morphism compose_after(const Morphism& g) const;  // pullback of (this ∘ g)... see .cpp
};

/// Pullback along f of an element living on f's target; the unique algebra
/// homomorphism extending the generator matrix. Multiplicative and linear.
Element pullback(const Element& a, const Morphism& f);

/// Poincaré-dual pushforward along f of an element on f's source, defined by
/// integrate(pushforward(a) * b) = integrate(a * pullback(b)) for all b.
Element pushforward(const Element& a, const Morphism& f);

/// Relabel an element through a strictly increasing generator injection
/// image[i] = index in `to` of generator i of a's context. Sign-free.
Element lift(const Element& a, const Context& to, const std::vector<int>& image);

/// Inverse of lift: a must be supported on the image generators.
Element lower(const Element& a, const Context& to, const std::vector<int>& image);

}  // namespace strangedual::exterior

#endif
