#include "strangedual/exterior.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace strangedual::exterior {

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 32)
    throw std::invalid_argument("GeneratorSet: at most 32 generators supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw std::invalid_argument("GeneratorSet: duplicate generator name '" + n + "'");
}

int GeneratorSet::index_of(const std::string& n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return static_cast<int>(i);
  return -1;
}

int degree(Mask m) { return std::popcount(m); }

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j: each such pair is one inversion
  // crossed when b's generators slide into place.
  int inversions = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

int unshuffle_sign(Mask m, Mask s) {
  // m = interleave of (m \ s) and s; sign of sorting m into (m \ s) then s.
  Mask rest = m & ~s;
  int inversions = 0;
  Mask ss = s;
  while (ss) {
    int j = std::countr_zero(ss);
    ss &= ss - 1;
    inversions += std::popcount(rest >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

Element Element::zero(Context c) { return Element(std::move(c), {}); }

Element Element::scalar(Context c, Rat v) {
  std::map<Mask, Rat> t;
  if (v != 0) t[0] = std::move(v);
  return Element(std::move(c), std::move(t));
}

Element Element::generator(Context c, std::size_t i) {
  if (i >= c->size()) throw std::invalid_argument("generator index out of range");
  return Element(std::move(c), {{Mask{1} << i, Rat(1)}});
}

Element Element::monomial(Context c, Mask m, Rat v) {
  if (m & ~c->full_mask())
    throw std::invalid_argument("monomial uses generators outside the context");
  std::map<Mask, Rat> t;
  if (v != 0) t[m] = std::move(v);
  return Element(std::move(c), std::move(t));
}

Rat Element::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Element::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

void Element::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

void Element::require_same_context(const Element& a, const Element& b) {
  if (!a.ctx_ || !b.ctx_ || *a.ctx_ != *b.ctx_)
    throw std::invalid_argument("exterior: context mismatch");
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element Element::operator+(const Element& o) const {
  require_same_context(*this, o);
  Element r = *this;
  for (const auto& [m, c] : o.terms_) r.terms_[m] += c;
  r.prune();
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
  require_same_context(*this, o);
  std::map<Mask, Rat> t;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      Rat prod = ca * cb;
      if (s < 0) prod = -prod;
      t[ma | mb] += prod;
    }
  }
  Element r(ctx_, std::move(t));
  r.prune();
  return r;
}

Element Element::operator*(const Rat& s) const {
  if (s == 0) return zero(ctx_);
  Element r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

bool Element::operator==(const Element& o) const {
  require_same_context(*this, o);
  return terms_ == o.terms_;
}

Element Element::homogeneous_part(int k) const {
  std::map<Mask, Rat> t;
  for (const auto& [m, c] : terms_)
    if (degree(m) == k) t[m] = c;
  return Element(ctx_, std::move(t));
}

Rat Element::integrate() const {
  if (!ctx_ || ctx_->size() % 2 != 0)
    throw std::invalid_argument("integrate: context must have an even number of generators");
  return coefficient(ctx_->full_mask());
}

Element Element::fiber_integrate(Mask s) const {
  if (s & ~ctx_->full_mask())
    throw std::invalid_argument("fiber_integrate: subset not contained in the context");
  std::map<Mask, Rat> t;
  for (const auto& [m, c] : terms_) {
    if ((m & s) != s) continue;
    int sg = unshuffle_sign(m, s);
    t[m & ~s] += (sg > 0 ? c : -c);
  }
  Element r(ctx_, std::move(t));
  r.prune();
  return r;
}

Element Element::exp() const {
  if (coefficient(0) != 0)
    throw std::invalid_argument("exp: element must have no scalar part");
  Element r = scalar(ctx_, 1);
  Element p = scalar(ctx_, 1);
  Rat fact(1);
  for (std::size_t k = 1; k <= ctx_->size(); ++k) {
    p = p * (*this);
    if (p.is_zero()) break;
    fact *= int(k);
    r = r + p * (Rat(1) / fact);
  }
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    Mask mm = m;
    while (mm) {
      int i = std::countr_zero(mm);
      mm &= mm - 1;
      os << "*" << ctx_->name(static_cast<std::size_t>(i));
    }
  }
  return os.str();
}

Morphism::Morphism(Context s, Context t, std::vector<std::vector<Rat>> m)
    : src(std::move(s)), tgt(std::move(t)), mat(std::move(m)) {
  if (mat.size() != tgt->size())
    throw std::invalid_argument("Morphism: one row per target generator required");
  for (const auto& row : mat)
    if (row.size() != src->size())
      throw std::invalid_argument("Morphism: row length must equal source generator count");
}

Morphism Morphism::identity(Context c) { return scaling(c, Rat(1)); }

Morphism Morphism::scaling(Context c, const Rat& scale) {
  std::vector<std::vector<Rat>> m(c->size(), std::vector<Rat>(c->size(), Rat(0)));
  for (std::size_t i = 0; i < c->size(); ++i) m[i][i] = scale;
  return Morphism(c, c, std::move(m));
}

Morphism Morphism::compose_after(const Morphism& g) const {
  // this: A -> B, g: B -> C; result: A -> C with pullback matrix (g ∘ this)* :
  // image of a C-generator under (g∘this)* = this-pullback of its g-image.
  if (*tgt != *g.src)
    throw std::invalid_argument("Morphism composition: factor mismatch");
  std::vector<std::vector<Rat>> m(g.tgt->size(), std::vector<Rat>(src->size(), Rat(0)));
  for (std::size_t t = 0; t < g.tgt->size(); ++t)
    for (std::size_t k = 0; k < g.src->size(); ++k)
      if (g.mat[t][k] != 0)
        for (std::size_t s = 0; s < src->size(); ++s)
          m[t][s] += g.mat[t][k] * mat[k][s];
  return Morphism(src, g.tgt, std::move(m));
}

Element pullback(const Element& a, const Morphism& f) {
  if (*a.context() != *f.tgt)
    throw std::invalid_argument("pullback: element does not live on the morphism target");
  // Images of the target generators as degree-1 elements on the source.
  std::vector<Element> img;
  img.reserve(f.tgt->size());
  for (std::size_t t = 0; t < f.tgt->size(); ++t) {
    Element e = Element::zero(f.src);
    for (std::size_t s = 0; s < f.src->size(); ++s)
      if (f.mat[t][s] != 0)
        e = e + Element::generator(f.src, s) * f.mat[t][s];
    img.push_back(std::move(e));
  }
  Element r = Element::zero(f.src);
  for (const auto& [m, c] : a.terms()) {
    Element p = Element::scalar(f.src, c);
    Mask mm = m;
    while (mm && !p.is_zero()) {
      int i = std::countr_zero(mm);
      mm &= mm - 1;
      p = p * img[static_cast<std::size_t>(i)];
    }
    r = r + p;
  }
  return r;
}

Element pushforward(const Element& a, const Morphism& f) {
  if (*a.context() != *f.src)
    throw std::invalid_argument("pushforward: element does not live on the morphism source");
  if (f.src->size() % 2 != 0 || f.tgt->size() % 2 != 0)
    throw std::invalid_argument("pushforward: both contexts must be oriented (even)");
  const Mask full = f.tgt->full_mask();
  Element r = Element::zero(f.tgt);
  // Dual-basis expansion: the coefficient of monomial m in the pushforward is
  // fixed by pairing against the complementary monomial.
  for (Mask m = 0;; ++m) {
    Mask comp = full & ~m;
    int sg = merge_sign(m, comp);  // m ∧ comp = sg * orientation
    Rat coef = (a * pullback(Element::monomial(f.tgt, comp, Rat(1)), f)).integrate();
    if (coef != 0) r = r + Element::monomial(f.tgt, m, sg > 0 ? coef : -coef);
    if (m == full) break;
  }
  // The duality pairing on an oriented exterior algebra is a signed
  // permutation, so the expansion above satisfies adjunction identically;
  // spot-check it on small contexts.
  if (f.tgt->size() <= 8) {
    for (Mask b = 0;; ++b) {
      Element beta = Element::monomial(f.tgt, b, Rat(1));
      if ((r * beta).integrate() != (a * pullback(beta, f)).integrate())
        throw std::logic_error("pushforward: adjunction self-check failed");
      if (b == full) break;
    }
  }
  return r;
}

Element lift(const Element& a, const Context& to, const std::vector<int>& image) {
  if (image.size() != a.context()->size())
    throw std::invalid_argument("lift: image size must match source context");
  for (std::size_t i = 0; i + 1 < image.size(); ++i)
    if (image[i] >= image[i + 1])
      throw std::invalid_argument("lift: generator injection must be strictly increasing");
  Element r = Element::zero(to);
  for (const auto& [m, c] : a.terms()) {
    Mask nm = 0;
    Mask mm = m;
    while (mm) {
      int i = std::countr_zero(mm);
      mm &= mm - 1;
      nm |= Mask{1} << image[static_cast<std::size_t>(i)];
    }
    r = r + Element::monomial(to, nm, c);
  }
  return r;
}

Element lower(const Element& a, const Context& to, const std::vector<int>& image) {
  if (image.size() != to->size())
    throw std::invalid_argument("lower: image size must match target context");
  Mask allowed = 0;
  for (int idx : image) allowed |= Mask{1} << idx;
  Element r = Element::zero(to);
  for (const auto& [m, c] : a.terms()) {
    if (m & ~allowed)
      throw std::invalid_argument("lower: element not supported on the retained generators");
    Mask nm = 0;
    for (std::size_t j = 0; j < image.size(); ++j)
      if (m & (Mask{1} << image[j])) nm |= Mask{1} << j;
    r = r + Element::monomial(to, nm, c);
  }
  return r;
}

}  // namespace strangedual::exterior
