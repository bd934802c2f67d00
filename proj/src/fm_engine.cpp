#include "strangedual/fm_engine.hpp"

#include <sstream>
#include <stdexcept>

namespace strangedual::fm {

using exterior::Context;
using varieties::AbelianModel;

namespace {

AbelianModel primed(const AbelianModel& f, const std::string& suffix) {
  AbelianModel g = f;
  g.label += suffix;
  for (auto& n : g.generators) n += suffix;
  return g;
}

ProductModel make_product(const ProductModel& src, const ProductModel& tgt,
                          const std::string& suffix = "'") {
  std::vector<AbelianModel> fs;
  for (std::size_t i = 0; i < src.factor_count(); ++i) fs.push_back(src.factor(i));
  for (std::size_t i = 0; i < tgt.factor_count(); ++i) fs.push_back(primed(tgt.factor(i), suffix));
  return ProductModel(std::move(fs));
}

Element pair_point(const Context& c, int x, int y) {
  return Element::monomial(c, (Mask{1} << x) | (Mask{1} << y), Rat(1));
}

/// Normal form of theta_1 + theta_2 - m* theta for an elliptic pair with
/// source generators (x, y) and target generators (xp, yp).
Element pair_poincare(const Context& c, int x, int y, int xp, int yp) {
  Element e = Element::zero(c);
  e = e - Element::generator(c, x) * Element::generator(c, yp);
  e = e + Element::generator(c, y) * Element::generator(c, xp);
  return e;
}

Element pair_diagonal(const Context& c, int x, int y, int xp, int yp) {
  return pair_point(c, x, y) + pair_point(c, xp, yp) + pair_poincare(c, x, y, xp, yp);
}

std::vector<int> iota(int from, int count) {
  std::vector<int> v;
  for (int i = 0; i < count; ++i) v.push_back(from + i);
  return v;
}

void require_integral_components(const Element& e, const char* what) {
  for (const auto& [m, c] : e.terms())
    if (!is_integer(c))
      throw std::domain_error(std::string(what) + ": non-integral component " + c.str());
}

}  // namespace

Kernel::Kernel(std::string name, ProductModel src, ProductModel tgt, Element cls, Int ch_rank,
               int shift_parity)
    : name_(std::move(name)),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      product_(make_product(src_, tgt_)),
      src_map_(iota(0, static_cast<int>(src_.context()->size()))),
      tgt_map_(iota(static_cast<int>(src_.context()->size()),
                    static_cast<int>(tgt_.context()->size()))),
      cls_(std::move(cls)),
      shift_(((shift_parity % 2) + 2) % 2) {
  if (*cls_.context() != *product_.context())
    throw std::invalid_argument("Kernel: class does not live on the product model");
  if (cls_.scalar_part() != Rat(ch_rank))
    throw std::invalid_argument("Kernel: degree-0 part does not equal the declared rank");
}

Kernel Kernel::dualized() const {
  Element d = Element::zero(cls_.context());
  for (int k = 0; k <= cls_.max_degree(); ++k) {
    Element part = cls_.homogeneous_part(k);
    if (part.is_zero()) continue;
    if (k % 2 != 0) throw std::invalid_argument("Kernel::dualized: odd components present");
    d = d + ((k / 2) % 2 == 0 ? part : -part);
  }
  Int rank = to_integer(d.scalar_part(), "kernel rank");
  return Kernel(name_ + "^", src_, tgt_, std::move(d), rank, shift_);
}

Kernel Kernel::swapped() const {
  ProductModel new_product = make_product(tgt_, src_);
  const std::size_t ns = src_.context()->size();
  const std::size_t nt = tgt_.context()->size();
  // Permutation sending the old [src | tgt] layout to the new [tgt | src] one;
  // pulling the class back along it keeps every sign honest.
  std::vector<std::vector<Rat>> mat(ns + nt, std::vector<Rat>(ns + nt, Rat(0)));
  for (std::size_t i = 0; i < ns; ++i) mat[i][nt + i] = 1;       // old src gen -> late block
  for (std::size_t j = 0; j < nt; ++j) mat[ns + j][j] = 1;       // old tgt gen -> early block
  exterior::Morphism perm(new_product.context(), product_.context(), std::move(mat));
  Element cls = exterior::pullback(cls_, perm);
  Int rank = to_integer(cls.scalar_part(), "kernel rank");
  return Kernel(name_ + "~", tgt_, src_, std::move(cls), rank, shift_);
}

Kernel Kernel::shifted(int n) const {
  Element c = (n % 2 == 0) ? cls_ : -cls_;
  Int rank = to_integer(c.scalar_part(), "kernel rank");
  return Kernel(name_ + "[" + std::to_string(n) + "]", src_, tgt_, std::move(c), rank,
                shift_ + n);
}

Element transform_class(const Element& v, const Kernel& k) {
  if (*v.context() != *k.src().context())
    throw std::invalid_argument("transform: class does not live on the kernel source");
  Element lifted = exterior::lift(v, k.product().context(), k.src_map());
  Mask src_mask = 0;
  for (int i : k.src_map()) src_mask |= Mask{1} << i;
  Element pushed = (lifted * k.cls()).fiber_integrate(src_mask);
  return exterior::lower(pushed, k.tgt().context(), k.tgt_map());
}

MukaiVector transform(const MukaiVector& v, const Kernel& k) {
  if (*v.surface->context() != *k.src().context())
    throw std::invalid_argument("transform: vector does not live on the kernel source");
  return MukaiVector::from_ch(transform_class(v.ch(), k), v.surface);
}

Kernel convolve(const Kernel& k1, const Kernel& k2) {
  if (*k1.tgt().context() != *k2.src().context())
    throw std::invalid_argument("convolve: factor mismatch");
  ProductModel triple = [&] {
    std::vector<AbelianModel> fs;
    for (std::size_t i = 0; i < k1.src().factor_count(); ++i) fs.push_back(k1.src().factor(i));
    for (std::size_t i = 0; i < k1.tgt().factor_count(); ++i)
      fs.push_back(primed(k1.tgt().factor(i), "'"));
    for (std::size_t i = 0; i < k2.tgt().factor_count(); ++i)
      fs.push_back(primed(k2.tgt().factor(i), "''"));
    return ProductModel(std::move(fs));
  }();
  const int ns = static_cast<int>(k1.src().context()->size());
  const int nm = static_cast<int>(k1.tgt().context()->size());
  const int nt = static_cast<int>(k2.tgt().context()->size());
  Element a = exterior::lift(k1.cls(), triple.context(), iota(0, ns + nm));
  std::vector<int> mid_tgt = iota(ns, nm);
  for (int i = 0; i < nt; ++i) mid_tgt.push_back(ns + nm + i);
  Element b = exterior::lift(k2.cls(), triple.context(), mid_tgt);
  Mask mid_mask = 0;
  for (int i = ns; i < ns + nm; ++i) mid_mask |= Mask{1} << i;
  Element prod = (a * b).fiber_integrate(mid_mask);
  ProductModel out_model = make_product(k1.src(), k2.tgt());
  std::vector<int> keep = iota(0, ns);
  for (int i = 0; i < nt; ++i) keep.push_back(ns + nm + i);
  Element cls = exterior::lower(prod, out_model.context(), keep);
  Int rank = to_integer(cls.scalar_part(), "kernel rank");
  return Kernel(k1.name() + "*" + k2.name(), k1.src(), k2.tgt(), std::move(cls), rank,
                k1.shift_parity() + k2.shift_parity());
}

namespace {

struct SurfacePairLayout {
  // Generator indices in the X x X product: source B pair, source F pair,
  // target B pair, target F pair.
  int b1 = 0, b2 = 1, f1 = 2, f2 = 3, b1p = 4, b2p = 5, f1p = 6, f2p = 7;
};

Element surface_pb(const Context& c) {
  SurfacePairLayout l;
  return pair_poincare(c, l.b1, l.b2, l.b1p, l.b2p);
}
Element surface_pf(const Context& c) {
  SurfacePairLayout l;
  return pair_poincare(c, l.f1, l.f2, l.f1p, l.f2p);
}
Element surface_delta_b(const Context& c) {
  SurfacePairLayout l;
  return pair_diagonal(c, l.b1, l.b2, l.b1p, l.b2p);
}
Element surface_delta_f(const Context& c) {
  SurfacePairLayout l;
  return pair_diagonal(c, l.f1, l.f2, l.f1p, l.f2p);
}

ProductModel kernel_product_of(const SurfacePtr& x) {
  return make_product(x->model(), x->model());
}

}  // namespace

Kernel rs_kernel(const SurfacePtr& x) {
  ProductModel p = kernel_product_of(x);
  Element cls = (surface_pb(p.context()) + surface_pf(p.context())).exp();
  return Kernel("rs", x->model(), x->model(), std::move(cls), 1);
}

Kernel rsdagger_kernel(const SurfacePtr& x) {
  ProductModel p = kernel_product_of(x);
  Element cls = surface_delta_b(p.context()) * surface_pf(p.context()).exp();
  return Kernel("rsdagger", x->model(), x->model(), std::move(cls), 0);
}

Kernel identity_kernel(const SurfacePtr& x) {
  ProductModel p = kernel_product_of(x);
  Element cls = surface_delta_b(p.context()) * surface_delta_f(p.context());
  return Kernel("identity", x->model(), x->model(), std::move(cls), 0);
}

namespace {

void require_kernel_params(const Int& a, const Int& b, const Int& r, const Int& d) {
  if (a * d + b * r != 1)
    throw std::invalid_argument("semihomogeneous kernel: need a d + b r = 1");
  if (!(a > 0 && a < r))
    throw std::invalid_argument("semihomogeneous kernel: need 0 < a < r");
  (void)d;
}

/// a exp(c1(U)/a) with c1(U) = b [o x F] + r [F x o] + c1(P_F), on a context
/// holding the two fiber pairs at the given indices. With dualize set the
/// first Chern class is negated, giving ch of the dual bundle.
Element semihomogeneous_ch(const Context& c, int sf1, int sf2, int tf1, int tf2, const Int& a,
                           const Int& b, const Int& r, const Int& d, bool dualize = false) {
  Element c1 = pair_point(c, sf1, sf2) * Rat(b) + pair_point(c, tf1, tf2) * Rat(r) +
               pair_poincare(c, sf1, sf2, tf1, tf2);
  if (dualize) c1 = -c1;
  Element ch = (c1 * (Rat(1) / Rat(a))).exp() * Rat(a);
  require_integral_components(ch, "semihomogeneous kernel ch");
  Mask top = (Mask{1} << sf1) | (Mask{1} << sf2) | (Mask{1} << tf1) | (Mask{1} << tf2);
  if (ch.coefficient(top) != Rat(-d))
    throw std::logic_error("semihomogeneous kernel: chi(U) != -d");
  return ch;
}

/// Relative kernel with the dual bundle along the fibers: the base diagonal
/// stays, only the fiber part dualizes.
Kernel u_kernel_dual_on_x(const SurfacePtr& x, const Int& a, const Int& b, const Int& r,
                          const Int& d) {
  require_kernel_params(a, b, r, d);
  ProductModel p = make_product(x->model(), x->model());
  SurfacePairLayout l;
  Element ch = semihomogeneous_ch(p.context(), l.f1, l.f2, l.f1p, l.f2p, a, b, r, d, true);
  Element cls = surface_delta_b(p.context()) * ch;
  std::ostringstream name;
  name << "u^:" << a << "," << b << "," << r << "," << d;
  return Kernel(name.str(), x->model(), x->model(), std::move(cls), 0);
}

}  // namespace

Kernel u_kernel(const SurfacePtr& x, const Int& a, const Int& b, const Int& r, const Int& d) {
  require_kernel_params(a, b, r, d);
  ProductModel p = kernel_product_of(x);
  SurfacePairLayout l;
  Element ch = semihomogeneous_ch(p.context(), l.f1, l.f2, l.f1p, l.f2p, a, b, r, d);
  Element cls = surface_delta_b(p.context()) * ch;
  std::ostringstream name;
  name << "u:" << a << "," << b << "," << r << "," << d;
  return Kernel(name.str(), x->model(), x->model(), std::move(cls), 0);
}

ProductModel fiber_model() { return ProductModel({AbelianModel::elliptic("e")}); }

Kernel pf_kernel_fiber() {
  ProductModel f = fiber_model();
  ProductModel p = make_product(f, f);
  Element cls = pair_poincare(p.context(), 0, 1, 2, 3).exp();
  return Kernel("pf", f, f, std::move(cls), 1);
}

Kernel u_kernel_fiber(const Int& a, const Int& b, const Int& r, const Int& d) {
  require_kernel_params(a, b, r, d);
  ProductModel f = fiber_model();
  ProductModel p = make_product(f, f);
  Element ch = semihomogeneous_ch(p.context(), 0, 1, 2, 3, a, b, r, d);
  std::ostringstream name;
  name << "uf:" << a << "," << b << "," << r << "," << d;
  return Kernel(name.str(), f, f, std::move(ch), a);
}

Kernel kernel_by_name(const std::string& spec, const SurfacePtr& x) {
  if (spec == "rs") return rs_kernel(x);
  if (spec == "rsdagger") return rsdagger_kernel(x);
  if (spec.rfind("u:", 0) == 0) {
    std::vector<Int> vals;
    std::string rest = spec.substr(2);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (tok.empty()) throw std::invalid_argument("kernel spec: empty parameter");
      vals.emplace_back(tok);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (vals.size() != 4)
      throw std::invalid_argument("kernel spec: expected u:a,b,r,d");
    return u_kernel(x, vals[0], vals[1], vals[2], vals[3]);
  }
  throw std::invalid_argument("unknown kernel '" + spec + "'");
}

std::pair<Int, Int> canonical_ab(const Int& r, const Int& d) {
  if (r < 2) throw std::invalid_argument("canonical_ab: rank must be at least 2");
  auto e = ext_gcd(d, r);
  if (e.g != 1) throw std::invalid_argument("canonical_ab: rank and fiber degree not coprime");
  Int a = e.s % r;
  if (a <= 0) a += r;
  Int b = (Int(1) - a * d) / r;
  return {a, b};
}

DecoratedVector decorate_transform(const DecoratedVector& v, const DecorationRule& rule,
                                   std::vector<TraceStep>* trace) {
  const auto& d = v.dec;
  DecoratedVector out = v;
  switch (rule.kind) {
    case DecorationRule::Kind::FiberKernel:
      out.numeric = transform(v.numeric, rsdagger_kernel(v.numeric.surface));
      out.dec = {d.tB, d.wF, d.wB, -d.tF};
      if (trace) trace->push_back({"decorate", "fiber"});
      break;
    case DecorationRule::Kind::CoprimeKernel:
      out.numeric =
          transform(v.numeric, u_kernel(v.numeric.surface, rule.a, rule.b, rule.r, rule.d));
      out.dec = {d.tB, d.tF * rule.b + d.wF * rule.a, d.wB, d.wF * rule.r - d.tF * rule.d};
      if (trace) {
        std::ostringstream os;
        os << "coprime:" << rule.a << "," << rule.b << "," << rule.r << "," << rule.d;
        trace->push_back({"decorate", os.str()});
      }
      break;
  }
  return out;
}

Decoration resolve_translation(const MukaiVector& numeric, const Decoration& d) {
  // Pushing t_c through O(a sigma + b f) leaves the degree-zero discrepancy
  // (-b c_B, -a c_F); afterwards the translation only moves the subscheme.
  Decoration out = d;
  out.wB = d.wB - d.tB * numeric.b;
  out.wF = d.wF - d.tF * numeric.a;
  return out;
}

DecoratedVector replay(const DecoratedVector& start, const std::vector<TraceStep>& trace) {
  DecoratedVector cur = start;
  for (const auto& step : trace) {
    if (step.op == "decorate") {
      if (step.detail == "fiber") {
        cur = decorate_transform(cur, DecorationRule::fiber());
      } else if (step.detail.rfind("coprime:", 0) == 0) {
        std::istringstream is(step.detail.substr(8));
        std::string t;
        std::vector<Int> p;
        while (std::getline(is, t, ',')) p.emplace_back(t);
        cur = decorate_transform(cur, DecorationRule::coprime(p.at(0), p.at(1), p.at(2), p.at(3)));
      } else {
        throw std::invalid_argument("replay: unknown decoration rule " + step.detail);
      }
    } else if (step.op == "resolve") {
      cur.dec = resolve_translation(cur.numeric, cur.dec);
    } else if (step.op == "kernel") {
      cur.numeric = transform(cur.numeric, kernel_by_name(step.detail, cur.numeric.surface));
    } else {
      throw std::invalid_argument("replay: unknown trace op " + step.op);
    }
  }
  return cur;
}

PhiChainResult phi_action(const MukaiVector& v, Side side) {
  if (v.a != 1)
    throw std::invalid_argument("phi_action: requires fiber degree one");
  if (!v.surface->abelian())
    throw std::invalid_argument("phi_action: abelian surface context required");
  const Int r = v.rank, chi = v.chi, m = v.b;
  const Int dv = mukai::half_dim(v);

  auto g = ledger::FGAbelianGroup::free_group(side == Side::Plus
                                                  ? std::vector<std::string>{"xB", "xF"}
                                                  : std::vector<std::string>{"yB", "yF"});
  ledger::GroupElement sB = g->generator(0), sF = g->generator(1);

  Decoration start = side == Side::Plus
                         // (V, x) -> t_{rx}^* V ⊗ (x_F ⊠ x_B^m).
                         ? Decoration{sB * r, sF * r, sB * m, sF}
                         // (V, y) -> t_{(y_B, m y_F)}^* V ⊗ y^chi.
                         : Decoration{sB, sF * m, sB * chi, sF * chi};

  std::vector<TraceStep> trace;
  DecoratedVector dec = decorate_transform({v, start}, DecorationRule::fiber(), &trace);
  Decoration resolved = resolve_translation(dec.numeric, dec.dec);
  trace.push_back({"resolve", ""});

  // The residual translation moves the subscheme; with a(Z) = 0 upstream the
  // new addition is -d_v times the translation point.
  return PhiChainResult{dec.numeric, resolved.wB,           resolved.wF,
                        -(dec.dec.tB * dv), -(dec.dec.tF * dv), std::move(trace)};
}

MinusDetChain minus_det_chain(const Int& m, const Int& chi) {
  auto g = ledger::FGAbelianGroup::free_group({"yB", "yF"});
  ledger::GroupElement yB = g->generator(0), yF = g->generator(1);

  // Fixed determinant of the transform: O(-f - m sigma).
  const Int ns_sigma = -m, ns_f = -1;
  // Tensoring by y^chi becomes translation by chi*y; translating by
  // (y_B, m y_F) becomes tensoring by its inverse, with multiplicity the rank
  // chi of the transform.
  ledger::GroupElement pend_tB = yB * chi, pend_tF = yF * chi;
  ledger::GroupElement twB = -(yB * chi), twF = -(yF * (m * chi));
  // Push the pending translation through O(ns_sigma sigma + ns_f f).
  twB = twB - pend_tB * ns_f;
  twF = twF - pend_tF * ns_sigma;
  return {ns_sigma, ns_f, twB, twF};
}

IsogenyChain general_minus_chain(const Int& a, const Int& b, const Int& r, const Int& d,
                                 const Int& m, const Int& chi) {
  require_kernel_params(a, b, r, d);
  const Int dv = d * m - r * chi;
  auto g = ledger::FGAbelianGroup::free_group({"yB", "yF"});
  ledger::GroupElement yB = g->generator(0), yF = g->generator(1);

  auto x = varieties::abelian_product_surface();
  DecoratedVector dec{MukaiVector(r, d, m, chi, x),
                      {yB * d, yF * m, yB * chi, yF * chi}};
  dec = decorate_transform(dec, DecorationRule::coprime(a, b, r, d));
  Decoration resolved = resolve_translation(dec.numeric, dec.dec);

  IsogenyChain out;
  out.d_v = dv;
  // Addition constraint a(Z^-) = f(-d_v y) with f(z) = (d z_B, (a chi + b m) z_F).
  out.isogeny_B = d;
  out.isogeny_F = a * chi + b * m;
  if (!(dec.dec.tB == yB * d && dec.dec.tF == yF * (a * chi + b * m)))
    throw std::logic_error("general_minus_chain: translation does not follow the isogeny");
  // Residual twist coefficients must be (-b d_v, -d_v).
  out.twist_coeff_B = -(b * dv);
  out.twist_coeff_F = -dv;
  if (!(resolved.wB == yB * out.twist_coeff_B && resolved.wF == yF * out.twist_coeff_F))
    throw std::logic_error("general_minus_chain: residual twist mismatch");
  return out;
}

CoprimeSuiteResult coprime_transform_suite(const Int& r, const Int& d, const Int& m,
                                           const Int& chi) {
  auto [a, b] = canonical_ab(r, d);
  auto x = varieties::abelian_product_surface();
  MukaiVector v(r, d, m, chi, x);
  const Int dv = d * m - r * chi;

  CoprimeSuiteResult out;
  out.a = a;
  out.b = b;
  out.d_v = dv;

  Kernel u = u_kernel(x, a, b, r, d);
  // Forward direction: the transform of V is I_Z^dual ⊗ O((a chi + b m) f).
  MukaiVector fwd = transform(v, u);
  MukaiVector target(1, 0, a * chi + b * m, -dv, x);
  out.target_class_matches = (fwd == target);

  // Dual direction with the dual kernel; the image sits in one shifted degree,
  // so the sheaf-level data is the negative of the transform.
  MukaiVector bwd = transform(v.dual(), u_kernel_dual_on_x(x, a, b, r, d));
  out.rank_after_shift = -bwd.rank;
  out.fiber_degree = -bwd.a;
  out.chi_sigma_twist = bwd.twist(1, 0).chi;
  out.beta = -bwd.b;

  const Int expected_chi = b * m + a * chi - chi * r + m * d;
  const Int expected_beta = -a * chi - b * m;
  // Independent bookkeeping route: chi(I_Z ⊗ L(sigma)) = beta - d_v.
  const Int chi_cross = -(out.chi_sigma_twist);
  out.pass = out.target_class_matches && out.rank_after_shift == a * d + b * r &&
             out.rank_after_shift == 1 && out.fiber_degree == 0 &&
             out.chi_sigma_twist == expected_chi && out.beta == expected_beta &&
             chi_cross == out.beta - dv;
  return out;
}

ConvolutionKernelChecks convolution_v_kernel(const Int& a, const Int& b, const Int& r,
                                             const Int& d) {
  Kernel u = u_kernel_fiber(a, b, r, d);
  Kernel v = convolve(u.swapped().dualized(), pf_kernel_fiber()).shifted(1);

  ConvolutionKernelChecks out;
  out.rank = to_integer(v.cls().scalar_part(), "rank of the convolution kernel");
  const Context& c = v.cls().context();
  Element expected_c1 = pair_point(c, 0, 1) * Rat(d) + pair_point(c, 2, 3) * Rat(a) +
                        pair_poincare(c, 0, 1, 2, 3);
  out.c1_matches = (v.cls().homogeneous_part(2) == expected_c1);

  // Pushforward to the second fiber factor.
  Element pushed = v.cls().fiber_integrate(Mask{0b0011});
  Element on_f = exterior::lower(pushed, fiber_model().context(), {2, 3});
  out.pushforward_rank = to_integer(on_f.scalar_part(), "pushforward rank");
  out.pushforward_det_coeff =
      to_integer(on_f.coefficient(Mask{0b11}), "pushforward determinant coefficient");
  out.pass = out.rank == b && out.c1_matches && out.pushforward_rank == d &&
             out.pushforward_det_coeff == -r;
  return out;
}

DetChainResult det_constraint_chain(const Int& r, const Int& d, const Int& m, const Int& chi) {
  auto [a, b] = canonical_ab(r, d);
  const Int dv = d * m - r * chi;
  if (dv < 1) throw std::invalid_argument("det_constraint_chain: needs d_v >= 1");
  const Int beta = -a * chi - b * m;

  // Symbol group: base coordinates z_iB, fiber coordinates z_iF, and mu.
  std::vector<std::string> names;
  for (Int i = 1; i <= dv; ++i) names.push_back("z" + i.str() + "B");
  for (Int i = 1; i <= dv; ++i) names.push_back("z" + i.str() + "F");
  names.push_back("mu");
  auto g = ledger::FGAbelianGroup::free_group(names);
  ledger::GroupElement sumB = g->zero(), sumF = g->zero();
  for (Int i = 0; i < dv; ++i) {
    sumB = sumB + g->generator(static_cast<std::size_t>(i));
    sumF = sumF + g->generator(static_cast<std::size_t>(dv + i));
  }
  ledger::GroupElement mu = g->symbol("mu");

  using ledger::LineBundleOnCurve;
  using ledger::SplitSurfaceBundle;

  // Engine-supplied ingredient numbers.
  Kernel uf = u_kernel_fiber(a, b, r, d);
  Element u_dual_push = uf.dualized().cls().fiber_integrate(Mask{0b1100});
  Element u_push_on_f = exterior::lower(u_dual_push, fiber_model().context(), {0, 1});
  Int push_rank = to_integer(u_push_on_f.scalar_part());
  Int push_deg = to_integer(u_push_on_f.coefficient(Mask{0b11}));
  if (push_rank != -r || push_deg != -d)
    throw std::logic_error("det_constraint_chain: pushforward of the dual kernel is off");
  auto vchecks = convolution_v_kernel(a, b, r, d);
  if (!vchecks.pass) throw std::logic_error("det_constraint_chain: convolution kernel checks");

  // Chain one: the fixed determinant of V^dual.
  // M has degree -beta and point mu; the box with the rank -r pushforward
  // contributes det^(rank), then each subscheme point adds (0_F, -a [z_B]).
  LineBundleOnCurve M{-beta, mu};
  SplitSurfaceBundle t1{M.power(push_rank), LineBundleOnCurve{push_deg, g->zero()}};
  SplitSurfaceBundle t2{LineBundleOnCurve{-a * dv, -(sumB * a)},
                        LineBundleOnCurve{Int(0), g->zero()}};
  SplitSurfaceBundle chain1 = t1.tensor(t2);
  if (chain1.f_coefficient() != -m || chain1.sigma_coefficient() != -d)
    throw std::logic_error("det_constraint_chain: chain one misses O(-d sigma - m f)");

  // Chain two: the fixed determinant of the composite transform. The kernel
  // splits as V ⊠ P_B; the constant part pairs the rank-d pushforward of V
  // against the transform of M, each subscheme point contributes the fiber
  // restriction of V^dual and b copies of the base point bundle.
  LineBundleOnCurve det_push_v{vchecks.pushforward_det_coeff, g->zero()};
  SplitSurfaceBundle tA{M.fm_det().power(vchecks.pushforward_rank),
                        det_push_v.power(-beta)};
  SplitSurfaceBundle tB{ledger::LineBundleOnCurve{Int(0), -(sumB * b)},
                        LineBundleOnCurve{-a * dv, -sumF}};
  SplitSurfaceBundle chain2 = tA.tensor(tB);
  if (chain2.f_coefficient() != -d || chain2.sigma_coefficient() != -m)
    throw std::logic_error("det_constraint_chain: chain two misses O(-m sigma - d f)");

  DetChainResult out;
  out.det_dual = chain1;
  out.det_rs = chain2;
  out.constraints = {sumB * a + mu * r,         // from chain one
                     sumF,                       // fiber point-sum
                     sumB * b - mu * d};         // from chain two
  if (!(chain1.base.sum == -out.constraints[0]) || !(chain2.fiber.sum == -out.constraints[1]) ||
      !(chain2.base.sum == -(sumB * b) + mu * d))
    throw std::logic_error("det_constraint_chain: constraint extraction mismatch");

  // Solve the unimodular 2x2 system for (a_B(Z), mu).
  auto h = ledger::FGAbelianGroup::free_group({"aZ", "mu"});
  ledger::IntMat coeff(2, 2);
  coeff.at(0, 0) = a; coeff.at(0, 1) = r;
  coeff.at(1, 0) = b; coeff.at(1, 1) = -d;
  auto sol = ledger::solve_in_group(coeff, {h->zero(), h->zero()});
  out.solution_count = sol.count;
  out.solved_zero = sol.consistent && sol.count == 1 && sol.particular.at(0).is_zero() &&
                    sol.particular.at(1).is_zero();
  return out;
}

}  // namespace strangedual::fm
