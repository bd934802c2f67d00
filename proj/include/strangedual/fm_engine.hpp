#ifndef STRANGEDUAL_FM_ENGINE_HPP
#define STRANGEDUAL_FM_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "strangedual/bundle_ledger.hpp"
#include "strangedual/group.hpp"
#include "strangedual/mukai.hpp"
#include "strangedual/varieties.hpp"

namespace strangedual::fm {

using exterior::Element;
using exterior::Mask;
using mukai::MukaiVector;
using varieties::ProductModel;
using varieties::SurfacePtr;

/// An integral-transform kernel: a cohomology class on source x target,
/// together with a shift-parity flag (a shift [n] multiplies ch by (-1)^n).
class Kernel {
 public:
  Kernel(std::string name, ProductModel src, ProductModel tgt, Element cls, Int ch_rank,
         int shift_parity = 0);

  const std::string& name() const { return name_; }
  const ProductModel& src() const { return src_; }
  const ProductModel& tgt() const { return tgt_; }
  const ProductModel& product() const { return product_; }
  const Element& cls() const { return cls_; }
  const std::vector<int>& src_map() const { return src_map_; }
  const std::vector<int>& tgt_map() const { return tgt_map_; }
  int shift_parity() const { return shift_; }

  Kernel dualized() const;       // ch of the derived dual
  Kernel swapped() const;        // exchange source and target factors
  Kernel shifted(int n) const;   // apply [n]

 private:
  std::string name_;
  ProductModel src_, tgt_, product_;
  std::vector<int> src_map_, tgt_map_;
  Element cls_;
  int shift_ = 0;
};

/// GRR transform of a full cohomology class: p2_*(p1^* v . ch(K)).
Element transform_class(const Element& v, const Kernel& k);

/// Numerical transform of a Mukai vector through the kernel.
MukaiVector transform(const MukaiVector& v, const Kernel& k);

/// Kernel of the composite transform: p13_*(p12^* K1 . p23^* K2).
Kernel convolve(const Kernel& k1, const Kernel& k2);

/// Absolute transform kernel exp(c1 P_B) exp(c1 P_F) on X x X.
Kernel rs_kernel(const SurfacePtr& x);
/// Fiberwise transform kernel [Delta_B] exp(c1 P_F) on X x X.
Kernel rsdagger_kernel(const SurfacePtr& x);
/// Identity kernel [Delta_X].
Kernel identity_kernel(const SurfacePtr& x);
/// Semihomogeneous fiber kernel, lifted to X x X as [Delta_B] . a exp(c1(U)/a)
/// with c1(U) = b [o_F x F] + r [F x o_F] + c1(P_F). Requires ad + br = 1 and
/// 0 < a < r; integrality of ch(U) and chi(U) = -d are asserted.
Kernel u_kernel(const SurfacePtr& x, const Int& a, const Int& b, const Int& r, const Int& d);

/// Single elliptic fiber model and kernels on F x F, for fiberwise
/// computations.
ProductModel fiber_model();
Kernel pf_kernel_fiber();
Kernel u_kernel_fiber(const Int& a, const Int& b, const Int& r, const Int& d);

/// Named kernel lookup: "rs", "rsdagger", "u:a,b,r,d".
Kernel kernel_by_name(const std::string& spec, const SurfacePtr& x);

/// Translation and twist data riding on a numerical vector. Components are
/// elements of declared abelian groups (free symbol groups in the chains).
struct Decoration {
  ledger::GroupElement tB, tF;  // translation in X = G_B x G_F
  ledger::GroupElement wB, wF;  // twist in the dual
};

struct DecoratedVector {
  MukaiVector numeric;
  Decoration dec;
};

/// Which decorated rewrite rule a transform uses: the plain fiber kernel rule
///   t_x^* E -> t_{x_B}^*(.) ⊗ x_F^{-1},  E ⊗ y -> t_{y_F}^*(.) ⊗ y_B,
/// or the coprime semihomogeneous-kernel rule
///   t_x^* E -> t_{(x_B, b x_F)}^*(.) ⊗ x_F^{-d},
///   E ⊗ y  -> t_{(0, a y_F)}^*(.) ⊗ (y_B, r y_F).
/// The two rule sets are implemented verbatim; for (a,b) = (1,0), d = 1 they
/// differ by a y_F^r twist because the kernels are normalized differently.
struct DecorationRule {
  enum class Kind { FiberKernel, CoprimeKernel } kind;
  Int a = 1, b = 0, r = 1, d = 1;

  static DecorationRule fiber() { return {Kind::FiberKernel, 1, 0, 1, 1}; }
  static DecorationRule coprime(const Int& a, const Int& b, const Int& r, const Int& d) {
    return {Kind::CoprimeKernel, a, b, r, d};
  }
};

struct TraceStep {
  std::string op;
  std::string detail;
};

struct TransformResult {
  DecoratedVector value;
  std::vector<TraceStep> trace;
};

/// Applies the decorated rewrite; the numeric part goes through the matching
/// kernel, the decorations through the rule.
DecoratedVector decorate_transform(const DecoratedVector& v, const DecorationRule& rule,
                                   std::vector<TraceStep>* trace = nullptr);

/// Re-runs a recorded trace from the given start value; the result must be
/// reproduced exactly.
DecoratedVector replay(const DecoratedVector& start, const std::vector<TraceStep>& trace);

/// Twist produced by pushing a translation through a line-bundle class
/// O(a sigma + b f): the degree-zero discrepancy (-b t_B, -a t_F).
Decoration resolve_translation(const MukaiVector& numeric, const Decoration& d);

/// Outcome of the fixed-determinant replay on either moduli side.
struct PhiChainResult {
  MukaiVector transformed;            // decorated transform, numeric part
  ledger::GroupElement twistB, twistF;  // residual twist after resolution
  ledger::GroupElement additionB, additionF;  // a(Z±) in the symbol group
  std::vector<TraceStep> trace;
};

enum class Side { Plus, Minus };

/// Replays the fiber-degree-one chain for the etale cover of either moduli
/// space: side Plus uses (V, x) -> t_{rx}^* V ⊗ (x_F ⊠ x_B^m), side Minus uses
/// (V, y) -> t_{(y_B, m y_F)}^* V ⊗ y^chi. The symbol group has generators
/// xB,xF (plus side) or yB,yF (minus side).
PhiChainResult phi_action(const MukaiVector& v, Side side);

/// Determinant-level closure of the minus-side cover: the chain
/// det RS(t_{(y_B, m y_F)}^* V ⊗ y^chi) must return to O(-f - m sigma) with no
/// residual twist.
struct MinusDetChain {
  Int sigma_coeff, f_coeff;           // final determinant class
  ledger::GroupElement twistB, twistF;  // must both vanish
};
MinusDetChain minus_det_chain(const Int& m, const Int& chi);

/// General-fiber-degree minus-side replay; reports the isogeny
/// f(z) = (d z_B, (a chi + b m) z_F) governing the addition constraint and the
/// residual twist coefficients (-b d_v, -d_v).
struct IsogenyChain {
  Int isogeny_B, isogeny_F;           // coefficients of f(z)
  Int twist_coeff_B, twist_coeff_F;   // coefficients of y_B, y_F in the twist
  Int d_v;
};
IsogenyChain general_minus_chain(const Int& a, const Int& b, const Int& r, const Int& d,
                                 const Int& m, const Int& chi);

/// Exact checks for the coprime-kernel birational transform of a vector with
/// det O(d sigma + m f): transform rank ad + br = 1 after the shift, fiber
/// degree zero, chi against twisting by sigma, the base-degree beta, and the
/// full target class I_Z^dual ⊗ O((a chi + b m) f) with length d_v = dm - r chi.
struct CoprimeSuiteResult {
  Int a, b;
  Int rank_after_shift;
  Int fiber_degree;
  Int chi_sigma_twist;      // chi(Psi(V^dual)(sigma))
  Int beta;
  Int d_v;
  bool target_class_matches;
  bool pass;
};
CoprimeSuiteResult coprime_transform_suite(const Int& r, const Int& d, const Int& m,
                                           const Int& chi);

/// Canonical inverse multiplier 0 < a < r with a d + b r = 1.
std::pair<Int, Int> canonical_ab(const Int& r, const Int& d);

/// The fiberwise convolution kernel of the composite transform: rank b,
/// c1 = d [o x F] + a [F x o] + c1(P_F); its pushforward to the second factor
/// has rank d and determinant coefficient -r.
struct ConvolutionKernelChecks {
  Int rank;
  bool c1_matches;
  Int pushforward_rank;
  Int pushforward_det_coeff;
  bool pass;
};
ConvolutionKernelChecks convolution_v_kernel(const Int& a, const Int& b, const Int& r,
                                             const Int& d);

/// Determinant chains of the coprime transform with symbolic subscheme points:
/// replays both fixed-determinant computations term by term, emits the three
/// point-sum constraints and solves them; the unimodular system forces
/// a_B(Z) = 0 and mu = 0.
struct DetChainResult {
  ledger::SplitSurfaceBundle det_dual;     // determinant of V^dual, chain one
  ledger::SplitSurfaceBundle det_rs;       // determinant of the transform, chain two
  std::vector<ledger::GroupElement> constraints;  // all must vanish after solving
  bool solved_zero;                         // a_B(Z) = 0 and mu = 0 concluded
  Int solution_count;
};
DetChainResult det_constraint_chain(const Int& r, const Int& d, const Int& m, const Int& chi);

}  // namespace strangedual::fm

#endif
