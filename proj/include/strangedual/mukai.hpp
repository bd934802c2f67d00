#ifndef STRANGEDUAL_MUKAI_HPP
#define STRANGEDUAL_MUKAI_HPP

#include <string>
#include <vector>

#include "strangedual/rational.hpp"
#include "strangedual/varieties.hpp"

namespace strangedual::mukai {

using varieties::Element;
using varieties::SurfacePtr;

/// Numerical type of a sheaf on a trivially fibered surface: rank, divisor
/// class a sigma + b f, and Euler characteristic. chi (not ch_2) is stored;
/// ch_2 is derived through the surface's Todd data.
struct MukaiVector {
  Int rank;
  Int a;  // sigma coefficient of c1
  Int b;  // f coefficient of c1
  Int chi;
  SurfacePtr surface;

  MukaiVector(Int r, Int a_, Int b_, Int chi_, SurfacePtr s);

  Int fiber_degree() const { return a; }  // c1 . f
  Int section_degree() const { return b; }

  /// Integral of ch_2, recovered from chi via chi = ∫ch2 + ∫c1.td1.
  Int ch2_integral() const;

  /// Full Chern character as an exterior class on the surface model.
  Element ch() const;

  /// Numerical derived dual: (r, -c1, chi).
  MukaiVector dual() const;
  /// Tensor with the line bundle O(p sigma + q f).
  MukaiVector twist(const Int& p, const Int& q) const;

  MukaiVector operator+(const MukaiVector& o) const;
  bool operator==(const MukaiVector& o) const;

  std::string str() const;   // compact form r:(a s + b f):chi
  std::string json() const;

  static MukaiVector parse(const std::string& text, SurfacePtr s);
  static MukaiVector from_json(const std::string& text, SurfacePtr s);
  /// Inverse of ch(): requires degree-2 part in span{sigma, f} and integral data.
  static MukaiVector from_ch(const Element& c, SurfacePtr s);
};

/// Suitable polarization sigma + N f with N a symbolic large marker; recorded
/// for provenance only and never used numerically.
struct PolarizationRecord {
  Int sigma_coeff{1};
  std::string fiber_coeff{"N"};
  std::string str() const { return sigma_coeff.str() + " sigma + " + fiber_coeff + " f, N >> 0"; }
};

/// chi(v.w) = ∫ ch(v) ch(w) td. On the abelian surface this is
/// r_v chi_w + r_w chi_v + c1(v).c1(w).
Int product_chi(const MukaiVector& v, const MukaiVector& w);

/// Mukai self-pairing route through GRR: <v,w> = -chi(v^dual . w).
Int pairing(const MukaiVector& v, const MukaiVector& w);

/// d_v = <v,v>/2 = c1(v)^2/2 - r chi on the abelian surface. Integrality is
/// asserted. On a genus-g base the same GRR route yields the tower length
/// b - r(chi + g-1), which is the convention used by the genus-g reports.
Int half_dim(const MukaiVector& v);

/// m = d_v + r chi, the f-coefficient of c1 for fiber-degree-one vectors.
Int section_coefficient(const MukaiVector& v);

/// Advisory stability-range predicate <v,v> >= 2(r^2 + r - 1); no
/// computational role.
bool stability_range_ok(const MukaiVector& v);

struct VerlindeResult {
  Int chi_L;      // chi(X, L+-)
  Int dv, dw;
  Int count;      // chi(L)/(dv+dw) * binom(dv+dw, dv)
};

enum class Side { Plus, Minus };

/// chi(M_v, Theta_w) = chi(X, L)/(d_v+d_w) * binom(d_v+d_w, d_v), where
/// c1(L+) = c1(v.w) and c1(L-) = c1(v^.w^) with hats the numerical transform
/// (r, a s + b f, chi) -> (chi, -b s - a f, r). Requires chi(v.w) = 0.
VerlindeResult verlinde_count(const MukaiVector& v, const MukaiVector& w, Side side);

struct ChiLReport {
  Int chi_L;
  Int dv_plus_dw;
  bool pass;
};

/// For equal ranks: checks chi(X, O((r+s) sigma - (chi+chi') f)) = d_v + d_w.
ChiLReport chi_L_identity(const MukaiVector& v, const MukaiVector& w);

/// Rank-raising extension tower: v_1 = ch(I_Z (sigma + m_1 f)) with
/// m_1 = chi + ell, v_{k+1} = v_k + ch O(chi f). Along the tower d_v = ell and
/// chi(v_k . O(-chi f)) = 0.
std::vector<MukaiVector> extension_tower(const Int& chi, const Int& ell, int r_max,
                                         SurfacePtr s);

struct FiberRestriction {
  Int rank, degree;
  std::vector<std::pair<Int, Int>> summands;  // (rank, degree) parts
  bool degenerate = false;
};

/// Restriction of the tower sheaf V_k to a fiber: (k,1) generically, and
/// (k-1,1) + (1,0) on fibers through a point of Z.
FiberRestriction fiber_restriction(int k, bool has_point);

struct KummerDims {
  Int kummer_dim;   // 2 d_v - 2
  Int moduli_dim;   // 2 d_v + 2
  Int etale_degree; // d_v^4
};

KummerDims kummer_dims(const MukaiVector& v);

}  // namespace strangedual::mukai

#endif
