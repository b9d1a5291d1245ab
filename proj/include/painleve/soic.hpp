#pragma once

#include "painleve/charts.hpp"
#include "painleve/local.hpp"
#include "painleve/systems.hpp"

#include <array>
#include <vector>

namespace painleve {

// Normal form of a chart field at a movable fixed point, ready to be blown
// up.  The point is shifted to the origin and the first coordinate is sheared
// by U = (v1 - fp) + a v2 + b eps so that the linear part keeps only the
// diagonal plus the (v2, eps) slot.  a and b may carry parameters.
struct PreBlowup {
  Chart base;                   // chart at infinity holding the point
  std::array<Rat, 3> fp{};      // the point; v2 = eps = 0 on the divisor
  std::array<long, 3> lam{};    // characteristic index, also the blow-up weight
  PolyQ a, b;                   // shear coefficients
  VarId U{}, V{}, W{};
  std::array<RatFnQ, 3> F;      // sheared field, unit-normalized time
  std::array<PolyQ, 3> P;       // the same field times the scale unit
  Mat<PolyQ> L;                 // linear part: diagonal plus the (V, W) slot
};

PreBlowup preblowup_change(const Chart& C, const std::array<Rat, 3>& fp);

// One window of the weighted blow-up with weights lam.  chart k rescales the
// k-th coordinate: (U, V, W) = (s^l1 m1, s^l2 m2, s^l3 m3) with m_k = 1 and
// the scale s in slot k.  The pushed-forward field is polynomial in every
// window; the windows over v and w also carry a rational independent
// variable (eps resp. z) and we store the two dependent derivatives.
struct BlowupChart {
  int chart = 0;                 // 1: scale u, 2: scale v, 3: scale w
  std::array<VarId, 3> var{};    // window coordinates in (u, v, w) order
  std::array<long, 3> lam{};
  std::array<PolyQ, 3> orbital;  // pushed-forward field, shared orbital time
  int tslot = -1;                // slot of the rational time (1 or 2), -1: none
  std::array<RatFnQ, 2> reduced; // derivatives of the two remaining coordinates
};

BlowupChart weighted_blowup(const PreBlowup& P, int chart);
// soft variant of the polynomiality certificate: false plus the offending
// component when the pushed-forward field fails to clear the denominator
bool blowup_polynomial(const PreBlowup& P, int chart, RatFnQ* residual = nullptr);

// The composed coordinate window at one movable point: original pair (x, y)
// as Laurent polynomials of (u, z, w), the inverse on the cover, the chart
// system du/dz, dw/dz, its Hamiltonian and the constant area factor
// det d(x,y)/d(u,w).
struct BlowupChartMap {
  int sys = 0;
  int point = 0;                 // atlas slot of the movable point
  int sign = 0;                  // +1 / -1 half of a display pair, 0: unique
  int base_chart = 0;            // chart at infinity the window sits over
  std::array<VarId, 3> var{};    // (u, v, w); v is the original z
  std::array<long, 3> lam{};
  PolyQ x, y;                    // forward map, Laurent in (u, z, w)
  PolyQ inv_u;                   // u recovered from the non-unit coordinate, z, w
  PolyQ inv_w;                   // w^wpow recovered from the unit coordinate
  long wpow = 1;
  std::array<RatFnQ, 2> sys_uw;  // du/dz, dw/dz; polynomial once canonical
  PolyQ ham;                     // chart Hamiltonian, ham(0, 0, z) = 0
  Rat factor;                    // d(x,y)/d(u,w), certified constant
};

// k enumerates the published windows: 0..1 for the first and second systems
// (upper/lower branch resp. the two points), 0..2 for the fourth
BlowupChartMap painleve_coordinates(int sys, int k);

// constant-multiplier certificate of the area form under the window map;
// throws with the residual when the Jacobian is not constant
Rat symplectic_factor(const BlowupChartMap& M);

// components of the pulled-back area form d x ^ d y on the frame
// (du^dw, du^dz, dw^dz); the first one is the constant factor
std::array<RatFnQ, 3> pullback_xy_form(const BlowupChartMap& M);

// residuals of the extended identity
//   dx^dy + dH^dz = factor du^dw + dHt^dz
// pulled back through the window; ok when every component vanishes
struct TwoFormCheck {
  std::array<RatFnQ, 3> residual;
  bool ok = false;
};
TwoFormCheck extended_symplectic_check(const BlowupChartMap& M, const PolyQ& H,
                                       const PolyQ& Ht);

// the blown-up phase space: base plane plus one window per movable point
struct SoicAtlas {
  int sys = 0;
  VectorField base;
  std::vector<BlowupChartMap> charts;
};
SoicAtlas soic_atlas(int sys);

// Double cover quotient of the first system's window.  The sheet swap fixes
// (x, y, z) and flips the scale; U, V, W generate its invariants and satisfy
// one quadric relation.  On the Boutroux flavour z drops out of the relation.
struct SurfaceModel {
  std::array<VarId, 3> src{};      // window coordinates
  std::array<PolyQ, 3> action;     // sheet swap in those coordinates
  PolyQ U, V, W;                   // invariant generators, Laurent in src
  std::array<VarId, 4> gen{};      // names bound to (U, V, W, z)
  PolyQ relation;                  // quadric in the generators
};
SurfaceModel surface_invariants(bool boutroux);

// rewrite V^2 with the quadric relation until the V-degree drops below two
PolyQ reduce_quadric(const PolyQ& p, const SurfaceModel& M);

// The z-frame system on the quotient surface of the first system: rational
// in (V, W, z) with an apparent pole along W = 0 which the quadric relation
// removes.  For the other systems the window system is already polynomial
// and is returned unchanged.
struct SurfaceSystem {
  std::array<VarId, 3> gen{};      // (V, W, z) resp. (u, w, z)
  std::array<RatFnQ, 2> raw;       // dV/dz, dW/dz before reduction
  bool raw_regular = false;        // no pole along W = 0 before reduction
  std::array<PolyQ, 2> reduced;    // rewritten with the relation, regular
};
SurfaceSystem surface_system_regularity(int sys);

// One window of the blow-up in the scale-by-v chart, written over the
// z-dominant chart at infinity: the pair (X3, Y3) as Laurent polynomials of
// the window coordinates with eps3 = w, plus the system against eps3.
// s eps3^2 times each component is polynomial.
struct BoutrouxChart {
  int sys = 0;
  int point = 0;
  int sign = 0;
  std::array<VarId, 3> var{};    // (u, v, w); w is the eps of the z-chart
  PolyQ X, Y;                    // dominant-scaled pair on the window
  std::array<RatFnQ, 2> sys_uv;  // du/deps, dv/deps
};
BoutrouxChart boutroux_chart(int sys, int k);

// the autonomous scaling limit on the z-dominant chart together with the
// windows that cover its infinity
struct BoutrouxAtlas {
  int sys = 0;
  Chart chart3;
  std::array<RatFnQ, 2> field;   // dX3/deps3, dY3/deps3
  std::array<PolyQ, 2> limit;    // autonomous system on eps3 = 0
  PolyQ ham;                     // its first integral, ham(0, 0) = 0
  std::vector<BoutrouxChart> charts;
};
BoutrouxAtlas boutroux_soic_atlas(int sys);

// potential of an exact planar field: returns H with dH/du = hu, dH/dw = hw
// and H(0, 0, .) = 0; throws when the two inputs fail the closedness test
PolyQ hamiltonian_from_field(const PolyQ& hu, const PolyQ& hw, VarId u, VarId w);

// arithmetic and pullback certificate that the extended area form descends
// to rational forms on every chart of the weighted compactification
struct RationalFormCheck {
  bool pq_multiple = false;       // s divides p + q
  bool index_integer = false;     // lam3 divides lam1 + lam2
  bool pullback_rational = false; // both forms are rational on each chart
  bool ok() const { return pq_multiple && index_integer && pullback_rational; }
};
RationalFormCheck rational_two_form_check(const NewtonWeights& w, int sys);

}  // namespace painleve
