#pragma once

#include "painleve/linalg.hpp"
#include "painleve/newton.hpp"

#include <array>
#include <optional>

namespace painleve {

using PointQ = std::map<VarId, Rat, VarLess>;

// Inhomogeneous coordinate patch of the weighted compactification on which one
// of the original variables dominates.  Coordinates are the two weight-scaled
// ratios against the dominant variable plus eps, the reciprocal of the
// dominant variable normalized to carry weight s.  The patch is a cyclic
// quotient C^3/Z_m; we keep the generator of the deck action alongside.
struct Chart {
  std::string sys;            // name of the source system
  int index = 0;              // 1: x dominates, 2: y, 3: z
  NewtonWeights w{};
  long m = 0;                 // weight of the dominant variable
  VarId v1{}, v2{}, veps{};   // chart coordinates; v1, v2 keep the x,y,z order
  PolyQ cover_x, cover_y, cover_z;  // original variables on the cover, eps = tau^s
  PolyQ h1, h2, h3;           // polynomial field (dv1/dt, dv2/dt, deps/dt)
  long cleared = 0;           // tau power absorbed into the time scale
  std::array<long, 3> deck{}; // deck generator exponents on (v1, v2, eps) mod m
  std::vector<VarId> params;
};

// Builds the chart field: substitute the cover into the planar system, push
// the derivatives forward, clear the common cover power (all cover exponents
// must sit in one residue class mod s, otherwise the system does not descend
// and we throw), replace tau^s by eps and strip the rational content.
Chart make_chart(const VectorField& S, const NewtonWeights& W, int index);
std::array<Chart, 3> make_charts(const VectorField& S, const NewtonWeights& W);

// the chart ODE with eps as independent variable: dv1/deps = h1/h3, dv2/deps = h2/h3
std::array<RatFnQ, 2> chart_ode(const Chart& C);

// h3 = scale_unit * s * eps.  Dividing the field by this unit normalizes the
// eps component to exactly s*eps, which pins down the otherwise arbitrary
// common factor of (h1, h2, h3); all charts become directly comparable.
RatFnQ scale_unit(const Chart& C);
std::array<RatFnQ, 3> normalized_field(const Chart& C);

// value at a rational chart point; parameters stay symbolic
PolyQ eval_point(const PolyQ& p, const PointQ& pt);

// Jacobian d h_i / d v_j of the polynomial field, entries in the parameters
Mat<PolyQ> field_jacobian(const Chart& C);
Mat<PolyQ> field_jacobian_at(const Chart& C, const PointQ& pt);
// Jacobian of the normalized field at a common zero of h1, h2 (asserted);
// rows shrink by the unit value, the eps row becomes (0, 0, s)
Mat<PolyQ> normalized_jacobian_at(const Chart& C, const PointQ& pt);

// every monomial of h_i must transform with the deck weight of coordinate i
// shifted by the cleared time power, otherwise the field would not descend to
// the quotient
bool deck_descends(const Chart& C);
// does gen generate the same cyclic transformation group as C.deck
bool deck_same_group(const Chart& C, const std::array<long, 3>& gen);
// rational points in the deck orbit of p (p itself included, deduplicated)
std::vector<std::array<Rat, 3>> deck_orbit(const Chart& C, const std::array<Rat, 3>& p);

// Rational images of a chart point in another chart of the same system.
// Empty when the target's dominant coordinate vanishes at p or the required
// root of unity times modulus is irrational.
std::vector<std::array<Rat, 3>> transit(const Chart& from, const Chart& to,
                                        const std::array<Rat, 3>& p);

}  // namespace painleve
