#pragma once

#include "painleve/charts.hpp"
#include "painleve/series.hpp"

#include <array>
#include <complex>
#include <utility>

namespace painleve {

// ---------------------------------------------------------------------------
// Fixed points on the boundary divisor {eps = 0}
// ---------------------------------------------------------------------------

// A chart position whose coordinates are algebraic but not rational.  The
// relations cut out the locus exactly (typically a linear constraint plus one
// irreducible univariate factor); approx lists certified numeric roots.
struct AlgebraicAppearance {
  int chart = 0;
  std::vector<PolyQ> relations;
  std::vector<std::array<std::complex<double>, 3>> approx;
};

// One zero of the induced field on the boundary, as a point of the orbifold:
// all chart appearances are grouped, deck orbits are folded.  Movable points
// sit at a finite z limit (the z-ratio coordinate vanishes) and seed the pole
// expansions; the others absorb the irregular singularity at z = infinity.
struct FixedPointRecord {
  bool movable = false;
  int chart = 0;                    // canonical chart of the rational representative
  std::array<Rat, 3> coords{};      // canonical representative
  std::vector<std::array<Rat, 3>> orbit;  // its deck orbit in that chart
  std::vector<std::pair<int, std::array<Rat, 3>>> reps;  // one rational rep per chart
  std::vector<AlgebraicAppearance> algebraic;
};

struct BoundaryCatalog {
  std::vector<FixedPointRecord> points;  // movable first
  int movable_count() const;
  int irregular_count() const;
};

BoundaryCatalog find_fixed_points_at_infinity(const std::array<Chart, 3>& atlas);

// ---------------------------------------------------------------------------
// Linear data at a fixed point
// ---------------------------------------------------------------------------

// Diagonal of the normalized Jacobian.  The time scale that makes the eps row
// exactly (0,0,s) is the one canonical choice, so these numbers are intrinsic.
struct CharacteristicIndex {
  std::array<Rat, 3> lambda{};
  Mat<PolyQ> jacobian;  // upper triangular; off-diagonal entries may hold parameters
};

CharacteristicIndex characteristic_index(const Chart& C, const std::array<Rat, 3>& fp);

// <m, lambda> = lambda_comp with |m| >= 2: the degree-|m| homological equation
// for component comp is singular at monomial m.
struct Resonance {
  std::array<long, 3> m{};
  int comp = 0;
  auto operator<=>(const Resonance&) const = default;
};

struct PoincareReport {
  bool nonresonant = true;
  bool poincare_domain = true;  // 0 outside the convex hull of the spectrum
  std::vector<Resonance> resonances;
};

PoincareReport check_poincare_conditions(const std::array<Rat, 3>& lambda);

// ---------------------------------------------------------------------------
// Linearizing coordinates
// ---------------------------------------------------------------------------

// Degree-by-degree solution of u = X + phi1, v = Z + eps*phi2 conjugating the
// normalized field to its linear part through total degree N.  vars are the
// chart coordinates reinterpreted as the shifted locals; F is the Taylor
// field the conjugacy identity was verified against.
struct Linearization {
  int chart = 0;
  std::array<Rat, 3> fp{};
  std::array<VarId, 3> vars{};
  Mat<PolyQ> J;
  std::array<Rat, 3> lambda{};
  std::array<PolyQ, 3> F;
  PolyQ phi1, phi2;   // pure correction terms; phi2 is the cofactor of eps
  int N = 0;
  std::vector<Resonance> resonances;  // singular degrees passed through
};

Linearization poincare_linearize(const Chart& C, const std::array<Rat, 3>& fp, int N);

// same solver on a raw polynomial field with upper-triangular linear part J;
// throws domain_error naming the monomial when a resonant term obstructs
Linearization poincare_linearize_field(const std::array<PolyQ, 3>& F,
                                       const std::array<VarId, 3>& vars,
                                       const Mat<PolyQ>& J, int N);

// D(Phi) F - J Phi truncated to total degree N; identically zero on success
std::array<PolyQ, 3> conjugacy_residual(const Linearization& L);

// True when some resonant monomial survives every choice of conjugacy, i.e.
// the homological equations are inconsistent at a singular degree.
bool resonant_terms_present(const Chart& C, const std::array<Rat, 3>& fp);

// Taylor expansion of the normalized field in the shifted chart coordinates,
// truncated above total degree N (parameters do not count toward the degree)
std::array<PolyQ, 3> taylor_normalized_field(const Chart& C, const std::array<Rat, 3>& fp,
                                             int N);

// derivative of p along the field v_i -> f_i
PolyQ derive_along(const PolyQ& p, const std::vector<std::pair<VarId, PolyQ>>& field);

// ---------------------------------------------------------------------------
// Local first integrals
// ---------------------------------------------------------------------------

// Exact integrals of the triangular model u' = J u with eps = eta^s and
// eta' = eta.  Laurent polynomials in u, v, eta; two independent integrals.
std::array<PolyQ, 2> linear_model_integrals(const Mat<PolyQ>& J, VarId u, VarId v,
                                            VarId eta);

// The model integrals pulled back through the chart cover and the linearizing
// map.  w is the reciprocal cover parameter (eps = w^s), so C1, C2 become
// Laurent polynomials in the original variables, w and the parameters; they
// are constant along trajectories to the order phi1, phi2 were computed.
struct LocalIntegrals {
  VarId w{};
  PolyQ C1, C2;
};

LocalIntegrals local_integrals(const Linearization& L, const Chart& C);

// ---------------------------------------------------------------------------
// Scaling limits at a movable fixed point
// ---------------------------------------------------------------------------

// The autonomous system obtained by rescaling the linear model variables with
// the characteristic powers of eta and letting the base point run off.  For a
// second-order target the yt equation closes by itself.
struct SingularNormalForm {
  std::array<VarId, 3> tilde{};  // xt, yt, zt
  bool has_pair = false;         // dxt/dzt, dyt/dzt both expressible
  PolyQ fx, fy;
  bool second_order = false;
  PolyQ second_rhs;              // d2yt/dzt2 = second_rhs(yt)
};

// idx in {1,2,4}; fp_sign picks the movable fixed point where it is ambiguous
SingularNormalForm singular_normal_form(int idx, int fp_sign);

// ---------------------------------------------------------------------------
// Which fields admit this structure at all
// ---------------------------------------------------------------------------

// Enumerates the coefficient slots of a meromorphic field on the (3,2,4,5)
// space, imposes the residue bookkeeping forced by a regular fixed point with
// local sections on the boundary, and rules out the degenerate branches.  The
// survivors assemble into the two-parameter pencil around the degree-two
// pole system; the nonzero slots are reported by name.
struct AdmissibleFamily {
  long degree_bound = 0;
  std::vector<std::string> survivors;  // e.g. "a100", "b0", ...
  VectorField family;                  // dx/dz = a*y^2 + b*z, dy/dz = c*x
};

AdmissibleFamily classify_admissible_fields(long degree_bound);

// ---------------------------------------------------------------------------
// Fast-slow normal forms and their blow-up limits
// ---------------------------------------------------------------------------

enum class FastSlowKind { SaddleNode, Transcritical, TakensBogdanov, TakensBogdanovZ2,
                          TakensBogdanovZ3 };

struct FastSlowModel {
  FastSlowKind kind{};
  bool planar = false;        // no y variable
  PolyQ fx, fy, fz;           // d/dt of x, y, z; variables x, y, z, eps
  NewtonWeights w{};          // blow-up weights of x, y, z, eps
};

// kind-specific truncated normal form plus eps-order perturbations f1, f2 and
// a slow-drift tail (dz/dt = eps*(1 + gtail)); cub1, cub2 are optional cubic
// remainders for the kinds that admit them
FastSlowModel fastslow_model(FastSlowKind kind, const PolyQ& f1, const PolyQ& f2,
                             const PolyQ& gtail, const PolyQ& cub1 = PolyQ(0),
                             const PolyQ& cub2 = PolyQ(0));

// the induced autonomous system on the exceptional divisor of the weighted
// blow-up of the origin in (x, y, z, eps)
struct DivisorLimit {
  bool planar = false;
  std::array<VarId, 3> vars{};  // X, Y, Z
  PolyQ dX, dY;                 // dX/dZ and dY/dZ
};

DivisorLimit fastslow_blowup_limit(const FastSlowModel& M);

// dX/dZ = X^2 + c1(Z) X + c0(Z) under X = -u'/u becomes u'' + B u' + C u = 0
std::array<PolyQ, 2> riccati_linear_coeffs(const PolyQ& rhs, VarId X, VarId Z);

}  // namespace painleve
