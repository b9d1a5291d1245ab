#pragma once

#include "painleve/systems.hpp"

namespace painleve {

struct LatticePoint {
  long a, b, c;
  auto operator<=>(const LatticePoint&) const = default;
};

// Exponent records of both components after the standard shift:
// x^i y^j z^k in f -> (i-1, j, k+1); in g -> (i, j-1, k+1).
// Parameters contribute through their carrier monomial (they have weight 0).
std::vector<LatticePoint> exponent_lattice(const VectorField& S);

struct NewtonWeights {
  long p, q, r, s;  // weights of x, y, z and the common level of the top face
  auto operator<=>(const NewtonWeights&) const = default;
};

// The unique supporting 2-face with positive primitive normal; throws if the
// diagram does not have exactly one.
NewtonWeights newton_face_weights(const VectorField& S);

// decomposition induced by the weights: top weighted-degree parts
struct PrincipalParts {
  PolyQ f_top, g_top, f_rest, g_rest;
};
PrincipalParts principal_parts(const VectorField& S, const NewtonWeights& W);

// checks bundled for reporting: top parts quasi-homogeneous of the forced
// degrees, remainder strictly below, Hamiltonian top degree s+1
struct WeightChecks {
  bool f_degree_ok = false, g_degree_ok = false;
  bool rest_below = false;
  bool H_degree_ok = false;
};
WeightChecks weight_checks(const VectorField& S, const NewtonWeights& W);

Weights var_weights(const VectorField& S, const NewtonWeights& W);  // {x:p, y:q, z:r}

}  // namespace painleve
