#pragma once

#include "painleve/ratfn.hpp"

namespace painleve {

// A planar non-autonomous Hamiltonian system
//   dx/dz = f(x,y,z),  dy/dz = g(x,y,z),
// with the orientation f = -dH/dy, g = dH/dx.
struct VectorField {
  std::string name;  // "P1", "P2", "P4"
  VarId x, y, z;
  PolyQ f, g, H;
  std::vector<VarId> params;
};

// which in {1, 2, 4}
const VectorField& painleve_system(int which);

// names of the three systems, in order
std::vector<int> painleve_indices();

}  // namespace painleve
