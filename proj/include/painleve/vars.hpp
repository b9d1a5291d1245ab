#pragma once

#include <string>
#include <vector>

namespace painleve {

// Interned variable ids. Ordering used by polynomials is by *name*, so the
// canonical form of any expression is independent of interning order.
using VarId = int;

VarId vid(const std::string& name);    // ordinary variable
VarId pid(const std::string& name);    // parameter (weight 0, lives in the coefficient field)
const std::string& var_name(VarId v);
bool var_is_param(VarId v);
bool var_exists(const std::string& name);

bool var_less(VarId a, VarId b);
struct VarLess {
  bool operator()(VarId a, VarId b) const { return var_less(a, b); }
};

}  // namespace painleve
