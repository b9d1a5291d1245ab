#include "painleve/poly.hpp"

namespace painleve {

std::string expo_str(const Expo& e) {
  std::string out;
  for (auto& [v, k] : e) {
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace painleve
