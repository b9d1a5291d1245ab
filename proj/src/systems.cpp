#include "painleve/systems.hpp"

#include <stdexcept>

namespace painleve {

namespace {

VectorField make_p1() {
  VectorField S;
  S.name = "P1";
  S.x = vid("x");
  S.y = vid("y");
  S.z = vid("z");
  S.f = parse_pq("6*y^2 + z");
  S.g = parse_pq("x");
  S.H = parse_pq("1/2*x^2 - 2*y^3 - z*y");
  return S;
}

VectorField make_p2() {
  VectorField S;
  S.name = "P2";
  S.x = vid("x");
  S.y = vid("y");
  S.z = vid("z");
  S.params = {pid("alpha")};
  S.f = parse_pq("2*y^3 + y*z + alpha");
  S.g = parse_pq("x");
  S.H = parse_pq("1/2*x^2 - 1/2*y^4 - 1/2*z*y^2 - alpha*y");
  return S;
}

VectorField make_p4() {
  VectorField S;
  S.name = "P4";
  S.x = vid("x");
  S.y = vid("y");
  S.z = vid("z");
  S.params = {pid("kappa"), pid("theta")};
  S.f = parse_pq("-x^2 + 2*x*y + 2*x*z - 2*theta");
  S.g = parse_pq("-y^2 + 2*x*y - 2*y*z - 2*kappa");
  S.H = parse_pq("-x*y^2 + x^2*y - 2*x*y*z - 2*kappa*x + 2*theta*y");
  return S;
}

}  // namespace

const VectorField& painleve_system(int which) {
  static const VectorField p1 = make_p1();
  static const VectorField p2 = make_p2();
  static const VectorField p4 = make_p4();
  switch (which) {
    case 1: return p1;
    case 2: return p2;
    case 4: return p4;
  }
  throw std::invalid_argument("unknown system index " + std::to_string(which));
}

std::vector<int> painleve_indices() { return {1, 2, 4}; }

}  // namespace painleve
