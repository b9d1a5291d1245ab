#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "painleve/newton.hpp"

using namespace painleve;

TEST_CASE("system data satisfies the hamiltonian orientation") {
  for (int k : painleve_indices()) {
    const VectorField& S = painleve_system(k);
    CAPTURE(S.name);
    CHECK(S.f == -S.H.diff(S.y));
    CHECK(S.g == S.H.diff(S.x));
  }
}

TEST_CASE("exponent records") {
  auto pts1 = exponent_lattice(painleve_system(1));
  CHECK(pts1 == std::vector<LatticePoint>{{-1, 0, 2}, {-1, 2, 1}, {1, -1, 1}});
  auto pts2 = exponent_lattice(painleve_system(2));
  // the constant (parameter) term of f contributes (-1,0,1)
  CHECK(pts2 ==
        std::vector<LatticePoint>{{-1, 0, 1}, {-1, 1, 2}, {-1, 3, 1}, {1, -1, 1}});
  auto pts4 = exponent_lattice(painleve_system(4));
  CHECK(pts4 == std::vector<LatticePoint>{
                    {-1, 0, 1}, {0, -1, 1}, {0, 0, 2}, {0, 1, 1}, {1, 0, 1}});
}

TEST_CASE("face weights are the known triples and unique") {
  CHECK(newton_face_weights(painleve_system(1)) == NewtonWeights{3, 2, 4, 5});
  CHECK(newton_face_weights(painleve_system(2)) == NewtonWeights{2, 1, 2, 3});
  CHECK(newton_face_weights(painleve_system(4)) == NewtonWeights{1, 1, 1, 2});
}

TEST_CASE("weight structure checks") {
  for (int k : painleve_indices()) {
    const VectorField& S = painleve_system(k);
    CAPTURE(S.name);
    auto W = newton_face_weights(S);
    auto C = weight_checks(S, W);
    CHECK(C.f_degree_ok);
    CHECK(C.g_degree_ok);
    CHECK(C.rest_below);
    CHECK(C.H_degree_ok);
    // r + 1 = p + q ties the symplectic form to the independent variable
    CHECK(W.r + 1 == W.p + W.q);
  }
}

TEST_CASE("principal parts split") {
  const VectorField& S = painleve_system(4);
  auto P = principal_parts(S, newton_face_weights(S));
  CHECK(P.f_top == parse_pq("-x^2 + 2*x*y + 2*x*z"));
  CHECK(P.f_rest == parse_pq("-2*theta"));
  CHECK(P.g_top == parse_pq("-y^2 + 2*x*y - 2*y*z"));
  CHECK(P.g_rest == parse_pq("-2*kappa"));
  const VectorField& S2 = painleve_system(2);
  auto P2 = principal_parts(S2, newton_face_weights(S2));
  CHECK(P2.f_top == parse_pq("2*y^3 + y*z"));
  CHECK(P2.f_rest == parse_pq("alpha"));
  CHECK(P2.g_top == parse_pq("x"));
  CHECK(P2.g_rest == PolyQ(0));
}

TEST_CASE("perturbing the diagram moves the face and breaks the structure") {
  VectorField S = painleve_system(1);
  S.f += parse_pq("y^4");  // new record (-1,4,1) tilts the top face
  auto W = newton_face_weights(S);
  CHECK(W == NewtonWeights{5, 2, 8, 11});
  auto C = weight_checks(S, W);
  CHECK(!C.H_degree_ok);  // the old Hamiltonian no longer matches the face
}

TEST_CASE("degenerate diagrams are rejected") {
  VectorField S;
  S.name = "toy";
  S.x = vid("x");
  S.y = vid("y");
  S.z = vid("z");
  S.f = parse_pq("y^2");
  S.g = parse_pq("x");
  S.H = parse_pq("1/2*x^2 - 1/3*y^3");
  CHECK_THROWS(newton_face_weights(S));  // only two lattice points
}
