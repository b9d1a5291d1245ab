#include "painleve/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace painleve {

namespace {

void collect(const PolyQ& poly, const VectorField& S, long dx, long dy,
             std::set<LatticePoint>& out) {
  for (auto& [e, c] : poly.terms()) {
    long i = 0, j = 0, k = 0;
    for (auto& [v, exp] : e) {
      if (v == S.x) i = exp;
      else if (v == S.y) j = exp;
      else if (v == S.z) k = exp;
      // parameters are weight-0 coefficients and do not move the point
    }
    out.insert({i + dx, j + dy, k + 1});
  }
}

}  // namespace

std::vector<LatticePoint> exponent_lattice(const VectorField& S) {
  std::set<LatticePoint> pts;
  collect(S.f, S, -1, 0, pts);
  collect(S.g, S, 0, -1, pts);
  return {pts.begin(), pts.end()};
}

NewtonWeights newton_face_weights(const VectorField& S) {
  auto pts = exponent_lattice(S);
  size_t n = pts.size();
  if (n < 3) throw std::runtime_error("too few lattice points for a 2-face");
  std::set<NewtonWeights> found;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c) {
        LatticePoint u{pts[b].a - pts[a].a, pts[b].b - pts[a].b, pts[b].c - pts[a].c};
        LatticePoint v{pts[c].a - pts[a].a, pts[c].b - pts[a].b, pts[c].c - pts[a].c};
        long nx = u.b * v.c - u.c * v.b;
        long ny = u.c * v.a - u.a * v.c;
        long nz = u.a * v.b - u.b * v.a;
        if (nx == 0 && ny == 0 && nz == 0) continue;  // collinear
        long g = std::gcd(std::gcd(std::abs(nx), std::abs(ny)), std::abs(nz));
        nx /= g;
        ny /= g;
        nz /= g;
        if (nx < 0 || (nx == 0 && (ny < 0 || (ny == 0 && nz < 0)))) {
          nx = -nx;
          ny = -ny;
          nz = -nz;
        }
        if (nx <= 0 || ny <= 0 || nz <= 0) continue;  // weights must be positive
        long level = nx * pts[a].a + ny * pts[a].b + nz * pts[a].c;
        if (level <= 0) continue;
        bool supporting = true;
        for (auto& P : pts)
          if (nx * P.a + ny * P.b + nz * P.c > level) {
            supporting = false;
            break;
          }
        if (supporting) found.insert({nx, ny, nz, level});
      }
  if (found.size() != 1)
    throw std::runtime_error("expected exactly one supporting 2-face, found " +
                             std::to_string(found.size()));
  return *found.begin();
}

Weights var_weights(const VectorField& S, const NewtonWeights& W) {
  return Weights{{S.x, W.p}, {S.y, W.q}, {S.z, W.r}};
}

PrincipalParts principal_parts(const VectorField& S, const NewtonWeights& W) {
  Weights w = var_weights(S, W);
  PrincipalParts out;
  out.f_top = S.f.weighted_part(w, W.s + W.p - W.r);
  out.g_top = S.g.weighted_part(w, W.s + W.q - W.r);
  out.f_rest = S.f - out.f_top;
  out.g_rest = S.g - out.g_top;
  return out;
}

WeightChecks weight_checks(const VectorField& S, const NewtonWeights& W) {
  Weights w = var_weights(S, W);
  auto P = principal_parts(S, W);
  WeightChecks out;
  out.f_degree_ok = !P.f_top.is_zero() && P.f_top.weighted_homogeneous(w) &&
                    *P.f_top.weighted_degree(w) == W.s + W.p - W.r;
  out.g_degree_ok = !P.g_top.is_zero() && P.g_top.weighted_homogeneous(w) &&
                    *P.g_top.weighted_degree(w) == W.s + W.q - W.r;
  bool fb = P.f_rest.is_zero() || *P.f_rest.weighted_degree(w) < W.s + W.p - W.r;
  bool gb = P.g_rest.is_zero() || *P.g_rest.weighted_degree(w) < W.s + W.q - W.r;
  out.rest_below = fb && gb;
  // H tops out at s+1 and its top part generates the top parts of the field
  PolyQ Htop = S.H.weighted_part(w, W.s + 1);
  out.H_degree_ok = *S.H.weighted_degree(w) == W.s + 1 && P.f_top == -Htop.diff(S.y) &&
                    P.g_top == Htop.diff(S.x);
  return out;
}

}  // namespace painleve
