#include "painleve/series.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "painleve/charts.hpp"

namespace painleve {

namespace {

// top weighted part of the field counting only the dependent variables;
// the independent variable is frozen near the pole so it carries no weight
std::array<PolyQ, 2> principal_part(const VectorField& S, const NewtonWeights& W) {
  Weights w{{S.x, W.p}, {S.y, W.q}};
  PolyQ fp = S.f.weighted_part(w, W.p + 1);
  PolyQ gp = S.g.weighted_part(w, W.q + 1);
  if (fp.has_var(S.z) || gp.has_var(S.z))
    throw std::domain_error("pole balance would depend on the pole position");
  return {fp, gp};
}

Rat eval_rat(const PolyQ& P, const PointQ& pt) {
  PolyQ v = eval_point(P, pt);
  assert(v.is_const());
  return v.coeff_const();
}

Mat<Rat> step_matrix(const std::array<PolyQ, 2>& prin, const VectorField& S,
                     const NewtonWeights& W, const std::array<Rat, 2>& lead) {
  PointQ pt{{S.x, lead[0]}, {S.y, lead[1]}};
  return {{Rat(W.p) + eval_rat(prin[0].diff(S.x), pt), eval_rat(prin[0].diff(S.y), pt)},
          {eval_rat(prin[1].diff(S.x), pt), Rat(W.q) + eval_rat(prin[1].diff(S.y), pt)}};
}

bool is_balance(const std::array<PolyQ, 2>& prin, const VectorField& S,
                const NewtonWeights& W, const Rat& A, const Rat& B) {
  if (A == Rat(0) && B == Rat(0)) return false;
  PointQ pt{{S.x, A}, {S.y, B}};
  return eval_rat(prin[0], pt) == -Rat(W.p) * A && eval_rat(prin[1], pt) == -Rat(W.q) * B;
}

}  // namespace

std::vector<PoleBalance> pole_balances(const VectorField& S, const NewtonWeights& W) {
  auto prin = principal_part(S, W);
  // nontrivial solutions of fp(A,B) = -p A, gp(A,B) = -q B
  PolyQ F = prin[0] + PolyQ::var(S.x).scale(Rat(W.p));
  PolyQ G = prin[1] + PolyQ::var(S.y).scale(Rat(W.q));
  std::set<std::array<Rat, 2>> found;
  PolyQ R = resultant(F, G, S.y);
  if (R.is_zero()) throw std::domain_error("balance locus is not zero dimensional");
  for (const Rat& A : rational_roots(R, S.x)) {
    PolyQ Fy = F.subst(S.x, PolyQ(A));
    PolyQ Gy = G.subst(S.x, PolyQ(A));
    const PolyQ& pick = Fy.is_zero() ? Gy : Fy;
    if (pick.is_zero()) throw std::domain_error("balance locus is not zero dimensional");
    std::vector<Rat> Bs = pick.is_const() ? std::vector<Rat>{} : rational_roots(pick, S.y);
    Bs.push_back(Rat(0));  // cover roots at the origin of the other factor
    for (const Rat& B : Bs)
      if (is_balance(prin, S, W, A, B)) found.insert({A, B});
  }
  std::vector<PoleBalance> out;
  for (auto& lead : found) {
    PoleBalance pb;
    pb.lead = lead;
    pb.kov = step_matrix(prin, S, W, lead);
    Mat<PolyQ> Kp{{PolyQ(pb.kov[0][0]), PolyQ(pb.kov[0][1])},
                  {PolyQ(pb.kov[1][0]), PolyQ(pb.kov[1][1])}};
    auto eigs = eigenvalues_rational(Kp);
    if (eigs) {
      pb.eigs = *eigs;
      std::sort(pb.eigs.begin(), pb.eigs.end());
    }
    out.push_back(std::move(pb));
  }
  return out;
}

LaurentExpansion laurent_series(const VectorField& S, const NewtonWeights& W,
                                const std::array<Rat, 2>& lead, long order) {
  auto prin = principal_part(S, W);
  if (!is_balance(prin, S, W, lead[0], lead[1]))
    throw std::invalid_argument("lead coefficients do not balance the field");

  LaurentExpansion L;
  L.p = W.p;
  L.q = W.q;
  L.lead = lead;
  L.z0 = vid("z0");
  L.kov = step_matrix(prin, S, W, lead);
  L.a.assign((size_t)order + 1, PolyQ(0));
  L.b.assign((size_t)order + 1, PolyQ(0));
  L.a[0] = PolyQ(lead[0]);
  L.b[0] = PolyQ(lead[1]);

  VarId T = vid("_T"), U = vid("_u"), V = vid("_v");
  PolyQ zval = PolyQ::var(L.z0) + PolyQ::var(T);
  auto tshift = [T](const PolyQ& c, long k) {
    return k == 0 ? c : c.mul_mono(Rat(1), Expo{{T, k}});
  };

  for (long n = 1; n <= order; ++n) {
    PolyQ xt = tshift(PolyQ::var(U), n - L.p);
    PolyQ yt = tshift(PolyQ::var(V), n - L.q);
    for (long k = 0; k < n; ++k) {
      xt += tshift(L.a[(size_t)k], k - L.p);
      yt += tshift(L.b[(size_t)k], k - L.q);
    }
    std::map<VarId, PolyQ, VarLess> subs{{S.x, xt}, {S.y, yt}, {S.z, zval}};
    PolyQ r1 = (xt.diff(T) - S.f.subst_many(subs)).coeff_of(T, n - L.p - 1);
    PolyQ r2 = (yt.diff(T) - S.g.subst_many(subs)).coeff_of(T, n - L.q - 1);

    // the step is affine in the two unknowns with the frozen matrix n*I - kov
    PointQ zero_uv{{U, Rat(0)}, {V, Rat(0)}};
    Mat<Rat> M(2, std::vector<Rat>(2));
    std::array<PolyQ, 2> rhs;
    const PolyQ* rr[2] = {&r1, &r2};
    for (int i = 0; i < 2; ++i) {
      PolyQ cu = rr[i]->coeff_of(U, 1), cv = rr[i]->coeff_of(V, 1);
      assert(cu.is_const() && cv.is_const());
      M[i][0] = cu.coeff_const();
      M[i][1] = cv.coeff_const();
      rhs[i] = -eval_point(*rr[i], zero_uv);
      assert(M[i][0] == (i == 0 ? Rat(n) : Rat(0)) - L.kov[i][0]);
      assert(M[i][1] == (i == 1 ? Rat(n) : Rat(0)) - L.kov[i][1]);
    }

    Rat det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (det != Rat(0)) {
      L.a[(size_t)n] = (rhs[0].scale(M[1][1]) - rhs[1].scale(M[0][1])).scale(Rat(1) / det);
      L.b[(size_t)n] = (rhs[1].scale(M[0][0]) - rhs[0].scale(M[1][0])).scale(Rat(1) / det);
      continue;
    }

    L.resonances.push_back(n);
    bool mzero = M[0][0] == Rat(0) && M[0][1] == Rat(0) && M[1][0] == Rat(0) && M[1][1] == Rat(0);
    if (mzero) {
      // full kernel: both coefficients free, both right sides must vanish
      if (!rhs[0].is_zero() || !rhs[1].is_zero())
        throw std::domain_error("logarithmic obstruction at step " + std::to_string(n));
      VarId ca = vid("C" + std::to_string(n));
      VarId cb = vid("D" + std::to_string(n));
      L.free_consts.push_back(ca);
      L.free_consts.push_back(cb);
      L.a[(size_t)n] = PolyQ::var(ca);
      L.b[(size_t)n] = PolyQ::var(cb);
      continue;
    }

    // rank one: solvable iff the right side is orthogonal to the left kernel
    std::array<Rat, 2> lk = (M[0][0] != Rat(0) || M[1][0] != Rat(0))
                                ? std::array<Rat, 2>{M[1][0], -M[0][0]}
                                : std::array<Rat, 2>{M[1][1], -M[0][1]};
    PolyQ obstruction = rhs[0].scale(lk[0]) + rhs[1].scale(lk[1]);
    if (!obstruction.is_zero())
      throw std::domain_error("logarithmic obstruction at step " + std::to_string(n));

    VarId c = vid("C" + std::to_string(n));
    L.free_consts.push_back(c);
    int row = (M[0][0] != Rat(0) || M[0][1] != Rat(0)) ? 0 : 1;
    // kernel direction; a nonzero x component forces M[row][1] != 0
    std::array<Rat, 2> kv{-M[row][1], M[row][0]};
    if (kv[0] != Rat(0)) {
      // x coefficient is the free constant itself, y follows from the row
      L.a[(size_t)n] = PolyQ::var(c);
      L.b[(size_t)n] =
          (rhs[row] - PolyQ::var(c).scale(M[row][0])).scale(Rat(1) / M[row][1]);
    } else {
      L.b[(size_t)n] = PolyQ::var(c);
      L.a[(size_t)n] = rhs[row].scale(Rat(1) / M[row][0]);
    }
  }
  return L;
}

std::array<PolyQ, 2> series_residual(const VectorField& S, const LaurentExpansion& L) {
  VarId T = vid("_T");
  long order = (long)L.a.size() - 1;
  auto tshift = [T](const PolyQ& c, long k) {
    return k == 0 ? c : c.mul_mono(Rat(1), Expo{{T, k}});
  };
  PolyQ xt, yt;
  for (long k = 0; k <= order; ++k) {
    xt += tshift(L.a[(size_t)k], k - L.p);
    yt += tshift(L.b[(size_t)k], k - L.q);
  }
  std::map<VarId, PolyQ, VarLess> subs{
      {S.x, xt}, {S.y, yt}, {S.z, PolyQ::var(L.z0) + PolyQ::var(T)}};
  PolyQ R1 = xt.diff(T) - S.f.subst_many(subs);
  PolyQ R2 = yt.diff(T) - S.g.subst_many(subs);
  // keep only the orders solved by the recursion
  R1 = R1 - R1.drop_below(T, order - L.p);
  R2 = R2 - R2.drop_below(T, order - L.q);
  return {R1, R2};
}

}  // namespace painleve
