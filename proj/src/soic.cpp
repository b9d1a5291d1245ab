#include "painleve/soic.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace painleve {
namespace {

Expo expo_flip(const Expo& e) {
  Expo out;
  for (auto& [v, k] : e) out[v] = -k;
  return out;
}

// drop zero entries so the exponent map stays canonical
Expo expo_clean(Expo e) {
  for (auto it = e.begin(); it != e.end();)
    it = it->second == 0 ? e.erase(it) : std::next(it);
  return e;
}

// invert a single-term polynomial
PolyQ mono_inverse(const PolyQ& m) {
  if (m.nterms() != 1) throw std::logic_error("expected a monomial coefficient");
  const auto& [e, c] = *m.terms().begin();
  return PolyQ::mono(Rat(1) / c, expo_flip(e));
}

// polynomial content of a rational function, rejecting Laurent leftovers
bool poly_part(const RatFnQ& r, PolyQ* out) {
  if (!r.is_poly()) return false;
  PolyQ p = r.as_poly();
  for (auto& [v, k] : p.support_min())
    if (k < 0) return false;
  if (out) *out = p;
  return true;
}

Mat<PolyQ> mat3_mul(const Mat<PolyQ>& A, const Mat<PolyQ>& B) {
  Mat<PolyQ> out(3, std::vector<PolyQ>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PolyQ s;
      for (int k = 0; k < 3; ++k) s += A[i][k] * B[k][j];
      out[i][j] = s;
    }
  return out;
}

struct BuildOut {
  BlowupChart bc;
  bool ok = true;
  RatFnQ bad;
};

BuildOut build_blowup(const PreBlowup& P, int chart) {
  if (chart < 1 || chart > 3) throw std::invalid_argument("blow-up chart must be 1, 2 or 3");
  BuildOut R;
  BlowupChart& bc = R.bc;
  bc.chart = chart;
  bc.lam = P.lam;
  switch (chart) {
    case 1: bc.var = {vid("u1"), vid("v1"), vid("w1")}; bc.tslot = -1; break;
    case 2: bc.var = {vid("u2"), vid("v2"), vid("w2")}; bc.tslot = 2; break;
    case 3: bc.var = {vid("u3"), vid("z"), vid("w3")}; bc.tslot = 1; break;
  }
  int k = chart - 1;  // slot carrying the scale
  VarId sv = bc.var[k];
  std::array<VarId, 3> src{P.U, P.V, P.W};
  std::map<VarId, PolyQ, VarLess> down;
  for (int i = 0; i < 3; ++i) {
    Expo e{{sv, P.lam[i]}};
    if (i != k) e[bc.var[i]] = 1;
    down[src[i]] = PolyQ::mono(Rat(1), e);
  }
  std::array<PolyQ, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = P.P[i].subst_many(down);
  // chain rule: the scale slot fixes the scale velocity, the others follow
  RatFnQ sdot(g[k], PolyQ::mono(Rat(P.lam[k]), expo_clean(Expo{{sv, P.lam[k] - 1}})));
  std::array<RatFnQ, 3> orb;
  orb[(size_t)k] = sdot;
  for (int i = 0; i < 3; ++i) {
    if (i == k) continue;
    RatFnQ t1(g[i], PolyQ::mono(Rat(1), Expo{{sv, P.lam[i]}}));
    RatFnQ t2 = sdot * RatFnQ(PolyQ::mono(Rat(P.lam[i]), Expo{{bc.var[i], 1}, {sv, -1}}));
    orb[(size_t)i] = t1 - t2;
  }
  for (int i = 0; i < 3; ++i) {
    PolyQ pi;
    if (!poly_part(orb[(size_t)i], &pi)) {
      R.ok = false;
      R.bad = orb[(size_t)i];
      return R;
    }
    bc.orbital[(size_t)i] = pi;
  }
  if (bc.tslot >= 0) {
    RatFnQ tv = orb[(size_t)bc.tslot];
    int j = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == bc.tslot) continue;
      bc.reduced[(size_t)j] = orb[(size_t)i] / tv;
      ++j;
    }
    // the w window reduces to a polynomial system in z; the v window clears
    // the square of its time variable, the eps of the scaling limit
    for (int i = 0; i < 2; ++i) {
      RatFnQ cert = bc.reduced[(size_t)i];
      if (chart == 2) cert = cert * RatFnQ(PolyQ::mono(Rat(1), Expo{{bc.var[2], 2}}));
      if (!poly_part(cert, nullptr)) {
        R.ok = false;
        R.bad = bc.reduced[(size_t)i];
        return R;
      }
    }
  }
  return R;
}

// a movable point together with the window data needed to blow it up
struct PointPick {
  std::array<Chart, 3> atlas;
  int base_chart = 0;
  std::array<Rat, 3> fp{};
  int sign = 0;
  int point = 0;
};

PointPick pick_point(int sys, int k) {
  const VectorField& S = painleve_system(sys);
  NewtonWeights W = newton_face_weights(S);
  std::array<Chart, 3> atlas = make_charts(S, W);
  BoundaryCatalog cat = find_fixed_points_at_infinity(atlas);
  struct Cand {
    int chart = 0;
    std::array<Rat, 3> fp{};
    std::vector<std::array<Rat, 3>> orbit;
  };
  std::vector<Cand> cands;
  // base the window on the slot of smaller weight, ties going to x
  std::array<int, 3> prefer = W.q < W.p ? std::array<int, 3>{2, 1, 3}
                                        : std::array<int, 3>{1, 2, 3};
  for (const FixedPointRecord& rec : cat.points) {
    if (!rec.movable) continue;
    Cand c;
    for (int want : prefer) {
      for (auto& [ch, q] : rec.reps)
        if (ch == want) {
          c.chart = ch;
          c.fp = q;
          break;
        }
      if (c.chart != 0) break;
    }
    if (c.chart == 0) continue;  // no rational window over this point
    c.orbit = (c.chart == rec.chart) ? rec.orbit
                                     : std::vector<std::array<Rat, 3>>{c.fp};
    std::sort(c.orbit.begin(), c.orbit.end());
    cands.push_back(std::move(c));
  }
  std::sort(cands.begin(), cands.end(),
            [](const Cand& a, const Cand& b) {
              return a.chart != b.chart ? a.chart < b.chart : a.fp < b.fp;
            });
  // each deck pair of presentations yields an upper and a lower window
  std::vector<PointPick> picks;
  for (size_t i = 0; i < cands.size(); ++i) {
    const Cand& c = cands[i];
    if (c.orbit.size() == 2) {
      for (int h = 0; h < 2; ++h) {
        PointPick p;
        p.base_chart = c.chart;
        p.fp = c.orbit[(size_t)h];
        p.sign = h == 0 ? 1 : -1;
        p.point = (int)i;
        picks.push_back(std::move(p));
      }
    } else {
      PointPick p;
      p.base_chart = c.chart;
      p.fp = c.fp;
      p.sign = sys == 4 ? 0 : (i == 0 ? 1 : -1);
      p.point = (int)i;
      picks.push_back(std::move(p));
    }
  }
  if (k < 0 || (size_t)k >= picks.size())
    throw std::out_of_range("no such window");
  PointPick out = picks[(size_t)k];
  out.atlas = std::move(atlas);
  return out;
}

Rat window_factor(const PolyQ& x, const PolyQ& y, VarId u, VarId w) {
  PolyQ det = x.diff(u) * y.diff(w) - x.diff(w) * y.diff(u);
  if (!det.is_const())
    throw std::domain_error("area factor is not constant: " + det.to_string());
  return det.coeff_const();
}

}  // namespace

PreBlowup preblowup_change(const Chart& C, const std::array<Rat, 3>& fp) {
  if (!(fp[1] == Rat(0) && fp[2] == Rat(0)))
    throw std::invalid_argument("blow-up center must sit on the divisor with v2 = 0");
  PointQ pt{{C.v1, fp[0]}, {C.v2, fp[1]}, {C.veps, fp[2]}};
  if (!eval_point(C.h1, pt).is_zero() || !eval_point(C.h2, pt).is_zero())
    throw std::invalid_argument("blow-up center is not a fixed point");
  CharacteristicIndex ci = characteristic_index(C, fp);
  PreBlowup out;
  out.base = C;
  out.fp = fp;
  for (int i = 0; i < 3; ++i) out.lam[(size_t)i] = rat_long(ci.lambda[(size_t)i]);
  if (out.lam[1] != C.w.r || out.lam[2] != C.w.s)
    throw std::logic_error("characteristic index misaligned with the chart weights");
  const Mat<PolyQ>& J = ci.jacobian;
  for (int i = 1; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      if (!J[(size_t)i][(size_t)j].is_zero())
        throw std::logic_error("corner jacobian is not upper triangular");
  Rat l1(out.lam[0]), l2(out.lam[1]), l3(out.lam[2]);
  if (l1 == l2 || l1 == l3) throw std::domain_error("shear needs a separated top eigenvalue");
  out.a = J[0][1].scale(Rat(1) / (l1 - l2));
  out.b = (J[0][2] + out.a * J[1][2]).scale(Rat(1) / (l1 - l3));
  out.U = vid("u");
  out.V = vid("v");
  out.W = vid("w");
  PolyQ Uv = PolyQ::var(out.U), Vv = PolyQ::var(out.V), Wv = PolyQ::var(out.W);
  std::map<VarId, PolyQ, VarLess> shear{
      {C.v1, PolyQ(fp[0]) + Uv - out.a * Vv - out.b * Wv},
      {C.v2, Vv},
      {C.veps, Wv}};
  PolyQ h1s = C.h1.subst_many(shear);
  PolyQ h2s = C.h2.subst_many(shear);
  PolyQ h3s = C.h3.subst_many(shear);
  // the eps row is divisible by eps; the cofactor is the shared time unit
  auto lowe = C.h3.low(C.veps);
  if (!lowe || *lowe < 1)
    throw std::logic_error("eps component does not vanish on the divisor");
  PolyQ unit = C.h3.mul_mono(Rat(1) / Rat(C.w.s), Expo{{C.veps, -1}}).subst_many(shear);
  out.P = {h1s + out.a * h2s + out.b * h3s, h2s, h3s};
  out.F = {RatFnQ(out.P[0], unit), RatFnQ(out.P[1], unit), RatFnQ(out.P[2], unit)};
  if (out.F[2] != RatFnQ(PolyQ::mono(Rat(C.w.s), Expo{{out.W, 1}})))
    throw std::logic_error("time normalization lost the eps equation");
  // conjugate the corner jacobian by the shear and confirm the top row cleans up
  PolyQ one(1), zero;
  Mat<PolyQ> S{{one, out.a, out.b}, {zero, one, zero}, {zero, zero, one}};
  Mat<PolyQ> Si{{one, out.a.scale(Rat(-1)), out.b.scale(Rat(-1))}, {zero, one, zero},
                {zero, zero, one}};
  Mat<PolyQ> L = mat3_mul(mat3_mul(S, J), Si);
  if (!L[0][1].is_zero() || !L[0][2].is_zero())
    throw std::logic_error("shear failed to clean the top row");
  for (int i = 0; i < 3; ++i)
    if (L[(size_t)i][(size_t)i] != PolyQ(Rat(out.lam[(size_t)i])))
      throw std::logic_error("shear disturbed the diagonal");
  out.L = std::move(L);
  return out;
}

BlowupChart weighted_blowup(const PreBlowup& P, int chart) {
  BuildOut R = build_blowup(P, chart);
  if (!R.ok)
    throw std::domain_error("blown-up field fails to be polynomial: " + R.bad.to_string());
  return std::move(R.bc);
}

bool blowup_polynomial(const PreBlowup& P, int chart, RatFnQ* residual) {
  BuildOut R = build_blowup(P, chart);
  if (!R.ok && residual) *residual = R.bad;
  return R.ok;
}

BlowupChartMap painleve_coordinates(int sys, int k) {
  PointPick pk = pick_point(sys, k);
  const Chart& C = pk.atlas[(size_t)(pk.base_chart - 1)];
  PreBlowup pre = preblowup_change(C, pk.fp);
  BlowupChart b3 = weighted_blowup(pre, 3);
  BlowupChartMap M;
  M.sys = sys;
  M.point = pk.point;
  M.sign = pk.sign;
  M.base_chart = pk.base_chart;
  M.var = b3.var;
  M.lam = b3.lam;
  VarId u = M.var[0], zv = M.var[1], wv = M.var[2];
  // compose the cover with the shear and the window monomials; the scale of
  // the window doubles as the cover scale
  PolyQ Up = PolyQ::mono(Rat(1), Expo{{wv, pre.lam[0]}, {u, 1}});
  PolyQ Vp = PolyQ::mono(Rat(1), Expo{{wv, pre.lam[1]}, {zv, 1}});
  PolyQ Wp = PolyQ::mono(Rat(1), Expo{{wv, pre.lam[2]}});
  std::map<VarId, PolyQ, VarLess> m{
      {C.v1, PolyQ(pre.fp[0]) + Up - pre.a * Vp - pre.b * Wp},
      {C.v2, Vp},
      {vid("_tau"), PolyQ::var(wv)}};
  M.x = C.cover_x.subst_many(m);
  M.y = C.cover_y.subst_many(m);
  if (C.cover_z.subst_many(m) != PolyQ::var(zv))
    throw std::logic_error("window does not preserve z");
  M.sys_uw = b3.reduced;
  PolyQ du = M.sys_uw[0].as_poly(), dw = M.sys_uw[1].as_poly();
  M.ham = hamiltonian_from_field(dw, du.scale(Rat(-1)), u, wv);
  // inverse on the cover: one original coordinate is linear in u, the other
  // is a pure power of the scale
  const VectorField& S = painleve_system(sys);
  bool u_in_x = M.x.has_var(u);
  if (u_in_x == M.y.has_var(u))
    throw std::logic_error("window carries u in an unexpected slot");
  const PolyQ& carrier = u_in_x ? M.x : M.y;
  const PolyQ& un = u_in_x ? M.y : M.x;
  VarId carrier_id = u_in_x ? S.x : S.y;
  VarId unit_id = u_in_x ? S.y : S.x;
  if (carrier.deg(u) != std::optional<long>(1))
    throw std::logic_error("window is not linear in u");
  M.inv_u = (PolyQ::var(carrier_id) - carrier.coeff_of(u, 0)) * mono_inverse(carrier.coeff_of(u, 1));
  if (un.nterms() != 1 || un.leading_coeff() != Rat(1))
    throw std::logic_error("unit slot is not a pure power of the scale");
  Expo ue = un.leading_expo();
  if (ue.size() != 1 || ue.begin()->first != wv || ue.begin()->second >= 0)
    throw std::logic_error("unit slot is not a pure power of the scale");
  M.wpow = -ue.begin()->second;
  M.inv_w = PolyQ::var(unit_id, -1);
  M.factor = window_factor(M.x, M.y, u, wv);
  return M;
}

Rat symplectic_factor(const BlowupChartMap& M) {
  return window_factor(M.x, M.y, M.var[0], M.var[2]);
}

std::array<RatFnQ, 3> pullback_xy_form(const BlowupChartMap& M) {
  VarId u = M.var[0], zv = M.var[1], wv = M.var[2];
  PolyQ xu = M.x.diff(u), xz = M.x.diff(zv), xw = M.x.diff(wv);
  PolyQ yu = M.y.diff(u), yz = M.y.diff(zv), yw = M.y.diff(wv);
  return {RatFnQ(xu * yw - xw * yu), RatFnQ(xu * yz - xz * yu), RatFnQ(xw * yz - xz * yw)};
}

// identity of closed forms along the flow: the pullback of dx^dy - dH^dz
// equals factor*(du^dw - dHt^dz); componentwise on (du^dw, du^dz, dw^dz)
TwoFormCheck extended_symplectic_check(const BlowupChartMap& M, const PolyQ& H,
                                       const PolyQ& Ht) {
  const VectorField& S = painleve_system(M.sys);
  VarId u = M.var[0], wv = M.var[2];
  PolyQ HF = H.subst_many({{S.x, M.x}, {S.y, M.y}});
  std::array<RatFnQ, 3> c = pullback_xy_form(M);
  TwoFormCheck out;
  out.residual[0] = c[0] - RatFnQ(PolyQ(M.factor));
  out.residual[1] = c[1] - RatFnQ(HF.diff(u)) + RatFnQ(Ht.diff(u).scale(M.factor));
  out.residual[2] = c[2] - RatFnQ(HF.diff(wv)) + RatFnQ(Ht.diff(wv).scale(M.factor));
  out.ok = out.residual[0].is_zero() && out.residual[1].is_zero() && out.residual[2].is_zero();
  return out;
}

SoicAtlas soic_atlas(int sys) {
  SoicAtlas out;
  out.sys = sys;
  out.base = painleve_system(sys);
  // one window per pole presentation: a +/- pair over each double point
  int n = sys == 4 ? 3 : 2;
  for (int k = 0; k < n; ++k) out.charts.push_back(painleve_coordinates(sys, k));
  return out;
}

SurfaceModel surface_invariants(bool boutroux) {
  SurfaceModel M;
  VarId u{}, sv{};
  PolyQ X, Y;
  std::optional<VarId> zv;
  if (!boutroux) {
    BlowupChartMap W3 = painleve_coordinates(1, 0);
    M.src = W3.var;
    u = W3.var[0];
    zv = W3.var[1];
    sv = W3.var[2];
    X = W3.x;
    Y = W3.y;
  } else {
    BoutrouxChart B = boutroux_chart(1, 0);
    M.src = B.var;
    u = B.var[0];
    sv = B.var[1];
    X = B.X;
    Y = B.Y;
  }
  // sheet swap of the double cover: flip the scale, solve for the u image
  std::map<VarId, PolyQ, VarLess> flip{{sv, PolyQ::var(sv).scale(Rat(-1))}};
  PolyQ A = X.coeff_of(u, 1);
  PolyQ B0 = X.coeff_of(u, 0);
  if (X.deg(u) != std::optional<long>(1)) throw std::logic_error("window pair is not linear in u");
  PolyQ au = (A * PolyQ::var(u) + B0 - B0.subst_many(flip)) * mono_inverse(A.subst_many(flip));
  for (int i = 0; i < 3; ++i) {
    VarId s = M.src[(size_t)i];
    M.action[(size_t)i] =
        s == u ? au : (s == sv ? PolyQ::var(s).scale(Rat(-1)) : PolyQ::var(s));
  }
  std::map<VarId, PolyQ, VarLess> act{{u, M.action[0]}, {M.src[1], M.action[1]},
                                      {M.src[2], M.action[2]}};
  if (X.subst_many(act) != X || Y.subst_many(act) != Y)
    throw std::logic_error("sheet swap fails to fix the original pair");
  for (int i = 0; i < 3; ++i)
    if (M.action[(size_t)i].subst_many(act) != PolyQ::var(M.src[(size_t)i]))
      throw std::logic_error("sheet swap is not an involution");
  // invariant generators and their quadric
  PolyQ pu = PolyQ::var(u), ps = PolyQ::var(sv);
  PolyQ zq = zv ? PolyQ::var(*zv) : PolyQ(1);
  M.U = pu * (pu * ps.pow(6) - zq * ps.pow(4) - PolyQ(4)) +
        (zq * ps).pow(2).scale(Rat(1, 4));
  M.V = pu * ps.pow(7) - zq * ps.pow(5).scale(Rat(1, 2)) - ps.scale(Rat(2));
  M.W = ps.pow(2);
  M.gen = {vid("U"), vid("V"), vid("W"), vid("z")};
  PolyQ gU = PolyQ::var(M.gen[0]), gV = PolyQ::var(M.gen[1]), gW = PolyQ::var(M.gen[2]);
  PolyQ gz = boutroux ? PolyQ(1) : PolyQ::var(M.gen[3]);
  M.relation = gV.pow(2) - gU * gW.pow(4) - gz * gW.pow(3).scale(Rat(2)) - gW.scale(Rat(4));
  for (const PolyQ* G : {&M.U, &M.V, &M.W})
    if (G->subst_many(act) != *G)
      throw std::logic_error("generator is not invariant under the sheet swap");
  std::map<VarId, PolyQ, VarLess> gsub{{M.gen[0], M.U}, {M.gen[1], M.V}, {M.gen[2], M.W}};
  if (!boutroux) gsub[M.gen[3]] = PolyQ::var(*zv);
  if (!M.relation.subst_many(gsub).is_zero())
    throw std::logic_error("generators miss their quadric relation");
  return M;
}

PolyQ reduce_quadric(const PolyQ& p, const SurfaceModel& M) {
  VarId Vg = M.gen[1];
  PolyQ R = PolyQ::var(Vg, 2) - M.relation;
  PolyQ cur = p;
  while (true) {
    auto d = cur.deg(Vg);
    if (!d || *d < 2) return cur;
    PolyQ next;
    for (long k = 0; k <= *d; ++k) {
      PolyQ ck = cur.coeff_of(Vg, k);
      if (ck.is_zero()) continue;
      PolyQ vp = k < 2 ? (k == 0 ? PolyQ(1) : PolyQ::var(Vg))
                       : (k == 2 ? R : PolyQ::var(Vg, k - 2) * R);
      next += ck * vp;
    }
    cur = next;
  }
}

SurfaceSystem surface_system_regularity(int sys) {
  SurfaceSystem out;
  if (sys != 1) {
    BlowupChartMap M = painleve_coordinates(sys, 0);
    out.gen = {M.var[0], M.var[2], M.var[1]};
    out.raw = M.sys_uw;
    out.raw_regular = true;
    out.reduced = {M.sys_uw[0].as_poly(), M.sys_uw[1].as_poly()};
    return out;
  }
  SurfaceModel SM = surface_invariants(false);
  BlowupChartMap M = painleve_coordinates(1, 0);
  VarId u = M.var[0], zv = M.var[1], wv = M.var[2];
  VarId Vg = SM.gen[1], Wg = SM.gen[2];
  out.gen = {Vg, Wg, zv};
  auto along = [&](const PolyQ& G) {
    return RatFnQ(G.diff(u)) * M.sys_uw[0] + RatFnQ(G.diff(wv)) * M.sys_uw[1] +
           RatFnQ(G.diff(zv));
  };
  RatFnQ dV = along(SM.V), dW = along(SM.W);
  // eliminate u through the V generator, then pair the scale into W
  PolyQ usol = (PolyQ::var(Vg) + PolyQ::mono(Rat(1, 2), Expo{{zv, 1}, {wv, 5}}) +
                PolyQ::mono(Rat(2), Expo{{wv, 1}}))
                   .mul_mono(Rat(1), Expo{{wv, -7}});
  auto all_even = [&](const PolyQ& q) {
    for (auto& [e, c] : q.terms()) {
      auto it = e.find(wv);
      if (it != e.end() && (it->second % 2)) return false;
    }
    return true;
  };
  auto fold = [&](const PolyQ& q) {
    PolyQ r2;
    for (auto& [e, c] : q.terms()) {
      Expo e2 = e;
      auto it = e2.find(wv);
      long we = it == e2.end() ? 0 : it->second;
      if (it != e2.end()) e2.erase(it);
      if (we) e2[Wg] = we / 2;
      r2 += PolyQ::mono(c, e2);
    }
    return r2;
  };
  auto to_model = [&](const RatFnQ& r) {
    RatFnQ t = subst_rf(r, u, RatFnQ(usol));
    PolyQ n = t.num(), d = t.den();
    if (!all_even(n) || !all_even(d)) {
      n = n.mul_mono(Rat(1), Expo{{wv, 1}});
      d = d.mul_mono(Rat(1), Expo{{wv, 1}});
    }
    if (!all_even(n) || !all_even(d))
      throw std::logic_error("surface system is not even in the cover scale");
    return RatFnQ(fold(n), fold(d));
  };
  out.raw[0] = to_model(dV);
  out.raw[1] = to_model(dW);
  auto w_regular = [&](const RatFnQ& r) {
    if (!r.is_poly()) return false;
    auto sm = r.as_poly().support_min();
    auto it = sm.find(Wg);
    return it == sm.end() || it->second >= 0;
  };
  out.raw_regular = w_regular(out.raw[0]) && w_regular(out.raw[1]);
  for (int i = 0; i < 2; ++i) {
    const RatFnQ& r = out.raw[(size_t)i];
    if (!r.is_poly())
      throw std::logic_error("surface system denominator is not a scale power");
    PolyQ red = reduce_quadric(r.as_poly(), SM);
    for (auto& [v, kk] : red.support_min())
      if (kk < 0) throw std::logic_error("quadric reduction left a pole on the divisor");
    out.reduced[(size_t)i] = red;
  }
  return out;
}

BoutrouxChart boutroux_chart(int sys, int k) {
  PointPick pk = pick_point(sys, k);
  const Chart& C = pk.atlas[(size_t)(pk.base_chart - 1)];
  PreBlowup pre = preblowup_change(C, pk.fp);
  BlowupChart b2 = weighted_blowup(pre, 2);
  BoutrouxChart out;
  out.sys = sys;
  out.point = pk.point;
  out.sign = pk.sign;
  out.var = b2.var;
  out.sys_uv = b2.reduced;
  // the dominant-scaled pair: base slot values over the window, scaled by the
  // weight of the slot against the z direction
  VarId uv = out.var[0], vv = out.var[1], wv = out.var[2];
  PolyQ Up = PolyQ::mono(Rat(1), Expo{{vv, pre.lam[0]}, {uv, 1}});
  PolyQ Vp = PolyQ::mono(Rat(1), Expo{{vv, pre.lam[1]}});
  PolyQ Wp = PolyQ::mono(Rat(1), Expo{{vv, pre.lam[2]}, {wv, 1}});
  PolyQ v1val = PolyQ(pre.fp[0]) + Up - pre.a * Vp - pre.b * Wp;
  PolyQ xslot = pk.base_chart == 1 ? PolyQ(1) : v1val;
  PolyQ yslot = pk.base_chart == 1 ? v1val : PolyQ(1);
  out.X = xslot.mul_mono(Rat(1), Expo{{vv, -C.w.p}});
  out.Y = yslot.mul_mono(Rat(1), Expo{{vv, -C.w.q}});
  return out;
}

BoutrouxAtlas boutroux_soic_atlas(int sys) {
  const VectorField& S = painleve_system(sys);
  NewtonWeights W = newton_face_weights(S);
  std::array<Chart, 3> atlas = make_charts(S, W);
  BoutrouxAtlas out;
  out.sys = sys;
  out.chart3 = atlas[2];
  std::array<RatFnQ, 3> nf = normalized_field(out.chart3);
  RatFnQ se{PolyQ::mono(Rat(W.s), Expo{{out.chart3.veps, 1}})};
  out.field = {nf[0] / se, nf[1] / se};
  // the scaling limit: minus the eps^2-cleared field on the divisor
  for (int i = 0; i < 2; ++i) {
    RatFnQ scaled = out.field[(size_t)i] *
                    RatFnQ(PolyQ::mono(Rat(W.s), Expo{{out.chart3.veps, 2}}));
    PolyQ p;
    if (!poly_part(scaled, &p)) throw std::logic_error("scaling limit is not polynomial");
    out.limit[(size_t)i] = p.subst(out.chart3.veps, PolyQ(0)).scale(Rat(-1));
  }
  out.ham = hamiltonian_from_field(out.limit[1], out.limit[0].scale(Rat(-1)),
                                   out.chart3.v1, out.chart3.v2);
  int n = sys == 4 ? 3 : 2;
  for (int kk = 0; kk < n; ++kk) out.charts.push_back(boutroux_chart(sys, kk));
  return out;
}

PolyQ hamiltonian_from_field(const PolyQ& hu, const PolyQ& hw, VarId u, VarId w) {
  for (const PolyQ* q : {&hu, &hw})
    for (auto& [v, k] : q->support_min())
      if (k < 0) throw std::invalid_argument("potential integration needs polynomial input");
  if (hu.diff(w) != hw.diff(u))
    throw std::domain_error("field components fail the closedness test");
  PolyQ H;
  auto fold = [&](const PolyQ& src, VarId raise) {
    for (auto& [e, c] : src.terms()) {
      auto fu = e.find(u), fw = e.find(w);
      long a = fu == e.end() ? 0 : fu->second;
      long b = fw == e.end() ? 0 : fw->second;
      Expo e2 = e;
      e2[raise] += 1;
      H += PolyQ::mono(c / Rat(a + b + 1), e2);
    }
  };
  fold(hu, u);
  fold(hw, w);
  if (H.diff(u) != hu || H.diff(w) != hw)
    throw std::logic_error("potential integration failed");
  return H;
}

RationalFormCheck rational_two_form_check(const NewtonWeights& w, int sys) {
  RationalFormCheck out;
  out.pq_multiple = (w.p + w.q) % w.s == 0;
  out.index_integer = (w.s + 1 + w.r) % w.s == 0;
  const VectorField& S = painleve_system(sys);
  std::array<Chart, 3> atlas;
  try {
    atlas = make_charts(S, w);
  } catch (const std::exception&) {
    out.pullback_rational = false;
    return out;
  }
  VarId tau = vid("_tau");
  auto residue_ok = [&](const PolyQ& p, long want) {
    for (auto& [e, c] : p.terms()) {
      auto it = e.find(tau);
      long k = it == e.end() ? 0 : it->second;
      if (((k % w.s) + w.s) % w.s != want) return false;
    }
    return true;
  };
  bool ok = true;
  for (const Chart& C : atlas) {
    PolyQ H = S.H.subst_many({{S.x, C.cover_x}, {S.y, C.cover_y}, {S.z, C.cover_z}});
    std::array<std::array<PolyQ, 2>, 2> forms{{{C.cover_x, C.cover_y}, {H, C.cover_z}}};
    for (const auto& f : forms) {
      PolyQ a1 = f[0].diff(C.v1), a2 = f[0].diff(C.v2), at = f[0].diff(tau);
      PolyQ b1 = f[1].diff(C.v1), b2 = f[1].diff(C.v2), bt = f[1].diff(tau);
      ok = ok && residue_ok(a1 * b2 - a2 * b1, 0) &&
           residue_ok(a1 * bt - at * b1, w.s - 1) && residue_ok(a2 * bt - at * b2, w.s - 1);
    }
  }
  out.pullback_rational = ok;
  return out;
}

}  // namespace painleve
