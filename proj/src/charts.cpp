#include "painleve/charts.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

namespace painleve {

namespace {

const char* kChartNames[4][3] = {
    {nullptr, nullptr, nullptr},
    {"Y1", "Z1", "e1"},
    {"X2", "Z2", "e2"},
    {"X3", "Y3", "e3"},
};

long exp_of(const Expo& e, VarId v) {
  auto it = e.find(v);
  return it == e.end() ? 0 : it->second;
}

// tau^s -> eps, assuming every tau exponent is a nonnegative multiple of s
PolyQ tau_to_eps(const PolyQ& p, VarId tau, VarId eps, long s) {
  PolyQ out;
  for (auto& [e, c] : p.terms()) {
    long te = exp_of(e, tau);
    if (te % s != 0 || te < 0) throw std::domain_error("cover power not a multiple of the descent order");
    Expo e2 = e;
    e2.erase(tau);
    if (te != 0) e2[eps] = exp_of(e2, eps) + te / s;
    out.add_term(e2, c);
  }
  return out;
}

PolyQ tau_pow(VarId tau, long k) { return PolyQ::mono(Rat(1), Expo{{tau, k}}); }

}  // namespace

Chart make_chart(const VectorField& S, const NewtonWeights& W, int index) {
  if (index < 1 || index > 3) throw std::invalid_argument("chart index");
  Chart C;
  C.sys = S.name;
  C.index = index;
  C.w = W;
  C.params = S.params;

  const long wts[3] = {W.p, W.q, W.r};
  C.m = wts[index - 1];
  VarId tau = vid("_tau");
  C.v1 = vid(kChartNames[index][0]);
  C.v2 = vid(kChartNames[index][1]);
  C.veps = vid(kChartNames[index][2]);

  // x = A tau^-p, y = B tau^-q, z = C tau^-r with the dominant coefficient 1
  PolyQ coeff[3];
  {
    int slot = 0;
    for (int j = 0; j < 3; ++j)
      coeff[j] = (j == index - 1) ? PolyQ(1) : PolyQ::var(slot++ == 0 ? C.v1 : C.v2);
  }
  PolyQ covers[3];
  for (int j = 0; j < 3; ++j) covers[j] = coeff[j] * tau_pow(tau, -wts[j]);
  C.cover_x = covers[0];
  C.cover_y = covers[1];
  C.cover_z = covers[2];

  std::map<VarId, PolyQ, VarLess> sub{{S.x, covers[0]}, {S.y, covers[1]}, {S.z, covers[2]}};
  // derivatives of (x, y, z) along the flow, written on the cover
  PolyQ hat[3] = {S.f.subst_many(sub), S.g.subst_many(sub), PolyQ(1)};
  const PolyQ& odot = hat[index - 1];

  // push the chart coordinates forward; V = v tau^w gives
  //   dV/dz = (dv/dz) tau^w - (w/m) V tau^m (do/dz),
  // and eps = tau^s gives deps/dz = -(s/m) tau^(s+m) (do/dz)
  PolyQ comp[3];
  {
    int slot = 0;
    for (int j = 0; j < 3; ++j) {
      if (j == index - 1) continue;
      PolyQ cv = PolyQ::var(slot == 0 ? C.v1 : C.v2);
      comp[slot] = hat[j] * tau_pow(tau, wts[j]) -
                   cv.scale(Rat(wts[j]) / Rat(C.m)) * tau_pow(tau, C.m) * odot;
      ++slot;
    }
    comp[2] = odot.scale(-Rat(W.s) / Rat(C.m)) * tau_pow(tau, W.s + C.m);
  }

  // all cover exponents must agree mod s, otherwise no time rescaling makes
  // the field a function of eps alone
  long minexp = LONG_MAX;
  long cls = -1;
  for (auto& cp : comp)
    for (auto& [e, c] : cp.terms()) {
      long te = exp_of(e, tau);
      long r = ((te % W.s) + W.s) % W.s;
      if (cls < 0) cls = r;
      else if (cls != r) throw std::domain_error("mixed cover residues: field does not descend");
      minexp = std::min(minexp, te);
    }
  if (cls < 0) throw std::domain_error("zero field");
  C.cleared = -minexp;

  PolyQ h[3];
  for (int i = 0; i < 3; ++i)
    h[i] = tau_to_eps(comp[i] * tau_pow(tau, C.cleared), tau, C.veps, W.s);

  Rat content(0);
  for (auto& hi : h)
    for (auto& [e, c] : hi.terms()) content = rat_gcd(content, c);
  for (auto& hi : h) hi = hi.scale(Rat(1) / content);
  C.h1 = h[0];
  C.h2 = h[1];
  C.h3 = h[2];

  // deck generator: tau -> zeta tau on the cover fixes the original variables
  // and multiplies each invariant coordinate by its own weight power
  int slot = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == index - 1) continue;
    C.deck[slot++] = ((wts[j] % C.m) + C.m) % C.m;
  }
  C.deck[2] = ((W.s % C.m) + C.m) % C.m;
  return C;
}

std::array<Chart, 3> make_charts(const VectorField& S, const NewtonWeights& W) {
  return {make_chart(S, W, 1), make_chart(S, W, 2), make_chart(S, W, 3)};
}

std::array<RatFnQ, 2> chart_ode(const Chart& C) {
  return {RatFnQ(C.h1) / RatFnQ(C.h3), RatFnQ(C.h2) / RatFnQ(C.h3)};
}

RatFnQ scale_unit(const Chart& C) {
  return RatFnQ(C.h3) / RatFnQ(PolyQ::var(C.veps).scale(Rat(C.w.s)));
}

std::array<RatFnQ, 3> normalized_field(const Chart& C) {
  RatFnQ u = scale_unit(C);
  return {RatFnQ(C.h1) / u, RatFnQ(C.h2) / u,
          RatFnQ(PolyQ::var(C.veps).scale(Rat(C.w.s)))};
}

PolyQ eval_point(const PolyQ& p, const PointQ& pt) {
  std::map<VarId, PolyQ, VarLess> sub;
  for (auto& [v, val] : pt) sub.emplace(v, PolyQ(val));
  return p.subst_many(sub);
}

Mat<PolyQ> field_jacobian(const Chart& C) {
  const PolyQ* h[3] = {&C.h1, &C.h2, &C.h3};
  VarId vs[3] = {C.v1, C.v2, C.veps};
  Mat<PolyQ> J(3, std::vector<PolyQ>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) J[i][j] = h[i]->diff(vs[j]);
  return J;
}

Mat<PolyQ> field_jacobian_at(const Chart& C, const PointQ& pt) {
  Mat<PolyQ> J = field_jacobian(C);
  for (auto& row : J)
    for (auto& e : row) e = eval_point(e, pt);
  return J;
}

Mat<PolyQ> normalized_jacobian_at(const Chart& C, const PointQ& pt) {
  // valid only where h1 = h2 = 0: the derivative of the unit then drops out
  assert(is_zero(eval_point(C.h1, pt)) && is_zero(eval_point(C.h2, pt)));
  RatFnQ u = scale_unit(C);
  PolyQ un = eval_point(u.num(), pt), ud = eval_point(u.den(), pt);
  assert(un.is_const() && ud.is_const() && !is_zero(un) && !is_zero(ud));
  Rat uval = un.coeff_const() / ud.coeff_const();

  Mat<PolyQ> J = field_jacobian_at(C, pt);
  for (int j = 0; j < 3; ++j) {
    J[0][j] = J[0][j].scale(Rat(1) / uval);
    J[1][j] = J[1][j].scale(Rat(1) / uval);
    J[2][j] = PolyQ(j == 2 ? Rat(C.w.s) : Rat(0));
  }
  return J;
}

bool deck_descends(const Chart& C) {
  if (C.m == 1) return true;
  const PolyQ* h[3] = {&C.h1, &C.h2, &C.h3};
  VarId vs[3] = {C.v1, C.v2, C.veps};
  for (int i = 0; i < 3; ++i) {
    long want = ((C.deck[i] + C.cleared) % C.m + C.m) % C.m;
    for (auto& [e, c] : h[i]->terms()) {
      long got = 0;
      for (int j = 0; j < 3; ++j) got += C.deck[j] * exp_of(e, vs[j]);
      if (((got % C.m) + C.m) % C.m != want) return false;
    }
  }
  return true;
}

bool deck_same_group(const Chart& C, const std::array<long, 3>& gen) {
  auto span = [&](const std::array<long, 3>& g) {
    std::set<std::array<long, 3>> out;
    for (long k = 0; k < C.m; ++k)
      out.insert({k * g[0] % C.m, k * g[1] % C.m, k * g[2] % C.m});
    return out;
  };
  return span(C.deck) == span(gen);
}

std::vector<std::array<Rat, 3>> deck_orbit(const Chart& C, const std::array<Rat, 3>& p) {
  std::set<std::array<Rat, 3>> seen;
  for (long k = 0; k < C.m; ++k) {
    std::array<Rat, 3> q;
    bool rational = true;
    for (int i = 0; i < 3 && rational; ++i) {
      long t = (k * C.deck[i]) % C.m;  // zeta^t multiplies coordinate i
      if (is_zero(p[i]) || t == 0) q[i] = p[i];
      else if (2 * t == C.m) q[i] = -p[i];
      else rational = false;
    }
    if (rational) seen.insert(q);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::array<Rat, 3>> transit(const Chart& from, const Chart& to,
                                        const std::array<Rat, 3>& p) {
  assert(from.sys == to.sys && from.w == to.w);
  const long wts[3] = {from.w.p, from.w.q, from.w.r};
  // coefficients of (x, y, z) against tau powers at the point
  Rat cf[3];
  {
    int slot = 0;
    for (int j = 0; j < 3; ++j)
      cf[j] = (j == from.index - 1) ? Rat(1) : p[slot++];
  }
  Rat target = cf[to.index - 1];
  if (is_zero(target)) return {};  // p sits where the target coordinate degenerates

  // the covers are related by tau_to = u tau_from with u^(-m_to) = target
  long mto = wts[to.index - 1];
  auto root = rat_kth_root(Rat(1) / target, mto);
  if (!root) return {};
  std::vector<Rat> units{*root};
  if (mto % 2 == 0 && !is_zero(*root)) units.push_back(-*root);

  std::vector<std::array<Rat, 3>> out;
  for (const Rat& u : units) {
    std::array<Rat, 3> q;
    int slot = 0;
    for (int j = 0; j < 3; ++j) {
      if (j == to.index - 1) continue;
      q[slot++] = cf[j] * rat_pow(u, wts[j]);
    }
    q[2] = p[2] * rat_pow(u, from.w.s);
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace painleve
