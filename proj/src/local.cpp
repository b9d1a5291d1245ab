#include "painleve/local.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace painleve {

namespace {

const double kPi = std::acos(-1.0);

// ---------------------------------------------------------------------------
// chart-variable grading: parameters carry no degree
// ---------------------------------------------------------------------------

long local_deg(const Expo& e, const std::array<VarId, 3>& vars) {
  long d = 0;
  for (VarId v : vars) {
    auto it = e.find(v);
    if (it != e.end()) d += it->second;
  }
  return d;
}

PolyQ local_part(const PolyQ& p, const std::array<VarId, 3>& vars, long d) {
  PolyQ out;
  for (const auto& [e, c] : p.terms())
    if (local_deg(e, vars) == d) out.add_term(e, c);
  return out;
}

PolyQ trunc_local(const PolyQ& p, const std::array<VarId, 3>& vars, long n) {
  PolyQ out;
  for (const auto& [e, c] : p.terms())
    if (local_deg(e, vars) <= n) out.add_term(e, c);
  return out;
}

// bucket the terms by their chart-variable monomial; values keep the parameters
std::map<Expo, PolyQ, ExpoLess> by_local(const PolyQ& p, const std::array<VarId, 3>& vars) {
  std::map<Expo, PolyQ, ExpoLess> out;
  for (const auto& [e, c] : p.terms()) {
    Expo loc, rest;
    for (const auto& [v, k] : e) {
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) loc[v] = k;
      else rest[v] = k;
    }
    out[loc] += PolyQ::mono(c, rest);
  }
  return out;
}

// ---------------------------------------------------------------------------
// dense univariate helpers for the boundary solver
// ---------------------------------------------------------------------------

// coefficients of a polynomial in the single variable v, constant term first
std::vector<Rat> dense_q(const PolyQ& p, VarId v) {
  std::vector<Rat> out;
  if (p.is_zero()) return out;
  assert(p.low(v).value() >= 0);
  out.assign((size_t)p.deg(v).value() + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    long k = 0;
    for (const auto& [vv, kk] : e) {
      assert(vv == v);
      k = kk;
    }
    out[(size_t)k] = c;
  }
  return out;
}

void dtrim(std::vector<Rat>& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

std::vector<Rat> dmod(std::vector<Rat> a, const std::vector<Rat>& b) {
  dtrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
    a.pop_back();
    dtrim(a);
  }
  return a;
}

std::vector<Rat> dgcd(std::vector<Rat> a, std::vector<Rat> b) {
  dtrim(a);
  dtrim(b);
  while (!b.empty()) {
    std::vector<Rat> r = dmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c = c / lead;
  }
  return a;
}

// divide out (v - r) as often as it divides exactly
std::vector<Rat> deflate_root(std::vector<Rat> a, const Rat& r) {
  while (a.size() > 1) {
    std::vector<Rat> q(a.size() - 1, Rat(0));
    q[a.size() - 2] = a.back();
    for (size_t k = a.size() - 2; k >= 1; --k) q[k - 1] = a[k] + r * q[k];
    Rat rem = a[0] + r * q[0];
    if (!is_zero(rem)) break;
    a = std::move(q);
  }
  return a;
}

PolyQ from_dense(const std::vector<Rat>& a, VarId v) {
  PolyQ out;
  for (size_t k = 0; k < a.size(); ++k)
    if (!is_zero(a[k])) out += PolyQ::var(v, (long)k).scale(a[k]);
  return out;
}

// integer-coprime coefficients with a positive leading one
PolyQ primitive(const PolyQ& p) {
  if (p.is_zero()) return p;
  PolyQ out = p.scale(Rat(1) / p.content());
  if (out.leading_coeff() < 0) out = -out;
  return out;
}

// all roots at double precision, simultaneous Newton iteration
std::vector<std::complex<double>> dk_roots(std::vector<std::complex<double>> c) {
  while (c.size() > 1 && std::abs(c.back()) < 1e-13) c.pop_back();
  std::vector<std::complex<double>> x;
  if (c.size() <= 1) return x;
  std::complex<double> lead = c.back();
  for (auto& ci : c) ci /= lead;
  size_t n = c.size() - 1;
  x.resize(n);
  std::complex<double> seed(0.4, 0.9), acc(1.0, 0.0);
  for (size_t i = 0; i < n; ++i) {
    acc *= seed;
    x[i] = acc;
  }
  auto eval = [&](std::complex<double> t) {
    std::complex<double> v(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
  };
  for (int it = 0; it < 500; ++it) {
    double moved = 0.0;
    for (size_t i = 0; i < n; ++i) {
      std::complex<double> d(1.0, 0.0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) d *= (x[i] - x[j]);
      std::complex<double> step = eval(x[i]) / d;
      x[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return x;
}

// ---------------------------------------------------------------------------
// common zeros of the two boundary polynomials in a single chart
// ---------------------------------------------------------------------------

struct BoundarySol {
  bool rational = false;
  std::array<Rat, 2> uv{};
  std::vector<PolyQ> relations;
  std::vector<std::array<std::complex<double>, 2>> approx;
};

std::vector<BoundarySol> solve_boundary(const PolyQ& b1, const PolyQ& b2, VarId u, VarId v) {
  if (b1.is_zero() || b2.is_zero())
    throw std::runtime_error("boundary fixed points are not isolated");
  std::vector<BoundarySol> out;

  bool b1v = b1.has_var(v), b2v = b2.has_var(v);
  if (!b1v && !b2v) {
    // both constrain u alone; any common root drags a whole v-line along
    std::vector<Rat> g = dgcd(dense_q(b1, u), dense_q(b2, u));
    if (g.size() > 1) throw std::runtime_error("boundary fixed points are not isolated");
    return out;
  }

  PolyQ R;  // eliminant in u alone
  if (b1v && b2v) R = resultant(b1, b2, v);
  else if (!b1v) R = b1;
  else R = b2;
  if (R.is_zero()) throw std::runtime_error("boundary equations share a component");
  if (!R.has_var(u)) return out;  // nonzero constant: no common zeros

  std::vector<Rat> rcoef = dense_q(R, u);
  std::vector<Rat> rats = rational_roots(R, u);
  for (const Rat& ru : rats) {
    // strip every copy, spurious or not: the leftover factor is root-free
    auto has_root = [&](const std::vector<Rat>& c) {
      Rat acc(0);
      for (size_t i = c.size(); i-- > 0;) acc = acc * ru + c[i];
      return is_zero(acc);
    };
    while (rcoef.size() > 1 && has_root(rcoef)) rcoef = deflate_root(std::move(rcoef), ru);
  }
  for (const Rat& ru : rats) {
    PolyQ g1 = b1.subst(u, PolyQ(ru));
    PolyQ g2 = b2.subst(u, PolyQ(ru));
    if (g1.is_zero() && g2.is_zero())
      throw std::runtime_error("boundary fixed points are not isolated");
    PolyQ G;
    if (g1.is_zero()) G = g2;
    else if (g2.is_zero()) G = g1;
    else G = from_dense(dgcd(dense_q(g1, v), dense_q(g2, v)), v);
    if (!G.has_var(v)) continue;  // spurious eliminant root

    std::vector<Rat> gd = dense_q(G, v);
    for (const Rat& rv : rational_roots(G, v)) {
      BoundarySol s;
      s.rational = true;
      s.uv = {ru, rv};
      out.push_back(std::move(s));
      gd = deflate_root(std::move(gd), rv);
    }
    if (gd.size() > 1) {
      // leftover v-factor with no rational root at this u
      BoundarySol s;
      s.relations = {primitive(PolyQ::var(u) - PolyQ(ru)), primitive(from_dense(gd, v))};
      std::vector<std::complex<double>> cd(gd.size());
      for (size_t i = 0; i < gd.size(); ++i) cd[i] = gd[i].get_d();
      for (const auto& rv : dk_roots(cd)) s.approx.push_back({ru.get_d(), rv});
      out.push_back(std::move(s));
    }
  }

  if (rcoef.size() > 1) {
    // the part of the eliminant with no rational root
    PolyQ Rdef = primitive(from_dense(rcoef, u));
    BoundarySol s;
    s.relations = {Rdef, primitive(b1), primitive(b2)};
    std::vector<std::complex<double>> cd(rcoef.size());
    for (size_t i = 0; i < rcoef.size(); ++i) cd[i] = rcoef[i].get_d();
    for (const auto& us : dk_roots(cd)) {
      // pick the companion equation that still varies in v at this u
      auto slice = [&](const PolyQ& b) {
        long d = b.deg(v).value();
        std::vector<std::complex<double>> cs((size_t)d + 1);
        std::map<VarId, std::complex<double>, VarLess> pt{{u, us}};
        for (long k = 0; k <= d; ++k) cs[(size_t)k] = b.coeff_of(v, k).eval_c(pt);
        return cs;
      };
      std::vector<std::complex<double>> pv = b1v ? slice(b1) : slice(b2);
      double mag = 0.0;
      for (const auto& c : pv) mag = std::max(mag, std::abs(c));
      if (mag < 1e-9 && b1v && b2v) pv = slice(b2);
      for (const auto& vs : dk_roots(pv)) {
        std::map<VarId, std::complex<double>, VarLess> pt{{u, us}, {v, vs}};
        if (std::abs(b1.eval_c(pt)) < 1e-7 && std::abs(b2.eval_c(pt)) < 1e-7)
          s.approx.push_back({us, vs});
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

// numeric mirror of the rational chart transition, all root branches
std::vector<std::array<std::complex<double>, 3>> transit_numeric(
    const Chart& from, const Chart& to, const std::array<std::complex<double>, 3>& p) {
  const long wts[3] = {from.w.p, from.w.q, from.w.r};
  std::complex<double> cf[3];
  {
    int slot = 0;
    for (int j = 0; j < 3; ++j) cf[j] = (j == from.index - 1) ? 1.0 : p[slot++];
  }
  std::complex<double> target = cf[to.index - 1];
  std::vector<std::array<std::complex<double>, 3>> out;
  if (std::abs(target) < 1e-12) return out;
  long mto = wts[to.index - 1];
  std::complex<double> base = std::pow(1.0 / target, 1.0 / (double)mto);
  for (long br = 0; br < mto; ++br) {
    double ang = 2.0 * kPi * (double)br / (double)mto;
    std::complex<double> uu = base * std::complex<double>(std::cos(ang), std::sin(ang));
    std::array<std::complex<double>, 3> q;
    int slot = 0;
    for (int j = 0; j < 3; ++j) {
      if (j == to.index - 1) continue;
      q[slot++] = cf[j] * cpow_int(uu, wts[j]);
    }
    q[2] = p[2] * cpow_int(uu, from.w.s);
    out.push_back(q);
  }
  return out;
}

bool close3(const std::array<std::complex<double>, 3>& a, const std::array<Rat, 3>& b,
            double tol) {
  for (int i = 0; i < 3; ++i)
    if (std::abs(a[i] - std::complex<double>(b[i].get_d(), 0.0)) > tol) return false;
  return true;
}

bool coords_less(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace

int BoundaryCatalog::movable_count() const {
  int n = 0;
  for (const auto& p : points) n += p.movable ? 1 : 0;
  return n;
}

int BoundaryCatalog::irregular_count() const { return (int)points.size() - movable_count(); }

BoundaryCatalog find_fixed_points_at_infinity(const std::array<Chart, 3>& atlas) {
  struct Group {
    int chart = 0;
    std::vector<std::array<Rat, 3>> orbit;  // cover representatives, sorted
    bool movable = false;
  };
  std::vector<Group> groups;
  std::vector<AlgebraicAppearance> branches;
  std::vector<bool> branch_movable;

  for (const Chart& C : atlas) {
    PolyQ b1 = C.h1.subst(C.veps, PolyQ(0));
    PolyQ b2 = C.h2.subst(C.veps, PolyQ(0));
    // the boundary system never keeps a parameter: those enter with eps
    for (VarId v : b1.vars_used())
      if (var_is_param(v)) throw std::logic_error("parameter survived on the boundary divisor");
    for (VarId v : b2.vars_used())
      if (var_is_param(v)) throw std::logic_error("parameter survived on the boundary divisor");
    std::set<std::array<Rat, 3>> taken;
    for (BoundarySol& s : solve_boundary(b1, b2, C.v1, C.v2)) {
      if (s.rational) {
        std::array<Rat, 3> pt{s.uv[0], s.uv[1], Rat(0)};
        if (taken.count(pt)) continue;
        Group g;
        g.chart = C.index;
        g.orbit = deck_orbit(C, pt);
        for (const auto& q : g.orbit) taken.insert(q);
        // on the z-slope the point pins the pole location; elsewhere z itself
        // runs off, so the singularity is fixed
        g.movable = C.index != 3 && is_zero(pt[1]);
        groups.push_back(std::move(g));
      } else {
        AlgebraicAppearance ap;
        ap.chart = C.index;
        ap.relations = std::move(s.relations);
        bool mov = C.index != 3;
        for (const auto& a : s.approx) {
          ap.approx.push_back({a[0], a[1], std::complex<double>(0.0, 0.0)});
          if (std::abs(a[1]) > 1e-9) mov = false;
        }
        branches.push_back(std::move(ap));
        branch_movable.push_back(mov);
      }
    }
  }

  // glue the charts: groups reachable through a rational transition are one point
  std::vector<size_t> parent(groups.size());
  std::iota(parent.begin(), parent.end(), (size_t)0);
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < groups.size(); ++i)
    for (size_t j = 0; j < groups.size(); ++j) {
      if (i == j || groups[i].chart == groups[j].chart) continue;
      const Chart& from = atlas[(size_t)groups[i].chart - 1];
      const Chart& to = atlas[(size_t)groups[j].chart - 1];
      bool hit = false;
      for (const auto& m : groups[i].orbit) {
        for (const auto& im : transit(from, to, m))
          if (std::find(groups[j].orbit.begin(), groups[j].orbit.end(), im) !=
              groups[j].orbit.end()) {
            hit = true;
            break;
          }
        if (hit) break;
      }
      if (hit) parent[find(i)] = find(j);
    }

  std::map<size_t, std::vector<size_t>> classes;
  for (size_t i = 0; i < groups.size(); ++i) classes[find(i)].push_back(i);

  BoundaryCatalog cat;
  std::vector<size_t> rec_of_group(groups.size(), 0);
  for (const auto& [root, members] : classes) {
    FixedPointRecord rec;
    rec.movable = groups[members[0]].movable;
    for (size_t gi : members)
      if (groups[gi].movable != rec.movable)
        throw std::logic_error("transition maps merged points of different type");
    // canonical view: movable points read best against the y-slope, fixed
    // singularities against the z-slope
    std::vector<int> pref = rec.movable ? std::vector<int>{2, 1} : std::vector<int>{3, 2, 1};
    size_t canon = members[0];
    for (int want : pref) {
      bool found = false;
      for (size_t gi : members)
        if (groups[gi].chart == want) {
          canon = gi;
          found = true;
          break;
        }
      if (found) break;
    }
    rec.chart = groups[canon].chart;
    rec.orbit = groups[canon].orbit;
    rec.coords = rec.orbit.back();
    for (size_t gi : members) rec.reps.push_back({groups[gi].chart, groups[gi].orbit.back()});
    std::sort(rec.reps.begin(), rec.reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t gi : members) rec_of_group[gi] = cat.points.size();
    cat.points.push_back(std::move(rec));
  }

  // a branch that is only algebraic here may still be a rational point elsewhere
  for (size_t bi = 0; bi < branches.size(); ++bi) {
    const AlgebraicAppearance& br = branches[bi];
    const Chart& from = atlas[(size_t)br.chart - 1];
    long matched = -1;
    auto scan_chart = [&](int chart, const std::array<std::complex<double>, 3>& q) {
      for (size_t gi = 0; gi < groups.size() && matched < 0; ++gi) {
        if (groups[gi].chart != chart) continue;
        for (const auto& m : groups[gi].orbit)
          if (close3(q, m, 1e-7)) {
            matched = (long)rec_of_group[gi];
            break;
          }
      }
    };
    for (const auto& P : br.approx) {
      for (const Chart& to : atlas) {
        if (to.index == br.chart || matched >= 0) continue;
        for (const auto& im : transit_numeric(from, to, P)) {
          scan_chart(to.index, im);
          if (matched >= 0) break;
        }
      }
      // deck turns inside the home chart
      for (long k = 0; k < from.m && matched < 0; ++k) {
        std::array<std::complex<double>, 3> q;
        for (int t = 0; t < 3; ++t) {
          double ang = 2.0 * kPi * (double)((k * from.deck[t]) % from.m) / (double)from.m;
          q[t] = P[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        scan_chart(br.chart, q);
      }
      if (matched >= 0) break;
    }
    if (matched >= 0) {
      if (cat.points[(size_t)matched].movable != branch_movable[bi])
        throw std::logic_error("algebraic branch landed on a point of different type");
      cat.points[(size_t)matched].algebraic.push_back(br);
    } else {
      FixedPointRecord rec;
      rec.movable = branch_movable[bi];
      rec.chart = br.chart;
      rec.coords = {Rat(0), Rat(0), Rat(0)};
      rec.algebraic.push_back(br);
      cat.points.push_back(std::move(rec));
    }
  }

  std::sort(cat.points.begin(), cat.points.end(),
            [](const FixedPointRecord& a, const FixedPointRecord& b) {
              if (a.movable != b.movable) return a.movable;
              if (a.chart != b.chart) return a.chart < b.chart;
              return coords_less(a.coords, b.coords);
            });
  return cat;
}

CharacteristicIndex characteristic_index(const Chart& C, const std::array<Rat, 3>& fp) {
  PointQ pt;
  pt[C.v1] = fp[0];
  pt[C.v2] = fp[1];
  pt[C.veps] = fp[2];
  // the time unit must stay invertible at the point, otherwise dividing the
  // field by it is meaningless there
  RatFnQ unit = scale_unit(C);
  PolyQ un = eval_point(unit.num(), pt);
  PolyQ ud = eval_point(unit.den(), pt);
  if (!un.is_const() || !ud.is_const() || is_zero(un.coeff_const()) || is_zero(ud.coeff_const()))
    throw std::domain_error("time unit degenerates at the fixed point");
  Mat<PolyQ> J = normalized_jacobian_at(C, pt);
  CharacteristicIndex out;
  out.jacobian = J;
  for (int i = 0; i < 3; ++i) {
    assert(J[i][i].is_const());
    out.lambda[i] = J[i][i].coeff_const();
    for (int j = 0; j < i; ++j) assert(J[i][j].is_zero());
  }
  return out;
}

PoincareReport check_poincare_conditions(const std::array<Rat, 3>& lambda) {
  PoincareReport out;
  int sgn = 0;
  for (const Rat& l : lambda) {
    int s = l > 0 ? 1 : (l < 0 ? -1 : 0);
    if (s == 0 || (sgn != 0 && s != sgn)) {
      out.poincare_domain = false;
      return out;  // without a common sign the search below has no finite bound
    }
    sgn = s;
  }
  Rat amin = lambda[0] < 0 ? Rat(-lambda[0]) : lambda[0];
  Rat amax = amin;
  for (int i = 1; i < 3; ++i) {
    Rat a = lambda[i] < 0 ? Rat(-lambda[i]) : lambda[i];
    if (a < amin) amin = a;
    if (amax < a) amax = a;
  }
  long bound = 2;
  while (Rat(bound) * amin <= amax) ++bound;
  for (long t = 2; t <= bound; ++t)
    for (long i = 0; i <= t; ++i)
      for (long j = 0; i + j <= t; ++j) {
        long k = t - i - j;
        Rat dot = lambda[0] * Rat(i) + lambda[1] * Rat(j) + lambda[2] * Rat(k);
        for (int c = 0; c < 3; ++c)
          if (dot == lambda[c]) out.resonances.push_back(Resonance{{i, j, k}, c});
      }
  std::sort(out.resonances.begin(), out.resonances.end());
  out.nonresonant = out.resonances.empty();
  return out;
}

std::array<PolyQ, 3> taylor_normalized_field(const Chart& C, const std::array<Rat, 3>& fp,
                                             int N) {
  if (!is_zero(fp[2]))
    throw std::invalid_argument("expansion points must sit on the boundary divisor");
  std::array<VarId, 3> vars{C.v1, C.v2, C.veps};
  std::array<RatFnQ, 3> nf = normalized_field(C);
  std::map<VarId, PolyQ, VarLess> shift;
  for (int i = 0; i < 3; ++i) shift[vars[i]] = PolyQ::var(vars[i]) + PolyQ(fp[(size_t)i]);
  std::array<PolyQ, 3> out;
  for (int i = 0; i < 2; ++i) {
    PolyQ num = nf[(size_t)i].num();
    PolyQ den = nf[(size_t)i].den();
    // monomial time units end up as negative powers in the numerator; shift
    // them back into the denominator so both pieces expand as power series
    Expo neg;
    for (const auto& [v, k] : num.support_min())
      if (k < 0) neg[v] = -k;
    if (!neg.empty()) {
      num = num.mul_mono(Rat(1), neg);
      den = den.mul_mono(Rat(1), neg);
    }
    num = num.subst_many(shift);
    den = den.subst_many(shift);
    PolyQ d0 = local_part(den, vars, 0);
    if (!d0.is_const() || is_zero(d0.coeff_const()))
      throw std::domain_error("field is not analytic at the fixed point");
    // den = c0 (1 - g) with g free of constant term: expand the reciprocal
    Rat c0 = d0.coeff_const();
    PolyQ g = (PolyQ(c0) - den).scale(Rat(1) / c0);
    PolyQ inv(Rat(1) / c0), gp(1);
    for (int k = 1; k <= N; ++k) {
      gp = trunc_local(gp * g, vars, N);
      if (gp.is_zero()) break;
      inv += gp.scale(Rat(1) / c0);
    }
    out[(size_t)i] = trunc_local(num * inv, vars, N);
  }
  out[2] = PolyQ::var(C.veps).scale(Rat(C.w.s));
  return out;
}

Linearization poincare_linearize_field(const std::array<PolyQ, 3>& F,
                                       const std::array<VarId, 3>& vars, const Mat<PolyQ>& J,
                                       int N) {
  Linearization L;
  L.chart = 0;
  L.fp = {Rat(0), Rat(0), Rat(0)};
  L.vars = vars;
  L.J = J;
  L.F = F;
  L.N = N;
  for (int i = 0; i < 3; ++i) {
    assert(J[(size_t)i][(size_t)i].is_const());
    L.lambda[(size_t)i] = J[(size_t)i][(size_t)i].coeff_const();
    for (int j = 0; j < i; ++j) assert(J[(size_t)i][(size_t)j].is_zero());
  }

  const PolyQ V1 = PolyQ::var(vars[0]), V2 = PolyQ::var(vars[1]), V3 = PolyQ::var(vars[2]);
  std::array<PolyQ, 3> lin;
  for (int i = 0; i < 3; ++i) {
    lin[(size_t)i] = PolyQ(0);
    lin[(size_t)i] += J[(size_t)i][0] * V1;
    lin[(size_t)i] += J[(size_t)i][1] * V2;
    lin[(size_t)i] += J[(size_t)i][2] * V3;
  }
  for (int i = 0; i < 3; ++i) {
    if (!local_part(F[(size_t)i], vars, 0).is_zero() ||
        !(local_part(F[(size_t)i], vars, 1) == lin[(size_t)i]))
      throw std::invalid_argument("field jet disagrees with the supplied linear part");
  }
  if (!(F[2] == lin[2]))  // the last component must stay linear throughout
    throw std::invalid_argument("vertical component of the field is not linear");

  PolyQ phi1, phi2h;  // phi2h carries the last variable as an overall factor

  auto residual2 = [&](const PolyQ& p1, const PolyQ& p2) {
    PolyQ Phi1 = V1 + p1, Phi2 = V2 + p2;
    std::array<PolyQ, 2> R;
    R[0] = Phi1.diff(vars[0]) * F[0] + Phi1.diff(vars[1]) * F[1] + Phi1.diff(vars[2]) * F[2] -
           (J[0][0] * Phi1 + J[0][1] * Phi2 + J[0][2] * V3);
    R[1] = Phi2.diff(vars[0]) * F[0] + Phi2.diff(vars[1]) * F[1] + Phi2.diff(vars[2]) * F[2] -
           (J[1][1] * Phi2 + J[1][2] * V3);
    return R;
  };

  auto mono_of = [&](const Expo& e) {
    std::array<long, 3> m{};
    for (int i = 0; i < 3; ++i) {
      auto it = e.find(vars[(size_t)i]);
      m[(size_t)i] = it == e.end() ? 0 : it->second;
    }
    return m;
  };
  auto resonant = [&](const Expo& e, int comp) {
    std::array<long, 3> m = mono_of(e);
    Rat dot = L.lambda[0] * Rat(m[0]) + L.lambda[1] * Rat(m[1]) + L.lambda[2] * Rat(m[2]);
    return dot == L.lambda[(size_t)comp];
  };

  for (long d = 2; d <= N; ++d) {
    auto R = residual2(phi1, phi2h);
    PolyQ R1 = local_part(R[0], vars, d);
    PolyQ R2 = local_part(R[1], vars, d);
    for (const auto& [e, c] : R2.terms())
      if (e.find(vars[2]) == e.end())  // nothing should need cancelling off the eps slice
        throw std::logic_error("second-component residual escapes the vertical ideal");

    // degree-d monomials; the second component only ever needs the eps-divisible ones
    std::vector<Expo> m1, m2;
    for (long i = 0; i <= d; ++i)
      for (long j = 0; i + j <= d; ++j) {
        long k = d - i - j;
        Expo e;
        if (i) e[vars[0]] = i;
        if (j) e[vars[1]] = j;
        if (k) e[vars[2]] = k;
        m1.push_back(e);
        if (k >= 1) m2.push_back(e);
      }
    std::map<Expo, size_t, ExpoLess> row1, row2;
    for (const Expo& e : m1) row1[e] = row1.size();
    for (const Expo& e : m2) row2[e] = m1.size() + row2.size();
    size_t rows = m1.size() + m2.size(), cols = rows;
    Mat<RatFnQ> A(rows, std::vector<RatFnQ>(cols, RatFnQ(0)));
    std::vector<RatFnQ> b(rows, RatFnQ(0));

    for (const auto& [e, cf] : by_local(R1, vars)) b[row1.at(e)] = RatFnQ(-cf);
    for (const auto& [e, cf] : by_local(R2, vars)) b[row2.at(e)] = RatFnQ(-cf);

    auto bracket = [&](const Expo& e, const Rat& lam) {
      // directional derivative along the linear field minus the eigenvalue
      PolyQ t = PolyQ::mono(Rat(1), e);
      PolyQ out = t.diff(vars[0]) * lin[0] + t.diff(vars[1]) * lin[1] + t.diff(vars[2]) * lin[2];
      out -= t.scale(lam);
      return out;
    };
    for (size_t c = 0; c < m1.size(); ++c)
      for (const auto& [e, cf] : by_local(bracket(m1[c], L.lambda[0]), vars))
        A[row1.at(e)][c] = RatFnQ(cf);
    for (size_t c = 0; c < m2.size(); ++c) {
      size_t col = m1.size() + c;
      for (const auto& [e, cf] : by_local(bracket(m2[c], L.lambda[1]), vars))
        A[row2.at(e)][col] = RatFnQ(cf);
      // the first component sees the second correction through the coupling entry
      PolyQ cpl = -(J[0][1] * PolyQ::mono(Rat(1), m2[c]));
      for (const auto& [e, cf] : by_local(cpl, vars)) A[row1.at(e)][col] = RatFnQ(cf);
    }

    LinSolve<RatFnQ> sol = solve_linear(A, b);
    if (!sol.consistent) {
      // drop the rows whose eigenvalue combination collapses and retry
      std::vector<Expo> dropped;
      Mat<RatFnQ> A2;
      std::vector<RatFnQ> b2;
      auto keep = [&](const std::map<Expo, size_t, ExpoLess>& rowmap, int comp) {
        for (const auto& [e, r] : rowmap) {
          if (resonant(e, comp)) {
            if (comp == 0) dropped.push_back(e);
            continue;
          }
          A2.push_back(A[r]);
          b2.push_back(b[r]);
        }
      };
      keep(row1, 0);
      keep(row2, 1);
      LinSolve<RatFnQ> sol2 = solve_linear(A2, b2);
      if (sol2.consistent) {
        std::ostringstream os;
        os << "resonant obstruction at degree " << d << ":";
        for (const Expo& e : dropped) os << ' ' << expo_str(e);
        throw std::domain_error(os.str());
      }
      throw std::logic_error("homological equation failed outside the resonant rows");
    }
    for (const auto& [e, r] : row1)
      if (resonant(e, 0)) L.resonances.push_back(Resonance{mono_of(e), 0});
    for (const auto& [e, r] : row2)
      if (resonant(e, 1)) L.resonances.push_back(Resonance{mono_of(e), 1});

    for (size_t c = 0; c < m1.size(); ++c) {
      RatFnQ val = sol.particular[c];
      if (val.is_zero()) continue;
      assert(val.is_poly());
      phi1 += val.as_poly() * PolyQ::mono(Rat(1), m1[c]);
    }
    for (size_t c = 0; c < m2.size(); ++c) {
      RatFnQ val = sol.particular[m1.size() + c];
      if (val.is_zero()) continue;
      assert(val.is_poly());
      phi2h += val.as_poly() * PolyQ::mono(Rat(1), m2[c]);
    }
  }

  auto R = residual2(phi1, phi2h);
  if (!trunc_local(R[0], vars, N).is_zero() || !trunc_local(R[1], vars, N).is_zero())
    throw std::logic_error("conjugation residual survives below the cutoff degree");

  L.phi1 = phi1;
  if (!phi2h.is_zero()) {
    for (const auto& [e, c] : phi2h.terms())
      if (e.find(vars[2]) == e.end())
        throw std::logic_error("second correction escaped the vertical ideal");
    Expo down;
    down[vars[2]] = -1;
    L.phi2 = phi2h.mul_mono(Rat(1), down);
  }
  std::sort(L.resonances.begin(), L.resonances.end());
  return L;
}

Linearization poincare_linearize(const Chart& C, const std::array<Rat, 3>& fp, int N) {
  CharacteristicIndex ci = characteristic_index(C, fp);
  std::array<PolyQ, 3> F = taylor_normalized_field(C, fp, N);
  Linearization L = poincare_linearize_field(F, {C.v1, C.v2, C.veps}, ci.jacobian, N);
  L.chart = C.index;
  L.fp = fp;
  return L;
}

std::array<PolyQ, 3> conjugacy_residual(const Linearization& L) {
  const PolyQ V1 = PolyQ::var(L.vars[0]), V2 = PolyQ::var(L.vars[1]),
              V3 = PolyQ::var(L.vars[2]);
  std::array<PolyQ, 3> Phi{V1 + L.phi1, V2 + L.phi2 * V3, V3};
  std::array<PolyQ, 3> R;
  for (int i = 0; i < 3; ++i) {
    PolyQ r;
    for (int k = 0; k < 3; ++k) r += Phi[(size_t)i].diff(L.vars[(size_t)k]) * L.F[(size_t)k];
    for (int j = 0; j < 3; ++j) r -= L.J[(size_t)i][(size_t)j] * Phi[(size_t)j];
    R[(size_t)i] = trunc_local(r, L.vars, L.N);
  }
  return R;
}

bool resonant_terms_present(const Chart& C, const std::array<Rat, 3>& fp) {
  CharacteristicIndex ci = characteristic_index(C, fp);
  PoincareReport rep = check_poincare_conditions(ci.lambda);
  if (rep.resonances.empty()) return false;
  long deep = 0;
  for (const auto& r : rep.resonances)
    deep = std::max(deep, r.m[0] + r.m[1] + r.m[2]);
  try {
    poincare_linearize(C, fp, (int)deep);
  } catch (const std::domain_error&) {
    return true;  // an obstructed homological step is exactly a surviving term
  }
  return false;
}

PolyQ derive_along(const PolyQ& p, const std::vector<std::pair<VarId, PolyQ>>& field) {
  PolyQ out;
  for (const auto& [v, g] : field) out += p.diff(v) * g;
  return out;
}

std::array<PolyQ, 2> linear_model_integrals(const Mat<PolyQ>& J, VarId u, VarId v, VarId eta) {
  long l[3];
  for (int i = 0; i < 3; ++i) {
    if (!J[(size_t)i][(size_t)i].is_const())
      throw std::invalid_argument("eigenvalues must be numeric");
    l[i] = rat_long(J[(size_t)i][(size_t)i].coeff_const());
  }
  if (l[0] == l[1] || l[0] == l[2] || l[1] == l[2])
    throw std::domain_error("model integrals need distinct eigenvalues");
  PolyQ gamma = J[1][2].scale(Rat(1) / Rat(l[1] - l[2]));
  PolyQ mu = J[0][1].scale(Rat(1) / Rat(l[0] - l[1]));
  PolyQ delta = (J[0][2] + mu * J[1][2]).scale(Rat(1) / Rat(l[0] - l[2]));
  PolyQ C1 = PolyQ::var(v) * PolyQ::var(eta, -l[1]) + gamma * PolyQ::var(eta, l[2] - l[1]);
  PolyQ C2 = (PolyQ::var(u) + mu * PolyQ::var(v)) * PolyQ::var(eta, -l[0]) +
             delta * PolyQ::var(eta, l[2] - l[0]);
  return {C1, C2};
}

LocalIntegrals local_integrals(const Linearization& L, const Chart& C) {
  if (L.chart != C.index)
    throw std::invalid_argument("linearization was computed in a different chart");
  LocalIntegrals out;
  out.w = vid("w");
  VarId x = vid("x"), y = vid("y"), z = vid("z");

  // chart coordinates written in the source variables along the cover scale w
  std::map<VarId, PolyQ, VarLess> sub;
  auto piece = [&](VarId src, long wt, const Rat& off) {
    return PolyQ::var(src) * PolyQ::var(out.w, wt) - PolyQ(off);
  };
  switch (C.index) {
    case 1:
      sub[L.vars[0]] = piece(y, C.w.q, L.fp[0]);
      sub[L.vars[1]] = piece(z, C.w.r, L.fp[1]);
      break;
    case 2:
      sub[L.vars[0]] = piece(x, C.w.p, L.fp[0]);
      sub[L.vars[1]] = piece(z, C.w.r, L.fp[1]);
      break;
    default:
      sub[L.vars[0]] = piece(x, C.w.p, L.fp[0]);
      sub[L.vars[1]] = piece(y, C.w.q, L.fp[1]);
      break;
  }
  sub[L.vars[2]] = PolyQ::var(out.w, C.w.s);

  PolyQ Phi1 = sub.at(L.vars[0]) + L.phi1.subst_many(sub);
  PolyQ Phi2 = sub.at(L.vars[1]) + (L.phi2 * PolyQ::var(L.vars[2])).subst_many(sub);

  long l1 = rat_long(L.lambda[0]), l2 = rat_long(L.lambda[1]), l3 = rat_long(L.lambda[2]);
  PolyQ gamma = L.J[1][2].scale(Rat(1) / Rat(l2 - l3));
  PolyQ mu = L.J[0][1].scale(Rat(1) / Rat(l1 - l2));
  PolyQ delta = (L.J[0][2] + mu * L.J[1][2]).scale(Rat(1) / Rat(l1 - l3));

  auto wpow = [&](long k) {
    Expo e;
    if (k != 0) e[out.w] = k;
    return e;
  };
  out.C1 = Phi2.mul_mono(Rat(1), wpow(-l2)) + gamma.mul_mono(Rat(1), wpow(l3 - l2));
  out.C2 = (Phi1 + mu * Phi2).mul_mono(Rat(1), wpow(-l1)) +
           delta.mul_mono(Rat(1), wpow(l3 - l1));
  return out;
}

SingularNormalForm singular_normal_form(int idx, int fp_sign) {
  const VectorField& S = painleve_system(idx);
  NewtonWeights W = newton_face_weights(S);
  int chart_index = idx == 4 ? 1 : 2;
  Chart C = make_chart(S, W, chart_index);
  long sign = fp_sign >= 0 ? 1 : -1;
  std::array<Rat, 3> fp{Rat(0), Rat(0), Rat(0)};
  if (idx == 1) fp[0] = Rat(2 * sign);
  else if (idx == 2) fp[0] = Rat(sign);
  CharacteristicIndex ci = characteristic_index(C, fp);

  VarId u = vid("u"), v = vid("v"), eta = vid("eta");
  long l1 = rat_long(ci.lambda[0]), l2 = rat_long(ci.lambda[1]);
  PolyQ U = PolyQ::var(u), V = PolyQ::var(v), Es = PolyQ::var(eta, W.s);
  // model flow before centering: the first slot keeps its offset so the tilde
  // variables descend from the source ones
  PolyQ du = (U - PolyQ(fp[0])).scale(Rat(l1)) + ci.jacobian[0][1] * V + ci.jacobian[0][2] * Es;
  PolyQ dv = V.scale(Rat(l2)) + ci.jacobian[1][2] * Es;
  std::vector<std::pair<VarId, PolyQ>> field{{u, du}, {v, dv}, {eta, PolyQ::var(eta)}};

  SingularNormalForm out;
  out.tilde = {vid("xt"), vid("yt"), vid("zt")};
  const long wts[3] = {W.p, W.q, W.r};
  // each tilde coordinate is a chart coordinate times a negative eta weight;
  // the slot the chart rides on carries coefficient one
  long ex[3][3] = {};
  {
    int slot = 0;
    for (int j = 0; j < 3; ++j) {
      ex[j][2] = -wts[j];
      if (j != chart_index - 1) ex[j][slot++] = 1;
    }
  }
  auto expr = [&](int j) {
    PolyQ p = PolyQ::var(eta, ex[j][2]);
    if (ex[j][0]) p *= U;
    if (ex[j][1]) p *= V;
    return p;
  };
  int ie = chart_index - 1;  // the tilde row carried by eta alone

  auto retilde = [&](const PolyQ& P) -> std::optional<PolyQ> {
    int iu = -1, iv = -1;
    for (int j = 0; j < 3; ++j) {
      if (ex[j][0]) iu = j;
      if (ex[j][1]) iv = j;
    }
    PolyQ res;
    for (const auto& [e, c] : P.terms()) {
      long A = 0, Cc = 0, E = 0;
      Expo rest;
      for (const auto& [vv, kk] : e) {
        if (vv == u) A = kk;
        else if (vv == v) Cc = kk;
        else if (vv == eta) E = kk;
        else rest[vv] = kk;
      }
      if (A < 0 || Cc < 0) return std::nullopt;
      long exps[3] = {};
      exps[iu] = A;
      exps[iv] = Cc;
      long need = E - exps[iu] * ex[iu][2] - exps[iv] * ex[iv][2];
      if (need % ex[ie][2] != 0) return std::nullopt;
      exps[ie] = need / ex[ie][2];
      if (exps[ie] < 0) return std::nullopt;
      for (int j = 0; j < 3; ++j)
        if (exps[j]) rest[out.tilde[(size_t)j]] = exps[j];
      res += PolyQ::mono(c, rest);
    }
    return res;
  };

  PolyQ Dx = derive_along(expr(0), field);
  PolyQ Dy = derive_along(expr(1), field);
  PolyQ Dz = derive_along(expr(2), field);

  auto divide = [&](const PolyQ& n, const PolyQ& d) -> std::optional<PolyQ> {
    auto q = try_exact_divide(n, d);
    if (!q) return std::nullopt;
    return retilde(*q);
  };
  auto fx = divide(Dx, Dz);
  auto fyv = divide(Dy, Dz);
  if (fx && fyv) {
    out.has_pair = true;
    out.fx = *fx;
    out.fy = *fyv;
  }

  // second derivative of the middle row by the quotient rule, over Dz^3
  PolyQ n2 = derive_along(Dy, field) * Dz - Dy * derive_along(Dz, field);
  if (auto ypp = divide(n2, Dz * Dz * Dz)) {
    out.second_rhs = *ypp;
    out.second_order = true;
    for (const auto& [e, c] : out.second_rhs.terms())
      for (const auto& [vv, kk] : e)
        if (vv == out.tilde[0] || vv == out.tilde[2]) out.second_order = false;
  }
  return out;
}

AdmissibleFamily classify_admissible_fields(long degree_bound) {
  // the quintic scale lattice: slots weigh 3, 2, 4 and the scale moves by 5
  struct Slot {
    long i, j, k;
  };
  auto wdeg = [](const Slot& s) { return 3 * s.i + 2 * s.j + 4 * s.k; };
  auto mod5 = [](long v) { return ((v % 5) + 5) % 5; };
  std::vector<Slot> all;
  for (long i = 0; 3 * i <= degree_bound; ++i)
    for (long j = 0; 3 * i + 2 * j <= degree_bound; ++j)
      for (long k = 0; 3 * i + 2 * j + 4 * k <= degree_bound; ++k) all.push_back({i, j, k});

  // The scale equation keeps a nonzero rate at the boundary point only if the
  // denominator family contributes its k = 0 slot at scale depth 0 or 1.
  // Depth 0 pins the family offset so low that the companion numerator family
  // empties out and the rate freezes; that placement is impossible.
  {
    long dp0 = mod5(-2);
    long Np0 = (-2 - dp0) / 5;  // -1
    bool empty = true;
    for (const Slot& s : all) {
      long n = (wdeg(s) - dp0) / 5;
      if (mod5(wdeg(s)) == dp0 && n >= 0 && n <= Np0) empty = false;
    }
    if (!empty) throw std::logic_error("depth-0 exclusion produced candidates");
  }
  // Depth 1 fixes offset 3 and top depth 0 for the companion family.
  const long dp = mod5(-2 - 5 * (0 - 1));  // 3
  const long Np = 0;

  std::vector<long> bsurv;
  for (long k = 0; 4 * k <= degree_bound; ++k) {
    long vq = 4 * k - 2;
    if (mod5(vq) != dp) continue;
    long n = (vq - dp) / 5;
    if (n >= -1 && n <= Np) bsurv.push_back(k);
  }
  std::vector<Slot> asurv;
  for (const Slot& s : all) {
    if (mod5(wdeg(s)) != dp) continue;
    long n = (wdeg(s) - dp) / 5;
    if (n >= 0 && n <= Np) asurv.push_back(s);
  }
  // a single linear slot against a constant: the second equation reads c x,
  // which forces the ratio denominator into the shape x times a z-series
  if (bsurv.size() != 1 || bsurv[0] != 0 || asurv.size() != 1 || asurv[0].i != 1 ||
      asurv[0].j != 0 || asurv[0].k != 0)
    throw std::logic_error("rate sieve did not collapse to the linear slot");

  // that denominator keeps a nonzero rate only through its own k = 0 slot at
  // depth 0, which pins the numerator offset
  const long dq = mod5(3);
  const long Mp = (3 - dq) / 5;  // 0
  std::vector<Slot> qsurv, psurv;
  for (const Slot& s : all) {
    if (s.i == 1 && s.j == 0 && mod5(wdeg(s)) == dq) {
      long mp = (wdeg(s) - dq) / 5;
      if (mp >= 0 && mp <= Mp) qsurv.push_back(s);
    }
    long vp = wdeg(s) - 1;
    if (mod5(vp) == dq) {
      long m = (vp - dq) / 5;
      if (m >= -1 && m <= Mp) psurv.push_back(s);
    }
  }

  AdmissibleFamily out;
  out.degree_bound = degree_bound;
  auto name = [](char fam, const Slot& s) {
    return std::string(1, fam) + std::to_string(s.i) + std::to_string(s.j) +
           std::to_string(s.k);
  };
  for (const Slot& s : asurv) out.survivors.push_back(name('a', s));
  for (long k : bsurv) out.survivors.push_back("b" + std::to_string(k));
  for (const Slot& s : psurv) out.survivors.push_back(name('p', s));
  for (const Slot& s : qsurv) out.survivors.push_back(name('q', s));
  std::sort(out.survivors.begin(), out.survivors.end());

  // surviving coefficients combine into a three parameter family:
  // a = c p020 / q100, b = c p001 / q100 against g = c x
  VarId a = pid("a"), b = pid("b"), c = pid("c");
  VectorField F;
  F.name = "admissible";
  F.x = vid("x");
  F.y = vid("y");
  F.z = vid("z");
  F.f = PolyQ::var(a) * PolyQ::var(F.y, 2) + PolyQ::var(b) * PolyQ::var(F.z);
  F.g = PolyQ::var(c) * PolyQ::var(F.x);
  F.H = PolyQ::var(c) * PolyQ::var(F.x, 2).scale(Rat(1, 2)) -
        PolyQ::var(a) * PolyQ::var(F.y, 3).scale(Rat(1, 3)) -
        PolyQ::var(b) * PolyQ::var(F.z) * PolyQ::var(F.y);
  F.params = {a, b, c};
  out.family = F;
  return out;
}

FastSlowModel fastslow_model(FastSlowKind kind, const PolyQ& f1, const PolyQ& f2,
                             const PolyQ& gtail, const PolyQ& cub1, const PolyQ& cub2) {
  VarId x = vid("x"), y = vid("y"), z = vid("z"), e = vid("eps");
  PolyQ X = PolyQ::var(x), Y = PolyQ::var(y), Z = PolyQ::var(z), E = PolyQ::var(e);
  FastSlowModel M;
  M.kind = kind;
  if (!is_zero(gtail.coeff_const()))  // the slow rate starts at exactly one
    throw std::invalid_argument("slow-rate tail must vanish at the origin");
  switch (kind) {
    case FastSlowKind::SaddleNode:
      M.planar = true;
      M.w = {1, 0, 2, 3};
      M.fx = X * X + Z + E * f1;
      break;
    case FastSlowKind::Transcritical:
      M.planar = true;
      M.w = {1, 0, 1, 2};
      M.fx = X * X + Z * X + E * f1;
      break;
    case FastSlowKind::TakensBogdanov:
      M.w = {3, 2, 4, 5};
      M.fx = Y * Y + X * Y + Z + E * f1;
      M.fy = X + E * f2;
      break;
    case FastSlowKind::TakensBogdanovZ2:
      M.w = {2, 1, 2, 3};
      M.fx = Y * Y * Y - X * Y * Y * Y + Z * Y + E * f1;
      M.fy = X + E * f2;
      break;
    case FastSlowKind::TakensBogdanovZ3:
      for (const PolyQ* cb : {&cub1, &cub2})
        for (const auto& [ee, cc] : cb->terms()) {
          long t = 0;
          for (const auto& [vv, kk] : ee) {
            if (vv != x && vv != y && vv != z)
              throw std::invalid_argument("cubic tails may only involve the state variables");
            t += kk;
          }
          if (t < 3) throw std::invalid_argument("cubic tails must start at total degree three");
        }
      M.w = {1, 1, 1, 2};
      M.fx = X * X - Y * Y - Z * Y + cub1 + E * f1;
      M.fy = PolyQ(-2) * X * Y + Z * X + cub2 + E * f2;
      break;
  }
  M.fz = E * (PolyQ(1) + gtail);
  if (M.planar && (M.fx.has_var(y) || gtail.has_var(y)))
    throw std::invalid_argument("planar models cannot involve the second state variable");
  return M;
}

DivisorLimit fastslow_blowup_limit(const FastSlowModel& M) {
  VarId x = vid("x"), y = vid("y"), z = vid("z"), e = vid("eps");
  VarId r = vid("r");
  DivisorLimit out;
  out.planar = M.planar;
  out.vars = {vid("X"), vid("Y"), vid("Z")};
  std::map<VarId, PolyQ, VarLess> sub;
  sub[x] = PolyQ::var(out.vars[0]) * PolyQ::var(r, M.w.p);
  sub[y] = M.planar ? PolyQ(0) : PolyQ::var(out.vars[1]) * PolyQ::var(r, M.w.q);
  sub[z] = PolyQ::var(out.vars[2]) * PolyQ::var(r, M.w.r);
  sub[e] = PolyQ::var(r, M.w.s);
  auto push = [&](const PolyQ& f, long wv) {
    Expo down;
    down[r] = -wv;
    return f.subst_many(sub).mul_mono(Rat(1), down);
  };
  PolyQ vx = push(M.fx, M.w.p);
  PolyQ vz = push(M.fz, M.w.r);
  // everything must vanish on the divisor and move at the first scale order
  auto starts_inside = [&](const PolyQ& p) { return p.is_zero() || *p.low(r) >= 1; };
  if (!starts_inside(vx) || !starts_inside(vz) || !(vz.coeff_of(r, 1) == PolyQ(1)))
    throw std::domain_error("model does not vanish to first order on the divisor");
  out.dX = vx.coeff_of(r, 1);
  if (!M.planar) {
    PolyQ vy = push(M.fy, M.w.q);
    if (!starts_inside(vy))
      throw std::domain_error("model does not vanish to first order on the divisor");
    out.dY = vy.coeff_of(r, 1);
  }
  return out;
}

std::array<PolyQ, 2> riccati_linear_coeffs(const PolyQ& rhs, VarId X, VarId Z) {
  for (VarId v : rhs.vars_used())
    if (v != X && v != Z && !var_is_param(v))
      throw std::invalid_argument("right-hand side involves a foreign variable");
  if (rhs.is_zero() || *rhs.deg(X) != 2 || !(rhs.coeff_of(X, 2) == PolyQ(1)))
    throw std::invalid_argument("right-hand side is not a monic quadratic");
  PolyQ c1 = rhs.coeff_of(X, 1), c0 = rhs.coeff_of(X, 0);
  // X = -u'/u turns X' = X^2 + c1 X + c0 into u'' - c1 u' + c0 u = 0
  return {-c1, c0};
}

}  // namespace painleve
