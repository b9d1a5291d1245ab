#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "painleve/local.hpp"

#include <complex>
#include <string>

using namespace painleve;

namespace {

PolyQ pp(const std::string& s) { return parse_pq(s); }

std::array<Chart, 3> atlas_for(int which) {
  const VectorField& S = painleve_system(which);
  return make_charts(S, newton_face_weights(S));
}

const FixedPointRecord* find_rec(const BoundaryCatalog& cat, int chart,
                                 const std::array<Rat, 3>& c) {
  for (const auto& r : cat.points)
    if (r.chart == chart && r.coords == c) return &r;
  return nullptr;
}

// slice out the terms of a given total degree in the chart variables
PolyQ chart_part(const PolyQ& p, const std::array<VarId, 3>& vars, long d) {
  PolyQ out;
  for (const auto& [e, c] : p.terms()) {
    long t = 0;
    for (VarId v : vars) {
      auto it = e.find(v);
      if (it != e.end()) t += it->second;
    }
    if (t == d) out.add_term(e, c);
  }
  return out;
}

double relation_residual(const AlgebraicAppearance& ap, const Chart& C) {
  double worst = 0.0;
  for (const auto& P : ap.approx) {
    std::map<VarId, std::complex<double>, VarLess> pt{{C.v1, P[0]}, {C.v2, P[1]}};
    for (const auto& rel : ap.relations) worst = std::max(worst, std::abs(rel.eval_c(pt)));
  }
  return worst;
}

}  // namespace

TEST_CASE("boundary catalogs collect the singular points of each atlas") {
  {
    auto atlas = atlas_for(1);
    auto cat = find_fixed_points_at_infinity(atlas);
    CHECK(cat.movable_count() == 1);
    CHECK(cat.irregular_count() == 1);

    const auto* mov = find_rec(cat, 2, {Rat(2), Rat(0), Rat(0)});
    REQUIRE(mov != nullptr);
    CHECK(mov->movable);
    CHECK(mov->orbit ==
          std::vector<std::array<Rat, 3>>{{Rat(-2), Rat(0), Rat(0)}, {Rat(2), Rat(0), Rat(0)}});
    // the same point shows up in the first chart on an irrational slice
    REQUIRE(mov->algebraic.size() == 1);
    CHECK(mov->algebraic[0].chart == 1);
    REQUIRE(mov->algebraic[0].relations.size() == 3);
    CHECK(mov->algebraic[0].relations[0] == pp("4*Y1^3-1"));
    CHECK(mov->algebraic[0].approx.size() == 3);
    CHECK(relation_residual(mov->algebraic[0], atlas[0]) < 1e-12);

    const auto* irr = find_rec(cat, 2, {Rat(0), Rat(-6), Rat(0)});
    REQUIRE(irr != nullptr);
    CHECK(!irr->movable);
    REQUIRE(irr->algebraic.size() == 1);
    CHECK(irr->algebraic[0].chart == 3);
    REQUIRE(irr->algebraic[0].relations.size() == 2);
    CHECK(irr->algebraic[0].relations[0] == pp("X3"));
    CHECK(irr->algebraic[0].relations[1] == pp("6*Y3^2+1"));
    CHECK(relation_residual(irr->algebraic[0], atlas[2]) < 1e-12);
  }
  {
    auto atlas = atlas_for(2);
    auto cat = find_fixed_points_at_infinity(atlas);
    CHECK(cat.movable_count() == 2);
    CHECK(cat.irregular_count() == 2);

    const auto* plus = find_rec(cat, 2, {Rat(1), Rat(0), Rat(0)});
    REQUIRE(plus != nullptr);
    CHECK(plus->movable);
    // seen on the x-slope and on the y-slope at once
    CHECK(plus->reps == std::vector<std::pair<int, std::array<Rat, 3>>>{
                            {1, {Rat(1), Rat(0), Rat(0)}}, {2, {Rat(1), Rat(0), Rat(0)}}});

    const auto* minus = find_rec(cat, 2, {Rat(-1), Rat(0), Rat(0)});
    REQUIRE(minus != nullptr);
    CHECK(minus->movable);
    REQUIRE(minus->algebraic.size() == 1);
    CHECK(minus->algebraic[0].chart == 1);
    CHECK(minus->algebraic[0].relations[0] == pp("Y1^2+1"));
    CHECK(relation_residual(minus->algebraic[0], atlas[0]) < 1e-12);

    const auto* irr = find_rec(cat, 2, {Rat(0), Rat(-2), Rat(0)});
    REQUIRE(irr != nullptr);
    CHECK(!irr->movable);
    REQUIRE(irr->algebraic.size() == 1);
    CHECK(irr->algebraic[0].relations[0] == pp("X3"));
    CHECK(irr->algebraic[0].relations[1] == pp("2*Y3^2+1"));
    CHECK(find_rec(cat, 3, {Rat(0), Rat(0), Rat(0)}) != nullptr);
  }
  {
    auto atlas = atlas_for(4);
    auto cat = find_fixed_points_at_infinity(atlas);
    CHECK(cat.movable_count() == 3);
    CHECK(cat.irregular_count() == 4);

    CHECK(find_rec(cat, 1, {Rat(0), Rat(0), Rat(0)}) != nullptr);
    CHECK(find_rec(cat, 2, {Rat(0), Rat(0), Rat(0)}) != nullptr);
    const auto* shared = find_rec(cat, 2, {Rat(1), Rat(0), Rat(0)});
    REQUIRE(shared != nullptr);
    CHECK(shared->movable);
    CHECK(shared->reps == std::vector<std::pair<int, std::array<Rat, 3>>>{
                              {1, {Rat(1), Rat(0), Rat(0)}}, {2, {Rat(1), Rat(0), Rat(0)}}});

    CHECK(find_rec(cat, 3, {Rat(0), Rat(0), Rat(0)}) != nullptr);
    CHECK(find_rec(cat, 3, {Rat(0), Rat(-2), Rat(0)}) != nullptr);
    CHECK(find_rec(cat, 3, {Rat(2), Rat(0), Rat(0)}) != nullptr);
    CHECK(find_rec(cat, 3, {Rat(2, 3), Rat(-2, 3), Rat(0)}) != nullptr);
    for (const auto& r : cat.points)
      if (r.chart == 3) CHECK(!r.movable);
  }
  // one movable singularity per pole family
  for (int which : painleve_indices()) {
    const VectorField& S = painleve_system(which);
    NewtonWeights W = newton_face_weights(S);
    auto cat = find_fixed_points_at_infinity(make_charts(S, W));
    CHECK((size_t)cat.movable_count() == pole_balances(S, W).size());
  }
}

TEST_CASE("characteristic indices at the singular points") {
  {
    auto atlas = atlas_for(1);
    auto ci = characteristic_index(atlas[1], {Rat(2), Rat(0), Rat(0)});
    CHECK(ci.lambda == std::array<Rat, 3>{Rat(6), Rat(4), Rat(5)});
    CHECK(ci.jacobian == Mat<PolyQ>{{PolyQ(6), PolyQ(-1), PolyQ(0)},
                                    {PolyQ(0), PolyQ(4), PolyQ(-1)},
                                    {PolyQ(0), PolyQ(0), PolyQ(5)}});
    auto cm = characteristic_index(atlas[1], {Rat(-2), Rat(0), Rat(0)});
    CHECK(cm.lambda == std::array<Rat, 3>{Rat(6), Rat(4), Rat(5)});
    CHECK(cm.jacobian[1][2] == PolyQ(1));
    // at the fixed singularity the time unit vanishes and no index exists
    CHECK_THROWS_AS(characteristic_index(atlas[1], {Rat(0), Rat(-6), Rat(0)}),
                    std::domain_error);
  }
  {
    auto atlas = atlas_for(2);
    auto up = characteristic_index(atlas[1], {Rat(-1), Rat(0), Rat(0)});
    CHECK(up.lambda == std::array<Rat, 3>{Rat(4), Rat(2), Rat(3)});
    CHECK(up.jacobian == Mat<PolyQ>{{PolyQ(4), PolyQ(1), pp("alpha")},
                                    {PolyQ(0), PolyQ(2), PolyQ(1)},
                                    {PolyQ(0), PolyQ(0), PolyQ(3)}});
    auto dn = characteristic_index(atlas[1], {Rat(1), Rat(0), Rat(0)});
    CHECK(dn.jacobian == Mat<PolyQ>{{PolyQ(4), PolyQ(-1), pp("-alpha")},
                                    {PolyQ(0), PolyQ(2), PolyQ(-1)},
                                    {PolyQ(0), PolyQ(0), PolyQ(3)}});
  }
  {
    auto atlas = atlas_for(4);
    auto c1o = characteristic_index(atlas[0], {Rat(0), Rat(0), Rat(0)});
    CHECK(c1o.lambda == std::array<Rat, 3>{Rat(3), Rat(1), Rat(2)});
    CHECK(c1o.jacobian == Mat<PolyQ>{{PolyQ(3), PolyQ(0), pp("-2*kappa")},
                                     {PolyQ(0), PolyQ(1), PolyQ(1)},
                                     {PolyQ(0), PolyQ(0), PolyQ(2)}});
    auto c1s = characteristic_index(atlas[0], {Rat(1), Rat(0), Rat(0)});
    CHECK(c1s.jacobian == Mat<PolyQ>{{PolyQ(3), PolyQ(4), pp("2*kappa-2*theta")},
                                     {PolyQ(0), PolyQ(1), PolyQ(-1)},
                                     {PolyQ(0), PolyQ(0), PolyQ(2)}});
    auto c2o = characteristic_index(atlas[1], {Rat(0), Rat(0), Rat(0)});
    CHECK(c2o.jacobian == Mat<PolyQ>{{PolyQ(3), PolyQ(0), pp("-2*theta")},
                                     {PolyQ(0), PolyQ(1), PolyQ(1)},
                                     {PolyQ(0), PolyQ(0), PolyQ(2)}});
    CHECK_THROWS_AS(characteristic_index(atlas[0], {Rat(0), Rat(1, 2), Rat(0)}),
                    std::domain_error);
  }
  // shared shape of the spectrum across all three systems
  for (int which : painleve_indices()) {
    const VectorField& S = painleve_system(which);
    NewtonWeights W = newton_face_weights(S);
    auto atlas = make_charts(S, W);
    auto cat = find_fixed_points_at_infinity(atlas);
    CHECK(W.p + W.q == W.s);
    for (const auto& rec : cat.points) {
      if (!rec.movable) continue;
      auto ci = characteristic_index(atlas[(size_t)rec.chart - 1], rec.coords);
      CHECK(ci.lambda[1] == Rat(W.r));
      CHECK(ci.lambda[0] == Rat(W.s + 1));
      Rat sum = ci.lambda[0] + ci.lambda[1];
      Rat dbl = ci.lambda[2] + ci.lambda[2];
      CHECK(sum == dbl);
      CHECK(!ci.jacobian[1][2].is_zero());
    }
  }
}

TEST_CASE("eigenvalue resonance search") {
  auto rep = check_poincare_conditions({Rat(6), Rat(4), Rat(5)});
  CHECK(rep.poincare_domain);
  CHECK(rep.nonresonant);
  CHECK(rep.resonances.empty());

  rep = check_poincare_conditions({Rat(4), Rat(2), Rat(3)});
  CHECK(rep.poincare_domain);
  CHECK(!rep.nonresonant);
  CHECK(rep.resonances == std::vector<Resonance>{{{0, 2, 0}, 0}});

  rep = check_poincare_conditions({Rat(3), Rat(1), Rat(2)});
  CHECK(rep.poincare_domain);
  CHECK(rep.resonances ==
        std::vector<Resonance>{{{0, 1, 1}, 0}, {{0, 2, 0}, 2}, {{0, 3, 0}, 0}});

  // all-negative spectra sit in the domain too, mixed signs do not
  rep = check_poincare_conditions({Rat(-6), Rat(-4), Rat(-5)});
  CHECK(rep.poincare_domain);
  CHECK(rep.nonresonant);
  rep = check_poincare_conditions({Rat(1), Rat(-1), Rat(2)});
  CHECK(!rep.poincare_domain);
}

TEST_CASE("formal linearization near movable singularities") {
  const int N = 6;
  struct Spot {
    int sys, chart;
    std::array<Rat, 3> fp;
  };
  std::vector<Spot> spots{{1, 2, {Rat(2), Rat(0), Rat(0)}},  {1, 2, {Rat(-2), Rat(0), Rat(0)}},
                          {2, 2, {Rat(1), Rat(0), Rat(0)}},  {2, 2, {Rat(-1), Rat(0), Rat(0)}},
                          {4, 1, {Rat(0), Rat(0), Rat(0)}},  {4, 2, {Rat(0), Rat(0), Rat(0)}},
                          {4, 2, {Rat(1), Rat(0), Rat(0)}}};
  for (const auto& sp : spots) {
    CAPTURE(sp.sys);
    CAPTURE(sp.chart);
    auto atlas = atlas_for(sp.sys);
    const Chart& C = atlas[(size_t)sp.chart - 1];
    Linearization L = poincare_linearize(C, sp.fp, N);
    auto R = conjugacy_residual(L);
    CHECK(R[0].is_zero());
    CHECK(R[1].is_zero());
    CHECK(R[2].is_zero());
    if (sp.sys == 1) CHECK(L.resonances.empty());
    if (sp.sys == 2) CHECK(L.resonances == std::vector<Resonance>{{{0, 2, 0}, 0}});
    if (sp.sys == 4)
      CHECK(L.resonances == std::vector<Resonance>{{{0, 1, 1}, 0}, {{0, 3, 0}, 0}});
  }

  // hand-solved quadratic layer of the first system's conjugation
  {
    auto atlas = atlas_for(1);
    Linearization L = poincare_linearize(atlas[1], {Rat(2), Rat(0), Rat(0)}, 2);
    CHECK(chart_part(L.phi1, L.vars, 2) ==
          pp("1/4*X2^2+1/70*X2*e2+1/105*Z2*e2+1/336*e2^2"));
    CHECK(L.phi2 == pp("-1/14*X2-1/70*Z2-1/420*e2"));
  }

  // a resonant monomial with nothing to absorb it blocks the conjugation
  {
    VarId u = vid("u"), v = vid("v"), w = vid("w");
    std::array<VarId, 3> vars{u, v, w};
    Mat<PolyQ> J{{PolyQ(2), PolyQ(0), PolyQ(0)},
                 {PolyQ(0), PolyQ(1), PolyQ(0)},
                 {PolyQ(0), PolyQ(0), PolyQ(3)}};
    std::array<PolyQ, 3> F{PolyQ::var(u).scale(Rat(2)) + PolyQ::var(v, 2), PolyQ::var(v),
                           PolyQ::var(w).scale(Rat(3))};
    bool blocked = false;
    try {
      poincare_linearize_field(F, vars, J, 2);
    } catch (const std::domain_error& e) {
      blocked = true;
      CHECK(std::string(e.what()).find("v^2") != std::string::npos);
    }
    CHECK(blocked);

    Mat<PolyQ> J2{{PolyQ(4), PolyQ(0), PolyQ(0)},
                  {PolyQ(0), PolyQ(2), PolyQ(0)},
                  {PolyQ(0), PolyQ(0), PolyQ(3)}};
    std::array<PolyQ, 3> F2{PolyQ::var(u).scale(Rat(4)) + PolyQ::var(v, 2),
                            PolyQ::var(v).scale(Rat(2)), PolyQ::var(w).scale(Rat(3))};
    CHECK_THROWS_AS(poincare_linearize_field(F2, vars, J2, 2), std::domain_error);
  }

  // the resonant slots of the second and fourth systems all stay empty
  {
    auto atlas = atlas_for(2);
    CHECK(!resonant_terms_present(atlas[1], {Rat(1), Rat(0), Rat(0)}));
    CHECK(!resonant_terms_present(atlas[1], {Rat(-1), Rat(0), Rat(0)}));
  }
  {
    auto atlas = atlas_for(4);
    CHECK(!resonant_terms_present(atlas[0], {Rat(0), Rat(0), Rat(0)}));
  }
  {
    auto atlas = atlas_for(1);
    CHECK(!resonant_terms_present(atlas[1], {Rat(2), Rat(0), Rat(0)}));
  }
}

TEST_CASE("first integrals of the model flow") {
  VarId u = vid("u"), v = vid("v"), eta = vid("eta");
  struct Pin {
    int sys, chart;
    std::array<Rat, 3> fp;
    std::string c1, c2;
  };
  std::vector<Pin> pins{
      {1, 2, {Rat(2), Rat(0), Rat(0)}, "v*eta^-4+eta", "u*eta^-6-1/2*v*eta^-6+1/2*eta^-1"},
      {2, 2, {Rat(-1), Rat(0), Rat(0)}, "v*eta^-2-eta",
       "u*eta^-4+1/2*v*eta^-4+1/2*eta^-1+alpha*eta^-1"},
      {4, 1, {Rat(0), Rat(0), Rat(0)}, "v*eta^-1-eta", "u*eta^-3-2*kappa*eta^-1"}};
  for (const auto& pin : pins) {
    CAPTURE(pin.sys);
    const VectorField& S = painleve_system(pin.sys);
    NewtonWeights W = newton_face_weights(S);
    Chart C = make_chart(S, W, pin.chart);
    auto ci = characteristic_index(C, pin.fp);
    auto I = linear_model_integrals(ci.jacobian, u, v, eta);
    CHECK(I[0] == pp(pin.c1));
    CHECK(I[1] == pp(pin.c2));
    // both expressions are constant along the model flow
    std::vector<std::pair<VarId, PolyQ>> fld{
        {u, PolyQ::var(u) * ci.jacobian[0][0] + PolyQ::var(v) * ci.jacobian[0][1] +
                PolyQ::var(eta, W.s) * ci.jacobian[0][2]},
        {v, PolyQ::var(v) * ci.jacobian[1][1] + PolyQ::var(eta, W.s) * ci.jacobian[1][2]},
        {eta, PolyQ::var(eta)}};
    CHECK(derive_along(I[0], fld).is_zero());
    CHECK(derive_along(I[1], fld).is_zero());
  }
}

TEST_CASE("local first integrals pulled back through the cover") {
  {
    auto atlas = atlas_for(1);
    auto li = local_integrals(poincare_linearize(atlas[1], {Rat(2), Rat(0), Rat(0)}, 1),
                              atlas[1]);
    CHECK(li.C1 == pp("z+w"));
    CHECK(li.C2 == pp("1/2*w^-1-2*w^-6+x*w^-3-1/2*z*w^-2"));
  }
  {
    auto atlas = atlas_for(2);
    auto li = local_integrals(poincare_linearize(atlas[1], {Rat(-1), Rat(0), Rat(0)}, 1),
                              atlas[1]);
    CHECK(li.C1 == pp("z-w"));
    CHECK(li.C2 == pp("1/2*w^-1+alpha*w^-1+x*w^-2+1/2*z*w^-2+w^-4"));
  }
  {
    auto atlas = atlas_for(4);
    auto li = local_integrals(poincare_linearize(atlas[0], {Rat(0), Rat(0), Rat(0)}, 1),
                              atlas[0]);
    CHECK(li.C1 == pp("z-w"));
    CHECK(li.C2 == pp("y*w^-2-2*kappa*w^-1"));
  }
  // deeper corrections only refine the integrals past the orders already seen
  {
    auto atlas = atlas_for(1);
    auto li = local_integrals(poincare_linearize(atlas[1], {Rat(2), Rat(0), Rat(0)}, 6),
                              atlas[1]);
    PolyQ prof = pp("u*w^3-1/2*w^2+2*w^-3+1/2*z*w");
    VarId w = vid("w");
    PolyQ d1 = li.C1.subst(vid("x"), prof) - pp("z+w");
    PolyQ d2 = li.C2.subst(vid("x"), prof) - PolyQ::var(vid("u"));
    CHECK((d1.is_zero() || d1.low(w).value() >= 5));
    CHECK((d2.is_zero() || d2.low(w).value() >= 2));
  }
}

TEST_CASE("reduced dynamics along the degenerate fiber") {
  {
    auto nf = singular_normal_form(1, +1);
    CHECK(!nf.has_pair);
    CHECK(nf.second_order);
    CHECK(nf.second_rhs == pp("6*yt^2"));
    auto nm = singular_normal_form(1, -1);
    CHECK(!nm.has_pair);
    CHECK(nm.second_order);
    CHECK(nm.second_rhs == pp("6*yt^2"));
  }
  {
    auto up = singular_normal_form(2, -1);
    REQUIRE(up.has_pair);
    CHECK(up.fx == pp("2*xt*yt+4*yt^3+zt*yt+alpha"));
    CHECK(up.fy == pp("-yt^2"));
    CHECK(up.second_order);
    CHECK(up.second_rhs == pp("2*yt^3"));
    auto dn = singular_normal_form(2, +1);
    REQUIRE(dn.has_pair);
    CHECK(dn.fx == pp("-2*xt*yt+4*yt^3+zt*yt+alpha"));
    CHECK(dn.fy == pp("yt^2"));
    CHECK(dn.second_rhs == pp("2*yt^3"));
  }
  {
    auto nf = singular_normal_form(4, +1);
    REQUIRE(nf.has_pair);
    CHECK(nf.fx == pp("-xt^2"));
    CHECK(nf.fy == pp("2*xt*yt-2*kappa"));
    // the slot mixing keeps the second-order reduction from closing in yt alone
    CHECK(!nf.second_order);
    CHECK(nf.second_rhs == pp("2*xt^2*yt-4*kappa*xt"));
  }
}

TEST_CASE("enumeration of admissible polynomial fields") {
  auto out = classify_admissible_fields(12);
  CHECK(out.survivors ==
        std::vector<std::string>{"a100", "b0", "p001", "p020", "q100"});
  // the survivor set is already saturated at low degree
  CHECK(classify_admissible_fields(5).survivors == out.survivors);

  CHECK(out.family.f == pp("a*y^2+b*z"));
  CHECK(out.family.g == pp("c*x"));
  CHECK(newton_face_weights(out.family) == NewtonWeights{3, 2, 4, 5});

  // any member of the family keeps the singularity structure of the first system
  VarId a = pid("a"), b = pid("b"), c = pid("c");
  VectorField F = out.family;
  F.f = F.f.subst(a, PolyQ(6)).subst(c, PolyQ(1));
  F.g = F.g.subst(a, PolyQ(6)).subst(c, PolyQ(1));
  F.H = F.H.subst(a, PolyQ(6)).subst(c, PolyQ(1));
  F.params = {b};
  NewtonWeights W = newton_face_weights(F);
  CHECK(W == NewtonWeights{3, 2, 4, 5});
  Chart C = make_chart(F, W, 2);
  auto ci = characteristic_index(C, {Rat(2), Rat(0), Rat(0)});
  CHECK(ci.lambda == std::array<Rat, 3>{Rat(6), Rat(4), Rat(5)});
  CHECK(ci.jacobian[0][1].has_var(b));
}

TEST_CASE("slow-fast models and their degenerate-fiber limits") {
  VarId x = vid("x"), e = vid("eps");
  PolyQ junk1 = pp("1+x+z") + PolyQ::var(e) * PolyQ::var(x, 2);
  PolyQ gt = pp("z") + PolyQ::var(x) * PolyQ::var(e);

  {
    auto M = fastslow_model(FastSlowKind::SaddleNode, junk1, PolyQ(0), gt);
    auto L = fastslow_blowup_limit(M);
    CHECK(L.planar);
    PolyQ X = PolyQ::var(L.vars[0]), Z = PolyQ::var(L.vars[2]);
    CHECK(L.dX == X * X + Z);
    auto lin = riccati_linear_coeffs(L.dX, L.vars[0], L.vars[2]);
    CHECK(lin[0].is_zero());
    CHECK(lin[1] == Z);
  }
  {
    auto M = fastslow_model(FastSlowKind::Transcritical, pp("5+x"), PolyQ(0), gt);
    auto L = fastslow_blowup_limit(M);
    CHECK(L.planar);
    PolyQ X = PolyQ::var(L.vars[0]), Z = PolyQ::var(L.vars[2]);
    CHECK(L.dX == X * X + Z * X + PolyQ(5));
    auto lin = riccati_linear_coeffs(L.dX, L.vars[0], L.vars[2]);
    CHECK(lin[0] == -Z);
    CHECK(lin[1] == PolyQ(5));
  }
  PolyQ junky = junk1 + pp("y^2");
  {
    auto M = fastslow_model(FastSlowKind::TakensBogdanov, junky, pp("3+y"), pp("z+y"));
    auto L = fastslow_blowup_limit(M);
    CHECK(!L.planar);
    PolyQ X = PolyQ::var(L.vars[0]), Y = PolyQ::var(L.vars[1]), Z = PolyQ::var(L.vars[2]);
    CHECK(L.dX == Y * Y + Z);
    CHECK(L.dY == X);
  }
  {
    auto M = fastslow_model(FastSlowKind::TakensBogdanovZ2, pp("7+x*y"), pp("2+z"), pp("z+y"));
    auto L = fastslow_blowup_limit(M);
    PolyQ X = PolyQ::var(L.vars[0]), Y = PolyQ::var(L.vars[1]), Z = PolyQ::var(L.vars[2]);
    CHECK(L.dX == Y * Y * Y + Z * Y + PolyQ(7));
    CHECK(L.dY == X);
  }
  {
    auto M = fastslow_model(FastSlowKind::TakensBogdanovZ3, pp("2+x"), pp("-3+y"), pp("z+y"),
                            pp("x^3"), pp("y^2*z"));
    auto L = fastslow_blowup_limit(M);
    PolyQ X = PolyQ::var(L.vars[0]), Y = PolyQ::var(L.vars[1]), Z = PolyQ::var(L.vars[2]);
    CHECK(L.dX == X * X - Y * Y - Z * Y + PolyQ(2));
    CHECK(L.dY == PolyQ(-2) * X * Y + Z * X + PolyQ(-3));
  }
}
