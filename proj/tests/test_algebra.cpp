#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "painleve/linalg.hpp"
#include "painleve/ratfn.hpp"

using namespace painleve;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_parse("2/3") + rat_parse("1/6") == rat_parse("5/6"));
  CHECK(rat_str(rat_parse("-4/6")) == "-2/3");
  CHECK(rat_parse(" 7 ") == 7);
  CHECK_THROWS(rat_parse("x"));
  CHECK(rat_pow(rat_parse("2/3"), -2) == rat_parse("9/4"));
  CHECK(rat_gcd(rat_parse("4/6"), rat_parse("2/9")) == rat_parse("2/9"));
  CHECK(rat_gcd(rat_parse("1/2"), rat_parse("1/3")) == rat_parse("1/6"));
  CHECK(*rat_decimal(rat_parse("1/2")) == "0.5");
  CHECK(*rat_decimal(rat_parse("-3/40")) == "-0.075");
  CHECK(*rat_decimal(rat_parse("17")) == "17");
  CHECK(!rat_decimal(rat_parse("1/3")));
}

TEST_CASE("rational roots of perfect powers") {
  CHECK(*rat_kth_root(Rat(8), 3) == 2);
  CHECK(*rat_kth_root(rat_parse("-27/8"), 3) == rat_parse("-3/2"));
  CHECK(!rat_kth_root(Rat(2), 2));
  CHECK(!rat_kth_root(Rat(-4), 2));
  CHECK(*rat_kth_root(rat_parse("16/81"), 4) == rat_parse("2/3"));
}

TEST_CASE("gaussian rationals") {
  GaussRat i = GaussRat::iu();
  CHECK(i * i == GaussRat(-1));
  GaussRat z(Rat(3), Rat(4));
  CHECK(z * z.inv() == GaussRat(1));
  CHECK(z.conj() * z == GaussRat(z.norm()));
  CHECK(*gauss_sqrt(GaussRat(-4)) == GaussRat(Rat(0), Rat(2)));
  CHECK(*gauss_sqrt(GaussRat(Rat(0), Rat(2))) == GaussRat(Rat(1), Rat(1)));
  CHECK(!gauss_sqrt(i));  // sqrt(i) is not in Q(i)
  CHECK(gauss_pow(i, -1) == -i);
  CHECK(gauss_str(GaussRat(Rat(-1, 2), Rat(1))) == "(-1/2+i)");
}

TEST_CASE("polynomial arithmetic basics") {
  PolyQ p = parse_pq("6*y^2 + z");
  CHECK(p + PolyQ(0) == p);
  CHECK(p - p == PolyQ(0));
  CHECK(p.to_string() == "6*y^2 + z");
  PolyQ q = parse_pq("(y + 1)^3");
  CHECK(q == parse_pq("y^3 + 3*y^2 + 3*y + 1"));
  CHECK(parse_pq("x*y - y*x") == PolyQ(0));
}

TEST_CASE("laurent exponents") {
  PolyQ w2 = parse_pq("w^-2");
  CHECK(w2.diff(vid("w")) == parse_pq("-2*w^-3"));
  CHECK(parse_pq("w^-1") * parse_pq("w") == PolyQ(1));
  PolyQ p = parse_pq("x^-1 + y^-1");
  auto q = try_exact_divide(p, parse_pq("x^-1*y^-1"));
  REQUIRE(q);
  CHECK(*q == parse_pq("x + y"));
}

TEST_CASE("derivative and substitution") {
  VarId x = vid("x"), y = vid("y");
  PolyQ p = parse_pq("x^2");
  CHECK(p.subst(x, parse_pq("y + 1")) == parse_pq("y^2 + 2*y + 1"));
  // simultaneous substitution is not sequential
  std::map<VarId, PolyQ, VarLess> swap{{x, PolyQ::var(y)}, {y, PolyQ::var(x)}};
  CHECK(parse_pq("x - y").subst_many(swap) == parse_pq("y - x"));
  CHECK(parse_pq("x^3*y").diff(x) == parse_pq("3*x^2*y"));
}

TEST_CASE("weighted degrees") {
  Weights w{{vid("x"), 3}, {vid("y"), 2}, {vid("z"), 4}};
  PolyQ h1 = parse_pq("1/2*x^2 - 2*y^3 - z*y");
  CHECK(*h1.weighted_degree(w) == 6);
  CHECK(h1.weighted_homogeneous(w));
  PolyQ f = parse_pq("2*y^3 + y*z + alpha");
  Weights w2{{vid("x"), 2}, {vid("y"), 1}, {vid("z"), 2}};
  CHECK(*f.weighted_degree(w2) == 3);
  CHECK(!f.weighted_homogeneous(w2));  // the parameter term has weight 0
  CHECK(f.weighted_part(w2, 3) == parse_pq("2*y^3 + y*z"));
}

TEST_CASE("printing round trip") {
  for (const char* s : {"x^2 - 2*y^3 - z*y", "-x + 3/2", "w^-3*u + 4*w^-1 - 1/7*u^2",
                        "a*b*c - a^2 + b^-2*c^3"}) {
    PolyQ p = parse_pq(s);
    CHECK(parse_pq(p.to_string()) == p);
  }
  PolyG g = parse_pg("i*x^2 - (1/2 + 3*i)*y + 2");
  CHECK(parse_pg(g.to_string()) == g);
  CHECK(parse_pg("i^2") == PolyG(GaussRat(-1)));
}

TEST_CASE("rational functions canonicalize") {
  RatFnQ f = parse_q("(x^2 - 1)/(x - 1)");
  CHECK(f.is_poly());
  CHECK(f.as_poly() == parse_pq("x + 1"));
  RatFnQ g = parse_q("1/(2*x - 2)");
  CHECK(g.den().to_string() == "x - 1");  // monic denominator
  CHECK(g.num() == PolyQ(rat_parse("1/2")));
  // common monomial factors move to the numerator
  RatFnQ h(parse_pq("y"), parse_pq("x^2*y"));
  CHECK(h == parse_q("x^-2"));
  CHECK(h.is_poly());
  RatFnQ k = parse_q("x/(x + y)") + parse_q("y/(x + y)");
  CHECK(k == RatFnQ(1));
  CHECK(parse_q("(x + y)/(x - y)") != parse_q("(x - y)/(x + y)"));
}

TEST_CASE("rational function calculus") {
  VarId x = vid("x"), y = vid("y");
  RatFnQ f = parse_q("x/(x + y)");
  CHECK(f.diff(x) == parse_q("y/(x + y)^2"));
  RatFnQ g = subst_rf(parse_q("1/x"), x, parse_q("y^2 - 1"));
  CHECK(g == parse_q("1/(y^2 - 1)"));
  CHECK(subst_rf(g, y, parse_q("1/2")) == parse_q("-4/3"));
}

TEST_CASE("exact division") {
  PolyQ n = parse_pq("x^3*y - x*y^3");
  auto q = try_exact_divide(n, parse_pq("x*y"));
  REQUIRE(q);
  CHECK(*q == parse_pq("x^2 - y^2"));
  CHECK(!try_exact_divide(parse_pq("x^2 + 1"), parse_pq("x + 1")));
  CHECK(!try_exact_divide(parse_pq("x"), parse_pq("x + y")));
  auto r = try_exact_divide(parse_pq("x^2 - 2*x*y + y^2"), parse_pq("x - y"));
  REQUIRE(r);
  CHECK(*r == parse_pq("x - y"));
}

TEST_CASE("linear solving with rank bookkeeping") {
  auto r = [](const char* s) { return rat_parse(s); };
  Mat<Rat> A{{r("1"), r("1")}, {r("2"), r("2")}};
  auto sol = solve_linear(A, {r("3"), r("6")});
  CHECK(sol.consistent);
  CHECK(sol.rank == 1);
  REQUIRE(sol.kernel.size() == 1);
  CHECK(sol.particular[0] == 3);
  CHECK(sol.particular[1] == 0);
  CHECK(sol.kernel[0][0] == -1);
  CHECK(sol.kernel[0][1] == 1);
  auto bad = solve_linear(A, {r("3"), r("5")});
  CHECK(!bad.consistent);
  Mat<Rat> B{{r("2"), r("1")}, {r("1"), r("-1")}};
  auto s2 = solve_linear(B, {r("1"), r("2")});
  CHECK(s2.rank == 2);
  CHECK(s2.particular[0] == 1);
  CHECK(s2.particular[1] == -1);
  CHECK(s2.kernel.empty());
}

TEST_CASE("linear solving over a rational function field") {
  RatFnQ a = parse_q("alpha");
  Mat<RatFnQ> A{{RatFnQ(1), a}, {RatFnQ(0), RatFnQ(0)}};
  auto sol = solve_linear(A, {RatFnQ(1), RatFnQ(0)});
  CHECK(sol.consistent);
  CHECK(sol.rank == 1);
  REQUIRE(sol.kernel.size() == 1);
  CHECK(sol.kernel[0][0] == -a);
  CHECK(sol.kernel[0][1] == RatFnQ(1));
}

TEST_CASE("determinants agree between gauss and bareiss") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> d(-5, 5);
  auto div = [](const Rat& a, const Rat& b) { return a / b; };
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 1 + trial % 5;
    Mat<Rat> A(n, std::vector<Rat>(n));
    for (auto& row : A)
      for (auto& x : row) x = d(rng);
    CHECK(det_gauss(A) == det_bareiss<Rat>(A, div));
  }
}

TEST_CASE("resultants") {
  VarId x = vid("x");
  CHECK(resultant(parse_pq("x^2 - 1"), parse_pq("x - 2"), x) == PolyQ(3));
  CHECK(resultant(parse_pq("x - a"), parse_pq("x - b"), x) == parse_pq("a - b"));
  // shared root makes the resultant vanish
  CHECK(resultant(parse_pq("x^2 - 1"), parse_pq("x^2 + 2*x + 1"), x) == PolyQ(0));
}

TEST_CASE("rational root finding") {
  VarId t = vid("t");
  PolyQ f = parse_pq("(2*t - 3)*(t + 1)*(t - 2)*t");
  auto roots = rational_roots(f, t);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == rat_parse("3/2"));
  CHECK(roots[3] == 2);
}

TEST_CASE("rational eigenvalues through parameters") {
  Mat<PolyQ> A{{parse_pq("4"), parse_pq("1"), parse_pq("alpha")},
               {parse_pq("0"), parse_pq("2"), parse_pq("1")},
               {parse_pq("0"), parse_pq("0"), parse_pq("3")}};
  auto ev = eigenvalues_rational(A);
  REQUIRE(ev);
  CHECK(*ev == std::vector<Rat>{2, 3, 4});
  Mat<PolyQ> B{{parse_pq("0"), parse_pq("-1")}, {parse_pq("1"), parse_pq("0")}};
  CHECK(!eigenvalues_rational(B));  // eigenvalues are imaginary
}

TEST_CASE("complex evaluation") {
  PolyQ p = parse_pq("x^2 + 1");
  std::map<VarId, std::complex<double>, VarLess> at{{vid("x"), {0.0, 1.0}}};
  CHECK(std::abs(p.eval_c(at)) < 1e-15);
  RatFnQ f = parse_q("1/x");
  std::map<VarId, std::complex<double>, VarLess> at2{{vid("x"), {0.0, 2.0}}};
  CHECK(std::abs(f.eval_c(at2) - std::complex<double>(0.0, -0.5)) < 1e-15);
}
