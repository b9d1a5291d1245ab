#include "painleve/linalg.hpp"

#include <algorithm>

namespace painleve {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  assert(n != 0);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly<Rat>& f, VarId v) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  for (auto& [e, c] : f.terms())
    for (auto& [var, k] : e)
      if (var != v) throw std::invalid_argument("rational_roots needs a univariate input");
  long lo = f.low(v).value();
  std::vector<Rat> out;
  Poly<Rat> g = f.mul_mono(Rat(1), Expo{{v, -lo}});
  if (lo > 0) out.push_back(Rat(0));
  long dg = g.deg(v).value();
  if (dg == 0) return out;
  // clear denominators
  mpz_class L = 1;
  for (auto& [e, c] : g.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
    L = l;
  }
  std::vector<mpz_class> a((size_t)dg + 1, mpz_class(0));
  for (auto& [e, c] : g.terms()) {
    long k = e.empty() ? 0 : e.begin()->second;
    Rat scaled = c * Rat(L);
    assert(scaled.get_den() == 1);
    a[(size_t)k] = scaled.get_num();
  }
  assert(a[0] != 0 && a[(size_t)dg] != 0);
  auto horner = [&](const Rat& x) {
    Rat acc(0);
    for (long k = dg; k >= 0; --k) acc = acc * x + Rat(a[(size_t)k]);
    return acc;
  };
  for (auto& p : divisors(a[0]))
    for (auto& q : divisors(a[(size_t)dg])) {
      Rat cand(p, q);
      cand.canonicalize();
      for (int s = 0; s < 2; ++s) {
        Rat x = s ? -cand : cand;
        if (horner(x) == 0 && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Rat>> eigenvalues_rational(const Mat<PolyQ>& A) {
  size_t n = A.size();
  VarId lam = vid("_lambda");
  Mat<PolyQ> M(n, std::vector<PolyQ>(n, PolyQ(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      M[i][j] = -A[i][j];
      if (i == j) M[i][j] += PolyQ::var(lam);
    }
  PolyQ chi = det_poly(std::move(M));
  // candidate roots from the parameter-free specialization
  std::map<VarId, PolyQ, VarLess> zero_params;
  for (VarId v : chi.vars_used())
    if (v != lam) zero_params.emplace(v, PolyQ(0));
  PolyQ chi0 = chi.subst_many(zero_params);
  std::vector<Rat> roots;
  for (auto& r : rational_roots(chi0, lam)) {
    // divide the symbolic charpoly by (lambda - r) as often as it stays exact
    PolyQ lin = PolyQ::var(lam) - PolyQ(r);
    for (;;) {
      auto q = try_exact_divide(chi, lin);
      if (!q) break;
      chi = *q;
      roots.push_back(r);
    }
  }
  if (!(chi == PolyQ(1))) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace painleve
