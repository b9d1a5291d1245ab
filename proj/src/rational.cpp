#include "painleve/rational.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace painleve {

Rat rat_parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace((unsigned char)c)) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::optional<std::string> rat_decimal(const Rat& r) {
  mpz_class den = r.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  int digits = std::max(twos, fives);
  if (digits == 0) return r.get_num().get_str();
  // scale numerator by 10^digits / denominator
  mpz_class p10 = 1;
  for (int i = 0; i < digits; ++i) p10 *= 10;
  mpz_class scaled = r.get_num() * p10 / r.get_den();
  bool neg = scaled < 0;
  mpz_class a = abs(scaled);
  std::string ds = a.get_str();
  while ((int)ds.size() <= digits) ds.insert(ds.begin(), '0');
  ds.insert(ds.end() - digits, '.');
  if (neg) ds.insert(ds.begin(), '-');
  return ds;
}

bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

long rat_long(const Rat& r) {
  assert(rat_is_int(r));
  assert(r.get_num().fits_slong_p());
  return r.get_num().get_si();
}

Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  unsigned long k = invert ? (unsigned long)(-e) : (unsigned long)e;
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), r.get_den().get_mpz_t(), k);
  if (invert) {
    assert(r != 0);
    std::swap(n, d);
  }
  Rat out(n, d);
  out.canonicalize();
  return out;
}

int rat_sgn(const Rat& r) { return sgn(r); }

Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rat out(g, l);
  out.canonicalize();
  return out;
}

std::optional<Rat> rat_kth_root(const Rat& r, long k) {
  assert(k >= 1);
  if (k == 1) return r;
  if (r == 0) return Rat(0);
  if (r < 0 && k % 2 == 0) return std::nullopt;
  mpz_class n = abs(r.get_num()), d = r.get_den(), rn, rd;
  int okn = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), (unsigned long)k);
  int okd = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), (unsigned long)k);
  if (!okn || !okd) return std::nullopt;
  Rat out(rn, rd);
  out.canonicalize();
  if (r < 0) out = -out;
  return out;
}

double rat_double(const Rat& r) { return r.get_d(); }

GaussRat GaussRat::inv() const {
  Rat n = norm();
  assert(n != 0);
  return GaussRat(re / n, -im / n);
}

std::string gauss_str(const GaussRat& z) {
  if (z.im == 0) return rat_str(z.re);
  std::string imp;
  if (z.im == 1) imp = "i";
  else if (z.im == -1) imp = "-i";
  else imp = rat_str(z.im) + "*i";
  if (z.re == 0) return imp;
  std::string out = "(" + rat_str(z.re);
  if (imp[0] != '-') out += "+";
  out += imp + ")";
  return out;
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
  if (z.im == 0) {
    if (auto r = rat_kth_root(z.re, 2)) return GaussRat(*r);
    // sqrt of a negative rational is purely imaginary
    if (z.re < 0)
      if (auto r = rat_kth_root(-z.re, 2)) return GaussRat(Rat(0), *r);
    return std::nullopt;
  }
  // (a+bi)^2 = z: a^2 = (re + |z|)/2 with |z| rational when solvable over Q(i)
  auto n = rat_kth_root(z.norm(), 2);
  if (!n) return std::nullopt;
  Rat a2 = (z.re + *n) / 2;
  auto a = rat_kth_root(a2, 2);
  if (!a || *a == 0) return std::nullopt;
  Rat b = z.im / (2 * *a);
  GaussRat cand(*a, b);
  if (cand * cand == z) return cand;
  return std::nullopt;
}

GaussRat gauss_pow(const GaussRat& z, long e) {
  if (e < 0) return gauss_pow(z.inv(), -e);
  GaussRat out(1), base = z;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

std::string coeff_str(const Rat& r) { return rat_str(r); }
std::string coeff_str(const GaussRat& z) { return gauss_str(z); }

}  // namespace painleve
