#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace painleve {

using Rat = mpq_class;

// "a/b" or "a"; throws std::invalid_argument on garbage
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);
// exact decimal string if the reduced denominator is 2^a*5^b, else empty
std::optional<std::string> rat_decimal(const Rat& r);

bool rat_is_int(const Rat& r);
long rat_long(const Rat& r);  // asserts integral and in range
Rat rat_pow(const Rat& r, long e);
int rat_sgn(const Rat& r);
// gcd(p1,p2)/lcm(q1,q2) >= 0; gcd(x,0)=|x|
Rat rat_gcd(const Rat& a, const Rat& b);
std::optional<Rat> rat_kth_root(const Rat& r, long k);
double rat_double(const Rat& r);

// Gaussian rationals, for group actions that mix in fourth roots of unity
struct GaussRat {
  Rat re, im;
  GaussRat() : re(0), im(0) {}
  GaussRat(long n) : re(n), im(0) {}
  GaussRat(int n) : re(n), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussRat iu() { return GaussRat(Rat(0), Rat(1)); }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat inv() const;
  GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }
  GaussRat& operator+=(const GaussRat& o) { *this = *this + o; return *this; }
  GaussRat& operator-=(const GaussRat& o) { *this = *this - o; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
  GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }

  GaussRat conj() const { return GaussRat(re, -im); }
  Rat norm() const { return re * re + im * im; }
};

std::string gauss_str(const GaussRat& z);
std::optional<GaussRat> gauss_sqrt(const GaussRat& z);
GaussRat gauss_pow(const GaussRat& z, long e);

// coefficient-field hooks shared by the polynomial templates
inline bool is_zero(const Rat& r) { return r == 0; }
inline bool is_zero(const GaussRat& z) { return z.re == 0 && z.im == 0; }
inline bool is_one(const Rat& r) { return r == 1; }
inline bool is_one(const GaussRat& z) { return z.re == 1 && z.im == 0; }

inline Rat coeff_inv(const Rat& r) { return Rat(1) / r; }
inline GaussRat coeff_inv(const GaussRat& z) { return z.inv(); }
inline Rat coeff_pow(const Rat& r, long e) { return rat_pow(r, e); }
inline GaussRat coeff_pow(const GaussRat& z, long e) { return gauss_pow(z, e); }

std::string coeff_str(const Rat& r);
std::string coeff_str(const GaussRat& z);

inline std::complex<double> coeff_complex(const Rat& r) { return {rat_double(r), 0.0}; }
inline std::complex<double> coeff_complex(const GaussRat& z) {
  return {rat_double(z.re), rat_double(z.im)};
}

}  // namespace painleve
