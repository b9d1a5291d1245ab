#pragma once

#include <cctype>
#include <stdexcept>

#include "painleve/poly.hpp"

namespace painleve {

// Exact quotient N/D, or nullopt when D does not divide N.
// Works on Laurent polynomials: both sides are shifted to ordinary
// polynomials with per-variable minimum exponent 0 first, which preserves
// divisibility up to a monomial unit.
template <class K>
std::optional<Poly<K>> try_exact_divide(const Poly<K>& N, const Poly<K>& D) {
  assert(!D.is_zero());
  if (N.is_zero()) return Poly<K>(0);
  Expo mN = N.support_min(), mD = D.support_min();
  Poly<K> R = N.mul_mono(K(1), expo_neg(mN));
  Poly<K> Dn = D.mul_mono(K(1), expo_neg(mD));
  Expo ltD = Dn.leading_expo();
  K lcD = Dn.coeff(ltD);
  Poly<K> Q;
  while (!R.is_zero()) {
    Expo ltR = R.leading_expo();
    // monomial divisibility over ordinary (nonnegative) exponents
    for (auto& [v, k] : ltD) {
      auto it = ltR.find(v);
      if (it == ltR.end() || it->second < k) return std::nullopt;
    }
    Expo t = expo_sub(ltR, ltD);
    K c = R.coeff(ltR) / lcD;
    Q.add_term(t, c);
    R -= Dn.mul_mono(c, t);
  }
  return Q.mul_mono(K(1), expo_sub(mN, mD));
}

template <class K>
class RatFn {
 public:
  RatFn() : n_(0), d_(1) {}
  RatFn(const K& c) : n_(c), d_(1) {}
  RatFn(long c) : n_(c), d_(1) {}
  RatFn(int c) : n_(c), d_(1) {}
  RatFn(const Poly<K>& p) : n_(p), d_(1) {}
  RatFn(Poly<K> n, Poly<K> d) : n_(std::move(n)), d_(std::move(d)) { canon(); }

  static RatFn var(VarId v, long e = 1) { return RatFn(Poly<K>::var(v, e)); }

  const Poly<K>& num() const { return n_; }
  const Poly<K>& den() const { return d_; }
  bool is_zero() const { return n_.is_zero(); }

  bool is_poly() const { return d_ == Poly<K>(1); }
  const Poly<K>& as_poly() const {
    assert(is_poly());
    return n_;
  }

  RatFn operator-() const {
    RatFn out;
    out.n_ = -n_;
    out.d_ = d_;
    return out;
  }
  RatFn operator+(const RatFn& o) const { return RatFn(n_ * o.d_ + o.n_ * d_, d_ * o.d_); }
  RatFn operator-(const RatFn& o) const { return RatFn(n_ * o.d_ - o.n_ * d_, d_ * o.d_); }
  RatFn operator*(const RatFn& o) const { return RatFn(n_ * o.n_, d_ * o.d_); }
  RatFn operator/(const RatFn& o) const {
    assert(!o.n_.is_zero());
    return RatFn(n_ * o.d_, d_ * o.n_);
  }
  RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
  RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
  RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
  RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }

  bool operator==(const RatFn& o) const { return n_ * o.d_ == o.n_ * d_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  RatFn pow(long e) const {
    if (e == 0) return RatFn(1);
    if (e < 0) {
      assert(!n_.is_zero());
      RatFn inv;
      inv.n_ = d_;
      inv.d_ = n_;
      inv.canon();
      return inv.pow(-e);
    }
    RatFn out(1), base = *this;
    while (e > 0) {
      if (e & 1) out *= base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }

  RatFn diff(VarId v) const { return RatFn(n_.diff(v) * d_ - n_ * d_.diff(v), d_ * d_); }

  std::complex<double> eval_c(const std::map<VarId, std::complex<double>, VarLess>& vals) const {
    return n_.eval_c(vals) / d_.eval_c(vals);
  }
  std::optional<K> eval_K(const std::map<VarId, K, VarLess>& vals) const {
    K dv = d_.eval_K(vals);
    if (painleve::is_zero(dv)) return std::nullopt;
    return n_.eval_K(vals) / dv;
  }

  template <class K2>
  RatFn<K2> convert() const {
    return RatFn<K2>(n_.template convert<K2>(), d_.template convert<K2>());
  }

  std::string to_string() const {
    if (is_poly()) return n_.to_string();
    return "(" + n_.to_string() + ")/(" + d_.to_string() + ")";
  }

 private:
  Poly<K> n_, d_;

  void canon() {
    assert(!d_.is_zero());
    if (n_.is_zero()) {
      d_ = Poly<K>(1);
      return;
    }
    Expo m = d_.support_min();
    if (!m.empty()) {
      d_ = d_.mul_mono(K(1), expo_neg(m));
      n_ = n_.mul_mono(K(1), expo_neg(m));
    }
    if (!d_.is_const()) {
      if (auto q = try_exact_divide(n_, d_)) {
        n_ = *q;
        d_ = Poly<K>(1);
        return;
      }
    }
    K lc = d_.leading_coeff();
    if (!is_one(lc)) {
      K ilc = coeff_inv(lc);
      d_ = d_.scale(ilc);
      n_ = n_.scale(ilc);
    }
  }
};

template <class K>
bool is_zero(const RatFn<K>& r) {
  return r.is_zero();
}

// substitute several variables by rational functions at once
template <class K>
RatFn<K> subst_many_rf(const Poly<K>& p, const std::map<VarId, RatFn<K>, VarLess>& vals) {
  RatFn<K> out(0);
  for (auto& [e, c] : p.terms()) {
    RatFn<K> term{Poly<K>(c)};
    Expo untouched;
    for (auto& [v, k] : e) {
      auto it = vals.find(v);
      if (it == vals.end()) untouched[v] = k;
      else term *= it->second.pow(k);
    }
    term *= RatFn<K>(Poly<K>::mono(K(1), untouched));
    out += term;
  }
  return out;
}

template <class K>
RatFn<K> subst_many_rf(const RatFn<K>& f, const std::map<VarId, RatFn<K>, VarLess>& vals) {
  return subst_many_rf(f.num(), vals) / subst_many_rf(f.den(), vals);
}

template <class K>
RatFn<K> subst_rf(const RatFn<K>& f, VarId v, const RatFn<K>& val) {
  std::map<VarId, RatFn<K>, VarLess> m;
  m.emplace(v, val);
  return subst_many_rf(f, m);
}

using RatFnQ = RatFn<Rat>;
using RatFnG = RatFn<GaussRat>;

// --- expression parsing ---------------------------------------------------

template <class K>
class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s), i_(0) {}

  RatFn<K> parse() {
    RatFn<K> out = expr();
    skip();
    if (i_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  const std::string& s_;
  size_t i_;

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at position " + std::to_string(i_) + ": " + why +
                                " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && isspace((unsigned char)s_[i_])) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFn<K> expr() {
    RatFn<K> out = term();
    for (;;) {
      if (eat('+')) out += term();
      else if (eat('-')) out -= term();
      else return out;
    }
  }
  RatFn<K> term() {
    RatFn<K> out = factor();
    for (;;) {
      if (eat('*')) out *= factor();
      else if (eat('/')) {
        RatFn<K> f = factor();
        if (f.is_zero()) fail("division by zero");
        out /= f;
      } else return out;
    }
  }
  RatFn<K> factor() {
    bool neg = false;
    for (;;) {
      if (eat('-')) neg = !neg;
      else if (eat('+')) continue;
      else break;
    }
    RatFn<K> a = atom();
    if (eat('^')) {
      long e = int_exp();
      if (a.is_zero() && e < 0) fail("zero to a negative power");
      a = a.pow(e);
    }
    return neg ? -a : a;
  }
  long int_exp() {
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    if (i_ >= s_.size() || !isdigit((unsigned char)s_[i_])) fail("expected integer exponent");
    long v = 0;
    while (i_ < s_.size() && isdigit((unsigned char)s_[i_])) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
    }
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -v : v;
  }
  RatFn<K> atom() {
    char c = peek();
    if (c == '(') {
      ++i_;
      RatFn<K> out = expr();
      if (!eat(')')) fail("expected ')'");
      return out;
    }
    if (isdigit((unsigned char)c)) {
      std::string digits;
      while (i_ < s_.size() && isdigit((unsigned char)s_[i_])) digits += s_[i_++];
      return RatFn<K>(K(Rat(mpz_class(digits))));
    }
    if (isalpha((unsigned char)c) || c == '_') {
      std::string name;
      while (i_ < s_.size() &&
             (isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) name += s_[i_++];
      if constexpr (std::same_as<K, GaussRat>) {
        if (name == "i") return RatFn<K>(GaussRat::iu());
      }
      return RatFn<K>::var(vid(name));
    }
    fail("unexpected character");
  }
};

template <class K>
RatFn<K> parse_rf(const std::string& s) {
  return ExprParser<K>(s).parse();
}
template <class K>
Poly<K> parse_poly(const std::string& s) {
  RatFn<K> f = parse_rf<K>(s);
  if (!f.is_poly()) throw std::invalid_argument("not a polynomial: " + s);
  return f.as_poly();
}

inline RatFnQ parse_q(const std::string& s) { return parse_rf<Rat>(s); }
inline PolyQ parse_pq(const std::string& s) { return parse_poly<Rat>(s); }
inline RatFnG parse_g(const std::string& s) { return parse_rf<GaussRat>(s); }
inline PolyG parse_pg(const std::string& s) { return parse_poly<GaussRat>(s); }

}  // namespace painleve
