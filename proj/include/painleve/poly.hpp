#pragma once

#include <algorithm>
#include <cassert>
#include <concepts>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "painleve/rational.hpp"
#include "painleve/vars.hpp"

namespace painleve {

// sparse exponent vector; entries are nonzero, ordered by variable name
using Expo = std::map<VarId, long, VarLess>;

inline long expo_total(const Expo& e) {
  long t = 0;
  for (auto& [v, k] : e) t += k;
  return t;
}

// lexicographic order on dense exponent vectors (missing variable = 0);
// translation-invariant, so leading terms behave under multiplication
inline bool expo_less(const Expo& a, const Expo& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    long ea, eb;
    if (ib == b.end() || (ia != a.end() && var_less(ia->first, ib->first))) {
      ea = ia->second;
      eb = 0;
      ++ia;
    } else if (ia == a.end() || var_less(ib->first, ia->first)) {
      ea = 0;
      eb = ib->second;
      ++ib;
    } else {
      ea = ia->second;
      eb = ib->second;
      ++ia;
      ++ib;
    }
    if (ea != eb) return ea < eb;
  }
  return false;
}

struct ExpoLess {
  bool operator()(const Expo& a, const Expo& b) const { return expo_less(a, b); }
};

// graded order used for display and leading terms
inline bool grlex_less(const Expo& a, const Expo& b) {
  long ta = expo_total(a), tb = expo_total(b);
  if (ta != tb) return ta < tb;
  return expo_less(a, b);
}

inline Expo expo_mul(const Expo& a, const Expo& b) {
  Expo out = a;
  for (auto& [v, k] : b) {
    long nk = (out.count(v) ? out[v] : 0) + k;
    if (nk == 0) out.erase(v);
    else out[v] = nk;
  }
  return out;
}

inline Expo expo_neg(const Expo& a) {
  Expo out;
  for (auto& [v, k] : a) out[v] = -k;
  return out;
}

inline Expo expo_sub(const Expo& a, const Expo& b) { return expo_mul(a, expo_neg(b)); }

inline Expo expo_scale(const Expo& a, long m) {
  Expo out;
  if (m == 0) return out;
  for (auto& [v, k] : a) out[v] = k * m;
  return out;
}

std::string expo_str(const Expo& e);  // "x^2*y" style; "" for the empty monomial

using Weights = std::map<VarId, long, VarLess>;

inline long expo_weighted(const Expo& e, const Weights& w) {
  long t = 0;
  for (auto& [v, k] : e) {
    auto it = w.find(v);
    if (it != w.end()) t += it->second * k;
  }
  return t;
}

template <class K>
class Poly {
 public:
  using TermMap = std::map<Expo, K, ExpoLess>;

  Poly() = default;
  Poly(const K& c) {
    if (!painleve::is_zero(c)) t_[Expo{}] = c;
  }
  Poly(long n) : Poly(K(n)) {}
  Poly(int n) : Poly(K((long)n)) {}

  static Poly var(VarId v, long e = 1) {
    Poly p;
    Expo ex;
    if (e != 0) ex[v] = e;
    p.t_[ex] = K(1);
    return p;
  }
  static Poly mono(const K& c, const Expo& e) {
    Poly p;
    if (!painleve::is_zero(c)) p.t_[e] = c;
    return p;
  }

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_const() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  size_t nterms() const { return t_.size(); }

  K coeff(const Expo& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? K(0) : it->second;
  }
  K coeff_const() const { return coeff(Expo{}); }

  void add_term(const Expo& e, const K& c) {
    if (painleve::is_zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_[e] = c;
    } else {
      it->second += c;
      if (painleve::is_zero(it->second)) t_.erase(it);
    }
  }

  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly out;
    for (auto& [e, c] : t_) out.t_[e] = -c;
    return out;
  }
  Poly operator+(const Poly& o) const {
    Poly out = *this;
    for (auto& [e, c] : o.t_) out.add_term(e, c);
    return out;
  }
  Poly operator-(const Poly& o) const {
    Poly out = *this;
    for (auto& [e, c] : o.t_) out.add_term(e, -c);
    return out;
  }
  Poly operator*(const Poly& o) const {
    Poly out;
    for (auto& [e1, c1] : t_)
      for (auto& [e2, c2] : o.t_) out.add_term(expo_mul(e1, e2), c1 * c2);
    return out;
  }
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  Poly scale(const K& c) const {
    Poly out;
    if (painleve::is_zero(c)) return out;
    for (auto& [e, k] : t_) out.t_[e] = k * c;
    return out;
  }
  Poly mul_mono(const K& c, const Expo& m) const {
    Poly out;
    if (painleve::is_zero(c)) return out;
    for (auto& [e, k] : t_) out.t_[expo_mul(e, m)] = k * c;
    return out;
  }

  // integer power; negative exponents require a single invertible term
  Poly pow(long n) const {
    if (n == 0) return Poly(1);
    if (n < 0) {
      if (t_.size() != 1)
        throw std::domain_error("negative power of a polynomial that is not a monomial");
      auto& [e, c] = *t_.begin();
      return mono(coeff_pow(c, n), expo_scale(e, n));
    }
    Poly out(1), base = *this;
    long k = n;
    while (k > 0) {
      if (k & 1) out *= base;
      base *= base;
      k >>= 1;
    }
    return out;
  }

  Poly diff(VarId v) const {
    Poly out;
    for (auto& [e, c] : t_) {
      auto it = e.find(v);
      if (it == e.end()) continue;
      long k = it->second;
      Expo e2 = e;
      if (k == 1) e2.erase(v);
      else e2[v] = k - 1;
      out.add_term(e2, c * K(k));
    }
    return out;
  }

  Poly subst(VarId v, const Poly& val) const {
    Poly out;
    std::map<long, Poly> powcache;
    for (auto& [e, c] : t_) {
      auto it = e.find(v);
      long k = it == e.end() ? 0 : it->second;
      Expo rest = e;
      if (it != e.end()) rest.erase(v);
      auto pit = powcache.find(k);
      if (pit == powcache.end()) pit = powcache.emplace(k, val.pow(k)).first;
      out += pit->second.mul_mono(c, rest);
    }
    return out;
  }

  Poly subst_many(const std::map<VarId, Poly, VarLess>& vals) const {
    Poly out;
    for (auto& [e, c] : t_) {
      Poly term(c);
      Expo untouched;
      for (auto& [v, k] : e) {
        auto it = vals.find(v);
        if (it == vals.end()) untouched[v] = k;
        else term *= it->second.pow(k);
      }
      out += term.mul_mono(K(1), untouched);
    }
    return out;
  }

  bool has_var(VarId v) const {
    for (auto& [e, c] : t_)
      if (e.count(v)) return true;
    return false;
  }

  std::set<VarId, VarLess> vars_used() const {
    std::set<VarId, VarLess> out;
    for (auto& [e, c] : t_)
      for (auto& [v, k] : e) out.insert(v);
    return out;
  }

  std::optional<long> deg(VarId v) const {
    if (t_.empty()) return std::nullopt;
    std::optional<long> out;
    for (auto& [e, c] : t_) {
      auto it = e.find(v);
      long k = it == e.end() ? 0 : it->second;
      if (!out || k > *out) out = k;
    }
    return out;
  }
  std::optional<long> low(VarId v) const {
    if (t_.empty()) return std::nullopt;
    std::optional<long> out;
    for (auto& [e, c] : t_) {
      auto it = e.find(v);
      long k = it == e.end() ? 0 : it->second;
      if (!out || k < *out) out = k;
    }
    return out;
  }

  // collect the coefficient of v^k (the result no longer involves v)
  Poly coeff_of(VarId v, long k) const {
    Poly out;
    for (auto& [e, c] : t_) {
      auto it = e.find(v);
      long ke = it == e.end() ? 0 : it->second;
      if (ke != k) continue;
      Expo rest = e;
      if (it != e.end()) rest.erase(v);
      out.add_term(rest, c);
    }
    return out;
  }

  Poly drop_above(VarId v, long maxexp) const {
    Poly out;
    for (auto& [e, c] : t_) {
      auto it = e.find(v);
      long k = it == e.end() ? 0 : it->second;
      if (k <= maxexp) out.t_[e] = c;
    }
    return out;
  }
  Poly drop_below(VarId v, long minexp) const {
    Poly out;
    for (auto& [e, c] : t_) {
      auto it = e.find(v);
      long k = it == e.end() ? 0 : it->second;
      if (k >= minexp) out.t_[e] = c;
    }
    return out;
  }

  std::optional<long> weighted_degree(const Weights& w) const {
    std::optional<long> out;
    for (auto& [e, c] : t_) {
      long d = expo_weighted(e, w);
      if (!out || d > *out) out = d;
    }
    return out;
  }
  std::optional<long> weighted_low(const Weights& w) const {
    std::optional<long> out;
    for (auto& [e, c] : t_) {
      long d = expo_weighted(e, w);
      if (!out || d < *out) out = d;
    }
    return out;
  }
  bool weighted_homogeneous(const Weights& w) const {
    auto hi = weighted_degree(w), lo = weighted_low(w);
    return !hi || *hi == *lo;
  }
  Poly weighted_part(const Weights& w, long d) const {
    Poly out;
    for (auto& [e, c] : t_)
      if (expo_weighted(e, w) == d) out.t_[e] = c;
    return out;
  }

  Expo leading_expo() const {  // grlex-largest monomial
    assert(!t_.empty());
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return best->first;
  }
  Expo trailing_expo() const {  // grlex-smallest monomial
    assert(!t_.empty());
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
      if (grlex_less(it->first, best->first)) best = it;
    return best->first;
  }
  K leading_coeff() const { return coeff(leading_expo()); }

  // per-variable minimum exponent over all terms (empty poly -> empty)
  Expo support_min() const {
    Expo out;
    std::set<VarId, VarLess> seen;
    for (auto& [e, c] : t_)
      for (auto& [v, k] : e) seen.insert(v);
    for (VarId v : seen) {
      std::optional<long> m;
      for (auto& [e, c] : t_) {
        auto it = e.find(v);
        long k = it == e.end() ? 0 : it->second;
        if (!m || k < *m) m = k;
      }
      if (m && *m != 0) out[v] = *m;
    }
    return out;
  }

  Rat content() const
    requires std::same_as<K, Rat>
  {
    Rat g(0);
    for (auto& [e, c] : t_) g = rat_gcd(g, c);
    return g;
  }

  template <class K2>
  Poly<K2> convert() const {
    Poly<K2> out;
    for (auto& [e, c] : t_) out.add_term(e, K2(c));
    return out;
  }

  K eval_K(const std::map<VarId, K, VarLess>& vals) const {
    K out(0);
    for (auto& [e, c] : t_) {
      K t = c;
      for (auto& [v, k] : e) {
        auto it = vals.find(v);
        assert(it != vals.end());
        t *= coeff_pow(it->second, k);
      }
      out += t;
    }
    return out;
  }

  std::complex<double> eval_c(const std::map<VarId, std::complex<double>, VarLess>& vals) const;

  std::string to_string() const;

 private:
  TermMap t_;
};

inline std::complex<double> cpow_int(std::complex<double> z, long k) {
  if (k < 0) return 1.0 / cpow_int(z, -k);
  std::complex<double> out(1.0, 0.0);
  while (k > 0) {
    if (k & 1) out *= z;
    z *= z;
    k >>= 1;
  }
  return out;
}

template <class K>
std::complex<double> Poly<K>::eval_c(
    const std::map<VarId, std::complex<double>, VarLess>& vals) const {
  std::complex<double> out(0.0, 0.0);
  for (auto& [e, c] : t_) {
    std::complex<double> t = coeff_complex(c);
    for (auto& [v, k] : e) {
      auto it = vals.find(v);
      assert(it != vals.end());
      t *= cpow_int(it->second, k);
    }
    out += t;
  }
  return out;
}

template <class K>
std::string Poly<K>::to_string() const {
  if (t_.empty()) return "0";
  std::vector<const typename TermMap::value_type*> order;
  for (auto& kv : t_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return grlex_less(b->first, a->first);  // descending
  });
  std::string out;
  bool first = true;
  for (auto* kv : order) {
    const Expo& e = kv->first;
    std::string cs = coeff_str(kv->second);
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string ms = expo_str(e);
    std::string piece;
    if (ms.empty()) piece = mag;
    else if (mag == "1") piece = ms;
    else piece = mag + "*" + ms;
    if (first) {
      out += neg ? "-" + piece : piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

using PolyQ = Poly<Rat>;
using PolyG = Poly<GaussRat>;

}  // namespace painleve
