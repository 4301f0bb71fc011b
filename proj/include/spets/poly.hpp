#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "spets/common.hpp"

namespace spets {

// dense polynomials, coefficients in ascending degree order
using PolyZ = std::vector<Int>;
using PolyQ = std::vector<Rat>;

template <typename P>
inline void poly_trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <typename P>
inline long poly_degree(const P& p) {
  return static_cast<long>(p.size()) - 1;  // -1 for the zero polynomial
}

template <typename P>
inline P poly_mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

template <typename P>
inline P poly_add(const P& a, const P& b) {
  P c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  poly_trim(c);
  return c;
}

template <typename P>
inline P poly_sub(const P& a, const P& b) {
  P c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  poly_trim(c);
  return c;
}

// exact division by a monic divisor; throws if the remainder is nonzero
inline PolyZ poly_divexact_monic(PolyZ num, const PolyZ& den) {
  if (den.empty() || den.back() != 1) throw Error("divisor must be monic");
  poly_trim(num);
  if (num.size() < den.size()) {
    if (!num.empty()) throw Error("inexact polynomial division");
    return {};
  }
  PolyZ q(num.size() - den.size() + 1);
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    Int c = num[i + den.size() - 1];
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw Error("inexact polynomial division");
  return q;
}

inline Int poly_eval(const PolyZ& p, const Int& x) {
  Int r = 0;
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

// n-th cyclotomic polynomial, cached
inline const PolyZ& cyclotomic_polynomial(long n) {
  static std::map<long, PolyZ> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw Error("cyclotomic polynomial needs n >= 1");
  // x^n - 1 divided by all proper cyclotomic factors
  std::function<const PolyZ&(long)> get = [&](long m) -> const PolyZ& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    PolyZ xn(m + 1);
    xn[0] = -1;
    xn[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) xn = poly_divexact_monic(xn, get(d));
    return cache.emplace(m, std::move(xn)).first->second;
  };
  return get(n);
}

}  // namespace spets
