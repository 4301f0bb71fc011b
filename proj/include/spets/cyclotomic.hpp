#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "spets/poly.hpp"

namespace spets {

// Element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1} modulo the
// n-th cyclotomic polynomial. The reduced coefficient vector is the canonical
// form: two elements with the same conductor are equal iff their coefficient
// vectors are equal.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}

  explicit Cyclotomic(const Rat& value, long conductor = 1)
      : conductor_(conductor), coeffs_(basis_size(conductor)) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
  }

  Cyclotomic(long value) : Cyclotomic(Rat(value)) {}  // NOLINT: implicit on purpose

  static Cyclotomic root_of_unity(long n, long k) {
    if (n < 1) throw Error("root_of_unity needs n >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> raw(static_cast<size_t>(k) + 1);
    raw[k] = 1;
    return Cyclotomic(n, reduce(raw, n));
  }

  long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const Rat& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  Rat rational_value() const {
    if (!is_rational()) throw Error("not a rational value");
    return coeffs_[0];
  }

  Cyclotomic promoted(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw Error("conductor does not divide target");
    long step = m / conductor_;
    std::vector<Rat> raw(static_cast<size_t>((basis_size(conductor_) - 1) * step) + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    return Cyclotomic(m, reduce(raw, m));
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
      x.coeffs_[i] += y.coeffs_[i];
      x.coeffs_[i].canonicalize();
    }
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
      x.coeffs_[i] -= y.coeffs_[i];
      x.coeffs_[i].canonicalize();
    }
    return x;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    std::vector<Rat> raw(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < y.coeffs_.size(); ++j) raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Cyclotomic(x.conductor_, reduce(raw, x.conductor_));
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (is_rational()) {
      Cyclotomic r = *this;
      r.coeffs_[0] = 1 / r.coeffs_[0];
      return r;
    }
    // extended euclid in Q[x] against the cyclotomic modulus
    PolyQ a(coeffs_.begin(), coeffs_.end());
    poly_trim(a);
    PolyQ b;
    for (const Int& c : cyclotomic_polynomial(conductor_)) b.emplace_back(c);
    PolyQ r0 = b, r1 = a, s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
      // divide r0 by r1
      PolyQ q;
      PolyQ rem = r0;
      while (!rem.empty() && rem.size() >= r1.size()) {
        Rat c = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] += c;
        for (size_t i = 0; i < r1.size(); ++i) {
          rem[shift + i] -= c * r1[i];
          rem[shift + i].canonicalize();
        }
        poly_trim(rem);
      }
      PolyQ s2 = poly_sub(s0, poly_mul(q, s1));
      r0 = r1;
      r1 = rem;
      s0 = s1;
      s1 = s2;
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible
    if (r0.size() != 1) throw Error("inverse failed: gcd not constant");
    std::vector<Rat> raw(s0.size());
    for (size_t i = 0; i < s0.size(); ++i) raw[i] = s0[i] / r0[0];
    return Cyclotomic(conductor_, reduce(raw, conductor_));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = align(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r(Rat(1), conductor_);
    Cyclotomic base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // order as a root of unity; throws if this is not a root of unity
  long order_as_root_of_unity() const {
    long bound = (conductor_ % 2 == 0) ? conductor_ : 2 * conductor_;
    Cyclotomic one(Rat(1), conductor_);
    Cyclotomic p = *this;
    for (long k = 1; k <= bound; ++k) {
      if (p == one) return k;
      p = p * *this;
    }
    throw Error("not a root of unity");
  }

  std::string str() const {
    std::ostringstream os;
    os << "c" << conductor_ << ":";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) os << ",";
      os << coeffs_[i].get_str();
    }
    return os.str();
  }

  // short human form, e.g. "1", "-1", "z3^2"
  std::string pretty() const {
    if (is_rational()) return coeffs_[0].get_str();
    for (long k = 1; k < conductor_; ++k)
      if (*this == root_of_unity(conductor_, k)) {
        std::ostringstream os;
        os << "z" << conductor_;
        if (k != 1) os << "^" << k;
        return os.str();
      }
    return str();
  }

 private:
  Cyclotomic(long conductor, std::vector<Rat> reduced)
      : conductor_(conductor), coeffs_(std::move(reduced)) {}

  static long basis_size(long n) {
    return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
  }

  static std::vector<Rat> reduce(std::vector<Rat> raw, long n) {
    const PolyZ& modulus = cyclotomic_polynomial(n);
    size_t deg = modulus.size() - 1;
    if (raw.size() < deg) raw.resize(deg);
    for (size_t i = raw.size(); i-- > deg;) {
      Rat c = raw[i];
      if (c == 0) continue;
      raw[i] = 0;
      for (size_t j = 0; j < deg; ++j) {
        raw[i - deg + j] -= c * modulus[j];
        raw[i - deg + j].canonicalize();
      }
    }
    raw.resize(deg);
    for (Rat& c : raw) c.canonicalize();
    return raw;
  }

  static std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return {a, b};
    long l = std::lcm(a.conductor_, b.conductor_);
    return {a.promoted(l), b.promoted(l)};
  }

  long conductor_;
  std::vector<Rat> coeffs_;
};

}  // namespace spets
