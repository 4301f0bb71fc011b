#pragma once

#include <utility>
#include <vector>

#include "spets/zeta.hpp"

namespace spets {

// nu_ell(q^d - eps) for a root of unity eps realizable in Z_ell. For odd ell
// the valuation is zero unless q^d and eps have the same residue mod ell, in
// which case it equals nu_ell(q^{d(ell-1)} - 1); for ell = 2 it is computed
// literally.
inline long nu_ell_factor(long d, const Cyclotomic& eps, const ZetaSpec& z) {
  if (d <= 0) throw Error("factor degree must be positive");
  if (z.ell == 2) {
    Rat r;
    if (eps == Cyclotomic(1))
      r = 1;
    else if (eps == Cyclotomic(-1))
      r = -1;
    else
      throw Error("epsilon not realizable in Z_ell");
    Int value = pow_int(Int(z.q), d) - Int(r.get_num());
    return nu_ell(value, 2);
  }
  long res = teichmuller_residue(eps, z);
  if (pow_mod(z.q, d, z.ell) != res) return 0;
  Int value = pow_int(Int(z.q), static_cast<unsigned long>(d) * (z.ell - 1)) - 1;
  return nu_ell(value, z.ell);
}

// Order polynomial in factored form: x^{x_power} * scalar * prod (x^{d_i} - eps_i).
// The unit scalar never contributes to valuations; it is carried along only
// so the polynomial itself is reproducible.
struct FactoredOrderPoly {
  long x_power = 0;
  std::vector<std::pair<long, Cyclotomic>> factors;  // (d_i, eps_i)
  Cyclotomic scalar = Cyclotomic(1);

  long degree() const {
    long d = x_power;
    for (const auto& [di, eps] : factors) d += di;
    return d;
  }
};

// nu_ell of the order polynomial evaluated at x = q. The x-power contributes
// nothing since ell does not divide q.
inline long eval_order_poly_valuation(const FactoredOrderPoly& p, const ZetaSpec& z) {
  long total = 0;
  for (const auto& [d, eps] : p.factors) total += nu_ell_factor(d, eps, z);
  return total;
}

// the literal integer |value at x = q| of prod (q^{d_i} - eps_i) when all
// factors are rational; used by tests as an independent route
inline Int eval_order_poly_rational(const FactoredOrderPoly& p, long q) {
  Int v = pow_int(Int(q), p.x_power);
  for (const auto& [d, eps] : p.factors) {
    if (!eps.is_rational()) throw Error("nonrational factor");
    Rat r = eps.rational_value();
    if (r.get_den() != 1) throw Error("nonintegral root of unity");
    v *= pow_int(Int(q), d) - r.get_num();
  }
  return v;
}

}  // namespace spets
