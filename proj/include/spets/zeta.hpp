#pragma once

#include "spets/cyclotomic.hpp"

namespace spets {

// Fixes the root of unity zeta in Z_ell attached to (q, ell): e is the order
// of q mod ell (mod 4 if ell = 2), residue is q mod ell, and as_cyclotomic is
// the abstract primitive e-th root used for eigenspace computations. For odd
// ell the embedding of roots of unity into Z_ell is pinned by the least
// generator g of (Z/ell)^x with g^((ell-1)/e) = q mod ell; the Teichmueller
// residue of any root of unity is then read off from powers of g.
struct ZetaSpec {
  long ell = 0;
  long q = 0;
  long e = 1;
  long residue = 1;        // q mod ell, in [1, ell-1]
  Cyclotomic zeta;         // primitive e-th root (for ell = 2: +1 or -1)
  long generator = 0;      // embedding generator g (0 when ell = 2)
};

inline ZetaSpec choose_zeta(long q, long ell) {
  if (!is_prime(ell)) throw Error("ell must be prime");
  if (q < 2) throw Error("q must be at least 2");
  if (q % ell == 0) throw Error("ell divides q");
  ZetaSpec z;
  z.ell = ell;
  z.q = q;
  if (ell == 2) {
    z.e = (q % 4 == 1) ? 1 : 2;
    z.residue = 1;
    z.zeta = (z.e == 1) ? Cyclotomic(1) : Cyclotomic(-1);
    z.generator = 0;
    return z;
  }
  z.residue = q % ell;
  z.e = mul_order_mod(z.residue, ell);
  z.zeta = Cyclotomic::root_of_unity(z.e, 1);
  long target = pow_mod(z.residue, 1, ell);
  for (long g = 2; g < ell; ++g) {
    if (mul_order_mod(g, ell) != ell - 1) continue;
    if (pow_mod(g, (ell - 1) / z.e, ell) == target) {
      z.generator = g;
      break;
    }
  }
  if (z.generator == 0) throw Error("no compatible generator found");
  return z;
}

// Teichmueller residue of a root of unity under the embedding fixed by z.
// Rejects roots whose order does not divide ell - 1 (odd ell) or +-1 (ell=2).
inline long teichmuller_residue(const Cyclotomic& eps, const ZetaSpec& z) {
  if (z.ell == 2) {
    if (eps == Cyclotomic(1) || eps == Cyclotomic(-1)) return 1;
    throw Error("epsilon not realizable in Z_ell");
  }
  long k = eps.order_as_root_of_unity();
  if ((z.ell - 1) % k != 0) throw Error("epsilon not realizable in Z_ell");
  long m = std::lcm(k, z.e);
  // locate eps as a power of the canonical primitive m-th root
  long j = -1;
  Cyclotomic zm = Cyclotomic::root_of_unity(m, 1);
  Cyclotomic p(1);
  for (long i = 0; i < m; ++i) {
    if (eps == p) {
      j = i;
      break;
    }
    p = p * zm;
  }
  if (j < 0) throw Error("epsilon not realizable in Z_ell");
  long gm = pow_mod(z.generator, (z.ell - 1) / m, z.ell);
  return pow_mod(gm, j, z.ell);
}

}  // namespace spets
