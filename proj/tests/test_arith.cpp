#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "spets/cyclotomic.hpp"
#include "spets/matrix.hpp"
#include "spets/smith.hpp"
#include "spets/subspace.hpp"
#include "spets/valuation.hpp"

using namespace spets;

TEST_CASE("nu_ell basics") {
  CHECK(nu_ell(Int(63), 3) == 2);  // 63 = 9 * 7
  CHECK(nu_ell(Int(5), 3) == 0);
  CHECK(nu_ell(Int(-24), 2) == 3);
  CHECK_THROWS_AS(nu_ell(Int(0), 3), Error);
  CHECK_THROWS_AS(nu_ell(Int(6), 4), Error);
}

TEST_CASE("nu_ell dividing property on random samples") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> pick_n(-100000, 100000);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 200; ++trial) {
    long n = pick_n(rng);
    if (n == 0) continue;
    long ell = primes[rng() % 6];
    long k = nu_ell(Int(n), ell);
    Int pk = pow_int(Int(ell), k);
    CHECK(Int(n) % pk == 0);
    CHECK(Int(n) % (pk * ell) != 0);
  }
}

TEST_CASE("cyclotomic arithmetic canonical forms") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  // 1 + z + z^2 = 0 in Q(zeta_3)
  CHECK((Cyclotomic(1) + z3 + z3 * z3).is_zero());
  CHECK(z3.pow(3) == Cyclotomic(1));
  CHECK(z3.order_as_root_of_unity() == 3);
  CHECK((-z3 * z3).order_as_root_of_unity() == 6);
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1));

  // cross-conductor equality: zeta_6^3 = -1 and zeta_6^2 = zeta_3
  Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
  CHECK(z6.pow(3) == Cyclotomic(-1));
  CHECK(z6.pow(2) == z3);

  // field inverse
  Cyclotomic a = z3 + Cyclotomic(2);
  CHECK(a * a.inverse() == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), Error);
}

TEST_CASE("nu_ell_factor examples") {
  ZetaSpec z32 = choose_zeta(2, 3);
  CHECK(nu_ell_factor(1, Cyclotomic(-1), z32) == 1);  // nu_3(2+1)
  CHECK(nu_ell_factor(1, Cyclotomic(1), z32) == 0);   // 2-1=1
  ZetaSpec z72 = choose_zeta(2, 7);
  CHECK(nu_ell_factor(3, Cyclotomic(1), z72) == 1);  // nu_7(2^3 - 1)
  // order not dividing ell - 1 is rejected
  ZetaSpec z34 = choose_zeta(4, 3);
  CHECK_THROWS_AS(nu_ell_factor(1, Cyclotomic::root_of_unity(5, 1), z34), Error);
}

TEST_CASE("nu_ell_factor agrees with literal big-integer evaluation") {
  std::mt19937_64 rng(99);
  const long primes[] = {3, 5, 7, 11, 13};
  const long qs[] = {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27};
  int done = 0;
  while (done < 200) {
    long ell = primes[rng() % 5];
    long q = qs[rng() % 11];
    if (q % ell == 0) continue;
    long d = 1 + static_cast<long>(rng() % 12);
    long sign = (rng() % 2) ? 1 : -1;
    ZetaSpec z = choose_zeta(q, ell);
    Int direct = pow_int(Int(q), d) - sign;
    CHECK(nu_ell_factor(d, Cyclotomic(sign), z) == nu_ell(direct, ell));
    ++done;
  }
  // same agreement for ell = 2
  for (long q : {3L, 5L, 7L, 9L, 11L})
    for (long d = 1; d <= 6; ++d)
      for (long sign : {1L, -1L}) {
        ZetaSpec z = choose_zeta(q, 2);
        CHECK(nu_ell_factor(d, Cyclotomic(sign), z) ==
              nu_ell(pow_int(Int(q), d) - sign, 2));
      }
}

TEST_CASE("eval_order_poly_valuation examples") {
  // |A1|(x) = x (x^2 - 1)
  FactoredOrderPoly a1;
  a1.x_power = 1;
  a1.factors = {{2, Cyclotomic(1)}};
  CHECK(eval_order_poly_valuation(a1, choose_zeta(2, 3)) == 1);

  FactoredOrderPoly torus;
  torus.x_power = 0;
  torus.factors = {{1, Cyclotomic(1)}};
  CHECK(eval_order_poly_valuation(torus, choose_zeta(2, 3)) == 0);

  // |A2|(x) = x^3 (x^2 - 1)(x^3 - 1)
  FactoredOrderPoly a2;
  a2.x_power = 3;
  a2.factors = {{2, Cyclotomic(1)}, {3, Cyclotomic(1)}};
  CHECK(eval_order_poly_valuation(a2, choose_zeta(2, 7)) == 1);
  CHECK(a2.degree() == 8);
}

TEST_CASE("smith normal form examples") {
  IntMatrix d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 3;
  SmithResult r = smith_normal_form(d);
  REQUIRE(r.invariants.size() == 2);
  CHECK(r.invariants[0] == 1);
  CHECK(r.invariants[1] == 6);

  IntMatrix zero(3, 2);
  r = smith_normal_form(zero);
  CHECK(r.invariants.empty());
  CHECK(r.rank == 0);

  IntMatrix ones(2, 2);
  ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
  r = smith_normal_form(ones);
  REQUIRE(r.invariants.size() == 1);
  CHECK(r.invariants[0] == 1);
  CHECK(r.rank == 1);
}

namespace {

// gcd of all k x k minors, brute force; the independent oracle for SNF
Int minor_gcd(const IntMatrix& m, long k) {
  std::vector<long> ri(k), ci(k);
  Int g = 0;
  std::function<void(long, long)> pick_cols = [&](long pos, long start) {
    if (pos == k) {
      // determinant of the selected submatrix by cofactor expansion
      std::function<Int(std::vector<long>, std::vector<long>)> det =
          [&](std::vector<long> rs, std::vector<long> cs) -> Int {
        if (rs.empty()) return Int(1);
        Int s = 0;
        for (size_t i = 0; i < rs.size(); ++i) {
          std::vector<long> rs2;
          for (size_t t = 0; t < rs.size(); ++t)
            if (t != i) rs2.push_back(rs[t]);
          std::vector<long> cs2(cs.begin() + 1, cs.end());
          Int term = m.at(rs[i], cs[0]) * det(rs2, cs2);
          if (i % 2) term = -term;
          s += term;
        }
        return s;
      };
      Int d = det(ri, ci);
      g = gcd(g, d);
      return;
    }
    for (long c = start; c < m.cols(); ++c) {
      ci[pos] = c;
      pick_cols(pos + 1, c + 1);
    }
  };
  std::function<void(long, long)> pick_rows = [&](long pos, long start) {
    if (pos == k) {
      pick_cols(0, 0);
      return;
    }
    for (long r = start; r < m.rows(); ++r) {
      ri[pos] = r;
      pick_rows(pos + 1, r + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

}  // namespace

TEST_CASE("smith invariants: divisibility chain and determinantal divisors") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m(4, 4);
    for (long i = 0; i < 4; ++i)
      for (long j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
    SmithResult r = smith_normal_form(m);
    for (size_t i = 1; i < r.invariants.size(); ++i)
      CHECK(r.invariants[i] % r.invariants[i - 1] == 0);
    if (r.rank > 0) {
      Int prod = 1;
      for (const Int& d : r.invariants) prod *= d;
      CHECK(prod == abs(minor_gcd(m, r.rank)));
    }
  }
}

namespace {

SubspaceCF line(const std::vector<long>& coords) {
  Matrix<Cyclotomic> m(1, static_cast<long>(coords.size()));
  for (size_t j = 0; j < coords.size(); ++j) m.at(0, j) = Cyclotomic(coords[j]);
  return SubspaceCF::from_rows(m, static_cast<long>(coords.size()), 1);
}

}  // namespace

TEST_CASE("subspace operations") {
  SubspaceCF whole = SubspaceCF::full(2);
  SubspaceCF origin = SubspaceCF::zero(2);
  SubspaceCF l1 = line({1, 0});
  SubspaceCF l2 = line({1, 1});

  CHECK(intersect(whole, l1) == l1);
  CHECK(subspace_leq(origin, l2));
  CHECK(intersect(l1, l2) == origin);
  CHECK(intersect(l1, l1) == l1);
  CHECK(sum(l1, l2) == whole);
  CHECK(subspace_leq(l1, whole));
  CHECK(!subspace_leq(l1, l2));
  CHECK_THROWS_AS(intersect(l1, SubspaceCF::full(3)), Error);
}

TEST_CASE("subspace canonical form idempotent, intersection monotone") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-3, 3);
  auto random_subspace = [&](long ambient) {
    long rows = 1 + static_cast<long>(rng() % ambient);
    Matrix<Cyclotomic> m(rows, ambient);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < ambient; ++j) m.at(i, j) = Cyclotomic(entry(rng));
    return SubspaceCF::from_rows(m, ambient, 1);
  };
  for (int trial = 0; trial < 25; ++trial) {
    SubspaceCF a = random_subspace(3), b = random_subspace(3), c = random_subspace(3);
    // canonicalization is idempotent
    CHECK(SubspaceCF::from_rows(a.basis(), 3, 1) == a);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
    CHECK(subspace_leq(intersect(a, b), a));
    if (subspace_leq(a, b)) CHECK(subspace_leq(intersect(a, c), intersect(b, c)));
  }
}

TEST_CASE("choose_zeta") {
  ZetaSpec z = choose_zeta(2, 3);
  CHECK(z.e == 2);
  CHECK(z.zeta == Cyclotomic(-1));
  CHECK(z.residue == 2);

  z = choose_zeta(4, 3);
  CHECK(z.e == 1);
  CHECK(z.zeta == Cyclotomic(1));

  z = choose_zeta(2, 7);
  CHECK(z.e == 3);
  CHECK(z.residue == 2);
  CHECK(z.zeta == Cyclotomic::root_of_unity(3, 1));
  CHECK(teichmuller_residue(z.zeta, z) == 2);

  // ell = 2 uses the mod-4 rule
  z = choose_zeta(5, 2);
  CHECK(z.e == 1);
  CHECK(z.zeta == Cyclotomic(1));
  z = choose_zeta(7, 2);
  CHECK(z.e == 2);
  CHECK(z.zeta == Cyclotomic(-1));

  CHECK_THROWS_AS(choose_zeta(2, 2), Error);
  CHECK_THROWS_AS(choose_zeta(6, 3), Error);
}

TEST_CASE("teichmuller residues are multiplicative and consistent") {
  ZetaSpec z = choose_zeta(2, 7);  // e = 3
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
  long r3 = teichmuller_residue(z3, z);
  long r6 = teichmuller_residue(z6, z);
  CHECK(r3 == 2);                    // pinned to q mod ell
  CHECK((r6 * r6) % 7 == r3);        // z6^2 = z3
  CHECK(teichmuller_residue(Cyclotomic(-1), z) == 6);
  CHECK(pow_mod(r6, 6, 7) == 1);
  CHECK(pow_mod(r6, 3, 7) == 6);     // z6^3 = -1
}
