#pragma once

#include <vector>

#include "spets/matrix.hpp"

namespace spets {

struct SmithResult {
  std::vector<Int> invariants;  // nonzero diagonal entries d1 | d2 | ...
  long rank = 0;
};

// Smith normal form of an integer matrix via elementary row/column operations.
inline SmithResult smith_normal_form(IntMatrix m) {
  long rows = m.rows(), cols = m.cols();
  SmithResult result;
  long t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of least absolute value in the submatrix
    long pi = -1, pj = -1;
    Int best;
    for (long i = t; i < rows; ++i)
      for (long j = t; j < cols; ++j) {
        if (m.at(i, j) == 0) continue;
        Int a = abs(m.at(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    if (pi != t)
      for (long j = 0; j < cols; ++j) std::swap(m.at(pi, j), m.at(t, j));
    if (pj != t)
      for (long i = 0; i < rows; ++i) std::swap(m.at(i, pj), m.at(i, t));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (long i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        for (long j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) {
          // remainder smaller than pivot: swap it up and restart
          for (long j = 0; j < cols; ++j) std::swap(m.at(i, j), m.at(t, j));
          clean = false;
        }
      }
      if (!clean) continue;
      for (long j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        for (long i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) {
          for (long i = 0; i < rows; ++i) std::swap(m.at(i, j), m.at(i, t));
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry; merge offending rows
      for (long i = t + 1; i < rows && clean; ++i)
        for (long j = t + 1; j < cols && clean; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (long k = t; k < cols; ++k) m.at(t, k) += m.at(i, k);
            clean = false;
          }
    }
    ++t;
  }
  for (long i = 0; i < t; ++i) {
    Int d = abs(m.at(i, i));
    if (d != 0) result.invariants.push_back(d);
  }
  result.rank = static_cast<long>(result.invariants.size());
  return result;
}

}  // namespace spets
