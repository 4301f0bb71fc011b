#pragma once

#include <string>
#include <vector>

#include "spets/matrix.hpp"

namespace spets {

// Subspace of Q(zeta_n)^ambient stored as a reduced-echelon row basis; the
// echelon form is the canonical representative, so equality of subspaces is
// equality of the stored matrices.
class SubspaceCF {
 public:
  SubspaceCF() : ambient_(0), conductor_(1), basis_(0, 0) {}

  static SubspaceCF zero(long ambient, long conductor = 1) {
    SubspaceCF s;
    s.ambient_ = ambient;
    s.conductor_ = conductor;
    s.basis_ = Matrix<Cyclotomic>(0, ambient);
    return s;
  }

  static SubspaceCF full(long ambient, long conductor = 1) {
    Matrix<Cyclotomic> id(ambient, ambient);
    for (long i = 0; i < ambient; ++i) id.at(i, i) = Cyclotomic(Rat(1), conductor);
    return from_rows(id, ambient, conductor);
  }

  static SubspaceCF from_rows(Matrix<Cyclotomic> rows, long ambient, long conductor) {
    if (rows.cols() != ambient) throw Error("dimension mismatch");
    SubspaceCF s;
    s.ambient_ = ambient;
    s.conductor_ = conductor;
    rref(rows);
    std::vector<long> keep;
    for (long i = 0; i < rows.rows(); ++i)
      for (long j = 0; j < rows.cols(); ++j)
        if (!(rows.at(i, j) == Cyclotomic(0))) {
          keep.push_back(i);
          break;
        }
    Matrix<Cyclotomic> basis(static_cast<long>(keep.size()), ambient);
    for (size_t r = 0; r < keep.size(); ++r)
      for (long j = 0; j < ambient; ++j)
        basis.at(r, j) = rows.at(keep[r], j).promoted(conductor);
    s.basis_ = std::move(basis);
    return s;
  }

  long ambient() const { return ambient_; }
  long conductor() const { return conductor_; }
  long dim() const { return basis_.rows(); }
  const Matrix<Cyclotomic>& basis() const { return basis_; }

  SubspaceCF promoted(long conductor) const {
    if (conductor == conductor_) return *this;
    Matrix<Cyclotomic> rows(basis_.rows(), ambient_);
    for (long i = 0; i < basis_.rows(); ++i)
      for (long j = 0; j < ambient_; ++j) rows.at(i, j) = basis_.at(i, j).promoted(conductor);
    return from_rows(std::move(rows), ambient_, conductor);
  }

  friend SubspaceCF intersect(const SubspaceCF& a, const SubspaceCF& b) {
    auto [x, y] = aligned(a, b);
    long da = x.dim(), db = y.dim();
    if (da == 0 || db == 0) return zero(x.ambient_, x.conductor_);
    // left kernel of the stacked basis gives the coefficient relations
    Matrix<Cyclotomic> stacked(da + db, x.ambient_);
    for (long i = 0; i < da; ++i)
      for (long j = 0; j < x.ambient_; ++j) stacked.at(i, j) = x.basis_.at(i, j);
    for (long i = 0; i < db; ++i)
      for (long j = 0; j < x.ambient_; ++j) stacked.at(da + i, j) = y.basis_.at(i, j);
    Matrix<Cyclotomic> rel = kernel(stacked.transpose());
    Matrix<Cyclotomic> rows(rel.rows(), x.ambient_);
    for (long k = 0; k < rel.rows(); ++k)
      for (long i = 0; i < da; ++i) {
        const Cyclotomic& c = rel.at(k, i);
        if (c == Cyclotomic(0)) continue;
        for (long j = 0; j < x.ambient_; ++j)
          rows.at(k, j) = rows.at(k, j) + c * x.basis_.at(i, j);
      }
    return from_rows(std::move(rows), x.ambient_, x.conductor_);
  }

  friend SubspaceCF sum(const SubspaceCF& a, const SubspaceCF& b) {
    auto [x, y] = aligned(a, b);
    Matrix<Cyclotomic> rows(x.dim() + y.dim(), x.ambient_);
    for (long i = 0; i < x.dim(); ++i)
      for (long j = 0; j < x.ambient_; ++j) rows.at(i, j) = x.basis_.at(i, j);
    for (long i = 0; i < y.dim(); ++i)
      for (long j = 0; j < x.ambient_; ++j) rows.at(x.dim() + i, j) = y.basis_.at(i, j);
    return from_rows(std::move(rows), x.ambient_, x.conductor_);
  }

  // containment a <= b, decided by reducing each basis row of a against b
  friend bool subspace_leq(const SubspaceCF& a, const SubspaceCF& b) {
    auto [x, y] = aligned(a, b);
    for (long i = 0; i < x.dim(); ++i) {
      std::vector<Cyclotomic> v(x.ambient_);
      for (long j = 0; j < x.ambient_; ++j) v[j] = x.basis_.at(i, j);
      if (!y.reduces_to_zero(v)) return false;
    }
    return true;
  }

  bool contains(const std::vector<Cyclotomic>& v) const {
    if (static_cast<long>(v.size()) != ambient_) throw Error("dimension mismatch");
    return reduces_to_zero(v);
  }

  friend bool operator==(const SubspaceCF& a, const SubspaceCF& b) {
    if (a.ambient_ != b.ambient_) return false;
    auto [x, y] = aligned(a, b);
    return x.basis_ == y.basis_;
  }
  friend bool operator!=(const SubspaceCF& a, const SubspaceCF& b) { return !(a == b); }

  std::string key() const {
    std::string s = "d" + std::to_string(dim()) + "|" + basis_.str();
    return s;
  }

 private:
  bool reduces_to_zero(std::vector<Cyclotomic> v) const {
    // basis rows are in echelon form with unit pivots
    for (long r = 0; r < basis_.rows(); ++r) {
      long pivot = -1;
      for (long j = 0; j < ambient_; ++j)
        if (!(basis_.at(r, j) == Cyclotomic(0))) {
          pivot = j;
          break;
        }
      if (pivot < 0) continue;
      const Cyclotomic& c = v[pivot];
      if (c == Cyclotomic(0)) continue;
      Cyclotomic factor = c;
      for (long j = 0; j < ambient_; ++j) v[j] = v[j] - factor * basis_.at(r, j);
    }
    for (const Cyclotomic& c : v)
      if (!(c == Cyclotomic(0))) return false;
    return true;
  }

  static std::pair<SubspaceCF, SubspaceCF> aligned(const SubspaceCF& a, const SubspaceCF& b) {
    if (a.ambient_ != b.ambient_) throw Error("dimension mismatch");
    if (a.conductor_ == b.conductor_) return {a, b};
    long l = std::lcm(a.conductor_, b.conductor_);
    return {a.promoted(l), b.promoted(l)};
  }

  long ambient_;
  long conductor_;
  Matrix<Cyclotomic> basis_;
};

// right null space of a matrix as a subspace
inline SubspaceCF subspace_kernel(const Matrix<Cyclotomic>& m, long conductor) {
  return SubspaceCF::from_rows(kernel(m), m.cols(), conductor);
}

}  // namespace spets
