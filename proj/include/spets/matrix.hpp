#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "spets/cyclotomic.hpp"

namespace spets {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(long rows, long cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (static_cast<long>(data_.size()) != rows_ * cols_) throw Error("matrix data size mismatch");
  }

  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  T& at(long i, long j) { return data_[i * cols_ + j]; }
  const T& at(long i, long j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T(0)) continue;
        for (long j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  template <typename U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) m.at(i, j) = U(at(i, j));
    return m;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
      if (i) os << ";";
      for (long j = 0; j < cols_; ++j) {
        if (j) os << ",";
        if constexpr (std::is_same_v<T, Cyclotomic>)
          os << at(i, j).str();
        else
          os << at(i, j);
      }
    }
    os << "]";
    return os.str();
  }

 private:
  long rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;

// lexicographic comparison on (rows, cols, entries), used for canonical
// element ordering in generated groups
inline int compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (size_t i = 0; i < a.data().size(); ++i) {
    int c = cmp(a.data()[i], b.data()[i]);
    if (c != 0) return c;
  }
  return 0;
}

// In-place reduced row echelon form over a field type (Rat or Cyclotomic).
// Returns the pivot column per row.
template <typename T>
inline std::vector<long> rref(Matrix<T>& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
    long pivot = -1;
    for (long i = row; i < m.rows(); ++i)
      if (!(m.at(i, col) == T(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (long j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    T inv = T(1) / m.at(row, col);
    for (long j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      T c = m.at(i, col);
      if (c == T(0)) continue;
      for (long j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// basis of the right null space { x : m x = 0 }, one solution per row
template <typename T>
inline Matrix<T> kernel(Matrix<T> m) {
  long n = m.cols();
  std::vector<long> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (long c : pivots) is_pivot[c] = true;
  std::vector<long> free_cols;
  for (long c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> basis(static_cast<long>(free_cols.size()), n);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    long fc = free_cols[k];
    basis.at(k, fc) = T(1);
    for (size_t r = 0; r < pivots.size(); ++r) basis.at(k, pivots[r]) = -m.at(r, fc);
  }
  return basis;
}

template <typename T>
inline long matrix_rank(Matrix<T> m) {
  return static_cast<long>(rref(m).size());
}

// characteristic-style determinant of a small matrix of polynomials,
// by cofactor expansion along the first column
inline PolyZ det_poly(const std::vector<std::vector<PolyZ>>& m) {
  size_t n = m.size();
  if (n == 0) return {Int(1)};
  if (n == 1) return m[0][0];
  PolyZ result;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].empty()) continue;
    std::vector<std::vector<PolyZ>> minor;
    minor.reserve(n - 1);
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    PolyZ term = poly_mul(m[i][0], det_poly(minor));
    result = (i % 2 == 0) ? poly_add(result, term) : poly_sub(result, term);
  }
  return result;
}

// det(I - t*A) for a square integer matrix
inline PolyZ reverse_char_poly(const IntMatrix& a) {
  long n = a.rows();
  std::vector<std::vector<PolyZ>> m(n, std::vector<PolyZ>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      PolyZ e;
      if (i == j) e.push_back(Int(1));
      if (a.at(i, j) != 0) {
        e.resize(2);
        e[1] = -a.at(i, j);
      }
      poly_trim(e);
      m[i][j] = std::move(e);
    }
  return det_poly(m);
}

// det(x*I - A)
inline PolyZ char_poly(const IntMatrix& a) {
  long n = a.rows();
  std::vector<std::vector<PolyZ>> m(n, std::vector<PolyZ>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      PolyZ e;
      e.push_back(-a.at(i, j));
      if (i == j) e.push_back(Int(1));
      poly_trim(e);
      m[i][j] = std::move(e);
    }
  return det_poly(m);
}

// inverse of an integer matrix that is invertible over Z (det = +-1 required
// for the result to be integral; throws otherwise)
inline IntMatrix int_inverse(const IntMatrix& a) {
  long n = a.rows();
  if (n != a.cols()) throw Error("inverse of non-square matrix");
  Matrix<Rat> aug(n, 2 * n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug.at(i, j) = Rat(a.at(i, j));
    aug.at(i, n + i) = 1;
  }
  if (static_cast<long>(rref(aug).size()) != n) throw Error("matrix not invertible");
  IntMatrix inv(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat v = aug.at(i, n + j);
      if (v.get_den() != 1) throw Error("matrix not invertible over Z");
      inv.at(i, j) = v.get_num();
    }
  return inv;
}

}  // namespace spets
