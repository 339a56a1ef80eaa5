// Dense matrices over exact rationals: the morphisms of the tensor-product
// matrix model and the linear parts of affine maps.
#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autocat/rational.hpp"

namespace autocat {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("RatMatrix: data size mismatch");
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RatMatrix zero(std::size_t rows, std::size_t cols) {
    return RatMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
  }

  RatMatrix operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw std::invalid_argument("RatMatrix: shape mismatch in product (" +
                                  std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + " * " +
                                  std::to_string(rhs.rows_) + "x" +
                                  std::to_string(rhs.cols_) + ")");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out.at(i, j) += a * rhs.at(k, j);
      }
    return out;
  }

  // Kronecker product; block (i,j) of the result is a(i,j) * b.
  RatMatrix kron(const RatMatrix& b) const {
    RatMatrix out(rows_ * b.rows_, cols_ * b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Rational& aij = at(i, j);
        if (aij == 0) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            out.at(i * b.rows_ + k, j * b.cols_ + l) = aij * b.at(k, l);
      }
    return out;
  }

  // Block-diagonal direct sum.
  RatMatrix direct_sum(const RatMatrix& b) const {
    RatMatrix out(rows_ + b.rows_, cols_ + b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.at(rows_ + i, cols_ + j) = b.at(i, j);
    return out;
  }

  RatMatrix transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  RatMatrix operator+(const RatMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("RatMatrix: shape mismatch in sum");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = data_[i] + b.data_[i];
    return out;
  }

  // Gaussian elimination; exact since scalars are rationals.
  Rational determinant() const {
    if (rows_ != cols_)
      throw std::invalid_argument("RatMatrix: determinant of non-square");
    RatMatrix m = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t pivot = col;
      while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
      if (pivot == rows_) return 0;
      if (pivot != col) {
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap(m.at(pivot, j), m.at(col, j));
        det = -det;
      }
      det *= m.at(col, col);
      for (std::size_t i = col + 1; i < rows_; ++i) {
        if (m.at(i, col) == 0) continue;
        Rational factor = m.at(i, col) / m.at(col, col);
        for (std::size_t j = col; j < cols_; ++j)
          m.at(i, j) -= factor * m.at(col, j);
      }
    }
    return det;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

using RatVector = std::vector<Rational>;

inline RatVector apply_matrix(const RatMatrix& m, const RatVector& x) {
  if (m.cols() != x.size())
    throw std::invalid_argument("apply_matrix: dimension mismatch");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * x[j];
  return out;
}

// Matrix file format: first line `<rows> <cols>`, then row-major entries as
// integers or `p/q`, whitespace-separated.
inline RatMatrix read_matrix(std::istream& in) {
  std::size_t rows, cols;
  if (!(in >> rows >> cols))
    throw std::runtime_error("matrix file: missing header");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw std::runtime_error("matrix file: not enough entries");
      auto r = parse_rational(tok);
      if (!r) throw std::runtime_error("matrix file: bad entry '" + tok + "'");
      m.at(i, j) = *r;
    }
  return m;
}

inline void write_matrix(std::ostream& out, const RatMatrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << to_string(m.at(i, j));
    }
    out << "\n";
  }
}

}  // namespace autocat
