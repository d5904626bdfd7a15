#pragma once

#include "k3lat/errors.hpp"
#include "k3lat/numeric.hpp"

#include <optional>
#include <vector>

namespace k3lat {

// Small dense matrix over an exact scalar type. Everything here stays exact;
// sizes in this project never exceed a handful of rows.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}

  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DomainError("matrix: negative dimension");
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) throw DomainError("matrix: empty row list");
    DenseMatrix m(static_cast<int>(rows.size()),
                  static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols())
        throw DomainError("matrix: ragged row list");
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const {
    return d_[static_cast<size_t>(i) * cols_ + j];
  }

  DenseMatrix transpose() const {
    DenseMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix: size mismatch in product");
    DenseMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
      }
    return m;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != static_cast<int>(v.size()))
      throw DomainError("matrix: size mismatch in apply");
    std::vector<T> r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  DenseMatrix operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainError("matrix: size mismatch in sum");
    DenseMatrix m(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] + o.d_[i];
    return m;
  }

  DenseMatrix operator-(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainError("matrix: size mismatch in difference");
    DenseMatrix m(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] - o.d_[i];
    return m;
  }

  DenseMatrix scaled(const T& s) const {
    DenseMatrix m(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] * s;
    return m;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

  bool is_square() const { return rows_ == cols_; }

 private:
  int rows_, cols_;
  std::vector<T> d_;
};

using IntMatrix = DenseMatrix<Int>;
using RatMatrix = DenseMatrix<Rat>;

Int trace(const IntMatrix& m);

// exact determinant, fraction-free (Bareiss)
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

IntMatrix pow(const IntMatrix& m, unsigned n);

RatMatrix to_rat(const IntMatrix& m);

// nullopt when every entry is not an integer
std::optional<IntMatrix> to_int(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

// basis of the null space, via reduced row echelon form
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

std::string matrix_str(const IntMatrix& m);

}  // namespace k3lat
