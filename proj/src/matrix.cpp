#include "k3lat/matrix.hpp"

namespace k3lat {

Int trace(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("trace: non-square matrix");
  Int t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// Bareiss fraction-free elimination: every division below is exact over Z.
Int det(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("det: non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sgn > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

Rat det(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("det: non-square matrix");
  int n = m.rows();
  RatMatrix a = m;
  Rat d = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      d = -d;
    }
    d *= a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Rat f = a.at(i, k) / a.at(k, k);
      if (f == 0) continue;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return d;
}

IntMatrix pow(const IntMatrix& m, unsigned n) {
  if (!m.is_square()) throw DomainError("pow: non-square matrix");
  IntMatrix r = IntMatrix::identity(m.rows());
  IntMatrix b = m;
  while (n) {
    if (n & 1u) r = r * b;
    n >>= 1u;
    if (n) b = b * b;
  }
  return r;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

std::optional<IntMatrix> to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = m.at(i, j);
      if (denominator(q) != 1) return std::nullopt;
      r.at(i, j) = numerator(q);
    }
  return r;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse: non-square matrix");
  int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  RatMatrix a = m;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat piv = a.at(r, c);
    for (int j = 0; j < cols; ++j) a.at(r, j) /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -a.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string matrix_str(const IntMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m.at(i, j).str();
    }
    s += "]";
  }
  s += "]";
  return s;
}

}  // namespace k3lat
