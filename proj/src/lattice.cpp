#include "k3lat/lattice.hpp"

#include "k3lat/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <utility>

namespace k3lat {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

void require_same_lattice(const LatticePtr& a, const LatticePtr& b,
                          const char* context) {
  if (!a || !b)
    throw LatticeMismatchError(std::string(context) +
                               ": vector without a lattice");
  if (*a != *b)
    throw LatticeMismatchError(std::string(context) +
                               ": vectors live in different lattices");
}

}  // namespace

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || !gram_.is_square())
    throw DomainError("lattice: Gram matrix must be square and nonempty");
  for (int i = 0; i < gram_.rows(); ++i)
    for (int j = i + 1; j < gram_.cols(); ++j)
      if (gram_.at(i, j) != gram_.at(j, i))
        throw DomainError("lattice: Gram matrix must be symmetric");
  if (det(gram_) == 0)
    throw DomainError("lattice: Gram matrix must be nondegenerate");
}

LatticePtr Lattice::make(IntMatrix gram) {
  return std::make_shared<const Lattice>(std::move(gram));
}

LatticePtr Lattice::make(const std::vector<std::vector<Int>>& gram_rows) {
  return make(IntMatrix::from_rows(gram_rows));
}

LatticePtr Lattice::change_basis(const IntMatrix& u) const {
  if (!u.is_square() || u.rows() != rank())
    throw DomainError("change_basis: matrix has the wrong shape");
  Int d = det(u);
  if (d != 1 && d != -1)
    throw DomainError("change_basis: matrix is not unimodular");
  return make(u.transpose() * gram_ * u);
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  require_same_lattice(lattice, o.lattice, "add");
  IntVec r(coords.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coords[i] + o.coords[i];
  return {lattice, std::move(r)};
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  require_same_lattice(lattice, o.lattice, "subtract");
  IntVec r(coords.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coords[i] - o.coords[i];
  return {lattice, std::move(r)};
}

LatticeVector LatticeVector::operator-() const {
  IntVec r(coords.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = -coords[i];
  return {lattice, std::move(r)};
}

LatticeVector LatticeVector::scaled(const Int& s) const {
  IntVec r(coords.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coords[i] * s;
  return {lattice, std::move(r)};
}

bool LatticeVector::operator==(const LatticeVector& o) const {
  if (!lattice || !o.lattice) return false;
  return *lattice == *o.lattice && coords == o.coords;
}

LatticeVector vec(LatticePtr lattice, IntVec coords) {
  if (!lattice) throw DomainError("vec: null lattice");
  if (static_cast<int>(coords.size()) != lattice->rank())
    throw DomainError("vec: coordinate count does not match the rank");
  return {std::move(lattice), std::move(coords)};
}

LatticeVector basis_vector(const LatticePtr& lattice, int i) {
  if (!lattice) throw DomainError("basis_vector: null lattice");
  if (i < 0 || i >= lattice->rank())
    throw DomainError("basis_vector: index out of range");
  IntVec c(lattice->rank());
  c[i] = 1;
  return {lattice, std::move(c)};
}

LatticeVector zero_vector(const LatticePtr& lattice) {
  if (!lattice) throw DomainError("zero_vector: null lattice");
  return {lattice, IntVec(lattice->rank())};
}

Int pair(const LatticeVector& a, const LatticeVector& b) {
  require_same_lattice(a.lattice, b.lattice, "pair");
  const IntMatrix& g = a.lattice->gram();
  Int r = 0;
  for (int i = 0; i < g.rows(); ++i) {
    if (a.coords[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < g.cols(); ++j) row += g.at(i, j) * b.coords[j];
    r += a.coords[i] * row;
  }
  return r;
}

Int norm(const LatticeVector& a) { return pair(a, a); }

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  require_same_lattice(a.lattice, b.lattice, "lex_less");
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                      b.coords.begin(), b.coords.end());
}

Discriminant discriminant(const Lattice& l) {
  Int d = det(l.gram());
  return {d, abs_int(d)};
}

Classification classify(const Lattice& l) {
  const IntMatrix& g = l.gram();
  const int n = g.rows();

  bool even = true;
  for (int i = 0; i < n; ++i)
    if (g.at(i, i) % 2 != 0) even = false;

  // symmetric congruence reduction over Q; the diagonal signs are the
  // signature (Sylvester)
  RatMatrix a = to_rat(g);
  auto swap_rc = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (int k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
  };
  auto add_rc = [&](int dst, int src, const Rat& f) {
    for (int k = 0; k < n; ++k) a.at(dst, k) += f * a.at(src, k);
    for (int k = 0; k < n; ++k) a.at(k, dst) += f * a.at(k, src);
  };

  int positive = 0, negative = 0;
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) == 0) {
      int j = -1;
      for (int k = i + 1; k < n; ++k)
        if (a.at(k, k) != 0) {
          j = k;
          break;
        }
      if (j >= 0) {
        swap_rc(i, j);
      } else {
        // all remaining diagonal entries vanish; a nonzero off-diagonal
        // entry exists by nondegeneracy, and adding that row/column makes
        // the pivot 2*a(i,j) != 0
        for (int k = i + 1; k < n; ++k)
          if (a.at(i, k) != 0) {
            j = k;
            break;
          }
        if (j < 0) throw DomainError("classify: degenerate block");
        add_rc(i, j, Rat(1));
      }
    }
    for (int k = i + 1; k < n; ++k) {
      if (a.at(k, i) == 0) continue;
      add_rc(k, i, -a.at(k, i) / a.at(i, i));
    }
    if (a.at(i, i) > 0)
      ++positive;
    else
      ++negative;
  }
  return {even, positive, negative};
}

bool is_hyperbolic(const Lattice& l) {
  Classification c = classify(l);
  return c.positive == 1 && c.negative == l.rank() - 1;
}

Isometry::Isometry(LatticePtr lattice, IntMatrix m)
    : lattice_(std::move(lattice)), m_(std::move(m)) {
  if (!lattice_) throw DomainError("isometry: null lattice");
  if (!m_.is_square() || m_.rows() != lattice_->rank())
    throw DomainError("isometry: matrix has the wrong shape");
  Int d = k3lat::det(m_);
  if (d != 1 && d != -1)
    throw DomainError("isometry: determinant must be +-1");
  const IntMatrix& g = lattice_->gram();
  if (m_.transpose() * g * m_ != g)
    throw DomainError("isometry: matrix does not preserve the form");
}

Isometry Isometry::identity(LatticePtr lattice) {
  if (!lattice) throw DomainError("isometry: null lattice");
  int n = lattice->rank();
  return Isometry(std::move(lattice), IntMatrix::identity(n));
}

Int Isometry::det() const { return k3lat::det(m_); }

LatticeVector Isometry::operator()(const LatticeVector& v) const {
  require_same_lattice(lattice_, v.lattice, "apply isometry");
  return {v.lattice, m_ * v.coords};
}

Isometry Isometry::pow(unsigned n) const {
  return Isometry(lattice_, k3lat::pow(m_, n));
}

bool Isometry::is_identity() const {
  return m_ == IntMatrix::identity(m_.rows());
}

bool Isometry::operator==(const Isometry& o) const {
  return *lattice_ == *o.lattice_ && m_ == o.m_;
}

Isometry reflect(const LatticeVector& root) {
  if (!root.lattice) throw DomainError("reflect: null lattice");
  if (norm(root) != -2)
    throw InvalidRootError("reflect: root must have self-intersection -2");
  const IntMatrix& g = root.lattice->gram();
  int n = g.rows();
  // x -> x + (x,c)c ; column j is e_j + (Gc)_j c
  IntVec gc(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gc[i] += g.at(i, j) * root.coords[j];
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) += root.coords[i] * gc[j];
  return Isometry(root.lattice, std::move(m));
}

Isometry anti_involution(const LatticeVector& axis) {
  if (!axis.lattice) throw DomainError("anti_involution: null lattice");
  if (norm(axis) != 2)
    throw InvalidAxisError(
        "anti_involution: axis must have self-intersection +2");
  const IntMatrix& g = axis.lattice->gram();
  int n = g.rows();
  // x -> -x + (x,v)v ; column j is -e_j + (Gv)_j v
  IntVec gv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gv[i] += g.at(i, j) * axis.coords[j];
  IntMatrix m = IntMatrix::identity(n).scaled(-1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) += axis.coords[i] * gv[j];
  return Isometry(axis.lattice, std::move(m));
}

Isometry compose(const Isometry& a, const Isometry& b) {
  require_same_lattice(a.lattice(), b.lattice(), "compose");
  return Isometry(a.lattice(), a.matrix() * b.matrix());
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0)
    throw DomainError("char_poly: matrix must be square and nonempty");
  const int n = m.rows();
  // Faddeev-LeVerrier; every division is exact over Z
  IntVec c(n + 1);
  c[n] = 1;
  IntMatrix acc = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    acc = m * acc;
    Int t = trace(acc);
    if (t % k != 0) throw DomainError("char_poly: inexact trace division");
    c[n - k] = -t / k;
    if (k < n) acc = acc + IntMatrix::identity(n).scaled(c[n - k]);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const Isometry& a) { return char_poly(a.matrix()); }

OrderCertificate order_certificate(const Isometry& a, const Rat& max_width) {
  IntPolynomial p = char_poly(a);
  CyclotomicSplit split = strip_cyclotomic_factors(p);

  if (split.remainder.degree() > 0) {
    // Kronecker: a monic integer polynomial with all roots on the unit
    // circle is a product of cyclotomics, so some eigenvalue has modulus
    // greater than 1 and no power of the isometry is the identity
    OrderCertificate cert;
    cert.finite = false;
    cert.growth = isolate_largest_root_above(p, Rat(1), max_width);
    cert.note = cert.growth
                    ? "infinite order: real eigenvalue greater than 1, "
                      "isolated by exact bisection"
                    : "infinite order: non-cyclotomic factor " +
                          split.remainder.str() +
                          " of the characteristic polynomial";
    return cert;
  }

  // All eigenvalues are roots of unity. If the isometry has finite order it
  // is diagonalizable and its order is exactly the lcm of the cyclotomic
  // orders appearing; one exact power test decides.
  Int n_lcm = 1;
  for (int d : split.orders) n_lcm = lcm(n_lcm, Int(d));
  unsigned n = n_lcm.convert_to<unsigned>();
  if (a.pow(n).is_identity()) {
    OrderCertificate cert;
    cert.finite = true;
    cert.order = static_cast<int>(n);
    cert.note = "finite order: lcm of the cyclotomic orders of the "
                "characteristic polynomial, verified by direct powering";
    return cert;
  }
  OrderCertificate cert;
  cert.finite = false;
  cert.note = "infinite order: all eigenvalues are roots of unity but the "
              "power at their lcm (" +
              std::to_string(n) +
              ") is not the identity, so a nontrivial unipotent part drives "
              "polynomial growth";
  return cert;
}

}  // namespace k3lat
