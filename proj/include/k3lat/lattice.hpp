#pragma once

#include "k3lat/matrix.hpp"
#include "k3lat/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace k3lat {

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/**
 * Free Z-module of finite rank with a nondegenerate symmetric integer
 * bilinear form, given by its Gram matrix in a fixed basis.
 *
 * Immutable. Two lattices interoperate when they compare equal (same rank and
 * Gram matrix); all operations on vectors from structurally different
 * lattices throw LatticeMismatchError.
 */
class Lattice {
 public:
  // throws DomainError for empty, non-square, asymmetric or degenerate input
  explicit Lattice(IntMatrix gram);

  static LatticePtr make(IntMatrix gram);
  static LatticePtr make(const std::vector<std::vector<Int>>& gram_rows);

  int rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  // Gram matrix rewritten in the basis whose vectors are the columns of u;
  // u must be unimodular (|det| = 1)
  LatticePtr change_basis(const IntMatrix& u) const;

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

 private:
  IntMatrix gram_;
};

struct LatticeVector {
  LatticePtr lattice;
  IntVec coords;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector scaled(const Int& s) const;
  bool operator==(const LatticeVector& o) const;
  bool operator!=(const LatticeVector& o) const { return !(*this == o); }
  bool is_zero() const { return is_zero_vec(coords); }
};

LatticeVector vec(LatticePtr lattice, IntVec coords);
LatticeVector basis_vector(const LatticePtr& lattice, int i);
LatticeVector zero_vector(const LatticePtr& lattice);

// bilinear pairing x^T G y; throws LatticeMismatchError across lattices
Int pair(const LatticeVector& a, const LatticeVector& b);
Int norm(const LatticeVector& a);

// lexicographic order on coordinates, for deterministic solution lists
bool lex_less(const LatticeVector& a, const LatticeVector& b);

struct Discriminant {
  Int det;
  Int abs_det;
};
Discriminant discriminant(const Lattice& l);

struct Classification {
  bool even;      // every diagonal Gram entry even <=> (x,x) even for all x
  int positive;   // signature, computed by exact rational congruence
  int negative;   //   diagonalization (no floating point)
};
Classification classify(const Lattice& l);

bool is_hyperbolic(const Lattice& l);  // signature (1, rank-1)

/**
 * Lattice isometry in the fixed basis: integer matrix m with m^T G m = G and
 * det m = +-1 (both verified at construction). Column convention: column j is
 * the image of the j-th basis vector; matrices act on coordinate columns.
 */
class Isometry {
 public:
  Isometry(LatticePtr lattice, IntMatrix m);
  static Isometry identity(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return m_; }
  Int det() const;

  LatticeVector operator()(const LatticeVector& v) const;
  Isometry pow(unsigned n) const;
  bool is_identity() const;
  bool operator==(const Isometry& o) const;

 private:
  LatticePtr lattice_;
  IntMatrix m_;
};

// x -> x + (x,c)c for a root c with (c,c) = -2; det = -1
Isometry reflect(const LatticeVector& root);

// x -> -x + (x,v)v for an axis v with (v,v) = +2; det = (-1)^(rank+1)
Isometry anti_involution(const LatticeVector& axis);

// compose(a, b) applies b first: matrix a*b. Matches pullback order, where
// the pullback of a composite g∘f is f^* g^* = compose(f^*, g^*).
Isometry compose(const Isometry& a, const Isometry& b);

// det(tI - m): monic, exact (Faddeev-LeVerrier over Z)
IntPolynomial char_poly(const IntMatrix& m);
IntPolynomial char_poly(const Isometry& a);

/**
 * Exact order certificate for an isometry.
 *
 * finite: order is the minimal n >= 1 with a^n = identity, found by direct
 * powering after an all-factors-cyclotomic screen bounds the candidate order
 * by the lcm of the cyclotomic orders dividing the characteristic polynomial.
 *
 * infinite: `growth`, when present, is a Sturm-isolated open interval around
 * a real eigenvalue > 1 (spectral radius witness). When absent, `note` names
 * the exact reason: either a non-cyclotomic factor (Kronecker: some
 * eigenvalue has modulus > 1) or a^N != identity for N = lcm of the
 * cyclotomic orders (a finite-order isometry would satisfy a^N = identity).
 */
struct OrderCertificate {
  bool finite = false;
  int order = 0;
  std::optional<RootInterval> growth;
  std::string note;
};

// default isolation width 10^-6
OrderCertificate order_certificate(
    const Isometry& a, const Rat& max_width = Rat(1, 1000000));

}  // namespace k3lat
