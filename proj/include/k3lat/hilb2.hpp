#pragma once

#include "k3lat/k3geom.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/polynomial.hpp"

#include <optional>
#include <vector>

namespace k3lat {

/**
 * The degree-2 lattice of the second punctual Hilbert scheme of a surface
 * with trivial canonical class: the surface lattice extended by one class e
 * of square -2, orthogonal to everything pulled back from the surface (e is
 * half the exceptional divisor of the Hilbert-Chow morphism).
 */
struct HilbSquareLattice {
  LatticePtr surface;
  LatticePtr extended;
  int e_index;  // position of e in the extended basis (= surface rank)
};

HilbSquareLattice extend_lattice(const LatticePtr& surface);

// e itself
LatticeVector exceptional_half_class(const HilbSquareLattice& hl);

// a surface class viewed on the Hilbert square (zero e-component)
LatticeVector lift(const HilbSquareLattice& hl, const LatticeVector& x);

// lift(x) - e; for a quartic polarization x this is the square-2 axis of the
// induced involution
LatticeVector lift_minus_e(const HilbSquareLattice& hl,
                           const LatticeVector& x);

/**
 * A certificate that a polarization h embeds the surface as a smooth quartic
 * surface containing no line: (h, h) = 4, h very ample, and no effective -2
 * class of degree 1 against h. On the Hilbert square of such a surface the
 * line through two points meets the image in a residual pair of points, and
 * swapping the two pairs is a regular involution.
 */
class BeauvillePolarization {
 public:
  // throws InvalidPolarizationError naming the first failed condition
  static BeauvillePolarization certify(const K3Model& model,
                                       const LatticeVector& h);

  const LatticeVector& polarization() const { return h_; }

 private:
  explicit BeauvillePolarization(LatticeVector h) : h_(std::move(h)) {}
  LatticeVector h_;
};

// The action of the certified involution on the extended lattice: the
// anti-involution x -> -x + (x, v)v with axis v = lift(h) - e of square 2.
Isometry beauville_involution(const HilbSquareLattice& hl,
                              const BeauvillePolarization& pol);

/**
 * A rank-3 working basis (lift(h1) - e, lift(h2) - e, e) for the extended
 * lattice of a rank-2 surface. The base change is rational in general, so
 * the basis spans a finite-index sublattice; `sublattice` carries its Gram
 * matrix, and vectors re-expressed in the basis keep their pairings.
 */
struct HilbBasis {
  LatticePtr ambient;     // the extended lattice
  LatticePtr sublattice;  // the same form written in the working basis
  RatMatrix to_ambient;   // columns: basis vectors in ambient coordinates
  RatMatrix from_ambient;
};

HilbBasis hilb_basis(const HilbSquareLattice& hl, const LatticeVector& h1,
                     const LatticeVector& h2);

// re-express an ambient vector in the working basis; nullopt when it is not
// an integer combination of the basis vectors
std::optional<LatticeVector> in_hilb_basis(const HilbBasis& basis,
                                           const LatticeVector& x);

// the matrix of an ambient isometry written in the working basis; throws
// DomainError when the isometry does not preserve the spanned sublattice
IntMatrix basis_matrix(const HilbBasis& basis, const Isometry& a);

/**
 * Everything the composite of two involutions reveals about itself through
 * exact arithmetic: its characteristic polynomial and the factorization, an
 * order certificate (finite order, or an isolated eigenvalue > 1 certifying
 * infinite order), and the fixed sublattice. When the fixed space is a line,
 * `fixed_vector` is its primitive generator: in working-basis coordinates
 * when a basis is supplied (primitive among basis-integral vectors),
 * otherwise in ambient coordinates.
 */
struct DynamicsReport {
  IntPolynomial characteristic;
  std::vector<IntPolynomial> factors;
  OrderCertificate certificate;
  int fixed_space_dim = 0;
  std::optional<LatticeVector> fixed_vector;
  std::optional<Int> fixed_vector_norm;
};

DynamicsReport composite_dynamics(const Isometry& a, const Isometry& b,
                                  const HilbBasis* basis = nullptr);

// [x, a(x), a^2(x), ..., a^steps(x)]
std::vector<LatticeVector> orbit(const Isometry& a, const LatticeVector& x,
                                 int steps);

}  // namespace k3lat
