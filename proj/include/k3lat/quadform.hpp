#pragma once

#include "k3lat/lattice.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace k3lat {

/**
 * Exact solvers for the quadratic problems a rank-2 hyperbolic lattice poses:
 * classes of prescribed norm and degree, isotropic classes, and the Pell-type
 * constraint tying pairings to sublattice indices. Everything here returns
 * complete, deterministic (lex-sorted) answers or proves emptiness; nothing
 * is sampled or truncated.
 */

// All nonzero x with (x, against) = degree and (x, x) = norm.
// The ambient lattice must have rank 2 and `against` must have nonzero norm,
// so the solutions form at most two cosets and the answer is exact.
std::vector<LatticeVector> solve_norm_degree(const LatticeVector& against,
                                             const Int& degree,
                                             const Int& norm);

// The primitive isotropic classes of an indefinite rank-2 lattice, one per
// ray up to sign (empty unless |det| is a perfect square, in which case there
// are exactly two). Sign-normalized by `primitive`, lex-sorted.
std::vector<LatticeVector> isotropic_classes(const LatticePtr& lattice);

// Every class of the given nonzero norm in an indefinite rank-2 lattice whose
// |det| is a perfect square. The form then factors over Q into two linear
// forms, so the classes correspond to divisor pairs and the list is complete.
// Lex-sorted.
std::vector<LatticeVector> norm_classes_square_disc(const LatticePtr& lattice,
                                                    const Int& target_norm);

// k^2 + offset = rhs_disc * l^2, searched over k in [k_lo, k_hi], l >= 0
struct PellConstraint {
  Int rhs_disc;  // must be positive
  Int offset;
  Int k_lo;
  Int k_hi;
};

// all solutions (k, l), ordered by k
std::vector<std::pair<Int, Int>> pell_solutions(const PellConstraint& c);

// The constraint a pairing k = (a, x) must satisfy when a and x have the
// given norms: the sublattice they span has discriminant
// a_norm*x_norm - k^2 = disc(ambient) * l^2 with l the index, so
// k^2 - a_norm*x_norm = |disc(ambient)| * l^2 (l = 0 iff x is proportional
// to a). Only the stated k-range is searched.
PellConstraint sublattice_discriminant_constraint(const Lattice& ambient,
                                                  const Int& a_norm,
                                                  const Int& x_norm,
                                                  const Int& k_lo,
                                                  const Int& k_hi);

}  // namespace k3lat
