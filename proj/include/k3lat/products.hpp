#pragma once

#include "k3lat/hilb2.hpp"
#include "k3lat/k3geom.hpp"
#include "k3lat/lattice.hpp"

#include <string>
#include <vector>

namespace k3lat {

struct FactorEntry {
  K3Model model;
  int multiplicity = 1;
};

/**
 * A finite product of surfaces, seen through its intersection lattice: the
 * orthogonal direct sum of one copy of each factor lattice per multiplicity.
 * Cross-slice pairings vanish, so every cone question about the product
 * decomposes into per-slice questions about the factors.
 */
class ProductModel {
 public:
  struct Slice {
    int factor;  // index into factors()
    int offset;  // first coordinate of this copy inside the total lattice
    int rank;
  };

  // throws DomainError on an empty factor list or nonpositive multiplicity
  static ProductModel direct_sum(std::vector<FactorEntry> factors);

  const std::vector<FactorEntry>& factors() const { return factors_; }
  const LatticePtr& total() const { return total_; }
  const std::vector<Slice>& slices() const { return slices_; }

  // a factor class placed into one copy (zero everywhere else)
  LatticeVector embed(int slice, const LatticeVector& x) const;
  // the block of a product class belonging to one copy
  LatticeVector project(int slice, const LatticeVector& x) const;

 private:
  ProductModel(std::vector<FactorEntry> factors, LatticePtr total,
               std::vector<Slice> slices);

  std::vector<FactorEntry> factors_;
  LatticePtr total_;
  std::vector<Slice> slices_;
};

// Whether every slice projection of x lies in the nef cone of its factor.
// The factor cones are computed exactly; an unresolved factor cone
// (InconclusiveConeError) propagates rather than being guessed around.
bool product_cone_membership(const ProductModel& p, const LatticeVector& x);

// The isometry of the total lattice permuting the copies: copy i moves to
// copy perm[i]. Requires perm to be a permutation of the slice indices and
// the permuted copies to carry identical Gram blocks.
Isometry block_permutation(const ProductModel& p,
                           const std::vector<int>& perm);

/**
 * A cone handed over by finitely many primitive rays, each flagged (as
 * declared input, never computed here) as generated by a semi-ample class.
 * This is the shape of data the Mori-dream-space bookkeeping consumes.
 */
struct FiniteRayCone {
  LatticePtr lattice;
  std::vector<LatticeVector> rays;      // primitive, pairwise non-proportional
  std::vector<bool> semi_ample_flags;   // one per ray
};

// The sum of the ray generators, which is fixed by every supplied isometry
// provided each one permutes the ray set (checked exactly; a violation
// throws StabilityViolationError naming the offending element).
LatticeVector invariant_ample_from_rays(const FiniteRayCone& c,
                                        const std::vector<Isometry>& group);

/**
 * An orbit of pairwise non-proportional classes under an infinite-order
 * isometry. A cone stable under the isometry and containing the seed's ray
 * cannot be spanned by finitely many rays once such orbits exist, which is
 * the lattice-level obstruction to being a Mori dream space.
 */
struct NonPolyhedralWitness {
  std::vector<LatticeVector> classes;  // a^0(seed), ..., a^(count-1)(seed)
};

// Generates the orbit and verifies pairwise non-proportionality by exact
// 2x2 coordinate minors. Two proportional orbit members mean the orbit
// cycles (the isometry has finite order on the seed), which contradicts the
// caller's infinite-order certificate: ProportionalityAnomalyError.
NonPolyhedralWitness non_polyhedral_witness(const HilbSquareLattice& hl,
                                            const Isometry& a,
                                            const LatticeVector& seed,
                                            int count);

/**
 * Which numerical proxies of the Mori-dream-space conditions hold. The
 * first condition (finitely generated Picard group of a Q-factorial variety)
 * has no lattice avatar and is recorded as an assumption; the report never
 * claims the geometric property itself.
 */
struct MdsReport {
  bool picard_assumed = true;       // condition (1): recorded, not verified
  bool nef_semi_ample = false;      // condition (2): finite rays, all flagged
  bool single_chamber = false;      // condition (3): movable cone = nef cone
  bool consistent = false;
  std::string conclusion;           // "mds-consistent" or "not-established"
  std::string reason;               // set when not established
};

// checklist for a cone with declared semi-ample generators;
// movable_equals_nef is the declared absence of small modifications
MdsReport mds_checklist(const FiniteRayCone& c, bool movable_equals_nef);

// checklist in the presence of an infinite ray orbit: never established
MdsReport mds_checklist(const NonPolyhedralWitness& witness);

}  // namespace k3lat
