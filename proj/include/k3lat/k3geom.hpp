#pragma once

#include "k3lat/lattice.hpp"
#include "k3lat/quadform.hpp"

#include <optional>
#include <vector>

namespace k3lat {

/**
 * A two-dimensional rational cone, spanned by two nonproportional rays.
 * ray1 lies on the side where det(ample | ray) is positive, ray2 on the
 * other, so ray order is deterministic for a fixed model.
 */
struct ConeR2 {
  LatticeVector ray1;
  LatticeVector ray2;
};

// membership in the closed cone spanned by the two rays (pure linear
// algebra on coordinates; no bilinear form involved)
bool cone_contains(const ConeR2& cone, const LatticeVector& x);

// result of moving a class into the nef chamber by the reflection group
struct ChamberReduction {
  bool sign_flipped = false;             // class was replaced by its negative
  std::vector<LatticeVector> roots;      // reflections applied, in order
  LatticeVector image;                   // the nef representative reached
};

struct BpfResult {
  bool free = true;
  // elliptic class pairing to 1, forcing a fixed component (empty iff free)
  std::optional<LatticeVector> obstruction;
};

struct VeryAmpleResult {
  enum class Failure {
    None,                // very ample
    TooSmall,            // self-intersection below 4
    LowDegreeElliptic,   // elliptic class of degree 1 or 2 against the class
    DoubledPolarization, // the class is twice a class of self-intersection 2
    ContractedCurve,     // effective -2 class of degree 0 against the class
  };
  Failure failure = Failure::None;
  std::optional<LatticeVector> witness;
  bool very_ample() const { return failure == Failure::None; }
};

const char* to_string(VeryAmpleResult::Failure f);

/**
 * A projective surface with trivial canonical class and vanishing irregularity,
 * described entirely by its rank-2 even hyperbolic intersection lattice and a
 * fixed ample class. Every question answered here is a statement about the
 * lattice, certified by exact arithmetic:
 *
 *  - the effective cone is spanned, on each side of the ample ray, by the
 *    smallest-degree -2 class (such a class is the class of a rational curve,
 *    and the degree functional is monotone along each branch of the -2
 *    hyperbola, so the first degree at which a class appears yields the
 *    extremal ray); when |det| is a perfect square the -2 classes are finite
 *    in number and enumerated completely, and a side with none of them is
 *    bounded by its isotropic ray instead;
 *  - the nef cone is the dual cone;
 *  - Riemann-Roch on such a surface gives section counts of nef classes
 *    outright, and the classical projective-model criteria (fixed components,
 *    very-ampleness, contracted curves, lines) reduce to finitely many
 *    norm/degree equations, each solved exactly.
 *
 * Degree bounds: only the search for the smallest-degree -2 class is bounded
 * (by search_degree_max); if a side of the cone stays unresolved within the
 * bound the computation refuses to answer (InconclusiveConeError) rather than
 * guess. Classes of degree 0 against the ample class are never counted as
 * effective: an ample class positive on every curve admits none, and the
 * dedicated degree-0 query exposes any that exist.
 */
class K3Model {
 public:
  // Throws DomainError unless the lattice is rank-2, even and hyperbolic and
  // search_degree_max >= 1; InvalidPolarizationError unless the ample class
  // has positive self-intersection.
  static K3Model create(LatticePtr lattice, IntVec ample_coords,
                        int search_degree_max);

  const LatticePtr& lattice() const { return lattice_; }
  const LatticeVector& ample() const { return ample_; }
  int search_degree_max() const { return degree_max_; }

  // no isotropic classes exist, i.e. |det| is not a perfect square
  bool no_isotropic_classes() const;

  // extremal effective -2 classes (ray1-side first; one entry may be absent
  // when that side of the effective cone is an isotropic ray)
  const std::vector<LatticeVector>& rational_curve_classes() const;

  const ConeR2& effective_cone() const;  // may throw InconclusiveConeError
  const ConeR2& nef_cone() const;

  bool is_nef(const LatticeVector& x) const;

  // all -2 classes of the given degree against the ample class (lex-sorted;
  // degree 0 returns +-pairs)
  std::vector<LatticeVector> roots_with_degree(const Int& degree) const;

  // Reflect a class of positive self-intersection into the nef chamber,
  // negating it first if its degree is negative. The recorded word of
  // reflections is exact and certifies the orbit statement.
  ChamberReduction chamber_reduce(const LatticeVector& x) const;

  // h^0 of a nonzero nef class: 2 + n/2 for self-intersection n > 0,
  // k + 1 for the k-th multiple of a primitive isotropic class
  Int section_space_dimension(const LatticeVector& nef_class) const;

  BpfResult base_point_freeness(const LatticeVector& nef_class) const;

  VeryAmpleResult very_ample(const LatticeVector& nef_class) const;

  // an effective -2 class of degree 1 against h: the class a line in the
  // model defined by h would have to occupy (nullopt when none exists)
  std::optional<LatticeVector> line_class(const LatticeVector& h) const;

 private:
  K3Model(LatticePtr lattice, LatticeVector ample, int degree_max);

  int side_of(const LatticeVector& x) const;

  struct ConeData {
    ConeR2 effective;
    ConeR2 nef;
    std::vector<LatticeVector> curves;
  };
  const ConeData& cones() const;

  LatticePtr lattice_;
  LatticeVector ample_;
  int degree_max_;
  mutable std::optional<ConeData> cones_;
};

}  // namespace k3lat
