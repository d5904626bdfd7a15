#include "k3lat/products.hpp"

#include "k3lat/errors.hpp"

#include <algorithm>
#include <string>

namespace k3lat {

namespace {

// proportionality over Z: all 2x2 coordinate minors vanish
bool proportional(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
  return true;
}

void require_valid_cone(const FiniteRayCone& c) {
  if (!c.lattice) throw DomainError("ray cone: null lattice");
  if (c.rays.empty()) throw DomainError("ray cone: empty ray list");
  if (c.semi_ample_flags.size() != c.rays.size())
    throw DomainError("ray cone: one semi-ample flag per ray required");
  for (const LatticeVector& r : c.rays) {
    if (!r.lattice || *r.lattice != *c.lattice)
      throw LatticeMismatchError("ray cone: ray from a different lattice");
    if (r.is_zero() || vec_gcd(r.coords) != 1)
      throw DomainError("ray cone: rays must be primitive");
  }
  for (size_t i = 0; i < c.rays.size(); ++i)
    for (size_t j = i + 1; j < c.rays.size(); ++j)
      if (proportional(c.rays[i].coords, c.rays[j].coords))
        throw DomainError("ray cone: rays must be pairwise non-proportional");
}

}  // namespace

ProductModel::ProductModel(std::vector<FactorEntry> factors, LatticePtr total,
                           std::vector<Slice> slices)
    : factors_(std::move(factors)),
      total_(std::move(total)),
      slices_(std::move(slices)) {}

ProductModel ProductModel::direct_sum(std::vector<FactorEntry> factors) {
  if (factors.empty())
    throw DomainError("direct_sum: at least one factor required");
  int total_rank = 0;
  for (const FactorEntry& f : factors) {
    if (f.multiplicity < 1)
      throw DomainError("direct_sum: multiplicity must be >= 1");
    total_rank += f.multiplicity * f.model.lattice()->rank();
  }

  IntMatrix gram(total_rank, total_rank);
  std::vector<Slice> slices;
  int offset = 0;
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    const IntMatrix& g = factors[fi].model.lattice()->gram();
    for (int copy = 0; copy < factors[fi].multiplicity; ++copy) {
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
          gram.at(offset + i, offset + j) = g.at(i, j);
      slices.push_back(Slice{static_cast<int>(fi), offset, g.rows()});
      offset += g.rows();
    }
  }
  return ProductModel(std::move(factors), Lattice::make(std::move(gram)),
                      std::move(slices));
}

LatticeVector ProductModel::embed(int slice, const LatticeVector& x) const {
  if (slice < 0 || slice >= static_cast<int>(slices_.size()))
    throw DomainError("embed: slice index out of range");
  const Slice& s = slices_[slice];
  const LatticePtr& fl = factors_[s.factor].model.lattice();
  if (!x.lattice || *x.lattice != *fl)
    throw LatticeMismatchError("embed: class from a different factor lattice");
  IntVec coords(total_->rank());
  for (int i = 0; i < s.rank; ++i) coords[s.offset + i] = x.coords[i];
  return vec(total_, std::move(coords));
}

LatticeVector ProductModel::project(int slice, const LatticeVector& x) const {
  if (slice < 0 || slice >= static_cast<int>(slices_.size()))
    throw DomainError("project: slice index out of range");
  if (!x.lattice || *x.lattice != *total_)
    throw LatticeMismatchError("project: class not in the product lattice");
  const Slice& s = slices_[slice];
  IntVec coords(s.rank);
  for (int i = 0; i < s.rank; ++i) coords[i] = x.coords[s.offset + i];
  return vec(factors_[s.factor].model.lattice(), std::move(coords));
}

bool product_cone_membership(const ProductModel& p, const LatticeVector& x) {
  for (size_t s = 0; s < p.slices().size(); ++s) {
    const K3Model& factor = p.factors()[p.slices()[s].factor].model;
    if (!factor.is_nef(p.project(static_cast<int>(s), x))) return false;
  }
  return true;
}

Isometry block_permutation(const ProductModel& p,
                           const std::vector<int>& perm) {
  const auto& slices = p.slices();
  if (perm.size() != slices.size())
    throw DomainError("block_permutation: one image per copy required");
  std::vector<bool> hit(perm.size(), false);
  for (int image : perm) {
    if (image < 0 || image >= static_cast<int>(perm.size()) || hit[image])
      throw DomainError("block_permutation: not a permutation of the copies");
    hit[image] = true;
  }
  for (size_t i = 0; i < perm.size(); ++i) {
    const LatticePtr& from = p.factors()[slices[i].factor].model.lattice();
    const LatticePtr& to = p.factors()[slices[perm[i]].factor].model.lattice();
    if (*from != *to)
      throw DomainError(
          "block_permutation: copies with different Gram blocks cannot swap");
  }

  int n = p.total()->rank();
  IntMatrix m(n, n);
  for (size_t i = 0; i < perm.size(); ++i)
    for (int k = 0; k < slices[i].rank; ++k)
      m.at(slices[perm[i]].offset + k, slices[i].offset + k) = 1;
  return Isometry(p.total(), std::move(m));
}

LatticeVector invariant_ample_from_rays(const FiniteRayCone& c,
                                        const std::vector<Isometry>& group) {
  require_valid_cone(c);
  for (size_t gi = 0; gi < group.size(); ++gi) {
    for (const LatticeVector& r : c.rays) {
      LatticeVector image = group[gi](r);
      bool found = false;
      for (const LatticeVector& s : c.rays) found = found || image == s;
      if (!found)
        throw StabilityViolationError(
            "invariant_ample_from_rays: group element " + std::to_string(gi) +
            " does not permute the ray set");
    }
  }

  LatticeVector sum = zero_vector(c.lattice);
  for (const LatticeVector& r : c.rays) sum = sum + r;
  for (size_t gi = 0; gi < group.size(); ++gi)
    if (group[gi](sum) != sum)
      throw StabilityViolationError(
          "invariant_ample_from_rays: sum not fixed by group element " +
          std::to_string(gi));
  return sum;
}

NonPolyhedralWitness non_polyhedral_witness(const HilbSquareLattice& hl,
                                            const Isometry& a,
                                            const LatticeVector& seed,
                                            int count) {
  if (count < 1)
    throw DomainError("non_polyhedral_witness: count must be >= 1");
  if (seed.is_zero())
    throw DomainError("non_polyhedral_witness: seed must be nonzero");
  if (!seed.lattice || *seed.lattice != *hl.extended ||
      *a.lattice() != *hl.extended)
    throw LatticeMismatchError(
        "non_polyhedral_witness: seed and isometry must live in the extended "
        "lattice");

  NonPolyhedralWitness w;
  w.classes = orbit(a, seed, count - 1);
  for (size_t i = 0; i < w.classes.size(); ++i)
    for (size_t j = i + 1; j < w.classes.size(); ++j)
      if (proportional(w.classes[i].coords, w.classes[j].coords))
        throw ProportionalityAnomalyError(
            "non_polyhedral_witness: orbit members " + std::to_string(i) +
            " and " + std::to_string(j) +
            " are proportional; the orbit cycles, contradicting the "
            "infinite-order certificate");
  return w;
}

MdsReport mds_checklist(const FiniteRayCone& c, bool movable_equals_nef) {
  require_valid_cone(c);
  MdsReport report;
  report.nef_semi_ample =
      std::all_of(c.semi_ample_flags.begin(), c.semi_ample_flags.end(),
                  [](bool f) { return f; });
  report.single_chamber = movable_equals_nef;
  report.consistent = report.nef_semi_ample && report.single_chamber;
  if (report.consistent) {
    report.conclusion = "mds-consistent";
  } else {
    report.conclusion = "not-established";
    report.reason = !report.nef_semi_ample
                        ? "a nef generator lacks the semi-ample flag"
                        : "movable cone not declared equal to the nef cone";
  }
  return report;
}

MdsReport mds_checklist(const NonPolyhedralWitness& witness) {
  MdsReport report;
  report.nef_semi_ample = false;
  report.single_chamber = false;
  report.consistent = false;
  report.conclusion = "not-established";
  report.reason = "infinite ray orbit (" +
                  std::to_string(witness.classes.size()) +
                  " pairwise non-proportional classes in one isometry orbit)";
  return report;
}

}  // namespace k3lat
