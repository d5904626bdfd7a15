#include "k3lat/k3geom.hpp"

#include "k3lat/errors.hpp"

#include <algorithm>

namespace k3lat {

namespace {

Int det2(const IntVec& a, const IntVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

}  // namespace

bool cone_contains(const ConeR2& cone, const LatticeVector& x) {
  const IntVec& r1 = cone.ray1.coords;
  const IntVec& r2 = cone.ray2.coords;
  Int orient = det2(r1, r2);
  if (orient == 0)
    throw DomainError("cone_contains: rays are proportional");
  // x = alpha r1 + beta r2 by Cramer; membership is alpha, beta >= 0
  Int alpha_num = det2(x.coords, r2);
  Int beta_num = det2(r1, x.coords);
  return sign(alpha_num) * sign(orient) >= 0 &&
         sign(beta_num) * sign(orient) >= 0;
}

const char* to_string(VeryAmpleResult::Failure f) {
  switch (f) {
    case VeryAmpleResult::Failure::None: return "none";
    case VeryAmpleResult::Failure::TooSmall: return "too-small";
    case VeryAmpleResult::Failure::LowDegreeElliptic:
      return "low-degree-elliptic";
    case VeryAmpleResult::Failure::DoubledPolarization:
      return "doubled-polarization";
    case VeryAmpleResult::Failure::ContractedCurve: return "contracted-curve";
  }
  return "unknown";
}

K3Model::K3Model(LatticePtr lattice, LatticeVector ample, int degree_max)
    : lattice_(std::move(lattice)),
      ample_(std::move(ample)),
      degree_max_(degree_max) {}

K3Model K3Model::create(LatticePtr lattice, IntVec ample_coords,
                        int search_degree_max) {
  if (!lattice) throw DomainError("surface model: null lattice");
  if (lattice->rank() != 2)
    throw DomainError("surface model: requires a rank-2 lattice");
  Classification cls = classify(*lattice);
  if (!cls.even)
    throw DomainError("surface model: intersection form must be even");
  if (!(cls.positive == 1 && cls.negative == 1))
    throw DomainError("surface model: intersection form must be hyperbolic");
  if (search_degree_max < 1)
    throw DomainError("surface model: search degree bound must be >= 1");
  LatticeVector ample = vec(lattice, std::move(ample_coords));
  if (norm(ample) <= 0)
    throw InvalidPolarizationError(
        "surface model: ample class must have positive self-intersection");
  return K3Model(std::move(lattice), std::move(ample), search_degree_max);
}

int K3Model::side_of(const LatticeVector& x) const {
  return sign(det2(ample_.coords, x.coords));
}

bool K3Model::no_isotropic_classes() const {
  return isotropic_classes(lattice_).empty();
}

const K3Model::ConeData& K3Model::cones() const {
  if (cones_) return *cones_;

  std::optional<LatticeVector> best[2];  // index 0: side +1, index 1: side -1
  auto offer = [&](const LatticeVector& x) {
    int s = side_of(x);
    int slot = s > 0 ? 0 : 1;
    if (s != 0 && !best[slot]) best[slot] = x;
  };

  if (no_isotropic_classes()) {
    // scan degrees upward; the first -2 class on each side is extremal
    for (Int d = 1; d <= degree_max_; ++d) {
      for (const LatticeVector& x : solve_norm_degree(ample_, d, -2)) offer(x);
      if (best[0] && best[1]) break;
    }
    if (!best[0] || !best[1])
      throw InconclusiveConeError(
          "effective cone unresolved: no -2 class met on one side of the "
          "ample ray within the degree bound",
          degree_max_);
  } else {
    // finitely many -2 classes altogether: take the smallest positive
    // degree on each side, falling back to the isotropic ray of a side
    // without any
    std::vector<LatticeVector> roots =
        norm_classes_square_disc(lattice_, Int(-2));
    std::optional<Int> best_degree[2];
    for (const LatticeVector& x : roots) {
      Int d = pair(x, ample_);
      if (d <= 0) continue;
      int slot = side_of(x) > 0 ? 0 : 1;
      if (!best_degree[slot] || d < *best_degree[slot]) {
        best_degree[slot] = d;
        best[slot] = x;
      }
    }
    for (const LatticeVector& e : isotropic_classes(lattice_)) {
      for (const LatticeVector& cand : {e, -e}) {
        if (pair(cand, ample_) > 0) offer(cand);
      }
    }
    if (!best[0] || !best[1])
      throw DomainError("effective cone: degenerate configuration");
  }

  ConeData data;
  data.effective = ConeR2{*best[0], *best[1]};
  for (const LatticeVector& r : {*best[0], *best[1]})
    if (norm(r) == -2) data.curves.push_back(r);

  // the nef cone is the dual: each ray is orthogonal to one effective ray
  // and pairs nonnegatively with the other
  auto dual_ray = [&](const LatticeVector& r, const LatticeVector& other) {
    const IntMatrix& g = lattice_->gram();
    IntVec gr(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) gr[i] += g.at(i, j) * r.coords[j];
    LatticeVector w = vec(lattice_, primitive({gr[1], -gr[0]}));
    Int p = pair(w, other);
    if (p == 0)
      throw DomainError("nef cone: dual ray orthogonal to both rays");
    return p > 0 ? w : -w;
  };
  // the dual ray of each effective ray lies on that ray's side: the ample
  // class pairs strictly positively with both effective rays, so it is
  // interior to the nef cone, which forces the two nef rays onto opposite
  // sides, and the wall orthogonal to the far ray cannot be crossed before
  // the near effective ray is reached
  data.nef = ConeR2{dual_ray(data.effective.ray1, data.effective.ray2),
                    dual_ray(data.effective.ray2, data.effective.ray1)};

  cones_ = std::move(data);
  return *cones_;
}

const std::vector<LatticeVector>& K3Model::rational_curve_classes() const {
  return cones().curves;
}

const ConeR2& K3Model::effective_cone() const { return cones().effective; }

const ConeR2& K3Model::nef_cone() const { return cones().nef; }

bool K3Model::is_nef(const LatticeVector& x) const {
  const ConeR2& eff = cones().effective;
  return pair(x, eff.ray1) >= 0 && pair(x, eff.ray2) >= 0;
}

std::vector<LatticeVector> K3Model::roots_with_degree(
    const Int& degree) const {
  return solve_norm_degree(ample_, degree, -2);
}

ChamberReduction K3Model::chamber_reduce(const LatticeVector& x) const {
  if (norm(x) <= 0)
    throw DomainError(
        "chamber_reduce: requires positive self-intersection");
  ChamberReduction red;
  red.image = x;
  if (pair(red.image, ample_) < 0) {
    red.sign_flipped = true;
    red.image = -red.image;
  }
  const std::vector<LatticeVector>& walls = cones().curves;
  Int degree = pair(red.image, ample_);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const LatticeVector& r : walls) {
      Int p = pair(red.image, r);
      if (p >= 0) continue;
      red.image = red.image + r.scaled(p);  // reflection x + (x,r) r
      red.roots.push_back(r);
      progress = true;
    }
    Int new_degree = pair(red.image, ample_);
    if (progress && new_degree >= degree)
      throw StabilityViolationError(
          "chamber_reduce: reflection failed to decrease the degree");
    degree = new_degree;
  }
  return red;
}

Int K3Model::section_space_dimension(const LatticeVector& nef_class) const {
  if (!is_nef(nef_class) || nef_class.is_zero())
    throw DomainError(
        "section_space_dimension: requires a nonzero nef class");
  Int n = norm(nef_class);
  if (n > 0) return 2 + n / 2;
  return vec_gcd(nef_class.coords) + 1;  // multiple of an elliptic pencil
}

BpfResult K3Model::base_point_freeness(const LatticeVector& nef_class) const {
  if (!is_nef(nef_class) || nef_class.is_zero())
    throw DomainError("base_point_freeness: requires a nonzero nef class");
  BpfResult res;
  if (norm(nef_class) == 0) return res;  // multiples of a pencil are free
  for (const LatticeVector& e : solve_norm_degree(nef_class, Int(1), Int(0))) {
    if (pair(e, ample_) > 0) {
      res.free = false;
      res.obstruction = e;
      break;
    }
  }
  return res;
}

VeryAmpleResult K3Model::very_ample(const LatticeVector& nef_class) const {
  if (!is_nef(nef_class) || nef_class.is_zero())
    throw DomainError("very_ample: requires a nonzero nef class");
  VeryAmpleResult res;
  if (norm(nef_class) < 4) {
    res.failure = VeryAmpleResult::Failure::TooSmall;
    return res;
  }
  for (const Int& d : {Int(1), Int(2)}) {
    for (const LatticeVector& e : solve_norm_degree(nef_class, d, Int(0))) {
      if (pair(e, ample_) > 0) {
        res.failure = VeryAmpleResult::Failure::LowDegreeElliptic;
        res.witness = e;
        return res;
      }
    }
  }
  bool even_coords = true;
  for (const Int& c : nef_class.coords) even_coords = even_coords && c % 2 == 0;
  if (even_coords) {
    LatticeVector half = vec(lattice_, IntVec(nef_class.coords));
    for (Int& c : half.coords) c /= 2;
    if (norm(half) == 2) {
      res.failure = VeryAmpleResult::Failure::DoubledPolarization;
      res.witness = half;
      return res;
    }
  }
  for (const LatticeVector& c : solve_norm_degree(nef_class, Int(0), Int(-2))) {
    if (pair(c, ample_) > 0) {
      res.failure = VeryAmpleResult::Failure::ContractedCurve;
      res.witness = c;
      return res;
    }
  }
  return res;
}

std::optional<LatticeVector> K3Model::line_class(
    const LatticeVector& h) const {
  if (!is_nef(h) || h.is_zero())
    throw DomainError("line_class: requires a nonzero nef class");
  for (const LatticeVector& c : solve_norm_degree(h, Int(1), Int(-2)))
    if (pair(c, ample_) > 0) return c;
  return std::nullopt;
}

}  // namespace k3lat
