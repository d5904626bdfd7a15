#include "k3lat/hilb2.hpp"

#include "k3lat/errors.hpp"

#include <string>

namespace k3lat {

namespace {

void require_surface_vector(const HilbSquareLattice& hl,
                            const LatticeVector& x, const char* context) {
  if (!x.lattice || *x.lattice != *hl.surface)
    throw LatticeMismatchError(std::string(context) +
                               ": class does not live in the surface lattice");
}

// smallest positive multiple of a rational vector with integer entries,
// made primitive
IntVec integral_primitive(const std::vector<Rat>& v) {
  Int mult = 1;
  for (const Rat& x : v)
    mult = boost::multiprecision::lcm(mult, Int(denominator(x)));
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = Int(numerator(v[i])) * (mult / Int(denominator(v[i])));
  return primitive(out);
}

}  // namespace

HilbSquareLattice extend_lattice(const LatticePtr& surface) {
  if (!surface) throw DomainError("extend_lattice: null lattice");
  int n = surface->rank();
  IntMatrix gram(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram.at(i, j) = surface->gram().at(i, j);
  gram.at(n, n) = -2;
  return HilbSquareLattice{surface, Lattice::make(std::move(gram)), n};
}

LatticeVector exceptional_half_class(const HilbSquareLattice& hl) {
  return basis_vector(hl.extended, hl.e_index);
}

LatticeVector lift(const HilbSquareLattice& hl, const LatticeVector& x) {
  require_surface_vector(hl, x, "lift");
  IntVec coords = x.coords;
  coords.push_back(0);
  return vec(hl.extended, std::move(coords));
}

LatticeVector lift_minus_e(const HilbSquareLattice& hl,
                           const LatticeVector& x) {
  return lift(hl, x) - exceptional_half_class(hl);
}

BeauvillePolarization BeauvillePolarization::certify(const K3Model& model,
                                                     const LatticeVector& h) {
  if (norm(h) != 4)
    throw InvalidPolarizationError(
        "quartic polarization must have self-intersection 4");
  VeryAmpleResult va = model.very_ample(h);
  if (!va.very_ample())
    throw InvalidPolarizationError(
        std::string("quartic polarization is not very ample: ") +
        to_string(va.failure));
  if (model.line_class(h).has_value())
    throw InvalidPolarizationError("the quartic model contains a line");
  return BeauvillePolarization(h);
}

Isometry beauville_involution(const HilbSquareLattice& hl,
                              const BeauvillePolarization& pol) {
  return anti_involution(lift_minus_e(hl, pol.polarization()));
}

HilbBasis hilb_basis(const HilbSquareLattice& hl, const LatticeVector& h1,
                     const LatticeVector& h2) {
  if (hl.surface->rank() != 2)
    throw DomainError("hilb_basis: requires a rank-2 surface lattice");
  LatticeVector b[3] = {lift_minus_e(hl, h1), lift_minus_e(hl, h2),
                        exceptional_half_class(hl)};

  IntMatrix gram(3, 3);
  RatMatrix cols(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      gram.at(i, j) = pair(b[i], b[j]);
      cols.at(i, j) = Rat(b[j].coords[i]);
    }
  auto inv = inverse(cols);
  if (!inv)
    throw DomainError("hilb_basis: the chosen classes are not independent");
  return HilbBasis{hl.extended, Lattice::make(std::move(gram)),
                   std::move(cols), std::move(*inv)};
}

std::optional<LatticeVector> in_hilb_basis(const HilbBasis& basis,
                                           const LatticeVector& x) {
  if (!x.lattice || *x.lattice != *basis.ambient)
    throw LatticeMismatchError(
        "in_hilb_basis: class does not live in the ambient lattice");
  std::vector<Rat> ambient(x.coords.size());
  for (size_t i = 0; i < ambient.size(); ++i) ambient[i] = Rat(x.coords[i]);
  std::vector<Rat> c = basis.from_ambient * ambient;
  IntVec out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (denominator(c[i]) != 1) return std::nullopt;
    out[i] = Int(numerator(c[i]));
  }
  return vec(basis.sublattice, std::move(out));
}

IntMatrix basis_matrix(const HilbBasis& basis, const Isometry& a) {
  if (!a.lattice() || *a.lattice() != *basis.ambient)
    throw LatticeMismatchError(
        "basis_matrix: isometry does not act on the ambient lattice");
  RatMatrix conjugated =
      basis.from_ambient * (to_rat(a.matrix()) * basis.to_ambient);
  std::optional<IntMatrix> m = to_int(conjugated);
  if (!m)
    throw DomainError(
        "basis_matrix: isometry does not preserve the spanned sublattice");
  return *m;
}

DynamicsReport composite_dynamics(const Isometry& a, const Isometry& b,
                                  const HilbBasis* basis) {
  Isometry c = compose(a, b);
  if (basis && *basis->ambient != *c.lattice())
    throw LatticeMismatchError(
        "composite_dynamics: basis ambient differs from the isometry lattice");

  DynamicsReport report;
  report.characteristic = char_poly(c);
  report.factors = factor(report.characteristic);
  report.certificate = order_certificate(c);

  int n = c.matrix().rows();
  RatMatrix fixed_eq = to_rat(c.matrix()) - RatMatrix::identity(n);
  std::vector<std::vector<Rat>> kernel = kernel_basis(fixed_eq);
  report.fixed_space_dim = static_cast<int>(kernel.size());
  if (report.fixed_space_dim != 1) return report;

  LatticeVector fixed = vec(c.lattice(), integral_primitive(kernel[0]));
  if (basis) {
    // the primitive generator of the fixed line inside the working-basis
    // sublattice: clear the denominators of the basis coordinates
    std::vector<Rat> ambient(fixed.coords.size());
    for (size_t i = 0; i < ambient.size(); ++i)
      ambient[i] = Rat(fixed.coords[i]);
    fixed = vec(basis->sublattice,
                integral_primitive(basis->from_ambient * ambient));
  }
  report.fixed_vector_norm = norm(fixed);
  report.fixed_vector = std::move(fixed);
  return report;
}

std::vector<LatticeVector> orbit(const Isometry& a, const LatticeVector& x,
                                 int steps) {
  if (steps < 0) throw DomainError("orbit: step count must be >= 0");
  std::vector<LatticeVector> out;
  out.reserve(static_cast<size_t>(steps) + 1);
  out.push_back(x);
  for (int i = 0; i < steps; ++i) out.push_back(a(out.back()));
  return out;
}

}  // namespace k3lat
