#include "k3lat/quadform.hpp"

#include "k3lat/errors.hpp"

#include <algorithm>
#include <set>

namespace k3lat {

namespace {

void require_rank2(const LatticePtr& l, const char* context) {
  if (!l) throw DomainError(std::string(context) + ": null lattice");
  if (l->rank() != 2)
    throw DomainError(std::string(context) + ": requires a rank-2 lattice");
}

// coefficients of the linear form x -> (x, a)
IntVec gram_times(const Lattice& l, const IntVec& a) {
  const IntMatrix& g = l.gram();
  IntVec r(g.rows());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) r[i] += g.at(i, j) * a[j];
  return r;
}

// all signed divisors of a nonzero integer, unordered
std::vector<Int> signed_divisors(const Int& m) {
  Int a = abs_int(m);
  std::vector<Int> ds;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    ds.push_back(d);
    ds.push_back(-d);
    if (d * d != a) {
      ds.push_back(a / d);
      ds.push_back(-a / d);
    }
  }
  return ds;
}

std::vector<LatticeVector> sorted_unique(const LatticePtr& l,
                                         std::set<IntVec>&& coords) {
  std::vector<LatticeVector> out;
  out.reserve(coords.size());
  for (const IntVec& c : coords) out.push_back(vec(l, c));  // set is lex-sorted
  return out;
}

}  // namespace

std::vector<LatticeVector> solve_norm_degree(const LatticeVector& against,
                                             const Int& degree,
                                             const Int& target_norm) {
  const LatticePtr& l = against.lattice;
  require_rank2(l, "solve_norm_degree");
  if (norm(against) == 0)
    throw DomainError("solve_norm_degree: reference class has norm 0");

  // (x, against) = degree is the linear equation g0 x0 + g1 x1 = degree
  IntVec ga = gram_times(*l, against.coords);
  Int s, t;
  Int g = ext_gcd(ga[0], ga[1], s, t);
  if (degree % g != 0) return {};

  Int scale = degree / g;
  LatticeVector x0 = vec(l, {s * scale, t * scale});
  // the solution set is x0 + k*w with w generating the orthogonal complement
  LatticeVector w = vec(l, primitive({ga[1], -ga[0]}));

  // (x0 + k w, x0 + k w) = target_norm, a nondegenerate quadratic in k:
  // the complement of a class with nonzero norm cannot be isotropic
  Int a2 = norm(w);
  Int b = pair(x0, w);
  Int c0 = norm(x0) - target_norm;
  Int disc = b * b - a2 * c0;
  std::set<IntVec> found;
  Int root;
  if (disc >= 0 && is_perfect_square(disc, &root)) {
    for (const Int& numer : {Int(-b + root), Int(-b - root)}) {
      if (numer % a2 != 0) continue;
      LatticeVector x = x0 + w.scaled(numer / a2);
      if (!x.is_zero()) found.insert(x.coords);
    }
  }
  return sorted_unique(l, std::move(found));
}

std::vector<LatticeVector> isotropic_classes(const LatticePtr& lattice) {
  require_rank2(lattice, "isotropic_classes");
  const IntMatrix& g = lattice->gram();
  const Int a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 1);
  Int e2 = b * b - a * c;  // -det
  Int e;
  if (e2 <= 0 || !is_perfect_square(e2, &e)) return {};

  std::set<IntVec> rays;
  if (a == 0) {
    // the form is y(2bx + cy); rays y = 0 and 2bx + cy = 0
    rays.insert(primitive({1, 0}));
    rays.insert(primitive({-c, 2 * b}));
  } else {
    // a*q(x, y) = (ax + (b-e)y)(ax + (b+e)y)
    rays.insert(primitive({-(b - e), a}));
    rays.insert(primitive({-(b + e), a}));
  }
  auto out = sorted_unique(lattice, std::move(rays));
  for (const auto& r : out)
    if (norm(r) != 0) throw DomainError("isotropic_classes: internal check");
  return out;
}

std::vector<LatticeVector> norm_classes_square_disc(const LatticePtr& lattice,
                                                    const Int& target_norm) {
  require_rank2(lattice, "norm_classes_square_disc");
  if (target_norm == 0)
    throw DomainError("norm_classes_square_disc: norm must be nonzero");
  const IntMatrix& g = lattice->gram();
  const Int a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 1);
  Int e2 = b * b - a * c;
  Int e;
  if (e2 <= 0 || !is_perfect_square(e2, &e))
    throw DomainError(
        "norm_classes_square_disc: |det| must be a positive perfect square");

  std::set<IntVec> found;
  auto consider = [&](const Int& x, const Int& y) {
    Int q = a * x * x + 2 * b * x * y + c * y * y;
    if (q == target_norm) found.insert({x, y});
  };

  if (a != 0) {
    // a*q = u*v with u = ax + (b-e)y, v = ax + (b+e)y, v - u = 2ey
    for (const Int& u : signed_divisors(a * target_norm)) {
      Int v = a * target_norm / u;
      if ((v - u) % (2 * e) != 0) continue;
      Int y = (v - u) / (2 * e);
      if ((u - (b - e) * y) % a != 0) continue;
      consider((u - (b - e) * y) / a, y);
    }
  } else {
    // q = y(2bx + cy); y runs over divisors of the norm
    for (const Int& y : signed_divisors(target_norm)) {
      Int rest = target_norm / y - c * y;  // equals 2bx
      if (rest % (2 * b) != 0) continue;
      consider(rest / (2 * b), y);
    }
  }
  return sorted_unique(lattice, std::move(found));
}

std::vector<std::pair<Int, Int>> pell_solutions(const PellConstraint& c) {
  if (c.rhs_disc <= 0)
    throw DomainError("pell_solutions: right-hand discriminant must be > 0");
  std::vector<std::pair<Int, Int>> out;
  for (Int k = c.k_lo; k <= c.k_hi; ++k) {
    Int v = k * k + c.offset;
    if (v < 0 || v % c.rhs_disc != 0) continue;
    Int l;
    if (is_perfect_square(v / c.rhs_disc, &l)) out.emplace_back(k, l);
  }
  return out;
}

PellConstraint sublattice_discriminant_constraint(const Lattice& ambient,
                                                  const Int& a_norm,
                                                  const Int& x_norm,
                                                  const Int& k_lo,
                                                  const Int& k_hi) {
  return PellConstraint{discriminant(ambient).abs_det, -a_norm * x_norm, k_lo,
                        k_hi};
}

}  // namespace k3lat
