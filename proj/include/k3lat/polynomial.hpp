#pragma once

#include "k3lat/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

// Univariate polynomial with exact integer coefficients, stored lowest degree
// first. The zero polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVec coeffs);  // lowest degree first
  static IntPolynomial constant(const Int& c);
  static IntPolynomial variable();  // t

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const IntVec& coeffs() const { return c_; }
  const Int& leading() const;
  Int coeff(int i) const;  // 0 beyond the stored range

  Int operator()(const Int& x) const;
  Rat operator()(const Rat& x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  IntPolynomial derivative() const;

  // quotient when the division is exact over Z, nullopt otherwise
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  Int content() const;                // gcd of coefficients, 0 for zero poly
  IntPolynomial primitive_part() const;

  std::string str(const std::string& var = "t") const;

 private:
  IntVec c_;
  void normalize();
};

// p / gcd(p, p'): same roots, all simple
IntPolynomial squarefree_part(const IntPolynomial& p);

// number of real roots strictly greater than a (Sturm; p nonzero)
int count_roots_greater_than(const IntPolynomial& p, const Rat& a);

struct RootInterval {
  Rat lo, hi;  // open isolating interval (lo, hi) around a single simple root
};

// Isolates the largest real root strictly greater than a down to the requested
// interval width. Returns nullopt when p has no real root > a.
std::optional<RootInterval> isolate_largest_root_above(const IntPolynomial& p,
                                                       const Rat& a,
                                                       const Rat& max_width);

// d-th cyclotomic polynomial
IntPolynomial cyclotomic(int d);

int euler_phi(int d);

struct CyclotomicSplit {
  std::vector<int> orders;   // one entry per cyclotomic factor, with repeats
  IntPolynomial remainder;   // what is left after stripping them all
};

// Strips every cyclotomic factor of degree <= deg(p) from a monic p.
// remainder == 1 iff all roots of p are roots of unity (Kronecker).
CyclotomicSplit strip_cyclotomic_factors(const IntPolynomial& p);

// Factorization with linear factors split off (rational root theorem) and a
// remaining quadratic split when its discriminant is a perfect square. A
// remaining factor of degree 2 is irreducible over Q; cubics with no rational
// root likewise. Factors of degree >= 4 are returned unsplit.
std::vector<IntPolynomial> factor(const IntPolynomial& p);

}  // namespace k3lat
