#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace k3lat {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
// No floating point enters any computation; doubles appear only in diagnostics
// (e.g. growth-rate displays) derived from exact values.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

int sign(const Int& x);
int sign(const Rat& x);

Int abs_int(const Int& x);

// floor(sqrt(x)); requires x >= 0
Int isqrt_floor(const Int& x);

// true iff x is a square of an integer; on success *root (if given) holds the
// nonnegative root
bool is_perfect_square(const Int& x, Int* root = nullptr);

// gcd of all entries (nonnegative); 0 for the zero vector
Int vec_gcd(const IntVec& v);

// g = gcd(a, b) >= 0 together with Bezout coefficients: s*a + t*b = g
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t);

bool is_zero_vec(const IntVec& v);

// v divided by the gcd of its entries, then scaled so the first nonzero entry
// is positive; the zero vector is returned unchanged
IntVec primitive(const IntVec& v);

std::string str(const Int& x);
std::string str(const Rat& x);

std::string coords_str(const IntVec& v);  // "(a, b, c)"

}  // namespace k3lat
