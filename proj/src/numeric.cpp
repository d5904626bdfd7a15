#include "k3lat/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace k3lat {

int sign(const Int& x) { return x.sign(); }
int sign(const Rat& x) { return x.sign(); }

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int isqrt_floor(const Int& x) {
  if (x < 0) throw std::invalid_argument("isqrt_floor: negative input");
  return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const Int& x, Int* root) {
  if (x < 0) return false;
  Int r = isqrt_floor(x);
  if (r * r != x) return false;
  if (root) *root = r;
  return true;
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int old_r = a, r = b;
  Int old_s = 1, cur_s = 0;
  Int old_t = 0, cur_t = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division keeps the invariants exact
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntVec primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) return v;
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  for (const Int& x : r) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : r) y = -y;
    break;
  }
  return r;
}

std::string str(const Int& x) { return x.str(); }

std::string str(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string coords_str(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  s += ")";
  return s;
}

}  // namespace k3lat
