#include "k3lat/polynomial.hpp"

#include "k3lat/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <map>

namespace k3lat {

namespace {

using boost::multiprecision::gcd;

// dense rational polynomial, lowest degree first, used internally for the
// Sturm machinery
using RatPoly = std::vector<Rat>;

void rp_normalize(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat rp_eval(const RatPoly& p, const Rat& x) {
  Rat r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

RatPoly rp_derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(i));
  rp_normalize(d);
  return d;
}

// remainder of a by b, b nonzero
RatPoly rp_rem(RatPoly a, const RatPoly& b) {
  rp_normalize(a);
  while (rp_degree(a) >= rp_degree(b) && !a.empty()) {
    Rat f = a.back() / b.back();
    int shift = rp_degree(a) - rp_degree(b);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= f * b[i];
    a.pop_back();
    rp_normalize(a);
  }
  return a;
}

RatPoly rp_from(const IntPolynomial& p) {
  RatPoly r;
  for (const Int& c : p.coeffs()) r.push_back(Rat(c));
  return r;
}

// synthetic division by (t - a); requires a to be a root
RatPoly rp_deflate(const RatPoly& p, const Rat& a) {
  RatPoly q(p.size() > 0 ? p.size() - 1 : 0);
  Rat carry = 0;
  for (size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * a;
    q[i - 1] = carry;
  }
  return q;
}

struct SturmChain {
  std::vector<RatPoly> seq;

  static SturmChain build(const RatPoly& squarefree) {
    SturmChain c;
    c.seq.push_back(squarefree);
    RatPoly d = rp_derivative(squarefree);
    if (!d.empty()) c.seq.push_back(d);
    while (c.seq.size() >= 2) {
      RatPoly r = rp_rem(c.seq[c.seq.size() - 2], c.seq.back());
      if (r.empty()) break;
      for (Rat& x : r) x = -x;
      c.seq.push_back(std::move(r));
    }
    return c;
  }

  int variations(const Rat& x) const {
    int v = 0, prev = 0;
    for (const RatPoly& p : seq) {
      int s = sign(rp_eval(p, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  // number of roots in the half-open interval (a, b]; requires seq[0](a) != 0
  int count(const Rat& a, const Rat& b) const {
    return variations(a) - variations(b);
  }
};

// upper bound for every real root: 1 + max |c_i| / |lead|
Rat root_bound(const RatPoly& p) {
  Rat m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rat a = p[i] < 0 ? Rat(-p[i]) : p[i];
    if (a > m) m = a;
  }
  Rat lead = p.back() < 0 ? Rat(-p.back()) : p.back();
  return Rat(1) + m / lead;
}

// squarefree rational image of p with all roots <= a removed at a itself,
// so the Sturm chain can be anchored at a
RatPoly squarefree_above(const IntPolynomial& p, const Rat& a) {
  RatPoly sf = rp_from(squarefree_part(p));
  while (!sf.empty() && rp_eval(sf, a) == 0) sf = rp_deflate(sf, a);
  rp_normalize(sf);
  return sf;
}

}  // namespace

IntPolynomial::IntPolynomial(IntVec coeffs) : c_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
  return IntPolynomial(IntVec{c});
}

IntPolynomial IntPolynomial::variable() {
  return IntPolynomial(IntVec{0, 1});
}

int IntPolynomial::degree() const { return static_cast<int>(c_.size()) - 1; }

const Int& IntPolynomial::leading() const {
  if (c_.empty()) throw DomainError("polynomial: zero has no leading term");
  return c_.back();
}

Int IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Int IntPolynomial::operator()(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Rat IntPolynomial::operator()(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntVec r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntVec r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return IntPolynomial();
  IntVec r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
  IntVec d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Int(i));
  return IntPolynomial(std::move(d));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(
    const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial: division by zero");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;
  IntVec rem = c_;
  IntVec quot(degree() - divisor.degree() + 1);
  const IntVec& d = divisor.c_;
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Int num = rem[k + divisor.degree()];
    if (num % divisor.leading() != 0) return std::nullopt;
    Int q = num / divisor.leading();
    quot[k] = q;
    if (q != 0)
      for (size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
  }
  for (const Int& x : rem)
    if (x != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const Int& c : c_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  Int g = content();
  if (g == 0) return IntPolynomial();
  IntVec r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
  IntPolynomial p(std::move(r));
  if (p.leading() < 0)
    for (Int& x : p.c_) x = -x;
  return p;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int a = abs_int(c);
    if (s.empty())
      s += (c < 0 ? "-" : "");
    else
      s += (c < 0 ? " - " : " + ");
    bool show_coeff = (a != 1 || i == 0);
    if (show_coeff) s += a.str();
    if (i > 0) {
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return IntPolynomial::constant(1);
  // gcd(p, p') over Q via Euclid, then p / gcd, primitivized
  RatPoly a = rp_from(p), b = rp_from(p.derivative());
  while (!b.empty()) {
    RatPoly r = rp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // a is the gcd up to a rational unit; clear denominators and primitivize
  Int denom_lcm = 1;
  for (const Rat& q : a)
    denom_lcm = denom_lcm / gcd(denom_lcm, Int(denominator(q))) *
                Int(denominator(q));
  IntVec g(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    g[i] = Int(numerator(a[i])) * (denom_lcm / Int(denominator(a[i])));
  IntPolynomial gz = IntPolynomial(std::move(g)).primitive_part();
  auto q = p.divide_exact(gz);  // Gauss: the primitive gcd divides p over Z
  if (!q) throw DomainError("squarefree_part: inexact division");
  return q->primitive_part();
}

int count_roots_greater_than(const IntPolynomial& p, const Rat& a) {
  if (p.is_zero()) throw DomainError("count_roots: zero polynomial");
  RatPoly sf = squarefree_above(p, a);
  if (rp_degree(sf) < 1) return 0;
  SturmChain chain = SturmChain::build(sf);
  Rat b = root_bound(sf) + 1;
  if (b <= a) return 0;
  return chain.count(a, b);
}

std::optional<RootInterval> isolate_largest_root_above(const IntPolynomial& p,
                                                       const Rat& a,
                                                       const Rat& max_width) {
  if (max_width <= 0) throw DomainError("isolate: nonpositive width");
  RatPoly sf = squarefree_above(p, a);
  if (rp_degree(sf) < 1) return std::nullopt;
  SturmChain chain = SturmChain::build(sf);
  Rat lo = a;
  Rat hi = root_bound(sf) + 1;
  if (chain.count(lo, hi) == 0) return std::nullopt;
  // keep at least one root in (lo, hi]; shrink toward the largest
  while (hi - lo > max_width || chain.count(lo, hi) != 1 || lo <= a) {
    Rat mid = (lo + hi) / 2;
    // Never anchor the chain at a root (only rational roots can collide with
    // a rational midpoint). The step is small enough that even deg(sf) nudges
    // keep mid strictly inside (lo, hi).
    Rat step = (hi - lo) / Int(16 * (rp_degree(sf) + 1));
    while (rp_eval(sf, mid) == 0) mid += step;
    if (chain.count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return RootInterval{lo, hi};
}

int euler_phi(int d) {
  if (d <= 0) throw DomainError("euler_phi: nonpositive argument");
  int result = d;
  int n = d;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    result -= result / f;
    while (n % f == 0) n /= f;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(int d) {
  static std::map<int, IntPolynomial> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  if (d <= 0) throw DomainError("cyclotomic: nonpositive index");
  // (t^d - 1) / prod of lower cyclotomics at divisors of d
  IntVec td1(d + 1);
  td1[0] = -1;
  td1[d] = 1;
  IntPolynomial result(std::move(td1));
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    auto q = result.divide_exact(cyclotomic(e));
    if (!q) throw DomainError("cyclotomic: inexact division");
    result = *q;
  }
  cache[d] = result;
  return result;
}

CyclotomicSplit strip_cyclotomic_factors(const IntPolynomial& p) {
  if (p.is_zero() || p.leading() != 1)
    throw DomainError("strip_cyclotomic_factors: input must be monic");
  CyclotomicSplit split;
  split.remainder = p;
  int n = p.degree();
  // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2n^2; scan exactly
  for (int d = 1; d <= 2 * n * n + 1; ++d) {
    if (euler_phi(d) > n) continue;
    while (true) {
      auto q = split.remainder.divide_exact(cyclotomic(d));
      if (!q) break;
      split.remainder = *q;
      split.orders.push_back(d);
    }
  }
  return split;
}

std::vector<IntPolynomial> factor(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("factor: zero polynomial");
  std::vector<IntPolynomial> factors;
  IntPolynomial rem = p;
  // powers of t
  while (rem.coeff(0) == 0 && rem.degree() >= 1) {
    auto q = rem.divide_exact(IntPolynomial::variable());
    rem = *q;
    factors.push_back(IntPolynomial::variable());
  }
  // integer roots divide the constant term (monic or not: try divisors of
  // c0 and their negatives; non-monic rational roots are left in place)
  bool progress = true;
  while (progress && rem.degree() >= 1) {
    progress = false;
    Int c0 = abs_int(rem.coeff(0));
    for (Int r = 1; r * r <= c0 && !progress; ++r) {
      if (c0 % r != 0) continue;
      for (const Int& cand : {Int(r), Int(-r), Int(c0 / r), Int(-c0 / r)}) {
        if (rem(cand) != 0) continue;
        IntPolynomial lin(IntVec{-cand, 1});
        auto q = rem.divide_exact(lin);
        if (!q) continue;
        rem = *q;
        factors.push_back(lin);
        progress = true;
        break;
      }
    }
  }
  if (rem.degree() == 2) {
    // a t^2 + b t + c splits over Z exactly when b^2 - 4ac is a perfect
    // square and the roots have integral numerators after scaling
    Int a = rem.coeff(2), b = rem.coeff(1), c = rem.coeff(0);
    Int disc = b * b - 4 * a * c, s;
    if (is_perfect_square(disc, &s)) {
      // roots (-b +- s) / 2a; factor as a(t - r1)(t - r2) when integral
      Int n1 = -b + s, n2 = -b - s;
      if (n1 % (2 * a) == 0 && n2 % (2 * a) == 0) {
        factors.push_back(IntPolynomial(IntVec{-(n1 / (2 * a)), 1}));
        factors.push_back(IntPolynomial(IntVec{-(n2 / (2 * a)), 1}));
        rem = IntPolynomial::constant(a);
      }
    }
  }
  // keep a leftover constant only when it carries information
  if (rem.degree() >= 1 || rem.coeff(0) != 1 || factors.empty())
    factors.push_back(rem);
  return factors;
}

}  // namespace k3lat
