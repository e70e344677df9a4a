#pragma once

// Exact scalar layer: big integers, rationals, integer polynomials,
// certified real algebraic roots, and rational interval arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace npl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct npl_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// bad user input, malformed files, unusable parameters (CLI exit code 2)
struct input_error : npl_error {
  using npl_error::npl_error;
};
// enumeration / BFS sizes above the configured cap
struct guard_error : npl_error {
  using npl_error::npl_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("make_rat: zero denominator");
  return Rat(num) / Rat(den);
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline int sign_of(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline int sign_of(const Rat& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline std::string rat_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// ---------------------------------------------------------------------------
// dense univariate polynomials, c[i] holds the coefficient of x^i

template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const T& lead() const {
    if (c.empty()) throw std::logic_error("lead of zero polynomial");
    return c.back();
  }

  template <class X>
  X eval(const X& x) const {
    X acc = X(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<T> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly scaled(const T& s) const {
    std::vector<T> d(c);
    for (auto& v : d) v *= s;
    return Poly(std::move(d));
  }

  // multiply by (x - r)
  Poly times_x_minus(const T& r) const {
    if (is_zero()) return Poly();
    std::vector<T> d(c.size() + 1, T(0));
    for (size_t i = 0; i < c.size(); ++i) {
      d[i + 1] += c[i];
      d[i] -= c[i] * r;
    }
    return Poly(std::move(d));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> d(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t i = 0; i < a.c.size(); ++i) d[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) d[i] -= b.c[i];
    return Poly(std::move(d));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> d(a.c.size() + b.c.size() - 1, T(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) d[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(d));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rat>;

inline PolyQ to_polyq(const PolyZ& p) {
  std::vector<Rat> d(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) d[i] = Rat(p.c[i]);
  return PolyQ(std::move(d));
}

// sign of p at num/den without building rationals: sum c_i num^i den^(n-i)
inline int sign_at(const PolyZ& p, const Rat& x) {
  if (p.is_zero()) return 0;
  const Int num = numerator(x), den = denominator(x);
  Int acc = 0;
  Int dpow = 1;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    acc = acc * num + (*it) * dpow;
    if (std::next(it) != p.c.rend()) dpow *= den;
  }
  return sign_of(acc);
}

// exact division by (x - r); throws if r is not a root
inline PolyZ deflate(const PolyZ& p, const Int& r) {
  if (p.degree() < 1) throw std::logic_error("deflate: degree < 1");
  std::vector<Int> q(p.c.size() - 1);
  Int carry = p.c.back();
  for (int i = p.degree() - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p.c[i] + r * carry;
  }
  if (carry != 0) throw std::logic_error("deflate: not a root");
  return PolyZ(std::move(q));
}

inline PolyQ polyq_rem(PolyQ a, const PolyQ& b) {
  if (b.is_zero()) throw std::logic_error("polyq_rem: zero divisor");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rat f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= f * b.c[i];
    a.c.pop_back();
    a.trim();
  }
  return a;
}

inline PolyQ polyq_monic(PolyQ p) {
  if (p.is_zero()) return p;
  Rat l = p.c.back();
  for (auto& v : p.c) v /= l;
  return p;
}

inline PolyQ polyq_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = polyq_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return polyq_monic(a);
}

inline bool is_squarefree(const PolyZ& p) {
  if (p.degree() < 2) return true;
  PolyQ g = polyq_gcd(to_polyq(p), to_polyq(p.derivative()));
  return g.degree() == 0;
}

// ---------------------------------------------------------------------------
// Sturm sequences

inline std::vector<PolyQ> sturm_chain(const PolyQ& p) {
  std::vector<PolyQ> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    PolyQ r = polyq_rem(chain[chain.size() - 2], chain.back());
    for (auto& v : r.c) v = -v;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sturm_variations(const std::vector<PolyQ>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign_of(q.template eval<Rat>(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// number of roots in the half-open interval (a, b]
inline int sturm_count(const std::vector<PolyQ>& chain, const Rat& a, const Rat& b) {
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// ---------------------------------------------------------------------------
// certified real roots
//
// A root is either an exact rational, or an irrational root carried as an
// isolating open interval (lo, hi) of a squarefree integer polynomial with no
// rational roots, so every rational comparison is decided by one sign test.

struct RealRoot {
  bool rational = true;
  Rat value;     // exact value when rational
  Rat lo, hi;    // enclosure; lo == hi == value when rational
  PolyZ refiner; // sign_at(refiner, lo) == sign_lo != 0, opposite sign at hi
  int sign_lo = 0;

  static RealRoot exact(Rat v) {
    RealRoot r;
    r.rational = true;
    r.value = v;
    r.lo = r.hi = std::move(v);
    return r;
  }

  static RealRoot isolated(PolyZ p, Rat lo, Rat hi) {
    RealRoot r;
    r.rational = false;
    r.refiner = std::move(p);
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.sign_lo = sign_at(r.refiner, r.lo);
    if (r.sign_lo == 0 || sign_at(r.refiner, r.hi) != -r.sign_lo)
      throw std::logic_error("RealRoot: endpoints do not bracket a sign change");
    return r;
  }

  // sign of (root - x), exact
  int compare(const Rat& x) const {
    if (rational) return sign_of(Rat(value - x));
    if (x <= lo) return 1;
    if (x >= hi) return -1;
    int sx = sign_at(refiner, x);
    if (sx == 0) throw std::logic_error("RealRoot: rational root in refiner");
    return sx == sign_lo ? 1 : -1;
  }

  int compare(const RealRoot& other) const {
    if (rational) return -other.compare(value);
    if (other.rational) return compare(other.value);
    if (hi <= other.lo) return -1;
    if (other.hi <= lo) return 1;
    // overlapping isolating intervals of distinct algebraic numbers: refine
    RealRoot a = *this, b = other;
    for (int round = 0; round < 2048; ++round) {
      a.refine_step();
      b.refine_step();
      if (a.hi <= b.lo) return -1;
      if (b.hi <= a.lo) return 1;
    }
    throw std::logic_error("RealRoot: compare failed to separate roots");
  }

  void refine_step() {
    if (rational) return;
    Rat mid = (lo + hi) / 2;
    int sm = sign_at(refiner, mid);
    if (sm == 0) throw std::logic_error("RealRoot: rational root in refiner");
    if (sm == sign_lo)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }

  void refine_to(const Rat& width) {
    if (rational) return;
    while (Rat(hi - lo) > width) refine_step();
  }

  double approx() const {
    if (rational) return to_double(value);
    return to_double(Rat((lo + hi) / 2));
  }

  std::string str() const {
    if (rational) return rat_string(value);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", approx());
    return std::string(buf);
  }
};

// All real roots of p (integer coefficients, all roots required simple),
// ascending. Rational roots of monic p are integers and are returned exactly;
// the rest are isolated and refined to intervals of width <= refine_width.
// int_scan_bound, when given, caps the integer-root scan range (callers that
// know a bound on root magnitude, e.g. Gershgorin, pass it).
inline std::vector<RealRoot> real_roots(const PolyZ& p_in, const Rat& refine_width,
                                        const Int* int_scan_bound = nullptr) {
  if (p_in.is_zero()) throw input_error("real_roots: zero polynomial");
  if (!is_squarefree(p_in))
    throw input_error("real_roots: repeated root (polynomial not squarefree)");

  PolyZ p = p_in;
  std::vector<RealRoot> out;

  // root at 0
  while (p.degree() >= 1 && p.c[0] == 0) {
    p = deflate(p, 0);
    out.push_back(RealRoot::exact(Rat(0)));
    if (p.degree() >= 1 && p.c[0] == 0)
      throw input_error("real_roots: repeated root at 0");
  }

  // Cauchy bound: all roots have |x| < 1 + max|c_i| / |lead|
  Int maxc = 0;
  for (const auto& v : p.c) {
    Int av = abs(v);
    if (av > maxc) maxc = av;
  }
  Int lead_abs = abs(p.lead());
  Int cauchy = 1 + maxc / lead_abs + 1;

  Int scan = cauchy;
  if (int_scan_bound && *int_scan_bound < scan) scan = *int_scan_bound;
  const Int scan_limit = 200001;
  if (scan > scan_limit) scan = scan_limit;

  // integer roots by direct scan (monic inputs have no other rational roots)
  for (Int t = -scan; t <= scan; ++t) {
    if (p.degree() < 1) break;
    if (p.template eval<Int>(t) == 0) {
      p = deflate(p, t);
      out.push_back(RealRoot::exact(Rat(t)));
      if (p.degree() >= 1 && p.template eval<Int>(t) == 0)
        throw input_error("real_roots: repeated integer root");
    }
  }

  if (p.degree() >= 1) {
    // Sturm isolation over (-cauchy - 1/2, cauchy + 1/2); half-integer
    // endpoints and dyadic midpoints cannot be roots of a monic integer
    // polynomial, and nonmonic leftovers are handled by the sign==0 path.
    for (int attempt = 0; attempt < 64 && p.degree() >= 1; ++attempt) {
      std::vector<PolyQ> chain = sturm_chain(polyq_monic(to_polyq(p)));
      Rat a = Rat(-cauchy) - Rat(1, 2), b = Rat(cauchy) + Rat(1, 2);
      bool restart = false;
      std::vector<std::pair<Rat, Rat>> stack{{a, b}}, isolated;
      while (!stack.empty() && !restart) {
        auto [x, y] = stack.back();
        stack.pop_back();
        int n = sturm_count(chain, x, y);
        if (n == 0) continue;
        if (n == 1) {
          isolated.emplace_back(x, y);
          continue;
        }
        Rat mid = (x + y) / 2;
        if (sign_at(p, mid) == 0) {
          // late-found rational root (non-monic input); deflate and restart
          if (!is_integer(mid)) throw std::logic_error("real_roots: unexpected rational root");
          p = deflate(p, numerator(mid));
          out.push_back(RealRoot::exact(mid));
          restart = true;
          break;
        }
        stack.emplace_back(x, mid);
        stack.emplace_back(mid, y);
      }
      if (restart) continue;
      for (auto& [x, y] : isolated) {
        // endpoints are never roots by construction, so a Sturm-isolated
        // simple root must show a sign change
        if (sign_at(p, x) == 0 || sign_at(p, y) == 0 ||
            sign_at(p, x) == sign_at(p, y))
          throw std::logic_error("real_roots: bad isolating interval");
        RealRoot r = RealRoot::isolated(p, x, y);
        r.refine_to(refine_width);
        out.push_back(std::move(r));
      }
      break;
    }
  }

  std::sort(out.begin(), out.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.compare(b) < 0; });
  return out;
}

// characteristic polynomial of the (d+1)x(d+1) tridiagonal matrix with
// diagonal diag[0..d], subdiagonal sub[1..d], superdiagonal sup[0..d-1]
inline PolyZ tridiagonal_charpoly(const std::vector<Int>& diag,
                                  const std::vector<Int>& sub,
                                  const std::vector<Int>& sup) {
  size_t n = diag.size();
  if (n == 0) throw input_error("tridiagonal_charpoly: empty matrix");
  PolyZ prev2 = PolyZ::constant(Int(1));
  PolyZ prev = PolyZ(std::vector<Int>{-diag[0], 1});
  for (size_t i = 1; i < n; ++i) {
    PolyZ cur = prev.times_x_minus(diag[i]) - prev2.scaled(sub[i] * sup[i - 1]);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

// ---------------------------------------------------------------------------
// rational interval arithmetic; an interval with lo == hi is an exact value

struct QI {
  Rat lo, hi;

  QI() : lo(0), hi(0) {}
  QI(Rat v) : lo(v), hi(std::move(v)) {}
  QI(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::logic_error("QI: lo > hi");
  }
  explicit QI(const Int& v) : QI(Rat(v)) {}
  static QI of(long v) { return QI(Rat(v)); }
  static QI enclosure(const RealRoot& r) {
    return r.rational ? QI(r.value) : QI(r.lo, r.hi);
  }

  bool is_point() const { return lo == hi; }
  const Rat& point() const {
    if (!is_point()) throw std::logic_error("QI: not exact");
    return lo;
  }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  double approx() const { return to_double(mid()); }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }

  QI operator-() const { return QI(-hi, -lo); }
  friend QI operator+(const QI& a, const QI& b) { return QI(a.lo + b.lo, a.hi + b.hi); }
  friend QI operator-(const QI& a, const QI& b) { return QI(a.lo - b.hi, a.hi - b.lo); }
  friend QI operator*(const QI& a, const QI& b) {
    if (a.is_point() && b.is_point()) return QI(Rat(a.lo * b.lo));
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return QI(std::min(std::min(p1, p2), std::min(p3, p4)),
              std::max(std::max(p1, p2), std::max(p3, p4)));
  }
  friend QI operator/(const QI& a, const QI& b) {
    if (b.contains_zero()) throw std::logic_error("QI: division by interval containing 0");
    return a * QI(Rat(1) / b.hi, Rat(1) / b.lo);
  }
  QI& operator+=(const QI& o) { return *this = *this + o; }
  QI& operator-=(const QI& o) { return *this = *this - o; }
  QI& operator*=(const QI& o) { return *this = *this * o; }
  QI& operator/=(const QI& o) { return *this = *this / o; }

  // definite comparisons
  bool def_lt(const QI& o) const { return hi < o.lo; }
  bool def_gt(const QI& o) const { return lo > o.hi; }
  bool def_eq(const QI& o) const { return is_point() && o.is_point() && lo == o.lo; }
  bool def_pos() const { return lo > 0; }
  bool def_neg() const { return hi < 0; }
  bool def_zero() const { return is_point() && lo == 0; }
  // |value| certainly below tol
  bool certified_below(const Rat& tol) const { return -tol < lo && hi < tol; }

  std::string str() const {
    if (is_point()) return rat_string(lo);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", approx());
    return std::string(buf);
  }
};

enum class Tri { yes, no, unknown };

inline Tri tri_eq_zero(const QI& a) {
  if (a.def_zero()) return Tri::yes;
  if (!a.contains_zero()) return Tri::no;
  return a.is_point() ? Tri::yes : Tri::unknown;
}

inline Tri tri_pos(const QI& a) {
  if (a.def_pos()) return Tri::yes;
  if (a.hi < 0 || a.def_zero()) return Tri::no;
  if (a.is_point()) return a.lo > 0 ? Tri::yes : Tri::no;
  return Tri::unknown;
}

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "undecided";
  }
}

}  // namespace npl
