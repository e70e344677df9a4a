#pragma once

// Finite fields GF(p^n), p^n <= 2^20. Elements are integer codes
// sum digit_i p^i encoding coordinates in the power basis of a fixed
// monic irreducible modulus (the lexicographically least one). Fields
// up to 2^16 carry discrete log / antilog tables; larger ones fall
// back to polynomial arithmetic.

#include "npl/exact.hpp"

#include <cstdint>
#include <memory>
#include <numeric>

namespace npl {

namespace gfdetail {

inline bool is_prime_u32(uint32_t v) {
  if (v < 2) return false;
  for (uint32_t t = 2; t * t <= v; ++t)
    if (v % t == 0) return false;
  return true;
}

inline std::vector<uint32_t> distinct_prime_factors(uint32_t v) {
  std::vector<uint32_t> fs;
  for (uint32_t t = 2; t * t <= v; ++t) {
    if (v % t == 0) {
      fs.push_back(t);
      while (v % t == 0) v /= t;
    }
  }
  if (v > 1) fs.push_back(v);
  return fs;
}

using PPoly = std::vector<uint32_t>;  // coefficients mod p, low to high, trimmed

inline void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  ptrim(c);
  return c;
}

// remainder of a modulo monic m
inline PPoly pmod(PPoly a, const PPoly& m, uint32_t p) {
  ptrim(a);
  while (a.size() >= m.size()) {
    uint32_t f = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = static_cast<uint64_t>(f) * m[i] % p;
      a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
    }
    ptrim(a);
  }
  return a;
}

inline bool is_irreducible(const PPoly& m, uint32_t p) {
  uint32_t n = static_cast<uint32_t>(m.size()) - 1;
  for (uint32_t e = 1; 2 * e <= n; ++e) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      PPoly div(e + 1, 0);
      uint64_t c = code;
      for (uint32_t i = 0; i < e; ++i) {
        div[i] = static_cast<uint32_t>(c % p);
        c /= p;
      }
      div[e] = 1;
      if (pmod(m, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace gfdetail

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

struct FieldElement {
  const FiniteField* field = nullptr;
  uint32_t code = 0;

  FieldElement() = default;
  FieldElement(const FiniteField* f, uint32_t c) : field(f), code(c) {}

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.field == y.field && x.code == y.code;
  }
  friend bool operator<(const FieldElement& x, const FieldElement& y) { return x.code < y.code; }

  // arithmetic defined after FiniteField
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement conj() const;
  bool is_zero() const { return code == 0; }
};

class FiniteField {
 public:
  uint32_t p = 0, n = 0, order = 0;
  std::vector<uint32_t> modulus;  // monic, length n+1, modulus[i] is the x^i coefficient

  static constexpr uint32_t order_cap = 1u << 20;
  static constexpr uint32_t table_cap = 1u << 16;

  FiniteField(uint32_t p_, uint32_t n_) : p(p_), n(n_) {
    if (!gfdetail::is_prime_u32(p)) throw input_error("GF: characteristic must be prime");
    if (n == 0) throw input_error("GF: extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
      q *= p;
      if (q > order_cap) throw input_error("GF: field order exceeds 2^20");
    }
    order = static_cast<uint32_t>(q);
    find_modulus();
    if (order <= table_cap) build_tables();
  }

  // --- code-level arithmetic ------------------------------------------------

  uint32_t add(uint32_t a, uint32_t b) const {
    check_code(a);
    check_code(b);
    if (p == 2) return a ^ b;
    uint32_t r = 0, w = 1;
    for (uint32_t i = 0; i < n; ++i) {
      r += ((a % p + b % p) % p) * w;
      a /= p;
      b /= p;
      w *= p;
    }
    return r;
  }

  uint32_t neg(uint32_t a) const {
    check_code(a);
    if (p == 2) return a;
    uint32_t r = 0, w = 1;
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t d = a % p;
      r += (d == 0 ? 0 : p - d) * w;
      a /= p;
      w *= p;
    }
    return r;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  uint32_t mul(uint32_t a, uint32_t b) const {
    check_code(a);
    check_code(b);
    if (a == 0 || b == 0) return 0;
    if (has_tables())
      return exp_tab[(static_cast<uint64_t>(log_tab[a]) + log_tab[b]) % (order - 1)];
    return encode(gfdetail::pmod(gfdetail::pmul(decode(a), decode(b), p), modulus, p));
  }

  uint32_t inv(uint32_t a) const {
    check_code(a);
    if (a == 0) throw input_error("GF: inverse of zero");
    if (has_tables())
      return exp_tab[(order - 1 - log_tab[a]) % (order - 1)];
    return pow(a, order - 2);
  }

  uint32_t pow(uint32_t a, uint64_t e) const {
    check_code(a);
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_tables())
      return exp_tab[static_cast<uint64_t>(log_tab[a]) * (e % (order - 1)) % (order - 1)];
    uint32_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // x -> x^(p^(n/2)), the involutive automorphism fixing the index-2 subfield
  uint32_t conjugate(uint32_t a) const {
    if (n % 2 != 0) throw input_error("GF: conjugation needs a square-order field");
    check_code(a);
    if (!conj_tab.empty()) return conj_tab[a];
    uint64_t s = 1;
    for (uint32_t i = 0; i < n / 2; ++i) s *= p;
    return pow(a, s);
  }

  bool has_tables() const { return !exp_tab.empty(); }
  uint32_t generator() const {
    if (!has_tables()) throw input_error("GF: no generator cached for large field");
    return gen;
  }

  std::vector<uint32_t> decode(uint32_t a) const {
    std::vector<uint32_t> d(n);
    for (uint32_t i = 0; i < n; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }

  uint32_t encode(const std::vector<uint32_t>& digits) const {
    uint32_t a = 0, w = 1;
    for (uint32_t i = 0; i < n; ++i) {
      a += (i < digits.size() ? digits[i] % p : 0) * w;
      w *= p;
    }
    return a;
  }

  // --- element-level API ----------------------------------------------------

  FieldElement element(uint32_t code) const {
    check_code(code);
    return FieldElement(this, code);
  }
  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const { return FieldElement(this, 1); }

  std::string str() const {
    if (n == 1) return "GF(" + std::to_string(p) + ")";
    return "GF(" + std::to_string(p) + "^" + std::to_string(n) + ")";
  }

 private:
  std::vector<uint32_t> exp_tab;  // g^i for i in [0, order-1)
  std::vector<int32_t> log_tab;   // inverse of exp_tab, log_tab[0] = -1
  std::vector<uint32_t> conj_tab;
  uint32_t gen = 0;

  void check_code(uint32_t a) const {
    if (a >= order) throw input_error("GF: element code out of range for " + str());
  }

  // lexicographically least monic irreducible of degree n: minimize the
  // integer sum c_i p^i over the non-leading coefficients, which orders
  // (c_{n-1}, ..., c_0) lexicographically
  void find_modulus() {
    if (n == 1) {
      modulus = {0, 1};
      return;
    }
    for (uint32_t code = 0;; ++code) {
      if (code >= order) throw npl_error("GF: no irreducible modulus found");
      gfdetail::PPoly m(n + 1, 0);
      uint32_t c = code;
      for (uint32_t i = 0; i < n; ++i) {
        m[i] = c % p;
        c /= p;
      }
      m[n] = 1;
      if (gfdetail::is_irreducible(m, p)) {
        modulus = m;
        modulus.resize(n + 1);
        return;
      }
    }
  }

  uint32_t raw_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return encode(gfdetail::pmod(gfdetail::pmul(decode(a), decode(b), p), modulus, p));
  }

  uint32_t raw_pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1, base = a;
    while (e) {
      if (e & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    auto factors = gfdetail::distinct_prime_factors(order - 1);
    gen = 0;
    for (uint32_t cand = order == 2 ? 1 : 2; cand < order; ++cand) {
      bool primitive = true;
      for (uint32_t f : factors)
        if (raw_pow(cand, (order - 1) / f) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        gen = cand;
        break;
      }
    }
    if (gen == 0) throw npl_error("GF: no generator found");
    exp_tab.assign(order - 1, 0);
    log_tab.assign(order, -1);
    uint32_t v = 1;
    for (uint32_t i = 0; i < order - 1; ++i) {
      exp_tab[i] = v;
      log_tab[v] = static_cast<int32_t>(i);
      v = raw_mul(v, gen);
    }
    if (v != 1) throw npl_error("GF: generator order mismatch");
    if (n % 2 == 0) {
      uint64_t s = 1;
      for (uint32_t i = 0; i < n / 2; ++i) s *= p;
      conj_tab.assign(order, 0);
      for (uint32_t a = 1; a < order; ++a)
        conj_tab[a] = exp_tab[static_cast<uint64_t>(log_tab[a]) * (s % (order - 1)) % (order - 1)];
    }
  }
};

inline FieldPtr make_field(uint32_t p, uint32_t n) {
  return std::make_shared<const FiniteField>(p, n);
}

inline void check_same_field(const FieldElement& x, const FieldElement& y) {
  if (x.field == nullptr || y.field == nullptr)
    throw input_error("GF: uninitialized field element");
  if (x.field != y.field) throw input_error("GF: elements of different fields");
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*this, o);
  return FieldElement(field, field->add(code, o.code));
}
inline FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(*this, o);
  return FieldElement(field, field->sub(code, o.code));
}
inline FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*this, o);
  return FieldElement(field, field->mul(code, o.code));
}
inline FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(*this, o);
  return FieldElement(field, field->mul(code, field->inv(o.code)));
}
inline FieldElement FieldElement::operator-() const {
  return FieldElement(field, field->neg(code));
}
inline FieldElement FieldElement::inv() const { return FieldElement(field, field->inv(code)); }
inline FieldElement FieldElement::conj() const {
  return FieldElement(field, field->conjugate(code));
}

}  // namespace npl
