#pragma once

// Finite classical polar spaces and the graphs built from them. Six
// families over GF(r) (or GF(r^2) for the hermitean ones): vertices of the
// dual polar graph are the maximal totally isotropic subspaces, adjacency is
// intersection in dimension d-1. Also the Hamming graph builder and the
// closed-form parameter predictions used to cross-check the constructions.

#include "npl/gf.hpp"
#include "npl/graph.hpp"
#include "npl/intersection_array.hpp"

#include <map>

namespace npl {

using FVec = std::vector<uint32_t>;

// ---------------------------------------------------------------------------
// linear algebra over a finite field

// reduced row echelon form in place; returns the rank, zero rows dropped
inline int rref(const FiniteField& f, std::vector<FVec>& rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    uint32_t inv = f.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = f.mul(v, inv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      uint32_t factor = rows[r][col];
      for (int c2 = 0; c2 < cols; ++c2)
        rows[r][c2] = f.sub(rows[r][c2], f.mul(factor, rows[rank][c2]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

// basis of {v : M v = 0}, deterministic free-variable construction
inline std::vector<FVec> kernel_basis(const FiniteField& f, std::vector<FVec> m, int cols) {
  int rank = rref(f, m);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < cols; ++c)
      if (m[r][c] != 0) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<FVec> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    FVec v(cols, 0);
    v[fc] = 1;
    for (int r = 0; r < rank; ++r)
      if (m[r][fc] != 0) v[pivot_col[r]] = f.neg(m[r][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Subspace {
  std::vector<FVec> rows;  // RREF canonical basis, possibly empty

  int dim() const { return static_cast<int>(rows.size()); }

  friend bool operator<(const Subspace& a, const Subspace& b) { return a.rows < b.rows; }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows == b.rows; }

  std::string str() const {
    std::string s;
    for (const auto& row : rows) {
      s += "(";
      for (size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
      s += ")";
    }
    return s.empty() ? "0" : s;
  }
};

inline Subspace make_subspace(const FiniteField& f, std::vector<FVec> rows) {
  rref(f, rows);
  return Subspace{std::move(rows)};
}

// reduce v against an RREF basis; the residue is zero iff v is in the span
inline FVec reduce_against(const FiniteField& f, const std::vector<FVec>& rows, FVec v) {
  for (const auto& row : rows) {
    int lead = -1;
    for (size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        lead = static_cast<int>(c);
        break;
      }
    if (lead < 0 || v[lead] == 0) continue;
    uint32_t factor = v[lead];  // pivot entries are 1 in RREF
    for (size_t c = 0; c < row.size(); ++c) v[c] = f.sub(v[c], f.mul(factor, row[c]));
  }
  return v;
}

inline bool is_zero_vec(const FVec& v) {
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

// ---------------------------------------------------------------------------
// polar spaces

// the hermitean families are named by the parity of the subscript:
// TwoAodd is 2A_{2d-1} (form on a 2d-dimensional space), TwoAeven is 2A_{2d}
enum class PolarFamily { B, C, D, TwoD, TwoAodd, TwoAeven };

inline const char* family_token(PolarFamily fam) {
  switch (fam) {
    case PolarFamily::B: return "B";
    case PolarFamily::C: return "C";
    case PolarFamily::D: return "D";
    case PolarFamily::TwoD: return "2D";
    case PolarFamily::TwoAodd: return "2A-odd";
    default: return "2A-even";
  }
}

inline PolarFamily parse_family(const std::string& s) {
  if (s == "B") return PolarFamily::B;
  if (s == "C") return PolarFamily::C;
  if (s == "D") return PolarFamily::D;
  if (s == "2D") return PolarFamily::TwoD;
  if (s == "2A-odd") return PolarFamily::TwoAodd;
  if (s == "2A-even") return PolarFamily::TwoAeven;
  throw input_error("unknown polar family '" + s + "' (use B, C, D, 2D, 2A-odd, 2A-even)");
}

struct PolarSpace {
  PolarFamily family;
  FieldPtr field;  // GF(r), or GF(r^2) for the hermitean families
  int d = 0;       // Witt index
  int dim = 0;     // ambient dimension
  int eps2 = 0;    // twice the exponent in the parameter formulas
  bool hermitean = false;
  bool quadratic = false;
  Int r;  // p^m

  std::vector<FVec> gram;  // bilinear (or sesquilinear) Gram matrix
  std::vector<FVec> quad;  // quadratic coefficients, upper triangular

  const FiniteField& f() const { return *field; }

  std::string name() const {
    int subscript = d;
    std::string prefix = family_token(family);
    switch (family) {
      case PolarFamily::TwoD: subscript = d + 1; break;
      case PolarFamily::TwoAodd:
        subscript = 2 * d - 1;
        prefix = "2A";
        break;
      case PolarFamily::TwoAeven:
        subscript = 2 * d;
        prefix = "2A";
        break;
      default: break;
    }
    return prefix + "_" + std::to_string(subscript) + "(" + r.str() + ")";
  }

  // B(u,v), or H(u,v) for hermitean spaces
  uint32_t form_value(const FVec& u, const FVec& v) const {
    const FiniteField& ff = f();
    uint32_t acc = 0;
    for (int i = 0; i < dim; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (gram[i][j] == 0 || v[j] == 0) continue;
        uint32_t rhs = hermitean ? ff.conjugate(v[j]) : v[j];
        acc = ff.add(acc, ff.mul(ff.mul(u[i], gram[i][j]), rhs));
      }
    }
    return acc;
  }

  uint32_t quadratic_value(const FVec& u) const {
    if (!quadratic) throw input_error("quadratic_value: " + name() + " carries no quadratic form");
    const FiniteField& ff = f();
    uint32_t acc = 0;
    for (int i = 0; i < dim; ++i) {
      if (u[i] == 0) continue;
      for (int j = i; j < dim; ++j) {
        if (quad[i][j] == 0 || u[j] == 0) continue;
        acc = ff.add(acc, ff.mul(ff.mul(u[i], quad[i][j]), u[j]));
      }
    }
    return acc;
  }

  // does the single vector satisfy the isotropy condition
  bool vector_isotropic(const FVec& v) const {
    if (quadratic) return quadratic_value(v) == 0;
    return form_value(v, v) == 0;  // automatic for symplectic, real for hermitean
  }

  bool totally_isotropic(const std::vector<FVec>& rows) const {
    for (const auto& u : rows) {
      if (!vector_isotropic(u)) return false;
      for (const auto& v : rows)
        if (&u != &v && form_value(u, v) != 0) return false;
    }
    return true;
  }
};

inline PolarSpace make_polar_space(PolarFamily fam, int d, uint32_t p, uint32_t m) {
  if (d < 1) throw input_error("polar space: rank d must be at least 1");
  PolarSpace sp;
  sp.family = fam;
  sp.d = d;
  sp.hermitean = fam == PolarFamily::TwoAodd || fam == PolarFamily::TwoAeven;
  sp.quadratic = fam == PolarFamily::B || fam == PolarFamily::D || fam == PolarFamily::TwoD;
  sp.field = make_field(p, sp.hermitean ? 2 * m : m);
  sp.r = int_pow(Int(p), m);
  switch (fam) {
    case PolarFamily::B:
      sp.dim = 2 * d + 1;
      sp.eps2 = 2;
      break;
    case PolarFamily::C:
      sp.dim = 2 * d;
      sp.eps2 = 2;
      break;
    case PolarFamily::D:
      sp.dim = 2 * d;
      sp.eps2 = 0;
      break;
    case PolarFamily::TwoD:
      sp.dim = 2 * d + 2;
      sp.eps2 = 4;
      break;
    case PolarFamily::TwoAodd:
      sp.dim = 2 * d;
      sp.eps2 = 1;
      break;
    case PolarFamily::TwoAeven:
      sp.dim = 2 * d + 1;
      sp.eps2 = 3;
      break;
  }
  const FiniteField& f = *sp.field;
  sp.gram.assign(sp.dim, FVec(sp.dim, 0));
  if (fam == PolarFamily::C) {
    for (int i = 0; i < d; ++i) {
      sp.gram[2 * i][2 * i + 1] = 1;
      sp.gram[2 * i + 1][2 * i] = f.neg(1);
    }
  } else if (sp.hermitean) {
    for (int i = 0; i < sp.dim; ++i) sp.gram[i][i] = 1;
  } else {
    // quadratic families: hyperbolic pairs, then the anisotropic tail
    sp.quad.assign(sp.dim, FVec(sp.dim, 0));
    for (int i = 0; i < d; ++i) sp.quad[2 * i][2 * i + 1] = 1;
    if (fam == PolarFamily::B) {
      sp.quad[2 * d][2 * d] = 1;
    } else if (fam == PolarFamily::TwoD) {
      // x^2 + xy + c y^2 with z^2 + z + c irreducible over the field
      uint32_t c = 0;
      std::vector<bool> reachable(f.order, false);
      for (uint32_t z = 0; z < f.order; ++z)
        reachable[f.neg(f.add(f.mul(z, z), z))] = true;
      while (c < f.order && reachable[c]) ++c;
      if (c == f.order) throw npl_error("polar space: no irreducible binary quadratic found");
      sp.quad[2 * d][2 * d] = 1;
      sp.quad[2 * d][2 * d + 1] = 1;
      sp.quad[2 * d + 1][2 * d + 1] = c;
    }
    // polarization
    for (int i = 0; i < sp.dim; ++i)
      for (int j = 0; j < sp.dim; ++j) {
        uint32_t s = f.add(i <= j ? sp.quad[i][j] : 0, j <= i ? sp.quad[j][i] : 0);
        if (i == j) s = f.add(sp.quad[i][i], sp.quad[i][i]);
        sp.gram[i][j] = s;
      }
  }
  return sp;
}

// ---------------------------------------------------------------------------
// closed-form parameters (q = r for the linear families, r^2 for hermitean)

namespace polardetail {

inline Int qeps(const PolarSpace& sp) {
  // q^epsilon as a power of r: exponent t*eps2/2 with t = 1 or 2
  int t = sp.hermitean ? 2 : 1;
  int twice = t * sp.eps2;
  if (twice % 2 != 0) throw npl_error("polar space: fractional exponent");
  return int_pow(sp.r, static_cast<unsigned>(twice / 2));
}

inline Int qbase(const PolarSpace& sp) { return sp.hermitean ? sp.r * sp.r : sp.r; }

}  // namespace polardetail

inline Int predicted_dual_polar_vertex_count(const PolarSpace& sp) {
  const Int q = polardetail::qbase(sp), qe = polardetail::qeps(sp);
  Int count = 1;
  for (int i = 1; i <= sp.d; ++i) count *= int_pow(q, static_cast<unsigned>(i - 1)) * qe + 1;
  return count;
}

inline IntersectionArray predicted_dual_polar_array(const PolarSpace& sp) {
  const Int q = polardetail::qbase(sp), qe = polardetail::qeps(sp);
  const int d = sp.d;
  std::vector<Int> bpart, cpart;
  auto gauss = [&](int i) {  // (q^i - 1)/(q - 1)
    return (int_pow(q, static_cast<unsigned>(i)) - 1) / (q - 1);
  };
  for (int i = 0; i < d; ++i)
    bpart.push_back(int_pow(q, static_cast<unsigned>(i)) * qe * gauss(d - i));
  for (int i = 1; i <= d; ++i) cpart.push_back(gauss(i));
  return IntersectionArray(std::move(bpart), std::move(cpart));
}

// eigenvalues theta_0 > ... > theta_d
inline std::vector<Int> predicted_dual_polar_theta(const PolarSpace& sp) {
  const Int q = polardetail::qbase(sp), qe = polardetail::qeps(sp);
  std::vector<Int> theta;
  for (int i = 0; i <= sp.d; ++i) {
    Int num = int_pow(q, static_cast<unsigned>(sp.d - i)) * qe - qe -
              int_pow(q, static_cast<unsigned>(i)) + 1;
    if (num % (q - 1) != 0) throw npl_error("polar space: non-integral eigenvalue");
    theta.push_back(num / (q - 1));
  }
  return theta;
}

// ---------------------------------------------------------------------------
// enumeration of maximal totally isotropic subspaces

inline std::vector<Subspace> enumerate_maximal_isotropic(const PolarSpace& sp, int cap = -1) {
  if (cap < 0) cap = default_vertex_cap();
  Int predicted = predicted_dual_polar_vertex_count(sp);
  if (predicted > cap)
    throw guard_error(sp.name() + " has " + predicted.str() +
                      " maximal isotropic subspaces, above the cap of " + std::to_string(cap) +
                      " (raise NPL_VERTEX_CAP to override)");
  const FiniteField& f = sp.f();

  // linear constraint rows forcing orthogonality to s
  auto constraint_row = [&](const FVec& s) {
    FVec row(sp.dim, 0);
    if (sp.hermitean) {
      for (int i = 0; i < sp.dim; ++i) row[i] = f.conjugate(s[i]);
    } else {
      for (int j = 0; j < sp.dim; ++j) {
        uint32_t acc = 0;
        for (int i = 0; i < sp.dim; ++i)
          if (s[i] && sp.gram[i][j]) acc = f.add(acc, f.mul(s[i], sp.gram[i][j]));
        row[j] = acc;
      }
    }
    return row;
  };

  // all isotropic extension candidates of S, as vectors not in S
  auto extension_candidates = [&](const Subspace& s, std::vector<FVec>& out) {
    out.clear();
    std::vector<FVec> constraints;
    for (const auto& row : s.rows) constraints.push_back(constraint_row(row));
    std::vector<FVec> kb = constraints.empty()
                               ? kernel_basis(f, {FVec(sp.dim, 0)}, sp.dim)
                               : kernel_basis(f, std::move(constraints), sp.dim);
    const size_t nk = kb.size();
    std::vector<uint32_t> coef(nk, 0);
    FVec v(sp.dim, 0);
    // odometer over all coefficient tuples
    while (true) {
      size_t pos = 0;
      while (pos < nk && coef[pos] + 1 == f.order) coef[pos++] = 0;
      if (pos == nk) break;
      ++coef[pos];
      std::fill(v.begin(), v.end(), 0);
      for (size_t j = 0; j < nk; ++j) {
        if (coef[j] == 0) continue;
        for (int c2 = 0; c2 < sp.dim; ++c2)
          v[c2] = f.add(v[c2], f.mul(coef[j], kb[j][c2]));
      }
      if (!sp.vector_isotropic(v)) continue;
      if (is_zero_vec(reduce_against(f, s.rows, v))) continue;
      out.push_back(v);
    }
  };

  std::set<Subspace> level{Subspace{}};
  for (int j = 0; j < sp.d; ++j) {
    std::set<Subspace> next;
    std::vector<FVec> cands;
    for (const auto& s : level) {
      extension_candidates(s, cands);
      if (cands.empty())
        throw npl_error(sp.name() + ": isotropic subspace of dimension " + std::to_string(j) +
                        " has no extension (Witt index mismatch)");
      for (const auto& v : cands) {
        std::vector<FVec> rows = s.rows;
        rows.push_back(v);
        Subspace t = make_subspace(f, std::move(rows));
        if (t.dim() != j + 1) throw npl_error("enumeration: rank drop");
        if (!sp.totally_isotropic(t.rows)) throw npl_error("enumeration: non-isotropic subspace");
        next.insert(std::move(t));
      }
    }
    level = std::move(next);
  }

  // every maximal must admit no further extension
  std::vector<FVec> cands;
  for (const auto& s : level) {
    extension_candidates(s, cands);
    if (!cands.empty())
      throw npl_error(sp.name() + ": maximal isotropic subspace extends past dimension " +
                      std::to_string(sp.d) + " (Witt index mismatch)");
  }

  if (Int(level.size()) != predicted)
    throw npl_error(sp.name() + ": enumerated " + std::to_string(level.size()) +
                    " maximal isotropic subspaces, closed form gives " + predicted.str());

  return {level.begin(), level.end()};
}

// ---------------------------------------------------------------------------
// graphs

struct DualPolarGraph {
  PolarSpace space;
  std::vector<Subspace> vertices;
  DistanceGraph graph;
};

inline DualPolarGraph build_dual_polar_graph(PolarFamily fam, int d, uint32_t p, uint32_t m,
                                             int cap = -1) {
  DualPolarGraph out{make_polar_space(fam, d, p, m), {}, {}};
  const PolarSpace& sp = out.space;
  const FiniteField& f = sp.f();
  out.vertices = enumerate_maximal_isotropic(sp, cap);
  const int n = static_cast<int>(out.vertices.size());

  std::vector<std::pair<int, int>> edges;
  if (d == 1) {
    // maximal isotropics are points; any two intersect in dimension 0
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  } else {
    // group vertices by their hyperplanes: two maximals are adjacent exactly
    // when they share a (d-1)-space, and that space is their intersection,
    // so every adjacent pair lands in exactly one group
    std::map<Subspace, std::vector<int>> groups;
    // normalized functionals on the row space: one per 1-space of F^d
    std::vector<FVec> functionals;
    {
      FVec lam(d, 0);
      std::vector<uint32_t> coef(d, 0);
      while (true) {
        size_t pos = 0;
        while (pos < static_cast<size_t>(d) && coef[pos] + 1 == f.order) coef[pos++] = 0;
        if (pos == static_cast<size_t>(d)) break;
        ++coef[pos];
        // keep only vectors whose first nonzero entry is 1
        int lead = -1;
        for (int i = d - 1; i >= 0; --i)
          if (coef[i]) lead = i;
        FVec cand(coef.begin(), coef.end());
        if (lead >= 0 && cand[lead] == 1) functionals.push_back(std::move(cand));
      }
    }
    for (int vi = 0; vi < n; ++vi) {
      const auto& rows = out.vertices[vi].rows;
      for (const auto& lam : functionals) {
        auto mu = kernel_basis(f, {lam}, d);
        std::vector<FVec> sub;
        for (const auto& muv : mu) {
          FVec w(sp.dim, 0);
          for (int i = 0; i < d; ++i) {
            if (muv[i] == 0) continue;
            for (int c2 = 0; c2 < sp.dim; ++c2)
              w[c2] = f.add(w[c2], f.mul(muv[i], rows[i][c2]));
          }
          sub.push_back(std::move(w));
        }
        Subspace h = make_subspace(f, std::move(sub));
        if (h.dim() != d - 1) throw npl_error("dual polar: bad hyperplane");
        groups[std::move(h)].push_back(vi);
      }
    }
    for (const auto& [h, members] : groups)
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          edges.emplace_back(members[i], members[j]);
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : out.vertices) labels.push_back(s.str());
  out.graph = DistanceGraph::from_edges(sp.name(), n, edges);
  out.graph.labels = std::move(labels);
  return out;
}

// ---------------------------------------------------------------------------
// Hamming graphs H(d, n): vertices are d-tuples over an n-letter alphabet,
// adjacent when they differ in exactly one coordinate

inline IntersectionArray hamming_array(int d, int n) {
  std::vector<Int> bpart, cpart;
  for (int i = 0; i < d; ++i) bpart.push_back(Int(d - i) * (n - 1));
  for (int i = 1; i <= d; ++i) cpart.push_back(i);
  return IntersectionArray(std::move(bpart), std::move(cpart));
}

inline std::vector<Int> hamming_theta(int d, int n) {
  std::vector<Int> theta;
  for (int i = 0; i <= d; ++i) theta.push_back(Int(d - i) * (n - 1) - i);
  return theta;
}

inline DistanceGraph build_hamming_graph(int d, int n, int cap = -1) {
  if (d < 1 || n < 2) throw input_error("hamming graph needs d >= 1 and n >= 2");
  if (cap < 0) cap = default_vertex_cap();
  Int total = int_pow(Int(n), static_cast<unsigned>(d));
  if (total > cap)
    throw guard_error("H(" + std::to_string(d) + "," + std::to_string(n) + ") has " +
                      total.str() + " vertices, above the cap of " + std::to_string(cap) +
                      " (raise NPL_VERTEX_CAP to override)");
  const int nv = total.convert_to<int>();
  std::vector<std::pair<int, int>> edges;
  std::vector<int> digits(d, 0);
  for (int v = 0; v < nv; ++v) {
    // neighbors above v: change one coordinate to a larger value
    int weight = 1;
    for (int i = 0; i < d; ++i) {
      for (int delta = digits[i] + 1; delta < n; ++delta)
        edges.emplace_back(v, v + (delta - digits[i]) * weight);
      weight *= n;
    }
    int pos = 0;
    while (pos < d && digits[pos] + 1 == n) digits[pos++] = 0;
    if (pos < d) ++digits[pos];
  }
  DistanceGraph g = DistanceGraph::from_edges(
      "H(" + std::to_string(d) + "," + std::to_string(n) + ")", nv, edges);
  g.labels.reserve(nv);
  std::vector<int> t(d, 0);
  for (int v = 0; v < nv; ++v) {
    std::string label;
    // symbols are printed 1-based; tuples read left to right
    for (int i = 0; i < d; ++i) label += (i && n > 9 ? "," : "") + std::to_string(t[i] + 1);
    g.labels.push_back(std::move(label));
    int pos = 0;
    while (pos < d && t[pos] + 1 == n) t[pos++] = 0;
    if (pos < d) ++t[pos];
  }
  return g;
}

}  // namespace npl
