#pragma once

#include "npl/exact.hpp"
#include "npl/graph.hpp"
#include "npl/intersection_array.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace npl {

// characteristic polynomial of the quotient (intersection) matrix; its roots
// are exactly the distinct eigenvalues of any graph realizing the array
inline PolyZ intersection_charpoly(const IntersectionArray& arr) {
  std::vector<Int> diag, sub, sup;
  for (int i = 0; i <= arr.d; ++i) {
    diag.push_back(arr.a(i));
    sub.push_back(arr.c(i));
    if (i < arr.d) sup.push_back(arr.b(i));
  }
  return tridiagonal_charpoly(diag, sub, sup);
}

// standard sequence attached to an eigenvalue: sigma_0 = 1, k sigma_1 = theta,
// c_i sigma_{i-1} + a_i sigma_i + b_i sigma_{i+1} = theta sigma_i
inline std::vector<QI> cosine_sequence(const IntersectionArray& arr, const QI& theta) {
  std::vector<QI> sig(arr.d + 1);
  sig[0] = QI(Rat(1));
  sig[1] = theta / QI(arr.k());
  for (int i = 1; i < arr.d; ++i) {
    QI rhs = theta * sig[i] - QI(arr.c(i)) * sig[i - 1] - QI(arr.a(i)) * sig[i];
    sig[i + 1] = rhs / QI(arr.b(i));
  }
  return sig;
}

struct SpectralData {
  IntersectionArray arr;
  Int nvert;
  std::vector<Int> kvec;             // sphere sizes k_0..k_d
  std::vector<RealRoot> roots;       // eigenvalues, descending
  std::vector<std::vector<QI>> sig;  // sig[i][j]: cosine sequence of roots[i]
  std::vector<QI> mult;              // multiplicities as intervals
  std::vector<Int> mult_int;         // certified integer multiplicities

  int d() const { return arr.d; }
  const RealRoot& theta(int i) const { return roots.at(i); }
  const QI& sigma(int i, int j) const { return sig.at(i).at(j); }
  QI theta_qi(int i) const { return QI::enclosure(roots.at(i)); }

  std::string spectrum_str() const {
    std::string out;
    for (size_t i = 0; i < roots.size(); ++i) {
      if (i) out += ", ";
      out += roots[i].str() + "^" + mult_int[i].str();
    }
    return out;
  }
};

namespace spectradetail {

constexpr int kMaxRefine = 40;

inline Rat default_eig_width() { return make_rat(1, int_pow(10, 12)); }

inline Rat mult_tol() { return make_rat(1, int_pow(10, 6)); }

// multiplicity from the standard sequence: m = |X| / sum_j k_j sigma_j^2
inline QI multiplicity(const std::vector<Int>& kvec, const Int& nvert,
                       const std::vector<QI>& sig) {
  QI denom;
  for (size_t j = 0; j < sig.size(); ++j) denom += QI(kvec[j]) * sig[j] * sig[j];
  return QI(nvert) / denom;
}

}  // namespace spectradetail

// exact spectrum of an intersection array: eigenvalues isolated to the given
// width, cosine sequences, and multiplicities certified to be integers
inline SpectralData compute_spectrum(const IntersectionArray& arr) {
  arr.require_valid();
  SpectralData sd;
  sd.arr = arr;
  sd.kvec = arr.sphere_sizes();
  sd.nvert = arr.num_vertices();

  PolyZ cp = intersection_charpoly(arr);
  if (!is_squarefree(cp))
    throw npl_error("intersection matrix has a repeated eigenvalue");
  Int k = arr.k();
  auto asc = real_roots(cp, spectradetail::default_eig_width(), &k);
  if (static_cast<int>(asc.size()) != arr.d + 1)
    throw npl_error("intersection matrix has complex eigenvalues");
  sd.roots.assign(asc.rbegin(), asc.rend());

  if (!sd.roots.front().rational || sd.roots.front().value != Rat(k))
    throw npl_error("largest eigenvalue is not the valency");

  for (int i = 0; i <= arr.d; ++i) {
    for (int round = 0;; ++round) {
      std::vector<QI> sig = cosine_sequence(arr, sd.theta_qi(i));
      QI m = spectradetail::multiplicity(sd.kvec, sd.nvert, sig);
      if (m.is_point()) {
        if (!is_integer(m.point()) || m.point() <= 0)
          throw npl_error("multiplicity of " + sd.roots[i].str() +
                          " is not a positive integer: " + m.str());
        sd.sig.push_back(std::move(sig));
        sd.mult.push_back(m);
        sd.mult_int.push_back(numerator(m.point()));
        break;
      }
      Int cand = floor_rat(m.mid() + make_rat(1, 2));
      if (cand > 0 && (m - QI(cand)).certified_below(spectradetail::mult_tol())) {
        sd.sig.push_back(std::move(sig));
        sd.mult.push_back(m);
        sd.mult_int.push_back(cand);
        break;
      }
      if (round >= spectradetail::kMaxRefine)
        throw npl_error("multiplicity of " + sd.roots[i].str() +
                        " could not be certified: " + m.str());
      sd.roots[i].refine_step();
    }
  }

  Int total = 0;
  for (const Int& m : sd.mult_int) total += m;
  if (total != sd.nvert)
    throw npl_error("multiplicities sum to " + total.str() + ", expected " +
                    sd.nvert.str());
  if (sd.mult_int[0] != 1) throw npl_error("valency eigenvalue has multiplicity > 1");
  return sd;
}

// ---------------------------------------------------------------------------
// Krein parameters

struct KreinTable {
  int d = 0;
  std::vector<QI> vals;  // (d+1)^3, indexed [h][i][j]

  const QI& at(int h, int i, int j) const {
    return vals[(static_cast<size_t>(h) * (d + 1) + i) * (d + 1) + j];
  }
  QI& at(int h, int i, int j) {
    return vals[(static_cast<size_t>(h) * (d + 1) + i) * (d + 1) + j];
  }
};

// q^h_{ij} = m_i m_j / |X| * sum_l k_l sigma_i(l) sigma_j(l) sigma_h(l);
// entries touching index 0 follow exactly from orthogonality of the
// idempotents (q^h_{0j} = delta_hj, q^0_{ij} = delta_ij m_i), which keeps
// them exact even when the eigenvalues are irrational
inline KreinTable krein_parameters(const SpectralData& sd) {
  KreinTable kt;
  kt.d = sd.d();
  kt.vals.assign(static_cast<size_t>(kt.d + 1) * (kt.d + 1) * (kt.d + 1), QI());
  for (int h = 0; h <= kt.d; ++h)
    for (int i = 0; i <= kt.d; ++i)
      for (int j = i; j <= kt.d; ++j) {
        QI q;
        if (h == 0) {
          q = i == j ? QI(sd.mult_int[i]) : QI();
        } else if (i == 0) {
          q = QI(Rat(h == j ? 1 : 0));
        } else {
          QI s;
          for (int l = 0; l <= kt.d; ++l)
            s += QI(sd.kvec[l]) * sd.sigma(i, l) * sd.sigma(j, l) * sd.sigma(h, l);
          q = QI(sd.mult_int[i]) * QI(sd.mult_int[j]) / QI(sd.nvert) * s;
        }
        kt.at(h, i, j) = q;
        kt.at(h, j, i) = q;
      }
  return kt;
}

struct KreinAudit {
  Tri nonnegative = Tri::yes;
  std::optional<std::array<int, 3>> violation;  // h, i, j
};

// Krein parameters are nonnegative for every association scheme; a definite
// negative value disproves the array
inline KreinAudit audit_krein(const KreinTable& kt) {
  KreinAudit out;
  Rat tol = make_rat(1, int_pow(10, 8));
  for (int h = 0; h <= kt.d; ++h)
    for (int i = 0; i <= kt.d; ++i)
      for (int j = i; j <= kt.d; ++j) {
        const QI& q = kt.at(h, i, j);
        if (q.is_point() ? q.point() >= 0 : q.lo >= -tol) continue;
        if (q.def_neg()) {
          out.nonnegative = Tri::no;
          out.violation = {h, i, j};
          return out;
        }
        out.nonnegative = Tri::unknown;
        out.violation = {h, i, j};
      }
  return out;
}

// ---------------------------------------------------------------------------
// Q-polynomial structure with respect to the second largest eigenvalue

struct QPolyResult {
  Tri q_polynomial = Tri::unknown;
  std::vector<int> ordering;  // indices into sd.roots when the chain closes
  std::string note;
};

// greedy chain: starting from E_0, E_1 the next idempotent must be the unique
// unused h with q^h_{1,last} != 0; afterwards the full table must be
// tridiagonal in the discovered order
inline QPolyResult q_polynomial_wrt_theta1(const SpectralData& sd, const KreinTable& kt) {
  QPolyResult out;
  int d = sd.d();
  if (d < 2) {
    out.q_polynomial = Tri::yes;
    out.ordering.resize(d + 1);
    for (int i = 0; i <= d; ++i) out.ordering[i] = i;
    out.note = "trivial at diameter " + std::to_string(d);
    return out;
  }

  std::vector<bool> used(d + 1, false);
  out.ordering = {0, 1};
  used[0] = used[1] = true;
  for (int step = 2; step <= d; ++step) {
    int last = out.ordering.back();
    std::vector<int> next;
    for (int h = 0; h <= d; ++h) {
      if (used[h]) continue;
      Tri pos = tri_pos(kt.at(h, 1, last));
      if (pos == Tri::unknown) {
        out.q_polynomial = Tri::unknown;
        out.note = "q^" + std::to_string(h) + "_{1," + std::to_string(last) +
                   "} could not be separated from zero";
        return out;
      }
      if (pos == Tri::yes) next.push_back(h);
    }
    if (next.size() != 1) {
      out.q_polynomial = Tri::no;
      out.note = next.empty()
                     ? "chain from E_1 stops after " + std::to_string(step) + " idempotents"
                     : "chain from E_1 branches " + std::to_string(next.size()) + " ways";
      out.ordering.clear();
      return out;
    }
    out.ordering.push_back(next[0]);
    used[next[0]] = true;
  }

  // positions in the discovered order; entries two or more steps apart vanish
  std::vector<int> pos(d + 1);
  for (int p = 0; p <= d; ++p) pos[out.ordering[p]] = p;
  for (int h = 0; h <= d; ++h)
    for (int j = 0; j <= d; ++j) {
      int gap = pos[h] - pos[j];
      if (gap < 0) gap = -gap;
      if (gap <= 1) continue;
      Tri zero = tri_eq_zero(kt.at(h, 1, j));
      if (zero == Tri::no) {
        out.q_polynomial = Tri::no;
        out.note = "q^" + std::to_string(h) + "_{1," + std::to_string(j) +
                   "} breaks the tridiagonal pattern";
        out.ordering.clear();
        return out;
      }
      if (zero == Tri::unknown) {
        out.q_polynomial = Tri::unknown;
        out.note = "q^" + std::to_string(h) + "_{1," + std::to_string(j) +
                   "} could not be separated from zero";
        return out;
      }
    }
  out.q_polynomial = Tri::yes;
  return out;
}

// convenience wrapper with refinement: undecided verdicts trigger eigenvalue
// refinement and recomputation before giving up
inline QPolyResult q_polynomial_wrt_theta1(const IntersectionArray& arr) {
  SpectralData sd = compute_spectrum(arr);
  for (int round = 0; round < 8; ++round) {
    KreinTable kt = krein_parameters(sd);
    QPolyResult qp = q_polynomial_wrt_theta1(sd, kt);
    if (qp.q_polynomial != Tri::unknown) return qp;
    for (auto& r : sd.roots)
      for (int s = 0; s < 8; ++s) r.refine_step();
    for (int i = 0; i <= sd.d(); ++i) sd.sig[i] = cosine_sequence(arr, sd.theta_qi(i));
  }
  KreinTable kt = krein_parameters(sd);
  return q_polynomial_wrt_theta1(sd, kt);
}

// ---------------------------------------------------------------------------
// floating-point audit of the primitive idempotents of a concrete graph

struct IdempotentAudit {
  bool pass = false;
  double max_residual = 0.0;     // worst entry over all matrix identities
  double recurrence_residual = 0.0;
  std::string note;
};

// E_i = (m_i/|X|) sum_j sigma_i(j) A_j; checks E_i^2 = E_i, E_i E_j = 0,
// sum_i E_i = I and A E_i = theta_i E_i entrywise
inline IdempotentAudit audit_idempotents(const DistanceGraph& g, const DistanceData& dist,
                                         const SpectralData& sd, double tol = 1e-8) {
  using Mat = Eigen::MatrixXd;
  IdempotentAudit out;
  const int n = g.n;
  const int d = sd.d();
  if (dist.diameter != d) {
    out.note = "graph diameter does not match the array";
    return out;
  }

  // double-precision cosines, checked against the defining recurrence
  std::vector<std::vector<double>> sig(d + 1, std::vector<double>(d + 1));
  for (int i = 0; i <= d; ++i) {
    double theta = sd.roots[i].approx();
    for (int j = 0; j <= d; ++j) sig[i][j] = sd.sigma(i, j).approx();
    for (int j = 1; j < d; ++j) {
      double res = to_double(Rat(sd.arr.c(j))) * sig[i][j - 1] +
                   to_double(Rat(sd.arr.a(j))) * sig[i][j] +
                   to_double(Rat(sd.arr.b(j))) * sig[i][j + 1] - theta * sig[i][j];
      out.recurrence_residual = std::max(out.recurrence_residual, std::abs(res));
    }
  }
  if (out.recurrence_residual > 1e-10) {
    out.note = "cosine recurrence residual too large";
    return out;
  }

  std::vector<Mat> ee;
  for (int i = 0; i <= d; ++i) {
    double scale = to_double(make_rat(sd.mult_int[i], sd.nvert));
    Mat e(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) e(x, y) = scale * sig[i][dist.at(x, y)];
    ee.push_back(std::move(e));
  }

  Mat adj = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y : g.adj[x]) adj(x, y) = 1.0;

  auto track = [&](double r) { out.max_residual = std::max(out.max_residual, r); };
  Mat sum = Mat::Zero(n, n);
  for (int i = 0; i <= d; ++i) {
    track((ee[i] * ee[i] - ee[i]).cwiseAbs().maxCoeff());
    track((adj * ee[i] - sd.roots[i].approx() * ee[i]).cwiseAbs().maxCoeff());
    for (int j = i + 1; j <= d; ++j) track((ee[i] * ee[j]).cwiseAbs().maxCoeff());
    sum += ee[i];
  }
  track((sum - Mat::Identity(n, n)).cwiseAbs().maxCoeff());

  out.pass = out.max_residual <= tol;
  if (!out.pass) out.note = "idempotent identity residual exceeds tolerance";
  return out;
}

}  // namespace npl
