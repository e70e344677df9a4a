#pragma once

// Undirected graphs with the graph metric: BFS all-pairs distances,
// intersection array extraction with counterexample witnesses, maximal
// cliques through an edge, near polygon checks by two routes, and
// p^h_ij / local distribution audits.

#include "npl/intersection_array.hpp"

#include <cstdlib>
#include <optional>
#include <queue>
#include <set>

namespace npl {

inline int default_vertex_cap() {
  if (const char* s = std::getenv("NPL_VERTEX_CAP")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0)
      throw input_error("NPL_VERTEX_CAP must be a positive integer");
    return static_cast<int>(v);
  }
  return 10000;
}

struct DistanceGraph {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::vector<std::string> labels;    // empty, or one label per vertex

  static DistanceGraph from_edges(std::string name, int n,
                                  const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw input_error("graph: need at least one vertex");
    DistanceGraph g;
    g.name = std::move(name);
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw input_error("graph: edge endpoint out of range");
      if (u == v) throw input_error("graph: loops are not allowed");
      auto key = std::minmax(u, v);
      if (!seen.insert(key).second) continue;
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
  }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  size_t num_edges() const {
    size_t s = 0;
    for (const auto& nb : adj) s += nb.size();
    return s / 2;
  }
};

struct DistanceData {
  int n = 0;
  int diameter = 0;
  std::vector<uint8_t> dm;  // row-major n*n

  uint8_t at(int i, int j) const { return dm[static_cast<size_t>(i) * n + j]; }
};

inline DistanceData all_pairs_distances(const DistanceGraph& g, int cap = -1) {
  if (cap < 0) cap = default_vertex_cap();
  if (g.n > cap)
    throw guard_error("graph has " + std::to_string(g.n) +
                      " vertices, above the cap of " + std::to_string(cap) +
                      " (raise NPL_VERTEX_CAP to override)");
  DistanceData dd;
  dd.n = g.n;
  dd.dm.assign(static_cast<size_t>(g.n) * g.n, 255);
  std::vector<int> queue(g.n);
  for (int s = 0; s < g.n; ++s) {
    uint8_t* row = dd.dm.data() + static_cast<size_t>(s) * g.n;
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int v : g.adj[u]) {
        if (row[v] == 255) {
          if (row[u] >= 254) throw input_error("graph: diameter too large");
          row[v] = static_cast<uint8_t>(row[u] + 1);
          queue[tail++] = v;
        }
      }
      if (row[u] > dd.diameter) dd.diameter = row[u];
    }
    if (tail != g.n)
      throw input_error("graph is disconnected: vertex " + std::to_string(queue[0]) +
                        " cannot reach everything");
  }
  return dd;
}

// ---------------------------------------------------------------------------
// intersection array extraction

struct RegularityWitness {
  char param = 'c';  // 'c', 'a' or 'b'
  int i = 0;         // distance class
  int x = -1, y = -1;
  long expected = -1, got = -1;

  std::string str() const {
    return std::string(1, param) + "_" + std::to_string(i) + " is not constant: pair (" +
           std::to_string(x) + "," + std::to_string(y) + ") gives " + std::to_string(got) +
           ", expected " + std::to_string(expected);
  }
};

struct ExtractResult {
  std::optional<IntersectionArray> array;
  std::optional<RegularityWitness> witness;
  bool ok() const { return array.has_value(); }
};

inline ExtractResult extract_intersection_array(const DistanceGraph& g,
                                                const DistanceData& dist) {
  const int d = dist.diameter;
  std::vector<long> cc(d + 1, -1), aa(d + 1, -1), bb(d + 1, -1);
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) {
      const int i = dist.at(x, y);
      long c = 0, a = 0, b = 0;
      for (int z : g.adj[x]) {
        const int dz = dist.at(z, y);
        if (dz == i - 1)
          ++c;
        else if (dz == i)
          ++a;
        else
          ++b;
      }
      auto check = [&](std::vector<long>& ref, long got) -> bool {
        if (ref[i] < 0) {
          ref[i] = got;
          return true;
        }
        return ref[i] == got;
      };
      if (!check(cc, c))
        return {std::nullopt, RegularityWitness{'c', i, x, y, cc[i], c}};
      if (!check(aa, a))
        return {std::nullopt, RegularityWitness{'a', i, x, y, aa[i], a}};
      if (!check(bb, b))
        return {std::nullopt, RegularityWitness{'b', i, x, y, bb[i], b}};
    }
  }
  std::vector<Int> bpart(bb.begin(), bb.end() - 1), cpart(cc.begin() + 1, cc.end());
  IntersectionArray arr(std::move(bpart), std::move(cpart));
  arr.require_valid();
  return {std::move(arr), std::nullopt};
}

// ---------------------------------------------------------------------------
// p^h_ij audit: for a distance-regular graph the number of z with
// d(x,z)=i, d(z,y)=j depends only on h=d(x,y)

struct PhijAudit {
  bool ok = true;
  int d = 0;
  std::vector<long> p;  // (d+1)^3 entries, index (h*(d+1)+i)*(d+1)+j
  std::string witness;

  long at(int h, int i, int j) const { return p[(static_cast<size_t>(h) * (d + 1) + i) * (d + 1) + j]; }
};

inline PhijAudit audit_phij(const DistanceGraph& g, const DistanceData& dist) {
  PhijAudit audit;
  const int d = dist.diameter;
  audit.d = d;
  const int w = d + 1;
  audit.p.assign(static_cast<size_t>(w) * w * w, -1);
  std::vector<long> local(static_cast<size_t>(w) * w);
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) {
      const int h = dist.at(x, y);
      std::fill(local.begin(), local.end(), 0);
      const uint8_t* rx = dist.dm.data() + static_cast<size_t>(x) * g.n;
      const uint8_t* ry = dist.dm.data() + static_cast<size_t>(y) * g.n;
      for (int z = 0; z < g.n; ++z) ++local[static_cast<size_t>(rx[z]) * w + ry[z]];
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
          long& ref = audit.p[(static_cast<size_t>(h) * w + i) * w + j];
          long got = local[static_cast<size_t>(i) * w + j];
          if (ref < 0) {
            ref = got;
          } else if (ref != got) {
            audit.ok = false;
            audit.witness = "p^" + std::to_string(h) + "_{" + std::to_string(i) + "," +
                            std::to_string(j) + "} differs at pair (" + std::to_string(x) +
                            "," + std::to_string(y) + "): " + std::to_string(got) +
                            " vs " + std::to_string(ref);
            return audit;
          }
        }
      }
    }
  }
  return audit;
}

// count of z with d(x,z)=i, d(z,y)=j over pairs at distance h, checked constant
struct PhijSingle {
  bool constant = true;
  long value = -1;
  std::string witness;
};

inline PhijSingle verify_phij(const DistanceGraph& g, const DistanceData& dist, int h, int i,
                              int j) {
  PhijSingle res;
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) {
      if (dist.at(x, y) != h) continue;
      long cnt = 0;
      for (int z = 0; z < g.n; ++z)
        if (dist.at(x, z) == i && dist.at(z, y) == j) ++cnt;
      if (res.value < 0) {
        res.value = cnt;
      } else if (res.value != cnt) {
        res.constant = false;
        res.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) + ") gives " +
                      std::to_string(cnt) + ", expected " + std::to_string(res.value);
        return res;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// cliques

inline bool is_clique(const DistanceGraph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

namespace graphdetail {

inline void bron_kerbosch(const DistanceGraph& g, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = !p.empty() ? p.front() : x.front();
  std::vector<int> candidates;
  for (int v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int u : p)
      if (g.adjacent(u, v)) np.push_back(u);
    for (int u : x)
      if (g.adjacent(u, v)) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace graphdetail

// all maximal cliques containing the edge {x, y}, each sorted, in sorted order
inline std::vector<std::vector<int>> maximal_cliques_through_edge(const DistanceGraph& g, int x,
                                                                  int y) {
  if (!g.adjacent(x, y)) throw input_error("maximal_cliques_through_edge: not an edge");
  std::vector<int> common;
  std::set_intersection(g.adj[x].begin(), g.adj[x].end(), g.adj[y].begin(), g.adj[y].end(),
                        std::back_inserter(common));
  std::vector<std::vector<int>> out;
  if (is_clique(g, common)) {
    // unique maximal clique: the closed common neighborhood
    std::vector<int> clique = common;
    clique.push_back(x);
    clique.push_back(y);
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return out;
  }
  std::vector<int> r{x, y};
  graphdetail::bron_kerbosch(g, r, std::move(common), {}, out);
  for (auto& cl : out) std::sort(cl.begin(), cl.end());
  std::sort(out.begin(), out.end());
  return out;
}

// all maximal cliques of the graph (deduplicated across edges)
inline std::vector<std::vector<int>> all_maximal_cliques(const DistanceGraph& g) {
  std::set<std::vector<int>> seen;
  for (int x = 0; x < g.n; ++x)
    for (int y : g.adj[x]) {
      if (y < x) continue;
      for (auto& cl : maximal_cliques_through_edge(g, x, y)) seen.insert(std::move(cl));
    }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// near polygon checks
//
// Route one: every maximal clique has size a_1 + 2, and for every vertex x
// and maximal clique l either all of l is at distance d from x, or there is
// a unique z in l at some distance i <= d-1 with the rest of l exactly at
// i+1. Route two: no induced K_{1,2,1} (a 4-clique minus one edge) and the
// counts a_i(x,y) = a_1 c_i(x,y) for every pair below the diameter. A near
// polygon is a near 2d-gon exactly when no (vertex, clique) pair realizes
// the all-at-distance-d alternative, equivalently a_d = a_1 c_d.

struct NearPolygonReport {
  bool regular_lambda = true;  // common-neighbor count of an edge is constant
  long lambda = -1;            // a_1
  bool via_cliques = false;
  bool via_forbidden_subgraph = false;
  bool routes_agree = false;
  bool is_near_polygon = false;
  bool is_near_2d_gon = false;        // no clique entirely at distance d
  bool near_2d_gon_by_counts = false; // a_d(x,y) = a_1 c_d(x,y) for all far pairs
  bool a_d_lower_bound_ok = true;     // a_d(x,y) >= a_1 c_d(x,y) for every pair
  std::string witness;
};

inline NearPolygonReport check_near_polygon(const DistanceGraph& g, const DistanceData& dist) {
  NearPolygonReport rep;
  const int d = dist.diameter;

  for (int x = 0; x < g.n && rep.regular_lambda; ++x) {
    for (int y : g.adj[x]) {
      if (y < x) continue;
      std::vector<int> common;
      std::set_intersection(g.adj[x].begin(), g.adj[x].end(), g.adj[y].begin(), g.adj[y].end(),
                            std::back_inserter(common));
      long lam = static_cast<long>(common.size());
      if (rep.lambda < 0) rep.lambda = lam;
      if (rep.lambda != lam) {
        rep.regular_lambda = false;
        rep.witness = "edges have varying common-neighbor counts (" + std::to_string(rep.lambda) +
                      " vs " + std::to_string(lam) + " at edge (" + std::to_string(x) + "," +
                      std::to_string(y) + "))";
        break;
      }
    }
  }

  // route one
  bool any_clique_at_diameter = false;
  if (rep.regular_lambda) {
    rep.via_cliques = true;
    auto cliques = all_maximal_cliques(g);
    for (const auto& cl : cliques) {
      if (static_cast<long>(cl.size()) != rep.lambda + 2) {
        rep.via_cliques = false;
        rep.witness = "a maximal clique has size " + std::to_string(cl.size()) +
                      ", expected a_1 + 2 = " + std::to_string(rep.lambda + 2);
        break;
      }
    }
    if (rep.via_cliques) {
      for (int x = 0; x < g.n && rep.via_cliques; ++x) {
        for (const auto& cl : cliques) {
          int best = 255, worst = -1, count = 0;
          for (int v : cl) {
            int dv = dist.at(x, v);
            if (dv < best) {
              best = dv;
              count = 1;
            } else if (dv == best) {
              ++count;
            }
            if (dv > worst) worst = dv;
          }
          if (best == d && worst == d) {
            any_clique_at_diameter = true;
            continue;
          }
          if (count != 1 || worst != best + 1 || best > d - 1) {
            rep.via_cliques = false;
            rep.witness = "vertex " + std::to_string(x) +
                          " and a maximal clique violate the nearest-point condition (" +
                          std::to_string(count) + " at distance " + std::to_string(best) +
                          ", farthest " + std::to_string(worst) + ")";
            break;
          }
        }
      }
    }
  }

  // route two
  if (rep.regular_lambda) {
    rep.via_forbidden_subgraph = true;
    // induced 4-clique minus an edge: an edge (x,z) whose common neighborhood
    // contains a non-adjacent pair
    for (int x = 0; x < g.n && rep.via_forbidden_subgraph; ++x) {
      for (int z : g.adj[x]) {
        if (z < x) continue;
        std::vector<int> common;
        std::set_intersection(g.adj[x].begin(), g.adj[x].end(), g.adj[z].begin(), g.adj[z].end(),
                              std::back_inserter(common));
        for (size_t i = 0; i < common.size() && rep.via_forbidden_subgraph; ++i)
          for (size_t j = i + 1; j < common.size(); ++j)
            if (!g.adjacent(common[i], common[j])) {
              rep.via_forbidden_subgraph = false;
              rep.witness = "induced K_{1,2,1} on vertices {" + std::to_string(x) + "," +
                            std::to_string(common[i]) + "," + std::to_string(common[j]) + "," +
                            std::to_string(z) + "}";
              break;
            }
        if (!rep.via_forbidden_subgraph) break;
      }
    }
    if (rep.via_forbidden_subgraph) {
      for (int x = 0; x < g.n && rep.via_forbidden_subgraph; ++x) {
        for (int y = 0; y < g.n; ++y) {
          const int i = dist.at(x, y);
          long c = 0, a = 0;
          for (int z : g.adj[x]) {
            const int dz = dist.at(z, y);
            if (dz == i - 1)
              ++c;
            else if (dz == i)
              ++a;
          }
          if (i <= d - 1 && a != rep.lambda * c) {
            rep.via_forbidden_subgraph = false;
            rep.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                          ") at distance " + std::to_string(i) + " has a_i = " +
                          std::to_string(a) + " != a_1 c_i = " + std::to_string(rep.lambda * c);
            break;
          }
        }
      }
    }
  }

  rep.routes_agree = rep.via_cliques == rep.via_forbidden_subgraph;
  rep.is_near_polygon = rep.via_cliques && rep.via_forbidden_subgraph;

  if (rep.is_near_polygon) {
    rep.is_near_2d_gon = !any_clique_at_diameter;
    rep.near_2d_gon_by_counts = true;
    for (int x = 0; x < g.n && rep.a_d_lower_bound_ok; ++x) {
      for (int y = 0; y < g.n; ++y) {
        if (dist.at(x, y) != d) continue;
        long c = 0, a = 0;
        for (int z : g.adj[x]) {
          const int dz = dist.at(z, y);
          if (dz == d - 1)
            ++c;
          else if (dz == d)
            ++a;
        }
        if (a != rep.lambda * c) rep.near_2d_gon_by_counts = false;
        if (a < rep.lambda * c) {
          rep.a_d_lower_bound_ok = false;
          rep.witness = "pair at distance d has a_d < a_1 c_d";
          break;
        }
      }
    }
  }
  return rep;
}

// array-level near polygon conditions (no graph needed)
struct NearPolygonArrayReport {
  bool conditions_hold = false;  // a_i = a_1 c_i for 0 <= i <= d-1
  bool near_2d_gon = false;      // additionally a_d = a_1 c_d
  bool a_d_lower_bound_ok = false;
};

inline NearPolygonArrayReport near_polygon_array_conditions(const IntersectionArray& arr) {
  NearPolygonArrayReport rep;
  rep.conditions_hold = true;
  const Int a1 = arr.a(1);
  for (int i = 0; i <= arr.d - 1; ++i)
    if (arr.a(i) != a1 * arr.c(i)) rep.conditions_hold = false;
  rep.near_2d_gon = rep.conditions_hold && arr.a(arr.d) == a1 * arr.c(arr.d);
  rep.a_d_lower_bound_ok = arr.a(arr.d) >= a1 * arr.c(arr.d);
  return rep;
}

// ---------------------------------------------------------------------------
// local distribution around a pair at distance 2: with A(x,y) the neighbors
// of x at distance 2 from y, every z in A(x,y) sees exactly c_2 - 1 vertices
// of A(y,x), is at distance 2 from the rest, and shares exactly one common
// neighbor line with y (|C(x,y) n C(z,y)| = 1)

struct LocalDistributionReport {
  bool ok = true;
  long pairs_checked = 0;
  std::string witness;
};

inline LocalDistributionReport verify_local_distribution(const DistanceGraph& g,
                                                         const DistanceData& dist,
                                                         const IntersectionArray& arr) {
  if (arr.c(2) < 2) throw input_error("local distribution needs c_2 >= 2");
  LocalDistributionReport rep;
  const long c2 = arr.c(2).convert_to<long>();
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) {
      if (dist.at(x, y) != 2) continue;
      ++rep.pairs_checked;
      std::vector<int> axy, ayx, cxy;
      for (int z : g.adj[x]) {
        if (dist.at(z, y) == 2) axy.push_back(z);
        if (dist.at(z, y) == 1) cxy.push_back(z);
      }
      for (int w : g.adj[y])
        if (dist.at(w, x) == 2) ayx.push_back(w);
      for (int z : axy) {
        long adj_count = 0;
        for (int w : ayx) {
          int dzw = dist.at(z, w);
          if (dzw == 1) {
            ++adj_count;
          } else if (dzw != 2) {
            rep.ok = false;
            rep.witness = "z=" + std::to_string(z) + " is at distance " + std::to_string(dzw) +
                          " from w=" + std::to_string(w) + " in the opposite local set";
            return rep;
          }
        }
        if (adj_count != c2 - 1) {
          rep.ok = false;
          rep.witness = "z=" + std::to_string(z) + " sees " + std::to_string(adj_count) +
                        " vertices of A(y,x), expected c_2 - 1 = " + std::to_string(c2 - 1);
          return rep;
        }
        long common_lines = 0;
        for (int u : cxy)
          if (dist.at(z, u) == 1) ++common_lines;
        if (common_lines != 1) {
          rep.ok = false;
          rep.witness = "z=" + std::to_string(z) + " shares " + std::to_string(common_lines) +
                        " common neighbours with the pair, expected 1";
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace npl
