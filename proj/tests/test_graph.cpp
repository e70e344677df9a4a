#include "npl/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace npl;

namespace {

DistanceGraph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return DistanceGraph::from_edges("C" + std::to_string(n), n, edges);
}

DistanceGraph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return DistanceGraph::from_edges("K" + std::to_string(n), n, edges);
}

// brute-force Hamming graph over tuples, independent of the library builder
DistanceGraph hamming_brute(int d, int n) {
  int N = 1;
  for (int i = 0; i < d; ++i) N *= n;
  auto digits = [&](int v) {
    std::vector<int> t(d);
    for (int i = 0; i < d; ++i) {
      t[i] = v % n;
      v /= n;
    }
    return t;
  };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < N; ++u)
    for (int v = u + 1; v < N; ++v) {
      auto tu = digits(u), tv = digits(v);
      int diff = 0;
      for (int i = 0; i < d; ++i) diff += tu[i] != tv[i];
      if (diff == 1) edges.emplace_back(u, v);
    }
  return DistanceGraph::from_edges("H", N, edges);
}

}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(DistanceGraph::from_edges("g", 2, {{0, 0}}), input_error);
  CHECK_THROWS_AS(DistanceGraph::from_edges("g", 2, {{0, 2}}), input_error);
  auto g = DistanceGraph::from_edges("g", 3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.num_edges() == 2);  // duplicate collapsed
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("all pairs distances by BFS") {
  auto g = DistanceGraph::from_edges("P4", 4, {{0, 1}, {1, 2}, {2, 3}});
  auto dd = all_pairs_distances(g);
  CHECK(dd.diameter == 3);
  CHECK(dd.at(0, 3) == 3);
  CHECK(dd.at(1, 3) == 2);
  CHECK(dd.at(2, 2) == 0);

  auto disconnected = DistanceGraph::from_edges("two edges", 4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(all_pairs_distances(disconnected), input_error);

  CHECK_THROWS_AS(all_pairs_distances(hamming_brute(2, 3), 5), guard_error);
}

TEST_CASE("vertex cap environment override") {
  unsetenv("NPL_VERTEX_CAP");
  CHECK(default_vertex_cap() == 10000);
  setenv("NPL_VERTEX_CAP", "123", 1);
  CHECK(default_vertex_cap() == 123);
  setenv("NPL_VERTEX_CAP", "bogus", 1);
  CHECK_THROWS_AS(default_vertex_cap(), input_error);
  unsetenv("NPL_VERTEX_CAP");
}

TEST_CASE("extraction on a non-regular graph yields a witness") {
  auto g = DistanceGraph::from_edges("P3", 3, {{0, 1}, {1, 2}});
  auto dd = all_pairs_distances(g);
  auto res = extract_intersection_array(g, dd);
  CHECK_FALSE(res.ok());
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->str().find("not constant") != std::string::npos);
}

TEST_CASE("extraction on small distance-regular graphs") {
  {
    auto g = cycle(5);
    auto res = extract_intersection_array(g, all_pairs_distances(g));
    REQUIRE(res.ok());
    CHECK(*res.array == IntersectionArray({2, 1}, {1, 1}));
  }
  {
    auto g = complete(4);
    auto res = extract_intersection_array(g, all_pairs_distances(g));
    REQUIRE(res.ok());
    CHECK(*res.array == IntersectionArray({3}, {1}));
  }
  {
    auto g = hamming_brute(3, 3);
    auto res = extract_intersection_array(g, all_pairs_distances(g));
    REQUIRE(res.ok());
    CHECK(*res.array == IntersectionArray({6, 4, 2}, {1, 2, 3}));
  }
}

TEST_CASE("a deleted edge breaks distance-regularity with a witness") {
  auto g = hamming_brute(3, 3);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) edges.emplace_back(u, v);
  edges.pop_back();
  auto broken = DistanceGraph::from_edges("broken", g.n, edges);
  auto res = extract_intersection_array(broken, all_pairs_distances(broken));
  CHECK_FALSE(res.ok());
  CHECK(res.witness.has_value());
}

TEST_CASE("p^h_ij audit") {
  {
    auto g = cycle(5);
    auto dd = all_pairs_distances(g);
    auto audit = audit_phij(g, dd);
    CHECK(audit.ok);
    CHECK(audit.at(2, 1, 1) == 1);
    CHECK(audit.at(2, 1, 2) == 1);
    CHECK(audit.at(1, 1, 1) == 0);
    CHECK(audit.at(0, 2, 2) == 2);

    auto single = verify_phij(g, dd, 2, 1, 1);
    CHECK(single.constant);
    CHECK(single.value == 1);
  }
  {
    auto g = hamming_brute(3, 3);
    auto dd = all_pairs_distances(g);
    CHECK(audit_phij(g, dd).ok);
    // k_i row: p^0_{ii} are the sphere sizes
    auto audit = audit_phij(g, dd);
    CHECK(audit.at(0, 1, 1) == 6);
    CHECK(audit.at(0, 2, 2) == 12);
    CHECK(audit.at(0, 3, 3) == 8);
    CHECK(audit.at(1, 1, 1) == 1);  // a_1
  }
  {
    auto g = DistanceGraph::from_edges("P4", 4, {{0, 1}, {1, 2}, {2, 3}});
    auto audit = audit_phij(g, all_pairs_distances(g));
    CHECK_FALSE(audit.ok);
    CHECK_FALSE(audit.witness.empty());
  }
}

TEST_CASE("maximal cliques through an edge") {
  // octahedron: antipodal pairs are the only non-edges
  auto g = DistanceGraph::from_edges(
      "K2,2,2", 6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                    {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  auto cliques = maximal_cliques_through_edge(g, 0, 2);
  REQUIRE(cliques.size() == 2);
  CHECK(cliques[0] == std::vector<int>{0, 2, 4});
  CHECK(cliques[1] == std::vector<int>{0, 2, 5});

  auto h = hamming_brute(3, 3);
  auto through = maximal_cliques_through_edge(h, 0, h.adj[0].front());
  REQUIRE(through.size() == 1);
  CHECK(through[0].size() == 3);  // a_1 + 2 with a_1 = 1

  CHECK(all_maximal_cliques(g).size() == 8);
  CHECK_THROWS_AS(maximal_cliques_through_edge(g, 0, 1), input_error);
}

TEST_CASE("near polygon route agreement") {
  {
    // pentagon: a near polygon (odd gon), not a near 2d-gon
    auto g = cycle(5);
    auto rep = check_near_polygon(g, all_pairs_distances(g));
    CHECK(rep.is_near_polygon);
    CHECK(rep.via_cliques);
    CHECK(rep.via_forbidden_subgraph);
    CHECK(rep.routes_agree);
    CHECK_FALSE(rep.is_near_2d_gon);
    CHECK_FALSE(rep.near_2d_gon_by_counts);
    CHECK(rep.a_d_lower_bound_ok);
  }
  {
    // hexagon: the ordinary 6-gon is a near 2d-gon
    auto g = cycle(6);
    auto rep = check_near_polygon(g, all_pairs_distances(g));
    CHECK(rep.is_near_polygon);
    CHECK(rep.is_near_2d_gon);
    CHECK(rep.near_2d_gon_by_counts);
  }
  {
    auto g = complete(4);
    auto rep = check_near_polygon(g, all_pairs_distances(g));
    CHECK(rep.is_near_polygon);
    CHECK(rep.is_near_2d_gon);
  }
  {
    // K_{1,2,1} itself: lambda is not even constant
    auto g = DistanceGraph::from_edges("K121", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    auto rep = check_near_polygon(g, all_pairs_distances(g));
    CHECK_FALSE(rep.is_near_polygon);
    CHECK_FALSE(rep.regular_lambda);
  }
  {
    // octahedron: constant lambda, both routes reject, and they agree
    auto g = DistanceGraph::from_edges(
        "K2,2,2", 6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                      {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    auto rep = check_near_polygon(g, all_pairs_distances(g));
    CHECK(rep.regular_lambda);
    CHECK(rep.lambda == 2);
    CHECK_FALSE(rep.via_cliques);
    CHECK_FALSE(rep.via_forbidden_subgraph);
    CHECK(rep.routes_agree);
    CHECK_FALSE(rep.is_near_polygon);
    CHECK_FALSE(rep.witness.empty());
  }
  {
    auto g = hamming_brute(3, 3);
    auto rep = check_near_polygon(g, all_pairs_distances(g));
    CHECK(rep.is_near_polygon);
    CHECK(rep.routes_agree);
    CHECK(rep.is_near_2d_gon);
    CHECK(rep.near_2d_gon_by_counts);
    CHECK(rep.lambda == 1);
  }
}

TEST_CASE("near polygon conditions from the array alone") {
  auto h33 = near_polygon_array_conditions(IntersectionArray({6, 4, 2}, {1, 2, 3}));
  CHECK(h33.conditions_hold);
  CHECK(h33.near_2d_gon);
  CHECK(h33.a_d_lower_bound_ok);

  auto m24 = near_polygon_array_conditions(IntersectionArray({30, 28, 24}, {1, 3, 15}));
  CHECK(m24.conditions_hold);
  CHECK(m24.near_2d_gon);

  auto c5 = near_polygon_array_conditions(IntersectionArray({2, 1}, {1, 1}));
  CHECK(c5.conditions_hold);
  CHECK_FALSE(c5.near_2d_gon);  // a_2 = 1 > a_1 c_2 = 0
  CHECK(c5.a_d_lower_bound_ok);

  // a_2 = 1 but a_1 c_2 = 3: the interior condition fails
  auto bad = near_polygon_array_conditions(IntersectionArray({6, 4, 2}, {1, 3, 3}));
  CHECK_FALSE(bad.conditions_hold);
  CHECK_FALSE(bad.near_2d_gon);
}

TEST_CASE("local distribution around a pair at distance 2") {
  auto g = hamming_brute(3, 3);
  auto dd = all_pairs_distances(g);
  auto res = extract_intersection_array(g, dd);
  REQUIRE(res.ok());
  auto rep = verify_local_distribution(g, dd, *res.array);
  CHECK(rep.ok);
  CHECK(rep.pairs_checked == 27 * 12);

  CHECK_THROWS_AS(verify_local_distribution(g, dd, IntersectionArray({2, 1}, {1, 1})),
                  input_error);
}
