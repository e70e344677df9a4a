#pragma once

#include "npl/graph.hpp"
#include "npl/spectra.hpp"
#include "npl/theorems.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace npl {

using nlohmann::json;

// ---------------------------------------------------------------------------
// graph files: JSON {name, num_vertices, edges, labels} or "u v" per line

inline json graph_to_json(const DistanceGraph& g) {
  json j;
  j["name"] = g.name;
  j["num_vertices"] = g.n;
  json edges = json::array();
  for (int x = 0; x < g.n; ++x)
    for (int y : g.adj[x])
      if (x < y) edges.push_back({x, y});
  j["edges"] = std::move(edges);
  j["labels"] = g.labels;
  return j;
}

inline DistanceGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num_vertices") || !j.contains("edges"))
    throw input_error("graph json needs num_vertices and edges");
  std::string name = j.value("name", std::string("graph"));
  int n = j.at("num_vertices").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw input_error("edge entries must be pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  DistanceGraph g = DistanceGraph::from_edges(name, n, edges);
  if (j.contains("labels")) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n)
      throw input_error("label count does not match num_vertices");
    g.labels = std::move(labels);
  }
  return g;
}

inline DistanceGraph graph_from_edge_list(const std::string& text, const std::string& name) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) continue;  // blank or comment line
    if (!(ls >> v)) throw input_error("edge line needs two vertex numbers: " + line);
    std::string rest;
    if (ls >> rest) throw input_error("trailing tokens on edge line: " + line);
    if (u < 0 || v < 0) throw input_error("vertex numbers must be nonnegative");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
  }
  if (edges.empty()) throw input_error("no edges found in edge list");
  return DistanceGraph::from_edges(name, max_vertex + 1, edges);
}

// dispatch on content: JSON object or whitespace edge list
inline DistanceGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw input_error("empty graph file: " + path);
  if (text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("invalid json in " + path);
    return graph_from_json(j);
  }
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return graph_from_edge_list(text, name);
}

inline void write_graph_file(const DistanceGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// reports

inline json tri_json(Tri t) {
  switch (t) {
    case Tri::yes: return json(true);
    case Tri::no: return json(false);
    default: return json(nullptr);
  }
}

inline json spectrum_to_json(const SpectralData& sd) {
  json j;
  json eigen = json::array(), mult = json::array(), cos = json::array();
  for (int i = 0; i <= sd.d(); ++i) {
    const RealRoot& r = sd.roots[i];
    if (r.rational)
      eigen.push_back(rat_string(r.value));
    else
      eigen.push_back(json{{"approx", r.approx()}, {"lo", rat_string(r.lo)},
                           {"hi", rat_string(r.hi)}});
    mult.push_back(sd.mult_int[i].str());
    json row = json::array();
    for (int l = 0; l <= sd.d(); ++l) {
      const QI& s = sd.sigma(i, l);
      if (s.is_point())
        row.push_back(rat_string(s.point()));
      else
        row.push_back(s.approx());
    }
    cos.push_back(std::move(row));
  }
  j["eigenvalues"] = std::move(eigen);
  j["multiplicities"] = std::move(mult);
  j["cosines"] = std::move(cos);
  return j;
}

inline json classification_to_json(const ClassificationResult& cls) {
  json j;
  j["array"] = cls.arr.str();
  j["num_vertices"] = cls.sd.nvert.str();
  j["hypotheses"] = {{"diameter_ok", cls.hyp.diameter_ok},
                     {"a1_positive", cls.hyp.a1_positive},
                     {"c2_at_least_2", cls.hyp.c2_big},
                     {"near_polygon", tri_json(cls.hyp.near_polygon)},
                     {"near_polygon_source", cls.hyp.near_polygon_source}};
  j["spectrum"] = spectrum_to_json(cls.sd);
  if (cls.hyp.c2_big && cls.arr.d >= 2) {
    j["bound"] = {{"theta1", cls.sd.roots[1].str()},
                  {"bound", rat_string(cls.bound.bound)},
                  {"relation", relation_name(cls.bound.relation)}};
    j["hoffman"] = {{"theta_d", cls.sd.roots.back().str()},
                    {"bound", rat_string(cls.hoffman.bound)},
                    {"relation", relation_name(-cls.hoffman.relation)},
                    {"equality", cls.hoffman.equality()},
                    {"near_2d_gon", tri_json(cls.near_2d_gon)},
                    {"consistent", tri_json(cls.hoffman_consistent)}};
    j["balanced"] = tri_json(cls.balanced.theta1_route);
    if (cls.classical.fitted) {
      const auto& f = *cls.classical.fitted;
      j["classical"] = {{"d", cls.arr.d},
                        {"q", rat_string(f.q)},
                        {"alpha", rat_string(f.alpha)},
                        {"beta", rat_string(f.beta)}};
    } else {
      j["classical"] = nullptr;
      if (!cls.classical.note.empty()) j["classical_note"] = cls.classical.note;
    }
    j["q_polynomial"] = tri_json(cls.qpoly.q_polynomial);
    switch (cls.family.kind) {
      case FamilyKind::hamming: j["family"] = "hamming"; break;
      case FamilyKind::dual_polar: j["family"] = "dual_polar"; break;
      default: j["family"] = "neither"; break;
    }
    j["family_names"] = cls.family.names;
    j["krein_nonnegative"] = tri_json(cls.krein.nonnegative);
  } else {
    j["q_polynomial"] = nullptr;
    j["family"] = "undetermined";
    j["krein_nonnegative"] = tri_json(cls.krein.nonnegative);
  }
  j["in_scope"] = cls.in_scope;
  j["theorem_main_consistent"] = tri_json(cls.theorem_consistent);
  j["notes"] = cls.notes;
  return j;
}

}  // namespace npl
