#include "npl/catalog.hpp"
#include "npl/io.hpp"
#include "npl/polar.hpp"
#include "npl/spectra.hpp"
#include "npl/theorems.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace npl;

constexpr int exit_ok = 0;
constexpr int exit_inconsistent = 1;
constexpr int exit_usage = 2;

std::string sanitize_filename(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? std::string("graph") : out;
}

std::string int_list(const std::vector<Int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out;
}

void print_constructed(const DistanceGraph& g, const IntersectionArray& arr,
                       const std::vector<Int>& theta, const std::string& path) {
  long edges = 0;
  for (const auto& nb : g.adj) edges += static_cast<long>(nb.size());
  edges /= 2;
  std::printf("%s: %d vertices, %ld edges\n", g.name.c_str(), g.n, edges);
  std::printf("predicted array        %s\n", arr.str().c_str());
  std::printf("predicted eigenvalues  %s\n", int_list(theta).c_str());
  std::printf("wrote %s\n", path.c_str());
}

int cmd_construct_hamming(int d, int n, std::string out) {
  DistanceGraph g = build_hamming_graph(d, n);
  if (out.empty()) out = sanitize_filename(g.name) + ".json";
  write_graph_file(g, out);
  print_constructed(g, hamming_array(d, n), hamming_theta(d, n), out);
  return exit_ok;
}

int cmd_construct_dual_polar(const std::string& family, int d, int p, int m, std::string out) {
  PolarFamily fam = parse_family(family);
  DualPolarGraph dp = build_dual_polar_graph(fam, d, static_cast<uint32_t>(p),
                                             static_cast<uint32_t>(m));
  if (out.empty()) out = sanitize_filename(dp.graph.name) + ".json";
  write_graph_file(dp.graph, out);
  print_constructed(dp.graph, predicted_dual_polar_array(dp.space),
                    predicted_dual_polar_theta(dp.space), out);
  return exit_ok;
}

const char* tri_word(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

void print_classification(const std::string& name, const ClassificationResult& cls) {
  const IntersectionArray& arr = cls.arr;
  std::printf("name        %s\n", name.c_str());
  std::printf("array       %s\n", arr.str().c_str());
  std::printf("vertices    %s\n", cls.sd.nvert.str().c_str());
  std::printf("k = %s, a_1 = %s, c_2 = %s, diameter %d\n", arr.k().str().c_str(),
              arr.a(1).str().c_str(), arr.c(2).str().c_str(), arr.d);
  std::printf("hypotheses  d >= 3 %s, a_1 > 0 %s, c_2 >= 2 %s, near polygon %s (%s)\n",
              cls.hyp.diameter_ok ? "yes" : "no", cls.hyp.a1_positive ? "yes" : "no",
              cls.hyp.c2_big ? "yes" : "no", tri_word(cls.hyp.near_polygon),
              cls.hyp.near_polygon_source.c_str());

  std::printf("spectrum\n");
  for (int i = 0; i <= cls.sd.d(); ++i) {
    std::string cos = "(";
    for (int l = 0; l <= cls.sd.d(); ++l) {
      if (l) cos += ", ";
      cos += cls.sd.sigma(i, l).str();
    }
    cos += ")";
    std::printf("  θ_%d = %-8s m = %-6s σ = %s\n", i, cls.sd.roots[i].str().c_str(),
                cls.sd.mult_int[i].str().c_str(), cos.c_str());
  }

  if (!cls.hyp.c2_big || arr.d < 2) {
    std::printf("bound       not evaluated (needs diameter >= 2 and c_2 >= 2)\n");
  } else {
    std::printf("bound       θ_1 = %s, (k - a_1 - c_2)/(c_2 - 1) = %s, %s\n",
                cls.sd.roots[1].str().c_str(), rat_string(cls.bound.bound).c_str(),
                relation_name(cls.bound.relation));
    std::printf("hoffman     θ_%d = %s, -k/(a_1 + 1) = %s, %s; near 2d-gon %s; agree %s\n",
                arr.d, cls.sd.roots.back().str().c_str(),
                rat_string(cls.hoffman.bound).c_str(),
                relation_name(-cls.hoffman.relation), tri_word(cls.near_2d_gon),
                tri_word(cls.hoffman_consistent));
    std::printf("balanced    %s (q = %s)\n", tri_word(cls.balanced.theta1_route),
                rat_string(cls.balanced.q).c_str());
    if (cls.classical.fitted) {
      const auto& f = *cls.classical.fitted;
      std::printf("classical   (d, q, α, β) = (%d, %s, %s, %s)\n", arr.d,
                  rat_string(f.q).c_str(), rat_string(f.alpha).c_str(),
                  rat_string(f.beta).c_str());
    } else {
      std::printf("classical   none%s%s\n", cls.classical.note.empty() ? "" : ": ",
                  cls.classical.note.c_str());
    }
    std::string fam;
    switch (cls.family.kind) {
      case FamilyKind::hamming: fam = "hamming"; break;
      case FamilyKind::dual_polar: fam = "dual polar"; break;
      default: fam = "neither"; break;
    }
    for (const auto& nm : cls.family.names) fam += " " + nm;
    std::printf("family      %s\n", fam.c_str());
    std::printf("Q-polynomial with respect to θ_1: %s\n",
                tri_word(cls.qpoly.q_polynomial));
    std::printf("krein       nonnegative %s\n", tri_word(cls.krein.nonnegative));
  }
  const char* scope = "outside the theorem hypotheses";
  if (cls.in_scope)
    scope = cls.hyp.near_polygon == Tri::yes
                ? "all hypotheses hold"
                : "scalar hypotheses hold, near polygon not disproven";
  std::printf("scope       %s\n", scope);
  std::printf("consistent  %s\n", tri_word(cls.theorem_consistent));
  for (const auto& note : cls.notes) std::printf("note        %s\n", note.c_str());
}

int classification_exit(const ClassificationResult& cls) {
  bool bad = cls.theorem_consistent == Tri::no || cls.hoffman_consistent == Tri::no ||
             cls.krein.nonnegative == Tri::no || cls.identity.holds == Tri::no ||
             (cls.in_scope && cls.factored.nonnegative == Tri::no);
  return bad ? exit_inconsistent : exit_ok;
}

int cmd_analyze(const std::string& catalog_name, const std::string& array_str,
                const std::string& graph_file, bool as_json) {
  std::string name;
  IntersectionArray arr;
  std::optional<Hypotheses> graph_hyp;
  std::optional<Tri> graph_n2g;

  if (!catalog_name.empty()) {
    const CatalogEntry* e = find_catalog(catalog_name);
    if (!e) throw input_error("no catalog entry named '" + catalog_name + "'");
    name = e->name;
    arr = e->arr;
  } else if (!array_str.empty()) {
    arr = IntersectionArray::parse(array_str);
    name = arr.str();
  } else {
    DistanceGraph g = read_graph_file(graph_file);
    DistanceData dist = all_pairs_distances(g);
    ExtractResult ex = extract_intersection_array(g, dist);
    if (!ex.ok()) {
      std::printf("%s is not distance-regular: %s\n", g.name.c_str(),
                  ex.witness ? ex.witness->str().c_str() : "no witness");
      return exit_inconsistent;
    }
    name = g.name;
    arr = *ex.array;
    graph_hyp = hypotheses_from_graph(g, dist, arr);
    graph_n2g = check_near_polygon(g, dist).is_near_2d_gon ? Tri::yes : Tri::no;
  }

  arr.require_valid();
  ClassificationResult cls = classify(arr, graph_hyp ? &*graph_hyp : nullptr,
                                      graph_n2g ? &*graph_n2g : nullptr);
  if (as_json) {
    json j = classification_to_json(cls);
    j["name"] = name;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    print_classification(name, cls);
  }
  return classification_exit(cls);
}

int cmd_verify(const std::string& graph_file) {
  DistanceGraph g = read_graph_file(graph_file);
  DistanceData dist = all_pairs_distances(g);
  ExtractResult ex = extract_intersection_array(g, dist);
  if (!ex.ok()) {
    std::printf("%-28s FAIL  %s\n", "distance-regularity",
                ex.witness ? ex.witness->str().c_str() : "no witness");
    return exit_inconsistent;
  }
  const IntersectionArray& arr = *ex.array;
  std::printf("%s: %d vertices, array %s\n", g.name.c_str(), g.n, arr.str().c_str());
  SpectralData sd = compute_spectrum(arr);

  bool failed = false;
  auto row = [&](const char* label, bool ok, const std::string& detail) {
    std::printf("%-28s %s%s%s\n", label, ok ? "pass" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) failed = true;
  };
  auto skip = [&](const char* label, const char* why) {
    std::printf("%-28s skipped  %s\n", label, why);
  };

  PhijAudit ph = audit_phij(g, dist);
  row("intersection numbers", ph.ok, ph.ok ? "" : ph.witness);

  bool lemma_scope = arr.d >= 2 && arr.c(2) >= 2;
  if (lemma_scope) {
    LocalDistributionReport loc = verify_local_distribution(g, dist, arr);
    row("local distribution", loc.ok, loc.ok ? "" : loc.witness);

    bool equality = check_bound(sd).equality();
    CauchySchwarzAudit cs = audit_cauchy_schwarz(g, dist, sd, equality);
    std::string scope = (cs.exhaustive ? "all " : "sampled ") +
                        std::to_string(cs.pairs_checked) + " pairs";
    row("cauchy-schwarz closed forms",
        cs.closed_forms == Tri::yes && cs.inequality == Tri::yes,
        cs.witness.empty() ? scope : cs.witness);
    row("span witness", cs.span_as_expected == Tri::yes,
        cs.span_as_expected == Tri::yes
            ? (equality ? "u = (a_2/c_2) v" : "u outside span(v), bound strict")
            : cs.witness);
  } else {
    skip("local distribution", "needs diameter >= 2 and c_2 >= 2");
    skip("cauchy-schwarz closed forms", "needs diameter >= 2 and c_2 >= 2");
    skip("span witness", "needs diameter >= 2 and c_2 >= 2");
  }

  IdempotentAudit id = audit_idempotents(g, dist, sd);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max residual %.2e", id.max_residual);
  row("idempotent identities", id.pass, id.pass ? buf : id.note);

  return failed ? exit_inconsistent : exit_ok;
}

int cmd_catalog(bool as_json, const std::string& out) {
  if (as_json) {
    json j = json::array();
    for (const auto& e : catalog())
      j.push_back({{"name", e.name},
                   {"array", e.arr.str()},
                   {"aliases", e.aliases},
                   {"provenance", e.provenance}});
    std::string text = j.dump(2);
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) throw input_error("cannot write " + out);
      f << text << "\n";
      std::printf("wrote %s\n", out.c_str());
    } else {
      std::printf("%s\n", text.c_str());
    }
    return exit_ok;
  }
  for (const auto& e : catalog())
    std::printf("%-10s %-28s %s\n", e.name.c_str(), e.arr.str().c_str(),
                e.provenance.c_str());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-regular graphs, their spectra, and the near polygon bound on θ_1"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a graph and write it as JSON");
  construct->require_subcommand(1);
  int hd = 0, hn = 0;
  std::string hout;
  auto* ham = construct->add_subcommand("hamming", "Hamming graph H(d,n)");
  ham->add_option("--d", hd, "diameter (tuple length)")->required();
  ham->add_option("--n", hn, "alphabet size")->required();
  ham->add_option("--out", hout, "output file (default from the graph name)");

  std::string pfam, pout;
  int pd = 0, pp = 0, pm = 1;
  auto* pol = construct->add_subcommand("dual-polar", "dual polar graph on maximal isotropic subspaces");
  pol->add_option("--family", pfam, "B, C, D, 2D, 2A-odd or 2A-even")->required();
  pol->add_option("--d", pd, "Witt index (diameter)")->required();
  pol->add_option("--p", pp, "field characteristic")->required();
  pol->add_option("--m", pm, "field degree, r = p^m");
  pol->add_option("--out", pout, "output file (default from the graph name)");

  std::string acat, aarr, agraph;
  bool ajson = false;
  auto* analyze = app.add_subcommand("analyze", "full spectral and theorem report for one instance");
  auto* o1 = analyze->add_option("--catalog", acat, "bundled catalog entry by name");
  auto* o2 = analyze->add_option("--array", aarr, "intersection array \"b0,b1,..;c1,c2,..\"");
  auto* o3 = analyze->add_option("--graph", agraph, "graph file (JSON or edge list)");
  o1->excludes(o2)->excludes(o3);
  o2->excludes(o3);
  analyze->add_flag("--json", ajson, "emit the report as JSON");

  std::string vfile;
  auto* verify = app.add_subcommand("verify", "run the graph-level audits on an explicit graph");
  verify->add_option("file", vfile, "graph file (JSON or edge list)")->required();

  bool cjson = false;
  std::string cout_file;
  auto* cat = app.add_subcommand("catalog", "list the bundled intersection arrays");
  cat->add_flag("--json", cjson, "emit the catalog as a JSON array");
  cat->add_option("--out", cout_file, "write the JSON to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (ham->parsed()) return cmd_construct_hamming(hd, hn, hout);
    if (pol->parsed()) return cmd_construct_dual_polar(pfam, pd, pp, pm, pout);
    if (analyze->parsed()) {
      if (acat.empty() && aarr.empty() && agraph.empty())
        throw input_error("analyze needs --catalog, --array or --graph");
      return cmd_analyze(acat, aarr, agraph, ajson);
    }
    if (verify->parsed()) return cmd_verify(vfile);
    if (cat->parsed()) return cmd_catalog(cjson, cout_file);
  } catch (const input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_usage;
  } catch (const guard_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_usage;
  } catch (const npl_error& e) {
    std::fprintf(stderr, "inconsistency: %s\n", e.what());
    return exit_inconsistent;
  }
  return exit_usage;
}
