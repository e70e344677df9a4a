#pragma once

#include "npl/intersection_array.hpp"
#include "npl/polar.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace npl {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string provenance;
  IntersectionArray arr;

  enum class Build { none, hamming, dual_polar } build = Build::none;
  int hd = 0, hn = 0;                      // hamming parameters
  PolarFamily family = PolarFamily::B;     // dual polar parameters
  int pd = 0, pp = 0, pm = 0;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto hamming = [&](int d, int n) {
      CatalogEntry e;
      e.name = "H(" + std::to_string(d) + "," + std::to_string(n) + ")";
      e.provenance = "Hamming graph, d-tuples over an n-set";
      e.arr = hamming_array(d, n);
      e.build = CatalogEntry::Build::hamming;
      e.hd = d;
      e.hn = n;
      v.push_back(std::move(e));
    };
    auto polar = [&](PolarFamily fam, int d, int p, int m, const std::string& prov) {
      CatalogEntry e;
      auto sp = make_polar_space(fam, d, p, m);
      e.name = sp.name();
      e.provenance = prov;
      e.arr = predicted_dual_polar_array(sp);
      e.build = CatalogEntry::Build::dual_polar;
      e.family = fam;
      e.pd = d;
      e.pp = p;
      e.pm = m;
      v.push_back(std::move(e));
    };
    hamming(3, 3);
    hamming(4, 3);
    polar(PolarFamily::C, 3, 2, 1, "dual polar graph, symplectic form on GF(2)^6");
    polar(PolarFamily::B, 3, 2, 1, "dual polar graph, quadratic form on GF(2)^7");
    polar(PolarFamily::D, 3, 2, 1,
          "dual polar graph, quadratic form of Witt index 3 on GF(2)^6");
    polar(PolarFamily::TwoD, 3, 2, 1,
          "dual polar graph, quadratic form of Witt index 3 on GF(2)^8");
    polar(PolarFamily::TwoAodd, 3, 2, 1, "dual polar graph, hermitean form on GF(4)^6");
    {
      CatalogEntry e;
      e.name = "M24";
      e.aliases = {"M24-near-hexagon", "near-hexagon-759"};
      e.provenance = "near hexagon on the 759 octads of the Witt design, array only";
      e.arr = IntersectionArray({30, 28, 24}, {1, 3, 15});
      v.push_back(std::move(e));
    }
    return v;
  }();
  return entries;
}

namespace catalogdetail {

// lowercase with separators removed, so "C_3(2)" and "c3(2)" both match
inline std::string normalize(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == ' ' || c == '-') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace catalogdetail

inline const CatalogEntry* find_catalog(const std::string& name) {
  std::string key = catalogdetail::normalize(name);
  for (const auto& e : catalog()) {
    if (catalogdetail::normalize(e.name) == key) return &e;
    for (const auto& a : e.aliases)
      if (catalogdetail::normalize(a) == key) return &e;
  }
  return nullptr;
}

// construct the graph behind a catalog entry, when one is available
inline std::optional<DistanceGraph> build_catalog_graph(const CatalogEntry& e, int cap = -1) {
  switch (e.build) {
    case CatalogEntry::Build::hamming:
      return build_hamming_graph(e.hd, e.hn, cap);
    case CatalogEntry::Build::dual_polar:
      return build_dual_polar_graph(e.family, e.pd, static_cast<uint32_t>(e.pp),
                                    static_cast<uint32_t>(e.pm), cap)
          .graph;
    default:
      return std::nullopt;
  }
}

}  // namespace npl
