// Sweep the bundled catalog and tabulate the theta_1 bound for each array.

#include "npl/catalog.hpp"
#include "npl/theorems.hpp"

#include <cstdio>

int main() {
  using namespace npl;
  std::printf("%-8s %-22s %9s %9s %9s %8s %s\n", "name", "array", "theta_1", "bound",
              "relation", "Q-poly", "family");
  for (const CatalogEntry& e : catalog()) {
    ClassificationResult cls = classify(e.arr);
    const char* family = "neither";
    if (cls.family.kind == FamilyKind::hamming) family = "hamming";
    if (cls.family.kind == FamilyKind::dual_polar) family = "dual polar";
    if (!cls.in_scope) family = "(out of scope)";
    std::printf("%-8s %-22s %9s %9s %9s %8s %s\n", e.name.c_str(), e.arr.str().c_str(),
                cls.sd.roots[1].str().c_str(), rat_string(cls.bound.bound).c_str(),
                relation_name(cls.bound.relation), tri_name(cls.qpoly.q_polynomial),
                family);
  }
  return 0;
}
