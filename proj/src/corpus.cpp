#include "cyclesplit/corpus.hpp"

#include <set>

namespace cyclesplit {

PermutationGroup NamedGroup::build() const {
  std::vector<Permutation> gens;
  for (const auto &g : generators)
    gens.push_back(Permutation::from_cycles(g, degree));
  return PermutationGroup::generate(degree, std::move(gens));
}

const std::vector<NamedGroup> &bundled_groups() {
  static const std::vector<NamedGroup> groups = {
      {"C2", 2, {"(0 1)"}, 2},
      {"C3", 3, {"(0 1 2)"}, 3},
      {"C4", 4, {"(0 1 2 3)"}, 4},
      {"V4", 4, {"(0 1)(2 3)", "(0 2)(1 3)"}, 4},
      {"C5", 5, {"(0 1 2 3 4)"}, 5},
      {"C6", 6, {"(0 1 2 3 4 5)"}, 6},
      {"S3", 3, {"(0 1)", "(0 1 2)"}, 6},
      {"C7", 7, {"(0 1 2 3 4 5 6)"}, 7},
      {"C8", 8, {"(0 1 2 3 4 5 6 7)"}, 8},
      {"C4xC2", 6, {"(0 1 2 3)", "(4 5)"}, 8},
      {"C2^3", 6, {"(0 1)", "(2 3)", "(4 5)"}, 8},
      {"D4", 4, {"(0 1 2 3)", "(0 2)"}, 8},
      {"Q8", 8, {"(0 2 1 3)(4 7 5 6)", "(0 4 1 5)(2 6 3 7)"}, 8},
      {"C9", 9, {"(0 1 2 3 4 5 6 7 8)"}, 9},
      {"C3xC3", 6, {"(0 1 2)", "(3 4 5)"}, 9},
      {"D5", 5, {"(0 1 2 3 4)", "(1 4)(2 3)"}, 10},
      {"C12", 12, {"(0 1 2 3)(4 5 6 7)(8 9 10 11)", "(0 4 8)(1 5 9)(2 6 10)(3 7 11)"}, 12},
      {"A4", 4, {"(0 1 2)", "(0 1)(2 3)"}, 12},
      {"D6", 6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}, 12},
      {"Dic3", 7, {"(0 1 2)", "(1 2)(3 4 5 6)"}, 12},
      {"C4xC4", 8, {"(0 1 2 3)", "(4 5 6 7)"}, 16},
      {"C2xD4", 6, {"(0 1 2 3)", "(0 2)", "(4 5)"}, 16},
      {"D8", 8, {"(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"}, 16},
      {"C3xS3", 6, {"(0 1 2)", "(3 4 5)", "(3 4)"}, 18},
      {"F20", 5, {"(0 1 2 3 4)", "(1 2 4 3)"}, 20},
      {"F21", 7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"}, 21},
      {"S4", 4, {"(0 1 2 3)", "(0 1)"}, 24},
      {"C2xA4", 6, {"(0 1)", "(2 3 4)", "(2 3)(4 5)"}, 24},
      {"SL(2,3)", 8, {"(0 3 6)(1 7 4)", "(0 5 1 2)(3 6 7 4)"}, 24},
      {"D12", 12, {"(0 1 2 3 4 5 6 7 8 9 10 11)", "(1 11)(2 10)(3 9)(4 8)(5 7)"}, 24},
      {"S3xS3", 6, {"(0 1)", "(0 1 2)", "(3 4)", "(3 4 5)"}, 36},
      {"F42", 7, {"(0 1 2 3 4 5 6)", "(1 3 2 6 4 5)"}, 42},
      {"C2xS4", 6, {"(0 1)", "(2 3 4 5)", "(2 3)"}, 48},
      {"A5", 5, {"(0 1 2 3 4)", "(0 1 2)"}, 60},
      // larger groups for class-function sweeps
      {"S5", 5, {"(0 1 2 3 4)", "(0 1)"}, 120},
      {"C2xA5", 7, {"(0 1)", "(2 3 4 5 6)", "(2 3 4)"}, 120},
      {"GL(3,2)", 7, {"(1 5)(2 6)", "(0 3 1)(2 4 5)"}, 168},
  };
  return groups;
}

std::vector<SubgroupHandle> small_subgroups(const PermutationGroup &group) {
  std::vector<SubgroupHandle> out;
  std::set<std::vector<ElementId>> seen;
  auto add = [&](SubgroupHandle h) {
    std::vector<ElementId> key(h.members().begin(), h.members().end());
    if (seen.insert(std::move(key)).second)
      out.push_back(std::move(h));
  };
  add(SubgroupHandle::trivial(group));
  for (ElementId a = 0; a < group.order(); ++a) {
    const ElementId gens[] = {a};
    add(SubgroupHandle::generated_by_ids(group, gens));
  }
  for (ElementId a = 1; a < group.order(); ++a)
    for (ElementId b = a + 1; b < group.order(); ++b) {
      const ElementId gens[] = {a, b};
      add(SubgroupHandle::generated_by_ids(group, gens));
    }
  return out;
}

} // namespace cyclesplit
