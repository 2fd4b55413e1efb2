#pragma once

#include <string>
#include <vector>

#include "cyclesplit/group.hpp"

namespace cyclesplit {

struct NamedGroup {
  std::string name;
  std::size_t degree;
  std::vector<std::string> generators; // cycle notation
  std::size_t expected_order;

  PermutationGroup build() const;
};

/// Small permutation groups used for exhaustive checks: every group of
/// order <= 60 in the list, followed by a few larger ones up to 200.
const std::vector<NamedGroup> &bundled_groups();

/// Distinct subgroups generated by at most two elements, in order of
/// discovery (cyclic subgroups first, then two-generator closures). The
/// trivial subgroup comes first.
std::vector<SubgroupHandle> small_subgroups(const PermutationGroup &group);

} // namespace cyclesplit
