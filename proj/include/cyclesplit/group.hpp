#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cyclesplit/permutation.hpp"

namespace cyclesplit {

/// Index of an element in a group's enumeration order.
using ElementId = std::size_t;

inline constexpr std::size_t kDefaultGroupCap = 100000;

struct ConjugacyClass {
  ElementId representative; // enumeration-least member
  std::vector<ElementId> members;
  std::size_t size() const noexcept { return members.size(); }
};

/// A finite permutation group held as its full element list.
///
/// Elements are enumerated breadth-first from the identity, multiplying by
/// generators on the right in input order. Element 0 is always the identity.
class PermutationGroup {
public:
  /// Throws DegreeMismatch or CapExceeded.
  static PermutationGroup generate(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   std::size_t cap = kDefaultGroupCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation &element(ElementId id) const { return elements_.at(id); }
  std::span<const ConjugacyClass> classes() const noexcept { return classes_; }

  static constexpr ElementId identity_id() noexcept { return 0; }

  std::optional<ElementId> find(const Permutation &p) const;
  bool contains(const Permutation &p) const { return find(p).has_value(); }
  /// Throws NotMember.
  ElementId id_of(const Permutation &p) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  ElementId power(ElementId a, std::uint64_t k) const;
  ElementId conjugate(ElementId g, ElementId by) const; // by^-1 g by
  std::uint64_t element_order(ElementId a) const { return elements_.at(a).order(); }

  std::size_t class_of(ElementId a) const { return class_index_.at(a); }

  /// BFS tree: element = parent * generators[via]. Unset for the identity.
  ElementId parent(ElementId a) const { return parent_.at(a); }
  std::size_t parent_generator(ElementId a) const { return via_.at(a); }

private:
  PermutationGroup() = default;
  void compute_classes();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId> index_;
  std::vector<ElementId> parent_;
  std::vector<std::size_t> via_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_index_;
};

using GroupPtr = std::shared_ptr<const PermutationGroup>;

/// A subgroup given by its sorted member ids inside a parent group.
class SubgroupHandle {
public:
  /// Closure of `generators` inside `group`; throws NotMember if a generator
  /// lies outside the group.
  static SubgroupHandle generated_by(const PermutationGroup &group,
                                     std::span<const Permutation> generators);
  static SubgroupHandle generated_by_ids(const PermutationGroup &group,
                                         std::span<const ElementId> generators);

  /// Validates an explicit member set; throws NotASubgroup if it is not
  /// closed under products and inverses or lacks the identity.
  static SubgroupHandle from_members(const PermutationGroup &group,
                                     std::vector<ElementId> members);

  static SubgroupHandle whole(const PermutationGroup &group);
  static SubgroupHandle trivial(const PermutationGroup &group);

  std::span<const ElementId> generator_ids() const noexcept { return generator_ids_; }
  std::span<const ElementId> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementId id) const noexcept { return mask_.at(id); }

  /// t^-1 H t as a member set.
  std::vector<ElementId> conjugate_members(const PermutationGroup &group,
                                           ElementId t) const;
  bool is_normal_in(const PermutationGroup &group) const;

  friend bool operator==(const SubgroupHandle &a, const SubgroupHandle &b) {
    return a.members_ == b.members_;
  }

private:
  std::vector<ElementId> generator_ids_;
  std::vector<ElementId> members_;
  std::vector<bool> mask_;
};

/// A homomorphism from a group into Sym(points), tabulated per element.
class FiniteAction {
public:
  /// Builds the action from generator images and verifies it is a
  /// well-defined homomorphism (throws NotHomomorphism otherwise).
  static FiniteAction from_generator_images(GroupPtr group,
                                            std::vector<Permutation> images);

  /// The group's own action on its `degree()` points.
  static FiniteAction natural(GroupPtr group);

  const PermutationGroup &group() const noexcept { return *group_; }
  const GroupPtr &group_ptr() const noexcept { return group_; }
  std::size_t point_count() const noexcept { return points_; }
  const Permutation &image(ElementId g) const { return table_.at(g); }

  bool is_transitive() const;

private:
  friend FiniteAction coset_action(GroupPtr group, const SubgroupHandle &h);
  FiniteAction(GroupPtr group, std::size_t points, std::vector<Permutation> table)
      : group_(std::move(group)), points_(points), table_(std::move(table)) {}

  GroupPtr group_;
  std::size_t points_ = 0;
  std::vector<Permutation> table_;
};

/// Action of G on the right cosets H*t by right multiplication. Cosets are
/// labelled in order of their least element id.
FiniteAction coset_action(GroupPtr group, const SubgroupHandle &h);

/// Sorted orbit sizes of <g> on the action's points.
std::vector<std::uint64_t> cycle_type(const FiniteAction &action, ElementId g);

} // namespace cyclesplit
