#include "cyclesplit/group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "cyclesplit/error.hpp"

namespace cyclesplit {

PermutationGroup PermutationGroup::generate(std::size_t degree,
                                            std::vector<Permutation> generators,
                                            std::size_t cap) {
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator " + g.to_cycle_string() + " has degree " +
                      std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  PermutationGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);

  auto add = [&](Permutation p, ElementId parent, std::size_t via) {
    if (group.elements_.size() >= cap)
      throw Error(ErrorKind::CapExceeded,
                  "group order exceeds cap of " + std::to_string(cap));
    group.index_.emplace(p, group.elements_.size());
    group.elements_.push_back(std::move(p));
    group.parent_.push_back(parent);
    group.via_.push_back(via);
  };

  add(Permutation::identity(degree), 0, 0);
  for (ElementId next = 0; next < group.elements_.size(); ++next) {
    for (std::size_t s = 0; s < group.generators_.size(); ++s) {
      Permutation p = group.elements_[next] * group.generators_[s];
      if (!group.index_.contains(p))
        add(std::move(p), next, s);
    }
  }
  group.compute_classes();
  return group;
}

void PermutationGroup::compute_classes() {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  class_index_.assign(elements_.size(), unassigned);
  std::vector<Permutation> inverses;
  for (const auto &s : generators_)
    inverses.push_back(s.inverse());

  for (ElementId x = 0; x < elements_.size(); ++x) {
    if (class_index_[x] != unassigned)
      continue;
    const std::size_t c = classes_.size();
    ConjugacyClass cls{x, {x}};
    class_index_[x] = c;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      const Permutation &y = elements_[cls.members[head]];
      for (std::size_t s = 0; s < generators_.size(); ++s) {
        ElementId z = index_.at(inverses[s] * y * generators_[s]);
        if (class_index_[z] == unassigned) {
          class_index_[z] = c;
          cls.members.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

std::optional<ElementId> PermutationGroup::find(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementId PermutationGroup::id_of(const Permutation &p) const {
  if (p.degree() != degree_)
    throw Error(ErrorKind::DegreeMismatch, "permutation degree does not match the group");
  auto id = find(p);
  if (!id)
    throw Error(ErrorKind::NotMember, p.to_cycle_string() + " is not in the group");
  return *id;
}

ElementId PermutationGroup::multiply(ElementId a, ElementId b) const {
  return index_.at(elements_.at(a) * elements_.at(b));
}

ElementId PermutationGroup::inverse(ElementId a) const {
  return index_.at(elements_.at(a).inverse());
}

ElementId PermutationGroup::power(ElementId a, std::uint64_t k) const {
  return index_.at(elements_.at(a).pow(k));
}

ElementId PermutationGroup::conjugate(ElementId g, ElementId by) const {
  return index_.at(cyclesplit::conjugate(elements_.at(g), elements_.at(by)));
}

// --- SubgroupHandle -------------------------------------------------------

SubgroupHandle SubgroupHandle::generated_by(const PermutationGroup &group,
                                            std::span<const Permutation> generators) {
  std::vector<ElementId> ids;
  ids.reserve(generators.size());
  for (const auto &g : generators)
    ids.push_back(group.id_of(g));
  return generated_by_ids(group, ids);
}

SubgroupHandle SubgroupHandle::generated_by_ids(const PermutationGroup &group,
                                                std::span<const ElementId> generators) {
  SubgroupHandle h;
  h.generator_ids_.assign(generators.begin(), generators.end());
  h.mask_.assign(group.order(), false);
  std::vector<ElementId> queue{PermutationGroup::identity_id()};
  h.mask_[PermutationGroup::identity_id()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ElementId s : h.generator_ids_) {
      ElementId z = group.multiply(queue[head], s);
      if (!h.mask_[z]) {
        h.mask_[z] = true;
        queue.push_back(z);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  h.members_ = std::move(queue);
  return h;
}

SubgroupHandle SubgroupHandle::from_members(const PermutationGroup &group,
                                            std::vector<ElementId> members) {
  SubgroupHandle h;
  h.mask_.assign(group.order(), false);
  for (ElementId m : members) {
    if (m >= group.order())
      throw Error(ErrorKind::NotASubgroup, "member id out of range");
    h.mask_[m] = true;
  }
  if (!h.mask_[PermutationGroup::identity_id()])
    throw Error(ErrorKind::NotASubgroup, "member set lacks the identity");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (ElementId a : members) {
    if (!h.mask_[group.inverse(a)])
      throw Error(ErrorKind::NotASubgroup, "member set is not closed under inverses");
    for (ElementId b : members)
      if (!h.mask_[group.multiply(a, b)])
        throw Error(ErrorKind::NotASubgroup, "member set is not closed under products");
  }
  h.members_ = std::move(members);
  h.generator_ids_ = h.members_;
  return h;
}

SubgroupHandle SubgroupHandle::whole(const PermutationGroup &group) {
  std::vector<ElementId> gens;
  for (const auto &g : group.generators())
    gens.push_back(group.id_of(g));
  return generated_by_ids(group, gens);
}

SubgroupHandle SubgroupHandle::trivial(const PermutationGroup &group) {
  return generated_by_ids(group, {});
}

std::vector<ElementId> SubgroupHandle::conjugate_members(const PermutationGroup &group,
                                                         ElementId t) const {
  std::vector<ElementId> out;
  out.reserve(members_.size());
  for (ElementId h : members_)
    out.push_back(group.conjugate(h, t));
  std::sort(out.begin(), out.end());
  return out;
}

bool SubgroupHandle::is_normal_in(const PermutationGroup &group) const {
  for (const auto &g : group.generators()) {
    ElementId gid = group.id_of(g);
    for (ElementId h : members_)
      if (!mask_[group.conjugate(h, gid)])
        return false;
  }
  return true;
}

// --- FiniteAction ---------------------------------------------------------

FiniteAction FiniteAction::from_generator_images(GroupPtr group,
                                                 std::vector<Permutation> images) {
  const auto &G = *group;
  if (images.size() != G.generators().size())
    throw Error(ErrorKind::NotHomomorphism,
                "expected one image per group generator (" +
                    std::to_string(G.generators().size()) + "), got " +
                    std::to_string(images.size()));
  const std::size_t points = images.empty() ? 1 : images.front().degree();
  for (const auto &img : images)
    if (img.degree() != points)
      throw Error(ErrorKind::DegreeMismatch, "generator images act on different point counts");

  std::vector<Permutation> table(G.order());
  table[PermutationGroup::identity_id()] = Permutation::identity(points);
  for (ElementId x = 1; x < G.order(); ++x)
    table[x] = table[G.parent(x)] * images[G.parent_generator(x)];

  for (ElementId x = 0; x < G.order(); ++x)
    for (std::size_t s = 0; s < images.size(); ++s) {
      ElementId xs = G.multiply(x, G.id_of(G.generators()[s]));
      if (table[xs] != table[x] * images[s])
        throw Error(ErrorKind::NotHomomorphism,
                    "generator images do not define a homomorphism");
    }
  return FiniteAction(std::move(group), points, std::move(table));
}

FiniteAction FiniteAction::natural(GroupPtr group) {
  std::vector<Permutation> table(group->elements().begin(), group->elements().end());
  const std::size_t points = group->degree();
  return FiniteAction(std::move(group), points, std::move(table));
}

bool FiniteAction::is_transitive() const {
  std::vector<bool> seen(points_, false);
  std::deque<Point> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (const auto &g : group_->generators()) {
      Point y = table_[group_->id_of(g)][x];
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == points_;
}

FiniteAction coset_action(GroupPtr group, const SubgroupHandle &h) {
  const auto &G = *group;
  // Handles are closed by construction; only guard against a foreign group.
  if (!h.members().empty() && h.members().back() >= G.order())
    throw Error(ErrorKind::NotASubgroup, "subgroup belongs to a different group");

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(G.order(), unassigned);
  std::vector<ElementId> reps;
  for (ElementId t = 0; t < G.order(); ++t) {
    if (coset_of[t] != unassigned)
      continue;
    for (ElementId m : h.members())
      coset_of[G.multiply(m, t)] = reps.size();
    reps.push_back(t);
  }

  std::vector<Permutation> table;
  table.reserve(G.order());
  std::vector<Point> images(reps.size());
  for (ElementId g = 0; g < G.order(); ++g) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(coset_of[G.multiply(reps[c], g)]);
    table.emplace_back(images);
  }
  const std::size_t points = reps.size();
  return FiniteAction(std::move(group), points, std::move(table));
}

std::vector<std::uint64_t> cycle_type(const FiniteAction &action, ElementId g) {
  if (g >= action.group().order())
    throw Error(ErrorKind::NotMember, "element id out of range");
  return action.image(g).cycle_lengths();
}

} // namespace cyclesplit
