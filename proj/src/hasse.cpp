#include "cyclesplit/hasse.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include "cyclesplit/error.hpp"

namespace cyclesplit {

namespace {

/// The prime p when n = p^k with k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  std::uint64_t p = 2;
  while (n % p)
    ++p;
  while (n % p == 0)
    n /= p;
  if (n != 1)
    return std::nullopt;
  return p;
}

} // namespace

std::uint64_t certified_index(const PermutationGroup &group, const SubgroupHandle &h,
                              ElementId g) {
  if (g >= group.order())
    throw Error(ErrorKind::NotMember, "element id out of range");
  std::uint64_t result = 0;
  for (ElementId t = 0; t < group.order(); ++t) {
    // g^k in t^-1 H t  <=>  (t g t^-1)^k in H
    const ElementId u = group.conjugate(g, group.inverse(t));
    std::uint64_t k = 1;
    for (ElementId power = u; !h.contains(power); power = group.multiply(power, u))
      ++k;
    result = std::gcd(result, k);
  }
  return result;
}

HasseCertificate fks_witness(const PermutationGroup &group, const SubgroupHandle &h) {
  if (h.order() == group.order())
    throw Error(ErrorKind::NotProper, "subgroup equals the whole group");

  // g meets a conjugate of H iff its conjugacy class meets H.
  std::vector<bool> class_meets(group.classes().size(), false);
  for (ElementId m : h.members())
    class_meets[group.class_of(m)] = true;

  std::vector<std::tuple<std::uint64_t, std::uint64_t, ElementId>> candidates;
  for (ElementId g = 0; g < group.order(); ++g) {
    const std::uint64_t order = group.element_order(g);
    if (auto p = prime_power_base(order))
      candidates.emplace_back(*p, order, g);
  }
  std::sort(candidates.begin(), candidates.end());

  for (const auto &[p, order, g] : candidates) {
    if (class_meets[group.class_of(g)])
      continue;
    HasseCertificate cert{h, g, order, p, certified_index(group, h, g)};
    if (cert.certified_index <= 1 || cert.certified_index % p != 0)
      throw Error(ErrorKind::InternalExhaustion,
                  "witness " + group.element(g).to_cycle_string() +
                      " has certified index " + std::to_string(cert.certified_index));
    return cert;
  }
  throw Error(ErrorKind::InternalExhaustion,
              "no prime-power element avoids all conjugates of the subgroup");
}

} // namespace cyclesplit
