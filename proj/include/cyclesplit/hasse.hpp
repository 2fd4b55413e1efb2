#pragma once

#include <cstdint>

#include "cyclesplit/group.hpp"

namespace cyclesplit {

/// Evidence that Spec L^H violates local cycle-splitness at the primes
/// whose Frobenius is conjugate to `witness`: a p-power-order element that
/// meets no conjugate of H.
struct HasseCertificate {
  SubgroupHandle subgroup;
  ElementId witness = 0;
  std::uint64_t witness_order = 1;
  std::uint64_t prime = 0;
  std::uint64_t certified_index = 0;
};

/// gcd over t in G of min{k >= 1 : g^k in t^-1 H t}.
std::uint64_t certified_index(const PermutationGroup &group, const SubgroupHandle &h,
                              ElementId g);

/// First element of prime-power order, ordered by (prime, order, id), that
/// avoids every conjugate of H. Throws NotProper when H = G and
/// InternalExhaustion if no element qualifies, which cannot happen for a
/// proper subgroup of a finite group.
HasseCertificate fks_witness(const PermutationGroup &group, const SubgroupHandle &h);

} // namespace cyclesplit
