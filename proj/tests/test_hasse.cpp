#include <doctest.h>

#include <numeric>

#include "cyclesplit/corpus.hpp"
#include "cyclesplit/error.hpp"
#include "cyclesplit/etale.hpp"
#include "cyclesplit/hasse.hpp"
#include "oracles/oracles.hpp"

using namespace cyclesplit;

namespace {

GroupPtr make_group(std::size_t degree, std::vector<std::string> cycles) {
  std::vector<Permutation> gens;
  for (const auto &c : cycles)
    gens.push_back(Permutation::from_cycles(c, degree));
  return std::make_shared<const PermutationGroup>(PermutationGroup::generate(degree, gens));
}

SubgroupHandle sub(const GroupPtr &g, std::vector<std::string> cycles) {
  std::vector<Permutation> gens;
  for (const auto &c : cycles)
    gens.push_back(Permutation::from_cycles(c, g->degree()));
  return SubgroupHandle::generated_by(*g, gens);
}

oracle::Perm raw(const Permutation &p) { return {p.images().begin(), p.images().end()}; }

/// gcd over t of the least k with g^k in t^-1 H t, straight from raw permutations.
std::uint64_t brute_certified(const PermutationGroup &group, const SubgroupHandle &h, ElementId g) {
  std::set<oracle::Perm> hs;
  for (ElementId m : h.members())
    hs.insert(raw(group.element(m)));
  const auto x = raw(group.element(g));
  std::uint64_t out = 0;
  for (const auto &tp : group.elements()) {
    const auto t = raw(tp);
    std::set<oracle::Perm> conj;
    for (const auto &y : hs)
      conj.insert(oracle::compose(oracle::compose(oracle::inverse(t), y), t));
    std::uint64_t k = 1;
    for (auto power = x; !conj.contains(power); power = oracle::compose(power, x))
      ++k;
    out = std::gcd(out, k);
  }
  return out;
}

} // namespace

TEST_CASE("fks_witness examples") {
  SUBCASE("A4 over a double transposition") {
    auto g = make_group(4, {"(0 1 2)", "(0 1)(2 3)"});
    const auto cert = fks_witness(*g, sub(g, {"(0 1)(2 3)"}));
    CHECK(cert.prime == 3);
    CHECK(cert.witness_order == 3);
    CHECK(cert.certified_index == 3);
    CHECK(g->element(cert.witness).cycle_lengths() == std::vector<std::size_t>{1, 3});
  }
  SUBCASE("C4 over its square") {
    auto g = make_group(4, {"(0 1 2 3)"});
    const auto cert = fks_witness(*g, sub(g, {"(0 2)(1 3)"}));
    CHECK(cert.prime == 2);
    CHECK(cert.certified_index == 2);
    CHECK(g->element_order(cert.witness) == 4);
  }
  SUBCASE("S3 over a transposition") {
    auto g = make_group(3, {"(0 1 2)", "(0 1)"});
    const auto cert = fks_witness(*g, sub(g, {"(0 1)"}));
    CHECK(cert.prime == 3);
    CHECK(cert.certified_index == 3);
  }
  SUBCASE("trivial subgroup picks the least prime") {
    auto g = make_group(3, {"(0 1 2)", "(0 1)"});
    const auto cert = fks_witness(*g, SubgroupHandle::trivial(*g));
    CHECK(cert.prime == 2);
    CHECK(cert.witness == g->id_of(Permutation::from_cycles("(0 1)", 3)));
  }
  SUBCASE("whole group") {
    auto g = make_group(3, {"(0 1 2)"});
    CHECK_THROWS_WITH_AS(fks_witness(*g, SubgroupHandle::whole(*g)), doctest::Contains("NotProper"),
                         Error);
  }
}

TEST_CASE("certified_index examples") {
  auto g = make_group(4, {"(0 1 2)", "(0 1)(2 3)"});
  const auto h = sub(g, {"(0 1)(2 3)"});
  CHECK(certified_index(*g, h, PermutationGroup::identity_id()) == 1);
  CHECK(certified_index(*g, h, g->id_of(Permutation::from_cycles("(0 1)(2 3)", 4))) == 1);
  CHECK(certified_index(*g, h, g->id_of(Permutation::from_cycles("(0 1 2)", 4))) == 3);
  CHECK(certified_index(*g, h, g->id_of(Permutation::from_cycles("(0 2)(1 3)", 4))) == 1);
  CHECK_THROWS_WITH_AS(certified_index(*g, h, 12), doctest::Contains("NotMember"), Error);
}

TEST_CASE("certified_index against the raw definition (orders <= 24)") {
  for (const auto &named : bundled_groups()) {
    if (named.expected_order > 24)
      continue;
    CAPTURE(named.name);
    const auto g = named.build();
    for (const auto &h : small_subgroups(g))
      for (ElementId x = 0; x < g.order(); ++x)
        CHECK(certified_index(g, h, x) == brute_certified(g, h, x));
  }
}

TEST_CASE("bridge identity and FKS sweep (orders <= 60)") {
  std::size_t pairs = 0;
  for (const auto &named : bundled_groups()) {
    if (named.expected_order > 60)
      continue;
    CAPTURE(named.name);
    auto g = std::make_shared<const PermutationGroup>(named.build());
    for (const auto &h : small_subgroups(*g)) {
      const auto fibre = FibreModel::reduced(EtaleAlgebraModel(g, {coset_action(g, h)}));
      for (ElementId x = 0; x < g->order(); ++x)
        CHECK(certified_index(*g, h, x) == combinatorial_index(fibre, x));
      if (h.order() == g->order()) {
        CHECK_THROWS_AS(fks_witness(*g, h), Error);
        CHECK(is_combinatorially_cycle_split(fibre, 1).split);
        continue;
      }
      const auto cert = fks_witness(*g, h);
      ++pairs;
      CHECK(cert.certified_index > 1);
      CHECK(cert.certified_index % cert.prime == 0);
      std::uint64_t o = cert.witness_order;
      while (o % cert.prime == 0)
        o /= cert.prime;
      CHECK(o == 1);
      // the witness avoids every conjugate of H
      for (ElementId t = 0; t < g->order(); ++t)
        CHECK_FALSE(h.contains(g->conjugate(cert.witness, t)));
      CHECK_FALSE(is_combinatorially_cycle_split(fibre, 1).split);
    }
  }
  CHECK(pairs > 300);
}
