#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cyclesplit/group.hpp"

namespace cyclesplit {

/// Exact densities; always in lowest terms.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational &q);

/// A finite étale algebra A = K_1 + ... + K_n presented by the Galois group
/// G of a common splitting field together with one transitive G-set per
/// field factor (the cosets G/H_i).
class EtaleAlgebraModel {
public:
  /// Throws NotTransitive or DegreeMismatch (factor from a different group).
  EtaleAlgebraModel(GroupPtr group, std::vector<FiniteAction> factors);

  const PermutationGroup &group() const noexcept { return *group_; }
  const GroupPtr &group_ptr() const noexcept { return group_; }
  const std::vector<FiniteAction> &factors() const noexcept { return factors_; }

  /// Degrees [K_i : K], one per factor.
  std::vector<std::size_t> factor_degrees() const;

private:
  GroupPtr group_;
  std::vector<FiniteAction> factors_;
};

/// Multiplicity-weighted fibre data: the algebra of geometric components
/// of multiplicity m for each m. All component algebras share one group.
class FibreModel {
public:
  explicit FibreModel(GroupPtr group) : group_(std::move(group)) {}

  /// Throws EmptyAlgebra if `algebra` has no factors, DegreeMismatch if it
  /// lives over another group, Parse if `multiplicity` is 0 or repeated.
  void add_component(std::uint64_t multiplicity, EtaleAlgebraModel algebra);

  /// A fibre with one multiplicity-1 component.
  static FibreModel reduced(EtaleAlgebraModel algebra);

  const PermutationGroup &group() const noexcept { return *group_; }
  const GroupPtr &group_ptr() const noexcept { return group_; }
  const std::map<std::uint64_t, EtaleAlgebraModel> &components() const noexcept {
    return components_;
  }

  /// gcd of the declared multiplicities.
  std::uint64_t multiplicity_gcd() const;

private:
  GroupPtr group_;
  std::map<std::uint64_t, EtaleAlgebraModel> components_;
};

struct ClassIndexRow {
  std::size_t class_number = 0;
  ElementId representative = 0;
  std::size_t class_size = 0;
  std::uint64_t index = 0;
  bool divides_r = false;
};

struct IndexReport {
  std::uint64_t r = 1;
  std::uint64_t group_order = 0;
  std::vector<ClassIndexRow> rows;
  bool split = false;
  std::optional<std::size_t> witness_class; // row of the first failing class
};

struct ClassPattern {
  std::size_t class_number = 0;
  ElementId representative = 0;
  std::size_t class_size = 0;
  /// Per component (ascending multiplicity), per factor: sorted orbit sizes.
  std::vector<std::vector<std::vector<std::uint64_t>>> patterns;
  std::uint64_t index = 0;
};

/// gcd over multiplicities m of m * gcd(all orbit sizes of g on that
/// component's factors). Throws EmptyFibre if there is nothing to act on.
std::uint64_t combinatorial_index(const FibreModel &fibre, ElementId g);

/// Evaluates the index per conjugacy class. Throws InternalExhaustion if the
/// index is not constant on some class (a broken group model).
IndexReport is_combinatorially_cycle_split(const FibreModel &fibre, std::uint64_t r);

/// gcd_i [G : H_i]; the algebra carries a global zero-cycle of degree r iff
/// this divides r.
std::uint64_t global_degree_gcd(const EtaleAlgebraModel &algebra);

/// #{g in cosetRep*N : I(g) | r} / #N for a normal subgroup N.
///
/// This is the unramified single-place term only. Deciding whether a place
/// ramifies, and summing over places of intermediate fields, needs
/// number-field data that a group model does not carry.
Rational s0_term(const FibreModel &fibre, const SubgroupHandle &normal,
                 ElementId coset_rep, std::uint64_t r);

/// Sum of |C|/#G over classes C with I(C) | r.
Rational cycle_split_density(const FibreModel &fibre, std::uint64_t r);

std::vector<ClassPattern> class_pattern_table(const FibreModel &fibre);

} // namespace cyclesplit
