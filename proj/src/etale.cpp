#include "cyclesplit/etale.hpp"

#include <numeric>

#include "cyclesplit/error.hpp"

namespace cyclesplit {

std::string to_string(const Rational &q) {
  if (q.denominator() == 1)
    return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

EtaleAlgebraModel::EtaleAlgebraModel(GroupPtr group, std::vector<FiniteAction> factors)
    : group_(std::move(group)), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].group_ptr() != group_)
      throw Error(ErrorKind::DegreeMismatch,
                  "factor " + std::to_string(i) + " is an action of a different group");
    if (!factors_[i].is_transitive())
      throw Error(ErrorKind::NotTransitive,
                  "factor " + std::to_string(i) + " is not a transitive action");
  }
}

std::vector<std::size_t> EtaleAlgebraModel::factor_degrees() const {
  std::vector<std::size_t> out;
  for (const auto &f : factors_)
    out.push_back(f.point_count());
  return out;
}

void FibreModel::add_component(std::uint64_t multiplicity, EtaleAlgebraModel algebra) {
  if (multiplicity == 0)
    throw Error(ErrorKind::Parse, "multiplicity must be positive");
  if (components_.contains(multiplicity))
    throw Error(ErrorKind::Parse,
                "multiplicity " + std::to_string(multiplicity) + " declared twice");
  if (algebra.factors().empty())
    throw Error(ErrorKind::EmptyAlgebra, "a declared component needs at least one factor");
  if (algebra.group_ptr() != group_)
    throw Error(ErrorKind::DegreeMismatch, "component algebra uses a different group");
  components_.emplace(multiplicity, std::move(algebra));
}

FibreModel FibreModel::reduced(EtaleAlgebraModel algebra) {
  FibreModel fibre(algebra.group_ptr());
  fibre.add_component(1, std::move(algebra));
  return fibre;
}

std::uint64_t FibreModel::multiplicity_gcd() const {
  std::uint64_t g = 0;
  for (const auto &[m, _] : components_)
    g = std::gcd(g, m);
  return g;
}

std::uint64_t combinatorial_index(const FibreModel &fibre, ElementId g) {
  if (fibre.components().empty())
    throw Error(ErrorKind::EmptyFibre, "fibre has no components");
  if (g >= fibre.group().order())
    throw Error(ErrorKind::NotMember, "element id out of range");
  std::uint64_t index = 0;
  for (const auto &[m, algebra] : fibre.components()) {
    std::uint64_t inner = 0;
    for (const auto &action : algebra.factors())
      for (std::uint64_t orbit : cycle_type(action, g))
        inner = std::gcd(inner, orbit);
    index = std::gcd(index, m * inner);
  }
  return index;
}

IndexReport is_combinatorially_cycle_split(const FibreModel &fibre, std::uint64_t r) {
  const auto &G = fibre.group();
  IndexReport report;
  report.r = r;
  report.group_order = G.order();
  report.split = true;
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const auto &cls = G.classes()[c];
    ClassIndexRow row;
    row.class_number = c;
    row.representative = cls.representative;
    row.class_size = cls.size();
    row.index = combinatorial_index(fibre, cls.representative);
    for (ElementId member : cls.members)
      if (combinatorial_index(fibre, member) != row.index)
        throw Error(ErrorKind::InternalExhaustion,
                    "index is not constant on conjugacy class " + std::to_string(c));
    row.divides_r = r % row.index == 0;
    if (!row.divides_r && report.split) {
      report.split = false;
      report.witness_class = c;
    }
    report.rows.push_back(row);
  }
  return report;
}

std::uint64_t global_degree_gcd(const EtaleAlgebraModel &algebra) {
  if (algebra.factors().empty())
    throw Error(ErrorKind::EmptyAlgebra, "algebra has no factors");
  std::uint64_t g = 0;
  for (std::size_t d : algebra.factor_degrees())
    g = std::gcd(g, static_cast<std::uint64_t>(d));
  return g;
}

Rational s0_term(const FibreModel &fibre, const SubgroupHandle &normal,
                 ElementId coset_rep, std::uint64_t r) {
  const auto &G = fibre.group();
  if (!normal.is_normal_in(G))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal in the fibre's group");
  if (coset_rep >= G.order())
    throw Error(ErrorKind::NotMember, "coset representative out of range");
  std::int64_t hits = 0;
  for (ElementId n : normal.members())
    if (r % combinatorial_index(fibre, G.multiply(coset_rep, n)) == 0)
      ++hits;
  return Rational(hits, static_cast<std::int64_t>(normal.order()));
}

Rational cycle_split_density(const FibreModel &fibre, std::uint64_t r) {
  const auto &G = fibre.group();
  std::int64_t hits = 0;
  for (const auto &cls : G.classes())
    if (r % combinatorial_index(fibre, cls.representative) == 0)
      hits += static_cast<std::int64_t>(cls.size());
  return Rational(hits, static_cast<std::int64_t>(G.order()));
}

std::vector<ClassPattern> class_pattern_table(const FibreModel &fibre) {
  const auto &G = fibre.group();
  std::vector<ClassPattern> table;
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const auto &cls = G.classes()[c];
    ClassPattern row;
    row.class_number = c;
    row.representative = cls.representative;
    row.class_size = cls.size();
    for (const auto &[m, algebra] : fibre.components()) {
      auto &component = row.patterns.emplace_back();
      for (const auto &action : algebra.factors())
        component.push_back(cycle_type(action, cls.representative));
    }
    row.index = combinatorial_index(fibre, cls.representative);
    table.push_back(std::move(row));
  }
  return table;
}

} // namespace cyclesplit
