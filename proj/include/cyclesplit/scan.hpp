#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclesplit/etale.hpp"
#include "cyclesplit/poly.hpp"

namespace cyclesplit {

struct ScanComponent {
  std::uint64_t multiplicity = 1;
  std::vector<IntPolynomial> polynomials;
};

struct ScanSpec {
  std::vector<ScanComponent> components;
  std::uint64_t r = 1;
  std::uint64_t prime_bound = 100000;
  std::shared_ptr<const FibreModel> model; // optional, for cross-validation
  double tolerance = 0.02;

  /// Throws Parse for structural problems and InvalidPolynomial when a
  /// polynomial (or the product of all of them) is not squarefree over Q.
  void validate() const;
};

/// Per component, per polynomial: the factor-degree multiset mod p.
using PatternTuple = std::vector<std::vector<DegreePattern>>;

/// "1 1|1 1 2 2" (polynomials joined by '|') with components joined by ';'.
std::string format_patterns(const PatternTuple &patterns);

struct WitnessTerm {
  std::uint64_t degree = 0;
  std::int64_t coefficient = 0;
  friend bool operator==(const WitnessTerm &, const WitnessTerm &) = default;
};

struct PrimeScanRecord {
  std::uint64_t p = 0;
  bool ramified = false;
  PatternTuple patterns;
  std::uint64_t index = 0;
  bool split = false;
  std::vector<WitnessTerm> witness;
  std::uint64_t witness_maxdeg = 0;

  friend bool operator==(const PrimeScanRecord &, const PrimeScanRecord &) = default;
};

struct CrossValidationRow {
  std::string pattern;
  std::vector<std::size_t> classes; // matching conjugacy classes of the model
  std::uint64_t observed = 0;
  double empirical = 0.0;
  Rational predicted{0};
  bool in_model = false;
  bool pass = false;
};

struct CrossValidation {
  double tolerance = 0.0;
  std::uint64_t records = 0;
  std::vector<CrossValidationRow> rows;
  bool membership_ok = true;
  bool frequency_ok = true;
  Rational predicted_density{0};
  double empirical_density = 0.0;
  bool density_ok = true;
  bool pass() const { return membership_ok && frequency_ok && density_ok; }
};

struct PatternFrequency {
  std::string pattern;
  std::uint64_t count = 0;
  double frequency = 0.0;
};

struct ScanSummary {
  std::uint64_t prime_bound = 0;
  std::uint64_t r = 1;
  std::uint64_t primes_scanned = 0;
  std::vector<std::uint64_t> ramified;
  std::uint64_t unramified = 0;
  std::uint64_t split_count = 0;
  Rational split_density{0};
  std::uint64_t max_witness_maxdeg = 0;
  std::vector<PatternFrequency> patterns; // sorted by pattern string
  std::optional<CrossValidation> cross_validation;
  bool all_split() const { return split_count == unramified; }
};

struct ScanResult {
  std::vector<PrimeScanRecord> records;
  ScanSummary summary;
};

struct LocalVerdict {
  std::uint64_t index = 0;
  bool split = false;
};

/// index = gcd over components of m * gcd(pattern entries). Throws
/// EmptyComponent if some component has an empty pattern.
LocalVerdict local_verdict(const std::vector<std::pair<std::uint64_t, DegreePattern>> &patterns,
                           std::uint64_t r);

/// Zero-cycle sum n_i d_i = r over the given point degrees with the smallest
/// possible maximum degree. Ties go to the fewest distinct degrees, then to
/// the lexicographically least sorted degree set. Repeated degrees are
/// interchangeable and used at most once. Coefficients come from iterated
/// extended Euclid scaled up to r.
/// Throws NoWitness when gcd(degrees) does not divide r.
std::vector<WitnessTerm> witness_cycle(const std::vector<std::uint64_t> &degrees,
                                       std::uint64_t r);

/// Scans every prime <= spec.prime_bound. `workers` = 0 picks the hardware
/// concurrency. The record sequence does not depend on `workers`.
ScanResult scan(const ScanSpec &spec, unsigned workers = 1);

/// Compares observed pattern tuples with the class pattern table of `model`.
/// Ramified records are ignored. Throws NoRecords when nothing is left and
/// DegreeMismatch when the model's component/factor layout differs from the
/// records'.
CrossValidation cross_validate(const std::vector<PrimeScanRecord> &records,
                               const FibreModel &model, std::uint64_t r,
                               double tolerance);

/// Worker count from CYCLESPLIT_THREADS, falling back to `fallback`.
unsigned workers_from_env(unsigned fallback = 1);

} // namespace cyclesplit
