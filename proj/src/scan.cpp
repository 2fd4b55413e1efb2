#include "cyclesplit/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "cyclesplit/error.hpp"

namespace cyclesplit {

void ScanSpec::validate() const {
  if (components.empty())
    throw Error(ErrorKind::Parse, "scan needs at least one component");
  if (r < 1)
    throw Error(ErrorKind::Parse, "r must be at least 1");
  if (prime_bound < 2)
    throw Error(ErrorKind::Parse, "prime bound must be at least 2");
  if (!(tolerance > 0.0 && tolerance < 1.0))
    throw Error(ErrorKind::Parse, "tolerance must lie in (0, 1)");
  std::set<std::uint64_t> seen;
  std::optional<IntPolynomial> product;
  for (const auto &c : components) {
    if (c.multiplicity < 1 || !seen.insert(c.multiplicity).second)
      throw Error(ErrorKind::Parse, "multiplicities must be positive and distinct");
    if (c.polynomials.empty())
      throw Error(ErrorKind::EmptyComponent,
                  "component of multiplicity " + std::to_string(c.multiplicity) +
                      " has no polynomials");
    for (const auto &f : c.polynomials) {
      if (discriminant(f) == 0)
        throw Error(ErrorKind::InvalidPolynomial, f.to_string() + " is not squarefree");
      product = product ? *product * f : f;
    }
  }
  if (discriminant(*product) == 0)
    throw Error(ErrorKind::InvalidPolynomial, "the polynomials share a common factor");
}

std::string format_patterns(const PatternTuple &patterns) {
  std::string out;
  for (std::size_t c = 0; c < patterns.size(); ++c) {
    if (c)
      out += ';';
    for (std::size_t f = 0; f < patterns[c].size(); ++f) {
      if (f)
        out += '|';
      for (std::size_t k = 0; k < patterns[c][f].size(); ++k) {
        if (k)
          out += ' ';
        out += std::to_string(patterns[c][f][k]);
      }
    }
  }
  return out;
}

LocalVerdict local_verdict(const std::vector<std::pair<std::uint64_t, DegreePattern>> &patterns,
                           std::uint64_t r) {
  if (patterns.empty())
    throw Error(ErrorKind::EmptyComponent, "no components");
  std::uint64_t index = 0;
  for (const auto &[m, pattern] : patterns) {
    if (pattern.empty())
      throw Error(ErrorKind::EmptyComponent,
                  "component of multiplicity " + std::to_string(m) + " is empty");
    std::uint64_t inner = 0;
    for (std::uint64_t d : pattern)
      inner = std::gcd(inner, d);
    index = std::gcd(index, m * inner);
  }
  return {index, r % index == 0};
}

namespace {

struct Bezout {
  std::int64_t gcd, x, y;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

} // namespace

std::vector<WitnessTerm> witness_cycle(const std::vector<std::uint64_t> &degrees,
                                       std::uint64_t r) {
  std::vector<std::uint64_t> values(degrees);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (!values.empty() && values.front() == 0)
    throw Error(ErrorKind::NoWitness, "point degrees must be positive");

  // Smallest maximum degree: the first prefix whose gcd divides r.
  std::size_t top = values.size();
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    g = std::gcd(g, values[i]);
    if (r % g == 0) {
      top = i;
      break;
    }
  }
  if (top == values.size())
    throw Error(ErrorKind::NoWitness, "gcd of the point degrees does not divide r");

  // Fewest points, then lexicographically least: the largest degree is
  // values[top]; try companions from values[0..top) by increasing count,
  // combinations in lexicographic order.
  std::vector<std::uint64_t> chosen;
  for (std::size_t extra = 0; chosen.empty() && extra <= top; ++extra) {
    std::vector<std::size_t> pick(extra);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    for (;;) {
      std::uint64_t cg = values[top];
      for (std::size_t i : pick)
        cg = std::gcd(cg, values[i]);
      if (r % cg == 0) {
        for (std::size_t i : pick)
          chosen.push_back(values[i]);
        chosen.push_back(values[top]);
        break;
      }
      // next combination of `extra` indices out of [0, top)
      std::size_t k = extra;
      while (k > 0 && pick[k - 1] == top - extra + k - 1)
        --k;
      if (k == 0)
        break;
      ++pick[k - 1];
      for (std::size_t j = k; j < extra; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }

  std::vector<WitnessTerm> terms;
  std::int64_t acc_gcd = static_cast<std::int64_t>(chosen.front());
  terms.push_back({chosen.front(), 1});
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    const Bezout b = extended_gcd(acc_gcd, static_cast<std::int64_t>(chosen[i]));
    for (auto &t : terms)
      t.coefficient *= b.x;
    terms.push_back({chosen[i], b.y});
    acc_gcd = b.gcd;
  }
  const std::int64_t scale = static_cast<std::int64_t>(r) / acc_gcd;
  for (auto &t : terms)
    t.coefficient *= scale;
  return terms;
}

namespace {

PrimeScanRecord scan_prime(const ScanSpec &spec, const BigInt &disc, std::uint64_t p) {
  PrimeScanRecord rec;
  rec.p = p;
  if (disc % p == 0) {
    rec.ramified = true;
    return rec;
  }
  std::vector<std::pair<std::uint64_t, DegreePattern>> weighted;
  std::vector<std::uint64_t> point_degrees;
  for (const auto &c : spec.components) {
    auto &per_poly = rec.patterns.emplace_back();
    DegreePattern merged;
    for (const auto &f : c.polynomials) {
      DegreePattern d = factor_degree_pattern(reduce_mod_p(f, p));
      merged.insert(merged.end(), d.begin(), d.end());
      for (std::uint64_t deg : d)
        point_degrees.push_back(c.multiplicity * deg);
      per_poly.push_back(std::move(d));
    }
    std::sort(merged.begin(), merged.end());
    weighted.emplace_back(c.multiplicity, std::move(merged));
  }
  const LocalVerdict v = local_verdict(weighted, spec.r);
  rec.index = v.index;
  rec.split = v.split;
  if (rec.split) {
    rec.witness = witness_cycle(point_degrees, spec.r);
    for (const auto &t : rec.witness)
      rec.witness_maxdeg = std::max(rec.witness_maxdeg, t.degree);
  }
  return rec;
}

} // namespace

unsigned workers_from_env(unsigned fallback) {
  if (const char *env = std::getenv("CYCLESPLIT_THREADS")) {
    char *end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(v);
  }
  return fallback;
}

ScanResult scan(const ScanSpec &spec, unsigned workers) {
  spec.validate();
  std::optional<IntPolynomial> product;
  for (const auto &c : spec.components)
    for (const auto &f : c.polynomials)
      product = product ? *product * f : f;
  const BigInt disc = discriminant(*product);

  const std::vector<std::uint64_t> primes = prime_stream(spec.prime_bound);
  ScanResult result;
  result.records.resize(primes.size());

  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, primes.size())));
  auto run = [&](unsigned worker) {
    for (std::size_t i = worker; i < primes.size(); i += workers)
      result.records[i] = scan_prime(spec, disc, primes[i]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run, w);
  }

  ScanSummary &s = result.summary;
  s.prime_bound = spec.prime_bound;
  s.r = spec.r;
  s.primes_scanned = primes.size();
  std::map<std::string, std::uint64_t> counts;
  for (const auto &rec : result.records) {
    if (rec.ramified) {
      s.ramified.push_back(rec.p);
      continue;
    }
    ++s.unramified;
    if (rec.split)
      ++s.split_count;
    s.max_witness_maxdeg = std::max(s.max_witness_maxdeg, rec.witness_maxdeg);
    ++counts[format_patterns(rec.patterns)];
  }
  if (s.unramified)
    s.split_density = Rational(static_cast<std::int64_t>(s.split_count),
                               static_cast<std::int64_t>(s.unramified));
  for (const auto &[key, n] : counts)
    s.patterns.push_back({key, n, static_cast<double>(n) / static_cast<double>(s.unramified)});

  if (spec.model) {
    const auto &comps = spec.model->components();
    if (comps.size() != spec.components.size())
      throw Error(ErrorKind::DegreeMismatch, "model and scan have different component counts");
    std::size_t i = 0;
    for (const auto &[m, _] : comps)
      if (spec.components[i++].multiplicity != m)
        throw Error(ErrorKind::DegreeMismatch,
                    "model multiplicities differ from the scan's (components must be "
                    "listed in ascending multiplicity)");
    s.cross_validation = cross_validate(result.records, *spec.model, spec.r, spec.tolerance);
  }
  return result;
}

CrossValidation cross_validate(const std::vector<PrimeScanRecord> &records,
                               const FibreModel &model, std::uint64_t r,
                               double tolerance) {
  CrossValidation cv;
  cv.tolerance = tolerance;

  const auto table = class_pattern_table(model);
  const auto &G = model.group();
  struct Prediction {
    std::vector<std::size_t> classes;
    std::int64_t weight = 0;
  };
  std::map<std::string, Prediction> predicted;
  for (const auto &row : table) {
    auto &p = predicted[format_patterns(row.patterns)];
    p.classes.push_back(row.class_number);
    p.weight += static_cast<std::int64_t>(row.class_size);
  }

  std::map<std::string, std::uint64_t> observed;
  std::uint64_t split = 0;
  for (const auto &rec : records) {
    if (rec.ramified)
      continue;
    const auto &shape = table.front().patterns;
    bool same_shape = rec.patterns.size() == shape.size();
    for (std::size_t c = 0; same_shape && c < shape.size(); ++c)
      same_shape = rec.patterns[c].size() == shape[c].size();
    if (!same_shape)
      throw Error(ErrorKind::DegreeMismatch,
                  "model factors do not line up with the scanned polynomials");
    ++observed[format_patterns(rec.patterns)];
    ++cv.records;
    if (rec.split)
      ++split;
  }
  if (cv.records == 0)
    throw Error(ErrorKind::NoRecords, "no unramified records to compare");

  std::set<std::string> keys;
  for (const auto &[k, _] : predicted)
    keys.insert(k);
  for (const auto &[k, _] : observed)
    keys.insert(k);

  const double n = static_cast<double>(cv.records);
  for (const auto &key : keys) {
    CrossValidationRow row;
    row.pattern = key;
    if (auto it = observed.find(key); it != observed.end())
      row.observed = it->second;
    row.empirical = static_cast<double>(row.observed) / n;
    if (auto it = predicted.find(key); it != predicted.end()) {
      row.in_model = true;
      row.classes = it->second.classes;
      row.predicted = Rational(it->second.weight, static_cast<std::int64_t>(G.order()));
    }
    const double expected = boost::rational_cast<double>(row.predicted);
    row.pass = row.in_model && std::abs(row.empirical - expected) <= tolerance;
    if (!row.in_model)
      cv.membership_ok = false;
    else if (!row.pass)
      cv.frequency_ok = false;
    cv.rows.push_back(std::move(row));
  }

  cv.predicted_density = cycle_split_density(model, r);
  cv.empirical_density = static_cast<double>(split) / n;
  cv.density_ok = std::abs(cv.empirical_density -
                           boost::rational_cast<double>(cv.predicted_density)) <= tolerance;
  return cv;
}

} // namespace cyclesplit
