#include <doctest.h>

#include <numeric>

#include "cyclesplit/error.hpp"
#include "cyclesplit/io.hpp"
#include "cyclesplit/scan.hpp"
#include "oracles/oracles.hpp"

using namespace cyclesplit;

namespace {

const std::filesystem::path kData = CYCLESPLIT_DATA_DIR;

ScanSpec load(const char *name) {
  return io::load_scan(io::read_json_file(kData / name), kData);
}

std::shared_ptr<const FibreModel> model(const char *name) {
  return std::make_shared<const FibreModel>(
      io::load_fibre(io::read_json_file(kData / name), kData).fibre);
}

ScanSpec single(std::vector<std::string> polys, std::uint64_t m = 1, std::uint64_t bound = 2000) {
  ScanSpec spec;
  ScanComponent c;
  c.multiplicity = m;
  for (const auto &s : polys)
    c.polynomials.push_back(IntPolynomial::parse(s));
  spec.components.push_back(std::move(c));
  spec.prime_bound = bound;
  return spec;
}

std::int64_t weighted_sum(const std::vector<WitnessTerm> &w) {
  std::int64_t s = 0;
  for (const auto &t : w)
    s += t.coefficient * static_cast<std::int64_t>(t.degree);
  return s;
}

/// Every non-decreasing sequence of length `len` with entries in [1, top].
void multisets(std::size_t len, std::uint64_t top, std::vector<std::uint64_t> &cur,
               std::vector<std::vector<std::uint64_t>> &out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t d = cur.empty() ? 1 : cur.back(); d <= top; ++d) {
    cur.push_back(d);
    multisets(len, top, cur, out);
    cur.pop_back();
  }
}

} // namespace

TEST_CASE("local_verdict") {
  CHECK(local_verdict({{1, {1, 1}}}, 1).split);
  auto v = local_verdict({{2, {1}}}, 1);
  CHECK(v.index == 2);
  CHECK_FALSE(v.split);
  CHECK(local_verdict({{2, {1}}}, 2).split);
  v = local_verdict({{1, {3, 3}}, {2, {1}}}, 1);
  CHECK(v.index == 1);
  v = local_verdict({{1, {2, 4}}, {3, {2}}}, 1);
  CHECK(v.index == 2);
  CHECK(local_verdict({{1, {4, 6}}}, 2).split);
  CHECK_THROWS_WITH_AS(local_verdict({{1, {}}}, 1), doctest::Contains("EmptyComponent"), Error);
}

TEST_CASE("witness_cycle examples") {
  using W = std::vector<WitnessTerm>;
  CHECK(witness_cycle({2, 3}, 1) == W{{2, -1}, {3, 1}});
  CHECK(witness_cycle({1, 4, 6}, 1) == W{{1, 1}});
  CHECK(witness_cycle({4, 6}, 2) == W{{4, -1}, {6, 1}});
  CHECK(witness_cycle({3, 3, 1, 1}, 1) == W{{1, 1}});
  CHECK(weighted_sum(witness_cycle({6, 10, 15}, 1)) == 1);
  CHECK(witness_cycle({6, 10, 15}, 1).size() == 3);
  CHECK_THROWS_WITH_AS(witness_cycle({2, 4}, 1), doctest::Contains("NoWitness"), Error);
  CHECK_THROWS_AS(witness_cycle({}, 1), Error);
}

TEST_CASE("witness_cycle minimises the largest degree (exhaustive)") {
  std::vector<std::vector<std::uint64_t>> all;
  std::vector<std::uint64_t> cur;
  for (std::size_t len = 1; len <= 6; ++len)
    multisets(len, 8, cur, all);
  std::size_t checked = 0;
  for (const auto &degrees : all) {
    for (std::uint64_t r : {1, 2, 3, 4, 6}) {
      const std::uint64_t best = oracle::min_witness_maxdeg(degrees, r);
      if (best == 0) {
        CHECK_THROWS_AS(witness_cycle(degrees, r), Error);
        continue;
      }
      CAPTURE(degrees);
      CAPTURE(r);
      const auto w = witness_cycle(degrees, r);
      REQUIRE_FALSE(w.empty());
      std::uint64_t maxdeg = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(std::find(degrees.begin(), degrees.end(), w[i].degree) != degrees.end());
        CHECK(w[i].coefficient != 0);
        if (i)
          CHECK(w[i - 1].degree < w[i].degree);
        maxdeg = std::max(maxdeg, w[i].degree);
      }
      CHECK(maxdeg == best);
      CHECK(weighted_sum(w) == static_cast<std::int64_t>(r));
      ++checked;
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("scan spec validation") {
  CHECK_THROWS_WITH_AS(scan(single({"t^2+1", "t^2+1"})), doctest::Contains("InvalidPolynomial"), Error);
  CHECK_THROWS_WITH_AS(scan(single({"t^4-2t^2+1"})), doctest::Contains("InvalidPolynomial"), Error);
  ScanSpec empty;
  CHECK_THROWS_AS(scan(empty), Error);
  ScanSpec no_poly;
  no_poly.components.emplace_back();
  CHECK_THROWS_AS(scan(no_poly), Error);
}

TEST_CASE("scan agrees with trial division at small primes") {
  const auto spec = load("quadratics_sextic.scan.json");
  auto small = spec;
  small.prime_bound = 60;
  const auto result = scan(small);
  REQUIRE(result.records.size() == 17);
  CHECK(discriminant(spec.components[0].polynomials[1] * spec.components[0].polynomials[2]) % 7 == 0);
  for (const auto &rec : result.records) {
    CAPTURE(rec.p);
    CHECK(rec.ramified == (rec.p == 2 || rec.p == 3 || rec.p == 7));
    if (rec.ramified)
      continue;
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < spec.components[0].polynomials.size(); ++i) {
      const auto &f = spec.components[0].polynomials[i];
      std::vector<std::int64_t> c;
      for (const auto &x : f.coefficients()) {
        BigInt m = x % static_cast<std::int64_t>(rec.p);
        if (m < 0)
          m += rec.p;
        c.push_back(static_cast<std::int64_t>(m));
      }
      const auto expected = oracle::trial_division_degrees(c, static_cast<std::int64_t>(rec.p));
      CHECK(rec.patterns[0][i] == expected);
      for (auto d : expected)
        g = std::gcd(g, d);
    }
    CHECK(rec.index == g);
    CHECK(rec.split == (g == 1));
    if (rec.split)
      CHECK(weighted_sum(rec.witness) == 1);
  }
}

TEST_CASE("three quadratics and a sextic root: split everywhere unramified") {
  const auto result = scan(load("quadratics_sextic.scan.json"));
  const auto &s = result.summary;
  CHECK(s.primes_scanned == 1229);
  // 7 divides Res(t^2-3, t^6-6) = 21^2
  CHECK(s.ramified == std::vector<std::uint64_t>{2, 3, 7});
  CHECK(s.all_split());
  CHECK(s.split_density == Rational(1));
  for (const auto &rec : result.records) {
    if (rec.ramified)
      continue;
    std::vector<std::uint64_t> degrees;
    for (const auto &pat : rec.patterns[0])
      degrees.insert(degrees.end(), pat.begin(), pat.end());
    CHECK(rec.witness_maxdeg == oracle::min_witness_maxdeg(degrees, 1));
  }
  // the first prime at which no quadratic splits is 5: (2/5) = (3/5) = -1, 6 = 1 mod 5
  const auto &r5 = result.records[2];
  CHECK(r5.p == 5);
  CHECK(format_patterns(r5.patterns) == "2|2|1 1 2 2");
}

TEST_CASE("Z/2 x A4 two-polynomial algebra") {
  auto spec = load("c2xa4.scan.json");
  spec.prime_bound = 20000;
  const auto result = scan(spec);
  const auto &s = result.summary;
  CHECK(s.ramified == std::vector<std::uint64_t>{2, 3});
  CHECK(s.all_split());
  CHECK(s.max_witness_maxdeg <= 3);
  REQUIRE(s.cross_validation);
  CHECK(s.cross_validation->membership_ok);
  CHECK(s.cross_validation->pass());
  CHECK(s.cross_validation->predicted_density == Rational(1));
  CHECK(s.cross_validation->rows.size() == 6);
  // sextic alone is not split: its 3^2 primes stay at index 3
  for (const auto &rec : result.records)
    if (!rec.ramified && rec.patterns[0][1] == DegreePattern{3, 3})
      CHECK(rec.witness_maxdeg == (rec.patterns[0][0] == DegreePattern{1, 1} ? 1u : 3u));
}

TEST_CASE("sextic alone: density one third against the A4 model") {
  auto spec = load("sextic.scan.json");
  spec.prime_bound = 30000;
  const auto result = scan(spec);
  const auto &s = result.summary;
  CHECK_FALSE(s.all_split());
  CHECK(std::abs(boost::rational_cast<double>(s.split_density) - 1.0 / 3) <= 0.02);
  REQUIRE(s.cross_validation);
  CHECK(s.cross_validation->pass());
  CHECK(s.cross_validation->predicted_density == Rational(1, 3));
  for (const auto &rec : result.records)
    if (!rec.ramified)
      CHECK(rec.split == (rec.patterns[0][0] != DegreePattern{3, 3}));
}

TEST_CASE("cross_validate with right and wrong models") {
  auto spec = load("gaussian.scan.json");
  spec.prime_bound = 20000;
  const auto records = scan(spec).records;
  const auto good = cross_validate(records, *model("c2.fibre.json"), 1, 0.02);
  CHECK(good.pass());
  CHECK(good.predicted_density == Rational(1, 2));

  const auto bad = cross_validate(records, *model("c3.fibre.json"), 1, 0.02);
  CHECK_FALSE(bad.membership_ok);
  CHECK_FALSE(bad.pass());

  const auto too_tight = cross_validate(records, *model("c2.fibre.json"), 1, 0.0);
  CHECK_FALSE(too_tight.frequency_ok);

  CHECK_THROWS_WITH_AS(cross_validate(records, *model("c2xa4.fibre.json"), 1, 0.02),
                       doctest::Contains("DegreeMismatch"), Error);
  CHECK_THROWS_WITH_AS(cross_validate({}, *model("c2.fibre.json"), 1, 0.02),
                       doctest::Contains("NoRecords"), Error);
}

TEST_CASE("multiplicity weights the point degrees") {
  auto spec = single({"t^2+1"}, 2);
  const auto r1 = scan(spec);
  CHECK(r1.summary.split_count == 0);
  spec.r = 2;
  const auto r2 = scan(spec);
  CHECK_FALSE(r2.summary.all_split());
  for (const auto &rec : r2.records) {
    if (rec.ramified)
      continue;
    const bool splits = rec.p % 4 == 1;
    CHECK(rec.index == (splits ? 2u : 4u));
    CHECK(rec.split == splits);
    if (splits) {
      CHECK(weighted_sum(rec.witness) == 2);
      CHECK(rec.witness_maxdeg == 2);
    }
  }
  spec.r = 4;
  const auto r4 = scan(spec);
  CHECK(r4.summary.all_split());
  for (const auto &rec : r4.records)
    if (!rec.ramified)
      CHECK(weighted_sum(rec.witness) == 4);
}

TEST_CASE("record sequence does not depend on the worker count") {
  auto spec = load("c2xa4.scan.json");
  spec.prime_bound = 5000;
  spec.model.reset();
  const auto base = scan(spec, 1);
  for (unsigned w : {2u, 3u, 7u}) {
    const auto other = scan(spec, w);
    CHECK(other.records == base.records);
    CHECK(io::to_json(other.summary, spec).dump() == io::to_json(base.summary, spec).dump());
  }
  for (std::size_t i = 1; i < base.records.size(); ++i)
    CHECK(base.records[i - 1].p < base.records[i].p);
}
