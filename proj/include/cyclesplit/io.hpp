#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclesplit/etale.hpp"
#include "cyclesplit/hasse.hpp"
#include "cyclesplit/scan.hpp"

namespace cyclesplit::io {

using Json = nlohmann::ordered_json;

/// An image array [1, 0, 2] or a cycle string "(0 1)".
Permutation parse_permutation(const Json &value, std::size_t degree);

/// A coefficient array (constant term first; integers or digit strings) or
/// a string such as "t^6-3t^2-1".
IntPolynomial parse_polynomial(const Json &value);

struct GroupFile {
  GroupPtr group;
  std::map<std::string, SubgroupHandle> subgroups;
};

/// { "degree": n, "generators": [...], "subgroups": { name: [...] },
///   "cap": optional element cap }
GroupFile load_group(const Json &doc);

struct FibreFile {
  GroupFile group;
  FibreModel fibre;
};

/// { "group": <group object or path>, "components": [ { "multiplicity": m,
///   "factors": [ {"action": "coset", "subgroup": name}
///              | {"action": "explicit", "table": [image per generator]}
///              | {"action": "natural"} ] } ] }
/// Relative paths resolve against `base`.
FibreFile load_fibre(const Json &doc, const std::filesystem::path &base = {});

/// { "components": [ { "multiplicity": m, "polynomials": [...] } ],
///   "r": 1, "primes_up_to": 100000, "tolerance": 0.02,
///   "model": <fibre object or path> }
ScanSpec load_scan(const Json &doc, const std::filesystem::path &base = {});

/// Reads and parses a JSON file; throws Error(Parse) with the path on failure.
Json read_json_file(const std::filesystem::path &path);

Json to_json(const IndexReport &report, const PermutationGroup &group);
Json to_json(const HasseCertificate &cert, const PermutationGroup &group,
             const std::string &subgroup_name);
Json to_json(const CrossValidation &cv);
Json to_json(const ScanSummary &summary, const ScanSpec &spec);
Json to_json(const PrimeScanRecord &record);

/// p,ramified,component_patterns,index,verdict,witness_maxdeg
std::string records_to_csv(const std::vector<PrimeScanRecord> &records);

} // namespace cyclesplit::io
