#include "cyclesplit/io.hpp"

#include <fstream>

#include "cyclesplit/error.hpp"

namespace cyclesplit::io {

namespace {

[[noreturn]] void parse_error(const std::string &msg) { throw Error(ErrorKind::Parse, msg); }

const Json &require(const Json &obj, const char *key, const char *where) {
  if (!obj.is_object() || !obj.contains(key))
    parse_error(std::string(where) + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::uint64_t as_positive(const Json &v, const char *what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    parse_error(std::string(what) + " must be a positive integer");
  return v.get<std::uint64_t>();
}

/// Inline object, or a path string relative to `base`.
Json resolve(const Json &v, const std::filesystem::path &base, std::filesystem::path &dir) {
  if (v.is_string()) {
    std::filesystem::path p = v.get<std::string>();
    if (p.is_relative())
      p = base / p;
    dir = p.parent_path();
    return read_json_file(p);
  }
  dir = base;
  return v;
}

} // namespace

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    parse_error(path.string() + ": " + e.what());
  }
}

Permutation parse_permutation(const Json &value, std::size_t degree) {
  if (value.is_string())
    return Permutation::from_cycles(value.get<std::string>(), degree);
  if (!value.is_array())
    parse_error("permutation must be an image array or a cycle string");
  std::vector<Point> images;
  for (const auto &x : value) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
      parse_error("image arrays hold non-negative integers");
    images.push_back(x.get<Point>());
  }
  if (images.size() != degree)
    throw Error(ErrorKind::DegreeMismatch, "image array has length " +
                                               std::to_string(images.size()) + ", expected " +
                                               std::to_string(degree));
  return Permutation(std::move(images));
}

IntPolynomial parse_polynomial(const Json &value) {
  if (value.is_string())
    return IntPolynomial::parse(value.get<std::string>());
  if (!value.is_array())
    parse_error("polynomial must be a string or a coefficient array");
  std::vector<BigInt> coeffs;
  for (const auto &c : value) {
    if (c.is_number_integer())
      coeffs.emplace_back(c.get<std::int64_t>());
    else if (c.is_string()) {
      try {
        coeffs.emplace_back(c.get<std::string>());
      } catch (const std::exception &) {
        parse_error("bad coefficient \"" + c.get<std::string>() + "\"");
      }
    } else
      parse_error("coefficients must be integers");
  }
  return IntPolynomial(std::move(coeffs));
}

GroupFile load_group(const Json &doc) {
  const std::size_t degree = as_positive(require(doc, "degree", "group"), "degree");
  std::vector<Permutation> gens;
  for (const auto &g : require(doc, "generators", "group"))
    gens.push_back(parse_permutation(g, degree));
  std::size_t cap = kDefaultGroupCap;
  if (doc.contains("cap"))
    cap = as_positive(doc.at("cap"), "cap");

  GroupFile out;
  out.group = std::make_shared<const PermutationGroup>(
      PermutationGroup::generate(degree, std::move(gens), cap));
  if (doc.contains("subgroups")) {
    const auto &subs = doc.at("subgroups");
    if (!subs.is_object())
      parse_error("\"subgroups\" must map names to generator lists");
    for (const auto &[name, list] : subs.items()) {
      std::vector<Permutation> sg;
      for (const auto &g : list)
        sg.push_back(parse_permutation(g, degree));
      out.subgroups.emplace(name, SubgroupHandle::generated_by(*out.group, sg));
    }
  }
  return out;
}

FibreFile load_fibre(const Json &doc, const std::filesystem::path &base) {
  std::filesystem::path group_dir;
  GroupFile gf = load_group(resolve(require(doc, "group", "fibre"), base, group_dir));
  FibreModel fibre(gf.group);
  const auto &components = require(doc, "components", "fibre");
  if (!components.is_array())
    parse_error("\"components\" must be an array");
  for (const auto &comp : components) {
    std::uint64_t m = 1;
    if (comp.contains("multiplicity"))
      m = as_positive(comp.at("multiplicity"), "multiplicity");
    std::vector<FiniteAction> factors;
    for (const auto &f : require(comp, "factors", "component")) {
      const std::string kind = f.value("action", "coset");
      if (kind == "coset") {
        const std::string name = require(f, "subgroup", "coset factor").get<std::string>();
        auto it = gf.subgroups.find(name);
        if (it == gf.subgroups.end())
          parse_error("unknown subgroup \"" + name + "\"");
        factors.push_back(coset_action(gf.group, it->second));
      } else if (kind == "explicit") {
        const auto &table = require(f, "table", "explicit factor");
        if (!table.is_array() || table.empty())
          parse_error("explicit factor needs one image per group generator");
        std::size_t points = 0;
        const auto &first = table.front();
        if (first.is_array())
          points = first.size();
        else if (f.contains("points"))
          points = as_positive(f.at("points"), "points");
        else
          parse_error("explicit factor with cycle strings needs \"points\"");
        std::vector<Permutation> images;
        for (const auto &img : table)
          images.push_back(parse_permutation(img, points));
        factors.push_back(FiniteAction::from_generator_images(gf.group, std::move(images)));
      } else if (kind == "natural") {
        factors.push_back(FiniteAction::natural(gf.group));
      } else {
        parse_error("unknown action kind \"" + kind + "\"");
      }
    }
    if (factors.empty())
      throw Error(ErrorKind::EmptyAlgebra, "component without factors");
    fibre.add_component(m, EtaleAlgebraModel(gf.group, std::move(factors)));
  }
  if (fibre.components().empty())
    throw Error(ErrorKind::EmptyFibre, "fibre has no components");
  return {std::move(gf), std::move(fibre)};
}

ScanSpec load_scan(const Json &doc, const std::filesystem::path &base) {
  ScanSpec spec;
  const auto &components = require(doc, "components", "scan");
  if (!components.is_array())
    parse_error("\"components\" must be an array");
  for (const auto &comp : components) {
    ScanComponent c;
    if (comp.contains("multiplicity"))
      c.multiplicity = as_positive(comp.at("multiplicity"), "multiplicity");
    for (const auto &f : require(comp, "polynomials", "component"))
      c.polynomials.push_back(parse_polynomial(f));
    spec.components.push_back(std::move(c));
  }
  if (doc.contains("r"))
    spec.r = as_positive(doc.at("r"), "r");
  if (doc.contains("primes_up_to"))
    spec.prime_bound = as_positive(doc.at("primes_up_to"), "primes_up_to");
  if (doc.contains("tolerance")) {
    if (!doc.at("tolerance").is_number())
      parse_error("tolerance must be a number");
    spec.tolerance = doc.at("tolerance").get<double>();
  }
  if (doc.contains("model")) {
    std::filesystem::path dir;
    Json model = resolve(doc.at("model"), base, dir);
    spec.model = std::make_shared<const FibreModel>(load_fibre(model, dir).fibre);
  }
  return spec;
}

// --- serialization --------------------------------------------------------

Json to_json(const IndexReport &report, const PermutationGroup &group) {
  Json out;
  out["r"] = report.r;
  out["group_order"] = report.group_order;
  Json rows = Json::array();
  for (const auto &row : report.rows)
    rows.push_back({{"class", row.class_number},
                    {"representative", group.element(row.representative).to_cycle_string()},
                    {"size", row.class_size},
                    {"index", row.index},
                    {"divides_r", row.divides_r}});
  out["classes"] = std::move(rows);
  out["split"] = report.split;
  if (report.witness_class) {
    const auto &w = report.rows.at(*report.witness_class);
    out["witness"] = {{"class", w.class_number},
                      {"representative", group.element(w.representative).to_cycle_string()},
                      {"index", w.index}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const HasseCertificate &cert, const PermutationGroup &group,
             const std::string &subgroup_name) {
  Json gens = Json::array();
  for (const auto &g : group.generators())
    gens.push_back(g.to_cycle_string());
  return {{"group", {{"degree", group.degree()}, {"order", group.order()}, {"generators", gens}}},
          {"subgroup", {{"name", subgroup_name}, {"order", cert.subgroup.order()}}},
          {"witness", group.element(cert.witness).to_cycle_string()},
          {"witness_order", cert.witness_order},
          {"prime", cert.prime},
          {"certified_index", cert.certified_index}};
}

Json to_json(const CrossValidation &cv) {
  Json rows = Json::array();
  for (const auto &row : cv.rows)
    rows.push_back({{"pattern", row.pattern},
                    {"classes", row.classes},
                    {"observed", row.observed},
                    {"empirical", row.empirical},
                    {"predicted", to_string(row.predicted)},
                    {"in_model", row.in_model},
                    {"pass", row.pass}});
  return {{"tolerance", cv.tolerance},
          {"records", cv.records},
          {"rows", std::move(rows)},
          {"membership_ok", cv.membership_ok},
          {"frequency_ok", cv.frequency_ok},
          {"predicted_density", to_string(cv.predicted_density)},
          {"empirical_density", cv.empirical_density},
          {"density_ok", cv.density_ok},
          {"pass", cv.pass()}};
}

Json to_json(const ScanSummary &s, const ScanSpec &spec) {
  Json components = Json::array();
  for (const auto &c : spec.components) {
    Json polys = Json::array();
    for (const auto &f : c.polynomials)
      polys.push_back(f.to_string());
    components.push_back({{"multiplicity", c.multiplicity}, {"polynomials", std::move(polys)}});
  }
  Json patterns = Json::array();
  for (const auto &p : s.patterns)
    patterns.push_back({{"pattern", p.pattern}, {"count", p.count}, {"frequency", p.frequency}});

  Json out;
  out["spec"] = {{"components", std::move(components)},
                 {"r", spec.r},
                 {"primes_up_to", spec.prime_bound},
                 {"tolerance", spec.tolerance}};
  out["primes_scanned"] = s.primes_scanned;
  out["ramified"] = s.ramified;
  out["unramified"] = s.unramified;
  out["split_count"] = s.split_count;
  out["split_density"] = to_string(s.split_density);
  out["split_density_value"] = boost::rational_cast<double>(s.split_density);
  out["all_split"] = s.all_split();
  out["max_witness_maxdeg"] = s.max_witness_maxdeg;
  out["patterns"] = std::move(patterns);
  out["cross_validation"] = s.cross_validation ? to_json(*s.cross_validation) : Json(nullptr);
  return out;
}

Json to_json(const PrimeScanRecord &rec) {
  Json witness = Json::array();
  for (const auto &t : rec.witness)
    witness.push_back({{"degree", t.degree}, {"coefficient", t.coefficient}});
  return {{"p", rec.p},
          {"ramified", rec.ramified},
          {"patterns", rec.ramified ? Json(nullptr) : Json(format_patterns(rec.patterns))},
          {"index", rec.index},
          {"split", rec.split},
          {"witness", std::move(witness)},
          {"witness_maxdeg", rec.witness_maxdeg}};
}

std::string records_to_csv(const std::vector<PrimeScanRecord> &records) {
  std::string out = "p,ramified,component_patterns,index,verdict,witness_maxdeg\n";
  for (const auto &rec : records) {
    out += std::to_string(rec.p);
    out += rec.ramified ? ",1," : ",0,";
    out += format_patterns(rec.patterns);
    out += ',';
    out += rec.ramified ? "" : std::to_string(rec.index);
    out += ',';
    out += rec.ramified ? "" : (rec.split ? "split" : "not_split");
    out += ',';
    out += rec.split ? std::to_string(rec.witness_maxdeg) : "";
    out += '\n';
  }
  return out;
}

} // namespace cyclesplit::io
