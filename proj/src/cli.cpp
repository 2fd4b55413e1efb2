#include "cyclesplit/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "cyclesplit/error.hpp"
#include "cyclesplit/etale.hpp"
#include "cyclesplit/hasse.hpp"
#include "cyclesplit/io.hpp"
#include "cyclesplit/scan.hpp"

namespace cyclesplit::cli {

bool DensityAssertion::holds(double observed) const {
  // exact rationals are compared after a round trip through double
  return std::abs(observed - value) <= tolerance + 1e-12;
}

namespace {

std::optional<double> parse_number(std::string_view text) {
  std::string s(text);
  if (s.empty())
    return std::nullopt;
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      double v = std::stod(s, &used);
      return used == s.size() ? std::optional(v) : std::nullopt;
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    double n = std::stod(num, &used);
    if (used != num.size())
      return std::nullopt;
    double d = std::stod(den, &used);
    if (used != den.size() || d == 0.0)
      return std::nullopt;
    return n / d;
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

} // namespace

std::optional<DensityAssertion> parse_density_assertion(std::string_view text) {
  DensityAssertion a;
  std::string_view value = text, tol;
  bool has_tol = false;
  for (std::string_view sep : {"+-", "±"}) {
    if (auto pos = text.find(sep); pos != std::string_view::npos) {
      value = text.substr(0, pos);
      tol = text.substr(pos + sep.size());
      has_tol = true;
      break;
    }
  }
  auto v = parse_number(value);
  if (!v)
    return std::nullopt;
  a.value = *v;
  if (has_tol) {
    auto t = parse_number(tol);
    if (!t || *t < 0)
      return std::nullopt;
    a.tolerance = *t;
  }
  return a;
}

namespace {

/// Options shared across subcommands.
struct RunConfig {
  std::string input;
  std::string model;
  std::string subgroup;
  std::uint64_t r = 1;
  std::uint64_t prime_bound = 100000;
  double tolerance = 0.02;
  std::string format = "json";
  bool assert_split = false;
  std::string assert_density;
  std::string out_path;
};

class Emitter {
public:
  Emitter(const std::string &path, std::ostream &fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw Error(ErrorKind::Parse, "cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream &stream() { return *out_; }

private:
  std::ofstream file_;
  std::ostream *out_;
};

std::filesystem::path dir_of(const std::string &path) {
  return std::filesystem::path(path).parent_path();
}

std::optional<DensityAssertion> density_flag(const RunConfig &cfg, double default_tol) {
  if (cfg.assert_density.empty())
    return std::nullopt;
  auto a = parse_density_assertion(cfg.assert_density);
  if (!a)
    throw Error(ErrorKind::Parse, "cannot parse --assert-density '" + cfg.assert_density + "'");
  if (cfg.assert_density.find("+-") == std::string::npos &&
      cfg.assert_density.find("±") == std::string::npos)
    a->tolerance = default_tol;
  return a;
}

int cmd_group_analyze(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto file = io::load_fibre(io::read_json_file(cfg.input), dir_of(cfg.input));
  const IndexReport report = is_combinatorially_cycle_split(file.fibre, cfg.r);
  Emitter emit(cfg.out_path, out);
  if (cfg.format == "csv") {
    emit.stream() << "class,representative,size,index,divides_r\n";
    for (const auto &row : report.rows)
      emit.stream() << row.class_number << ",\""
                    << file.fibre.group().element(row.representative).to_cycle_string()
                    << "\"," << row.class_size << ',' << row.index << ','
                    << (row.divides_r ? 1 : 0) << '\n';
  } else {
    emit.stream() << io::to_json(report, file.fibre.group()).dump(2) << '\n';
  }
  if (cfg.assert_split && !report.split) {
    err << "assertion failed: fibre is not combinatorially " << cfg.r << "-cycle-split\n";
    return kAssertionFailed;
  }
  return kPass;
}

int cmd_density(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto file = io::load_fibre(io::read_json_file(cfg.input), dir_of(cfg.input));
  const Rational density = cycle_split_density(file.fibre, cfg.r);
  Emitter emit(cfg.out_path, out);
  if (cfg.format == "json")
    emit.stream() << io::Json{{"r", cfg.r},
                              {"density", to_string(density)},
                              {"value", boost::rational_cast<double>(density)}}
                         .dump(2)
                  << '\n';
  else
    emit.stream() << to_string(density) << '\n';
  if (auto a = density_flag(cfg, 0.0); a && !a->holds(boost::rational_cast<double>(density))) {
    err << "assertion failed: density " << to_string(density) << " vs " << cfg.assert_density
        << '\n';
    return kAssertionFailed;
  }
  if (cfg.assert_split && density != Rational(1)) {
    err << "assertion failed: density " << to_string(density) << " is not 1\n";
    return kAssertionFailed;
  }
  return kPass;
}

int cmd_hasse(const RunConfig &cfg, std::ostream &out, std::ostream &) {
  const auto gf = io::load_group(io::read_json_file(cfg.input));
  std::vector<std::string> names;
  if (!cfg.subgroup.empty()) {
    if (!gf.subgroups.contains(cfg.subgroup))
      throw Error(ErrorKind::Parse, "unknown subgroup \"" + cfg.subgroup + "\"");
    names.push_back(cfg.subgroup);
  } else {
    for (const auto &[name, _] : gf.subgroups)
      names.push_back(name);
  }
  if (names.empty())
    throw Error(ErrorKind::Parse, "group file declares no subgroups");

  io::Json certs = io::Json::array();
  for (const auto &name : names) {
    const auto cert = fks_witness(*gf.group, gf.subgroups.at(name));
    certs.push_back(io::to_json(cert, *gf.group, name));
  }
  Emitter emit(cfg.out_path, out);
  emit.stream() << (certs.size() == 1 ? certs.front() : certs).dump(2) << '\n';
  return kPass;
}

ScanSpec scan_spec_from(const RunConfig &cfg, const CLI::App &sub) {
  ScanSpec spec = io::load_scan(io::read_json_file(cfg.input), dir_of(cfg.input));
  if (sub.count("--r"))
    spec.r = cfg.r;
  if (sub.count("--primes-up-to"))
    spec.prime_bound = cfg.prime_bound;
  if (sub.count("--tolerance"))
    spec.tolerance = cfg.tolerance;
  if (!cfg.model.empty())
    spec.model = std::make_shared<const FibreModel>(
        io::load_fibre(io::read_json_file(cfg.model), dir_of(cfg.model)).fibre);
  return spec;
}

int cmd_scan(const RunConfig &cfg, const CLI::App &sub, bool require_model, std::ostream &out,
             std::ostream &err) {
  const ScanSpec spec = scan_spec_from(cfg, sub);
  if (require_model && !spec.model)
    throw Error(ErrorKind::Parse, "cross-validate needs --model or a \"model\" entry");
  const ScanResult result = scan(spec, workers_from_env(1));
  const ScanSummary &s = result.summary;

  Emitter emit(cfg.out_path, out);
  if (cfg.format == "csv")
    emit.stream() << io::records_to_csv(result.records);
  else
    emit.stream() << io::to_json(s, spec).dump(2) << '\n';

  int code = kPass;
  if (cfg.assert_split && !s.all_split()) {
    for (const auto &rec : result.records)
      if (!rec.ramified && !rec.split) {
        err << "assertion failed: not split at p = " << rec.p << " (index " << rec.index << ")\n";
        break;
      }
    code = kAssertionFailed;
  }
  if (auto a = density_flag(cfg, spec.tolerance);
      a && !a->holds(boost::rational_cast<double>(s.split_density))) {
    err << "assertion failed: split density " << to_string(s.split_density) << " vs "
        << cfg.assert_density << '\n';
    code = kAssertionFailed;
  }
  if (s.cross_validation && !s.cross_validation->pass()) {
    err << "cross-validation failed";
    if (!s.cross_validation->membership_ok)
      err << " (pattern outside the model)";
    if (!s.cross_validation->frequency_ok)
      err << " (frequency off by more than " << spec.tolerance << ")";
    if (!s.cross_validation->density_ok)
      err << " (split density off)";
    err << '\n';
    code = kAssertionFailed;
  }
  return code;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Cycle-splitness of étale algebras: group models, prime scans, "
               "Hasse certificates"};
  app.name("cyclesplit");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--r", cfg.r, "target zero-cycle degree")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out_path, "write the report to this path");
  };

  auto *analyze = app.add_subcommand("group-analyze", "per-class indices and verdict");
  analyze->add_option("fibre", cfg.input, "fibre spec (JSON)")->required();
  add_common(analyze);
  analyze->add_flag("--assert-split", cfg.assert_split, "exit 1 unless split");

  auto *density = app.add_subcommand("density", "exact density of r-cycle-split classes");
  density->add_option("fibre", cfg.input, "fibre spec (JSON)")->required();
  add_common(density);
  density->add_flag("--assert-split", cfg.assert_split, "exit 1 unless the density is 1");
  density->add_option("--assert-density", cfg.assert_density, "e.g. 1/3 or 1/3+-0.01");

  auto *hasse = app.add_subcommand("hasse", "Fein-Kantor-Schacher certificate");
  hasse->add_option("group", cfg.input, "group file (JSON)")->required();
  hasse->add_option("--subgroup", cfg.subgroup, "subgroup name (default: all)");
  hasse->add_option("--out", cfg.out_path, "write the report to this path");

  std::vector<CLI::App *> scanners;
  for (const char *name : {"scan", "cross-validate"}) {
    auto *sub = app.add_subcommand(name, std::string(name) == "scan"
                                             ? "factor the algebra modulo every prime"
                                             : "compare scan statistics with a group model");
    sub->add_option("spec", cfg.input, "scan spec (JSON)")->required();
    add_common(sub);
    sub->add_option("--primes-up-to", cfg.prime_bound, "prime bound")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    sub->add_option("--tolerance", cfg.tolerance, "absolute frequency tolerance")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--model", cfg.model, "fibre spec used for cross-validation");
    sub->add_flag("--assert-split", cfg.assert_split, "exit 1 if any unramified prime fails");
    sub->add_option("--assert-density", cfg.assert_density, "e.g. 1/3+-0.02");
    scanners.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*analyze)
      return cmd_group_analyze(cfg, out, err);
    if (*density)
      return cmd_density(cfg, out, err);
    if (*hasse)
      return cmd_hasse(cfg, out, err);
    if (*scanners[0])
      return cmd_scan(cfg, *scanners[0], false, out, err);
    if (*scanners[1])
      return cmd_scan(cfg, *scanners[1], true, out, err);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::InternalExhaustion) {
      err << "internal error: " << e.what() << '\n';
      return kAssertionFailed;
    }
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

} // namespace cyclesplit::cli
