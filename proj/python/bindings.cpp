#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cyclesplit/cli.hpp"
#include "cyclesplit/error.hpp"
#include "cyclesplit/etale.hpp"
#include "cyclesplit/hasse.hpp"
#include "cyclesplit/io.hpp"
#include "cyclesplit/poly.hpp"
#include "cyclesplit/scan.hpp"

namespace py = pybind11;
using namespace cyclesplit;

namespace {

io::FibreFile fibre_from(const std::string &text, const std::string &base) {
  return io::load_fibre(io::Json::parse(text), base);
}

std::string analyze(const std::string &fibre_json, const std::string &base, std::uint64_t r) {
  const auto f = fibre_from(fibre_json, base);
  return io::to_json(is_combinatorially_cycle_split(f.fibre, r), f.fibre.group()).dump();
}

std::string density(const std::string &fibre_json, const std::string &base, std::uint64_t r) {
  return to_string(cycle_split_density(fibre_from(fibre_json, base).fibre, r));
}

std::vector<std::uint64_t> indices(const std::string &fibre_json, const std::string &base) {
  const auto f = fibre_from(fibre_json, base);
  std::vector<std::uint64_t> out;
  for (ElementId g = 0; g < f.fibre.group().order(); ++g)
    out.push_back(combinatorial_index(f.fibre, g));
  return out;
}

std::string hasse(const std::string &group_json, const std::string &subgroup) {
  const auto gf = io::load_group(io::Json::parse(group_json));
  const auto it = gf.subgroups.find(subgroup);
  if (it == gf.subgroups.end())
    throw Error(ErrorKind::Parse, "unknown subgroup \"" + subgroup + "\"");
  return io::to_json(fks_witness(*gf.group, it->second), *gf.group, subgroup).dump();
}

std::pair<std::string, std::string> run_scan(const std::string &spec_json, const std::string &base,
                                             std::optional<std::uint64_t> bound,
                                             std::optional<std::uint64_t> r, unsigned workers) {
  ScanSpec spec = io::load_scan(io::Json::parse(spec_json), base);
  if (bound)
    spec.prime_bound = *bound;
  if (r)
    spec.r = *r;
  ScanResult result;
  {
    py::gil_scoped_release release;
    result = scan(spec, workers);
  }
  io::Json records = io::Json::array();
  for (const auto &rec : result.records)
    records.push_back(io::to_json(rec));
  return {io::to_json(result.summary, spec).dump(), records.dump()};
}

std::vector<std::uint64_t> degree_pattern(const std::vector<std::int64_t> &coeffs, std::uint64_t p) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return factor_degree_pattern(reduce_mod_p(IntPolynomial(std::move(big)), p));
}

std::string disc(const std::string &poly) {
  return discriminant(IntPolynomial::parse(poly)).str();
}

std::vector<std::pair<std::uint64_t, std::int64_t>> witness(const std::vector<std::uint64_t> &degrees,
                                                            std::uint64_t r) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> out;
  for (const auto &t : witness_cycle(degrees, r))
    out.emplace_back(t.degree, t.coefficient);
  return out;
}

std::tuple<int, std::string, std::string> cli_main(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclesplit");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the cyclesplit package";

  py::register_exception<Error>(m, "CyclesplitError", PyExc_ValueError);

  m.def("analyze", &analyze, py::arg("fibre_json"), py::arg("base"), py::arg("r"));
  m.def("density", &density, py::arg("fibre_json"), py::arg("base"), py::arg("r"));
  m.def("indices", &indices, py::arg("fibre_json"), py::arg("base"));
  m.def("hasse", &hasse, py::arg("group_json"), py::arg("subgroup"));
  m.def("scan", &run_scan, py::arg("spec_json"), py::arg("base"), py::arg("primes_up_to"),
        py::arg("r"), py::arg("workers"));
  m.def("degree_pattern", &degree_pattern, py::arg("coefficients"), py::arg("p"));
  m.def("discriminant", &disc, py::arg("polynomial"));
  m.def("witness_cycle", &witness, py::arg("degrees"), py::arg("r"));
  m.def("prime_stream", &prime_stream, py::arg("bound"));
  m.def("cli", &cli_main, py::arg("args"));
}
