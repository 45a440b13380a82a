#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gwring/cli.hpp"
#include "gwring/cylinder.hpp"
#include "gwring/expr.hpp"
#include "gwring/line_ring.hpp"
#include "gwring/line_split.hpp"
#include "gwring/module_sim.hpp"

namespace py = pybind11;
using namespace gwring;

namespace {

std::vector<std::string> simples(const std::string& t) {
  std::vector<std::string> out;
  for (const auto& c : line::enumerate_simples(line::parse_root_multiset(t))) {
    out.push_back(to_string(c));
  }
  return out;
}

std::vector<std::string> indecomposables(const std::string& t) {
  std::vector<std::string> out;
  for (const auto& c : split::enumerate_indecomposables(line::parse_root_multiset(t))) {
    out.push_back(to_string(c));
  }
  return out;
}

std::vector<HalfInt> halves(const std::vector<std::string>& xs) {
  std::vector<HalfInt> out;
  for (const auto& x : xs) out.push_back(parse_half_int(x));
  return out;
}

std::vector<std::string> strings(const std::vector<HalfInt>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(to_string(x));
  return out;
}

py::tuple join_meet(std::int64_t m, std::int64_t n, const std::vector<std::string>& p1,
                    const std::vector<std::string>& p2) {
  auto g = cyl::CylGeometry::make(m, n);
  auto [join, meet] = cyl::path_join_meet(cyl::PathProfile(g, halves(p1)),
                                          cyl::PathProfile(g, halves(p2)));
  return py::make_tuple(strings(join.heights()), strings(meet.heights()));
}

std::vector<std::vector<std::string>> decompose(const std::string& config_text) {
  std::istringstream in(config_text);
  std::vector<std::vector<std::string>> out;
  for (const auto& p : cyl::chain_decompose(cyl::read_config(in))) {
    out.push_back(strings(p.heights()));
  }
  return out;
}

py::dict components(const std::string& config_text) {
  std::istringstream in(config_text);
  auto comps = cyl::complement_components(cyl::read_config(in));
  py::dict out;
  for (const auto& c : comps) out[py::str(to_string(c.id))] = c.contractible;
  return out;
}

bool consistent(const std::string& config_text) {
  std::istringstream in(config_text);
  auto w = cyl::read_config(in);
  auto [t1, t2] = cyl::config_to_t(w);
  return cyl::consistency_check(w.geometry(), t1, t2);
}

py::dict sl2(const std::string& k, const std::string& l, const std::string& factors,
             std::size_t terms) {
  if (factors != "-+" && factors != "--") throw std::invalid_argument("factors must be -+ or --");
  auto m = sim::sl2_build(parse_half_int(k), parse_half_int(l),
                          factors == "-+" ? sim::YFactor::Plus : sim::YFactor::Minus, terms);
  auto r = sim::sl2_verify(m);
  py::dict out;
  out["dim"] = r.dim;
  out["truncated"] = m.truncated;
  out["brackets_ok"] = r.he_ok && r.hf_ok && r.ef_ok;
  std::vector<std::string> spectrum;
  for (const auto& v : r.h_spectrum) spectrum.push_back(to_string(v));
  out["h_spectrum"] = spectrum;
  out["highest_weight_vectors"] = r.highest_weight_vectors;
  out["casimir"] = r.casimir ? py::object(py::str(to_string(*r.casimir))) : py::none();
  return out;
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run_command(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_gwring, m) {
  m.doc() = "Grothendieck rings of weight modules over generalized Weyl algebras";

  py::register_exception<expr::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("mul", &expr::evaluate, py::arg("expr"), py::arg("m") = py::none(),
        py::arg("n") = py::none(), "Evaluate an expression and return its basis expansion.");
  m.def("normalize", &expr::normalize, py::arg("expr"), py::arg("m") = py::none(),
        py::arg("n") = py::none(), "Evaluate an expression and print normal-form monomials.");
  m.def("reprint", [](const std::string& s) { return expr::print_expr(expr::parse_expr(s)); },
        py::arg("expr"), "Parse and print an expression canonically.");
  m.def("simples", &simples, py::arg("t"));
  m.def("indecomposables", &indecomposables, py::arg("t"));
  m.def("path_join_meet", &join_meet, py::arg("m"), py::arg("n"), py::arg("p1"), py::arg("p2"));
  m.def("chain_decompose", &decompose, py::arg("config"),
        "Chain decomposition of a configuration given in the text file format.");
  m.def("components", &components, py::arg("config"),
        "Map component id -> contractible for a configuration in the text format.");
  m.def("consistent", &consistent, py::arg("config"));
  m.def("sl2", &sl2, py::arg("k"), py::arg("l"), py::arg("factors") = "-+",
        py::arg("terms") = 8);
  m.def("run", &run, py::arg("args"), "Run a CLI subcommand; returns (status, stdout, stderr).");
}
