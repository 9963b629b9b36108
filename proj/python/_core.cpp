#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "xorcount/report.hpp"
#include "xorcount/synth.hpp"
#include "xorcount/verify.hpp"

namespace py = pybind11;
using namespace xorcount;

namespace {

Gf2Mat matrix_from_rows(const std::vector<std::string>& rows) { return Gf2Mat::from_row_strings(rows); }

XorProduct product(const std::vector<int>& cycle_type, const std::vector<std::pair<int, int>>& factors) {
  XorProduct x{CycleType(cycle_type), {}};
  for (auto [i, j] : factors) x.factors.push_back({i, j});
  validate(x);
  return x;
}

std::string search(const std::string& poly, std::optional<int> n, int t_max, unsigned threads, bool timing) {
  const Gf2Poly f = Gf2Poly::parse(poly);
  py::gil_scoped_release release;
  const auto r = min_xor_count_for_poly(f, n.value_or(f.degree()), t_max, ScanOptions{threads});
  return to_json(r, timing).dump();
}

std::string table(int degree, int t_max, unsigned threads, bool timing) {
  std::vector<SearchReport> rows;
  {
    py::gil_scoped_release release;
    rows = min_xor_count_table(degree, t_max, ScanOptions{threads});
  }
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(to_json(r, timing));
  return j.dump();
}

std::string verify(const std::string& claim, std::optional<int> n_max, int d_max, unsigned threads, bool fail_fast,
                   bool timing) {
  const VerifyOptions opts{threads, fail_fast};
  py::gil_scoped_release release;
  VerifyReport r;
  if (claim == "eq1") r = verify_eq1(n_max.value_or(kIdentityMaxDim), opts);
  else if (claim == "eq2") r = verify_eq2(n_max.value_or(kIdentityMaxDim), opts);
  else if (claim == "minors") r = verify_second_minors(n_max.value_or(kSecondMinorMaxDim), opts);
  else if (claim == "thm1") r = verify_theorem1(n_max.value_or(kSearchMaxDim), opts);
  else if (claim == "conjecture") r = verify_conjecture(n_max.value_or(kSearchMaxDim), opts);
  else if (claim == "lemma14") r = verify_lemma14(n_max.value_or(kSearchMaxDim), opts);
  else if (claim == "prop11") r = verify_prop11(n_max.value_or(kProp11MaxDegree), d_max, opts);
  else if (claim == "converse") r = verify_converse(n_max.value_or(kSearchMaxDim), opts);
  else throw std::invalid_argument("unknown claim '" + claim + "'");
  return r.to_json(timing).dump();
}

std::string emit(const std::vector<int>& cycle_type, const std::vector<std::pair<int, int>>& factors) {
  return to_json(emit_program(product(cycle_type, factors))).dump();
}

std::string netlist(const std::vector<int>& cycle_type, const std::vector<std::pair<int, int>>& factors) {
  return to_netlist(emit_program(product(cycle_type, factors)));
}

std::vector<int> simulate_program(const std::string& program_json, const std::vector<int>& bits) {
  const XorProgram p = xor_program_from_json(Json::parse(program_json));
  std::vector<std::uint8_t> v(bits.begin(), bits.end());
  for (int b : bits)
    if (b != 0 && b != 1) throw std::invalid_argument("input entries must be 0 or 1");
  const auto out = simulate(p, v);
  return {out.begin(), out.end()};
}

std::string xor_count(const std::vector<std::string>& rows, int t_max) {
  const auto r = xor_count_exact(matrix_from_rows(rows), t_max);
  Json j;
  j["t"] = r.t ? Json(*r.t) : Json(nullptr);
  j["t_max"] = r.t_max;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j.dump();
}

std::optional<std::string> element_class(const std::vector<std::string>& rows) {
  const auto c = element_check(matrix_from_rows(rows));
  if (!c) return std::nullopt;
  return to_json(*c).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "XOR-count search and verification over GF(2)";

  py::register_exception<std::out_of_range>(m, "CapError", PyExc_ValueError);

  m.def("normalize_poly", [](const std::string& p) { return Gf2Poly::parse(p).to_string(); }, py::arg("poly"));
  m.def("poly_weight", [](const std::string& p) { return Gf2Poly::parse(p).weight(); }, py::arg("poly"));
  m.def("poly_mul", [](const std::string& a, const std::string& b) {
    return (Gf2Poly::parse(a) * Gf2Poly::parse(b)).to_string();
  });
  m.def("poly_pow", [](const std::string& a, int d) { return pow(Gf2Poly::parse(a), d).to_string(); });
  m.def("is_irreducible", [](const std::string& p) { return is_irreducible(Gf2Poly::parse(p)); }, py::arg("poly"));
  m.def("smallest_factor", [](const std::string& p) -> std::optional<std::string> {
    const auto f = smallest_factor(Gf2Poly::parse(p));
    return f ? std::optional<std::string>(f->to_string()) : std::nullopt;
  });
  m.def("irreducibles", [](int degree, std::optional<int> max_weight) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_irreducibles(degree, max_weight)) out.push_back(f.to_string());
    return out;
  }, py::arg("degree"), py::arg("max_weight") = py::none());

  m.def("companion", [](const std::string& q) { return companion(Gf2Poly::parse(q)).row_strings(); });
  m.def("char_poly", [](const std::vector<std::string>& rows) { return char_poly(matrix_from_rows(rows)).to_string(); });
  m.def("min_poly", [](const std::vector<std::string>& rows) { return min_poly(matrix_from_rows(rows)).to_string(); });
  m.def("realize", [](const std::vector<int>& cycle_type, const std::vector<std::pair<int, int>>& factors) {
    return realize(product(cycle_type, factors)).row_strings();
  }, py::arg("cycle_type"), py::arg("factors"));
  m.def("element_class", &element_class, py::arg("rows"));
  m.def("xor_count", &xor_count, py::arg("rows"), py::arg("t_max") = 2);

  m.def("search", &search, py::arg("poly"), py::arg("n") = py::none(), py::arg("t_max") = 2, py::arg("threads") = 1,
        py::arg("timing") = true);
  m.def("table", &table, py::arg("degree"), py::arg("t_max") = 2, py::arg("threads") = 1, py::arg("timing") = true);
  m.def("verify", &verify, py::arg("claim"), py::arg("n_max") = py::none(), py::arg("d_max") = kProp11MaxExponent,
        py::arg("threads") = 1, py::arg("fail_fast") = false, py::arg("timing") = true);
  m.def("emit", &emit, py::arg("cycle_type"), py::arg("factors"));
  m.def("netlist", &netlist, py::arg("cycle_type"), py::arg("factors"));
  m.def("simulate", &simulate_program, py::arg("program"), py::arg("bits"));
}
