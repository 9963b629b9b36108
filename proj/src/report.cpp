#include "xorcount/report.hpp"

#include <stdexcept>

namespace xorcount {

namespace {

Json factors_json(const std::vector<Transvection>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back({f.row, f.col});
  return out;
}

}  // namespace

Json to_json(const XorProduct& x) {
  return Json{{"cycle_type", x.cycle_type.parts()}, {"factors", factors_json(x.factors)}};
}

XorProduct xor_product_from_json(const Json& j) {
  XorProduct x{CycleType(j.at("cycle_type").get<std::vector<int>>()), {}};
  for (const auto& pair : j.at("factors")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("factor must be a pair [i, j]");
    x.factors.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  validate(x);
  return x;
}

Json to_json(const PermutedProduct& x) {
  return Json{{"permutation", x.permutation}, {"factors", factors_json(x.factors)}};
}

Json to_json(const SearchReport& r, bool include_timing) {
  Json j;
  j["poly"] = r.poly.to_string();
  j["n"] = r.n;
  j["t"] = r.t ? Json(*r.t) : Json(nullptr);
  j["t_max"] = r.t_max;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0;
  return j;
}

Json to_json(const XorProgram& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back({s.target, s.source});
  return Json{{"n", p.n}, {"steps", steps}, {"output", p.output_perm}};
}

XorProgram xor_program_from_json(const Json& j) {
  XorProgram p;
  p.n = j.at("n").get<int>();
  for (const auto& s : j.at("steps")) {
    if (!s.is_array() || s.size() != 2) throw std::invalid_argument("step must be a pair [target, source]");
    p.steps.push_back({s[0].get<int>(), s[1].get<int>()});
  }
  p.output_perm = j.at("output").get<std::vector<int>>();
  if (static_cast<int>(p.output_perm.size()) != p.n) throw std::invalid_argument("output length must equal n");
  return p;
}

Json to_json(const ElementClass& c) {
  return Json{{"f", c.f.to_string()}, {"m", c.m}, {"d", c.d}, {"n", c.n}, {"trivial", c.trivial()}};
}

}  // namespace xorcount
