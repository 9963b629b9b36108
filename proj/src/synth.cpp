#include "xorcount/synth.hpp"

#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace xorcount {

namespace {

XorProgram emit(int n, std::span<const int> permutation, std::span<const Transvection> factors) {
  XorProgram p;
  p.n = n;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->row == it->col) throw std::invalid_argument("factor (i,j) needs i != j");
    p.steps.push_back({it->row, it->col});
  }
  // (P w)[perm[j]] = w[j], so output r reads the wire mapped onto r.
  p.output_perm.assign(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) p.output_perm[permutation[j - 1] - 1] = j;
  return p;
}

void check_wire(int n, int w) {
  if (w < 1 || w > n) throw std::invalid_argument("wire " + std::to_string(w) + " outside 1.." + std::to_string(n));
}

}  // namespace

XorProgram emit_program(const XorProduct& x) {
  validate(x);
  const std::vector<int> image = cycle_block_matrix(x.cycle_type).permutation_image();
  return emit(x.dim(), image, x.factors);
}

XorProgram emit_program(const PermutedProduct& x) {
  const int n = static_cast<int>(x.permutation.size());
  for (const auto& f : x.factors) {
    check_wire(n, f.row);
    check_wire(n, f.col);
  }
  Gf2Mat::permutation(x.permutation);  // validates
  return emit(n, x.permutation, x.factors);
}

std::vector<std::uint8_t> simulate(const XorProgram& p, std::span<const std::uint8_t> v) {
  if (static_cast<int>(v.size()) != p.n) {
    throw std::invalid_argument("input has " + std::to_string(v.size()) + " bits, program expects " +
                                std::to_string(p.n));
  }
  std::vector<std::uint8_t> wires(v.begin(), v.end());
  for (auto b : wires) {
    if (b > 1) throw std::invalid_argument("input entries must be 0 or 1");
  }
  for (const auto& s : p.steps) wires[s.target - 1] ^= wires[s.source - 1];
  std::vector<std::uint8_t> out(wires.size());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = wires[p.output_perm[r] - 1];
  return out;
}

Gf2Mat::Row simulate_packed(const XorProgram& p, Gf2Mat::Row v) {
  for (const auto& s : p.steps) v ^= ((v >> (s.source - 1)) & 1) << (s.target - 1);
  Gf2Mat::Row out = 0;
  for (int r = 0; r < p.n; ++r) out |= ((v >> (p.output_perm[r] - 1)) & 1) << r;
  return out;
}

bool check_equivalence(const XorProgram& p, const Gf2Mat& a, EquivalenceMode mode, std::uint64_t seed,
                       int samples) {
  if (a.dim() != p.n) return false;
  if (mode == EquivalenceMode::exhaustive) {
    if (p.n > kExhaustiveMaxDim) {
      throw std::out_of_range("exhaustive equivalence supports n <= " + std::to_string(kExhaustiveMaxDim));
    }
    const Gf2Mat::Row count = Gf2Mat::Row{1} << p.n;
    for (Gf2Mat::Row v = 0; v < count; ++v) {
      if (simulate_packed(p, v) != a.apply(v)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  const Gf2Mat::Row mask = (Gf2Mat::Row{1} << p.n) - 1;
  for (int k = 0; k < samples; ++k) {
    const auto v = static_cast<Gf2Mat::Row>(rng()) & mask;
    if (simulate_packed(p, v) != a.apply(v)) return false;
  }
  return true;
}

std::string to_netlist(const XorProgram& p) {
  std::string out;
  for (const auto& s : p.steps) {
    out += "x[" + std::to_string(s.target) + "] ^= x[" + std::to_string(s.source) + "]\n";
  }
  out += "out = ";
  for (std::size_t r = 0; r < p.output_perm.size(); ++r) {
    if (r > 0) out += ", ";
    out += "x[" + std::to_string(p.output_perm[r]) + "]";
  }
  out += "\n";
  return out;
}

XorProgram parse_netlist(std::string_view text) {
  XorProgram p;
  std::istringstream in{std::string(text)};
  bool saw_out = false;
  auto bad = [](const std::string& line) { return std::invalid_argument("bad netlist line: " + line); };
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    if (saw_out) throw bad(line);
    int a = 0;
    int b = 0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "x[%d] ^= x[%d]%c", &a, &b, &tail) == 2) {
      if (a == b) throw bad(line);
      p.steps.push_back({a, b});
      continue;
    }
    if (line.rfind("out = ", 0) != 0) throw bad(line);
    std::istringstream fields(line.substr(6));
    for (std::string item; std::getline(fields, item, ',');) {
      const auto start = item.find_first_not_of(' ');
      if (start == std::string::npos || std::sscanf(item.c_str() + start, "x[%d]%c", &a, &tail) != 1) throw bad(line);
      p.output_perm.push_back(a);
    }
    saw_out = true;
  }
  if (!saw_out) throw std::invalid_argument("netlist has no output line");
  p.n = static_cast<int>(p.output_perm.size());
  std::vector<bool> used(static_cast<std::size_t>(p.n) + 1, false);
  for (int w : p.output_perm) {
    check_wire(p.n, w);
    if (used[w]) throw std::invalid_argument("output wires must be a permutation");
    used[w] = true;
  }
  for (const auto& s : p.steps) {
    check_wire(p.n, s.target);
    check_wire(p.n, s.source);
  }
  return p;
}

}  // namespace xorcount
