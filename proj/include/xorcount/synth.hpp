#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xorcount/gf2mat.hpp"
#include "xorcount/xorform.hpp"

namespace xorcount {

/// One in-place XOR, x[target] ^= x[source] (1-based wires).
struct XorStep {
  int target = 0;
  int source = 0;

  friend bool operator==(const XorStep&, const XorStep&) = default;
};

/// Straight-line XOR program: steps run in order, then output r reads wire
/// output_perm[r-1]. Relabeling costs nothing; the cost is steps.size().
struct XorProgram {
  int n = 0;
  std::vector<XorStep> steps;
  std::vector<int> output_perm;

  int cost() const { return static_cast<int>(steps.size()); }
  friend bool operator==(const XorProgram&, const XorProgram&) = default;
};

/// Program computing realize(x) * v. Factors run rightmost first, each
/// (i, j) becoming x[i] ^= x[j]; the cycle permutation becomes relabeling.
XorProgram emit_program(const XorProduct& x);
XorProgram emit_program(const PermutedProduct& x);

/// Throws std::invalid_argument when v.size() != p.n or v holds non-bits.
std::vector<std::uint8_t> simulate(const XorProgram& p, std::span<const std::uint8_t> v);
/// Packed variant: bit k of v is wire k+1.
Gf2Mat::Row simulate_packed(const XorProgram& p, Gf2Mat::Row v);

enum class EquivalenceMode { exhaustive, sample };

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;
inline constexpr int kExhaustiveMaxDim = 12;
inline constexpr int kDefaultSamples = 10'000;

/// Compares the program against A on all 2^n inputs (n <= 12) or on
/// `samples` uniformly random inputs drawn from `seed`.
bool check_equivalence(const XorProgram& p, const Gf2Mat& a, EquivalenceMode mode,
                       std::uint64_t seed = kDefaultSeed, int samples = kDefaultSamples);

/// "x[i] ^= x[j]" per step, then "out = x[a], x[b], ...".
std::string to_netlist(const XorProgram& p);
XorProgram parse_netlist(std::string_view text);

}  // namespace xorcount
