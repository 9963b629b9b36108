#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "xorcount/report.hpp"
#include "xorcount/synth.hpp"

using namespace xorcount;

namespace {

Gf2Poly P(const char* text) { return Gf2Poly::parse(text); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kGolden = XORCOUNT_GOLDEN_DIR;

}  // namespace

TEST_CASE("programs have one step per factor") {
  const XorProgram empty = emit_program(XorProduct{CycleType({3, 1}), {}});
  CHECK(empty.cost() == 0);
  CHECK(empty.output_perm.size() == 4);
  CHECK(emit_program(XorProduct{CycleType({4}), {{1, 4}}}).cost() == 1);
  CHECK(emit_program(XorProduct{CycleType({8}), {{1, 8}, {2, 5}}}).cost() == 2);
  CHECK(emit_program(XorProduct{CycleType({4}), {{1, 4}}}).steps == std::vector<XorStep>{{1, 4}});
}

TEST_CASE("simulation") {
  const XorProduct swap{CycleType({2, 1}), {}};
  const XorProgram p = emit_program(swap);
  const std::vector<std::uint8_t> v{1, 0, 1};
  CHECK(simulate(p, v) == std::vector<std::uint8_t>{0, 1, 1});

  const XorProduct two{CycleType({2}), {{2, 1}}};
  const XorProgram q = emit_program(two);
  // [[0,1],[1,0]] * [[1,0],[1,1]] = [[1,1],[1,0]]
  CHECK(simulate(q, std::vector<std::uint8_t>{1, 0}) == std::vector<std::uint8_t>{1, 1});
  CHECK(simulate(q, std::vector<std::uint8_t>{0, 1}) == std::vector<std::uint8_t>{1, 0});
  CHECK(simulate(q, std::vector<std::uint8_t>{0, 0}) == std::vector<std::uint8_t>{0, 0});
  CHECK_THROWS_AS(simulate(q, std::vector<std::uint8_t>{1}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(q, std::vector<std::uint8_t>{1, 2}), std::invalid_argument);
}

TEST_CASE("every product up to n=6, t=2 is reproduced exactly") {
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t <= 2; ++t) {
      if (n == 1 && t > 0) continue;
      for (const auto& x : ProductSpace(n, t)) {
        const XorProgram p = emit_program(x);
        CHECK(p.cost() == t);
        const Gf2Mat a = realize(x);
        bool all = true;
        for (Gf2Mat::Row v = 0; v < (1u << n); ++v) all = all && simulate_packed(p, v) == a.apply(v);
        CHECK(all);
        CHECK(check_equivalence(p, a, EquivalenceMode::exhaustive));
      }
    }
  }
}

TEST_CASE("step order matters") {
  const XorProduct x{CycleType({1, 1, 1}), {{1, 2}, {2, 3}}};
  XorProgram p = emit_program(x);
  CHECK(check_equivalence(p, realize(x), EquivalenceMode::exhaustive));
  std::reverse(p.steps.begin(), p.steps.end());
  CHECK_FALSE(check_equivalence(p, realize(x), EquivalenceMode::exhaustive));
  CHECK_FALSE(check_equivalence(p, realize(x), EquivalenceMode::sample));
}

TEST_CASE("identity program") {
  const XorProgram id = emit_program(XorProduct{CycleType({1, 1, 1, 1, 1}), {}});
  CHECK(check_equivalence(id, Gf2Mat::identity(5), EquivalenceMode::exhaustive));
  CHECK(check_equivalence(id, Gf2Mat::identity(5), EquivalenceMode::sample, 1, 50));
}

TEST_CASE("permuted products") {
  const PermutedProduct pp{{3, 1, 2}, {{1, 3}, {2, 1}}};
  const XorProgram p = emit_program(pp);
  CHECK(p.cost() == 2);
  CHECK(check_equivalence(p, pp.realize(), EquivalenceMode::exhaustive));
}

TEST_CASE("sampled equivalence beyond the exhaustive cap") {
  const XorProduct big{CycleType({16}), {{1, 16}, {5, 9}}};
  const XorProgram p = emit_program(big);
  CHECK(check_equivalence(p, realize(big), EquivalenceMode::sample));
  CHECK_THROWS_AS(check_equivalence(p, realize(big), EquivalenceMode::exhaustive), std::out_of_range);
  XorProgram broken = p;
  broken.steps.pop_back();
  CHECK_FALSE(check_equivalence(broken, realize(big), EquivalenceMode::sample));
}

TEST_CASE("netlist text") {
  const XorProgram p = emit_program(XorProduct{CycleType({4}), {{1, 4}}});
  CHECK(to_netlist(p) == "x[1] ^= x[4]\nout = x[4], x[1], x[2], x[3]\n");
  CHECK(parse_netlist(to_netlist(p)) == p);
  for (const auto& x : ProductSpace(5, 2)) {
    const XorProgram q = emit_program(x);
    CHECK(parse_netlist(to_netlist(q)) == q);
    CHECK(xor_program_from_json(to_json(q)) == q);
  }
  CHECK_THROWS_AS(parse_netlist("x[1] ^= x[1]\nout = x[1]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_netlist("x[1] ^= x[2]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_netlist("out = x[1], x[1]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_netlist("y = 3\nout = x[1]\n"), std::invalid_argument);
}

TEST_CASE("golden netlists") {
  struct Case {
    const char* poly;
    int n;
    const char* file;
  };
  for (const Case& c : {Case{"x^4+x+1", 4, "emit_x4_x_1_n4.netlist"}, Case{"x^3+x+1", 3, "emit_x3_x_1_n3.netlist"},
                        Case{"x^8+x^4+x^3+x+1", 8, "emit_x8_x4_x3_x_1_n8.netlist"}}) {
    CAPTURE(c.poly);
    const std::string text = slurp(kGolden + "/" + c.file);
    const XorProgram p = parse_netlist(text);
    CHECK(to_netlist(p) == text);
    const auto r = min_xor_count_for_poly(P(c.poly), c.n, 2);
    REQUIRE(r.witness.has_value());
    CHECK(emit_program(*r.witness) == p);
    Gf2Mat a(c.n);
    for (int j = 1; j <= c.n; ++j) {
      const Gf2Mat::Row col = simulate_packed(p, Gf2Mat::Row{1} << (j - 1));
      for (int i = 1; i <= c.n; ++i) a.set(i, j, (col >> (i - 1)) & 1);
    }
    CHECK(min_poly(a) == P(c.poly));
    CHECK(char_poly(a) == P(c.poly));
  }
}
