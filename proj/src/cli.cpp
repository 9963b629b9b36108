#include "xorcount/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "xorcount/synth.hpp"
#include "xorcount/verify.hpp"

namespace xorcount {

namespace {

struct CommonFlags {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_flag("--no-timing", flags.no_timing, "Write elapsed_ms as 0 for byte-reproducible output");
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string claim;
  std::optional<int> n_max;
  int d_max = kProp11MaxExponent;
  bool json = false;
  bool fail_fast = false;
};

const std::vector<std::string> kClaims = {"eq1",     "eq2",    "minors",   "thm1",   "conjecture",
                                          "lemma14", "prop11", "converse", "all"};

VerifyReport run_claim(const std::string& claim, std::optional<int> n_max, int d_max, const VerifyOptions& opts,
                       bool clamp) {
  auto pick = [&](int cap) {
    if (!n_max) return cap;
    return clamp ? std::min(*n_max, cap) : *n_max;
  };
  if (claim == "eq1") return verify_eq1(pick(kIdentityMaxDim), opts);
  if (claim == "eq2") return verify_eq2(pick(kIdentityMaxDim), opts);
  if (claim == "minors") return verify_second_minors(pick(kSecondMinorMaxDim), opts);
  if (claim == "thm1") return verify_theorem1(pick(kSearchMaxDim), opts);
  if (claim == "conjecture") return verify_conjecture(pick(kSearchMaxDim), opts);
  if (claim == "lemma14") return verify_lemma14(pick(kSearchMaxDim), opts);
  if (claim == "prop11") return verify_prop11(pick(kProp11MaxDegree), d_max, opts);
  if (claim == "converse") return verify_converse(pick(kSearchMaxDim), opts);
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

std::string summary_line(const VerifyReport& r, bool timing) {
  std::ostringstream s;
  s << (r.passed() ? "PASS " : "FAIL ") << r.claim_id << "  n=" << r.n_range.front() << ".." << r.n_range.back()
    << "  cases=" << r.cases_checked << "  violations=" << r.violations.size();
  if (timing) s << "  (" << r.elapsed_ms << " ms)";
  return s.str();
}

int cmd_verify(const VerifyArgs& args, const CommonFlags& common, std::ostream& out) {
  const VerifyOptions opts{common.threads, args.fail_fast};
  std::vector<std::string> claims;
  if (args.claim == "all") {
    claims.assign(kClaims.begin(), kClaims.end() - 1);
    if (args.n_max && (*args.n_max < 2 || *args.n_max > kIdentityMaxDim)) {
      throw std::out_of_range("n_max = " + std::to_string(*args.n_max) + " outside 2.." +
                              std::to_string(kIdentityMaxDim));
    }
  } else {
    claims.push_back(args.claim);
  }

  std::vector<VerifyReport> reports;
  for (const auto& claim : claims) {
    // Under "all", a small n_max (e.g. 2) still leaves the second-minor
    // check its minimum dimension of 3.
    std::optional<int> n_max = args.n_max;
    if (args.claim == "all" && claim == "minors" && n_max) n_max = std::max(*n_max, 3);
    reports.push_back(run_claim(claim, n_max, args.d_max, opts, args.claim == "all"));
    if (args.fail_fast && !reports.back().passed()) break;
  }

  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (args.json) {
    if (reports.size() == 1) {
      out << reports.front().to_json(!common.no_timing).dump(2) << "\n";
    } else {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(r.to_json(!common.no_timing));
      out << all.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) {
      out << summary_line(r, !common.no_timing) << "\n";
      for (std::size_t k = 0; k < std::min<std::size_t>(r.violations.size(), 5); ++k) {
        out << "  violation: " << r.violations[k].dump() << "\n";
      }
    }
  }
  return passed ? kExitOk : kExitFailure;
}

// --- search / table / emit ------------------------------------------------

struct SearchArgs {
  std::string poly;
  std::optional<int> n;
  int t_max = 2;
};

int resolve_n(const Gf2Poly& f, std::optional<int> n) { return n ? *n : f.degree(); }

int cmd_search(const SearchArgs& args, const CommonFlags& common, std::ostream& out) {
  const Gf2Poly f = Gf2Poly::parse(args.poly);
  const auto report = min_xor_count_for_poly(f, resolve_n(f, args.n), args.t_max, ScanOptions{common.threads});
  out << to_json(report, !common.no_timing).dump(2) << "\n";
  return report.t ? kExitOk : kExitFailure;
}

struct TableArgs {
  int degree = 0;
  int t_max = 2;
  std::string format = "md";
};

std::string count_cell(const SearchReport& r) { return r.t ? std::to_string(*r.t) : ">" + std::to_string(r.t_max); }

std::string factors_cell(const XorProduct& x) {
  std::string s;
  for (const auto& f : x.factors) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(f.row) + "," + std::to_string(f.col) + ")";
  }
  return s;
}

int cmd_table(const TableArgs& args, const CommonFlags& common, std::ostream& out) {
  if (args.degree < 2 || args.degree > kSearchMaxDim) {
    throw std::out_of_range("degree = " + std::to_string(args.degree) + " outside 2.." + std::to_string(kSearchMaxDim));
  }
  const auto rows = min_xor_count_table(args.degree, args.t_max, ScanOptions{common.threads});
  if (args.format == "json") {
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"poly", r.poly.to_string()},
                   {"hex", r.poly.to_hex()},
                   {"degree", r.poly.degree()},
                   {"weight", r.poly.weight()},
                   {"min_xor_count", r.t ? Json(*r.t) : Json(nullptr)},
                   {"t_max", r.t_max},
                   {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}});
    }
    out << j.dump(2) << "\n";
  } else if (args.format == "csv") {
    out << "poly,hex,degree,weight,min_xor_count,cycle_type,factors\n";
    for (const auto& r : rows) {
      out << r.poly.to_string() << "," << r.poly.to_hex() << "," << r.poly.degree() << "," << r.poly.weight() << ","
          << count_cell(r) << "," << (r.witness ? "\"" + r.witness->cycle_type.to_string() + "\"" : "") << ","
          << (r.witness ? factors_cell(*r.witness) : "") << "\n";
    }
  } else {
    out << "| poly | hex | degree | weight | min XOR-count | cycle type | factors |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      out << "| " << r.poly.to_string() << " | " << r.poly.to_hex() << " | " << r.poly.degree() << " | "
          << r.poly.weight() << " | " << count_cell(r) << " | "
          << (r.witness ? r.witness->cycle_type.to_string() : "-") << " | "
          << (r.witness ? factors_cell(*r.witness) : "-") << " |\n";
    }
  }
  return kExitOk;
}

struct EmitArgs {
  std::string poly;
  std::optional<int> n;
  int t_max = 2;
  std::string format = "netlist";
  std::uint64_t seed = kDefaultSeed;
};

int cmd_emit(const EmitArgs& args, const CommonFlags& common, std::ostream& out, std::ostream& err) {
  const Gf2Poly f = Gf2Poly::parse(args.poly);
  const auto report = min_xor_count_for_poly(f, resolve_n(f, args.n), args.t_max, ScanOptions{common.threads});
  if (!report.witness) {
    err << "error: no implementation of " << f.to_string() << " with at most " << args.t_max
        << " XORs in dimension " << report.n << "\n";
    return kExitFailure;
  }
  const XorProgram program = emit_program(*report.witness);
  const Gf2Mat target = realize(*report.witness);
  const auto mode = program.n <= kExhaustiveMaxDim ? EquivalenceMode::exhaustive : EquivalenceMode::sample;
  if (program.cost() != *report.t || !check_equivalence(program, target, mode, args.seed)) {
    err << "error: refusing to emit a program that does not match its matrix\n";
    return kExitFailure;
  }
  if (args.format == "json") {
    Json j;
    j["poly"] = f.to_string();
    j["n"] = report.n;
    j["t"] = *report.t;
    j["witness"] = to_json(*report.witness);
    j["program"] = to_json(program);
    j["verified"] = mode == EquivalenceMode::exhaustive ? "exhaustive" : "sample";
    out << j.dump(2) << "\n";
  } else {
    out << to_netlist(program);
  }
  return kExitOk;
}

// --- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string path;
  int t_max = 2;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  std::ifstream in(args.path);
  if (!in) throw std::invalid_argument("cannot open " + args.path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const Gf2Mat a = (first != std::string::npos && text[first] == '{') ? Gf2Mat::parse_json(text)
                                                                        : Gf2Mat::parse_text(text);
  Json j;
  j["matrix"] = Json::parse(a.to_json());
  j["char_poly"] = char_poly(a).to_string();
  j["min_poly"] = min_poly(a).to_string();
  j["invertible"] = det(a);
  if (det(a)) {
    const auto cls = element_check(a);
    j["element_class"] = cls ? to_json(*cls) : Json(nullptr);
    if (a.dim() <= kSearchMaxDim) {
      const auto count = xor_count_exact(a, args.t_max);
      j["xor_count"] = count.t ? Json(*count.t) : Json(nullptr);
      j["t_max"] = args.t_max;
      j["witness"] = count.witness ? to_json(*count.witness) : Json(nullptr);
    }
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"XOR-count search and verification for constant multiplication in binary fields", "xorcount"};
  app.require_subcommand(1);
  CommonFlags common;

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a claim exhaustively");
  verify_cmd->add_option("claim", verify.claim, "Claim to check")->required()->check(CLI::IsMember(kClaims));
  verify_cmd->add_option("--n-max", verify.n_max, "Largest dimension (or degree, for prop11)");
  verify_cmd->add_option("--d-max", verify.d_max, "Largest exponent for prop11");
  verify_cmd->add_flag("--json", verify.json, "Emit the report as JSON");
  verify_cmd->add_flag("--fail-fast", verify.fail_fast, "Stop at the first violation");
  add_common(verify_cmd, common);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Minimal XOR-count for an irreducible polynomial");
  search_cmd->add_option("--poly", search.poly, "Minimal polynomial, e.g. \"x^4+x+1\" or 0x13")->required();
  search_cmd->add_option("--n", search.n, "Field dimension (default: degree of the polynomial)");
  search_cmd->add_option("--t-max", search.t_max, "Largest XOR-count to try")->check(CLI::Range(0, kMaxFactors));
  add_common(search_cmd, common);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Minimal XOR-counts for every irreducible of one degree");
  table_cmd->add_option("--degree,--n", table.degree, "Polynomial degree")->required();
  table_cmd->add_option("--t-max", table.t_max, "Largest XOR-count to try")->check(CLI::Range(0, kMaxFactors));
  table_cmd->add_option("--format", table.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  add_common(table_cmd, common);

  EmitArgs emit;
  auto* emit_cmd = app.add_subcommand("emit", "Emit a verified XOR netlist for the cheapest implementation");
  emit_cmd->add_option("--poly", emit.poly, "Minimal polynomial")->required();
  emit_cmd->add_option("--n", emit.n, "Field dimension (default: degree of the polynomial)");
  emit_cmd->add_option("--t-max", emit.t_max, "Largest XOR-count to try")->check(CLI::Range(0, kMaxFactors));
  emit_cmd->add_option("--format", emit.format, "netlist or json")->check(CLI::IsMember({"netlist", "json"}));
  emit_cmd->add_option("--seed", emit.seed, "Seed for sampled equivalence checks");
  add_common(emit_cmd, common);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Char/min polynomial, element class and XOR-count of a matrix");
  analyze_cmd->add_option("--matrix", analyze.path, "Matrix file (0/1 text or JSON)")->required();
  analyze_cmd->add_option("--t-max", analyze.t_max, "Largest XOR-count to try")->check(CLI::Range(0, kMaxFactors));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify, common, out);
    if (search_cmd->parsed()) return cmd_search(search, common, out);
    if (table_cmd->parsed()) return cmd_table(table, common, out);
    if (emit_cmd->parsed()) return cmd_emit(emit, common, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace xorcount
