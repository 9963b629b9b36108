#include "xorcount/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>

#include "xorcount/parallel.hpp"

namespace xorcount {

namespace {

using Clock = std::chrono::steady_clock;

constexpr char kKeyedOnMinimalPolynomialNote[] =
    "searches are keyed on minimal polynomials; elements sharing a minimal polynomial share an XOR-count, "
    "so individual roots are never enumerated";

void check_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw std::out_of_range(std::string(what) + " = " + std::to_string(value) + " outside " + std::to_string(lo) +
                            ".." + std::to_string(hi));
  }
}

std::vector<int> range_of(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

VerifyReport start_report(std::string claim, std::vector<int> n_range) {
  VerifyReport r;
  r.claim_id = std::move(claim);
  r.n_range = std::move(n_range);
  return r;
}

void finish(VerifyReport& r, Clock::time_point start) {
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Gf2Poly x_power_plus_one(int n) { return Gf2Poly::from_exponents({n, 0}); }

// Per-chunk output of a scan over two-factor products.
struct ProductScanChunk {
  std::vector<Json> violations;
  std::uint64_t classified = 0;
  std::uint64_t nontrivial = 0;
  std::uint64_t inspected = 0;
  int max_weight = 0;
  std::map<std::pair<Gf2Poly, int>, std::uint64_t> classes;
};

Json product_payload(int n, const XorProduct& x, const Gf2Mat& a) {
  return Json{{"n", n},
              {"product", to_json(x)},
              {"char_poly", char_poly(a).to_string()},
              {"min_poly", min_poly(a).to_string()}};
}

// Visits every product of ProductSpace(n, t) in parallel chunks; `check`
// inspects one product and appends violations to the chunk.
template <typename Check>
std::vector<ProductScanChunk> scan_products(int n, int t, const VerifyOptions& options, Check&& check) {
  const ProductSpace space(n, t);
  std::atomic<bool> stop{false};
  return parallel_chunks<ProductScanChunk>(space.size(), options.threads, [&](IndexRange r) {
    ProductScanChunk chunk;
    for (std::uint64_t i = r.begin; i < r.end; ++i) {
      if (options.fail_fast && stop.load(std::memory_order_relaxed)) break;
      check(space, i, chunk);
      if (options.fail_fast && !chunk.violations.empty()) stop = true;
    }
    return chunk;
  });
}

void trim_for_fail_fast(VerifyReport& r, const VerifyOptions& options) {
  if (options.fail_fast && r.violations.size() > 1) r.violations.resize(1);
}

Json classes_json(const std::map<std::pair<Gf2Poly, int>, std::uint64_t>& classes) {
  Json out = Json::array();
  for (const auto& [key, hits] : classes) out.push_back({{"f", key.first.to_string()}, {"d", key.second}, {"hits", hits}});
  return out;
}

}  // namespace

Json VerifyReport::to_json(bool include_timing) const {
  Json j;
  j["claim_id"] = claim_id;
  j["passed"] = passed();
  j["n_range"] = n_range;
  j["cases_checked"] = cases_checked;
  j["violations"] = violations;
  j["elapsed_ms"] = include_timing ? elapsed_ms : 0;
  j["notes"] = notes;
  j["details"] = details;
  return j;
}

Gf2Poly eq1_closed_form(int n, int i, int j) {
  return Gf2Poly::monomial(i > j ? i - j - 1 : n + i - j - 1);
}

Gf2Poly eq2_closed_form(int n, int i, int j) {
  return Gf2Poly::from_exponents({n, i > j ? i - j : n + i - j, 0});
}

VerifyReport verify_eq1(int n_max, const VerifyOptions& options) {
  check_range("n_max", n_max, 2, kIdentityMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("eq1", range_of(2, n_max));
  for (int n = 2; n <= n_max; ++n) {
    const PolyMat shifted = PolyMat::plus_lambda(companion(x_power_plus_one(n)));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        ++r.cases_checked;
        const Gf2Poly actual = sym_det(minor_delete(shifted, i, j));
        const Gf2Poly expected = eq1_closed_form(n, i, j);
        if (actual != expected) {
          r.violations.push_back(
              {{"n", n}, {"i", i}, {"j", j}, {"expected", expected.to_string()}, {"actual", actual.to_string()}});
          if (options.fail_fast) {
            finish(r, start);
            return r;
          }
        }
      }
    }
  }
  finish(r, start);
  return r;
}

VerifyReport verify_eq2(int n_max, const VerifyOptions& options, const ClosedForm& closed_form) {
  check_range("n_max", n_max, 2, kIdentityMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("eq2", range_of(2, n_max));
  for (int n = 2; n <= n_max; ++n) {
    const Gf2Mat shift = companion(x_power_plus_one(n));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        ++r.cases_checked;
        const Gf2Mat m = shift * (Gf2Mat::identity(n) + Gf2Mat::unit(n, i, j));
        const Gf2Poly actual = char_poly(m);
        const Gf2Poly expected = closed_form(n, i, j);
        if (actual != expected) {
          r.violations.push_back({{"n", n},
                                  {"i", i},
                                  {"j", j},
                                  {"product", to_json(XorProduct{CycleType({n}), {{i, j}}})},
                                  {"expected", expected.to_string()},
                                  {"actual", actual.to_string()}});
          if (options.fail_fast) {
            finish(r, start);
            return r;
          }
        }
      }
    }
  }
  finish(r, start);
  return r;
}

VerifyReport verify_second_minors(int n_max, const VerifyOptions& options) {
  check_range("n_max", n_max, 3, kSecondMinorMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("minors", range_of(3, n_max));
  std::uint64_t zeros = 0;
  for (int n = 3; n <= n_max; ++n) {
    const PolyMat shifted = PolyMat::plus_lambda(companion(x_power_plus_one(n)));
    for (int i1 = 1; i1 <= n; ++i1) {
      for (int j1 = 1; j1 <= n; ++j1) {
        const PolyMat first = minor_delete(shifted, i1, j1);
        for (int i2 = 1; i2 < n; ++i2) {
          for (int j2 = 1; j2 < n; ++j2) {
            ++r.cases_checked;
            const Gf2Poly value = sym_det(minor_delete(first, i2, j2));
            if (value.is_zero()) {
              ++zeros;
              continue;
            }
            if (value.weight() != 1) {
              r.violations.push_back({{"n", n}, {"first", {i1, j1}}, {"second", {i2, j2}}, {"det", value.to_string()}});
              if (options.fail_fast) {
                finish(r, start);
                return r;
              }
            }
          }
        }
      }
    }
  }
  r.details["zero_determinants"] = zeros;
  finish(r, start);
  return r;
}

VerifyReport verify_theorem1(int n_max, const VerifyOptions& options) {
  check_range("n_max", n_max, 2, kSearchMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("thm1", range_of(2, n_max));
  r.notes.push_back(kKeyedOnMinimalPolynomialNote);
  Json per_n = Json::array();
  const ScanOptions scan{options.threads, kSearchMaxDim};
  for (int n = 2; n <= n_max; ++n) {
    r.cases_checked += ProductSpace(n, 1).size();
    const auto classes = scan_classes(n, 1, scan);
    const auto trinomials = enumerate_irreducibles(n, 3);

    Json achieved = Json::array();
    for (const auto& f : trinomials) {
      auto it = std::find_if(classes.begin(), classes.end(),
                             [&](const ClassWitness& c) { return c.cls.f == f && c.cls.d == 1; });
      if (it == classes.end()) {
        r.violations.push_back({{"direction", "if"}, {"n", n}, {"poly", f.to_string()}});
      } else {
        achieved.push_back({{"poly", f.to_string()}, {"witness", to_json(it->witness)}});
      }
    }
    // Only-if: anything classified at t = 1 must be a degree-n trinomial.
    for (const auto& c : classes) {
      if (c.cls.d == 1 && c.cls.f.weight() == 3) continue;
      Json payload = product_payload(n, c.witness, realize(c.witness));
      payload["direction"] = "only-if";
      payload["class"] = to_json(c.cls);
      payload["hits"] = c.hits;
      r.violations.push_back(std::move(payload));
    }
    per_n.push_back({{"n", n},
                     {"trinomials", static_cast<int>(trinomials.size())},
                     {"achieved", achieved},
                     {"classes_at_t1", static_cast<int>(classes.size())}});
    if (options.fail_fast && !r.violations.empty()) break;
  }
  trim_for_fail_fast(r, options);
  r.details["per_n"] = per_n;
  finish(r, start);
  return r;
}

VerifyReport verify_conjecture(int n_max, const VerifyOptions& options) {
  check_range("n_max", n_max, 2, kSearchMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("conjecture", range_of(2, n_max));
  r.notes.push_back(kKeyedOnMinimalPolynomialNote);
  Json per_n = Json::array();
  for (int n = 2; n <= n_max; ++n) {
    const auto chunks = scan_products(n, 2, options, [n](const ProductSpace& space, std::uint64_t i, ProductScanChunk& c) {
      ++c.inspected;
      const Gf2Mat a = space.realize_at(i);
      const auto cls = element_check(a);
      if (!cls) return;
      ++c.classified;
      ++c.classes[{cls->f, cls->d}];
      if (cls->trivial()) return;
      ++c.nontrivial;
      c.max_weight = std::max(c.max_weight, cls->f.weight());
      if (cls->f.weight() > 5) {
        Json payload = product_payload(n, space.at(i), a);
        payload["class"] = to_json(*cls);
        c.violations.push_back(std::move(payload));
      }
    });
    ProductScanChunk total;
    for (const auto& c : chunks) {
      total.inspected += c.inspected;
      total.classified += c.classified;
      total.nontrivial += c.nontrivial;
      total.max_weight = std::max(total.max_weight, c.max_weight);
      for (const auto& [key, hits] : c.classes) total.classes[key] += hits;
      r.violations.insert(r.violations.end(), c.violations.begin(), c.violations.end());
    }
    r.cases_checked += total.inspected;
    per_n.push_back({{"n", n},
                     {"products", total.inspected},
                     {"classified", total.classified},
                     {"nontrivial", total.nontrivial},
                     {"max_weight", total.max_weight},
                     {"classes", classes_json(total.classes)}});
    if (options.fail_fast && !r.violations.empty()) break;
  }
  trim_for_fail_fast(r, options);
  r.details["per_n"] = per_n;
  finish(r, start);
  return r;
}

VerifyReport verify_lemma14(int n_max, const VerifyOptions& options) {
  check_range("n_max", n_max, 2, kSearchMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("lemma14", range_of(2, n_max));
  r.notes.push_back("every two-factor product is a case; only those with three or more blocks can violate");
  Json per_n = Json::array();
  for (int n = 2; n <= n_max; ++n) {
    const auto chunks = scan_products(n, 2, options, [n](const ProductSpace& space, std::uint64_t i, ProductScanChunk& c) {
      ++c.inspected;
      if (space.cycle_type_at(i).size() < 3) return;
      // `classified` counts products with >= 3 blocks here.
      ++c.classified;
      const Gf2Mat a = space.realize_at(i);
      const auto cls = element_check(a);
      if (!cls) return;
      ++c.classes[{cls->f, cls->d}];
      if (cls->trivial()) return;
      Json payload = product_payload(n, space.at(i), a);
      payload["class"] = to_json(*cls);
      c.violations.push_back(std::move(payload));
    });
    ProductScanChunk total;
    for (const auto& c : chunks) {
      total.inspected += c.inspected;
      total.classified += c.classified;
      for (const auto& [key, hits] : c.classes) total.classes[key] += hits;
      r.violations.insert(r.violations.end(), c.violations.begin(), c.violations.end());
    }
    r.cases_checked += total.inspected;
    per_n.push_back({{"n", n},
                     {"products", total.inspected},
                     {"products_with_3plus_blocks", total.classified},
                     {"classes_with_3plus_blocks", classes_json(total.classes)}});
    if (options.fail_fast && !r.violations.empty()) break;
  }
  trim_for_fail_fast(r, options);
  r.details["per_n"] = per_n;
  finish(r, start);
  return r;
}

VerifyReport verify_prop11(int deg_max, int d_max, const VerifyOptions& options) {
  check_range("deg_max", deg_max, 1, kProp11MaxDegree);
  check_range("d_max", d_max, 1, kProp11MaxExponent);
  const auto start = Clock::now();
  VerifyReport r = start_report("prop11", range_of(1, deg_max));
  std::uint64_t heavy_irreducibles = 0;
  for (int deg = 1; deg <= deg_max; ++deg) {
    for (const Gf2Poly& f : enumerate_irreducibles(deg)) {
      if (f.weight() < 5) continue;
      ++heavy_irreducibles;
      for (int d = 1; d <= d_max; ++d) {
        ++r.cases_checked;
        const Gf2Poly power = pow(f, d);
        if (power.weight() < 5) {
          r.violations.push_back({{"check", "power"},
                                  {"f", f.to_string()},
                                  {"d", d},
                                  {"power", power.to_string()},
                                  {"weight", power.weight()}});
          if (options.fail_fast) {
            finish(r, start);
            return r;
          }
        }
      }
    }
  }
  // weight(p^2) == weight(p) for every p of degree <= deg_max.
  const Gf2Poly::Word limit = Gf2Poly::Word{1} << (deg_max + 1);
  for (Gf2Poly::Word bits = 1; bits < limit; ++bits) {
    ++r.cases_checked;
    const Gf2Poly p = Gf2Poly::from_bits(bits);
    const Gf2Poly square = p * p;
    if (square.weight() != p.weight()) {
      r.violations.push_back({{"check", "square"}, {"p", p.to_string()}, {"square", square.to_string()}});
      if (options.fail_fast) {
        finish(r, start);
        return r;
      }
    }
  }
  r.details["irreducibles_with_weight_ge_5"] = heavy_irreducibles;
  r.details["d_max"] = d_max;
  finish(r, start);
  return r;
}

VerifyReport converse_scan(int n, const VerifyOptions& options) {
  check_range("n", n, 2, kSearchMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("converse", {n});
  r.notes.push_back(kKeyedOnMinimalPolynomialNote);
  // Same results as min_xor_count_for_poly(f, n, 2) per polynomial, from a
  // single classification pass.
  const auto table = min_xor_count_table(n, 2, ScanOptions{options.threads, kSearchMaxDim});
  Json findings = Json::array();
  for (const auto& row : table) {
    if (row.poly.weight() > 5) continue;
    ++r.cases_checked;
    if (row.t) continue;
    findings.push_back({{"poly", row.poly.to_string()}, {"weight", row.poly.weight()}, {"n", n}});
    if (row.poly.weight() == 3) {
      r.violations.push_back({{"poly", row.poly.to_string()},
                              {"n", n},
                              {"reason", "irreducible trinomial without a one-factor implementation"}});
    }
  }
  r.details["findings"] = findings;
  finish(r, start);
  return r;
}

VerifyReport verify_converse(int n_max, const VerifyOptions& options) {
  check_range("n_max", n_max, 2, kSearchMaxDim);
  const auto start = Clock::now();
  VerifyReport r = start_report("converse", range_of(2, n_max));
  r.notes.push_back(kKeyedOnMinimalPolynomialNote);
  Json findings = Json::array();
  for (int n = 2; n <= n_max; ++n) {
    const VerifyReport part = converse_scan(n, options);
    r.cases_checked += part.cases_checked;
    r.violations.insert(r.violations.end(), part.violations.begin(), part.violations.end());
    for (const auto& f : part.details.at("findings")) findings.push_back(f);
  }
  if (findings.empty()) {
    r.violations.push_back({{"reason", "every irreducible of weight <= 5 reached XOR-count <= 2"},
                            {"n_max", n_max}});
  }
  r.details["findings"] = findings;
  finish(r, start);
  return r;
}

}  // namespace xorcount
