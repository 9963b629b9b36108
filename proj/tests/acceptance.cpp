#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "xorcount/synth.hpp"
#include "xorcount/verify.hpp"

using namespace xorcount;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && s > budget_s) {
    o.ok = false;
    o.detail += " over time budget of " + std::to_string(static_cast<int>(budget_s)) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s [%.2f s] %s\n", o.ok ? "PASS" : "FAIL", id, title, s, o.detail.c_str());
  std::fflush(stdout);
}

std::string counts(const VerifyReport& r) {
  return r.claim_id + " cases=" + std::to_string(r.cases_checked) + " violations=" + std::to_string(r.violations.size());
}

Outcome from(const std::vector<VerifyReport>& reports) {
  Outcome o;
  for (const auto& r : reports) {
    o.ok = o.ok && r.passed();
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += counts(r);
  }
  return o;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(image);
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

bool trinomial(const Gf2Poly& f) { return f.weight() == 3; }

// Witnesses of every element class reached with t=1 and t=2 for 2 <= n <= 8.
std::vector<ClassWitness> witnesses_by_t[3];

}  // namespace

int main() {
  criterion(1, "minor and trinomial identities, 2 <= n <= 12", 10.0,
            [] { return from({verify_eq1(12), verify_eq2(12)}); });

  criterion(2, "one-XOR elements are exactly the irreducible trinomials, 2 <= n <= 8", 30.0, [] {
    Outcome o = from({verify_theorem1(8)});
    for (int n = 2; n <= 8; ++n) {
      const auto classes = scan_classes(n, 1);
      std::set<Gf2Poly> reached;
      for (const auto& c : classes) {
        witnesses_by_t[1].push_back(c);
        if (!c.cls.trivial()) {
          if (c.cls.d != 1) o.ok = false;
          reached.insert(c.cls.f);
        }
      }
      const auto tri = enumerate_irreducibles(n, 3);
      const std::set<Gf2Poly> expected(tri.begin(), tri.end());
      if (reached != expected) {
        o.ok = false;
        o.detail += " mismatch at n=" + std::to_string(n);
      }
      if (n == 8 && !reached.empty()) o.ok = false;
      o.detail += " n" + std::to_string(n) + ":" + std::to_string(reached.size());
    }
    return o;
  });

  criterion(3, "every two-XOR element has a minimal polynomial of weight <= 5, 2 <= n <= 8", 60.0, [] {
    const auto r = verify_conjecture(8, VerifyOptions{1});
    Outcome o = from({r});
    std::uint64_t expected = 0;
    for (int n = 2; n <= 8; ++n) {
      const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
      expected += partition_count(n) * pairs * pairs;
    }
    if (r.cases_checked != expected) {
      o.ok = false;
      o.detail += " expected " + std::to_string(expected) + " products";
    }
    for (int n = 2; n <= 8; ++n) {
      for (const auto& c : scan_classes(n, 2)) witnesses_by_t[2].push_back(c);
    }
    return o;
  });

  criterion(4, "no two-XOR product with >= 3 cycle blocks is a non-trivial element, n <= 8", 0,
            [] { return from({verify_lemma14(8)}); });

  criterion(5, "weights of odd powers and squares of irreducibles", 5.0, [] {
    Outcome o = from({verify_prop11(8, 7)});
    // Squares over every polynomial of degree <= 10.
    std::uint64_t checked = 0;
    for (Gf2Poly::Word bits = 1; bits < (1u << 11); ++bits) {
      const Gf2Poly f = Gf2Poly::from_bits(bits);
      ++checked;
      if ((f * f).weight() != f.weight()) o.ok = false;
    }
    const auto wide = verify_prop11(10, 7);
    o.ok = o.ok && wide.passed();
    o.detail += "; squares=" + std::to_string(checked) + "; " + counts(wide);
    return o;
  });

  criterion(6, "some irreducible of weight <= 5 needs more than two XORs, n <= 8", 0, [] {
    const auto r = verify_converse(8, VerifyOptions{1});
    Outcome o = from({r});
    const auto& findings = r.details.at("findings");
    o.ok = o.ok && !findings.empty();
    for (const auto& f : findings) {
      if (!o.detail.empty()) o.detail += " ";
      o.detail += f.at("poly").get<std::string>();
    }
    return o;
  });

  criterion(7, "emitted programs match every witness on all inputs with exactly t steps", 0, [] {
    Outcome o;
    std::uint64_t programs = 0, mismatches = 0;
    for (int t = 1; t <= 2; ++t) {
      if (witnesses_by_t[t].empty()) return Outcome{false, "no witnesses collected"};
      for (const auto& c : witnesses_by_t[t]) {
        const XorProgram p = emit_program(c.witness);
        const Gf2Mat a = realize(c.witness);
        ++programs;
        bool good = p.cost() == t;
        for (Gf2Mat::Row v = 0; good && v < (1u << a.dim()); ++v) good = simulate_packed(p, v) == a.apply(v);
        if (!good) ++mismatches;
      }
    }
    o.ok = mismatches == 0;
    o.detail = "programs=" + std::to_string(programs) + " mismatches=" + std::to_string(mismatches);
    return o;
  });

  criterion(8, "companion, determinant, minimal polynomial and XOR-count invariance properties", 0, [] {
    Outcome o;
    std::uint64_t bad = 0;
    // char poly of a companion matrix
    std::uint64_t companions = 0;
    for (Gf2Poly::Word bits = 2; bits < (1u << 11); ++bits) {
      const Gf2Poly q = Gf2Poly::from_bits(bits);
      ++companions;
      if (char_poly(companion(q)) != q || min_poly(companion(q)) != q) ++bad;
    }
    // det(A + E_ij) = det A + det A^(i,j)
    auto expansion_holds = [](const Gf2Mat& a, int i, int j) {
      const int n = a.dim();
      const bool minor = n == 1 ? true : det(minor_delete(a, i, j));
      return det(a + Gf2Mat::unit(n, i, j)) == (det(a) != minor);
    };
    std::uint64_t expansions = 0;
    for (int n = 1; n <= 3; ++n) {
      for (std::uint64_t bits = 0; bits < (1ull << (n * n)); ++bits) {
        Gf2Mat a(n);
        for (int k = 0; k < n * n; ++k) a.set(k / n + 1, k % n + 1, (bits >> k) & 1);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j, ++expansions)
            if (!expansion_holds(a, i, j)) ++bad;
      }
    }
    std::mt19937_64 rng(20240601);
    std::uint64_t divides = 0;
    for (int trial = 0; trial < 10000; ++trial, ++expansions, ++divides) {
      const int n = 1 + static_cast<int>(rng() % 6);
      Gf2Mat a(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a.set(i, j, rng() & 1);
      const int i = 1 + static_cast<int>(rng() % n);
      const int j = 1 + static_cast<int>(rng() % n);
      if (!expansion_holds(a, i, j)) ++bad;
      if (!(char_poly(a) % min_poly(a)).is_zero()) ++bad;
    }
    // invariance over every classified product with n <= 4, t <= 2
    std::uint64_t invariants = 0;
    for (int n = 2; n <= 4; ++n) {
      const auto perms = all_permutations(n);
      for (int t = 0; t <= 2; ++t) {
        for (const auto& x : ProductSpace(n, t)) {
          const Gf2Mat a = realize(x);
          ++divides;
          if (!(char_poly(a) % min_poly(a)).is_zero()) ++bad;
          if (!element_check(a)) continue;
          const auto base = xor_count_exact(a, kMaxFactors);
          if (!base.t || *base.t > t) ++bad;
          if (xor_count_exact(*inverse(a), kMaxFactors).t != base.t) ++bad;
          for (const auto& image : perms) {
            const Gf2Mat q = Gf2Mat::permutation(image);
            ++invariants;
            if (xor_count_exact(q * a * *inverse(q), kMaxFactors).t != base.t) ++bad;
          }
        }
      }
    }
    o.ok = bad == 0;
    o.detail = "companions=" + std::to_string(companions) + " expansions=" + std::to_string(expansions) +
               " divisibility=" + std::to_string(divides) + " conjugations=" + std::to_string(invariants) +
               " failures=" + std::to_string(bad);
    return o;
  });

  criterion(9, "a perturbed trinomial closed form is rejected", 0, [] {
    auto mutated = [](int n, int i, int j) {
      return Gf2Poly::from_exponents({n, i > j ? i - j - 1 : n + i - j, 0});
    };
    const auto r = verify_eq2(12, {}, mutated);
    return Outcome{!r.passed(), "violations=" + std::to_string(r.violations.size())};
  });

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
