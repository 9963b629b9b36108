#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "xorcount/report.hpp"

namespace xorcount {

/// Outcome of one exhaustive claim check. `violations` holds replayable
/// counterexample payloads; the check passes iff it is empty.
struct VerifyReport {
  std::string claim_id;
  std::vector<int> n_range;
  std::uint64_t cases_checked = 0;
  std::vector<Json> violations;
  std::int64_t elapsed_ms = 0;
  std::vector<std::string> notes;
  /// Claim-specific records (witnesses, findings, counts).
  Json details = Json::object();

  bool passed() const { return violations.empty(); }
  Json to_json(bool include_timing = true) const;
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Stop scanning once a violation is known.
  bool fail_fast = false;
};

/// Largest n for the determinant identities.
inline constexpr int kIdentityMaxDim = 12;
/// Largest n for the second-minor check.
inline constexpr int kSecondMinorMaxDim = 8;
inline constexpr int kProp11MaxDegree = 10;
inline constexpr int kProp11MaxExponent = 7;

/// det((C_{x^n+1} + xI)^{(i,j)}): x^{i-j-1} for i > j, x^{n+i-j-1} otherwise.
Gf2Poly eq1_closed_form(int n, int i, int j);
/// Char poly of C_{x^n+1}(I + E_{i,j}): x^n + x^{i-j} + 1 for i > j,
/// x^n + x^{n+i-j} + 1 otherwise.
Gf2Poly eq2_closed_form(int n, int i, int j);

using ClosedForm = std::function<Gf2Poly(int n, int i, int j)>;

/// All 2 <= n <= n_max and 1 <= i, j <= n.
VerifyReport verify_eq1(int n_max, const VerifyOptions& options = {});
/// All 2 <= n <= n_max and i != j, against `closed_form` (swappable so the
/// harness itself can be mutation-tested).
VerifyReport verify_eq2(int n_max, const VerifyOptions& options = {}, const ClosedForm& closed_form = eq2_closed_form);
/// Second minors (C_{x^n+1} + xI)^{(i,j)(k,l)} have determinant 0 or x^e,
/// for 3 <= n <= n_max and every index quadruple.
VerifyReport verify_second_minors(int n_max, const VerifyOptions& options = {});
/// Element classes achieved with one factor are exactly the irreducible
/// trinomials of degree n, for 2 <= n <= n_max.
VerifyReport verify_theorem1(int n_max, const VerifyOptions& options = {});
/// Every non-trivially classified two-factor product has weight(f) <= 5.
VerifyReport verify_conjecture(int n_max, const VerifyOptions& options = {});
/// No two-factor product with three or more cycle blocks classifies as a
/// non-trivial element.
VerifyReport verify_lemma14(int n_max, const VerifyOptions& options = {});
/// weight(f^d) >= 5 for irreducible f of weight >= 5, deg f <= deg_max,
/// d <= d_max; and weight(p^2) == weight(p) for every p of degree <= deg_max.
VerifyReport verify_prop11(int deg_max, int d_max, const VerifyOptions& options = {});
/// Irreducibles of degree n and weight <= 5 whose XOR-count exceeds 2,
/// listed under details["findings"]. A trinomial among them is a violation.
VerifyReport converse_scan(int n, const VerifyOptions& options = {});
/// Union of converse_scan over 2..n_max; fails when the union is empty.
VerifyReport verify_converse(int n_max, const VerifyOptions& options = {});

}  // namespace xorcount
