#include "xorcount/xorform.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "xorcount/parallel.hpp"

namespace xorcount {

namespace {

void check_factor_count(int t) {
  if (t < 0 || t > kMaxFactors) {
    throw std::out_of_range("factor count " + std::to_string(t) + " outside 0.." + std::to_string(kMaxFactors));
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("cycle type needs at least one part");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("cycle type parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("cycle type parts must be descending");
  }
}

int CycleType::dim() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string CycleType::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

std::vector<CycleType> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions need n >= 1");
  std::vector<CycleType> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::uint64_t partition_count(int n) { return partitions(n).size(); }

Gf2Mat cycle_block_matrix(const CycleType& type) {
  Gf2Mat m(type.dim());
  int offset = 0;
  for (int part : type.parts()) {
    // Local e_k -> e_{k+1}, e_part -> e_1.
    for (int k = 1; k < part; ++k) m.set(offset + k + 1, offset + k, true);
    m.set(offset + 1, offset + part, true);
    offset += part;
  }
  return m;
}

void validate(const XorProduct& x) {
  const int n = x.dim();
  for (const auto& f : x.factors) {
    if (f.row < 1 || f.row > n || f.col < 1 || f.col > n) {
      throw std::invalid_argument("factor (" + std::to_string(f.row) + "," + std::to_string(f.col) +
                                  ") outside 1.." + std::to_string(n));
    }
    if (f.row == f.col) throw std::invalid_argument("factor (i,j) needs i != j");
  }
}

Gf2Mat realize(const XorProduct& x) {
  validate(x);
  Gf2Mat m = cycle_block_matrix(x.cycle_type);
  for (const auto& f : x.factors) m.add_column(f.row, f.col);
  return m;
}

Gf2Mat PermutedProduct::realize() const {
  Gf2Mat m = Gf2Mat::permutation(permutation);
  for (const auto& f : factors) {
    if (f.row == f.col) throw std::invalid_argument("factor (i,j) needs i != j");
    m.add_column(f.row, f.col);
  }
  return m;
}

CycleNormalForm cycle_normal_form(const Gf2Mat& p) {
  const std::vector<int> image = p.permutation_image();
  const int n = p.dim();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[k]; k = image[k - 1]) {
      seen[k] = true;
      cycle.push_back(k);
    }
    cycles.push_back(std::move(cycle));
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  std::vector<int> relabel(n);
  std::vector<int> parts;
  int offset = 0;
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) relabel[cycle[k] - 1] = offset + static_cast<int>(k) + 1;
    offset += static_cast<int>(cycle.size());
    parts.push_back(static_cast<int>(cycle.size()));
  }
  return {CycleType(std::move(parts)), Gf2Mat::permutation(relabel)};
}

XorProduct to_cycle_normal_form(const PermutedProduct& product, Gf2Mat* conjugator) {
  const CycleNormalForm form = cycle_normal_form(Gf2Mat::permutation(product.permutation));
  // Conjugating by Q maps E_{i,j} to E_{s(i),s(j)} where Q e_k = e_{s(k)}.
  const std::vector<int> relabel = form.conjugator.permutation_image();
  XorProduct out{form.type, {}};
  for (const auto& f : product.factors) out.factors.push_back({relabel[f.row - 1], relabel[f.col - 1]});
  if (conjugator) *conjugator = form.conjugator;
  return out;
}

ProductSpace::ProductSpace(int n, int t) : n_(n), t_(t) {
  if (n < 1 || n > kEnumerationMaxDim) {
    throw std::out_of_range("enumeration dimension " + std::to_string(n) + " outside 1.." +
                            std::to_string(kEnumerationMaxDim));
  }
  check_factor_count(t);
  pairs_ = static_cast<std::uint64_t>(n) * (n - 1);
  tuples_ = 1;
  for (int k = 0; k < t; ++k) tuples_ *= pairs_;
  partitions_ = partitions(n);
  for (const auto& p : partitions_) bases_.push_back(cycle_block_matrix(p));
}

Transvection ProductSpace::pair_at(std::uint64_t p) const {
  const int i = static_cast<int>(p / (n_ - 1)) + 1;
  const int jj = static_cast<int>(p % (n_ - 1)) + 1;
  return {i, jj < i ? jj : jj + 1};
}

XorProduct ProductSpace::at(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("product index past the end");
  XorProduct x{partitions_[index / tuples_], std::vector<Transvection>(t_)};
  std::uint64_t rest = index % tuples_;
  for (int k = t_ - 1; k >= 0; --k) {
    x.factors[k] = pair_at(rest % pairs_);
    rest /= pairs_;
  }
  return x;
}

Gf2Mat ProductSpace::realize_at(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("product index past the end");
  Gf2Mat m = bases_[index / tuples_];
  std::uint64_t divisor = tuples_;
  const std::uint64_t rest = index % tuples_;
  for (int k = 0; k < t_; ++k) {
    divisor /= pairs_;
    const Transvection f = pair_at((rest / divisor) % pairs_);
    m.add_column(f.row, f.col);
  }
  return m;
}

std::optional<ElementClass> element_check(const Gf2Mat& a) {
  if (!det(a)) throw std::invalid_argument("element_check needs an invertible matrix");
  const Gf2Poly chi = char_poly(a);
  const auto power = factor_as_power(chi);
  if (!power) return std::nullopt;
  // With d = 1 the minimal polynomial is the irreducible char poly itself.
  if (power->exponent > 1 && min_poly(a) != power->base) return std::nullopt;
  return ElementClass{power->base, power->base.degree(), power->exponent, a.dim()};
}

namespace {

struct StripSearch {
  int n;
  std::optional<std::vector<Transvection>> best;
  std::vector<int> best_permutation;
  std::vector<Transvection> stripped;

  void run(const Gf2Mat& b, int remaining) {
    if (remaining == 0) {
      if (!b.is_permutation()) return;
      std::vector<Transvection> factors(stripped.rbegin(), stripped.rend());
      if (!best || factors < *best) {
        best = std::move(factors);
        best_permutation = b.permutation_image();
      }
      return;
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        // Repeating the previous factor cancels it; such words are shorter.
        if (!stripped.empty() && stripped.back() == Transvection{i, j}) continue;
        Gf2Mat next = b;
        next.add_column(i, j);
        stripped.push_back({i, j});
        run(next, remaining - 1);
        stripped.pop_back();
      }
    }
  }
};

}  // namespace

ExactCount xor_count_exact(const Gf2Mat& a, int t_max) {
  if (a.dim() > kSearchMaxDim) {
    throw std::out_of_range("xor_count_exact supports n <= " + std::to_string(kSearchMaxDim));
  }
  check_factor_count(t_max);
  if (!det(a)) throw std::invalid_argument("xor_count_exact needs an invertible matrix");
  for (int t = 0; t <= t_max; ++t) {
    StripSearch search{a.dim(), std::nullopt, {}, {}};
    search.run(a, t);
    if (search.best) {
      return {t, t_max, PermutedProduct{search.best_permutation, *search.best}};
    }
  }
  return {std::nullopt, t_max, std::nullopt};
}

namespace {

void check_search_args(int n, int t_max, const ScanOptions& options) {
  if (n < 1 || n > options.max_dim || options.max_dim > kEnumerationMaxDim) {
    throw std::out_of_range("search dimension " + std::to_string(n) + " outside 1.." +
                            std::to_string(std::min(options.max_dim, kEnumerationMaxDim)));
  }
  check_factor_count(t_max);
}

}  // namespace

SearchReport min_xor_count_for_poly(const Gf2Poly& f, int n, int t_max, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (f.degree() < 1) throw std::invalid_argument("polynomial " + f.to_string() + " is constant");
  if (auto factor = smallest_factor(f)) {
    throw std::invalid_argument("polynomial " + f.to_string() + " is reducible: factor " + factor->to_string());
  }
  const int m = f.degree();
  if (n % m != 0) {
    throw std::invalid_argument("degree " + std::to_string(m) + " does not divide n = " + std::to_string(n));
  }
  check_search_args(n, t_max, options);

  const int d = n / m;
  const Gf2Poly target_char = pow(f, d);
  auto matches = [&](const Gf2Mat& a) {
    if (char_poly(a) != target_char) return false;
    return d == 1 || min_poly(a) == f;
  };

  SearchReport report;
  report.poly = f;
  report.n = n;
  report.t_max = t_max;
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  for (int t = 0; t <= t_max && !report.t; ++t) {
    const ProductSpace space(n, t);
    std::atomic<std::uint64_t> best{kNone};
    const auto hits = parallel_chunks<std::uint64_t>(space.size(), options.threads, [&](IndexRange r) {
      for (std::uint64_t i = r.begin; i < r.end && i < best.load(std::memory_order_relaxed); ++i) {
        if (matches(space.realize_at(i))) {
          for (auto cur = best.load(); i < cur && !best.compare_exchange_weak(cur, i);) {
          }
          return i;
        }
      }
      return kNone;
    });
    const std::uint64_t first = *std::min_element(hits.begin(), hits.end());
    if (first != kNone) {
      report.t = t;
      report.witness = space.at(first);
      report.products_scanned += first + 1;
    } else {
      report.products_scanned += space.size();
    }
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<ClassWitness> scan_classes(int n, int t, const ScanOptions& options) {
  check_search_args(n, t, options);
  const ProductSpace space(n, t);
  using Key = std::pair<Gf2Poly, int>;
  struct Hit {
    ElementClass cls;
    std::uint64_t first_index;
    std::uint64_t hits;
  };
  using Table = std::map<Key, Hit>;
  const auto tables = parallel_chunks<Table>(space.size(), options.threads, [&](IndexRange r) {
    Table table;
    for (std::uint64_t i = r.begin; i < r.end; ++i) {
      const auto cls = element_check(space.realize_at(i));
      if (!cls) continue;
      auto [it, inserted] = table.try_emplace(Key{cls->f, cls->d}, Hit{*cls, i, 0});
      ++it->second.hits;
    }
    return table;
  });

  Table merged;
  for (const auto& table : tables) {
    for (const auto& [key, hit] : table) {
      auto [it, inserted] = merged.try_emplace(key, hit);
      if (!inserted) {
        it->second.first_index = std::min(it->second.first_index, hit.first_index);
        it->second.hits += hit.hits;
      }
    }
  }
  std::vector<ClassWitness> out;
  for (const auto& [key, hit] : merged) out.push_back({hit.cls, space.at(hit.first_index), hit.first_index, hit.hits});
  return out;
}

std::vector<SearchReport> min_xor_count_table(int n, int t_max, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_search_args(n, t_max, options);
  std::vector<SearchReport> rows;
  for (const Gf2Poly& f : enumerate_irreducibles(n)) {
    SearchReport r;
    r.poly = f;
    r.n = n;
    r.t_max = t_max;
    rows.push_back(std::move(r));
  }
  std::uint64_t scanned = 0;
  for (int t = 0; t <= t_max; ++t) {
    const auto unresolved = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.t; });
    if (unresolved == 0) break;
    scanned += ProductSpace(n, t).size();
    for (const auto& c : scan_classes(n, t, options)) {
      if (c.cls.d != 1) continue;
      auto it = std::lower_bound(rows.begin(), rows.end(), c.cls.f,
                                 [](const SearchReport& r, const Gf2Poly& f) { return r.poly < f; });
      if (it != rows.end() && it->poly == c.cls.f && !it->t) {
        it->t = t;
        it->witness = c.witness;
      }
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : rows) {
    r.elapsed_ms = elapsed;
    r.products_scanned = scanned;
  }
  return rows;
}

}  // namespace xorcount
