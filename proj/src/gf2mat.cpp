#include "xorcount/gf2mat.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xorcount {

namespace {

void check_dim(int n) {
  if (n < 1 || n > Gf2Mat::kMaxDim) {
    throw std::out_of_range("matrix dimension " + std::to_string(n) + " outside 1.." +
                            std::to_string(Gf2Mat::kMaxDim));
  }
}

void check_index(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 1.." + std::to_string(n));
  }
}

Gf2Mat::Row full_mask(int n) { return n >= 32 ? ~Gf2Mat::Row{0} : (Gf2Mat::Row{1} << n) - 1; }

// Drops bit `col` and shifts higher bits down by one.
Gf2Mat::Row drop_bit(Gf2Mat::Row r, int col) {
  const Gf2Mat::Row low = r & ((Gf2Mat::Row{1} << col) - 1);
  const Gf2Mat::Row high = (r >> (col + 1)) << col;
  return low | high;
}

}  // namespace

Gf2Mat::Gf2Mat(int n) : n_(n) { check_dim(n); }

Gf2Mat Gf2Mat::identity(int n) {
  Gf2Mat m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = Row{1} << i;
  return m;
}

Gf2Mat Gf2Mat::unit(int n, int i, int j) {
  Gf2Mat m(n);
  check_index(n, i, j);
  m.set(i, j, true);
  return m;
}

Gf2Mat Gf2Mat::permutation(std::span<const int> image) {
  Gf2Mat m(static_cast<int>(image.size()));
  Row seen = 0;
  for (int j = 1; j <= m.n_; ++j) {
    const int i = image[j - 1];
    check_index(m.n_, i, j);
    if (seen & (Row{1} << (i - 1))) throw std::invalid_argument("permutation image repeats " + std::to_string(i));
    seen |= Row{1} << (i - 1);
    m.set(i, j, true);
  }
  return m;
}

Gf2Mat Gf2Mat::from_rows(std::span<const Row> rows) {
  Gf2Mat m(static_cast<int>(rows.size()));
  const Row mask = full_mask(m.n_);
  for (int i = 0; i < m.n_; ++i) {
    if (rows[i] & ~mask) throw std::invalid_argument("row " + std::to_string(i + 1) + " has bits past column n");
    m.rows_[i] = rows[i];
  }
  return m;
}

bool Gf2Mat::get(int i, int j) const {
  check_index(n_, i, j);
  return (rows_[i - 1] >> (j - 1)) & 1;
}

void Gf2Mat::set(int i, int j, bool value) {
  check_index(n_, i, j);
  const Row mask = Row{1} << (j - 1);
  rows_[i - 1] = value ? (rows_[i - 1] | mask) : (rows_[i - 1] & ~mask);
}

void Gf2Mat::flip(int i, int j) {
  check_index(n_, i, j);
  rows_[i - 1] ^= Row{1} << (j - 1);
}

Gf2Mat::Row Gf2Mat::row(int i) const {
  check_index(n_, i, 1);
  return rows_[i - 1];
}

Gf2Mat::Row Gf2Mat::column(int j) const {
  check_index(n_, 1, j);
  Row c = 0;
  for (int i = 0; i < n_; ++i) c |= ((rows_[i] >> (j - 1)) & 1) << i;
  return c;
}

int Gf2Mat::weight() const {
  int w = 0;
  for (int i = 0; i < n_; ++i) w += std::popcount(rows_[i]);
  return w;
}

bool Gf2Mat::is_permutation() const {
  Row seen = 0;
  for (int i = 0; i < n_; ++i) {
    if (!std::has_single_bit(rows_[i]) || (seen & rows_[i])) return false;
    seen |= rows_[i];
  }
  return true;
}

std::vector<int> Gf2Mat::permutation_image() const {
  if (!is_permutation()) throw std::invalid_argument("matrix is not a permutation matrix");
  std::vector<int> image(n_);
  for (int i = 0; i < n_; ++i) image[std::countr_zero(rows_[i])] = i + 1;
  return image;
}

void Gf2Mat::add_column(int i, int j) {
  check_index(n_, i, j);
  const int src = i - 1;
  const Row dst = Row{1} << (j - 1);
  for (int r = 0; r < n_; ++r) {
    if ((rows_[r] >> src) & 1) rows_[r] ^= dst;
  }
}

void Gf2Mat::add_row(int i, int j) {
  check_index(n_, i, j);
  rows_[i - 1] ^= rows_[j - 1];
}

Gf2Mat Gf2Mat::transpose() const {
  Gf2Mat t(n_);
  for (int j = 1; j <= n_; ++j) t.rows_[j - 1] = column(j);
  return t;
}

Gf2Mat::Row Gf2Mat::apply(Row v) const {
  Row out = 0;
  for (int i = 0; i < n_; ++i) out |= static_cast<Row>(std::popcount(rows_[i] & v) & 1) << i;
  return out;
}

Gf2Mat operator*(const Gf2Mat& a, const Gf2Mat& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in matrix product");
  Gf2Mat out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    Gf2Mat::Row acc = 0;
    for (Gf2Mat::Row r = a.rows_[i]; r != 0; r &= r - 1) acc ^= b.rows_[std::countr_zero(r)];
    out.rows_[i] = acc;
  }
  return out;
}

Gf2Mat operator+(const Gf2Mat& a, const Gf2Mat& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in matrix sum");
  Gf2Mat out(a.n_);
  for (int i = 0; i < a.n_; ++i) out.rows_[i] = a.rows_[i] ^ b.rows_[i];
  return out;
}

std::vector<std::string> Gf2Mat::row_strings() const {
  std::vector<std::string> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int j = 0; j < n_; ++j) {
      if ((rows_[i] >> j) & 1) s[j] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

Gf2Mat Gf2Mat::from_row_strings(std::span<const std::string> rows) {
  const int n = static_cast<int>(rows.size());
  Gf2Mat m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has length " +
                                  std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c == '1') {
        m.rows_[i] |= Row{1} << j;
      } else if (c != '0') {
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in matrix row");
      }
    }
  }
  return m;
}

std::string Gf2Mat::to_text() const {
  std::string out;
  for (const auto& r : row_strings()) {
    out += r;
    out += '\n';
  }
  return out;
}

Gf2Mat Gf2Mat::parse_text(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  return from_row_strings(rows);
}

std::string Gf2Mat::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["rows"] = row_strings();
  return j.dump();
}

Gf2Mat Gf2Mat::parse_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const auto rows = j.at("rows").get<std::vector<std::string>>();
  if (j.at("n").get<int>() != static_cast<int>(rows.size())) {
    throw std::invalid_argument("JSON matrix: n does not match the number of rows");
  }
  return from_row_strings(rows);
}

Gf2Mat companion(const Gf2Poly& q) {
  const int n = q.degree();
  if (n < 1) throw std::invalid_argument("companion matrix needs a polynomial of degree >= 1");
  Gf2Mat c(n);
  for (int i = 2; i <= n; ++i) c.set(i, i - 1, true);
  for (int i = 1; i <= n; ++i) c.set(i, n, q.coeff(i - 1));
  return c;
}

Gf2Mat block_diag(std::span<const Gf2Mat> blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diag needs at least one block");
  int n = 0;
  for (const auto& b : blocks) n += b.dim();
  Gf2Mat out(n);
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 1; i <= b.dim(); ++i) {
      for (Gf2Mat::Row r = b.row(i); r != 0; r &= r - 1) {
        out.set(offset + i, offset + std::countr_zero(r) + 1, true);
      }
    }
    offset += b.dim();
  }
  return out;
}

std::optional<Gf2Mat> inverse(const Gf2Mat& a) {
  const int n = a.dim();
  std::vector<Gf2Mat::Row> left(a.rows().begin(), a.rows().end());
  std::vector<Gf2Mat::Row> right(n);
  for (int i = 0; i < n; ++i) right[i] = Gf2Mat::Row{1} << i;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if ((left[r] >> col) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != col && ((left[r] >> col) & 1)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  return Gf2Mat::from_rows(right);
}

int rank(const Gf2Mat& a) {
  std::vector<Gf2Mat::Row> rows(a.rows().begin(), a.rows().end());
  int rk = 0;
  for (int col = 0; col < a.dim() && rk < a.dim(); ++col) {
    const Gf2Mat::Row bit = Gf2Mat::Row{1} << col;
    auto it = std::find_if(rows.begin() + rk, rows.end(), [&](Gf2Mat::Row r) { return r & bit; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rk, it);
    for (int r = rk + 1; r < a.dim(); ++r) {
      if (rows[r] & bit) rows[r] ^= rows[rk];
    }
    ++rk;
  }
  return rk;
}

bool det(const Gf2Mat& a) { return rank(a) == a.dim(); }

Gf2Mat minor_delete(const Gf2Mat& a, int i, int j) {
  const int n = a.dim();
  if (n < 2) throw std::invalid_argument("cannot delete a row and column of a 1x1 matrix");
  check_index(n, i, j);
  std::vector<Gf2Mat::Row> rows;
  rows.reserve(n - 1);
  for (int r = 1; r <= n; ++r) {
    if (r != i) rows.push_back(drop_bit(a.row(r), j - 1));
  }
  return Gf2Mat::from_rows(rows);
}

Gf2Mat minor_delete_original(const Gf2Mat& a, int i1, int j1, int i2, int j2) {
  if (i1 == i2 || j1 == j2) throw std::invalid_argument("double deletion needs distinct rows and columns");
  if (a.dim() < 3) throw std::invalid_argument("double deletion needs dimension >= 3");
  check_index(a.dim(), i1, j1);
  check_index(a.dim(), i2, j2);
  // After removing (i1, j1), later indices shift down by one.
  return minor_delete(minor_delete(a, i1, j1), i2 > i1 ? i2 - 1 : i2, j2 > j1 ? j2 - 1 : j2);
}

Gf2Mat poly_eval_matrix(const Gf2Poly& p, const Gf2Mat& a) {
  Gf2Mat acc = Gf2Mat::zero(a.dim());
  const Gf2Mat id = Gf2Mat::identity(a.dim());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    if (p.coeff(k)) acc = acc + id;
  }
  return acc;
}

Gf2Poly char_poly(const Gf2Mat& a) { return sym_det(PolyMat::plus_lambda(a)); }

Gf2Poly min_poly(const Gf2Mat& a) {
  const int n = a.dim();
  using Vec = Gf2Mat::Row;
  struct Entry {
    Vec vec = 0;
    std::uint64_t combo = 0;
  };
  Gf2Poly result = Gf2Poly::one();
  for (int k = 0; k < n; ++k) {
    std::array<Entry, Gf2Mat::kMaxDim> basis{};
    std::array<bool, Gf2Mat::kMaxDim> used{};
    Vec w = Vec{1} << k;
    for (int power = 0; power <= n; ++power) {
      Vec cur = w;
      std::uint64_t combo = std::uint64_t{1} << power;
      while (cur != 0) {
        const int pivot = std::countr_zero(cur);
        if (!used[pivot]) break;
        cur ^= basis[pivot].vec;
        combo ^= basis[pivot].combo;
      }
      if (cur == 0) {
        result = lcm(result, Gf2Poly::from_bits(combo));
        break;
      }
      const int pivot = std::countr_zero(cur);
      used[pivot] = true;
      basis[pivot] = {cur, combo};
      w = a.apply(w);
    }
  }
  return result;
}

PolyMat::PolyMat(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw std::out_of_range("PolyMat dimension must be >= 1");
}

PolyMat PolyMat::plus_lambda(const Gf2Mat& a) {
  const int n = a.dim();
  PolyMat m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Gf2Poly::Word bits = a.get(i, j) ? 1 : 0;
      if (i == j) bits |= 2;
      m.at(i, j) = Gf2Poly::from_bits(bits);
    }
  }
  return m;
}

PolyMat PolyMat::lambda_identity(int n) {
  PolyMat m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Gf2Poly::x();
  return m;
}

const Gf2Poly& PolyMat::at(int i, int j) const {
  check_index(n_, i, j);
  return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

Gf2Poly& PolyMat::at(int i, int j) {
  check_index(n_, i, j);
  return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

PolyMat minor_delete(const PolyMat& m, int i, int j) {
  const int n = m.dim();
  if (n < 2) throw std::invalid_argument("cannot delete a row and column of a 1x1 matrix");
  check_index(n, i, j);
  PolyMat out(n - 1);
  for (int r = 1, rr = 1; r <= n; ++r) {
    if (r == i) continue;
    for (int c = 1, cc = 1; c <= n; ++c) {
      if (c == j) continue;
      out.at(rr, cc++) = m.at(r, c);
    }
    ++rr;
  }
  return out;
}

PolyMat minor_delete_original(const PolyMat& m, int i1, int j1, int i2, int j2) {
  if (i1 == i2 || j1 == j2) throw std::invalid_argument("double deletion needs distinct rows and columns");
  if (m.dim() < 3) throw std::invalid_argument("double deletion needs dimension >= 3");
  check_index(m.dim(), i1, j1);
  check_index(m.dim(), i2, j2);
  return minor_delete(minor_delete(m, i1, j1), i2 > i1 ? i2 - 1 : i2, j2 > j1 ? j2 - 1 : j2);
}

Gf2Poly sym_det(PolyMat m) {
  const int n = m.dim();
  // Row swaps do not change the sign in characteristic 2.
  Gf2Poly previous = Gf2Poly::one();
  for (int k = 1; k < n; ++k) {
    int pivot = k;
    while (pivot <= n && m.at(pivot, k).is_zero()) ++pivot;
    if (pivot > n) return {};
    if (pivot != k) {
      for (int c = k; c <= n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
    }
    const Gf2Poly& akk = m.at(k, k);
    for (int i = k + 1; i <= n; ++i) {
      const Gf2Poly& aik = m.at(i, k);
      for (int j = k + 1; j <= n; ++j) {
        Gf2Poly num = akk * m.at(i, j) + aik * m.at(k, j);
        auto [q, r] = divmod(num, previous);
        if (!r.is_zero()) throw std::logic_error("Bareiss step left a nonzero remainder");
        m.at(i, j) = std::move(q);
      }
    }
    previous = akk;
  }
  return m.at(n, n);
}

}  // namespace xorcount
