#include "hrep/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hrep {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.row >= rows_ || e.col >= cols_) {
      throw std::out_of_range("sparse entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                              ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
  canonicalize();
}

void SparseMatrix::canonicalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!out.empty() && out.back().row == e.row && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      if (!out.empty() && out.back().value == 0) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().value == 0) out.pop_back();
  entries_ = std::move(out);
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Entry> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, i, Rational(1)});
  return SparseMatrix(n, n, std::move(e));
}

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
  std::vector<Entry> e;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) e.push_back({r, c, m(r, c)});
  return SparseMatrix(m.rows(), m.cols(), std::move(e));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::tie(e.row, e.col) < std::tie(k.first, k.second);
                             });
  return (it != entries_.end() && it->row == r && it->col == c) ? it->value : Rational(0);
}

RationalMatrix SparseMatrix::to_dense() const {
  RationalMatrix m(rows_, cols_);
  for (const auto& e : entries_) m(e.row, e.col) = e.value;
  return m;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Entry> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back({x.col, x.row, x.value});
  return SparseMatrix(cols_, rows_, std::move(e));
}

std::vector<Rational> SparseMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_, Rational(0));
  for (const auto& e : entries_)
    if (e.col == c) out[e.row] = e.value;
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("sparse product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  }
  std::vector<std::size_t> row_start(b.rows_ + 1, 0);
  for (const auto& e : b.entries_) ++row_start[e.row + 1];
  std::partial_sum(row_start.begin(), row_start.end(), row_start.begin());
  std::vector<SparseMatrix::Entry> out;
  for (const auto& ea : a.entries_) {
    for (std::size_t k = row_start[ea.col]; k < row_start[ea.col + 1]; ++k) {
      const auto& eb = b.entries_[k];
      out.push_back({ea.row, eb.col, ea.value * eb.value});
    }
  }
  return SparseMatrix(a.rows_, b.cols_, std::move(out));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sparse sum shape mismatch");
  std::vector<SparseMatrix::Entry> e = a.entries_;
  e.insert(e.end(), b.entries_.begin(), b.entries_.end());
  return SparseMatrix(a.rows_, a.cols_, std::move(e));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + scaled(b, Rational(-1)); }

SparseMatrix scaled(const SparseMatrix& a, const Rational& s) {
  if (s == 0) return SparseMatrix(a.rows_, a.cols_);
  SparseMatrix out = a;
  for (auto& e : out.entries_) e.value *= s;
  return out;
}

void SparseBuilder::add(std::size_t r, std::size_t c, const Rational& v) {
  if (v != 0) entries_.push_back({r, c, v});
}

SparseMatrix SparseBuilder::build() && { return SparseMatrix(rows_, cols_, std::move(entries_)); }

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void divide_content(IntRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Returns fa*row - fb*pivot, dropping zeros.
IntRow combine(const IntRow& row, const Integer& fa, const IntRow& pivot, const Integer& fb) {
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      out.emplace_back(i->first, fa * i->second);
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, -(fb * j->second));
      ++j;
    } else {
      Integer v = fa * i->second - fb * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rational_rows(m.rows());
  for (const auto& e : m.entries()) rational_rows[e.row].emplace_back(e.col, e.value);

  std::vector<IntRow> rows;
  for (auto& rr : rational_rows) {
    if (rr.empty()) continue;
    Integer l = 1;
    for (const auto& [c, v] : rr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow row;
    row.reserve(rr.size());
    for (const auto& [c, v] : rr) row.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
    divide_content(row);
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

  std::unordered_map<std::size_t, IntRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const IntRow& p = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
      const Integer fa = p.front().second / g;
      const Integer fb = row.front().second / g;
      row = combine(row, fa, p, fb);
      divide_content(row);
    }
  }
  return pivots.size();
}

}  // namespace hrep
