#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "hrep/matrix.hpp"
#include "hrep/rational.hpp"

namespace hrep {

/// Coordinate-format rational matrix. Entries are kept canonical: sorted
/// row-major, duplicates summed, zeros dropped.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const RationalMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational at(std::size_t r, std::size_t c) const;
  RationalMatrix to_dense() const;
  SparseMatrix transposed() const;

  /// Column c as a dense vector.
  std::vector<Rational> column(std::size_t c) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix scaled(const SparseMatrix& a, const Rational& s);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void canonicalize();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

/// Incremental builder; duplicate coordinates accumulate.
class SparseBuilder {
 public:
  SparseBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  void add(std::size_t r, std::size_t c, const Rational& v);
  SparseMatrix build() &&;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseMatrix::Entry> entries_;
};

/// Exact rank by fraction-free elimination on integer-scaled rows.
std::size_t rank(const SparseMatrix& m);

}  // namespace hrep
