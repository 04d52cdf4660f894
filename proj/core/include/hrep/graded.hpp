#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hrep/sparse.hpp"

namespace hrep {

/// (-1)^(a*b).
constexpr int koszul_sign(int deg_a, int deg_b) { return ((deg_a * deg_b) % 2 == 0) ? 1 : -1; }

/// (-1)^n.
constexpr int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Finite-dimensional Z-graded space, stored by dimension per degree.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::map<int, std::size_t> dims);
  /// Space whose basis vector i sits in degree degrees[i]; degrees must be non-decreasing.
  static GradedSpace from_basis_degrees(const std::vector<int>& degrees);

  const std::map<int, std::size_t>& dims() const { return dims_; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  /// Index of the first basis vector of `degree` in the flattened basis.
  std::size_t offset(int degree) const;
  /// Degree of each flattened basis vector, in order.
  std::vector<int> basis_degrees() const;
  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::map<int, std::size_t> dims_;
};

/// Homogeneous map of a fixed degree, stored as one block per source degree.
class GradedMap {
 public:
  GradedMap(GradedSpace source, GradedSpace target, int degree);
  GradedMap(GradedSpace source, GradedSpace target, int degree, std::map<int, SparseMatrix> blocks);

  /// Splits a flattened matrix into blocks; throws if it is not homogeneous of `degree`.
  static GradedMap from_flat(GradedSpace source, GradedSpace target, int degree, const SparseMatrix& flat);

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  int degree() const { return degree_; }
  /// Block from source degree d to target degree d + degree().
  SparseMatrix block(int source_degree) const;
  void set_block(int source_degree, SparseMatrix m);
  SparseMatrix flat() const;

  friend GradedMap compose(const GradedMap& after, const GradedMap& before);

 private:
  GradedSpace source_;
  GradedSpace target_;
  int degree_;
  std::map<int, SparseMatrix> blocks_;
};

/// Cochain complex with C^n of dimension dim(n) and d_n : C^n -> C^{n+1}
/// stored as a dim(n+1) x dim(n) matrix. Missing differentials are zero.
class CochainComplex {
 public:
  CochainComplex() = default;

  void set_space(int degree, std::size_t dim) { dims_[degree] = dim; }
  /// Throws std::invalid_argument if the shape disagrees with known dims.
  void set_differential(int degree, SparseMatrix d);

  std::size_t dim(int degree) const;
  SparseMatrix differential(int degree) const;
  bool has_differential(int degree) const { return diffs_.count(degree) != 0; }
  const std::map<int, std::size_t>& dims() const { return dims_; }

 private:
  std::map<int, std::size_t> dims_;
  std::map<int, SparseMatrix> diffs_;
};

struct SquareZeroFailure {
  int degree;                     // d_{degree+1} * d_degree != 0
  std::size_t witness_column;     // basis vector of C^degree
  std::vector<Rational> witness;  // image under d_{degree+1} d_degree
};

struct SquareZeroReport {
  std::vector<SquareZeroFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks d_{n+1} d_n = 0 for every n with lo <= n <= hi (all stored degrees
/// when no range is given). Shape mismatches throw std::invalid_argument.
SquareZeroReport check_square_zero(const CochainComplex& c, std::optional<std::pair<int, int>> range = {});

struct CohomologyEntry {
  int degree;
  std::size_t ker;
  std::size_t im;
  std::size_t H;
  friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

struct CohomologyReport {
  std::vector<CohomologyEntry> entries;
  std::size_t dim(int degree) const;
  long euler_characteristic() const;
};

/// Dimensions of H^n for lo <= n <= hi. Throws std::domain_error if d^2 != 0
/// on [lo-1, hi].
CohomologyReport cohomology(const CochainComplex& c, int lo, int hi);

}  // namespace hrep
