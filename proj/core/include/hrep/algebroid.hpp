#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrep/matrix.hpp"
#include "hrep/polynomial.hpp"

namespace hrep {

using Section = std::vector<Polynomial>;      // coordinates in the frame e_0..e_{r-1}
using VectorField = std::vector<Polynomial>;  // coordinates in d/dx_0..d/dx_{n-1}

/// Lie algebroid over a point (chart_dim 0, constant brackets) or over a
/// polynomial chart R^n with a global frame of rank r.
class AlgebroidModel {
 public:
  /// Lie algebra with c[i][j][k] = c_ij^k.
  static AlgebroidModel point(std::size_t rank, std::vector<std::vector<std::vector<Rational>>> c);
  /// anchor[a][j] = j-th component of rho(e_a); c[a][b][k] polynomial structure functions.
  static AlgebroidModel coord(std::size_t chart_dim, std::size_t rank, std::vector<std::vector<Polynomial>> anchor,
                              std::vector<std::vector<std::vector<Polynomial>>> c);
  /// TR^n with the coordinate frame.
  static AlgebroidModel tangent(std::size_t chart_dim);

  std::size_t chart_dim() const { return n_; }
  std::size_t rank() const { return r_; }
  bool is_point() const { return n_ == 0; }
  const Polynomial& anchor(std::size_t a, std::size_t j) const { return anchor_[a][j]; }
  const Polynomial& structure(std::size_t a, std::size_t b, std::size_t k) const { return c_[a][b][k]; }

  /// rho(e_a)(f).
  Polynomial anchor_derivative(std::size_t a, const Polynomial& f) const;
  VectorField anchor_of(const Section& s) const;
  Section bracket(const Section& s, const Section& t) const;
  Section frame(std::size_t a) const;

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<std::vector<Polynomial>> anchor_;
  std::vector<std::vector<std::vector<Polynomial>>> c_;
};

Polynomial directional(const VectorField& x, const Polynomial& f);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

struct AlgebroidCheck {
  bool ok = true;
  std::string failure;  // first failing identity with its indices
};

/// Antisymmetry, Jacobi, anchor-bracket compatibility and Leibniz, as exact
/// polynomial identities.
AlgebroidCheck check_algebroid(const AlgebroidModel& a);

/// Matrix-valued form of arity k on a rank-r algebroid, stored on strictly
/// increasing frame multi-indices. Vector-valued forms have cols == 1.
class AForm {
 public:
  AForm(std::size_t rank, int arity, std::size_t rows, std::size_t cols);

  std::size_t rank() const { return rank_; }
  int arity() const { return arity_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<std::vector<int>, PolyMatrix>& components() const { return values_; }

  /// Value on an arbitrary index list (antisymmetric extension).
  PolyMatrix at(std::vector<int> indices) const;
  /// Sets the value on a strictly increasing index list.
  void set(const std::vector<int>& indices, PolyMatrix value);
  void add(const std::vector<int>& indices, const PolyMatrix& value);

  bool is_zero() const { return values_.empty(); }
  /// Evaluates every component at a point of the chart.
  std::map<std::vector<int>, RationalMatrix> evaluate(std::span<const Rational> point) const;

  AForm& operator+=(const AForm& o);
  friend AForm operator+(AForm a, const AForm& b) { return a += b; }
  friend AForm operator-(AForm a, const AForm& b);
  friend AForm scaled(AForm a, const Rational& s);
  friend bool operator==(const AForm&, const AForm&) = default;

 private:
  void check_shape(const PolyMatrix& m) const;

  std::size_t rank_;
  int arity_;
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::vector<int>, PolyMatrix> values_;
};

/// Scalar (1x1) form from a single component table.
AForm scalar_form(std::size_t rank, int arity, const std::map<std::vector<int>, Polynomial>& values);

/// Wedge product of scalar forms.
AForm wedge(const AForm& a, const AForm& b);

/// Product of a scalar form with a matrix-valued form (scalar on the left).
AForm scalar_times(const AForm& f, const AForm& eta);

/// Koszul differential on forms with trivial coefficients (any matrix shape,
/// differentiated entrywise). Throws std::invalid_argument if arity > rank.
AForm koszul_d(const AlgebroidModel& a, const AForm& omega);

/// Covariant exterior derivative for the A-connection
/// nabla_{e_a} s = rho(e_a)(s) + conn[a] * s acting on the values of eta.
AForm covariant_d(const AlgebroidModel& a, const std::vector<PolyMatrix>& conn, const AForm& eta);

}  // namespace hrep
