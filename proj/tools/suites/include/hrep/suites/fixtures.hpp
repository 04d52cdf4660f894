#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hrep/groupoid.hpp"
#include "hrep/polynomial.hpp"
#include "hrep/rep_algebroid.hpp"
#include "hrep/rep_groupoid.hpp"
#include "hrep/smooth_groupoid.hpp"
#include "hrep/van_est.hpp"

namespace hrep::suites {

/// Seeded draws from a small rational lattice.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(int num_range = 5, int den_range = 3);
  Rational nonzero_rational();
  std::vector<Rational> point(std::size_t n);
  std::vector<std::vector<Rational>> points(std::size_t n, int count);
  /// Total degree <= `degree`, `terms` random monomials.
  Polynomial polynomial(std::size_t vars, int degree, std::size_t terms = 5);
  RationalMatrix matrix(std::size_t rows, std::size_t cols);
  RationalMatrix invertible(std::size_t n);
  int uniform(int lo, int hi);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// --- finite groupoids ----------------------------------------------------

/// Fiber Q^2 (degree 0) + Q (degree 1) over a pair groupoid:
/// F_1(p, q) = diag(A_p A_q^-1, b_p / b_q), F_0(x) = b_x r A_x^-1.
RepG pair_rep(Sampler& s, const Nerve& n);
/// phi_0 invertible and degree preserving, phi_1 : E^1 -> E^0 off units.
MorphismG random_gauge(Sampler& s, const Nerve& n);
FiniteCochain random_cochain(Sampler& s, const Nerve& n, int arity, std::size_t width = 1);
/// Fiber Q in degree 0, g acting by -1 on Z/2.
RepG sign_rep(const Nerve& n);

// --- algebroids ----------------------------------------------------------

/// Christoffel symbols with entries of degree <= `degree`.
TMConnection random_connection(Sampler& s, const AlgebroidModel& a, int degree);
AForm random_form(Sampler& s, const AlgebroidModel& a, int arity, std::size_t rows, std::size_t cols, int degree = 2);

// --- smooth groupoids ----------------------------------------------------

/// lambda = 1 + (p - q)^2 on the pair groupoid of R.
EhresmannConn quadratic_conn();
/// lambda = 1 + p (p - q).
EhresmannConn skew_conn();
/// A 2 x 2 splitting on the pair groupoid of R^2, identity on the diagonal.
EhresmannConn planar_conn();
/// Degree preserving unipotent phi_0 and a normalized phi_1 : TM -> A on
/// the pair chart of R^2.
SmoothMorphismG planar_gauge();

SmoothSection random_section(Sampler& s, const SmoothGroupoid& g);
/// Constant on a matrix group, a polynomial on the base of a chart.
Polynomial random_function(Sampler& s, const SmoothGroupoid& g);
SmoothCochain random_cochain(Sampler& s, const SmoothGroupoid& g, int arity, std::size_t width = 1, int degree = 3,
                             std::size_t terms = 6);
SmoothCochain random_normalized(Sampler& s, const SmoothGroupoid& g, int arity, std::size_t width = 1,
                                int degree = 2, std::size_t terms = 4);
/// Normalized map of degree m between fibers with the given degrees.
SmoothMap random_map(Sampler& s, const SmoothGroupoid& g, int arity, const std::vector<int>& degrees, int m,
                     int degree = 2, std::size_t terms = 3);

}  // namespace hrep::suites
