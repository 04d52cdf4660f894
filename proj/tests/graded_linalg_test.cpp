#include <gtest/gtest.h>

#include <random>

#include "hrep/suites/ce_oracle.hpp"
#include "hrep/graded.hpp"
#include "hrep/sparse.hpp"
#include "test_util.hpp"

using namespace hrep;
using namespace hrep::oracle;
using hrep::testing::random_rational;

namespace {

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  SparseBuilder b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) b.add(r, c, random_rational(rng, 4, 3));
  return std::move(b).build();
}

// Random invertible matrix as a product of elementary operations.
RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix t = RationalMatrix::identity(n);
  if (n < 2) return t;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      const Rational s = random_rational(rng);
      if (s == 0) continue;
      for (std::size_t c = 0; c < n; ++c) t(i, c) *= s;
    } else {
      const Rational s = random_rational(rng);
      for (std::size_t c = 0; c < n; ++c) t(i, c) += s * t(j, c);
    }
  }
  return t;
}

CochainComplex conjugate(const CochainComplex& c, std::mt19937_64& rng) {
  std::map<int, RationalMatrix> t, tinv;
  for (const auto& [deg, n] : c.dims()) {
    t[deg] = random_invertible(rng, n);
    tinv[deg] = inverse(t[deg]);
  }
  CochainComplex out;
  for (const auto& [deg, n] : c.dims()) out.set_space(deg, n);
  for (const auto& [deg, n] : c.dims()) {
    if (!c.has_differential(deg)) continue;
    out.set_differential(deg, SparseMatrix::from_dense(t[deg + 1] * c.differential(deg).to_dense() * tinv[deg]));
  }
  return out;
}

long alternating_dimension(const CochainComplex& c, int lo, int hi) {
  long chi = 0;
  for (int n = lo; n <= hi; ++n) chi += parity_sign(n) * static_cast<long>(c.dim(n));
  return chi;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(SparseMatrix(3, 3)), 0U);
  EXPECT_EQ(rank(SparseMatrix::identity(4)), 4U);
  RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  EXPECT_EQ(rank(SparseMatrix::from_dense(m)), 1U);
}

TEST(Rank, AgreesWithDenseElimination) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 30);
  std::uniform_real_distribution<double> dens(0.05, 0.6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    SparseMatrix m = random_sparse(rng, r, c, dens(rng));
    // Force some dependent rows so low rank cases occur.
    if (trial % 3 == 0 && r > 2) {
      const RationalMatrix d = m.to_dense();
      RationalMatrix dd = d;
      for (std::size_t j = 0; j < c; ++j) dd(r - 1, j) = d(0, j) * Rational(3, 2) - d(1, j);
      m = SparseMatrix::from_dense(dd);
    }
    EXPECT_EQ(rank(m), dense_rank(m.to_dense())) << "trial " << trial;
    EXPECT_EQ(rank(m), rank(m.transposed()));
  }
}

TEST(Sparse, CanonicalFormAndProduct) {
  SparseMatrix a(2, 2, {{1, 1, 3}, {0, 0, 1}, {1, 1, -3}, {0, 1, 2}});
  EXPECT_EQ(a.nonzeros(), 2U);
  EXPECT_EQ(a.entries().front().row, 0U);
  EXPECT_EQ(a.at(0, 1), 2);
  EXPECT_EQ(a.at(1, 1), 0);
  std::mt19937_64 rng(1);
  const SparseMatrix x = random_sparse(rng, 5, 7, 0.4), y = random_sparse(rng, 7, 4, 0.4);
  EXPECT_EQ((x * y).to_dense(), x.to_dense() * y.to_dense());
  EXPECT_THROW((void)(x * x), std::invalid_argument);
}

TEST(KoszulSign, Examples) {
  EXPECT_EQ(koszul_sign(1, 1), -1);
  EXPECT_EQ(koszul_sign(0, 5), 1);
  EXPECT_EQ(koszul_sign(2, 3), 1);
}

TEST(GradedMap, FlatRoundTripAndComposition) {
  const GradedSpace v = GradedSpace::from_basis_degrees({0, 0, 1, 2});
  GradedMap f(v, v, 1);
  f.set_block(0, SparseMatrix(1, 2, {{0, 0, 1}, {0, 1, -1}}));
  f.set_block(1, SparseMatrix(1, 1, {{0, 0, 5}}));
  const GradedMap g = GradedMap::from_flat(v, v, 1, f.flat());
  EXPECT_EQ(g.flat(), f.flat());
  EXPECT_EQ(compose(f, f).flat(), f.flat() * f.flat());
  EXPECT_THROW(f.set_block(0, SparseMatrix(2, 2)), std::invalid_argument);
  EXPECT_THROW(GradedMap::from_flat(v, v, 0, f.flat()), std::invalid_argument);
}

TEST(SquareZero, ZeroDifferentialsPass) {
  CochainComplex c;
  c.set_differential(0, SparseMatrix(3, 2));
  c.set_differential(1, SparseMatrix(1, 3));
  EXPECT_TRUE(check_square_zero(c).ok());
}

TEST(SquareZero, Sl2AdjointPasses) {
  const auto g = sl2();
  const CochainComplex c = ce_complex(g, adjoint_rep(g));
  EXPECT_EQ(c.dim(0), 3U);
  EXPECT_EQ(c.dim(1), 9U);
  EXPECT_EQ(c.dim(2), 9U);
  EXPECT_EQ(c.dim(3), 3U);
  EXPECT_TRUE(check_square_zero(c).ok());
}

TEST(SquareZero, CorruptedEntryGivesWitness) {
  const auto g = sl2();
  const CochainComplex c = ce_complex(g, adjoint_rep(g));
  CochainComplex bad = c;
  RationalMatrix d1 = c.differential(1).to_dense();
  // flip one nonzero entry
  for (std::size_t r = 0; r < d1.rows(); ++r) {
    bool done = false;
    for (std::size_t col = 0; col < d1.cols() && !done; ++col)
      if (d1(r, col) != 0) {
        d1(r, col) = -d1(r, col);
        done = true;
      }
    if (done) break;
  }
  bad.set_differential(1, SparseMatrix::from_dense(d1));
  const auto report = check_square_zero(bad);
  ASSERT_FALSE(report.ok());
  const auto& f = report.failures.front();
  const auto image = bad.differential(f.degree + 1) * bad.differential(f.degree);
  EXPECT_EQ(f.witness, image.column(f.witness_column));
  EXPECT_THROW(cohomology(bad, 0, 3), std::domain_error);
}

TEST(SquareZero, ShapeMismatchThrows) {
  CochainComplex c;
  c.set_differential(0, SparseMatrix(2, 1));
  EXPECT_THROW(c.set_differential(1, SparseMatrix(1, 3)), std::invalid_argument);
}

TEST(Cohomology, AbelianAdjoint) {
  const LieData g = make_lie(2);
  const auto report = cohomology(ce_complex(g, adjoint_rep(g)), 0, 2);
  EXPECT_EQ(report.dim(0), 2U);
  EXPECT_EQ(report.dim(1), 4U);
  EXPECT_EQ(report.dim(2), 2U);
}

TEST(Cohomology, Sl2AdjointVanishes) {
  const auto g = sl2();
  const auto report = cohomology(ce_complex(g, adjoint_rep(g)), 0, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(report.dim(n), 0U) << n;
}

TEST(Cohomology, IdentityMapIsAcyclic) {
  CochainComplex c;
  c.set_differential(0, SparseMatrix::identity(1));
  const auto report = cohomology(c, 0, 1);
  EXPECT_EQ(report.dim(0), 0U);
  EXPECT_EQ(report.dim(1), 0U);
}

TEST(Cohomology, KernelImageBookkeeping) {
  const auto g = heisenberg();
  const auto report = cohomology(ce_complex(g, adjoint_rep(g)), 0, 3);
  for (const auto& e : report.entries) {
    EXPECT_GE(e.ker, e.im);
    EXPECT_EQ(e.H, e.ker - e.im);
  }
}

TEST(Cohomology, EulerCharacteristicMatchesDimensions) {
  std::vector<LieData> algebras = {sl2(), so3(), heisenberg(), make_lie(2), make_lie(3)};
  for (const auto& g : algebras) {
    const int top = static_cast<int>(g.dim);
    const CochainComplex c = ce_complex(g, adjoint_rep(g));
    EXPECT_EQ(cohomology(c, 0, top).euler_characteristic(), alternating_dimension(c, 0, top));
  }
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    // two-step complexes d1 d0 = 0 built from a random map and its cokernel-free composite
    const SparseMatrix a = random_sparse(rng, 4, 3, 0.5);
    CochainComplex c;
    c.set_differential(0, a);
    c.set_differential(1, SparseMatrix(2, 4));
    EXPECT_EQ(cohomology(c, 0, 2).euler_characteristic(), alternating_dimension(c, 0, 2));
  }
}

TEST(Cohomology, GaugeConjugateInvariance) {
  std::mt19937_64 rng(5);
  std::vector<LieData> algebras = {sl2(), so3(), heisenberg(), make_lie(2)};
  for (const auto& g : algebras) {
    const int top = static_cast<int>(g.dim);
    const CochainComplex c = ce_complex(g, adjoint_rep(g));
    const CochainComplex cc = conjugate(c, rng);
    EXPECT_TRUE(check_square_zero(cc).ok());
    EXPECT_EQ(cohomology(c, 0, top).entries, cohomology(cc, 0, top).entries);
  }
}
