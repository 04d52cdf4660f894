#include <gtest/gtest.h>

#include <random>

#include "hrep/smooth_groupoid.hpp"
#include "test_util.hpp"

using namespace hrep;
using hrep::testing::random_point;
using hrep::testing::random_polynomial;
using hrep::testing::random_rational;

namespace {

Polynomial x(std::size_t i) { return Polynomial::variable(i); }

SmoothCochain random_cochain(std::mt19937_64& rng, const SmoothGroupoid& g, int arity, std::size_t width,
                             int degree = 3, bool normalized = false) {
  SmoothCochain f{arity, {}};
  for (std::size_t j = 0; j < width; ++j) {
    Polynomial p = random_polynomial(rng, g.vars(arity), degree, 6);
    f.values.push_back(normalized ? normalized_from(g, arity, p) : p);
  }
  return f;
}

// lambda(p, q) = 1 + (p - q)^2 on the pair groupoid of R.
EhresmannConn quadratic_conn() { return EhresmannConn{PolyMatrix(1, 1, {Polynomial(1) + (x(0) - x(1)) * (x(0) - x(1))})}; }

// A 2 x 2 splitting on the pair groupoid of R^2, identity on the diagonal.
EhresmannConn planar_conn() {
  const Polynomial u = x(0) - x(2), v = x(1) - x(3);
  return EhresmannConn{PolyMatrix(2, 2, {Polynomial(1) + u * x(1), v * v, u * x(3), Polynomial(1) - u * v})};
}

void add_to(std::map<int, SmoothCochain>& acc, const std::map<int, SmoothCochain>& more) {
  for (const auto& [k, c] : more) {
    auto it = acc.find(k);
    if (it == acc.end()) acc.emplace(k, c);
    else it->second = it->second + c;
  }
}

}  // namespace

TEST(SmoothGroupoid, MatrixGroupValidation) {
  EXPECT_THROW(SmoothGroupoid::matrix_group(3, {{1, 0}}), std::invalid_argument);
  EXPECT_THROW(SmoothGroupoid::matrix_group(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(SmoothGroupoid::matrix_group(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(SmoothGroupoid::heisenberg());
  EXPECT_EQ(SmoothGroupoid::heisenberg().vars(2), 6u);
  EXPECT_EQ(SmoothGroupoid::pair_chart(2).vars(2), 6u);
}

TEST(SmoothGroupoid, HeisenbergInverseAndProduct) {
  const auto g = SmoothGroupoid::heisenberg();
  const Substitution c{x(0), x(1), x(2)};
  const PolyMatrix el = g.element(c);
  EXPECT_EQ(el * g.inverse_element(el), PolyMatrix::identity(3));
  // d_1 of (g, h) is the product
  const Substitution prod = g.face(2, 1);
  EXPECT_EQ(g.element(prod), g.element(Substitution{x(0), x(1), x(2)}) * g.element(Substitution{x(3), x(4), x(5)}));
}

TEST(SmoothGroupoid, AbelianPlaneCoboundary) {
  // f(a, b) = a b on (R^2, +): (delta f)(g, h) = g_a h_b + g_b h_a.
  const auto g = SmoothGroupoid::abelian_plane();
  const SmoothCochain f{1, {x(0) * x(1)}};
  const SmoothCochain df = delta(g, f);
  EXPECT_EQ(df.arity, 2);
  EXPECT_EQ(df.values[0], x(0) * x(3) + x(1) * x(2));
}

TEST(SmoothGroupoid, SimplicialIdentities) {
  for (const auto& g : {SmoothGroupoid::heisenberg(), SmoothGroupoid::pair_chart(2)}) {
    std::mt19937_64 rng(11);
    for (int k = 2; k <= 4; ++k) {
      const Polynomial p = random_polynomial(rng, g.vars(k - 2), 3, 6);
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          EXPECT_EQ(pullback(pullback(p, g.face(k - 1, j - 1)), g.face(k, i)),
                    pullback(pullback(p, g.face(k - 1, i)), g.face(k, j)))
              << "k=" << k << " i=" << i << " j=" << j;
    }
  }
}

TEST(SmoothGroupoid, DeltaSquaresToZero) {
  std::mt19937_64 rng(12);
  for (const auto& g : {SmoothGroupoid::heisenberg(), SmoothGroupoid::pair_chart(1)})
    for (int k = 0; k <= 2; ++k) {
      const SmoothCochain f = random_cochain(rng, g, k, 2);
      EXPECT_TRUE(is_zero(delta(g, delta(g, f)))) << "arity " << k;
    }
}

TEST(SmoothGroupoid, LeibnizSymbolicAndSampled) {
  std::mt19937_64 rng(13);
  const auto g = SmoothGroupoid::heisenberg();
  for (int p = 0; p <= 2; ++p)
    for (int k = 0; k + p <= 3; ++k) {
      const SmoothCochain eta = random_cochain(rng, g, p, 2), f = random_cochain(rng, g, k, 1);
      const SmoothCochain lhs = delta(g, star(g, eta, f));
      const SmoothCochain second = star(g, eta, delta(g, f));
      const SmoothCochain rhs = p % 2 == 0 ? star(g, delta(g, eta), f) + second : star(g, delta(g, eta), f) - second;
      EXPECT_EQ(lhs, rhs) << "p=" << p << " k=" << k;
      for (int s = 0; s < 20; ++s) {
        const auto pt = random_point(rng, g.vars(p + k + 1));
        EXPECT_EQ(evaluate(lhs, pt), evaluate(rhs, pt));
      }
    }
}

TEST(SmoothGroupoid, NormalizedCochains) {
  std::mt19937_64 rng(14);
  for (const auto& g : {SmoothGroupoid::heisenberg(), SmoothGroupoid::pair_chart(2)})
    for (int k = 1; k <= 3; ++k) {
      const SmoothCochain f = random_cochain(rng, g, k, 2, 3, true);
      EXPECT_TRUE(is_normalized(g, f));
      EXPECT_TRUE(is_normalized(g, delta(g, f)));
      EXPECT_FALSE(is_normalized(g, SmoothCochain{k, {Polynomial(1)}}));
    }
}

TEST(SmoothGroupoid, AdSigmaPairChartIsARep) {
  const auto g = SmoothGroupoid::pair_chart(1);
  const SmoothRepG ad = build_Ad_sigma(g, quadratic_conn());
  ASSERT_TRUE(ad.F.count(2));
  const SmoothCheck check = check_rep_G(g, ad, 4);
  for (const auto& f : check.failures) ADD_FAILURE() << f;
}

TEST(SmoothGroupoid, CurvatureValue) {
  // K(g, h) for g = (1, 0), h = (0, 2): lambda(1,0) lambda(0,2) - lambda(1,2) = 2 * 5 - 2.
  const auto g = SmoothGroupoid::pair_chart(1);
  const SmoothRepG ad = build_Ad_sigma(g, quadratic_conn());
  const std::vector<Rational> pt{Rational(1), Rational(0), Rational(2)};
  EXPECT_EQ(evaluate(ad.F.at(2), pt)(0, 1), Rational(8));
}

TEST(SmoothGroupoid, AdSigmaPlanarAndFlat) {
  const auto g = SmoothGroupoid::pair_chart(2);
  const SmoothRepG ad = build_Ad_sigma(g, planar_conn());
  EXPECT_TRUE(check_rep_G(g, ad, 4).ok());
  const SmoothRepG flat = build_Ad_sigma(g, trivial_connection(g));
  EXPECT_FALSE(flat.F.count(2));
  EXPECT_TRUE(check_rep_G(g, flat, 3).ok());
}

TEST(SmoothGroupoid, AdSigmaRejectsNonUnitalSplitting) {
  const auto g = SmoothGroupoid::pair_chart(1);
  EXPECT_THROW(build_Ad_sigma(g, EhresmannConn{PolyMatrix(1, 1, {Polynomial(1) + x(0)})}), std::invalid_argument);
}

TEST(SmoothGroupoid, AdjointOfHeisenberg) {
  const auto g = SmoothGroupoid::heisenberg();
  const SmoothRepG ad = build_Ad_sigma(g, trivial_connection(g));
  EXPECT_NE(ad.F.at(1), PolyMatrix::identity(3));
  const SmoothCheck check = check_rep_G(g, ad, 3);
  for (const auto& f : check.failures) ADD_FAILURE() << f;
}

TEST(SmoothGroupoid, DSquaredVanishesOnAd) {
  std::mt19937_64 rng(15);
  for (const auto& [g, conn] : {std::pair{SmoothGroupoid::pair_chart(1), quadratic_conn()},
                                std::pair{SmoothGroupoid::pair_chart(2), planar_conn()}}) {
    const SmoothRepG ad = build_Ad_sigma(g, conn);
    for (int p = 0; p <= 1; ++p) {
      const SmoothCochain eta = random_cochain(rng, g, p, ad.dim(), 2);
      std::map<int, SmoothCochain> dd;
      for (const auto& [k, c] : apply_D(g, ad, eta)) add_to(dd, apply_D(g, ad, c));
      for (const auto& [k, c] : dd) EXPECT_TRUE(is_zero(c)) << "p=" << p << " arity " << k;
    }
  }
}

TEST(SmoothGroupoid, GaugeTransformOfAd) {
  const auto g = SmoothGroupoid::pair_chart(2);
  const SmoothRepG ad = build_Ad_sigma(g, planar_conn());
  SmoothMorphismG phi;
  phi.phi[0] = PolyMatrix::identity(4);
  phi.phi[0](0, 1) = x(0) * x(1);
  phi.phi[0](3, 2) = Polynomial(Rational(1, 2));
  // degree -1: from TM (degree 1) to A (degree 0), vanishing at units
  phi.phi[1] = PolyMatrix(4, 4);
  phi.phi[1](0, 2) = (x(0) - x(2)) * (Polynomial(1) + x(1));
  phi.phi[1](1, 3) = (x(1) - x(3)) * x(0);
  ASSERT_TRUE(is_normalized(g, SmoothMap{1, phi.phi[1]}));
  const SmoothRepG out = gauge_transform(g, ad, phi, 4);
  const SmoothCheck check = check_rep_G(g, out, 4);
  for (const auto& f : check.failures) ADD_FAILURE() << f;
  EXPECT_TRUE(check_morphism_G(g, phi, ad, out, 4).ok());
  EXPECT_FALSE(check_morphism_G(g, phi, ad, ad, 4).ok());
}

TEST(SmoothGroupoid, GaugeRejectsNonPolynomialInverse) {
  const auto g = SmoothGroupoid::pair_chart(1);
  const SmoothRepG ad = build_Ad_sigma(g, quadratic_conn());
  SmoothMorphismG phi;
  phi.phi[0] = PolyMatrix(2, 2, {Polynomial(1) + x(0), Polynomial(), Polynomial(), Polynomial(1)});
  EXPECT_THROW(gauge_transform(g, ad, phi, 2), std::domain_error);
}

TEST(SmoothGroupoid, DetectsBrokenStructureMap) {
  const auto g = SmoothGroupoid::pair_chart(1);
  SmoothRepG ad = build_Ad_sigma(g, quadratic_conn());
  ad.F[2] += ad.F[2];
  EXPECT_FALSE(check_rep_G(g, ad, 3).ok());
}
