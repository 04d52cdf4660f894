#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hrep/groupoid.hpp"
#include "hrep/rep_groupoid.hpp"
#include "test_util.hpp"

using namespace hrep;
using hrep::testing::random_rational;

namespace {

FiniteCochain random_cochain(std::mt19937_64& rng, const Nerve& n, int arity, std::size_t width = 1,
                             bool normalized = false) {
  FiniteCochain f = zero_cochain(n, arity, width);
  for (std::size_t s = 0; s < n.size(arity); ++s) {
    if (normalized && n.degenerate(arity, s)) continue;
    for (std::size_t j = 0; j < width; ++j) f.at(s, j) = random_rational(rng);
  }
  return f;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng);
  return m;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t r) {
  for (;;) {
    RationalMatrix m = random_matrix(rng, r, r);
    if (dense_rank(m) == r) return m;
  }
}

Rational nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational x = random_rational(rng);
    if (x != 0) return x;
  }
}

/// Fiber Q^2 in degree 0 and Q in degree 1 over the pair groupoid:
/// F_1(p, q) = diag(A_p A_q^-1, b_p / b_q), F_0(x) = b_x r A_x^-1.
RepG pair_rep(std::mt19937_64& rng, const Nerve& n) {
  const std::size_t objs = n.groupoid().num_objects();
  std::vector<RationalMatrix> a, ainv;
  std::vector<Rational> b;
  for (std::size_t x = 0; x < objs; ++x) {
    a.push_back(random_invertible(rng, 2));
    ainv.push_back(inverse(a.back()));
    b.push_back(nonzero_rational(rng));
  }
  const RationalMatrix row = random_matrix(rng, 1, 2);
  std::vector<RationalMatrix> del, act;
  for (std::size_t x = 0; x < objs; ++x) {
    RationalMatrix d(3, 3);
    const RationalMatrix blk = scaled(row * ainv[x], b[x]);
    d(2, 0) = blk(0, 0);
    d(2, 1) = blk(0, 1);
    del.push_back(d);
  }
  const auto& g = n.groupoid();
  for (std::size_t arrow = 0; arrow < g.num_arrows(); ++arrow) {
    const int p = g.target(static_cast<int>(arrow)), q = g.source(static_cast<int>(arrow));
    RationalMatrix m(3, 3);
    const RationalMatrix blk = a[p] * ainv[q];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = blk(i, j);
    m(2, 2) = Rational(b[p] / b[q]);
    act.push_back(m);
  }
  return genuine_rep(n, {0, 0, 1}, del, act);
}

/// phi_0 invertible and degree preserving, phi_1 : E^1_s -> E^0_t vanishing on units.
MorphismG random_gauge(std::mt19937_64& rng, const Nerve& n) {
  MorphismG phi;
  for (std::size_t x = 0; x < n.size(0); ++x) {
    RationalMatrix m(3, 3);
    const RationalMatrix blk = random_invertible(rng, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = blk(i, j);
    m(2, 2) = nonzero_rational(rng);
    phi.phi[0].push_back(m);
  }
  for (std::size_t s = 0; s < n.size(1); ++s) {
    RationalMatrix m(3, 3);
    if (!n.degenerate(1, s)) {
      m(0, 2) = random_rational(rng);
      m(1, 2) = random_rational(rng);
    }
    phi.phi[1].push_back(m);
  }
  return phi;
}

FiniteCochain mixed_total(const MixedCochain& m, int arity, const Nerve& n, std::size_t width) {
  auto it = m.find(arity);
  return it == m.end() ? zero_cochain(n, arity, width) : it->second;
}

}  // namespace

TEST(FiniteGroupoid, PairGroupoidTables) {
  const auto g = FiniteGroupoid::pair(3);
  EXPECT_EQ(g.num_objects(), 3u);
  EXPECT_EQ(g.num_arrows(), 9u);
  // (2, 1) : 1 -> 2
  EXPECT_EQ(g.target(7), 2);
  EXPECT_EQ(g.source(7), 1);
  EXPECT_EQ(g.compose(7, 3), 6);  // (2,1)(1,0) = (2,0)
  EXPECT_EQ(g.inverse(7), 5);
  EXPECT_TRUE(g.is_unit(4));
  EXPECT_THROW(g.compose(7, 7), std::invalid_argument);
}

TEST(FiniteGroupoid, RejectsBrokenTables) {
  const auto g = FiniteGroupoid::cyclic(3);
  auto comp = g.composition_table();
  std::swap(comp[1][1], comp[1][2]);
  EXPECT_TRUE(check_groupoid_axioms(1, {0, 0, 0}, {0, 0, 0}, comp, {0}, {0, 2, 1}).has_value());
  EXPECT_THROW(FiniteGroupoid(1, {0, 0, 0}, {0, 0, 0}, comp, {0}, {0, 2, 1}), std::invalid_argument);
}

TEST(Nerve, LevelSizesOfPairGroupoid) {
  const Nerve n(FiniteGroupoid::pair(3), 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(n.size(k), static_cast<std::size_t>(std::pow(3, k + 1)));
}

TEST(Nerve, SimplicialIdentities) {
  const Nerve n(FiniteGroupoid::pair(3), 4);
  for (int k = 2; k <= 4; ++k)
    for (const auto& t : n.level(k))
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i) EXPECT_EQ(n.face(k - 1, n.face(k, t, j), i), n.face(k - 1, n.face(k, t, i), j - 1));
}

TEST(Nerve, FacesOfAnArrowAreSourceThenTarget) {
  const Nerve n(FiniteGroupoid::pair(3), 1);
  EXPECT_EQ(n.face(1, {7}, 0), Tuple{1});
  EXPECT_EQ(n.face(1, {7}, 1), Tuple{2});
}

TEST(GroupoidCochains, DeltaSquaresToZero) {
  std::mt19937_64 rng(11);
  const Nerve n(FiniteGroupoid::pair(4), 5);
  for (int k = 0; k <= 3; ++k) {
    const auto f = random_cochain(rng, n, k, 2);
    EXPECT_TRUE(is_zero(delta(n, delta(n, f)))) << "arity " << k;
  }
}

TEST(GroupoidCochains, DeltaOnFunctions) {
  const Nerve n(FiniteGroupoid::pair(3), 1);
  FiniteCochain f = zero_cochain(n, 0);
  f.at(0) = 1;
  f.at(1) = 5;
  f.at(2) = 11;
  const auto df = delta(n, f);
  // g = (2, 1): f(s g) - f(t g) = 5 - 11
  EXPECT_EQ(df.at(7), Rational(-6));
}

TEST(GroupoidCochains, StarOfTwoOneCochains) {
  std::mt19937_64 rng(5);
  const Nerve n(FiniteGroupoid::pair(3), 2);
  const auto f = random_cochain(rng, n, 1), h = random_cochain(rng, n, 1);
  const auto fh = star(n, f, h);
  for (std::size_t s = 0; s < n.size(2); ++s) {
    const auto& t = n.level(2)[s];
    EXPECT_EQ(fh.at(s), Rational(-f.at(t[0]) * h.at(t[1])));
  }
}

TEST(GroupoidCochains, StarLeibnizRule) {
  std::mt19937_64 rng(7);
  const Nerve n(FiniteGroupoid::pair(4), 4);
  for (int p = 0; p <= 2; ++p)
    for (int k = 0; k + p <= 3; ++k) {
      const auto eta = random_cochain(rng, n, p, 2);
      const auto f = random_cochain(rng, n, k);
      const auto lhs = delta(n, star(n, eta, f));
      auto rhs = star(n, delta(n, eta), f);
      const auto second = star(n, eta, delta(n, f));
      rhs = p % 2 == 0 ? rhs + second : rhs - second;
      EXPECT_EQ(lhs, rhs) << "p=" << p << " k=" << k;
    }
}

TEST(GroupoidCochains, StarPreservesNormalization) {
  std::mt19937_64 rng(8);
  const Nerve n(FiniteGroupoid::pair(3), 3);
  const auto eta = random_cochain(rng, n, 1, 1, true), f = random_cochain(rng, n, 2, 1, true);
  EXPECT_TRUE(is_normalized(n, star(n, eta, f)));
  EXPECT_TRUE(is_normalized(n, delta(n, f)));
}

TEST(ActionNerve, SizesAndAxiomsForPairTwo) {
  const auto g = FiniteGroupoid::pair(2);
  const auto an = action_nerve_groupoid(g, 0);
  EXPECT_EQ(an.groupoid.num_objects(), 4u);
  EXPECT_EQ(an.groupoid.num_arrows(), 8u);
  const auto an1 = action_nerve_groupoid(g, 1);
  EXPECT_EQ(an1.groupoid.num_objects(), 8u);
  EXPECT_EQ(an1.groupoid.num_arrows(), 16u);
}

TEST(ActionNerve, FlatMapsAreMorphismsOverTheProjection) {
  const auto g = FiniteGroupoid::pair(3);
  for (int k = 0; k <= 2; ++k) {
    const auto an = action_nerve_groupoid(g, k);
    const auto below = action_nerve_groupoid(g, k - 1);
    const auto pi = nerve_projection(g, k);
    EXPECT_FALSE(check_groupoid_morphism(an.groupoid, g, pi).has_value());
    for (int i = 0; i <= k; ++i) {
      const auto flat = flat_map(g, k, i);
      const auto err = check_groupoid_morphism(an.groupoid, below.groupoid, flat);
      EXPECT_FALSE(err.has_value()) << k << "," << i << ": " << err.value_or("");
      EXPECT_EQ(compose(nerve_projection(g, k - 1), flat), pi) << k << "," << i;
    }
  }
}

TEST(ActionNerve, IsElementary) {
  const auto g = FiniteGroupoid::pair(3);
  for (int k = 0; k <= 1; ++k) {
    const auto an = action_nerve_groupoid(g, k);
    const auto e = elementary_structure(g, an);
    EXPECT_FALSE(check_elementary(an.groupoid, e).has_value());
  }
  ElementaryStructure bad{{0, 0, 0}, {0}};
  EXPECT_TRUE(check_elementary(FiniteGroupoid::units_only(3), bad).has_value());
}

TEST(RepG, TrivialDifferentialIsDelta) {
  std::mt19937_64 rng(3);
  const Nerve n(FiniteGroupoid::pair(3), 4);
  const RepG r = trivial_rep(n, 2);
  for (int p = 0; p <= 3; ++p) {
    const auto eta = random_cochain(rng, n, p, 2);
    const auto d = apply_D(n, r, eta);
    EXPECT_EQ(mixed_total(d, p + 1, n, 2), delta(n, eta));
    EXPECT_TRUE(is_zero(mixed_total(d, p, n, 2)));
  }
}

TEST(RepG, TrivialCohomologyOfPairGroupoid) {
  const Nerve n(FiniteGroupoid::pair(4), 4);
  const RepG r = trivial_rep(n, 1);
  for (bool normalized : {true, false}) {
    const auto h = cohomology_G(n, r, 3, normalized);
    EXPECT_EQ(h.dim(0), 1u);
    EXPECT_EQ(h.dim(1), 0u);
    EXPECT_EQ(h.dim(2), 0u);
    EXPECT_EQ(h.dim(3), 0u);
  }
}

TEST(RepG, UnitsOnlyGroupoidCohomology) {
  const Nerve n(FiniteGroupoid::units_only(2), 3);
  const auto h = cohomology_G(n, trivial_rep(n, 1), 2);
  EXPECT_EQ(h.dim(0), 2u);
  EXPECT_EQ(h.dim(1), 0u);
  EXPECT_EQ(h.dim(2), 0u);
}

TEST(RepG, CyclicGroupCohomologyOverRationals) {
  const Nerve n(FiniteGroupoid::cyclic(3), 4);
  for (bool normalized : {true, false}) {
    const auto h = cohomology_G(n, trivial_rep(n, 1), 3, normalized);
    EXPECT_EQ(h.dim(0), 1u);
    EXPECT_EQ(h.dim(1), 0u);
    EXPECT_EQ(h.dim(2), 0u);
    EXPECT_EQ(h.dim(3), 0u);
  }
}

TEST(RepG, SignRepresentationOfCyclicTwoIsAcyclic) {
  const Nerve n(FiniteGroupoid::cyclic(2), 4);
  const RepG r = genuine_rep(n, {0}, {RationalMatrix(1, 1)},
                             {RationalMatrix::identity(1), scaled(RationalMatrix::identity(1), Rational(-1))});
  EXPECT_TRUE(check_rep_G(n, r, 4).ok());
  const auto h = cohomology_G(n, r, 3);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(h.dim(d), 0u) << d;
}

TEST(RepG, GenuineRepresentationWithDifferential) {
  std::mt19937_64 rng(21);
  const Nerve n(FiniteGroupoid::pair(3), 4);
  const RepG r = pair_rep(rng, n);
  EXPECT_TRUE(check_rep_G(n, r, 4).ok());
  EXPECT_TRUE(check_square_zero(build_D_G(n, r, 0, 3)).ok());
  // fiber cohomology: ker of Q^2 -> Q is one-dimensional in degree 0
  const auto h = cohomology_G(n, r, 2);
  EXPECT_EQ(h.dim(0), 1u);
  EXPECT_EQ(h.dim(1), 0u);
  EXPECT_EQ(h.dim(2), 0u);
}

TEST(RepG, GaugeTransformProducesCurvatureAndStaysARepresentation) {
  std::mt19937_64 rng(99);
  const Nerve n(FiniteGroupoid::pair(3), 5);
  const RepG r = pair_rep(rng, n);
  const MorphismG phi = random_gauge(rng, n);
  const RepG g = gauge_transform(n, r, phi, 5);
  ASSERT_TRUE(g.F.count(2));
  bool nonzero = false;
  for (const auto& m : g.F.at(2)) nonzero = nonzero || !m.is_zero();
  EXPECT_TRUE(nonzero);
  for (const auto& [k, table] : g.F) EXPECT_LE(k, 2) << "F_" << k << " should vanish for degrees in [0,1]";
  const auto rc = check_rep_G(n, g, 5);
  EXPECT_TRUE(rc.ok()) << (rc.ok() ? "" : rc.failures.front().detail);
  EXPECT_TRUE(check_square_zero(build_D_G(n, g, -1, 4)).ok());
  const auto mc = check_morphism_G(n, phi, r, g, 5, 0, 3);
  EXPECT_TRUE(mc.ok()) << (mc.failures.empty() ? "chain map" : mc.failures.front().detail);
  EXPECT_TRUE(quasi_iso_G(n, phi, r, g));
  const auto h1 = cohomology_G(n, r, 3), h2 = cohomology_G(n, g, 3);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(h1.dim(d), h2.dim(d));
}

TEST(RepG, DetectsBrokenStructureEquation) {
  std::mt19937_64 rng(4);
  const Nerve n(FiniteGroupoid::pair(3), 3);
  RepG r = pair_rep(rng, n);
  r.F[1][1](0, 0) += 1;
  const auto rc = check_rep_G(n, r, 3);
  ASSERT_FALSE(rc.ok());
  EXPECT_GE(rc.failures.front().equation, 1);
}

TEST(RepG, DetectsUnitalityFailure) {
  const Nerve n(FiniteGroupoid::cyclic(2), 3);
  RepG r = trivial_rep(n, 1);
  r.F[1][0] = scaled(RationalMatrix::identity(1), Rational(2));
  const auto rc = check_rep_G(n, r, 3);
  ASSERT_FALSE(rc.ok());
}

TEST(RepG, RejectsWrongDegree) {
  const Nerve n(FiniteGroupoid::pair(2), 2);
  RationalMatrix bad(2, 2);
  bad(0, 1) = 1;  // degree -1 in F_0
  EXPECT_THROW(genuine_rep(n, {0, 1}, {bad, bad}, std::vector<RationalMatrix>(4, RationalMatrix::identity(2))),
               std::invalid_argument);
}

TEST(RepG, FullAndNormalizedCohomologyAgree) {
  std::mt19937_64 rng(17);
  const Nerve n(FiniteGroupoid::pair(2), 5);
  const RepG g = gauge_transform(n, pair_rep(rng, n), random_gauge(rng, n), 5);
  const auto a = cohomology_G(n, g, 3, true), b = cohomology_G(n, g, 3, false);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(a.dim(d), b.dim(d)) << d;
}

TEST(RepG, PullbackAlongProjection) {
  std::mt19937_64 rng(23);
  const auto g = FiniteGroupoid::pair(2);
  const Nerve base(g, 5);
  const RepG r = gauge_transform(base, pair_rep(rng, base), random_gauge(rng, base), 5);
  const auto an = action_nerve_groupoid(g, 0);
  const Nerve top(an.groupoid, 4);
  const auto pi = nerve_projection(g, 0);
  const RepG pulled = pullback_rep(top, base, pi, r);
  EXPECT_TRUE(check_rep_G(top, pulled, 4).ok());
  // pullback commutes with D on cochains
  for (int p = 0; p <= 2; ++p) {
    const auto eta = random_cochain(rng, base, p, 3);
    const auto d_then_pull = apply_D(base, r, eta);
    const auto pull_then_d = apply_D(top, pulled, pullback_cochain(top, base, pi, eta));
    for (int q = p; q <= p + 2; ++q) {
      const auto a = pullback_cochain(top, base, pi, mixed_total(d_then_pull, q, base, 3));
      EXPECT_EQ(a, mixed_total(pull_then_d, q, top, 3)) << p << "->" << q;
    }
  }
}

TEST(RepG, ElementaryQuasiIsomorphism) {
  std::mt19937_64 rng(31);
  for (std::size_t points : {2u, 3u}) {
    const auto g = FiniteGroupoid::pair(points);
    const Nerve base(g, 5);
    const RepG r = gauge_transform(base, pair_rep(rng, base), random_gauge(rng, base), 5);
    const auto an = action_nerve_groupoid(g, 0);
    const Nerve top(an.groupoid, 4);
    const RepG pulled = pullback_rep(top, base, nerve_projection(g, 0), r);
    const auto e = elementary_structure(g, an);
    const auto q = elementary_quasi_iso(top, e, pulled, 3);
    EXPECT_TRUE(check_rep_G(top, q.target, 4).ok());
    const auto mc = check_morphism_G(top, q.phi, pulled, q.target, 3, 0, 2);
    EXPECT_TRUE(mc.ok()) << points << ": " << (mc.failures.empty() ? "chain map" : mc.failures.front().detail);
    EXPECT_TRUE(quasi_iso_G(top, q.phi, pulled, q.target));
  }
}

TEST(FlatStarHomotopy, HoldsOnPairGroupoids) {
  for (std::size_t points : {3u, 4u}) {
    const Nerve n(FiniteGroupoid::pair(points), points == 3 ? 5 : 4);
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 2; ++k) {
        if (m + k + 1 > n.max_arity()) continue;
        const auto h = flat_star_homotopy(n, 1, m, k);
        EXPECT_TRUE(h.ok) << points << " m=" << m << " k=" << k << " " << h.witness;
        EXPECT_GT(h.checked, 0u);
      }
  }
}

TEST(RepG, DetectsNonMorphism) {
  std::mt19937_64 rng(41);
  const Nerve n(FiniteGroupoid::pair(3), 4);
  const RepG r = pair_rep(rng, n);
  MorphismG phi = random_gauge(rng, n);
  const RepG g = gauge_transform(n, r, phi, 4);
  ASSERT_TRUE(check_morphism_G(n, phi, r, g, 4).ok());
  phi.phi[1][1](0, 2) += 1;
  const auto mc = check_morphism_G(n, phi, r, g, 4);
  EXPECT_FALSE(mc.failures.empty());
  EXPECT_FALSE(mc.chain_map);
}
