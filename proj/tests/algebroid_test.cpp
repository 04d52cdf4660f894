#include <gtest/gtest.h>

#include <random>

#include "hrep/algebroid.hpp"
#include "hrep/combinatorics.hpp"
#include "hrep/models.hpp"
#include "hrep/rep_algebroid.hpp"
#include "hrep/suites/ce_oracle.hpp"
#include "test_util.hpp"

using namespace hrep;
using hrep::testing::random_point;
using hrep::testing::random_polynomial;
using hrep::testing::random_rational;

namespace {

AForm random_form(std::mt19937_64& rng, const AlgebroidModel& a, int arity, std::size_t rows, std::size_t cols,
                  int degree = 2) {
  AForm f(a.rank(), arity, rows, cols);
  for (const auto& s : subsets(static_cast<int>(a.rank()), arity)) {
    PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_polynomial(rng, a.chart_dim(), degree, 2);
    f.set(s, m);
  }
  return f;
}

TMConnection random_connection(std::mt19937_64& rng, const AlgebroidModel& a) {
  TMConnection c = TMConnection::flat(a);
  for (auto& g : c.gamma)
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t s = 0; s < g.cols(); ++s) g(r, s) = random_polynomial(rng, a.chart_dim(), 1, 2);
  return c;
}

std::vector<AlgebroidModel> all_models() {
  return {models::sl2(),         models::so3(),          models::heisenberg(), models::abelian(2),
          AlgebroidModel::tangent(1), AlgebroidModel::tangent(2), models::sl2_on_plane(), models::affine_line()};
}

}  // namespace

TEST(CheckAlgebroid, Examples) {
  EXPECT_TRUE(check_algebroid(models::sl2()).ok);
  EXPECT_TRUE(check_algebroid(AlgebroidModel::tangent(2)).ok);
  auto c = std::vector(3, std::vector(3, std::vector<Rational>(3, Rational(0))));
  c[0][1][0] = 1;
  c[1][0][0] = -1;
  c[0][2][1] = 1;
  c[2][0][1] = -1;
  const auto bad = check_algebroid(AlgebroidModel::point(3, c));
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.failure.find("Jacobi"), std::string::npos);
}

TEST(CheckAlgebroid, ActionAlgebroidsPass) {
  for (const auto& a : all_models()) EXPECT_TRUE(check_algebroid(a).ok) << check_algebroid(a).failure;
}

TEST(CheckAlgebroid, AnchorMismatchReported) {
  // rho(e0) = d/dx, rho(e1) = x d/dx with zero bracket is not bracket preserving.
  std::vector<std::vector<Polynomial>> anchor = {{Polynomial(1)}, {Polynomial::variable(0)}};
  std::vector<std::vector<std::vector<Polynomial>>> c(2, std::vector(2, std::vector<Polynomial>(2)));
  const auto r = check_algebroid(AlgebroidModel::coord(1, 2, anchor, c));
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.failure.find("anchor"), std::string::npos);
}

TEST(KoszulD, AbelianIsZero) {
  std::mt19937_64 rng(1);
  const auto a = models::abelian(3);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(koszul_d(a, random_form(rng, a, k, 1, 1, 0)).is_zero());
}

TEST(KoszulD, Sl2DualBasis) {
  const auto a = models::sl2();  // e=0, f=1, h=2
  const AForm e_star = scalar_form(3, 1, {{{0}, Polynomial(1)}});
  const AForm d = koszul_d(a, e_star);
  EXPECT_EQ(d.at({2, 0})(0, 0), Polynomial(-2));
  EXPECT_EQ(d.at({0, 2})(0, 0), Polynomial(2));
  EXPECT_EQ(d.at({0, 1})(0, 0), Polynomial(0));
  EXPECT_EQ(d.at({2, 1})(0, 0), Polynomial(0));
}

TEST(KoszulD, FunctionOnLine) {
  const auto a = AlgebroidModel::tangent(1);
  const AForm f = scalar_form(1, 0, {{{}, Polynomial::variable(0)}});
  EXPECT_EQ(koszul_d(a, f).at({0})(0, 0), Polynomial(1));
}

TEST(KoszulD, ArityOverflowThrows) {
  const auto a = models::abelian(2);
  EXPECT_THROW(koszul_d(a, AForm(2, 3, 1, 1)), std::invalid_argument);
}

TEST(KoszulD, SquaresToZero) {
  std::mt19937_64 rng(17);
  for (const auto& a : all_models()) {
    for (int k = 0; k + 2 <= static_cast<int>(a.rank()); ++k) {
      const AForm w = random_form(rng, a, k, 1, 1, 3);
      EXPECT_TRUE(koszul_d(a, koszul_d(a, w)).is_zero());
    }
  }
}

TEST(KoszulD, DerivationRule) {
  std::mt19937_64 rng(23);
  for (const auto& a : all_models()) {
    const int r = static_cast<int>(a.rank());
    for (int p = 0; p <= r; ++p)
      for (int q = 0; p + q + 1 <= r; ++q) {
        const AForm w = random_form(rng, a, p, 1, 1);
        const AForm e = random_form(rng, a, q, 1, 1);
        const AForm lhs = koszul_d(a, wedge(w, e));
        const AForm rhs = wedge(koszul_d(a, w), e) + scaled(wedge(w, koszul_d(a, e)), Rational(parity_sign(p)));
        EXPECT_EQ(lhs, rhs);
      }
  }
}

TEST(BuildAdjoint, Sl2IsClassicalAdjoint) {
  const auto a = models::sl2();
  const RepA e = build_adjoint(a, TMConnection::flat(a));
  EXPECT_EQ(e.dim(), 3U);
  EXPECT_TRUE(e.del.is_zero());
  EXPECT_TRUE(e.omegas.empty());
  const auto ad = hrep::oracle::adjoint_rep(hrep::oracle::sl2());
  for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(e.conn[s], to_poly(ad[s]));
}

TEST(BuildAdjoint, FlatLine) {
  const auto a = AlgebroidModel::tangent(1);
  const RepA e = build_adjoint(a, TMConnection::flat(a));
  EXPECT_EQ(e.degrees, (std::vector<int>{0, 1}));
  EXPECT_EQ(e.del(1, 0), Polynomial(1));
  EXPECT_TRUE(e.conn[0].is_zero());
  EXPECT_TRUE(e.omegas.empty());
}

TEST(BuildAdjoint, LineWithLinearChristoffel) {
  const auto a = AlgebroidModel::tangent(1);
  TMConnection conn = TMConnection::flat(a);
  conn.gamma[0](0, 0) = Polynomial::variable(0);
  const RepA e = build_adjoint(a, conn);
  EXPECT_EQ(e.conn[0](0, 0), Polynomial::variable(0));
  EXPECT_EQ(e.conn[0](1, 1), Polynomial::variable(0));
  // a two-form on a rank one algebroid vanishes
  EXPECT_TRUE(e.omegas.empty());
  const Section one = a.frame(0);
  EXPECT_EQ(basic_curvature(a, conn, one, one, VectorField{Polynomial(1)}), Section{Polynomial(0)});
  EXPECT_TRUE(check_rep(a, e).ok());
}

TEST(BuildAdjoint, PlaneCurvatureMatchesOracle) {
  // Oracle: independent symbolic expansion of the five-term formula.
  const std::vector<std::string> names = {"x0", "x1"};
  const auto P = [&](const char* s) { return parse_polynomial(s, names); };
  const auto a = AlgebroidModel::tangent(2);
  TMConnection conn = TMConnection::flat(a);
  conn.gamma[0] = PolyMatrix(2, 2, {P("x0"), P("0"), P("x1"), P("1")});
  conn.gamma[1] = PolyMatrix(2, 2, {P("0"), P("x0*x1"), P("2"), P("0")});
  const RepA e = build_adjoint(a, conn);
  ASSERT_EQ(e.omegas.count(2), 1U);
  const PolyMatrix k = e.omegas.at(2).at({0, 1});
  EXPECT_EQ(k(0, 2), P("x0*x1^2"));
  EXPECT_EQ(k(1, 2), P("x0 - 1"));
  EXPECT_EQ(k(0, 3), P("-x0^2*x1 + 2*x0*x1 - x1"));
  EXPECT_EQ(k(1, 3), P("-x0*x1^2"));
  const std::vector<Rational> pt = {Rational(1), Rational(2)};
  const RationalMatrix kv = evaluate(k, pt);
  EXPECT_EQ(kv(0, 2), 4);
  EXPECT_EQ(kv(1, 2), 0);
  EXPECT_EQ(kv(0, 3), 0);
  EXPECT_EQ(kv(1, 3), -4);
}

TEST(CheckRep, AdjointPassesForEveryModel) {
  std::mt19937_64 rng(31);
  for (const auto& a : all_models()) {
    for (int trial = 0; trial < 3; ++trial) {
      const TMConnection conn = trial == 0 ? TMConnection::flat(a) : random_connection(rng, a);
      const RepA e = build_adjoint(a, conn);
      const auto report = check_rep(a, e, {random_point(rng, a.chart_dim())});
      EXPECT_TRUE(report.ok()) << "model rank " << a.rank() << " chart " << a.chart_dim() << " equation "
                               << (report.ok() ? -1 : report.failures.front().equation);
    }
  }
}

TEST(CheckRep, LiteralArityDegreeConventionFailsOnAdjoint) {
  // The alternative sign rule breaks D^2 = 0 once del and the connection interact.
  const auto a = AlgebroidModel::tangent(2);
  std::mt19937_64 rng(8);
  const RepA e = build_adjoint(a, random_connection(rng, a));
  EXPECT_TRUE(check_rep(a, e, {}, SignConvention::kFormsFirst).ok());
  EXPECT_FALSE(check_rep(a, e, {}, SignConvention::kArityTimesDegree).ok());
}

TEST(CheckRep, FlatRepresentationPassesIffFlat) {
  const auto a = AlgebroidModel::tangent(2);
  RepA e;
  e.degrees = {0};
  e.del = PolyMatrix(1, 1);
  // nabla_{d0} = d0 + x1, nabla_{d1} = d1 + x0 is flat: d0(x0) - d1(x1) = 0
  e.conn = {PolyMatrix(1, 1, {Polynomial::variable(1)}), PolyMatrix(1, 1, {Polynomial::variable(0)})};
  EXPECT_TRUE(check_rep(a, e).ok());
  e.conn[1] = PolyMatrix(1, 1, {Polynomial::variable(0) * Polynomial::variable(0)});
  const auto r = check_rep(a, e, {{Rational(1), Rational(1)}});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failures.front().equation, 2);
  ASSERT_TRUE(r.failures.front().point.has_value());
}

TEST(CheckRep, NonSquareZeroDifferentialFailsEquationZero) {
  const auto a = models::abelian(1);
  RepA e;
  e.degrees = {0, 1, 2};
  e.del = PolyMatrix(3, 3);
  e.del(1, 0) = Polynomial(1);
  e.del(2, 1) = Polynomial(1);
  e.conn = {PolyMatrix(3, 3)};
  const auto r = check_rep(a, e);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failures.front().equation, 0);
}

TEST(ApplyD, SectionWithFlatConnectionIsCovariantDerivative) {
  const auto a = AlgebroidModel::tangent(1);
  RepA e;
  e.degrees = {0};
  e.del = PolyMatrix(1, 1);
  e.conn = {PolyMatrix(1, 1)};
  AForm s(1, 0, 1, 1);
  s.set({}, PolyMatrix(1, 1, {Polynomial::variable(0).pow(3)}));
  const MixedForm d = apply_D(a, e, s);
  EXPECT_EQ(d.at(1).at({0})(0, 0), Polynomial::variable(0).pow(2) * Rational(3));
}

TEST(ApplyD, SquaresToZeroOnFormsUpToArityThree) {
  std::mt19937_64 rng(41);
  for (const auto& a : all_models()) {
    const RepA e = build_adjoint(a, random_connection(rng, a));
    const int top = std::min(3, static_cast<int>(a.rank()));
    for (int k = 0; k <= top; ++k) {
      const AForm eta = random_form(rng, a, k, e.dim(), 1);
      EXPECT_TRUE(is_zero(apply_D(a, e, apply_D(a, e, eta)))) << "arity " << k;
    }
  }
}

TEST(ApplyD, DerivationRule) {
  std::mt19937_64 rng(43);
  for (const auto& a : all_models()) {
    const RepA e = build_adjoint(a, random_connection(rng, a));
    const int r = static_cast<int>(a.rank());
    for (int p = 0; p <= std::min(2, r); ++p)
      for (int q = 0; p + q <= r; ++q) {
        const AForm w = random_form(rng, a, p, 1, 1);
        const AForm eta = random_form(rng, a, q, e.dim(), 1);
        MixedForm lhs = apply_D(a, e, scalar_times(w, eta));
        MixedForm rhs;
        if (p + 1 <= r) accumulate(rhs, scalar_times(koszul_d(a, w), eta));
        for (const auto& [k, f] : apply_D(a, e, eta)) {
          if (p + k > r) continue;
          accumulate(rhs, scaled(scalar_times(w, f), Rational(parity_sign(p))));
        }
        for (const auto& [k, f] : rhs) accumulate(lhs, scaled(f, Rational(-1)));
        EXPECT_TRUE(is_zero(lhs)) << "p=" << p << " q=" << q;
      }
  }
}

TEST(Morphism, IdentityPasses) {
  const auto a = models::sl2_on_plane();
  std::mt19937_64 rng(3);
  const RepA e = build_adjoint(a, random_connection(rng, a));
  EXPECT_TRUE(check_morphism_A(a, MorphismA::identity(a, e), e, e).ok());
  EXPECT_TRUE(quasi_iso_A(a, MorphismA::identity(a, e), e, e, {random_point(rng, 2)}));
}

TEST(Morphism, ChainMapBetweenGenuineRepresentations) {
  // Trivial line bundle with nabla = d + x1 dx0 + x0 dx1 (flat) and the
  // gauge-equivalent trivial connection, related by multiplication by exp-free unit 1.
  const auto a = AlgebroidModel::tangent(2);
  RepA e;
  e.degrees = {0};
  e.del = PolyMatrix(1, 1);
  e.conn = {PolyMatrix(1, 1), PolyMatrix(1, 1)};
  RepA f = e;
  f.degrees = {0, 0};
  f.del = PolyMatrix(2, 2);
  f.conn = {PolyMatrix(2, 2), PolyMatrix(2, 2)};
  MorphismA phi;
  AForm p0(2, 0, 2, 1);
  p0.set({}, PolyMatrix(2, 1, {Polynomial(1), Polynomial(3)}));
  phi.phi.emplace(0, p0);
  EXPECT_TRUE(check_morphism_A(a, phi, e, f).ok());
  p0.set({}, PolyMatrix(2, 1, {Polynomial(1), Polynomial::variable(0)}));
  phi.phi.at(0) = p0;
  const auto r = check_morphism_A(a, phi, e, f);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failing_equations, (std::vector<int>{1}));
}

TEST(Morphism, RandomNonIntertwiningFails) {
  std::mt19937_64 rng(9);
  const auto a = models::sl2();
  const RepA e = build_adjoint(a, TMConnection::flat(a));
  MorphismA phi;
  AForm p0(3, 0, 3, 3);
  PolyMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Polynomial(random_rational(rng));
  p0.set({}, m);
  phi.phi.emplace(0, p0);
  const auto r = check_morphism_A(a, phi, e, e);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.test_forms_ok);
}

TEST(Morphism, AdjointRepresentationsForDifferentConnectionsAreIsomorphic) {
  std::mt19937_64 rng(77);
  for (const auto& a : {AlgebroidModel::tangent(1), AlgebroidModel::tangent(2), models::sl2_on_plane(),
                        models::affine_line()}) {
    const TMConnection c1 = random_connection(rng, a), c2 = random_connection(rng, a);
    const RepA e1 = build_adjoint(a, c1), e2 = build_adjoint(a, c2);
    const MorphismA phi = adjoint_isomorphism(a, c1, c2);
    const auto report = check_morphism_A(a, phi, e1, e2);
    EXPECT_TRUE(report.ok()) << report.witness;
    EXPECT_TRUE(quasi_iso_A(a, phi, e1, e2, {random_point(rng, a.chart_dim())}));
  }
}

TEST(QuasiIso, Examples) {
  const auto a = models::abelian(1);
  RepA zero;
  zero.del = PolyMatrix(0, 0);
  zero.conn = {PolyMatrix(0, 0)};
  RepA acyclic;
  acyclic.degrees = {0, 1};
  acyclic.del = PolyMatrix(2, 2);
  acyclic.del(1, 0) = Polynomial(1);
  acyclic.conn = {PolyMatrix(2, 2)};
  MorphismA inc;
  inc.phi.emplace(0, AForm(1, 0, 2, 0));
  EXPECT_TRUE(check_morphism_A(a, inc, zero, acyclic).ok());
  EXPECT_TRUE(quasi_iso_A(a, inc, zero, acyclic, {}));

  RepA line;
  line.degrees = {0};
  line.del = PolyMatrix(1, 1);
  line.conn = {PolyMatrix(1, 1)};
  MorphismA zero_map;
  zero_map.phi.emplace(0, AForm(1, 0, 1, 1));
  EXPECT_TRUE(check_morphism_A(a, zero_map, line, line).ok());
  EXPECT_FALSE(quasi_iso_A(a, zero_map, line, line, {}));
  EXPECT_TRUE(quasi_iso_A(a, MorphismA::identity(a, line), line, line, {}));
}

TEST(DeformationCohomology, Examples) {
  const auto sl2 = deformation_cohomology(models::sl2(), 0, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(sl2.dim(n), 0U);
  const auto ab = deformation_cohomology(models::abelian(2), 0, 2);
  EXPECT_EQ(ab.dim(2), 2U);
}

TEST(DeformationCohomology, MatchesDenseOracle) {
  using namespace hrep::oracle;
  const std::vector<std::pair<AlgebroidModel, LieData>> cases = {
      {models::heisenberg(), heisenberg()}, {models::so3(), so3()}, {models::sl2(), hrep::oracle::sl2()},
      {models::abelian(3), make_lie(3)}};
  for (const auto& [model, lie] : cases) {
    const CochainComplex oracle = ce_complex(lie, adjoint_rep(lie));
    const auto got = deformation_cohomology(model, 0, 3);
    const auto want = cohomology(oracle, 0, 3);
    EXPECT_EQ(got.entries, want.entries);
  }
}

TEST(DeformationCohomology, HeisenbergDimensions) {
  // frozen from the dense oracle
  const auto h = deformation_cohomology(models::heisenberg(), 0, 3);
  EXPECT_EQ(h.dim(0), 1U);
  EXPECT_EQ(h.dim(1), 4U);
  EXPECT_EQ(h.dim(2), 5U);
  EXPECT_EQ(h.dim(3), 2U);
}

TEST(AForm, AntisymmetryAndShapes) {
  AForm f(3, 2, 1, 1);
  f.set({0, 2}, PolyMatrix(1, 1, {Polynomial(5)}));
  EXPECT_EQ(f.at({2, 0})(0, 0), Polynomial(-5));
  EXPECT_TRUE(f.at({1, 1}).is_zero());
  EXPECT_THROW(f.set({2, 0}, PolyMatrix(1, 1, {Polynomial(1)})), std::invalid_argument);
  EXPECT_THROW(f.set({0, 1}, PolyMatrix(2, 1)), std::invalid_argument);
}
