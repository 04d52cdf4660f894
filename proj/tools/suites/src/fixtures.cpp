#include "hrep/suites/fixtures.hpp"

#include "hrep/combinatorics.hpp"

namespace hrep::suites {

namespace {

Polynomial x(std::size_t i) { return Polynomial::variable(i); }

}  // namespace

Rational Sampler::rational(int num_range, int den_range) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  const int a = num(rng_);
  Rational r(a, den(rng_));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (r != 0) return r;
  }
}

std::vector<Rational> Sampler::point(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rational());
  return out;
}

std::vector<std::vector<Rational>> Sampler::points(std::size_t n, int count) {
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < count; ++i) out.push_back(point(n));
  return out;
}

Polynomial Sampler::polynomial(std::size_t vars, int degree, std::size_t terms) {
  Polynomial p;
  std::uniform_int_distribution<int> deg(0, degree);
  std::uniform_int_distribution<std::size_t> var(0, vars == 0 ? 0 : vars - 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Polynomial::Exponents e(vars, 0);
    const int d = vars == 0 ? 0 : deg(rng_);
    for (int k = 0; k < d; ++k) ++e[var(rng_)];
    p += Polynomial::monomial(e, rational());
  }
  return p;
}

RationalMatrix Sampler::matrix(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
  return m;
}

RationalMatrix Sampler::invertible(std::size_t n) {
  for (;;) {
    RationalMatrix m = matrix(n, n);
    if (dense_rank(m) == n) return m;
  }
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

RepG pair_rep(Sampler& s, const Nerve& n) {
  const auto& g = n.groupoid();
  const std::size_t objs = g.num_objects();
  std::vector<RationalMatrix> a, ainv;
  std::vector<Rational> b;
  for (std::size_t x = 0; x < objs; ++x) {
    a.push_back(s.invertible(2));
    ainv.push_back(inverse(a.back()));
    b.push_back(s.nonzero_rational());
  }
  const RationalMatrix row = s.matrix(1, 2);
  std::vector<RationalMatrix> del, act;
  for (std::size_t x = 0; x < objs; ++x) {
    RationalMatrix d(3, 3);
    const RationalMatrix blk = scaled(row * ainv[x], b[x]);
    d(2, 0) = blk(0, 0);
    d(2, 1) = blk(0, 1);
    del.push_back(d);
  }
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

MorphismG random_gauge(Sampler& s, const Nerve& n) {
  MorphismG phi;
  for (std::size_t x = 0; x < n.size(0); ++x) {
    RationalMatrix m(3, 3);
    const RationalMatrix blk = s.invertible(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = blk(i, j);
    m(2, 2) = s.nonzero_rational();
    phi.phi[0].push_back(m);
  }
  for (std::size_t t = 0; t < n.size(1); ++t) {
    RationalMatrix m(3, 3);
    if (!n.degenerate(1, t)) {
      m(0, 2) = s.rational();
      m(1, 2) = s.rational();
    }
    phi.phi[1].push_back(m);
  }
  return phi;
}

FiniteCochain random_cochain(Sampler& s, const Nerve& n, int arity, std::size_t width) {
  FiniteCochain f = zero_cochain(n, arity, width);
  for (auto& v : f.values) v = s.rational();
  return f;
}

RepG sign_rep(const Nerve& n) {
  std::vector<RationalMatrix> act;
  for (std::size_t g = 0; g < n.groupoid().num_arrows(); ++g)
    act.push_back(scaled(RationalMatrix::identity(1), Rational(n.groupoid().is_unit(static_cast<int>(g)) ? 1 : -1)));
  return genuine_rep(n, {0}, std::vector<RationalMatrix>(n.size(0), RationalMatrix(1, 1)), act);
}

TMConnection random_connection(Sampler& s, const AlgebroidModel& a, int degree) {
  TMConnection c = TMConnection::flat(a);
  for (auto& g : c.gamma)
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t t = 0; t < g.cols(); ++t) g(r, t) = s.polynomial(a.chart_dim(), degree, 2);
  return c;
}

AForm random_form(Sampler& s, const AlgebroidModel& a, int arity, std::size_t rows, std::size_t cols, int degree) {
  AForm f(a.rank(), arity, rows, cols);
  for (const auto& idx : subsets(static_cast<int>(a.rank()), arity)) {
    PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = s.polynomial(a.chart_dim(), degree, 2);
    f.set(idx, m);
  }
  return f;
}

EhresmannConn quadratic_conn() { return EhresmannConn{PolyMatrix(1, 1, {Polynomial(1) + (x(0) - x(1)) * (x(0) - x(1))})}; }

EhresmannConn skew_conn() { return EhresmannConn{PolyMatrix(1, 1, {Polynomial(1) + x(0) * (x(0) - x(1))})}; }

EhresmannConn planar_conn() {
  const Polynomial u = x(0) - x(2), v = x(1) - x(3);
  return EhresmannConn{PolyMatrix(2, 2, {Polynomial(1) + u * x(1), v * v, u * x(3), Polynomial(1) - u * v})};
}

SmoothMorphismG planar_gauge() {
  SmoothMorphismG phi;
  phi.phi[0] = PolyMatrix::identity(4);
  phi.phi[0](0, 1) = x(0) * x(1);
  phi.phi[0](3, 2) = Polynomial(Rational(1, 2));
  phi.phi[1] = PolyMatrix(4, 4);
  phi.phi[1](0, 2) = (x(0) - x(2)) * (Polynomial(1) + x(1));
  phi.phi[1](1, 3) = (x(1) - x(3)) * x(0);
  return phi;
}

SmoothSection random_section(Sampler& s, const SmoothGroupoid& g) {
  SmoothSection out;
  for (std::size_t c = 0; c < g.block(); ++c)
    out.push_back(g.is_matrix_group() ? Polynomial(s.rational()) : s.polynomial(g.base_dim(), 2, 3));
  return out;
}

Polynomial random_function(Sampler& s, const SmoothGroupoid& g) {
  return g.is_matrix_group() ? Polynomial(s.rational()) : s.polynomial(g.base_dim(), 2, 3);
}

SmoothCochain random_cochain(Sampler& s, const SmoothGroupoid& g, int arity, std::size_t width, int degree,
                             std::size_t terms) {
  SmoothCochain f{arity, {}};
  for (std::size_t j = 0; j < width; ++j) f.values.push_back(s.polynomial(g.vars(arity), degree, terms));
  return f;
}

SmoothCochain random_normalized(Sampler& s, const SmoothGroupoid& g, int arity, std::size_t width, int degree,
                                std::size_t terms) {
  SmoothCochain f{arity, {}};
  for (std::size_t j = 0; j < width; ++j)
    f.values.push_back(normalized_from(g, arity, s.polynomial(g.vars(arity), degree, terms)));
  return f;
}

SmoothMap random_map(Sampler& s, const SmoothGroupoid& g, int arity, const std::vector<int>& degrees, int m, int degree,
                     std::size_t terms) {
  const std::size_t d = degrees.size();
  PolyMatrix v(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (degrees[r] == degrees[c] + m) v(r, c) = normalized_from(g, arity, s.polynomial(g.vars(arity), degree, terms));
  return SmoothMap{arity, v};
}

}  // namespace hrep::suites
