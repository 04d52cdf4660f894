#include "hrep/smooth_groupoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hrep/graded.hpp"

namespace hrep {

namespace {

Polynomial var(std::size_t i) { return Polynomial::variable(i); }

void append_block(Substitution& out, std::size_t start, std::size_t count) {
  for (std::size_t c = 0; c < count; ++c) out.push_back(var(start + c));
}

PolyMatrix signed_copy(const PolyMatrix& m, int sign) { return sign > 0 ? m : -m; }

PolyMatrix polynomial_inverse(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  bool constant = true;
  for (const auto& x : m.data()) constant = constant && x.is_constant();
  if (constant) {
    const RationalMatrix r = m.map([](const Polynomial& x) { return x.constant_term(); });
    try {
      return to_poly(inverse(r));
    } catch (const std::domain_error&) {
      throw std::domain_error("phi_0 is not invertible");
    }
  }
  // unipotent: (1 + N)^-1 = 1 - N + N^2 - ...
  const PolyMatrix nil = m - PolyMatrix::identity(n);
  PolyMatrix sum = PolyMatrix::identity(n), term = sum;
  for (std::size_t i = 1; i <= n; ++i) {
    term = -(term * nil);
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw std::domain_error("phi_0 is neither constant nor unipotent; no polynomial inverse");
}

}  // namespace

Polynomial pullback(const Polynomial& p, const Substitution& s) {
  if (p.num_vars() > s.size())
    throw std::invalid_argument("pullback: polynomial uses " + std::to_string(p.num_vars()) +
                                " variables, substitution provides " + std::to_string(s.size()));
  return p.substitute(s);
}

PolyMatrix pullback(const PolyMatrix& m, const Substitution& s) {
  return m.map([&s](const Polynomial& p) { return pullback(p, s); });
}

SmoothGroupoid SmoothGroupoid::matrix_group(std::size_t n, std::vector<std::pair<int, int>> free_positions) {
  SmoothGroupoid g;
  g.kind_ = Kind::kMatrixGroup;
  g.n_ = n;
  std::set<std::pair<int, int>> seen;
  for (const auto& [r, c] : free_positions) {
    if (r < 0 || c >= static_cast<int>(n) || r >= c)
      throw std::invalid_argument("matrix_group: free entries must be strictly upper triangular");
    if (!seen.insert({r, c}).second) throw std::invalid_argument("matrix_group: repeated free entry");
  }
  g.positions_ = std::move(free_positions);
  const std::size_t m = g.positions_.size();
  Substitution a, b;
  append_block(a, 0, m);
  append_block(b, m, m);
  const PolyMatrix prod = g.element(a) * g.element(b);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (seen.count({static_cast<int>(r), static_cast<int>(c)})) continue;
      if (prod(r, c) != Polynomial(r == c ? 1 : 0))
        throw std::invalid_argument("matrix_group: products leave the free entries (entry " + std::to_string(r) +
                                    "," + std::to_string(c) + ")");
    }
  g.product_ = g.coordinates(prod);
  return g;
}

SmoothGroupoid SmoothGroupoid::heisenberg() { return matrix_group(3, {{0, 1}, {0, 2}, {1, 2}}); }

SmoothGroupoid SmoothGroupoid::abelian_plane() { return matrix_group(3, {{0, 1}, {0, 2}}); }

SmoothGroupoid SmoothGroupoid::pair_chart(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair_chart: dimension must be positive");
  SmoothGroupoid g;
  g.kind_ = Kind::kPairChart;
  g.n_ = n;
  return g;
}

std::size_t SmoothGroupoid::vars(int k) const {
  if (k < 0) throw std::out_of_range("negative arity");
  return is_matrix_group() ? static_cast<std::size_t>(k) * block() : static_cast<std::size_t>(k + 1) * block();
}

Substitution SmoothGroupoid::face(int k, int i) const {
  if (k < 1 || i < 0 || i > k) throw std::out_of_range("face d_" + std::to_string(i) + " on arity " + std::to_string(k));
  const std::size_t b = block();
  Substitution out;
  if (!is_matrix_group()) {
    for (int v = 0; v < k; ++v) append_block(out, static_cast<std::size_t>(v < i ? v : v + 1) * b, b);
    return out;
  }
  // slots are 0-based here: slot j owns variables j*b..
  for (int j = 0; j < k - 1; ++j) {
    if (i == 0) {
      append_block(out, static_cast<std::size_t>(j + 1) * b, b);
    } else if (j < i - 1 || i == k) {
      append_block(out, static_cast<std::size_t>(j) * b, b);
    } else if (j == i - 1) {
      Substitution pair;
      append_block(pair, static_cast<std::size_t>(j) * b, 2 * b);
      for (const auto& p : product_) out.push_back(pullback(p, pair));
    } else {
      append_block(out, static_cast<std::size_t>(j + 1) * b, b);
    }
  }
  return out;
}

Substitution SmoothGroupoid::sub(int k, int a, int b) const {
  if (a < 0 || b > k || a > b) throw std::out_of_range("sub-tuple range out of bounds");
  const std::size_t blk = block();
  Substitution out;
  if (is_matrix_group()) {
    append_block(out, static_cast<std::size_t>(a) * blk, static_cast<std::size_t>(b - a) * blk);
  } else {
    append_block(out, static_cast<std::size_t>(a) * blk, static_cast<std::size_t>(b - a + 1) * blk);
  }
  return out;
}

Substitution SmoothGroupoid::degeneracy(int k, int j) const {
  if (j < 0 || j > k) throw std::out_of_range("degeneracy index out of range");
  const std::size_t b = block();
  Substitution out;
  if (is_matrix_group()) {
    for (int v = 0; v <= k; ++v) {
      if (v < j) append_block(out, static_cast<std::size_t>(v) * b, b);
      else if (v == j) out.insert(out.end(), b, Polynomial());
      else append_block(out, static_cast<std::size_t>(v - 1) * b, b);
    }
  } else {
    for (int v = 0; v <= k + 1; ++v) append_block(out, static_cast<std::size_t>(v <= j ? v : v - 1) * b, b);
  }
  return out;
}

AlgebroidModel SmoothGroupoid::algebroid() const {
  if (!is_matrix_group()) return AlgebroidModel::tangent(n_);
  const std::size_t m = positions_.size();
  std::vector<std::vector<std::vector<Rational>>> c(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Substitution ea(m, Polynomial()), eb(m, Polynomial());
      ea[a] = 1;
      eb[b] = 1;
      const PolyMatrix x = element(ea) - PolyMatrix::identity(n_), y = element(eb) - PolyMatrix::identity(n_);
      const Substitution br = coordinates(y * x - x * y);
      for (std::size_t k = 0; k < m; ++k) c[a][b][k] = br[k].constant_term();
    }
  return AlgebroidModel::point(m, std::move(c));
}

PolyMatrix SmoothGroupoid::element(std::span<const Polynomial> coords) const {
  if (coords.size() != positions_.size()) throw std::invalid_argument("element: wrong number of coordinates");
  PolyMatrix g = PolyMatrix::identity(n_);
  for (std::size_t c = 0; c < coords.size(); ++c) g(positions_[c].first, positions_[c].second) += coords[c];
  return g;
}

Substitution SmoothGroupoid::coordinates(const PolyMatrix& m) const {
  Substitution out;
  for (const auto& [r, c] : positions_) out.push_back(m(r, c));
  return out;
}

PolyMatrix SmoothGroupoid::inverse_element(const PolyMatrix& g) const { return polynomial_inverse(g); }

SmoothCochain operator+(const SmoothCochain& a, const SmoothCochain& b) {
  if (a.arity != b.arity || a.width() != b.width()) throw std::invalid_argument("cochains of different shape");
  SmoothCochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

SmoothCochain operator-(const SmoothCochain& a, const SmoothCochain& b) { return a + scaled(b, Rational(-1)); }

SmoothCochain scaled(const SmoothCochain& a, const Rational& s) {
  SmoothCochain out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

bool is_zero(const SmoothCochain& f) {
  return std::all_of(f.values.begin(), f.values.end(), [](const Polynomial& p) { return p.is_zero(); });
}

SmoothCochain face_pullback(const SmoothGroupoid& g, const SmoothCochain& f, int i) {
  const Substitution s = g.face(f.arity + 1, i);
  SmoothCochain out{f.arity + 1, {}};
  for (const auto& v : f.values) out.values.push_back(pullback(v, s));
  return out;
}

SmoothCochain delta(const SmoothGroupoid& g, const SmoothCochain& f) {
  const int k = f.arity;
  SmoothCochain out{k + 1, std::vector<Polynomial>(f.width())};
  for (int i = 0; i <= k + 1; ++i) {
    const SmoothCochain term = face_pullback(g, f, i);
    const int sign = parity_sign(k + i);
    for (std::size_t j = 0; j < f.width(); ++j) out.values[j] += sign > 0 ? term.values[j] : -term.values[j];
  }
  return out;
}

SmoothCochain star(const SmoothGroupoid& g, const SmoothCochain& eta, const SmoothCochain& f) {
  if (f.width() != 1) throw std::invalid_argument("star: right factor must be scalar");
  const int p = eta.arity, k = f.arity, q = p + k;
  const Polynomial right = pullback(f.values[0], g.sub(q, p, q)) * Rational(parity_sign(static_cast<long>(k) * p));
  const Substitution left = g.sub(q, 0, p);
  SmoothCochain out{q, {}};
  for (const auto& v : eta.values) out.values.push_back(pullback(v, left) * right);
  return out;
}

bool is_normalized(const SmoothGroupoid& g, const SmoothCochain& f) {
  for (int j = 0; j < f.arity; ++j) {
    const Substitution s = g.degeneracy(f.arity - 1, j);
    for (const auto& v : f.values)
      if (!pullback(v, s).is_zero()) return false;
  }
  return true;
}

Polynomial normalized_from(const SmoothGroupoid& g, int k, const Polynomial& p) {
  const std::size_t b = g.block();
  if (g.is_matrix_group()) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
      bool all = true;
      for (int slot = 0; slot < k && all; ++slot) {
        bool hit = false;
        for (std::size_t v = static_cast<std::size_t>(slot) * b; v < static_cast<std::size_t>(slot + 1) * b; ++v)
          hit = hit || (v < e.size() && e[v] > 0);
        all = hit;
      }
      if (all) out += Polynomial::monomial(e, c);
    }
    return out;
  }
  Polynomial out = p;
  for (int i = 1; i <= k; ++i) {
    const std::size_t c = static_cast<std::size_t>(i - 1) % b;
    out *= var(static_cast<std::size_t>(i) * b + c) - var(static_cast<std::size_t>(i - 1) * b + c);
  }
  return out;
}

SmoothCochain source_pullback(const SmoothGroupoid& g, const Polynomial& h, int k) {
  return SmoothCochain{k, {pullback(h, g.sub(k, k, k))}};
}

std::vector<Rational> evaluate(const SmoothCochain& f, std::span<const Rational> point) {
  std::vector<Rational> out;
  for (const auto& v : f.values) out.push_back(v.evaluate<Rational>(point));
  return out;
}

SmoothMap compose(const SmoothGroupoid& g, const SmoothMap& f, const SmoothMap& h) {
  const int q = f.arity + h.arity;
  return SmoothMap{q, pullback(f.value, g.sub(q, 0, f.arity)) * pullback(h.value, g.sub(q, f.arity, q))};
}

SmoothMap face_pullback(const SmoothGroupoid& g, const SmoothMap& f, int i) {
  return SmoothMap{f.arity + 1, pullback(f.value, g.face(f.arity + 1, i))};
}

bool is_normalized(const SmoothGroupoid& g, const SmoothMap& f) {
  for (int j = 0; j < f.arity; ++j)
    if (!pullback(f.value, g.degeneracy(f.arity - 1, j)).is_zero()) return false;
  return true;
}

PolyMatrix SmoothRepG::at(int k) const {
  auto it = F.find(k);
  if (it != F.end()) return it->second;
  return PolyMatrix(dim(), dim());
}

PolyMatrix SmoothMorphismG::at(int k, std::size_t rows, std::size_t cols) const {
  auto it = phi.find(k);
  if (it != phi.end()) return it->second;
  return PolyMatrix(rows, cols);
}

namespace {

std::string first_nonzero(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + m(r, c).to_string();
  return "";
}

void check_degrees(const SmoothRepG& r) {
  for (const auto& [k, m] : r.F) {
    if (m.rows() != r.dim() || m.cols() != r.dim()) throw std::invalid_argument("SmoothRepG: F_k has the wrong shape");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && r.degrees[i] != r.degrees[j] + 1 - k)
          throw std::invalid_argument("SmoothRepG: F_" + std::to_string(k) + " is not of degree " +
                                      std::to_string(1 - k));
  }
}

}  // namespace

SmoothCheck check_rep_G(const SmoothGroupoid& g, const SmoothRepG& r, int bound) {
  check_degrees(r);
  SmoothCheck report;
  const std::size_t d = r.dim();
  for (int k = 0; k <= bound; ++k) {
    PolyMatrix diff(d, d);
    for (int j = 1; j <= k - 1; ++j) diff += signed_copy(pullback(r.at(k - 1), g.face(k, j)), parity_sign(j));
    for (int j = 0; j <= k; ++j)
      diff -= signed_copy(pullback(r.at(j), g.sub(k, 0, j)) * pullback(r.at(k - j), g.sub(k, j, k)), parity_sign(j));
    if (!diff.is_zero())
      report.failures.push_back("structure equation " + std::to_string(k) + " fails: " + first_nonzero(diff));
  }
  if (r.unital) {
    if (pullback(r.at(1), g.degeneracy(0, 0)) != PolyMatrix::identity(d))
      report.failures.push_back("F_1 at units is not the identity");
    for (const auto& [k, m] : r.F)
      if (k >= 2 && !is_normalized(g, SmoothMap{k, m}))
        report.failures.push_back("F_" + std::to_string(k) + " is not normalized");
  }
  return report;
}

SmoothCheck check_morphism_G(const SmoothGroupoid& g, const SmoothMorphismG& phi, const SmoothRepG& e,
                             const SmoothRepG& f, int bound) {
  SmoothCheck report;
  const std::size_t de = e.dim(), df = f.dim();
  for (int k = 0; k <= bound; ++k) {
    PolyMatrix diff(df, de);
    for (int j = 0; j <= k; ++j) {
      diff += signed_copy(pullback(phi.at(j, df, de), g.sub(k, 0, j)) * pullback(e.at(k - j), g.sub(k, j, k)),
                          parity_sign(j));
      diff -= pullback(f.at(j), g.sub(k, 0, j)) * pullback(phi.at(k - j, df, de), g.sub(k, j, k));
    }
    for (int j = 1; j <= k - 1; ++j) diff -= signed_copy(pullback(phi.at(k - 1, df, de), g.face(k, j)), parity_sign(j));
    if (!diff.is_zero())
      report.failures.push_back("equation for a map " + std::to_string(k) + " fails: " + first_nonzero(diff));
  }
  return report;
}

SmoothCochain tilde_F(const SmoothGroupoid& g, int k, int m, const PolyMatrix& f, const std::vector<int>& col_degrees,
                      const SmoothCochain& eta) {
  if (eta.width() != col_degrees.size() || f.cols() != eta.width())
    throw std::invalid_argument("tilde_F: bidegree mismatch");
  const int p = eta.arity, q = p + k;
  std::vector<Polynomial> signed_eta;
  for (std::size_t c = 0; c < eta.width(); ++c)
    signed_eta.push_back(eta.values[c] * Rational(parity_sign(static_cast<long>(k) * (p + col_degrees[c]))));
  SmoothCochain out{q, std::vector<Polynomial>(f.rows())};
  const auto apply = [&](const PolyMatrix& mat, const Substitution& s) {
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < eta.width(); ++c)
        if (!mat(r, c).is_zero()) out.values[r] += mat(r, c) * pullback(signed_eta[c], s);
  };
  if (k == 1 && m == 0) {
    if (f.rows() != f.cols()) throw std::invalid_argument("tilde_F: F_1 must be square");
    apply(pullback(f, g.sub(q, 0, 1)), g.face(q, 0));
    for (int i = 1; i <= q; ++i) {
      const Substitution s = g.face(q, i);
      const int sign = i <= p ? parity_sign(i) : parity_sign(p + 1);
      for (std::size_t r = 0; r < f.rows(); ++r) out.values[r] += pullback(signed_eta[r], s) * Rational(sign);
    }
    return out;
  }
  apply(pullback(f, g.sub(q, 0, k)), g.sub(q, k, q));
  return out;
}

std::map<int, SmoothCochain> apply_D(const SmoothGroupoid& g, const SmoothRepG& r, const SmoothCochain& eta) {
  std::map<int, SmoothCochain> out;
  for (const auto& [k, f] : r.F) {
    SmoothCochain term = tilde_F(g, k, 1 - k, f, r.degrees, eta);
    auto it = out.find(term.arity);
    if (it == out.end()) out.emplace(term.arity, std::move(term));
    else it->second = it->second + term;
  }
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

SmoothRepG gauge_transform(const SmoothGroupoid& g, const SmoothRepG& r, const SmoothMorphismG& phi, int bound) {
  check_degrees(r);
  const std::size_t d = r.dim();
  const PolyMatrix inv0 = polynomial_inverse(phi.at(0, d, d));
  SmoothRepG out;
  out.degrees = r.degrees;
  out.unital = r.unital;
  for (int k = 0; k <= bound; ++k) {
    PolyMatrix rhs(d, d);
    for (int j = 0; j <= k; ++j)
      rhs += signed_copy(pullback(phi.at(j, d, d), g.sub(k, 0, j)) * pullback(r.at(k - j), g.sub(k, j, k)),
                         parity_sign(j));
    for (int j = 0; j < k; ++j) rhs -= pullback(out.at(j), g.sub(k, 0, j)) * pullback(phi.at(k - j, d, d), g.sub(k, j, k));
    for (int j = 1; j <= k - 1; ++j) rhs -= signed_copy(pullback(phi.at(k - 1, d, d), g.face(k, j)), parity_sign(j));
    PolyMatrix fk = rhs * pullback(inv0, g.sub(k, k, k));
    if (!fk.is_zero() || k == 1) out.F[k] = std::move(fk);
  }
  return out;
}

EhresmannConn trivial_connection(const SmoothGroupoid& g) {
  if (g.is_matrix_group()) return {};
  return EhresmannConn{PolyMatrix::identity(g.base_dim())};
}

SmoothRepG build_Ad_sigma(const SmoothGroupoid& g, const EhresmannConn& sigma) {
  SmoothRepG r;
  if (g.is_matrix_group()) {
    const std::size_t m = g.positions().size();
    r.degrees.assign(m, 0);
    Substitution coords;
    for (std::size_t c = 0; c < m; ++c) coords.push_back(Polynomial::variable(c));
    const PolyMatrix el = g.element(coords), inv = g.inverse_element(el);
    PolyMatrix ad(m, m);
    for (std::size_t b = 0; b < m; ++b) {
      Substitution eb(m, Polynomial());
      eb[b] = 1;
      const PolyMatrix conj = el * (g.element(eb) - PolyMatrix::identity(g.matrix_size())) * inv;
      const Substitution col = g.coordinates(conj);
      for (std::size_t a = 0; a < m; ++a) ad(a, b) = col[a];
    }
    r.F[1] = std::move(ad);
    return r;
  }
  const std::size_t n = g.base_dim();
  const PolyMatrix& lam = sigma.lambda;
  if (lam.rows() != n || lam.cols() != n) throw std::invalid_argument("build_Ad_sigma: lambda must be n x n");
  if (pullback(lam, g.degeneracy(0, 0)) != PolyMatrix::identity(n))
    throw std::invalid_argument("build_Ad_sigma: sigma is not the natural splitting at units");
  r.degrees.assign(n, 0);
  r.degrees.resize(2 * n, 1);
  PolyMatrix f0(2 * n, 2 * n), f1(2 * n, 2 * n), k2(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) f0(n + i, i) = 1;
  const PolyMatrix lg = pullback(lam, g.sub(2, 0, 1)), lh = pullback(lam, g.sub(2, 1, 2)),
                   lgh = pullback(lam, g.face(2, 1));
  const PolyMatrix k = lg * lh - lgh;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      f1(i, j) = lam(i, j);
      f1(n + i, n + j) = lam(i, j);
      k2(i, n + j) = k(i, j);
    }
  r.F[0] = std::move(f0);
  r.F[1] = std::move(f1);
  if (!k2.is_zero()) r.F[2] = std::move(k2);
  return r;
}

}  // namespace hrep
