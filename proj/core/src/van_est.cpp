#include "hrep/van_est.hpp"

#include <random>
#include <stdexcept>

#include "hrep/combinatorics.hpp"
#include "hrep/graded.hpp"
#include "hrep/jet.hpp"

namespace hrep {

namespace {

Polynomial var(std::size_t i) { return Polynomial::variable(i); }

SmoothCochain flatten(const SmoothMap& f) {
  return SmoothCochain{f.arity, f.value.data()};
}

PolyMatrix unflatten(const SmoothCochain& c, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, cols, c.values);
}

std::string point_string(std::span<const Rational> pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + pt[i].get_str();
  return s + ")";
}

// Value of a form on arbitrary sections at a chart point, by multilinearity.
RationalMatrix form_on(const AForm& w, const std::vector<std::vector<Rational>>& sections,
                       std::span<const Rational> point) {
  const int k = w.arity();
  RationalMatrix acc(w.rows(), w.cols());
  if (k == 0) return evaluate(w.at({}), point);
  const auto values = w.evaluate(point);
  // expand over all index tuples with distinct entries
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  const int r = static_cast<int>(w.rank());
  for (;;) {
    Rational coeff(1);
    for (int j = 0; j < k && coeff != 0; ++j) coeff *= sections[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    if (coeff != 0) {
      std::vector<int> sorted = idx;
      const int sign = sort_with_sign(sorted);
      auto it = sign == 0 ? values.end() : values.find(sorted);
      if (it != values.end()) {
        const Rational c = coeff * sign;
        for (std::size_t a = 0; a < acc.rows(); ++a)
          for (std::size_t b = 0; b < acc.cols(); ++b) acc(a, b) += c * it->second(a, b);
      }
    }
    int pos = k - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == r) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return acc;
}

}  // namespace

SmoothSection frame_section(const SmoothGroupoid& g, std::size_t a) {
  SmoothSection s(g.block(), Polynomial());
  if (a >= s.size()) throw std::out_of_range("frame index out of range");
  s[a] = 1;
  return s;
}

SmoothCochain R_iterated(const SmoothGroupoid& g, const SmoothCochain& eta, const std::vector<SmoothSection>& alphas) {
  const int k = eta.arity, j = static_cast<int>(alphas.size());
  if (j == 0) return eta;
  if (j > k) throw std::invalid_argument("R: more sections than arguments");
  if (j > max_generators())
    throw std::out_of_range("R: " + std::to_string(j) + " derivatives exceed the jet generator cap " +
                            std::to_string(max_generators()));
  const int out = k - j;
  const std::size_t b = g.block();
  JetVector<Polynomial> point;
  for (std::size_t i = 0; i < g.vars(out); ++i) point.emplace_back(var(i));
  for (int v = out + 1; v <= k; ++v) {
    const int i = k - v;
    const SmoothSection& alpha = alphas[static_cast<std::size_t>(i)];
    if (alpha.size() != b) throw std::invalid_argument("R: section has the wrong number of components");
    const PolyJet eps = PolyJet::generator(i, j);
    if (g.is_matrix_group()) {
      for (const auto& c : alpha) {
        if (!c.is_constant()) throw std::invalid_argument("R: sections of a matrix group are constant");
        point.push_back(eps * Rational(-c.constant_term()));
      }
    } else {
      const JetVector<Polynomial> prev(point.end() - static_cast<std::ptrdiff_t>(b), point.end());
      for (std::size_t c = 0; c < b; ++c) point.push_back(prev[c] + eps * poly_eval_jet(alpha[c], prev));
    }
  }
  std::vector<int> gens;
  for (int i = 0; i < j; ++i) gens.push_back(i);
  SmoothCochain result{out, {}};
  for (const auto& p : eta.values) result.values.push_back(poly_eval_jet(p, point).extract(gens));
  return result;
}

SmoothCochain R_alpha(const SmoothGroupoid& g, const SmoothCochain& eta, const SmoothSection& alpha) {
  return R_iterated(g, eta, {alpha});
}

std::vector<Polynomial> Psi_on(const SmoothGroupoid& g, const SmoothCochain& eta, const std::vector<int>& degrees,
                               const std::vector<SmoothSection>& alphas) {
  const int k = eta.arity;
  if (static_cast<int>(alphas.size()) != k) throw std::invalid_argument("Psi: need one section per argument");
  if (degrees.size() != eta.width()) throw std::invalid_argument("Psi: one degree per component");
  std::vector<Polynomial> sum(eta.width());
  if (k == 0) return eta.values;
  for (const auto& [perm, sign] : permutations(k)) {
    std::vector<SmoothSection> seq;
    for (int i : perm) seq.push_back(alphas[static_cast<std::size_t>(i)]);
    const SmoothCochain r = R_iterated(g, eta, seq);
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += r.values[c] * Rational(sign);
  }
  for (std::size_t c = 0; c < sum.size(); ++c)
    if (parity_sign(static_cast<long>(k) * degrees[c]) < 0) sum[c] = -sum[c];
  return sum;
}

AForm Psi(const SmoothGroupoid& g, const SmoothCochain& eta, const std::vector<int>& degrees) {
  const int k = eta.arity;
  const std::size_t rank = g.block();
  AForm out(rank, k, eta.width(), 1);
  for (const auto& idx : subsets(static_cast<int>(rank), k)) {
    std::vector<SmoothSection> alphas;
    for (int a : idx) alphas.push_back(frame_section(g, static_cast<std::size_t>(a)));
    std::vector<Polynomial> v = Psi_on(g, eta, degrees, alphas);
    const std::size_t rows = v.size();
    out.set(idx, PolyMatrix(rows, 1, std::move(v)));
  }
  return out;
}

AForm Psi(const SmoothGroupoid& g, const SmoothCochain& f) {
  return Psi(g, f, std::vector<int>(f.width(), 0));
}

bool ChainMapReport::ok() const {
  for (const auto& e : entries)
    if (!e.symbolic_ok || e.samples_ok != e.samples) return false;
  return true;
}

namespace {

AForm koszul_or_zero(const AlgebroidModel& a, const AForm& w) {
  if (static_cast<std::size_t>(w.arity()) >= a.rank()) return AForm(a.rank(), w.arity() + 1, w.rows(), w.cols());
  return koszul_d(a, w);
}

}  // namespace

ChainMapReport check_chain_map(const SmoothGroupoid& g, const std::vector<SmoothCochain>& cochains, int samples,
                               unsigned seed) {
  const AlgebroidModel a = g.algebroid();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-4, 4);
  ChainMapReport report;
  for (const auto& f : cochains) {
    ChainMapReport::Entry e;
    e.arity = f.arity;
    const SmoothCochain df = delta(g, f);
    const AForm lhs = Psi(g, df), rhs = koszul_or_zero(a, Psi(g, f));
    e.symbolic_ok = lhs == rhs;
    if (!e.symbolic_ok) e.witness = "frame forms differ";
    const std::size_t base = g.base_dim(), rank = a.rank();
    for (int s = 0; s < samples; ++s) {
      ++e.samples;
      std::vector<Rational> point;
      for (std::size_t i = 0; i < base; ++i) {
        Rational v(coef(rng), 1 + (coef(rng) + 4) % 3);
        v.canonicalize();
        point.push_back(v);
      }
      std::vector<SmoothSection> alphas;
      std::vector<std::vector<Rational>> values;
      for (int i = 0; i <= f.arity; ++i) {
        SmoothSection alpha;
        std::vector<Rational> at;
        for (std::size_t c = 0; c < rank; ++c) {
          Polynomial comp(Rational(coef(rng)));
          // affine coefficients on a chart, so multilinearity over functions is exercised
          for (std::size_t v = 0; v < base; ++v) comp += var(v) * Rational(coef(rng));
          at.push_back(comp.evaluate<Rational>(point));
          alpha.push_back(std::move(comp));
        }
        alphas.push_back(std::move(alpha));
        values.push_back(std::move(at));
      }
      const Rational direct = Psi_on(g, df, {0}, alphas)[0].evaluate<Rational>(point);
      const Rational via_forms = form_on(rhs, values, point)(0, 0);
      if (direct == via_forms) {
        ++e.samples_ok;
      } else if (e.witness.empty()) {
        e.witness = "sample " + std::to_string(s) + " at " + point_string(point) + ": Psi(delta f) = " +
                    direct.get_str() + ", d Psi(f) = " + via_forms.get_str();
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

SmoothMap hat_R_alpha(const SmoothGroupoid& g, const SmoothMap& f, const SmoothSection& alpha, bool guard) {
  const SmoothCochain r = R_alpha(g, flatten(f), alpha);
  SmoothMap out{f.arity - 1, unflatten(r, f.value.rows(), f.value.cols())};
  if (guard && !g.is_matrix_group()) {
    const std::size_t n = g.base_dim(), k = static_cast<std::size_t>(f.arity);
    Polynomial bump(1);
    for (std::size_t c = 0; c < n; ++c) bump += (var(k * n + c) - var((k - 1) * n + c)) * Rational(static_cast<long>(c + 2));
    SmoothCochain bumped = flatten(f);
    for (auto& v : bumped.values) v *= bump;
    if (R_alpha(g, bumped, alpha) != r)
      throw std::domain_error("hat_R_alpha: result depends on the extending section (structure map not normalized)");
  }
  return out;
}

PolyMatrix hat_Psi_on(const SmoothGroupoid& g, const SmoothMap& f, int m, const std::vector<SmoothSection>& alphas) {
  const SmoothCochain flat = flatten(f);
  std::vector<Polynomial> v = Psi_on(g, flat, std::vector<int>(flat.width(), 0), alphas);
  PolyMatrix out(f.value.rows(), f.value.cols(), std::move(v));
  return parity_sign(static_cast<long>(f.arity) * m) > 0 ? out : -out;
}

AForm hat_Psi(const SmoothGroupoid& g, const SmoothMap& f, int m) {
  if (f.arity > 0 && !is_normalized(g, f)) throw std::invalid_argument("hat_Psi: cochain is not normalized");
  const std::size_t rank = g.block();
  AForm out(rank, f.arity, f.value.rows(), f.value.cols());
  for (const auto& idx : subsets(static_cast<int>(rank), f.arity)) {
    std::vector<SmoothSection> alphas;
    for (int a : idx) alphas.push_back(frame_section(g, static_cast<std::size_t>(a)));
    out.set(idx, hat_Psi_on(g, f, m, alphas));
  }
  return out;
}

std::vector<PolyMatrix> bar_Psi(const SmoothGroupoid& g, const PolyMatrix& f1) {
  if (pullback(f1, g.degeneracy(0, 0)) != PolyMatrix::identity(f1.rows()))
    throw std::invalid_argument("bar_Psi: F_1 is not the identity at units");
  std::vector<PolyMatrix> conn;
  for (std::size_t a = 0; a < g.block(); ++a)
    conn.push_back(hat_R_alpha(g, SmoothMap{1, f1}, frame_section(g, a), false).value);
  return conn;
}

AForm covariant_d_end(const AlgebroidModel& a, const std::vector<PolyMatrix>& conn, const AForm& omega) {
  const std::size_t r = a.rank();
  const int k = omega.arity();
  if (static_cast<std::size_t>(k) >= r) return AForm(r, k + 1, omega.rows(), omega.cols());
  AForm out = covariant_d(a, conn, omega);
  if (conn.empty()) return out;
  for (const auto& t : subsets(static_cast<int>(r), k + 1)) {
    PolyMatrix acc(omega.rows(), omega.cols());
    for (int i = 0; i <= k; ++i) {
      std::vector<int> rest = t;
      rest.erase(rest.begin() + i);
      const PolyMatrix term = omega.at(rest) * conn[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      if (i % 2 == 0) acc -= term;
      else acc += term;
    }
    if (!acc.is_zero()) out.add(t, acc);
  }
  return out;
}

RepA differentiate_rep(const SmoothGroupoid& g, const SmoothRepG& e) {
  if (!e.unital) throw std::invalid_argument("differentiate_rep: representation is not unital");
  RepA out;
  out.degrees = e.degrees;
  out.del = e.at(0);
  out.conn = bar_Psi(g, e.at(1));
  for (const auto& [k, f] : e.F) {
    if (k < 2) continue;
    AForm w = hat_Psi(g, SmoothMap{k, f}, 1 - k);
    if (!w.is_zero()) out.omegas.emplace(k, std::move(w));
  }
  return out;
}

MorphismA differentiate_morphism(const SmoothGroupoid& g, const SmoothMorphismG& phi) {
  MorphismA out;
  for (const auto& [k, f] : phi.phi) {
    AForm w = hat_Psi(g, SmoothMap{k, f}, -k);
    if (!w.is_zero() || k == 0) out.phi.emplace(k, std::move(w));
  }
  return out;
}

TMConnection induced_connection(const SmoothGroupoid& g, const EhresmannConn& sigma) {
  if (g.is_matrix_group()) throw std::invalid_argument("induced_connection: needs a pair chart");
  const std::size_t n = g.base_dim();
  const Substitution diag = g.degeneracy(0, 0);
  TMConnection conn;
  for (std::size_t j = 0; j < n; ++j) {
    VectorField horizontal;
    for (std::size_t c = 0; c < n; ++c) horizontal.push_back(sigma.lambda(c, j));
    for (std::size_t c = 0; c < n; ++c) horizontal.push_back(Polynomial(c == j ? 1 : 0));
    PolyMatrix gamma(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      VectorField right_invariant(2 * n, Polynomial());
      right_invariant[b] = 1;
      const VectorField br = lie_bracket(horizontal, right_invariant);
      for (std::size_t c = 0; c < n; ++c) {
        gamma(c, b) = pullback(br[c], diag);
        if (!pullback(br[n + c], diag).is_zero())
          throw std::logic_error("induced_connection: bracket is not vertical on the units");
      }
    }
    conn.gamma.push_back(std::move(gamma));
  }
  return conn;
}

bool AdEqualsAdReport::ok() const {
  for (const auto& c : components)
    if (!c.symbolic_ok || !c.samples_ok) return false;
  return true;
}

namespace {

struct Labeled {
  std::string label;
  PolyMatrix lhs, rhs;
};

AdEqualsAdReport::Component compare(std::string name, const std::vector<Labeled>& items,
                                    const std::vector<std::vector<Rational>>& points) {
  AdEqualsAdReport::Component c;
  c.name = std::move(name);
  for (const auto& it : items) {
    if (it.lhs != it.rhs) {
      c.symbolic_ok = false;
      if (c.witness.empty()) c.witness = it.label + " differs symbolically";
    }
    for (const auto& pt : points) {
      if (evaluate(it.lhs, pt) != evaluate(it.rhs, pt)) {
        c.samples_ok = false;
        if (c.witness.empty() || c.symbolic_ok) c.witness = it.label + " differs at " + point_string(pt);
      }
    }
  }
  return c;
}

PolyMatrix block(const PolyMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  PolyMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

}  // namespace

AdEqualsAdReport check_Ad_equals_ad(const SmoothGroupoid& g, const EhresmannConn& sigma,
                                    const std::vector<std::vector<Rational>>& points) {
  const AlgebroidModel a = g.algebroid();
  const RepA lhs = differentiate_rep(g, build_Ad_sigma(g, sigma));
  const RepA rhs = build_adjoint(a, g.is_matrix_group() ? TMConnection::flat(a) : induced_connection(g, sigma));
  if (lhs.degrees != rhs.degrees) throw std::logic_error("check_Ad_equals_ad: fibers differ");
  const std::size_t r = a.rank(), d = lhs.dim(), n = d - r;
  const std::vector<std::vector<Rational>> pts = g.is_matrix_group() ? std::vector<std::vector<Rational>>{{}} : points;
  AdEqualsAdReport report;
  report.components.push_back(compare("anchor", {{"del", lhs.del, rhs.del}}, pts));
  std::vector<Labeled> on_a, on_tm, off;
  for (std::size_t i = 0; i < r; ++i) {
    const std::string tag = "nabla_e" + std::to_string(i);
    on_a.push_back({tag, block(lhs.conn[i], 0, 0, r, r), block(rhs.conn[i], 0, 0, r, r)});
    on_tm.push_back({tag, block(lhs.conn[i], r, r, n, n), block(rhs.conn[i], r, r, n, n)});
    off.push_back({tag + " off-diagonal", block(lhs.conn[i], 0, r, r, n), block(rhs.conn[i], 0, r, r, n)});
    off.push_back({tag + " off-diagonal", block(lhs.conn[i], r, 0, n, r), block(rhs.conn[i], r, 0, n, r)});
  }
  report.components.push_back(compare("basic connection on A", on_a, pts));
  if (n > 0) report.components.push_back(compare("basic connection on TM", on_tm, pts));
  std::vector<Labeled> curvature, higher = off;
  const auto form_items = [&](int k, std::vector<Labeled>& into) {
    const AForm zero(r, k, d, d);
    const AForm& l = lhs.omegas.count(k) ? lhs.omegas.at(k) : zero;
    const AForm& rr = rhs.omegas.count(k) ? rhs.omegas.at(k) : zero;
    if (static_cast<std::size_t>(k) > r) return;
    for (const auto& idx : subsets(static_cast<int>(r), k)) {
      std::string tag = "omega_" + std::to_string(k) + "(";
      for (std::size_t i = 0; i < idx.size(); ++i) tag += (i ? "," : "") + std::to_string(idx[i]);
      into.push_back({tag + ")", l.at(idx), rr.at(idx)});
    }
  };
  form_items(2, curvature);
  int top = 2;
  for (const auto& [k, w] : lhs.omegas) top = std::max(top, k);
  for (const auto& [k, w] : rhs.omegas) top = std::max(top, k);
  for (int k = 3; k <= top; ++k) form_items(k, higher);
  report.components.push_back(compare("basic curvature", curvature, pts));
  report.components.push_back(compare("higher terms", higher, pts));
  return report;
}

}  // namespace hrep
