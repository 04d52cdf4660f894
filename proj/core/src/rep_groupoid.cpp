#include "hrep/rep_groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrep {

namespace {

struct Piece {
  int arity;
  Tuple simplex;
  RationalMatrix m;
};

int sign_of(long n) { return n % 2 == 0 ? 1 : -1; }

/// Multiplies column c by (-1)^(k * (p + degree_c)).
RationalMatrix column_signs(RationalMatrix a, int k, int p, const std::vector<int>& col_degrees) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (sign_of(static_cast<long>(k) * (p + col_degrees[c])) > 0) continue;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) = -a(r, c);
  }
  return a;
}

/// Contributions of T~ (arity k, degree m) to the value at sigma (arity q):
/// value(sigma) += sum piece.m * eta(piece.simplex).
template <class Lookup>
void tilde_pieces(const Nerve& n, int k, int m, Lookup&& lookup, std::size_t rows, const std::vector<int>& cdeg, int q,
                  const Tuple& sigma, std::vector<Piece>& out) {
  const int p = q - k;
  if (p < 0) return;
  if (k == 1 && m == 0) {
    if (rows != cdeg.size()) throw std::invalid_argument("F~_1 needs a square structure map");
    const RationalMatrix id = RationalMatrix::identity(rows);
    out.push_back({p, n.face(q, sigma, 0), column_signs(lookup(n.sub(q, sigma, 0, 1)), 1, p, cdeg)});
    for (int i = 1; i <= p; ++i)
      out.push_back({p, n.face(q, sigma, i), column_signs(scaled(id, Rational(sign_of(i))), 1, p, cdeg)});
    out.push_back({p, n.face(q, sigma, q), column_signs(scaled(id, Rational(sign_of(p + 1))), 1, p, cdeg)});
    return;
  }
  out.push_back({p, n.sub(q, sigma, k, q), column_signs(lookup(n.sub(q, sigma, 0, k)), k, p, cdeg)});
}

template <class Table>
auto table_lookup(const Nerve& n, int k, const Table* table, std::size_t rows, std::size_t cols) {
  return [&n, k, table, rows, cols](const Tuple& t) -> RationalMatrix {
    if (table == nullptr) return RationalMatrix(rows, cols);
    return (*table)[n.index(k, t)];
  };
}

const std::vector<RationalMatrix>* find_table(const std::map<int, std::vector<RationalMatrix>>& m, int k) {
  auto it = m.find(k);
  return it == m.end() ? nullptr : &it->second;
}

/// All pieces of D at sigma.
void d_pieces(const Nerve& n, const RepG& r, int q, const Tuple& sigma, std::vector<Piece>& out) {
  const std::size_t d = r.dim();
  for (int k = 0; k <= q; ++k) {
    const auto* table = find_table(r.F, k);
    if (table == nullptr && k != 1) continue;
    tilde_pieces(n, k, 1 - k, table_lookup(n, k, table, d, d), d, r.degrees, q, sigma, out);
  }
}

void phi_pieces(const Nerve& n, const MorphismG& phi, const RepG& e, const RepG& f, int q, const Tuple& sigma,
                std::vector<Piece>& out) {
  for (const auto& [k, table] : phi.phi) {
    if (k > q) continue;
    tilde_pieces(n, k, -k, table_lookup(n, k, &table, f.dim(), e.dim()), f.dim(), e.degrees, q, sigma, out);
  }
}

void require_arity(const Nerve& n, int arity) {
  if (arity > n.max_arity())
    throw std::out_of_range("nerve too short: need level " + std::to_string(arity) + ", have " +
                            std::to_string(n.max_arity()));
}

int min_degree(const std::vector<int>& d) { return d.empty() ? 0 : *std::min_element(d.begin(), d.end()); }

bool is_identity(const RationalMatrix& m) { return m == RationalMatrix::identity(m.rows()); }

void validate_degrees(const RepG& r) {
  for (const auto& [k, table] : r.F) {
    for (const auto& m : table) {
      if (m.rows() != r.dim() || m.cols() != r.dim()) throw std::invalid_argument("RepG: F_k has the wrong shape");
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (m(i, j) != 0 && r.degrees[i] != r.degrees[j] + 1 - k)
            throw std::invalid_argument("RepG: F_" + std::to_string(k) + " is not of degree " + std::to_string(1 - k));
    }
  }
}

}  // namespace

RationalMatrix RepG::at(int k, std::size_t idx) const {
  auto it = F.find(k);
  if (it == F.end()) return RationalMatrix(dim(), dim());
  return it->second[idx];
}

RationalMatrix MorphismG::at(int k, std::size_t idx, std::size_t rows, std::size_t cols) const {
  auto it = phi.find(k);
  if (it == phi.end()) return RationalMatrix(rows, cols);
  return it->second[idx];
}

RepG genuine_rep(const Nerve& n, std::vector<int> degrees, std::vector<RationalMatrix> del,
                 std::vector<RationalMatrix> action) {
  const auto& g = n.groupoid();
  if (del.size() != g.num_objects() || action.size() != g.num_arrows())
    throw std::invalid_argument("genuine_rep: table sizes do not match the groupoid");
  RepG r;
  r.degrees = std::move(degrees);
  bool any = false;
  for (const auto& m : del) any = any || !m.is_zero();
  if (any) r.F[0] = std::move(del);
  r.F[1] = std::move(action);
  validate_degrees(r);
  return r;
}

RepG trivial_rep(const Nerve& n, std::size_t rank, int degree) {
  const auto& g = n.groupoid();
  return genuine_rep(n, std::vector<int>(rank, degree), std::vector<RationalMatrix>(g.num_objects(), RationalMatrix(rank, rank)),
                     std::vector<RationalMatrix>(g.num_arrows(), RationalMatrix::identity(rank)));
}

FiniteCochain tilde_F(const Nerve& n, int k, int m, const std::vector<RationalMatrix>& table,
                      const std::vector<int>& col_degrees, const FiniteCochain& eta) {
  if (table.size() != n.size(k)) throw std::invalid_argument("tilde_F: table does not cover G_k");
  if (eta.width != col_degrees.size()) throw std::invalid_argument("tilde_F: cochain width differs from the fiber");
  const std::size_t rows = table.empty() ? 0 : table.front().rows();
  if (!table.empty() && table.front().cols() != eta.width) throw std::invalid_argument("tilde_F: bidegree mismatch");
  const int q = eta.arity + k;
  require_arity(n, q);
  FiniteCochain out = zero_cochain(n, q, rows);
  std::vector<Piece> pieces;
  const auto& lv = n.level(q);
  for (std::size_t s = 0; s < lv.size(); ++s) {
    pieces.clear();
    tilde_pieces(n, k, m, table_lookup(n, k, &table, rows, eta.width), rows, col_degrees, q, lv[s], pieces);
    for (const auto& pc : pieces) {
      const std::size_t t = n.index(pc.arity, pc.simplex);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < eta.width; ++j)
          if (pc.m(i, j) != 0) out.at(s, i) += pc.m(i, j) * eta.at(t, j);
    }
  }
  return out;
}

MixedCochain apply_D(const Nerve& n, const RepG& r, const FiniteCochain& eta) {
  if (eta.width != r.dim()) throw std::invalid_argument("apply_D: cochain width differs from the fiber");
  MixedCochain out;
  const int p = eta.arity;
  int top = p + 1;
  if (!r.F.empty()) top = std::max(top, p + r.F.rbegin()->first);
  top = std::min(top, n.max_arity());
  std::vector<Piece> pieces;
  for (int q = p; q <= top; ++q) {
    FiniteCochain val = zero_cochain(n, q, r.dim());
    const auto& lv = n.level(q);
    for (std::size_t s = 0; s < lv.size(); ++s) {
      pieces.clear();
      d_pieces(n, r, q, lv[s], pieces);
      for (const auto& pc : pieces) {
        if (pc.arity != p) continue;
        const std::size_t t = n.index(p, pc.simplex);
        for (std::size_t i = 0; i < r.dim(); ++i)
          for (std::size_t j = 0; j < r.dim(); ++j)
            if (pc.m(i, j) != 0) val.at(s, i) += pc.m(i, j) * eta.at(t, j);
      }
    }
    if (!is_zero(val)) out.emplace(q, std::move(val));
  }
  return out;
}

RepGCheck check_rep_G(const Nerve& n, const RepG& r, int bound) {
  validate_degrees(r);
  require_arity(n, bound);
  RepGCheck report;
  const std::size_t d = r.dim();
  for (int k = 0; k <= bound; ++k) {
    const auto& lv = n.level(k);
    for (std::size_t s = 0; s < lv.size(); ++s) {
      const Tuple& t = lv[s];
      RationalMatrix diff(d, d);
      for (int j = 1; j <= k - 1; ++j) {
        const auto m = r.at(k - 1, n.index(k - 1, n.face(k, t, j)));
        diff += j % 2 == 0 ? m : -m;
      }
      for (int j = 0; j <= k; ++j) {
        const auto a = r.at(j, n.index(j, n.sub(k, t, 0, j)));
        const auto b = r.at(k - j, n.index(k - j, n.sub(k, t, j, k)));
        const auto prod = a * b;
        diff -= j % 2 == 0 ? prod : -prod;
      }
      if (!diff.is_zero()) {
        report.failures.push_back({k, t, "structure equation " + std::to_string(k) + " fails"});
        break;
      }
    }
  }
  if (r.unital) {
    const auto& g = n.groupoid();
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
      const int u = g.unit(static_cast<int>(x));
      if (!is_identity(r.at(1, n.index(1, {u})))) {
        report.failures.push_back({-1, {u}, "F_1 at a unit is not the identity"});
        break;
      }
    }
    for (const auto& [k, table] : r.F) {
      if (k <= 1 || k > n.max_arity()) continue;
      for (std::size_t s = 0; s < table.size(); ++s)
        if (n.degenerate(k, s) && !table[s].is_zero()) {
          report.failures.push_back({-1, n.level(k)[s], "F_" + std::to_string(k) + " is not normalized"});
          break;
        }
    }
  }
  return report;
}

TotalBasis total_basis(const Nerve& n, const std::vector<int>& degrees, int lo, int hi, bool normalized) {
  TotalBasis b;
  const std::size_t d = degrees.size();
  const int top = hi - min_degree(degrees);
  require_arity(n, std::max(top, 0));
  b.position.resize(std::max(top, 0) + 1);
  for (int deg = lo; deg <= hi; ++deg) b.elements[deg];
  for (int p = 0; p <= top; ++p) {
    auto& pos = b.position[p];
    pos.assign(n.size(p) * d, -1);
    for (std::size_t s = 0; s < n.size(p); ++s) {
      if (normalized && n.degenerate(p, s)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const int deg = p + degrees[j];
        if (deg < lo || deg > hi) continue;
        auto& list = b.elements[deg];
        pos[s * d + j] = static_cast<long>(list.size());
        list.push_back({p, s, j});
      }
    }
  }
  return b;
}

CochainComplex build_D_G(const Nerve& n, const RepG& r, int lo, int hi, bool normalized) {
  validate_degrees(r);
  const TotalBasis basis = total_basis(n, r.degrees, lo, hi + 1, normalized);
  const std::size_t d = r.dim();
  CochainComplex c;
  for (const auto& [deg, list] : basis.elements) c.set_space(deg, list.size());
  std::vector<Piece> pieces;
  for (int deg = lo; deg <= hi; ++deg) {
    SparseBuilder b(basis.elements.at(deg + 1).size(), basis.elements.at(deg).size());
    const auto& rows = basis.elements.at(deg + 1);
    std::size_t i0 = 0;
    while (i0 < rows.size()) {
      const int q = rows[i0].arity;
      const std::size_t s = rows[i0].simplex;
      std::size_t i1 = i0;
      while (i1 < rows.size() && rows[i1].arity == q && rows[i1].simplex == s) ++i1;
      pieces.clear();
      d_pieces(n, r, q, n.level(q)[s], pieces);
      for (const auto& pc : pieces) {
        if (pc.arity >= static_cast<int>(basis.position.size())) continue;
        const std::size_t t = n.index(pc.arity, pc.simplex);
        for (std::size_t ii = i0; ii < i1; ++ii) {
          const std::size_t fi = rows[ii].fiber;
          for (std::size_t j = 0; j < d; ++j) {
            if (pc.m(fi, j) == 0) continue;
            const long col = basis.position[pc.arity][t * d + j];
            if (col < 0) continue;
            b.add(ii, static_cast<std::size_t>(col), pc.m(fi, j));
          }
        }
      }
      i0 = i1;
    }
    c.set_differential(deg, std::move(b).build());
  }
  return c;
}

CohomologyReport cohomology_G(const Nerve& n, const RepG& r, int max_degree, bool normalized) {
  const int lo = min_degree(r.degrees);
  const CochainComplex c = build_D_G(n, r, lo - 1, max_degree, normalized);
  return cohomology(c, lo, max_degree);
}

MorphismG identity_morphism(const Nerve& n, const RepG& r) {
  MorphismG phi;
  phi.phi[0] = std::vector<RationalMatrix>(n.size(0), RationalMatrix::identity(r.dim()));
  return phi;
}

SparseMatrix morphism_matrix(const Nerve& n, const MorphismG& phi, const RepG& e, const RepG& f, int degree,
                             bool normalized) {
  const TotalBasis be = total_basis(n, e.degrees, degree, degree, normalized);
  const TotalBasis bf = total_basis(n, f.degrees, degree, degree, normalized);
  const auto& rows = bf.elements.at(degree);
  SparseBuilder b(rows.size(), be.elements.at(degree).size());
  std::vector<Piece> pieces;
  for (std::size_t ii = 0; ii < rows.size(); ++ii) {
    const auto& el = rows[ii];
    pieces.clear();
    phi_pieces(n, phi, e, f, el.arity, n.level(el.arity)[el.simplex], pieces);
    for (const auto& pc : pieces) {
      if (pc.arity >= static_cast<int>(be.position.size())) continue;
      const std::size_t t = n.index(pc.arity, pc.simplex);
      for (std::size_t j = 0; j < e.dim(); ++j) {
        if (pc.m(el.fiber, j) == 0) continue;
        const long col = be.position[pc.arity][t * e.dim() + j];
        if (col >= 0) b.add(ii, static_cast<std::size_t>(col), pc.m(el.fiber, j));
      }
    }
  }
  return std::move(b).build();
}

MorphismGCheck check_morphism_G(const Nerve& n, const MorphismG& phi, const RepG& e, const RepG& f, int bound,
                                int lo, int hi) {
  require_arity(n, bound);
  MorphismGCheck report;
  const std::size_t de = e.dim(), df = f.dim();
  for (int k = 0; k <= bound; ++k) {
    const auto& lv = n.level(k);
    for (const Tuple& t : lv) {
      RationalMatrix diff(df, de);
      for (int j = 0; j <= k; ++j) {
        const auto lhs = phi.at(j, n.index(j, n.sub(k, t, 0, j)), df, de) * e.at(k - j, n.index(k - j, n.sub(k, t, j, k)));
        diff += j % 2 == 0 ? lhs : -lhs;
        diff -= f.at(j, n.index(j, n.sub(k, t, 0, j))) * phi.at(k - j, n.index(k - j, n.sub(k, t, j, k)), df, de);
      }
      for (int j = 1; j <= k - 1; ++j) {
        const auto m = phi.at(k - 1, n.index(k - 1, n.face(k, t, j)), df, de);
        diff -= j % 2 == 0 ? m : -m;
      }
      if (!diff.is_zero()) {
        report.failures.push_back({k, t, "equation for a map " + std::to_string(k) + " fails"});
        break;
      }
    }
  }
  const CochainComplex ce = build_D_G(n, e, lo, hi, true);
  const CochainComplex cf = build_D_G(n, f, lo, hi, true);
  for (int deg = lo; deg <= hi; ++deg) {
    const SparseMatrix a = morphism_matrix(n, phi, e, f, deg + 1) * ce.differential(deg);
    const SparseMatrix b = cf.differential(deg) * morphism_matrix(n, phi, e, f, deg);
    if (!(a == b)) report.chain_map = false;
  }
  return report;
}

bool quasi_iso_G(const Nerve& n, const MorphismG& phi, const RepG& e, const RepG& f) {
  for (std::size_t x = 0; x < n.size(0); ++x) {
    if (!cone_acyclic(e.at(0, x), f.at(0, x), phi.at(0, x, f.dim(), e.dim()))) return false;
  }
  return true;
}

RepG gauge_transform(const Nerve& n, const RepG& r, const MorphismG& phi, int bound) {
  validate_degrees(r);
  require_arity(n, bound);
  const std::size_t d = r.dim();
  std::vector<RationalMatrix> inv0;
  for (std::size_t x = 0; x < n.size(0); ++x) {
    try {
      inv0.push_back(inverse(phi.at(0, x, d, d)));
    } catch (const std::domain_error&) {
      throw std::domain_error("gauge_transform: phi_0 is not invertible at object " + std::to_string(x));
    }
  }
  RepG out;
  out.degrees = r.degrees;
  out.unital = r.unital;
  for (int k = 0; k <= bound; ++k) {
    const auto& lv = n.level(k);
    std::vector<RationalMatrix> table;
    table.reserve(lv.size());
    bool nonzero = false;
    for (const Tuple& t : lv) {
      RationalMatrix rhs(d, d);
      for (int j = 0; j <= k; ++j) {
        const auto m = phi.at(j, n.index(j, n.sub(k, t, 0, j)), d, d) * r.at(k - j, n.index(k - j, n.sub(k, t, j, k)));
        rhs += j % 2 == 0 ? m : -m;
      }
      for (int j = 0; j < k; ++j)
        rhs -= out.at(j, n.index(j, n.sub(k, t, 0, j))) * phi.at(k - j, n.index(k - j, n.sub(k, t, j, k)), d, d);
      for (int j = 1; j <= k - 1; ++j) {
        const auto m = phi.at(k - 1, n.index(k - 1, n.face(k, t, j)), d, d);
        rhs -= j % 2 == 0 ? m : -m;
      }
      table.push_back(rhs * inv0[n.vertex(k, t, k)]);
      nonzero = nonzero || !table.back().is_zero();
    }
    if (nonzero || k == 1) out.F[k] = std::move(table);
  }
  return out;
}

RepG pullback_rep(const Nerve& from, const Nerve& to, const GroupoidMorphism& gamma, const RepG& r) {
  if (auto err = check_groupoid_morphism(from.groupoid(), to.groupoid(), gamma))
    throw std::invalid_argument("pullback_rep: " + *err);
  RepG out;
  out.degrees = r.degrees;
  out.unital = r.unital;
  for (const auto& [k, table] : r.F) {
    if (k > from.max_arity()) continue;
    std::vector<RationalMatrix> pulled;
    for (const Tuple& t : from.level(k)) pulled.push_back(table[to.index(k, apply(gamma, k, t))]);
    out.F[k] = std::move(pulled);
  }
  return out;
}

FiniteCochain pullback_cochain(const Nerve& from, const Nerve& to, const GroupoidMorphism& gamma,
                               const FiniteCochain& eta) {
  FiniteCochain out = zero_cochain(from, eta.arity, eta.width);
  const auto& lv = from.level(eta.arity);
  for (std::size_t s = 0; s < lv.size(); ++s) {
    const std::size_t t = to.index(eta.arity, apply(gamma, eta.arity, lv[s]));
    for (std::size_t j = 0; j < eta.width; ++j) out.at(s, j) = eta.at(t, j);
  }
  return out;
}

ElementaryQuasiIso elementary_quasi_iso(const Nerve& n, const ElementaryStructure& e, const RepG& r, int bound) {
  const auto& g = n.groupoid();
  const std::vector<int> nu = elementary_nu(g, e);
  require_arity(n, bound + 1);
  const std::size_t d = r.dim();
  ElementaryQuasiIso out;
  out.target.degrees = r.degrees;
  std::vector<RationalMatrix> f0;
  for (std::size_t x = 0; x < g.num_objects(); ++x) f0.push_back(r.at(0, e.section[e.base_of[x]]));
  out.target.F[0] = std::move(f0);
  out.target.F[1] = std::vector<RationalMatrix>(n.size(1), RationalMatrix::identity(d));
  for (int k = 0; k <= bound; ++k) {
    const auto& lv = n.level(k);
    std::vector<RationalMatrix> table;
    bool nonzero = false;
    for (const Tuple& t : lv) {
      Tuple ext = k == 0 ? Tuple{} : t;
      ext.insert(ext.begin(), nu[n.vertex(k, t, 0)]);
      table.push_back(r.at(k + 1, n.index(k + 1, ext)));
      nonzero = nonzero || !table.back().is_zero();
    }
    if (nonzero) out.phi.phi[k] = std::move(table);
  }
  return out;
}

HomotopyCheck flat_star_homotopy(const Nerve& n, std::size_t width, int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("flat_star_homotopy: need m, k >= 0");
  require_arity(n, m + k + 1);
  // basis of C_m^a: simplices with no unit among the first m arrows
  auto in_basis = [&](int a, const Tuple& t) {
    if (a == 0) return true;
    for (int i = 0; i < std::min(m, a); ++i)
      if (n.groupoid().is_unit(t[i])) return false;
    return true;
  };
  std::map<int, std::vector<long>> pos;
  std::map<int, std::size_t> count;
  for (int a = std::max(m + k - 1, 0); a <= m + k + 1; ++a) {
    auto& p = pos[a];
    p.assign(n.size(a), -1);
    for (std::size_t s = 0; s < n.size(a); ++s)
      if (in_basis(a, n.level(a)[s])) p[s] = static_cast<long>(count[a]++);
  }
  // b^* : C_m^a -> C_m^{a+1}
  auto b_star = [&](int a) {
    SparseBuilder b(count[a + 1], count[a]);
    for (std::size_t s = 0; s < n.size(a + 1); ++s) {
      const long row = pos[a + 1][s];
      if (row < 0) continue;
      for (int i = 0; i <= a - m; ++i) {
        const long col = pos[a][n.index(a, n.face(a + 1, n.level(a + 1)[s], i + m + 1))];
        if (col >= 0) b.add(static_cast<std::size_t>(row), static_cast<std::size_t>(col), Rational(sign_of(i)));
      }
    }
    return std::move(b).build();
  };
  // s^* : C_m^a -> C_m^{a-1}
  auto s_star = [&](int a) {
    SparseBuilder b(count[a - 1], count[a]);
    for (std::size_t s = 0; s < n.size(a - 1); ++s) {
      const long row = pos[a - 1][s];
      if (row < 0) continue;
      const long col = pos[a][n.index(a, n.insert_unit(a - 1, n.level(a - 1)[s], m))];
      if (col >= 0) b.add(static_cast<std::size_t>(row), static_cast<std::size_t>(col), Rational(1));
    }
    return std::move(b).build();
  };
  const int a = m + k;
  SparseMatrix total = s_star(a + 1) * b_star(a);
  if (k >= 1) total = total + b_star(a - 1) * s_star(a);
  HomotopyCheck report;
  report.checked = count[a] * width;
  const SparseMatrix id = SparseMatrix::identity(count[a]);
  if (!(total == id)) {
    report.ok = false;
    for (std::size_t c = 0; c < count[a]; ++c) {
      if (total.column(c) != id.column(c)) {
        report.witness = "basis cochain " + std::to_string(c) + " of C_" + std::to_string(m) + "^" + std::to_string(a);
        break;
      }
    }
  }
  return report;
}

}  // namespace hrep
