#include "hrep/algebroid.hpp"

#include <sstream>
#include <stdexcept>

#include "hrep/combinatorics.hpp"

namespace hrep {

AlgebroidModel AlgebroidModel::point(std::size_t rank, std::vector<std::vector<std::vector<Rational>>> c) {
  std::vector<std::vector<std::vector<Polynomial>>> pc(rank, std::vector(rank, std::vector<Polynomial>(rank)));
  if (c.size() != rank) throw std::invalid_argument("structure constants do not match rank");
  for (std::size_t i = 0; i < rank; ++i) {
    if (c[i].size() != rank) throw std::invalid_argument("structure constants do not match rank");
    for (std::size_t j = 0; j < rank; ++j) {
      if (c[i][j].size() != rank) throw std::invalid_argument("structure constants do not match rank");
      for (std::size_t k = 0; k < rank; ++k) pc[i][j][k] = Polynomial(c[i][j][k]);
    }
  }
  return coord(0, rank, std::vector<std::vector<Polynomial>>(rank), std::move(pc));
}

AlgebroidModel AlgebroidModel::coord(std::size_t chart_dim, std::size_t rank,
                                     std::vector<std::vector<Polynomial>> anchor,
                                     std::vector<std::vector<std::vector<Polynomial>>> c) {
  if (anchor.size() != rank) throw std::invalid_argument("anchor must have one row per frame element");
  for (const auto& row : anchor)
    if (row.size() != chart_dim) throw std::invalid_argument("anchor row length must equal chart dimension");
  if (c.size() != rank) throw std::invalid_argument("structure functions do not match rank");
  for (const auto& ci : c) {
    if (ci.size() != rank) throw std::invalid_argument("structure functions do not match rank");
    for (const auto& cij : ci)
      if (cij.size() != rank) throw std::invalid_argument("structure functions do not match rank");
  }
  AlgebroidModel m;
  m.n_ = chart_dim;
  m.r_ = rank;
  m.anchor_ = std::move(anchor);
  m.c_ = std::move(c);
  return m;
}

AlgebroidModel AlgebroidModel::tangent(std::size_t chart_dim) {
  std::vector<std::vector<Polynomial>> anchor(chart_dim, std::vector<Polynomial>(chart_dim));
  for (std::size_t i = 0; i < chart_dim; ++i) anchor[i][i] = Polynomial(1);
  std::vector<std::vector<std::vector<Polynomial>>> c(
      chart_dim, std::vector(chart_dim, std::vector<Polynomial>(chart_dim)));
  return coord(chart_dim, chart_dim, std::move(anchor), std::move(c));
}

Polynomial AlgebroidModel::anchor_derivative(std::size_t a, const Polynomial& f) const {
  Polynomial out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (!anchor_[a][j].is_zero()) out += anchor_[a][j] * f.partial(j);
  }
  return out;
}

VectorField AlgebroidModel::anchor_of(const Section& s) const {
  VectorField x(n_);
  for (std::size_t a = 0; a < r_; ++a)
    for (std::size_t j = 0; j < n_; ++j) x[j] += s[a] * anchor_[a][j];
  return x;
}

Section AlgebroidModel::frame(std::size_t a) const {
  Section s(r_);
  s[a] = Polynomial(1);
  return s;
}

Section AlgebroidModel::bracket(const Section& s, const Section& t) const {
  Section out(r_);
  for (std::size_t a = 0; a < r_; ++a) {
    if (s[a].is_zero()) continue;
    for (std::size_t b = 0; b < r_; ++b) {
      if (t[b].is_zero()) continue;
      const Polynomial st = s[a] * t[b];
      for (std::size_t k = 0; k < r_; ++k)
        if (!c_[a][b][k].is_zero()) out[k] += st * c_[a][b][k];
    }
  }
  const VectorField rs = anchor_of(s);
  const VectorField rt = anchor_of(t);
  for (std::size_t k = 0; k < r_; ++k) out[k] += directional(rs, t[k]) - directional(rt, s[k]);
  return out;
}

Polynomial directional(const VectorField& x, const Polynomial& f) {
  Polynomial out;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) out += x[j] * f.partial(j);
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  VectorField out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = directional(x, y[j]) - directional(y, x[j]);
  return out;
}

namespace {

bool is_zero_section(const Section& s) {
  for (const auto& p : s)
    if (!p.is_zero()) return false;
  return true;
}

Section add(Section a, const Section& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

AlgebroidCheck check_algebroid(const AlgebroidModel& m) {
  const std::size_t r = m.rank();
  const auto fail = [](std::string msg) { return AlgebroidCheck{false, std::move(msg)}; };
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t k = 0; k < r; ++k)
        if (!(m.structure(a, b, k) + m.structure(b, a, k)).is_zero()) {
          std::ostringstream os;
          os << "antisymmetry fails for c_{" << a << b << "}^" << k;
          return fail(os.str());
        }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      const VectorField lhs = m.anchor_of(m.bracket(m.frame(a), m.frame(b)));
      const VectorField rhs = lie_bracket(m.anchor_of(m.frame(a)), m.anchor_of(m.frame(b)));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "anchor does not preserve the bracket of (" << a << "," << b << ")";
        return fail(os.str());
      }
    }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      for (std::size_t c = b + 1; c < r; ++c) {
        const Section ea = m.frame(a), eb = m.frame(b), ec = m.frame(c);
        const Section j = add(add(m.bracket(m.bracket(ea, eb), ec), m.bracket(m.bracket(eb, ec), ea)),
                              m.bracket(m.bracket(ec, ea), eb));
        if (!is_zero_section(j)) {
          std::ostringstream os;
          os << "Jacobi fails for (" << a << "," << b << "," << c << ")";
          return fail(os.str());
        }
      }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t v = 0; v < m.chart_dim(); ++v) {
        const Polynomial f = Polynomial::variable(v);
        Section fb = m.frame(b);
        fb[b] = f;
        Section rhs = m.bracket(m.frame(a), m.frame(b));
        for (auto& p : rhs) p = f * p;
        rhs[b] += m.anchor_derivative(a, f);
        if (m.bracket(m.frame(a), fb) != rhs) {
          std::ostringstream os;
          os << "Leibniz fails for (" << a << "," << b << ") with x" << v;
          return fail(os.str());
        }
      }
  return {};
}

AForm::AForm(std::size_t rank, int arity, std::size_t rows, std::size_t cols)
    : rank_(rank), arity_(arity), rows_(rows), cols_(cols) {
  if (arity < 0) throw std::invalid_argument("form arity must be non-negative");
}

void AForm::check_shape(const PolyMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("form value has the wrong shape");
}

PolyMatrix AForm::at(std::vector<int> indices) const {
  if (static_cast<int>(indices.size()) != arity_) throw std::invalid_argument("form evaluated on wrong number of sections");
  const int sign = sort_with_sign(indices);
  if (sign == 0) return PolyMatrix(rows_, cols_);
  auto it = values_.find(indices);
  if (it == values_.end()) return PolyMatrix(rows_, cols_);
  return sign > 0 ? it->second : -it->second;
}

void AForm::set(const std::vector<int>& indices, PolyMatrix value) {
  check_shape(value);
  if (static_cast<int>(indices.size()) != arity_) throw std::invalid_argument("index list has the wrong length");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || static_cast<std::size_t>(indices[i]) >= rank_ || (i > 0 && indices[i] <= indices[i - 1])) {
      throw std::invalid_argument("form indices must be strictly increasing frame indices");
    }
  }
  if (value.is_zero()) {
    values_.erase(indices);
  } else {
    values_[indices] = std::move(value);
  }
}

void AForm::add(const std::vector<int>& indices, const PolyMatrix& value) {
  if (value.is_zero()) return;
  auto it = values_.find(indices);
  set(indices, it == values_.end() ? value : it->second + value);
}

std::map<std::vector<int>, RationalMatrix> AForm::evaluate(std::span<const Rational> point) const {
  std::map<std::vector<int>, RationalMatrix> out;
  for (const auto& [idx, m] : values_) out.emplace(idx, hrep::evaluate(m, point));
  return out;
}

AForm& AForm::operator+=(const AForm& o) {
  if (o.rank_ != rank_ || o.arity_ != arity_ || o.rows_ != rows_ || o.cols_ != cols_) {
    throw std::invalid_argument("adding forms of different type");
  }
  for (const auto& [idx, m] : o.values_) add(idx, m);
  return *this;
}

AForm operator-(AForm a, const AForm& b) { return a += scaled(b, Rational(-1)); }

AForm scaled(AForm a, const Rational& s) {
  if (s == 0) return AForm(a.rank_, a.arity_, a.rows_, a.cols_);
  for (auto& [idx, m] : a.values_) m = scaled(m, Polynomial(s));
  return a;
}

AForm scalar_form(std::size_t rank, int arity, const std::map<std::vector<int>, Polynomial>& values) {
  AForm f(rank, arity, 1, 1);
  for (const auto& [idx, p] : values) {
    std::vector<int> sorted = idx;
    const int sign = sort_with_sign(sorted);
    if (sign == 0) continue;
    f.add(sorted, PolyMatrix(1, 1, {sign > 0 ? p : -p}));
  }
  return f;
}

namespace {

// Sum over (p, rest)-shuffles of sign * lhs(T_I) * rhs(T_J).
template <class Combine>
AForm shuffle_product(std::size_t rank, int p, int q, std::size_t rows, std::size_t cols, Combine&& combine) {
  AForm out(rank, p + q, rows, cols);
  if (static_cast<std::size_t>(p + q) > rank) return out;
  for (const auto& t : subsets(static_cast<int>(rank), p + q)) {
    PolyMatrix acc(rows, cols);
    for (const auto& pos : subsets(p + q, p)) {
      std::vector<int> first, rest;
      std::size_t k = 0;
      for (int i = 0; i < p + q; ++i) {
        if (k < pos.size() && pos[k] == i) {
          first.push_back(t[static_cast<std::size_t>(i)]);
          ++k;
        } else {
          rest.push_back(t[static_cast<std::size_t>(i)]);
        }
      }
      PolyMatrix term = combine(first, rest);
      if (term.is_zero()) continue;
      acc += shuffle_sign(pos) > 0 ? term : -term;
    }
    out.set(t, std::move(acc));
  }
  return out;
}

}  // namespace

AForm wedge(const AForm& a, const AForm& b) {
  if (a.rows() != 1 || a.cols() != 1 || b.rows() != 1 || b.cols() != 1) {
    throw std::invalid_argument("wedge expects scalar forms");
  }
  return scalar_times(a, b);
}

AForm scalar_times(const AForm& f, const AForm& eta) {
  if (f.rows() != 1 || f.cols() != 1) throw std::invalid_argument("scalar_times expects a scalar form on the left");
  if (f.rank() != eta.rank()) throw std::invalid_argument("forms live on different algebroids");
  return shuffle_product(eta.rank(), f.arity(), eta.arity(), eta.rows(), eta.cols(),
                         [&](const std::vector<int>& i, const std::vector<int>& j) {
                           const Polynomial s = f.at(i)(0, 0);
                           if (s.is_zero()) return PolyMatrix(eta.rows(), eta.cols());
                           return scaled(eta.at(j), s);
                         });
}

AForm koszul_d(const AlgebroidModel& a, const AForm& omega) { return covariant_d(a, {}, omega); }

AForm covariant_d(const AlgebroidModel& a, const std::vector<PolyMatrix>& conn, const AForm& eta) {
  const std::size_t r = a.rank();
  if (eta.rank() != r) throw std::invalid_argument("form rank does not match algebroid");
  if (static_cast<std::size_t>(eta.arity()) > r) throw std::invalid_argument("form arity exceeds algebroid rank");
  if (!conn.empty() && conn.size() != r) throw std::invalid_argument("connection needs one matrix per frame element");
  const int k = eta.arity();
  AForm out(r, k + 1, eta.rows(), eta.cols());
  if (static_cast<std::size_t>(k + 1) > r) return out;
  for (const auto& t : subsets(static_cast<int>(r), k + 1)) {
    PolyMatrix acc(eta.rows(), eta.cols());
    for (int i = 0; i <= k; ++i) {
      std::vector<int> rest = t;
      rest.erase(rest.begin() + i);
      const PolyMatrix v = eta.at(rest);
      if (v.is_zero()) continue;
      const std::size_t ai = static_cast<std::size_t>(t[static_cast<std::size_t>(i)]);
      PolyMatrix term = v.map([&](const Polynomial& p) { return a.anchor_derivative(ai, p); });
      if (!conn.empty()) term += conn[ai] * v;
      acc += (i % 2 == 0) ? term : -term;
    }
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const std::size_t ai = static_cast<std::size_t>(t[static_cast<std::size_t>(i)]);
        const std::size_t aj = static_cast<std::size_t>(t[static_cast<std::size_t>(j)]);
        for (std::size_t m = 0; m < r; ++m) {
          const Polynomial& c = a.structure(ai, aj, m);
          if (c.is_zero()) continue;
          std::vector<int> args = {static_cast<int>(m)};
          for (int l = 0; l <= k; ++l)
            if (l != i && l != j) args.push_back(t[static_cast<std::size_t>(l)]);
          const PolyMatrix v = eta.at(args);
          if (v.is_zero()) continue;
          const PolyMatrix term = scaled(v, c);
          acc += ((i + j) % 2 == 0) ? term : -term;
        }
      }
    out.set(t, std::move(acc));
  }
  return out;
}

}  // namespace hrep
