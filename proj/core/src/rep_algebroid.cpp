#include "hrep/rep_algebroid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hrep/combinatorics.hpp"
#include "hrep/jet.hpp"

namespace hrep {

namespace {

void check_homogeneous(const PolyMatrix& m, const std::vector<int>& degrees, int degree, const std::string& what) {
  if (m.rows() != degrees.size() || m.cols() != degrees.size()) {
    throw std::invalid_argument(what + " has the wrong shape");
  }
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && degrees[r] != degrees[c] + degree) {
        throw std::invalid_argument(what + " is not homogeneous of degree " + std::to_string(degree));
      }
}

AForm constant_form(std::size_t rank, const PolyMatrix& m) {
  AForm f(rank, 0, m.rows(), m.cols());
  f.set({}, m);
  return f;
}

PolyMatrix identity_poly(std::size_t n) { return PolyMatrix::identity(n); }

Section plus(Section a, const Section& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Section minus(Section a, const Section& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

void validate_rep(const AlgebroidModel& a, const RepA& e) {
  for (std::size_t i = 1; i < e.degrees.size(); ++i)
    if (e.degrees[i] < e.degrees[i - 1]) throw std::invalid_argument("fiber degrees must be non-decreasing");
  check_homogeneous(e.del, e.degrees, 1, "differential");
  if (e.conn.size() != a.rank()) throw std::invalid_argument("connection needs one matrix per frame element");
  for (const auto& m : e.conn) check_homogeneous(m, e.degrees, 0, "connection");
  for (const auto& [i, w] : e.omegas) {
    if (i < 2 || w.arity() != i || w.rank() != a.rank()) throw std::invalid_argument("bad curvature form arity");
    for (const auto& [idx, m] : w.components()) check_homogeneous(m, e.degrees, 1 - i, "curvature form");
  }
}

AForm operator_wedge(const AForm& t_form, int total_degree, const AForm& eta, const std::vector<int>& row_degrees,
                     SignConvention conv) {
  if (t_form.cols() != eta.rows()) throw std::invalid_argument("operator and form fibers do not match");
  if (t_form.rank() != eta.rank()) throw std::invalid_argument("forms live on different algebroids");
  const int i = t_form.arity();
  const int k = eta.arity();
  const std::size_t rank = eta.rank();
  AForm out(rank, i + k, t_form.rows(), eta.cols());
  if (static_cast<std::size_t>(i + k) > rank) return out;

  AForm arg = eta;
  int global_sign = 1;
  if (conv == SignConvention::kFormsFirst) {
    global_sign = parity_sign(static_cast<long>(k) * (total_degree - i));
  } else {
    if (row_degrees.size() != eta.rows()) throw std::invalid_argument("row degrees do not match form");
    AForm signed_arg(rank, k, eta.rows(), eta.cols());
    for (const auto& [idx, m] : eta.components()) {
      PolyMatrix v = m;
      for (std::size_t r = 0; r < v.rows(); ++r)
        if (parity_sign(static_cast<long>(i) * (k + row_degrees[r])) < 0)
          for (std::size_t c = 0; c < v.cols(); ++c) v(r, c) = -v(r, c);
      signed_arg.set(idx, std::move(v));
    }
    arg = std::move(signed_arg);
  }

  for (const auto& t : subsets(static_cast<int>(rank), i + k)) {
    PolyMatrix acc(t_form.rows(), eta.cols());
    for (const auto& pos : subsets(i + k, i)) {
      std::vector<int> first, rest;
      std::size_t p = 0;
      for (int s = 0; s < i + k; ++s) {
        if (p < pos.size() && pos[p] == s) {
          first.push_back(t[static_cast<std::size_t>(s)]);
          ++p;
        } else {
          rest.push_back(t[static_cast<std::size_t>(s)]);
        }
      }
      const PolyMatrix tv = t_form.at(first);
      if (tv.is_zero()) continue;
      const PolyMatrix ev = arg.at(rest);
      if (ev.is_zero()) continue;
      const PolyMatrix term = tv * ev;
      acc += (shuffle_sign(pos) * global_sign > 0) ? term : -term;
    }
    out.set(t, std::move(acc));
  }
  return out;
}

void accumulate(MixedForm& into, const AForm& f) {
  if (static_cast<std::size_t>(f.arity()) > f.rank()) return;
  auto it = into.find(f.arity());
  if (it == into.end()) {
    into.emplace(f.arity(), f);
  } else {
    it->second += f;
  }
}

void accumulate(MixedForm& into, const MixedForm& f) {
  for (const auto& [k, v] : f) accumulate(into, v);
}

bool is_zero(const MixedForm& f) {
  for (const auto& [k, v] : f)
    if (!v.is_zero()) return false;
  return true;
}

MixedForm apply_D(const AlgebroidModel& a, const RepA& e, const AForm& eta, SignConvention conv) {
  if (eta.rows() != e.dim()) throw std::invalid_argument("form is not valued in the representation");
  MixedForm out;
  if (static_cast<std::size_t>(eta.arity()) >= a.rank()) {
    if (static_cast<std::size_t>(eta.arity()) == a.rank()) {
      accumulate(out, operator_wedge(constant_form(a.rank(), e.del), 1, eta, e.degrees, conv));
    }
    return out;
  }
  const std::size_t r = a.rank();
  accumulate(out, operator_wedge(constant_form(r, e.del), 1, eta, e.degrees, conv));
  accumulate(out, covariant_d(a, e.conn, eta));
  for (const auto& [i, w] : e.omegas) {
    if (static_cast<std::size_t>(eta.arity() + i) > r) continue;
    accumulate(out, operator_wedge(w, 1, eta, e.degrees, conv));
  }
  return out;
}

MixedForm apply_D(const AlgebroidModel& a, const RepA& e, const MixedForm& eta, SignConvention conv) {
  MixedForm out;
  for (const auto& [k, f] : eta) accumulate(out, apply_D(a, e, f, conv));
  return out;
}

RepCheck check_rep(const AlgebroidModel& a, const RepA& e, const std::vector<std::vector<Rational>>& points,
                   SignConvention conv) {
  validate_rep(a, e);
  const AForm eta = constant_form(a.rank(), identity_poly(e.dim()));
  const MixedForm dd = apply_D(a, e, apply_D(a, e, eta, conv), conv);
  RepCheck report;
  for (const auto& [k, f] : dd) {
    if (f.is_zero()) continue;
    const auto& [idx, value] = *f.components().begin();
    RepCheckFailure failure{k, idx, std::nullopt};
    for (const auto& pt : points) {
      if (!evaluate(value, pt).is_zero()) {
        failure.point = pt;
        break;
      }
    }
    report.failures.push_back(std::move(failure));
  }
  return report;
}

TMConnection TMConnection::flat(const AlgebroidModel& a) {
  return {std::vector<PolyMatrix>(a.chart_dim(), PolyMatrix(a.rank(), a.rank()))};
}

Section connection_apply(const AlgebroidModel& a, const TMConnection& conn, const VectorField& x,
                         const Section& alpha) {
  const std::size_t r = a.rank();
  if (conn.gamma.size() != a.chart_dim()) throw std::invalid_argument("connection needs one matrix per chart direction");
  Section out(r);
  for (std::size_t j = 0; j < a.chart_dim(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t c = 0; c < r; ++c) {
      Polynomial v = alpha[c].partial(j);
      for (std::size_t b = 0; b < r; ++b)
        if (!conn.gamma[j](c, b).is_zero()) v += conn.gamma[j](c, b) * alpha[b];
      out[c] += x[j] * v;
    }
  }
  return out;
}

Section basic_on_section(const AlgebroidModel& a, const TMConnection& conn, const Section& alpha,
                         const Section& beta) {
  return plus(connection_apply(a, conn, a.anchor_of(beta), alpha), a.bracket(alpha, beta));
}

VectorField basic_on_vector(const AlgebroidModel& a, const TMConnection& conn, const Section& alpha,
                            const VectorField& x) {
  VectorField out = a.anchor_of(connection_apply(a, conn, x, alpha));
  const VectorField br = lie_bracket(a.anchor_of(alpha), x);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += br[j];
  return out;
}

Section basic_curvature(const AlgebroidModel& a, const TMConnection& conn, const Section& alpha,
                        const Section& beta, const VectorField& x) {
  const auto nab = [&](const VectorField& v, const Section& s) { return connection_apply(a, conn, v, s); };
  Section out = nab(x, a.bracket(alpha, beta));
  out = minus(out, a.bracket(nab(x, alpha), beta));
  out = minus(out, a.bracket(alpha, nab(x, beta)));
  out = minus(out, nab(basic_on_vector(a, conn, beta, x), alpha));
  out = plus(out, nab(basic_on_vector(a, conn, alpha, x), beta));
  return out;
}

RepA build_adjoint(const AlgebroidModel& a, const TMConnection& conn) {
  const std::size_t r = a.rank();
  const std::size_t n = a.chart_dim();
  const std::size_t dim = r + n;
  RepA e;
  e.degrees.assign(r, 0);
  e.degrees.insert(e.degrees.end(), n, 1);
  e.del = PolyMatrix(dim, dim);
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t j = 0; j < n; ++j) e.del(r + j, b) = a.anchor(b, j);

  const auto coordinate_field = [&](std::size_t j) {
    VectorField x(n);
    x[j] = Polynomial(1);
    return x;
  };

  for (std::size_t s = 0; s < r; ++s) {
    PolyMatrix m(dim, dim);
    for (std::size_t b = 0; b < r; ++b) {
      const Section v = basic_on_section(a, conn, a.frame(s), a.frame(b));
      for (std::size_t c = 0; c < r; ++c) m(c, b) = v[c];
    }
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField v = basic_on_vector(a, conn, a.frame(s), coordinate_field(j));
      for (std::size_t l = 0; l < n; ++l) m(r + l, r + j) = v[l];
    }
    e.conn.push_back(std::move(m));
  }

  if (r >= 2 && n >= 1) {
    AForm k(r, 2, dim, dim);
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t t = s + 1; t < r; ++t) {
        PolyMatrix m(dim, dim);
        for (std::size_t j = 0; j < n; ++j) {
          const Section v = basic_curvature(a, conn, a.frame(s), a.frame(t), coordinate_field(j));
          for (std::size_t c = 0; c < r; ++c) m(c, r + j) = v[c];
        }
        k.set({static_cast<int>(s), static_cast<int>(t)}, std::move(m));
      }
    if (!k.is_zero()) e.omegas.emplace(2, std::move(k));
  }
  return e;
}

MorphismA MorphismA::identity(const AlgebroidModel& a, const RepA& e) {
  MorphismA m;
  m.phi.emplace(0, constant_form(a.rank(), identity_poly(e.dim())));
  return m;
}

MorphismA adjoint_isomorphism(const AlgebroidModel& a, const TMConnection& from, const TMConnection& to) {
  const std::size_t r = a.rank(), n = a.chart_dim(), dim = r + n;
  MorphismA phi;
  phi.phi.emplace(0, constant_form(r, identity_poly(dim)));
  if (n == 0) return phi;
  AForm p1(r, 1, dim, dim);
  for (std::size_t s = 0; s < r; ++s) {
    PolyMatrix m(dim, dim);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < r; ++c) m(c, r + j) = to.gamma[j](c, s) - from.gamma[j](c, s);
    p1.set({static_cast<int>(s)}, std::move(m));
  }
  if (!p1.is_zero()) phi.phi.emplace(1, std::move(p1));
  return phi;
}

MixedForm apply_morphism(const MorphismA& phi, const AForm& eta, const std::vector<int>& row_degrees,
                         SignConvention conv) {
  MixedForm out;
  for (const auto& [i, f] : phi.phi) {
    if (static_cast<std::size_t>(eta.arity() + i) > eta.rank()) continue;
    accumulate(out, operator_wedge(f, 0, eta, row_degrees, conv));
  }
  return out;
}

namespace {

MixedForm apply_morphism_mixed(const MorphismA& phi, const MixedForm& eta, const std::vector<int>& degrees,
                               SignConvention conv) {
  MixedForm out;
  for (const auto& [k, f] : eta) accumulate(out, apply_morphism(phi, f, degrees, conv));
  return out;
}

MixedForm commutator_defect(const AlgebroidModel& a, const MorphismA& phi, const RepA& e, const RepA& f,
                            const AForm& eta, SignConvention conv) {
  MixedForm lhs = apply_morphism_mixed(phi, apply_D(a, e, eta, conv), e.degrees, conv);
  const MixedForm rhs = apply_D(a, f, apply_morphism(phi, eta, e.degrees, conv), conv);
  for (const auto& [k, v] : rhs) accumulate(lhs, scaled(v, Rational(-1)));
  return lhs;
}

}  // namespace

MorphismCheck check_morphism_A(const AlgebroidModel& a, const MorphismA& phi, const RepA& e, const RepA& f,
                               SignConvention conv) {
  validate_rep(a, e);
  validate_rep(a, f);
  for (const auto& [i, form] : phi.phi) {
    if (form.arity() != i || form.rows() != f.dim() || form.cols() != e.dim()) {
      throw std::invalid_argument("morphism component " + std::to_string(i) + " has the wrong shape");
    }
  }
  MorphismCheck report;
  const MixedForm defect =
      commutator_defect(a, phi, e, f, constant_form(a.rank(), identity_poly(e.dim())), conv);
  for (const auto& [k, v] : defect) {
    if (!v.is_zero()) report.failing_equations.push_back(k);
  }
  const int top = static_cast<int>(std::min<std::size_t>(3, a.rank()));
  for (int k = 1; k <= top && report.test_forms_ok; ++k) {
    for (const auto& s : subsets(static_cast<int>(a.rank()), k)) {
      AForm eta(a.rank(), k, e.dim(), e.dim());
      eta.set(s, identity_poly(e.dim()));
      const MixedForm d = commutator_defect(a, phi, e, f, eta, conv);
      if (!is_zero(d)) {
        report.test_forms_ok = false;
        std::ostringstream os;
        os << "phi D != D phi on the test form of arity " << k;
        report.witness = os.str();
        break;
      }
    }
  }
  if (!report.failing_equations.empty() && report.witness.empty()) {
    report.witness = "equation " + std::to_string(report.failing_equations.front()) + " fails";
  }
  return report;
}

bool quasi_iso_A(const AlgebroidModel& a, const MorphismA& phi, const RepA& e, const RepA& f,
                 const std::vector<std::vector<Rational>>& points) {
  auto it = phi.phi.find(0);
  const PolyMatrix phi0 = it == phi.phi.end() ? PolyMatrix(f.dim(), e.dim()) : it->second.at({});
  std::vector<std::vector<Rational>> pts = points;
  if (pts.empty() && a.is_point()) pts.emplace_back();
  for (const auto& pt : pts) {
    if (!cone_acyclic(evaluate(e.del, pt), evaluate(f.del, pt), evaluate(phi0, pt))) return false;
  }
  return true;
}

CochainComplex point_complex(const AlgebroidModel& a, const RepA& e, SignConvention conv) {
  if (!a.is_point()) throw std::invalid_argument("point_complex needs a point base");
  validate_rep(a, e);
  const int r = static_cast<int>(a.rank());
  const std::size_t n = e.dim();
  // basis of each total degree: (subset, fiber index)
  std::map<int, std::map<std::pair<std::vector<int>, std::size_t>, std::size_t>> index;
  int lo = 0, hi = 0;
  if (n > 0) {
    lo = e.degrees.front();
    hi = r + e.degrees.back();
  }
  for (int k = 0; k <= r; ++k)
    for (const auto& s : subsets(r, k))
      for (std::size_t j = 0; j < n; ++j) {
        auto& slot = index[k + e.degrees[j]];
        slot.emplace(std::make_pair(s, j), slot.size());
      }
  CochainComplex c;
  for (int d = lo; d <= hi + 1; ++d) c.set_space(d, index.count(d) ? index[d].size() : 0);
  std::map<int, SparseBuilder> builders;
  for (int d = lo; d <= hi; ++d) builders.emplace(d, SparseBuilder(c.dim(d + 1), c.dim(d)));
  for (int k = 0; k <= r; ++k)
    for (const auto& s : subsets(r, k)) {
      AForm eta(a.rank(), k, n, n);
      eta.set(s, identity_poly(n));
      const MixedForm image = apply_D(a, e, eta, conv);
      for (const auto& [arity, form] : image)
        for (const auto& [t, m] : form.components())
          for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col) {
              if (m(row, col).is_zero()) continue;
              const int src_deg = k + e.degrees[col];
              const int tgt_deg = arity + e.degrees[row];
              if (tgt_deg != src_deg + 1) throw std::logic_error("D is not of degree one");
              builders.at(src_deg).add(index[tgt_deg].at({t, row}), index[src_deg].at({s, col}),
                                       constant_value(m(row, col)));
            }
    }
  for (auto& [d, b] : builders) c.set_differential(d, std::move(b).build());
  return c;
}

CohomologyReport deformation_cohomology(const AlgebroidModel& a, int lo, int hi) {
  return cohomology(point_complex(a, build_adjoint(a, TMConnection::flat(a))), lo, hi);
}

}  // namespace hrep
