#include "hrep/graded.hpp"

#include <stdexcept>
#include <string>

namespace hrep {

GradedSpace::GradedSpace(std::map<int, std::size_t> dims) {
  for (const auto& [d, n] : dims)
    if (n > 0) dims_.emplace(d, n);
}

GradedSpace GradedSpace::from_basis_degrees(const std::vector<int>& degrees) {
  std::map<int, std::size_t> dims;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0 && degrees[i] < degrees[i - 1]) {
      throw std::invalid_argument("basis degrees must be non-decreasing");
    }
    ++dims[degrees[i]];
  }
  return GradedSpace(std::move(dims));
}

std::size_t GradedSpace::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

std::size_t GradedSpace::total_dim() const {
  std::size_t t = 0;
  for (const auto& [d, n] : dims_) t += n;
  return t;
}

std::size_t GradedSpace::offset(int degree) const {
  std::size_t t = 0;
  for (const auto& [d, n] : dims_) {
    if (d >= degree) break;
    t += n;
  }
  return t;
}

std::vector<int> GradedSpace::basis_degrees() const {
  std::vector<int> out;
  for (const auto& [d, n] : dims_) out.insert(out.end(), n, d);
  return out;
}

int GradedSpace::min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
int GradedSpace::max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

GradedMap::GradedMap(GradedSpace source, GradedSpace target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

GradedMap::GradedMap(GradedSpace source, GradedSpace target, int degree, std::map<int, SparseMatrix> blocks)
    : GradedMap(std::move(source), std::move(target), degree) {
  for (auto& [d, m] : blocks) set_block(d, std::move(m));
}

void GradedMap::set_block(int source_degree, SparseMatrix m) {
  const std::size_t r = target_.dim(source_degree + degree_);
  const std::size_t c = source_.dim(source_degree);
  if (m.rows() != r || m.cols() != c) {
    throw std::invalid_argument("graded map block in degree " + std::to_string(source_degree) + " has shape " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                std::to_string(r) + "x" + std::to_string(c));
  }
  if (m.is_zero()) {
    blocks_.erase(source_degree);
  } else {
    blocks_[source_degree] = std::move(m);
  }
}

SparseMatrix GradedMap::block(int source_degree) const {
  auto it = blocks_.find(source_degree);
  if (it != blocks_.end()) return it->second;
  return SparseMatrix(target_.dim(source_degree + degree_), source_.dim(source_degree));
}

SparseMatrix GradedMap::flat() const {
  SparseBuilder b(target_.total_dim(), source_.total_dim());
  for (const auto& [d, m] : blocks_) {
    const std::size_t ro = target_.offset(d + degree_);
    const std::size_t co = source_.offset(d);
    for (const auto& e : m.entries()) b.add(ro + e.row, co + e.col, e.value);
  }
  return std::move(b).build();
}

GradedMap GradedMap::from_flat(GradedSpace source, GradedSpace target, int degree, const SparseMatrix& flat) {
  if (flat.rows() != target.total_dim() || flat.cols() != source.total_dim()) {
    throw std::invalid_argument("flat matrix shape does not match graded spaces");
  }
  const auto src_deg = source.basis_degrees();
  const auto tgt_deg = target.basis_degrees();
  std::map<int, SparseBuilder> builders;
  for (const auto& e : flat.entries()) {
    const int sd = src_deg[e.col];
    if (tgt_deg[e.row] != sd + degree) {
      throw std::invalid_argument("flat matrix is not homogeneous of degree " + std::to_string(degree));
    }
    auto it = builders.find(sd);
    if (it == builders.end()) it = builders.emplace(sd, SparseBuilder(target.dim(sd + degree), source.dim(sd))).first;
    it->second.add(e.row - target.offset(sd + degree), e.col - source.offset(sd), e.value);
  }
  GradedMap out(std::move(source), std::move(target), degree);
  for (auto& [d, b] : builders) out.set_block(d, std::move(b).build());
  return out;
}

GradedMap compose(const GradedMap& after, const GradedMap& before) {
  if (!(after.source_ == before.target_)) throw std::invalid_argument("compose: graded spaces do not match");
  GradedMap out(before.source_, after.target_, after.degree_ + before.degree_);
  for (const auto& [d, m] : before.blocks_) {
    out.set_block(d, after.block(d + before.degree_) * m);
  }
  return out;
}

void CochainComplex::set_differential(int degree, SparseMatrix d) {
  const auto check = [&](int deg, std::size_t n) {
    auto it = dims_.find(deg);
    if (it == dims_.end()) {
      dims_[deg] = n;
    } else if (it->second != n) {
      throw std::invalid_argument("differential d_" + std::to_string(degree) + " has shape " +
                                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                  " but C^" + std::to_string(deg) + " has dimension " + std::to_string(it->second));
    }
  };
  check(degree, d.cols());
  check(degree + 1, d.rows());
  diffs_[degree] = std::move(d);
}

std::size_t CochainComplex::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

SparseMatrix CochainComplex::differential(int degree) const {
  auto it = diffs_.find(degree);
  if (it != diffs_.end()) return it->second;
  return SparseMatrix(dim(degree + 1), dim(degree));
}

SquareZeroReport check_square_zero(const CochainComplex& c, std::optional<std::pair<int, int>> range) {
  int lo = 0, hi = -1;
  if (range) {
    lo = range->first;
    hi = range->second;
  } else if (!c.dims().empty()) {
    lo = c.dims().begin()->first;
    hi = c.dims().rbegin()->first;
  }
  SquareZeroReport report;
  for (int n = lo; n <= hi; ++n) {
    if (!c.has_differential(n) || !c.has_differential(n + 1)) continue;
    const SparseMatrix a = c.differential(n);
    const SparseMatrix b = c.differential(n + 1);
    if (b.cols() != a.rows()) {
      throw std::invalid_argument("differentials d_" + std::to_string(n) + " and d_" + std::to_string(n + 1) +
                                  " do not compose");
    }
    const SparseMatrix sq = b * a;
    if (!sq.is_zero()) {
      const std::size_t col = sq.entries().front().col;
      report.failures.push_back({n, col, sq.column(col)});
    }
  }
  return report;
}

std::size_t CohomologyReport::dim(int degree) const {
  for (const auto& e : entries)
    if (e.degree == degree) return e.H;
  throw std::out_of_range("degree " + std::to_string(degree) + " not in cohomology report");
}

long CohomologyReport::euler_characteristic() const {
  long chi = 0;
  for (const auto& e : entries) chi += parity_sign(e.degree) * static_cast<long>(e.H);
  return chi;
}

CohomologyReport cohomology(const CochainComplex& c, int lo, int hi) {
  const auto sq = check_square_zero(c, std::make_pair(lo - 1, hi));
  if (!sq.ok()) {
    throw std::domain_error("square-zero violation at degree " + std::to_string(sq.failures.front().degree));
  }
  std::map<int, std::size_t> ranks;
  const auto rank_of = [&](int n) {
    auto it = ranks.find(n);
    if (it == ranks.end()) it = ranks.emplace(n, rank(c.differential(n))).first;
    return it->second;
  };
  CohomologyReport out;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t ker = c.dim(n) - rank_of(n);
    const std::size_t im = rank_of(n - 1);
    out.entries.push_back({n, ker, im, ker - im});
  }
  return out;
}

}  // namespace hrep
