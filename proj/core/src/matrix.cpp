#include "hrep/matrix.hpp"

namespace hrep {

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t dense_rank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  return m.map([&](const Polynomial& p) { return p.evaluate<Rational>(point); });
}

bool cone_acyclic(const RationalMatrix& de, const RationalMatrix& df, const RationalMatrix& phi) {
  const std::size_t ne = de.rows(), nf = df.rows();
  if (de.cols() != ne || df.cols() != nf || phi.rows() != nf || phi.cols() != ne)
    throw std::invalid_argument("cone_acyclic: shape mismatch");
  RationalMatrix cone(ne + nf, ne + nf);
  for (std::size_t r = 0; r < ne; ++r)
    for (std::size_t c = 0; c < ne; ++c) cone(r, c) = -de(r, c);
  for (std::size_t r = 0; r < nf; ++r) {
    for (std::size_t c = 0; c < ne; ++c) cone(ne + r, c) = phi(r, c);
    for (std::size_t c = 0; c < nf; ++c) cone(ne + r, ne + c) = df(r, c);
  }
  return 2 * dense_rank(cone) == ne + nf;
}

}  // namespace hrep
