#pragma once

// Dense Chevalley-Eilenberg complex of a Lie algebra with coefficients in a
// representation, written from the textbook formula. Used as an oracle.

#include <algorithm>
#include <map>
#include <vector>

#include "hrep/graded.hpp"
#include "hrep/matrix.hpp"

namespace hrep::oracle {

struct LieData {
  std::size_t dim;
  // bracket[i][j][k] = c_ij^k
  std::vector<std::vector<std::vector<Rational>>> bracket;
};

inline LieData make_lie(std::size_t n) {
  return {n, std::vector(n, std::vector(n, std::vector<Rational>(n, Rational(0))))};
}

inline void set_bracket(LieData& g, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  g.bracket[i][j][k] = v;
  g.bracket[j][i][k] = -v;
}

inline LieData sl2() {
  // e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
  LieData g = make_lie(3);
  set_bracket(g, 0, 1, 2, 1);
  set_bracket(g, 2, 0, 0, 2);
  set_bracket(g, 2, 1, 1, -2);
  return g;
}

inline LieData so3() {
  LieData g = make_lie(3);
  set_bracket(g, 0, 1, 2, 1);
  set_bracket(g, 1, 2, 0, 1);
  set_bracket(g, 2, 0, 1, 1);
  return g;
}

inline LieData heisenberg() {
  LieData g = make_lie(3);
  set_bracket(g, 0, 1, 2, 1);
  return g;
}

inline std::vector<RationalMatrix> adjoint_rep(const LieData& g) {
  std::vector<RationalMatrix> rho;
  for (std::size_t i = 0; i < g.dim; ++i) {
    RationalMatrix m(g.dim, g.dim);
    for (std::size_t j = 0; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k) m(k, j) = g.bracket[i][j][k];
    rho.push_back(m);
  }
  return rho;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// d_k : C^k -> C^{k+1} as dense matrices, k = 0 .. dim - 1.
inline std::vector<RationalMatrix> ce_differentials(const LieData& g, const std::vector<RationalMatrix>& rho) {
  const std::size_t n = g.dim;
  const std::size_t v = rho.empty() ? 0 : rho[0].rows();
  std::vector<RationalMatrix> out;
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = subsets(n, k);
    const auto tgt = subsets(n, k + 1);
    std::map<std::vector<std::size_t>, std::size_t> src_index;
    for (std::size_t i = 0; i < src.size(); ++i) src_index[src[i]] = i;
    // value of basis cochain (S, a) on an index list: sign of sorting, or 0
    const auto coefficient_of = [&](std::vector<std::size_t> idx, std::size_t& which) -> int {
      int sign = 1;
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
          if (idx[j] > idx[j + 1]) {
            std::swap(idx[j], idx[j + 1]);
            sign = -sign;
          }
      for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
      which = src_index.at(idx);
      return sign;
    };
    RationalMatrix d(tgt.size() * v, src.size() * v);
    for (std::size_t t = 0; t < tgt.size(); ++t) {
      const auto& x = tgt[t];
      for (std::size_t i = 0; i <= k; ++i) {
        std::vector<std::size_t> rest = x;
        rest.erase(rest.begin() + static_cast<long>(i));
        std::size_t s = 0;
        const int sg = coefficient_of(rest, s) * ((i % 2) ? -1 : 1);
        for (std::size_t a = 0; a < v; ++a)
          for (std::size_t b = 0; b < v; ++b) d(t * v + b, s * v + a) += sg * rho[x[i]](b, a);
      }
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j)
          for (std::size_t m = 0; m < n; ++m) {
            const Rational& cm = g.bracket[x[i]][x[j]][m];
            if (cm == 0) continue;
            std::vector<std::size_t> rest = {m};
            for (std::size_t l = 0; l <= k; ++l)
              if (l != i && l != j) rest.push_back(x[l]);
            std::size_t s = 0;
            const int sg = coefficient_of(rest, s) * (((i + j) % 2) ? -1 : 1);
            if (sg == 0) continue;
            for (std::size_t a = 0; a < v; ++a) d(t * v + a, s * v + a) += sg * cm;
          }
    }
    out.push_back(std::move(d));
  }
  return out;
}

inline CochainComplex ce_complex(const LieData& g, const std::vector<RationalMatrix>& rho) {
  const std::size_t v = rho.empty() ? 0 : rho[0].rows();
  CochainComplex c;
  for (std::size_t k = 0; k <= g.dim; ++k) c.set_space(static_cast<int>(k), subsets(g.dim, k).size() * v);
  const auto d = ce_differentials(g, rho);
  for (std::size_t k = 0; k < d.size(); ++k) c.set_differential(static_cast<int>(k), SparseMatrix::from_dense(d[k]));
  return c;
}

/// dim H^k for 0 <= k <= hi by dense Gaussian elimination.
inline std::vector<std::size_t> dense_cohomology_dims(const LieData& g, const std::vector<RationalMatrix>& rho,
                                                      int hi) {
  const std::size_t v = rho.empty() ? 0 : rho[0].rows();
  const auto d = ce_differentials(g, rho);
  const auto rank_of = [&](int k) -> std::size_t {
    return k < 0 || k >= static_cast<int>(d.size()) ? 0 : dense_rank(d[static_cast<std::size_t>(k)]);
  };
  std::vector<std::size_t> out;
  for (int k = 0; k <= hi; ++k) {
    const std::size_t dim = k > static_cast<int>(g.dim) ? 0 : subsets(g.dim, static_cast<std::size_t>(k)).size() * v;
    out.push_back(dim - rank_of(k) - rank_of(k - 1));
  }
  return out;
}

}  // namespace hrep::oracle
