#include "hrep/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace hrep {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

int shuffle_sign(const std::vector<int>& first) {
  long inversions = 0;
  for (std::size_t i = 0; i < first.size(); ++i) inversions += first[i] - static_cast<long>(i);
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<SignedPermutation> permutations(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<int> q = p;
    out.push_back({p, sort_with_sign(q)});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace hrep
