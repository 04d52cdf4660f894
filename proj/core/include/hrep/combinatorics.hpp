#pragma once

#include <cstddef>
#include <vector>

namespace hrep {

/// All strictly increasing k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k);

/// Sorts `idx` in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int>& idx);

/// Sign of the shuffle placing positions `first` (sorted) before the rest,
/// within 0..total-1.
int shuffle_sign(const std::vector<int>& first);

/// All permutations of {0..n-1} with their signs.
struct SignedPermutation {
  std::vector<int> perm;
  int sign;
};
std::vector<SignedPermutation> permutations(int n);

}  // namespace hrep
