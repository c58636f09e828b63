#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace evoform {

// 0-based axis multi-indices. Canonical storage is strictly increasing.

// Sorts `idx` ascending; returns the permutation sign, or 0 on a repeat.
inline int canonicalize(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

// All strictly increasing k-subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<int>> increasing_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

// Complement of an increasing subset within {0..n-1}, increasing.
inline std::vector<int> complement_subset(const std::vector<int>& idx, int n) {
  std::vector<int> out;
  std::size_t j = 0;
  for (int a = 0; a < n; ++a) {
    if (j < idx.size() && idx[j] == a) {
      ++j;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

// Sign of the permutation taking (0..n-1) to the concatenated sequence.
inline int permutation_sign(const std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) sign = -sign;
  return sign;
}

}  // namespace evoform
