#pragma once

#include <string>
#include <vector>

namespace qgauss {

// Positions are 0-based inside the library; rendering and parsing use 1-based labels.
struct Pair {
  int left;
  int right;
  friend bool operator==(const Pair& a, const Pair& b) { return a.left == b.left && a.right == b.right; }
};

// Enumeration refuses ground sets larger than max_ground_set instead of truncating.
struct Limits {
  int max_ground_set = 12;
  // Reads QGAUSS_MAX_GROUND_SET when set.
  static Limits from_env();
};

// A partition of {0..m-1} into blocks of size one or two.
// Invariant: pairs sorted by left leg with left < right; singletons sorted.
class Partition12 {
 public:
  Partition12() = default;
  Partition12(int size, std::vector<Pair> pairs);
  static Partition12 from_blocks(int size, const std::vector<std::vector<int>>& blocks);

  int size() const { return size_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const std::vector<int>& singletons() const { return singletons_; }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }
  int num_singletons() const { return static_cast<int>(singletons_.size()); }
  bool is_pair_partition() const { return singletons_.empty(); }
  // Partner position, or -1 for a singleton.
  int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }

  // Blocks sorted internally and ordered by their least element.
  std::vector<std::vector<int>> blocks() const;
  // Mirror image i -> m-1-i.
  Partition12 reversed() const;

  // "{{1,3},{2},{4,5}}" with 1-based labels.
  std::string to_string() const;

  friend bool operator==(const Partition12& a, const Partition12& b) {
    return a.size_ == b.size_ && a.pairs_ == b.pairs_;
  }
  friend bool operator<(const Partition12& a, const Partition12& b);

 private:
  int size_ = 0;
  std::vector<Pair> pairs_;
  std::vector<int> singletons_;
  std::vector<int> partner_;
};

// Both lists are returned in canonical order (lexicographic on the block list).
std::vector<Partition12> enumerate_pair_partitions(int m, const Limits& limits = {});
std::vector<Partition12> enumerate_pair_singleton(int m, const Limits& limits = {});
std::vector<Partition12> enumerate_with_singletons(int m, int singletons, const Limits& limits = {});

// Number of pairs {a,b},{c,d} with a < c < b < d.
int crossing_number(const Partition12& p);
// Crossings when every singleton is drawn as a leg running to infinity: crossing_number
// plus the number of (pair {a,b}, singleton c) with a < c < b. Equal to crossing_number
// on pair partitions.
int wick_crossing_number(const Partition12& p);

// phi: the t-th singleton (increasing) goes to t, the t-th pair (ordered by left leg)
// goes to s + t. Values are 0-based copy indices.
std::vector<int> encoding_map(const Partition12& p);

// All gamma on the concatenation sigma|theta that keep the blocks of both and
// additionally pair some singletons of sigma with some singletons of theta.
std::vector<Partition12> convolution_joins(const Partition12& sigma, const Partition12& theta,
                                           const Limits& limits = {});

// Set partitions of {0..m-1} as restricted growth strings: label[i] is the block of i,
// blocks numbered by first occurrence.
std::vector<std::vector<int>> enumerate_set_partitions(int m, const Limits& limits = {});

int inversions(const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int k);

}  // namespace qgauss
