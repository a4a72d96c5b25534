#include "qgauss/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "qgauss/errors.hpp"

namespace qgauss {

Limits Limits::from_env() {
  Limits l;
  if (const char* v = std::getenv("QGAUSS_MAX_GROUND_SET")) {
    const int n = std::atoi(v);
    if (n > 0) l.max_ground_set = n;
  }
  return l;
}

namespace {

void check_cap(int m, const Limits& limits) {
  if (m < 0) throw InvalidArgument("negative ground set size");
  if (m > limits.max_ground_set) {
    throw CapExceeded("ground set of size " + std::to_string(m) + " exceeds enumeration cap " +
                      std::to_string(limits.max_ground_set));
  }
}

}  // namespace

Partition12::Partition12(int size, std::vector<Pair> pairs) : size_(size), pairs_(std::move(pairs)) {
  if (size < 0) throw InvalidArgument("negative partition size");
  partner_.assign(static_cast<std::size_t>(size), -1);
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (auto& p : pairs_) {
    if (p.left > p.right) std::swap(p.left, p.right);
    if (p.left < 0 || p.right >= size || p.left == p.right) throw InvalidArgument("pair out of range");
    if (seen[p.left] || seen[p.right]) throw InvalidArgument("blocks overlap");
    seen[p.left] = seen[p.right] = true;
    partner_[p.left] = p.right;
    partner_[p.right] = p.left;
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) { return a.left < b.left; });
  for (int i = 0; i < size; ++i) {
    if (!seen[i]) singletons_.push_back(i);
  }
}

Partition12 Partition12::from_blocks(int size, const std::vector<std::vector<int>>& blocks) {
  std::vector<Pair> pairs;
  int covered = 0;
  for (const auto& b : blocks) {
    if (b.size() == 2) {
      pairs.push_back({b[0], b[1]});
    } else if (b.size() != 1) {
      throw InvalidArgument("blocks must have size 1 or 2");
    }
    covered += static_cast<int>(b.size());
  }
  if (covered != size) throw InvalidArgument("blocks do not cover the ground set");
  return Partition12(size, std::move(pairs));
}

std::vector<std::vector<int>> Partition12::blocks() const {
  std::vector<std::vector<int>> out;
  out.reserve(pairs_.size() + singletons_.size());
  for (int i = 0; i < size_; ++i) {
    const int p = partner_[i];
    if (p < 0) {
      out.push_back({i});
    } else if (p > i) {
      out.push_back({i, p});
    }
  }
  return out;
}

Partition12 Partition12::reversed() const {
  std::vector<Pair> pairs;
  for (const auto& p : pairs_) pairs.push_back({size_ - 1 - p.right, size_ - 1 - p.left});
  return Partition12(size_, std::move(pairs));
}

std::string Partition12::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& b : blocks()) {
    if (!first) out += ",";
    first = false;
    out += "{";
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(b[k] + 1);
    }
    out += "}";
  }
  return out + "}";
}

bool operator<(const Partition12& a, const Partition12& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.blocks() < b.blocks();
}

namespace {

// Recursive enumeration: the least open position is either a singleton (if allowed)
// or paired with a later open position.
void enumerate_rec(std::vector<int>& partner, int m, bool allow_singletons, int singletons_left,
                   std::vector<Partition12>& out) {
  int first = -1;
  for (int i = 0; i < m; ++i) {
    if (partner[i] == -2) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    if (singletons_left > 0) return;
    std::vector<Pair> pairs;
    for (int i = 0; i < m; ++i) {
      if (partner[i] > i) pairs.push_back({i, partner[i]});
    }
    out.emplace_back(m, std::move(pairs));
    return;
  }
  if (allow_singletons && singletons_left != 0) {
    partner[first] = -1;
    enumerate_rec(partner, m, allow_singletons, singletons_left - 1, out);
    partner[first] = -2;
  }
  for (int j = first + 1; j < m; ++j) {
    if (partner[j] != -2) continue;
    partner[first] = j;
    partner[j] = first;
    enumerate_rec(partner, m, allow_singletons, singletons_left, out);
    partner[first] = partner[j] = -2;
  }
}

std::vector<Partition12> run_enumeration(int m, bool allow_singletons, int singletons) {
  std::vector<int> partner(static_cast<std::size_t>(m), -2);
  std::vector<Partition12> out;
  enumerate_rec(partner, m, allow_singletons, singletons, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Partition12> enumerate_pair_partitions(int m, const Limits& limits) {
  check_cap(m, limits);
  if (m % 2 != 0) return {};
  return run_enumeration(m, false, 0);
}

std::vector<Partition12> enumerate_pair_singleton(int m, const Limits& limits) {
  check_cap(m, limits);
  return run_enumeration(m, true, -1);
}

std::vector<Partition12> enumerate_with_singletons(int m, int singletons, const Limits& limits) {
  check_cap(m, limits);
  if (singletons < 0 || singletons > m || (m - singletons) % 2 != 0) return {};
  return run_enumeration(m, true, singletons);
}

int crossing_number(const Partition12& p) {
  int count = 0;
  const auto& pairs = p.pairs();
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      // pairs are sorted by left leg, so pairs[x].left < pairs[y].left
      if (pairs[y].left < pairs[x].right && pairs[x].right < pairs[y].right) ++count;
    }
  }
  return count;
}

int wick_crossing_number(const Partition12& p) {
  int count = crossing_number(p);
  for (const auto& pr : p.pairs())
    for (int c : p.singletons())
      if (pr.left < c && c < pr.right) ++count;
  return count;
}

std::vector<int> encoding_map(const Partition12& p) {
  std::vector<int> phi(static_cast<std::size_t>(p.size()), -1);
  const int s = p.num_singletons();
  for (int t = 0; t < s; ++t) phi[p.singletons()[t]] = t;
  for (int t = 0; t < p.num_pairs(); ++t) {
    phi[p.pairs()[t].left] = s + t;
    phi[p.pairs()[t].right] = s + t;
  }
  return phi;
}

std::vector<Partition12> convolution_joins(const Partition12& sigma, const Partition12& theta,
                                           const Limits& limits) {
  const int m = sigma.size();
  const int total = m + theta.size();
  check_cap(total, limits);
  std::vector<Pair> base = sigma.pairs();
  for (const auto& p : theta.pairs()) base.push_back({p.left + m, p.right + m});
  const auto& ls = sigma.singletons();
  std::vector<int> rs;
  for (int r : theta.singletons()) rs.push_back(r + m);

  std::vector<Partition12> out;
  std::vector<bool> used(rs.size(), false);
  std::vector<Pair> extra;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ls.size()) {
      std::vector<Pair> all = base;
      all.insert(all.end(), extra.begin(), extra.end());
      out.emplace_back(total, std::move(all));
      return;
    }
    rec(i + 1);
    for (std::size_t k = 0; k < rs.size(); ++k) {
      if (used[k]) continue;
      used[k] = true;
      extra.push_back({ls[i], rs[k]});
      rec(i + 1);
      extra.pop_back();
      used[k] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> enumerate_set_partitions(int m, const Limits& limits) {
  check_cap(m, limits);
  std::vector<std::vector<int>> out;
  std::vector<int> label(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == m) {
      out.push_back(label);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

int inversions(const std::vector<int>& perm) {
  int count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++count;
  return count;
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace qgauss
