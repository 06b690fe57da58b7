#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mh/motivic.hpp"

namespace mh {

// Set partition of {1..n}; blocks sorted by minimum element.  Corresponds to
// the subgroup of S_n fixing a vector with equal coordinates exactly on the
// blocks (a Young stabilizer subgroup of the permutation representation).
class SetPartition {
public:
  SetPartition() = default;
  explicit SetPartition(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition discrete(int n);

  int n() const { return n_; }
  int block_count() const { return (int)blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int i) const { return assign_[i - 1]; }

  // true iff every block of *this is a union of blocks of finer.
  bool coarsens(const SetPartition& finer) const;
  bool operator==(const SetPartition& o) const { return assign_ == o.assign_; }
  bool operator<(const SetPartition& o) const { return assign_ < o.assign_; }

  std::string str() const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> assign_;  // element i-1 -> block index
};

// Chain P_1 < P_2 < ... < P_m of strictly coarsening set partitions, P_1
// strictly coarser than the discrete partition.  Corresponds to a strict
// stabilizer flag {e} = H_0 < H_1 < ... < H_m for S_n acting on its
// permutation representation; length() = m and fixed_dim() = #blocks of P_m
// is the dimension of the fixed subspace of H_m.
struct PartitionChain {
  int n = 0;
  std::vector<SetPartition> chain;

  int length() const { return (int)chain.size(); }
  int fixed_dim() const { return chain.empty() ? n : chain.back().block_count(); }
  void validate() const;
};

// One (n_f, d_f) tally of chain isomorphism classes.
struct ChainClassCount {
  int n_f = 0;
  int d_f = 0;
  std::uint64_t count = 0;
};

// Representatives of the S_n-conjugacy classes of strict stabilizer flags,
// i.e. isomorphism classes of chains under relabeling of {1..n}.  1 <= n <= 8.
std::vector<PartitionChain> enumerate_chains(int n);

// (n_f, d_f) class counts without materializing representatives (used for
// the larger n).
std::vector<ChainClassCount> chain_class_counts(int n);

// Independent strategy for cross-checking: enumerate all labeled chains and
// deduplicate by minimal relabeling.  Feasible for n <= 6.
std::vector<ChainClassCount> chain_class_counts_by_filtering(int n);

// sum over chain classes of (-1)^n_f L^d_f.
LaurentPoly flag_alternating_sum(int n);

// L^n - L^(n-1): the class of n unordered distinct points of A^1.
LaurentPoly conf_class(int n);

// ({U/S_n} - sum_{f : N(f) != S_n} (-1)^(n_f) L^(d_f)) / (L^n - L), with
// {U/S_n} = L^n + flag_alternating_sum(n); the only chain with normalizer
// S_n is the length-1 chain at the indiscrete partition.  2 <= n <= 8.
MotivicClass bsn_class(int n);

}  // namespace mh
