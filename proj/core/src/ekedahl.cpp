#include "mh/ekedahl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace mh {

SetPartition::SetPartition(int n, const std::vector<std::vector<int>>& blocks) : n_(n) {
  std::vector<bool> seen(n, false);
  blocks_ = blocks;
  for (auto& b : blocks_) {
    if (b.empty()) throw ConstraintViolation("empty block");
    std::vector<int> sb = b;
    std::sort(sb.begin(), sb.end());
    for (int x : sb) {
      if (x < 1 || x > n || seen[x - 1])
        throw ConstraintViolation("blocks must partition {1..n}");
      seen[x - 1] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw ConstraintViolation("blocks must cover {1..n}");
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  assign_.assign(n, -1);
  for (size_t bi = 0; bi < blocks_.size(); ++bi)
    for (int x : blocks_[bi]) assign_[x - 1] = (int)bi;
}

SetPartition SetPartition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, blocks);
}

bool SetPartition::coarsens(const SetPartition& finer) const {
  if (n_ != finer.n_) return false;
  // every block of finer must map into a single block of *this
  for (auto& b : finer.blocks_) {
    int target = assign_[b.front() - 1];
    for (int x : b)
      if (assign_[x - 1] != target) return false;
  }
  return true;
}

std::string SetPartition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << "|";
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ",";
      os << blocks_[i][j];
    }
  }
  return os.str();
}

void PartitionChain::validate() const {
  if (chain.empty()) throw ConstraintViolation("chain must have length >= 1");
  SetPartition prev = SetPartition::discrete(n);
  for (auto& p : chain) {
    if (p.n() != n) throw ConstraintViolation("chain member of wrong size");
    if (!p.coarsens(prev) || p.block_count() >= prev.block_count())
      throw ConstraintViolation("chain must strictly coarsen");
    prev = p;
  }
}

namespace {

constexpr int kMaxN = 8;

// A chain class is encoded as the sorted multiset of recursive block codes:
// a leaf is "*", a level-(i+1) block is "(" + concatenation of its sorted
// children codes + ")".  Unary nodes keep the level structure, so equal code
// multisets <=> isomorphic leveled forests <=> conjugate stabilizer flags.
using Code = std::string;
using State = std::vector<Code>;  // sorted

// All ways to group the items of `state` (each group >= 1 item, at least one
// group with >= 2 items), up to permutations of equal items and of groups.
// Standard multiset-partition enumeration: items are placed in order; an item
// equal to its predecessor may only join a group with index >= the one its
// predecessor joined.
void for_each_grouping(const State& state,
                       const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  size_t n = state.size();
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(n, -1);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == n) {
      bool has_merge = false;
      for (auto& g : groups)
        if (g.size() >= 2) has_merge = true;
      if (has_merge) fn(groups);
      return;
    }
    int min_group = 0;
    if (i > 0 && state[i] == state[i - 1]) min_group = group_of[i - 1];
    for (int gi = min_group; gi < (int)groups.size(); ++gi) {
      groups[gi].push_back((int)i);
      group_of[i] = gi;
      rec(i + 1);
      groups[gi].pop_back();
    }
    groups.push_back({(int)i});
    group_of[i] = (int)groups.size() - 1;
    rec(i + 1);
    groups.pop_back();
  };
  rec(0);
}

State merge_state(const State& state, const std::vector<std::vector<int>>& groups) {
  State next;
  for (auto& g : groups) {
    std::vector<Code> children;
    for (int idx : g) children.push_back(state[idx]);
    std::sort(children.begin(), children.end());
    Code c = "(";
    for (auto& ch : children) c += ch;
    c += ")";
    next.push_back(c);
  }
  std::sort(next.begin(), next.end());
  return next;
}

void check_n(int n) {
  if (n < 1) throw OutOfRange("need n >= 1");
  if (n > kMaxN) throw TooLarge("chain enumeration is limited to n <= 8");
}

}  // namespace

std::vector<ChainClassCount> chain_class_counts(int n) {
  check_n(n);
  std::map<std::pair<int, int>, std::uint64_t> tally;
  State initial(n, Code("*"));
  std::function<void(const State&, int)> rec = [&](const State& state, int depth) {
    for_each_grouping(state, [&](const std::vector<std::vector<int>>& groups) {
      State next = merge_state(state, groups);
      tally[{depth + 1, (int)next.size()}]++;
      if (next.size() >= 2) rec(next, depth + 1);
    });
  };
  if (n >= 2) rec(initial, 0);
  std::vector<ChainClassCount> out;
  for (auto& [key, c] : tally) out.push_back({key.first, key.second, c});
  return out;
}

std::vector<PartitionChain> enumerate_chains(int n) {
  check_n(n);
  std::vector<PartitionChain> out;
  // Track concrete representatives alongside the code states: the state is
  // canonical, so distinct recursion branches never produce the same class.
  struct Level {
    State state;
    SetPartition part;
  };
  std::function<void(const Level&, std::vector<SetPartition>&)> rec =
      [&](const Level& cur, std::vector<SetPartition>& stack) {
        for_each_grouping(cur.state, [&](const std::vector<std::vector<int>>& groups) {
          State next = merge_state(cur.state, groups);
          std::vector<std::vector<int>> blocks;
          for (auto& g : groups) {
            std::vector<int> merged;
            for (int idx : g) {
              const auto& b = cur.part.blocks()[idx];
              merged.insert(merged.end(), b.begin(), b.end());
            }
            blocks.push_back(merged);
          }
          SetPartition np(n, blocks);
          stack.push_back(np);
          PartitionChain pc{n, stack};
          out.push_back(pc);
          if (next.size() >= 2) {
            // merge_state sorts codes; keep the representative blocks in the
            // same order as the sorted codes so indices line up.
            std::vector<std::pair<Code, std::vector<int>>> paired;
            for (size_t i = 0; i < groups.size(); ++i) {
              std::vector<Code> children;
              for (int idx : groups[i]) children.push_back(cur.state[idx]);
              std::sort(children.begin(), children.end());
              Code c = "(";
              for (auto& ch : children) c += ch;
              c += ")";
              paired.push_back({c, blocks[i]});
            }
            std::sort(paired.begin(), paired.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            State ordered_state;
            std::vector<std::vector<int>> ordered_blocks;
            for (auto& [c, b] : paired) {
              ordered_state.push_back(c);
              ordered_blocks.push_back(b);
            }
            Level lvl2{ordered_state, SetPartition(n, ordered_blocks)};
            rec(lvl2, stack);
          }
          stack.pop_back();
        });
      };
  if (n >= 2) {
    Level init{State(n, Code("*")), SetPartition::discrete(n)};
    std::vector<SetPartition> stack;
    rec(init, stack);
  }
  return out;
}

std::vector<ChainClassCount> chain_class_counts_by_filtering(int n) {
  check_n(n);
  if (n > 6) throw TooLarge("labeled filtering is limited to n <= 6");
  // All labeled set partitions of {1..n}.
  std::vector<SetPartition> parts;
  std::vector<int> assign(n, 0);
  std::function<void(int, int)> gen = [&](int i, int maxb) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(maxb);
      for (int j = 0; j < n; ++j) blocks[assign[j]].push_back(j + 1);
      parts.push_back(SetPartition(n, blocks));
      return;
    }
    for (int b = 0; b <= maxb; ++b) {
      assign[i] = b;
      gen(i + 1, std::max(maxb, b + 1));
    }
  };
  gen(0, 0);

  // Permutations of {1..n}.
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto apply = [&](const SetPartition& p, const std::vector<int>& pi) {
    std::vector<std::vector<int>> blocks;
    for (auto& b : p.blocks()) {
      std::vector<int> nb;
      for (int x : b) nb.push_back(pi[x - 1]);
      blocks.push_back(nb);
    }
    return SetPartition(p.n(), blocks);
  };

  std::set<std::string> seen;
  std::map<std::pair<int, int>, std::uint64_t> tally;
  SetPartition disc = SetPartition::discrete(n);
  std::function<void(std::vector<SetPartition>&)> rec = [&](std::vector<SetPartition>& chain) {
    const SetPartition& last = chain.back();
    // canonical form: lexicographically minimal relabeled chain string
    std::string best;
    for (auto& pi : perms) {
      std::string s;
      for (auto& p : chain) s += apply(p, pi).str() + ";";
      if (best.empty() || s < best) best = s;
    }
    if (seen.insert(best).second)
      tally[{(int)chain.size(), last.block_count()}]++;
    for (auto& p : parts) {
      if (p.block_count() >= last.block_count()) continue;
      if (!p.coarsens(last)) continue;
      chain.push_back(p);
      rec(chain);
      chain.pop_back();
    }
  };
  for (auto& p : parts) {
    if (p.block_count() == n) continue;  // discrete is not a valid P_1
    std::vector<SetPartition> chain{p};
    rec(chain);
  }
  std::vector<ChainClassCount> out;
  for (auto& [key, c] : tally) out.push_back({key.first, key.second, c});
  return out;
}

LaurentPoly flag_alternating_sum(int n) {
  check_n(n);
  LaurentPoly s;
  for (auto& cc : chain_class_counts(n)) {
    BigInt sign = cc.n_f % 2 == 0 ? 1 : -1;
    s += LaurentPoly::term(sign * BigInt(cc.count), cc.d_f);
  }
  return s;
}

LaurentPoly conf_class(int n) {
  if (n < 1) throw OutOfRange("conf_class needs n >= 1");
  if (n == 1) return LaurentPoly::lefschetz(1);
  return LaurentPoly::lefschetz(n) - LaurentPoly::lefschetz(n - 1);
}

MotivicClass bsn_class(int n) {
  if (n < 2) throw OutOfRange("bsn_class needs n >= 2");
  check_n(n);
  auto counts = chain_class_counts(n);
  std::uint64_t indiscrete = 0;
  LaurentPoly flag;
  for (auto& cc : counts) {
    BigInt sign = cc.n_f % 2 == 0 ? 1 : -1;
    flag += LaurentPoly::term(sign * BigInt(cc.count), cc.d_f);
    if (cc.n_f == 1 && cc.d_f == 1) indiscrete = cc.count;
  }
  if (indiscrete != 1)
    throw ConstraintViolation("expected exactly one length-1 indiscrete chain");
  LaurentPoly u_class = LaurentPoly::lefschetz(n) + flag;
  // The only chain with full normalizer is the length-1 chain at the
  // indiscrete partition, contributing (-1)^1 L^1 to the alternating sum.
  LaurentPoly partial = flag + LaurentPoly::lefschetz(1);
  LaurentPoly num = u_class - partial;
  LaurentPoly den = LaurentPoly::lefschetz(n) - LaurentPoly::lefschetz(1);
  return MotivicClass(num, den);
}

}  // namespace mh
