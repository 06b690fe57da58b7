#include "mh/ramification.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace mh {

RamProfile::RamProfile(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw ConstraintViolation("profile parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int RamProfile::degree() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string RamProfile::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

RamProfile RamProfile::parse(const std::string& s) {
  std::vector<int> parts;
  std::string cur;
  for (char ch : s) {
    if (std::isdigit((unsigned char)ch)) {
      cur += ch;
    } else if (ch == '(' || ch == ')' || ch == ',' || ch == ' ') {
      if (!cur.empty()) { parts.push_back(std::stoi(cur)); cur.clear(); }
    } else {
      throw ParseError("bad character in profile '" + s + "'");
    }
  }
  if (!cur.empty()) parts.push_back(std::stoi(cur));
  if (parts.empty()) throw ParseError("empty profile '" + s + "'");
  return RamProfile(parts);
}

std::vector<RamProfile> partitions_of(int d) {
  if (d < 1) throw OutOfRange("partitions_of needs d >= 1");
  std::vector<RamProfile> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

int ram_order(const RamProfile& r) { return r.ram_order(); }

namespace {

// Exact search: can parts[i..] be grouped to realize the remaining coarse
// sums?  d <= 12 keeps this trivial.
bool group_search(const std::vector<int>& fine, std::vector<int>& remaining, size_t i) {
  if (i == fine.size())
    return std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; });
  int seen_before = -1;
  for (size_t j = 0; j < remaining.size(); ++j) {
    if (remaining[j] < fine[i]) continue;
    if (remaining[j] == seen_before) continue;  // symmetric slot, skip duplicates
    seen_before = remaining[j];
    remaining[j] -= fine[i];
    if (group_search(fine, remaining, i + 1)) {
      remaining[j] += fine[i];
      return true;
    }
    remaining[j] += fine[i];
  }
  return false;
}

}  // namespace

bool refines(const RamProfile& fine, const RamProfile& coarse) {
  if (fine.degree() != coarse.degree())
    throw DegreeMismatch("refines: profiles of different degree");
  if (fine.parts().size() < coarse.parts().size()) return false;
  std::vector<int> remaining = coarse.parts();
  return group_search(fine.parts(), remaining, 0);
}

AllowableCollection allowable_closure(int d, const std::set<RamProfile>& seed) {
  if (d < 1) throw OutOfRange("allowable_closure needs d >= 1");
  AllowableCollection c;
  c.d = d;
  std::vector<int> ones(d, 1);
  c.profiles.insert(RamProfile(ones));
  if (d >= 2) {
    std::vector<int> simple(d - 1, 1);
    simple[0] = 2;
    c.profiles.insert(RamProfile(simple));
  }
  for (auto& r : seed) {
    if (r.degree() != d) throw DegreeMismatch("seed profile of wrong degree");
    c.profiles.insert(r);
  }
  // Close under refinement.
  auto all = partitions_of(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& lam : all) {
      if (c.contains(lam)) continue;
      for (auto& mu : c.profiles) {
        if (refines(lam, mu)) {
          c.profiles.insert(lam);
          grew = true;
          break;
        }
      }
    }
  }
  return c;
}

AllowableCollection full_collection(int d) {
  AllowableCollection c;
  c.d = d;
  for (auto& r : partitions_of(d)) c.profiles.insert(r);
  return c;
}

AllowableCollection simply_branched_collection(int d) {
  return allowable_closure(d, {});
}

LaurentPoly local_mass(const AllowableCollection& c) {
  LaurentPoly m;
  for (auto& r : c.profiles) m += LaurentPoly::lefschetz(-r.ram_order());
  return m;
}

BigInt partition_count_exact(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0) return 0;
  // q(n,k) = q(n-1,k-1) + q(n-k,k)
  std::vector<std::vector<BigInt>> q(n + 1, std::vector<BigInt>(k + 1, 0));
  q[0][0] = 1;
  for (int nn = 1; nn <= n; ++nn)
    for (int kk = 1; kk <= std::min(nn, k); ++kk) {
      q[nn][kk] = q[nn - 1][kk - 1];
      if (nn - kk >= 0) q[nn][kk] += q[nn - kk][kk];
    }
  return q[n][k];
}

bool mass_identity_check(int d) {
  if (d < 1) throw OutOfRange("mass_identity_check needs d >= 1");
  LaurentPoly lhs = local_mass(full_collection(d));
  LaurentPoly rhs;
  for (int j = 0; j <= d - 1; ++j)
    rhs += LaurentPoly::term(partition_count_exact(d, d - j), -j);
  return lhs == rhs;
}

}  // namespace mh
