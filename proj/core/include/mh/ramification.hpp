#pragma once

#include <set>
#include <string>
#include <vector>

#include "mh/laurent.hpp"

namespace mh {

// Partition of d, stored sorted descending; the profile of the fiber of a
// cover over a point of P^1.
class RamProfile {
public:
  RamProfile() = default;
  explicit RamProfile(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const;
  // d - (number of parts).
  int ram_order() const { return degree() - (int)parts_.size(); }

  bool operator<(const RamProfile& o) const { return parts_ < o.parts_; }
  bool operator==(const RamProfile& o) const { return parts_ == o.parts_; }

  std::string str() const;            // "(2,1,1)"
  static RamProfile parse(const std::string& s);

private:
  std::vector<int> parts_;
};

// Refinement-closed set of profiles of a fixed degree, containing (1^d) and
// (2,1^(d-2)).
struct AllowableCollection {
  int d = 0;
  std::set<RamProfile> profiles;

  bool contains(const RamProfile& r) const { return profiles.count(r) > 0; }
};

std::vector<RamProfile> partitions_of(int d);
int ram_order(const RamProfile& r);

// true iff the parts of fine can be grouped so the group sums give coarse.
bool refines(const RamProfile& fine, const RamProfile& coarse);

// Smallest refinement-closed collection containing seed, (1^d), (2,1^(d-2)).
AllowableCollection allowable_closure(int d, const std::set<RamProfile>& seed);

AllowableCollection full_collection(int d);
AllowableCollection simply_branched_collection(int d);

// sum over R in C of L^(-r(R)).
LaurentPoly local_mass(const AllowableCollection& c);

// Number of partitions of n into exactly k parts.
BigInt partition_count_exact(int n, int k);

// sum_{R |- d} L^(-r(R))  ==  sum_j q(d, d-j) L^(-j), the two sides computed
// independently (enumeration vs. the q(n,k) recurrence).
bool mass_identity_check(int d);

}  // namespace mh
