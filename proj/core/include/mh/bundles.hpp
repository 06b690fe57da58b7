#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mh/motivic.hpp"

namespace mh {

// Splitting type of a vector bundle on P^1: the multiset of degrees of its
// line-bundle summands, stored sorted non-decreasing.
class SplittingType {
public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degs_; }
  int rank() const { return (int)degs_.size(); }
  int degree() const;
  int min_degree() const { return degs_.front(); }
  int max_degree() const { return degs_.back(); }
  bool balanced() const { return degs_.back() - degs_.front() <= 1; }

  bool operator==(const SplittingType& o) const { return degs_ == o.degs_; }
  bool operator<(const SplittingType& o) const { return degs_ < o.degs_; }

  std::string str() const;  // "[1,2]"

private:
  std::vector<int> degs_;
};

int h0(const SplittingType& st);
int h1(const SplittingType& st);

SplittingType dual(const SplittingType& st);
SplittingType det(const SplittingType& st);
SplittingType tensor(const SplittingType& a, const SplittingType& b);
SplittingType sym_power(const SplittingType& st, int k);
SplittingType wedge_power(const SplittingType& st, int k);
SplittingType end_bundle(const SplittingType& st);  // st^dual tensor st

// Resolution data of a degree-d cover, d in {3,4,5}: the Tschirnhausen
// bundle E of rank d-1 and, for d = 4, 5, the syzygy bundle F with
//   d=4: rank F = 2, deg F = deg E;   d=5: rank F = 5, deg F = 2 deg E.
struct ResolutionData {
  int d = 3;
  SplittingType E;
  std::optional<SplittingType> F;

  int genus() const { return E.degree() - d + 1; }
  void validate() const;  // throws ConstraintViolation
};

struct StratumReport {
  ResolutionData data;
  int codim = 0;      // h1(End E) [+ h1(End F) - h1(H) for d = 4, 5]
  int h1_end_E = 0;
  int h1_end_F = 0;
  int h1_H = 0;
  int h0_H = 0;
  int chi_H = 0;
};

// The sheaf whose sections cut out the cover inside P(E):
//   d=3: Sym^3 E (x) det E^dual        (rank 4)
//   d=4: F^dual (x) Sym^2 E            (rank 12)
//   d=5: wedge^2 F (x) E (x) det E^dual (rank 40)
SplittingType sheaf_H(const ResolutionData& rd);

// chi of sheaf_H as a closed form in the genus: 2g+8, 2g+18, 2g+48.
int chi_H(int d, int g);

// rank of the i-th syzygy bundle, i(d-2-i)/(d-1) * binom(d, i+1).
int beta_rank(int d, int i);

StratumReport stratum_codim(const ResolutionData& rd);

// Class of the Weil restriction of Aut of the split bundle: grouping equal
// degrees a_1 < ... < a_m with multiplicities n_i,
//   prod_i {GL_{n_i}} * L^(sum_{i<j} (a_j - a_i + 1) n_i n_j).
MotivicClass aut_res_gl_class(const SplittingType& st);

MotivicClass gl_class(int n);  // {GL_n} = prod_{k=0}^{n-1} (L^n - L^k)
MotivicClass sl_class(int n);  // {GL_n} / (L - 1)

// aut_res_gl_class / (L - 1): automorphisms of determinant one.
MotivicClass aut_sl_class(const SplittingType& st);

// Automorphism class of the resolution data over P^1:
//   d=3: aut_res_gl_class(E);  d=4,5: aut(E) aut(F) / (L-1).
MotivicClass aut_ce_class(const ResolutionData& rd);

// Over the dual numbers every bundle is free:
//   d=3: {GL_2} L^4;  d=4,5: (L-1) L * prod {SL_n} L^(n^2-1).
MotivicClass aut_ce_class_over_D(int d);
int h0_D(int d);  // 2 rank(H): 8, 24, 80

// All resolution data of the given genus with
// h1(End E) + h1(End F) <= max_codim (the codimension of the bundle tuple in
// the stack of bundles; this window is finite, and every stratum outside it
// contributes only beyond codimension max_codim).  The report's codim field
// carries the stratum codimension, which subtracts h1(H).
std::vector<StratumReport> enumerate_strata(int d, int g, int max_codim);

// Splitting types of fixed rank and degree with h1(End) <= max_h1.
std::vector<SplittingType> splitting_types_window(int rank, int degree, int max_h1);

// true iff b lies in the closure of a in the stack of bundles (same rank and
// degree): decided by the dominance criterion on descending partial sums.
bool specializes(const SplittingType& a, const SplittingType& b);

}  // namespace mh
