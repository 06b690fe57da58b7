#pragma once

#include <optional>

#include "mh/bundles.hpp"
#include "mh/ramification.hpp"
#include "mh/zeta_euler.hpp"

namespace mh {

struct HurwitzQuery {
  int d = 3;
  int g = 0;
  AllowableCollection collection;

  void validate() const;
};

struct HurwitzAnswer {
  int hur_dim = 0;                        // 2g + 2d - 2
  std::optional<Rational> codim_bound;    // none for d = 2 (the class is exact)
  MotivicClass closed_form;
  DimSeries normalized_series;            // series of closed_form / L^hur_dim
  bool exact = false;                     // true iff d = 2
};

// min((g + c_d)/kappa_d, (g + d - 1)/d - 4^(d-3)) with
// (c_3,c_4,c_5) = (0,-2,-23) and (kappa_3,kappa_4,kappa_5) = (4,12,40).
Rational codim_bound(int d, int g);

// The local Euler factor of the closed form: 1 + (local_mass*(1-L^-1) - 1) t.
LocalFactor hurwitz_local_factor(const AllowableCollection& collection);

// The stratum-independent local factor of the strata sum:
// 1 + (local_mass * aut_ce_class_over_D(d) / L^h0_D(d) - 1) t.
LocalFactor strata_local_factor(int d, const AllowableCollection& collection);

// Closed form L^(2g+2d-2)/(1-L^-1) * euler_product_p1(hurwitz_local_factor, N)
// for d in {3,4,5}; the exact class L^(2g+2) - L^(2g) for d = 2.
// N < 0 selects max(ceil(codim_bound)+2, 2).
HurwitzAnswer hurwitz_class(const HurwitzQuery& q, int N = -1);

// (1 - L^-1) * local_mass(full) equals the degree-d Euler factor
// (1 - L^-2; 1 - L^-3; 1 + L^-2 - L^-3 - L^-4; 1 + L^-2 - L^-4 - L^-5),
// and for d = 2, 3 the fully multiplied closed forms match.
bool theorem_b_check(int d);

// Sum over splitting types V of rank n, degree delta, h1(End V) <= N of
// 1/{Aut^sl_V}, as a series anchored at 1 - n^2 through codimension N.
DimSeries tamagawa_sum(int n, int delta, int N);

// L^(-dim sl_n) * prod_{i=2}^n Z(P^1, L^-i), the value the sum converges to.
MotivicClass tamagawa_closed_form(int n);

// Truncated Casnati-Ekedahl strata sum: sum over strata of
// 1/{aut_ce} * L^chi_H * EP through codimension N, anchored at 2g+2d-2.
DimSeries strata_sum(const HurwitzQuery& q, int N);

// chi_H(d,g) - dim sl_(d-1) - dim sl_(rk F) == (2g + 2d - 2) + 1 in g.
bool dimension_identity_check(int d);

// Compare two series through the given codimension (inclusive).
bool series_agree(const DimSeries& a, const DimSeries& b, int through_codim);

}  // namespace mh
