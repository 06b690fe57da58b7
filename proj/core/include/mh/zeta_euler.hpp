#pragma once

#include <vector>

#include "mh/motivic.hpp"

namespace mh {

// Local term 1 + sum_{i=1..T} coeffs[i-1] t^i of a motivic Euler product
// over P^1.  When exact is true the factor is a genuine polynomial in t
// (all coefficients beyond t_order are zero); otherwise it is the truncation
// of a power series whose tail is unknown.
struct LocalFactor {
  int t_order = 0;
  std::vector<LaurentPoly> coeffs;  // t^1 .. t^t_order
  bool exact = true;

  LocalFactor() = default;
  LocalFactor(int T, std::vector<LaurentPoly> c, bool ex = true)
      : t_order(T), coeffs(std::move(c)), exact(ex) {}

  // 1 + c*t as an exact polynomial factor.
  static LocalFactor linear(const LaurentPoly& c);

  const LaurentPoly& coeff(int i) const;  // i in 1..t_order
  // max L-degree over all coefficients; kNegInfinity when all vanish.
  int coefficient_degree() const;
  // Product truncated to t-order T.
  static LocalFactor truncated_product(const LocalFactor& f, const LocalFactor& g, int T);
};

// (1 - L^-a t^b)^e.
struct WittFactor {
  int a = 0;
  int b = 0;
  BigInt e;
};

// Kapranov zeta value of P^1 at t = L^-a:
// Z(P^1, L^-a) = 1 / ((1 - L^(1-a)) (1 - L^-a)); requires a >= 2.
MotivicClass zeta_value(int a);

// Kapranov zeta function of P^1 as a t-series to order T: the coefficient of
// t^n is {Sym^n P^1} = 1 + L + ... + L^n.
LocalFactor kapranov_zeta_p1(int T);

// Coefficient of t^n in prod_a (1 - L^a t)^(-m_a) for c = sum m_a L^a with
// all m_a >= 0: the class of the n-th symmetric power of a variety with
// class c.
LaurentPoly symmetric_power_class(const LaurentPoly& c, int n);

// Factor f as prod (1 - L^-a t^b)^e mod t^(to_order+1), order by order.
// Every coefficient of f must have L-degree <= -2; all emitted factors then
// satisfy a >= 2b.  to_order defaults to f.t_order; factoring an exact f
// beyond its polynomial degree is allowed (the higher coefficients are 0).
std::vector<WittFactor> witt_factorization(const LocalFactor& f, int to_order = -1);

struct EulerProductValue {
  MotivicClass value;
  int codim = 0;  // the product is exact modulo codimension > codim
};

// Evaluate the motivic Euler product prod_{x in P^1} f_x at t = 1 through
// codimension N, via the Witt factorization: each (1 - L^-a t^b)^e factor
// contributes zeta_value(a)^(-e).
EulerProductValue euler_product_p1(const LocalFactor& f, int N);

// Multiplicativity check: euler_product(f)*euler_product(g) agrees with
// euler_product(f*g truncated) modulo codimension N.
bool euler_product_multiply_check(const LocalFactor& f, const LocalFactor& g, int N);

}  // namespace mh
