#include "mh/zeta_euler.hpp"

#include <map>

namespace mh {

LocalFactor LocalFactor::linear(const LaurentPoly& c) {
  return LocalFactor(1, {c}, true);
}

const LaurentPoly& LocalFactor::coeff(int i) const {
  static const LaurentPoly zero;
  if (i < 1) throw OutOfRange("LocalFactor::coeff index");
  return i <= t_order ? coeffs[i - 1] : zero;
}

int LocalFactor::coefficient_degree() const {
  int d = LaurentPoly::kNegInfinity;
  for (auto& c : coeffs)
    if (!c.is_zero()) d = std::max(d, c.degree());
  return d;
}

LocalFactor LocalFactor::truncated_product(const LocalFactor& f, const LocalFactor& g, int T) {
  LocalFactor r;
  r.t_order = T;
  r.coeffs.assign(T, LaurentPoly());
  for (int n = 1; n <= T; ++n) {
    LaurentPoly c = f.coeff(n) + g.coeff(n);
    for (int i = 1; i < n; ++i) c += f.coeff(i) * g.coeff(n - i);
    r.coeffs[n - 1] = c;
  }
  r.exact = f.exact && g.exact && f.t_order + g.t_order <= T;
  return r;
}

MotivicClass zeta_value(int a) {
  if (a <= 1) throw Divergent("Z(P^1, L^-a) diverges for a <= 1");
  LaurentPoly one(1);
  LaurentPoly d = (one - LaurentPoly::lefschetz(1 - a)) * (one - LaurentPoly::lefschetz(-a));
  return MotivicClass(one, d);
}

LocalFactor kapranov_zeta_p1(int T) {
  if (T < 1) throw OutOfRange("kapranov_zeta_p1 needs T >= 1");
  LocalFactor f;
  f.t_order = T;
  f.exact = false;  // truncation of an infinite series
  for (int n = 1; n <= T; ++n) {
    LaurentPoly c;
    for (int j = 0; j <= n; ++j) c.set_coeff(j, 1);
    f.coeffs.push_back(c);
  }
  return f;
}

LaurentPoly symmetric_power_class(const LaurentPoly& c, int n) {
  for (auto& [e, coef] : c.terms())
    if (coef < 0)
      throw NegativeCoefficient("symmetric_power_class needs an effective class");
  if (n < 0) throw OutOfRange("symmetric_power_class needs n >= 0");
  // Coefficient of t^n in prod_a (1 - L^a t)^(-m_a): multiply in one
  // geometric factor 1/(1 - L^a t) per line-bundle summand.
  std::vector<LaurentPoly> series(n + 1);
  series[0] = LaurentPoly(1);
  for (auto& [a, m] : c.terms()) {
    for (BigInt k = 0; k < m; ++k) {
      // series *= 1/(1 - L^a t): prefix sums with weight L^(a*j).
      for (int j = 1; j <= n; ++j) series[j] += series[j - 1].shifted(a);
    }
  }
  return series[n];
}

std::vector<WittFactor> witt_factorization(const LocalFactor& f, int to_order) {
  int T = to_order < 0 ? f.t_order : to_order;
  if (!f.exact && T > f.t_order)
    throw InsufficientOrder("factor only known to t-order " + std::to_string(f.t_order));
  if (f.coefficient_degree() > -2)
    throw MarginViolated("local factor coefficient with L-degree > -2");

  // residual = f * prod(emitted)^-1, tracked mod t^(T+1).
  std::vector<LaurentPoly> residual(T + 1);
  residual[0] = LaurentPoly(1);
  for (int i = 1; i <= T; ++i) residual[i] = f.coeff(i);

  std::vector<WittFactor> out;
  for (int b = 1; b <= T; ++b) {
    const LaurentPoly cb = residual[b];
    if (cb.is_zero()) continue;
    for (auto& [e, coef] : cb.terms()) {
      // coef * L^e with e <= -2b: emit (1 - L^e t^b)^(-coef).
      out.push_back(WittFactor{-e, b, -coef});
    }
    // Divide the residual by (1 - L^-a t^b)^e for each emitted factor, i.e.
    // multiply by its inverse series.  Equivalently, multiply the residual by
    // prod (1 - L^-a t^b)^(-e) which kills the order-b coefficient.
    for (auto it = out.end() - (long)cb.term_count(); it != out.end(); ++it) {
      const WittFactor& w = *it;
      // Multiply residual by (1 - u)^k with u = L^-a t^b and k = -w.e,
      // using the binomial series: coefficient of u^j is binom(k,j)(-1)^j,
      // with the integer recurrence c_j = c_{j-1} * (j-1-k) / j.
      std::vector<LaurentPoly> factor(T / w.b + 1);
      BigInt c = 1;
      BigInt k = -w.e;
      for (int j = 0; j * w.b <= T; ++j) {
        if (j > 0) c = c * (BigInt(j - 1) - k) / j;
        factor[j] = LaurentPoly::term(c, -w.a * j);
      }
      std::vector<LaurentPoly> next(T + 1);
      for (int i = 0; i <= T; ++i) {
        if (residual[i].is_zero()) continue;
        for (int j = 0; j * w.b <= T - i; ++j)
          next[i + j * w.b] += residual[i] * factor[j];
      }
      residual = std::move(next);
    }
  }
  return out;
}

EulerProductValue euler_product_p1(const LocalFactor& f, int N) {
  if (N < 0) throw OutOfRange("euler_product_p1 needs N >= 0");
  int needed = (N + 3) / 2;  // ceil((N+2)/2): order-b tail factors sit in codim >= 2b-1 > N
  if (!f.exact && f.t_order < needed)
    throw InsufficientOrder("need local factor to t-order " + std::to_string(needed));
  int T = f.exact ? std::max(f.t_order, needed) : needed;
  auto factors = witt_factorization(f, T);
  MotivicClass r(1);
  for (auto& w : factors) {
    if (w.a <= 1) throw Divergent("Witt factor with a <= 1");
    if (w.e > 1000000 || w.e < -1000000) throw TooLarge("Witt exponent too large");
    r *= zeta_value(w.a).pow(-(int)w.e.convert_to<long>());
  }
  return EulerProductValue{r, N};
}

bool euler_product_multiply_check(const LocalFactor& f, const LocalFactor& g, int N) {
  EulerProductValue pf = euler_product_p1(f, N);
  EulerProductValue pg = euler_product_p1(g, N);
  int needed = (N + 3) / 2;
  // The product is known to order min over inputs, where an exact input is
  // known to every order.
  int known_f = f.exact ? std::max(f.t_order + g.t_order, needed) : f.t_order;
  int known_g = g.exact ? std::max(f.t_order + g.t_order, needed) : g.t_order;
  int T = std::min(known_f, known_g);
  LocalFactor fg = LocalFactor::truncated_product(f, g, T);
  EulerProductValue pfg = euler_product_p1(fg, N);
  return eq_mod_codim(pf.value * pg.value, pfg.value, 0, N);
}

}  // namespace mh
