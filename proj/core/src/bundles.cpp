#include "mh/bundles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace mh {

SplittingType::SplittingType(std::vector<int> degrees) : degs_(std::move(degrees)) {
  if (degs_.empty()) throw ConstraintViolation("splitting type needs rank >= 1");
  std::sort(degs_.begin(), degs_.end());
}

int SplittingType::degree() const {
  return std::accumulate(degs_.begin(), degs_.end(), 0);
}

std::string SplittingType::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < degs_.size(); ++i) {
    if (i) os << ",";
    os << degs_[i];
  }
  os << "]";
  return os.str();
}

int h0(const SplittingType& st) {
  int s = 0;
  for (int a : st.degrees()) s += std::max(a + 1, 0);
  return s;
}

int h1(const SplittingType& st) {
  int s = 0;
  for (int a : st.degrees()) s += std::max(-a - 1, 0);
  return s;
}

SplittingType dual(const SplittingType& st) {
  std::vector<int> d;
  for (int a : st.degrees()) d.push_back(-a);
  return SplittingType(d);
}

SplittingType det(const SplittingType& st) {
  return SplittingType({st.degree()});
}

SplittingType tensor(const SplittingType& a, const SplittingType& b) {
  std::vector<int> d;
  for (int x : a.degrees())
    for (int y : b.degrees()) d.push_back(x + y);
  return SplittingType(d);
}

SplittingType sym_power(const SplittingType& st, int k) {
  if (k < 0) throw OutOfRange("sym_power needs k >= 0");
  // all size-k multisets of summands
  std::vector<int> out;
  std::function<void(size_t, int, int)> rec = [&](size_t i, int left, int acc) {
    if (left == 0) { out.push_back(acc); return; }
    if (i >= st.degrees().size()) return;
    // choose j copies of summand i
    for (int j = left; j >= 0; --j) rec(i + 1, left - j, acc + j * st.degrees()[i]);
  };
  rec(0, k, 0);
  if (out.empty()) out.push_back(0);  // Sym^0 = O
  return SplittingType(out);
}

SplittingType wedge_power(const SplittingType& st, int k) {
  if (k < 0 || k > st.rank())
    throw WedgeRankExceeded("wedge_power needs 0 <= k <= rank");
  std::vector<int> out;
  std::function<void(size_t, int, int)> rec = [&](size_t i, int left, int acc) {
    if (left == 0) { out.push_back(acc); return; }
    if (st.degrees().size() - i < (size_t)left) return;
    rec(i + 1, left - 1, acc + st.degrees()[i]);  // take i
    rec(i + 1, left, acc);                        // skip i
  };
  rec(0, k, 0);
  return SplittingType(out);
}

SplittingType end_bundle(const SplittingType& st) { return tensor(dual(st), st); }

void ResolutionData::validate() const {
  if (d < 3 || d > 5) throw ConstraintViolation("resolution data needs d in {3,4,5}");
  if (E.rank() != d - 1)
    throw ConstraintViolation("rank E must be d-1");
  if (d == 3) {
    if (F.has_value()) throw ConstraintViolation("d=3 has no syzygy bundle");
    return;
  }
  if (!F.has_value()) throw ConstraintViolation("d=4,5 need a syzygy bundle");
  if (d == 4) {
    if (F->rank() != 2) throw ConstraintViolation("d=4 needs rank F = 2");
    if (F->degree() != E.degree())
      throw ConstraintViolation("d=4 needs deg F = deg E");
  } else {
    if (F->rank() != 5) throw ConstraintViolation("d=5 needs rank F = 5");
    if (F->degree() != 2 * E.degree())
      throw ConstraintViolation("d=5 needs deg F = 2 deg E");
  }
}

SplittingType sheaf_H(const ResolutionData& rd) {
  rd.validate();
  switch (rd.d) {
    case 3:
      return tensor(sym_power(rd.E, 3), dual(det(rd.E)));
    case 4:
      return tensor(dual(*rd.F), sym_power(rd.E, 2));
    default:
      return tensor(tensor(wedge_power(*rd.F, 2), rd.E), dual(det(rd.E)));
  }
}

int chi_H(int d, int g) {
  switch (d) {
    case 3: return 2 * g + 8;
    case 4: return 2 * g + 18;
    case 5: return 2 * g + 48;
    default: throw ConstraintViolation("chi_H needs d in {3,4,5}");
  }
}

int beta_rank(int d, int i) {
  if (d < 4 || i < 1 || i > d - 3) throw OutOfRange("beta_rank needs 1 <= i <= d-3");
  long num = (long)i * (d - 2 - i);
  long binom = 1;
  for (int j = 0; j < i + 1; ++j) binom = binom * (d - j) / (j + 1);
  return (int)(num * binom / (d - 1));
}

StratumReport stratum_codim(const ResolutionData& rd) {
  rd.validate();
  StratumReport rep;
  rep.data = rd;
  rep.h1_end_E = h1(end_bundle(rd.E));
  rep.h1_end_F = rd.F ? h1(end_bundle(*rd.F)) : 0;
  SplittingType H = sheaf_H(rd);
  rep.h1_H = h1(H);
  rep.h0_H = h0(H);
  rep.chi_H = rep.h0_H - rep.h1_H;
  rep.codim = rd.d == 3 ? rep.h1_end_E : rep.h1_end_E + rep.h1_end_F - rep.h1_H;
  return rep;
}

MotivicClass gl_class(int n) {
  MotivicClass r(1);
  LaurentPoly Ln = LaurentPoly::lefschetz(n);
  for (int k = 0; k < n; ++k) r *= MotivicClass(Ln - LaurentPoly::lefschetz(k));
  return r;
}

MotivicClass sl_class(int n) {
  LaurentPoly Lm1 = LaurentPoly::lefschetz() - LaurentPoly(1);
  return gl_class(n) * MotivicClass(LaurentPoly(1), Lm1);
}

MotivicClass aut_res_gl_class(const SplittingType& st) {
  // Group equal degrees.
  std::map<int, int> mult;
  for (int a : st.degrees()) mult[a]++;
  MotivicClass r(1);
  int hom_dim = 0;
  for (auto it = mult.begin(); it != mult.end(); ++it) {
    r *= gl_class(it->second);
    for (auto jt = std::next(it); jt != mult.end(); ++jt)
      hom_dim += (jt->first - it->first + 1) * it->second * jt->second;
  }
  return r * MotivicClass::lefschetz(hom_dim);
}

MotivicClass aut_sl_class(const SplittingType& st) {
  LaurentPoly Lm1 = LaurentPoly::lefschetz() - LaurentPoly(1);
  return aut_res_gl_class(st) * MotivicClass(LaurentPoly(1), Lm1);
}

MotivicClass aut_ce_class(const ResolutionData& rd) {
  rd.validate();
  if (rd.d == 3) return aut_res_gl_class(rd.E);
  LaurentPoly Lm1 = LaurentPoly::lefschetz() - LaurentPoly(1);
  return aut_res_gl_class(rd.E) * aut_res_gl_class(*rd.F) *
         MotivicClass(LaurentPoly(1), Lm1);
}

int h0_D(int d) {
  switch (d) {
    case 3: return 8;
    case 4: return 24;
    case 5: return 80;
    default: throw ConstraintViolation("h0_D needs d in {3,4,5}");
  }
}

MotivicClass aut_ce_class_over_D(int d) {
  // Restriction to the dual numbers D: bundles trivialize, and the Weil
  // restriction of a group G along D -> k is an extension of G by its Lie
  // algebra, so {Res_D GL_n} = {GL_n} L^(n^2) and {Res_D SL_n} = {SL_n} L^(n^2-1).
  if (d == 3) return gl_class(2) * MotivicClass::lefschetz(4);
  int rE = d - 1, rF = d == 4 ? 2 : 5;
  MotivicClass r = MotivicClass(LaurentPoly::lefschetz() - LaurentPoly(1)) *
                   MotivicClass::lefschetz(1);
  r *= sl_class(rE) * MotivicClass::lefschetz(rE * rE - 1);
  r *= sl_class(rF) * MotivicClass::lefschetz(rF * rF - 1);
  return r;
}

std::vector<SplittingType> splitting_types_window(int rank, int degree, int max_h1) {
  if (rank < 1) throw OutOfRange("rank >= 1");
  if (max_h1 < 0) return {};
  // h1(End V) = sum_{i<j} max(a_j - a_i - 1, 0) for sorted degrees, so the
  // spread a_max - a_min is at most max_h1 + 1; enumerate within that window
  // around the balanced type.
  std::vector<SplittingType> out;
  int base = degree >= 0 ? degree / rank : -((-degree + rank - 1) / rank);  // floor
  int lo = base - max_h1 - 1, hi = base + max_h1 + 2;
  std::vector<int> cur(rank);
  std::function<void(int, int, int)> rec = [&](int i, int minval, int rest) {
    if (i == rank - 1) {
      if (rest < minval || rest > hi) return;
      cur[i] = rest;
      SplittingType st(cur);
      if (h1(end_bundle(st)) <= max_h1) out.push_back(st);
      return;
    }
    for (int a = minval; a <= hi; ++a) {
      // remaining entries are >= a, so rest - a must allow it
      if (rest - a < a * (rank - 1 - i)) break;
      cur[i] = a;
      rec(i + 1, a, rest - a);
    }
  };
  rec(0, lo, degree);
  return out;
}

std::vector<StratumReport> enumerate_strata(int d, int g, int max_codim) {
  if (d < 3 || d > 5) throw ConstraintViolation("enumerate_strata needs d in {3,4,5}");
  if (g < 0) throw OutOfRange("genus must be >= 0");
  if (max_codim < 0) return {};
  std::vector<StratumReport> out;
  int degE = g + d - 1;
  auto Es = splitting_types_window(d - 1, degE, max_codim);
  if (d == 3) {
    for (auto& E : Es) {
      ResolutionData rd{3, E, std::nullopt};
      StratumReport rep = stratum_codim(rd);
      if (rep.h1_end_E <= max_codim) out.push_back(rep);
    }
    return out;
  }
  int rF = d == 4 ? 2 : 5;
  int degF = d == 4 ? degE : 2 * degE;
  auto Fs = splitting_types_window(rF, degF, max_codim);
  for (auto& E : Es) {
    int cE = h1(end_bundle(E));
    for (auto& F : Fs) {
      int cF = h1(end_bundle(F));
      if (cE + cF > max_codim) continue;
      ResolutionData rd{d, E, F};
      out.push_back(stratum_codim(rd));
    }
  }
  return out;
}

bool specializes(const SplittingType& a, const SplittingType& b) {
  if (a.rank() != b.rank() || a.degree() != b.degree())
    throw Mismatch("specializes needs equal rank and degree");
  // b is a degeneration of a iff the descending partial sums of b dominate
  // those of a.
  std::vector<int> da = a.degrees(), db = b.degrees();
  std::sort(da.rbegin(), da.rend());
  std::sort(db.rbegin(), db.rend());
  int sa = 0, sb = 0;
  for (size_t i = 0; i < da.size(); ++i) {
    sa += da[i];
    sb += db[i];
    if (sb < sa) return false;
  }
  return true;
}

}  // namespace mh
