#include "mh/fq_poly.hpp"

#include <algorithm>

namespace mh {

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FqPoly::set_coeff(int i, FqField::Elem v) {
  if (i >= (int)c_.size()) {
    if (v == 0) return;
    c_.resize(i + 1, 0);
  }
  c_[i] = v;
  trim();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  FqPoly r(*F_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = F_->add(coeff((int)i), o.coeff((int)i));
  r.trim();
  return r;
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  FqPoly r(*F_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = F_->sub(coeff((int)i), o.coeff((int)i));
  r.trim();
  return r;
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  FqPoly r(*F_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

FqPoly FqPoly::scaled(FqField::Elem s) const {
  FqPoly r(*F_);
  if (s == 0) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c = F_->mul(c, s);
  return r;
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(F_->inv(leading()));
}

FqPoly FqPoly::derivative() const {
  FqPoly r(*F_);
  for (size_t i = 1; i < c_.size(); ++i) {
    FqField::Elem m = F_->from_int(i % F_->p());
    r.set_coeff((int)i - 1, F_->mul(c_[i], m));
  }
  return r;
}

FqField::Elem FqPoly::eval(FqField::Elem x) const {
  FqField::Elem acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& d) const {
  if (d.is_zero()) throw Error("Internal", "FqPoly division by zero");
  FqPoly q(*F_), r = *this;
  FqField::Elem lead_inv = F_->inv(d.leading());
  int dd = d.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    int k = r.degree() - dd;
    FqField::Elem c = F_->mul(r.leading(), lead_inv);
    q.set_coeff(k, c);
    for (int i = 0; i <= dd; ++i)
      r.c_[k + i] = F_->sub(r.c_[k + i], F_->mul(c, d.c_[i]));
    r.trim();
  }
  return {q, r};
}

FqPoly FqPoly::x_power(const FqField& F, int n) {
  FqPoly r(F);
  r.set_coeff(n, 1);
  return r;
}

FqPoly fq_gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

namespace {

FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& mod) {
  const FqField& F = base.field();
  FqPoly r(F);
  r.set_coeff(0, 1);
  FqPoly b = base.divrem(mod).second;
  while (e) {
    if (e & 1) r = (r * b).divrem(mod).second;
    b = (b * b).divrem(mod).second;
    e >>= 1;
  }
  return r;
}

// base^((Q^e - 1)/2) mod f, with Q the field size; the exponent may exceed
// 64 bits, so work with its base-2^32 limbs.
FqPoly powmod_half_order(const FqPoly& base, int e, const FqPoly& mod) {
  const FqField& F = base.field();
  // exponent = (Q^e - 1)/2 as big integer via simple schoolbook on u32 limbs
  std::vector<std::uint64_t> limbs{1};  // little endian base 2^32
  auto mul_small = [&](std::uint64_t s) {
    std::uint64_t carry = 0;
    for (auto& l : limbs) {
      std::uint64_t v = l * s + carry;
      l = v & 0xffffffffull;
      carry = v >> 32;
    }
    while (carry) {
      limbs.push_back(carry & 0xffffffffull);
      carry >>= 32;
    }
  };
  for (int i = 0; i < e; ++i) mul_small(F.size());
  // subtract 1
  for (auto& l : limbs) {
    if (l > 0) { l -= 1; break; }
    l = 0xffffffffull;
  }
  // divide by 2
  std::uint64_t rem = 0;
  for (size_t i = limbs.size(); i-- > 0;) {
    std::uint64_t v = (rem << 32) | limbs[i];
    limbs[i] = v >> 1;
    rem = v & 1;
  }
  // square-and-multiply over the limb bits, most significant first
  FqPoly r(F);
  r.set_coeff(0, 1);
  FqPoly b = base.divrem(mod).second;
  bool started = false;
  for (size_t i = limbs.size(); i-- > 0;) {
    for (int bit = 31; bit >= 0; --bit) {
      if (started) r = (r * r).divrem(mod).second;
      if ((limbs[i] >> bit) & 1) {
        if (!started) {
          r = b;
          started = true;
        } else {
          r = (r * b).divrem(mod).second;
        }
      }
    }
  }
  return r;
}

// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product of
// irreducibles of degree e.
void equal_degree_split(const FqPoly& f, int e, std::uint64_t& seed,
                        std::vector<FqPoly>& out) {
  const FqField& F = f.field();
  if (f.degree() == e) {
    out.push_back(f);
    return;
  }
  while (true) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    FqPoly r(F);
    std::uint64_t s = seed;
    for (int i = 0; i < f.degree(); ++i) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      r.set_coeff(i, (FqField::Elem)((s >> 16) % F.size()));
    }
    if (r.is_zero()) continue;
    FqPoly h = powmod_half_order(r, e, f);
    if (h.is_zero()) continue;
    h.set_coeff(0, F.sub(h.coeff(0), 1));
    FqPoly g = fq_gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, e, seed, out);
      equal_degree_split(f.divrem(g).first.monic(), e, seed, out);
      return;
    }
  }
}

// p-th root of an element: Frobenius has order m, so c^(p^(m-1)) works.
FqField::Elem pth_root(const FqField& F, FqField::Elem c) {
  FqField::Elem r = c;
  for (std::uint32_t i = 0; i + 1 < F.m(); ++i) r = F.pow(r, F.p());
  return r;
}

void factor_squarefree_monic(const FqPoly& f, int mult, std::vector<FqFactor>& out,
                             std::uint64_t& seed) {
  const FqField& F = f.field();
  if (f.degree() <= 0) return;
  // distinct-degree
  FqPoly x = FqPoly::x_power(F, 1);
  FqPoly rem = f;
  FqPoly xq = powmod(x, F.size(), f);  // x^Q mod f, advanced per degree below
  FqPoly power = xq;
  for (int e = 1; rem.degree() > 0 && e <= rem.degree(); ++e) {
    if (e > 1) power = powmod(power, F.size(), rem);
    if (2 * e > rem.degree()) break;
    FqPoly diff = power - x;
    FqPoly g = fq_gcd(rem, diff);
    if (g.degree() > 0) {
      std::vector<FqPoly> pieces;
      equal_degree_split(g, e, seed, pieces);
      for (auto& p : pieces) out.push_back({p, mult});
      rem = rem.divrem(g).first.monic();
      power = power.divrem(rem).second;
    }
  }
  if (rem.degree() > 0) out.push_back({rem, mult});
}

void factor_rec(const FqPoly& f, int mult, std::vector<FqFactor>& out, std::uint64_t& seed) {
  const FqField& F = f.field();
  if (f.degree() <= 0) return;
  FqPoly d = f.derivative();
  if (d.is_zero()) {
    // f = g(x^p): take p-th roots of the coefficients
    FqPoly g(F);
    for (int i = 0; i * (int)F.p() <= f.degree(); ++i)
      g.set_coeff(i, pth_root(F, f.coeff(i * (int)F.p())));
    std::vector<FqFactor> sub;
    factor_rec(g, 1, sub, seed);
    for (auto& s : sub) out.push_back({s.poly, s.mult * mult * (int)F.p()});
    return;
  }
  FqPoly g = fq_gcd(f, d);
  if (g.degree() == 0) {
    factor_squarefree_monic(f.monic(), mult, out, seed);
    return;
  }
  FqPoly sqfree = f.divrem(g).first.monic();
  // factors of sqfree have multiplicity >= mult; recurse on g for the rest
  std::vector<FqFactor> base;
  factor_squarefree_monic(sqfree, 1, base, seed);
  std::vector<FqFactor> rest;
  factor_rec(g.monic(), 1, rest, seed);
  for (auto& b : base) {
    int extra = 0;
    for (auto& r : rest)
      if (r.poly == b.poly) extra = r.mult;
    out.push_back({b.poly, mult * (1 + extra)});
  }
  for (auto& r : rest) {
    bool seen = false;
    for (auto& b : base)
      if (r.poly == b.poly) seen = true;
    if (!seen) out.push_back({r.poly, mult * (r.mult + 1)});
  }
}

}  // namespace

std::vector<FqFactor> fq_factor(const FqPoly& f) {
  if (f.is_zero()) throw Error("Internal", "factoring the zero polynomial");
  std::vector<FqFactor> out;
  std::uint64_t seed = 0x243f6a8885a308d3ull;
  for (auto c : f.coeffs()) seed = seed * 1099511628211ull + c + 1;
  factor_rec(f.monic(), 1, out, seed);
  return out;
}

std::vector<std::pair<FqField::Elem, int>> fq_roots(const FqPoly& f) {
  std::vector<std::pair<FqField::Elem, int>> out;
  for (auto& fac : fq_factor(f))
    if (fac.poly.degree() == 1) {
      const FqField& F = f.field();
      out.push_back({F.neg(fac.poly.coeff(0)), fac.mult});  // monic: x + c
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool fq_is_squarefree(const FqPoly& f) {
  if (f.is_zero()) return false;
  FqPoly d = f.derivative();
  if (d.is_zero()) return f.degree() == 0;
  return fq_gcd(f, d).degree() == 0;
}

FqPoly fq_lift(const FqPoly& f, const FqField& dst) {
  FqPoly r(dst);
  const FqField& src = f.field();
  for (int i = 0; i <= f.degree(); ++i)
    r.set_coeff(i, src.embed_into(dst, f.coeff(i)));
  return r;
}

}  // namespace mh
