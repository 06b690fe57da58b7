#include "mh/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace mh {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 22;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Dense polynomial arithmetic over F_p on digit vectors (low to high).
using Digits = std::vector<std::uint32_t>;

void trim(Digits& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Digits mulmod(const Digits& a, const Digits& b, const Digits& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (std::uint32_t)((r[i + j] + ai * b[j]) % p);
  }
  // reduce mod f (monic)
  size_t m = f.size() - 1;
  for (size_t i = r.size(); i-- > m;) {
    std::uint32_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (size_t j = 0; j < m; ++j) {
      std::uint64_t sub = (std::uint64_t)c * f[j] % p;
      r[i - m + j] = (std::uint32_t)((r[i - m + j] + p - sub) % p);
    }
  }
  r.resize(m);
  trim(r);
  return r;
}

Digits powmod(Digits a, std::uint64_t e, const Digits& f, std::uint32_t p) {
  Digits r{1};
  while (e) {
    if (e & 1) r = mulmod(r, a, f, p);
    a = mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

// Is x a primitive element of F_p[x]/(f)?  When it is, f is automatically
// irreducible (the unit group of a proper quotient is smaller than p^m - 1).
bool x_is_primitive(const Digits& f, std::uint32_t p, std::uint64_t order,
                    const std::vector<std::uint64_t>& order_factors) {
  if (f[0] == 0) return false;  // x not invertible
  Digits x{0, 1};
  Digits id{1};
  if (powmod(x, order, f, p) != id) return false;
  for (auto q : order_factors)
    if (powmod(x, order / q, f, p) == id) return false;
  return true;
}

std::mutex registry_mutex;

}  // namespace

class FqRegistry {
public:
  static FqField& instance(std::uint32_t p, std::uint32_t m) {
    std::lock_guard<std::mutex> lk(registry_mutex);
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FqField>> cache;
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::unique_ptr<FqField>(new FqField(p, m))).first;
    return *it->second;
  }

  static FqField::Elem embed(const FqField& src, const FqField& dst, FqField::Elem a);
};

const FqField& FqField::get(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p) || p == 2) throw BadCharacteristic("p must be an odd prime");
  if (m < 1 || m > 16) throw TooLarge("extension degree out of range");
  return FqRegistry::instance(p, m);
}

FqField::FqField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  size_ = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (size_ > (std::uint64_t)1 << 40) throw TooLarge("field too large");
    size_ *= p;
  }
  std::uint64_t order = size_ - 1;
  auto factors = prime_factors(order);

  if (m == 1) {
    modulus_ = {0, 1};  // placeholder; arithmetic is plain mod p
    for (std::uint32_t g = 2; g < p; ++g) {
      auto spow = [&](std::uint64_t e) {
        std::uint64_t r = 1, b = g;
        while (e) {
          if (e & 1) r = r * b % p;
          b = b * b % p;
          e >>= 1;
        }
        return r;
      };
      bool ok = true;
      for (auto q : factors)
        if (spow(order / q) == 1) { ok = false; break; }
      if (ok) { gen_ = g; break; }
    }
  } else {
    // find a defining polynomial with x primitive
    bool found = false;
    std::uint64_t tail_count = 1;
    for (std::uint32_t i = 0; i < m && !found; ++i) tail_count *= p;
    for (std::uint64_t t = 0; t < tail_count && !found; ++t) {
      Digits f(m + 1, 0);
      f[m] = 1;
      std::uint64_t v = t;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = (std::uint32_t)(v % p);
        v /= p;
      }
      if (x_is_primitive(f, p, order, factors)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw Error("Internal", "no primitive defining polynomial found");
    gen_ = (Elem)p;  // the class of x
  }

  tabled_ = size_ <= kTableLimit && m_ > 1;
  if (tabled_) {
    exp_.assign(2 * (size_ - 1), 0);
    log_.assign(size_, 0);
    Digits cur{1};
    Digits x{0, 1};
    for (std::uint64_t i = 0; i < size_ - 1; ++i) {
      Elem idx = encode(cur);
      exp_[i] = idx;
      exp_[i + size_ - 1] = idx;
      log_[idx] = (std::uint32_t)i;
      cur = mulmod(cur, x, modulus_, p_);
    }
  }
}

std::vector<std::uint32_t> FqField::decode(Elem a) const {
  Digits d(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  trim(d);
  return d;
}

FqField::Elem FqField::encode(const Digits& d) const {
  Elem a = 0;
  for (size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
  return a;
}

FqField::Elem FqField::add(Elem a, Elem b) const {
  if (m_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    Elem da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    Elem s = da + db;
    if (s >= p_) s -= p_;
    r += s * mult;
    mult *= p_;
  }
  return r;
}

FqField::Elem FqField::neg(Elem a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    Elem da = a % p_;
    a /= p_;
    r += (da == 0 ? 0 : p_ - da) * mult;
    mult *= p_;
  }
  return r;
}

FqField::Elem FqField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FqField::Elem FqField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return (Elem)((std::uint64_t)a * b % p_);
  if (tabled_) return exp_[log_[a] + log_[b]];
  return mul_generic(a, b);
}

FqField::Elem FqField::mul_generic(Elem a, Elem b) const {
  return encode(mulmod(decode(a), decode(b), modulus_, p_));
}

FqField::Elem FqField::inv(Elem a) const {
  if (a == 0) throw Error("Internal", "division by zero in F_q");
  if (m_ == 1) {
    // Fermat
    return pow(a, p_ - 2);
  }
  if (tabled_) return exp_[(size_ - 1) - log_[a]];
  return encode(powmod(decode(a), size_ - 2, modulus_, p_));
}

FqField::Elem FqField::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (tabled_) {
    std::uint64_t l = (std::uint64_t)log_[a] * (e % (size_ - 1)) % (size_ - 1);
    return exp_[l];
  }
  Elem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FqField::Elem FqField::embed_into(const FqField& dst, Elem a) const {
  if (&dst == this) return a;
  return FqRegistry::embed(*this, dst, a);
}

namespace {

// Roots of a polynomial over `F` found by plain search through the subfield
// structure is too slow; FqRegistry::embed only needs one root of the source
// modulus, found by factoring x^(p^m)-x style gcds.  To avoid a dependency
// cycle with fq_poly, a minimal root finder lives here.
using Digits2 = std::vector<FqField::Elem>;  // poly over dst field, low->high

Digits2 poly_mod(const FqField& F, Digits2 a, const Digits2& f) {
  size_t m = f.size() - 1;
  FqField::Elem lead_inv = F.inv(f.back());
  while (a.size() > m) {
    FqField::Elem c = F.mul(a.back(), lead_inv);
    size_t off = a.size() - 1 - m;
    if (c != 0)
      for (size_t j = 0; j <= m; ++j) a[off + j] = F.sub(a[off + j], F.mul(c, f[j]));
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Digits2 poly_mulmod(const FqField& F, const Digits2& a, const Digits2& b, const Digits2& f) {
  if (a.empty() || b.empty()) return {};
  Digits2 r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return poly_mod(F, std::move(r), f);
}

Digits2 poly_powmod(const FqField& F, Digits2 a, std::uint64_t e, const Digits2& f) {
  Digits2 r{1};
  a = poly_mod(F, std::move(a), f);
  while (e) {
    if (e & 1) r = poly_mulmod(F, r, a, f);
    a = poly_mulmod(F, a, a, f);
    e >>= 1;
  }
  return r;
}

Digits2 poly_gcd(const FqField& F, Digits2 a, Digits2 b) {
  while (!b.empty()) {
    Digits2 r = poly_mod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    FqField::Elem inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

// One root of a squarefree polynomial that splits completely over F.
FqField::Elem one_root(const FqField& F, Digits2 f, std::uint64_t seed) {
  while (f.size() > 2) {
    // random split: gcd(f, r^((Q-1)/2) - 1)
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    Digits2 r;
    std::uint64_t s = seed;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      r.push_back((FqField::Elem)((s >> 16) % F.size()));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) continue;
    Digits2 h = poly_powmod(F, r, (F.size() - 1) / 2, f);
    if (h.empty()) continue;
    h[0] = F.sub(h[0], 1);
    while (!h.empty() && h.back() == 0) h.pop_back();
    Digits2 g = poly_gcd(F, f, h);
    if (g.size() > 1 && g.size() < f.size()) f = g;
  }
  if (f.size() != 2) throw Error("Internal", "root extraction failed");
  return F.mul(F.neg(f[0]), F.inv(f[1]));
}

}  // namespace

FqField::Elem FqRegistry::embed(const FqField& src, const FqField& dst, FqField::Elem a) {
  if (src.p() != dst.p() || dst.m() % src.m() != 0)
    throw Mismatch("no embedding between these fields");
  if (src.m() == 1) return a;  // prime subfield is the constants
  {
    std::lock_guard<std::mutex> lk(registry_mutex);
    if (src.embed_cache_.empty()) src.embed_cache_.resize(64);
  }
  // cache of powers R^i indexed by dst.m
  std::vector<FqField::Elem>* powers = nullptr;
  {
    std::lock_guard<std::mutex> lk(registry_mutex);
    powers = &src.embed_cache_[dst.m()];
    if (powers->empty()) {
      // find a root R of src.modulus() in dst
      Digits2 f;
      for (auto c : src.modulus()) f.push_back(c);  // constants embed as-is
      // src.modulus() splits in dst since src.m() | dst.m(); reduce to the
      // squarefree splitting part via gcd with x^|dst| - x ... the modulus is
      // already irreducible over F_p hence squarefree and split over dst.
      FqField::Elem root = one_root(dst, f, 0x9e3779b97f4a7c15ull ^ dst.size());
      powers->resize(src.m());
      (*powers)[0] = 1;
      for (std::uint32_t i = 1; i < src.m(); ++i)
        (*powers)[i] = dst.mul((*powers)[i - 1], root);
    }
  }
  FqField::Elem r = 0;
  FqField::Elem rem = a;
  for (std::uint32_t i = 0; i < src.m(); ++i) {
    std::uint32_t digit = rem % src.p();
    rem /= src.p();
    if (digit != 0) r = dst.add(r, dst.mul(dst.from_int(digit), (*powers)[i]));
  }
  return r;
}

}  // namespace mh
