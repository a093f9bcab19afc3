#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stein {

/// A prime modulus for the field F_p.
class Prime {
 public:
  explicit Prime(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("Prime: p must be >= 2, got " + std::to_string(p));
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
  }

  int value() const { return p_; }
  operator int() const { return p_; }

  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }

 private:
  int p_;
};

/// Residue of x in [0, p).
inline int mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

/// Multiplicative inverse of a nonzero residue.
inline int inv_mod(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
  long long result = 1, base = a;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

/// Smallest generator of F_p^x.
inline int primitive_root(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    long long x = 1;
    int order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace stein
