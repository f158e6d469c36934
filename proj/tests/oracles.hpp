#pragma once

// Reference implementations for the tests; no cmforge dependencies.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

inline int64_t powmod(int64_t b, int64_t e, int64_t m) {
  __int128 r = 1, x = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<int64_t>(r);
}

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// (a|q) for a prime q, Euler's criterion; q = 2 per the Kronecker convention
inline int symbol_at_prime(int64_t a, int64_t q) {
  if (q == 2) {
    if (a % 2 == 0) return 0;
    const int64_t r = ((a % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const int64_t r = ((a % q) + q) % q;
  if (r == 0) return 0;
  return powmod(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

// Kronecker symbol for n >= 1 by trial factorization.
inline int kronecker(int64_t a, int64_t n) {
  int result = 1;
  for (int64_t q = 2; q * q <= n; ++q)
    while (n % q == 0) {
      result *= symbol_at_prime(a, q);
      n /= q;
    }
  if (n > 1) result *= symbol_at_prime(a, n);
  return result;
}

inline int64_t divisor_sum_rho(int64_t n, int64_t D) {
  int64_t s = 0;
  for (int64_t t = 1; t * t <= n; ++t) {
    if (n % t != 0) continue;
    s += kronecker(-D, t);
    if (t * t != n) s += kronecker(-D, n / t);
  }
  return s;
}

// Primitive reduced forms (a,b,c), b^2 - 4ac = disc, by direct scan.
inline int64_t brute_class_number(int64_t disc) {
  int64_t count = 0;
  const int64_t n = -disc;
  for (int64_t a = 1; 3 * a * a <= n; ++a)
    for (int64_t b = -a + 1; b <= a; ++b) {
      const int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  return count;
}

inline int ord(int64_t x, int64_t q) {
  int e = 0;
  while (x % q == 0) {
    x /= q;
    ++e;
  }
  return e;
}

// Whether z^2 = a x^2 + b y^2 has a nontrivial solution in Q_q, for integers
// a, b != 0 and a prime q <= 13: primitive solutions modulo q^k, k = 3 (odd q)
// or 5 (q = 2), lifted by Hensel.
inline bool locally_solvable(int64_t a, int64_t b, int64_t q) {
  auto strip = [q](int64_t v) {
    while (v % (q * q) == 0) v /= q * q;
    return v;
  };
  a = strip(a);
  b = strip(b);
  const int k = q == 2 ? 5 : 3;
  int64_t M = 1;
  for (int i = 0; i < k; ++i) M *= q;
  const int64_t am = ((a % M) + M) % M, bm = ((b % M) + M) % M;
  std::vector<std::vector<int64_t>> roots(M);
  for (int64_t z = 0; z < M; ++z) roots[z * z % M].push_back(z);
  auto val = [q, k](int64_t v) { return v == 0 ? k : ord(v, q); };
  for (int64_t x = 0; x < M; ++x)
    for (int64_t y = 0; y < M; ++y) {
      const int64_t v = (am * (x * x % M) + bm * (y * y % M)) % M;
      for (int64_t z : roots[v]) {
        if (x % q == 0 && y % q == 0 && z % q == 0) continue;
        const int delta = std::min({val(2 * am * x % M), val(2 * bm * y % M), val(2 * z % M)});
        if (2 * delta + 1 <= k) return true;
      }
    }
  return false;
}

inline int hilbert(int64_t a, int64_t b, int64_t q) { return locally_solvable(a, b, q) ? 1 : -1; }

}  // namespace oracle
