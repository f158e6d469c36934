#include "cmforge/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cmforge/errors.hpp"

namespace cmforge {

namespace {

using i128 = __int128;

int64_t narrow(i128 v) {
  if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
    throw InternalError("rational arithmetic overflow");
  return static_cast<int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(i128 n, i128 d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these bases.
bool miller_rabin(uint64_t n) {
  static constexpr uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kBases) {
    if (a % n == 0) continue;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant; the increment c walks 1, 2, 3, ... so runs are reproducible.
uint64_t pollard_rho(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    uint64_t r = 1;
    const uint64_t m = 128;
    auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = f(y);
      uint64_t k = 0;
      do {
        ys = y;
        for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = static_cast<uint64_t>(gcd(static_cast<int64_t>(q), static_cast<int64_t>(n)));
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = static_cast<uint64_t>(
            gcd(static_cast<int64_t>(x > ys ? x - ys : ys - x), static_cast<int64_t>(n)));
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(uint64_t n, std::vector<int64_t>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(static_cast<int64_t>(n));
    return;
  }
  uint64_t f = pollard_rho(n);
  split(f, out);
  split(n / f, out);
}

constexpr int64_t kTrialLimit = 1'000'000;

// Jacobi symbol (a|n) for odd positive n.
int jacobi(int64_t a, int64_t n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int parity_sign(int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  const i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  num_ = narrow(nn);
  den_ = narrow(dd);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("division by zero rational");
  return make_reduced(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << num_ << '/' << den_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.is_integer()) return os << r.num();
  return os << r.num() << '/' << r.den();
}

Place Place::prime(int64_t q) {
  if (!is_prime(q)) throw InvalidArgument("place must be a prime: " + std::to_string(q));
  return Place(q);
}

int64_t gcd(int64_t a, int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t isqrt(int64_t n) {
  if (n < 0) throw InvalidArgument("isqrt of negative number");
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(int64_t n) {
  if (n < 0) return false;
  int64_t r = isqrt(n);
  return r * r == n;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(static_cast<uint64_t>(n));
}

Factorization factorize(int64_t n) {
  if (n < 1) throw InvalidArgument("factorize requires n >= 1");
  Factorization f;
  f.value = n;
  std::vector<int64_t> large;
  int64_t m = n;
  for (int64_t p = 2; p <= kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (m > 1) split(static_cast<uint64_t>(m), large);
  std::sort(large.begin(), large.end());
  for (int64_t q : large) {
    if (!f.factors.empty() && f.factors.back().prime == q)
      ++f.factors.back().exponent;
    else
      f.factors.push_back({q, 1});
  }
  return f;
}

std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (const auto& pp : factorize(n < 0 ? -n : n).factors) out.push_back(pp.prime);
  return out;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out{1};
  for (const auto& [q, e] : factorize(n).factors) {
    const std::size_t k = out.size();
    int64_t qe = 1;
    for (int i = 1; i <= e; ++i) {
      qe *= q;
      for (std::size_t j = 0; j < k; ++j) out.push_back(out[j] * qe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_squarefree(int64_t n) {
  if (n == 0) return false;
  for (const auto& pp : factorize(n < 0 ? -n : n).factors)
    if (pp.exponent > 1) return false;
  return true;
}

int kronecker(int64_t a, int64_t n) {
  if (a == 0 && n == 0) throw InvalidArgument("kronecker(0, 0) is undefined");
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    int64_t r = mod(a, 8);
    if ((r == 3 || r == 5) && (v % 2 == 1)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

int ord(int64_t x, int64_t q) {
  if (x == 0) throw InvalidArgument("valuation of zero is undefined");
  int k = 0;
  while (x % q == 0) {
    x /= q;
    ++k;
  }
  return k;
}

int ord(const Rational& x, int64_t q) {
  if (x.num() == 0) throw InvalidArgument("valuation of zero is undefined");
  return ord(x.num(), q) - ord(x.den(), q);
}

int hilbert_symbol(const Rational& a, const Rational& b, Place v) {
  if (a.num() == 0 || b.num() == 0) throw InvalidArgument("hilbert symbol of zero");
  if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;

  // n/d has the square class of n*d.
  const int64_t q = v.p();
  auto to_integer = [](const Rational& r) { return narrow(static_cast<i128>(r.num()) * r.den()); };
  int64_t x = to_integer(a);
  int64_t y = to_integer(b);
  const int alpha = ord(x, q);
  const int beta = ord(y, q);
  int64_t u = x, w = y;
  for (int i = 0; i < alpha; ++i) u /= q;
  for (int i = 0; i < beta; ++i) w /= q;

  if (q == 2) {
    auto eps = [](int64_t t) { return mod(t, 4) == 3 ? 1 : 0; };
    auto omega = [](int64_t t) {
      int64_t r = mod(t, 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return parity_sign(e);
  }

  int s = 1;
  if ((q - 1) / 2 % 2 == 1) s = parity_sign(static_cast<int64_t>(alpha) * beta);
  if (beta % 2 == 1) s *= jacobi(u, q);
  if (alpha % 2 == 1) s *= jacobi(w, q);
  return s;
}

bool is_fundamental_discriminant(int64_t disc) {
  if (disc >= 0) throw InvalidArgument("discriminant must be negative");
  const int64_t r = mod(disc, 4);
  if (r == 1) return is_squarefree(disc);
  if (r == 0) {
    const int64_t k = disc / 4;
    const int64_t s = mod(k, 4);
    return (s == 2 || s == 3) && is_squarefree(k);
  }
  return false;
}

}  // namespace cmforge
