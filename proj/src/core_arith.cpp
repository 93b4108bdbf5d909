#include "phik/core_arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phik/errors.hpp"

namespace phik {

namespace {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > n / r)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                          unsigned s) {
  std::uint64_t x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mod_mul(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant; n must be odd composite.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mod_mul(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod_mul(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_large(d, out);
  split_large(n / d, out);
}

void push_factor(std::vector<PrimePower>& factors, std::uint64_t p) {
  if (!factors.empty() && factors.back().p == p) {
    ++factors.back().e;
  } else {
    factors.push_back({p, 1});
  }
}

}  // namespace

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ == 0) throw DomainError("factorization of 0 is undefined");
  BigInt product = 1;
  std::uint64_t previous = 1;
  for (const auto& [p, e] : factors_) {
    if (e == 0) throw DomainError("zero exponent in factorization");
    if (p <= previous) throw DomainError("primes must strictly increase");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    product *= pow_big(p, e);
    previous = p;
  }
  if (product != n_) throw DomainError("factors do not multiply to n");
}

SpfTable build_spf(std::uint64_t limit) {
  if (limit < 2) throw DomainError("build_spf requires limit >= 2");
  if (limit > SpfTable::kSpfMaxLimit) {
    throw ResourceError("build_spf limit " + std::to_string(limit) +
                        " exceeds the table ceiling " +
                        std::to_string(SpfTable::kSpfMaxLimit));
  }
  SpfTable t;
  t.limit_ = limit;
  t.spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      t.primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t si = t.spf_[i];
    for (const std::uint32_t p : t.primes_) {
      if (p > si || static_cast<std::uint64_t>(p) * i > limit) break;
      t.spf_[p * i] = p;
    }
  }
  return t;
}

Factorization factorize(std::uint64_t n, const SpfTable* table) {
  if (n == 0) throw DomainError("cannot factorize 0");
  const std::uint64_t original = n;
  std::vector<PrimePower> factors;
  if (table != nullptr && n <= table->limit()) {
    while (n > 1) {
      const std::uint32_t p = table->spf(n);
      push_factor(factors, p);
      n /= p;
    }
    return Factorization(Factorization::Trusted{}, original, std::move(factors));
  }

  auto strip = [&](std::uint64_t d) {
    while (n % d == 0) {
      push_factor(factors, d);
      n /= d;
    }
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= kTrialDivisionBound && d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) {
    std::vector<std::uint64_t> large;
    split_large(n, large);
    std::sort(large.begin(), large.end());
    for (const std::uint64_t p : large) push_factor(factors, p);
  }
  return Factorization(Factorization::Trusted{}, original, std::move(factors));
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("mod_pow: modulus must be >= 1");
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1U) result = mod_mul(result, base, modulus);
    base = mod_mul(base, base, modulus);
    exponent >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are sufficient for every n < 3.3 * 10^24.
  for (const std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

void for_each_prime(std::uint64_t limit,
                    const std::function<void(std::uint64_t)>& visit) {
  if (limit < 2) return;
  visit(2);
  if (limit < 3) return;

  const std::uint64_t root = isqrt(limit);
  std::vector<std::uint64_t> base;
  {
    std::vector<bool> composite(root + 1, false);
    for (std::uint64_t i = 3; i <= root; i += 2) {
      if (composite[i]) continue;
      base.push_back(i);
      for (std::uint64_t j = i * i; j <= root; j += 2 * i) composite[j] = true;
    }
  }

  // Segment slot i stands for the odd number low + 2i.
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;
  std::vector<std::uint8_t> sieve(kSegment);
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

  for (std::uint64_t low = 3; low <= limit; low += 2 * kSegment) {
    const std::uint64_t high = std::min(limit, low + 2 * kSegment - 1);
    const std::uint64_t slots = (high - low) / 2 + 1;
    std::fill(sieve.begin(), sieve.begin() + static_cast<std::ptrdiff_t>(slots), 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const std::uint64_t p = base[i];
      std::uint64_t j = next[i];
      if (j > high) continue;
      for (; j <= high; j += 2 * p) sieve[(j - low) / 2] = 0;
      next[i] = j;
    }
    for (std::uint64_t i = 0; i < slots; ++i) {
      if (sieve[i] != 0) visit(low + 2 * i);
    }
  }
}

BigInt euler_phi(const Factorization& f) {
  BigInt result = 1;
  for (const auto& [p, e] : f.factors()) {
    result *= pow_big(p, e - 1) * (p - 1);
  }
  return result;
}

BigInt jordan_totient(std::uint32_t k, const Factorization& f) {
  if (k == 0) throw DomainError("jordan_totient requires k >= 1");
  BigInt result = 1;
  for (const auto& [p, e] : f.factors()) {
    const BigInt pk = pow_big(p, k);
    result *= pow_big(pk, e - 1) * (pk - 1);
  }
  return result;
}

std::uint64_t divisor_count(const Factorization& f) {
  std::uint64_t result = 1;
  for (const auto& pe : f.factors()) result = checked_mul(result, pe.e + 1);
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ResourceError("64-bit overflow in " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
  if (base < 2) return exponent == 0 ? 1 : base;
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

}  // namespace phik
