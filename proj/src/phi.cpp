#include "phik/phi.hpp"

#include <string>
#include <vector>

#include "phik/errors.hpp"

namespace phik {

namespace {

// (-1)^{k(p-1)/4} for even k and odd p.
int even_k_sign(std::uint32_t k, std::uint64_t p) {
  const BigInt exponent_times_four = BigInt(k) * (p - 1);
  if (exponent_times_four % 4 != 0) {
    throw ConsistencyError("k(p-1)/4 is not an integer");
  }
  return ((exponent_times_four / 4) % 2 == 0) ? 1 : -1;
}

// 2^{k/2} / (2^{k/2} - 1 + n mod 2) as an exact rational.
Rational jordan_correction(std::uint32_t k, std::uint64_t n) {
  const BigInt two_half = pow_big(2, k / 2);
  return Rational(two_half, two_half - 1 + (n % 2));
}

}  // namespace

BigInt phi_k_brute(const PhiQuery& q, std::uint64_t guard) {
  if (q.k == 0 || q.n == 0) throw DomainError("phi_k_brute requires k, n >= 1");
  const BigInt needed = pow_big(q.n, q.k);
  if (needed > guard) {
    throw ResourceError("phi_k_brute: exhaustive enumeration needs " +
                        needed.str() + " tuple evaluations, over the guard of " +
                        std::to_string(guard));
  }
  const std::uint64_t n = q.n;
  std::vector<std::uint64_t> sq(n);
  std::vector<std::uint8_t> unit(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    sq[x] = mod_mul(x, x, n);
    unit[x] = gcd(x, n) == 1 ? 1 : 0;
  }

  // Odometer over the first k-1 coordinates; the last one is the inner loop.
  const std::uint32_t m = q.k - 1;
  std::vector<std::uint64_t> idx(m, 0);
  std::vector<std::uint64_t> sums(m + 1, 0);
  std::uint64_t count = 0;
  while (true) {
    const std::uint64_t base = sums[m];
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t s = base + sq[x];
      if (s >= n) s -= n;
      count += unit[s];
    }
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0) {
      if (++idx[i] < n) break;
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
    for (auto j = static_cast<std::uint32_t>(i); j < m; ++j) {
      std::uint64_t s = sums[j] + sq[idx[j]];
      if (s >= n) s -= n;
      sums[j + 1] = s;
    }
  }
  return count;
}

BigInt phi_k_via_rho(const PhiQuery& q) {
  if (q.k == 0 || q.n == 0) throw DomainError("phi_k_via_rho requires k, n >= 1");
  const Factorization f = factorize(q.n);
  BigInt total = 0;
  for (std::uint64_t lambda = 0; lambda < q.n; ++lambda) {
    if (gcd(lambda, q.n) == 1) total += rho_coprime(q.k, lambda, f);
  }
  return total;
}

BigInt phi_k_prime_power(std::uint32_t k, std::uint64_t p, std::uint32_t r) {
  if (k == 0) throw DomainError("phi_k_prime_power requires k >= 1");
  if (r == 0) throw DomainError("phi_k_prime_power requires r >= 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const std::uint64_t kr = static_cast<std::uint64_t>(k) * r;
  if (p == 2) return pow_big(2, kr - 1);
  if (k % 2 == 1) return pow_big(p, kr - 1) * (p - 1);
  const int sign = even_k_sign(k, p);
  return pow_big(p, kr - k / 2 - 1) * (p - 1) * (pow_big(p, k / 2) - sign);
}

BigInt phi_k(std::uint32_t k, const Factorization& f) {
  if (k == 0) throw DomainError("phi_k requires k >= 1");
  BigInt result = 1;
  for (const auto& [p, e] : f.factors()) result *= phi_k_prime_power(k, p, e);
  return result;
}

BigInt phi_k_via_jordan(std::uint32_t k, const Factorization& f) {
  if (k == 0 || k % 4 != 0) {
    throw DomainError("phi_k_via_jordan requires k to be a multiple of 4");
  }
  const BigInt two_half = pow_big(2, k / 2);
  const BigInt numerator = pow_big(f.n(), k / 2 - 1) *
                           jordan_totient(k / 2, f) * euler_phi(f) * two_half;
  const BigInt denominator = two_half - 1 + (f.n() % 2);
  if (numerator % denominator != 0) {
    throw ConsistencyError("Jordan form of Phi_" + std::to_string(k) + "(" +
                           std::to_string(f.n()) + ") is not an integer");
  }
  return numerator / denominator;
}

RatioSides phi_ratio_check(std::uint32_t k, const Factorization& f) {
  if (k % 8 != 4) throw DomainError("phi_ratio_check requires k = 4 (mod 8)");
  RatioSides sides;
  sides.lhs = Rational(phi_k(k, f), phi_k(k / 4, f));
  sides.rhs = Rational(pow_big(f.n(), k / 4) * jordan_totient(k / 2, f)) *
              jordan_correction(k, f.n());
  return sides;
}

}  // namespace phik
