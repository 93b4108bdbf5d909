#pragma once

// Exact integer substrate: factorization, sieves, gcd, modular powers and
// the classical totients.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "phik/bigint.hpp"

namespace phik {

class SpfTable;

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical decomposition n = p_1^e_1 ... p_m^e_m with p_1 < ... < p_m.
// An empty factor list means n = 1.
class Factorization {
 public:
  Factorization() = default;
  // Checks every invariant (product, ordering, primality); throws DomainError.
  Factorization(std::uint64_t n, std::vector<PrimePower> factors);

  std::uint64_t n() const { return n_; }
  std::span<const PrimePower> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  struct Trusted {};
  Factorization(Trusted, std::uint64_t n, std::vector<PrimePower> factors)
      : n_(n), factors_(std::move(factors)) {}
  friend Factorization factorize(std::uint64_t, const SpfTable*);

  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

// Smallest-prime-factor table for 2..limit, built by a linear sieve.
// Memory is 4 bytes per entry; the practical ceiling is kSpfMaxLimit.
class SpfTable {
 public:
  static constexpr std::uint64_t kSpfMaxLimit = std::uint64_t{1} << 31;

  std::uint64_t limit() const { return limit_; }
  std::uint32_t spf(std::uint64_t i) const { return spf_[i]; }
  std::span<const std::uint32_t> primes() const { return primes_; }

 private:
  friend SpfTable build_spf(std::uint64_t limit);
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

SpfTable build_spf(std::uint64_t limit);

// SPF lookup when n <= table->limit(); otherwise trial division to 10^6,
// Miller-Rabin and Pollard-Brent splitting.
Factorization factorize(std::uint64_t n, const SpfTable* table = nullptr);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Calls visit(p) for every prime p <= limit in increasing order.
// Segmented odd-only sieve; memory is O(sqrt(limit)).
void for_each_prime(std::uint64_t limit,
                    const std::function<void(std::uint64_t)>& visit);

BigInt euler_phi(const Factorization& f);
BigInt jordan_totient(std::uint32_t k, const Factorization& f);
std::uint64_t divisor_count(const Factorization& f);

// Overflow-checked helpers; throw ResourceError instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent);

}  // namespace phik
