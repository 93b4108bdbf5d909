#pragma once

// Phi_k(n): the number of k-tuples over Z/nZ whose sum of squares is a unit.

#include <cstdint>

#include "phik/bigint.hpp"
#include "phik/core_arith.hpp"
#include "phik/rho.hpp"

namespace phik {

struct PhiQuery {
  std::uint32_t k = 1;
  std::uint64_t n = 1;
};

BigInt phi_k_brute(const PhiQuery& q, std::uint64_t guard = kDefaultEnumerationGuard);

// Sum of rho_{k,lambda}(n) over the units lambda.
BigInt phi_k_via_rho(const PhiQuery& q);

BigInt phi_k_prime_power(std::uint32_t k, std::uint64_t p, std::uint32_t r);

BigInt phi_k(std::uint32_t k, const Factorization& f);
inline BigInt phi_k(std::uint32_t k, std::uint64_t n) { return phi_k(k, factorize(n)); }

// Jordan-totient form; k must be a multiple of 4.
BigInt phi_k_via_jordan(std::uint32_t k, const Factorization& f);

struct RatioSides {
  Rational lhs;  // Phi_k(n) / Phi_{k/4}(n)
  Rational rhs;  // n^{k/4} J_{k/2}(n) 2^{k/2} / (2^{k/2} - 1 + n mod 2)
  bool equal() const { return lhs == rhs; }
};

// k must satisfy k = 4 (mod 8).
RatioSides phi_ratio_check(std::uint32_t k, const Factorization& f);

}  // namespace phik
