#pragma once

// Bulk evaluation of Phi_k over 1..x, the average-order constants C_k and the
// verification reports built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phik/bigint.hpp"

namespace phik {

inline constexpr std::uint64_t kDefaultTableBudget = 20'000'000;

// Entry i holds Phi_k(i + 1). Each chunk of [1, x] is factored through a
// shared SPF table, so the result does not depend on the thread count.
std::vector<BigInt> phi_k_table(std::uint32_t k, std::uint64_t x,
                                unsigned threads = 1,
                                std::uint64_t budget = kDefaultTableBudget);

BigInt partial_sum(std::uint32_t k, std::uint64_t x, unsigned threads = 1,
                   std::uint64_t budget = kDefaultTableBudget);

// Truncated Euler product with a certified truncation bound:
// |true value - value| <= tail_bound.
struct EulerConstant {
  std::uint32_t k = 0;
  long double value = 0;
  std::uint64_t prime_bound = 0;  // 0 when no product was needed
  long double tail_bound = 0;
};

// C_k. Odd k gives 6/pi^2 exactly (tail_bound 0). For even k, pass
// prime_bound to force a truncation point instead of deriving it from tol.
EulerConstant euler_constant(std::uint32_t k, long double tol,
                             std::optional<std::uint64_t> prime_bound = std::nullopt);

// Leading coefficient of x^{k+1} in the k = 2 and k = 4 corollaries, computed
// from their own per-prime factors. Should equal C_k / (k + 1).
EulerConstant corollary_constant(std::uint32_t k, long double tol,
                                 std::optional<std::uint64_t> prime_bound = std::nullopt);

// The exact prefactors 1/4 and 3/20 of the corollaries.
Rational corollary_prefactor(std::uint32_t k);

// Multiplicative g_k with Phi_k = id_k * g_k; entry i holds g_k(i + 1).
struct GkCoefficient {
  std::uint32_t k = 0;
  std::vector<BigInt> values;

  const BigInt& operator()(std::uint64_t n) const { return values.at(n - 1); }
};

GkCoefficient g_k_table(std::uint32_t k, std::uint64_t limit);

struct ConvolutionReport {
  std::uint32_t k = 0;
  std::uint64_t limit = 0;
  std::uint64_t checked = 0;
  struct Mismatch {
    std::uint64_t n;
    BigInt convolution;
    BigInt phi;
  };
  std::optional<Mismatch> first_mismatch;

  bool ok() const { return !first_mismatch.has_value(); }
};

// Checks sum_{d | n} g_k(d) (n/d)^k = Phi_k(n) for n <= limit.
ConvolutionReport convolution_check(std::uint32_t k, std::uint64_t limit);

struct AveragingRow {
  std::uint64_t x = 0;
  BigInt partial_sum;
  long double main_term = 0;
  long double rel_error = 0;
  long double error_ratio = 0;
};

// The second-order scale x^k R_k(x) against which error_ratio is measured.
long double error_scale(std::uint32_t k, std::uint64_t x);

// xs must be ascending with every entry >= 3.
std::vector<AveragingRow> averaging_report(std::uint32_t k,
                                           std::span<const std::uint64_t> xs,
                                           const EulerConstant& constant,
                                           unsigned threads = 1);
std::vector<AveragingRow> averaging_report(std::uint32_t k,
                                           std::span<const std::uint64_t> xs,
                                           long double tol = 1e-9L,
                                           unsigned threads = 1);

struct MinimalOrderRow {
  std::uint32_t prime_count = 0;
  std::uint64_t n = 0;
  long double ratio = 0;  // Phi_k(n) log log n / n^k
};

// Primorials of the first 3..prime_count primes. Even k is accepted only with
// experimental = true, since no limit value is known there.
std::vector<MinimalOrderRow> minimal_order_scan(std::uint32_t k,
                                                std::uint32_t prime_count,
                                                bool experimental = false);

// e^{-gamma}.
long double minimal_order_limit();

}  // namespace phik
