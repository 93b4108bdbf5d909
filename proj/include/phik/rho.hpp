#pragma once

// rho_{k,lambda}(n): the number of k-tuples over Z/nZ whose sum of squares is
// congruent to lambda. For lambda coprime to n the value is assembled from
// prime-power formulas; everything else falls back to exhaustive counting.

#include <cstdint>
#include <string_view>
#include <vector>

#include "phik/bigint.hpp"
#include "phik/core_arith.hpp"

namespace phik {

inline constexpr std::uint64_t kDefaultEnumerationGuard = 100'000'000;

// counts[lambda] = rho_{k,lambda}(n). Sums to n^k.
struct ResidueVector {
  std::uint64_t n = 1;
  std::uint32_t k = 0;
  std::vector<BigInt> counts;
};

// entry(i, j) = rho_{1, i-j mod n}(n). Stored as its first column since every
// column is a cyclic shift of it.
class CountMatrix {
 public:
  explicit CountMatrix(std::uint64_t n);

  std::uint64_t n() const { return n_; }
  std::uint64_t entry(std::uint64_t i, std::uint64_t j) const {
    return column_[(i + n_ - j % n_) % n_];
  }
  ResidueVector apply(const ResidueVector& v) const;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> column_;
};

// Sign-carrying terms of the odd-prime count. Only the member matching the
// parity of k is meaningful: t for odd k, ell for even k.
struct LebesgueTerms {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  BigInt t;
  BigInt ell;
};

LebesgueTerms lebesgue_terms(std::uint32_t k, std::uint64_t p);

// Exhaustive count over all n^k tuples; any lambda. Throws ResourceError when
// n^k exceeds the guard.
BigInt rho_brute(std::uint32_t k, std::uint64_t lambda, std::uint64_t n,
                 std::uint64_t guard = kDefaultEnumerationGuard);

// All residue classes at once by exhaustive enumeration.
ResidueVector rho_brute_census(std::uint32_t k, std::uint64_t n,
                               std::uint64_t guard = kDefaultEnumerationGuard);

BigInt rho_odd_prime(std::uint32_t k, std::uint64_t lambda, std::uint64_t p);
BigInt rho_odd_prime_power(std::uint32_t k, std::uint64_t lambda,
                           std::uint64_t p, std::uint32_t s);

// R_k(n) by iterating the count matrix from the squaring census R_1(n).
// Costs k * n^2 big-integer operations, which must stay under the guard.
ResidueVector rho_base_vector(std::uint32_t k, std::uint64_t n,
                              std::uint64_t guard = kDefaultEnumerationGuard);

BigInt rho_pow2(std::uint32_t k, std::uint64_t lambda, std::uint32_t s);

enum class RhoPath { formula, oracle };
std::string_view to_string(RhoPath path);

struct RhoResult {
  BigInt value;
  RhoPath path = RhoPath::formula;
};

// Formula path when gcd(lambda, n) = 1, guarded exhaustive count otherwise.
RhoResult rho_evaluate(std::uint32_t k, std::uint64_t lambda, std::uint64_t n,
                       std::uint64_t guard = kDefaultEnumerationGuard);
BigInt rho(std::uint32_t k, std::uint64_t lambda, std::uint64_t n,
           std::uint64_t guard = kDefaultEnumerationGuard);
// Formula path only; requires gcd(lambda, f.n()) = 1.
BigInt rho_coprime(std::uint32_t k, std::uint64_t lambda, const Factorization& f);

// Trigonometric closed forms at moduli 2, 4 and 8, evaluated exactly in
// Q(sqrt 2). Independent of the matrix recurrence; used as a cross-check.
BigInt closed_form_rho2(std::uint32_t k, std::uint64_t lambda);
BigInt trig_closed_form_rho4(std::uint32_t k, std::uint64_t lambda);
BigInt trig_closed_form_rho8(std::uint32_t k, std::uint64_t lambda);

}  // namespace phik
