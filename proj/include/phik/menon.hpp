#pragma once

// Menon-type gcd sums over tuples with an invertible sum of squares, and the
// cofactor Psi_k(n) = lhs / Phi_k(n).

#include <cstdint>
#include <vector>

#include "phik/bigint.hpp"
#include "phik/rho.hpp"

namespace phik {

struct MenonClassic {
  BigInt lhs;  // sum over units j of gcd(j - 1, n)
  BigInt rhs;  // phi(n) d(n)
};

MenonClassic menon_classic(std::uint64_t n);

// sum over tuples with gcd(s, n) = 1 of gcd(s - 1, n), s the sum of squares.
// Grouped by residue class: sum over units lambda of rho_{k,lambda}(n) gcd(lambda - 1, n).
BigInt menon_lhs(std::uint32_t k, std::uint64_t n);

// Same quantity by walking all n^k tuples.
BigInt menon_lhs_brute(std::uint32_t k, std::uint64_t n,
                       std::uint64_t guard = kDefaultEnumerationGuard);

struct MenonRow {
  std::uint32_t k = 0;
  std::uint64_t n = 0;
  BigInt lhs;
  BigInt phi_k;
  Rational psi;
  bool integral = false;
};

MenonRow menon_row(std::uint32_t k, std::uint64_t n);
std::vector<MenonRow> psi_table(std::uint32_t k, std::uint64_t n_max);

struct PsiPairRow {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  Rational product;  // Psi(m) Psi(n)
  Rational joint;    // Psi(mn)
  bool equal() const { return product == joint; }
};

// Coprime pairs 1 <= m <= n with mn <= bound, in (m, n) lexicographic order.
// For k = 1 a mismatch throws ConsistencyError; for k >= 2 rows are data only.
std::vector<PsiPairRow> psi_multiplicativity_scan(std::uint32_t k, std::uint64_t bound);

}  // namespace phik
