#include "phik/menon.hpp"

#include <map>
#include <string>

#include "phik/core_arith.hpp"
#include "phik/errors.hpp"
#include "phik/phi.hpp"

namespace phik {

MenonClassic menon_classic(std::uint64_t n) {
  if (n == 0) throw DomainError("menon_classic requires n >= 1");
  BigInt lhs = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (gcd(j, n) == 1) lhs += gcd(j - 1, n);
  }
  const Factorization f = factorize(n);
  return {lhs, euler_phi(f) * divisor_count(f)};
}

BigInt menon_lhs(std::uint32_t k, std::uint64_t n) {
  if (k == 0 || n == 0) throw DomainError("menon_lhs requires k, n >= 1");
  const Factorization f = factorize(n);
  BigInt total = 0;
  for (std::uint64_t lambda = 0; lambda < n; ++lambda) {
    if (gcd(lambda, n) != 1) continue;
    // gcd(lambda - 1, n) with lambda - 1 taken mod n.
    const std::uint64_t shifted = (lambda + n - 1) % n;
    total += rho_coprime(k, lambda, f) * gcd(shifted, n);
  }
  return total;
}

BigInt menon_lhs_brute(std::uint32_t k, std::uint64_t n, std::uint64_t guard) {
  if (k == 0 || n == 0) throw DomainError("menon_lhs_brute requires k, n >= 1");
  const BigInt needed = pow_big(n, k);
  if (needed > guard) {
    throw ResourceError("menon_lhs_brute: exhaustive enumeration needs " +
                        needed.str() + " tuple evaluations, over the guard of " +
                        std::to_string(guard));
  }
  std::vector<std::uint64_t> x(k, 0);
  BigInt total = 0;
  while (true) {
    std::uint64_t s = 0;
    for (const std::uint64_t xi : x) s = (s + mod_mul(xi, xi, n)) % n;
    if (gcd(s, n) == 1) total += gcd((s + n - 1) % n, n);
    std::uint32_t i = 0;
    while (i < k && ++x[i] == n) x[i++] = 0;
    if (i == k) break;
  }
  return total;
}

MenonRow menon_row(std::uint32_t k, std::uint64_t n) {
  MenonRow row;
  row.k = k;
  row.n = n;
  row.lhs = menon_lhs(k, n);
  row.phi_k = phi_k(k, n);
  row.psi = Rational(row.lhs, row.phi_k);
  row.integral = boost::multiprecision::denominator(row.psi) == 1;
  return row;
}

std::vector<MenonRow> psi_table(std::uint32_t k, std::uint64_t n_max) {
  std::vector<MenonRow> rows;
  rows.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) rows.push_back(menon_row(k, n));
  return rows;
}

std::vector<PsiPairRow> psi_multiplicativity_scan(std::uint32_t k, std::uint64_t bound) {
  if (k == 0) throw DomainError("psi_multiplicativity_scan requires k >= 1");
  std::map<std::uint64_t, Rational> psi;
  auto psi_at = [&](std::uint64_t n) -> const Rational& {
    auto it = psi.find(n);
    if (it == psi.end()) it = psi.emplace(n, menon_row(k, n).psi).first;
    return it->second;
  };
  std::vector<PsiPairRow> rows;
  for (std::uint64_t m = 1; m * m <= bound; ++m) {
    for (std::uint64_t n = m; m * n <= bound; ++n) {
      if (gcd(m, n) != 1) continue;
      PsiPairRow row{m, n, psi_at(m) * psi_at(n), psi_at(m * n)};
      if (k == 1 && !row.equal()) {
        throw ConsistencyError("Psi_1 is not multiplicative at (" +
                               std::to_string(m) + ", " + std::to_string(n) + ")");
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace phik
