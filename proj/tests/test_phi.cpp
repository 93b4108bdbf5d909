#include <doctest.h>

#include <numeric>

#include "phik/averaging.hpp"
#include "phik/errors.hpp"
#include "phik/phi.hpp"
#include "phik/verify.hpp"

using namespace phik;

namespace {

std::uint64_t units_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t j = 1; j <= n; ++j) c += std::gcd(j, n) == 1 ? 1 : 0;
  return c;
}

// Pairs with a unit sum of squares, by nested loops.
std::uint64_t phi2_by_loops(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) c += std::gcd((x * x + y * y) % n, n) == 1 ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("phi_k_brute") {
  for (std::uint64_t n = 1; n <= 50; ++n) REQUIRE(phi_k_brute({1, n}) == units_by_count(n));
  CHECK(phi2_by_loops(3) == 8);
  CHECK(phi_k_brute({2, 3}) == 8);
  CHECK(phi2_by_loops(5) == 16);
  CHECK(phi_k_brute({2, 5}) == 25 - rho_brute(2, 0, 5));
  CHECK(rho_brute(2, 0, 5) == 9);
  for (std::uint64_t n = 1; n <= 30; ++n) REQUIRE(phi_k_brute({2, n}) == phi2_by_loops(n));
  CHECK_THROWS_AS(phi_k_brute({4, 1000}, 1'000'000), ResourceError);
}

TEST_CASE("phi_k_via_rho") {
  CHECK(rho(2, 3, 4) == 0);
  CHECK(phi_k_via_rho({2, 4}) == 8);
  CHECK(phi_k_via_rho({1, 1}) == 1);
  CHECK(phi_k_via_rho({3, 9}) == phi_k_brute({3, 9}));
}

TEST_CASE("phi_k_prime_power") {
  CHECK(phi_k_prime_power(3, 2, 2) == 32);
  CHECK(phi_k_prime_power(2, 3, 1) == 8);
  CHECK(phi_k_prime_power(2, 3, 1) == phi2_by_loops(3));
  CHECK(phi_k_prime_power(2, 5, 1) == 16);
  CHECK(phi_k_prime_power(2, 5, 1) == phi2_by_loops(5));
  for (std::uint32_t k = 1; k <= 6; ++k)
    for (std::uint32_t r = 1; r <= 6; ++r) REQUIRE(phi_k_prime_power(k, 2, r) == pow_big(2, k * r - 1));
  CHECK_THROWS_AS(phi_k_prime_power(2, 9, 1), DomainError);
  CHECK_THROWS_AS(phi_k_prime_power(2, 3, 0), DomainError);
}

TEST_CASE("phi_k closed form") {
  for (std::uint64_t n = 1; n <= 500; ++n) REQUIRE(phi_k(1, n) == units_by_count(n));
  CHECK(phi_k(2, 15) == 128);
  CHECK(phi2_by_loops(15) == 128);
  CHECK(phi_k(4, 3) == 48);
  CHECK(phi_k(5, 1) == 1);
  // Odd k: n^{k-1} phi(n).
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (std::uint32_t k : {3U, 5U, 7U}) REQUIRE(phi_k(k, n) == pow_big(n, k - 1) * units_by_count(n));
}

TEST_CASE("phi_k_via_jordan") {
  CHECK(phi_k_via_jordan(4, factorize(3)) == 48);
  CHECK(phi_k_via_jordan(4, factorize(2)) == 8);
  CHECK(phi_k_via_jordan(4, factorize(2)) == phi_k_prime_power(4, 2, 1));
  CHECK(phi_k_via_jordan(8, factorize(1)) == 1);
  for (std::uint64_t n = 1; n <= 300; ++n)
    for (std::uint32_t k : {4U, 8U, 12U, 16U}) REQUIRE(phi_k_via_jordan(k, factorize(n)) == phi_k(k, n));
  CHECK_THROWS_AS(phi_k_via_jordan(6, factorize(3)), DomainError);
}

TEST_CASE("phi_ratio_check") {
  const RatioSides three = phi_ratio_check(4, factorize(3));
  CHECK(three.lhs == 24);
  CHECK(three.rhs == 24);
  const RatioSides two = phi_ratio_check(4, factorize(2));
  CHECK(two.lhs == 8);
  CHECK(two.equal());
  CHECK(phi_ratio_check(4, factorize(1)).lhs == 1);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    REQUIRE(phi_ratio_check(4, factorize(n)).equal());
    REQUIRE(phi_ratio_check(12, factorize(n)).equal());
  }
  CHECK_THROWS_AS(phi_ratio_check(8, factorize(3)), DomainError);
}

TEST_CASE("oracle equivalence on small moduli") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (std::uint32_t k = 1; k <= 5; ++k) {
      if (pow_big(n, k) > 3'000'000) break;
      const BigInt closed = phi_k(k, n);
      REQUIRE(closed == phi_k_brute({k, n}));
      REQUIRE(closed == phi_k_via_rho({k, n}));
    }
  }
}

TEST_CASE("identity suite") {
  for (std::uint32_t k = 1; k <= 4; ++k) {
    for (std::uint64_t m = 1; m <= 200; ++m)
      for (std::uint64_t n = 1; m * n <= 200; ++n)
        if (std::gcd(m, n) == 1) REQUIRE(phi_k(k, m * n) == phi_k(k, m) * phi_k(k, n));
    for (std::uint64_t n = 3; n <= 1000; ++n) REQUIRE(phi_k(k, n) % 2 == 0);
  }
  const VerifyOutcome v = verify_identities(100);
  CHECK_MESSAGE(v.passed, v.failure);
  CHECK(v.checks > 10'000);
}

TEST_CASE("gcd identity holds in the corrected form only") {
  // Printed form: Phi(mn) Phi(d) = d^k Phi(m) Phi(m). It fails at m = 1, n = 3.
  const std::uint32_t k = 1;
  const std::uint64_t m = 1, n = 3, d = 1;
  CHECK(phi_k(k, m * n) * phi_k(k, d) != pow_big(d, k) * phi_k(k, m) * phi_k(k, m));
  CHECK(phi_k(k, m * n) * phi_k(k, d) == pow_big(d, k) * phi_k(k, m) * phi_k(k, n));
  // A non-coprime example for the corrected form: m = 6, n = 4, d = 2.
  for (std::uint32_t kk = 1; kk <= 3; ++kk) {
    CHECK(phi_k(kk, 24) * phi_k(kk, 2) == pow_big(2, kk) * phi_k(kk, 6) * phi_k(kk, 4));
  }
}

TEST_CASE("power identity") {
  for (std::uint64_t n = 1; n <= 50; ++n)
    for (std::uint32_t m = 1; m <= 4; ++m)
      for (std::uint32_t k = 1; k <= 3; ++k)
        REQUIRE(phi_k(k, pow_big(n, m).convert_to<std::uint64_t>()) ==
                pow_big(n, k * m - k) * phi_k(k, n));
}

TEST_CASE("verify suites pass at small limits") {
  for (const auto name : suite_names()) {
    const VerifyOutcome v = run_suite(name, 20);
    CHECK_MESSAGE(v.passed, v.failure);
  }
  CHECK(run_suite("rho", 1).passed);
  CHECK_THROWS_AS(run_suite("nope", 10), DomainError);
}
