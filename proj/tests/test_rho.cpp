#include <doctest.h>

#include <numeric>

#include "phik/errors.hpp"
#include "phik/rho.hpp"

using namespace phik;

namespace {

// Plain nested-loop oracle for k <= 3, independent of the library enumerator.
std::uint64_t count_by_loops(std::uint32_t k, std::uint64_t lambda, std::uint64_t n) {
  std::uint64_t c = 0;
  const std::uint64_t ny = k >= 2 ? n : 1, nz = k >= 3 ? n : 1;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < ny; ++y)
      for (std::uint64_t z = 0; z < nz; ++z)
        if ((x * x + y * y + z * z) % n == lambda % n) ++c;
  return c;
}

bool is_prime_power(std::uint64_t n, std::uint64_t& p, std::uint32_t& s) {
  if (n < 2) return false;
  const auto f = factorize(n);
  if (f.factors().size() != 1) return false;
  p = f.factors()[0].p;
  s = f.factors()[0].e;
  return true;
}

}  // namespace

TEST_CASE("rho_brute reproduces the modulus-4 seed values") {
  CHECK(rho_brute(1, 1, 4) == 2);
  CHECK(rho_brute(2, 1, 4) == 8);
  CHECK(rho_brute(3, 1, 4) == 24);
  for (std::uint32_t k = 1; k <= 3; ++k)
    for (std::uint64_t n = 1; n <= 12; ++n)
      for (std::uint64_t l = 0; l < n; ++l) REQUIRE(rho_brute(k, l, n) == count_by_loops(k, l, n));
}

TEST_CASE("rho_brute guard") {
  CHECK_THROWS_AS(rho_brute(3, 1, 1000, 1000), ResourceError);
  try {
    rho_brute(3, 1, 1000, 1000);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("1000000000") != std::string::npos);
  }
  CHECK_THROWS_AS(rho_brute(0, 1, 5), DomainError);
  CHECK_THROWS_AS(rho_brute(1, 1, 0), DomainError);
}

TEST_CASE("rho_odd_prime") {
  CHECK(count_by_loops(1, 1, 5) == 2);
  CHECK(rho_odd_prime(1, 1, 5) == 2);
  CHECK(count_by_loops(2, 1, 3) == 4);
  CHECK(rho_odd_prime(2, 1, 3) == 4);
  CHECK(count_by_loops(2, 1, 5) == 4);
  CHECK(rho_odd_prime(2, 1, 5) == 4);
  CHECK_THROWS_AS(rho_odd_prime(2, 5, 5), DomainError);
  CHECK_THROWS_AS(rho_odd_prime(2, 1, 2), DomainError);
  CHECK_THROWS_AS(rho_odd_prime(2, 1, 9), DomainError);

  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      if (pow_big(p, k) > 1'000'000) continue;
      const ResidueVector census = rho_brute_census(k, p);
      for (std::uint64_t l = 1; l < p; ++l) REQUIRE(rho_odd_prime(k, l, p) == census.counts[l]);
    }
  }
}

TEST_CASE("Lebesgue terms carry the right magnitude and sign") {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::uint32_t k = 1; k <= 9; ++k) {
      const LebesgueTerms t = lebesgue_terms(k, p);
      if (k % 2 == 1) {
        REQUIRE(abs(t.t) == pow_big(p, (k - 1) / 2));
        const bool neg = ((p - 1) * (k - 1) / 4) % 2 == 1;
        REQUIRE((t.t < 0) == neg);
      } else {
        REQUIRE(abs(t.ell) == pow_big(p, (k - 2) / 2));
        const bool neg = (k * (p - 1) / 4) % 2 == 1;
        REQUIRE((t.ell < 0) == neg);
      }
    }
  }
  CHECK_THROWS_AS(lebesgue_terms(2, 15), DomainError);
}

TEST_CASE("rho_odd_prime_power") {
  CHECK(count_by_loops(1, 1, 9) == 2);
  CHECK(rho_odd_prime_power(1, 1, 3, 2) == 2);
  CHECK(count_by_loops(2, 1, 9) == 12);
  CHECK(rho_odd_prime_power(2, 1, 3, 2) == 12);
  CHECK(rho_odd_prime_power(2, 1, 5, 1) == 4);
  CHECK_THROWS_AS(rho_odd_prime_power(2, 3, 3, 2), DomainError);
  CHECK_THROWS_AS(rho_odd_prime_power(2, 1, 3, 0), DomainError);
}

TEST_CASE("odd prime power lifting step") {
  for (std::uint64_t p : {3, 5}) {
    std::uint64_t q = p;
    for (std::uint32_t s = 1; s <= 3; ++s, q *= p) {
      for (std::uint32_t k = 1; k <= 3; ++k) {
        if (pow_big(q * p, k) > 4'000'000) continue;
        const ResidueVector lo = rho_brute_census(k, q);
        const ResidueVector hi = rho_brute_census(k, q * p);
        for (std::uint64_t l = 1; l < q * p; ++l) {
          if (l % p == 0) continue;
          REQUIRE(hi.counts[l] == pow_big(p, k - 1) * lo.counts[l % q]);
        }
      }
    }
  }
}

TEST_CASE("rho_base_vector") {
  const ResidueVector r14 = rho_base_vector(1, 4);
  CHECK(r14.counts == std::vector<BigInt>{2, 2, 0, 0});
  CHECK(rho_base_vector(2, 4).counts[1] == 8);
  for (std::uint32_t k = 1; k <= 8; ++k) CHECK(rho_base_vector(k, 2).counts[1] == pow_big(2, k - 1));

  // Matrix route equals the exhaustive census; both sum to n^k.
  for (std::uint64_t n = 1; n <= 64; ++n) {
    for (std::uint32_t k = 1; k <= 8; ++k) {
      const ResidueVector m = rho_base_vector(k, n);
      BigInt total = 0;
      for (const auto& v : m.counts) {
        REQUIRE(v >= 0);
        total += v;
      }
      REQUIRE(total == pow_big(n, k));
      if (pow_big(n, k) <= 300'000) REQUIRE(m.counts == rho_brute_census(k, n).counts);
    }
  }
  CHECK_THROWS_AS(rho_base_vector(2, 100'000, 1000), ResourceError);
}

TEST_CASE("CountMatrix structure") {
  for (std::uint64_t n : {2, 4, 8, 9, 12, 16}) {
    const CountMatrix m(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t row = 0;
      for (std::uint64_t j = 0; j < n; ++j) {
        row += m.entry(i, j);
        REQUIRE(m.entry(i, j) == m.entry((i + 1) % n, (j + 1) % n));
      }
      REQUIRE(row == n);
    }
  }
  // The displayed M(4) and M(8).
  const CountMatrix m4(4);
  const std::uint64_t expected4[4][4] = {{2, 0, 0, 2}, {2, 2, 0, 0}, {0, 2, 2, 0}, {0, 0, 2, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) REQUIRE(m4.entry(i, j) == expected4[i][j]);
  const CountMatrix m8(8);
  const std::uint64_t row0[8] = {2, 0, 0, 0, 2, 0, 0, 4};
  for (int j = 0; j < 8; ++j) REQUIRE(m8.entry(0, j) == row0[j]);
}

TEST_CASE("characteristic polynomial of M(4) is x(x-4)(x^2-4x+8)") {
  // Faddeev-LeVerrier over the integers.
  const CountMatrix m(4);
  using Mat = std::array<std::array<BigInt, 4>, 4>;
  Mat a{}, mk{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m.entry(i, j);
  std::array<BigInt, 5> c{};  // c[i] is the coefficient of x^i
  c[4] = 1;
  for (int k = 1; k <= 4; ++k) {
    Mat next{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        for (int t = 0; t < 4; ++t) next[i][j] += a[i][t] * mk[t][j];
        if (i == j) next[i][j] += c[4 - k + 1];
      }
    mk = next;
    BigInt trace = 0;
    for (int i = 0; i < 4; ++i)
      for (int t = 0; t < 4; ++t) trace += a[i][t] * mk[t][i];
    c[4 - k] = -trace / k;
  }
  // x(x-4)(x^2-4x+8) = x^4 - 8x^3 + 24x^2 - 32x
  CHECK(c[4] == 1);
  CHECK(c[3] == -8);
  CHECK(c[2] == 24);
  CHECK(c[1] == -32);
  CHECK(c[0] == 0);
}

TEST_CASE("rho_pow2") {
  CHECK(rho_pow2(1, 1, 2) == 2);
  // x^2 = 1 mod 16: x in {1, 7, 9, 15}.
  CHECK(count_by_loops(1, 1, 16) == 4);
  CHECK(rho_pow2(1, 1, 4) == 4);
  CHECK(rho_pow2(2, 1, 3) == rho_brute(2, 1, 8));
  CHECK(rho_pow2(2, 1, 3) == trig_closed_form_rho8(2, 1));
  CHECK_THROWS_AS(rho_pow2(2, 2, 3), DomainError);
  CHECK_THROWS_AS(rho_pow2(2, 1, 0), DomainError);
}

TEST_CASE("power-of-two lifting step for s >= 3") {
  for (std::uint32_t s = 3; s <= 6; ++s) {
    const std::uint64_t q = std::uint64_t{1} << s;
    for (std::uint32_t k = 1; k <= 3; ++k) {
      if (pow_big(2 * q, k) > 4'000'000) continue;
      const ResidueVector lo = rho_brute_census(k, q);
      const ResidueVector hi = rho_brute_census(k, 2 * q);
      for (std::uint64_t l = 1; l < 2 * q; l += 2) {
        REQUIRE(hi.counts[l] == pow_big(2, k - 1) * lo.counts[l % q]);
      }
    }
  }
}

TEST_CASE("rho dispatch") {
  CHECK(rho(2, 1, 12) == 32);
  CHECK(count_by_loops(2, 1, 12) == 32);
  for (std::uint32_t k = 1; k <= 6; ++k) CHECK(rho(k, 1, 1) == 1);
  CHECK(rho(1, 1, 8) == 4);
  CHECK(rho_evaluate(2, 1, 4).path == RhoPath::formula);

  const RhoResult zero = rho_evaluate(2, 0, 5);
  CHECK(zero.path == RhoPath::oracle);
  CHECK(zero.value == 9);
  CHECK(zero.value == count_by_loops(2, 0, 5));
  CHECK(rho(2, 6, 4) == count_by_loops(2, 2, 4));  // lambda is reduced mod n
  CHECK_THROWS_AS(rho(4, 0, 1000, 1'000'000), ResourceError);
  try {
    rho(4, 0, 1000, 1'000'000);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("no formula") != std::string::npos);
  }
  CHECK_THROWS_AS(rho_coprime(2, 2, factorize(4)), DomainError);
}

TEST_CASE("formula equals oracle for coprime lambda") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const Factorization f = factorize(n);
    for (std::uint32_t k = 1; k <= 6; ++k) {
      if (pow_big(n, k) > 2'000'000) break;
      const ResidueVector census = rho_brute_census(k, n);
      for (std::uint64_t l = 0; l < n; ++l) {
        if (std::gcd(l, n) == 1) REQUIRE(rho_coprime(k, l, f) == census.counts[l]);
      }
    }
  }
}

TEST_CASE("multiplicativity in the modulus") {
  for (std::uint64_t m = 1; m <= 24; ++m) {
    for (std::uint64_t n = m + 1; n <= 24; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (std::uint32_t k = 1; k <= 5; ++k) {
        if (pow_big(m * n, k) > 1'000'000) break;
        const ResidueVector joint = rho_brute_census(k, m * n);
        for (std::uint64_t l = 0; l < m * n; ++l) {
          if (std::gcd(l, m * n) != 1) continue;
          REQUIRE(joint.counts[l] == rho(k, l % m, m) * rho(k, l % n, n));
        }
      }
    }
  }
}

TEST_CASE("closed forms at 2, 4 and 8 match the matrix recurrence") {
  CHECK(trig_closed_form_rho8(1, 1) == 4);
  CHECK(trig_closed_form_rho8(1, 1) == count_by_loops(1, 1, 8));
  CHECK(trig_closed_form_rho8(2, 1) == rho_brute(2, 1, 8));
  for (std::uint32_t k = 1; k <= 32; ++k) {
    const ResidueVector r2 = rho_base_vector(k, 2);
    const ResidueVector r4 = rho_base_vector(k, 4);
    const ResidueVector r8 = rho_base_vector(k, 8);
    REQUIRE(closed_form_rho2(k, 1) == r2.counts[1]);
    for (std::uint64_t l : {1, 3}) REQUIRE(trig_closed_form_rho4(k, l) == r4.counts[l]);
    for (std::uint64_t l : {1, 3, 5, 7}) REQUIRE(trig_closed_form_rho8(k, l) == r8.counts[l]);
  }
  CHECK_THROWS_AS(trig_closed_form_rho8(3, 2), DomainError);
  CHECK_THROWS_AS(trig_closed_form_rho4(3, 2), DomainError);
}

TEST_CASE("rho at prime powers up to the guard") {
  for (std::uint64_t q = 2; q <= 256; ++q) {
    std::uint64_t p = 0;
    std::uint32_t s = 0;
    if (!is_prime_power(q, p, s)) continue;
    for (std::uint32_t k = 1; k <= 4; ++k) {
      if (pow_big(q, k) > 1'000'000) break;
      const ResidueVector census = rho_brute_census(k, q);
      for (std::uint64_t l = 1; l < q; ++l) {
        if (l % p == 0) continue;
        const BigInt v = p == 2 ? rho_pow2(k, l, s) : rho_odd_prime_power(k, l, p, s);
        REQUIRE(v == census.counts[l]);
      }
    }
  }
}
