#include "phik/rho.hpp"

#include <string>

#include "phik/errors.hpp"

namespace phik {

namespace {

void require_k(std::uint32_t k) {
  if (k == 0) throw DomainError("tuple length k must be >= 1");
}

void require_modulus(std::uint64_t n) {
  if (n == 0) throw DomainError("modulus n must be >= 1");
}

// Throws unless n^k <= guard.
void require_enumeration_budget(std::uint32_t k, std::uint64_t n,
                                std::uint64_t guard, std::string_view what) {
  const BigInt needed = pow_big(n, k);
  if (needed > guard) {
    throw ResourceError(std::string(what) + ": exhaustive enumeration needs " +
                        needed.str() + " tuple evaluations (n^k with n=" +
                        std::to_string(n) + ", k=" + std::to_string(k) +
                        "), over the guard of " + std::to_string(guard));
  }
}

std::vector<std::uint64_t> squares_mod(std::uint64_t n) {
  std::vector<std::uint64_t> sq(n);
  for (std::uint64_t x = 0; x < n; ++x) sq[x] = mod_mul(x, x, n);
  return sq;
}

// Visits (x_1^2 + ... + x_m^2) mod n for every m-tuple, in odometer order.
template <typename Visit>
void for_each_prefix_sum(std::uint32_t m, std::uint64_t n,
                         const std::vector<std::uint64_t>& sq, Visit&& visit) {
  std::vector<std::uint64_t> idx(m, 0);
  std::vector<std::uint64_t> sums(m + 1, 0);
  while (true) {
    visit(sums[m]);
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0) {
      if (++idx[i] < n) break;
      idx[i] = 0;
      --i;
    }
    if (i < 0) return;
    for (auto j = static_cast<std::uint32_t>(i); j < m; ++j) {
      std::uint64_t s = sums[j] + sq[idx[j]];
      if (s >= n) s -= n;
      sums[j + 1] = s;
    }
  }
}

// a + b*sqrt(2) with rational a, b.
struct Sqrt2Number {
  Rational a;
  Rational b;

  Sqrt2Number operator+(const Sqrt2Number& o) const { return {a + o.a, b + o.b}; }
  Sqrt2Number operator-(const Sqrt2Number& o) const { return {a - o.a, b - o.b}; }
  Sqrt2Number operator*(const Sqrt2Number& o) const {
    return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
  }
  Sqrt2Number operator*(int c) const { return {a * c, b * c}; }
};

Rational pow2_rational(std::int64_t e) {
  if (e >= 0) return Rational(pow_big(2, static_cast<std::uint64_t>(e)));
  return Rational(BigInt(1), pow_big(2, static_cast<std::uint64_t>(-e)));
}

// 2^(twice_exponent / 2).
Sqrt2Number half_pow2(std::int64_t twice_exponent) {
  const std::int64_t whole = twice_exponent >= 0 ? twice_exponent / 2
                                                 : -((-twice_exponent + 1) / 2);
  if (twice_exponent - 2 * whole == 0) return {pow2_rational(whole), 0};
  return {0, pow2_rational(whole)};
}

// sin(m * pi / 4) for any integer m.
Sqrt2Number sin_quarter_pi(std::int64_t m) {
  const Rational half(1, 2);
  switch (((m % 8) + 8) % 8) {
    case 0: return {0, 0};
    case 1: return {0, half};
    case 2: return {1, 0};
    case 3: return {0, half};
    case 4: return {0, 0};
    case 5: return {0, -half};
    case 6: return {-1, 0};
    default: return {0, -half};
  }
}

Sqrt2Number cos_quarter_pi(std::int64_t m) { return sin_quarter_pi(m + 2); }

BigInt to_exact_count(const Sqrt2Number& v, std::string_view where) {
  if (v.b != 0 || boost::multiprecision::denominator(v.a) != 1 || v.a < 0) {
    throw ConsistencyError(std::string(where) +
                           " did not evaluate to a nonnegative integer");
  }
  return boost::multiprecision::numerator(v.a);
}

}  // namespace

CountMatrix::CountMatrix(std::uint64_t n) : n_(n) {
  require_modulus(n);
  column_.assign(n, 0);
  for (std::uint64_t x = 0; x < n; ++x) ++column_[mod_mul(x, x, n)];
}

ResidueVector CountMatrix::apply(const ResidueVector& v) const {
  ResidueVector out{n_, v.k + 1, std::vector<BigInt>(n_)};
  for (std::uint64_t d = 0; d < n_; ++d) {
    if (column_[d] == 0) continue;
    for (std::uint64_t j = 0; j < n_; ++j) {
      if (v.counts[j] == 0) continue;
      std::uint64_t i = j + d;
      if (i >= n_) i -= n_;
      out.counts[i] += v.counts[j] * column_[d];
    }
  }
  return out;
}

LebesgueTerms lebesgue_terms(std::uint32_t k, std::uint64_t p) {
  require_k(k);
  if (p % 2 == 0 || !is_prime(p)) {
    throw DomainError("lebesgue_terms requires an odd prime, got " +
                      std::to_string(p));
  }
  LebesgueTerms terms{p, k, 0, 0};
  const BigInt sign_numerator =
      (k % 2 == 1) ? BigInt(p - 1) * (k - 1) : BigInt(k) * (p - 1);
  if (sign_numerator % 4 != 0) {
    throw ConsistencyError("sign exponent is not an integer");
  }
  const int sign = ((sign_numerator / 4) % 2 == 0) ? 1 : -1;
  if (k % 2 == 1) {
    terms.t = sign * pow_big(p, (k - 1) / 2);
  } else {
    terms.ell = sign * pow_big(p, (k - 2) / 2);
  }
  return terms;
}

BigInt rho_brute(std::uint32_t k, std::uint64_t lambda, std::uint64_t n,
                 std::uint64_t guard) {
  require_k(k);
  require_modulus(n);
  require_enumeration_budget(k, n, guard, "rho_brute");
  const std::uint64_t target = lambda % n;
  const auto sq = squares_mod(n);
  std::uint64_t count = 0;
  for_each_prefix_sum(k - 1, n, sq, [&](std::uint64_t base) {
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t s = base + sq[x];
      if (s >= n) s -= n;
      count += (s == target) ? 1 : 0;
    }
  });
  return count;
}

ResidueVector rho_brute_census(std::uint32_t k, std::uint64_t n,
                               std::uint64_t guard) {
  require_k(k);
  require_modulus(n);
  require_enumeration_budget(k, n, guard, "rho_brute_census");
  const auto sq = squares_mod(n);
  std::vector<std::uint64_t> counts(n, 0);
  for_each_prefix_sum(k - 1, n, sq, [&](std::uint64_t base) {
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t s = base + sq[x];
      if (s >= n) s -= n;
      ++counts[s];
    }
  });
  return {n, k, std::vector<BigInt>(counts.begin(), counts.end())};
}

BigInt rho_odd_prime(std::uint32_t k, std::uint64_t lambda, std::uint64_t p) {
  if (p % 2 == 0) throw DomainError("rho_odd_prime requires an odd prime");
  if (lambda % p == 0) {
    throw DomainError("rho_odd_prime requires p not dividing lambda");
  }
  const LebesgueTerms terms = lebesgue_terms(k, p);
  const BigInt main = pow_big(p, k - 1);
  if (k % 2 == 0) return main - terms.ell;
  // Euler criterion.
  const bool residue = mod_pow(lambda % p, (p - 1) / 2, p) == 1;
  if (residue) return main + terms.t;
  return main - terms.t;
}

BigInt rho_odd_prime_power(std::uint32_t k, std::uint64_t lambda,
                           std::uint64_t p, std::uint32_t s) {
  if (s == 0) throw DomainError("rho_odd_prime_power requires s >= 1");
  const BigInt at_p = rho_odd_prime(k, lambda % p, p);
  return pow_big(p, static_cast<std::uint64_t>(s - 1) * (k - 1)) * at_p;
}

ResidueVector rho_base_vector(std::uint32_t k, std::uint64_t n,
                              std::uint64_t guard) {
  require_k(k);
  require_modulus(n);
  const BigInt cost = BigInt(k) * n * n;
  if (cost > guard) {
    throw ResourceError("rho_base_vector: matrix recurrence needs " +
                        cost.str() + " operations, over the guard of " +
                        std::to_string(guard));
  }
  const CountMatrix m(n);
  ResidueVector v{n, 1, std::vector<BigInt>(n)};
  for (std::uint64_t x = 0; x < n; ++x) v.counts[mod_mul(x, x, n)] += 1;
  for (std::uint32_t i = 1; i < k; ++i) v = m.apply(v);
  return v;
}

BigInt rho_pow2(std::uint32_t k, std::uint64_t lambda, std::uint32_t s) {
  require_k(k);
  if (lambda % 2 == 0) throw DomainError("rho_pow2 requires odd lambda");
  if (s == 0) throw DomainError("rho_pow2 requires s >= 1");
  const std::uint32_t base_exponent = s < 3 ? s : 3;
  const std::uint64_t base_modulus = std::uint64_t{1} << base_exponent;
  const BigInt at_base =
      rho_base_vector(k, base_modulus).counts[lambda % base_modulus];
  if (s <= 3) return at_base;
  return pow_big(2, static_cast<std::uint64_t>(s - 3) * (k - 1)) * at_base;
}

std::string_view to_string(RhoPath path) {
  return path == RhoPath::formula ? "formula" : "oracle";
}

BigInt rho_coprime(std::uint32_t k, std::uint64_t lambda, const Factorization& f) {
  require_k(k);
  if (gcd(lambda % f.n(), f.n()) != 1) {
    throw DomainError("rho_coprime requires gcd(lambda, n) = 1");
  }
  BigInt result = 1;
  for (const auto& [p, e] : f.factors()) {
    result *= (p == 2) ? rho_pow2(k, lambda, e) : rho_odd_prime_power(k, lambda, p, e);
  }
  return result;
}

RhoResult rho_evaluate(std::uint32_t k, std::uint64_t lambda, std::uint64_t n,
                       std::uint64_t guard) {
  require_k(k);
  require_modulus(n);
  lambda %= n;
  if (gcd(lambda, n) == 1) {
    return {rho_coprime(k, lambda, factorize(n)), RhoPath::formula};
  }
  const BigInt needed = pow_big(n, k);
  if (needed > guard) {
    throw ResourceError(
        "no formula applies when gcd(lambda, n) > 1; the exhaustive count "
        "needs " + needed.str() + " tuple evaluations, over the guard of " +
        std::to_string(guard) + " (raise --max-enum)");
  }
  return {rho_brute(k, lambda, n, guard), RhoPath::oracle};
}

BigInt rho(std::uint32_t k, std::uint64_t lambda, std::uint64_t n,
           std::uint64_t guard) {
  return rho_evaluate(k, lambda, n, guard).value;
}

BigInt closed_form_rho2(std::uint32_t k, std::uint64_t lambda) {
  require_k(k);
  if (lambda % 2 == 0) throw DomainError("closed_form_rho2 requires odd lambda");
  return pow_big(2, k - 1);
}

BigInt trig_closed_form_rho4(std::uint32_t k, std::uint64_t lambda) {
  require_k(k);
  const std::int64_t kk = k;
  const Sqrt2Number main{pow2_rational(2 * kk - 2), 0};
  const Sqrt2Number wave = half_pow2(3 * kk - 2) * sin_quarter_pi(kk);
  switch (lambda % 4) {
    case 1: return to_exact_count(main + wave, "rho_{k,1}(4) closed form");
    case 3: return to_exact_count(main - wave, "rho_{k,3}(4) closed form");
    default: throw DomainError("trig_closed_form_rho4 requires odd lambda");
  }
}

BigInt trig_closed_form_rho8(std::uint32_t k, std::uint64_t lambda) {
  require_k(k);
  const std::int64_t kk = k;
  const Sqrt2Number scale{pow2_rational(2 * kk - 3), 0};
  const Sqrt2Number lead{pow2_rational(kk), 0};
  const Sqrt2Number wave = half_pow2(kk + 2) * sin_quarter_pi(kk);
  Sqrt2Number bracket;
  switch (lambda % 8) {
    case 1:
      bracket = lead + wave + sin_quarter_pi(kk + 1) * 2 - cos_quarter_pi(3 * kk + 1) * 2;
      break;
    case 3:
      bracket = lead - wave - (cos_quarter_pi(kk + 1) + cos_quarter_pi(3 * (kk + 1))) * 2;
      break;
    case 5:
      bracket = lead + wave - sin_quarter_pi(kk + 1) * 2 + cos_quarter_pi(3 * kk + 1) * 2;
      break;
    case 7:
      bracket = lead - wave - sin_quarter_pi(3 * kk + 1) * 2 + cos_quarter_pi(kk + 1) * 2;
      break;
    default:
      throw DomainError("trig_closed_form_rho8 requires lambda in {1,3,5,7}");
  }
  return to_exact_count(scale * bracket, "rho_{k,lambda}(8) closed form");
}

}  // namespace phik
