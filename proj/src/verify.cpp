#include "phik/verify.hpp"

#include <algorithm>
#include <sstream>

#include "phik/averaging.hpp"
#include "phik/core_arith.hpp"
#include "phik/errors.hpp"
#include "phik/menon.hpp"
#include "phik/phi.hpp"

namespace phik {

namespace {

class Checker {
 public:
  Checker(std::string_view suite, std::uint64_t limit) {
    out_.suite = suite;
    out_.limit = limit;
  }

  // Records a check; keeps only the first failure message.
  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    ++out_.checks;
    if (!ok && out_.passed) {
      out_.passed = false;
      out_.failure = describe();
    }
    return ok;
  }

  bool failed() const { return !out_.passed; }
  VerifyOutcome finish() { return std::move(out_); }

 private:
  VerifyOutcome out_;
};

std::string describe(std::string_view what, std::uint32_t k, std::uint64_t n,
                     const BigInt& a, const BigInt& b) {
  std::ostringstream s;
  s << what << " at k=" << k << ", n=" << n << ": " << a << " != " << b;
  return s.str();
}

bool fits(std::uint32_t k, std::uint64_t n, std::uint64_t guard) {
  return pow_big(n, k) <= guard;
}

}  // namespace

std::vector<std::string_view> suite_names() {
  return {"rho", "phi", "identities", "convolution", "menon-classic"};
}

VerifyOutcome run_suite(std::string_view suite, std::uint64_t limit,
                        std::uint64_t guard) {
  if (suite == "rho") return verify_rho(limit, guard);
  if (suite == "phi") return verify_phi(limit, guard);
  if (suite == "identities") return verify_identities(limit);
  if (suite == "convolution") return verify_convolution(limit);
  if (suite == "menon-classic") return verify_menon_classic(limit);
  throw DomainError("unknown verification suite '" + std::string(suite) + "'");
}

VerifyOutcome verify_rho(std::uint64_t limit, std::uint64_t guard) {
  Checker c("rho", limit);
  for (std::uint64_t n = 1; n <= limit && !c.failed(); ++n) {
    const Factorization f = factorize(n);
    for (std::uint32_t k = 1; k <= 6 && fits(k, n, guard); ++k) {
      const ResidueVector census = rho_brute_census(k, n, guard);
      BigInt total = 0;
      for (const auto& v : census.counts) total += v;
      c.expect(total == pow_big(n, k),
               [&] { return describe("census total", k, n, total, pow_big(n, k)); });
      for (std::uint64_t lambda = 0; lambda < n; ++lambda) {
        if (gcd(lambda, n) != 1) continue;
        const BigInt formula = rho_coprime(k, lambda, f);
        c.expect(formula == census.counts[lambda], [&] {
          return describe("rho formula vs oracle (lambda=" + std::to_string(lambda) + ")",
                          k, n, formula, census.counts[lambda]);
        });
      }
    }
  }
  // Closed forms at 2, 4, 8 against the matrix recurrence.
  for (std::uint32_t k = 1; k <= 32 && !c.failed(); ++k) {
    const auto r2 = rho_base_vector(k, 2);
    const auto r4 = rho_base_vector(k, 4);
    const auto r8 = rho_base_vector(k, 8);
    c.expect(closed_form_rho2(k, 1) == r2.counts[1],
             [&] { return describe("rho_{k,1}(2) closed form", k, 2, closed_form_rho2(k, 1), r2.counts[1]); });
    for (std::uint64_t lambda : {1, 3}) {
      const BigInt cf = trig_closed_form_rho4(k, lambda);
      c.expect(cf == r4.counts[lambda],
               [&] { return describe("rho(4) closed form", k, 4, cf, r4.counts[lambda]); });
    }
    for (std::uint64_t lambda : {1, 3, 5, 7}) {
      const BigInt cf = trig_closed_form_rho8(k, lambda);
      c.expect(cf == r8.counts[lambda],
               [&] { return describe("rho(8) closed form", k, 8, cf, r8.counts[lambda]); });
    }
  }
  return c.finish();
}

VerifyOutcome verify_phi(std::uint64_t limit, std::uint64_t guard) {
  Checker c("phi", limit);
  for (std::uint64_t n = 1; n <= limit && !c.failed(); ++n) {
    for (std::uint32_t k = 1; k <= 5; ++k) {
      if (k == 5 && n > 40) break;
      const BigInt closed = phi_k(k, n);
      const BigInt via_rho = phi_k_via_rho({k, n});
      c.expect(closed == via_rho,
               [&] { return describe("phi_k vs phi_k_via_rho", k, n, closed, via_rho); });
      if (fits(k, n, guard)) {
        const BigInt brute = phi_k_brute({k, n}, guard);
        c.expect(closed == brute,
                 [&] { return describe("phi_k vs phi_k_brute", k, n, closed, brute); });
      }
    }
  }
  return c.finish();
}

VerifyOutcome verify_identities(std::uint64_t limit) {
  Checker c("identities", limit);
  const std::uint64_t mult_bound = 2 * limit;
  const std::uint64_t div_bound = 5 * limit;
  const std::uint64_t gcd_bound = limit;
  const std::uint64_t power_bound = std::max<std::uint64_t>(1, limit / 2);
  const std::uint64_t parity_bound = 10 * limit;
  const std::uint64_t table_size = std::max({mult_bound, div_bound, parity_bound,
                                             gcd_bound * gcd_bound, std::uint64_t{1}});

  for (std::uint32_t k = 1; k <= 4 && !c.failed(); ++k) {
    const std::vector<BigInt> table = phi_k_table(k, table_size);
    auto at = [&](std::uint64_t n) -> const BigInt& { return table[n - 1]; };

    for (std::uint64_t m = 1; m <= mult_bound; ++m) {
      for (std::uint64_t n = 1; m * n <= mult_bound; ++n) {
        if (gcd(m, n) != 1) continue;
        c.expect(at(m * n) == at(m) * at(n), [&] {
          return describe("multiplicativity (m=" + std::to_string(m) + ")", k, n,
                          at(m * n), at(m) * at(n));
        });
      }
    }
    for (std::uint64_t n = 1; n <= div_bound; ++n) {
      for (std::uint64_t m = n; m <= div_bound; m += n) {
        c.expect(at(m) % at(n) == 0, [&] {
          return describe("divisibility Phi(n) | Phi(m), m=" + std::to_string(m), k, n,
                          at(m) % at(n), BigInt(0));
        });
      }
    }
    if (k <= 3) {
      for (std::uint64_t m = 1; m <= gcd_bound; ++m) {
        for (std::uint64_t n = 1; n <= gcd_bound; ++n) {
          const std::uint64_t d = gcd(m, n);
          const BigInt lhs = at(m * n) * at(d);
          const BigInt rhs = pow_big(d, k) * at(m) * at(n);
          c.expect(lhs == rhs, [&] {
            return describe("gcd identity (m=" + std::to_string(m) + ")", k, n, lhs, rhs);
          });
        }
      }
      for (std::uint64_t n = 1; n <= power_bound; ++n) {
        for (std::uint32_t m = 1; m <= 4; ++m) {
          const BigInt lhs = phi_k(k, checked_pow(n, m));
          const BigInt rhs = pow_big(n, static_cast<std::uint64_t>(k) * (m - 1)) * at(n);
          c.expect(lhs == rhs, [&] {
            return describe("power identity (m=" + std::to_string(m) + ")", k, n, lhs, rhs);
          });
        }
      }
    }
    for (std::uint64_t n = 3; n <= parity_bound; ++n) {
      c.expect(at(n) % 2 == 0,
               [&] { return describe("parity", k, n, at(n) % 2, BigInt(0)); });
    }
  }

  for (std::uint32_t k : {4U, 8U, 12U}) {
    for (std::uint64_t n = 1; n <= div_bound && !c.failed(); ++n) {
      const Factorization f = factorize(n);
      const BigInt direct = phi_k(k, f);
      const BigInt jordan = phi_k_via_jordan(k, f);
      c.expect(direct == jordan,
               [&] { return describe("Jordan form", k, n, direct, jordan); });
      if (k % 8 == 4) {
        const RatioSides sides = phi_ratio_check(k, f);
        c.expect(sides.equal(), [&] {
          return "ratio identity at k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                 ": " + to_decimal(sides.lhs) + " != " + to_decimal(sides.rhs);
        });
      }
    }
  }
  return c.finish();
}

VerifyOutcome verify_convolution(std::uint64_t limit) {
  Checker c("convolution", limit);
  for (std::uint32_t k : {2U, 4U}) {
    const ConvolutionReport r = convolution_check(k, std::max<std::uint64_t>(1, limit));
    c.expect(r.ok(), [&] {
      return describe("id_k * g_k vs Phi_k", k, r.first_mismatch->n,
                      r.first_mismatch->convolution, r.first_mismatch->phi);
    });
  }
  return c.finish();
}

VerifyOutcome verify_menon_classic(std::uint64_t limit) {
  Checker c("menon-classic", limit);
  for (std::uint64_t n = 1; n <= limit && !c.failed(); ++n) {
    const MenonClassic m = menon_classic(n);
    c.expect(m.lhs == m.rhs, [&] { return describe("Menon identity", 1, n, m.lhs, m.rhs); });
  }
  return c.finish();
}

}  // namespace phik
