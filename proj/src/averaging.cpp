#include "phik/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "phik/core_arith.hpp"
#include "phik/errors.hpp"
#include "phik/phi.hpp"

namespace phik {

namespace {

void require_budget(std::uint64_t x, std::uint64_t budget) {
  if (x > budget) {
    throw ResourceError("table over 1.." + std::to_string(x) +
                        " exceeds the budget of " + std::to_string(budget) +
                        " entries");
  }
}

BigInt phi_k_from_table(std::uint32_t k, std::uint64_t n, const SpfTable* spf) {
  return phi_k(k, factorize(n, spf));
}

// Splits [lo, hi] into `parts` contiguous chunks and maps each through
// `work(chunk_lo, chunk_hi)`, returning results in chunk order.
template <typename Work>
auto map_chunks(std::uint64_t lo, std::uint64_t hi, unsigned parts, Work work) {
  using Result = decltype(work(lo, hi));
  parts = std::max(1U, parts);
  const std::uint64_t length = hi - lo + 1;
  const std::uint64_t step = (length + parts - 1) / parts;
  std::vector<std::future<Result>> pending;
  for (std::uint64_t a = lo; a <= hi; a += step) {
    const std::uint64_t b = std::min(hi, a + step - 1);
    pending.push_back(std::async(parts > 1 ? std::launch::async : std::launch::deferred,
                                 work, a, b));
  }
  std::vector<Result> results;
  results.reserve(pending.size());
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

BigInt sum_range(std::uint32_t k, std::uint64_t lo, std::uint64_t hi,
                 const SpfTable* spf, unsigned threads) {
  if (lo > hi) return 0;
  const auto sums = map_chunks(lo, hi, threads, [&](std::uint64_t a, std::uint64_t b) {
    BigInt s = 0;
    for (std::uint64_t n = a; n <= b; ++n) s += phi_k_from_table(k, n, spf);
    return s;
  });
  BigInt total = 0;
  for (const auto& s : sums) total += s;
  return total;
}

std::optional<SpfTable> spf_for(std::uint64_t x) {
  if (x < 2) return std::nullopt;
  return build_spf(x);
}

// Upper bound on sum_{p > P} 1/p^2, P >= 13: integers coprime to
// W = 2*3*5*7*11*13 occupy phi(W) = 5760 slots in every block of W.
long double prime_square_tail(std::uint64_t bound) {
  constexpr long double kW = 30030.0L;
  constexpr long double kPhiW = 5760.0L;
  const auto p = static_cast<long double>(bound);
  return kPhiW * (1.0L / (p * p) + 1.0L / (kW * p));
}

// Every factor below is 1 - u(p) with |u(p)| <= (1 + b) / p^2 for p > bound,
// where b = 1 for k = 2 and b = 1/bound for k >= 4.
long double log_tail(std::uint32_t k, std::uint64_t bound) {
  const auto p = static_cast<long double>(bound);
  const long double b = (k == 2) ? 1.0L : 1.0L / p;
  const long double u_max = (1.0L + b) / (p * p);
  const long double c = (1.0L + b) / (1.0L - u_max);
  return c * prime_square_tail(bound);
}

long double value_tail(long double prefactor, std::uint32_t k, std::uint64_t bound) {
  return prefactor * std::expm1(log_tail(k, bound));
}

std::uint64_t bound_for_tolerance(long double prefactor, std::uint32_t k,
                                  long double tol) {
  std::uint64_t hi = 64;
  while (value_tail(prefactor, k, hi) > tol) {
    if (hi > (std::uint64_t{1} << 40)) {
      throw ResourceError("tolerance too small for a truncated Euler product");
    }
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (value_tail(prefactor, k, mid) > tol ? lo : hi) = mid;
  }
  return hi;
}

long double log1m(long double u) {
  if (std::fabs(u) < 1e-5L) return -u - u * u / 2 - u * u * u / 3;
  return std::log1p(-u);
}

// prefactor * prod_{2 < p <= bound} (1 - u(p)), summed in log space.
template <typename Deficit>
EulerConstant truncated_product(std::uint32_t k, long double prefactor,
                                std::uint64_t bound, Deficit deficit) {
  long double sum = 0;
  long double carry = 0;
  for_each_prime(bound, [&](std::uint64_t p) {
    if (p == 2) return;
    const long double term = log1m(deficit(p)) - carry;
    const long double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  });
  EulerConstant c;
  c.k = k;
  c.prime_bound = bound;
  c.value = prefactor * std::exp(sum);
  c.tail_bound = c.value * std::expm1(log_tail(k, bound));
  return c;
}

std::uint64_t resolve_bound(long double prefactor, std::uint32_t k, long double tol,
                            std::optional<std::uint64_t> prime_bound) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (prime_bound) {
    if (*prime_bound < 13) throw DomainError("prime_bound must be >= 13");
    return *prime_bound;
  }
  return bound_for_tolerance(prefactor, k, tol);
}

}  // namespace

std::vector<BigInt> phi_k_table(std::uint32_t k, std::uint64_t x, unsigned threads,
                                std::uint64_t budget) {
  if (k == 0) throw DomainError("phi_k_table requires k >= 1");
  if (x == 0) throw DomainError("phi_k_table requires x >= 1");
  require_budget(x, budget);
  const auto spf = spf_for(x);
  const SpfTable* table = spf ? &*spf : nullptr;
  auto chunks = map_chunks(1, x, threads, [&](std::uint64_t a, std::uint64_t b) {
    std::vector<BigInt> part;
    part.reserve(b - a + 1);
    for (std::uint64_t n = a; n <= b; ++n) part.push_back(phi_k_from_table(k, n, table));
    return part;
  });
  std::vector<BigInt> out;
  out.reserve(x);
  for (auto& part : chunks) {
    for (auto& v : part) out.push_back(std::move(v));
  }
  return out;
}

BigInt partial_sum(std::uint32_t k, std::uint64_t x, unsigned threads,
                   std::uint64_t budget) {
  if (k == 0) throw DomainError("partial_sum requires k >= 1");
  if (x == 0) throw DomainError("partial_sum requires x >= 1");
  require_budget(x, budget);
  const auto spf = spf_for(x);
  return sum_range(k, 1, x, spf ? &*spf : nullptr, threads);
}

EulerConstant euler_constant(std::uint32_t k, long double tol,
                             std::optional<std::uint64_t> prime_bound) {
  if (k == 0) throw DomainError("euler_constant requires k >= 1");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (k % 2 == 1) {
    const long double pi = std::numbers::pi_v<long double>;
    return {k, 6.0L / (pi * pi), 0, 0.0L};
  }
  const long double prefactor = 0.75L;
  const std::uint64_t bound = resolve_bound(prefactor, k, tol, prime_bound);
  const auto half = static_cast<long double>(k / 2);
  return truncated_product(k, prefactor, bound, [&](std::uint64_t prime) {
    const auto p = static_cast<long double>(prime);
    // (-1)^{k(p-1)/4}: k(p-1)/4 = (k/2) * ((p-1)/2).
    const bool negative = ((k / 2) % 2 == 1) && (((prime - 1) / 2) % 2 == 1);
    const long double sign = negative ? -1.0L : 1.0L;
    return 1.0L / (p * p) + sign * (p - 1) / std::pow(p, half + 2);
  });
}

Rational corollary_prefactor(std::uint32_t k) {
  if (k == 2) return Rational(1, 4);
  if (k == 4) return Rational(3, 20);
  throw DomainError("corollary_constant is defined only for k = 2 and k = 4");
}

EulerConstant corollary_constant(std::uint32_t k, long double tol,
                                 std::optional<std::uint64_t> prime_bound) {
  const long double prefactor = corollary_prefactor(k).convert_to<long double>();
  const std::uint64_t bound = resolve_bound(prefactor, k, tol, prime_bound);
  if (k == 2) {
    return truncated_product(k, prefactor, bound, [](std::uint64_t prime) {
      const auto p = static_cast<long double>(prime);
      const long double p2 = p * p;
      const long double p3 = p2 * p;
      if (prime % 4 == 1) return 2.0L / p2 - 1.0L / p3;
      return 1.0L / p3;
    });
  }
  return truncated_product(k, prefactor, bound, [](std::uint64_t prime) {
    const auto p = static_cast<long double>(prime);
    const long double p2 = p * p;
    return 1.0L / p2 + 1.0L / (p2 * p) - 1.0L / (p2 * p2);
  });
}

GkCoefficient g_k_table(std::uint32_t k, std::uint64_t limit) {
  if (k == 0 || k % 2 != 0) throw DomainError("g_k_table requires even k");
  if (limit == 0) throw DomainError("g_k_table requires limit >= 1");
  const auto spf = spf_for(limit);
  GkCoefficient g{k, {}};
  g.values.reserve(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const Factorization f = factorize(n, spf ? &*spf : nullptr);
    BigInt value = 1;
    for (const auto& [p, e] : f.factors()) {
      if (e > 1) {
        value = 0;
        break;
      }
      if (p == 2) {
        value *= -pow_big(2, k - 1);
      } else {
        const bool negative = ((k / 2) % 2 == 1) && (((p - 1) / 2) % 2 == 1);
        BigInt signed_term = pow_big(p, k / 2 - 1) * (p - 1);
        if (negative) signed_term = -signed_term;
        value *= -pow_big(p, k - 1) - signed_term;
      }
    }
    g.values.push_back(std::move(value));
  }
  return g;
}

ConvolutionReport convolution_check(std::uint32_t k, std::uint64_t limit) {
  const GkCoefficient g = g_k_table(k, limit);
  const std::vector<BigInt> phi = phi_k_table(k, limit);
  std::vector<BigInt> id_k(limit + 1);
  for (std::uint64_t e = 1; e <= limit; ++e) id_k[e] = pow_big(e, k);
  std::vector<BigInt> conv(limit + 1);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    const BigInt& gd = g(d);
    if (gd == 0) continue;
    for (std::uint64_t e = 1; d * e <= limit; ++e) conv[d * e] += gd * id_k[e];
  }
  ConvolutionReport report{k, limit, 0, std::nullopt};
  for (std::uint64_t n = 1; n <= limit; ++n) {
    ++report.checked;
    if (conv[n] != phi[n - 1]) {
      report.first_mismatch = ConvolutionReport::Mismatch{n, conv[n], phi[n - 1]};
      break;
    }
  }
  return report;
}

long double error_scale(std::uint32_t k, std::uint64_t x) {
  const auto xr = static_cast<long double>(x);
  const long double log_x = std::log(xr);
  const long double xk = std::pow(xr, static_cast<long double>(k));
  if (k % 2 == 1) {
    return xk * std::pow(log_x, 2.0L / 3.0L) * std::pow(std::log(log_x), 4.0L / 3.0L);
  }
  return xk * log_x;
}

std::vector<AveragingRow> averaging_report(std::uint32_t k,
                                           std::span<const std::uint64_t> xs,
                                           const EulerConstant& constant,
                                           unsigned threads) {
  if (constant.k != k) throw DomainError("constant was computed for another k");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 3) throw DomainError("averaging_report requires every x >= 3");
    if (i > 0 && xs[i] <= xs[i - 1]) {
      throw DomainError("averaging_report requires ascending x values");
    }
  }
  std::vector<AveragingRow> rows;
  if (xs.empty()) return rows;
  require_budget(xs.back(), kDefaultTableBudget);
  const SpfTable spf = build_spf(xs.back());

  BigInt running = 0;
  std::uint64_t done = 0;
  for (const std::uint64_t x : xs) {
    running += sum_range(k, done + 1, x, &spf, threads);
    done = x;
    AveragingRow row;
    row.x = x;
    row.partial_sum = running;
    row.main_term = constant.value *
                    std::pow(static_cast<long double>(x), static_cast<long double>(k + 1)) /
                    static_cast<long double>(k + 1);
    const long double diff = to_real(running) - row.main_term;
    row.rel_error = diff / row.main_term;
    row.error_ratio = diff / error_scale(k, x);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AveragingRow> averaging_report(std::uint32_t k,
                                           std::span<const std::uint64_t> xs,
                                           long double tol, unsigned threads) {
  return averaging_report(k, xs, euler_constant(k, tol), threads);
}

std::vector<MinimalOrderRow> minimal_order_scan(std::uint32_t k,
                                                std::uint32_t prime_count,
                                                bool experimental) {
  if (k == 0) throw DomainError("minimal_order_scan requires k >= 1");
  if (k % 2 == 0 && !experimental) {
    throw DomainError("even k has no known minimal order; use experimental mode");
  }
  if (prime_count < 3) throw DomainError("the scan starts at the primorial 30");

  std::vector<MinimalOrderRow> rows;
  std::uint64_t n = 1;
  long double density = 1;  // Phi_k(n) / n^k
  std::uint64_t p = 1;
  for (std::uint32_t i = 1; i <= prime_count; ++i) {
    do {
      ++p;
    } while (!is_prime(p));
    n = checked_mul(n, p);
    density *= to_real(phi_k_prime_power(k, p, 1)) / to_real(pow_big(p, k));
    if (i >= 3) {
      rows.push_back({i, n, density * std::log(std::log(static_cast<long double>(n)))});
    }
  }
  return rows;
}

long double minimal_order_limit() {
  return std::exp(-std::numbers::egamma_v<long double>);
}

}  // namespace phik
