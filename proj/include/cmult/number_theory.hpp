#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cmult {

/// Euler's phi by trial-division factorization. Throws PreconditionError for k = 0.
std::uint64_t totient(std::uint64_t k);

/// phi(0..k_max) by the classic in-place sieve; entry 0 is 0.
std::vector<std::uint64_t> totient_table(std::uint64_t k_max);

/// Smallest prime factor of 0..n (entries 0 and 1 are 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Result of checking 2*phi(k)^2 > k (i.e. phi(k) > sqrt(k/2)) for 1 <= k <= k_max.
struct TotientBoundScan {
  std::uint64_t k_max = 0;
  /// k with 2*phi(k)^2 == k.
  std::vector<std::uint64_t> boundary_cases;
  /// k with 2*phi(k)^2 < k.
  std::vector<std::uint64_t> strict_violations;

  /// Every k where the strict inequality fails, ascending.
  std::vector<std::uint64_t> failures() const;
};

/// Parallel scan: factorizes each k from a smallest-prime-factor table.
TotientBoundScan totient_bound_check(std::uint64_t k_max);
/// Serial reference built on totient_table.
TotientBoundScan totient_bound_check_serial(std::uint64_t k_max);

/// Exponent of p in n!, sum of floor(n / p^i).
std::uint64_t legendre_exponent(std::uint64_t n, std::uint64_t p);

struct FactorialFactorization {
  std::uint64_t n = 0;
  /// (prime, exponent) for each prime <= n, ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> exponents;

  mpz_class reconstruct() const;
};

FactorialFactorization factorial_factorization(std::uint64_t n);

/// d(n!) = prod (e_p + 1).
mpz_class divisor_count_factorial(std::uint64_t n);

/// a^floor(c*k) / ((k+1) * d(k!)), exact. The exponent rounds c*k down.
/// Throws PreconditionError unless a > 1, c > 0 and k >= 1.
mpq_class growth_ratio(const mpq_class& a, const mpq_class& c, std::uint64_t k);

struct GrowthTable {
  mpq_class a, c;
  std::vector<mpq_class> ratios;  // ratios[i] is k = i + 1
  /// Smallest k from which the ratio strictly increases through k_max, if the
  /// final step is an increase.
  std::optional<std::uint64_t> turning_index;
};

GrowthTable growth_table(const mpq_class& a, const mpq_class& c, std::uint64_t k_max);

/// Parses "p", "p/q" or a plain decimal like "1.5" into an exact rational.
mpq_class parse_rational(const std::string& text);

/// Decimal approximation with `digits` significant digits, e.g. "9.92e3".
std::string approx_decimal(const mpq_class& q, int digits = 6);

}  // namespace cmult
