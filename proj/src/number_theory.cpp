#include "cmult/number_theory.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include <omp.h>

#include "cmult/errors.hpp"

namespace cmult {

std::uint64_t totient(std::uint64_t k) {
  if (k == 0) throw PreconditionError("totient is defined for k >= 1");
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

std::vector<std::uint64_t> totient_table(std::uint64_t k_max) {
  std::vector<std::uint64_t> phi(k_max + 1);
  for (std::uint64_t i = 0; i <= k_max; ++i) phi[i] = i;
  for (std::uint64_t p = 2; p <= k_max; ++p) {
    if (phi[p] != p) continue;  // composite, already touched
    for (std::uint64_t m = p; m <= k_max; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t m = i; m <= n; m += i) {
      if (!spf[m]) spf[m] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t m = i * i; m <= n; m += i) composite[m] = true;
  }
  return primes;
}

std::vector<std::uint64_t> TotientBoundScan::failures() const {
  std::vector<std::uint64_t> all;
  std::merge(boundary_cases.begin(), boundary_cases.end(), strict_violations.begin(),
             strict_violations.end(), std::back_inserter(all));
  return all;
}

namespace {

// 2*phi^2 vs k, exact (128-bit product).
void classify(std::uint64_t k, std::uint64_t phi, TotientBoundScan& scan) {
  const unsigned __int128 lhs = static_cast<unsigned __int128>(2) * phi * phi;
  if (lhs == k) {
    scan.boundary_cases.push_back(k);
  } else if (lhs < k) {
    scan.strict_violations.push_back(k);
  }
}

}  // namespace

TotientBoundScan totient_bound_check_serial(std::uint64_t k_max) {
  if (k_max == 0) throw PreconditionError("k_max must be at least 1");
  TotientBoundScan scan;
  scan.k_max = k_max;
  const auto phi = totient_table(k_max);
  for (std::uint64_t k = 1; k <= k_max; ++k) classify(k, phi[k], scan);
  return scan;
}

TotientBoundScan totient_bound_check(std::uint64_t k_max) {
  if (k_max == 0) throw PreconditionError("k_max must be at least 1");
  const auto spf = smallest_prime_factors(k_max);
  TotientBoundScan scan;
  scan.k_max = k_max;
  const auto last = static_cast<std::int64_t>(k_max);
#pragma omp parallel
  {
    TotientBoundScan local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 1; i <= last; ++i) {
      auto k = static_cast<std::uint64_t>(i);
      std::uint64_t phi = k, rest = k;
      while (rest > 1) {
        const std::uint64_t p = spf[rest];
        phi -= phi / p;
        while (rest % p == 0) rest /= p;
      }
      classify(k, phi, local);
    }
#pragma omp critical(cmult_totient_merge)
    {
      scan.boundary_cases.insert(scan.boundary_cases.end(), local.boundary_cases.begin(),
                                 local.boundary_cases.end());
      scan.strict_violations.insert(scan.strict_violations.end(), local.strict_violations.begin(),
                                    local.strict_violations.end());
    }
  }
  std::sort(scan.boundary_cases.begin(), scan.boundary_cases.end());
  std::sort(scan.strict_violations.begin(), scan.strict_violations.end());
  return scan;
}

std::uint64_t legendre_exponent(std::uint64_t n, std::uint64_t p) {
  std::uint64_t e = 0;
  for (std::uint64_t q = n / p; q; q /= p) e += q;
  return e;
}

mpz_class FactorialFactorization::reconstruct() const {
  mpz_class out = 1, pw;
  for (const auto& [p, e] : exponents) {
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    out *= pw;
  }
  return out;
}

FactorialFactorization factorial_factorization(std::uint64_t n) {
  FactorialFactorization f;
  f.n = n;
  for (std::uint64_t p : primes_up_to(n)) f.exponents.emplace_back(p, legendre_exponent(n, p));
  return f;
}

mpz_class divisor_count_factorial(std::uint64_t n) {
  mpz_class d = 1;
  for (const auto& entry : factorial_factorization(n).exponents) {
    d *= static_cast<unsigned long>(entry.second + 1);
  }
  return d;
}

mpq_class growth_ratio(const mpq_class& a, const mpq_class& c, std::uint64_t k) {
  if (a <= 1) throw PreconditionError("growth ratio needs a > 1");
  if (c <= 0) throw PreconditionError("growth ratio needs c > 0");
  if (k == 0) throw PreconditionError("growth ratio needs k >= 1");

  // floor(c*k) for c = num/den >= 0
  mpq_class ck = c * static_cast<unsigned long>(k);
  mpz_class exponent;
  mpz_fdiv_q(exponent.get_mpz_t(), ck.get_num_mpz_t(), ck.get_den_mpz_t());
  if (!exponent.fits_ulong_p()) throw PreconditionError("exponent c*k too large");
  const unsigned long e = exponent.get_ui();

  mpq_class power;
  mpz_pow_ui(power.get_num_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(power.get_den_mpz_t(), a.get_den_mpz_t(), e);
  power.canonicalize();

  const mpz_class denom = divisor_count_factorial(k) * static_cast<unsigned long>(k + 1);
  mpq_class ratio = power / mpq_class(denom);
  ratio.canonicalize();
  return ratio;
}

GrowthTable growth_table(const mpq_class& a, const mpq_class& c, std::uint64_t k_max) {
  if (k_max == 0) throw PreconditionError("k_max must be at least 1");
  GrowthTable t;
  t.a = a;
  t.c = c;
  t.ratios.resize(k_max);
  const auto last = static_cast<std::int64_t>(k_max);
  // Rows are independent; each thread writes its own slot.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 1; k <= last; ++k) {
    t.ratios[static_cast<std::size_t>(k - 1)] = growth_ratio(a, c, static_cast<std::uint64_t>(k));
  }
  if (k_max >= 2 && t.ratios[k_max - 1] > t.ratios[k_max - 2]) {
    std::uint64_t k = k_max - 1;  // ratio(k) < ratio(k+1) holds here
    while (k >= 2 && t.ratios[k - 2] < t.ratios[k - 1]) --k;
    t.turning_index = k;
  }
  return t;
}

mpq_class parse_rational(const std::string& text) {
  auto bad = [&] { return PreconditionError("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.empty() || !std::all_of(frac.begin(), frac.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw bad();
  }
  mpz_class num, den;
  if (num.set_str((whole.empty() || whole == "-" ? whole + "0" : whole) + frac, 10) != 0) throw bad();
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string approx_decimal(const mpq_class& q, int digits) {
  if (q == 0) return "0";
  mpf_class f(q, 256);
  mp_exp_t exp10 = 0;
  char* raw = mpf_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), f.get_mpf_t());
  std::string mant(raw);
  void (*freefunc)(void*, std::size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, std::char_traits<char>::length(raw) + 1);

  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

}  // namespace cmult
