#include "cmult/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "cmult/errors.hpp"

namespace cmult {

namespace {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui calls assume LP64");

void mul_ui64(mpz_class& acc, std::uint64_t v) {
  mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(v));
}

}  // namespace

Partition::Partition(std::span<const long long> parts) {
  parts_.reserve(parts.size());
  for (long long p : parts) {
    if (p <= 0) {
      throw PreconditionError("partition parts must be positive, got " + std::to_string(p));
    }
    parts_.push_back(static_cast<Part>(p));
    size_ += static_cast<Part>(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition::Partition(std::initializer_list<long long> parts)
    : Partition(std::span<const long long>(parts.begin(), parts.size())) {}

Partition Partition::from_sorted(std::vector<Part> parts) {
  assert(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
  assert(parts.empty() || parts.back() >= 1);
  Partition out;
  for (Part p : parts) out.size_ += p;
  out.parts_ = std::move(parts);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition make_partition(std::span<const long long> parts) { return Partition(parts); }

PartCountTable part_counts(const Partition& lambda) {
  PartCountTable counts;
  for (Part p : lambda.parts()) ++counts[p];
  return counts;
}

// --- enumeration -----------------------------------------------------------

PartitionCursor::PartitionCursor(std::uint64_t n, std::uint64_t max_part) {
  if (n == 0) return;  // single empty partition
  if (max_part == 0) {
    done_ = true;
    return;
  }
  const Part b = std::min<std::uint64_t>(n, max_part);
  parts_.assign(n / b, b);
  if (n % b) parts_.push_back(n % b);
}

void PartitionCursor::advance() {
  if (done_) return;
  std::uint64_t ones = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++ones;
  }
  if (parts_.empty()) {
    done_ = true;
    return;
  }
  const Part x = parts_.back();
  parts_.pop_back();
  std::uint64_t rem = x + ones;
  const Part y = x - 1;
  while (rem >= y) {
    parts_.push_back(y);
    rem -= y;
  }
  if (rem) parts_.push_back(rem);
}

void for_each_partition(std::uint64_t n, const PartitionVisitor& visit) {
  for (PartitionCursor c(n); !c.done(); c.advance()) {
    visit(Partition::from_sorted({c.current().begin(), c.current().end()}));
  }
}

std::vector<Partition> enumerate_partitions(std::uint64_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> enumerate_partitions_parallel(std::uint64_t n) {
  if (n == 0) return {Partition{}};
  // Bucket j holds the partitions with first part n - j, which is exactly the
  // j-th contiguous run of the reverse-lexicographic stream.
  std::vector<std::vector<Partition>> buckets(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < count; ++j) {
    const Part first = n - static_cast<Part>(j);
    auto& bucket = buckets[static_cast<std::size_t>(j)];
    for (PartitionCursor c(n - first, first); !c.done(); c.advance()) {
      std::vector<Part> parts;
      parts.reserve(c.current().size() + 1);
      parts.push_back(first);
      parts.insert(parts.end(), c.current().begin(), c.current().end());
      bucket.push_back(Partition::from_sorted(std::move(parts)));
    }
  }
  std::vector<Partition> out;
  for (auto& b : buckets) {
    std::move(b.begin(), b.end(), std::back_inserter(out));
  }
  return out;
}

std::uint64_t count_partitions(std::uint64_t n) {
  std::uint64_t count = 0;
  for (PartitionCursor c(n); !c.done(); c.advance()) ++count;
  return count;
}

// --- arithmetic ------------------------------------------------------------

mpz_class factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class centralizer_order(std::span<const Part> parts) {
  mpz_class result = 1;
  mpz_class scratch;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned long>(j - i);
    mpz_ui_pow_ui(scratch.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    result *= scratch;
    if (mult > 1) {
      mpz_fac_ui(scratch.get_mpz_t(), mult);
      result *= scratch;
    }
    i = j;
  }
  return result;
}

mpz_class centralizer_order(const Partition& lambda) { return centralizer_order(lambda.parts()); }

mpz_class class_size_sym(std::span<const Part> parts, const mpz_class& n_factorial) {
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), n_factorial.get_mpz_t(), centralizer_order(parts).get_mpz_t());
  return out;
}

mpz_class class_size_sym(const Partition& lambda) {
  return class_size_sym(lambda.parts(), factorial(lambda.size()));
}

Parity sign(std::span<const Part> parts) {
  std::uint64_t transpositions = 0;
  for (Part p : parts) transpositions += p - 1;
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

Parity sign(const Partition& lambda) { return sign(lambda.parts()); }

Partition prepend(Part lambda0, const Partition& lambda) {
  if (lambda0 == 0 || lambda0 < lambda.first()) {
    throw PreconditionError("prepend needs lambda0 >= first part (" + std::to_string(lambda.first()) +
                            "), got " + std::to_string(lambda0));
  }
  std::vector<Part> parts;
  parts.reserve(lambda.length() + 1);
  parts.push_back(lambda0);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  Partition out = Partition::from_sorted(std::move(parts));
  if (lambda0 > lambda.first()) {
    mpz_class expected = centralizer_order(lambda);
    mul_ui64(expected, lambda0);
    if (centralizer_order(out) != expected) {
      throw std::logic_error("prepend identity C((l0,l)) = l0*C(l) failed for " + out.to_string());
    }
  }
  return out;
}

bool all_parts_distinct(std::span<const Part> parts) {
  // parts are sorted, so duplicates are adjacent
  return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

}  // namespace cmult
