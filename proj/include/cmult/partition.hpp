#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmult {

using Part = std::uint64_t;

enum class Parity { Even, Odd };

/// A weakly decreasing sequence of positive integers. Indexes the conjugacy
/// classes of S_n by cycle type. Immutable once built.
class Partition {
 public:
  /// The empty partition of 0.
  Partition() = default;

  /// Sorts into weakly decreasing order; throws PreconditionError on a
  /// non-positive entry.
  explicit Partition(std::span<const long long> parts);
  Partition(std::initializer_list<long long> parts);

  /// Wraps parts that are already validated and weakly decreasing. Used by the
  /// enumerators; checked only in debug builds.
  static Partition from_sorted(std::vector<Part> parts);

  std::span<const Part> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Largest part, or 0 for the empty partition.
  Part first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Part> parts_;
  std::uint64_t size_ = 0;
};

/// Part value i -> multiplicity m_i (only i with m_i >= 1 are present).
using PartCountTable = std::map<Part, std::uint64_t>;

Partition make_partition(std::span<const long long> parts);
PartCountTable part_counts(const Partition& lambda);

// Enumeration --------------------------------------------------------------
//
// Order is reverse-lexicographic: (n), (n-1,1), (n-2,2), (n-2,1,1), ...

/// Steps through the partitions of n with every part <= max_part, in
/// reverse-lexicographic order. Cheap to copy; no allocation per step.
class PartitionCursor {
 public:
  PartitionCursor(std::uint64_t n, std::uint64_t max_part);
  explicit PartitionCursor(std::uint64_t n) : PartitionCursor(n, n) {}

  bool done() const noexcept { return done_; }
  std::span<const Part> current() const noexcept { return parts_; }
  void advance();

 private:
  std::vector<Part> parts_;
  bool done_ = false;
};

using PartitionVisitor = std::function<void(const Partition&)>;

void for_each_partition(std::uint64_t n, const PartitionVisitor& visit);
std::vector<Partition> enumerate_partitions(std::uint64_t n);

/// Same stream as enumerate_partitions, built in parallel by first part.
std::vector<Partition> enumerate_partitions_parallel(std::uint64_t n);

/// Number of partitions of n, by walking the enumeration.
std::uint64_t count_partitions(std::uint64_t n);

// Arithmetic ---------------------------------------------------------------

mpz_class factorial(std::uint64_t n);

/// |C_{S_n}(x)| for x of cycle type lambda: prod_i i^{m_i} * m_i!.
mpz_class centralizer_order(const Partition& lambda);
mpz_class centralizer_order(std::span<const Part> parts);

/// n!/C(lambda).
mpz_class class_size_sym(const Partition& lambda);
/// Same, with n! supplied by the caller (scans over a fixed n).
mpz_class class_size_sym(std::span<const Part> parts, const mpz_class& n_factorial);

Parity sign(const Partition& lambda);
Parity sign(std::span<const Part> parts);

/// (lambda0, lambda_1, lambda_2, ...). Requires lambda0 >= lambda_1. When the
/// inequality is strict, checks C(result) == lambda0 * C(lambda) and throws
/// std::logic_error if that ever fails.
Partition prepend(Part lambda0, const Partition& lambda);

bool all_parts_distinct(std::span<const Part> parts);

}  // namespace cmult
