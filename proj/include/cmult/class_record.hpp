#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cmult/partition.hpp"
#include "cmult/permutation.hpp"

namespace cmult {

enum class GroupKind { Sym, Alt, Oracle };

struct GroupTag {
  GroupKind kind = GroupKind::Sym;
  std::uint64_t n = 0;   // degree for Sym/Alt
  std::string oracle_id; // free-form label for Oracle groups

  static GroupTag sym(std::uint64_t n) { return {GroupKind::Sym, n, {}}; }
  static GroupTag alt(std::uint64_t n) { return {GroupKind::Alt, n, {}}; }
  static GroupTag oracle(std::string id) { return {GroupKind::Oracle, 0, std::move(id)}; }

  /// "S5", "A38", or the oracle id.
  std::string to_string() const;

  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

enum class SplitLabel { First, Second };

struct ClassRecord {
  GroupTag group;
  std::variant<Partition, Permutation> rep;
  std::optional<SplitLabel> split;
  mpz_class class_size;
};

using SizeHistogram = std::map<mpz_class, std::uint64_t>;

/// Class-size histogram of one group plus its largest multiplicity m and the
/// sizes attaining it (ascending).
struct MultiplicityReport {
  GroupTag group;
  SizeHistogram histogram;
  std::uint64_t max_multiplicity = 0;
  std::vector<mpz_class> argmax_sizes;

  static MultiplicityReport from_histogram(GroupTag group, SizeHistogram histogram);

  std::uint64_t class_count() const;
  /// Sum of size * count; equals the group order.
  mpz_class total_mass() const;
};

/// Histogram, m and argmax agree (group tags are ignored).
bool same_statistics(const MultiplicityReport& a, const MultiplicityReport& b);

void merge_into(SizeHistogram& into, const SizeHistogram& from);

}  // namespace cmult
