#pragma once

#include <cstdint>
#include <vector>

#include "cmult/class_record.hpp"
#include "cmult/partition.hpp"

namespace cmult {

/// Whether the S_n class of an even cycle type breaks into two A_n classes:
/// all parts odd and pairwise distinct, with n >= 2. Throws on odd lambda.
bool splits_in_alt(const Partition& lambda);

/// The A_n classes lying inside the S_n class of lambda: two records of half
/// the S_n size when lambda splits, otherwise one record of the full size.
std::vector<ClassRecord> alt_classes(const Partition& lambda);

/// Class-size multiplicity report of S_n or A_n computed from partitions.
/// Parallel over the first part; the result does not depend on the schedule.
/// A_0, A_1, A_2 (and S_0, S_1) give the trivial report {1:1}.
MultiplicityReport multiplicity_report(GroupKind kind, std::uint64_t n);

/// Single-threaded reference for multiplicity_report.
MultiplicityReport multiplicity_report_serial(GroupKind kind, std::uint64_t n);

}  // namespace cmult
