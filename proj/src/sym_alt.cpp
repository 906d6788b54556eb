#include "cmult/sym_alt.hpp"

#include <algorithm>

#include <omp.h>

#include "cmult/errors.hpp"

namespace cmult {

namespace {

bool splits_unchecked(std::span<const Part> parts, std::uint64_t n) {
  if (n < 2) return false;  // A_n = S_n, nothing to split into
  return all_parts_distinct(parts) &&
         std::all_of(parts.begin(), parts.end(), [](Part p) { return p % 2 == 1; });
}

void require_even(const Partition& lambda) {
  if (sign(lambda) != Parity::Even) {
    throw PreconditionError("cycle type " + lambda.to_string() + " is odd, not in A_n");
  }
}

void require_sym_or_alt(GroupKind kind) {
  if (kind == GroupKind::Oracle) {
    throw PreconditionError("multiplicity_report expects sym or alt");
  }
}

// Adds the classes of one cycle type to a histogram.
void tally(GroupKind kind, std::span<const Part> parts, std::uint64_t n, const mpz_class& n_factorial,
           SizeHistogram& hist) {
  if (kind == GroupKind::Sym) {
    ++hist[class_size_sym(parts, n_factorial)];
    return;
  }
  if (sign(parts) != Parity::Even) return;
  mpz_class size = class_size_sym(parts, n_factorial);
  if (splits_unchecked(parts, n)) {
    mpz_divexact_ui(size.get_mpz_t(), size.get_mpz_t(), 2);
    hist[size] += 2;
  } else {
    ++hist[size];
  }
}

GroupTag tag_for(GroupKind kind, std::uint64_t n) {
  return kind == GroupKind::Sym ? GroupTag::sym(n) : GroupTag::alt(n);
}

}  // namespace

bool splits_in_alt(const Partition& lambda) {
  require_even(lambda);
  return splits_unchecked(lambda.parts(), lambda.size());
}

std::vector<ClassRecord> alt_classes(const Partition& lambda) {
  require_even(lambda);
  const GroupTag tag = GroupTag::alt(lambda.size());
  mpz_class size = class_size_sym(lambda);
  if (!splits_unchecked(lambda.parts(), lambda.size())) {
    return {ClassRecord{tag, lambda, std::nullopt, size}};
  }
  mpz_divexact_ui(size.get_mpz_t(), size.get_mpz_t(), 2);
  return {ClassRecord{tag, lambda, SplitLabel::First, size},
          ClassRecord{tag, lambda, SplitLabel::Second, size}};
}

MultiplicityReport multiplicity_report_serial(GroupKind kind, std::uint64_t n) {
  require_sym_or_alt(kind);
  const mpz_class n_factorial = factorial(n);
  SizeHistogram hist;
  for (PartitionCursor c(n); !c.done(); c.advance()) {
    tally(kind, c.current(), n, n_factorial, hist);
  }
  return MultiplicityReport::from_histogram(tag_for(kind, n), std::move(hist));
}

MultiplicityReport multiplicity_report(GroupKind kind, std::uint64_t n) {
  require_sym_or_alt(kind);
  if (n == 0) return multiplicity_report_serial(kind, n);
  const mpz_class n_factorial = factorial(n);
  SizeHistogram total;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    SizeHistogram local;
    std::vector<Part> parts;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t j = 0; j < count; ++j) {
      const Part first = n - static_cast<Part>(j);
      for (PartitionCursor c(n - first, first); !c.done(); c.advance()) {
        parts.assign(1, first);
        parts.insert(parts.end(), c.current().begin(), c.current().end());
        tally(kind, parts, n, n_factorial, local);
      }
    }
#pragma omp critical(cmult_histogram_merge)
    merge_into(total, local);
  }
  return MultiplicityReport::from_histogram(tag_for(kind, n), std::move(total));
}

}  // namespace cmult
