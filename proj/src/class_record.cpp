#include "cmult/class_record.hpp"

namespace cmult {

std::string GroupTag::to_string() const {
  switch (kind) {
    case GroupKind::Sym:
      return "S" + std::to_string(n);
    case GroupKind::Alt:
      return "A" + std::to_string(n);
    case GroupKind::Oracle:
      break;
  }
  return oracle_id;
}

MultiplicityReport MultiplicityReport::from_histogram(GroupTag group, SizeHistogram histogram) {
  MultiplicityReport r;
  r.group = std::move(group);
  r.histogram = std::move(histogram);
  for (const auto& [size, count] : r.histogram) {
    if (count > r.max_multiplicity) {
      r.max_multiplicity = count;
      r.argmax_sizes.clear();
    }
    if (count == r.max_multiplicity) r.argmax_sizes.push_back(size);
  }
  return r;
}

std::uint64_t MultiplicityReport::class_count() const {
  std::uint64_t total = 0;
  for (const auto& entry : histogram) total += entry.second;
  return total;
}

mpz_class MultiplicityReport::total_mass() const {
  mpz_class total = 0;
  for (const auto& [size, count] : histogram) total += size * static_cast<unsigned long>(count);
  return total;
}

bool same_statistics(const MultiplicityReport& a, const MultiplicityReport& b) {
  return a.histogram == b.histogram && a.max_multiplicity == b.max_multiplicity &&
         a.argmax_sizes == b.argmax_sizes;
}

void merge_into(SizeHistogram& into, const SizeHistogram& from) {
  for (const auto& [size, count] : from) into[size] += count;
}

}  // namespace cmult
