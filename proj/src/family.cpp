#include "cmult/family.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <omp.h>

#include "cmult/sym_alt.hpp"

namespace cmult {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

std::uint64_t pow21(std::uint64_t e) {
  std::uint64_t v = 1;
  while (e--) v *= 21;
  return v;
}

void require_odd_k(std::uint64_t k) {
  if (k == 0 || k % 2 == 0) {
    throw PreconditionError("k must be an odd positive integer, got " + std::to_string(k));
  }
}

const char* parity_name(std::uint64_t n) { return n % 2 == 0 ? "even" : "odd"; }

}  // namespace

std::array<Part, 3> block_parts(BlockChoice choice) {
  if (choice == BlockChoice::A) return {10, 9, 1};
  return {15, 3, 2};
}

std::string FamilyMember::word_string() const {
  std::string s;
  for (BlockChoice c : word) s += c == BlockChoice::A ? 'A' : 'B';
  return s;
}

std::uint64_t choose_k(std::uint64_t multiplicity) {
  if (multiplicity == 0) throw PreconditionError("M must be positive");
  // bit_width(M) is the least k with 2^k > M
  const auto k = static_cast<std::uint64_t>(std::bit_width(multiplicity));
  return k % 2 == 1 ? k : k + 1;
}

std::uint64_t branch_length(std::uint64_t k, Branch branch) { return branch == Branch::P ? k : k + 1; }

std::vector<FamilyMember> build_family(std::uint64_t k, Branch branch) {
  require_odd_k(k);
  if (k > kMaxFamilyK) {
    throw PreconditionError("k = " + std::to_string(k) + " exceeds the supported maximum " +
                            std::to_string(kMaxFamilyK));
  }
  const std::uint64_t len = branch_length(k, branch);
  const std::uint64_t count = std::uint64_t{1} << len;
  std::vector<FamilyMember> members(count);
  const auto last = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < last; ++w) {
    FamilyMember& m = members[static_cast<std::size_t>(w)];
    m.word.resize(len);
    std::vector<Part> parts;
    parts.reserve(3 * len);
    for (std::uint64_t j = 0; j < len; ++j) {
      // most significant bit first gives lexicographic order with A = 0
      const bool b = (static_cast<std::uint64_t>(w) >> (len - 1 - j)) & 1U;
      m.word[j] = b ? BlockChoice::B : BlockChoice::A;
      const std::uint64_t scale = pow21(len - 1 - j);
      for (Part p : block_parts(m.word[j])) parts.push_back(p * scale);
    }
    // Outer blocks dominate: 21^(i-1) * 1 > 21^(i-2) * 15, so the list is
    // already decreasing within and across blocks.
    m.certified_centralizer = 1;
    for (Part p : parts) m.certified_centralizer *= static_cast<unsigned long>(p);
    m.partition = Partition::from_sorted(std::move(parts));
  }
  return members;
}

Thresholds thresholds(std::uint64_t k) {
  require_odd_k(k);
  const auto kk = static_cast<unsigned long>(k);
  Thresholds t;
  mpz_class even_bound = pow_ui(21, kk) + 15 * pow_ui(21, kk - 1);
  t.min_even_n = even_bound + 1;
  if (mpz_odd_p(t.min_even_n.get_mpz_t())) t.min_even_n += 1;
  mpz_class odd_bound = pow_ui(21, kk + 1) + 15 * pow_ui(21, kk);
  t.min_odd_n = odd_bound + 1;
  if (mpz_even_p(t.min_odd_n.get_mpz_t())) t.min_odd_n += 1;
  return t;
}

FamilyParams family_params(std::uint64_t multiplicity) {
  FamilyParams p;
  p.multiplicity = multiplicity;
  p.k = choose_k(multiplicity);
  p.thresholds = thresholds(p.k);
  return p;
}

mpz_class family_size(std::uint64_t len) { return pow_ui(21, static_cast<unsigned long>(len)) - 1; }

mpz_class family_centralizer(std::uint64_t len) {
  const auto l = static_cast<unsigned long>(len);
  return pow_ui(90, l) * pow_ui(21, 3 * l * (l == 0 ? 0 : l - 1) / 2);
}

ExtendedFamily extend_family(std::uint64_t n, std::uint64_t multiplicity) {
  ExtendedFamily ext;
  ext.n = n;
  ext.params = family_params(multiplicity);
  const bool even = n % 2 == 0;
  const mpz_class& minimal = even ? ext.params.thresholds.min_even_n : ext.params.thresholds.min_odd_n;
  if (mpz_class(static_cast<unsigned long>(n)) < minimal) {
    throw ThresholdError(n, minimal,
                         "n = " + std::to_string(n) + " is below the " + parity_name(n) +
                             " threshold for M = " + std::to_string(multiplicity) + " (k = " +
                             std::to_string(ext.params.k) + "); minimal legal " + parity_name(n) +
                             " n is " + minimal.get_str());
  }
  ext.branch = even ? Branch::P : Branch::PPrime;
  ext.members = build_family(ext.params.k, ext.branch);
  const std::uint64_t block_size = ext.members.front().partition.size();
  ext.leading_part = n - block_size;
  ext.partitions.reserve(ext.members.size());
  for (const auto& m : ext.members) ext.partitions.push_back(prepend(ext.leading_part, m.partition));
  ext.common_centralizer = ext.members.front().certified_centralizer * static_cast<unsigned long>(ext.leading_part);
  return ext;
}

std::vector<ClassRecord> equal_class_family(std::uint64_t n, std::uint64_t multiplicity) {
  const ExtendedFamily ext = extend_family(n, multiplicity);
  const mpz_class n_factorial = factorial(n);
  std::vector<ClassRecord> out;
  out.reserve(ext.partitions.size());
  for (const auto& lambda : ext.partitions) {
    if (sign(lambda) != Parity::Even) {
      throw std::logic_error("constructed partition " + lambda.to_string() + " is odd");
    }
    if (splits_in_alt(lambda)) {
      throw std::logic_error("constructed partition " + lambda.to_string() + " splits in A_n");
    }
    out.push_back(ClassRecord{GroupTag::alt(n), lambda, std::nullopt, class_size_sym(lambda.parts(), n_factorial)});
  }
  for (const auto& rec : out) {
    if (rec.class_size != out.front().class_size) {
      throw std::logic_error("constructed classes differ in size");
    }
  }
  return out;
}

// --- verification ------------------------------------------------------------

bool FamilyVerification::all_passed() const { return failure_count() == 0; }

std::size_t FamilyVerification::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

bool FamilyVerification::failed(const std::string& name) const {
  return std::any_of(checks.begin(), checks.end(),
                     [&](const Check& c) { return c.name == name && !c.passed; });
}

FamilyVerification verify_family(const std::vector<FamilyMember>& members, std::optional<std::uint64_t> target_n) {
  FamilyVerification report;
  auto add = [&](std::optional<std::size_t> member, std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({member, std::move(name), passed, std::move(detail)});
  };

  std::vector<mpz_class> centralizers;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const FamilyMember& m = members[i];
    const Partition& lambda = m.partition;
    const std::uint64_t len = m.word.size();

    // Rebuild the multiset of parts from the word with mpz scaling.
    std::vector<mpz_class> expected_parts;
    for (std::size_t j = 0; j < len; ++j) {
      const mpz_class scale = pow_ui(21, static_cast<unsigned long>(len - 1 - j));
      for (Part p : block_parts(m.word[j])) expected_parts.push_back(scale * static_cast<unsigned long>(p));
    }
    std::vector<mpz_class> actual_parts;
    for (Part p : lambda.parts()) actual_parts.emplace_back(static_cast<unsigned long>(p));
    std::sort(expected_parts.begin(), expected_parts.end());
    std::sort(actual_parts.begin(), actual_parts.end());
    add(i, "block_structure", len > 0 && expected_parts == actual_parts, m.word_string());

    const mpz_class want_size = family_size(len);
    add(i, "size", mpz_class(static_cast<unsigned long>(lambda.size())) == want_size,
        std::to_string(lambda.size()) + " vs " + want_size.get_str());

    const Parity want_sign = len % 2 == 1 ? Parity::Odd : Parity::Even;
    add(i, "sign", sign(lambda) == want_sign, len % 2 == 1 ? "expected odd" : "expected even");

    add(i, "distinct_parts", all_parts_distinct(lambda.parts()));
    add(i, "even_part",
        std::any_of(lambda.parts().begin(), lambda.parts().end(), [](Part p) { return p % 2 == 0; }));

    const mpz_class general = centralizer_order(lambda);
    add(i, "centralizer_certified", general == m.certified_centralizer,
        general.get_str() + " vs " + m.certified_centralizer.get_str());
    add(i, "centralizer_closed_form", general == family_centralizer(len));
    centralizers.push_back(general);

    if (target_n) {
      const bool fits = *target_n > lambda.size() && *target_n - lambda.size() > lambda.first();
      add(i, "prepend_strict", fits,
          "leading part must exceed " + std::to_string(lambda.first()));
      bool even_lift = false;
      if (fits) even_lift = sign(prepend(*target_n - lambda.size(), lambda)) == Parity::Even;
      add(i, "lift_even", even_lift);
    }
  }

  if (!members.empty()) {
    const bool same_size = std::all_of(members.begin(), members.end(), [&](const FamilyMember& m) {
      return m.partition.size() == members.front().partition.size();
    });
    add(std::nullopt, "common_size", same_size);
    const bool same_centralizer = std::all_of(centralizers.begin(), centralizers.end(),
                                              [&](const mpz_class& c) { return c == centralizers.front(); });
    add(std::nullopt, "common_centralizer", same_centralizer);
    std::set<Partition> unique;
    for (const auto& m : members) unique.insert(m.partition);
    add(std::nullopt, "distinct_members", unique.size() == members.size());
  }
  return report;
}

}  // namespace cmult
