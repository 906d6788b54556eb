#pragma once

// Equal-centralizer families of partitions built from the two blocks
// (10,9,1) and (15,3,2), both of size 20 and part product 90. Block i of a
// word is scaled by 21^(i-1); all parts of a member are then distinct, so
// every member of a given length shares the centralizer order
// 90^len * 21^(3*len*(len-1)/2) and the size 21^len - 1.
//
// Words are written outermost block first: word[0] is block len (scaled by
// 21^(len-1)) and word[len-1] is block 1 (unscaled). Families are listed in
// lexicographic word order with A < B.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmult/class_record.hpp"
#include "cmult/errors.hpp"
#include "cmult/partition.hpp"

namespace cmult {

enum class BlockChoice { A, B };  // A = (10,9,1), B = (15,3,2)

std::array<Part, 3> block_parts(BlockChoice choice);

/// P: words of length k (odd partitions for odd k). PPrime: words of length
/// k+1 (even partitions).
enum class Branch { P, PPrime };

struct FamilyMember {
  std::vector<BlockChoice> word;
  Partition partition;
  mpz_class certified_centralizer;

  std::string word_string() const;
};

struct Thresholds {
  mpz_class min_even_n;  // smallest even n > 21^k + 15*21^(k-1)
  mpz_class min_odd_n;   // smallest odd n > 21^(k+1) + 15*21^k

  /// Every n >= this value admits a family (the larger of the two).
  const mpz_class& all_n() const { return min_odd_n; }
};

struct FamilyParams {
  std::uint64_t multiplicity = 1;  // M
  std::uint64_t k = 1;
  Thresholds thresholds;
};

/// Raised when n is below the parity threshold; carries the minimal legal n.
class ThresholdError : public PreconditionError {
 public:
  ThresholdError(std::uint64_t n, mpz_class minimal_n, const std::string& what)
      : PreconditionError(what), n_(n), minimal_n_(std::move(minimal_n)) {}

  std::uint64_t n() const noexcept { return n_; }
  const mpz_class& minimal_n() const noexcept { return minimal_n_; }

 private:
  std::uint64_t n_;
  mpz_class minimal_n_;
};

inline constexpr std::uint64_t kMaxFamilyK = 13;  // keeps every part inside 64 bits

/// Smallest odd k with 2^k > M.
std::uint64_t choose_k(std::uint64_t multiplicity);

std::uint64_t branch_length(std::uint64_t k, Branch branch);

/// All 2^len members of the branch. Throws for even k, k = 0 or k > kMaxFamilyK.
std::vector<FamilyMember> build_family(std::uint64_t k, Branch branch);

Thresholds thresholds(std::uint64_t k);
FamilyParams family_params(std::uint64_t multiplicity);

/// 21^len - 1
mpz_class family_size(std::uint64_t len);
/// 90^len * 21^(3*len*(len-1)/2)
mpz_class family_centralizer(std::uint64_t len);

/// The family members lifted to partitions of n by a leading part n - |lambda|.
struct ExtendedFamily {
  std::uint64_t n = 0;
  FamilyParams params;
  Branch branch = Branch::P;
  Part leading_part = 0;
  std::vector<FamilyMember> members;
  std::vector<Partition> partitions;  // partitions[i] extends members[i]
  mpz_class common_centralizer;       // leading_part * C(member)
};

/// Even n uses branch P, odd n uses P'. Throws ThresholdError below the
/// threshold for n's parity.
ExtendedFamily extend_family(std::uint64_t n, std::uint64_t multiplicity);

/// A_n classes of the extended family: 2^k (even n) or 2^(k+1) (odd n)
/// non-split classes that all have the same size.
std::vector<ClassRecord> equal_class_family(std::uint64_t n, std::uint64_t multiplicity);

struct FamilyVerification {
  struct Check {
    std::optional<std::size_t> member;  // nullopt for whole-family checks
    std::string name;
    bool passed = false;
    std::string detail;
  };

  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failure_count() const;
  bool failed(const std::string& name) const;
};

/// Recomputes every property of every member from its parts alone (general
/// centralizer formula, not the product shortcut) and compares across members.
/// With a target degree, also checks the lift to n is strict and even.
FamilyVerification verify_family(const std::vector<FamilyMember>& members,
                                 std::optional<std::uint64_t> target_n = std::nullopt);

}  // namespace cmult
