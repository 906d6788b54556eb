#pragma once

// Brute-force engine for small permutation groups. Everything here works on
// the explicit element list, so it stays independent of the partition
// formulas it is used to cross-check.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmult/class_record.hpp"
#include "cmult/permutation.hpp"

namespace cmult {

inline constexpr std::size_t kDefaultCap = 1'000'000;

class PermGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// All elements, sorted lexicographically by image sequence.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::optional<std::size_t> index_of(const Permutation& x) const;
  bool contains(const Permutation& x) const { return index_of(x).has_value(); }

 private:
  friend PermGroup close_group(std::size_t, const std::vector<Permutation>&, std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::string name_ = "G";
};

/// Breadth-first closure of the generators. Throws CapExceededError as soon as
/// more than `cap` elements have been found.
PermGroup close_group(std::size_t degree, const std::vector<Permutation>& gens,
                      std::size_t cap = kDefaultCap);
/// Degree taken from the generators, which must be nonempty and agree.
PermGroup close_group(const std::vector<Permutation>& gens, std::size_t cap = kDefaultCap);

std::vector<Permutation> symmetric_generators(std::size_t n);
std::vector<Permutation> alternating_generators(std::size_t n);
PermGroup symmetric_group(std::size_t n, std::size_t cap = kDefaultCap);
PermGroup alternating_group(std::size_t n, std::size_t cap = kDefaultCap);

/// PSL(2,p) acting on the projective line {0..p-1, inf=p}, generated by
/// x -> x+1 and x -> -1/x. p must be a prime >= 5.
PermGroup psl2_group(std::uint64_t p, std::size_t cap = kDefaultCap);

/// The conjugacy class of x as sorted element indices. Throws if x is not in G.
std::vector<std::size_t> conjugacy_class_of(const PermGroup& g, const Permutation& x);

/// All classes ordered by (size, minimal element); rep is the minimal element.
std::vector<ClassRecord> conjugacy_classes(const PermGroup& g);

MultiplicityReport multiplicity_report_oracle(const PermGroup& g);

/// |G| / |cl_G(x)|.
std::uint64_t centralizer_order_of(const PermGroup& g, const Permutation& x);

/// Direct count of elements commuting with x, parallel over the element list.
std::uint64_t count_commuting(const PermGroup& g, const Permutation& x);
/// Single-threaded reference for count_commuting.
std::uint64_t count_commuting_serial(const PermGroup& g, const Permutation& x);

struct PowerConjugacy {
  std::uint64_t order = 1;
  /// #{1 <= t <= order : gcd(t, order) = 1 and x^t ~ x}
  std::uint64_t conj_power_count = 1;
  /// ceil(phi(order) / conj_power_count): classes of generators of <x>, all
  /// with the centralizer order of x.
  std::uint64_t equal_size_class_lower_bound = 1;

  friend bool operator==(const PowerConjugacy&, const PowerConjugacy&) = default;
};

PowerConjugacy power_conjugacy(const PermGroup& g, const Permutation& x);

// Generator files -----------------------------------------------------------
//
// One permutation per line in cycle notation, e.g. "(0 1)(2 3)". Blank lines
// and lines starting with '#' are skipped. "()" is the identity.

struct GeneratorSet {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Parses one line of cycle notation. Throws ParseError tagged with `line`.
std::vector<std::vector<Point>> parse_cycles(const std::string& text, std::size_t line);

/// Degree is inferred as (largest point + 1) unless given; a given degree
/// smaller than a named point is a ParseError.
GeneratorSet parse_generators(std::istream& in, std::optional<std::size_t> degree = std::nullopt);

}  // namespace cmult
