#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cmult {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless images is a bijection on 0..size-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds from disjoint cycles; points absent from every cycle are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  std::uint64_t order() const;
  /// Cycle lengths, weakly decreasing, fixed points included.
  std::vector<std::uint64_t> cycle_type() const;
  bool is_even() const;

  /// Cycle notation with fixed points omitted, e.g. "(0 1)(2 3)"; "()" for identity.
  std::string to_cycle_string() const;

  /// Function composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

/// g x g^{-1}
Permutation conjugate(const Permutation& x, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cmult
