#include "cmult/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cmult/errors.hpp"

namespace cmult {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw PreconditionError("image sequence is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a >= degree) {
        throw PreconditionError("point " + std::to_string(a) + " outside degree " + std::to_string(degree));
      }
      if (used[a]) throw PreconditionError("point " + std::to_string(a) + " repeated across cycles");
      used[a] = true;
      p.images_[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  const std::uint64_t ord = order();
  k %= ord;
  Permutation result = identity(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (std::uint64_t len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

std::vector<std::uint64_t> Permutation::cycle_type() const {
  std::vector<std::uint64_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

bool Permutation::is_even() const {
  std::uint64_t transpositions = 0;
  for (std::uint64_t len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    os << '(';
    bool first = true;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PreconditionError("degree mismatch in composition");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

Permutation conjugate(const Permutation& x, const Permutation& g) { return g * x * g.inverse(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence
  std::size_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cmult
