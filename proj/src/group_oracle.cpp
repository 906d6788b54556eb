#include "cmult/group_oracle.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <numeric>
#include <unordered_set>

#include <omp.h>

#include "cmult/errors.hpp"

namespace cmult {

std::optional<std::size_t> PermGroup::index_of(const Permutation& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PermGroup close_group(std::size_t degree, const std::vector<Permutation>& gens, std::size_t cap) {
  if (cap == 0) throw PreconditionError("cap must be at least 1");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw PreconditionError("generator degree " + std::to_string(g.degree()) + " differs from " +
                              std::to_string(degree));
    }
  }
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = gens;

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    Permutation y = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation z = g * y;
      if (seen.insert(z).second) {
        if (seen.size() > cap) throw CapExceededError(cap, seen.size());
        frontier.push_back(std::move(z));
      }
    }
  }

  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  group.index_.reserve(group.elements_.size());
  for (std::size_t i = 0; i < group.elements_.size(); ++i) group.index_.emplace(group.elements_[i], i);
  return group;
}

PermGroup close_group(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) throw PreconditionError("cannot infer degree from an empty generator list");
  return close_group(gens.front().degree(), gens, cap);
}

namespace {

std::vector<Point> iota_points(Point from, Point to) {
  std::vector<Point> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::size_t require_member(const PermGroup& g, const Permutation& x) {
  auto idx = g.index_of(x);
  if (!idx) throw PreconditionError("element " + x.to_cycle_string() + " is not in " + g.name());
  return *idx;
}

// Orbit of element `seed` under conjugation by the generators.
std::vector<std::size_t> conjugation_orbit(const PermGroup& g, std::size_t seed) {
  std::vector<std::size_t> orbit{seed};
  std::unordered_set<std::size_t> in_orbit{seed};
  std::vector<Permutation> inverses;
  for (const auto& gen : g.generators()) inverses.push_back(gen.inverse());
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const Permutation& y = g.elements()[orbit[head]];
    for (std::size_t k = 0; k < inverses.size(); ++k) {
      const std::size_t z = *g.index_of(g.generators()[k] * y * inverses[k]);
      if (in_orbit.insert(z).second) orbit.push_back(z);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::vector<Permutation> symmetric_generators(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) gens.push_back(Permutation::from_cycles(n, {iota_points(0, static_cast<Point>(n))}));
  return gens;
}

std::vector<Permutation> alternating_generators(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
  if (n >= 4) {
    const Point start = n % 2 == 1 ? 0 : 1;
    gens.push_back(Permutation::from_cycles(n, {iota_points(start, static_cast<Point>(n))}));
  }
  return gens;
}

PermGroup symmetric_group(std::size_t n, std::size_t cap) {
  PermGroup g = close_group(n, symmetric_generators(n), cap);
  g.set_name("S" + std::to_string(n));
  return g;
}

PermGroup alternating_group(std::size_t n, std::size_t cap) {
  PermGroup g = close_group(n, alternating_generators(n), cap);
  g.set_name("A" + std::to_string(n));
  return g;
}

PermGroup psl2_group(std::uint64_t p, std::size_t cap) {
  if (p < 5 || !is_prime(p)) {
    throw PreconditionError("psl2_group needs a prime p >= 5, got " + std::to_string(p));
  }
  const auto inf = static_cast<Point>(p);
  std::vector<Point> translate(p + 1), invert(p + 1);
  for (Point x = 0; x < inf; ++x) {
    translate[x] = static_cast<Point>((x + 1) % p);
    invert[x] = x == 0 ? inf : static_cast<Point>(p - mod_inverse(x, p));
  }
  translate[inf] = inf;
  invert[inf] = 0;
  PermGroup g = close_group(p + 1, {Permutation(translate), Permutation(invert)}, cap);
  g.set_name("PSL(2," + std::to_string(p) + ")");
  return g;
}

std::vector<std::size_t> conjugacy_class_of(const PermGroup& g, const Permutation& x) {
  return conjugation_orbit(g, require_member(g, x));
}

std::vector<ClassRecord> conjugacy_classes(const PermGroup& g) {
  const std::size_t order = g.elements().size();
  std::vector<bool> assigned(order, false);
  struct Found {
    std::size_t size;
    std::size_t min_index;
  };
  std::vector<Found> found;
  for (std::size_t i = 0; i < order; ++i) {
    if (assigned[i]) continue;
    // Elements are visited in sorted order, so i is the class minimum.
    const auto orbit = conjugation_orbit(g, i);
    for (std::size_t j : orbit) assigned[j] = true;
    found.push_back({orbit.size(), i});
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return std::tie(a.size, a.min_index) < std::tie(b.size, b.min_index);
  });
  std::vector<ClassRecord> out;
  out.reserve(found.size());
  const GroupTag tag = GroupTag::oracle(g.name());
  for (const auto& f : found) {
    out.push_back(ClassRecord{tag, g.elements()[f.min_index], std::nullopt,
                              mpz_class(static_cast<unsigned long>(f.size))});
  }
  return out;
}

MultiplicityReport multiplicity_report_oracle(const PermGroup& g) {
  SizeHistogram hist;
  for (const auto& rec : conjugacy_classes(g)) ++hist[rec.class_size];
  return MultiplicityReport::from_histogram(GroupTag::oracle(g.name()), std::move(hist));
}

std::uint64_t centralizer_order_of(const PermGroup& g, const Permutation& x) {
  return g.order() / conjugacy_class_of(g, x).size();
}

std::uint64_t count_commuting_serial(const PermGroup& g, const Permutation& x) {
  require_member(g, x);
  std::uint64_t count = 0;
  for (const auto& y : g.elements()) {
    if (x * y == y * x) ++count;
  }
  return count;
}

std::uint64_t count_commuting(const PermGroup& g, const Permutation& x) {
  require_member(g, x);
  const auto& elems = g.elements();
  const auto order = static_cast<std::int64_t>(elems.size());
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t i = 0; i < order; ++i) {
    const auto& y = elems[static_cast<std::size_t>(i)];
    if (x * y == y * x) ++count;
  }
  return count;
}

PowerConjugacy power_conjugacy(const PermGroup& g, const Permutation& x) {
  const auto cls = conjugacy_class_of(g, x);
  const std::unordered_set<std::size_t> members(cls.begin(), cls.end());
  PowerConjugacy out;
  out.order = x.order();
  std::uint64_t units = 0, conjugate_powers = 0;
  Permutation power = x;
  for (std::uint64_t t = 1; t <= out.order; ++t, power = power * x) {
    if (std::gcd(t, out.order) != 1) continue;
    ++units;
    if (members.count(*g.index_of(power))) ++conjugate_powers;
  }
  out.conj_power_count = conjugate_powers;
  out.equal_size_class_lower_bound = (units + conjugate_powers - 1) / conjugate_powers;
  return out;
}

// --- generator files --------------------------------------------------------

std::vector<std::vector<Point>> parse_cycles(const std::string& text, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  std::unordered_set<Point> used;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError(line, "empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError(line, std::string("expected '(' at column ") + std::to_string(i + 1));
    }
    ++i;
    std::vector<Point> cycle;
    bool closed = false;
    while (i < text.size()) {
      skip_space();
      if (i == text.size()) break;
      if (text[i] == ')') {
        closed = true;
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(line, std::string("unexpected character '") + text[i] + "' at column " +
                                   std::to_string(i + 1));
      }
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 1'000'000) throw ParseError(line, "point index too large");
        ++i;
      }
      const auto point = static_cast<Point>(value);
      if (!used.insert(point).second) {
        throw ParseError(line, "point " + std::to_string(point) + " appears twice");
      }
      cycle.push_back(point);
    }
    if (!closed) throw ParseError(line, "unterminated cycle");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

GeneratorSet parse_generators(std::istream& in, std::optional<std::size_t> degree) {
  std::vector<std::vector<std::vector<Point>>> parsed;
  std::size_t max_point_plus_one = 0;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    auto cycles = parse_cycles(text, line);
    for (const auto& c : cycles) {
      for (Point p : c) {
        max_point_plus_one = std::max<std::size_t>(max_point_plus_one, p + 1);
        if (degree && p >= *degree) {
          throw ParseError(line, "point " + std::to_string(p) + " exceeds degree " + std::to_string(*degree));
        }
      }
    }
    parsed.push_back(std::move(cycles));
  }
  if (parsed.empty()) throw ParseError(line, "no generators found");

  GeneratorSet out;
  out.degree = degree.value_or(std::max<std::size_t>(max_point_plus_one, 1));
  for (const auto& cycles : parsed) out.generators.push_back(Permutation::from_cycles(out.degree, cycles));
  return out;
}

}  // namespace cmult
