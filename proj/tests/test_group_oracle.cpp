#include "doctest.h"

#include <numeric>
#include <sstream>

#include "cmult/errors.hpp"
#include "cmult/group_oracle.hpp"
#include "cmult/number_theory.hpp"
#include "support/reference.hpp"

using namespace cmult;

namespace {

std::vector<unsigned long> sizes_of(const std::vector<ClassRecord>& classes) {
  std::vector<unsigned long> out;
  for (const auto& c : classes) out.push_back(c.class_size.get_ui());
  return out;
}

Permutation first_of_order(const PermGroup& g, std::uint64_t order) {
  for (const auto& x : g.elements()) {
    if (x.order() == order) return x;
  }
  throw std::runtime_error("no element of that order");
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto a = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(a.order() == 4);
  CHECK(a.to_cycle_string() == "(0 1 2 3)");
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(4).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.cycle_type() == std::vector<std::uint64_t>{4});
  CHECK_FALSE(a.is_even());
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  // (a * b)(x) = a(b(x))
  const auto t = Permutation::from_cycles(4, {{0, 1}});
  CHECK((a * t)(0) == a(t(0)));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 5}}), PreconditionError);
}

TEST_CASE("closure") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(5).order() == 60);
  const auto trivial = close_group(3, {});
  CHECK(trivial.order() == 1);
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(symmetric_group(n).order() == reference::factorial_u64(n));
    CHECK(alternating_group(n).order() == (n >= 2 ? reference::factorial_u64(n) / 2 : 1));
  }
  const auto s4 = symmetric_group(4);
  CHECK(std::is_sorted(s4.elements().begin(), s4.elements().end()));
  CHECK(s4.elements().front().is_identity());
}

TEST_CASE("cap breach is loud") {
  try {
    close_group(symmetric_generators(4), 10);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.cap() == 10);
    CHECK(e.partial_count() == 11);
  }
  CHECK_THROWS_AS(close_group(4, symmetric_generators(4), 0), PreconditionError);
}

TEST_CASE("conjugacy classes") {
  CHECK(sizes_of(conjugacy_classes(symmetric_group(4))) == std::vector<unsigned long>{1, 3, 6, 6, 8});
  CHECK(sizes_of(conjugacy_classes(alternating_group(5))) == std::vector<unsigned long>{1, 12, 12, 15, 20});
  CHECK(sizes_of(conjugacy_classes(close_group(2, {}))) == std::vector<unsigned long>{1});

  const auto classes = conjugacy_classes(symmetric_group(4));
  CHECK(std::get<Permutation>(classes.front().rep).is_identity());
  // equal sizes ordered by minimal element
  CHECK(std::get<Permutation>(classes[2].rep) < std::get<Permutation>(classes[3].rep));
}

TEST_CASE("class sizes divide the order and sum to it") {
  std::vector<PermGroup> groups;
  for (std::size_t n = 1; n <= 6; ++n) {
    groups.push_back(symmetric_group(n));
    groups.push_back(alternating_group(n));
  }
  for (std::uint64_t p : {5, 7, 11}) groups.push_back(psl2_group(p));
  for (const auto& g : groups) {
    const auto classes = conjugacy_classes(g);
    std::uint64_t total = 0;
    for (const auto& c : classes) {
      CHECK(g.order() % c.class_size.get_ui() == 0);
      total += c.class_size.get_ui();
    }
    CHECK(total == g.order());
    CHECK(classes.front().class_size == 1);
  }
}

TEST_CASE("oracle multiplicity reports") {
  const auto a5 = multiplicity_report_oracle(alternating_group(5));
  CHECK(a5.max_multiplicity == 2);
  CHECK(a5.argmax_sizes == std::vector<mpz_class>{12});

  const auto psl27 = psl2_group(7);
  CHECK(sizes_of(conjugacy_classes(psl27)) == std::vector<unsigned long>{1, 21, 24, 24, 42, 56});
  const auto r = multiplicity_report_oracle(psl27);
  CHECK(r.max_multiplicity == 2);
  CHECK(r.argmax_sizes == std::vector<mpz_class>{24});

  for (Point p : {5u, 7u, 11u}) {
    std::vector<Point> cycle(p);
    std::iota(cycle.begin(), cycle.end(), 0u);
    const auto cyclic = close_group(p, {Permutation::from_cycles(p, {cycle})});
    const auto cr = multiplicity_report_oracle(cyclic);
    CHECK(cr.histogram.size() == 1);
    CHECK(cr.histogram.at(1) == p);
    CHECK(cr.max_multiplicity == p);
  }
}

TEST_CASE("PSL(2,p)") {
  const std::pair<std::uint64_t, std::size_t> expected[] = {{5, 5}, {7, 6}, {13, 9}};
  for (auto [p, classes] : expected) {
    const auto g = psl2_group(p);
    CHECK(g.order() == p * (p * p - 1) / 2);
    CHECK(conjugacy_classes(g).size() == classes);
  }
  for (std::uint64_t p : {11, 17, 19}) {
    const auto g = psl2_group(p);
    CHECK(g.order() == p * (p * p - 1) / 2);
    CHECK(conjugacy_classes(g).size() == (p + 5) / 2);
  }
  CHECK(psl2_group(5).name() == "PSL(2,5)");
  CHECK_THROWS_AS(psl2_group(2), PreconditionError);
  CHECK_THROWS_AS(psl2_group(3), PreconditionError);
  CHECK_THROWS_AS(psl2_group(9), PreconditionError);
  CHECK_THROWS_AS(psl2_group(13, 1000), CapExceededError);
}

TEST_CASE("power conjugacy") {
  const auto psl27 = psl2_group(7);
  const auto x7 = first_of_order(psl27, 7);
  CHECK(power_conjugacy(psl27, x7) == PowerConjugacy{7, 3, 2});
  CHECK(centralizer_order_of(psl27, x7) == 7);

  const auto s4 = symmetric_group(4);
  CHECK(power_conjugacy(s4, Permutation::identity(4)) == PowerConjugacy{1, 1, 1});
  CHECK(power_conjugacy(s4, Permutation::from_cycles(4, {{0, 1, 2, 3}})) == PowerConjugacy{4, 2, 1});

  const auto a5 = alternating_group(5);
  CHECK_THROWS_AS(power_conjugacy(a5, Permutation::from_cycles(5, {{0, 1}})), PreconditionError);
}

TEST_CASE("centralizer orders") {
  const auto s4 = symmetric_group(4);
  const auto t = Permutation::from_cycles(4, {{0, 1}});
  CHECK(centralizer_order_of(s4, t) == 4);
  CHECK(count_commuting(s4, t) == 4);
  CHECK(centralizer_order_of(s4, Permutation::identity(4)) == 24);
  const auto a5 = alternating_group(5);
  CHECK(centralizer_order_of(a5, Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})) == 5);
  CHECK_THROWS_AS(centralizer_order_of(a5, Permutation::from_cycles(5, {{0, 1}})), PreconditionError);
}

TEST_CASE("direct commuting count agrees with |G|/|class| and the serial reference") {
  for (const auto& g : {symmetric_group(5), alternating_group(6), psl2_group(7)}) {
    for (const auto& c : conjugacy_classes(g)) {
      const auto& x = std::get<Permutation>(c.rep);
      const auto direct = count_commuting(g, x);
      CHECK(direct == count_commuting_serial(g, x));
      CHECK(direct == centralizer_order_of(g, x));
    }
  }
}

TEST_CASE("generators of <x> share the centralizer of x") {
  for (const auto& g : {symmetric_group(5), alternating_group(5), psl2_group(7)}) {
    for (const auto& x : g.elements()) {
      const std::uint64_t ord = x.order();
      const std::uint64_t c = centralizer_order_of(g, x);
      for (std::uint64_t t = 1; t <= ord; ++t) {
        if (std::gcd(t, ord) != 1) continue;
        CHECK(centralizer_order_of(g, x.pow(static_cast<std::int64_t>(t))) == c);
      }
    }
  }
}

TEST_CASE("power-conjugacy lower bound is realised in the histogram") {
  for (const auto& g : {symmetric_group(5), alternating_group(6), psl2_group(7), psl2_group(11)}) {
    const auto classes = conjugacy_classes(g);
    for (const auto& c : classes) {
      const auto& x = std::get<Permutation>(c.rep);
      const auto pc = power_conjugacy(g, x);
      CHECK(pc.equal_size_class_lower_bound * pc.conj_power_count >= totient(pc.order));
      const auto same = std::count_if(classes.begin(), classes.end(),
                                      [&](const ClassRecord& d) { return d.class_size == c.class_size; });
      CHECK(static_cast<std::uint64_t>(same) >= pc.equal_size_class_lower_bound);
    }
  }
}

TEST_CASE("generator file parsing") {
  std::istringstream good("# S4\n(0 1)\n\n(0 1 2 3)\n");
  const auto gs = parse_generators(good);
  CHECK(gs.degree == 4);
  REQUIRE(gs.generators.size() == 2);
  CHECK(close_group(gs.degree, gs.generators).order() == 24);

  std::istringstream with_degree("(0 1)(2 3)\n");
  CHECK(parse_generators(with_degree, 6).degree == 6);

  std::istringstream identity("()\n");
  CHECK(parse_generators(identity).generators.front().is_identity());

  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_generators(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("(0 1") == 1);
  CHECK(line_of("(0 1)\n\n(0 x)\n") == 3);
  CHECK(line_of("0 1\n") == 1);
  CHECK(line_of("(0 1)(1 2)\n") == 1);

  std::istringstream too_big("(0 7)\n");
  CHECK_THROWS_AS(parse_generators(too_big, 4), ParseError);
}
