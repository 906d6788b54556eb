#include "doctest.h"

#include "cmult/errors.hpp"
#include "cmult/group_oracle.hpp"
#include "cmult/sym_alt.hpp"

using namespace cmult;

namespace {

SizeHistogram hist(std::initializer_list<std::pair<unsigned long, std::uint64_t>> entries) {
  SizeHistogram h;
  for (auto [size, count] : entries) h[mpz_class(size)] = count;
  return h;
}

}  // namespace

TEST_CASE("splitting rule") {
  CHECK(splits_in_alt(Partition{5}));
  CHECK_FALSE(splits_in_alt(Partition{3, 1, 1}));
  CHECK_FALSE(splits_in_alt(Partition{2, 2, 1}));
  CHECK(splits_in_alt(Partition{3, 1}));
  CHECK_FALSE(splits_in_alt(Partition{1}));
  CHECK_THROWS_AS(splits_in_alt(Partition{2, 1}), PreconditionError);
}

TEST_CASE("alt_classes") {
  auto five = alt_classes(Partition{5});
  REQUIRE(five.size() == 2);
  CHECK(five[0].class_size == 12);
  CHECK(five[1].class_size == 12);
  CHECK(five[0].split == SplitLabel::First);
  CHECK(five[1].split == SplitLabel::Second);
  CHECK(five[0].group == GroupTag::alt(5));

  auto three_one = alt_classes(Partition{3, 1});
  REQUIRE(three_one.size() == 2);
  CHECK(three_one[0].class_size == 4);

  auto two_two_one = alt_classes(Partition{2, 2, 1});
  REQUIRE(two_two_one.size() == 1);
  CHECK(two_two_one[0].class_size == 15);
  CHECK_FALSE(two_two_one[0].split.has_value());

  CHECK_THROWS_AS(alt_classes(Partition{4}), PreconditionError);
}

TEST_CASE("multiplicity reports") {
  const auto s4 = multiplicity_report(GroupKind::Sym, 4);
  CHECK(s4.histogram == hist({{1, 1}, {3, 1}, {6, 2}, {8, 1}}));
  CHECK(s4.max_multiplicity == 2);
  CHECK(s4.argmax_sizes == std::vector<mpz_class>{6});
  CHECK(s4.group.to_string() == "S4");

  const auto a5 = multiplicity_report(GroupKind::Alt, 5);
  CHECK(a5.histogram == hist({{1, 1}, {12, 2}, {15, 1}, {20, 1}}));
  CHECK(a5.max_multiplicity == 2);
  CHECK(a5.argmax_sizes == std::vector<mpz_class>{12});

  const auto s1 = multiplicity_report(GroupKind::Sym, 1);
  CHECK(s1.histogram == hist({{1, 1}}));
  CHECK(s1.max_multiplicity == 1);

  for (std::uint64_t n : {0, 1, 2}) {
    CHECK(multiplicity_report(GroupKind::Alt, n).histogram == hist({{1, 1}}));
  }
  // A_3 is cyclic of order 3
  CHECK(multiplicity_report(GroupKind::Alt, 3).histogram == hist({{1, 3}}));

  CHECK_THROWS_AS(multiplicity_report(GroupKind::Oracle, 3), PreconditionError);
}

TEST_CASE("argmax ties are ascending") {
  const auto s3 = multiplicity_report(GroupKind::Sym, 3);
  CHECK(s3.max_multiplicity == 1);
  CHECK(s3.argmax_sizes == std::vector<mpz_class>{1, 2, 3});
}

TEST_CASE("parallel and serial reports agree") {
  for (std::uint64_t n = 0; n <= 32; ++n) {
    CAPTURE(n);
    for (GroupKind kind : {GroupKind::Sym, GroupKind::Alt}) {
      const auto a = multiplicity_report(kind, n);
      const auto b = multiplicity_report_serial(kind, n);
      CHECK(same_statistics(a, b));
      CHECK(a.group == b.group);
    }
  }
}

TEST_CASE("class equation for S_n and A_n up to n = 60") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    CAPTURE(n);
    const mpz_class nf = factorial(n);
    CHECK(multiplicity_report(GroupKind::Sym, n).total_mass() == nf);
    const mpz_class alt_order = n >= 2 ? mpz_class(nf / 2) : mpz_class(1);
    CHECK(multiplicity_report(GroupKind::Alt, n).total_mass() == alt_order);
  }
}

TEST_CASE("A_n mass of each even cycle type equals its S_n class size") {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      if (sign(lambda) != Parity::Even) continue;
      mpz_class mass = 0;
      for (const auto& rec : alt_classes(lambda)) mass += rec.class_size;
      CHECK(mass == class_size_sym(lambda));
    }
  }
}

TEST_CASE("partition reports equal brute-force oracle reports for n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(same_statistics(multiplicity_report(GroupKind::Sym, n), multiplicity_report_oracle(symmetric_group(n))));
    CHECK(same_statistics(multiplicity_report(GroupKind::Alt, n), multiplicity_report_oracle(alternating_group(n))));
  }
}
