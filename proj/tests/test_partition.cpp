#include "doctest.h"

#include <random>
#include <set>

#include "cmult/errors.hpp"
#include "cmult/partition.hpp"
#include "support/reference.hpp"

using namespace cmult;

namespace {

std::vector<Part> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST_CASE("make_partition sorts and validates") {
  const long long raw[] = {1, 9, 10};
  const Partition p = make_partition(raw);
  CHECK(parts_of(p) == std::vector<Part>{10, 9, 1});
  CHECK(p.size() == 20);

  CHECK(Partition{}.size() == 0);
  CHECK(Partition{}.empty());
  CHECK(make_partition(std::span<const long long>{}).length() == 0);

  const Partition q{3, 3, 1};
  CHECK(parts_of(q) == std::vector<Part>{3, 3, 1});
  CHECK(q.size() == 7);

  CHECK_THROWS_AS(Partition({3, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Partition({2, -1}), PreconditionError);
}

TEST_CASE("enumeration is reverse-lexicographic") {
  std::vector<std::vector<Part>> seen;
  for (const auto& p : enumerate_partitions(4)) seen.push_back(parts_of(p));
  const std::vector<std::vector<Part>> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(seen == want);

  const auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().empty());
}

TEST_CASE("partition counts match the pentagonal recurrence") {
  const auto p = reference::partition_numbers(60);
  CHECK(p[5] == 7);
  CHECK(p[40] == 37338);
  CHECK(enumerate_partitions(5).size() == 7);
  CHECK(count_partitions(40) == 37338);
  for (std::uint64_t n = 0; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(count_partitions(n) == p[n]);
  }
}

TEST_CASE("enumeration has no duplicates and every item is a valid partition") {
  for (std::uint64_t n = 0; n <= 22; ++n) {
    const auto all = enumerate_partitions(n);
    std::set<Partition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (const auto& p : all) {
      CHECK(p.size() == n);
      CHECK(std::is_sorted(p.parts().begin(), p.parts().end(), std::greater<>()));
    }
    // strictly decreasing in lexicographic order
    CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>()));
  }
}

TEST_CASE("parallel enumeration reproduces the serial stream") {
  for (std::uint64_t n = 0; n <= 35; ++n) {
    CAPTURE(n);
    CHECK(enumerate_partitions_parallel(n) == enumerate_partitions(n));
  }
}

TEST_CASE("centralizer orders") {
  CHECK(centralizer_order(Partition{10, 9, 1}) == 90);
  CHECK(centralizer_order(Partition{15, 3, 2}) == 90);
  CHECK(centralizer_order(Partition{1, 1, 1, 1}) == 24);
  CHECK(centralizer_order(Partition{}) == 1);

  const auto census = reference::sym_cycle_type_census(4);
  CHECK(census.at({2, 1, 1}).centralizer == 4);
  CHECK(centralizer_order(Partition{2, 1, 1}) == 4);
}

TEST_CASE("centralizer and class size agree with brute force on S_n, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& [type, stats] : reference::sym_cycle_type_census(n)) {
      std::vector<long long> raw(type.begin(), type.end());
      const Partition lambda(raw);
      CAPTURE(lambda.to_string());
      CHECK(centralizer_order(lambda) == static_cast<unsigned long>(stats.centralizer));
      CHECK(class_size_sym(lambda) == static_cast<unsigned long>(stats.count));
      CHECK((sign(lambda) == Parity::Even) == stats.even);
    }
  }
}

TEST_CASE("class sizes of S_4") {
  CHECK(class_size_sym(Partition{1, 1, 1, 1}) == 1);
  CHECK(class_size_sym(Partition{2, 1, 1}) == 6);
  CHECK(class_size_sym(Partition{3, 1}) == 8);
  CHECK(class_size_sym(Partition{}) == 1);
}

TEST_CASE("class equation for S_n, n <= 12") {
  for (std::uint64_t n = 0; n <= 12; ++n) {
    const mpz_class nf = factorial(n);
    mpz_class total = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      const mpz_class c = centralizer_order(lambda);
      CHECK(mpz_divisible_p(nf.get_mpz_t(), c.get_mpz_t()) != 0);
      total += nf / c;
    }
    CHECK(total == nf);
  }
}

TEST_CASE("distinct parts give the product of parts") {
  for (std::uint64_t n = 1; n <= 25; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      if (!all_parts_distinct(lambda.parts())) continue;
      mpz_class product = 1;
      for (Part p : lambda.parts()) product *= static_cast<unsigned long>(p);
      CHECK(centralizer_order(lambda) == product);
    }
  }
}

TEST_CASE("sign") {
  CHECK(sign(Partition{1, 1, 1}) == Parity::Even);
  CHECK(sign(Partition{2, 1}) == Parity::Odd);
  CHECK(sign(Partition{10, 9, 1}) == Parity::Odd);
  CHECK(sign(Partition{}) == Parity::Even);
}

TEST_CASE("sign matches inversion parity of explicit permutations up to n = 8") {
  const auto census = reference::sym_cycle_type_census(8);
  for (const auto& [type, stats] : census) {
    std::vector<long long> raw(type.begin(), type.end());
    CHECK((sign(Partition(raw)) == Parity::Even) == stats.even);
  }
}

TEST_CASE("prepend") {
  const Partition a = prepend(18, Partition{10, 9, 1});
  CHECK(parts_of(a) == std::vector<Part>{18, 10, 9, 1});
  CHECK(centralizer_order(a) == 1620);

  const Partition b = prepend(5, Partition{3, 1});
  CHECK(parts_of(b) == std::vector<Part>{5, 3, 1});
  CHECK(centralizer_order(b) == 15);

  // equality case: no identity, and indeed C((3,3,1)) = 18 != 3 * 3
  const Partition c = prepend(3, Partition{3, 1});
  CHECK(parts_of(c) == std::vector<Part>{3, 3, 1});
  CHECK(centralizer_order(c) == 18);

  CHECK_THROWS_AS(prepend(2, Partition{3, 1}), PreconditionError);
  CHECK(parts_of(prepend(4, Partition{})) == std::vector<Part>{4});
}

TEST_CASE("prepend identity holds on random pairs") {
  std::mt19937_64 rng(20240101);
  std::vector<std::vector<Partition>> by_size;
  for (std::uint64_t n = 0; n <= 30; ++n) by_size.push_back(enumerate_partitions(n));
  for (int trial = 0; trial < 500; ++trial) {
    const auto& bucket = by_size[rng() % by_size.size()];
    const Partition& lambda = bucket[rng() % bucket.size()];
    const Part l0 = lambda.first() + 1 + rng() % 40;
    CHECK(centralizer_order(prepend(l0, lambda)) == centralizer_order(lambda) * static_cast<unsigned long>(l0));
  }
}

TEST_CASE("part count table") {
  const auto t = part_counts(Partition{3, 3, 2, 1, 1, 1});
  CHECK(t.size() == 3);
  CHECK(t.at(3) == 2);
  CHECK(t.at(1) == 3);
  std::uint64_t mass = 0;
  for (auto [i, m] : t) mass += i * m;
  CHECK(mass == 11);
}
