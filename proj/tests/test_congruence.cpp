#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "syncon/congruence.hpp"
#include "syncon/error.hpp"
#include "syncon/samples.hpp"

using namespace syncon;

TEST_CASE("partitions are canonical") {
  std::vector<std::size_t> labels{7, 3, 7, 3, 9};
  auto p = Partition::from_labels(std::span<std::size_t const>(labels));
  CHECK(p.class_ids() == std::vector<std::size_t>{0, 1, 0, 1, 2});
  CHECK(p.to_string() == "{0,2}/{1,3}/{4}");
  CHECK(Partition::parse("{1,3}/{0,2}/{4}") == p);
  CHECK(Partition::from_labels(std::span<std::size_t const>(p.class_ids())) == p);
  CHECK(p.representatives() == std::vector<Element>{0, 1, 4});
  CHECK_THROWS_AS(Partition::parse("{0,1}/{1,2}"), DomainError);
  CHECK_THROWS_AS(Partition::parse("{0}/{2}"), DomainError);
  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}}), DomainError);
}

TEST_CASE("all_partitions counts Bell numbers") {
  std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto ps = all_partitions(n);
    CHECK(ps.size() == bell[n]);
    for (auto const& p : ps) {
      CHECK(Partition::from_labels(std::span<std::size_t const>(p.class_ids())) == p);
    }
  }
}

TEST_CASE("is_congruence examples") {
  auto z4 = cyclic_group(4);
  CHECK(is_congruence(z4, Partition::parse("{0,2}/{1,3}")));
  CHECK_FALSE(is_congruence(z4, Partition::parse("{0,1}/{2,3}")));
  CHECK(is_congruence(z4, Partition::discrete(4)));
  CHECK(is_congruence(z4, Partition::universal(4)));
  CHECK_THROWS_AS(is_congruence(z4, Partition::discrete(3)), DomainError);
}

TEST_CASE("one coordinate at a time agrees with the tuple definition") {
  Rng       rng(5);
  Signature sig({{"f", 1}, {"g", 2}, {"h", 3}, {"k", 0}});
  for (int round = 0; round < 60; ++round) {
    auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
    for (auto const& p : all_partitions(a.size())) {
      CHECK(is_congruence(a, p) == oracle::is_congruence(a, p));
    }
  }
}

TEST_CASE("saturation") {
  auto p = Partition::parse("{0,2}/{1,3}");
  CHECK(saturates(p, Subset(4, {0, 2})));
  CHECK_FALSE(saturates(p, Subset(4, {0})));
  for (auto const& L : all_subsets(4)) {
    CHECK(saturates(Partition::of_subset(L), L));
  }
}

TEST_CASE("largest congruence saturating a subset") {
  auto z4 = cyclic_group(4);
  CHECK(largest_congruence_saturating(z4, Subset(4, {0, 2})).partition().to_string()
        == "{0,2}/{1,3}");
  CHECK(largest_congruence_saturating(z4, Subset::empty(4)).num_classes() == 1);
  CHECK(largest_congruence_saturating(z4, Subset::full(4)).num_classes() == 1);
  auto c3 = constant_binary(3);
  CHECK(largest_congruence_saturating(c3, Subset(3, {1})).partition().to_string()
        == "{0,2}/{1}");
}

TEST_CASE("refinement matches the brute-force maximum on random algebras") {
  Rng       rng(17);
  Signature sig({{"g", 2}, {"f", 1}});
  for (int round = 0; round < 80; ++round) {
    auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
    for (auto const& L : all_subsets(a.size())) {
      auto theta = largest_congruence_saturating(a, L);
      auto best  = oracle::maximum_saturating(a, L);
      REQUIRE(best);
      CHECK(theta.partition() == *best);
      CHECK(oracle::is_congruence(a, theta.partition()));
      CHECK(oracle::saturates(theta.partition(), L));
    }
  }
}

TEST_CASE("quotients") {
  auto z4    = cyclic_group(4);
  auto theta = certify_or_fail(z4, Partition::parse("{0,2}/{1,3}"));
  auto q     = quotient(z4, theta);
  CHECK(q.algebra.size() == 2);
  CHECK(q.algebra.table(0) == std::vector<Element>{0, 1, 1, 0});
  CHECK(q.projection.image() == std::vector<Element>{0, 1, 0, 1});
  CHECK(q.projection.kernel() == theta.partition());

  auto id = quotient(z4, equality_congruence(z4));
  CHECK(id.algebra.table(0) == z4.table(0));
  CHECK(id.projection.is_injective());
  CHECK(quotient(z4, universal_congruence(z4)).algebra.size() == 1);

  auto z2 = cyclic_group(2);
  CHECK_THROWS_AS(quotient(z2, theta), DomainError);
  CHECK_FALSE(certify(z4, Partition::parse("{0,1}/{2,3}")));
  CHECK_THROWS_AS(certify_or_fail(z4, Partition::parse("{0,1}/{2,3}")), InvariantViolation);
}

TEST_CASE("quotient kernels on random algebras") {
  Rng rng(23);
  for (int round = 0; round < 40; ++round) {
    auto a = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
    for (auto const& c : enumerate_congruences_oracle(a)) {
      CHECK(quotient(a, c).projection.kernel() == c.partition());
    }
  }
}

TEST_CASE("meets") {
  auto z4  = cyclic_group(4);
  auto mod = certify_or_fail(z4, Partition::parse("{0,2}/{1,3}"));
  CHECK(meet(universal_congruence(z4), mod) == mod);
  CHECK(meet(mod, mod) == mod);
  CHECK(meet(Partition::parse("{0,2}/{1,3}"), Partition::parse("{0,1}/{2,3}"))
        == Partition::discrete(4));
  auto z2 = cyclic_group(2);
  CHECK_THROWS_AS(meet(mod, universal_congruence(z2)), DomainError);
}

TEST_CASE("congruence enumeration") {
  CHECK(enumerate_congruences_oracle(cyclic_group(1)).size() == 1);
  CHECK(enumerate_congruences_oracle(cyclic_group(4)).size() == 3);
  CHECK(enumerate_congruences_oracle(left_zero(2)).size() == 2);
  CHECK_THROWS_AS(enumerate_congruences_oracle(cyclic_group(6)), DomainError);
}

TEST_CASE("meets of syntactic congruences of blocks saturate every block") {
  Rng rng(29);
  for (int round = 0; round < 30; ++round) {
    auto a = random_binary_algebra(rng, 2 + uniform_index(rng, 3));
    for (auto const& p : all_partitions(a.size())) {
      auto theta = universal_congruence(a);
      for (auto const& c : p.classes()) {
        theta = meet(theta, largest_congruence_saturating(a, Subset(a.size(), c)));
      }
      CHECK(oracle::is_congruence(a, theta.partition()));
      for (auto const& c : p.classes()) {
        CHECK(oracle::saturates(theta.partition(), Subset(a.size(), c)));
      }
    }
  }
}
