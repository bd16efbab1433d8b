#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "syncon/error.hpp"
#include "syncon/samples.hpp"
#include "syncon/syntactic.hpp"

using namespace syncon;

namespace {

  DeterminingSet maps(std::vector<std::vector<Element>> const& images) {
    DeterminingSet s;
    for (auto const& im : images) {
      s.functions.emplace_back(im);
    }
    return s;
  }

  DeterminingSet whole_monoid(FiniteAlgebra const& a) {
    DeterminingSet s;
    s.functions = translation_monoid(a).elements();
    return s;
  }

  // Every associative table on a carrier of size n.
  std::vector<FiniteAlgebra> all_semigroups(std::size_t n) {
    std::vector<FiniteAlgebra> out;
    std::size_t const          cells = n * n;
    std::vector<Element>       t(cells, 0);
    for (;;) {
      FiniteAlgebra a("S", Signature({{"*", 2}}), n, {t});
      if (is_associative(a, 0)) {
        out.push_back(a);
      }
      std::size_t i = 0;
      while (i < cells && ++t[i] == n) {
        t[i++] = 0;
      }
      if (i == cells) {
        return out;
      }
    }
  }

}  // namespace

TEST_CASE("syntactic congruence examples") {
  auto c3 = syntactic_congruence(constant_binary(3), Subset(3, {1}));
  CHECK(c3.congruence.partition().to_string() == "{0,2}/{1}");
  CHECK(c3.congruence.partition() == Partition::of_subset(Subset(3, {1})));

  auto z4 = syntactic_congruence(cyclic_group(4), Subset(4, {0, 2}));
  CHECK(z4.congruence.partition().to_string() == "{0,2}/{1,3}");
  CHECK(z4.quotient.size() == 2);
  CHECK(z4.monoid_size == 4);
  CHECK(z4.eta.image() == std::vector<Element>{0, 1, 0, 1});

  auto none = syntactic_congruence(cyclic_group(4), Subset::empty(4));
  CHECK(none.congruence.num_classes() == 1);
  CHECK(none.quotient.size() == 1);
}

TEST_CASE("both routes agree with the definition and the brute-force maximum") {
  Rng       rng(43);
  Signature sig({{"g", 2}, {"f", 1}, {"k", 0}});
  for (int round = 0; round < 60; ++round) {
    auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
    auto m = translation_monoid(a);
    for (auto const& L : all_subsets(a.size())) {
      auto r = syntactic_congruence(a, L);
      CHECK(r.congruence.partition() == oracle::syntactic_by_definition(a, L));
      CHECK(r.congruence.partition() == syntactic_partition_by_monoid(a, m, L));
      CHECK(r.congruence.partition() == *oracle::maximum_saturating(a, L));
    }
  }
}

TEST_CASE("the syntactic quotient is faithful") {
  Rng rng(47);
  for (int round = 0; round < 60; ++round) {
    auto a = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
    for (auto const& L : all_subsets(a.size())) {
      auto r     = syntactic_congruence(a, L);
      auto image = r.eta.image_of(L);
      CHECK(r.eta.preimage(image) == L);
      CHECK(syntactic_congruence(r.quotient, image).congruence.partition()
            == Partition::discrete(r.quotient.size()));
    }
  }
}

TEST_CASE("determination by sets of maps") {
  auto c3 = constant_binary(3);
  auto v  = is_S_determined(c3, Subset(3, {1}), DeterminingSet{});
  CHECK_FALSE(v.determined);
  REQUIRE(v.witness);
  CHECK(*v.witness == std::pair<Element, Element>{0, 1});
  CHECK(v.in_induced);

  auto z4 = cyclic_group(4);
  CHECK(is_S_determined(z4, Subset(4, {0, 2}), maps({{0, 1, 2, 3}})).determined);
  CHECK(is_S_determined(c3, Subset(3, {1}), maps({{0, 1, 2}})).determined);
  CHECK(is_S_determined(z4, Subset::empty(4), DeterminingSet{}).determined);

  auto w = is_S_determined(z4, Subset(4, {0}), maps({{0, 1, 2, 3}}));
  CHECK_FALSE(w.determined);
  CHECK(w.induced.to_string() == "{0}/{1,2,3}");

  CHECK(induced_relation(4, {}, Subset(4, {0})) == Partition::universal(4));
}

TEST_CASE("the whole translation monoid always determines") {
  Rng rng(53);
  for (int round = 0; round < 40; ++round) {
    auto a = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
    auto s = whole_monoid(a);
    for (auto const& L : all_subsets(a.size())) {
      CHECK(is_S_determined(a, L, s).determined);
      auto b = index_bound_check(a, L, s);
      CHECK(b.holds);
    }
  }
}

TEST_CASE("determination by terms") {
  auto z4 = cyclic_group(4);
  std::vector<Term> just_x{Term::variable("x1")};
  CHECK_FALSE(is_term_determined(z4, Subset(4, {0}), just_x, "x1").determined);
  CHECK(is_term_determined(constant_binary(3), Subset(3, {1}), just_x, "x1").determined);
  CHECK_THROWS_AS(is_term_determined(z4, Subset(4, {0}), just_x, "x9"), DomainError);

  auto terms = semigroup_term_set("*");
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].to_string() == "x1");
  CHECK(terms[1].to_string() == "*(x2,x1)");
  CHECK(terms[2].to_string() == "*(x1,x2)");
  CHECK(terms[3].to_string() == "*(*(x2,x1),x3)");

  auto inst = instantiate_terms(z4, {parse_term("+(x1,x2)", z4.signature())}, "x1");
  CHECK(inst.functions.size() == 4);
  CHECK(inst.kind == DeterminingSet::Kind::linear_terms);
}

TEST_CASE("the classical term set determines every semigroup subset") {
  // Labelled semigroups on 1, 2, 3 elements: 1, 8, 113.
  std::vector<std::size_t> expected{0, 1, 8, 113};
  std::size_t              count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto semigroups = all_semigroups(n);
    CHECK(semigroups.size() == expected[n]);
    for (auto const& s : semigroups) {
      for (auto const& L : all_subsets(n)) {
        auto v = is_term_determined(s, L, semigroup_term_set("*"), "x1");
        CHECK(v.determined);
        ++count;
      }
    }
  }
  CHECK(count == 1 * 2 + 8 * 4 + 113 * 8);
}

TEST_CASE("lifted determining sets") {
  auto z4 = cyclic_group(4);
  auto f  = determining_set_from_quotient(z4, Subset(4, {0, 2}));
  REQUIRE(f.functions.size() == 2);
  CHECK(f.functions[0].image() == std::vector<Element>{0, 1, 2, 3});
  CHECK(f.functions[1].image() == std::vector<Element>{1, 2, 3, 0});
  CHECK(is_S_determined(z4, Subset(4, {0, 2}), f).determined);

  Rng rng(59);
  for (int round = 0; round < 60; ++round) {
    auto a = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
    auto m = translation_monoid(a);
    for (auto const& L : all_subsets(a.size())) {
      auto lifted = determining_set_from_quotient(a, L);
      for (auto const& g : lifted.functions) {
        CHECK(m.contains(g));
      }
      CHECK(is_S_determined(a, L, lifted).determined);
      CHECK(index_bound_check(a, L, lifted).holds);
    }
  }
}

TEST_CASE("minimal determining subsets") {
  auto z4   = cyclic_group(4);
  auto both = maps({{0, 1, 2, 3}, {1, 2, 3, 0}});
  auto min  = minimal_determining_subset(z4, Subset(4, {0, 2}), both);
  REQUIRE(min.functions.size() == 1);
  CHECK(min.functions[0] == Transformation::identity(4));

  auto id = maps({{0, 1, 2}});
  CHECK(minimal_determining_subset(constant_binary(3), Subset(3, {1}), id).functions.size() == 1);
  CHECK(minimal_determining_subset(z4, Subset::empty(4), both).functions.empty());
  CHECK_THROWS_AS(minimal_determining_subset(z4, Subset(4, {0}), maps({{0, 1, 2, 3}})),
                  DomainError);

  Rng rng(61);
  for (int round = 0; round < 40; ++round) {
    auto a = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
    for (auto const& L : all_subsets(a.size())) {
      auto f = minimal_determining_subset(a, L, whole_monoid(a));
      CHECK(is_S_determined(a, L, f).determined);
      for (std::size_t i = 0; i < f.functions.size(); ++i) {
        auto g = f;
        g.functions.erase(g.functions.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK_FALSE(is_S_determined(a, L, g).determined);
      }
    }
  }
}

TEST_CASE("index bound") {
  auto z4 = cyclic_group(4);
  auto b  = index_bound_check(z4, Subset(4, {0, 2}), maps({{0, 1, 2, 3}}));
  CHECK(b.index == 2);
  CHECK(b.set_size == 1);
  CHECK(b.holds);
  // Equality on Z4 has four classes, more than 2^1, so one map cannot
  // determine it.
  CHECK_FALSE(is_S_determined(z4, Subset(4, {0}), maps({{1, 2, 3, 0}})).determined);
  CHECK_THROWS_AS(index_bound_check(z4, Subset(4, {0}), maps({{0, 1, 2, 3}})), DomainError);
}

TEST_CASE("pullback along surjective homomorphisms") {
  auto z4  = cyclic_group(4);
  auto z2  = cyclic_group(2);
  auto phi = Homomorphism::make(z4, z2, {0, 1, 0, 1});
  auto r   = pullback_syntactic_check(phi, Subset(2, {0}));
  CHECK(r.target_syntactic == Partition::discrete(2));
  CHECK(r.source_syntactic.to_string() == "{0,2}/{1,3}");
  CHECK(r.pulled_back == r.source_syntactic);
  CHECK(r.induced_map == std::vector<Element>{0, 1});

  auto one = cyclic_group(1);
  auto bot = Homomorphism::make(z4, one, {0, 0, 0, 0});
  auto u   = pullback_syntactic_check(bot, Subset::full(1));
  CHECK(u.source_syntactic == Partition::universal(4));
  CHECK(u.target_syntactic == Partition::universal(1));

  auto inj = Homomorphism::make(one, z4, {0});
  CHECK_THROWS_AS(pullback_syntactic_check(inj, Subset(4, {0})), DomainError);
  CHECK_THROWS_AS(Homomorphism::make(z4, z2, {0, 0, 1, 1}), DomainError);

  Rng rng(67);
  for (int round = 0; round < 40; ++round) {
    auto a   = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
    auto psi = random_surjective_homomorphism(rng, a);
    for (auto const& L : all_subsets(psi.target().size())) {
      auto p = pullback_syntactic_check(psi, L);
      CHECK(p.pulled_back == p.source_syntactic);
      CHECK(p.preimage == psi.preimage(L));
    }
  }
}

TEST_CASE("linearized terms determine whenever the original terms do") {
  Rng       rng(71);
  Signature sig({{"*", 2}});
  std::size_t implications = 0;
  for (int round = 0; round < 120; ++round) {
    auto a = random_binary_algebra(rng, 2 + uniform_index(rng, 3));
    auto t = random_term(rng, sig, {"x1", "x2"}, 3);
    if (count_occurrences(t, "x1") == 0 || count_occurrences(t, "x1") > 3) {
      continue;
    }
    auto              lin = linearize(t, "x1");
    std::vector<Term> original{Term::variable("x1"), t};
    std::vector<Term> linear{Term::variable(lin.x)};
    linear.insert(linear.end(), lin.terms.begin(), lin.terms.end());
    for (auto const& L : all_subsets(a.size())) {
      auto vt = is_term_determined(a, L, original, "x1");
      auto vl = is_term_determined(a, L, linear, lin.x);
      CHECK(vt.syntactic.refines(vl.induced));
      CHECK(vl.induced.refines(vt.induced));
      if (vt.determined) {
        CHECK(vl.determined);
        ++implications;
      }
    }
  }
  CHECK(implications > 0);
}
