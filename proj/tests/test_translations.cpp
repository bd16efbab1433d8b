#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "syncon/alg_format.hpp"
#include "syncon/error.hpp"
#include "syncon/samples.hpp"
#include "syncon/transformation.hpp"

using namespace syncon;

namespace {

  std::vector<std::vector<Element>> images(std::vector<Transformation> const& fs) {
    std::vector<std::vector<Element>> out;
    for (auto const& f : fs) {
      out.push_back(f.image());
    }
    return out;
  }

  std::set<std::vector<Element>> image_set(TransformationMonoid const& m) {
    std::set<std::vector<Element>> out;
    for (auto const& f : m.elements()) {
      out.insert(f.image());
    }
    return out;
  }

  // A random term in x1, x2, x3 containing x1 exactly once.
  Term random_linear_term(Rng& rng, Signature const& sig) {
    std::vector<std::string> vars{"x1", "x2", "x3"};
    for (;;) {
      auto t = random_term(rng, sig, vars, 1 + uniform_index(rng, 4));
      auto k = count_occurrences(t, "x1");
      if (k == 0) {
        continue;
      }
      std::vector<Term> reps(k, Term::variable("x2"));
      reps[uniform_index(rng, k)] = Term::variable("x1");
      return replace_occurrences(t, "x1", reps);
    }
  }

}  // namespace

TEST_CASE("composition applies the left map first") {
  Transformation f({1, 2, 0});
  Transformation g({0, 0, 2});
  CHECK(f.then(g).image() == std::vector<Element>{0, 2, 0});
  CHECK(g.then(f).image() == std::vector<Element>{1, 1, 0});
  CHECK(Transformation::identity(3).then(f) == f);
  CHECK(Transformation::constant(3, 2).image() == std::vector<Element>{2, 2, 2});
  CHECK(f.preimage(Subset(3, {0})).members() == std::vector<Element>{2});
}

TEST_CASE("elementary translations of small algebras") {
  auto z4 = elementary_translations(cyclic_group(4));
  CHECK(images(z4) == std::vector<std::vector<Element>>{
                          {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});

  auto c3 = elementary_translations(constant_binary(3));
  CHECK(images(c3) == std::vector<std::vector<Element>>{{0, 0, 0}});

  auto sl = elementary_translations(chain_semilattice(2));
  CHECK(images(sl) == std::vector<std::vector<Element>>{{0, 1}, {1, 1}});

  auto const& p = std::get<ElementaryProvenance>(z4[1].provenance());
  CHECK(p.symbol_name == "+");
  for (Element x = 0; x < 4; ++x) {
    auto args          = p.arguments;
    args[p.coordinate] = x;
    CHECK(eval_symbol(cyclic_group(4), "+", args) == z4[1](x));
  }
}

TEST_CASE("the two-element meet semilattice") {
  auto meet2 = parse_algebra("algebra M2\ncarrier 2\nop ^ 2\n0 0 0 1\n");
  CHECK(images(elementary_translations(meet2))
        == std::vector<std::vector<Element>>{{0, 0}, {0, 1}});
  auto t = parse_term("^(x,y)", meet2.signature());
  CHECK(transformation_of_linear_term(meet2, t, "x", {{"y", 0}}) == Transformation::constant(2, 0));
  CHECK(transformation_of_linear_term(meet2, t, "x", {{"y", 1}}) == Transformation::identity(2));
}

TEST_CASE("linear term examples") {
  auto z4 = cyclic_group(4);
  auto t  = parse_term("+(x,y)", z4.signature());
  CHECK(transformation_of_linear_term(z4, t, "x", {{"y", 3}}).image()
        == std::vector<Element>{3, 0, 1, 2});
  CHECK(transformation_of_linear_term(z4, Term::variable("x"), "x", {})
        == Transformation::identity(4));
}

TEST_CASE("translation monoid sizes") {
  CHECK(translation_monoid(cyclic_group(4)).size() == 4);
  CHECK(translation_monoid(constant_binary(3)).size() == 2);
  CHECK(translation_monoid(cyclic_group(1)).size() == 1);
  CHECK(translation_monoid(chain_semilattice(3)).size() == 3);
  CHECK(translation_monoid(left_zero(3)).size() == 4);
  CHECK(translation_monoid(cyclic_group(4)).elements().front() == Transformation::identity(4));
}

TEST_CASE("closure generates the full transformation monoid") {
  std::vector<Transformation> gens{Transformation({1, 2, 0}), Transformation({1, 0, 2}),
                                   Transformation({0, 0, 2})};
  auto                        m = close_under_composition(3, gens);
  CHECK(m.size() == 27);
  CHECK(full_transformation_monoid_size(3) == 27);
  CHECK(full_transformation_monoid_size(40) == SIZE_MAX);
  CHECK_THROWS_AS(close_under_composition(3, gens, 26), InvariantViolation);
  CHECK_THROWS_AS(translation_monoid(cyclic_group(4), 3), InvariantViolation);
  CHECK_THROWS_AS(close_under_composition(3, {Transformation({0, 1})}), DomainError);
}

TEST_CASE("translation monoids are closed and match the fixed-point oracle") {
  Rng       rng(31);
  Signature sig({{"g", 2}, {"f", 1}, {"h", 3}, {"k", 0}});
  for (int round = 0; round < 60; ++round) {
    auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
    auto m = translation_monoid(a);
    CHECK(image_set(m) == oracle::translation_monoid(a));
    CHECK(m.size() == image_set(m).size());
    for (auto const& f : m.elements()) {
      for (auto const& g : m.elements()) {
        CHECK(m.contains(f.then(g)));
      }
    }
    for (auto const& e : elementary_translations(a)) {
      CHECK(m.contains(e));
    }
  }
}

TEST_CASE("linear terms give translations") {
  Rng       rng(37);
  Signature sig({{"g", 2}, {"f", 1}, {"h", 3}});
  std::size_t checked = 0;
  for (int round = 0; round < 25; ++round) {
    auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
    auto m = translation_monoid(a);
    for (int i = 0; i < 25; ++i) {
      auto       t = random_linear_term(rng, sig);
      Assignment v{{"x2", static_cast<Element>(uniform_index(rng, a.size()))},
                   {"x3", static_cast<Element>(uniform_index(rng, a.size()))}};
      auto       f = transformation_of_linear_term(a, t, "x1", v);
      CHECK(m.contains(f));
      for (Element x = 0; x < a.size(); ++x) {
        auto w  = v;
        w["x1"] = x;
        CHECK(f(x) == eval_term(a, t, w));
      }
      ++checked;
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("linear terms are required") {
  auto      z4 = cyclic_group(4);
  auto      t  = parse_term("+(x1,x1)", z4.signature());
  CHECK_THROWS_AS(transformation_of_linear_term(z4, t, "x1", {}), DomainError);
  auto u = parse_term("+(x1,x2)", z4.signature());
  CHECK_THROWS_AS(transformation_of_linear_term(z4, u, "x1", {}), DomainError);
}

TEST_CASE("recorded provenance replays and yields linear terms") {
  Rng       rng(41);
  Signature sig({{"g", 2}, {"f", 1}});
  for (int round = 0; round < 40; ++round) {
    auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
    auto m = translation_monoid(a);
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto const& word = m.word_of(i);
      CHECK(m.replay(word) == m.elements()[i]);
      auto const& p = std::get<CompositeProvenance>(m.elements()[i].provenance());
      CHECK(p.generators == word);
      auto w = linear_term_of(m, i);
      CHECK(is_linear_in(w.term, "x1"));
      CHECK(transformation_of_linear_term(a, w.term, "x1", w.parameters) == m.elements()[i]);
    }
  }
}

TEST_CASE("breadth-first order records shortest words") {
  auto m = translation_monoid(cyclic_group(5));
  for (std::size_t i = 1; i < m.size(); ++i) {
    CHECK(m.word_of(i - 1).size() <= m.word_of(i).size());
  }
  CHECK(m.word_of(0).empty());
}
