#include <catch2/catch_amalgamated.hpp>

#include "syncon/alg_format.hpp"
#include "syncon/algebra.hpp"
#include "syncon/error.hpp"
#include "syncon/samples.hpp"
#include "syncon/term.hpp"

using namespace syncon;

namespace {

  char const* const z4e_text = R"(algebra Z4e
carrier 4
op + 2
0 1 2 3  1 2 3 0  2 3 0 1  3 0 1 2
op e 0
0
)";

  Assignment assign(std::initializer_list<std::pair<char const*, Element>> values) {
    Assignment a;
    for (auto const& [k, v] : values) {
      a[k] = v;
    }
    return a;
  }

}  // namespace

TEST_CASE("eval_symbol on small algebras") {
  auto z4 = cyclic_group(4);
  std::vector<Element> args{3, 2};
  CHECK(eval_symbol(z4, "+", args) == 1);

  auto c3 = constant_binary(3);
  std::vector<Element> args2{2, 1};
  CHECK(eval_symbol(c3, "c", args2) == 0);

  auto z4e = parse_algebra(z4e_text);
  CHECK(eval_symbol(z4e, "e", {}) == 0);
}

TEST_CASE("eval_symbol names what is wrong") {
  auto z4 = cyclic_group(4);
  std::vector<Element> two{1, 2};
  std::vector<Element> one{1};
  std::vector<Element> bad{1, 4};
  CHECK_THROWS_WITH(eval_symbol(z4, "*", two), Catch::Matchers::ContainsSubstring("'*'"));
  CHECK_THROWS_WITH(eval_symbol(z4, "+", one), Catch::Matchers::ContainsSubstring("arity"));
  CHECK_THROWS_WITH(eval_symbol(z4, "+", bad), Catch::Matchers::ContainsSubstring("4"));
}

TEST_CASE("eval_term by post-order evaluation") {
  auto z4 = cyclic_group(4);
  auto t  = parse_term("+(x,+(x,y))", z4.signature());
  CHECK(eval_term(z4, t, assign({{"x", 1}, {"y", 2}})) == 0);
  CHECK(eval_term(z4, Term::variable("x"), assign({{"x", 3}})) == 3);

  auto c3 = constant_binary(3);
  CHECK(eval_term(c3, parse_term("c(x,y)", c3.signature()), assign({{"x", 2}, {"y", 1}})) == 0);

  CHECK_THROWS_WITH(eval_term(z4, t, assign({{"x", 1}})),
                    Catch::Matchers::ContainsSubstring("'y'"));
}

TEST_CASE("term parsing and printing") {
  auto z4e = parse_algebra(z4e_text);
  auto t   = parse_term(" +( e , +(x1, x2)) ", z4e.signature());
  CHECK(t.to_string() == "+(e,+(x1,x2))");
  CHECK(t.children()[0].kind() == Term::Kind::symbol);
  CHECK(parse_term(t.to_string(), z4e.signature()) == t);
  CHECK(t.size() == 5);
  CHECK(t.depth() == 3);
  CHECK(Term::variable("x").depth() == 1);
  CHECK_THROWS_AS(parse_term("+(x", z4e.signature()), DomainError);
  CHECK_THROWS_AS(parse_term("+(x)", z4e.signature()), DomainError);
  CHECK_THROWS_AS(parse_term("f(x)", z4e.signature()), DomainError);
}

TEST_CASE("occurrence counts") {
  Signature sig({{"u", 2}, {"v", 3}, {"c", 0}, {"*", 2}});
  auto      t = parse_term("u(v(x1,u(w,x1),x3),u(x3,x2))", sig);
  CHECK(count_occurrences(t, "x2") == 1);
  CHECK(is_linear_in(t, "x2"));
  CHECK(count_occurrences(t, "x1") == 2);
  CHECK_FALSE(is_linear_in(t, "x1"));

  CHECK(count_occurrences(parse_term("*(x1,x1)", sig), "x1") == 2);
  CHECK(count_occurrences(parse_term("c", sig), "x1") == 0);
}

TEST_CASE("linearize substitutes y before, x at, z after the occurrence") {
  Signature sig({{"*", 2}});
  auto      two = linearize(parse_term("*(x1,x1)", sig), "x1");
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms[0].to_string() == "*(x,z)");
  CHECK(two.terms[1].to_string() == "*(y,x)");

  auto three = linearize(parse_term("*(*(x1,x1),x1)", sig), "x1");
  REQUIRE(three.terms.size() == 3);
  CHECK(three.terms[0].to_string() == "*(*(x,z),z)");
  CHECK(three.terms[1].to_string() == "*(*(y,x),z)");
  CHECK(three.terms[2].to_string() == "*(*(y,y),x)");

  auto one = linearize(parse_term("*(x1,x2)", sig), "x1");
  REQUIRE(one.terms.size() == 1);
  CHECK(one.terms[0].to_string() == "*(x,x2)");

  CHECK_THROWS_AS(linearize(parse_term("*(x2,x2)", sig), "x1"), DomainError);
}

TEST_CASE("linearize picks fresh names on collision") {
  Signature sig({{"*", 2}});
  auto      lin = linearize(parse_term("*(*(x1,x),*(y,x1))", sig), "x1");
  CHECK(lin.x == "x__1");
  CHECK(lin.y == "y__1");
  CHECK(lin.z == "z");
  for (auto const& s : lin.terms) {
    CHECK(is_linear_in(s, lin.x));
  }
}

TEST_CASE(".alg round trip and canonical output") {
  auto z4e  = parse_algebra(z4e_text);
  auto text = serialize_algebra(z4e);
  CHECK(parse_algebra(text) == z4e);
  CHECK(serialize_algebra(parse_algebra(text)) == text);

  auto with_subset = parse_algebra(std::string(z4e_text) + "subset even 0 2\n");
  REQUIRE(with_subset.subsets().size() == 1);
  CHECK(with_subset.subset("even").members() == std::vector<Element>{0, 2});
  CHECK(parse_algebra(serialize_algebra(with_subset)) == with_subset);
}

TEST_CASE(".alg errors carry line numbers") {
  auto line_of = [](std::string const& text) -> std::size_t {
    try {
      parse_algebra(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("algebra A\ncarrier 4\nop + 2\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 4\n") == 7);
  CHECK_THROWS_WITH(parse_algebra("algebra A\ncarrier 2\nop + 2\n0 1 1 0\nop * 2\n"),
                    Catch::Matchers::ContainsSubstring("missing table for '*'"));
  CHECK_THROWS_WITH(parse_algebra("algebra A\ncarrier 2\nop + 2\n0 1 1\n"),
                    Catch::Matchers::ContainsSubstring("'+'"));
  CHECK(line_of("algebra A\ncarrier 0\n") == 2);
  CHECK(line_of("algebra A\ncarrier 2\nop + 2\n0 1 1 0\nop + 1\n0 1\n") == 5);
  CHECK(line_of("algebra A\ncarrier 2\nsubset L 0 2\n") == 3);
  CHECK(line_of("algbra A\n") == 1);
}

TEST_CASE("the algebra constructor validates") {
  Signature sig({{"*", 2}});
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 0, {{}}), DomainError);
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 2, {{0, 1, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 2, {{0, 1, 1, 2}}), DomainError);
  CHECK_THROWS_AS(FiniteAlgebra("A", sig, 2, {}), DomainError);
  CHECK_THROWS_AS(Signature({{"*", 2}, {"*", 1}}), DomainError);
}

TEST_CASE("single symbols evaluate like eval_symbol") {
  Rng       rng(11);
  Signature sig({{"f", 1}, {"g", 2}, {"h", 3}, {"k", 0}});
  for (int round = 0; round < 50; ++round) {
    auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
    for (auto const& s : sig.symbols()) {
      std::vector<Term>        leaves;
      std::vector<Element>     args;
      Assignment               v;
      for (std::size_t i = 0; i < s.arity; ++i) {
        auto name = "x" + std::to_string(i + 1);
        leaves.push_back(Term::variable(name));
        args.push_back(static_cast<Element>(uniform_index(rng, a.size())));
        v[name] = args.back();
      }
      CHECK(eval_term(a, Term::apply(s.name, leaves), v) == eval_symbol(a, s.name, args));
    }
  }
}

TEST_CASE("replace_occurrences and variables") {
  Signature sig({{"*", 2}});
  auto      t = parse_term("*(x1,*(x2,x1))", sig);
  std::vector<Term> reps{Term::variable("a"), Term::variable("b")};
  auto              r = replace_occurrences(t, "x1", reps);
  CHECK(r.to_string() == "*(a,*(x2,b))");
  CHECK(variables(t) == std::set<std::string>{"x1", "x2"});
}
