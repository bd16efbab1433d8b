#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syncon/algebra.hpp"

namespace syncon {

  // A term over a ranked signature: a finite ordered tree whose leaves are
  // variables or constants and whose inner nodes are operation symbols with
  // one child per argument. Terms are immutable values sharing structure;
  // equality is equality of labels and shape.
  class Term {
   public:
    enum class Kind { variable, symbol };

    static Term variable(std::string name);
    // A symbol node; constants are symbol nodes without children.
    static Term apply(std::string symbol, std::vector<Term> children = {});

    Kind kind() const noexcept {
      return node_->kind;
    }

    bool is_variable() const noexcept {
      return node_->kind == Kind::variable;
    }

    std::string const& label() const noexcept {
      return node_->label;
    }

    std::span<Term const> children() const noexcept {
      return node_->children;
    }

    // Number of nodes.
    std::size_t size() const;
    // Nodes on a longest root-to-leaf path; a leaf has depth 1.
    std::size_t depth() const;

    // Function-application syntax, e.g. "u(v(x1,u(w,x1),x3),u(x3,x2))".
    std::string to_string() const;

    bool operator==(Term const& that) const;

   private:
    struct Node {
      Kind              kind;
      std::string       label;
      std::vector<Term> children;
    };

    explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

    std::shared_ptr<Node const> node_;
  };

  using Assignment = std::map<std::string, Element, std::less<>>;

  // Parses function-application syntax. A bare name is a constant if the
  // signature declares it with rank 0 and a variable otherwise. Names are
  // maximal runs of characters other than whitespace, parentheses and commas.
  Term parse_term(std::string_view text, Signature const& signature);

  // Throws DomainError if a symbol is unknown or used with the wrong number
  // of children.
  void check_term(Signature const& signature, Term const& term);

  // Names of the variables occurring in `term`, sorted.
  std::set<std::string> variables(Term const& term);

  // Value of `term` under the homomorphic extension of `assignment`.
  Element eval_term(FiniteAlgebra const& algebra,
                    Term const&          term,
                    Assignment const&    assignment);

  std::size_t count_occurrences(Term const& term, std::string_view var);

  inline bool is_linear_in(Term const& term, std::string_view var) {
    return count_occurrences(term, var) == 1;
  }

  // Replaces the occurrences of `var`, in left-to-right leaf order, by the
  // given terms. `replacements.size()` must equal count_occurrences.
  Term replace_occurrences(Term const&              term,
                           std::string_view         var,
                           std::span<Term const>    replacements);

  // Result of linearizing a term in one of its variables. For a term t with
  // r occurrences of the variable, terms[i - 1] is t with occurrence j
  // replaced by `y` for j < i, by `x` for j = i, and by `z` for j > i. Every
  // term is linear in `x`.
  struct Linearization {
    std::vector<Term> terms;
    std::string       x;
    std::string       y;
    std::string       z;
  };

  // Fresh names are "x", "y", "z", numbered "x__1", "x__2", ... when they
  // collide with the remaining variables of the term. Throws DomainError if
  // `var` does not occur in `term`.
  Linearization linearize(Term const& term, std::string_view var);

}  // namespace syncon
