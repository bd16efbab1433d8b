#include "syncon/term.hpp"

#include <algorithm>
#include <cctype>

#include "syncon/error.hpp"

namespace syncon {

  Term Term::variable(std::string name) {
    if (name.empty()) {
      throw DomainError("empty variable name");
    }
    return Term(std::make_shared<Node const>(Node{Kind::variable, std::move(name), {}}));
  }

  Term Term::apply(std::string symbol, std::vector<Term> children) {
    if (symbol.empty()) {
      throw DomainError("empty symbol name");
    }
    return Term(std::make_shared<Node const>(
        Node{Kind::symbol, std::move(symbol), std::move(children)}));
  }

  std::size_t Term::size() const {
    std::size_t n = 1;
    for (auto const& c : children()) {
      n += c.size();
    }
    return n;
  }

  std::size_t Term::depth() const {
    std::size_t d = 0;
    for (auto const& c : children()) {
      d = std::max(d, c.depth());
    }
    return d + 1;
  }

  std::string Term::to_string() const {
    std::string out = label();
    if (!children().empty()) {
      out += '(';
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += children()[i].to_string();
      }
      out += ')';
    }
    return out;
  }

  bool Term::operator==(Term const& that) const {
    if (node_ == that.node_) {
      return true;
    }
    return kind() == that.kind() && label() == that.label()
           && std::equal(children().begin(),
                         children().end(),
                         that.children().begin(),
                         that.children().end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class TermParser {
     public:
      TermParser(std::string_view text, Signature const& sig)
          : text_(text), sig_(sig) {}

      Term parse() {
        Term t = parse_term();
        skip_space();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw DomainError("term '" + std::string(text_) + "', offset "
                          + std::to_string(pos_) + ": " + what);
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      static bool is_name_char(char c) {
        return c != '(' && c != ')' && c != ','
               && !std::isspace(static_cast<unsigned char>(c));
      }

      std::string parse_name() {
        skip_space();
        auto start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) {
          ++pos_;
        }
        if (start == pos_) {
          fail("expected a name");
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      Term parse_term() {
        auto name = parse_name();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(') {
          ++pos_;
          std::vector<Term> children;
          children.push_back(parse_term());
          skip_space();
          while (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            children.push_back(parse_term());
            skip_space();
          }
          if (pos_ >= text_.size() || text_[pos_] != ')') {
            fail("expected ')'");
          }
          ++pos_;
          return Term::apply(std::move(name), std::move(children));
        }
        auto s = sig_.find(name);
        if (s && sig_[*s].arity == 0) {
          return Term::apply(std::move(name));
        }
        return Term::variable(std::move(name));
      }

      std::string_view text_;
      Signature const& sig_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Term parse_term(std::string_view text, Signature const& signature) {
    Term t = TermParser(text, signature).parse();
    check_term(signature, t);
    return t;
  }

  void check_term(Signature const& signature, Term const& term) {
    if (term.is_variable()) {
      if (auto s = signature.find(term.label())) {
        throw DomainError("variable '" + term.label()
                          + "' clashes with a symbol of the signature");
      }
      return;
    }
    auto s = signature.find(term.label());
    if (!s) {
      throw DomainError("unknown symbol '" + term.label() + "' in term");
    }
    if (signature[*s].arity != term.children().size()) {
      throw DomainError("symbol '" + term.label() + "' has arity "
                        + std::to_string(signature[*s].arity) + " but "
                        + std::to_string(term.children().size())
                        + " children in term");
    }
    for (auto const& c : term.children()) {
      check_term(signature, c);
    }
  }

  std::set<std::string> variables(Term const& term) {
    std::set<std::string> out;
    auto                  go = [&out](auto& self, Term const& t) -> void {
      if (t.is_variable()) {
        out.insert(t.label());
      }
      for (auto const& c : t.children()) {
        self(self, c);
      }
    };
    go(go, term);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct ResolvedTerm {
      // Post-order program: each node is a variable value or a symbol with
      // its children on the value stack.
      struct Step {
        bool        is_value;
        Element     value;
        std::size_t symbol;
        std::size_t arity;
      };
      std::vector<Step> steps;
    };

    void compile(FiniteAlgebra const& algebra,
                 Term const&          t,
                 Assignment const&    assignment,
                 ResolvedTerm&        out) {
      if (t.is_variable()) {
        auto it = assignment.find(t.label());
        if (it == assignment.end()) {
          throw DomainError("variable '" + t.label() + "' is not assigned");
        }
        if (it->second >= algebra.size()) {
          throw DomainError("variable '" + t.label() + "' is assigned "
                            + std::to_string(it->second)
                            + ", out of range for carrier of size "
                            + std::to_string(algebra.size()));
        }
        out.steps.push_back({true, it->second, 0, 0});
        return;
      }
      auto s = algebra.signature().find(t.label());
      if (!s) {
        throw DomainError("unknown symbol '" + t.label() + "' in term");
      }
      if (algebra.signature()[*s].arity != t.children().size()) {
        throw DomainError("symbol '" + t.label() + "' has arity "
                          + std::to_string(algebra.signature()[*s].arity)
                          + " but " + std::to_string(t.children().size())
                          + " children in term");
      }
      for (auto const& c : t.children()) {
        compile(algebra, c, assignment, out);
      }
      out.steps.push_back({false, 0, *s, t.children().size()});
    }

  }  // namespace

  Element eval_term(FiniteAlgebra const& algebra,
                    Term const&          term,
                    Assignment const&    assignment) {
    ResolvedTerm program;
    compile(algebra, term, assignment, program);
    std::vector<Element> stack;
    for (auto const& step : program.steps) {
      if (step.is_value) {
        stack.push_back(step.value);
        continue;
      }
      auto const first = stack.size() - step.arity;
      Element    v     = algebra.apply(
          step.symbol, std::span<Element const>(stack.data() + first, step.arity));
      stack.resize(first);
      stack.push_back(v);
    }
    return stack.back();
  }

  ////////////////////////////////////////////////////////////////////////
  // Occurrences and linearization
  ////////////////////////////////////////////////////////////////////////

  std::size_t count_occurrences(Term const& term, std::string_view var) {
    if (term.is_variable()) {
      return term.label() == var ? 1 : 0;
    }
    std::size_t n = 0;
    for (auto const& c : term.children()) {
      n += count_occurrences(c, var);
    }
    return n;
  }

  namespace {

    Term replace_impl(Term const&           t,
                      std::string_view      var,
                      std::span<Term const> replacements,
                      std::size_t&          next) {
      if (t.is_variable()) {
        if (t.label() == var) {
          return replacements[next++];
        }
        return t;
      }
      std::vector<Term> children;
      children.reserve(t.children().size());
      for (auto const& c : t.children()) {
        children.push_back(replace_impl(c, var, replacements, next));
      }
      return Term::apply(t.label(), std::move(children));
    }

    std::string fresh(std::string const& base, std::set<std::string> const& taken) {
      if (!taken.contains(base)) {
        return base;
      }
      for (std::size_t i = 1;; ++i) {
        auto candidate = base + "__" + std::to_string(i);
        if (!taken.contains(candidate)) {
          return candidate;
        }
      }
    }

  }  // namespace

  Term replace_occurrences(Term const&           term,
                           std::string_view      var,
                           std::span<Term const> replacements) {
    if (replacements.size() != count_occurrences(term, var)) {
      throw DomainError("replace_occurrences: expected "
                        + std::to_string(count_occurrences(term, var))
                        + " replacements, got "
                        + std::to_string(replacements.size()));
    }
    std::size_t next = 0;
    return replace_impl(term, var, replacements, next);
  }

  Linearization linearize(Term const& term, std::string_view var) {
    auto const r = count_occurrences(term, var);
    if (r == 0) {
      throw DomainError("cannot linearize '" + term.to_string() + "' in '"
                        + std::string(var) + "': the variable does not occur");
    }
    auto taken = variables(term);
    taken.erase(std::string(var));

    Linearization out;
    out.x = fresh("x", taken);
    taken.insert(out.x);
    out.y = fresh("y", taken);
    taken.insert(out.y);
    out.z = fresh("z", taken);

    auto const x = Term::variable(out.x);
    auto const y = Term::variable(out.y);
    auto const z = Term::variable(out.z);

    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Term> repl;
      repl.reserve(r);
      for (std::size_t j = 0; j < r; ++j) {
        repl.push_back(j < i ? y : (j == i ? x : z));
      }
      out.terms.push_back(replace_occurrences(term, var, repl));
    }
    return out;
  }

}  // namespace syncon
