#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syncon/algebra.hpp"
#include "syncon/transformation.hpp"

namespace syncon {

  // Complete deterministic automaton. States are 0..states-1; letters are
  // indices into `alphabet`.
  struct Dfa {
    std::string                       name;
    std::vector<std::string>          alphabet;
    std::size_t                       states = 0;
    std::vector<std::vector<Element>> transitions;  // [state][letter]
    Element                           initial = 0;
    std::vector<bool>                 accepting;

    // Throws DomainError if the table is not total or out of range.
    void check() const;

    std::size_t letter_index(std::string_view letter) const;

    bool accepts(std::span<std::size_t const> word) const;
  };

  // .dfa format: `dfa <name>`, `alphabet a b ...`, `states <n>`,
  // `initial <i>`, `accepting i j ...` (possibly empty), then one line per
  // state listing its successor for each letter.
  Dfa         parse_dfa(std::string_view text);
  Dfa         read_dfa_file(std::filesystem::path const& path);
  std::string serialize_dfa(Dfa const& dfa);

  // Splits a word into letters: single characters when every letter of the
  // alphabet is one character, otherwise whitespace-separated names.
  std::vector<std::size_t> parse_word(Dfa const& dfa, std::string_view word);

  // Drops unreachable states (renumbered in breadth-first order from the
  // initial state) and merges equivalent ones. Throws DomainError for an
  // empty alphabet.
  Dfa minimal_dfa(Dfa const& dfa);

  struct TransitionMonoid {
    TransformationMonoid monoid;
    // Index in monoid.elements() of the map induced by each letter.
    std::vector<std::size_t> letter_elements;
  };

  TransitionMonoid transition_monoid(Dfa const& dfa);

  struct SyntacticMonoid {
    Dfa              minimal;
    TransitionMonoid transitions;
    // Binary "*" (u * v = u then v) and identity constant "e".
    FiniteAlgebra algebra;
    Subset        accepted;

    // The element reached by reading `word`.
    Element element_of(std::span<std::size_t const> word) const;
  };

  // Syntactic monoid of the language of `dfa`, as the transition monoid of
  // its minimal automaton. Throws InvariantViolation if the syntactic
  // congruence of the accepted set is not the equality.
  SyntacticMonoid syntactic_monoid(Dfa const& dfa);

  ////////////////////////////////////////////////////////////////////////
  // Truncated models of infinite semigroups
  ////////////////////////////////////////////////////////////////////////

  // A natural number or the absorbing point at infinity.
  class ExtendedNat {
   public:
    static ExtendedNat finite(std::uint64_t n) {
      return ExtendedNat(false, n);
    }
    static ExtendedNat infinity() {
      return ExtendedNat(true, 0);
    }

    bool is_infinite() const noexcept {
      return infinite_;
    }
    // Throws DomainError for infinity.
    std::uint64_t value() const;

    std::string to_string() const;

    bool operator==(ExtendedNat const&) const = default;

   private:
    ExtendedNat(bool infinite, std::uint64_t n) : infinite_(infinite), n_(n) {}

    bool          infinite_;
    std::uint64_t n_;
  };

  // (N, +) restricted to 0..bound; sums past the bound overflow.
  class TruncatedPlus {
   public:
    explicit TruncatedPlus(std::uint64_t bound) : bound_(bound) {}

    std::uint64_t bound() const noexcept {
      return bound_;
    }
    std::optional<std::uint64_t> add(std::uint64_t a, std::uint64_t b) const;

   private:
    std::uint64_t bound_;
  };

  // (N, max) x (N u {inf}, +), finite coordinates restricted to 0..bound.
  struct MaxPlusElement {
    std::uint64_t first;
    ExtendedNat   second;

    bool        operator==(MaxPlusElement const&) const = default;
    std::string to_string() const;
  };

  class TruncatedMaxPlus {
   public:
    explicit TruncatedMaxPlus(std::uint64_t bound) : bound_(bound) {}

    std::uint64_t bound() const noexcept {
      return bound_;
    }
    bool in_window(MaxPlusElement const& x) const;
    // nullopt when the product leaves the window.
    std::optional<MaxPlusElement> multiply(MaxPlusElement const& x, MaxPlusElement const& y) const;
    // Every element of the window, finite second coordinates first.
    std::vector<MaxPlusElement> elements() const;

    // The diagonal {(n, n)}.
    static bool in_diagonal(MaxPlusElement const& x) {
      return !x.second.is_infinite() && x.second.value() == x.first;
    }

   private:
    std::uint64_t bound_;
  };

  enum class SparseSet { powers_of_two, primes };

  bool in_sparse_set(SparseSet set, std::uint64_t n);

  struct SeparationWitness {
    std::uint64_t m;
    std::uint64_t n;
    std::uint64_t x;
  };

  struct SeparationReport {
    std::uint64_t                  bound;
    std::uint64_t                  xmax;
    SparseSet                      set;
    std::size_t                    pairs;
    std::size_t                    separated;
    std::vector<SeparationWitness> witnesses;
    // First pair (m, n) with no witness up to xmax.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> first_failure;
    // Any determining set needs at least this many functions, since the
    // bound + 1 separated elements lie in distinct classes.
    std::size_t determining_lower_bound;

    bool all_separated() const {
      return separated == pairs;
    }
  };

  // For each 0 <= m < n <= bound, the least x in 1..xmax with exactly one
  // of m + x, n + x in the set.
  SeparationReport sparse_separation(std::uint64_t bound,
                                     std::uint64_t xmax,
                                     SparseSet     set = SparseSet::powers_of_two);

  struct MaxPlusReport {
    std::uint64_t bound;
    // (i, j) against (k, inf) with i + j <= bound, via the multiplier
    // (i + j, i).
    std::size_t mixed_pairs;
    std::size_t mixed_separated;
    std::size_t mixed_out_of_window;
    // Pairs (k1, inf), (k2, inf) and the left, right, and two-sided contexts
    // tried on them.
    std::size_t infinite_pairs;
    std::size_t contexts;
    std::size_t infinite_separated;
    std::size_t overflow_skipped;
    // A sample instantiation: (i + j, i) * (i, j) and (i + j, i) * (k, inf).
    std::optional<std::pair<MaxPlusElement, MaxPlusElement>> sample;
  };

  MaxPlusReport max_plus_witnesses(std::uint64_t bound);

}  // namespace syncon
