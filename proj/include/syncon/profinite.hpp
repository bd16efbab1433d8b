#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syncon/algebra.hpp"
#include "syncon/congruence.hpp"
#include "syncon/homomorphism.hpp"
#include "syncon/syntactic.hpp"

namespace syncon {

  // A finite tower A_1 <- A_2 <- ... <- A_d of algebras standing in for its
  // inverse limit. Levels are numbered from 1; connecting(k) maps level k + 1
  // onto level k. The constructor only checks shapes (map count, lengths,
  // ranges); validate_system checks the algebra.
  class InverseSystem {
   public:
    InverseSystem(std::string                       name,
                  std::vector<FiniteAlgebra>        levels,
                  std::vector<std::vector<Element>> connecting);

    std::string const& name() const noexcept {
      return name_;
    }

    std::size_t depth() const noexcept {
      return levels_.size();
    }

    FiniteAlgebra const& level(std::size_t k) const;

    // Map from level k + 1 to level k, 1 <= k < depth.
    std::vector<Element> const& connecting(std::size_t k) const;

    // The composite map from level m to level k, k <= m.
    std::vector<Element> composite(std::size_t from, std::size_t to) const;

   private:
    std::string                       name_;
    std::vector<FiniteAlgebra>        levels_;
    std::vector<std::vector<Element>> connecting_;
  };

  struct SystemDiagnostics {
    bool                       valid = true;
    std::optional<std::size_t> failing_level;
    std::string                message;
  };

  // Checks that every connecting map is a surjective homomorphism and
  // reports the first failure.
  SystemDiagnostics validate_system(InverseSystem const& system);

  // Reads the .sys format: `system <name>`, `depth <d>`, d algebra blocks in
  // the .alg format, then d - 1 blocks `map <k+1> <k>` listing the image of
  // each element of level k + 1.
  InverseSystem parse_system(std::string_view text);
  InverseSystem read_system_file(std::filesystem::path const& path);
  std::string   serialize_system(InverseSystem const& system);

  // A coherent choice of one element per level, up to some depth.
  struct Thread {
    std::vector<Element> coordinates;
  };

  // Throws DomainError if the thread is longer than the system, out of
  // range, or not coherent under the connecting maps.
  void check_thread(InverseSystem const& system, Thread const& thread);

  // Smallest level at which the threads differ, or nullopt if they agree on
  // every represented level.
  std::optional<std::size_t> separate_points(InverseSystem const& system,
                                             Thread const&        lhs,
                                             Thread const&        rhs);

  // The clopen set of the limit given by the preimage of a subset of one
  // level.
  struct CylinderSet {
    std::size_t level;
    Subset      subset;
  };

  struct Recognition {
    std::size_t level;
    // The finite algebra recognizing the cylinder and the image of the set.
    FiniteAlgebra target;
    Subset        image;
    // maps[m - level] : A_m -> target for m = level, ..., depth. Each is the
    // syntactic morphism composed with the projection to `level`.
    std::vector<std::vector<Element>> maps;
  };

  // A homomorphism onto a finite algebra recognizing the cylinder at every
  // represented level: the preimage of the image of the set is the set
  // itself. Throws DomainError for invalid systems or levels and
  // InvariantViolation if recognition fails.
  Recognition recognize_clopen(InverseSystem const& system, CylinderSet const& cylinder);

  // The syntactic congruence at level m of the preimage of the cylinder,
  // checked against the pullback of the syntactic congruence at the
  // cylinder's own level.
  Congruence cylinder_syntactic(InverseSystem const& system,
                                CylinderSet const&   cylinder,
                                std::size_t          level);

  // Meet of the syntactic congruences of the blocks of a partition of the
  // carrier; saturates every block. Throws DomainError if the blocks overlap
  // or miss an element.
  Congruence partition_meet_congruence(FiniteAlgebra const&       algebra,
                                       std::vector<Subset> const& blocks);

  // Index and period of the cyclic subsemigroup generated by a:
  // a^(index + period) = a^index, with both as small as possible.
  struct CyclicStructure {
    std::size_t          index;
    std::size_t          period;
    std::vector<Element> powers;  // powers[i] = a^(i + 1), i < index + period - 1
  };

  CyclicStructure cyclic_structure(FiniteAlgebra const& algebra, std::size_t symbol, Element a);

  // a^(n!) for a natural number n, or the idempotent power a^omega when n is
  // nullopt. Uses the unique binary symbol of the algebra, which must be
  // associative. n! is never materialized.
  Element omega_power(FiniteAlgebra const& algebra, Element a, std::optional<std::uint64_t> n);

  // The levelwise quotient of a system by congruences that the connecting
  // maps respect. Throws DomainError naming a level and a pair when a
  // connecting map sends related elements to unrelated ones.
  InverseSystem quotient_system(InverseSystem const& system, std::vector<Congruence> const& thetas);

  enum class ConditionStatus { holds, fails, trivial, implied, out_of_scope };

  struct ConditionReport {
    int             number;
    std::string     summary;
    ConditionStatus status;
    std::string     note;
  };

  // Finite witnesses for the equivalent characterizations of profiniteness,
  // specialized to one subset of one finite algebra.
  struct ProfinitenessReport {
    SyntacticResult syntactic;
    // The recognizing morphism (the syntactic morphism) and the image of L.
    Subset image;
    bool   recognizes;
    // Term set used for determination by terms.
    std::vector<Term>    terms;
    bool                 semigroup_terms;
    DeterminationVerdict term_verdict;
    // Finite determining set of translations built from the quotient.
    DeterminingSet       lifted;
    DeterminationVerdict lifted_verdict;
    bool                 lifted_in_monoid;
    std::vector<ConditionReport> conditions;

    bool all_hold() const;
  };

  ProfinitenessReport profiniteness_report(FiniteAlgebra const& algebra, Subset const& subset);

  std::string_view to_string(ConditionStatus status);

}  // namespace syncon
