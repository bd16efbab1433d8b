#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "syncon/algebra.hpp"
#include "syncon/congruence.hpp"
#include "syncon/homomorphism.hpp"
#include "syncon/partition.hpp"
#include "syncon/term.hpp"
#include "syncon/transformation.hpp"

namespace syncon {

  // The syntactic congruence of a subset together with the syntactic
  // morphism onto the quotient.
  struct SyntacticResult {
    Congruence    congruence;
    Homomorphism  eta;
    FiniteAlgebra quotient;
    // |M(A)|, the number of translations quantified over.
    std::size_t monoid_size;
  };

  // The relation "f(a) in L iff f(a') in L for every f in M(A)", computed by
  // quantifying over the whole translation monoid.
  Partition syntactic_partition_by_monoid(FiniteAlgebra const&        algebra,
                                          TransformationMonoid const& monoid,
                                          Subset const&               subset);

  // Computes the syntactic congruence both by quantifying over M(A) and by
  // partition refinement, and throws InvariantViolation naming a pair on
  // which they disagree.
  SyntacticResult syntactic_congruence(FiniteAlgebra const& algebra, Subset const& subset);

  // A set of self-maps used to carve out a syntactic congruence.
  struct DeterminingSet {
    enum class Kind { self_maps, linear_terms };

    std::vector<Transformation> functions;
    Kind                        kind = Kind::self_maps;
    // For Kind::linear_terms, the terms the functions were instantiated from.
    std::vector<Term> terms;
  };

  // Intersection of the relations {f^{-1}(L), complement} over f in
  // `functions`; the universal relation for an empty set.
  Partition induced_relation(std::size_t                        carrier_size,
                             std::vector<Transformation> const& functions,
                             Subset const&                      subset);

  struct DeterminationVerdict {
    bool determined = false;
    // First pair (a < b) related by exactly one of the induced relation and
    // the syntactic congruence. `in_induced` says which side relates it.
    std::optional<std::pair<Element, Element>> witness;
    bool                                       in_induced = false;
    Partition                                  induced;
    Partition                                  syntactic;
  };

  // Whether the syntactic congruence of `subset` equals the relation
  // induced by `set`. Both inclusions are checked, so the functions need not
  // be translations.
  DeterminationVerdict is_S_determined(FiniteAlgebra const&  algebra,
                                       Subset const&         subset,
                                       DeterminingSet const& set);

  // The maps a -> t(a, b_2, ..., b_m) for every t in `terms` and every
  // choice of values for the variables of t other than `variable`, ordered
  // by term and then by parameter tuple, deduplicated by image.
  DeterminingSet instantiate_terms(FiniteAlgebra const&     algebra,
                                   std::vector<Term> const& terms,
                                   std::string const&       variable);

  // Whether the terms determine the syntactic congruence of `subset`, with
  // parameters ranging over the whole algebra. Terms need not be linear.
  // Throws DomainError if some term does not contain `variable` or is not
  // well formed over the signature.
  DeterminationVerdict is_term_determined(FiniteAlgebra const&     algebra,
                                          Subset const&            subset,
                                          std::vector<Term> const& terms,
                                          std::string const&       variable);

  // {x1, x2*x1, x1*x2, x2*x1*x3} for the binary symbol `symbol`; the last
  // term is written (x2*x1)*x3.
  std::vector<Term> semigroup_term_set(std::string const& symbol);

  // Lifts every element of the translation monoid of the syntactic quotient
  // to a translation of `algebra` (parameters replaced by their smallest
  // preimages) and returns the lifts. Asserts eta o lift = f o eta for each
  // lift and that the result determines the syntactic congruence.
  DeterminingSet determining_set_from_quotient(FiniteAlgebra const& algebra,
                                               Subset const&        subset);

  // Greedily drops functions while the set still determines the syntactic
  // congruence, trying the last function in image order first, until no
  // single removal is possible. Throws DomainError if `set` does not
  // determine it to begin with.
  DeterminingSet minimal_determining_subset(FiniteAlgebra const&  algebra,
                                            Subset const&         subset,
                                            DeterminingSet const& set);

  struct IndexBound {
    std::size_t index;
    std::size_t set_size;
    bool        holds;
  };

  // index <= 2^|F| for a determining F. Throws DomainError if F does not
  // determine the syntactic congruence.
  IndexBound index_bound_check(FiniteAlgebra const&  algebra,
                               Subset const&         subset,
                               DeterminingSet const& set);

  struct PullbackReport {
    // The syntactic congruence of L on the target.
    Partition target_syntactic;
    // (phi x phi)^{-1} of it, on the source.
    Partition pulled_back;
    // The syntactic congruence of phi^{-1}(L) on the source.
    Partition source_syntactic;
    Subset    preimage;
    // Class i of source_syntactic goes to class induced_map[i] of
    // target_syntactic; a bijective homomorphism of the quotients.
    std::vector<Element> induced_map;
  };

  // Checks that pulling back the syntactic congruence of L along a
  // surjective homomorphism gives the syntactic congruence of phi^{-1}(L)
  // and that phi induces an isomorphism of the quotients. Throws DomainError
  // if phi is not surjective and InvariantViolation if the identity fails.
  PullbackReport pullback_syntactic_check(Homomorphism const& phi, Subset const& subset);

}  // namespace syncon
