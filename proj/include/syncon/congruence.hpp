#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syncon/algebra.hpp"
#include "syncon/homomorphism.hpp"
#include "syncon/partition.hpp"

namespace syncon {

  // A partition certified to be compatible with every operation of a
  // particular algebra. Only certify() and the functions below construct
  // one, so holding a Congruence is the certificate.
  class Congruence {
   public:
    Partition const& partition() const noexcept {
      return partition_;
    }

    std::size_t num_classes() const noexcept {
      return partition_.num_classes();
    }

    // Fingerprint of the algebra the certificate was issued for.
    std::uint64_t algebra_fingerprint() const noexcept {
      return fingerprint_;
    }

    bool operator==(Congruence const&) const = default;

   private:
    friend std::optional<Congruence> certify(FiniteAlgebra const&, Partition const&);
    friend Congruence meet(Congruence const&, Congruence const&);

    Congruence(Partition p, std::uint64_t fingerprint)
        : partition_(std::move(p)), fingerprint_(fingerprint) {}

    Partition     partition_;
    std::uint64_t fingerprint_;
  };

  // True iff `partition` is compatible with every operation. Checks one
  // argument position at a time: for each symbol, position, fixed tuple of
  // the other arguments, and pair of related elements in that position, the
  // results must be related. Throws DomainError on a length mismatch.
  bool is_congruence(FiniteAlgebra const& algebra, Partition const& partition);

  // The Congruence for `partition` if is_congruence holds.
  std::optional<Congruence> certify(FiniteAlgebra const& algebra, Partition const& partition);

  // certify(), throwing InvariantViolation when the partition was expected
  // to be a congruence and is not.
  Congruence certify_or_fail(FiniteAlgebra const& algebra, Partition const& partition);

  Congruence equality_congruence(FiniteAlgebra const& algebra);
  Congruence universal_congruence(FiniteAlgebra const& algebra);

  // True iff `subset` is a union of classes.
  inline bool saturates(Partition const& partition, Subset const& subset) {
    return partition.saturates(subset);
  }

  // The largest congruence saturating `subset`, by partition refinement from
  // the two-class relation {L, complement} along the elementary
  // translations.
  Congruence largest_congruence_saturating(FiniteAlgebra const& algebra,
                                           Subset const&        subset);

  struct Quotient {
    FiniteAlgebra algebra;
    Homomorphism  projection;
  };

  // The quotient algebra on the classes of `theta`, numbered canonically,
  // with the canonical projection. Throws DomainError if theta was certified
  // for a different algebra and InvariantViolation if some operation is not
  // well defined on classes.
  Quotient quotient(FiniteAlgebra const& algebra, Congruence const& theta);

  // Intersection of two congruences on the same algebra.
  Congruence meet(Congruence const& lhs, Congruence const& rhs);

  // Every congruence of a small algebra, by filtering all set partitions.
  // Throws DomainError for carriers larger than 5.
  std::vector<Congruence> enumerate_congruences_oracle(FiniteAlgebra const& algebra);

}  // namespace syncon
