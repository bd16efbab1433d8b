#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syncon/algebra.hpp"
#include "syncon/partition.hpp"

namespace syncon {

  // A map between algebras over the same signature that commutes with every
  // operation. Compatibility is verified on construction.
  class Homomorphism {
   public:
    // Throws DomainError if the signatures differ, the image array has the
    // wrong length or range, or some operation is not preserved (the message
    // names the symbol and argument tuple).
    static Homomorphism make(FiniteAlgebra        source,
                             FiniteAlgebra        target,
                             std::vector<Element> image);

    FiniteAlgebra const& source() const noexcept {
      return *source_;
    }

    FiniteAlgebra const& target() const noexcept {
      return *target_;
    }

    std::vector<Element> const& image() const noexcept {
      return image_;
    }

    Element operator()(Element a) const {
      return image_[a];
    }

    bool is_surjective() const noexcept {
      return surjective_;
    }

    bool is_injective() const;

    Partition kernel() const {
      return Partition::kernel(image_);
    }

    // phi^{-1}(subset) and phi(subset).
    Subset preimage(Subset const& subset) const;
    Subset image_of(Subset const& subset) const;

    // x -> next(this(x)).
    Homomorphism then(Homomorphism const& next) const;

   private:
    Homomorphism() = default;

    std::shared_ptr<FiniteAlgebra const> source_;
    std::shared_ptr<FiniteAlgebra const> target_;
    std::vector<Element>                 image_;
    bool                                 surjective_ = false;
  };

  // Reason `image` fails to be a homomorphism source -> target, if any.
  std::optional<std::string> homomorphism_failure(FiniteAlgebra const&        source,
                                                  FiniteAlgebra const&        target,
                                                  std::vector<Element> const& image);

}  // namespace syncon
