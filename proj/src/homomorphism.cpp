#include "syncon/homomorphism.hpp"

#include <algorithm>
#include <sstream>

#include "syncon/error.hpp"

namespace syncon {

  std::optional<std::string> homomorphism_failure(FiniteAlgebra const&        source,
                                                  FiniteAlgebra const&        target,
                                                  std::vector<Element> const& image) {
    if (!(source.signature() == target.signature())) {
      return "source and target have different signatures";
    }
    if (image.size() != source.size()) {
      return "image has " + std::to_string(image.size()) + " entries for a source of size "
             + std::to_string(source.size());
    }
    for (std::size_t a = 0; a < image.size(); ++a) {
      if (image[a] >= target.size()) {
        return "image of " + std::to_string(a) + " is " + std::to_string(image[a])
               + ", out of range for the target";
      }
    }
    auto const& sig = source.signature();
    auto const  n   = source.size();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      auto const           k     = sig[s].arity;
      auto const           total = table_size(n, k);
      std::vector<Element> mapped(k);
      for (std::size_t r = 0; r < total; ++r) {
        auto args = tuple_at(n, k, r);
        for (std::size_t j = 0; j < k; ++j) {
          mapped[j] = image[args[j]];
        }
        if (image[source.apply(s, args)] != target.apply(s, mapped)) {
          std::ostringstream os;
          os << "'" << sig[s].name << "' is not preserved at (";
          for (std::size_t j = 0; j < k; ++j) {
            os << (j == 0 ? "" : ",") << args[j];
          }
          os << ")";
          return os.str();
        }
      }
    }
    return std::nullopt;
  }

  Homomorphism Homomorphism::make(FiniteAlgebra        source,
                                  FiniteAlgebra        target,
                                  std::vector<Element> image) {
    if (auto failure = homomorphism_failure(source, target, image)) {
      throw DomainError("not a homomorphism from '" + source.name() + "' to '"
                        + target.name() + "': " + *failure);
    }
    Homomorphism h;
    std::vector<bool> hit(target.size(), false);
    for (auto v : image) {
      hit[v] = true;
    }
    h.surjective_ = std::find(hit.begin(), hit.end(), false) == hit.end();
    h.source_     = std::make_shared<FiniteAlgebra const>(std::move(source));
    h.target_     = std::make_shared<FiniteAlgebra const>(std::move(target));
    h.image_      = std::move(image);
    return h;
  }

  bool Homomorphism::is_injective() const {
    return kernel().num_classes() == image_.size();
  }

  Subset Homomorphism::preimage(Subset const& subset) const {
    if (subset.carrier_size() != target_->size()) {
      throw DomainError("subset does not live in the target algebra");
    }
    std::vector<bool> bits(image_.size());
    for (std::size_t a = 0; a < image_.size(); ++a) {
      bits[a] = subset.contains(image_[a]);
    }
    return Subset::from_bits(std::move(bits));
  }

  Subset Homomorphism::image_of(Subset const& subset) const {
    if (subset.carrier_size() != source_->size()) {
      throw DomainError("subset does not live in the source algebra");
    }
    std::vector<bool> bits(target_->size(), false);
    for (std::size_t a = 0; a < image_.size(); ++a) {
      if (subset.contains(static_cast<Element>(a))) {
        bits[image_[a]] = true;
      }
    }
    return Subset::from_bits(std::move(bits));
  }

  Homomorphism Homomorphism::then(Homomorphism const& next) const {
    if (!(next.source() == target())) {
      throw DomainError("composing homomorphisms whose ends do not match");
    }
    std::vector<Element> image(image_.size());
    for (std::size_t a = 0; a < image_.size(); ++a) {
      image[a] = next.image_[image_[a]];
    }
    Homomorphism h;
    h.source_     = source_;
    h.target_     = next.target_;
    h.image_      = std::move(image);
    h.surjective_ = surjective_ && next.surjective_;
    return h;
  }

}  // namespace syncon
