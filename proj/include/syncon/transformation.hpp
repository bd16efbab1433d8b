#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "syncon/algebra.hpp"
#include "syncon/term.hpp"

namespace syncon {

  // x -> w(b_1, ..., b_{i-1}, x, b_{i+1}, ..., b_k). `arguments` holds the
  // full argument tuple; the entry at `coordinate` is irrelevant and zero.
  struct ElementaryProvenance {
    std::size_t          symbol;
    std::string          symbol_name;
    std::size_t          coordinate;
    std::vector<Element> arguments;
  };

  // Apply generators[0] first, then generators[1], and so on. The empty
  // sequence is the identity.
  struct CompositeProvenance {
    std::vector<std::size_t> generators;
  };

  // a -> term with `variable` set to a and the other variables from
  // `assignment`.
  struct TermProvenance {
    Term        term;
    std::string variable;
    Assignment  assignment;
  };

  using Provenance = std::variant<std::monostate,
                                  ElementaryProvenance,
                                  CompositeProvenance,
                                  TermProvenance>;

  // A self-map of {0, ..., n - 1}, with an optional record of where it came
  // from. Comparison looks at the image array only.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<Element> image, Provenance provenance = {});

    static Transformation identity(std::size_t n);
    static Transformation constant(std::size_t n, Element value);

    std::size_t degree() const noexcept {
      return image_.size();
    }

    Element operator()(Element a) const {
      return image_[a];
    }

    std::vector<Element> const& image() const noexcept {
      return image_;
    }

    Provenance const& provenance() const noexcept {
      return provenance_;
    }

    // x -> next(this(x)). The result carries no provenance.
    Transformation then(Transformation const& next) const;

    // Preimage of a subset.
    Subset preimage(Subset const& subset) const;

    // "[0 1 2 3]"
    std::string to_string() const;

    bool operator==(Transformation const& that) const {
      return image_ == that.image_;
    }

    std::strong_ordering operator<=>(Transformation const& that) const {
      return image_ <=> that.image_;
    }

   private:
    std::vector<Element> image_;
    Provenance           provenance_;
  };

  struct ImageHash {
    std::size_t operator()(std::vector<Element> const& image) const noexcept;
  };

  // A composition-closed set of self-maps containing the identity, with the
  // generators it was built from. Elements are stored in breadth-first
  // discovery order, identity first; each carries a CompositeProvenance
  // naming a shortest generator sequence that produces it.
  class TransformationMonoid {
   public:
    std::size_t degree() const noexcept {
      return degree_;
    }

    std::size_t size() const noexcept {
      return elements_.size();
    }

    std::vector<Transformation> const& elements() const noexcept {
      return elements_;
    }

    std::vector<Transformation> const& generators() const noexcept {
      return generators_;
    }

    std::optional<std::size_t> index_of(std::vector<Element> const& image) const;

    bool contains(Transformation const& f) const {
      return index_of(f.image()).has_value();
    }

    // Elements sorted by image array.
    std::vector<Transformation> sorted() const;

    // Composes the generators named by `sequence`, first applied first.
    Transformation replay(std::span<std::size_t const> sequence) const;

    // Sequence of generator indices recorded for element `i`.
    std::vector<std::size_t> const& word_of(std::size_t i) const;

   private:
    friend TransformationMonoid close_under_composition(std::size_t,
                                                        std::vector<Transformation>,
                                                        std::optional<std::size_t>);

    std::size_t                                                   degree_ = 0;
    std::vector<Transformation>                                   elements_;
    std::vector<Transformation>                                   generators_;
    std::unordered_map<std::vector<Element>, std::size_t, ImageHash> index_;
  };

  // n^n, saturating at SIZE_MAX.
  std::size_t full_transformation_monoid_size(std::size_t n);

  // Breadth-first closure of {identity} and `generators` under composition.
  // Generators keep the given order. Throws InvariantViolation if more than
  // `cap` elements appear (default n^n, which cannot be exceeded).
  TransformationMonoid close_under_composition(std::size_t                 degree,
                                               std::vector<Transformation> generators,
                                               std::optional<std::size_t>  cap = {});

  // All maps x -> w(b_1, ..., x, ..., b_k) for symbols of rank k >= 1,
  // deduplicated by image and sorted by image. Each keeps the provenance of
  // its first witness in the order (symbol, coordinate, fixed tuple).
  std::vector<Transformation> elementary_translations(FiniteAlgebra const& algebra);

  // The translation monoid: closure of the identity and the elementary
  // translations under composition.
  TransformationMonoid translation_monoid(FiniteAlgebra const&       algebra,
                                          std::optional<std::size_t> cap = {});

  // a -> term(variable := a, assignment). Throws DomainError if the term is
  // not linear in `variable` or the assignment misses another variable.
  Transformation transformation_of_linear_term(FiniteAlgebra const& algebra,
                                               Term const&          term,
                                               std::string const&   variable,
                                               Assignment const&    assignment);

  // A term linear in `variable` and parameter values that realize element
  // `i` of a translation monoid through its recorded generator sequence.
  // Parameters are named x2, x3, ... in order of use.
  struct LinearTermWitness {
    Term       term;
    Assignment parameters;
  };
  LinearTermWitness linear_term_of(TransformationMonoid const& monoid,
                                   std::size_t                 i,
                                   std::string const&          variable = "x1");

}  // namespace syncon
