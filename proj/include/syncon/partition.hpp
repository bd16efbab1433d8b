#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syncon/algebra.hpp"

namespace syncon {

  // A set partition of {0, ..., n - 1} in canonical form: classes are
  // numbered by first occurrence, so element 0 is always in class 0 and the
  // class indices form the range 0, ..., k - 1.
  class Partition {
   public:
    Partition() = default;

    // Canonicalizes arbitrary class labels.
    static Partition from_labels(std::span<std::size_t const> labels);
    static Partition from_labels(std::span<Element const> labels);
    static Partition discrete(std::size_t n);
    static Partition universal(std::size_t n);
    // The relation with classes L and its complement (one class if either is
    // empty).
    static Partition of_subset(Subset const& subset);
    // The kernel of a map {0, ..., n - 1} -> anything.
    static Partition kernel(std::span<Element const> map);
    // Reads "{0,2}/{1,3}"; the classes must cover 0, ..., n - 1 exactly once.
    static Partition parse(std::string_view text);
    // Builds a partition from explicit classes over an n-element set,
    // throwing DomainError on overlaps and gaps.
    static Partition from_classes(std::size_t n,
                                  std::vector<std::vector<Element>> const& classes);

    std::size_t size() const noexcept {
      return class_of_.size();
    }

    std::size_t num_classes() const noexcept {
      return num_classes_;
    }

    std::size_t class_of(Element a) const {
      return class_of_[a];
    }

    std::vector<std::size_t> const& class_ids() const noexcept {
      return class_of_;
    }

    bool same_class(Element a, Element b) const {
      return class_of_[a] == class_of_[b];
    }

    // Classes in canonical order, each sorted increasingly.
    std::vector<std::vector<Element>> classes() const;

    // Smallest element of each class; representatives()[c] is in class c.
    std::vector<Element> representatives() const;

    // True if every class of *this lies inside a class of `coarser`.
    bool refines(Partition const& coarser) const;

    // True if `subset` is a union of classes.
    bool saturates(Subset const& subset) const;

    // "{0,2}/{1,3}"
    std::string to_string() const;

    bool operator==(Partition const&) const = default;

   private:
    std::vector<std::size_t> class_of_;
    std::size_t              num_classes_ = 0;
  };

  // Common refinement.
  Partition meet(Partition const& p, Partition const& q);

  // All set partitions of an n-element set in canonical form (restricted
  // growth strings, lexicographic). Refuses n > 10.
  std::vector<Partition> all_partitions(std::size_t n);

  // The coarsest refinement of `initial` that every map respects, that is,
  // a ~ b implies f(a) ~ f(b) for each f in `maps`. Maps are processed in
  // the given order, splitting every class by the classes of the images,
  // until a full pass changes nothing.
  Partition coarsest_stable_refinement(Partition                            initial,
                                       std::span<std::vector<Element> const> maps);

  // The first pair (a, b), a < b, lexicographically, that is related by
  // exactly one of p and q, or {0, 0} with found = false if p == q.
  struct PairWitness {
    bool    found = false;
    Element first = 0;
    Element second = 0;
  };
  PairWitness first_difference(Partition const& p, Partition const& q);

}  // namespace syncon
