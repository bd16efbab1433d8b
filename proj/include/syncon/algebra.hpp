#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syncon {

  // Elements of a finite carrier are the integers 0, ..., n - 1.
  using Element = std::uint32_t;

  struct Symbol {
    std::string name;
    std::size_t arity;

    bool operator==(Symbol const&) const = default;
  };

  // A finite ranked signature. Symbols keep their declaration order, which
  // is also the order in which tables are stored and serialized.
  class Signature {
   public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    std::span<Symbol const> symbols() const noexcept {
      return symbols_;
    }

    std::size_t size() const noexcept {
      return symbols_.size();
    }

    Symbol const& operator[](std::size_t i) const {
      return symbols_[i];
    }

    std::optional<std::size_t> find(std::string_view name) const;

    // Index of `name`, throwing DomainError if it is not declared.
    std::size_t index_of(std::string_view name) const;

    // Symbol names of rank `rank`, in declaration order.
    std::vector<std::string> of_rank(std::size_t rank) const;

    std::size_t max_rank() const noexcept;

    bool operator==(Signature const&) const = default;

   private:
    std::vector<Symbol> symbols_;
  };

  // A subset of the carrier {0, ..., n - 1}, optionally named.
  class Subset {
   public:
    Subset() = default;
    Subset(std::size_t carrier_size,
           std::vector<Element> const& members,
           std::string name = {});

    static Subset from_bits(std::vector<bool> bits, std::string name = {});
    static Subset empty(std::size_t carrier_size);
    static Subset full(std::size_t carrier_size);
    // The subset whose members are the set bits of `mask`.
    static Subset from_mask(std::size_t carrier_size, std::uint64_t mask);

    bool contains(Element a) const {
      return a < bits_.size() && bits_[a];
    }

    std::size_t carrier_size() const noexcept {
      return bits_.size();
    }

    std::string const& name() const noexcept {
      return name_;
    }

    std::size_t count() const;
    std::vector<Element> members() const;
    Subset complement() const;

    // "{0,2}"
    std::string to_string() const;

    bool operator==(Subset const&) const = default;

   private:
    std::vector<bool> bits_;
    std::string       name_;
  };

  // All 2^n subsets of an n-element carrier, in mask order.
  std::vector<Subset> all_subsets(std::size_t carrier_size);

  // Row-major position of `args` in a table over an n-element carrier: the
  // first argument varies slowest.
  std::size_t table_index(std::size_t carrier_size, std::span<Element const> args);

  // Inverse of table_index for tuples of length `arity`.
  std::vector<Element> tuple_at(std::size_t carrier_size,
                                std::size_t arity,
                                std::size_t index);

  // carrier_size^arity, throwing DomainError when the table would be absurdly
  // large.
  std::size_t table_size(std::size_t carrier_size, std::size_t arity);

  // A finite algebra over a ranked signature, with one total table per
  // symbol. Immutable after construction; the constructor validates every
  // invariant and throws DomainError on violations.
  class FiniteAlgebra {
   public:
    FiniteAlgebra(std::string                       name,
                  Signature                         signature,
                  std::size_t                       carrier_size,
                  std::vector<std::vector<Element>> tables,
                  std::vector<Subset>               subsets = {});

    std::string const& name() const noexcept {
      return name_;
    }

    Signature const& signature() const noexcept {
      return signature_;
    }

    std::size_t size() const noexcept {
      return carrier_size_;
    }

    std::vector<Element> const& table(std::size_t symbol) const {
      return tables_[symbol];
    }

    std::vector<Subset> const& subsets() const noexcept {
      return subsets_;
    }

    // The named subset `name`, throwing DomainError if absent.
    Subset const& subset(std::string_view name) const;

    // Table lookup by symbol index without range checks beyond assertions.
    Element apply(std::size_t symbol, std::span<Element const> args) const;

    // A hash of the carrier size, signature, and tables. Used to detect
    // congruences applied to the wrong algebra.
    std::uint64_t fingerprint() const;

    // Copy of this algebra with a different name and set of named subsets.
    FiniteAlgebra renamed(std::string name, std::vector<Subset> subsets = {}) const;

    bool operator==(FiniteAlgebra const&) const = default;

   private:
    std::string                       name_;
    Signature                         signature_;
    std::size_t                       carrier_size_;
    std::vector<std::vector<Element>> tables_;
    std::vector<Subset>               subsets_;
  };

  // Value of the operation `symbol` on `args`. Throws DomainError naming the
  // symbol for unknown symbols, arity mismatches, and out-of-range arguments.
  Element eval_symbol(FiniteAlgebra const&    algebra,
                      std::string_view        symbol,
                      std::span<Element const> args);

  // The unique binary symbol of `algebra`, or DomainError if there is not
  // exactly one.
  std::size_t unique_binary_symbol(FiniteAlgebra const& algebra);

  // Whether the binary operation `symbol` is associative.
  bool is_associative(FiniteAlgebra const& algebra, std::size_t symbol);

}  // namespace syncon
