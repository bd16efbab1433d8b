#include "syncon/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "syncon/error.hpp"

namespace syncon {

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature(std::vector<Symbol> symbols)
      : symbols_(std::move(symbols)) {
    std::unordered_set<std::string> seen;
    for (auto const& s : symbols_) {
      if (s.name.empty()) {
        throw DomainError("empty symbol name");
      }
      if (!seen.insert(s.name).second) {
        throw DomainError("duplicate symbol '" + s.name + "'");
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t Signature::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      throw DomainError("unknown symbol '" + std::string(name) + "'");
    }
    return *i;
  }

  std::vector<std::string> Signature::of_rank(std::size_t rank) const {
    std::vector<std::string> out;
    for (auto const& s : symbols_) {
      if (s.arity == rank) {
        out.push_back(s.name);
      }
    }
    return out;
  }

  std::size_t Signature::max_rank() const noexcept {
    std::size_t r = 0;
    for (auto const& s : symbols_) {
      r = std::max(r, s.arity);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset::Subset(std::size_t                 carrier_size,
                 std::vector<Element> const& members,
                 std::string                 name)
      : bits_(carrier_size, false), name_(std::move(name)) {
    for (auto a : members) {
      if (a >= carrier_size) {
        throw DomainError("subset element " + std::to_string(a)
                          + " out of range for carrier of size "
                          + std::to_string(carrier_size));
      }
      bits_[a] = true;
    }
  }

  Subset Subset::from_bits(std::vector<bool> bits, std::string name) {
    Subset s;
    s.bits_ = std::move(bits);
    s.name_ = std::move(name);
    return s;
  }

  Subset Subset::empty(std::size_t carrier_size) {
    return from_bits(std::vector<bool>(carrier_size, false));
  }

  Subset Subset::full(std::size_t carrier_size) {
    return from_bits(std::vector<bool>(carrier_size, true));
  }

  Subset Subset::from_mask(std::size_t carrier_size, std::uint64_t mask) {
    std::vector<bool> bits(carrier_size);
    for (std::size_t i = 0; i < carrier_size; ++i) {
      bits[i] = ((mask >> i) & 1) != 0;
    }
    return from_bits(std::move(bits));
  }

  std::size_t Subset::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  std::vector<Element> Subset::members() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) {
        out.push_back(static_cast<Element>(i));
      }
    }
    return out;
  }

  Subset Subset::complement() const {
    std::vector<bool> bits(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits[i] = !bits_[i];
    }
    return from_bits(std::move(bits));
  }

  std::string Subset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto a : members()) {
      os << (first ? "" : ",") << a;
      first = false;
    }
    os << '}';
    return os.str();
  }

  std::vector<Subset> all_subsets(std::size_t carrier_size) {
    if (carrier_size > 20) {
      throw DomainError("refusing to enumerate subsets of a carrier of size "
                        + std::to_string(carrier_size));
    }
    std::vector<Subset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << carrier_size); ++mask) {
      out.push_back(Subset::from_mask(carrier_size, mask));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  std::size_t table_index(std::size_t carrier_size, std::span<Element const> args) {
    std::size_t idx = 0;
    for (auto a : args) {
      idx = idx * carrier_size + a;
    }
    return idx;
  }

  std::vector<Element> tuple_at(std::size_t carrier_size,
                                std::size_t arity,
                                std::size_t index) {
    std::vector<Element> out(arity);
    for (std::size_t i = arity; i-- > 0;) {
      out[i] = static_cast<Element>(index % carrier_size);
      index /= carrier_size;
    }
    return out;
  }

  std::size_t table_size(std::size_t carrier_size, std::size_t arity) {
    constexpr std::size_t limit = std::size_t{1} << 26;
    std::size_t           size  = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (carrier_size != 0 && size > limit / carrier_size) {
        throw DomainError("operation table of arity " + std::to_string(arity)
                          + " over " + std::to_string(carrier_size)
                          + " elements is too large");
      }
      size *= carrier_size;
    }
    return size;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteAlgebra
  ////////////////////////////////////////////////////////////////////////

  FiniteAlgebra::FiniteAlgebra(std::string                       name,
                               Signature                         signature,
                               std::size_t                       carrier_size,
                               std::vector<std::vector<Element>> tables,
                               std::vector<Subset>               subsets)
      : name_(std::move(name)),
        signature_(std::move(signature)),
        carrier_size_(carrier_size),
        tables_(std::move(tables)),
        subsets_(std::move(subsets)) {
    if (carrier_size_ == 0) {
      throw DomainError("algebra '" + name_ + "' has an empty carrier");
    }
    if (tables_.size() != signature_.size()) {
      throw DomainError("algebra '" + name_ + "' has "
                        + std::to_string(tables_.size()) + " tables for "
                        + std::to_string(signature_.size()) + " symbols");
    }
    for (std::size_t s = 0; s < signature_.size(); ++s) {
      auto const& sym = signature_[s];
      if (tables_[s].size() != table_size(carrier_size_, sym.arity)) {
        throw DomainError("table of '" + sym.name + "' has "
                          + std::to_string(tables_[s].size())
                          + " entries, expected "
                          + std::to_string(table_size(carrier_size_, sym.arity)));
      }
      for (auto v : tables_[s]) {
        if (v >= carrier_size_) {
          throw DomainError("table of '" + sym.name + "' has entry "
                            + std::to_string(v) + " out of range");
        }
      }
    }
    for (auto const& sub : subsets_) {
      if (sub.carrier_size() != carrier_size_) {
        throw DomainError("subset '" + sub.name()
                          + "' does not match the carrier size");
      }
    }
  }

  Subset const& FiniteAlgebra::subset(std::string_view name) const {
    for (auto const& s : subsets_) {
      if (s.name() == name) {
        return s;
      }
    }
    throw DomainError("algebra '" + name_ + "' has no subset named '"
                      + std::string(name) + "'");
  }

  Element FiniteAlgebra::apply(std::size_t symbol, std::span<Element const> args) const {
    assert(symbol < tables_.size());
    assert(args.size() == signature_[symbol].arity);
    return tables_[symbol][table_index(carrier_size_, args)];
  }

  std::uint64_t FiniteAlgebra::fingerprint() const {
    // FNV-1a
    std::uint64_t h   = 1469598103934665603ULL;
    auto          mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (i * 8)) & 0xFFu;
        h *= 1099511628211ULL;
      }
    };
    mix(carrier_size_);
    for (std::size_t s = 0; s < signature_.size(); ++s) {
      for (char c : signature_[s].name) {
        mix(static_cast<unsigned char>(c));
      }
      mix(signature_[s].arity);
      for (auto v : tables_[s]) {
        mix(v);
      }
    }
    return h;
  }

  FiniteAlgebra FiniteAlgebra::renamed(std::string name, std::vector<Subset> subsets) const {
    return FiniteAlgebra(std::move(name), signature_, carrier_size_, tables_, std::move(subsets));
  }

  Element eval_symbol(FiniteAlgebra const&     algebra,
                      std::string_view         symbol,
                      std::span<Element const> args) {
    auto s = algebra.signature().index_of(symbol);
    auto const& sym = algebra.signature()[s];
    if (sym.arity != args.size()) {
      throw DomainError("symbol '" + sym.name + "' has arity "
                        + std::to_string(sym.arity) + " but was given "
                        + std::to_string(args.size()) + " arguments");
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] >= algebra.size()) {
        throw DomainError("argument " + std::to_string(i) + " of '" + sym.name
                          + "' is " + std::to_string(args[i])
                          + ", out of range for carrier of size "
                          + std::to_string(algebra.size()));
      }
    }
    return algebra.apply(s, args);
  }

  std::size_t unique_binary_symbol(FiniteAlgebra const& algebra) {
    std::optional<std::size_t> found;
    for (std::size_t s = 0; s < algebra.signature().size(); ++s) {
      if (algebra.signature()[s].arity == 2) {
        if (found) {
          throw DomainError("algebra '" + algebra.name()
                            + "' has more than one binary symbol");
        }
        found = s;
      }
    }
    if (!found) {
      throw DomainError("algebra '" + algebra.name() + "' has no binary symbol");
    }
    return *found;
  }

  bool is_associative(FiniteAlgebra const& algebra, std::size_t symbol) {
    auto const& t = algebra.table(symbol);
    auto const  n = algebra.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace syncon
