#include "syncon/congruence.hpp"

#include "syncon/error.hpp"
#include "syncon/transformation.hpp"

namespace syncon {

  namespace {

    std::vector<std::vector<Element>> translation_images(FiniteAlgebra const& algebra) {
      std::vector<std::vector<Element>> out;
      for (auto const& f : elementary_translations(algebra)) {
        out.push_back(f.image());
      }
      return out;
    }

    bool respects(Partition const& p, std::vector<Element> const& f) {
      // Images of the elements of each class must lie in one class.
      constexpr auto           unset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> target(p.num_classes(), unset);
      for (std::size_t a = 0; a < f.size(); ++a) {
        auto& t = target[p.class_of(static_cast<Element>(a))];
        auto  c = p.class_of(f[a]);
        if (t == unset) {
          t = c;
        } else if (t != c) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  bool is_congruence(FiniteAlgebra const& algebra, Partition const& partition) {
    if (partition.size() != algebra.size()) {
      throw DomainError("partition of size " + std::to_string(partition.size())
                        + " does not match carrier of size "
                        + std::to_string(algebra.size()));
    }
    for (auto const& f : translation_images(algebra)) {
      if (!respects(partition, f)) {
        return false;
      }
    }
    return true;
  }

  std::optional<Congruence> certify(FiniteAlgebra const& algebra, Partition const& partition) {
    if (!is_congruence(algebra, partition)) {
      return std::nullopt;
    }
    return Congruence(partition, algebra.fingerprint());
  }

  Congruence certify_or_fail(FiniteAlgebra const& algebra, Partition const& partition) {
    auto c = certify(algebra, partition);
    if (!c) {
      throw InvariantViolation("expected a congruence on '" + algebra.name()
                               + "', got " + partition.to_string());
    }
    return *c;
  }

  Congruence equality_congruence(FiniteAlgebra const& algebra) {
    return certify_or_fail(algebra, Partition::discrete(algebra.size()));
  }

  Congruence universal_congruence(FiniteAlgebra const& algebra) {
    return certify_or_fail(algebra, Partition::universal(algebra.size()));
  }

  Congruence largest_congruence_saturating(FiniteAlgebra const& algebra,
                                           Subset const&        subset) {
    if (subset.carrier_size() != algebra.size()) {
      throw DomainError("subset of a carrier of size " + std::to_string(subset.carrier_size())
                        + " used with an algebra of size " + std::to_string(algebra.size()));
    }
    auto maps   = translation_images(algebra);
    auto result = coarsest_stable_refinement(Partition::of_subset(subset), maps);
    if (!result.saturates(subset)) {
      throw InvariantViolation("refinement lost saturation of " + subset.to_string());
    }
    return certify_or_fail(algebra, result);
  }

  Quotient quotient(FiniteAlgebra const& algebra, Congruence const& theta) {
    if (theta.algebra_fingerprint() != algebra.fingerprint()) {
      throw DomainError("congruence was not certified for algebra '" + algebra.name() + "'");
    }
    auto const& p    = theta.partition();
    auto const  reps = p.representatives();
    auto const  n    = algebra.size();
    auto const  k    = p.num_classes();
    auto const& sig  = algebra.signature();

    std::vector<std::vector<Element>> tables(sig.size());
    for (std::size_t s = 0; s < sig.size(); ++s) {
      auto const arity = sig[s].arity;
      auto&      table = tables[s];
      table.resize(table_size(k, arity));
      std::vector<Element> args(arity);
      for (std::size_t r = 0; r < table.size(); ++r) {
        auto cls = tuple_at(k, arity, r);
        for (std::size_t j = 0; j < arity; ++j) {
          args[j] = reps[cls[j]];
        }
        table[r] = static_cast<Element>(p.class_of(algebra.apply(s, args)));
      }
      // well-definedness over every choice of representatives
      std::vector<Element> cls(arity);
      for (std::size_t r = 0, total = table_size(n, arity); r < total; ++r) {
        auto tuple = tuple_at(n, arity, r);
        for (std::size_t j = 0; j < arity; ++j) {
          cls[j] = static_cast<Element>(p.class_of(tuple[j]));
        }
        if (p.class_of(algebra.apply(s, tuple)) != table[table_index(k, cls)]) {
          throw InvariantViolation("operation '" + sig[s].name
                                   + "' is not well defined on the classes of "
                                   + p.to_string());
        }
      }
    }
    FiniteAlgebra        q(algebra.name() + "_quotient", sig, k, std::move(tables));
    std::vector<Element> proj(n);
    for (std::size_t a = 0; a < n; ++a) {
      proj[a] = static_cast<Element>(p.class_of(static_cast<Element>(a)));
    }
    auto h = Homomorphism::make(algebra, q, std::move(proj));
    return Quotient{std::move(q), std::move(h)};
  }

  Congruence meet(Congruence const& lhs, Congruence const& rhs) {
    if (lhs.algebra_fingerprint() != rhs.algebra_fingerprint()) {
      throw DomainError("meet of congruences on different algebras");
    }
    // The intersection of two congruences is a congruence.
    return Congruence(meet(lhs.partition(), rhs.partition()), lhs.algebra_fingerprint());
  }

  std::vector<Congruence> enumerate_congruences_oracle(FiniteAlgebra const& algebra) {
    if (algebra.size() > 5) {
      throw DomainError("the congruence oracle is limited to carriers of size <= 5, got "
                        + std::to_string(algebra.size()));
    }
    std::vector<Congruence> out;
    for (auto const& p : all_partitions(algebra.size())) {
      if (auto c = certify(algebra, p)) {
        out.push_back(std::move(*c));
      }
    }
    return out;
  }

}  // namespace syncon
