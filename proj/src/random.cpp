#include <algorithm>
#include <numeric>
#include <map>

#include "syncon/congruence.hpp"
#include "syncon/error.hpp"
#include "syncon/samples.hpp"
#include "syncon/transformation.hpp"

namespace syncon {

  std::size_t uniform_index(Rng& rng, std::size_t n) {
    if (n == 0) {
      throw DomainError("cannot draw from an empty range");
    }
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  namespace {

    FiniteAlgebra binary(std::string name, std::string symbol, std::size_t n,
                         auto const& op) {
      std::vector<Element> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          table[x * n + y] = static_cast<Element>(op(x, y));
        }
      }
      return FiniteAlgebra(std::move(name), Signature({{std::move(symbol), 2}}), n, {table});
    }

  }  // namespace

  FiniteAlgebra cyclic_group(std::size_t n) {
    return binary("Z" + std::to_string(n), "+", n, [n](auto x, auto y) { return (x + y) % n; });
  }

  FiniteAlgebra constant_binary(std::size_t n, Element value) {
    if (value >= n) {
      throw DomainError("constant value out of range");
    }
    return binary("C" + std::to_string(n), "c", n, [value](auto, auto) { return value; });
  }

  FiniteAlgebra chain_semilattice(std::size_t n) {
    return binary("chain" + std::to_string(n), "v", n,
                  [](auto x, auto y) { return std::max(x, y); });
  }

  FiniteAlgebra left_zero(std::size_t n) {
    return binary("leftzero" + std::to_string(n), "*", n, [](auto x, auto) { return x; });
  }

  FiniteAlgebra random_algebra(Rng& rng, std::size_t n, Signature const& signature,
                               std::string name) {
    std::vector<std::vector<Element>> tables;
    for (auto const& s : signature.symbols()) {
      std::vector<Element> t(table_size(n, s.arity));
      for (auto& v : t) {
        v = static_cast<Element>(uniform_index(rng, n));
      }
      tables.push_back(std::move(t));
    }
    return FiniteAlgebra(std::move(name), signature, n, std::move(tables));
  }

  FiniteAlgebra random_binary_algebra(Rng& rng, std::size_t n) {
    return random_algebra(rng, n, Signature({{"*", 2}}));
  }

  Term random_term(Rng& rng, Signature const& signature, std::vector<std::string> const& vars,
                   std::size_t depth) {
    std::vector<Symbol> leaves;
    std::vector<Symbol> inner;
    for (auto const& s : signature.symbols()) {
      (s.arity == 0 ? leaves : inner).push_back(s);
    }
    auto const leaf_count = vars.size() + leaves.size();
    if (leaf_count == 0) {
      throw DomainError("no variables or constants to build terms from");
    }
    bool const stop = depth == 0 || inner.empty() || uniform_index(rng, 3) == 0;
    if (stop) {
      auto i = uniform_index(rng, leaf_count);
      if (i < vars.size()) {
        return Term::variable(vars[i]);
      }
      return Term::apply(leaves[i - vars.size()].name, {});
    }
    auto const&       s = inner[uniform_index(rng, inner.size())];
    std::vector<Term> children;
    for (std::size_t i = 0; i < s.arity; ++i) {
      children.push_back(random_term(rng, signature, vars, depth - 1));
    }
    return Term::apply(s.name, std::move(children));
  }

  FiniteAlgebra random_semigroup(Rng& rng, std::size_t max_size) {
    if (max_size == 0) {
      throw DomainError("semigroup size must be positive");
    }
    while (true) {
      if (uniform_index(rng, 2) == 0) {
        auto n = 1 + uniform_index(rng, std::min<std::size_t>(max_size, 3));
        auto a = random_binary_algebra(rng, n);
        if (is_associative(a, 0)) {
          return a.renamed("semigroup", {});
        }
        continue;
      }
      auto const                  degree = 1 + uniform_index(rng, 4);
      auto const                  count  = 1 + uniform_index(rng, 2);
      std::vector<Transformation> gens;
      for (std::size_t g = 0; g < count; ++g) {
        std::vector<Element> image(degree);
        for (auto& v : image) {
          v = static_cast<Element>(uniform_index(rng, degree));
        }
        gens.emplace_back(std::move(image));
      }
      // nonempty products only, so the identity appears only when generated
      auto const                              m = close_under_composition(degree, gens);
      std::vector<std::vector<Element>>       elems;
      std::map<std::vector<Element>, Element> index;
      for (auto const& f : m.elements()) {
        for (auto const& g : gens) {
          auto image = f.then(g).image();
          if (index.emplace(image, static_cast<Element>(elems.size())).second) {
            elems.push_back(std::move(image));
          }
        }
      }
      auto const n = elems.size();
      if (n > max_size) {
        continue;
      }
      std::vector<Element> table(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          table[i * n + j] =
              index.at(Transformation(elems[i]).then(Transformation(elems[j])).image());
        }
      }
      // a random relabeling so that labels carry no structure
      std::vector<Element> perm(n);
      std::iota(perm.begin(), perm.end(), Element{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Element> relabeled(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          relabeled[perm[i] * n + perm[j]] = perm[table[i * n + j]];
        }
      }
      return FiniteAlgebra("semigroup", Signature({{"*", 2}}), n, {relabeled});
    }
  }

  Homomorphism random_surjective_homomorphism(Rng& rng, FiniteAlgebra const& source) {
    auto const congruences = enumerate_congruences_oracle(source);
    auto const theta       = congruences[uniform_index(rng, congruences.size())];
    auto       q           = quotient(source, theta);
    auto const m           = q.algebra.size();

    std::vector<Element> perm(m);
    std::iota(perm.begin(), perm.end(), Element{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::vector<Element>> tables;
    auto const&                       sig = q.algebra.signature();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      auto const&          t     = q.algebra.table(s);
      auto const           arity = sig[s].arity;
      std::vector<Element> out(t.size());
      for (std::size_t r = 0; r < t.size(); ++r) {
        auto args = tuple_at(m, arity, r);
        for (auto& a : args) {
          a = perm[a];
        }
        out[table_index(m, args)] = perm[t[r]];
      }
      tables.push_back(std::move(out));
    }
    FiniteAlgebra target(source.name() + "_image", sig, m, std::move(tables));

    std::vector<Element> image(source.size());
    for (std::size_t a = 0; a < source.size(); ++a) {
      image[a] = perm[q.projection(static_cast<Element>(a))];
    }
    return Homomorphism::make(source, std::move(target), std::move(image));
  }

}  // namespace syncon
