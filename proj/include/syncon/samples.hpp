#pragma once

// Small named algebras and random generators for tests and the CLI suites.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "syncon/algebra.hpp"
#include "syncon/homomorphism.hpp"
#include "syncon/term.hpp"

namespace syncon {

  using Rng = std::mt19937_64;

  // Z_n under addition, symbol "+".
  FiniteAlgebra cyclic_group(std::size_t n);

  // Carrier n with the binary operation c(x, y) = value.
  FiniteAlgebra constant_binary(std::size_t n, Element value = 0);

  // The chain 0 < 1 < ... < n-1 under max, symbol "v".
  FiniteAlgebra chain_semilattice(std::size_t n);

  // x * y = x.
  FiniteAlgebra left_zero(std::size_t n);

  // Uniformly random tables over `signature`.
  FiniteAlgebra random_algebra(Rng& rng, std::size_t n, Signature const& signature,
                               std::string name = "random");

  // One binary symbol "*".
  FiniteAlgebra random_binary_algebra(Rng& rng, std::size_t n);

  // A random term over the signature and the variables, at most `depth`
  // levels of operation symbols.
  Term random_term(Rng& rng, Signature const& signature, std::vector<std::string> const& vars,
                   std::size_t depth);

  // A random finite semigroup with at most `max_size` elements (at least 1),
  // symbol "*". Drawn either as a random table filtered by associativity or
  // as a random transformation semigroup.
  FiniteAlgebra random_semigroup(Rng& rng, std::size_t max_size);

  // A surjective homomorphism from `source` onto a relabeled quotient by a
  // randomly chosen congruence. Carrier at most 5.
  Homomorphism random_surjective_homomorphism(Rng& rng, FiniteAlgebra const& source);

  std::size_t uniform_index(Rng& rng, std::size_t n);

}  // namespace syncon
