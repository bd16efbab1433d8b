#pragma once

#include "syncon/algebra.hpp"
#include "tokens.hpp"

namespace syncon::detail {

  // Parses one `algebra` block starting at the cursor and stops at the first
  // token that does not continue it (end of input, or a keyword other than
  // `op` and `subset`).
  FiniteAlgebra parse_algebra_block(TokenCursor& cursor);

}  // namespace syncon::detail
