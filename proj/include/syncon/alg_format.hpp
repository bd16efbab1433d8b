#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "syncon/algebra.hpp"

namespace syncon {

  // Reads the .alg text format:
  //
  //   algebra <name>
  //   carrier <n>
  //   op <symbol> <arity>
  //   <n^arity entries, row-major, first argument slowest>
  //   ...
  //   subset <name> <i1> <i2> ...
  //
  // '#' starts a comment. Errors are ParseError carrying the line number.
  FiniteAlgebra parse_algebra(std::string_view text);

  // As parse_algebra, with the path prefixed to error messages.
  FiniteAlgebra read_algebra_file(std::filesystem::path const& path);

  // Canonical form: symbols in declaration order, ten entries per line,
  // subsets last. parse_algebra(serialize_algebra(a)) == a.
  std::string serialize_algebra(FiniteAlgebra const& algebra);

  // Whole contents of a text file, throwing DomainError naming the path.
  std::string read_text_file(std::filesystem::path const& path);

}  // namespace syncon
