#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace syncon::cli {

  // Runs one command line (without the program name). Exit status: 0 on
  // success, 1 on usage and domain errors, 2 when a mathematical invariant
  // check fails.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  struct Coverage {
    std::string_view operation;
    std::string_view verb;
  };

  // Which verb exposes each library operation.
  std::vector<Coverage> const& coverage();

  std::vector<std::string> const& verbs();

}  // namespace syncon::cli
