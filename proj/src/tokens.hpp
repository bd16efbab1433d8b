#pragma once

// Line-aware tokenizer shared by the .alg, .sys, and .dfa readers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "syncon/error.hpp"

namespace syncon::detail {

  struct Token {
    std::string text;
    std::size_t line;
  };

  // Splits on whitespace; '#' starts a comment running to the end of the line.
  std::vector<Token> tokenize(std::string_view text);

  class TokenCursor {
   public:
    explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    bool done() const noexcept {
      return pos_ >= tokens_.size();
    }

    Token const& peek() const;
    Token const& next();

    // True if the next token exists and is on line `line`.
    bool on_line(std::size_t line) const noexcept {
      return !done() && tokens_[pos_].line == line;
    }

    // Line of the next token, or of the last token if exhausted.
    std::size_t line() const noexcept;

    void          expect_keyword(std::string_view keyword);
    std::string   expect_word(std::string_view what);
    std::uint64_t expect_uint(std::string_view what);

    // True if the next token is a nonnegative integer literal.
    bool next_is_uint() const noexcept;

   private:
    std::vector<Token> tokens_;
    std::size_t        pos_ = 0;
  };

  bool parse_uint(std::string_view text, std::uint64_t& out) noexcept;

}  // namespace syncon::detail
