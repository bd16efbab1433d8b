#include "tokens.hpp"

#include <cctype>
#include <charconv>

namespace syncon::detail {

  std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t        line = 1;
    std::size_t        i    = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '\n') {
        ++line;
        ++i;
      } else if (c == '#') {
        while (i < text.size() && text[i] != '\n') {
          ++i;
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        auto start = i;
        while (i < text.size() && text[i] != '#'
               && !std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        out.push_back({std::string(text.substr(start, i - start)), line});
      }
    }
    return out;
  }

  bool parse_uint(std::string_view text, std::uint64_t& out) noexcept {
    if (text.empty()) {
      return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
  }

  Token const& TokenCursor::peek() const {
    if (done()) {
      throw ParseError(line(), "unexpected end of input");
    }
    return tokens_[pos_];
  }

  Token const& TokenCursor::next() {
    Token const& t = peek();
    ++pos_;
    return t;
  }

  std::size_t TokenCursor::line() const noexcept {
    if (tokens_.empty()) {
      return 1;
    }
    return done() ? tokens_.back().line : tokens_[pos_].line;
  }

  void TokenCursor::expect_keyword(std::string_view keyword) {
    if (done()) {
      throw ParseError(line(), "expected '" + std::string(keyword)
                                   + "', found end of input");
    }
    auto const& t = next();
    if (t.text != keyword) {
      throw ParseError(t.line, "expected '" + std::string(keyword) + "', found '"
                                   + t.text + "'");
    }
  }

  std::string TokenCursor::expect_word(std::string_view what) {
    if (done()) {
      throw ParseError(line(), "expected " + std::string(what)
                                   + ", found end of input");
    }
    return next().text;
  }

  std::uint64_t TokenCursor::expect_uint(std::string_view what) {
    if (done()) {
      throw ParseError(line(), "expected " + std::string(what)
                                   + ", found end of input");
    }
    auto const&   t = next();
    std::uint64_t v = 0;
    if (!parse_uint(t.text, v)) {
      throw ParseError(t.line, "expected " + std::string(what) + ", found '"
                                   + t.text + "'");
    }
    return v;
  }

  bool TokenCursor::next_is_uint() const noexcept {
    std::uint64_t v = 0;
    return !done() && parse_uint(tokens_[pos_].text, v);
  }

}  // namespace syncon::detail
