#include "syncon/alg_format.hpp"

#include <fstream>
#include <sstream>

#include "alg_block.hpp"
#include "syncon/error.hpp"

namespace syncon {

  namespace detail {

    FiniteAlgebra parse_algebra_block(TokenCursor& cursor) {
      cursor.expect_keyword("algebra");
      auto name = cursor.expect_word("algebra name");
      cursor.expect_keyword("carrier");
      auto const carrier_line = cursor.line();
      auto const n            = cursor.expect_uint("carrier size");
      if (n == 0) {
        throw ParseError(carrier_line, "carrier must be nonempty");
      }
      if (n > (std::uint64_t{1} << 20)) {
        throw ParseError(carrier_line, "carrier too large");
      }

      std::vector<Symbol>               symbols;
      std::vector<std::vector<Element>> tables;
      std::vector<Subset>               subsets;

      while (!cursor.done()) {
        auto const& kw = cursor.peek();
        if (kw.text == "op") {
          if (!subsets.empty()) {
            throw ParseError(kw.line, "'op' after 'subset' blocks");
          }
          cursor.next();
          auto const op_line = kw.line;
          auto       sym     = cursor.expect_word("symbol name");
          auto       arity   = cursor.expect_uint("arity");
          for (auto const& s : symbols) {
            if (s.name == sym) {
              throw ParseError(op_line, "duplicate symbol '" + sym + "'");
            }
          }
          std::size_t expected = 0;
          try {
            expected = table_size(n, arity);
          } catch (DomainError const& e) {
            throw ParseError(op_line, e.what());
          }
          std::vector<Element> table;
          table.reserve(expected);
          while (table.size() < expected && cursor.next_is_uint()) {
            auto const& t = cursor.next();
            std::uint64_t v = 0;
            parse_uint(t.text, v);
            if (v >= n) {
              throw ParseError(t.line, "entry " + t.text + " of '" + sym
                                           + "' is out of range for carrier "
                                           + std::to_string(n));
            }
            table.push_back(static_cast<Element>(v));
          }
          if (table.empty()) {
            throw ParseError(op_line, "missing table for '" + sym + "'");
          }
          if (table.size() != expected) {
            throw ParseError(cursor.line(),
                             "table of '" + sym + "' has "
                                 + std::to_string(table.size())
                                 + " entries, expected "
                                 + std::to_string(expected));
          }
          if (cursor.next_is_uint()) {
            throw ParseError(cursor.line(),
                             "table of '" + sym + "' has more than "
                                 + std::to_string(expected) + " entries");
          }
          symbols.push_back({std::move(sym), static_cast<std::size_t>(arity)});
          tables.push_back(std::move(table));
        } else if (kw.text == "subset") {
          auto const line = kw.line;
          cursor.next();
          if (!cursor.on_line(line)) {
            throw ParseError(line, "expected subset name");
          }
          auto                 sub_name = cursor.next().text;
          std::vector<Element> members;
          while (cursor.on_line(line)) {
            auto const&   t = cursor.next();
            std::uint64_t v = 0;
            if (!parse_uint(t.text, v)) {
              throw ParseError(line, "expected element index, found '" + t.text + "'");
            }
            if (v >= n) {
              throw ParseError(line, "subset element " + t.text
                                         + " is out of range for carrier "
                                         + std::to_string(n));
            }
            members.push_back(static_cast<Element>(v));
          }
          for (auto const& s : subsets) {
            if (s.name() == sub_name) {
              throw ParseError(line, "duplicate subset '" + sub_name + "'");
            }
          }
          subsets.emplace_back(n, members, std::move(sub_name));
        } else {
          break;
        }
      }
      try {
        return FiniteAlgebra(std::move(name),
                             Signature(std::move(symbols)),
                             n,
                             std::move(tables),
                             std::move(subsets));
      } catch (ParseError const&) {
        throw;
      } catch (DomainError const& e) {
        throw ParseError(carrier_line, e.what());
      }
    }

  }  // namespace detail

  FiniteAlgebra parse_algebra(std::string_view text) {
    detail::TokenCursor cursor(detail::tokenize(text));
    auto                a = detail::parse_algebra_block(cursor);
    if (!cursor.done()) {
      auto const& t = cursor.peek();
      throw ParseError(t.line, "unexpected '" + t.text + "'");
    }
    return a;
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw DomainError(path.string() + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  FiniteAlgebra read_algebra_file(std::filesystem::path const& path) {
    auto text = read_text_file(path);
    try {
      return parse_algebra(text);
    } catch (ParseError const& e) {
      throw ParseError(e.line(), e.message(), path.string());
    }
  }

  std::string serialize_algebra(FiniteAlgebra const& algebra) {
    std::ostringstream os;
    os << "algebra " << algebra.name() << '\n';
    os << "carrier " << algebra.size() << '\n';
    auto const& sig = algebra.signature();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      os << "op " << sig[s].name << ' ' << sig[s].arity << '\n';
      auto const& t = algebra.table(s);
      for (std::size_t i = 0; i < t.size(); ++i) {
        os << t[i] << ((i % 10 == 9 || i + 1 == t.size()) ? '\n' : ' ');
      }
    }
    for (auto const& sub : algebra.subsets()) {
      os << "subset " << (sub.name().empty() ? "unnamed" : sub.name());
      for (auto a : sub.members()) {
        os << ' ' << a;
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace syncon
