#include "syncon/languages.hpp"

#include <algorithm>
#include <sstream>

#include "syncon/alg_format.hpp"
#include "syncon/congruence.hpp"
#include "syncon/error.hpp"
#include "syncon/partition.hpp"
#include "syncon/syntactic.hpp"
#include "tokens.hpp"

namespace syncon {

  ////////////////////////////////////////////////////////////////////////
  // Dfa
  ////////////////////////////////////////////////////////////////////////

  void Dfa::check() const {
    if (states == 0) {
      throw DomainError("automaton '" + name + "' has no states");
    }
    if (initial >= states) {
      throw DomainError("initial state " + std::to_string(initial) + " out of range");
    }
    if (transitions.size() != states || accepting.size() != states) {
      throw DomainError("automaton '" + name + "' has inconsistent state tables");
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
        if (alphabet[i] == alphabet[j]) {
          throw DomainError("duplicate letter '" + alphabet[i] + "'");
        }
      }
    }
    for (std::size_t q = 0; q < states; ++q) {
      if (transitions[q].size() != alphabet.size()) {
        throw DomainError("state " + std::to_string(q) + " has "
                          + std::to_string(transitions[q].size()) + " transitions, expected "
                          + std::to_string(alphabet.size()));
      }
      for (auto r : transitions[q]) {
        if (r >= states) {
          throw DomainError("transition from state " + std::to_string(q) + " to "
                            + std::to_string(r) + " is out of range");
        }
      }
    }
  }

  std::size_t Dfa::letter_index(std::string_view letter) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), letter);
    if (it == alphabet.end()) {
      throw DomainError("unknown letter '" + std::string(letter) + "'");
    }
    return static_cast<std::size_t>(it - alphabet.begin());
  }

  bool Dfa::accepts(std::span<std::size_t const> word) const {
    Element q = initial;
    for (auto c : word) {
      q = transitions[q].at(c);
    }
    return accepting[q];
  }

  Dfa parse_dfa(std::string_view text) {
    detail::TokenCursor cursor(detail::tokenize(text));
    Dfa                 dfa;
    cursor.expect_keyword("dfa");
    dfa.name = cursor.expect_word("automaton name");

    auto const alpha_line = cursor.line();
    cursor.expect_keyword("alphabet");
    while (cursor.on_line(alpha_line)) {
      dfa.alphabet.push_back(cursor.next().text);
    }
    if (dfa.alphabet.empty()) {
      throw ParseError(alpha_line, "empty alphabet");
    }

    cursor.expect_keyword("states");
    auto const states_line = cursor.line();
    auto const n           = cursor.expect_uint("state count");
    if (n == 0 || n > (1u << 20)) {
      throw ParseError(states_line, "state count must be between 1 and 2^20");
    }
    dfa.states = n;

    cursor.expect_keyword("initial");
    auto const init_line = cursor.line();
    auto const init      = cursor.expect_uint("initial state");
    if (init >= n) {
      throw ParseError(init_line, "initial state " + std::to_string(init) + " out of range");
    }
    dfa.initial = static_cast<Element>(init);

    auto const acc_line = cursor.line();
    cursor.expect_keyword("accepting");
    dfa.accepting.assign(n, false);
    while (cursor.on_line(acc_line)) {
      auto const&   t = cursor.next();
      std::uint64_t v = 0;
      if (!detail::parse_uint(t.text, v) || v >= n) {
        throw ParseError(acc_line, "bad accepting state '" + t.text + "'");
      }
      dfa.accepting[v] = true;
    }

    dfa.transitions.assign(n, {});
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t c = 0; c < dfa.alphabet.size(); ++c) {
        if (cursor.done()) {
          throw ParseError(cursor.line(), "missing transitions for state " + std::to_string(q));
        }
        auto const line = cursor.line();
        auto       r    = cursor.expect_uint("next state");
        if (r >= n) {
          throw ParseError(line, "next state " + std::to_string(r) + " out of range");
        }
        dfa.transitions[q].push_back(static_cast<Element>(r));
      }
    }
    if (!cursor.done()) {
      auto const& t = cursor.peek();
      throw ParseError(t.line, "unexpected '" + t.text + "'");
    }
    return dfa;
  }

  Dfa read_dfa_file(std::filesystem::path const& path) {
    auto text = read_text_file(path);
    try {
      return parse_dfa(text);
    } catch (ParseError const& e) {
      throw ParseError(e.line(), e.message(), path.string());
    }
  }

  std::string serialize_dfa(Dfa const& dfa) {
    std::ostringstream os;
    os << "dfa " << dfa.name << "\nalphabet";
    for (auto const& a : dfa.alphabet) {
      os << ' ' << a;
    }
    os << "\nstates " << dfa.states << "\ninitial " << dfa.initial << "\naccepting";
    for (std::size_t q = 0; q < dfa.states; ++q) {
      if (dfa.accepting[q]) {
        os << ' ' << q;
      }
    }
    os << '\n';
    for (auto const& row : dfa.transitions) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        os << (c ? " " : "") << row[c];
      }
      os << '\n';
    }
    return os.str();
  }

  std::vector<std::size_t> parse_word(Dfa const& dfa, std::string_view word) {
    std::vector<std::size_t> out;
    bool single = std::all_of(dfa.alphabet.begin(), dfa.alphabet.end(),
                              [](auto const& a) { return a.size() == 1; });
    if (single) {
      for (char ch : word) {
        if (ch == ' ' || ch == '\t') {
          continue;
        }
        out.push_back(dfa.letter_index(std::string_view(&ch, 1)));
      }
      return out;
    }
    std::istringstream is{std::string(word)};
    std::string        letter;
    while (is >> letter) {
      out.push_back(dfa.letter_index(letter));
    }
    return out;
  }

  Dfa minimal_dfa(Dfa const& dfa) {
    dfa.check();
    if (dfa.alphabet.empty()) {
      throw DomainError("automaton '" + dfa.name + "' has an empty alphabet");
    }
    auto const k = dfa.alphabet.size();

    // reachable states in breadth-first order
    std::vector<std::int64_t> number(dfa.states, -1);
    std::vector<Element>      order{dfa.initial};
    number[dfa.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto r : dfa.transitions[order[i]]) {
        if (number[r] < 0) {
          number[r] = static_cast<std::int64_t>(order.size());
          order.push_back(r);
        }
      }
    }
    auto const n = order.size();

    std::vector<std::vector<Element>> maps(k, std::vector<Element>(n));
    std::vector<std::size_t>          labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = dfa.accepting[order[i]] ? 1 : 0;
      for (std::size_t c = 0; c < k; ++c) {
        maps[c][i] = static_cast<Element>(number[dfa.transitions[order[i]][c]]);
      }
    }
    auto p = coarsest_stable_refinement(Partition::from_labels(std::span<std::size_t const>(labels)),
                                        std::span<std::vector<Element> const>(maps));

    Dfa out;
    out.name     = dfa.name;
    out.alphabet = dfa.alphabet;
    out.states   = p.num_classes();
    out.initial  = static_cast<Element>(p.class_of(0));
    out.accepting.assign(out.states, false);
    out.transitions.assign(out.states, std::vector<Element>(k));
    for (auto rep : p.representatives()) {
      auto const cls     = p.class_of(rep);
      out.accepting[cls] = labels[rep] == 1;
      for (std::size_t c = 0; c < k; ++c) {
        out.transitions[cls][c] = static_cast<Element>(p.class_of(maps[c][rep]));
      }
    }
    return out;
  }

  TransitionMonoid transition_monoid(Dfa const& dfa) {
    dfa.check();
    std::vector<Transformation> gens;
    for (std::size_t c = 0; c < dfa.alphabet.size(); ++c) {
      std::vector<Element> image(dfa.states);
      for (std::size_t q = 0; q < dfa.states; ++q) {
        image[q] = dfa.transitions[q][c];
      }
      gens.emplace_back(std::move(image));
    }
    TransitionMonoid tm{close_under_composition(dfa.states, gens), {}};
    for (auto const& g : gens) {
      tm.letter_elements.push_back(*tm.monoid.index_of(g.image()));
    }
    return tm;
  }

  Element SyntacticMonoid::element_of(std::span<std::size_t const> word) const {
    auto const& mul = algebra.table(0);
    auto const  n   = algebra.size();
    Element     m   = 0;
    for (auto c : word) {
      m = mul[m * n + transitions.letter_elements.at(c)];
    }
    return m;
  }

  SyntacticMonoid syntactic_monoid(Dfa const& dfa) {
    auto        minimal = minimal_dfa(dfa);
    auto        tm      = transition_monoid(minimal);
    auto const& elems   = tm.monoid.elements();
    auto const  n       = elems.size();

    std::vector<Element> mul(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto idx = tm.monoid.index_of(elems[i].then(elems[j]).image());
        if (!idx) {
          throw InvariantViolation("transition monoid is not closed under composition");
        }
        mul[i * n + j] = static_cast<Element>(*idx);
      }
    }
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
      bits[i] = minimal.accepting[elems[i](minimal.initial)];
    }
    Subset        accepted = Subset::from_bits(std::move(bits), "K");
    FiniteAlgebra algebra(dfa.name + "_syntactic_monoid",
                          Signature({{"*", 2}, {"e", 0}}),
                          n,
                          {std::move(mul), {0}},
                          {accepted});

    auto syn = syntactic_congruence(algebra, accepted);
    if (syn.congruence.num_classes() != n) {
      auto w = first_difference(syn.congruence.partition(), Partition::discrete(n));
      throw InvariantViolation("syntactic congruence of the accepted set on the transition "
                               "monoid of '" + dfa.name + "' identifies "
                               + std::to_string(w.first) + " and " + std::to_string(w.second));
    }
    return SyntacticMonoid{std::move(minimal), std::move(tm), std::move(algebra),
                           std::move(accepted)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Truncated models
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t ExtendedNat::value() const {
    if (infinite_) {
      throw DomainError("infinity has no finite value");
    }
    return n_;
  }

  std::string ExtendedNat::to_string() const {
    return infinite_ ? "inf" : std::to_string(n_);
  }

  std::optional<std::uint64_t> TruncatedPlus::add(std::uint64_t a, std::uint64_t b) const {
    if (a > bound_ || b > bound_ || a + b > bound_) {
      return std::nullopt;
    }
    return a + b;
  }

  std::string MaxPlusElement::to_string() const {
    return "(" + std::to_string(first) + "," + second.to_string() + ")";
  }

  bool TruncatedMaxPlus::in_window(MaxPlusElement const& x) const {
    return x.first <= bound_ && (x.second.is_infinite() || x.second.value() <= bound_);
  }

  std::optional<MaxPlusElement> TruncatedMaxPlus::multiply(MaxPlusElement const& x,
                                                           MaxPlusElement const& y) const {
    if (!in_window(x) || !in_window(y)) {
      return std::nullopt;
    }
    auto first = std::max(x.first, y.first);
    if (x.second.is_infinite() || y.second.is_infinite()) {
      return MaxPlusElement{first, ExtendedNat::infinity()};
    }
    auto sum = TruncatedPlus(bound_).add(x.second.value(), y.second.value());
    if (!sum) {
      return std::nullopt;
    }
    return MaxPlusElement{first, ExtendedNat::finite(*sum)};
  }

  std::vector<MaxPlusElement> TruncatedMaxPlus::elements() const {
    std::vector<MaxPlusElement> out;
    for (std::uint64_t a = 0; a <= bound_; ++a) {
      for (std::uint64_t b = 0; b <= bound_; ++b) {
        out.push_back({a, ExtendedNat::finite(b)});
      }
    }
    for (std::uint64_t a = 0; a <= bound_; ++a) {
      out.push_back({a, ExtendedNat::infinity()});
    }
    return out;
  }

  bool in_sparse_set(SparseSet set, std::uint64_t n) {
    switch (set) {
      case SparseSet::powers_of_two:
        return n != 0 && (n & (n - 1)) == 0;
      case SparseSet::primes:
        if (n < 2) {
          return false;
        }
        for (std::uint64_t d = 2; d * d <= n; ++d) {
          if (n % d == 0) {
            return false;
          }
        }
        return true;
    }
    return false;
  }

  SeparationReport sparse_separation(std::uint64_t bound, std::uint64_t xmax, SparseSet set) {
    if (bound < 2) {
      throw DomainError("bound must be at least 2");
    }
    if (xmax < bound) {
      throw DomainError("xmax must be at least the bound");
    }
    SeparationReport r{bound, xmax, set, 0, 0, {}, std::nullopt, 0};
    TruncatedPlus    plus(bound + xmax);
    // membership is needed for 1..bound + xmax
    std::vector<bool> member(bound + xmax + 1);
    for (std::uint64_t v = 0; v < member.size(); ++v) {
      member[v] = in_sparse_set(set, v);
    }
    for (std::uint64_t m = 0; m <= bound; ++m) {
      for (std::uint64_t n = m + 1; n <= bound; ++n) {
        ++r.pairs;
        bool found = false;
        for (std::uint64_t x = 1; x <= xmax; ++x) {
          auto mx = plus.add(m, x);
          auto nx = plus.add(n, x);
          if (mx && nx && member[*mx] != member[*nx]) {
            r.witnesses.push_back({m, n, x});
            found = true;
            break;
          }
        }
        if (found) {
          ++r.separated;
        } else if (!r.first_failure) {
          r.first_failure = std::make_pair(m, n);
        }
      }
    }
    std::size_t k = 0;
    while ((std::uint64_t{1} << k) < bound + 1) {
      ++k;
    }
    r.determining_lower_bound = k;
    return r;
  }

  MaxPlusReport max_plus_witnesses(std::uint64_t bound) {
    if (bound < 3) {
      throw DomainError("bound must be at least 3");
    }
    if (bound > 200) {
      throw DomainError("bound above 200 is too large for the context sweep");
    }
    TruncatedMaxPlus model(bound);
    MaxPlusReport    r{bound, 0, 0, 0, 0, 0, 0, 0, std::nullopt};
    auto const       inf = ExtendedNat::infinity();

    for (std::uint64_t i = 0; i <= bound; ++i) {
      for (std::uint64_t j = 0; j <= bound; ++j) {
        for (std::uint64_t k = 0; k <= bound; ++k) {
          if (i + j > bound) {
            ++r.mixed_out_of_window;
            continue;
          }
          ++r.mixed_pairs;
          MaxPlusElement u{i + j, ExtendedNat::finite(i)};
          auto           p = model.multiply(u, {i, ExtendedNat::finite(j)});
          auto           q = model.multiply(u, {k, inf});
          if (!p || !q) {
            ++r.overflow_skipped;
            continue;
          }
          if (TruncatedMaxPlus::in_diagonal(*p) && !TruncatedMaxPlus::in_diagonal(*q)) {
            ++r.mixed_separated;
          }
          if (i == 1 && j == 2 && k == 3) {
            r.sample = std::make_pair(*p, *q);
          }
        }
      }
    }

    // For each (k, inf), the contexts that send it into the diagonal.
    auto const                     window = model.elements();
    std::vector<std::vector<bool>> hits;
    for (std::uint64_t k = 0; k <= bound; ++k) {
      MaxPlusElement    x{k, inf};
      std::vector<bool> row;
      auto              record = [&](std::optional<MaxPlusElement> const& y) {
        if (!y) {
          ++r.overflow_skipped;
          row.push_back(false);
        } else {
          row.push_back(TruncatedMaxPlus::in_diagonal(*y));
        }
      };
      for (auto const& u : window) {
        record(model.multiply(u, x));
        record(model.multiply(x, u));
      }
      for (auto const& u : window) {
        auto ux = model.multiply(u, x);
        for (auto const& v : window) {
          record(ux ? model.multiply(*ux, v) : std::nullopt);
        }
      }
      r.contexts = row.size();
      hits.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < hits.size(); ++a) {
      for (std::size_t b = a + 1; b < hits.size(); ++b) {
        ++r.infinite_pairs;
        if (hits[a] != hits[b]) {
          ++r.infinite_separated;
        }
      }
    }
    return r;
  }

}  // namespace syncon
