#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "syncon/alg_format.hpp"
#include "syncon/congruence.hpp"
#include "syncon/error.hpp"
#include "syncon/languages.hpp"
#include "syncon/profinite.hpp"
#include "syncon/report.hpp"
#include "syncon/samples.hpp"
#include "syncon/syntactic.hpp"
#include "syncon/term.hpp"

namespace syncon::cli {

  namespace {

    struct Options {
      bool          json = false;
      std::uint64_t seed = 1;

      std::string algebra;
      std::string target;
      std::string system;
      std::string dfa;
      std::string subset;
      std::string partition;
      std::string partition2;
      std::string symbol;
      std::string arguments;
      std::string term;
      std::string assign;
      std::string variable = "x1";
      std::string cylinder;
      std::string thread1;
      std::string thread2;
      std::string blocks;
      std::string suite;
      std::string map;

      std::vector<std::string> maps;
      std::vector<std::string> terms;
      std::vector<std::string> thetas;
      std::vector<std::string> words;

      std::size_t   element = 0;
      std::size_t   level   = 0;
      std::size_t   cap     = 0;
      std::size_t   count   = 200;
      std::uint64_t n       = 0;
      std::uint64_t bound   = 0;
      std::uint64_t xmax    = 4096;
      bool          primes  = false;
      bool          dot     = false;
      bool          has_n   = false;
    };

    // Result of one verb: a JSON document, the text rendering, and a status.
    struct Output {
      Json               doc;
      std::ostringstream text;
      int                status = 0;
    };

    using Handler = void (*)(Options const&, Output&);

    ////////////////////////////////////////////////////////////////////////
    // Argument helpers
    ////////////////////////////////////////////////////////////////////////

    std::vector<std::uint64_t> parse_numbers(std::string_view text) {
      std::vector<std::uint64_t> out;
      std::string                token;
      auto flush = [&] {
        if (token.empty()) {
          return;
        }
        std::size_t used = 0;
        std::uint64_t v  = 0;
        try {
          v = std::stoull(token, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != token.size() || token[0] == '-') {
          throw DomainError("expected a natural number, found '" + token + "'");
        }
        out.push_back(v);
        token.clear();
      };
      for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '{' || c == '}') {
          flush();
        } else {
          token.push_back(c);
        }
      }
      flush();
      return out;
    }

    std::vector<Element> parse_elements(std::string_view text, std::size_t n, std::string_view what) {
      std::vector<Element> out;
      for (auto v : parse_numbers(text)) {
        if (v >= n) {
          throw DomainError(std::string(what) + " element " + std::to_string(v)
                            + " is out of range for carrier " + std::to_string(n));
        }
        out.push_back(static_cast<Element>(v));
      }
      return out;
    }

    Subset parse_subset(FiniteAlgebra const& algebra, std::string const& text) {
      for (auto const& s : algebra.subsets()) {
        if (s.name() == text) {
          return s;
        }
      }
      return Subset(algebra.size(), parse_elements(text, algebra.size(), "subset"));
    }

    std::vector<Element> parse_map(std::string const& text, std::size_t source, std::size_t target) {
      auto map = parse_elements(text, target, "map");
      if (map.size() != source) {
        throw DomainError("map has " + std::to_string(map.size()) + " entries, expected "
                          + std::to_string(source));
      }
      return map;
    }

    Partition parse_partition(std::string const& text, std::size_t n) {
      auto p = Partition::parse(text);
      if (p.size() != n) {
        throw DomainError("partition " + text + " is over " + std::to_string(p.size())
                          + " elements, expected " + std::to_string(n));
      }
      return p;
    }

    Congruence user_congruence(FiniteAlgebra const& algebra, std::string const& text) {
      auto p = parse_partition(text, algebra.size());
      auto c = certify(algebra, p);
      if (!c) {
        throw DomainError(p.to_string() + " is not a congruence of '" + algebra.name() + "'");
      }
      return *c;
    }

    Assignment parse_assignment(std::string const& text, std::size_t n) {
      Assignment        out;
      std::stringstream ss(text);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item.empty()) {
          continue;
        }
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw DomainError("expected name=value in assignment, found '" + item + "'");
        }
        auto values = parse_elements(item.substr(eq + 1), n, "assignment");
        if (values.size() != 1) {
          throw DomainError("assignment '" + item + "' needs exactly one value");
        }
        out[item.substr(0, eq)] = values[0];
      }
      return out;
    }

    CylinderSet parse_cylinder(InverseSystem const& system, std::string const& text) {
      auto colon = text.find(':');
      if (colon == std::string::npos) {
        throw DomainError("cylinder must look like <level>:<i,j,...>, found '" + text + "'");
      }
      auto levels = parse_numbers(text.substr(0, colon));
      if (levels.size() != 1) {
        throw DomainError("cylinder level missing in '" + text + "'");
      }
      auto const& a = system.level(levels[0]);
      return {levels[0], Subset(a.size(), parse_elements(text.substr(colon + 1), a.size(), "cylinder"))};
    }

    Thread parse_thread(std::string const& text) {
      Thread t;
      for (auto v : parse_numbers(text)) {
        t.coordinates.push_back(static_cast<Element>(v));
      }
      return t;
    }

    DeterminingSet user_maps(Options const& o, FiniteAlgebra const& a) {
      DeterminingSet set;
      for (auto const& m : o.maps) {
        set.functions.emplace_back(parse_map(m, a.size(), a.size()));
      }
      return set;
    }

    std::string join(std::vector<Element> const& v, char sep = ' ') {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
          s += sep;
        }
        s += std::to_string(v[i]);
      }
      return s;
    }

    void print_verdict(std::ostream& os, DeterminationVerdict const& v) {
      os << "determined " << (v.determined ? "yes" : "no") << '\n';
      os << "induced " << v.induced.to_string() << '\n';
      os << "syntactic " << v.syntactic.to_string() << '\n';
      if (v.witness) {
        os << "witness (" << v.witness->first << "," << v.witness->second << ") related only by the "
           << (v.in_induced ? "induced relation" : "syntactic congruence") << '\n';
      }
    }

    void print_set(std::ostream& os, DeterminingSet const& set) {
      os << "functions " << set.functions.size() << '\n';
      for (auto const& f : set.functions) {
        os << "  " << f.to_string();
        if (auto const* t = std::get_if<TermProvenance>(&f.provenance())) {
          os << "  " << t->term.to_string();
          for (auto const& [name, value] : t->assignment) {
            os << ' ' << name << '=' << value;
          }
        }
        os << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Verbs
    ////////////////////////////////////////////////////////////////////////

    void verb_eval(Options const& o, Output& out) {
      auto a = read_algebra_file(o.algebra);
      if (!o.symbol.empty() == !o.term.empty()) {
        throw DomainError("eval needs exactly one of --symbol and --term");
      }
      Element v = 0;
      if (!o.symbol.empty()) {
        auto args = parse_numbers(o.arguments);
        std::vector<Element> elems(args.begin(), args.end());
        for (auto x : args) {
          if (x > 0xffffffffu) {
            throw DomainError("argument " + std::to_string(x) + " out of range");
          }
        }
        v = eval_symbol(a, o.symbol, elems);
        out.doc["symbol"]    = o.symbol;
        out.doc["arguments"] = elems;
      } else {
        auto t = parse_term(o.term, a.signature());
        v      = eval_term(a, t, parse_assignment(o.assign, a.size()));
        out.doc["term"] = t.to_string();
      }
      out.doc["value"] = v;
      out.text << v << '\n';
    }

    void verb_linearize(Options const& o, Output& out) {
      auto a     = read_algebra_file(o.algebra);
      auto t     = parse_term(o.term, a.signature());
      auto count = count_occurrences(t, o.variable);
      out.doc["term"]        = t.to_string();
      out.doc["variable"]    = o.variable;
      out.doc["occurrences"] = count;
      out.doc["linear"]      = count == 1;
      out.text << "occurrences " << count << (count == 1 ? " (linear)" : "") << '\n';
      if (count == 0) {
        return;
      }
      auto lin   = linearize(t, o.variable);
      Json terms = Json::array();
      for (auto const& s : lin.terms) {
        terms.push_back(s.to_string());
        out.text << s.to_string() << '\n';
      }
      out.doc["linearized"] = terms;
      out.doc["fresh"]      = {lin.x, lin.y, lin.z};
    }

    void verb_fmt(Options const& o, Output& out) {
      auto a          = read_algebra_file(o.algebra);
      out.doc["algebra"] = to_json(a);
      out.text << serialize_algebra(a);
    }

    void verb_is_congruence(Options const& o, Output& out) {
      auto a  = read_algebra_file(o.algebra);
      auto p  = parse_partition(o.partition, a.size());
      bool ok = is_congruence(a, p);
      out.doc["partition"]  = to_json(p);
      out.doc["congruence"] = ok;
      out.text << "congruence " << (ok ? "yes" : "no") << '\n';
      if (!o.subset.empty()) {
        auto L   = parse_subset(a, o.subset);
        bool sat = saturates(p, L);
        out.doc["subset"]    = to_json(L);
        out.doc["saturates"] = sat;
        out.text << "saturates " << L.to_string() << ' ' << (sat ? "yes" : "no") << '\n';
      }
    }

    void verb_syn(Options const& o, Output& out) {
      auto a   = read_algebra_file(o.algebra);
      auto L   = parse_subset(a, o.subset);
      auto syn = syntactic_congruence(a, L);
      out.doc["subset"]    = to_json(L);
      out.doc["syntactic"] = to_json(syn);
      out.text << "classes " << syn.congruence.partition().to_string() << '\n';
      out.text << "quotient size " << syn.quotient.size() << '\n';
      out.text << "eta " << join(syn.eta.image()) << '\n';
      out.text << "translations " << syn.monoid_size << '\n';
    }

    void verb_quotient(Options const& o, Output& out) {
      auto       a     = read_algebra_file(o.algebra);
      auto const theta = o.partition.empty()
                             ? syntactic_congruence(a, parse_subset(a, o.subset)).congruence
                             : user_congruence(a, o.partition);
      auto q = quotient(a, theta);
      out.doc["classes"]    = to_json(theta.partition());
      out.doc["quotient"]   = to_json(q.algebra);
      out.doc["projection"] = q.projection.image();
      if (o.dot) {
        out.doc["dot"] = quotient_dot(a, q);
        out.text << quotient_dot(a, q);
      } else {
        out.text << "classes " << theta.partition().to_string() << '\n';
        out.text << "projection " << join(q.projection.image()) << '\n';
        out.text << serialize_algebra(q.algebra);
      }
    }

    void verb_meet(Options const& o, Output& out) {
      auto a = read_algebra_file(o.algebra);
      auto m = meet(user_congruence(a, o.partition), user_congruence(a, o.partition2));
      out.doc["meet"] = to_json(m.partition());
      out.text << m.partition().to_string() << '\n';
    }

    void verb_tm(Options const& o, Output& out) {
      auto a     = read_algebra_file(o.algebra);
      auto elems = elementary_translations(a);
      auto m     = translation_monoid(a, o.cap ? std::optional<std::size_t>(o.cap) : std::nullopt);
      out.doc["elementary"] = elems.size();
      out.doc["monoid"]     = to_json(m);
      out.text << "elementary translations " << elems.size() << '\n';
      out.text << "monoid size " << m.size() << '\n';
      for (auto const& f : m.sorted()) {
        out.text << "  " << f.to_string() << '\n';
      }
    }

    void verb_polymap(Options const& o, Output& out) {
      auto a = read_algebra_file(o.algebra);
      auto t = parse_term(o.term, a.signature());
      auto f = transformation_of_linear_term(a, t, o.variable, parse_assignment(o.assign, a.size()));
      auto m = translation_monoid(a);
      out.doc["map"]            = f.image();
      out.doc["in_translations"] = m.contains(f);
      out.text << f.to_string() << '\n';
    }

    void verb_detset(Options const& o, Output& out) {
      auto a   = read_algebra_file(o.algebra);
      auto L   = parse_subset(a, o.subset);
      auto set = o.maps.empty() ? determining_set_from_quotient(a, L) : user_maps(o, a);
      auto v   = is_S_determined(a, L, set);
      out.doc["subset"]  = to_json(L);
      out.doc["source"]  = o.maps.empty() ? "quotient" : "given";
      out.doc["set"]     = to_json(set);
      out.doc["verdict"] = to_json(v);
      print_set(out.text, set);
      print_verdict(out.text, v);
      if (v.determined) {
        auto b = index_bound_check(a, L, set);
        out.doc["index_bound"] = {{"index", b.index}, {"set_size", b.set_size}, {"holds", b.holds}};
        out.text << "index " << b.index << " <= 2^" << b.set_size << ' '
                 << (b.holds ? "holds" : "fails") << '\n';
        if (!b.holds) {
          throw InvariantViolation("index bound fails for a determining set");
        }
      }
    }

    void verb_termdet(Options const& o, Output& out) {
      auto              a = read_algebra_file(o.algebra);
      auto              L = parse_subset(a, o.subset);
      std::vector<Term> terms;
      if (o.terms.empty()) {
        terms = semigroup_term_set(a.signature()[unique_binary_symbol(a)].name);
      }
      for (auto const& t : o.terms) {
        terms.push_back(parse_term(t, a.signature()));
      }
      auto v = is_term_determined(a, L, terms, o.variable);
      Json ts = Json::array();
      for (auto const& t : terms) {
        ts.push_back(t.to_string());
        out.text << "term " << t.to_string() << '\n';
      }
      out.doc["terms"]   = ts;
      out.doc["verdict"] = to_json(v);
      print_verdict(out.text, v);
    }

    void verb_mindetset(Options const& o, Output& out) {
      auto a   = read_algebra_file(o.algebra);
      auto L   = parse_subset(a, o.subset);
      auto set = o.maps.empty() ? determining_set_from_quotient(a, L) : user_maps(o, a);
      auto min = minimal_determining_subset(a, L, set);
      out.doc["given"]   = set.functions.size();
      out.doc["minimal"] = to_json(min);
      out.text << "given " << set.functions.size() << '\n';
      print_set(out.text, min);
    }

    void verb_pullback(Options const& o, Output& out) {
      auto src = read_algebra_file(o.algebra);
      auto tgt = read_algebra_file(o.target);
      auto map = parse_map(o.map, src.size(), tgt.size());
      auto L   = parse_subset(tgt, o.subset);
      auto phi = Homomorphism::make(src, tgt, map);
      auto r   = pullback_syntactic_check(phi, L);
      out.doc["pullback"] = to_json(r);
      out.text << "target syntactic " << r.target_syntactic.to_string() << '\n';
      out.text << "pulled back " << r.pulled_back.to_string() << '\n';
      out.text << "source syntactic " << r.source_syntactic.to_string() << '\n';
      out.text << "induced map " << join(r.induced_map) << " (isomorphism)\n";
    }

    void verb_sys_validate(Options const& o, Output& out) {
      auto s = read_system_file(o.system);
      auto d = validate_system(s);
      out.doc["system"]      = s.name();
      out.doc["depth"]       = s.depth();
      out.doc["diagnostics"] = to_json(d);
      out.text << (d.valid ? "valid" : "invalid: " + d.message) << '\n';
      if (!d.valid) {
        out.status = 1;
      }
    }

    void verb_sys_separate(Options const& o, Output& out) {
      auto s = read_system_file(o.system);
      auto k = separate_points(s, parse_thread(o.thread1), parse_thread(o.thread2));
      out.doc["level"] = k ? Json(*k) : Json(nullptr);
      out.text << (k ? "level " + std::to_string(*k) : std::string("none")) << '\n';
    }

    void verb_sys_recognize(Options const& o, Output& out) {
      auto s = read_system_file(o.system);
      auto c = parse_cylinder(s, o.cylinder);
      auto r = recognize_clopen(s, c);
      out.doc["recognition"] = to_json(r);
      out.text << "target size " << r.target.size() << '\n';
      out.text << "image " << r.image.to_string() << '\n';
      for (std::size_t i = 0; i < r.maps.size(); ++i) {
        out.text << "level " << r.level + i << ": " << join(r.maps[i]) << '\n';
      }
    }

    void verb_sys_syntactic(Options const& o, Output& out) {
      auto s     = read_system_file(o.system);
      auto c     = parse_cylinder(s, o.cylinder);
      auto level = o.level ? o.level : c.level;
      auto theta = cylinder_syntactic(s, c, level);
      out.doc["level"]   = level;
      out.doc["classes"] = to_json(theta.partition());
      out.text << theta.partition().to_string() << '\n';
    }

    void verb_sys_quotient(Options const& o, Output& out) {
      auto                    s = read_system_file(o.system);
      std::vector<Congruence> thetas;
      if (o.thetas.size() != s.depth()) {
        throw DomainError("give one --theta per level (" + std::to_string(s.depth()) + ")");
      }
      for (std::size_t k = 1; k <= s.depth(); ++k) {
        thetas.push_back(user_congruence(s.level(k), o.thetas[k - 1]));
      }
      auto q = quotient_system(s, thetas);
      out.doc["diagnostics"] = to_json(validate_system(q));
      out.doc["sizes"]       = Json::array();
      for (std::size_t k = 1; k <= q.depth(); ++k) {
        out.doc["sizes"].push_back(q.level(k).size());
      }
      out.text << serialize_system(q);
    }

    void verb_blocks(Options const& o, Output& out) {
      auto a = read_algebra_file(o.algebra);
      auto p = parse_partition(o.blocks, a.size());
      std::vector<Subset> blocks;
      for (auto const& c : p.classes()) {
        blocks.emplace_back(a.size(), c);
      }
      auto theta = partition_meet_congruence(a, blocks);
      out.doc["blocks"]     = to_json(p);
      out.doc["congruence"] = to_json(theta.partition());
      out.text << theta.partition().to_string() << '\n';
    }

    void verb_omega(Options const& o, Output& out) {
      auto a = read_algebra_file(o.algebra);
      if (o.element >= a.size()) {
        throw DomainError("element " + std::to_string(o.element) + " out of range");
      }
      auto e  = static_cast<Element>(o.element);
      auto cs = cyclic_structure(a, unique_binary_symbol(a), e);
      auto v  = omega_power(a, e, o.has_n ? std::optional<std::uint64_t>(o.n) : std::nullopt);
      out.doc["element"] = e;
      out.doc["index"]   = cs.index;
      out.doc["period"]  = cs.period;
      out.doc["n"]       = o.has_n ? Json(o.n) : Json("omega");
      out.doc["value"]   = v;
      out.text << "index " << cs.index << " period " << cs.period << '\n';
      out.text << (o.has_n ? std::to_string(e) + "^(" + std::to_string(o.n) + "!)"
                           : std::to_string(e) + "^omega")
               << " = " << v << '\n';
    }

    void verb_thm61(Options const& o, Output& out) {
      auto a = read_algebra_file(o.algebra);
      auto L = parse_subset(a, o.subset);
      auto r = profiniteness_report(a, L);
      out.doc["subset"] = to_json(L);
      out.doc["report"] = to_json(r);
      out.text << "quotient size " << r.syntactic.quotient.size() << '\n';
      for (auto const& c : r.conditions) {
        out.text << "(" << c.number << ") " << to_string(c.status) << ": " << c.summary << " ["
                 << c.note << "]\n";
      }
      if (!r.all_hold()) {
        out.status = 2;
      }
    }

    void verb_dfa_synmon(Options const& o, Output& out) {
      auto d = read_dfa_file(o.dfa);
      auto m = syntactic_monoid(d);
      out.doc["monoid"] = to_json(m);
      out.text << "minimal states " << m.minimal.states << '\n';
      out.text << "monoid size " << m.algebra.size() << '\n';
      out.text << "accepted " << m.accepted.to_string() << '\n';
      Json words = Json::array();
      for (auto const& w : o.words) {
        auto word = parse_word(d, w);
        bool dfa  = d.accepts(word);
        bool mon  = m.accepted.contains(m.element_of(word));
        if (dfa != mon) {
          throw InvariantViolation("monoid and automaton disagree on '" + w + "'");
        }
        words.push_back({{"word", w}, {"accepted", dfa}, {"element", m.element_of(word)}});
        out.text << "word '" << w << "' " << (dfa ? "accepted" : "rejected") << '\n';
      }
      out.doc["words"] = words;
    }

    // Constant binary operations: the syntactic congruence of every subset
    // is the two-class relation, so the identity alone determines it.
    void suite_ex52(Options const&, Output& out) {
      std::size_t cases = 0;
      std::size_t bad   = 0;
      for (std::size_t n = 2; n <= 6; ++n) {
        auto a = constant_binary(n);
        for (auto const& L : all_subsets(n)) {
          ++cases;
          auto           syn = syntactic_congruence(a, L);
          DeterminingSet id;
          id.functions.push_back(Transformation::identity(n));
          if (!(syn.congruence.partition() == Partition::of_subset(L))
              || !is_S_determined(a, L, id).determined) {
            ++bad;
          }
        }
      }
      out.doc["cases"]      = cases;
      out.doc["mismatches"] = bad;
      out.text << "constant algebras: " << cases << " subsets, " << bad << " mismatches\n";
      if (bad) {
        out.status = 2;
      }
    }

    void suite_ex512(Options const& o, Output& out) {
      auto bound = o.bound ? o.bound : 64;
      auto r     = sparse_separation(bound, o.xmax,
                                 o.primes ? SparseSet::primes : SparseSet::powers_of_two);
      out.doc["report"] = to_json(r);
      out.text << "pairs " << r.pairs << ", separated " << r.separated << '\n';
      if (r.first_failure) {
        out.text << "no witness up to " << r.xmax << " for (" << r.first_failure->first << ","
                 << r.first_failure->second << ")\n";
        out.status = 1;
      }
      out.text << "any determining set has at least " << r.determining_lower_bound
               << " functions\n";
    }

    void suite_ex517(Options const& o, Output& out) {
      auto r = max_plus_witnesses(o.bound ? o.bound : 20);
      out.doc["report"] = to_json(r);
      out.text << "mixed pairs " << r.mixed_pairs << ", separated " << r.mixed_separated
               << ", outside the window " << r.mixed_out_of_window << '\n';
      out.text << "pairs in A x {inf} " << r.infinite_pairs << ", contexts " << r.contexts
               << ", separated " << r.infinite_separated << '\n';
      if (r.mixed_separated != r.mixed_pairs || r.infinite_separated != 0) {
        out.status = 2;
      }
    }

    // Random algebras against the brute-force congruence enumeration.
    void suite_oracle(Options const& o, Output& out) {
      Rng         rng(o.seed);
      std::size_t cases = 0;
      std::size_t bad   = 0;
      for (std::size_t i = 0; i < o.count; ++i) {
        auto       a      = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
        auto const all    = enumerate_congruences_oracle(a);
        for (auto const& L : all_subsets(a.size())) {
          ++cases;
          auto refined = syntactic_congruence(a, L).congruence.partition();
          std::optional<Partition> best;
          for (auto const& c : all) {
            if (saturates(c.partition(), L)
                && (!best || c.num_classes() < best->num_classes())) {
              best = c.partition();
            }
          }
          bool max = std::all_of(all.begin(), all.end(), [&](auto const& c) {
            return !saturates(c.partition(), L) || c.partition().refines(*best);
          });
          if (!best || !max || !(*best == refined)) {
            ++bad;
          }
        }
      }
      out.doc["seed"]       = o.seed;
      out.doc["algebras"]   = o.count;
      out.doc["cases"]      = cases;
      out.doc["mismatches"] = bad;
      out.text << o.count << " algebras, " << cases << " subsets, " << bad << " mismatches\n";
      if (bad) {
        out.status = 2;
      }
    }

    void verb_check(Options const& o, Output& out) {
      out.doc["suite"] = o.suite;
      if (o.suite == "ex52") {
        suite_ex52(o, out);
      } else if (o.suite == "ex512") {
        suite_ex512(o, out);
      } else if (o.suite == "ex517") {
        suite_ex517(o, out);
      } else if (o.suite == "oracle") {
        suite_oracle(o, out);
      } else {
        throw DomainError("unknown suite '" + o.suite + "'");
      }
    }

    struct VerbSpec {
      char const* name;
      char const* help;
      Handler     handler;
    };

    std::vector<VerbSpec> const& verb_table() {
      static std::vector<VerbSpec> const table = {
          {"eval", "evaluate a symbol or a term", verb_eval},
          {"linearize", "count occurrences and linearize a term", verb_linearize},
          {"fmt", "parse and print an algebra canonically", verb_fmt},
          {"is-congruence", "check a partition for compatibility and saturation", verb_is_congruence},
          {"syn", "syntactic congruence of a subset", verb_syn},
          {"quotient", "quotient by a congruence or a syntactic congruence", verb_quotient},
          {"meet", "meet of two congruences", verb_meet},
          {"tm", "translation monoid", verb_tm},
          {"polymap", "self-map of a term linear in one variable", verb_polymap},
          {"detset", "determining set and index bound", verb_detset},
          {"termdet", "determination by a set of terms", verb_termdet},
          {"mindetset", "minimal determining subset", verb_mindetset},
          {"pullback", "syntactic congruence along a surjective homomorphism", verb_pullback},
          {"sys-validate", "validate an inverse system", verb_sys_validate},
          {"sys-separate", "first level separating two threads", verb_sys_separate},
          {"sys-recognize", "finite recognizer of a cylinder", verb_sys_recognize},
          {"sys-syntactic", "syntactic congruence of a cylinder at a level", verb_sys_syntactic},
          {"sys-quotient", "levelwise quotient of an inverse system", verb_sys_quotient},
          {"blocks", "meet of syntactic congruences of partition blocks", verb_blocks},
          {"omega", "factorial and idempotent powers", verb_omega},
          {"thm61", "profiniteness witnesses for a subset", verb_thm61},
          {"dfa-synmon", "syntactic monoid of a regular language", verb_dfa_synmon},
          {"check", "built-in suites: ex52, ex512, ex517, oracle", verb_check},
      };
      return table;
    }

    void add_options(CLI::App& sub, std::string const& verb, Options& o) {
      auto has = [&](std::initializer_list<char const*> names) {
        return std::find_if(names.begin(), names.end(), [&](char const* n) { return verb == n; })
               != names.end();
      };
      bool const uses_algebra = !has({"sys-validate", "sys-separate", "sys-recognize",
                                      "sys-syntactic", "sys-quotient", "dfa-synmon", "check"});
      if (uses_algebra) {
        sub.add_option("-a,--algebra", o.algebra, "algebra file (.alg)")->required();
      }
      if (has({"syn", "is-congruence", "quotient", "detset", "termdet", "mindetset", "pullback",
               "thm61"})) {
        auto opt = sub.add_option("-L,--subset", o.subset, "subset: i,j,... or a subset name");
        if (!has({"is-congruence", "quotient"})) {
          opt->required();
        }
      }
      if (has({"is-congruence", "quotient", "meet"})) {
        auto opt = sub.add_option("-p,--partition", o.partition, "partition such as {0,2}/{1,3}");
        if (!has({"quotient"})) {
          opt->required();
        }
      }
      if (verb == "meet") {
        sub.add_option("-q,--other", o.partition2, "second partition")->required();
      }
      if (verb == "quotient") {
        sub.add_flag("--dot", o.dot, "emit a Graphviz diagram of the projection");
      }
      if (verb == "eval") {
        sub.add_option("--symbol", o.symbol, "operation symbol");
        sub.add_option("--args", o.arguments, "arguments, comma separated");
      }
      if (has({"eval", "linearize", "polymap"})) {
        auto opt = sub.add_option("--term", o.term, "term");
        if (verb != "eval") {
          opt->required();
        }
      }
      if (has({"eval", "polymap"})) {
        sub.add_option("--assign", o.assign, "assignment name=value,...");
      }
      if (has({"linearize", "polymap", "termdet"})) {
        sub.add_option("--var", o.variable, "distinguished variable")->capture_default_str();
      }
      if (verb == "termdet") {
        sub.add_option("--term", o.terms, "term (repeatable); default the semigroup terms");
      }
      if (has({"detset", "mindetset"})) {
        sub.add_option("--map", o.maps, "self-map as an image list (repeatable)");
      }
      if (verb == "tm") {
        sub.add_option("--cap", o.cap, "refuse monoids larger than this");
      }
      if (verb == "pullback") {
        sub.add_option("-b,--target", o.target, "target algebra file")->required();
        sub.add_option("--map", o.map, "images of the source elements")->required();
      }
      if (verb.rfind("sys-", 0) == 0) {
        sub.add_option("-s,--system", o.system, "inverse system file (.sys)")->required();
      }
      if (has({"sys-recognize", "sys-syntactic"})) {
        sub.add_option("--cyl", o.cylinder, "cylinder <level>:<i,j,...>")->required();
      }
      if (verb == "sys-syntactic") {
        sub.add_option("--level", o.level, "level to compute at (default: the cylinder's)");
      }
      if (verb == "sys-separate") {
        sub.add_option("--t1", o.thread1, "first thread")->required();
        sub.add_option("--t2", o.thread2, "second thread")->required();
      }
      if (verb == "sys-quotient") {
        sub.add_option("--theta", o.thetas, "congruence per level, in level order")->required();
      }
      if (verb == "blocks") {
        sub.add_option("--blocks", o.blocks, "blocks such as {0,2}/{1,3}")->required();
      }
      if (verb == "omega") {
        sub.add_option("-e,--element", o.element, "element")->required();
        sub.add_option("-n,--n", o.n, "compute a^(n!) instead of a^omega");
      }
      if (verb == "dfa-synmon") {
        sub.add_option("-d,--dfa", o.dfa, "automaton file (.dfa)")->required();
        sub.add_option("--word", o.words, "word to check (repeatable)");
      }
      if (verb == "check") {
        sub.add_option("--suite", o.suite, "ex52 | ex512 | ex517 | oracle")
            ->required()
            ->check(CLI::IsMember({"ex52", "ex512", "ex517", "oracle"}));
        sub.add_option("--N", o.bound, "window bound");
        sub.add_option("--xmax", o.xmax, "search bound for ex512")->capture_default_str();
        sub.add_flag("--primes", o.primes, "use the primes instead of powers of 2 in ex512");
        sub.add_option("--count", o.count, "number of random algebras for oracle")
            ->capture_default_str();
      }
    }

  }  // namespace

  std::vector<std::string> const& verbs() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> v;
      for (auto const& s : verb_table()) {
        v.emplace_back(s.name);
      }
      return v;
    }();
    return names;
  }

  std::vector<Coverage> const& coverage() {
    static std::vector<Coverage> const table = {
        {"eval_symbol", "eval"},
        {"eval_term", "eval"},
        {"count_occurrences", "linearize"},
        {"linearize", "linearize"},
        {"parse_algebra", "fmt"},
        {"serialize_algebra", "fmt"},
        {"is_congruence", "is-congruence"},
        {"saturates", "is-congruence"},
        {"largest_congruence_saturating", "syn"},
        {"syntactic_congruence", "syn"},
        {"quotient", "quotient"},
        {"meet", "meet"},
        {"enumerate_congruences_oracle", "check"},
        {"elementary_translations", "tm"},
        {"translation_monoid", "tm"},
        {"transformation_of_linear_term", "polymap"},
        {"is_S_determined", "detset"},
        {"determining_set_from_quotient", "detset"},
        {"index_bound_check", "detset"},
        {"is_term_determined", "termdet"},
        {"minimal_determining_subset", "mindetset"},
        {"pullback_syntactic_check", "pullback"},
        {"validate_system", "sys-validate"},
        {"separate_points", "sys-separate"},
        {"recognize_clopen", "sys-recognize"},
        {"cylinder_syntactic", "sys-syntactic"},
        {"quotient_system", "sys-quotient"},
        {"partition_meet_congruence", "blocks"},
        {"omega_power", "omega"},
        {"profiniteness_report", "thm61"},
        {"minimal_dfa", "dfa-synmon"},
        {"transition_monoid", "dfa-synmon"},
        {"syntactic_monoid", "dfa-synmon"},
        {"sparse_separation", "check"},
        {"max_plus_witnesses", "check"},
    };
    return table;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"syntactic congruences of finite algebras", "syncon"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "emit a single JSON document");
    app.add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();

    std::vector<std::pair<CLI::App*, Handler>> subs;
    for (auto const& entry : verb_table()) {
      auto* sub = app.add_subcommand(entry.name, entry.help);
      add_options(*sub, entry.name, o);
      subs.emplace_back(sub, entry.handler);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return 0;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n' << app.help();
      return 1;
    }

    for (auto const& [sub, handler] : subs) {
      if (!sub->parsed()) {
        continue;
      }
      if (auto* n = sub->get_option_no_throw("--n")) {
        o.has_n = n->count() > 0;
      }
      Output result;
      result.doc = document(sub->get_name());
      try {
        handler(o, result);
      } catch (InvariantViolation const& e) {
        err << "invariant violation: " << e.what() << '\n';
        return 2;
      } catch (ParseError const& e) {
        err << "parse error: " << e.what() << '\n';
        return 1;
      } catch (DomainError const& e) {
        err << "error: " << e.what() << '\n';
        return 1;
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return 1;
      } catch (std::exception const& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
      }
      if (o.json) {
        result.doc["status"] = result.status;
        out << result.doc.dump(2) << '\n';
      } else {
        out << result.text.str();
      }
      return result.status;
    }
    err << app.help();
    return 1;
  }

}  // namespace syncon::cli
