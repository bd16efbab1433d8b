#include "syncon/profinite.hpp"

#include <algorithm>
#include <sstream>

#include "alg_block.hpp"
#include "syncon/alg_format.hpp"
#include "syncon/error.hpp"
#include "tokens.hpp"

namespace syncon {

  ////////////////////////////////////////////////////////////////////////
  // InverseSystem
  ////////////////////////////////////////////////////////////////////////

  InverseSystem::InverseSystem(std::string                       name,
                               std::vector<FiniteAlgebra>        levels,
                               std::vector<std::vector<Element>> connecting)
      : name_(std::move(name)),
        levels_(std::move(levels)),
        connecting_(std::move(connecting)) {
    if (levels_.empty()) {
      throw DomainError("inverse system '" + name_ + "' has no levels");
    }
    if (connecting_.size() + 1 != levels_.size()) {
      throw DomainError("inverse system '" + name_ + "' of depth "
                        + std::to_string(levels_.size()) + " has "
                        + std::to_string(connecting_.size()) + " connecting maps");
    }
    for (std::size_t k = 0; k < connecting_.size(); ++k) {
      auto const& map = connecting_[k];
      if (map.size() != levels_[k + 1].size()) {
        throw DomainError("map " + std::to_string(k + 2) + " -> " + std::to_string(k + 1)
                          + " has " + std::to_string(map.size()) + " entries, expected "
                          + std::to_string(levels_[k + 1].size()));
      }
      for (auto v : map) {
        if (v >= levels_[k].size()) {
          throw DomainError("map " + std::to_string(k + 2) + " -> " + std::to_string(k + 1)
                            + " has entry " + std::to_string(v) + " out of range");
        }
      }
    }
  }

  FiniteAlgebra const& InverseSystem::level(std::size_t k) const {
    if (k == 0 || k > levels_.size()) {
      throw DomainError("level " + std::to_string(k) + " out of range 1.."
                        + std::to_string(levels_.size()));
    }
    return levels_[k - 1];
  }

  std::vector<Element> const& InverseSystem::connecting(std::size_t k) const {
    if (k == 0 || k >= levels_.size()) {
      throw DomainError("no connecting map out of level " + std::to_string(k + 1));
    }
    return connecting_[k - 1];
  }

  std::vector<Element> InverseSystem::composite(std::size_t from, std::size_t to) const {
    if (to > from) {
      throw DomainError("composite map must go down: " + std::to_string(from) + " -> "
                        + std::to_string(to));
    }
    auto const&          top = level(from);
    std::vector<Element> map(top.size());
    for (std::size_t a = 0; a < map.size(); ++a) {
      map[a] = static_cast<Element>(a);
    }
    for (std::size_t k = from; k > to; --k) {
      auto const& step = connecting(k - 1);
      for (auto& v : map) {
        v = step[v];
      }
    }
    return map;
  }

  SystemDiagnostics validate_system(InverseSystem const& system) {
    for (std::size_t k = 1; k < system.depth(); ++k) {
      auto const& map = system.connecting(k);
      if (auto failure = homomorphism_failure(system.level(k + 1), system.level(k), map)) {
        return {false, k, "map " + std::to_string(k + 1) + " -> " + std::to_string(k)
                              + " is not a homomorphism: " + *failure};
      }
      std::vector<bool> hit(system.level(k).size(), false);
      for (auto v : map) {
        hit[v] = true;
      }
      auto miss = std::find(hit.begin(), hit.end(), false);
      if (miss != hit.end()) {
        return {false, k, "map " + std::to_string(k + 1) + " -> " + std::to_string(k)
                              + " is not surjective: misses "
                              + std::to_string(miss - hit.begin())};
      }
    }
    return {};
  }

  namespace {

    void require_valid(InverseSystem const& system) {
      auto d = validate_system(system);
      if (!d.valid) {
        throw DomainError("inverse system '" + system.name() + "' is invalid: " + d.message);
      }
    }

    void check_cylinder(InverseSystem const& system, CylinderSet const& cylinder) {
      auto const& a = system.level(cylinder.level);
      if (cylinder.subset.carrier_size() != a.size()) {
        throw DomainError("cylinder subset does not live in level "
                          + std::to_string(cylinder.level));
      }
    }

    Subset preimage_under(std::vector<Element> const& map, Subset const& subset) {
      std::vector<bool> bits(map.size());
      for (std::size_t a = 0; a < map.size(); ++a) {
        bits[a] = subset.contains(map[a]);
      }
      return Subset::from_bits(std::move(bits));
    }

    bool same_members(Subset const& lhs, Subset const& rhs) {
      return lhs.members() == rhs.members() && lhs.carrier_size() == rhs.carrier_size();
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // .sys format
  ////////////////////////////////////////////////////////////////////////

  InverseSystem parse_system(std::string_view text) {
    detail::TokenCursor cursor(detail::tokenize(text));
    cursor.expect_keyword("system");
    auto name = cursor.expect_word("system name");
    cursor.expect_keyword("depth");
    auto const depth_line = cursor.line();
    auto const depth      = cursor.expect_uint("depth");
    if (depth == 0 || depth > 64) {
      throw ParseError(depth_line, "depth must be between 1 and 64");
    }
    std::vector<FiniteAlgebra> levels;
    for (std::size_t k = 0; k < depth; ++k) {
      levels.push_back(detail::parse_algebra_block(cursor));
    }
    std::vector<std::vector<Element>> maps(depth - 1);
    std::vector<bool>                 seen(depth - 1, false);
    for (std::size_t i = 0; i + 1 < depth; ++i) {
      auto const line = cursor.line();
      cursor.expect_keyword("map");
      auto from = cursor.expect_uint("source level");
      auto to   = cursor.expect_uint("target level");
      if (to == 0 || from != to + 1 || from > depth) {
        throw ParseError(line, "expected 'map <k+1> <k>' with 1 <= k < depth");
      }
      if (seen[to - 1]) {
        throw ParseError(line, "duplicate map " + std::to_string(from) + " -> "
                                   + std::to_string(to));
      }
      seen[to - 1] = true;
      auto const  n = levels[from - 1].size();
      auto const  m = levels[to - 1].size();
      auto&       map = maps[to - 1];
      for (std::size_t a = 0; a < n; ++a) {
        auto const vline = cursor.line();
        auto       v     = cursor.expect_uint("image");
        if (v >= m) {
          throw ParseError(vline, "image " + std::to_string(v) + " out of range for level "
                                      + std::to_string(to));
        }
        map.push_back(static_cast<Element>(v));
      }
    }
    if (!cursor.done()) {
      auto const& t = cursor.peek();
      throw ParseError(t.line, "unexpected '" + t.text + "'");
    }
    return InverseSystem(std::move(name), std::move(levels), std::move(maps));
  }

  InverseSystem read_system_file(std::filesystem::path const& path) {
    auto text = read_text_file(path);
    try {
      return parse_system(text);
    } catch (ParseError const& e) {
      throw ParseError(e.line(), e.message(), path.string());
    }
  }

  std::string serialize_system(InverseSystem const& system) {
    std::ostringstream os;
    os << "system " << system.name() << '\n';
    os << "depth " << system.depth() << '\n';
    for (std::size_t k = 1; k <= system.depth(); ++k) {
      os << serialize_algebra(system.level(k));
    }
    for (std::size_t k = 1; k < system.depth(); ++k) {
      os << "map " << k + 1 << ' ' << k << '\n';
      auto const& map = system.connecting(k);
      for (std::size_t i = 0; i < map.size(); ++i) {
        os << map[i] << ((i % 10 == 9 || i + 1 == map.size()) ? '\n' : ' ');
      }
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Threads and cylinders
  ////////////////////////////////////////////////////////////////////////

  void check_thread(InverseSystem const& system, Thread const& thread) {
    auto const& c = thread.coordinates;
    if (c.empty() || c.size() > system.depth()) {
      throw DomainError("thread of length " + std::to_string(c.size())
                        + " for a system of depth " + std::to_string(system.depth()));
    }
    for (std::size_t k = 1; k <= c.size(); ++k) {
      if (c[k - 1] >= system.level(k).size()) {
        throw DomainError("thread coordinate " + std::to_string(c[k - 1]) + " at level "
                          + std::to_string(k) + " is out of range");
      }
      if (k > 1 && system.connecting(k - 1)[c[k - 1]] != c[k - 2]) {
        throw DomainError("incoherent thread: level " + std::to_string(k) + " element "
                          + std::to_string(c[k - 1]) + " does not map to "
                          + std::to_string(c[k - 2]));
      }
    }
  }

  std::optional<std::size_t> separate_points(InverseSystem const& system,
                                             Thread const&        lhs,
                                             Thread const&        rhs) {
    check_thread(system, lhs);
    check_thread(system, rhs);
    auto const d = std::min(lhs.coordinates.size(), rhs.coordinates.size());
    for (std::size_t k = 0; k < d; ++k) {
      if (lhs.coordinates[k] != rhs.coordinates[k]) {
        return k + 1;
      }
    }
    return std::nullopt;
  }

  Recognition recognize_clopen(InverseSystem const& system, CylinderSet const& cylinder) {
    require_valid(system);
    check_cylinder(system, cylinder);
    auto const& base = system.level(cylinder.level);
    auto        syn  = syntactic_congruence(base, cylinder.subset);

    Recognition r{cylinder.level, syn.quotient, syn.eta.image_of(cylinder.subset), {}};
    for (std::size_t m = cylinder.level; m <= system.depth(); ++m) {
      auto map = system.composite(m, cylinder.level);
      for (auto& v : map) {
        v = syn.eta(v);
      }
      auto const expected = preimage_under(system.composite(m, cylinder.level), cylinder.subset);
      auto const recognized = preimage_under(map, r.image);
      if (!same_members(expected, recognized)) {
        throw InvariantViolation("cylinder " + cylinder.subset.to_string() + " at level "
                                 + std::to_string(cylinder.level)
                                 + " is not recognized at level " + std::to_string(m));
      }
      r.maps.push_back(std::move(map));
    }
    return r;
  }

  Congruence cylinder_syntactic(InverseSystem const& system,
                                CylinderSet const&   cylinder,
                                std::size_t          level) {
    require_valid(system);
    check_cylinder(system, cylinder);
    if (level < cylinder.level || level > system.depth()) {
      throw DomainError("level " + std::to_string(level) + " must lie between "
                        + std::to_string(cylinder.level) + " and "
                        + std::to_string(system.depth()));
    }
    auto const& top  = system.level(level);
    auto const  proj = system.composite(level, cylinder.level);
    auto        phi  = Homomorphism::make(top, system.level(cylinder.level), proj);
    auto report = pullback_syntactic_check(phi, cylinder.subset);
    return certify_or_fail(top, report.source_syntactic);
  }

  Congruence partition_meet_congruence(FiniteAlgebra const&       algebra,
                                       std::vector<Subset> const& blocks) {
    std::vector<std::vector<Element>> classes;
    for (auto const& b : blocks) {
      if (b.carrier_size() != algebra.size()) {
        throw DomainError("block " + b.to_string() + " does not live in the algebra");
      }
      classes.push_back(b.members());
    }
    // validates overlap and coverage
    Partition::from_classes(algebra.size(), classes);

    auto theta = universal_congruence(algebra);
    for (auto const& b : blocks) {
      theta = meet(theta, syntactic_congruence(algebra, b).congruence);
    }
    for (auto const& b : blocks) {
      if (!theta.partition().saturates(b)) {
        throw InvariantViolation("meet of syntactic congruences does not saturate block "
                                 + b.to_string());
      }
    }
    return theta;
  }

  ////////////////////////////////////////////////////////////////////////
  // Powers
  ////////////////////////////////////////////////////////////////////////

  CyclicStructure cyclic_structure(FiniteAlgebra const& algebra, std::size_t symbol, Element a) {
    if (a >= algebra.size()) {
      throw DomainError("element " + std::to_string(a) + " out of range");
    }
    auto const&          t = algebra.table(symbol);
    auto const           n = algebra.size();
    std::vector<Element> powers{a};
    std::vector<std::size_t> first_seen(n, 0);  // exponent, 0 = unseen
    first_seen[a] = 1;
    while (true) {
      Element next = t[powers.back() * n + a];
      auto    e    = powers.size() + 1;
      if (first_seen[next] != 0) {
        return {first_seen[next], e - first_seen[next], std::move(powers)};
      }
      first_seen[next] = e;
      powers.push_back(next);
    }
  }

  Element omega_power(FiniteAlgebra const& algebra, Element a, std::optional<std::uint64_t> n) {
    auto const s = unique_binary_symbol(algebra);
    if (!is_associative(algebra, s)) {
      throw DomainError("operation '" + algebra.signature()[s].name + "' of '"
                        + algebra.name() + "' is not associative");
    }
    auto const cs    = cyclic_structure(algebra, s, a);
    auto const power = [&cs](std::uint64_t e) {
      // e >= 1
      if (e <= cs.powers.size()) {
        return cs.powers[e - 1];
      }
      auto r = cs.index + (e - cs.index) % cs.period;
      return cs.powers[r - 1];
    };

    if (!n) {
      auto const k     = cs.period * ((cs.index + cs.period - 1) / cs.period);
      auto const omega = power(k);
      auto const& t    = algebra.table(s);
      if (t[omega * algebra.size() + omega] != omega) {
        throw InvariantViolation("omega power of " + std::to_string(a) + " is not idempotent");
      }
      return omega;
    }

    // n! when it is below the index; otherwise only n! mod period matters.
    std::uint64_t fact  = 1;
    bool          small = true;
    for (std::uint64_t i = 2; i <= *n; ++i) {
      fact *= i;
      if (fact >= cs.index + cs.period) {
        small = false;
        break;
      }
    }
    if (small) {
      return power(fact);
    }
    std::uint64_t mod = 1 % cs.period;
    for (std::uint64_t i = 2; i <= *n && mod != 0; ++i) {
      mod = (mod * (i % cs.period)) % cs.period;
    }
    auto r = (mod + cs.period - cs.index % cs.period) % cs.period;
    return power(cs.index + r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotient systems
  ////////////////////////////////////////////////////////////////////////

  InverseSystem quotient_system(InverseSystem const& system, std::vector<Congruence> const& thetas) {
    require_valid(system);
    if (thetas.size() != system.depth()) {
      throw DomainError("expected " + std::to_string(system.depth()) + " congruences, got "
                        + std::to_string(thetas.size()));
    }
    std::vector<FiniteAlgebra> levels;
    for (std::size_t k = 1; k <= system.depth(); ++k) {
      levels.push_back(quotient(system.level(k), thetas[k - 1]).algebra);
    }
    std::vector<std::vector<Element>> maps;
    for (std::size_t k = 1; k < system.depth(); ++k) {
      auto const& upper = thetas[k].partition();
      auto const& lower = thetas[k - 1].partition();
      auto const& pi    = system.connecting(k);
      for (std::size_t a = 0; a < pi.size(); ++a) {
        for (std::size_t b = a + 1; b < pi.size(); ++b) {
          auto ea = static_cast<Element>(a);
          auto eb = static_cast<Element>(b);
          if (upper.same_class(ea, eb) && !lower.same_class(pi[a], pi[b])) {
            throw DomainError("map " + std::to_string(k + 1) + " -> " + std::to_string(k)
                              + " sends related (" + std::to_string(a) + ","
                              + std::to_string(b) + ") to unrelated ("
                              + std::to_string(pi[a]) + "," + std::to_string(pi[b]) + ")");
          }
        }
      }
      auto const           reps = upper.representatives();
      std::vector<Element> map(reps.size());
      for (std::size_t c = 0; c < reps.size(); ++c) {
        map[c] = static_cast<Element>(lower.class_of(pi[reps[c]]));
      }
      maps.push_back(std::move(map));
    }
    InverseSystem out(system.name() + "_quotient", std::move(levels), std::move(maps));
    auto          d = validate_system(out);
    if (!d.valid) {
      throw InvariantViolation("quotient system is invalid: " + d.message);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Profiniteness report
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(ConditionStatus status) {
    switch (status) {
      case ConditionStatus::holds:
        return "holds";
      case ConditionStatus::fails:
        return "fails";
      case ConditionStatus::trivial:
        return "trivial";
      case ConditionStatus::implied:
        return "implied";
      case ConditionStatus::out_of_scope:
        return "out_of_scope";
    }
    return "unknown";
  }

  bool ProfinitenessReport::all_hold() const {
    return std::none_of(conditions.begin(), conditions.end(), [](auto const& c) {
      return c.status == ConditionStatus::fails;
    });
  }

  namespace {

    bool is_semigroup_signature(FiniteAlgebra const& algebra) {
      auto const& sig     = algebra.signature();
      std::size_t binary  = 0;
      std::size_t b_index = 0;
      for (std::size_t s = 0; s < sig.size(); ++s) {
        if (sig[s].arity == 2) {
          ++binary;
          b_index = s;
        } else if (sig[s].arity != 0) {
          return false;
        }
      }
      return binary == 1 && is_associative(algebra, b_index);
    }

  }  // namespace

  ProfinitenessReport profiniteness_report(FiniteAlgebra const& algebra, Subset const& subset) {
    auto syn    = syntactic_congruence(algebra, subset);
    auto image  = syn.eta.image_of(subset);
    bool recog  = same_members(syn.eta.preimage(image), subset);
    auto lifted = determining_set_from_quotient(algebra, subset);
    auto monoid = translation_monoid(algebra);

    std::vector<Term> terms;
    bool              semigroup = is_semigroup_signature(algebra);
    if (semigroup) {
      terms = semigroup_term_set(algebra.signature()[unique_binary_symbol(algebra)].name);
    } else {
      for (auto const& f : lifted.functions) {
        auto const& t = std::get<TermProvenance>(f.provenance()).term;
        if (std::find(terms.begin(), terms.end(), t) == terms.end()) {
          terms.push_back(t);
        }
      }
    }
    auto term_verdict   = is_term_determined(algebra, subset, terms, "x1");
    auto lifted_verdict = is_S_determined(algebra, subset, lifted);
    bool in_monoid      = std::all_of(lifted.functions.begin(),
                                 lifted.functions.end(),
                                 [&monoid](auto const& f) { return monoid.contains(f); });

    auto status = [](bool ok) {
      return ok ? ConditionStatus::holds : ConditionStatus::fails;
    };
    bool const eight = lifted_verdict.determined && in_monoid;

    std::vector<ConditionReport> conditions;
    conditions.push_back({1, "the algebra is profinite", ConditionStatus::trivial,
                          "a finite discrete algebra is its own finite quotient"});
    conditions.push_back({2, "the syntactic congruence is clopen", status(true),
                          "finite quotient with " + std::to_string(syn.quotient.size())
                              + " elements"});
    conditions.push_back({3, "the translation monoid is equicontinuous",
                          ConditionStatus::out_of_scope,
                          "a statement about the compact-open topology; vacuous for finite algebras"});
    conditions.push_back({4, "the translation monoid is relatively compact",
                          ConditionStatus::out_of_scope,
                          "a statement about the compact-open topology; vacuous for finite algebras"});
    conditions.push_back({5, "the closure of the translation monoid is profinite",
                          ConditionStatus::out_of_scope,
                          "a statement about the compact-open topology; vacuous for finite algebras"});
    conditions.push_back({6, "a homomorphism onto a finite algebra recognizes L", status(recog),
                          "the syntactic morphism onto a " + std::to_string(syn.quotient.size())
                              + "-element algebra"});
    conditions.push_back({7, "the syntactic congruence is determined by finitely many terms",
                          status(term_verdict.determined),
                          std::to_string(terms.size())
                              + (semigroup ? " semigroup terms" : " terms lifted from the quotient")});
    conditions.push_back({8, "determined by a finite set of translations", status(eight),
                          std::to_string(lifted.functions.size())
                              + " lifted translations of the quotient"});
    conditions.push_back({9, "determined by a finite set of continuous self-maps",
                          eight ? ConditionStatus::implied : ConditionStatus::fails,
                          "translations are continuous self-maps"});
    conditions.push_back({10, "determined by a compact set of continuous self-maps",
                          eight ? ConditionStatus::implied : ConditionStatus::fails,
                          "finite sets are compact"});

    return ProfinitenessReport{std::move(syn),
                               std::move(image),
                               recog,
                               std::move(terms),
                               semigroup,
                               std::move(term_verdict),
                               std::move(lifted),
                               std::move(lifted_verdict),
                               in_monoid,
                               std::move(conditions)};
  }

}  // namespace syncon
