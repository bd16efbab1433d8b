#include "syncon/syntactic.hpp"

#include <algorithm>
#include <unordered_set>

#include "syncon/error.hpp"

namespace syncon {

  namespace {

    void check_subset(FiniteAlgebra const& algebra, Subset const& subset) {
      if (subset.carrier_size() != algebra.size()) {
        throw DomainError("subset of a carrier of size "
                          + std::to_string(subset.carrier_size())
                          + " used with algebra '" + algebra.name() + "' of size "
                          + std::to_string(algebra.size()));
      }
    }

    std::string pair_string(Element a, Element b) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }

  }  // namespace

  Partition induced_relation(std::size_t                        carrier_size,
                             std::vector<Transformation> const& functions,
                             Subset const&                      subset) {
    auto p = Partition::universal(carrier_size);
    for (auto const& f : functions) {
      if (f.degree() != carrier_size) {
        throw DomainError("function of degree " + std::to_string(f.degree())
                          + " on a carrier of size " + std::to_string(carrier_size));
      }
      p = meet(p, Partition::of_subset(f.preimage(subset)));
      if (p.num_classes() == carrier_size) {
        break;
      }
    }
    return p;
  }

  Partition syntactic_partition_by_monoid(FiniteAlgebra const&        algebra,
                                          TransformationMonoid const& monoid,
                                          Subset const&               subset) {
    check_subset(algebra, subset);
    return induced_relation(algebra.size(), monoid.elements(), subset);
  }

  SyntacticResult syntactic_congruence(FiniteAlgebra const& algebra, Subset const& subset) {
    check_subset(algebra, subset);
    auto const monoid     = translation_monoid(algebra);
    auto const by_monoid  = syntactic_partition_by_monoid(algebra, monoid, subset);
    auto       refined    = largest_congruence_saturating(algebra, subset);
    if (!(by_monoid == refined.partition())) {
      auto w = first_difference(by_monoid, refined.partition());
      throw InvariantViolation(
          "syntactic congruence of " + subset.to_string() + " on '" + algebra.name()
          + "': translation monoid gives " + by_monoid.to_string()
          + " but refinement gives " + refined.partition().to_string()
          + "; they disagree on " + pair_string(w.first, w.second));
    }
    auto q = quotient(algebra, refined);
    return SyntacticResult{std::move(refined),
                           std::move(q.projection),
                           std::move(q.algebra),
                           monoid.size()};
  }

  DeterminationVerdict is_S_determined(FiniteAlgebra const&  algebra,
                                       Subset const&         subset,
                                       DeterminingSet const& set) {
    check_subset(algebra, subset);
    DeterminationVerdict v;
    v.syntactic = largest_congruence_saturating(algebra, subset).partition();
    v.induced   = induced_relation(algebra.size(), set.functions, subset);
    auto w      = first_difference(v.induced, v.syntactic);
    v.determined = !w.found;
    if (w.found) {
      v.witness    = std::make_pair(w.first, w.second);
      v.in_induced = v.induced.same_class(w.first, w.second);
    }
    return v;
  }

  DeterminingSet instantiate_terms(FiniteAlgebra const&     algebra,
                                   std::vector<Term> const& terms,
                                   std::string const&       variable) {
    DeterminingSet out;
    out.kind  = DeterminingSet::Kind::linear_terms;
    out.terms = terms;
    std::unordered_set<std::vector<Element>, ImageHash> seen;
    auto const                                          n = algebra.size();
    for (auto const& t : terms) {
      check_term(algebra.signature(), t);
      if (count_occurrences(t, variable) == 0) {
        throw DomainError("term '" + t.to_string() + "' does not contain the variable '"
                          + variable + "'");
      }
      auto vars = variables(t);
      vars.erase(variable);
      std::vector<std::string> params(vars.begin(), vars.end());
      auto const               tuples = table_size(n, params.size());
      for (std::size_t r = 0; r < tuples; ++r) {
        auto       values = tuple_at(n, params.size(), r);
        Assignment assignment;
        for (std::size_t j = 0; j < params.size(); ++j) {
          assignment.emplace(params[j], values[j]);
        }
        Assignment           full = assignment;
        std::vector<Element> image(n);
        for (std::size_t a = 0; a < n; ++a) {
          full[variable] = static_cast<Element>(a);
          image[a]       = eval_term(algebra, t, full);
        }
        if (seen.insert(image).second) {
          out.functions.emplace_back(std::move(image),
                                     TermProvenance{t, variable, std::move(assignment)});
        }
      }
    }
    return out;
  }

  DeterminationVerdict is_term_determined(FiniteAlgebra const&     algebra,
                                          Subset const&            subset,
                                          std::vector<Term> const& terms,
                                          std::string const&       variable) {
    return is_S_determined(algebra, subset, instantiate_terms(algebra, terms, variable));
  }

  std::vector<Term> semigroup_term_set(std::string const& symbol) {
    auto x1 = Term::variable("x1");
    auto x2 = Term::variable("x2");
    auto x3 = Term::variable("x3");
    return {x1,
            Term::apply(symbol, {x2, x1}),
            Term::apply(symbol, {x1, x2}),
            Term::apply(symbol, {Term::apply(symbol, {x2, x1}), x3})};
  }

  DeterminingSet determining_set_from_quotient(FiniteAlgebra const& algebra,
                                               Subset const&        subset) {
    auto const  syn  = syntactic_congruence(algebra, subset);
    auto const& eta  = syn.eta;
    auto const  reps = syn.congruence.partition().representatives();
    auto const  mq   = translation_monoid(syn.quotient);
    auto const  n    = algebra.size();

    DeterminingSet                                      out;
    std::unordered_set<std::vector<Element>, ImageHash> seen;
    for (std::size_t i = 0; i < mq.size(); ++i) {
      auto witness = linear_term_of(mq, i, "x1");
      // parameters are classes of the quotient; lift them to representatives
      Assignment lifted;
      for (auto const& [name, cls] : witness.parameters) {
        lifted.emplace(name, reps[cls]);
      }
      std::vector<Element> image(n);
      Assignment           full = lifted;
      for (std::size_t a = 0; a < n; ++a) {
        full["x1"] = static_cast<Element>(a);
        image[a]   = eval_term(algebra, witness.term, full);
      }
      auto const& f = mq.elements()[i];
      for (std::size_t a = 0; a < n; ++a) {
        if (eta(image[a]) != f(eta(static_cast<Element>(a)))) {
          throw InvariantViolation("lift of " + f.to_string() + " does not commute with the "
                                   "syntactic morphism at " + std::to_string(a));
        }
      }
      if (seen.insert(image).second) {
        out.functions.emplace_back(std::move(image),
                                   TermProvenance{witness.term, "x1", std::move(lifted)});
      }
    }
    auto verdict = is_S_determined(algebra, subset, out);
    if (!verdict.determined) {
      throw InvariantViolation("lifted quotient translations do not determine the syntactic "
                               "congruence of " + subset.to_string() + "; witness "
                               + pair_string(verdict.witness->first, verdict.witness->second));
    }
    return out;
  }

  DeterminingSet minimal_determining_subset(FiniteAlgebra const&  algebra,
                                            Subset const&         subset,
                                            DeterminingSet const& set) {
    auto const target = largest_congruence_saturating(algebra, subset).partition();
    auto determines = [&](std::vector<Transformation> const& fs) {
      return induced_relation(algebra.size(), fs, subset) == target;
    };
    if (!determines(set.functions)) {
      throw DomainError("the given set does not determine the syntactic congruence of "
                        + subset.to_string());
    }
    DeterminingSet out = set;
    std::sort(out.functions.begin(), out.functions.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = out.functions.size(); i-- > 0;) {
        auto trial = out.functions;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (determines(trial)) {
          out.functions = std::move(trial);
          changed       = true;
        }
      }
    }
    return out;
  }

  IndexBound index_bound_check(FiniteAlgebra const&  algebra,
                               Subset const&         subset,
                               DeterminingSet const& set) {
    auto verdict = is_S_determined(algebra, subset, set);
    if (!verdict.determined) {
      throw DomainError("the given set does not determine the syntactic congruence of "
                        + subset.to_string());
    }
    IndexBound b;
    b.index    = verdict.syntactic.num_classes();
    b.set_size = set.functions.size();
    b.holds    = b.set_size >= 63 || b.index <= (std::size_t{1} << b.set_size);
    return b;
  }

  PullbackReport pullback_syntactic_check(Homomorphism const& phi, Subset const& subset) {
    if (!phi.is_surjective()) {
      throw DomainError("pullback check needs a surjective homomorphism");
    }
    auto const& source = phi.source();
    auto const& target = phi.target();
    check_subset(target, subset);

    PullbackReport report;
    auto const     syn_b = syntactic_congruence(target, subset);
    report.target_syntactic = syn_b.congruence.partition();

    std::vector<std::size_t> labels(source.size());
    for (std::size_t a = 0; a < source.size(); ++a) {
      labels[a] = report.target_syntactic.class_of(phi(static_cast<Element>(a)));
    }
    report.pulled_back = Partition::from_labels(std::span<std::size_t const>(labels));
    report.preimage    = phi.preimage(subset);

    auto const syn_a        = syntactic_congruence(source, report.preimage);
    report.source_syntactic = syn_a.congruence.partition();

    if (!(report.pulled_back == report.source_syntactic)) {
      auto w = first_difference(report.pulled_back, report.source_syntactic);
      throw InvariantViolation("pullback of the syntactic congruence "
                               + report.pulled_back.to_string()
                               + " differs from the syntactic congruence of the preimage "
                               + report.source_syntactic.to_string() + " at "
                               + pair_string(w.first, w.second));
    }

    auto const reps = report.source_syntactic.representatives();
    report.induced_map.resize(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
      report.induced_map[c]
          = static_cast<Element>(report.target_syntactic.class_of(phi(reps[c])));
    }
    try {
      auto iso = Homomorphism::make(syn_a.quotient, syn_b.quotient, report.induced_map);
      if (!iso.is_surjective() || !iso.is_injective()) {
        throw InvariantViolation("induced map of quotients is not bijective");
      }
    } catch (DomainError const& e) {
      throw InvariantViolation(std::string("induced map of quotients: ") + e.what());
    }
    return report;
  }

}  // namespace syncon
