#include "syncon/report.hpp"

#include <sstream>

namespace syncon {

  Json document(std::string const& verb) {
    Json j;
    j["schema"] = report_schema;
    j["verb"]   = verb;
    return j;
  }

  Json to_json(Subset const& subset) {
    return Json(subset.members());
  }

  Json to_json(Partition const& partition) {
    return Json(partition.classes());
  }

  namespace {

    Json provenance_json(Provenance const& p) {
      return std::visit(
          [](auto const& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              return nullptr;
            } else if constexpr (std::is_same_v<T, ElementaryProvenance>) {
              return {{"kind", "elementary"},
                      {"symbol", v.symbol_name},
                      {"coordinate", v.coordinate},
                      {"arguments", v.arguments}};
            } else if constexpr (std::is_same_v<T, CompositeProvenance>) {
              return {{"kind", "composite"}, {"generators", v.generators}};
            } else {
              Json assignment = Json::object();
              for (auto const& [name, value] : v.assignment) {
                assignment[name] = value;
              }
              return {{"kind", "term"},
                      {"term", v.term.to_string()},
                      {"variable", v.variable},
                      {"assignment", assignment}};
            }
          },
          p);
    }

  }  // namespace

  Json to_json(Transformation const& f) {
    Json j;
    j["image"] = f.image();
    auto prov  = provenance_json(f.provenance());
    if (!prov.is_null()) {
      j["provenance"] = prov;
    }
    return j;
  }

  Json to_json(FiniteAlgebra const& algebra) {
    Json j;
    j["name"]    = algebra.name();
    j["carrier"] = algebra.size();
    Json ops     = Json::array();
    auto const& sig = algebra.signature();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      ops.push_back({{"symbol", sig[s].name}, {"arity", sig[s].arity}, {"table", algebra.table(s)}});
    }
    j["operations"] = ops;
    return j;
  }

  Json to_json(SyntacticResult const& result) {
    Json j;
    j["classes"]       = to_json(result.congruence.partition());
    j["index"]         = result.congruence.num_classes();
    j["eta"]           = result.eta.image();
    j["quotient"]      = to_json(result.quotient);
    j["monoid_size"]   = result.monoid_size;
    return j;
  }

  Json to_json(DeterminingSet const& set) {
    Json j;
    j["kind"] = set.kind == DeterminingSet::Kind::self_maps ? "self_maps" : "linear_terms";
    Json fs   = Json::array();
    for (auto const& f : set.functions) {
      fs.push_back(to_json(f));
    }
    j["functions"] = fs;
    if (!set.terms.empty()) {
      Json ts = Json::array();
      for (auto const& t : set.terms) {
        ts.push_back(t.to_string());
      }
      j["terms"] = ts;
    }
    return j;
  }

  Json to_json(DeterminationVerdict const& verdict) {
    Json j;
    j["determined"] = verdict.determined;
    j["induced"]    = to_json(verdict.induced);
    j["syntactic"]  = to_json(verdict.syntactic);
    if (verdict.witness) {
      j["witness"]    = {verdict.witness->first, verdict.witness->second};
      j["in_induced"] = verdict.in_induced;
    }
    return j;
  }

  Json to_json(PullbackReport const& report) {
    Json j;
    j["target_syntactic"] = to_json(report.target_syntactic);
    j["pulled_back"]      = to_json(report.pulled_back);
    j["source_syntactic"] = to_json(report.source_syntactic);
    j["preimage"]         = to_json(report.preimage);
    j["induced_map"]      = report.induced_map;
    j["equal"]            = report.pulled_back == report.source_syntactic;
    return j;
  }

  Json to_json(TransformationMonoid const& monoid) {
    Json j;
    j["degree"] = monoid.degree();
    j["size"]   = monoid.size();
    Json gens   = Json::array();
    for (auto const& g : monoid.generators()) {
      gens.push_back(to_json(g));
    }
    j["generators"] = gens;
    Json elems      = Json::array();
    for (auto const& f : monoid.elements()) {
      elems.push_back(to_json(f));
    }
    j["elements"] = elems;
    return j;
  }

  Json to_json(SystemDiagnostics const& diagnostics) {
    Json j;
    j["valid"] = diagnostics.valid;
    if (diagnostics.failing_level) {
      j["failing_level"] = *diagnostics.failing_level;
    }
    if (!diagnostics.message.empty()) {
      j["message"] = diagnostics.message;
    }
    return j;
  }

  Json to_json(Recognition const& recognition) {
    Json j;
    j["level"]  = recognition.level;
    j["target"] = to_json(recognition.target);
    j["image"]  = to_json(recognition.image);
    Json maps   = Json::array();
    for (std::size_t i = 0; i < recognition.maps.size(); ++i) {
      maps.push_back({{"level", recognition.level + i}, {"map", recognition.maps[i]}});
    }
    j["maps"] = maps;
    return j;
  }

  Json to_json(ProfinitenessReport const& report) {
    Json j;
    j["syntactic"]  = to_json(report.syntactic);
    j["image"]      = to_json(report.image);
    j["recognizes"] = report.recognizes;
    Json terms      = Json::array();
    for (auto const& t : report.terms) {
      terms.push_back(t.to_string());
    }
    j["terms"]            = terms;
    j["semigroup_terms"]  = report.semigroup_terms;
    j["term_verdict"]     = to_json(report.term_verdict);
    j["lifted"]           = to_json(report.lifted);
    j["lifted_verdict"]   = to_json(report.lifted_verdict);
    j["lifted_in_monoid"] = report.lifted_in_monoid;
    Json conds            = Json::array();
    for (auto const& c : report.conditions) {
      conds.push_back({{"number", c.number},
                       {"summary", c.summary},
                       {"status", std::string(to_string(c.status))},
                       {"note", c.note}});
    }
    j["conditions"] = conds;
    j["all_hold"]   = report.all_hold();
    return j;
  }

  Json to_json(Dfa const& dfa) {
    Json j;
    j["name"]        = dfa.name;
    j["alphabet"]    = dfa.alphabet;
    j["states"]      = dfa.states;
    j["initial"]     = dfa.initial;
    Json acc         = Json::array();
    for (std::size_t q = 0; q < dfa.states; ++q) {
      if (dfa.accepting[q]) {
        acc.push_back(q);
      }
    }
    j["accepting"]   = acc;
    j["transitions"] = dfa.transitions;
    return j;
  }

  Json to_json(SyntacticMonoid const& monoid) {
    Json j;
    j["minimal_dfa"]     = to_json(monoid.minimal);
    j["size"]            = monoid.algebra.size();
    j["letter_elements"] = monoid.transitions.letter_elements;
    Json elems           = Json::array();
    for (auto const& f : monoid.transitions.monoid.elements()) {
      elems.push_back(f.image());
    }
    j["elements"] = elems;
    j["table"]    = monoid.algebra.table(0);
    j["accepted"] = to_json(monoid.accepted);
    return j;
  }

  Json to_json(SeparationReport const& report) {
    Json j;
    j["bound"]         = report.bound;
    j["xmax"]          = report.xmax;
    j["set"]           = report.set == SparseSet::powers_of_two ? "powers_of_two" : "primes";
    j["pairs"]         = report.pairs;
    j["separated"]     = report.separated;
    j["all_separated"] = report.all_separated();
    if (report.first_failure) {
      j["first_failure"] = {report.first_failure->first, report.first_failure->second};
    }
    j["determining_lower_bound"] = report.determining_lower_bound;
    Json ws                      = Json::array();
    for (auto const& w : report.witnesses) {
      ws.push_back({w.m, w.n, w.x});
    }
    j["witnesses"] = ws;
    return j;
  }

  Json to_json(MaxPlusReport const& report) {
    Json j;
    j["bound"]               = report.bound;
    j["mixed_pairs"]         = report.mixed_pairs;
    j["mixed_separated"]     = report.mixed_separated;
    j["mixed_out_of_window"] = report.mixed_out_of_window;
    j["infinite_pairs"]      = report.infinite_pairs;
    j["contexts"]            = report.contexts;
    j["infinite_separated"]  = report.infinite_separated;
    j["overflow_skipped"]    = report.overflow_skipped;
    if (report.sample) {
      j["sample"] = {report.sample->first.to_string(), report.sample->second.to_string()};
    }
    return j;
  }

  std::string quotient_dot(FiniteAlgebra const& algebra, Quotient const& q) {
    std::ostringstream os;
    os << "digraph quotient {\n  rankdir=LR;\n";
    os << "  subgraph cluster_source {\n    label=\"" << algebra.name() << "\";\n";
    for (std::size_t a = 0; a < algebra.size(); ++a) {
      os << "    a" << a << " [label=\"" << a << "\"];\n";
    }
    os << "  }\n  subgraph cluster_target {\n    label=\"" << q.algebra.name() << "\";\n";
    for (std::size_t c = 0; c < q.algebra.size(); ++c) {
      os << "    q" << c << " [label=\"[" << c << "]\"];\n";
    }
    os << "  }\n";
    for (std::size_t a = 0; a < algebra.size(); ++a) {
      os << "  a" << a << " -> q" << q.projection(static_cast<Element>(a)) << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace syncon
