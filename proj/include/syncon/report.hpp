#pragma once

// JSON and DOT renderings of results. Every top-level document carries
// "schema": 1.

#include <string>

#include <nlohmann/json.hpp>

#include "syncon/algebra.hpp"
#include "syncon/congruence.hpp"
#include "syncon/languages.hpp"
#include "syncon/partition.hpp"
#include "syncon/profinite.hpp"
#include "syncon/syntactic.hpp"
#include "syncon/transformation.hpp"

namespace syncon {

  using Json = nlohmann::ordered_json;

  inline constexpr int report_schema = 1;

  Json document(std::string const& verb);

  Json to_json(Subset const& subset);
  Json to_json(Partition const& partition);
  Json to_json(Transformation const& f);
  Json to_json(FiniteAlgebra const& algebra);
  Json to_json(SyntacticResult const& result);
  Json to_json(DeterminingSet const& set);
  Json to_json(DeterminationVerdict const& verdict);
  Json to_json(PullbackReport const& report);
  Json to_json(TransformationMonoid const& monoid);
  Json to_json(SystemDiagnostics const& diagnostics);
  Json to_json(Recognition const& recognition);
  Json to_json(ProfinitenessReport const& report);
  Json to_json(Dfa const& dfa);
  Json to_json(SyntacticMonoid const& monoid);
  Json to_json(SeparationReport const& report);
  Json to_json(MaxPlusReport const& report);

  // Graphviz digraph of the projection of an algebra onto its quotient.
  std::string quotient_dot(FiniteAlgebra const& algebra, Quotient const& q);

}  // namespace syncon
