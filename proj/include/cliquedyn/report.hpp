#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cliquedyn/behavior.hpp"
#include "cliquedyn/bounds.hpp"
#include "cliquedyn/census.hpp"
#include "cliquedyn/helly.hpp"

namespace cliquedyn {

using Json = nlohmann::ordered_json;

/// Everything reported about a single graph.
struct Analysis {
  std::string graph6;
  std::size_t order = 0;
  std::size_t edges = 0;
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> clique_count;  // empty if the clique cap tripped
  HellyVerdict helly;
  BehaviorResult behavior;
};

Analysis analyze(const Graph& g, const BehaviorLimits& limits = {});

Json to_json(const VertexSet& s);
Json to_json(const HellyVerdict& v);
Json to_json(const DivergenceCertificate& c);
Json to_json(const BehaviorResult& r);
Json to_json(const BehaviorLimits& l);
Json to_json(const RegularGenSpec& s);
Json to_json(const GraphRecord& r);
Json to_json(const CensusReport& r);
Json to_json(const SearchReport& r);
Json to_json(const BoundReport& b);
Json to_json(const Analysis& a);

std::string to_string(const Rational& r);

}  // namespace cliquedyn
