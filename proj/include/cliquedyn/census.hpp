#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cliquedyn/behavior.hpp"
#include "cliquedyn/helly.hpp"
#include "cliquedyn/regular.hpp"

namespace cliquedyn {

enum class Check { Helly, Behavior, Lorden, VertexCap, CotriangleCover };

std::string to_string(Check c);
/// Accepts "helly", "behavior", "lorden", "vertex-cap", "cover".
std::optional<Check> parse_check(std::string_view name);
const std::set<Check>& all_checks();

/// Per-vertex independent-triple counts against the cap T(n,k).
struct VertexCapSummary {
  std::int64_t cap = 0;
  std::uint64_t max_count = 0;
  std::size_t over_cap = 0;            // vertices with count > cap
  std::size_t at_cap = 0;              // vertices with count == cap
  std::size_t at_cap_outside_kk = 0;   // equality without a K_{k,k} component
  std::size_t kk_below_cap = 0;        // K_{k,k} component vertex short of the cap
  bool ok() const { return over_cap == 0 && at_cap_outside_kk == 0 && kk_below_cap == 0; }
};

/// Independent triples with fewer than k adjacent vertices, plus the
/// incidence count bracketed by k * (#triples) and n * T(n,k).
struct CoverSummary {
  std::vector<VertexSet> violations;
  std::uint64_t incidences = 0;
  bool lower_ok = true;
  std::optional<bool> upper_ok;  // only when n >= 4k
};

struct GraphRecord {
  std::size_t id = 0;
  std::string graph6;
  bool connected = false;
  std::uint64_t triangles = 0;
  std::uint64_t cotriangles = 0;
  std::optional<HellyVerdict> complement_helly;
  std::optional<BehaviorResult> complement_behavior;
  std::optional<bool> lorden_ok;
  std::optional<VertexCapSummary> vertex_caps;
  std::optional<CoverSummary> cover;
};

/// Exemplar categories, in report order.
inline constexpr const char* kExemplarCategories[] = {
    "helly-complement",       "convergent-nonhelly-complement",
    "divergent-complement",   "unknown-behavior",
    "helly-but-divergent",    "lorden-failure",
    "vertex-cap-failure",     "cover-failure",
};

struct CensusReport {
  RegularGenSpec spec;
  std::set<Check> checks;
  BehaviorLimits limits;
  std::size_t graphs = 0;
  std::size_t connected = 0;
  std::map<std::string, std::size_t> counts;
  std::map<std::string, std::vector<std::string>> exemplars;
  std::vector<GraphRecord> records;
  std::vector<std::string> warnings;
  /// Wall time; left empty unless requested so reports stay byte-stable.
  std::optional<double> runtime_seconds;

  std::size_t count(const std::string& key) const;
  bool any_unknown() const { return count("behavior.unknown") > 0; }
};

struct CensusOptions {
  std::size_t jobs = 1;
  std::optional<std::size_t> ceiling;
  bool record_runtime = false;
};

/// Evaluates the requested checks on one k-regular graph.
GraphRecord census_record(const Graph& g, std::size_t id, const std::set<Check>& checks,
                          const BehaviorLimits& limits);

/// Generates the graphs of `spec` and checks them on a worker pool. Records
/// come back sorted by graph6 (then id) regardless of the worker count.
CensusReport run_census(const RegularGenSpec& spec, const std::set<Check>& checks,
                        const BehaviorLimits& limits = {}, const CensusOptions& options = {});

enum class SearchTarget { ConvergentNonHellyComplement, HellyComplement, DivergentComplement };

std::string to_string(SearchTarget t);
std::optional<SearchTarget> parse_search_target(std::string_view name);

struct SearchSpec {
  std::size_t k = 3;
  std::size_t n = 14;
  SearchTarget target = SearchTarget::ConvergentNonHellyComplement;
  GenMode mode = GenMode::Exhaustive;
  Connectivity connectivity = Connectivity::Any;
  /// Maximum number of candidates examined (random mode draws this many samples).
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  /// Stop after this many hits; 0 means no limit.
  std::size_t max_hits = 0;
  BehaviorLimits limits;
  std::optional<std::size_t> ceiling;
};

struct SearchHit {
  std::size_t candidate = 0;  // index in candidate order
  std::string graph6;
  HellyVerdict complement_helly;
  std::optional<BehaviorResult> complement_behavior;
  /// Convergence recomputed from scratch (convergent target only).
  std::optional<bool> revalidated;
};

struct SearchReport {
  SearchSpec spec;
  std::size_t examined = 0;
  std::size_t duplicates_skipped = 0;
  std::size_t unknown = 0;
  std::vector<SearchHit> hits;
};

/// Streams candidates through the target predicate. Random candidates are
/// deduplicated by canonical form. With max_hits set, the result is the first
/// max_hits hits in candidate order, independent of the worker count.
SearchReport search(const SearchSpec& spec, std::size_t jobs = 1);

}  // namespace cliquedyn
