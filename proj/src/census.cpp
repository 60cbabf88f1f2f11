#include "cliquedyn/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "cliquedyn/bounds.hpp"
#include "cliquedyn/canonical.hpp"
#include "cliquedyn/errors.hpp"
#include "cliquedyn/graph6.hpp"

namespace cliquedyn {

std::string to_string(Check c) {
  switch (c) {
    case Check::Helly: return "helly";
    case Check::Behavior: return "behavior";
    case Check::Lorden: return "lorden";
    case Check::VertexCap: return "vertex-cap";
    case Check::CotriangleCover: return "cover";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : all_checks())
    if (to_string(c) == name) return c;
  return std::nullopt;
}

const std::set<Check>& all_checks() {
  static const std::set<Check> all{Check::Helly, Check::Behavior, Check::Lorden,
                                   Check::VertexCap, Check::CotriangleCover};
  return all;
}

std::string to_string(SearchTarget t) {
  switch (t) {
    case SearchTarget::ConvergentNonHellyComplement: return "convergent-nonhelly-complement";
    case SearchTarget::HellyComplement: return "helly-complement";
    case SearchTarget::DivergentComplement: return "divergent-complement";
  }
  return "?";
}

std::optional<SearchTarget> parse_search_target(std::string_view name) {
  for (auto t : {SearchTarget::ConvergentNonHellyComplement, SearchTarget::HellyComplement,
                 SearchTarget::DivergentComplement})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::size_t CensusReport::count(const std::string& key) const {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any worker is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

VertexCapSummary summarize_caps(const Graph& g) {
  VertexCapSummary s;
  for (const auto& c : check_vertex_caps(g)) {
    s.cap = c.cap;
    s.max_count = std::max(s.max_count, c.count);
    if (!c.within()) ++s.over_cap;
    if (c.attains()) {
      ++s.at_cap;
      if (!c.component_is_kk) ++s.at_cap_outside_kk;
    } else if (c.component_is_kk) {
      ++s.kk_below_cap;
    }
  }
  return s;
}

CoverSummary summarize_cover(const Graph& g, std::size_t k, std::uint64_t cotriangles) {
  CoverSummary s;
  s.violations = check_cotriangle_cover(g, k);
  s.incidences = count_cotriangle_incidences(g);
  s.lower_ok = k * cotriangles <= s.incidences;
  const auto n = static_cast<std::int64_t>(g.order());
  const auto kk = static_cast<std::int64_t>(k);
  if (n >= 4 * kk)
    s.upper_ok = static_cast<std::int64_t>(s.incidences) <= n * tnk_upper_bound(n, kk);
  return s;
}

bool cover_failed(const GraphRecord& r) {
  if (!r.cover || !r.complement_helly || !r.complement_helly->is_helly) return false;
  return !r.cover->violations.empty() || !r.cover->lower_ok || r.cover->upper_ok == false;
}

}  // namespace

GraphRecord census_record(const Graph& g, std::size_t id, const std::set<Check>& checks,
                          const BehaviorLimits& limits) {
  const auto k = g.regular_degree();
  if (!k) throw DomainError("census_record: graph is not regular");
  GraphRecord r;
  r.id = id;
  r.graph6 = to_graph6(g);
  r.connected = g.connected();
  r.triangles = triangle_count(g);
  r.cotriangles = cotriangle_count(g);
  const Graph comp = complement(g);
  if (checks.contains(Check::Helly) || checks.contains(Check::CotriangleCover))
    r.complement_helly = is_helly(comp);
  if (checks.contains(Check::Behavior)) r.complement_behavior = classify_behavior(comp, limits);
  if (checks.contains(Check::Lorden)) r.lorden_ok = verify_lorden(g);
  if (checks.contains(Check::VertexCap) && g.order() >= 4 * *k) r.vertex_caps = summarize_caps(g);
  if (checks.contains(Check::CotriangleCover)) r.cover = summarize_cover(g, *k, r.cotriangles);
  return r;
}

CensusReport run_census(const RegularGenSpec& spec, const std::set<Check>& checks,
                        const BehaviorLimits& limits, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport report;
  report.spec = spec;
  report.checks = checks;
  report.limits = limits;

  EnumerationOptions gen_options;
  gen_options.ceiling = options.ceiling;
  gen_options.warn = [&](const std::string& w) { report.warnings.push_back(w); };
  const std::vector<Graph> graphs = generate_regular(spec, gen_options);

  report.records.resize(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    report.records[i] = census_record(graphs[i], i, checks, limits);
  });
  std::sort(report.records.begin(), report.records.end(),
            [](const GraphRecord& a, const GraphRecord& b) {
              return std::tie(a.graph6, a.id) < std::tie(b.graph6, b.id);
            });

  const bool helly = checks.contains(Check::Helly) || checks.contains(Check::CotriangleCover);
  const bool behavior = checks.contains(Check::Behavior);
  auto& ex = report.exemplars;
  if (helly) ex["helly-complement"];
  if (helly && behavior) {
    ex["convergent-nonhelly-complement"];
    ex["helly-but-divergent"];
  }
  if (behavior) {
    ex["divergent-complement"];
    ex["unknown-behavior"];
  }
  if (checks.contains(Check::Lorden)) ex["lorden-failure"];
  if (checks.contains(Check::VertexCap)) ex["vertex-cap-failure"];
  if (checks.contains(Check::CotriangleCover)) ex["cover-failure"];

  auto& c = report.counts;
  report.graphs = report.records.size();
  for (const GraphRecord& r : report.records) {
    if (r.connected) ++report.connected;
    if (r.complement_helly) {
      if (r.complement_helly->is_helly) {
        ++c["helly.complement-helly"];
        ex["helly-complement"].push_back(r.graph6);
      } else {
        ++c["helly.complement-nonhelly"];
      }
    }
    if (const auto& b = r.complement_behavior) {
      if (b->convergent()) {
        ++c["behavior.convergent"];
        if (r.complement_helly && !r.complement_helly->is_helly)
          ex["convergent-nonhelly-complement"].push_back(r.graph6);
      } else if (b->divergent()) {
        ++c["behavior.divergent"];
        ++c["behavior.divergent." + to_string(std::get<Divergent>(b->status).certificate.kind)];
        ex["divergent-complement"].push_back(r.graph6);
        if (r.complement_helly && r.complement_helly->is_helly)
          ex["helly-but-divergent"].push_back(r.graph6);
      } else {
        ++c["behavior.unknown"];
        ++c["behavior.unknown." + to_string(std::get<Unknown>(b->status).limit)];
        ex["unknown-behavior"].push_back(r.graph6);
      }
    }
    if (r.lorden_ok) {
      ++c[*r.lorden_ok ? "lorden.ok" : "lorden.fail"];
      if (!*r.lorden_ok) ex["lorden-failure"].push_back(r.graph6);
    }
    if (const auto& v = r.vertex_caps) {
      ++c["vertex-cap.checked"];
      if (v->at_cap > 0) ++c["vertex-cap.attained"];
      if (!v->ok()) {
        ++c["vertex-cap.fail"];
        ex["vertex-cap-failure"].push_back(r.graph6);
      }
    }
    if (r.cover) {
      ++c["cover.checked"];
      if (!r.cover->violations.empty()) ++c["cover.with-violations"];
      if (cover_failed(r)) {
        ++c["cover.fail"];
        ex["cover-failure"].push_back(r.graph6);
      }
    }
  }
  if (options.record_runtime)
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

struct Evaluation {
  std::optional<SearchHit> hit;
  bool unknown = false;
};

Evaluation evaluate_candidate(const Graph& g, const SearchSpec& spec) {
  Evaluation e;
  const Graph comp = complement(g);
  SearchHit hit;
  hit.graph6 = to_graph6(g);
  hit.complement_helly = is_helly(comp);
  switch (spec.target) {
    case SearchTarget::HellyComplement:
      if (hit.complement_helly.is_helly) e.hit = std::move(hit);
      return e;
    case SearchTarget::ConvergentNonHellyComplement: {
      if (hit.complement_helly.is_helly) return e;
      BehaviorResult b = classify_behavior(comp, spec.limits);
      e.unknown = b.unknown();
      if (!b.convergent()) return e;
      hit.revalidated =
          verify_convergence(comp, std::get<Convergent>(b.status), spec.limits.max_cliques);
      hit.complement_behavior = std::move(b);
      e.hit = std::move(hit);
      return e;
    }
    case SearchTarget::DivergentComplement: {
      BehaviorResult b = classify_behavior(comp, spec.limits);
      e.unknown = b.unknown();
      if (!b.divergent()) return e;
      hit.complement_behavior = std::move(b);
      e.hit = std::move(hit);
      return e;
    }
  }
  return e;
}

}  // namespace

SearchReport search(const SearchSpec& spec, std::size_t jobs) {
  SearchReport report;
  report.spec = spec;

  std::vector<Graph> candidates;
  RegularGenSpec gen{spec.k, spec.n, spec.mode, 0, spec.seed, spec.connectivity};
  EnumerationOptions gen_options;
  gen_options.ceiling = spec.ceiling;
  if (spec.mode == GenMode::Exhaustive) {
    candidates = enumerate_regular(gen, gen_options);
    if (candidates.size() > spec.budget) candidates.resize(spec.budget);
  } else if (gen.satisfiable()) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < spec.budget; ++i) {
      Graph g = random_regular(spec.k, spec.n, spec.seed + i);
      if (spec.connectivity == Connectivity::ConnectedOnly && !g.connected()) continue;
      if (!seen.insert(canonical_form(g).bytes).second) {
        ++report.duplicates_skipped;
        continue;
      }
      candidates.push_back(std::move(g));
    }
  }

  const std::size_t chunk = std::max<std::size_t>(1, jobs) * 4;
  std::vector<Evaluation> results;
  for (std::size_t begin = 0; begin < candidates.size(); begin += chunk) {
    const std::size_t end = std::min(candidates.size(), begin + chunk);
    results.assign(end - begin, {});
    parallel_for(end - begin, jobs, [&](std::size_t i) {
      results[i] = evaluate_candidate(candidates[begin + i], spec);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      report.examined = begin + i + 1;
      if (results[i].unknown) ++report.unknown;
      if (results[i].hit) {
        results[i].hit->candidate = begin + i;
        report.hits.push_back(std::move(*results[i].hit));
        if (spec.max_hits && report.hits.size() == spec.max_hits) return report;
      }
    }
  }
  return report;
}

}  // namespace cliquedyn
