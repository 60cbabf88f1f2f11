#include "cliquedyn/report.hpp"

#include <cstdio>
#include <unordered_map>

#include "cliquedyn/cliques.hpp"
#include "cliquedyn/graph6.hpp"

namespace cliquedyn {

Analysis analyze(const Graph& g, const BehaviorLimits& limits) {
  Analysis a;
  a.graph6 = to_graph6(g);
  a.order = g.order();
  a.edges = g.edge_count();
  a.degrees = g.degrees();
  try {
    a.clique_count = maximal_cliques(g, limits.max_cliques).size();
  } catch (const CliqueLimitExceeded&) {
  }
  a.helly = is_helly(g);
  a.behavior = classify_behavior(g, limits);
  return a;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const HellyVerdict& v) {
  Json j;
  j["is_helly"] = v.is_helly;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const DivergenceCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["parameter"] = c.parameter;
  if (c.kind == CertificateKind::Octahedron || c.kind == CertificateKind::CycleComplement) {
    j["isomorphism"] = c.isomorphism;
  } else {
    j["blocks"] = c.blocks;
    j["coaffinations"] = c.coaffinations;
  }
  return j;
}

Json to_json(const BehaviorResult& r) {
  Json j;
  j["status"] = r.status_name();
  if (const auto* c = std::get_if<Convergent>(&r.status)) {
    j["tail"] = c->tail;
    j["period"] = c->period;
  } else if (const auto* d = std::get_if<Divergent>(&r.status)) {
    j["detected_at"] = d->detected_at;
    j["certificate"] = to_json(d->certificate);
  } else {
    const auto& u = std::get<Unknown>(r.status);
    j["iterations_done"] = u.iterations_done;
    j["max_order_seen"] = u.max_order_seen;
    j["limit"] = to_string(u.limit);
  }
  Json trace = Json::array();
  for (const auto& it : r.trace) {
    Json t;
    t["order"] = it.order;
    t["edges"] = it.edges;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(it.invariant));
    t["invariant"] = buf;
    if (it.canonical) {
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*it.canonical));
      t["canonical"] = buf;
    } else {
      t["canonical"] = nullptr;
    }
    trace.push_back(std::move(t));
  }
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const BehaviorLimits& l) {
  Json j;
  j["max_iterations"] = l.max_iterations;
  j["max_vertices"] = l.max_vertices;
  j["max_cliques"] = l.max_cliques;
  return j;
}

Json to_json(const RegularGenSpec& s) {
  Json j;
  j["k"] = s.k;
  j["n"] = s.n;
  j["mode"] = s.mode == GenMode::Exhaustive ? "exhaustive" : "random";
  if (s.mode == GenMode::Random) {
    j["count"] = s.count;
    j["seed"] = s.seed;
  }
  j["connectivity"] = s.connectivity == Connectivity::Any ? "any" : "connected-only";
  return j;
}

Json to_json(const GraphRecord& r) {
  Json j;
  j["id"] = r.id;
  j["graph6"] = r.graph6;
  j["connected"] = r.connected;
  j["triangles"] = r.triangles;
  j["cotriangles"] = r.cotriangles;
  if (r.complement_helly) j["complement_helly"] = to_json(*r.complement_helly);
  if (r.complement_behavior) j["complement_behavior"] = to_json(*r.complement_behavior);
  if (r.lorden_ok) j["lorden_ok"] = *r.lorden_ok;
  if (const auto& v = r.vertex_caps) {
    Json c;
    c["cap"] = v->cap;
    c["max_count"] = v->max_count;
    c["over_cap"] = v->over_cap;
    c["at_cap"] = v->at_cap;
    c["at_cap_outside_kk"] = v->at_cap_outside_kk;
    c["kk_below_cap"] = v->kk_below_cap;
    j["vertex_caps"] = std::move(c);
  }
  if (const auto& cv = r.cover) {
    Json c;
    Json viol = Json::array();
    for (const auto& t : cv->violations) viol.push_back(to_json(t));
    c["violations"] = std::move(viol);
    c["incidences"] = cv->incidences;
    c["lower_ok"] = cv->lower_ok;
    c["upper_ok"] = cv->upper_ok ? Json(*cv->upper_ok) : Json(nullptr);
    j["cover"] = std::move(c);
  }
  return j;
}

Json to_json(const CensusReport& r) {
  Json j;
  j["spec"] = to_json(r.spec);
  Json checks = Json::array();
  for (Check c : r.checks) checks.push_back(to_string(c));
  j["checks"] = std::move(checks);
  j["limits"] = to_json(r.limits);
  j["totals"] = {{"graphs", r.graphs}, {"connected", r.connected}};
  Json counts = Json::object();
  for (const auto& [key, value] : r.counts) counts[key] = value;
  j["counts"] = std::move(counts);

  std::unordered_map<std::string, const GraphRecord*> by_graph6;
  for (const auto& rec : r.records) by_graph6.emplace(rec.graph6, &rec);
  Json exemplars = Json::object();
  for (const char* category : kExemplarCategories) {
    auto it = r.exemplars.find(category);
    if (it == r.exemplars.end()) continue;
    Json list = Json::array();
    for (const auto& g6 : it->second) {
      const GraphRecord& rec = *by_graph6.at(g6);
      Json e;
      e["graph6"] = g6;
      e["helly"] = rec.complement_helly ? Json(rec.complement_helly->is_helly) : Json(nullptr);
      e["behavior"] =
          rec.complement_behavior ? Json(rec.complement_behavior->status_name()) : Json(nullptr);
      e["counts"] = {{"triangles", rec.triangles}, {"cotriangles", rec.cotriangles}};
      list.push_back(std::move(e));
    }
    exemplars[category] = std::move(list);
  }
  j["exemplars"] = std::move(exemplars);
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  j["records"] = std::move(records);
  j["warnings"] = r.warnings;
  j["runtime"] = r.runtime_seconds ? Json(*r.runtime_seconds) : Json(nullptr);
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  Json spec;
  spec["k"] = r.spec.k;
  spec["n"] = r.spec.n;
  spec["target"] = to_string(r.spec.target);
  spec["mode"] = r.spec.mode == GenMode::Exhaustive ? "exhaustive" : "random";
  spec["connectivity"] = r.spec.connectivity == Connectivity::Any ? "any" : "connected-only";
  spec["budget"] = r.spec.budget;
  spec["seed"] = r.spec.seed;
  spec["max_hits"] = r.spec.max_hits;
  spec["limits"] = to_json(r.spec.limits);
  j["spec"] = std::move(spec);
  j["examined"] = r.examined;
  j["duplicates_skipped"] = r.duplicates_skipped;
  j["unknown"] = r.unknown;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json e;
    e["candidate"] = h.candidate;
    e["graph6"] = h.graph6;
    e["complement_helly"] = to_json(h.complement_helly);
    if (h.complement_behavior) e["complement_behavior"] = to_json(*h.complement_behavior);
    if (h.revalidated) e["revalidated"] = *h.revalidated;
    hits.push_back(std::move(e));
  }
  j["hits"] = std::move(hits);
  return j;
}

Json to_json(const BoundReport& b) {
  Json j;
  j["n"] = b.n;
  j["k"] = b.k;
  j["cnk"] = to_string(b.cnk);
  j["tnk"] = b.tnk ? Json(*b.tnk) : Json(nullptr);
  j["a"] = b.a;
  j["threshold"] = b.threshold;
  j["incidence_lo"] = to_string(b.incidence_lo);
  j["incidence_hi"] = b.incidence_hi ? Json(*b.incidence_hi) : Json(nullptr);
  j["contradiction"] = b.contradiction();
  return j;
}

Json to_json(const Analysis& a) {
  Json j;
  j["graph6"] = a.graph6;
  j["order"] = a.order;
  j["edges"] = a.edges;
  j["degrees"] = a.degrees;
  j["clique_count"] = a.clique_count ? Json(*a.clique_count) : Json(nullptr);
  j["helly"] = to_json(a.helly);
  j["behavior"] = to_json(a.behavior);
  return j;
}

}  // namespace cliquedyn
