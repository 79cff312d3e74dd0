#include "dedp/transform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dedp {

bool BypassTrace::was_bypassed(VertexId v) const {
  return std::find(bypassed.begin(), bypassed.end(), v) != bypassed.end();
}

BypassTrace make_trace(const Digraph& original, VertexSet terminals) {
  return BypassTrace{original, std::move(terminals), {}, {}};
}

namespace {

int nonterminal_count(const std::vector<VertexId>& seq, const VertexSet& terminals) {
  int c = 0;
  for (VertexId v : seq)
    if (!terminals.count(v)) ++c;
  return c;
}

// Fewest non-terminals, then shortest, then lexicographically smallest.
bool expansion_better(const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                      const VertexSet& terminals) {
  int na = nonterminal_count(a, terminals), nb = nonterminal_count(b, terminals);
  if (na != nb) return na < nb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void bypass_in_place(Digraph& g, BypassTrace& trace, VertexId v) {
  std::vector<VertexId> ins(g.in_neighbors(v).begin(), g.in_neighbors(v).end());
  std::vector<VertexId> outs(g.out_neighbors(v).begin(), g.out_neighbors(v).end());

  std::map<VertexId, std::vector<VertexId>> exp_in, exp_out;
  for (VertexId u : ins) {
    auto it = trace.expansions.find({u, v});
    if (it != trace.expansions.end()) exp_in[u] = it->second;
  }
  for (VertexId w : outs) {
    auto it = trace.expansions.find({v, w});
    if (it != trace.expansions.end()) exp_out[w] = it->second;
  }
  for (VertexId u : ins) trace.expansions.erase({u, v});
  for (VertexId w : outs) trace.expansions.erase({v, w});

  g.remove_vertex(v);
  for (VertexId u : ins) {
    for (VertexId w : outs) {
      if (u == w) continue;  // suppress self-loops
      std::vector<VertexId> cand;
      if (auto it = exp_in.find(u); it != exp_in.end())
        cand.insert(cand.end(), it->second.begin(), it->second.end());
      cand.push_back(v);
      if (auto it = exp_out.find(w); it != exp_out.end())
        cand.insert(cand.end(), it->second.begin(), it->second.end());

      if (!g.has_edge(u, w)) {
        g.add_edge(u, w);
        trace.expansions[{u, w}] = std::move(cand);
      } else if (auto it = trace.expansions.find({u, w}); it != trace.expansions.end()) {
        if (expansion_better(cand, it->second, trace.terminals)) it->second = std::move(cand);
      }
      // else: a surviving original edge realizes (u,w) with no intermediates,
      // which no expansion can beat.
    }
  }
  trace.bypassed.push_back(v);
}

}  // namespace

std::pair<Digraph, BypassTrace> bypass(const Digraph& g, VertexId v, const BypassTrace& trace) {
  if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  Digraph out = g;
  BypassTrace t = trace;
  bypass_in_place(out, t, v);
  return {std::move(out), std::move(t)};
}

std::pair<Digraph, BypassTrace> bypass(const Digraph& g, VertexId v) {
  return bypass(g, v, make_trace(g));
}

std::pair<Digraph, BypassTrace> bypass_set(const Digraph& g, const VertexSet& B,
                                           VertexSet terminals) {
  for (VertexId v : B)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  Digraph out = g;
  BypassTrace t = make_trace(g, std::move(terminals));
  for (VertexId v : B) bypass_in_place(out, t, v);
  return {std::move(out), std::move(t)};
}

Path lift_path(const BypassTrace& trace, const Path& p) {
  if (p.empty()) throw std::invalid_argument("cannot lift an empty path");
  VertexSet gone(trace.bypassed.begin(), trace.bypassed.end());
  for (VertexId v : p)
    if (!trace.original.has_vertex(v) || gone.count(v))
      throw std::invalid_argument("path vertex " + std::to_string(v) + " unknown to the trace");

  Walk walk{p.front()};
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    VertexId a = p[i], b = p[i + 1];
    auto it = trace.expansions.find({a, b});
    if (it != trace.expansions.end()) {
      walk.insert(walk.end(), it->second.begin(), it->second.end());
    } else if (!trace.original.has_edge(a, b)) {
      throw std::invalid_argument("path uses edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") unknown to the trace");
    }
    walk.push_back(b);
  }
  return shorten_walk(trace.original, walk);
}

std::vector<int> blocked_requests(const Digraph& g, const RequestSet& requests,
                                  const VertexSet& X) {
  for (VertexId v : X)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  std::vector<int> blocked;
  for (size_t i = 0; i < requests.size(); ++i)
    if (!reachable_avoiding(g, requests[i].source, requests[i].target, X))
      blocked.push_back(static_cast<int>(i));
  return blocked;
}

VertexSet blocking_vertices(const Digraph& g, const RequestSet& requests, int s) {
  VertexSet term = terminals(requests);
  VertexSet out;
  for (VertexId v : g.vertices()) {
    if (term.count(v)) continue;
    int cnt = 0;
    VertexSet single{v};
    for (const Request& r : requests) {
      if (!reachable_avoiding(g, r.source, r.target, single)) ++cnt;
      if (cnt >= s + 1) break;
    }
    if (cnt >= s + 1) out.insert(v);
  }
  return out;
}

std::pair<Instance, BypassTrace> clean(const Instance& inst) {
  VertexSet term = terminals(inst.requests);
  VertexSet all_blockers;
  // Bypassing never creates a blocking vertex, so a single pass suffices;
  // the loop is the guard in case that ever fails.
  for (int round = 0;; ++round) {
    Digraph cur =
        all_blockers.empty() ? inst.graph : bypass_set(inst.graph, all_blockers, term).first;
    VertexSet fresh = blocking_vertices(cur, inst.requests, inst.s);
    if (fresh.empty()) break;
    all_blockers.insert(fresh.begin(), fresh.end());
    if (round > inst.graph.vertex_count())
      throw std::logic_error("blocking-vertex elimination failed to converge");
  }
  auto [g, trace] = bypass_set(inst.graph, all_blockers, term);
  return {Instance{std::move(g), inst.requests, inst.d, inst.s}, std::move(trace)};
}

std::string write_trace(const BypassTrace& trace) {
  std::ostringstream out;
  out << "# bypassed:";
  for (VertexId v : trace.bypassed) out << ' ' << v;
  out << '\n';
  for (const auto& [edge, exp] : trace.expansions) {
    out << "e " << edge.first << ' ' << edge.second << " :";
    for (VertexId v : exp) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace dedp
