#pragma once

#include <map>
#include <utility>

#include "dedp/digraph.hpp"
#include "dedp/instance.hpp"

namespace dedp {

/// Provenance for bypass operations: maps each shortcut edge of the reduced
/// graph to the sequence of bypassed vertices it contracts, so paths found in
/// the reduced graph can be lifted back to the original one. Edges of the
/// reduced graph absent from `expansions` are original edges.
struct BypassTrace {
  Digraph original;
  VertexSet terminals;  // expansion ties prefer fewer vertices outside this set
  std::vector<VertexId> bypassed;
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> expansions;

  bool was_bypassed(VertexId v) const;
};

BypassTrace make_trace(const Digraph& original, VertexSet terminals = {});

/// Delete v; add a shortcut from every in-neighbor to every out-neighbor,
/// suppressing self-loops and merging duplicates. `trace` must describe g.
std::pair<Digraph, BypassTrace> bypass(const Digraph& g, VertexId v, const BypassTrace& trace);
std::pair<Digraph, BypassTrace> bypass(const Digraph& g, VertexId v);

/// Bypass every vertex of B; the result does not depend on the order, the
/// canonical order used here is ascending id.
std::pair<Digraph, BypassTrace> bypass_set(const Digraph& g, const VertexSet& B,
                                           VertexSet terminals = {});

/// Expand every shortcut edge of p and shorten the resulting walk; the output
/// is a simple path of the trace's original digraph with the same endpoints.
Path lift_path(const BypassTrace& trace, const Path& p);

/// Indices of the request copies (s,t) with no s->t path in g - X. A request
/// whose own endpoint lies in X counts as blocked.
std::vector<int> blocked_requests(const Digraph& g, const RequestSet& requests, const VertexSet& X);

/// Non-terminal vertices whose removal disconnects at least s+1 requests.
VertexSet blocking_vertices(const Digraph& g, const RequestSet& requests, int s);

/// Bypass all blocking vertices; the result is a clean equivalent instance.
std::pair<Instance, BypassTrace> clean(const Instance& inst);

std::string write_trace(const BypassTrace& trace);

}  // namespace dedp
