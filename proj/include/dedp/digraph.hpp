#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace dedp {

using VertexId = int;
using Path = std::vector<VertexId>;  // simple directed path, never empty
using Walk = std::vector<VertexId>;  // like Path but repetitions allowed
using VertexSet = std::set<VertexId>;

/// Simple digraph over 1-based vertex ids. No self-loops, no parallel edges;
/// a 2-cycle (u,v),(v,u) is fine. Vertices can be removed and the ids of the
/// survivors stay stable, which is what lets reduced graphs map back to the
/// graphs they came from.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_list);

  int universe() const { return static_cast<int>(present_.size()) - 1; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  VertexId add_vertex();  // fresh id = universe() + 1
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  std::vector<VertexId> vertices() const;  // ascending
  const std::vector<VertexId>& out_neighbors(VertexId v) const;  // ascending
  const std::vector<VertexId>& in_neighbors(VertexId v) const;   // ascending
  std::vector<std::pair<VertexId, VertexId>> edges() const;      // lexicographic

  /// Same present vertices and same edge set (universes may differ).
  bool operator==(const Digraph& other) const;

private:
  void require_vertex(VertexId v) const;

  std::vector<char> present_;  // index 0 unused
  std::vector<std::vector<VertexId>> out_, in_;  // kept sorted
  int vertex_count_ = 0;
  int edge_count_ = 0;
};

bool reachable(const Digraph& g, VertexId u, VertexId v);

/// Reachability in g - avoid. Returns false when u or v is in `avoid`.
bool reachable_avoiding(const Digraph& g, VertexId u, VertexId v, const VertexSet& avoid);

/// Separator test per the usual definition; u and v must lie outside X.
bool is_separator(const Digraph& g, const VertexSet& X, VertexId u, VertexId v);

struct DisjointPaths {
  int count = 0;
  std::vector<Path> paths;
};

/// Maximum number of pairwise internally vertex-disjoint u->v paths, with
/// witnesses, via unit-capacity max-flow on the vertex-split graph.
/// Requires u != v and (u,v) not an edge.
DisjointPaths max_vertex_disjoint_paths(const Digraph& g, VertexId u, VertexId v);

/// A u->v path with the fewest vertices outside `terminals`; ties broken by
/// fewer total vertices, then lexicographically smallest vertex sequence.
std::optional<Path> min_nonterminal_path(const Digraph& g, VertexId u, VertexId v,
                                         const VertexSet& terminals);

/// Fewest vertices, lexicographic tie-break.
std::optional<Path> shortest_path(const Digraph& g, VertexId u, VertexId v);
std::optional<Path> shortest_path_avoiding(const Digraph& g, VertexId u, VertexId v,
                                           const VertexSet& forbidden);

/// Weak components of (the induced subgraph of) g, each sorted ascending,
/// listed by smallest member.
std::vector<std::vector<VertexId>> weak_components(const Digraph& g);
std::vector<std::vector<VertexId>> weak_components(const Digraph& g, const VertexSet& restrict_to);

bool is_walk(const Digraph& g, const Walk& w);
bool is_path(const Digraph& g, const Path& p);

/// Excise cycles from a walk until it is a simple path with the same
/// endpoints; the result's vertex set is a subset of the walk's.
Path shorten_walk(const Digraph& g, const Walk& w);

}  // namespace dedp
