#include "dedp/digraph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>
#include <string>

namespace dedp {

namespace {

// Per-thread scratch buffers for the traversal primitives.
struct Scratch {
  std::vector<char> mark;
  std::vector<int> queue;
  std::vector<int> cost;
  std::vector<int> len;
  std::vector<char> avoid;
  std::vector<char> done;
};

Scratch& scratch_for(int universe) {
  thread_local Scratch s;
  if (static_cast<int>(s.mark.size()) < universe + 1) {
    s.mark.resize(universe + 1);
    s.cost.resize(universe + 1);
    s.len.resize(universe + 1);
    s.avoid.resize(universe + 1);
    s.done.resize(universe + 1);
  }
  return s;
}

}  // namespace

Digraph::Digraph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  present_.assign(n + 1, 1);
  present_[0] = 0;
  out_.assign(n + 1, {});
  in_.assign(n + 1, {});
  vertex_count_ = n;
}

Digraph::Digraph(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_list) : Digraph(n) {
  for (const auto& [u, v] : edge_list) add_edge(u, v);
}

void Digraph::require_vertex(VertexId v) const {
  if (v <= 0 || v >= static_cast<int>(present_.size()) || !present_[v])
    throw std::out_of_range("vertex id out of range: " + std::to_string(v));
}

bool Digraph::has_vertex(VertexId v) const {
  return v > 0 && v < static_cast<int>(present_.size()) && present_[v];
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

VertexId Digraph::add_vertex() {
  present_.push_back(1);
  out_.emplace_back();
  in_.emplace_back();
  ++vertex_count_;
  return universe();
}

namespace {

bool sorted_insert(std::vector<VertexId>& vec, VertexId v) {
  auto it = std::lower_bound(vec.begin(), vec.end(), v);
  if (it != vec.end() && *it == v) return false;
  vec.insert(it, v);
  return true;
}

bool sorted_erase(std::vector<VertexId>& vec, VertexId v) {
  auto it = std::lower_bound(vec.begin(), vec.end(), v);
  if (it == vec.end() || *it != v) return false;
  vec.erase(it);
  return true;
}

}  // namespace

void Digraph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (sorted_insert(out_[u], v)) {
    sorted_insert(in_[v], u);
    ++edge_count_;
  }
}

void Digraph::remove_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (sorted_erase(out_[u], v)) {
    sorted_erase(in_[v], u);
    --edge_count_;
  }
}

void Digraph::remove_vertex(VertexId v) {
  require_vertex(v);
  for (VertexId w : out_[v]) {
    sorted_erase(in_[w], v);
    --edge_count_;
  }
  for (VertexId w : in_[v]) {
    sorted_erase(out_[w], v);
    --edge_count_;
  }
  out_[v].clear();
  in_[v].clear();
  present_[v] = 0;
  --vertex_count_;
}

std::vector<VertexId> Digraph::vertices() const {
  std::vector<VertexId> vs;
  vs.reserve(vertex_count_);
  for (int v = 1; v < static_cast<int>(present_.size()); ++v)
    if (present_[v]) vs.push_back(v);
  return vs;
}

const std::vector<VertexId>& Digraph::out_neighbors(VertexId v) const {
  require_vertex(v);
  return out_[v];
}

const std::vector<VertexId>& Digraph::in_neighbors(VertexId v) const {
  require_vertex(v);
  return in_[v];
}

std::vector<std::pair<VertexId, VertexId>> Digraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> es;
  es.reserve(edge_count_);
  for (int u = 1; u < static_cast<int>(present_.size()); ++u)
    if (present_[u])
      for (VertexId v : out_[u]) es.emplace_back(u, v);
  return es;  // ascending u, then ascending v: already lexicographic
}

bool Digraph::operator==(const Digraph& other) const {
  return vertices() == other.vertices() && edges() == other.edges();
}

namespace {

// BFS from u restricted to vertices where allowed(w) is true.
template <class Allowed>
bool bfs_reaches(const Digraph& g, VertexId u, VertexId v, Allowed allowed) {
  if (!allowed(u) || !allowed(v)) return false;
  if (u == v) return true;
  Scratch& s = scratch_for(g.universe());
  std::fill(s.mark.begin(), s.mark.end(), 0);
  s.queue.clear();
  s.queue.push_back(u);
  s.mark[u] = 1;
  for (size_t head = 0; head < s.queue.size(); ++head) {
    VertexId x = s.queue[head];
    for (VertexId w : g.out_neighbors(x)) {
      if (s.mark[w] || !allowed(w)) continue;
      if (w == v) return true;
      s.mark[w] = 1;
      s.queue.push_back(w);
    }
  }
  return false;
}

// Optimal path under the composite order (total 0/1 vertex weight, then
// number of vertices, then lexicographic vertex sequence). Phase one is a
// deque-based 0/1 relaxation computing the weight of the best x->v suffix,
// phase two a BFS over tight edges for the suffix lengths, phase three a
// greedy forward walk picking the smallest feasible next vertex.
template <class Allowed, class Weight>
std::optional<Path> best_path(const Digraph& g, VertexId u, VertexId v, Allowed allowed,
                              Weight weight) {
  if (!g.has_vertex(u)) throw std::out_of_range("vertex id out of range: " + std::to_string(u));
  if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  if (!allowed(u) || !allowed(v)) return std::nullopt;
  if (u == v) return Path{u};

  const int kInf = INT_MAX / 4;
  Scratch& s = scratch_for(g.universe());
  std::fill(s.cost.begin(), s.cost.end(), kInf);
  std::fill(s.len.begin(), s.len.end(), kInf);
  std::fill(s.done.begin(), s.done.end(), 0);

  std::deque<VertexId> dq;
  s.cost[v] = weight(v);
  dq.push_back(v);
  while (!dq.empty()) {
    VertexId x = dq.front();
    dq.pop_front();
    if (s.done[x]) continue;
    s.done[x] = 1;
    for (VertexId w : g.in_neighbors(x)) {
      if (!allowed(w)) continue;
      int cand = s.cost[x] + weight(w);
      if (cand < s.cost[w]) {
        s.cost[w] = cand;
        if (weight(w) == 0)
          dq.push_front(w);
        else
          dq.push_back(w);
      }
    }
  }
  if (s.cost[u] >= kInf) return std::nullopt;

  // Shortest suffix among weight-optimal ones: BFS over tight edges.
  s.queue.clear();
  s.queue.push_back(v);
  s.len[v] = 1;
  for (size_t head = 0; head < s.queue.size(); ++head) {
    VertexId x = s.queue[head];
    for (VertexId w : g.in_neighbors(x)) {
      if (!allowed(w) || s.len[w] < kInf) continue;
      if (s.cost[w] != s.cost[x] + weight(w)) continue;
      s.len[w] = s.len[x] + 1;
      s.queue.push_back(w);
    }
  }

  Path p{u};
  VertexId cur = u;
  int rc = s.cost[u] - weight(u);
  int rl = s.len[u] - 1;
  while (cur != v) {
    VertexId next = -1;
    for (VertexId w : g.out_neighbors(cur)) {
      if (allowed(w) && s.cost[w] == rc && s.len[w] == rl) {
        next = w;
        break;
      }
    }
    if (next < 0) throw std::logic_error("path reconstruction lost the optimum");
    p.push_back(next);
    rc -= weight(next);
    --rl;
    cur = next;
  }
  return p;
}

std::vector<char> avoid_mask(const Digraph& g, const VertexSet& avoid) {
  std::vector<char> mask(g.universe() + 1, 0);
  for (VertexId v : avoid)
    if (v > 0 && v <= g.universe()) mask[v] = 1;
  return mask;
}

}  // namespace

bool reachable(const Digraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u)) throw std::out_of_range("vertex id out of range: " + std::to_string(u));
  if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  return bfs_reaches(g, u, v, [](VertexId) { return true; });
}

bool reachable_avoiding(const Digraph& g, VertexId u, VertexId v, const VertexSet& avoid) {
  if (!g.has_vertex(u)) throw std::out_of_range("vertex id out of range: " + std::to_string(u));
  if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  if (avoid.empty()) return bfs_reaches(g, u, v, [](VertexId) { return true; });
  std::vector<char> mask = avoid_mask(g, avoid);
  return bfs_reaches(g, u, v, [&](VertexId w) { return !mask[w]; });
}

bool is_separator(const Digraph& g, const VertexSet& X, VertexId u, VertexId v) {
  if (X.count(u) || X.count(v))
    throw std::invalid_argument("separator test requires u and v outside X");
  for (VertexId x : X)
    if (!g.has_vertex(x)) throw std::out_of_range("vertex id out of range: " + std::to_string(x));
  return !reachable_avoiding(g, u, v, X);
}

DisjointPaths max_vertex_disjoint_paths(const Digraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u)) throw std::out_of_range("vertex id out of range: " + std::to_string(u));
  if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (g.has_edge(u, v)) throw std::invalid_argument("edge (u,v) present: separator duality undefined");

  // Node 2w = in-copy of w, 2w+1 = out-copy. Source is u's out-copy, sink is
  // v's in-copy; every other vertex gets a unit-capacity internal arc.
  const int nodes = 2 * (g.universe() + 1);
  struct Arc {
    int to, cap, rev;
    bool fwd;
  };
  std::vector<std::vector<Arc>> adj(nodes);
  auto add_arc = [&](int a, int b) {
    adj[a].push_back({b, 1, static_cast<int>(adj[b].size()), true});
    adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1, false});
  };
  for (VertexId w : g.vertices())
    if (w != u && w != v) add_arc(2 * w, 2 * w + 1);
  for (const auto& [a, b] : g.edges()) add_arc(2 * a + 1, 2 * b);

  const int source = 2 * u + 1;
  const int sink = 2 * v;
  int flow = 0;
  std::vector<int> prev_node(nodes), prev_arc(nodes);
  while (true) {
    std::fill(prev_node.begin(), prev_node.end(), -1);
    std::vector<int> q{source};
    prev_node[source] = source;
    bool found = false;
    for (size_t head = 0; head < q.size() && !found; ++head) {
      int x = q[head];
      for (int ai = 0; ai < static_cast<int>(adj[x].size()); ++ai) {
        const Arc& a = adj[x][ai];
        if (a.cap <= 0 || prev_node[a.to] != -1) continue;
        prev_node[a.to] = x;
        prev_arc[a.to] = ai;
        if (a.to == sink) {
          found = true;
          break;
        }
        q.push_back(a.to);
      }
    }
    if (!found) break;
    for (int x = sink; x != source; x = prev_node[x]) {
      Arc& a = adj[prev_node[x]][prev_arc[x]];
      a.cap -= 1;
      adj[x][a.rev].cap += 1;
    }
    ++flow;
  }

  // Decompose: from the source repeatedly follow unused forward arcs that
  // carry flow (cap dropped to 0). Unit vertex capacities keep the walks
  // vertex-disjoint, and stray flow cycles are never reachable this way.
  DisjointPaths result;
  result.count = flow;
  std::vector<std::vector<char>> used(nodes);
  for (int x = 0; x < nodes; ++x) used[x].assign(adj[x].size(), 0);
  for (int p = 0; p < flow; ++p) {
    Path path{u};
    int node = source;
    while (node != sink) {
      int next = -1;
      for (int ai = 0; ai < static_cast<int>(adj[node].size()); ++ai) {
        const Arc& a = adj[node][ai];
        if (a.fwd && a.cap == 0 && !used[node][ai]) {
          next = ai;
          break;
        }
      }
      if (next < 0) throw std::logic_error("flow decomposition failed");
      used[node][next] = 1;
      int from = node;
      node = adj[node][next].to;
      if (from % 2 == 0 && node == from + 1) path.push_back(from / 2);  // internal arc of from/2
    }
    path.push_back(v);
    result.paths.push_back(std::move(path));
  }
  return result;
}

std::optional<Path> min_nonterminal_path(const Digraph& g, VertexId u, VertexId v,
                                         const VertexSet& terminals) {
  std::vector<char> term = avoid_mask(g, terminals);
  return best_path(
      g, u, v, [](VertexId) { return true; }, [&](VertexId w) { return term[w] ? 0 : 1; });
}

std::optional<Path> shortest_path(const Digraph& g, VertexId u, VertexId v) {
  return best_path(
      g, u, v, [](VertexId) { return true; }, [](VertexId) { return 0; });
}

std::optional<Path> shortest_path_avoiding(const Digraph& g, VertexId u, VertexId v,
                                           const VertexSet& forbidden) {
  std::vector<char> mask = avoid_mask(g, forbidden);
  return best_path(
      g, u, v, [&](VertexId w) { return !mask[w]; }, [](VertexId) { return 0; });
}

namespace {

std::vector<std::vector<VertexId>> components_impl(const Digraph& g,
                                                   const std::vector<VertexId>& verts) {
  std::vector<char> inside(g.universe() + 1, 0), seen(g.universe() + 1, 0);
  for (VertexId v : verts) inside[v] = 1;
  std::vector<std::vector<VertexId>> comps;
  for (VertexId start : verts) {
    if (seen[start]) continue;
    std::vector<VertexId> comp, q{start};
    seen[start] = 1;
    for (size_t head = 0; head < q.size(); ++head) {
      VertexId x = q[head];
      comp.push_back(x);
      auto visit = [&](VertexId w) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      };
      for (VertexId w : g.out_neighbors(x)) visit(w);
      for (VertexId w : g.in_neighbors(x)) visit(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // verts is ascending, so components already appear by smallest member
  return comps;
}

}  // namespace

std::vector<std::vector<VertexId>> weak_components(const Digraph& g) {
  return components_impl(g, g.vertices());
}

std::vector<std::vector<VertexId>> weak_components(const Digraph& g, const VertexSet& restrict_to) {
  std::vector<VertexId> verts;
  for (VertexId v : restrict_to) {
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    verts.push_back(v);
  }
  return components_impl(g, verts);
}

bool is_walk(const Digraph& g, const Walk& w) {
  if (w.empty()) return false;
  for (VertexId v : w)
    if (!g.has_vertex(v)) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!g.has_edge(w[i], w[i + 1])) return false;
  return true;
}

bool is_path(const Digraph& g, const Path& p) {
  if (!is_walk(g, p)) return false;
  VertexSet seen(p.begin(), p.end());
  return seen.size() == p.size();
}

Path shorten_walk(const Digraph& g, const Walk& w) {
  if (!is_walk(g, w)) throw std::invalid_argument("not a walk of the digraph");
  std::vector<int> pos(g.universe() + 1, -1);
  Path out;
  for (VertexId v : w) {
    if (pos[v] >= 0) {
      while (static_cast<int>(out.size()) > pos[v] + 1) {
        pos[out.back()] = -1;
        out.pop_back();
      }
    } else {
      pos[v] = static_cast<int>(out.size());
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace dedp
