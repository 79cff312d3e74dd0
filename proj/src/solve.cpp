#include "dedp/solve.hpp"

#include <algorithm>

namespace dedp {

namespace {

bool reachable_masked(const Digraph& g, VertexId u, VertexId v, const std::vector<char>& avoid) {
  if (avoid[u] || avoid[v]) return false;
  if (u == v) return true;
  thread_local std::vector<char> seen;
  thread_local std::vector<VertexId> queue;
  seen.assign(g.universe() + 1, 0);
  queue.clear();
  queue.push_back(u);
  seen[u] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (VertexId w : g.out_neighbors(queue[head])) {
      if (seen[w] || avoid[w]) continue;
      if (w == v) return true;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Path>> is_one_viable(const Digraph& g, const RequestSet& requests,
                                               const VertexSet& X) {
  const int k = static_cast<int>(requests.size());
  if (k == 0) return std::vector<Path>{};
  for (VertexId v : X)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));

  std::vector<VertexId> xs(X.begin(), X.end());
  const int q = static_cast<int>(xs.size());
  std::vector<int> label(q, 0);  // xs[j] serves request label[j]
  std::vector<char> forbidden(g.universe() + 1, 0);

  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j < q; ++j) forbidden[xs[j]] = (label[j] != i);
      ok = reachable_masked(g, requests[i].source, requests[i].target, forbidden);
    }
    if (ok) {
      std::vector<Path> paths;
      for (int i = 0; i < k; ++i) {
        VertexSet avoid;
        for (int j = 0; j < q; ++j)
          if (label[j] != i) avoid.insert(xs[j]);
        paths.push_back(*shortest_path_avoiding(g, requests[i].source, requests[i].target, avoid));
      }
      return paths;
    }
    int pos = q - 1;
    while (pos >= 0 && label[pos] == k - 1) label[pos--] = 0;
    if (pos < 0) break;
    ++label[pos];
  }
  return std::nullopt;
}

SplitGraph split_for_congestion(const Digraph& g, const VertexSet& X, int s) {
  if (s < 2) throw std::invalid_argument("splitting needs s >= 2");
  for (VertexId v : X)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));

  SplitGraph out;
  out.graph = g;
  // copies of each x receive consecutive fresh ids starting at first_copy[x]
  for (VertexId x : X) {
    std::vector<VertexId> ins(out.graph.in_neighbors(x).begin(), out.graph.in_neighbors(x).end());
    std::vector<VertexId> outs(out.graph.out_neighbors(x).begin(),
                               out.graph.out_neighbors(x).end());
    out.graph.remove_vertex(x);
    for (int c = 0; c < s; ++c) {
      VertexId copy = out.graph.add_vertex();
      out.copy_of[copy] = x;
      if (c == 0) out.first_copy[x] = copy;
      out.copies.insert(copy);
      for (VertexId w : ins)
        if (out.graph.has_vertex(w)) out.graph.add_edge(w, copy);
      for (VertexId w : outs)
        if (out.graph.has_vertex(w)) out.graph.add_edge(copy, w);
    }
  }
  return out;
}

namespace {

std::optional<std::vector<Path>> viable_paths_for(const Instance& inst, const VertexSet& X) {
  const Digraph& g = inst.graph;
  if (inst.s == 0) {
    std::vector<Path> paths;
    for (const Request& r : inst.requests) {
      if (X.count(r.source) || X.count(r.target)) return std::nullopt;
      auto p = shortest_path_avoiding(g, r.source, r.target, X);
      if (!p) return std::nullopt;
      paths.push_back(std::move(*p));
    }
    return paths;
  }
  if (inst.s == 1) return is_one_viable(g, inst.requests, X);

  // Endpoints inside X are pinned to distinct copies in request order; a
  // vertex with more endpoint incidences than s cannot meet its budget.
  std::map<VertexId, int> slots;
  for (const Request& r : inst.requests) {
    if (X.count(r.source)) ++slots[r.source];
    if (r.target != r.source && X.count(r.target)) ++slots[r.target];
  }
  for (const auto& [x, c] : slots)
    if (c > inst.s) return std::nullopt;

  SplitGraph sg = split_for_congestion(g, X, inst.s);
  std::map<VertexId, int> next_copy;
  RequestSet rebound;
  for (const Request& r : inst.requests) {
    Request nr = r;
    if (X.count(r.source)) nr.source = sg.first_copy.at(r.source) + next_copy[r.source]++;
    if (r.target == r.source)
      nr.target = nr.source;
    else if (X.count(r.target))
      nr.target = sg.first_copy.at(r.target) + next_copy[r.target]++;
    rebound.push_back(nr);
  }
  auto split_paths = is_one_viable(sg.graph, rebound, sg.copies);
  if (!split_paths) return std::nullopt;
  std::vector<Path> paths;
  for (const Path& sp : *split_paths) {
    Walk walk;
    for (VertexId v : sp) {
      auto it = sg.copy_of.find(v);
      walk.push_back(it == sg.copy_of.end() ? v : it->second);
    }
    paths.push_back(shorten_walk(g, walk));
  }
  return paths;
}

}  // namespace

std::optional<Solution> solve_xp(const Instance& inst) {
  const Digraph& g = inst.graph;
  for (const Request& r : inst.requests)
    if (!reachable(g, r.source, r.target)) return std::nullopt;

  const std::vector<VertexId> verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  const int d = inst.d;
  if (d > n) return std::nullopt;

  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    VertexSet X;
    for (int i : pick) X.insert(verts[i]);
    if (auto paths = viable_paths_for(inst, X)) {
      Solution sol;
      sol.viable_set.assign(X.begin(), X.end());
      sol.paths = std::move(*paths);
      return sol;
    }
    // next d-combination in lexicographic order
    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

namespace {

void enumerate_paths(const Digraph& g, VertexId cur, VertexId target, std::vector<char>& used,
                     Path& prefix, std::vector<Path>& out, std::uint64_t cap) {
  if (cur == target) {
    out.push_back(prefix);
    if (out.size() > cap) throw ResourceLimitError("simple-path enumeration exceeded the cap");
    return;
  }
  for (VertexId w : g.out_neighbors(cur)) {
    if (used[w]) continue;
    used[w] = 1;
    prefix.push_back(w);
    enumerate_paths(g, w, target, used, prefix, out, cap);
    prefix.pop_back();
    used[w] = 0;
  }
}

struct TupleSearch {
  const std::vector<std::vector<Path>>& menu;
  int budget;  // how many vertices may exceed s
  int s;
  std::vector<int> count;
  std::vector<int> choice;
  int exceed = 0;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;

  bool run(size_t level) {
    if (++nodes > max_nodes) throw ResourceLimitError("oracle search exceeded the node cap");
    if (exceed > budget) return false;
    if (level == menu.size()) return true;
    for (size_t pi = 0; pi < menu[level].size(); ++pi) {
      const Path& p = menu[level][pi];
      for (VertexId v : p)
        if (++count[v] == s + 1) ++exceed;
      choice[level] = static_cast<int>(pi);
      if (run(level + 1)) return true;
      for (VertexId v : p)
        if (count[v]-- == s + 1) --exceed;
    }
    return false;
  }
};

}  // namespace

std::optional<Solution> oracle(const Instance& inst, const OracleLimits& limits) {
  const Digraph& g = inst.graph;
  for (const Request& r : inst.requests)
    if (!reachable(g, r.source, r.target)) return std::nullopt;
  std::vector<std::vector<Path>> menu;
  for (const Request& r : inst.requests) {
    std::vector<Path> paths;
    std::vector<char> used(g.universe() + 1, 0);
    Path prefix{r.source};
    used[r.source] = 1;
    enumerate_paths(g, r.source, r.target, used, prefix, paths, limits.max_paths_per_request);
    if (paths.empty()) return std::nullopt;
    menu.push_back(std::move(paths));
  }

  TupleSearch search{menu,
                     g.vertex_count() - inst.d,
                     inst.s,
                     std::vector<int>(g.universe() + 1, 0),
                     std::vector<int>(menu.size(), -1),
                     0,
                     0,
                     limits.max_nodes};
  if (!search.run(0)) return std::nullopt;

  Solution sol;
  for (size_t i = 0; i < menu.size(); ++i) sol.paths.push_back(menu[i][search.choice[i]]);
  for (VertexId v : g.vertices())
    if (search.count[v] <= inst.s) sol.viable_set.push_back(v);
  return sol;
}

}  // namespace dedp
