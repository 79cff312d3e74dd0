#include "dedp/dtw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dedp/instance.hpp"  // ParseError

namespace dedp {

int Arborescence::root() const {
  int r = 0;
  for (int v = 1; v <= node_count; ++v)
    if (parent[v] == 0) {
      if (r != 0) throw std::invalid_argument("arborescence has two roots");
      r = v;
    }
  if (r == 0) throw std::invalid_argument("arborescence has no root");
  return r;
}

bool is_guarded(const Digraph& g, const VertexSet& S, const VertexSet& Z) {
  for (VertexId v : S) {
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    if (Z.count(v)) throw std::invalid_argument("S and Z must be disjoint");
  }
  for (VertexId v : Z)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range: " + std::to_string(v));

  // A violating walk exists iff some vertex outside S and Z is reachable from
  // S and reaches S, both within g - Z.
  const int u = g.universe();
  std::vector<char> fwd(u + 1, 0), bwd(u + 1, 0), zed(u + 1, 0);
  for (VertexId v : Z) zed[v] = 1;

  std::vector<VertexId> queue;
  for (VertexId v : S) {
    fwd[v] = 1;
    queue.push_back(v);
  }
  for (size_t head = 0; head < queue.size(); ++head)
    for (VertexId w : g.out_neighbors(queue[head]))
      if (!fwd[w] && !zed[w]) {
        fwd[w] = 1;
        queue.push_back(w);
      }
  queue.clear();
  for (VertexId v : S) {
    bwd[v] = 1;
    queue.push_back(v);
  }
  for (size_t head = 0; head < queue.size(); ++head)
    for (VertexId w : g.in_neighbors(queue[head]))
      if (!bwd[w] && !zed[w]) {
        bwd[w] = 1;
        queue.push_back(w);
      }

  for (VertexId v : g.vertices())
    if (fwd[v] && bwd[v] && !S.count(v) && !zed[v]) return false;
  return true;
}

namespace {

DecompositionReport fail(const std::string& why) { return {false, -1, why}; }

}  // namespace

DecompositionReport validate_decomposition(const Digraph& g, const ArborealDecomposition& dec) {
  const int nodes = dec.tree.node_count;
  if (nodes < 1) return fail("structural: decomposition has no nodes");
  if (static_cast<int>(dec.tree.parent.size()) != nodes + 1 ||
      static_cast<int>(dec.node_bags.size()) != nodes + 1)
    return fail("structural: node tables do not match the node count");

  int root = 0;
  for (int r = 1; r <= nodes; ++r) {
    int p = dec.tree.parent[r];
    if (p == 0) {
      if (root != 0) return fail("structural: more than one root");
      root = r;
    } else if (p < 1 || p > nodes) {
      return fail("structural: node " + std::to_string(r) + " has an invalid parent");
    }
  }
  if (root == 0) return fail("structural: no root");
  for (int r = 1; r <= nodes; ++r) {
    int hops = 0, x = r;
    while (x != root) {
      x = dec.tree.parent[x];
      if (++hops > nodes) return fail("structural: parent chain of node " + std::to_string(r) +
                                      " does not reach the root");
    }
  }

  // Bags: nonempty, pairwise disjoint, covering V(g).
  std::vector<char> covered(g.universe() + 1, 0);
  int total = 0;
  for (int r = 1; r <= nodes; ++r) {
    if (dec.node_bags[r].empty())
      return fail("structural: bag of node " + std::to_string(r) + " is empty");
    for (VertexId v : dec.node_bags[r]) {
      if (!g.has_vertex(v))
        return fail("structural: bag of node " + std::to_string(r) + " uses unknown vertex " +
                    std::to_string(v));
      if (covered[v])
        return fail("structural: vertex " + std::to_string(v) + " appears in two bags");
      covered[v] = 1;
      ++total;
    }
  }
  if (total != g.vertex_count()) return fail("structural: bags do not cover every vertex");

  for (const auto& [child, guard] : dec.edge_guards) {
    if (child < 1 || child > nodes || child == root)
      return fail("structural: guard attached to invalid node " + std::to_string(child));
    for (VertexId v : guard)
      if (!g.has_vertex(v))
        return fail("structural: guard of node " + std::to_string(child) +
                    " uses unknown vertex " + std::to_string(v));
  }

  std::vector<std::vector<int>> children(nodes + 1);
  for (int r = 1; r <= nodes; ++r)
    if (r != root) children[dec.tree.parent[r]].push_back(r);

  auto guard_of = [&](int child) -> VertexSet {
    auto it = dec.edge_guards.find(child);
    return it == dec.edge_guards.end() ? VertexSet{} : it->second;
  };

  // Guardedness of every below-edge union, children in ascending order.
  for (int child = 1; child <= nodes; ++child) {
    if (child == root) continue;
    VertexSet below;
    std::vector<int> stack{child};
    while (!stack.empty()) {
      int r = stack.back();
      stack.pop_back();
      below.insert(dec.node_bags[r].begin(), dec.node_bags[r].end());
      for (int c : children[r]) stack.push_back(c);
    }
    VertexSet guard = guard_of(child);
    for (VertexId v : below)
      if (guard.count(v))
        return fail("guard: vertex " + std::to_string(v) + " of the guard into node " +
                    std::to_string(child) + " lies below that edge");
    if (!is_guarded(g, below, guard))
      return fail("guard: the union below the edge into node " + std::to_string(child) +
                  " is not guarded");
  }

  int max_width = 0;
  for (int r = 1; r <= nodes; ++r) {
    VertexSet w(dec.node_bags[r]);
    if (r != root) {
      VertexSet guard = guard_of(r);
      w.insert(guard.begin(), guard.end());
    }
    for (int c : children[r]) {
      VertexSet guard = guard_of(c);
      w.insert(guard.begin(), guard.end());
    }
    max_width = std::max(max_width, static_cast<int>(w.size()));
  }
  return {true, max_width - 1, ""};
}

bool check_limited(const Digraph& g, const std::vector<Path>& paths, const VertexSet& S_prime,
                   const VertexSet& guard, int w, int k) {
  if (static_cast<int>(guard.size()) > w)
    throw std::invalid_argument("guard larger than the claimed width");
  if (!is_guarded(g, S_prime, guard))
    throw std::invalid_argument("the given guard does not guard S'");
  for (const Path& p : paths)
    if (!is_path(g, p)) throw std::invalid_argument("collection contains an invalid path");

  // Union of the paths, induced on S'.
  VertexSet on_paths;
  for (const Path& p : paths)
    for (VertexId v : p) on_paths.insert(v);
  Digraph union_graph(g.universe());
  for (VertexId v = 1; v <= union_graph.universe(); ++v)
    if (!on_paths.count(v) && union_graph.has_vertex(v)) union_graph.remove_vertex(v);
  for (const Path& p : paths)
    for (size_t i = 0; i + 1 < p.size(); ++i) union_graph.add_edge(p[i], p[i + 1]);

  VertexSet induced;
  for (VertexId v : on_paths)
    if (S_prime.count(v)) induced.insert(v);
  auto comps = weak_components(union_graph, induced);
  return static_cast<long long>(comps.size()) <=
         static_cast<long long>(w + 1) * static_cast<long long>(k);
}

ArborealDecomposition parse_decomposition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ArborealDecomposition dec;
  bool have_header = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "t") {
      long long nodes;
      if (!(ls >> nodes) || nodes < 1) throw ParseError("BAD_HEADER", "expected 't <nodes>'");
      dec.tree.node_count = static_cast<int>(nodes);
      dec.tree.parent.assign(nodes + 1, -1);
      dec.node_bags.assign(nodes + 1, {});
      have_header = true;
    } else if (kind == "n") {
      if (!have_header) throw ParseError("MISSING_HEADER", "'n' line before 't' header");
      int node, parent;
      std::string w;
      if (!(ls >> node >> parent >> w) || w != "w:")
        throw ParseError("BAD_LINE", "expected 'n <node> <parent|0> w: <vertices>'");
      if (node < 1 || node > dec.tree.node_count || parent < 0 || parent > dec.tree.node_count)
        throw ParseError("VERTEX_RANGE", "tree node out of range");
      dec.tree.parent[node] = parent;
      int v;
      while (ls >> v) dec.node_bags[node].insert(v);
    } else if (kind == "g") {
      if (!have_header) throw ParseError("MISSING_HEADER", "'g' line before 't' header");
      int node;
      std::string x;
      if (!(ls >> node >> x) || x != "x:")
        throw ParseError("BAD_LINE", "expected 'g <child> x: <vertices>'");
      if (node < 1 || node > dec.tree.node_count)
        throw ParseError("VERTEX_RANGE", "tree node out of range");
      VertexSet guard;
      int v;
      while (ls >> v) guard.insert(v);
      dec.edge_guards[node] = std::move(guard);
    } else {
      throw ParseError("BAD_LINE", "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw ParseError("MISSING_HEADER", "no 't' header");
  for (int r = 1; r <= dec.tree.node_count; ++r)
    if (dec.tree.parent[r] < 0)
      throw ParseError("BAD_LINE", "node " + std::to_string(r) + " was never declared");
  dec.tree.parent[0] = 0;  // unused slot, normalised for value comparisons
  return dec;
}

std::string write_decomposition(const ArborealDecomposition& dec) {
  std::ostringstream out;
  out << "t " << dec.tree.node_count << '\n';
  for (int r = 1; r <= dec.tree.node_count; ++r) {
    out << "n " << r << ' ' << dec.tree.parent[r] << " w:";
    for (VertexId v : dec.node_bags[r]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [child, guard] : dec.edge_guards) {
    out << "g " << child << " x:";
    for (VertexId v : guard) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace dedp
