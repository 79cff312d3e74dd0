#include <random>

#include "brute.hpp"
#include "dedp/dtw.hpp"
#include "dedp/instance.hpp"
#include "dedp/solve.hpp"
#include "doctest.h"

using namespace dedp;

namespace {

// Path-shaped tree over a topological order, singleton bags, no guards.
ArborealDecomposition topological_singletons(const Digraph& g) {
  // Kahn order
  std::map<int, int> indeg;
  for (VertexId v : g.vertices()) indeg[v] = static_cast<int>(g.in_neighbors(v).size());
  std::vector<int> order;
  for (auto [v, dg] : indeg)
    if (dg == 0) order.push_back(v);
  for (size_t head = 0; head < order.size(); ++head)
    for (VertexId w : g.out_neighbors(order[head]))
      if (--indeg[w] == 0) order.push_back(w);

  ArborealDecomposition dec;
  dec.tree.node_count = static_cast<int>(order.size());
  dec.tree.parent.assign(order.size() + 1, 0);
  dec.node_bags.assign(order.size() + 1, {});
  for (size_t i = 0; i < order.size(); ++i) {
    dec.tree.parent[i + 1] = static_cast<int>(i);  // 0 for the root
    dec.node_bags[i + 1] = {order[i]};
  }
  return dec;
}

Digraph random_dag(int n, std::mt19937_64& rng) {
  Digraph g(n);
  std::vector<int> pos(n + 1);
  for (int v = 1; v <= n; ++v) pos[v] = v;
  std::shuffle(pos.begin() + 1, pos.end(), rng);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && pos[u] < pos[v] && rng() % 3 == 0) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("is_guarded examples") {
  // routes from {1,2} back to {1,2} must cross 3; 4 is the outside detour
  Digraph g(6, {{1, 3}, {3, 4}, {4, 2}, {2, 1}});
  CHECK(is_guarded(g, {1, 2}, {3}));
  CHECK_FALSE(is_guarded(g, {1, 2}, {}));

  Digraph cyc(2, {{1, 2}, {2, 1}});
  CHECK_FALSE(is_guarded(cyc, {1}, {}));

  // S = everything outside Z is vacuously guarded
  Digraph h(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(is_guarded(h, {1, 3}, {2}));

  CHECK_THROWS_AS(is_guarded(h, {1, 2}, {2}), std::invalid_argument);
}

TEST_CASE("is_guarded agrees with bounded walk search") {
  std::mt19937_64 rng(14);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    Digraph g(n);
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (u != v && rng() % 3 == 0) g.add_edge(u, v);
    VertexSet S, Z;
    for (int v = 1; v <= n; ++v) {
      switch (rng() % 3) {
        case 0: S.insert(v); break;
        case 1: Z.insert(v); break;
        default: break;
      }
    }
    CHECK(is_guarded(g, S, Z) == !brute::violating_walk_exists(g, S, Z, 2 * n));
  }
}

TEST_CASE("validate_decomposition on singleton DAG decompositions") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 30; ++iter) {
    Digraph g = random_dag(3 + static_cast<int>(rng() % 8), rng);
    auto dec = topological_singletons(g);
    auto rep = validate_decomposition(g, dec);
    REQUIRE(rep.ok);
    CHECK(rep.width == 0);
  }
}

TEST_CASE("validate_decomposition flags the 2-cycle without guards") {
  Digraph cyc(2, {{1, 2}, {2, 1}});
  ArborealDecomposition dec;
  dec.tree.node_count = 2;
  dec.tree.parent = {0, 0, 1};
  dec.node_bags = {{}, {1}, {2}};
  auto rep = validate_decomposition(cyc, dec);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("guard") != std::string::npos);

  dec.edge_guards[2] = {1};
  rep = validate_decomposition(cyc, dec);
  REQUIRE(rep.ok);
  CHECK(rep.width == 1);
}

TEST_CASE("validate_decomposition reports structural defects distinctly") {
  Digraph g(3, {{1, 2}});
  ArborealDecomposition dec;
  dec.tree.node_count = 2;
  dec.tree.parent = {0, 0, 1};
  dec.node_bags = {{}, {1, 2}, {2, 3}};  // overlap
  auto rep = validate_decomposition(g, dec);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violation.find("structural") != std::string::npos);

  dec.node_bags = {{}, {1, 2}, {}};  // empty bag
  CHECK(validate_decomposition(g, dec).violation.find("structural") != std::string::npos);

  dec.node_bags = {{}, {1, 2}, {3}};
  dec.tree.parent = {0, 2, 1};  // parent cycle, no root
  CHECK_FALSE(validate_decomposition(g, dec).ok);
}

TEST_CASE("check_limited on hand shapes") {
  Digraph chain(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  Path whole{1, 2, 3, 4, 5, 6};
  VertexSet everything{1, 2, 3, 4, 5, 6};
  CHECK(check_limited(chain, {whole}, everything, {}, 0, 1));

  // guard {3} chops the path into two pieces on S' = V - {3}
  VertexSet rest{1, 2, 4, 5, 6};
  CHECK(check_limited(chain, {whole}, rest, {3}, 1, 1));

  CHECK_THROWS_AS(check_limited(chain, {whole}, rest, {3}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_limited(chain, {whole}, everything, {3}, 1, 1), std::invalid_argument);
}

TEST_CASE("limited-collections bound holds for oracle collections on DAGs") {
  std::mt19937_64 rng(2718);
  int done = 0;
  while (done < 40) {
    Digraph g = random_dag(4 + static_cast<int>(rng() % 4), rng);
    Instance inst;
    inst.graph = g;
    int k = 1 + static_cast<int>(rng() % 2);
    std::vector<int> verts = g.vertices();
    for (int i = 0; i < k; ++i) {
      int u = verts[rng() % verts.size()], v = verts[rng() % verts.size()];
      inst.requests.push_back({u, v});
    }
    inst.d = 0;
    inst.s = 2;
    auto sol = oracle(inst);
    if (!sol) continue;
    ++done;

    auto dec = topological_singletons(g);
    REQUIRE(validate_decomposition(g, dec).ok);
    // every below-edge union with its (empty) guard
    for (int child = 2; child <= dec.tree.node_count; ++child) {
      VertexSet below;
      for (int r = child; r <= dec.tree.node_count; ++r)
        below.insert(dec.node_bags[r].begin(), dec.node_bags[r].end());
      CHECK(check_limited(g, sol->paths, below, {}, 0, k));
    }
  }
}

TEST_CASE("decomposition files round-trip") {
  Digraph cyc(2, {{1, 2}, {2, 1}});
  ArborealDecomposition dec;
  dec.tree.node_count = 2;
  dec.tree.parent = {0, 0, 1};
  dec.node_bags = {{}, {1}, {2}};
  dec.edge_guards[2] = {1};
  std::string text = write_decomposition(dec);
  ArborealDecomposition back = parse_decomposition(text);
  CHECK(back.tree.parent == dec.tree.parent);
  CHECK(back.node_bags == dec.node_bags);
  CHECK(back.edge_guards == dec.edge_guards);
  CHECK(write_decomposition(back) == text);

  CHECK_THROWS_AS(parse_decomposition("n 1 0 w: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("t 2\nn 1 0 w: 1\n"), ParseError);  // node 2 missing
}
