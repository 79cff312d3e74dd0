#pragma once

#include <map>
#include <string>

#include "dedp/digraph.hpp"

namespace dedp {

struct Arborescence {
  int node_count = 0;
  std::vector<int> parent;  // 1-based; parent[r] == 0 marks the root

  int root() const;
};

struct ArborealDecomposition {
  Arborescence tree;
  std::vector<VertexSet> node_bags;      // 1-based, one bag per tree node
  std::map<int, VertexSet> edge_guards;  // child node -> guard of its parent edge
};

/// S is Z-guarded when no directed walk of g - Z starts and ends in S while
/// visiting a vertex outside S and Z. Requires S and Z disjoint.
bool is_guarded(const Digraph& g, const VertexSet& S, const VertexSet& Z);

struct DecompositionReport {
  bool ok = false;
  int width = -1;
  std::string violation;  // first structural or guard defect
};

/// Checks the bags partition V(g) and every below-edge union is guarded by
/// its edge guard; reports the width (max node width - 1) on success.
DecompositionReport validate_decomposition(const Digraph& g, const ArborealDecomposition& dec);

/// The union of the paths, induced on S', must fall apart into at most
/// (w+1)*k weak components whenever S' is guarded by `guard` with at most w
/// vertices; the guard hypotheses are verified and their failure is an error.
bool check_limited(const Digraph& g, const std::vector<Path>& paths, const VertexSet& S_prime,
                   const VertexSet& guard, int w, int k);

ArborealDecomposition parse_decomposition(const std::string& text);
std::string write_decomposition(const ArborealDecomposition& dec);

}  // namespace dedp
