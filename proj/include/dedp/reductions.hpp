#pragma once

#include <cstdint>

#include "dedp/instance.hpp"

namespace dedp {

/// Directed disjoint paths with congestion: every vertex may lie on at most
/// `congestion` paths of a satisfying collection.
struct DdpcInstance {
  Digraph graph;
  RequestSet requests;
  int congestion = 1;
};

struct UndirectedGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // stored with first < second
};

/// Congestion-to-DEDP gadget: appends a chain of c mandatory-congestion
/// vertices tapped off request i, plus an extra request pushing s copies
/// through the chain. d is solved self-consistently from alpha.
Instance from_ddpc(const DdpcInstance& src, double alpha, int request_index);

/// Independent-set gadget: a single root feeding every vertex s times and one
/// request per edge vertex; G has an independent set of size >= d exactly
/// when the produced instance is positive. Requires s >= 1.
Instance from_independent_set(const UndirectedGraph& g, int d, int s);

/// Request amplification: duplicate every request k*d*s_target + 1 times and
/// raise the congestion allowance from 0 to s_target; preserves the decision.
Instance amplify(const Instance& inst, int s_target);

struct RandomFlags {
  bool acyclic = false;
  bool ensure_connected = false;
  bool ensure_clean = false;
};

/// Seeded, reproducible instance generator. ensure_connected draws requests
/// among reachable pairs; ensure_clean additionally gives every non-trivial
/// request private relay routes so no single non-terminal blocks more than s
/// requests (verified before returning).
Instance random_instance(int n, int m, int k, int d, int s, std::uint64_t seed,
                         RandomFlags flags = {});

DdpcInstance parse_ddpc(const std::string& text);
std::string write_ddpc(const DdpcInstance& inst);
UndirectedGraph parse_undirected(const std::string& text);
std::string write_undirected(const UndirectedGraph& g);

}  // namespace dedp
