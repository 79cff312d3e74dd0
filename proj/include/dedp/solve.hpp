#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "dedp/instance.hpp"

namespace dedp {

/// Searches for an assignment of X's vertices to requests such that every
/// request i can be routed avoiding the vertices assigned elsewhere; returns
/// the witnessing paths of the first such assignment in lexicographic order.
std::optional<std::vector<Path>> is_one_viable(const Digraph& g, const RequestSet& requests,
                                               const VertexSet& X);

struct SplitGraph {
  Digraph graph;
  std::map<VertexId, VertexId> copy_of;     // copy id -> original id
  std::map<VertexId, VertexId> first_copy;  // original id -> its first copy
  VertexSet copies;                         // X'
};

/// Replace each x in X by s copies carrying x's full neighborhoods; an
/// s-viable certificate for X corresponds to a 1-viable one for the copies.
SplitGraph split_for_congestion(const Digraph& g, const VertexSet& X, int s);

/// Exhaustive search over all d-subsets of V in lexicographic order; first
/// viable subset wins.
std::optional<Solution> solve_xp(const Instance& inst);

struct OracleLimits {
  std::uint64_t max_paths_per_request = 1u << 20;
  std::uint64_t max_nodes = 1ull << 28;  // tuple-search tree nodes
};

class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ground-truth decider: enumerates every simple path per request and every
/// combination, accepting the first whose congestion profile leaves at least
/// d vertices on at most s paths. Exceeding the limits raises
/// ResourceLimitError, never a silent wrong answer.
std::optional<Solution> oracle(const Instance& inst, const OracleLimits& limits = {});

}  // namespace dedp
