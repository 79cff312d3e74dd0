#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dedp/instance.hpp"
#include "dedp/transform.hpp"

namespace dedp {

/// For each request i, the non-terminal vertices whose removal disconnects
/// it, computed by single-vertex removal tests.
std::vector<VertexSet> blocked_sets(const Instance& inst);

struct IterationStep {
  int request_index = -1;  // chosen live request, 0-based
  Digraph reduced;         // instance graph with that request's blocked set bypassed
  BypassTrace trace;
  Path path;  // source -> target in `reduced`, fewest non-terminal vertices
};

/// One round of the large-instance routine: pick the live request with the
/// smallest blocked set (lowest index on ties), bypass it, route it cheaply.
/// Requires a clean instance, |live| >= s+1, and connected live requests.
IterationStep iteration_step(const Instance& inst, const std::vector<int>& live);

struct PartialSolution {
  std::vector<VertexId> viable_set;         // exactly d vertices, ascending
  std::vector<std::pair<int, Path>> paths;  // request index -> path in inst.graph
};

/// Base case: exactly s+1 live requests on a clean instance with
/// |V*| >= 2d(s+1) always admits a solution, found in polynomial time.
PartialSolution solve_base(const Instance& inst, const std::vector<int>& live);

/// Clean instances with |V*| >= kernel_bound_core(k,d,s) are always positive;
/// runs k-(s+1) iteration steps and finishes with solve_base, lifting all
/// paths back. Requires s < k and connected requests.
Solution solve_large_clean(const Instance& inst);

/// d * 2^(k-s) * C(k,s); requires k >= 1 and 0 <= s < k. Saturates at the
/// int64 maximum instead of overflowing.
std::int64_t kernel_bound_core(int k, int d, int s);
/// kernel_bound_core + 2k, the full guarantee on reduced instance sizes.
std::int64_t kernel_bound(int k, int d, int s);

struct KernelResult {
  enum class Kind { Solved, Reduced, NoSolution };
  Kind kind = Kind::NoSolution;
  std::optional<Solution> solution;   // Solved: verifies against the input
  std::optional<Instance> reduced;    // Reduced: equivalent, within kernel_bound
  std::optional<BypassTrace> trace;   // Reduced: bypasses leading there
  std::string note;
};

/// Clean the instance, then either solve it outright (large clean instances
/// and trivial cases) or return the equivalent reduced instance.
KernelResult kernelize(const Instance& inst);

}  // namespace dedp
