#include "dedp/kernel.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace dedp {

std::vector<VertexSet> blocked_sets(const Instance& inst) {
  const VertexSet nt = nonterminals(inst);
  std::vector<VertexSet> sets(inst.k());
  for (VertexId v : nt) {
    VertexSet single{v};
    for (int i = 0; i < inst.k(); ++i) {
      const Request& r = inst.requests[i];
      if (!reachable_avoiding(inst.graph, r.source, r.target, single)) sets[i].insert(v);
    }
  }
  return sets;
}

namespace {

VertexSet path_nonterminals(const Path& p, const VertexSet& term) {
  VertexSet out;
  for (VertexId v : p)
    if (!term.count(v)) out.insert(v);
  return out;
}

VertexSet blocked_set_of(const Instance& inst, int i, const VertexSet& nt) {
  VertexSet out;
  const Request& r = inst.requests[i];
  for (VertexId v : nt) {
    VertexSet single{v};
    if (!reachable_avoiding(inst.graph, r.source, r.target, single)) out.insert(v);
  }
  return out;
}

}  // namespace

IterationStep iteration_step(const Instance& inst, const std::vector<int>& live) {
  const int s = inst.s;
  std::vector<int> order(live);
  std::sort(order.begin(), order.end());
  if (order.empty() || order.front() < 0 || order.back() >= inst.k())
    throw std::invalid_argument("live request indices out of range");
  if (static_cast<int>(order.size()) < s + 1)
    throw std::invalid_argument("need at least s+1 live requests");
  if (!blocking_vertices(inst.graph, inst.requests, s).empty())
    throw std::invalid_argument("instance is not clean");
  for (int i : order)
    if (!reachable(inst.graph, inst.requests[i].source, inst.requests[i].target))
      throw std::invalid_argument("live request " + std::to_string(i + 1) + " is disconnected");

  const VertexSet term = terminals(inst.requests);
  const VertexSet nt = nonterminals(inst);
  const long long n_star = static_cast<long long>(nt.size());
  const long long k_live = static_cast<long long>(order.size());

  int best = -1;
  VertexSet best_set;
  for (int i : order) {
    VertexSet bi = blocked_set_of(inst, i, nt);
    if (best < 0 || bi.size() < best_set.size()) {
      best = i;
      best_set = std::move(bi);
    }
  }

  // min_i |B_i| <= floor(n* s / k'); anything bigger means the instance was
  // not clean after all.
  if (static_cast<long long>(best_set.size()) * k_live > n_star * s)
    throw std::logic_error("blocked-set bound violated: cleanness broken upstream");

  auto [reduced, trace] = bypass_set(inst.graph, best_set, term);
  auto p = min_nonterminal_path(reduced, inst.requests[best].source, inst.requests[best].target,
                                term);
  if (!p) throw std::logic_error("request became disconnected by bypassing its blocked set");

  long long nt_reduced = 0;
  for (VertexId v : reduced.vertices())
    if (!term.count(v)) ++nt_reduced;
  long long nt_path = static_cast<long long>(path_nonterminals(*p, term).size());
  if (2 * nt_path > nt_reduced)
    throw std::logic_error("path non-terminal bound violated: cleanness broken upstream");

  return IterationStep{best, std::move(reduced), std::move(trace), std::move(*p)};
}

PartialSolution solve_base(const Instance& inst, const std::vector<int>& live) {
  const int s = inst.s;
  if (static_cast<int>(live.size()) != s + 1)
    throw std::invalid_argument("solve_base needs exactly s+1 live requests");
  const VertexSet term = terminals(inst.requests);
  const long long n_star = static_cast<long long>(nonterminals(inst).size());
  if (n_star < 2LL * inst.d * (s + 1))
    throw std::invalid_argument("solve_base needs |V*| >= 2d(s+1)");

  IterationStep step = iteration_step(inst, live);

  auto [rest_graph, rest_trace] =
      bypass_set(step.reduced, path_nonterminals(step.path, term), term);

  PartialSolution out;
  out.paths.emplace_back(step.request_index, lift_path(step.trace, step.path));
  std::vector<int> order(live);
  std::sort(order.begin(), order.end());
  for (int j : order) {
    if (j == step.request_index) continue;
    auto q = shortest_path(rest_graph, inst.requests[j].source, inst.requests[j].target);
    if (!q) throw std::logic_error("remaining request lost connectivity");
    out.paths.emplace_back(j, lift_path(step.trace, lift_path(rest_trace, *q)));
  }
  std::sort(out.paths.begin(), out.paths.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (VertexId v : rest_graph.vertices()) {
    if (term.count(v)) continue;
    if (static_cast<int>(out.viable_set.size()) == inst.d) break;
    out.viable_set.push_back(v);
  }
  if (static_cast<int>(out.viable_set.size()) != inst.d)
    throw std::logic_error("not enough surviving non-terminals for the viable set");
  return out;
}

Solution solve_large_clean(const Instance& inst) {
  const int k = inst.k(), s = inst.s;
  if (s >= k) throw std::invalid_argument("solve_large_clean requires s < k");
  long long n0 = static_cast<long long>(nonterminals(inst).size());
  if (n0 < kernel_bound_core(k, inst.d, s))
    throw std::invalid_argument("instance below the large-instance threshold");

  const VertexSet term = terminals(inst.requests);
  Instance cur = inst;
  std::vector<int> live(k);
  for (int i = 0; i < k; ++i) live[i] = i;

  std::vector<BypassTrace> stack;
  auto lift_to_input = [&stack](Path p, size_t depth) {
    for (size_t i = depth; i-- > 0;) p = lift_path(stack[i], p);
    return p;
  };

  std::map<int, Path> chosen;
  long long prev_nstar = n0;
  const int rounds = k - (s + 1);
  for (int t = 1; t <= rounds; ++t) {
    IterationStep step = iteration_step(cur, live);
    Path lifted = lift_path(step.trace, step.path);
    lifted = lift_to_input(std::move(lifted), stack.size());
    chosen[step.request_index] = std::move(lifted);

    auto [next_graph, next_trace] =
        bypass_set(step.reduced, path_nonterminals(step.path, term), term);
    stack.push_back(std::move(step.trace));
    stack.push_back(std::move(next_trace));
    cur.graph = std::move(next_graph);
    live.erase(std::remove(live.begin(), live.end(), step.request_index), live.end());

    // Size invariant: n*_t >= n*_{t-1} (k'-s) / (2k') with k' live requests
    // before the step; chaining these gives the overall product bound.
    long long k_before = k - (t - 1);
    long long n_now = 0;
    for (VertexId v : cur.graph.vertices())
      if (!term.count(v)) ++n_now;
    if (2 * k_before * n_now < (k_before - s) * prev_nstar)
      throw std::logic_error("iteration shrank the graph more than the analysis allows");
    prev_nstar = n_now;
  }

  PartialSolution base = solve_base(cur, live);
  Solution sol;
  sol.viable_set = base.viable_set;
  sol.paths.assign(k, {});
  for (auto& [idx, p] : chosen) sol.paths[idx] = p;
  for (auto& [idx, p] : base.paths) sol.paths[idx] = lift_to_input(p, stack.size());

  VerifyResult vr = verify_solution(inst, sol);
  if (!vr) throw std::logic_error("constructed solution failed verification: " + vr.message);
  return sol;
}

namespace {

std::int64_t saturating(__int128 v) {
  const __int128 lim = std::numeric_limits<std::int64_t>::max();
  return v > lim ? std::numeric_limits<std::int64_t>::max() : static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t kernel_bound_core(int k, int d, int s) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (s < 0 || s >= k) throw std::invalid_argument("requires 0 <= s < k");
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  __int128 binom = 1;
  for (int j = 1; j <= s; ++j) binom = binom * (k - s + j) / j;
  __int128 value = static_cast<__int128>(d) * binom;
  for (int j = 0; j < k - s; ++j) {
    value *= 2;
    if (value > std::numeric_limits<std::int64_t>::max()) return saturating(value);
  }
  return saturating(value);
}

std::int64_t kernel_bound(int k, int d, int s) {
  return saturating(static_cast<__int128>(kernel_bound_core(k, d, s)) + 2 * k);
}

KernelResult kernelize(const Instance& inst) {
  KernelResult out;
  switch (trivial_status(inst)) {
    case TrivialStatus::NegativeTrivial: {
      out.kind = KernelResult::Kind::NoSolution;
      out.note = "a request is disconnected";
      return out;
    }
    case TrivialStatus::PositiveTrivial: {
      Solution sol;
      for (const Request& r : inst.requests) {
        auto p = shortest_path(inst.graph, r.source, r.target);
        sol.paths.push_back(std::move(*p));
      }
      for (VertexId v : inst.graph.vertices()) {
        if (static_cast<int>(sol.viable_set.size()) == inst.d) break;
        sol.viable_set.push_back(v);
      }
      VerifyResult vr = verify_solution(inst, sol);
      if (!vr) throw std::logic_error("trivial solution failed verification: " + vr.message);
      out.kind = KernelResult::Kind::Solved;
      out.solution = std::move(sol);
      return out;
    }
    case TrivialStatus::Undecided:
      break;
  }

  auto [cleaned, trace] = clean(inst);

  if (inst.d > cleaned.graph.vertex_count()) {
    // Every viable set avoids the bypassed blocking vertices, so no set of
    // size d fits in the original instance either.
    out.kind = KernelResult::Kind::NoSolution;
    out.note = "fewer than d vertices survive the blocking-vertex reduction";
    return out;
  }

  const long long n_star = static_cast<long long>(nonterminals(cleaned).size());
  if (n_star >= kernel_bound_core(inst.k(), inst.d, inst.s)) {
    Solution sol = solve_large_clean(cleaned);
    for (Path& p : sol.paths) p = lift_path(trace, p);
    VerifyResult vr = verify_solution(inst, sol);
    if (!vr) throw std::logic_error("lifted solution failed verification: " + vr.message);
    out.kind = KernelResult::Kind::Solved;
    out.solution = std::move(sol);
    return out;
  }

  if (cleaned.graph.vertex_count() > kernel_bound(inst.k(), inst.d, inst.s))
    throw std::logic_error("reduced instance exceeds the kernel bound");
  out.kind = KernelResult::Kind::Reduced;
  out.reduced = std::move(cleaned);
  out.trace = std::move(trace);
  return out;
}

}  // namespace dedp
