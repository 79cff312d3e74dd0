#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dedp/digraph.hpp"

namespace dedp {

struct Request {
  VertexId source = 0;
  VertexId target = 0;
  friend bool operator==(const Request&, const Request&) = default;
};

/// Ordered multiset: duplicates are kept and order is significant, solution
/// paths align with requests index by index.
using RequestSet = std::vector<Request>;

VertexSet sources(const RequestSet& requests);
VertexSet targets(const RequestSet& requests);
VertexSet terminals(const RequestSet& requests);

struct Instance {
  Digraph graph;
  RequestSet requests;
  int d = 0;  // canonical parameter; c = n - d is derived
  int s = 0;

  int k() const { return static_cast<int>(requests.size()); }
  int c() const { return graph.vertex_count() - d; }
};

/// Vertices that are neither a source nor a target of the request set.
VertexSet nonterminals(const Instance& inst);
VertexSet nonterminals(const Instance& inst, const VertexSet& over);

struct Solution {
  std::vector<VertexId> viable_set;  // ascending
  std::vector<Path> paths;           // aligned with the instance's requests
};

struct VerifyResult {
  bool ok = false;
  std::string message;  // names the first violated condition
  explicit operator bool() const { return ok; }
};

/// Checks that every path is a valid path matching its request, |X| >= d,
/// and every vertex of X lies on at most s paths. Structural defects are
/// reported separately from congestion defects.
VerifyResult verify_solution(const Instance& inst, const Solution& sol);

enum class TrivialStatus { PositiveTrivial, NegativeTrivial, Undecided };
TrivialStatus trivial_status(const Instance& inst);

class ParseError : public std::runtime_error {
public:
  ParseError(std::string code, const std::string& detail);
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

Instance parse_instance(const std::string& text);
/// Canonical text form; the graph must use contiguous ids 1..n.
std::string write_instance(const Instance& inst);

/// nullopt encodes a negative ("s no") file.
std::optional<Solution> parse_solution(const std::string& text);
std::string write_solution(const Solution& sol);
std::string write_negative_solution();

struct Compacted {
  Instance instance;
  std::vector<VertexId> old_id;  // old_id[new] = original id; index 0 unused
};

/// Renumber surviving vertices to 1..n', preserving order.
Compacted compact(const Instance& inst);

}  // namespace dedp
