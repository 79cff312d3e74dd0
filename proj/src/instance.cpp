#include "dedp/instance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dedp {

VertexSet sources(const RequestSet& requests) {
  VertexSet out;
  for (const Request& r : requests) out.insert(r.source);
  return out;
}

VertexSet targets(const RequestSet& requests) {
  VertexSet out;
  for (const Request& r : requests) out.insert(r.target);
  return out;
}

VertexSet terminals(const RequestSet& requests) {
  VertexSet out;
  for (const Request& r : requests) {
    out.insert(r.source);
    out.insert(r.target);
  }
  return out;
}

VertexSet nonterminals(const Instance& inst) {
  VertexSet over;
  for (VertexId v : inst.graph.vertices()) over.insert(v);
  return nonterminals(inst, over);
}

VertexSet nonterminals(const Instance& inst, const VertexSet& over) {
  VertexSet term = terminals(inst.requests);
  VertexSet out;
  for (VertexId v : over)
    if (!term.count(v)) out.insert(v);
  return out;
}

VerifyResult verify_solution(const Instance& inst, const Solution& sol) {
  const int k = inst.k();
  if (static_cast<int>(sol.paths.size()) != k)
    return {false, "structural: expected " + std::to_string(k) + " paths, got " +
                       std::to_string(sol.paths.size())};

  for (int i = 0; i < k; ++i) {
    const Path& p = sol.paths[i];
    const std::string where = "structural: path " + std::to_string(i + 1);
    if (p.empty()) return {false, where + " is empty"};
    for (VertexId v : p)
      if (!inst.graph.has_vertex(v))
        return {false, where + " uses unknown vertex " + std::to_string(v)};
    if (p.front() != inst.requests[i].source || p.back() != inst.requests[i].target)
      return {false, where + " does not match its request endpoints"};
    VertexSet seen;
    for (VertexId v : p)
      if (!seen.insert(v).second)
        return {false, where + " repeats vertex " + std::to_string(v)};
    for (size_t j = 0; j + 1 < p.size(); ++j)
      if (!inst.graph.has_edge(p[j], p[j + 1]))
        return {false, where + " uses missing edge (" + std::to_string(p[j]) + "," +
                           std::to_string(p[j + 1]) + ")"};
  }

  VertexSet viable(sol.viable_set.begin(), sol.viable_set.end());
  for (VertexId v : viable)
    if (!inst.graph.has_vertex(v))
      return {false, "viable set contains unknown vertex " + std::to_string(v)};
  if (static_cast<int>(viable.size()) < inst.d)
    return {false, "viable set has " + std::to_string(viable.size()) + " vertices, need at least " +
                       std::to_string(inst.d)};

  std::map<VertexId, int> count;
  for (const Path& p : sol.paths)
    for (VertexId v : p) ++count[v];
  for (VertexId v : viable) {
    auto it = count.find(v);
    int c = it == count.end() ? 0 : it->second;
    if (c > inst.s)
      return {false, "congestion: vertex " + std::to_string(v) + " lies on " + std::to_string(c) +
                         " paths, allowed " + std::to_string(inst.s)};
  }
  return {true, ""};
}

TrivialStatus trivial_status(const Instance& inst) {
  for (const Request& r : inst.requests)
    if (!reachable(inst.graph, r.source, r.target)) return TrivialStatus::NegativeTrivial;
  if (inst.d == 0 || inst.s >= inst.k()) return TrivialStatus::PositiveTrivial;
  return TrivialStatus::Undecided;
}

ParseError::ParseError(std::string code, const std::string& detail)
    : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

namespace {

// Strips comments and splits into whitespace-separated tokens per line.
std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

long long parse_int(const std::string& tok, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("BAD_NUMBER", what + ": '" + tok + "'");
  }
}

int parse_vertex(const std::string& tok, int n) {
  long long v = parse_int(tok, "vertex id");
  if (v < 1 || v > n) throw ParseError("VERTEX_RANGE", "vertex id " + tok + " outside [1," +
                                                           std::to_string(n) + "]");
  return static_cast<int>(v);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("MISSING_HEADER", "empty instance file");
  const auto& h = lines[0];
  if (h.size() != 7 || h[0] != "p" || h[1] != "dedp")
    throw ParseError("BAD_HEADER", "expected 'p dedp <n> <m> <k> <d> <s>'");
  long long n = parse_int(h[2], "n"), m = parse_int(h[3], "m"), k = parse_int(h[4], "k"),
            d = parse_int(h[5], "d"), s = parse_int(h[6], "s");
  if (n < 0 || m < 0 || k < 0) throw ParseError("BAD_HEADER", "negative size field");
  if (s < 0) throw ParseError("BAD_HEADER", "s must be non-negative");
  if (d < 0) throw ParseError("BAD_HEADER", "d must be non-negative");
  if (d > n) throw ParseError("D_EXCEEDS_N", "d = " + std::to_string(d) + " but n = " +
                                                 std::to_string(n));

  Instance inst;
  inst.graph = Digraph(static_cast<int>(n));
  inst.d = static_cast<int>(d);
  inst.s = static_cast<int>(s);
  long long arcs = 0, reqs = 0;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] == "a") {
      if (t.size() != 3) throw ParseError("BAD_LINE", "arc line needs two ids");
      int u = parse_vertex(t[1], static_cast<int>(n));
      int v = parse_vertex(t[2], static_cast<int>(n));
      if (u == v) throw ParseError("SELF_LOOP", "arc (" + t[1] + "," + t[2] + ")");
      inst.graph.add_edge(u, v);  // duplicates merge silently
      ++arcs;
    } else if (t[0] == "r") {
      if (t.size() != 3) throw ParseError("BAD_LINE", "request line needs two ids");
      int u = parse_vertex(t[1], static_cast<int>(n));
      int v = parse_vertex(t[2], static_cast<int>(n));
      inst.requests.push_back({u, v});
      ++reqs;
    } else {
      throw ParseError("BAD_LINE", "unknown line type '" + t[0] + "'");
    }
  }
  if (arcs != m)
    throw ParseError("ARC_COUNT", "header declares " + std::to_string(m) + " arcs, found " +
                                      std::to_string(arcs));
  if (reqs != k)
    throw ParseError("REQUEST_COUNT", "header declares " + std::to_string(k) + " requests, found " +
                                          std::to_string(reqs));
  return inst;
}

std::string write_instance(const Instance& inst) {
  const int n = inst.graph.vertex_count();
  if (inst.graph.universe() != n)
    throw std::invalid_argument("write_instance requires contiguous vertex ids 1..n");
  std::ostringstream out;
  out << "p dedp " << n << ' ' << inst.graph.edge_count() << ' ' << inst.k() << ' ' << inst.d << ' '
      << inst.s << '\n';
  for (const auto& [u, v] : inst.graph.edges()) out << "a " << u << ' ' << v << '\n';
  for (const Request& r : inst.requests) out << "r " << r.source << ' ' << r.target << '\n';
  return out.str();
}

std::optional<Solution> parse_solution(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0][0] != "s" || lines[0].size() != 2)
    throw ParseError("BAD_SOLUTION", "expected 's yes' or 's no' first");
  if (lines[0][1] == "no") {
    if (lines.size() != 1) throw ParseError("BAD_SOLUTION", "trailing lines after 's no'");
    return std::nullopt;
  }
  if (lines[0][1] != "yes") throw ParseError("BAD_SOLUTION", "expected yes or no");

  Solution sol;
  bool saw_x = false;
  int next_q = 1;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] == "x") {
      if (saw_x) throw ParseError("BAD_SOLUTION", "duplicate x line");
      saw_x = true;
      for (size_t j = 1; j < t.size(); ++j)
        sol.viable_set.push_back(static_cast<int>(parse_int(t[j], "viable vertex")));
      if (!std::is_sorted(sol.viable_set.begin(), sol.viable_set.end()))
        throw ParseError("BAD_SOLUTION", "x line must be ascending");
    } else if (t[0] == "q") {
      if (t.size() < 3) throw ParseError("BAD_SOLUTION", "q line needs an index and a path");
      long long idx = parse_int(t[1], "path index");
      if (idx != next_q) throw ParseError("BAD_SOLUTION", "q lines must be 1,2,... in order");
      ++next_q;
      Path p;
      for (size_t j = 2; j < t.size(); ++j)
        p.push_back(static_cast<int>(parse_int(t[j], "path vertex")));
      sol.paths.push_back(std::move(p));
    } else {
      throw ParseError("BAD_SOLUTION", "unknown line type '" + t[0] + "'");
    }
  }
  if (!saw_x) throw ParseError("BAD_SOLUTION", "missing x line");
  return sol;
}

std::string write_solution(const Solution& sol) {
  std::ostringstream out;
  out << "s yes\n";
  out << "x";
  std::vector<VertexId> xs(sol.viable_set);
  std::sort(xs.begin(), xs.end());
  for (VertexId v : xs) out << ' ' << v;
  out << '\n';
  for (size_t i = 0; i < sol.paths.size(); ++i) {
    out << "q " << (i + 1);
    for (VertexId v : sol.paths[i]) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string write_negative_solution() { return "s no\n"; }

Compacted compact(const Instance& inst) {
  std::vector<VertexId> old_ids = inst.graph.vertices();
  std::vector<VertexId> old_of(old_ids.size() + 1, 0);
  std::map<VertexId, VertexId> new_of;
  for (size_t i = 0; i < old_ids.size(); ++i) {
    old_of[i + 1] = old_ids[i];
    new_of[old_ids[i]] = static_cast<int>(i + 1);
  }
  Compacted out;
  out.old_id = std::move(old_of);
  out.instance.graph = Digraph(static_cast<int>(old_ids.size()));
  for (const auto& [u, v] : inst.graph.edges()) out.instance.graph.add_edge(new_of[u], new_of[v]);
  for (const Request& r : inst.requests)
    out.instance.requests.push_back({new_of.at(r.source), new_of.at(r.target)});
  out.instance.d = inst.d;
  out.instance.s = inst.s;
  return out;
}

}  // namespace dedp
