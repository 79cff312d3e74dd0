#include "dedp/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "dedp/transform.hpp"

namespace dedp {

namespace {

long long chain_length_fixpoint(int n_base, double alpha) {
  // c = ceil(N - N^alpha) with N = n_base + c + 3; the map is monotone with
  // slope < 1, so iterating from 0 reaches the least fixpoint.
  long long c = 0;
  for (int guard = 0; guard < 100000; ++guard) {
    double big_n = static_cast<double>(n_base + c + 3);
    double t = big_n - std::pow(big_n, alpha);
    if (std::abs(t - std::llround(t)) < 1e-9) t = static_cast<double>(std::llround(t));
    long long next = static_cast<long long>(std::ceil(t));
    if (next < 0) next = 0;
    if (next == c) return c;
    c = next;
  }
  throw std::logic_error("chain length fixpoint failed to converge");
}

}  // namespace

Instance from_ddpc(const DdpcInstance& src, double alpha, int request_index) {
  if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("alpha must lie in (0,1]");
  const int k = static_cast<int>(src.requests.size());
  if (request_index < 1 || request_index > k)
    throw std::invalid_argument("request index out of range");
  if (src.graph.universe() != src.graph.vertex_count())
    throw std::invalid_argument("source graph must use contiguous ids");
  const int s = src.congestion;

  const int n_base = src.graph.vertex_count();
  const long long c = chain_length_fixpoint(n_base, alpha);
  const int total = static_cast<int>(n_base + c + 3);

  Digraph g(total);
  for (const auto& [u, v] : src.graph.edges()) g.add_edge(u, v);
  const int chain_first = n_base + 1;
  const int chain_last = static_cast<int>(n_base + c);
  const int tap_target = static_cast<int>(n_base + c + 1);   // t'_i
  const int extra_source = static_cast<int>(n_base + c + 2); // s_{k+1}
  const int extra_target = static_cast<int>(n_base + c + 3); // t_{k+1}

  const Request picked = src.requests[request_index - 1];
  for (long long j = 0; j + 1 < c; ++j)
    g.add_edge(static_cast<int>(chain_first + j), static_cast<int>(chain_first + j + 1));
  if (c > 0) {
    g.add_edge(picked.target, chain_first);
    g.add_edge(extra_source, chain_first);
    g.add_edge(chain_last, extra_target);
    g.add_edge(chain_last, tap_target);
  } else {
    // degenerate alpha = 1 instance: no congested chain at all
    g.add_edge(picked.target, tap_target);
    g.add_edge(extra_source, extra_target);
  }

  Instance out;
  out.graph = std::move(g);
  for (int i = 0; i < k; ++i) {
    if (i == request_index - 1)
      out.requests.push_back({picked.source, tap_target});
    else
      out.requests.push_back(src.requests[i]);
  }
  for (int j = 0; j < s; ++j) out.requests.push_back({extra_source, extra_target});
  out.d = static_cast<int>(total - c);
  out.s = s;
  return out;
}

Instance from_independent_set(const UndirectedGraph& g, int d, int s) {
  if (s < 1) throw std::invalid_argument("construction needs s >= 1");
  if (g.n < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  for (const auto& [u, v] : g.edges)
    if (u < 1 || v > g.n || u >= v) throw std::invalid_argument("malformed undirected edge");

  const int root = g.n + 1;
  const int m = static_cast<int>(g.edges.size());
  Digraph dg(g.n + 1 + m);
  for (int v = 1; v <= g.n; ++v) dg.add_edge(root, v);
  int edge_id = root;
  for (const auto& [u, v] : g.edges) {
    ++edge_id;
    dg.add_edge(u, edge_id);
    dg.add_edge(v, edge_id);
  }

  Instance out;
  out.graph = std::move(dg);
  for (int v = 1; v <= g.n; ++v)
    for (int j = 0; j < s; ++j) out.requests.push_back({root, v});
  edge_id = root;
  for ([[maybe_unused]] const auto& e : g.edges) out.requests.push_back({root, ++edge_id});
  // Every edge vertex lies on exactly its own path and the root on all of
  // them, so those m vertices are always viable and the root never is; the
  // d independent vertices live in V(G). Shift d accordingly so positivity
  // transports exactly.
  out.d = d + m;
  out.s = s;
  return out;
}

Instance amplify(const Instance& inst, int s_target) {
  if (inst.s != 0) throw std::invalid_argument("amplification starts from s = 0");
  if (s_target < 1) throw std::invalid_argument("target congestion must be positive");
  const long long copies =
      static_cast<long long>(inst.k()) * inst.d * s_target + 1;
  Instance out;
  out.graph = inst.graph;
  for (const Request& r : inst.requests)
    for (long long j = 0; j < copies; ++j) out.requests.push_back(r);
  out.d = inst.d;
  out.s = s_target;
  return out;
}

Instance random_instance(int n, int m, int k, int d, int s, std::uint64_t seed,
                         RandomFlags flags) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (k < 0 || s < 0) throw std::invalid_argument("negative parameter");
  if (d < 0 || d > n) throw std::invalid_argument("d must lie in [0, n]");
  const long long max_m =
      flags.acyclic ? static_cast<long long>(n) * (n - 1) / 2 : static_cast<long long>(n) * (n - 1);
  if (m < 0 || m > max_m) throw std::invalid_argument("edge count out of range");

  std::mt19937_64 rng(seed);

  std::vector<int> position(n + 1);
  for (int v = 1; v <= n; ++v) position[v] = v;
  if (flags.acyclic) std::shuffle(position.begin() + 1, position.end(), rng);

  std::vector<std::pair<int, int>> candidates;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (flags.acyclic && position[u] >= position[v]) continue;
      candidates.emplace_back(u, v);
    }
  std::shuffle(candidates.begin(), candidates.end(), rng);

  Digraph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(candidates[i].first, candidates[i].second);

  RequestSet requests;
  if (flags.ensure_connected && !flags.ensure_clean) {
    std::vector<std::pair<int, int>> connected;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (reachable(g, u, v)) connected.emplace_back(u, v);
    std::uniform_int_distribution<size_t> pick(0, connected.size() - 1);
    for (int i = 0; i < k; ++i) {
      auto [u, v] = connected[pick(rng)];
      requests.push_back({u, v});
    }
  } else {
    std::uniform_int_distribution<int> pick(1, n);
    for (int i = 0; i < k; ++i) {
      int u = pick(rng), v = pick(rng);
      if (flags.acyclic && position[u] > position[v]) std::swap(u, v);
      requests.push_back({u, v});
    }
  }

  if (flags.ensure_clean) {
    const int relays = s == 0 ? 2 : 1;  // s = 0 needs two disjoint detours
    for (const Request& r : requests) {
      if (r.source == r.target) continue;
      for (int j = 0; j < relays; ++j) {
        VertexId relay = g.add_vertex();
        g.add_edge(r.source, relay);
        g.add_edge(relay, r.target);
      }
    }
    if (!blocking_vertices(g, requests, s).empty())
      throw std::logic_error("relay augmentation left a blocking vertex");
  }

  return Instance{std::move(g), std::move(requests), d, s};
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
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

long long to_int(const std::string& tok, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("BAD_NUMBER", what + ": '" + tok + "'");
  }
}

}  // namespace

DdpcInstance parse_ddpc(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("MISSING_HEADER", "empty file");
  const auto& h = lines[0];
  if (h.size() != 6 || h[0] != "p" || h[1] != "ddpc")
    throw ParseError("BAD_HEADER", "expected 'p ddpc <n> <m> <k> <s>'");
  long long n = to_int(h[2], "n"), m = to_int(h[3], "m"), k = to_int(h[4], "k"),
            s = to_int(h[5], "s");
  if (n < 0 || m < 0 || k < 0) throw ParseError("BAD_HEADER", "negative size field");
  if (s < 1) throw ParseError("BAD_HEADER", "congestion must be at least 1");

  DdpcInstance inst;
  inst.graph = Digraph(static_cast<int>(n));
  inst.congestion = static_cast<int>(s);
  long long arcs = 0, reqs = 0;
  auto vertex = [&](const std::string& tok) {
    long long v = to_int(tok, "vertex id");
    if (v < 1 || v > n) throw ParseError("VERTEX_RANGE", "vertex id " + tok);
    return static_cast<int>(v);
  };
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] == "a" && t.size() == 3) {
      int u = vertex(t[1]), v = vertex(t[2]);
      if (u == v) throw ParseError("SELF_LOOP", "arc (" + t[1] + "," + t[2] + ")");
      inst.graph.add_edge(u, v);
      ++arcs;
    } else if (t[0] == "r" && t.size() == 3) {
      inst.requests.push_back({vertex(t[1]), vertex(t[2])});
      ++reqs;
    } else {
      throw ParseError("BAD_LINE", "unknown line '" + t[0] + "'");
    }
  }
  if (arcs != m) throw ParseError("ARC_COUNT", "arc count mismatch");
  if (reqs != k) throw ParseError("REQUEST_COUNT", "request count mismatch");
  return inst;
}

std::string write_ddpc(const DdpcInstance& inst) {
  std::ostringstream out;
  out << "p ddpc " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' '
      << inst.requests.size() << ' ' << inst.congestion << '\n';
  for (const auto& [u, v] : inst.graph.edges()) out << "a " << u << ' ' << v << '\n';
  for (const Request& r : inst.requests) out << "r " << r.source << ' ' << r.target << '\n';
  return out.str();
}

UndirectedGraph parse_undirected(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("MISSING_HEADER", "empty file");
  const auto& h = lines[0];
  if (h.size() != 4 || h[0] != "p" || h[1] != "ug")
    throw ParseError("BAD_HEADER", "expected 'p ug <n> <m>'");
  long long n = to_int(h[2], "n"), m = to_int(h[3], "m");
  if (n < 0 || m < 0) throw ParseError("BAD_HEADER", "negative size field");

  UndirectedGraph g;
  g.n = static_cast<int>(n);
  long long count = 0;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& t = lines[li];
    if (t[0] != "e" || t.size() != 3) throw ParseError("BAD_LINE", "expected 'e <u> <v>'");
    long long u = to_int(t[1], "vertex"), v = to_int(t[2], "vertex");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("VERTEX_RANGE", "edge endpoint");
    if (u == v) throw ParseError("SELF_LOOP", "edge (" + t[1] + "," + t[2] + ")");
    g.edges.insert({static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))});
    ++count;
  }
  if (count != m) throw ParseError("EDGE_COUNT", "edge count mismatch");
  return g;
}

std::string write_undirected(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "p ug " << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace dedp
