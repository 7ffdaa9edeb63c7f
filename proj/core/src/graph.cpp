#include "irrs/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "irrs/rng.hpp"

namespace irrs {
namespace {

std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

int Graph::min_degree() const {
  int d = n > 0 ? degree(0) : 0;
  for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_regular() const {
  return n == 0 || min_degree() == max_degree();
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (!seen.insert(edge_key(u, v)).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  g.edges = std::move(edges);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    g.adj[u].push_back({v, e});
    g.adj[v].push_back({u, e});
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

namespace {

// Strips trailing '\r' so CRLF input parses like LF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no))
    throw ParseError(ParseError::Kind::header, line_no, "missing header line");
  long long n = 0, m = 0;
  if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
    throw ParseError(ParseError::Kind::header, line_no,
                     "line " + std::to_string(line_no) + ": expected header \"n m\"");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  for (long long e = 0; e < m; ++e) {
    if (!next_content_line(in, line, line_no))
      throw ParseError(ParseError::Kind::wrong_count, line_no,
                       "line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                           " edges, found " + std::to_string(e));
    long long u = 0, v = 0;
    if (!parse_two_ints(line, u, v))
      throw ParseError(ParseError::Kind::malformed, line_no,
                       "line " + std::to_string(line_no) + ": expected \"u v\"");
    if (u == v)
      throw ParseError(ParseError::Kind::self_loop, line_no,
                       "line " + std::to_string(line_no) + ": self-loop at vertex " +
                           std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(ParseError::Kind::out_of_range, line_no,
                       "line " + std::to_string(line_no) + ": endpoint outside [0, " +
                           std::to_string(n) + ")");
    int a = static_cast<int>(std::min(u, v));
    int b = static_cast<int>(std::max(u, v));
    if (!seen.insert(edge_key(a, b)).second)
      throw ParseError(ParseError::Kind::duplicate_edge, line_no,
                       "line " + std::to_string(line_no) + ": duplicate edge " +
                           std::to_string(a) + " " + std::to_string(b));
    edges.push_back({a, b});
  }
  if (next_content_line(in, line, line_no))
    throw ParseError(ParseError::Kind::wrong_count, line_no,
                     "line " + std::to_string(line_no) + ": extra content after " +
                         std::to_string(m) + " edges");
  return make_graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_edge_list(in);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void serialize_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  serialize_edge_list(g, out);
}

Graph generate_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return make_graph(n, std::move(edges));
}

Graph generate_petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) {
    int a = 5 + i, b = 5 + (i + 2) % 5;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return make_graph(10, std::move(edges));
}

Graph generate_circulant(int n, const std::vector<int>& offsets) {
  if (n < 3) throw std::invalid_argument("circulant graph needs n >= 3");
  std::unordered_set<int> used;
  for (int o : offsets) {
    if (o < 1 || o > n / 2)
      throw std::invalid_argument("offset " + std::to_string(o) + " outside [1, " +
                                  std::to_string(n / 2) + "]");
    if (!used.insert(o).second)
      throw std::invalid_argument("duplicate offset " + std::to_string(o));
  }
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;
  for (int o : offsets) {
    for (int i = 0; i < n; ++i) {
      int j = (i + o) % n;
      int a = std::min(i, j), b = std::max(i, j);
      if (seen.insert(edge_key(a, b)).second) edges.push_back({a, b});
    }
  }
  return make_graph(n, std::move(edges));
}

Graph generate_min_degree_random(int n, double p, int delta_min, std::uint64_t seed,
                                 int max_resamples) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  if (delta_min >= n) throw std::invalid_argument("delta_min must be below n");
  Rng rng(seed);
  for (int trial = 0; trial < max_resamples; ++trial) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) {
          edges.push_back({u, v});
          ++deg[u];
          ++deg[v];
        }
    if (*std::min_element(deg.begin(), deg.end()) >= delta_min)
      return make_graph(n, std::move(edges));
  }
  throw std::runtime_error("resample budget exhausted: no sample with min degree >= " +
                           std::to_string(delta_min) + " in " + std::to_string(max_resamples) +
                           " tries");
}

GoodnessReport check_goodness(const Graph& g) {
  GoodnessReport r;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 0) ++r.isolated_vertices;
  for (const auto& [u, v] : g.edges)
    if (g.degree(u) == 1 && g.degree(v) == 1) ++r.isolated_edges;
  r.good = r.isolated_edges == 0 && r.isolated_vertices <= 1;
  return r;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    if (i > 0 && vertices[i - 1] >= v)
      throw std::invalid_argument("vertex list must be sorted and distinct");
    pos[v] = static_cast<int>(i);
  }
  InducedSubgraph s;
  s.vertex_to_parent = vertices;
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (pos[u] >= 0 && pos[v] >= 0) {
      edges.push_back({pos[u], pos[v]});
      s.edge_to_parent.push_back(e);
    }
  }
  s.graph = make_graph(static_cast<int>(vertices.size()), std::move(edges));
  return s;
}

}  // namespace irrs
