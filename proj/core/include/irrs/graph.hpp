#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irrs {

// Simple undirected graph. Vertices are 0..n-1; edges keep a stable index
// (their position in `edges`) that weightings refer to.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;                 // normalized u < v
  std::vector<std::vector<std::pair<int, int>>> adj;      // v -> sorted (neighbor, edge index)

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int min_degree() const;
  int max_degree() const;
  bool is_regular() const;
};

// Builds adjacency and validates. Throws std::invalid_argument on self-loops,
// duplicate edges, or endpoints outside [0, n).
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct ParseError : std::runtime_error {
  enum class Kind { header, self_loop, duplicate_edge, out_of_range, wrong_count, malformed };
  Kind kind;
  int line;
  ParseError(Kind k, int line_no, const std::string& what)
      : std::runtime_error(what), kind(k), line(line_no) {}
};

// Edge-list format: optional '#' comment lines and blank lines anywhere,
// a "n m" header, then m "u v" lines. LF and CRLF both accepted.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

void serialize_edge_list(const Graph& g, std::ostream& out);
void serialize_edge_list_file(const Graph& g, const std::string& path);

Graph generate_complete(int n);
Graph generate_petersen();
// offsets must be distinct values in [1, n/2]; edge set {i, i+o mod n}.
Graph generate_circulant(int n, const std::vector<int>& offsets);
// G(n, p) resampled until min degree >= delta_min; throws std::runtime_error
// once the resample budget is exhausted.
Graph generate_min_degree_random(int n, double p, int delta_min, std::uint64_t seed,
                                 int max_resamples = 256);

struct GoodnessReport {
  bool good = false;
  int isolated_vertices = 0;  // degree-0 vertices
  int isolated_edges = 0;     // components that are a single edge
};

// A graph admits a finite irregularity strength iff it has no component that
// is a single edge and at most one isolated vertex.
GoodnessReport check_goodness(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_to_parent;  // subgraph id -> parent id
  std::vector<int> edge_to_parent;    // subgraph edge index -> parent edge index
};

// vertices must be sorted, distinct, and within range.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace irrs
