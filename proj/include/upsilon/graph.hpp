#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "upsilon/matrix.hpp"

namespace upsilon {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure with the byte offset (and line/column) of the offending token.
struct ParseError : GraphError {
  ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
      : GraphError(what), offset(offset), line(line), column(column) {}
  std::size_t offset, line, column;
};

struct Edge {
  std::string id;
  std::size_t tail;
  std::size_t head;
  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Subsets of edges are bitmasks over edge indices; graphs handled by the
// complex builders have at most 64 edges.
using EdgeMask = std::uint64_t;
constexpr std::size_t kMaxEdges = 64;

inline EdgeMask bit(std::size_t e) { return EdgeMask{1} << e; }
inline int popcount(EdgeMask m) { return __builtin_popcountll(m); }

enum class EdgeKind { loop, bridge, ordinary };
const char* to_string(EdgeKind k);

class Multigraph {
 public:
  Multigraph() = default;
  // Validates unique ids and existing endpoints. Each edge is {id, tail, head}.
  Multigraph(std::vector<std::string> vertices, const std::vector<std::array<std::string, 3>>& edges);
  static Multigraph from_indices(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  EdgeMask all_edges() const;

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  // Throws GraphError naming the id if absent.
  std::size_t edge_index(std::string_view id) const;

  std::size_t components(EdgeMask alive) const;
  std::size_t components() const { return components(all_edges()); }
  bool is_connected(EdgeMask alive) const { return components(alive) == 1; }
  bool is_connected() const { return is_connected(all_edges()); }
  // b1 = |E| - |V| + #components of the subgraph (V, alive).
  std::size_t first_betti(EdgeMask alive) const;
  std::size_t first_betti() const { return first_betti(all_edges()); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void validate() const;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

Multigraph parse_graph(std::string_view text);
std::string to_json_text(const Multigraph& g);

IntMatrix boundary_matrix(const Multigraph& g);

// Element of C1(G, Z) with zero boundary; one coefficient per edge.
struct Cycle {
  std::vector<std::int64_t> coefficients;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Spanning forest chosen greedily over the edges of `alive` in input order.
EdgeMask greedy_spanning_tree(const Multigraph& g, EdgeMask alive);
// Fundamental cycles of the non-tree edges of (V, alive), ordered by defining edge.
std::vector<Cycle> cycle_basis(const Multigraph& g, EdgeMask alive);
std::vector<Cycle> cycle_basis(const Multigraph& g);
std::int64_t pairing(const Multigraph& g, const Cycle& c, std::string_view edge_id);
bool has_zero_boundary(const Multigraph& g, const Cycle& c);

// Cochain class in Z^E / im d*. Equality compares classes, not representatives.
class CocycleClass {
 public:
  CocycleClass(const Multigraph& g, std::vector<Integer> representative);
  static CocycleClass of_edge(const Multigraph& g, std::string_view edge_id);
  const std::vector<Integer>& representative() const { return rep_; }
  // Canonical representative modulo coboundaries.
  const std::vector<Integer>& normal_form() const { return normal_; }
  // Pairing with a cycle, well defined on classes.
  Integer evaluate(const Cycle& c) const;
  friend bool operator==(const CocycleClass& a, const CocycleClass& b) { return a.normal_ == b.normal_; }

 private:
  std::vector<Integer> rep_;
  std::vector<Integer> normal_;
};

EdgeKind edge_kind(const Multigraph& g, std::size_t e, EdgeMask alive);
EdgeKind edge_kind(const Multigraph& g, std::string_view edge_id);
bool is_bridge(const Multigraph& g, std::size_t e, EdgeMask alive);

Multigraph delete_edge(const Multigraph& g, std::string_view edge_id);
Multigraph delete_edges(const Multigraph& g, EdgeMask removed);
// Merges head into tail (the lower index survives); other edges keep their ids and order.
Multigraph contract_edge(const Multigraph& g, std::string_view edge_id);
Multigraph flip_orientation(const Multigraph& g, const std::vector<std::string>& edge_ids);

struct SpanningSubgraph {
  EdgeMask edges;
  std::size_t b1;
};
// Calls f once for every edge subset S with (V, S) connected.
void for_each_spanning_connected_subgraph(const Multigraph& g,
                                          const std::function<void(const SpanningSubgraph&)>& f);
std::vector<SpanningSubgraph> spanning_connected_subgraphs(const Multigraph& g);

// Matrix-Tree theorem: any cofactor of the Laplacian (loops ignored).
Integer spanning_tree_count(const Multigraph& g);

// Throws GraphError if g is disconnected; `what` names the operation.
void require_connected(const Multigraph& g, const char* what);

// Connected graph with n vertices and m edges: a random spanning tree plus
// random extra edges (loops and parallels allowed), random orientations.
Multigraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

// Renames vertices/edges and permutes their order.
// vertex_perm[i] is the new position of vertex i (same for edges).
Multigraph relabel(const Multigraph& g, const std::vector<std::size_t>& vertex_perm,
                   const std::vector<std::size_t>& edge_perm, const std::string& prefix = "");

// Isomorphism-invariant key of the underlying undirected multigraph, or nullopt
// if the search would exceed `budget` labelings.
std::optional<std::string> canonical_key(const Multigraph& g, std::size_t budget = 200000);

}  // namespace upsilon
