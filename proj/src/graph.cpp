#include "upsilon/graph.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "upsilon/linalg.hpp"

namespace upsilon {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::loop: return "loop";
    case EdgeKind::bridge: return "bridge";
    case EdgeKind::ordinary: return "ordinary";
  }
  return "?";
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertices, const std::vector<std::array<std::string, 3>>& edges)
    : vertices_(std::move(vertices)) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (!index.emplace(vertices_[v], v).second) throw GraphError("duplicate vertex id \"" + vertices_[v] + "\"");
  for (const auto& [id, t, h] : edges) {
    auto ti = index.find(t), hi = index.find(h);
    if (ti == index.end()) throw GraphError("edge \"" + id + "\" names unknown vertex \"" + t + "\"");
    if (hi == index.end()) throw GraphError("edge \"" + id + "\" names unknown vertex \"" + h + "\"");
    edges_.push_back({id, ti->second, hi->second});
  }
  validate();
}

Multigraph Multigraph::from_indices(std::vector<std::string> vertices, std::vector<Edge> edges) {
  Multigraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.validate();
  return g;
}

void Multigraph::validate() const {
  std::unordered_set<std::string_view> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw GraphError("duplicate vertex id \"" + v + "\"");
  seen.clear();
  for (const auto& e : edges_) {
    if (!seen.insert(e.id).second) throw GraphError("duplicate edge id \"" + e.id + "\"");
    if (e.tail >= vertices_.size() || e.head >= vertices_.size())
      throw GraphError("edge \"" + e.id + "\" has an endpoint outside the vertex list");
  }
}

EdgeMask Multigraph::all_edges() const {
  if (edges_.size() > kMaxEdges) throw GraphError("graphs with more than 64 edges are not supported");
  return edges_.size() == kMaxEdges ? ~EdgeMask{0} : bit(edges_.size()) - 1;
}

std::optional<std::size_t> Multigraph::find_vertex(std::string_view id) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v] == id) return v;
  return std::nullopt;
}

std::optional<std::size_t> Multigraph::find_edge(std::string_view id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].id == id) return e;
  return std::nullopt;
}

std::size_t Multigraph::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw GraphError("unknown edge id \"" + std::string(id) + "\"");
  return *e;
}

std::size_t Multigraph::components(EdgeMask alive) const {
  UnionFind uf(vertices_.size());
  std::size_t comps = vertices_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if ((alive & bit(e)) && uf.unite(edges_[e].tail, edges_[e].head)) --comps;
  return comps;
}

std::size_t Multigraph::first_betti(EdgeMask alive) const {
  return static_cast<std::size_t>(popcount(alive & all_edges())) + components(alive) - vertices_.size();
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  auto [line, col] = line_column(text, offset);
  throw ParseError(what + " at line " + std::to_string(line) + ", column " + std::to_string(col), offset, line, col);
}

// Byte offsets of all string literals of a syntactically valid document.
std::vector<std::size_t> string_offsets(std::string_view text) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '"') continue;
    out.push_back(i);
    for (++i; i < text.size() && text[i] != '"'; ++i)
      if (text[i] == '\\') ++i;
  }
  return out;
}

using ojson = nlohmann::ordered_json;

// Visits strings (keys and values) in document order.
void count_strings(const ojson& j, std::size_t& n) {
  if (j.is_string()) {
    ++n;
  } else if (j.is_array()) {
    for (const auto& x : j) count_strings(x, n);
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      ++n;
      count_strings(it.value(), n);
    }
  }
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
    fail_at(text, pos, "malformed JSON: " + std::string(e.what()));
  }
  const auto offsets = string_offsets(text);
  std::size_t total = 0;
  count_strings(doc, total);
  if (total != offsets.size()) fail_at(text, 0, "duplicate object key");

  if (!doc.is_object()) fail_at(text, 0, "graph document must be a JSON object");
  // Token cursor: index of the next string literal in document order.
  std::size_t cursor = 0;
  auto here = [&](std::size_t token) { return token < offsets.size() ? offsets[token] : text.size(); };

  std::vector<std::string> vertices;
  std::vector<std::size_t> vertex_tokens;
  std::vector<std::array<std::string, 3>> edges;
  std::vector<std::array<std::size_t, 3>> edge_tokens;
  bool have_vertices = false, have_edges = false;

  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::size_t key_token = cursor++;
    const std::string& key = it.key();
    const ojson& val = it.value();
    if (key == "vertices") {
      have_vertices = true;
      if (!val.is_array()) fail_at(text, here(key_token), "\"vertices\" must be an array of strings");
      for (const auto& v : val) {
        if (!v.is_string()) fail_at(text, here(key_token), "\"vertices\" must contain only strings");
        vertex_tokens.push_back(cursor++);
        vertices.push_back(v.get<std::string>());
      }
    } else if (key == "edges") {
      have_edges = true;
      if (!val.is_array()) fail_at(text, here(key_token), "\"edges\" must be an array");
      for (const auto& e : val) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
          fail_at(text, here(cursor), "each edge must be [edge-id, tail-id, head-id] (edge " +
                                          std::to_string(edges.size()) + ")");
        edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
        edge_tokens.push_back({cursor, cursor + 1, cursor + 2});
        cursor += 3;
      }
    } else {
      fail_at(text, here(key_token), "unexpected key \"" + key + "\"");
    }
  }
  if (!have_vertices) fail_at(text, 0, "missing \"vertices\"");
  if (!have_edges) fail_at(text, 0, "missing \"edges\"");

  std::unordered_map<std::string, std::size_t> vindex;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!vindex.emplace(vertices[v], v).second)
      fail_at(text, here(vertex_tokens[v]), "duplicate vertex id \"" + vertices[v] + "\"");
  std::unordered_set<std::string> eids;
  std::vector<Edge> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [id, t, h] = edges[e];
    if (!eids.insert(id).second) fail_at(text, here(edge_tokens[e][0]), "duplicate edge id \"" + id + "\"");
    auto ti = vindex.find(t);
    if (ti == vindex.end())
      fail_at(text, here(edge_tokens[e][1]), "edge \"" + id + "\" names unknown vertex \"" + t + "\"");
    auto hi = vindex.find(h);
    if (hi == vindex.end())
      fail_at(text, here(edge_tokens[e][2]), "edge \"" + id + "\" names unknown vertex \"" + h + "\"");
    out.push_back({id, ti->second, hi->second});
  }
  if (out.size() > kMaxEdges) fail_at(text, 0, "graphs with more than 64 edges are not supported");
  return Multigraph::from_indices(std::move(vertices), std::move(out));
}

std::string to_json_text(const Multigraph& g) {
  ojson doc;
  doc["vertices"] = g.vertices();
  ojson edges = ojson::array();
  for (const auto& e : g.edges()) edges.push_back({e.id, g.vertex(e.tail), g.vertex(e.head)});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

IntMatrix boundary_matrix(const Multigraph& g) {
  IntMatrix m(g.num_vertices(), g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    m(ed.head, e) = 1;
    m(ed.tail, e) = -1;
  }
  return m;
}

void require_connected(const Multigraph& g, const char* what) {
  if (g.num_vertices() == 0 || !g.is_connected())
    throw GraphError(std::string(what) + ": graph is not connected");
}

EdgeMask greedy_spanning_tree(const Multigraph& g, EdgeMask alive) {
  UnionFind uf(g.num_vertices());
  EdgeMask tree = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if ((alive & bit(e)) && uf.unite(g.edge(e).tail, g.edge(e).head)) tree |= bit(e);
  return tree;
}

std::vector<Cycle> cycle_basis(const Multigraph& g, EdgeMask alive) {
  const EdgeMask tree = greedy_spanning_tree(g, alive);
  const std::size_t n = g.num_vertices();
  // Tree adjacency: (neighbor, edge, +1 if traversed tail->head).
  std::vector<std::vector<std::array<std::int64_t, 3>>> adj(n);
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (tree & bit(e)) {
      const Edge& ed = g.edge(e);
      adj[ed.tail].push_back({static_cast<std::int64_t>(ed.head), static_cast<std::int64_t>(e), 1});
      adj[ed.head].push_back({static_cast<std::int64_t>(ed.tail), static_cast<std::int64_t>(e), -1});
    }
  std::vector<Cycle> basis;
  for (std::size_t f = 0; f < g.num_edges(); ++f) {
    if (!(alive & bit(f)) || (tree & bit(f))) continue;
    Cycle c{std::vector<std::int64_t>(g.num_edges(), 0)};
    c.coefficients[f] = 1;
    const std::size_t from = g.edge(f).head, to = g.edge(f).tail;
    // Tree path from head(f) back to tail(f).
    std::vector<std::array<std::int64_t, 3>> via(n, {-1, -1, 0});
    std::vector<std::size_t> stack{from};
    std::vector<char> seen(n, 0);
    seen[from] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& [w, e, s] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          via[w] = {static_cast<std::int64_t>(v), e, s};
          stack.push_back(w);
        }
    }
    for (std::size_t v = to; v != from; v = static_cast<std::size_t>(via[v][0])) c.coefficients[via[v][1]] += via[v][2];
    basis.push_back(std::move(c));
  }
  return basis;
}

std::vector<Cycle> cycle_basis(const Multigraph& g) {
  require_connected(g, "cycle_basis");
  return cycle_basis(g, g.all_edges());
}

std::int64_t pairing(const Multigraph& g, const Cycle& c, std::string_view edge_id) {
  return c.coefficients.at(g.edge_index(edge_id));
}

bool has_zero_boundary(const Multigraph& g, const Cycle& c) {
  std::vector<std::int64_t> b(g.num_vertices(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    b[g.edge(e).head] += c.coefficients[e];
    b[g.edge(e).tail] -= c.coefficients[e];
  }
  return std::all_of(b.begin(), b.end(), [](std::int64_t x) { return x == 0; });
}

namespace {

IntegerLattice coboundary_lattice(const Multigraph& g) {
  IntMatrix b = boundary_matrix(g);
  std::vector<std::vector<Integer>> gens;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<Integer> row(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) row[e] = b(v, e);
    gens.push_back(std::move(row));
  }
  return IntegerLattice(g.num_edges(), gens);
}

}  // namespace

CocycleClass::CocycleClass(const Multigraph& g, std::vector<Integer> representative)
    : rep_(std::move(representative)) {
  if (rep_.size() != g.num_edges()) throw DimensionMismatch("cochain has the wrong length");
  normal_ = coboundary_lattice(g).reduce(rep_);
}

CocycleClass CocycleClass::of_edge(const Multigraph& g, std::string_view edge_id) {
  std::vector<Integer> r(g.num_edges());
  r[g.edge_index(edge_id)] = 1;
  return CocycleClass(g, std::move(r));
}

Integer CocycleClass::evaluate(const Cycle& c) const {
  Integer s = 0;
  for (std::size_t e = 0; e < rep_.size(); ++e) s += rep_[e] * c.coefficients.at(e);
  return s;
}

bool is_bridge(const Multigraph& g, std::size_t e, EdgeMask alive) {
  if (g.edge(e).is_loop()) return false;
  return g.components(alive & ~bit(e)) > g.components(alive);
}

EdgeKind edge_kind(const Multigraph& g, std::size_t e, EdgeMask alive) {
  if (g.edge(e).is_loop()) return EdgeKind::loop;
  return is_bridge(g, e, alive) ? EdgeKind::bridge : EdgeKind::ordinary;
}

EdgeKind edge_kind(const Multigraph& g, std::string_view edge_id) {
  return edge_kind(g, g.edge_index(edge_id), g.all_edges());
}

Multigraph delete_edges(const Multigraph& g, EdgeMask removed) {
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!(removed & bit(e))) kept.push_back(g.edge(e));
  return Multigraph::from_indices(g.vertices(), std::move(kept));
}

Multigraph delete_edge(const Multigraph& g, std::string_view edge_id) {
  return delete_edges(g, bit(g.edge_index(edge_id)));
}

Multigraph contract_edge(const Multigraph& g, std::string_view edge_id) {
  const std::size_t c = g.edge_index(edge_id);
  const Edge& ce = g.edge(c);
  if (ce.is_loop()) throw GraphError("cannot contract loop \"" + ce.id + "\"");
  const std::size_t keep = std::min(ce.tail, ce.head), gone = std::max(ce.tail, ce.head);
  auto remap = [&](std::size_t v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (v != gone) vertices.push_back(g.vertex(v));
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (e != c) edges.push_back({g.edge(e).id, remap(g.edge(e).tail), remap(g.edge(e).head)});
  return Multigraph::from_indices(std::move(vertices), std::move(edges));
}

Multigraph flip_orientation(const Multigraph& g, const std::vector<std::string>& edge_ids) {
  std::vector<Edge> edges = g.edges();
  for (const auto& id : edge_ids) {
    Edge& e = edges[g.edge_index(id)];
    std::swap(e.tail, e.head);
  }
  return Multigraph::from_indices(g.vertices(), std::move(edges));
}

void for_each_spanning_connected_subgraph(const Multigraph& g,
                                          const std::function<void(const SpanningSubgraph&)>& f) {
  require_connected(g, "spanning_connected_subgraphs");
  if (g.num_edges() > 40) throw GraphError("spanning subgraph enumeration limited to 40 edges");
  const EdgeMask all = g.all_edges();
  // Walk subsets downward from the full set; a subset is visited only if connected.
  for (EdgeMask s = all;; s = (s - 1) & all) {
    if (g.is_connected(s)) f({s, g.first_betti(s)});
    if (s == 0) break;
  }
}

std::vector<SpanningSubgraph> spanning_connected_subgraphs(const Multigraph& g) {
  std::vector<SpanningSubgraph> out;
  for_each_spanning_connected_subgraph(g, [&](const SpanningSubgraph& s) { out.push_back(s); });
  return out;
}

Integer spanning_tree_count(const Multigraph& g) {
  require_connected(g, "spanning_tree_count");
  const std::size_t n = g.num_vertices();
  if (n == 1) return 1;
  IntMatrix L(n - 1, n - 1);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    for (auto [a, b] : {std::pair{e.tail, e.head}, std::pair{e.head, e.tail}}) {
      if (a == n - 1) continue;
      L(a, a) += 1;
      if (b != n - 1) L(a, b) -= 1;
    }
  }
  return determinant(L);
}

namespace {

// Uniform draw in [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

Multigraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw GraphError("random_graph: need at least one vertex");
  if (m + 1 < n) throw GraphError("random_graph: a connected graph on n vertices needs at least n-1 edges");
  if (m > kMaxEdges) throw GraphError("random_graph: at most 64 edges");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t v = 1; v < n; ++v) ends.emplace_back(draw(rng, v), v);
  while (ends.size() < m) ends.emplace_back(draw(rng, n), draw(rng, n));
  for (std::size_t i = ends.size(); i > 1; --i) std::swap(ends[i - 1], ends[draw(rng, i)]);
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    auto [a, b] = ends[i];
    if (draw(rng, 2)) std::swap(a, b);
    edges.push_back({"e" + std::to_string(i + 1), a, b});
  }
  return Multigraph::from_indices(std::move(vertices), std::move(edges));
}

Multigraph relabel(const Multigraph& g, const std::vector<std::size_t>& vertex_perm,
                   const std::vector<std::size_t>& edge_perm, const std::string& prefix) {
  if (vertex_perm.size() != g.num_vertices() || edge_perm.size() != g.num_edges())
    throw GraphError("relabel: permutation sizes do not match the graph");
  std::vector<std::string> vertices(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) vertices.at(vertex_perm[v]) = prefix + g.vertex(v);
  std::vector<Edge> edges(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    edges.at(edge_perm[e]) = {prefix + ed.id, vertex_perm[ed.tail], vertex_perm[ed.head]};
  }
  return Multigraph::from_indices(std::move(vertices), std::move(edges));
}

}  // namespace upsilon
