#include "upsilon/monodromy.hpp"

namespace upsilon {

NilpotentOperator log_monodromy(const Multigraph& g, std::string_view edge_id) {
  const std::size_t e = g.edge_index(edge_id);
  const HHSpace h = hh_space(g);
  const unsigned b = h.b1();
  // Row: evaluation of the cycle block on e. Column: the class [e] in HH coordinates.
  IntMatrix row(1, 2 * b), col(2 * b, 1);
  for (unsigned i = 0; i < b; ++i) row(0, i) = h.pairing(i, e);
  std::vector<Integer> delta(g.num_edges());
  delta[e] = 1;
  auto coords = h.cochain_coordinates(delta);
  for (unsigned j = 0; j < b; ++j) col(b + j, 0) = coords[j];
  NilpotentOperator n{std::string(edge_id), col * row, 0};
  n.rank = rank(n.matrix);
  return n;
}

bool MonodromyReport::ok() const {
  if (!products_zero || !bridge_iff_zero) return false;
  for (const auto& e : edges)
    if (!e.square_zero || !e.matches_d_prime) return false;
  return true;
}

MonodromyReport verify_relations(const Multigraph& g) {
  require_connected(g, "verify_relations");
  MonodromyReport rep;
  std::vector<NilpotentOperator> ops;
  const HHSpace h = hh_space(g);
  for (const auto& ed : g.edges()) {
    ops.push_back(log_monodromy(g, ed.id));
    const auto& n = ops.back();
    const EdgeKind kind = edge_kind(g, ed.id);
    rep.edges.push_back({ed.id, kind, n.rank, (n.matrix * n.matrix).is_zero(),
                         n.matrix == d_prime(h, g.edge_index(ed.id))});
    const bool zero = n.matrix.is_zero();
    if ((kind == EdgeKind::bridge) != zero || (!zero && n.rank != 1)) rep.bridge_iff_zero = false;
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = 0; j < ops.size(); ++j)
      if (!(ops[i].matrix * ops[j].matrix).is_zero()) rep.products_zero = false;
  return rep;
}

}  // namespace upsilon
